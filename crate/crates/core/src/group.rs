//! Fully enumerated finite permutation groups and their subgroups.
//!
//! Group elements are addressed by their index in the sorted element list.
//! Because the list is sorted lexicographically on image tables, index 0 is
//! always the identity and every derived object (coset representatives,
//! class representatives, vertex labels) is reproducible across runs.

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Default upper bound on the number of elements of an enumerated group.
pub const DEFAULT_BOUND: usize = 10_000;

/// Groups up to this order carry a full Cayley table.
const TABLE_LIMIT: usize = 1024;

/// A finite permutation group with every element enumerated.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    inner: Arc<GroupData>,
}

#[derive(Debug)]
struct GroupData {
    degree: usize,
    generators: Vec<usize>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    inverses: Vec<usize>,
    table: Option<Vec<u32>>,
}

/// The identity always sits at index 0.
pub const IDENTITY: usize = 0;

impl FiniteGroup {
    /// Closes `gens` under composition.
    ///
    /// Fails with [`Error::ClosureExceedsBound`] as soon as more than `bound`
    /// elements have been found.
    pub fn generate(gens: &[Permutation], bound: usize) -> Result<FiniteGroup> {
        let degree = gens
            .first()
            .map(Permutation::degree)
            .ok_or_else(|| Error::Parse("a group needs at least one generator".into()))?;
        if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                left: degree,
                right: g.degree(),
            });
        }
        let id = Permutation::identity(degree);
        let mut seen: HashMap<Permutation, ()> = HashMap::new();
        seen.insert(id.clone(), ());
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = &x * g;
                if !seen.contains_key(&y) {
                    if seen.len() >= bound {
                        return Err(Error::ClosureExceedsBound { bound });
                    }
                    seen.insert(y.clone(), ());
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Permutation> = seen.into_keys().collect();
        elements.sort();
        Ok(FiniteGroup::from_sorted(degree, gens, elements))
    }

    fn from_sorted(degree: usize, gens: &[Permutation], elements: Vec<Permutation>) -> FiniteGroup {
        let index: HashMap<Permutation, usize> =
            elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let inverses = elements.iter().map(|p| index[&p.inverse()]).collect();
        let generators = gens.iter().map(|g| index[g]).collect();
        let n = elements.len();
        let table = (n <= TABLE_LIMIT).then(|| {
            let mut t = Vec::with_capacity(n * n);
            for a in &elements {
                for b in &elements {
                    t.push(index[&(a * b)] as u32);
                }
            }
            t
        });
        FiniteGroup {
            inner: Arc::new(GroupData {
                degree,
                generators,
                elements,
                index,
                inverses,
                table,
            }),
        }
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    pub fn order(&self) -> usize {
        self.inner.elements.len()
    }

    /// Generator indices, in the order they were supplied.
    pub fn generators(&self) -> &[usize] {
        &self.inner.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.inner.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.inner.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.inner.index.get(p).copied()
    }

    /// Like [`index_of`](Self::index_of) but reports non-membership as an error.
    pub fn locate(&self, p: &Permutation) -> Result<usize> {
        if p.degree() != self.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: p.degree(),
            });
        }
        self.index_of(p).ok_or_else(|| Error::NotInGroup(p.to_string()))
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.inner.table {
            Some(t) => t[a * self.order() + b] as usize,
            None => self.inner.index[&(&self.inner.elements[a] * &self.inner.elements[b])],
        }
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inner.inverses[a]
    }

    /// `g⁻¹ x g`.
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn pow(&self, x: usize, e: usize) -> usize {
        (0..e).fold(IDENTITY, |acc, _| self.mul(acc, x))
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != IDENTITY {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    /// Two handles denote the same group when their element sets agree.
    pub fn same_as(&self, other: &FiniteGroup) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.degree() == other.degree() && self.elements() == other.elements())
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_members(self, vec![true; self.order()])
    }

    pub fn trivial(&self) -> Subgroup {
        self.subgroup_generated(&[])
    }

    /// Closure of the given element indices inside this group.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Subgroup {
        let mut members = vec![false; self.order()];
        members[IDENTITY] = true;
        let mut queue = VecDeque::from([IDENTITY]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !members[y] {
                    members[y] = true;
                    queue.push_back(y);
                }
            }
        }
        Subgroup::from_members(self, members)
    }

    /// Closure of an existing subgroup together with extra elements.
    pub fn join(&self, base: &Subgroup, extra: &[usize]) -> Subgroup {
        let mut gens: Vec<usize> = base.elements().to_vec();
        gens.extend_from_slice(extra);
        self.subgroup_generated(&gens)
    }

    /// Subgroup generated by permutations given in cycle notation.
    pub fn subgroup_from_perms(&self, gens: &[Permutation]) -> Result<Subgroup> {
        let idx = gens.iter().map(|g| self.locate(g)).collect::<Result<Vec<_>>>()?;
        Ok(self.subgroup_generated(&idx))
    }

    /// Does `⟨a, b⟩` equal the whole group?
    pub fn generated_by(&self, gens: &[usize]) -> bool {
        self.subgroup_generated(gens).order() == self.order()
    }

    /// Conjugate subgroup `g⁻¹ U g`.
    pub fn conjugate_subgroup(&self, u: &Subgroup, g: usize) -> Result<Subgroup> {
        self.check(u)?;
        if g >= self.order() {
            return Err(Error::NotInGroup(format!("element #{g}")));
        }
        let mut members = vec![false; self.order()];
        for &x in u.elements() {
            members[self.conj(x, g)] = true;
        }
        Ok(Subgroup::from_members(self, members))
    }

    /// Largest normal subgroup of the group contained in `u`.
    pub fn core(&self, u: &Subgroup) -> Subgroup {
        let mut members = u.members.clone();
        // U^g only depends on the coset Ug, so a transversal suffices.
        for g in self.right_transversal_of(u) {
            let mut conj = vec![false; self.order()];
            for &x in u.elements() {
                conj[self.conj(x, g)] = true;
            }
            for (slot, c) in members.iter_mut().zip(conj) {
                *slot &= c;
            }
        }
        Subgroup::from_members(self, members)
    }

    pub fn is_core_free(&self, u: &Subgroup) -> bool {
        self.core(u).order() == 1
    }

    /// `{g : U^g = U}`.
    pub fn normalizer(&self, u: &Subgroup) -> Subgroup {
        let members = (0..self.order())
            .map(|g| u.elements().iter().all(|&x| u.contains(self.conj(x, g))))
            .collect();
        Subgroup::from_members(self, members)
    }

    pub fn is_normal(&self, u: &Subgroup) -> bool {
        self.generators()
            .iter()
            .all(|&g| u.elements().iter().all(|&x| u.contains(self.conj(x, g))))
    }

    /// Some `g` with `U^g = W`, if the two subgroups are conjugate.
    pub fn conjugating_element(&self, u: &Subgroup, w: &Subgroup) -> Option<usize> {
        if u.order() != w.order() {
            return None;
        }
        (0..self.order()).find(|&g| u.elements().iter().all(|&x| w.contains(self.conj(x, g))))
    }

    /// Minimal element of each right coset `Ug`, in increasing order.
    pub(crate) fn right_transversal_of(&self, u: &Subgroup) -> Vec<usize> {
        let mut assigned = vec![false; self.order()];
        let mut reps = Vec::new();
        for g in 0..self.order() {
            if assigned[g] {
                continue;
            }
            reps.push(g);
            for &x in u.elements() {
                assigned[self.mul(x, g)] = true;
            }
        }
        reps
    }

    pub(crate) fn check(&self, u: &Subgroup) -> Result<()> {
        if u.members.len() == self.order() {
            Ok(())
        } else {
            Err(Error::ForeignSubgroup)
        }
    }
}

/// A subgroup of a [`FiniteGroup`], stored as a membership mask over the
/// parent's element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    members: Vec<bool>,
    elements: Vec<usize>,
}

impl Subgroup {
    fn from_members(_group: &FiniteGroup, members: Vec<bool>) -> Subgroup {
        let elements = members
            .iter()
            .enumerate()
            .filter_map(|(i, &m)| m.then_some(i))
            .collect();
        Subgroup { members, elements }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.members[x]
    }

    /// Member indices in increasing order.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let members: Vec<bool> = self.members.iter().zip(&other.members).map(|(a, b)| *a && *b).collect();
        let elements = members
            .iter()
            .enumerate()
            .filter_map(|(i, &m)| m.then_some(i))
            .collect();
        Subgroup { members, elements }
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    /// A small generating set, chosen greedily from the largest-index elements down.
    pub fn generators(&self, group: &FiniteGroup) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut current = group.trivial();
        for &x in self.elements.iter().rev() {
            if !current.contains(x) {
                gens.push(x);
                current = group.join(&current, &[x]);
                if current.order() == self.order() {
                    break;
                }
            }
        }
        gens.reverse();
        gens
    }
}
