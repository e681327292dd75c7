//! Group automorphisms as explicit element bijections, found by
//! generator-image search.

use std::collections::VecDeque;

use crate::group::{FiniteGroup, IDENTITY};

/// A bijection between element indices that preserves products.
///
/// Used both for automorphisms of one group and for isomorphisms between two
/// groups.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupMap {
    images: Vec<usize>,
}

impl GroupMap {
    pub fn identity(group: &FiniteGroup) -> GroupMap {
        GroupMap {
            images: (0..group.order()).collect(),
        }
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &GroupMap) -> GroupMap {
        GroupMap {
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> GroupMap {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        GroupMap { images }
    }

    /// Exhaustive check of `(xy)^σ = x^σ y^σ`.
    pub fn is_homomorphism(&self, source: &FiniteGroup, target: &FiniteGroup) -> bool {
        (0..source.order()).all(|x| {
            (0..source.order()).all(|y| self.apply(source.mul(x, y)) == target.mul(self.apply(x), self.apply(y)))
        })
    }
}

/// Extends `gens[i] ↦ images[i]` to a homomorphism `source → target`.
///
/// Walks the Cayley graph of `source` over `gens`; the assignment is
/// consistent on every edge exactly when it extends. Returns `None` if the
/// generators do not generate `source`, if the assignment does not extend, or
/// if the extension is not a bijection onto `target`.
pub fn extend_to_isomorphism(
    source: &FiniteGroup,
    target: &FiniteGroup,
    gens: &[usize],
    images: &[usize],
) -> Option<GroupMap> {
    if source.order() != target.order() || gens.len() != images.len() {
        return None;
    }
    const UNSET: usize = usize::MAX;
    let mut map = vec![UNSET; source.order()];
    map[IDENTITY] = IDENTITY;
    let mut queue = VecDeque::from([IDENTITY]);
    while let Some(x) = queue.pop_front() {
        for (&g, &img) in gens.iter().zip(images) {
            let y = source.mul(x, g);
            let fy = target.mul(map[x], img);
            if map[y] == UNSET {
                map[y] = fy;
                queue.push_back(y);
            } else if map[y] != fy {
                return None;
            }
        }
    }
    if map.contains(&UNSET) {
        return None;
    }
    let mut hit = vec![false; target.order()];
    for &y in &map {
        if std::mem::replace(&mut hit[y], true) {
            return None;
        }
    }
    Some(GroupMap { images: map })
}

/// A generating tuple of minimal length among the first few tried: a single
/// generator when cyclic, else the lexicographically first generating pair,
/// else a greedy set.
pub fn small_generating_tuple(group: &FiniteGroup) -> Vec<usize> {
    let n = group.order();
    if n == 1 {
        return vec![IDENTITY];
    }
    if let Some(x) = (0..n).find(|&x| group.element_order(x) == n) {
        return vec![x];
    }
    // Elements of large order first keeps the pair search short.
    let mut by_order: Vec<usize> = (1..n).collect();
    by_order.sort_by_key(|&x| std::cmp::Reverse(group.element_order(x)));
    for &a in &by_order {
        for &b in &by_order {
            if group.generated_by(&[a, b]) {
                return vec![a, b];
            }
        }
    }
    group.whole().generators(group)
}

/// Every automorphism of `group`, sorted (the identity first).
pub fn automorphism_group(group: &FiniteGroup) -> Vec<GroupMap> {
    let gens = small_generating_tuple(group);
    let orders: Vec<usize> = gens.iter().map(|&g| group.element_order(g)).collect();
    let candidates: Vec<Vec<usize>> = orders
        .iter()
        .map(|&o| (0..group.order()).filter(|&x| group.element_order(x) == o).collect())
        .collect();

    let mut out = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    if candidates.iter().any(Vec::is_empty) {
        return out;
    }
    loop {
        let images: Vec<usize> = choice.iter().zip(&candidates).map(|(&c, cs)| cs[c]).collect();
        if let Some(map) = extend_to_isomorphism(group, group, &gens, &images) {
            out.push(map);
        }
        // odometer
        let mut k = gens.len();
        loop {
            if k == 0 {
                out.sort();
                return out;
            }
            k -= 1;
            choice[k] += 1;
            if choice[k] < candidates[k].len() {
                break;
            }
            choice[k] = 0;
        }
    }
}

/// Is there an automorphism `σ` with `ρ1^σ = ρ2` and `τ1^σ = τ2`?
///
/// When `⟨ρ1, τ1⟩` is the whole group `σ` is forced by the generator images;
/// otherwise the full automorphism list is searched.
pub fn pairs_isomorphic(group: &FiniteGroup, first: (usize, usize), second: (usize, usize)) -> Option<GroupMap> {
    let (r1, t1) = first;
    let (r2, t2) = second;
    if group.generated_by(&[r1, t1]) {
        return extend_to_isomorphism(group, group, &[r1, t1], &[r2, t2]);
    }
    automorphism_group(group)
        .into_iter()
        .find(|s| s.apply(r1) == r2 && s.apply(t1) == t2)
}

/// Inner automorphism `x ↦ g⁻¹ x g`.
pub fn inner_automorphism(group: &FiniteGroup, g: usize) -> GroupMap {
    GroupMap {
        images: (0..group.order()).map(|x| group.conj(x, g)).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::GroupSpec;
    use crate::group::DEFAULT_BOUND;
    use crate::perm::Permutation;
    use std::collections::HashSet;

    fn grp(s: &str) -> FiniteGroup {
        GroupSpec::parse(s).unwrap().build(DEFAULT_BOUND).unwrap()
    }

    fn el(g: &FiniteGroup, s: &str) -> usize {
        g.locate(&Permutation::parse(s, Some(g.degree())).unwrap()).unwrap()
    }

    #[test]
    fn cyclic_of_order_two_has_only_the_identity() {
        let auts = automorphism_group(&grp("C2"));
        assert_eq!(auts.len(), 1);
        assert!(auts[0].is_identity());
    }

    #[test]
    fn s4_automorphisms_are_inner() {
        let g = grp("S4");
        let auts = automorphism_group(&g);
        assert_eq!(auts.len(), 24);
        let inner: HashSet<GroupMap> = (0..g.order()).map(|x| inner_automorphism(&g, x)).collect();
        assert_eq!(inner.len(), 24);
        assert!(auts.iter().all(|a| inner.contains(a)));
    }

    /// Oracle: conjugation by the 120 elements of S5 restricted to A5.
    #[test]
    fn a5_automorphisms_come_from_s5() {
        let a5 = grp("A5");
        let s5 = grp("S5");
        let auts: HashSet<GroupMap> = automorphism_group(&a5).into_iter().collect();
        assert_eq!(auts.len(), 120);
        let from_s5: HashSet<GroupMap> = s5
            .elements()
            .iter()
            .map(|g| GroupMap {
                images: a5
                    .elements()
                    .iter()
                    .map(|x| a5.index_of(&x.conjugate_by(g)).unwrap())
                    .collect(),
            })
            .collect();
        assert_eq!(auts, from_s5);
    }

    #[test]
    fn automorphisms_preserve_products_and_close() {
        for spec in ["A4", "D8", "C6"] {
            let g = grp(spec);
            let auts = automorphism_group(&g);
            let set: HashSet<&GroupMap> = auts.iter().collect();
            for a in &auts {
                assert!(a.is_homomorphism(&g, &g));
                assert!(set.contains(&a.inverse()));
                for b in &auts {
                    assert!(set.contains(&a.then(b)));
                }
            }
        }
    }

    #[test]
    fn pair_isomorphism_in_a5() {
        let g = grp("A5");
        let p1 = (el(&g, "(1,5,4,3,2)"), el(&g, "(1,2)(3,4)"));
        let p3 = (el(&g, "(1,4,2,5,3)"), el(&g, "(1,2)(3,4)"));
        assert!(pairs_isomorphic(&g, p1, p1).unwrap().is_identity());
        assert!(pairs_isomorphic(&g, p1, p3).is_none());
        for x in [3, 17, 42] {
            let conj = (g.conj(p1.0, x), g.conj(p1.1, x));
            let w = pairs_isomorphic(&g, p1, conj).unwrap();
            assert_eq!(w, inner_automorphism(&g, x));
        }
    }

    #[test]
    fn pair_isomorphism_is_an_equivalence() {
        let g = grp("S4");
        let pairs: Vec<(usize, usize)> = (0..24)
            .flat_map(|r| (0..24).map(move |t| (r, t)))
            .filter(|&(r, t)| g.mul(t, t) == IDENTITY && (r * 7 + t) % 5 == 0)
            .collect();
        for &a in &pairs {
            assert!(pairs_isomorphic(&g, a, a).is_some());
            for &b in &pairs {
                let ab = pairs_isomorphic(&g, a, b).is_some();
                assert_eq!(ab, pairs_isomorphic(&g, b, a).is_some());
                if ab {
                    for &c in &pairs {
                        if pairs_isomorphic(&g, b, c).is_some() {
                            assert!(pairs_isomorphic(&g, a, c).is_some());
                        }
                    }
                }
            }
        }
    }
}
