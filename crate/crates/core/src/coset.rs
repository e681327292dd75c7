//! Right cosets, double cosets, coset actions and suborbits.
//!
//! A right coset `Ug` is named by its smallest element; a double coset
//! `UgV` likewise. Membership queries go through the precomputed
//! element-to-coset tables and never compare sets.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup, IDENTITY};
use crate::perm::Permutation;

/// The right cosets of a subgroup, ordered by canonical representative.
#[derive(Debug, Clone)]
pub struct CosetSpace {
    subgroup: Subgroup,
    reps: Vec<usize>,
    coset_of: Vec<usize>,
}

impl CosetSpace {
    /// Partition of the group into right cosets `Ug`.
    pub fn new(group: &FiniteGroup, subgroup: &Subgroup) -> Result<CosetSpace> {
        group.check(subgroup)?;
        const UNSET: usize = usize::MAX;
        let mut coset_of = vec![UNSET; group.order()];
        let mut reps = Vec::with_capacity(group.order() / subgroup.order());
        // Scanning in increasing order makes the first hit the minimum.
        for g in 0..group.order() {
            if coset_of[g] != UNSET {
                continue;
            }
            let id = reps.len();
            reps.push(g);
            for &u in subgroup.elements() {
                coset_of[group.mul(u, g)] = id;
            }
        }
        Ok(CosetSpace {
            subgroup: subgroup.clone(),
            reps,
            coset_of,
        })
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Index of the coset containing `g`.
    #[inline]
    pub fn coset_of(&self, g: usize) -> usize {
        self.coset_of[g]
    }

    pub fn representative(&self, coset: usize) -> usize {
        self.reps[coset]
    }

    /// The canonical right transversal: the minimal element of every coset.
    pub fn transversal(&self) -> &[usize] {
        &self.reps
    }

    /// `(Ux)^g = Uxg` as a permutation of coset indices.
    pub fn action_of(&self, group: &FiniteGroup, g: usize) -> Permutation {
        let images = self
            .reps
            .iter()
            .map(|&x| self.coset_of[group.mul(x, g)])
            .collect();
        Permutation::from_images(images).expect("right multiplication permutes cosets")
    }

    /// Checks that `candidate` holds exactly one element of every coset.
    pub fn validate_transversal(&self, candidate: &[usize]) -> Result<()> {
        if candidate.len() != self.len() {
            return Err(Error::InvalidTransversal(format!(
                "{} elements for {} cosets",
                candidate.len(),
                self.len()
            )));
        }
        let mut hit = vec![false; self.len()];
        for &g in candidate {
            let c = *self
                .coset_of
                .get(g)
                .ok_or_else(|| Error::InvalidTransversal(format!("element #{g} is not in the group")))?;
            if std::mem::replace(&mut hit[c], true) {
                return Err(Error::InvalidTransversal(format!("two elements in coset {c}")));
            }
        }
        Ok(())
    }
}

/// Shorthand for [`CosetSpace::new`].
pub fn right_cosets(group: &FiniteGroup, subgroup: &Subgroup) -> Result<CosetSpace> {
    CosetSpace::new(group, subgroup)
}

/// One block `U g V` of a double-coset decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DoubleCosetBlock {
    /// Smallest element of the block.
    pub representative: usize,
    pub size: usize,
    /// Number of right cosets of `U` inside the block, `|V| / |U^g ∩ V|`.
    pub right_cosets: usize,
}

/// The partition of a group into double cosets `U g V`.
///
/// Blocks are ordered by representative; since the identity is the smallest
/// element, the block `UV` comes first.
#[derive(Debug, Clone)]
pub struct DoubleCosetDecomposition {
    blocks: Vec<DoubleCosetBlock>,
    block_of: Vec<usize>,
}

impl DoubleCosetDecomposition {
    pub fn new(group: &FiniteGroup, left: &Subgroup, right: &Subgroup) -> Result<Self> {
        group.check(left)?;
        group.check(right)?;
        const UNSET: usize = usize::MAX;
        let mut block_of = vec![UNSET; group.order()];
        let mut blocks = Vec::new();
        for g in 0..group.order() {
            if block_of[g] != UNSET {
                continue;
            }
            let id = blocks.len();
            let mut size = 0;
            for &u in left.elements() {
                let ug = group.mul(u, g);
                for &v in right.elements() {
                    let x = group.mul(ug, v);
                    if block_of[x] == UNSET {
                        block_of[x] = id;
                        size += 1;
                    }
                }
            }
            let meet = group.conjugate_subgroup(left, g)?.intersection(right).order();
            let expected = left.order() * right.order() / meet;
            if size != expected {
                return Err(Error::VerificationFailed(format!(
                    "double coset of #{g} has {size} elements, size formula gives {expected}"
                )));
            }
            blocks.push(DoubleCosetBlock {
                representative: g,
                size,
                right_cosets: right.order() / meet,
            });
        }
        debug_assert_eq!(blocks.first().map(|b| b.representative), Some(IDENTITY));
        Ok(DoubleCosetDecomposition { blocks, block_of })
    }

    pub fn blocks(&self) -> &[DoubleCosetBlock] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    #[inline]
    pub fn block_of(&self, g: usize) -> usize {
        self.block_of[g]
    }

    /// Elements of one block, increasing.
    pub fn members(&self, block: usize) -> Vec<usize> {
        (0..self.block_of.len()).filter(|&g| self.block_of[g] == block).collect()
    }
}

pub fn double_cosets(group: &FiniteGroup, left: &Subgroup, right: &Subgroup) -> Result<DoubleCosetDecomposition> {
    DoubleCosetDecomposition::new(group, left, right)
}

/// The permutation representation on right cosets.
#[derive(Debug, Clone)]
pub struct CosetAction {
    pub space: CosetSpace,
    /// Image of every group element, indexed like the group.
    pub representation: Vec<Permutation>,
    pub faithful: bool,
}

pub fn coset_action(group: &FiniteGroup, subgroup: &Subgroup) -> Result<CosetAction> {
    let space = CosetSpace::new(group, subgroup)?;
    let representation: Vec<Permutation> = (0..group.order()).map(|g| space.action_of(group, g)).collect();
    let kernel = representation.iter().filter(|p| p.is_identity()).count();
    Ok(CosetAction {
        space,
        representation,
        faithful: kernel == 1,
    })
}

/// Orbits of `h` on the right cosets of `stabilizer`, listed in the order of
/// the double cosets `stabilizer · g · h`. Each orbit is a sorted list of
/// coset indices.
pub fn suborbits(group: &FiniteGroup, stabilizer: &Subgroup, h: &Subgroup) -> Result<Vec<Vec<usize>>> {
    let space = CosetSpace::new(group, stabilizer)?;
    let dc = DoubleCosetDecomposition::new(group, stabilizer, h)?;
    let mut orbits = vec![Vec::new(); dc.len()];
    for (coset, &rep) in space.transversal().iter().enumerate() {
        orbits[dc.block_of(rep)].push(coset);
    }
    Ok(orbits)
}

/// For a transitive permutation group and a point `ω` (0-based), the map
/// `ω^g ↦ G_ω g` from points to right cosets of the point stabilizer.
///
/// Returns the stabilizer, its coset space and the coset index of every
/// point.
pub fn point_coset_correspondence(group: &FiniteGroup, point: usize) -> Result<(Subgroup, CosetSpace, Vec<usize>)> {
    let n = group.degree();
    if point >= n {
        return Err(Error::Parse(format!("point {} out of range", point + 1)));
    }
    let stab: Vec<usize> = (0..group.order()).filter(|&g| group.element(g).apply(point) == point).collect();
    let stabilizer = group.subgroup_generated(&stab);
    let space = CosetSpace::new(group, &stabilizer)?;
    const UNSET: usize = usize::MAX;
    let mut coset_of_point = vec![UNSET; n];
    for g in 0..group.order() {
        let image = group.element(g).apply(point);
        let c = space.coset_of(g);
        if coset_of_point[image] == UNSET {
            coset_of_point[image] = c;
        } else if coset_of_point[image] != c {
            return Err(Error::VerificationFailed("point-to-coset map is not well defined".into()));
        }
    }
    if coset_of_point.contains(&UNSET) {
        return Err(Error::VerificationFailed("group is not transitive".into()));
    }
    Ok((stabilizer, space, coset_of_point))
}
