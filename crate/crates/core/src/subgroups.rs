//! Conjugacy classes of subgroups by cyclic extension.

use std::collections::{BTreeMap, HashSet};

use crate::group::{FiniteGroup, Subgroup};

/// One conjugacy class of subgroups.
#[derive(Debug, Clone)]
pub struct SubgroupClass {
    pub representative: Subgroup,
    /// Number of conjugates, `|G| / |N_G(representative)|`.
    pub class_size: usize,
}

impl SubgroupClass {
    pub fn order(&self) -> usize {
        self.representative.order()
    }
}

/// Lexicographically smallest element list among the conjugates of `u`.
///
/// Two subgroups are conjugate exactly when their keys agree.
pub fn conjugacy_key(group: &FiniteGroup, u: &Subgroup) -> Vec<usize> {
    let mut best: Option<Vec<usize>> = None;
    for g in 0..group.order() {
        let mut conj: Vec<usize> = u.elements().iter().map(|&x| group.conj(x, g)).collect();
        conj.sort_unstable();
        if best.as_ref().is_none_or(|b| conj < *b) {
            best = Some(conj);
        }
    }
    best.unwrap_or_default()
}

/// All conjugacy classes of subgroups, trivial group and whole group included.
///
/// Seeds with the cyclic subgroups, then repeatedly extends each class
/// representative by one outside element. Classes come out sorted by order,
/// then by the representative's element list; each representative is the
/// lexicographically smallest member of its class.
pub fn all_subgroup_classes(group: &FiniteGroup) -> Vec<SubgroupClass> {
    let mut reps: BTreeMap<Vec<usize>, Subgroup> = BTreeMap::new();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut frontier: Vec<Subgroup> = Vec::new();

    let mut admit = |sub: Subgroup, reps: &mut BTreeMap<Vec<usize>, Subgroup>, frontier: &mut Vec<Subgroup>| {
        if !seen.insert(sub.elements().to_vec()) {
            return;
        }
        let key = conjugacy_key(group, &sub);
        if let std::collections::btree_map::Entry::Vacant(slot) = reps.entry(key) {
            let canonical = group.subgroup_generated(slot.key());
            slot.insert(canonical.clone());
            frontier.push(canonical);
        }
    };

    for x in 0..group.order() {
        admit(group.subgroup_generated(&[x]), &mut reps, &mut frontier);
    }
    while let Some(sub) = frontier.pop() {
        for x in 0..group.order() {
            if !sub.contains(x) {
                admit(group.join(&sub, &[x]), &mut reps, &mut frontier);
            }
        }
    }

    let mut classes: Vec<SubgroupClass> = reps
        .into_values()
        .map(|representative| {
            let class_size = group.order() / group.normalizer(&representative).order();
            SubgroupClass {
                representative,
                class_size,
            }
        })
        .collect();
    classes.sort_by(|a, b| {
        (a.order(), a.representative.elements()).cmp(&(b.order(), b.representative.elements()))
    });
    classes
}
