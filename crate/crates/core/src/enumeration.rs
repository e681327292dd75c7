//! Map censuses.
//!
//! The maps of a group `G` up to isomorphism correspond to pairs (class of
//! core-free subgroups, `Aut(G)`-class of generating pairs `(ρ, τ)` with
//! `τ² = 1`). A census builds one map per pair and then checks, map against
//! map, that no two of them are isomorphic.

use std::collections::{BTreeSet, HashSet};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::algmap::{maps_isomorphic, AlgebraicMap, MapCensusEntry};
use crate::automorphism::{automorphism_group, GroupMap};
use crate::error::{Error, Result};
use crate::families::GroupSpec;
use crate::group::{FiniteGroup, Subgroup, IDENTITY};
use crate::multigraph::Multigraph;
use crate::perm::Permutation;
use crate::subgroups::{all_subgroup_classes, conjugacy_key, SubgroupClass};

/// Conjugacy classes of core-free subgroups, ordered by order and then by
/// representative.
pub fn corefree_classes(group: &FiniteGroup) -> Vec<SubgroupClass> {
    all_subgroup_classes(group)
        .into_iter()
        .filter(|c| group.is_core_free(&c.representative))
        .collect()
}

/// Generating pairs `(ρ, τ)` with `τ² = 1`, as element indices.
/// `τ = 1` is admitted unless `require_involution` is set.
pub fn generating_pairs(group: &FiniteGroup, require_involution: bool) -> Vec<(usize, usize)> {
    let involutions: Vec<usize> = (0..group.order())
        .filter(|&t| group.mul(t, t) == IDENTITY && !(require_involution && t == IDENTITY))
        .collect();
    let mut out = Vec::new();
    for rho in 0..group.order() {
        for &tau in &involutions {
            if group.generated_by(&[rho, tau]) {
                out.push((rho, tau));
            }
        }
    }
    out
}

fn orbit_minimum(auts: &[GroupMap], (rho, tau): (usize, usize)) -> (usize, usize) {
    auts.iter()
        .map(|s| (s.apply(rho), s.apply(tau)))
        .min()
        .expect("the identity automorphism is always present")
}

/// Representatives of the generating pairs modulo `Aut(G)`; each is the
/// lexicographically smallest pair of its orbit, and they come out sorted.
pub fn pair_classes(group: &FiniteGroup, require_involution: bool) -> Vec<(usize, usize)> {
    let auts = automorphism_group(group);
    let reps: BTreeSet<(usize, usize)> = generating_pairs(group, require_involution)
        .into_iter()
        .map(|p| orbit_minimum(&auts, p))
        .collect();
    reps.into_iter().collect()
}

/// Every subgroup with trivial core.
pub fn corefree_subgroups(group: &FiniteGroup) -> Vec<Subgroup> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for class in corefree_classes(group) {
        for g in 0..group.order() {
            let conj = group
                .conjugate_subgroup(&class.representative, g)
                .expect("class representatives belong to the group");
            if seen.insert(conj.elements().to_vec()) {
                out.push(conj);
            }
        }
    }
    out
}

/// Number of isomorphism classes among all maps `M(G; U, ρ, τ)`, with `U`
/// over every core-free subgroup and `(ρ, τ)` over every generating pair.
/// Classes are found by direct isomorphism tests, without using the census.
pub fn count_all_maps(group: &FiniteGroup, require_involution: bool) -> Result<usize> {
    let pairs = generating_pairs(group, require_involution);
    let mut reps: Vec<AlgebraicMap> = Vec::new();
    for u in corefree_subgroups(group) {
        for &(rho, tau) in &pairs {
            let m = AlgebraicMap::build_indexed(group, &u, rho, tau)?;
            if !reps.iter().any(|r| maps_isomorphic(r, &m).is_some()) {
                reps.push(m);
            }
        }
    }
    Ok(reps.len())
}

/// Fixed generators for the classes of a well-known group, so that rows and
/// columns of its census can be named `U1, U2, ...` and `pair1, pair2, ...`.
#[derive(Debug, Clone)]
pub struct Labelling {
    pub group: GroupSpec,
    /// Generators of `U1, U2, ...`; an empty list is the trivial subgroup.
    pub subgroups: Vec<Vec<&'static str>>,
    /// `(ρ, τ)` of `pair1, pair2, ...`.
    pub pairs: Vec<(&'static str, &'static str)>,
}

/// Standard labels for `A4`, `S4` and `A5`.
pub fn standard_labelling(spec: &GroupSpec) -> Option<Labelling> {
    let (subgroups, pairs): (Vec<Vec<&'static str>>, Vec<(&'static str, &'static str)>) = match spec {
        GroupSpec::Alternating(4) => (
            vec![vec![], vec!["(1,3)(2,4)"], vec!["(2,3,4)"]],
            vec![("(1,3,2)", "(1,2)(3,4)")],
        ),
        GroupSpec::Symmetric(4) => (
            vec![
                vec![],
                vec!["(1,4)(2,3)"],
                vec!["(3,4)"],
                vec!["(2,3,4)"],
                vec!["(1,4,2,3)"],
                vec!["(3,4)", "(1,2)(3,4)"],
                vec!["(3,4)", "(2,3,4)"],
            ],
            vec![("(1,2,3,4)", "(2,3)"), ("(1,2,4)", "(2,3)")],
        ),
        GroupSpec::Alternating(5) => (
            vec![
                vec![],
                vec!["(1,2)(4,5)"],
                vec!["(1,5,4)"],
                vec!["(1,2)(4,5)", "(1,5)(2,4)"],
                vec!["(1,5,2,4,3)"],
                vec!["(1,5)(3,4)", "(1,2,5)"],
                vec!["(1,3)(4,5)", "(1,5,2,4,3)"],
                vec!["(1,5,4)", "(1,2)(4,5)", "(1,5)(2,4)"],
            ],
            vec![
                ("(1,5,4,3,2)", "(1,2)(3,4)"),
                ("(1,5,4)", "(1,2)(3,4)"),
                ("(1,4,2,5,3)", "(1,2)(3,4)"),
            ],
        ),
        _ => return None,
    };
    Some(Labelling {
        group: spec.clone(),
        subgroups,
        pairs,
    })
}

impl Labelling {
    pub fn subgroup(&self, group: &FiniteGroup, i: usize) -> Result<Subgroup> {
        let gens = self.subgroups[i]
            .iter()
            .map(|s| Permutation::parse(s, Some(group.degree())))
            .collect::<Result<Vec<_>>>()?;
        group.subgroup_from_perms(&gens)
    }

    pub fn pair(&self, group: &FiniteGroup, j: usize) -> Result<(usize, usize)> {
        let (r, t) = self.pairs[j];
        let p = |s: &str| Permutation::parse(s, Some(group.degree())).and_then(|p| group.locate(&p));
        Ok((p(r)?, p(t)?))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SubgroupClassJson {
    pub name: String,
    pub order: usize,
    pub class_size: usize,
    pub generators: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PairClassJson {
    pub name: String,
    pub rho: String,
    pub tau: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct AtlasEntry {
    pub subgroup: String,
    pub pair: String,
    pub stabilizer_class: usize,
    pub pair_class: usize,
    pub planar: bool,
}

/// The `m × n` grid of maps of a group.
#[derive(Debug, Clone)]
pub struct Census {
    group_name: String,
    group: FiniteGroup,
    classes: Vec<SubgroupClass>,
    pairs: Vec<(usize, usize)>,
    row_names: Vec<String>,
    col_names: Vec<String>,
    grid: Vec<Vec<MapCensusEntry>>,
    graphs: Vec<Vec<Multigraph>>,
}

impl Census {
    pub fn group_name(&self) -> &str {
        &self.group_name
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn corefree_classes(&self) -> &[SubgroupClass] {
        &self.classes
    }

    pub fn pair_classes(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn m(&self) -> usize {
        self.classes.len()
    }

    pub fn n(&self) -> usize {
        self.pairs.len()
    }

    pub fn total(&self) -> usize {
        self.m() * self.n()
    }

    /// Row names: `U1, U2, ...` from the standard labelling when there is one,
    /// otherwise numbered in class order.
    pub fn row_names(&self) -> &[String] {
        &self.row_names
    }

    pub fn col_names(&self) -> &[String] {
        &self.col_names
    }

    pub fn entry(&self, i: usize, j: usize) -> &MapCensusEntry {
        &self.grid[i][j]
    }

    pub fn entries(&self) -> impl Iterator<Item = &MapCensusEntry> {
        self.grid.iter().flatten()
    }

    pub fn underlying_graph(&self, i: usize, j: usize) -> &Multigraph {
        &self.graphs[i][j]
    }

    pub fn map(&self, i: usize, j: usize) -> Result<AlgebraicMap> {
        let (rho, tau) = self.pairs[j];
        AlgebraicMap::build_indexed(&self.group, &self.classes[i].representative, rho, tau)
    }

    /// Row and column of the named cell, e.g. `("U5", "pair3")`.
    pub fn position(&self, row: &str, col: &str) -> Option<(usize, usize)> {
        Some((
            self.row_names.iter().position(|r| r == row)?,
            self.col_names.iter().position(|c| c == col)?,
        ))
    }

    pub fn planar_atlas(&self) -> Vec<AtlasEntry> {
        let mut out = Vec::new();
        for i in 0..self.m() {
            for j in 0..self.n() {
                out.push(AtlasEntry {
                    subgroup: self.row_names[i].clone(),
                    pair: self.col_names[j].clone(),
                    stabilizer_class: i,
                    pair_class: j,
                    planar: self.grid[i][j].planar_underlying,
                });
            }
        }
        out
    }

    pub fn planar_count(&self) -> usize {
        self.entries().filter(|e| e.planar_underlying).count()
    }

    pub fn summary(&self) -> String {
        format!("m={} n={} total={}", self.m(), self.n(), self.total())
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct CensusJson<'a> {
            group: &'a str,
            order: usize,
            m: usize,
            n: usize,
            total: usize,
            planar: usize,
            subgroup_classes: Vec<SubgroupClassJson>,
            pair_classes: Vec<PairClassJson>,
            grid: Vec<&'a MapCensusEntry>,
        }
        let g = &self.group;
        let json = CensusJson {
            group: &self.group_name,
            order: g.order(),
            m: self.m(),
            n: self.n(),
            total: self.total(),
            planar: self.planar_count(),
            subgroup_classes: self
                .classes
                .iter()
                .zip(&self.row_names)
                .map(|(c, name)| SubgroupClassJson {
                    name: name.clone(),
                    order: c.order(),
                    class_size: c.class_size,
                    generators: c
                        .representative
                        .generators(g)
                        .iter()
                        .map(|&x| g.element(x).to_string())
                        .collect(),
                })
                .collect(),
            pair_classes: self
                .pairs
                .iter()
                .zip(&self.col_names)
                .map(|(&(r, t), name)| PairClassJson {
                    name: name.clone(),
                    rho: g.element(r).to_string(),
                    tau: g.element(t).to_string(),
                })
                .collect(),
            grid: self.entries().collect(),
        };
        let mut s = serde_json::to_string_pretty(&json).expect("census JSON serializes");
        s.push('\n');
        s
    }

    /// One line per cell, preceded by the totals.
    pub fn to_table(&self) -> String {
        let mut out = format!("census {}: {}\n", self.group_name, self.summary());
        for (i, row) in self.grid.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                let c = e.counts;
                let genus = c.genus.map_or_else(|| "-".to_string(), |g| g.to_string());
                let _ = writeln!(
                    out,
                    "{:<4} {:<6} |U|={:<3} darts={:<3} V={:<3} E={:<3} F={:<3} euler={:<4} genus={:<2} planar={}",
                    self.row_names[i],
                    self.col_names[j],
                    e.stabilizer_order,
                    c.darts,
                    c.vertices,
                    c.edges,
                    c.faces,
                    c.euler,
                    genus,
                    if e.planar_underlying { "yes" } else { "no" },
                );
            }
        }
        let _ = writeln!(out, "planar: {}/{}", self.planar_count(), self.total());
        out
    }

    /// Writes `<dir>/census/<group>/<Ui>_<pairj>.dot` for every cell and
    /// returns the paths written.
    pub fn write_dot_tree(&self, dir: &Path) -> std::io::Result<Vec<PathBuf>> {
        let base = dir.join("census").join(&self.group_name);
        std::fs::create_dir_all(&base)?;
        let mut written = Vec::new();
        for i in 0..self.m() {
            for j in 0..self.n() {
                let path = base.join(format!("{}_{}.dot", self.row_names[i], self.col_names[j]));
                std::fs::write(&path, self.graphs[i][j].to_dot())?;
                written.push(path);
            }
        }
        Ok(written)
    }
}

/// Builds the census of `group`, named `name` in output.
///
/// When `labelling` is given, rows and columns are reordered to follow it and
/// every labelled subgroup and pair must land in a distinct class.
pub fn build_census(
    group: &FiniteGroup,
    name: &str,
    labelling: Option<&Labelling>,
    require_involution: bool,
) -> Result<Census> {
    let mut classes = corefree_classes(group);
    let mut pairs = pair_classes(group, require_involution);
    let mut row_names: Vec<String> = (1..=classes.len()).map(|i| format!("U{i}")).collect();
    let mut col_names: Vec<String> = (1..=pairs.len()).map(|j| format!("pair{j}")).collect();

    if let Some(lab) = labelling {
        let row_order = align_subgroups(group, &classes, lab)?;
        let col_order = align_pairs(group, &pairs, lab)?;
        classes = row_order.iter().map(|&k| classes[k].clone()).collect();
        pairs = col_order.iter().map(|&k| pairs[k]).collect();
        row_names = (1..=classes.len()).map(|i| format!("U{i}")).collect();
        col_names = (1..=pairs.len()).map(|j| format!("pair{j}")).collect();
    }

    let mut maps = Vec::with_capacity(classes.len());
    let mut grid = Vec::with_capacity(classes.len());
    let mut graphs = Vec::with_capacity(classes.len());
    for (i, class) in classes.iter().enumerate() {
        let mut map_row = Vec::new();
        let mut row = Vec::new();
        let mut graph_row = Vec::new();
        for (j, &(rho, tau)) in pairs.iter().enumerate() {
            let m = AlgebraicMap::build_indexed(group, &class.representative, rho, tau)?;
            row.push(MapCensusEntry::new(i, j, &m)?);
            graph_row.push(m.underlying_graph());
            map_row.push(m);
        }
        maps.push(map_row);
        grid.push(row);
        graphs.push(graph_row);
    }

    let flat: Vec<(usize, usize, &AlgebraicMap)> = maps
        .iter()
        .enumerate()
        .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, m)| (i, j, m)))
        .collect();
    for (a, &(i1, j1, m1)) in flat.iter().enumerate() {
        for &(i2, j2, m2) in &flat[a + 1..] {
            if let Some(w) = maps_isomorphic(m1, m2) {
                return Err(Error::VerificationFailed(format!(
                    "census cells ({},{}) and ({},{}) are isomorphic via y = {}",
                    row_names[i1],
                    col_names[j1],
                    row_names[i2],
                    col_names[j2],
                    group.element(w.y)
                )));
            }
        }
    }

    Ok(Census {
        group_name: name.to_string(),
        group: group.clone(),
        classes,
        pairs,
        row_names,
        col_names,
        grid,
        graphs,
    })
}

/// For each labelled subgroup, the index of its class.
pub fn align_subgroups(group: &FiniteGroup, classes: &[SubgroupClass], lab: &Labelling) -> Result<Vec<usize>> {
    let keys: Vec<Vec<usize>> = classes.iter().map(|c| conjugacy_key(group, &c.representative)).collect();
    let mut order = Vec::new();
    for i in 0..lab.subgroups.len() {
        let u = lab.subgroup(group, i)?;
        let key = conjugacy_key(group, &u);
        let k = keys.iter().position(|k| *k == key).ok_or_else(|| {
            Error::VerificationFailed(format!("labelled subgroup U{} is not a core-free class", i + 1))
        })?;
        order.push(k);
    }
    check_bijection(&order, classes.len(), "subgroup")?;
    Ok(order)
}

/// For each labelled pair, the index of its class.
pub fn align_pairs(group: &FiniteGroup, pairs: &[(usize, usize)], lab: &Labelling) -> Result<Vec<usize>> {
    let auts = automorphism_group(group);
    let mut order = Vec::new();
    for j in 0..lab.pairs.len() {
        let key = orbit_minimum(&auts, lab.pair(group, j)?);
        let k = pairs.iter().position(|&p| p == key).ok_or_else(|| {
            Error::VerificationFailed(format!("labelled pair{} is not a generating pair class", j + 1))
        })?;
        order.push(k);
    }
    check_bijection(&order, pairs.len(), "pair")?;
    Ok(order)
}

fn check_bijection(order: &[usize], len: usize, what: &str) -> Result<()> {
    let distinct: BTreeSet<usize> = order.iter().copied().collect();
    if order.len() != len || distinct.len() != len {
        return Err(Error::VerificationFailed(format!(
            "{} labelled {what} classes for {len} classes, {} distinct",
            order.len(),
            distinct.len()
        )));
    }
    Ok(())
}
