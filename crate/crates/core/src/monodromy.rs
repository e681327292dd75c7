//! Monodromy graphs `Mon(G; U, ρ, τ)`.
//!
//! Vertices are the double cosets `U g ⟨ρ⟩`, labelled by their smallest
//! element in cycle notation. For every element `h` of a right transversal
//! `S` of `U`, the pair `{U h ⟨ρ⟩, U h τ ⟨ρ⟩}` is an edge. Its multiplicity is
//! the size of the witness set
//!
//! ```text
//! D = { g ∈ S : g ∈ U h ⟨ρ⟩ and g τ ∈ U h τ ⟨ρ⟩ }.
//! ```
//!
//! Between two distinct vertices `|D|` is the number of parallel edges. When
//! both ends coincide, `D` contains the single dart of every free edge
//! (`gτ ∈ Ug`) and both darts of every loop, so the loop count is
//! `(|D| - free) / 2`; integrality is checked.

use std::collections::{BTreeSet, HashSet};

use rand::Rng;
use serde::Serialize;

use crate::coset::{CosetSpace, DoubleCosetDecomposition};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup, IDENTITY};
use crate::multigraph::{GraphJson, Multigraph};
use crate::perm::Permutation;

#[derive(Debug, Clone)]
pub struct MonodromyGraph {
    group: FiniteGroup,
    stabilizer: Subgroup,
    rho: usize,
    tau: usize,
    rho_subgroup: Subgroup,
    cosets: CosetSpace,
    vertices: DoubleCosetDecomposition,
    transversal: Vec<usize>,
    graph: Multigraph,
    core_free: bool,
}

/// Checks shared by monodromy graphs and algebraic maps.
pub(crate) fn check_pair(group: &FiniteGroup, rho: usize, tau: usize) -> Result<()> {
    if group.mul(tau, tau) != IDENTITY {
        return Err(Error::NotInvolution(group.element(tau).to_string()));
    }
    let generated = group.subgroup_generated(&[rho, tau]).order();
    if generated != group.order() {
        return Err(Error::NotGenerating {
            generated,
            order: group.order(),
        });
    }
    Ok(())
}

impl MonodromyGraph {
    /// Builds `Mon(G; U, ρ, τ)` over the canonical transversal.
    ///
    /// A stabilizer with nontrivial core is accepted; check
    /// [`is_core_free`](Self::is_core_free) afterwards.
    pub fn build(group: &FiniteGroup, stabilizer: &Subgroup, rho: &Permutation, tau: &Permutation) -> Result<Self> {
        let rho = group.locate(rho)?;
        let tau = group.locate(tau)?;
        Self::build_indexed(group, stabilizer, rho, tau)
    }

    pub fn build_indexed(group: &FiniteGroup, stabilizer: &Subgroup, rho: usize, tau: usize) -> Result<Self> {
        group.check(stabilizer)?;
        check_pair(group, rho, tau)?;
        let cosets = CosetSpace::new(group, stabilizer)?;
        let transversal = cosets.transversal().to_vec();
        Self::assemble(group, stabilizer, rho, tau, cosets, transversal)
    }

    fn assemble(
        group: &FiniteGroup,
        stabilizer: &Subgroup,
        rho: usize,
        tau: usize,
        cosets: CosetSpace,
        transversal: Vec<usize>,
    ) -> Result<Self> {
        let rho_subgroup = group.subgroup_generated(&[rho]);
        let vertices = DoubleCosetDecomposition::new(group, stabilizer, &rho_subgroup)?;
        let labels: Vec<String> = vertices
            .blocks()
            .iter()
            .map(|b| group.element(b.representative).to_string())
            .collect();
        let graph = edges_from_transversal(group, &cosets, &vertices, tau, &transversal, labels)?;
        Ok(MonodromyGraph {
            core_free: group.is_core_free(stabilizer),
            group: group.clone(),
            stabilizer: stabilizer.clone(),
            rho,
            tau,
            rho_subgroup,
            cosets,
            vertices,
            transversal,
            graph,
        })
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn stabilizer(&self) -> &Subgroup {
        &self.stabilizer
    }

    pub fn rho(&self) -> usize {
        self.rho
    }

    pub fn tau(&self) -> usize {
        self.tau
    }

    pub fn is_core_free(&self) -> bool {
        self.core_free
    }

    pub fn transversal(&self) -> &[usize] {
        &self.transversal
    }

    pub fn double_cosets(&self) -> &DoubleCosetDecomposition {
        &self.vertices
    }

    pub fn cosets(&self) -> &CosetSpace {
        &self.cosets
    }

    /// Vertex `U h ⟨ρ⟩` of an element index.
    pub fn vertex_of(&self, h: usize) -> usize {
        self.vertices.block_of(h)
    }

    /// `|⟨ρ⟩| / |⟨ρ⟩ ∩ U^h|`.
    pub fn valency(&self, h: &Permutation) -> Result<usize> {
        let h = self.group.locate(h)?;
        Ok(self.valency_indexed(h))
    }

    pub fn valency_indexed(&self, h: usize) -> usize {
        let conj = self
            .group
            .conjugate_subgroup(&self.stabilizer, h)
            .expect("stabilizer belongs to the group");
        self.rho_subgroup.order() / self.rho_subgroup.intersection(&conj).order()
    }

    /// `{ U g τ ⟨ρ⟩ : g ∈ U k ⟨ρ⟩, g τ ∉ U g }`, as vertex indices.
    pub fn neighborhood(&self, k: &Permutation) -> Result<BTreeSet<usize>> {
        let k = self.group.locate(k)?;
        Ok(self.neighborhood_indexed(k))
    }

    pub fn neighborhood_indexed(&self, k: usize) -> BTreeSet<usize> {
        let block = self.vertices.block_of(k);
        self.vertices
            .members(block)
            .into_iter()
            .filter_map(|g| {
                let gt = self.group.mul(g, self.tau);
                (self.cosets.coset_of(gt) != self.cosets.coset_of(g)).then(|| self.vertices.block_of(gt))
            })
            .collect()
    }

    /// Adjacent vertices in the built graph; a vertex with a loop is its own neighbour.
    pub fn graph_adjacency(&self, v: usize) -> BTreeSet<usize> {
        let mut out: BTreeSet<usize> = self.graph.neighbours(v).into_iter().collect();
        if self.graph.loop_count(v) > 0 {
            out.insert(v);
        }
        out
    }

    /// Rebuilds over `alternative` and reports whether the graph is unchanged.
    pub fn transversal_independence_check(&self, alternative: &[usize]) -> Result<bool> {
        Ok(self.rebuild_with(alternative)?.graph == self.graph)
    }

    pub fn rebuild_with(&self, transversal: &[usize]) -> Result<MonodromyGraph> {
        self.cosets.validate_transversal(transversal)?;
        Self::assemble(
            &self.group,
            &self.stabilizer,
            self.rho,
            self.tau,
            self.cosets.clone(),
            transversal.to_vec(),
        )
    }

    /// One uniformly random element from every right coset.
    pub fn random_transversal<R: Rng>(&self, rng: &mut R) -> Vec<usize> {
        let u = self.stabilizer.elements();
        self.cosets
            .transversal()
            .iter()
            .map(|&rep| self.group.mul(u[rng.gen_range(0..u.len())], rep))
            .collect()
    }

    /// The map automorphisms `a_L : U h ⟨ρ⟩ ↦ U a⁻¹ h ⟨ρ⟩` for `a ∈ N_G(U)`.
    ///
    /// Every map is checked to preserve multiplicities, loops and free edges.
    pub fn left_automorphisms(&self) -> Result<LeftAutomorphisms> {
        let normalizer = self.group.normalizer(&self.stabilizer);
        let n = self.graph.vertex_count();
        let mut by_element = Vec::with_capacity(normalizer.order());
        for &a in normalizer.elements() {
            let a_inv = self.group.inv(a);
            let map: Vec<usize> = self
                .vertices
                .blocks()
                .iter()
                .map(|b| self.vertices.block_of(self.group.mul(a_inv, b.representative)))
                .collect();
            if !self.graph.is_isomorphism(&self.graph, &map) {
                return Err(Error::VerificationFailed(format!(
                    "a_L for a = {} is not a graph automorphism",
                    self.group.element(a)
                )));
            }
            by_element.push((a, map));
        }
        let distinct: BTreeSet<Vec<usize>> = by_element.iter().map(|(_, m)| m.clone()).collect();
        let maps: Vec<Vec<usize>> = distinct.into_iter().collect();
        let set: HashSet<&Vec<usize>> = maps.iter().collect();
        for x in &maps {
            for y in &maps {
                let xy: Vec<usize> = (0..n).map(|v| y[x[v]]).collect();
                if !set.contains(&xy) {
                    return Err(Error::VerificationFailed("map automorphisms are not closed".into()));
                }
            }
        }
        Ok(LeftAutomorphisms {
            group: self.group.clone(),
            by_element,
            maps,
            graph: self.graph.clone(),
        })
    }

    pub fn to_json(&self, group_spec: &str) -> MonodromyJson {
        MonodromyJson {
            group: group_spec.to_string(),
            stabilizer_generators: self
                .stabilizer
                .generators(&self.group)
                .iter()
                .map(|&g| self.group.element(g).to_string())
                .collect(),
            rho: self.group.element(self.rho).to_string(),
            tau: self.group.element(self.tau).to_string(),
            core_free: self.core_free,
            graph: GraphJson::from(&self.graph),
        }
    }
}

fn edges_from_transversal(
    group: &FiniteGroup,
    cosets: &CosetSpace,
    vertices: &DoubleCosetDecomposition,
    tau: usize,
    transversal: &[usize],
    labels: Vec<String>,
) -> Result<Multigraph> {
    let mut graph = Multigraph::new(labels)?;
    let n = vertices.len();
    let mut pair_mult: Vec<Option<usize>> = vec![None; n * n];
    let mut loops: Vec<Option<(usize, usize)>> = vec![None; n];
    for &h in transversal {
        let x = vertices.block_of(h);
        let y = vertices.block_of(group.mul(h, tau));
        let witnesses: Vec<usize> = transversal
            .iter()
            .copied()
            .filter(|&g| vertices.block_of(g) == x && vertices.block_of(group.mul(g, tau)) == y)
            .collect();
        if x != y {
            let m = witnesses.len();
            let (a, b) = (x.min(y), x.max(y));
            match pair_mult[a * n + b] {
                None => pair_mult[a * n + b] = Some(m),
                Some(prev) if prev != m => {
                    return Err(Error::VerificationFailed(format!(
                        "edge {{{a},{b}}} has witness counts {prev} and {m}"
                    )));
                }
                Some(_) => {}
            }
        } else {
            let free = witnesses
                .iter()
                .filter(|&&g| cosets.coset_of(group.mul(g, tau)) == cosets.coset_of(g))
                .count();
            let paired = witnesses.len() - free;
            if !paired.is_multiple_of(2) {
                return Err(Error::VerificationFailed(format!(
                    "odd number ({paired}) of loop darts at vertex {x}"
                )));
            }
            let counts = (paired / 2, free);
            match loops[x] {
                None => loops[x] = Some(counts),
                Some(prev) if prev != counts => {
                    return Err(Error::VerificationFailed(format!("inconsistent loop counts at vertex {x}")));
                }
                Some(_) => {}
            }
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            if let Some(m) = pair_mult[a * n + b] {
                graph.add_edges(a, b, m)?;
            }
        }
        if let Some((l, f)) = loops[a] {
            graph.add_edges(a, a, l)?;
            graph.add_free_edges(a, f)?;
        }
    }
    Ok(graph)
}

/// The group `A = { a_L : a ∈ N_G(U) }` acting on the vertices of a monodromy graph.
#[derive(Debug, Clone)]
pub struct LeftAutomorphisms {
    group: FiniteGroup,
    by_element: Vec<(usize, Vec<usize>)>,
    maps: Vec<Vec<usize>>,
    graph: Multigraph,
}

impl LeftAutomorphisms {
    /// Distinct vertex permutations, sorted.
    pub fn maps(&self) -> &[Vec<usize>] {
        &self.maps
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    /// `(a, a_L)` for every `a` in the normalizer.
    pub fn by_element(&self) -> &[(usize, Vec<usize>)] {
        &self.by_element
    }

    /// Pointwise check of `(a b⁻¹)_L = a_L` followed by `(b⁻¹)_L`.
    pub fn composition_law_holds(&self) -> bool {
        let lookup: std::collections::HashMap<usize, &Vec<usize>> =
            self.by_element.iter().map(|(a, m)| (*a, m)).collect();
        self.by_element.iter().all(|(a, ma)| {
            self.by_element.iter().all(|(b, _)| {
                let b_inv = self.group.inv(*b);
                let ab = lookup[&self.group.mul(*a, b_inv)];
                let mb = lookup[&b_inv];
                (0..ma.len()).all(|v| ab[v] == mb[ma[v]])
            })
        })
    }

    fn orbit<T: Copy + Ord>(&self, start: T, act: impl Fn(&Vec<usize>, T) -> T) -> BTreeSet<T> {
        let mut orbit = BTreeSet::from([start]);
        let mut frontier = vec![start];
        while let Some(x) = frontier.pop() {
            for m in &self.maps {
                let y = act(m, x);
                if orbit.insert(y) {
                    frontier.push(y);
                }
            }
        }
        orbit
    }

    pub fn is_vertex_transitive(&self) -> bool {
        let n = self.graph.vertex_count();
        n == 0 || self.orbit(0usize, |m, v| m[v]).len() == n
    }

    /// Ordered adjacent pairs; a vertex with a loop contributes `(v, v)`.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let g = &self.graph;
        let n = g.vertex_count();
        (0..n)
            .flat_map(|u| (0..n).map(move |v| (u, v)))
            .filter(|&(u, v)| g.mult(u, v) > 0)
            .collect()
    }

    /// A single orbit on arcs.
    pub fn is_arc_transitive(&self) -> bool {
        let arcs = self.arcs();
        match arcs.first() {
            None => true,
            Some(&first) => self.orbit(first, |m, (u, v)| (m[u], m[v])).len() == arcs.len(),
        }
    }
}

/// `Mon(G; 1, ρ, τ)`.
pub fn arc_transitive_companion(group: &FiniteGroup, rho: &Permutation, tau: &Permutation) -> Result<MonodromyGraph> {
    MonodromyGraph::build(group, &group.trivial(), rho, tau)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonodromyJson {
    pub group: String,
    pub stabilizer_generators: Vec<String>,
    pub rho: String,
    pub tau: String,
    pub core_free: bool,
    pub graph: GraphJson,
}
