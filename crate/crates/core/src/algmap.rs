//! Algebraic maps `M(G; U, ρ, τ)`.
//!
//! The darts are the right cosets of a core-free subgroup `U`; `ρ` and `τ`
//! act by right multiplication. Vertices are the cycles of `ρ`, edges the
//! cycles of `τ` (fixed darts are free edges) and faces the cycles of `ρτ`.

use std::collections::VecDeque;

use serde::Serialize;

use crate::automorphism::{extend_to_isomorphism, GroupMap};
use crate::coset::CosetSpace;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::monodromy::check_pair;
use crate::multigraph::Multigraph;
use crate::perm::Permutation;

#[derive(Debug, Clone)]
pub struct AlgebraicMap {
    group: FiniteGroup,
    stabilizer: Subgroup,
    rho: usize,
    tau: usize,
    darts: CosetSpace,
    rho_action: Permutation,
    tau_action: Permutation,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MapCounts {
    pub darts: usize,
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub euler: i64,
    /// Absent when the map has free edges.
    pub genus: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StructurePredicates {
    pub has_free_edges: bool,
    pub has_loops: bool,
    pub has_multiple_edges: bool,
    pub is_simple: bool,
}

impl StructurePredicates {
    fn new(has_free_edges: bool, has_loops: bool, has_multiple_edges: bool) -> Self {
        StructurePredicates {
            has_free_edges,
            has_loops,
            has_multiple_edges,
            is_simple: !(has_free_edges || has_loops || has_multiple_edges),
        }
    }
}

/// Witness for `M(G; U, ρ, τ) ≅ M(Ĝ; W, ρ̂, τ̂)`: a group isomorphism `σ` with
/// `ρ^σ = ρ̂`, `τ^σ = τ̂` and an element `y ∈ Ĝ` with `U^σ = y⁻¹ W y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapIsomorphism {
    pub sigma: GroupMap,
    pub y: usize,
}

impl AlgebraicMap {
    pub fn build(group: &FiniteGroup, stabilizer: &Subgroup, rho: &Permutation, tau: &Permutation) -> Result<Self> {
        let rho = group.locate(rho)?;
        let tau = group.locate(tau)?;
        Self::build_indexed(group, stabilizer, rho, tau)
    }

    pub fn build_indexed(group: &FiniteGroup, stabilizer: &Subgroup, rho: usize, tau: usize) -> Result<Self> {
        group.check(stabilizer)?;
        check_pair(group, rho, tau)?;
        let core = group.core(stabilizer).order();
        if core != 1 {
            return Err(Error::CoreNotTrivial { core_order: core });
        }
        let darts = CosetSpace::new(group, stabilizer)?;
        let map = AlgebraicMap {
            rho_action: darts.action_of(group, rho),
            tau_action: darts.action_of(group, tau),
            group: group.clone(),
            stabilizer: stabilizer.clone(),
            rho,
            tau,
            darts,
        };
        if !map.is_transitive() {
            return Err(Error::VerificationFailed("monodromy group is not transitive on darts".into()));
        }
        Ok(map)
    }

    fn is_transitive(&self) -> bool {
        let n = self.dart_count();
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        let mut count = 1;
        while let Some(d) = queue.pop_front() {
            for p in [&self.rho_action, &self.tau_action] {
                let e = p.apply(d);
                if !seen[e] {
                    seen[e] = true;
                    count += 1;
                    queue.push_back(e);
                }
            }
        }
        count == n
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

    pub fn darts(&self) -> &CosetSpace {
        &self.darts
    }

    pub fn dart_count(&self) -> usize {
        self.darts.len()
    }

    pub fn rho_action(&self) -> &Permutation {
        &self.rho_action
    }

    pub fn tau_action(&self) -> &Permutation {
        &self.tau_action
    }

    /// `ρτ` on darts: apply `ρ`, then `τ`.
    pub fn face_permutation(&self) -> Permutation {
        let face = &self.rho_action * &self.tau_action;
        let other = &self.tau_action * &self.rho_action;
        assert_eq!(face.cycle_count(), other.cycle_count(), "ρτ and τρ are conjugate");
        face
    }

    pub fn counts(&self) -> MapCounts {
        let vertices = self.rho_action.cycle_count();
        let edges = self.tau_action.cycle_count();
        let faces = self.face_permutation().cycle_count();
        let euler = vertices as i64 - edges as i64 + faces as i64;
        let has_free = (0..self.dart_count()).any(|d| self.tau_action.apply(d) == d);
        let genus = (!has_free && euler % 2 == 0 && euler <= 2).then(|| ((2 - euler) / 2) as usize);
        MapCounts {
            darts: self.dart_count(),
            vertices,
            edges,
            faces,
            euler,
            genus,
        }
    }

    /// Vertex (ρ-cycle) of every dart. Vertices are numbered by their
    /// smallest element, which is the order used for monodromy-graph vertices.
    fn vertex_of_dart(&self) -> (Vec<usize>, Vec<usize>) {
        let n = self.dart_count();
        let mut cycles: Vec<(usize, Vec<usize>)> = self
            .rho_action
            .cycles()
            .into_iter()
            .map(|c| {
                let darts: Vec<usize> = c.into_iter().map(|d| d - 1).collect();
                let min = darts.iter().map(|&d| self.darts.representative(d)).min().expect("nonempty cycle");
                (min, darts)
            })
            .collect();
        cycles.sort();
        let mut vertex = vec![0; n];
        for (v, (_, darts)) in cycles.iter().enumerate() {
            for &d in darts {
                vertex[d] = v;
            }
        }
        (vertex, cycles.into_iter().map(|(min, _)| min).collect())
    }

    /// The graph read off the darts: `ρ`-cycles are vertices, fixed points of
    /// `τ` free edges, and `τ`-transpositions loops or ordinary edges.
    /// Vertex labels match those of the monodromy graph.
    pub fn underlying_graph(&self) -> Multigraph {
        let (vertex, mins) = self.vertex_of_dart();
        let labels = mins.iter().map(|&g| self.group.element(g).to_string());
        let mut graph = Multigraph::new(labels).expect("distinct elements have distinct labels");
        for d in 0..self.dart_count() {
            let e = self.tau_action.apply(d);
            if e == d {
                graph.add_free_edges(vertex[d], 1).expect("vertex in range");
            } else if d < e {
                graph.add_edge(vertex[d], vertex[e]).expect("vertex in range");
            }
        }
        graph
    }

    /// Structure from the group-theoretic criteria: `g` runs over a right
    /// transversal of `U`, exponents over residues mod `|ρ|`.
    pub fn group_criteria(&self) -> StructurePredicates {
        let g = &self.group;
        let n = g.element_order(self.rho);
        let powers: Vec<usize> = (0..n).map(|i| g.pow(self.rho, i)).collect();
        let tau_rho: Vec<usize> = powers.iter().map(|&p| g.mul(self.tau, p)).collect();
        let (mut free, mut loops, mut multi) = (false, false, false);
        for &x in self.darts.transversal() {
            let ug = g.conjugate_subgroup(&self.stabilizer, x).expect("stabilizer belongs to the group");
            let tau_in = ug.contains(self.tau);
            free |= tau_in;
            let returns = tau_rho.iter().any(|&t| ug.contains(t));
            loops |= returns && !tau_in;
            if !returns && !multi {
                multi = (1..n).any(|i| {
                    let trt = g.mul(tau_rho[i], self.tau);
                    !ug.contains(trt) && (1..n).any(|j| ug.contains(g.mul(trt, powers[j])))
                });
            }
        }
        StructurePredicates::new(free, loops, multi)
    }

    /// Structure read from the underlying graph.
    pub fn dart_structure(&self) -> StructurePredicates {
        let graph = self.underlying_graph();
        let multi = graph.edge_multiplicities().any(|(_, m)| m > 1);
        StructurePredicates::new(graph.total_free_edges() > 0, graph.total_loops() > 0, multi)
    }

    /// Group criteria, checked against the darts.
    pub fn structure_predicates(&self) -> Result<StructurePredicates> {
        let by_group = self.group_criteria();
        let by_darts = self.dart_structure();
        let checks = [
            ("has_free_edges", by_group.has_free_edges, by_darts.has_free_edges),
            ("has_loops", by_group.has_loops, by_darts.has_loops),
            ("has_multiple_edges", by_group.has_multiple_edges, by_darts.has_multiple_edges),
            ("is_simple", by_group.is_simple, by_darts.is_simple),
        ];
        for (predicate, group, darts) in checks {
            if group != darts {
                return Err(Error::CriterionMismatch { predicate, group, darts });
            }
        }
        Ok(by_group)
    }

    /// `U = 1`, so the automorphism group is regular on darts.
    pub fn is_regular(&self) -> bool {
        self.stabilizer.is_trivial()
    }
}

/// Isomorphism test for algebraic maps.
///
/// Since `ρ, τ` generate, `σ` is forced by `ρ ↦ ρ̂, τ ↦ τ̂`; it remains to
/// find `y` conjugating `W` onto `U^σ`.
pub fn maps_isomorphic(m1: &AlgebraicMap, m2: &AlgebraicMap) -> Option<MapIsomorphism> {
    if m1.dart_count() != m2.dart_count() {
        return None;
    }
    let sigma = extend_to_isomorphism(&m1.group, &m2.group, &[m1.rho, m1.tau], &[m2.rho, m2.tau])?;
    let image: Vec<usize> = m1.stabilizer.elements().iter().map(|&u| sigma.apply(u)).collect();
    let u_sigma = m2.group.subgroup_generated(&image);
    let y = m2.group.conjugating_element(&m2.stabilizer, &u_sigma)?;
    Some(MapIsomorphism { sigma, y })
}

impl MapIsomorphism {
    /// The induced dart bijection `Ug ↦ W y g^σ`.
    pub fn dart_bijection(&self, m1: &AlgebraicMap, m2: &AlgebraicMap) -> Vec<usize> {
        m1.darts
            .transversal()
            .iter()
            .map(|&g| m2.darts.coset_of(m2.group.mul(self.y, self.sigma.apply(g))))
            .collect()
    }
}

/// One cell of a map census.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MapCensusEntry {
    pub stabilizer_class: usize,
    pub pair_class: usize,
    pub stabilizer_order: usize,
    #[serde(flatten)]
    pub counts: MapCounts,
    pub regular: bool,
    /// Vertex degrees, decreasing.
    pub degree_sequence: Vec<usize>,
    /// Ordinary-edge multiplicities, increasing.
    pub multiplicities: Vec<usize>,
    pub loops: usize,
    pub free_edges: usize,
    pub structure: StructurePredicates,
    pub planar_underlying: bool,
}

impl MapCensusEntry {
    pub fn new(stabilizer_class: usize, pair_class: usize, map: &AlgebraicMap) -> Result<Self> {
        let graph = map.underlying_graph();
        let mut degree_sequence = graph.degrees();
        degree_sequence.sort_unstable_by(|a, b| b.cmp(a));
        Ok(MapCensusEntry {
            stabilizer_class,
            pair_class,
            stabilizer_order: map.stabilizer.order(),
            counts: map.counts(),
            regular: map.is_regular(),
            degree_sequence,
            multiplicities: graph.multiplicity_multiset(),
            loops: graph.total_loops(),
            free_edges: graph.total_free_edges(),
            structure: map.structure_predicates()?,
            planar_underlying: graph.is_planar(),
        })
    }
}
