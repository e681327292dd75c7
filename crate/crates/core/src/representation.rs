//! Every connected graph is a monodromy graph.
//!
//! Give each edge one dart per end (a free edge has one dart), let `τ` swap
//! the two darts of every edge and fix free darts, and let `ρ` rotate the
//! darts around each vertex. With `G = ⟨ρ, τ⟩` and `U` the stabilizer of a
//! dart `α`, the map `vert(α^h) ↦ U h ⟨ρ⟩` is an isomorphism onto
//! `Mon(G; U, ρ, τ)`.

use crate::coset::point_coset_correspondence;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::monodromy::MonodromyGraph;
use crate::multigraph::{are_isomorphic, Multigraph, DEFAULT_ISO_BUDGET};
use crate::perm::Permutation;

/// Darts of a graph with their rotation and edge involution.
///
/// Darts are numbered edge by edge: ordinary edges in order (one pair per
/// parallel copy), then loops, then free edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DartSystem {
    pub rho: Permutation,
    pub tau: Permutation,
    /// Vertex carrying each dart.
    pub vertex: Vec<usize>,
}

impl DartSystem {
    /// `rotation[v]`, if given, is the cyclic order of the darts at `v`
    /// as a permutation of their default positions `0..deg(v)`.
    pub fn new(sigma: &Multigraph, rotation: Option<&[Vec<usize>]>) -> Result<DartSystem> {
        let n = sigma.vertex_count();
        let mut vertex = Vec::new();
        let mut tau = Vec::new();
        let mut pair = |vertex: &mut Vec<usize>, a: usize, b: usize| {
            let d = vertex.len();
            vertex.extend([a, b]);
            tau.extend([d + 1, d]);
        };
        for ((a, b), m) in sigma.edge_multiplicities() {
            for _ in 0..m {
                pair(&mut vertex, a, b);
            }
        }
        for v in 0..n {
            for _ in 0..sigma.loop_count(v) {
                pair(&mut vertex, v, v);
            }
        }
        for v in 0..n {
            for _ in 0..sigma.free_edge_count(v) {
                tau.push(vertex.len());
                vertex.push(v);
            }
        }

        let mut at: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (d, &v) in vertex.iter().enumerate() {
            at[v].push(d);
        }
        if let Some(rotation) = rotation {
            if rotation.len() != n {
                return Err(Error::InvalidRotation(format!("{} vertex orders for {n} vertices", rotation.len())));
            }
            for v in 0..n {
                let order = &rotation[v];
                let mut sorted = order.clone();
                sorted.sort_unstable();
                if sorted != (0..at[v].len()).collect::<Vec<_>>() {
                    return Err(Error::InvalidRotation(format!(
                        "order at vertex {:?} is not a permutation of 0..{}",
                        sigma.label(v),
                        at[v].len()
                    )));
                }
                at[v] = order.iter().map(|&i| at[v][i]).collect();
            }
        }
        let mut rho = vec![0; vertex.len()];
        for darts in &at {
            for (i, &d) in darts.iter().enumerate() {
                rho[d] = darts[(i + 1) % darts.len()];
            }
        }
        Ok(DartSystem {
            rho: Permutation::from_images(rho)?,
            tau: Permutation::from_images(tau)?,
            vertex,
        })
    }

    pub fn len(&self) -> usize {
        self.vertex.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertex.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct MonodromyRepresentation {
    pub darts: DartSystem,
    pub group: FiniteGroup,
    /// Stabilizer of dart 0.
    pub stabilizer: Subgroup,
    pub rho: usize,
    pub tau: usize,
    pub monodromy: MonodromyGraph,
    /// Vertex of the input graph to vertex of the monodromy graph.
    pub certificate: Vec<usize>,
}

/// Builds `(G, U, ρ, τ)` with `Mon(G; U, ρ, τ) ≅ sigma` and a checked
/// vertex isomorphism.
pub fn monodromy_representation(
    sigma: &Multigraph,
    rotation: Option<&[Vec<usize>]>,
    bound: usize,
) -> Result<MonodromyRepresentation> {
    if sigma.vertex_count() == 0 || sigma.dart_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !sigma.is_connected() {
        return Err(Error::NotConnected);
    }
    let darts = DartSystem::new(sigma, rotation)?;
    let group = FiniteGroup::generate(&[darts.rho.clone(), darts.tau.clone()], bound)?;
    let rho = group.locate(&darts.rho)?;
    let tau = group.locate(&darts.tau)?;
    let (stabilizer, cosets, coset_of_dart) = point_coset_correspondence(&group, 0)?;
    let monodromy = MonodromyGraph::build_indexed(&group, &stabilizer, rho, tau)?;

    let mut certificate = vec![usize::MAX; sigma.vertex_count()];
    for (d, &v) in darts.vertex.iter().enumerate() {
        let image = monodromy.vertex_of(cosets.representative(coset_of_dart[d]));
        if certificate[v] == usize::MAX {
            certificate[v] = image;
        } else if certificate[v] != image {
            return Err(Error::VerificationFailed(format!(
                "darts at vertex {:?} land in different double cosets",
                sigma.label(v)
            )));
        }
    }
    if !sigma.is_isomorphism(monodromy.graph(), &certificate) {
        return Err(Error::VerificationFailed("certificate is not a graph isomorphism".into()));
    }
    Ok(MonodromyRepresentation {
        darts,
        group,
        stabilizer,
        rho,
        tau,
        monodromy,
        certificate,
    })
}

impl MonodromyRepresentation {
    /// Independent check of the round trip by isomorphism search.
    pub fn round_trip_isomorphic(&self, sigma: &Multigraph) -> Result<bool> {
        Ok(are_isomorphic(sigma, self.monodromy.graph(), DEFAULT_ISO_BUDGET)?.is_some())
    }
}
