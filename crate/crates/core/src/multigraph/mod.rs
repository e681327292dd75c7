//! Graphs with loops, parallel edges and free edges.
//!
//! A free edge has a single endpoint and contributes one dart to the degree
//! of that endpoint; its other end is not a vertex. Free edges and loops are
//! kept as per-vertex counters, ordinary edges as multiplicities keyed by
//! vertex pairs.

use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};

mod export;
mod iso;
mod planar;

pub use export::{DOT_FREE_END_KIND, GraphJson};
pub use iso::{are_isomorphic, DEFAULT_ISO_BUDGET};
pub use planar::is_simple_planar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    labels: Vec<String>,
    edges: BTreeMap<(usize, usize), usize>,
    loops: Vec<usize>,
    free: Vec<usize>,
}

impl Multigraph {
    /// A graph on the given vertices with no edges. Labels must be distinct.
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Multigraph> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut sorted = labels.clone();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Parse(format!("duplicate vertex label {:?}", w[0])));
        }
        let n = labels.len();
        Ok(Multigraph {
            labels,
            edges: BTreeMap::new(),
            loops: vec![0; n],
            free: vec![0; n],
        })
    }

    /// Vertices labelled `0..n`.
    pub fn with_vertices(n: usize) -> Multigraph {
        Multigraph::new((0..n).map(|i| i.to_string())).expect("numeric labels are distinct")
    }

    /// Simple graph from an edge list on vertices `0..n`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Multigraph> {
        let mut g = Multigraph::with_vertices(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    fn check(&self, v: usize) -> Result<()> {
        if v < self.labels.len() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v.to_string()))
        }
    }

    /// Adds one edge; `u == v` adds a loop.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.add_edges(u, v, 1)
    }

    pub fn add_edges(&mut self, u: usize, v: usize, count: usize) -> Result<()> {
        self.check(u)?;
        self.check(v)?;
        if count == 0 {
            return Ok(());
        }
        if u == v {
            self.loops[u] += count;
        } else {
            *self.edges.entry((u.min(v), u.max(v))).or_insert(0) += count;
        }
        Ok(())
    }

    pub fn add_free_edges(&mut self, v: usize, count: usize) -> Result<()> {
        self.check(v)?;
        self.free[v] += count;
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Number of ordinary edges between `u` and `v`, or of loops when `u == v`.
    /// Free edges are never counted here; see [`free_edge_count`](Self::free_edge_count).
    pub fn multiplicity(&self, u: usize, v: usize) -> Result<usize> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.mult(u, v))
    }

    #[inline]
    pub(crate) fn mult(&self, u: usize, v: usize) -> usize {
        if u == v {
            self.loops[u]
        } else {
            self.edges.get(&(u.min(v), u.max(v))).copied().unwrap_or(0)
        }
    }

    pub fn loop_count(&self, v: usize) -> usize {
        self.loops[v]
    }

    pub fn free_edge_count(&self, v: usize) -> usize {
        self.free[v]
    }

    /// Ordinary (non-loop, non-free) edges as `((u, v), multiplicity)` with `u < v`.
    pub fn edge_multiplicities(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.edges.iter().map(|(&k, &m)| (k, m)).filter(|&(_, m)| m > 0)
    }

    pub fn ordinary_edge_count(&self) -> usize {
        self.edges.values().sum()
    }

    pub fn total_loops(&self) -> usize {
        self.loops.iter().sum()
    }

    pub fn total_free_edges(&self) -> usize {
        self.free.iter().sum()
    }

    /// All edges: ordinary, loops and free.
    pub fn edge_count(&self) -> usize {
        self.ordinary_edge_count() + self.total_loops() + self.total_free_edges()
    }

    /// Darts at `v`: a loop contributes two, a free edge one.
    pub fn degree(&self, v: usize) -> usize {
        let ordinary: usize = self
            .edges
            .iter()
            .filter(|((a, b), _)| *a == v || *b == v)
            .map(|(_, &m)| m)
            .sum();
        ordinary + 2 * self.loops[v] + self.free[v]
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.vertex_count())
            .map(|v| 2 * self.loops[v] + self.free[v])
            .collect();
        for (&(a, b), &m) in &self.edges {
            d[a] += m;
            d[b] += m;
        }
        d
    }

    pub fn dart_count(&self) -> usize {
        self.degrees().iter().sum()
    }

    /// Distinct neighbours of `v` other than `v` itself, increasing.
    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter(|(_, &m)| m > 0)
            .filter_map(|(&(a, b), _)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub(crate) fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for ((a, b), _) in self.edge_multiplicities() {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// Connected under ordinary edges. The empty graph and a single vertex
    /// count as connected; loops and free edges never matter.
    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n <= 1 {
            return true;
        }
        let adj = self.adjacency_lists();
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == n
    }

    /// Same vertices; multiplicities clamped to one, loops and free edges dropped.
    pub fn simplify(&self) -> Multigraph {
        Multigraph {
            labels: self.labels.clone(),
            edges: self.edge_multiplicities().map(|(k, _)| (k, 1)).collect(),
            loops: vec![0; self.vertex_count()],
            free: vec![0; self.vertex_count()],
        }
    }

    pub fn is_simple(&self) -> bool {
        self.total_loops() == 0 && self.total_free_edges() == 0 && self.edges.values().all(|&m| m <= 1)
    }

    /// Planar iff the simplified graph is planar.
    pub fn is_planar(&self) -> bool {
        is_simple_planar(&self.simplify())
    }

    /// Copy with vertex `v` moved to position `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Multigraph {
        let n = self.vertex_count();
        let mut labels = vec![String::new(); n];
        let mut loops = vec![0; n];
        let mut free = vec![0; n];
        for v in 0..n {
            labels[perm[v]] = self.labels[v].clone();
            loops[perm[v]] = self.loops[v];
            free[perm[v]] = self.free[v];
        }
        let edges = self
            .edges
            .iter()
            .map(|(&(a, b), &m)| {
                let (x, y) = (perm[a], perm[b]);
                ((x.min(y), x.max(y)), m)
            })
            .collect();
        Multigraph {
            labels,
            edges,
            loops,
            free,
        }
    }

    /// Does `map` (vertex of `self` to vertex of `other`) preserve every
    /// multiplicity, loop count and free-edge count?
    pub fn is_isomorphism(&self, other: &Multigraph, map: &[usize]) -> bool {
        let n = self.vertex_count();
        if other.vertex_count() != n || map.len() != n {
            return false;
        }
        let mut hit = vec![false; n];
        for &x in map {
            if x >= n || std::mem::replace(&mut hit[x], true) {
                return false;
            }
        }
        (0..n).all(|u| {
            self.loops[u] == other.loops[map[u]]
                && self.free[u] == other.free[map[u]]
                && (u + 1..n).all(|v| self.mult(u, v) == other.mult(map[u], map[v]))
        })
    }

    /// Sorted multiset of ordinary-edge multiplicities.
    pub fn multiplicity_multiset(&self) -> Vec<usize> {
        let mut m: Vec<usize> = self.edge_multiplicities().map(|(_, m)| m).collect();
        m.sort_unstable();
        m
    }
}
