use std::collections::BTreeMap;

use super::Multigraph;
use crate::error::{Error, Result};

/// Default number of search nodes before [`are_isomorphic`] gives up.
pub const DEFAULT_ISO_BUDGET: u64 = 5_000_000;

/// Finds a vertex bijection `g1 → g2` preserving multiplicities, loop counts
/// and free-edge counts.
///
/// `Ok(None)` means the graphs are not isomorphic. Running out of budget is
/// an error, never a negative answer.
pub fn are_isomorphic(g1: &Multigraph, g2: &Multigraph, budget: u64) -> Result<Option<Vec<usize>>> {
    let n = g1.vertex_count();
    if n != g2.vertex_count()
        || g1.edge_count() != g2.edge_count()
        || g1.multiplicity_multiset() != g2.multiplicity_multiset()
    {
        return Ok(None);
    }
    let (c1, c2) = refine(g1, g2);
    let mut h1 = c1.clone();
    let mut h2 = c2.clone();
    h1.sort_unstable();
    h2.sort_unstable();
    if h1 != h2 {
        return Ok(None);
    }

    let order = search_order(g1, &c1);
    let mut search = Search {
        g1,
        g2,
        c1: &c1,
        c2: &c2,
        order: &order,
        map: vec![usize::MAX; n],
        used: vec![false; n],
        nodes: 0,
        budget,
    };
    if search.extend(0)? {
        Ok(Some(search.map))
    } else {
        Ok(None)
    }
}

/// Colour refinement run on both graphs at once so that colours are comparable.
fn refine(g1: &Multigraph, g2: &Multigraph) -> (Vec<usize>, Vec<usize>) {
    let graphs = [g1, g2];
    let mut colours: Vec<Vec<usize>> = Vec::new();
    let mut palette: BTreeMap<(usize, usize, usize), usize> = BTreeMap::new();
    for g in graphs {
        let degrees = g.degrees();
        let initial: Vec<(usize, usize, usize)> = (0..g.vertex_count())
            .map(|v| (degrees[v], g.loop_count(v), g.free_edge_count(v)))
            .collect();
        for &key in &initial {
            let next = palette.len();
            palette.entry(key).or_insert(next);
        }
        colours.push(initial.iter().map(|k| palette[k]).collect());
    }
    let mut classes = palette.len();
    loop {
        let mut palette: BTreeMap<(usize, Vec<(usize, usize)>), usize> = BTreeMap::new();
        let mut signatures = Vec::new();
        for (g, col) in graphs.iter().zip(&colours) {
            let sig: Vec<(usize, Vec<(usize, usize)>)> = (0..g.vertex_count())
                .map(|v| {
                    let mut around: Vec<(usize, usize)> =
                        g.neighbours(v).into_iter().map(|w| (col[w], g.mult(v, w))).collect();
                    around.sort_unstable();
                    (col[v], around)
                })
                .collect();
            signatures.push(sig);
        }
        for sig in &signatures {
            for s in sig {
                let next = palette.len();
                palette.entry(s.clone()).or_insert(next);
            }
        }
        let refined: Vec<Vec<usize>> = signatures
            .iter()
            .map(|sig| sig.iter().map(|s| palette[s]).collect())
            .collect();
        colours = refined;
        if palette.len() == classes {
            break;
        }
        classes = palette.len();
    }
    let c2 = colours.pop().unwrap_or_default();
    let c1 = colours.pop().unwrap_or_default();
    (c1, c2)
}

/// Small colour classes first, then vertices with many already-placed neighbours.
fn search_order(g: &Multigraph, colours: &[usize]) -> Vec<usize> {
    let n = g.vertex_count();
    let mut class_size = BTreeMap::new();
    for &c in colours {
        *class_size.entry(c).or_insert(0usize) += 1;
    }
    let adj = g.adjacency_lists();
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (std::cmp::Reverse(links[v]), class_size[&colours[v]], v))
            .expect("an unplaced vertex remains");
        placed[next] = true;
        order.push(next);
        for &w in &adj[next] {
            links[w] += 1;
        }
    }
    order
}

struct Search<'a> {
    g1: &'a Multigraph,
    g2: &'a Multigraph,
    c1: &'a [usize],
    c2: &'a [usize],
    order: &'a [usize],
    map: Vec<usize>,
    used: Vec<bool>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> Result<bool> {
        if depth == self.order.len() {
            return Ok(true);
        }
        let u = self.order[depth];
        for v in 0..self.g2.vertex_count() {
            if self.used[v] || self.c2[v] != self.c1[u] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::BudgetExceeded { budget: self.budget });
            }
            let consistent = self.order[..depth].iter().all(|&w| self.g1.mult(u, w) == self.g2.mult(v, self.map[w]));
            if !consistent {
                continue;
            }
            self.map[u] = v;
            self.used[v] = true;
            if self.extend(depth + 1)? {
                return Ok(true);
            }
            self.used[v] = false;
            self.map[u] = usize::MAX;
        }
        Ok(false)
    }
}
