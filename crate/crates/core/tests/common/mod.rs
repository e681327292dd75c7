//! Oracles shared by the integration tests. Everything here is deliberately
//! naive: brute force over dart bijections, vertex permutations and
//! Kuratowski subdivisions.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};

use mongraph::algmap::AlgebraicMap;
use mongraph::enumeration::{build_census, corefree_classes, pair_classes, standard_labelling, Census};
use mongraph::families::GroupSpec;
use mongraph::group::{FiniteGroup, DEFAULT_BOUND};
use mongraph::multigraph::Multigraph;
use mongraph::perm::Permutation;

pub fn group(name: &str) -> FiniteGroup {
    GroupSpec::parse(name).unwrap().build(DEFAULT_BOUND).unwrap()
}

pub fn perm(g: &FiniteGroup, s: &str) -> usize {
    g.locate(&Permutation::parse(s, Some(g.degree())).unwrap()).unwrap()
}

pub fn labelled_census(name: &str) -> Census {
    let spec = GroupSpec::parse(name).unwrap();
    let g = spec.build(DEFAULT_BOUND).unwrap();
    build_census(&g, name, standard_labelling(&spec).as_ref(), false).unwrap()
}

/// Reference adjacency list shipped under `tests/fixtures`.
pub fn fixture(name: &str) -> Multigraph {
    let path = format!("{}/tests/fixtures/{name}.json", env!("CARGO_MANIFEST_DIR"));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let n = v["vertices"].as_u64().unwrap() as usize;
    let edges: Vec<(usize, usize)> = v["edges"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| (e[0].as_u64().unwrap() as usize, e[1].as_u64().unwrap() as usize))
        .collect();
    Multigraph::from_edges(n, &edges).unwrap()
}

// ---------------------------------------------------------------- maps

/// A dart bijection `f` with `f(dρ) = f(d)ρ̂` and `f(dτ) = f(d)τ̂`, found by
/// trying every image of dart 0 and propagating.
pub fn brute_force_map_iso(m1: &AlgebraicMap, m2: &AlgebraicMap) -> Option<Vec<usize>> {
    let n = m1.dart_count();
    if n != m2.dart_count() {
        return None;
    }
    let (r1, t1) = (m1.rho_action(), m1.tau_action());
    let (r2, t2) = (m2.rho_action(), m2.tau_action());
    'start: for target in 0..n {
        let mut f = vec![usize::MAX; n];
        let mut used = vec![false; n];
        f[0] = target;
        used[target] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(d) = queue.pop_front() {
            for (p, q) in [(r1, r2), (t1, t2)] {
                let (e, img) = (p.apply(d), q.apply(f[d]));
                if f[e] == usize::MAX {
                    if used[img] {
                        continue 'start;
                    }
                    f[e] = img;
                    used[img] = true;
                    queue.push_back(e);
                } else if f[e] != img {
                    continue 'start;
                }
            }
        }
        if !f.contains(&usize::MAX) {
            return Some(f);
        }
    }
    None
}

/// Every census map of the group plus, for each, a copy with a conjugated
/// stabilizer and a copy moved by an outer or inner automorphism, restricted
/// to at most `max_darts` darts.
pub fn map_pool(names: &[&str], max_darts: usize) -> Vec<(String, AlgebraicMap)> {
    let mut out = Vec::new();
    for name in names {
        let g = group(name);
        let last = g.order() - 1;
        let auts = mongraph::automorphism::automorphism_group(&g);
        let sigma = auts.last().unwrap().clone();
        for (i, class) in corefree_classes(&g).iter().enumerate() {
            if g.order() / class.order() > max_darts {
                continue;
            }
            let u = &class.representative;
            for (j, &(rho, tau)) in pair_classes(&g, false).iter().enumerate() {
                let m = AlgebraicMap::build_indexed(&g, u, rho, tau).unwrap();
                out.push((format!("{name} U{i} p{j}"), m));
                let conj = g.conjugate_subgroup(u, last).unwrap();
                out.push((
                    format!("{name} U{i}^g p{j}"),
                    AlgebraicMap::build_indexed(&g, &conj, rho, tau).unwrap(),
                ));
                let image: Vec<usize> = u.elements().iter().map(|&x| sigma.apply(x)).collect();
                let moved = g.subgroup_generated(&image);
                out.push((
                    format!("{name} σ(U{i}) σ(p{j})"),
                    AlgebraicMap::build_indexed(&g, &moved, sigma.apply(rho), sigma.apply(tau)).unwrap(),
                ));
            }
        }
    }
    out
}

// ---------------------------------------------------------------- small graphs

/// Simple graph on at most 8 vertices as adjacency bitmasks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SmallGraph {
    pub n: usize,
    pub adj: [u8; 8],
}

impl SmallGraph {
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in a + 1..self.n {
                if self.adj[a] >> b & 1 == 1 {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj[..self.n].iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn to_multigraph(self) -> Multigraph {
        Multigraph::from_edges(self.n, &self.edges()).unwrap()
    }

    /// Vertex `v` moved to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> SmallGraph {
        let mut adj = [0u8; 8];
        for (a, b) in self.edges() {
            adj[perm[a]] |= 1 << perm[b];
            adj[perm[b]] |= 1 << perm[a];
        }
        SmallGraph { n: self.n, adj }
    }

    /// Upper-triangle adjacency bits read in the vertex order `order`.
    fn code(&self, order: &[usize]) -> u32 {
        let mut code = 0u32;
        for i in 0..self.n {
            for j in i + 1..self.n {
                code = code << 1 | (self.adj[order[i]] >> order[j] & 1) as u32;
            }
        }
        code
    }
}

/// Calls `visit` with every permutation of `items` (Heap's algorithm).
fn for_each_permutation(items: &mut [usize], visit: &mut dyn FnMut(&[usize])) {
    fn heap(k: usize, items: &mut [usize], visit: &mut dyn FnMut(&[usize])) {
        if k <= 1 {
            visit(items);
            return;
        }
        for i in 0..k - 1 {
            heap(k - 1, items, visit);
            if k.is_multiple_of(2) {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
        heap(k - 1, items, visit);
    }
    let k = items.len();
    heap(k, items, visit);
}

/// Maximal code over all `n!` vertex orders.
pub fn brute_force_canonical(g: &SmallGraph) -> u32 {
    let mut order: Vec<usize> = (0..g.n).collect();
    let mut best = 0;
    for_each_permutation(&mut order, &mut |o| best = best.max(g.code(o)));
    best
}

/// Maximal code over the vertex orders that list the classes of iterated
/// degree refinement in colour order. A canonical form, but its values are
/// not comparable with [`brute_force_canonical`].
fn refined_canonical(g: &SmallGraph) -> u32 {
    let n = g.n;
    let mut colour: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut around: Vec<usize> = (0..n).filter(|&w| g.adj[v] >> w & 1 == 1).map(|w| colour[w]).collect();
                around.sort_unstable();
                (colour[v], around)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs.iter().map(|s| distinct.binary_search(s).unwrap()).collect();
        let before: HashSet<usize> = colour.iter().copied().collect();
        let stable = distinct.len() == before.len();
        colour = next;
        if stable {
            break;
        }
    }
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let mut by_colour: Vec<usize> = (0..n).collect();
    by_colour.sort_by_key(|&v| colour[v]);
    for v in by_colour {
        match cells.last_mut() {
            Some(cell) if colour[cell[0]] == colour[v] => cell.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let mut best = 0;
    let mut prefix = Vec::with_capacity(n);
    fn walk(g: &SmallGraph, cells: &mut [Vec<usize>], k: usize, prefix: &mut Vec<usize>, best: &mut u32) {
        if k == cells.len() {
            *best = (*best).max(g.code(prefix));
            return;
        }
        let mut cell = cells[k].clone();
        for_each_permutation(&mut cell, &mut |p| {
            let len = prefix.len();
            prefix.extend_from_slice(p);
            walk(g, cells, k + 1, prefix, best);
            prefix.truncate(len);
        });
    }
    walk(g, &mut cells, 0, &mut prefix, &mut best);
    best
}

/// One representative of every isomorphism class of simple graphs on
/// `n` vertices, for `n` in `1..=max_n`; index `n - 1` holds order `n`.
pub fn all_graphs(max_n: usize) -> Vec<Vec<SmallGraph>> {
    assert!(max_n <= 8);
    let mut levels = vec![vec![SmallGraph { n: 1, adj: [0; 8] }]];
    for n in 2..=max_n {
        let mut seen = HashSet::new();
        let mut level = Vec::new();
        for g in &levels[n - 2] {
            for mask in 0u16..(1 << (n - 1)) {
                let mut h = *g;
                h.n = n;
                for v in 0..n - 1 {
                    if mask >> v & 1 == 1 {
                        h.adj[v] |= 1 << (n - 1);
                        h.adj[n - 1] |= 1 << v;
                    }
                }
                if seen.insert(refined_canonical(&h)) {
                    level.push(h);
                }
            }
        }
        levels.push(level);
    }
    levels
}

// ---------------------------------------------------------------- Kuratowski

/// Does `g` contain a subdivision of K5 or K3,3?
pub fn has_kuratowski_subdivision(g: &SmallGraph) -> bool {
    let n = g.n;
    if n < 5 || g.edge_count() < 9 {
        return false;
    }
    let vertices: Vec<usize> = (0..n).collect();
    for branch in subsets(&vertices, 5) {
        if branch.iter().all(|&v| g.degree(v) >= 4) {
            let pairs: Vec<(usize, usize)> = (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect();
            let pairs: Vec<(usize, usize)> = pairs.iter().map(|&(i, j)| (branch[i], branch[j])).collect();
            if route(g, &pairs, spare_mask(n, &branch)) {
                return true;
            }
        }
    }
    for six in subsets(&vertices, 6) {
        if !six.iter().all(|&v| g.degree(v) >= 3) {
            continue;
        }
        // six[0] is on side A with two of the other five
        for others in subsets(&six[1..], 2) {
            let side_a = [six[0], others[0], others[1]];
            let side_b: Vec<usize> = six.iter().copied().filter(|v| !side_a.contains(v)).collect();
            let pairs: Vec<(usize, usize)> = side_a.iter().flat_map(|&a| side_b.iter().map(move |&b| (a, b))).collect();
            if route(g, &pairs, spare_mask(n, &six)) {
                return true;
            }
        }
    }
    false
}

fn spare_mask(n: usize, branch: &[usize]) -> u8 {
    let mut mask = ((1u16 << n) - 1) as u8;
    for &b in branch {
        mask &= !(1 << b);
    }
    mask
}

/// Internally disjoint paths joining every pair, interiors drawn from `spare`.
fn route(g: &SmallGraph, pairs: &[(usize, usize)], spare: u8) -> bool {
    let Some((&(a, b), rest)) = pairs.split_first() else {
        return true;
    };
    let mut found = false;
    paths(g, a, b, spare, 0, &mut |used| {
        if !found && route(g, rest, spare & !used) {
            found = true;
        }
    });
    found
}

/// Calls `visit` with the interior of every simple path from `at` to `to`.
fn paths(g: &SmallGraph, at: usize, to: usize, spare: u8, used: u8, visit: &mut dyn FnMut(u8)) {
    if g.adj[at] >> to & 1 == 1 {
        visit(used);
    }
    let mut next = g.adj[at] & spare & !used;
    while next != 0 {
        let w = next.trailing_zeros() as usize;
        next &= next - 1;
        paths(g, w, to, spare, used | 1 << w, visit);
    }
}

fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if items.len() < k {
        return vec![];
    }
    let mut out = subsets(&items[1..], k);
    for mut s in subsets(&items[1..], k - 1) {
        s.insert(0, items[0]);
        out.push(s);
    }
    out
}

/// Deterministic pseudo-random permutation of `0..n`.
pub fn shuffled(n: usize, seed: u64) -> Vec<usize> {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
    v
}

/// Multiset of codes, for quick diagnostics.
pub fn histogram<T: std::hash::Hash + Eq>(items: impl IntoIterator<Item = T>) -> HashMap<T, usize> {
    let mut h = HashMap::new();
    for x in items {
        *h.entry(x).or_insert(0) += 1;
    }
    h
}

// ---------------------------------------------------------------- drivers

/// Number of comparisons made and the first disagreement, if any.
#[derive(Debug, Default)]
pub struct OracleOutcome {
    pub checks: usize,
    pub failure: Option<String>,
}

impl OracleOutcome {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// `maps_isomorphic` against the dart-bijection search on every pair of the pool.
pub fn map_iso_oracle(names: &[&str], max_darts: usize) -> OracleOutcome {
    use mongraph::algmap::maps_isomorphic;
    let pool = map_pool(names, max_darts);
    let mut out = OracleOutcome::default();
    for (a, (n1, m1)) in pool.iter().enumerate() {
        for (n2, m2) in &pool[a..] {
            let fast = maps_isomorphic(m1, m2);
            let slow = brute_force_map_iso(m1, m2);
            out.check(fast.is_some() == slow.is_some(), || {
                format!("{n1} vs {n2}: (σ, y) says {}, brute force says {}", fast.is_some(), slow.is_some())
            });
            if let Some(iso) = fast {
                let f = iso.dart_bijection(m1, m2);
                out.check(brute_force_is_map_iso(m1, m2, &f), || format!("{n1} vs {n2}: dart bijection does not intertwine"));
            }
        }
    }
    out
}

fn brute_force_is_map_iso(m1: &AlgebraicMap, m2: &AlgebraicMap, f: &[usize]) -> bool {
    let mut seen = vec![false; f.len()];
    f.iter().all(|&x| !std::mem::replace(&mut seen[x], true))
        && (0..f.len()).all(|d| {
            f[m1.rho_action().apply(d)] == m2.rho_action().apply(f[d]) && f[m1.tau_action().apply(d)] == m2.tau_action().apply(f[d])
        })
}

/// `are_isomorphic` against `n!` canonical forms: every pair of distinct
/// classes with equal size must be rejected, and every class must match a
/// shuffled copy of itself.
pub fn graph_iso_oracle(levels: &[Vec<SmallGraph>], max_n: usize) -> OracleOutcome {
    use mongraph::multigraph::{are_isomorphic, DEFAULT_ISO_BUDGET};
    let mut out = OracleOutcome::default();
    for level in &levels[..max_n] {
        let canon: Vec<u32> = level.iter().map(brute_force_canonical).collect();
        let distinct: HashSet<u32> = canon.iter().copied().collect();
        out.check(distinct.len() == level.len(), || "generator produced isomorphic duplicates".into());
        let multi: Vec<Multigraph> = level.iter().map(|g| g.to_multigraph()).collect();
        for (a, g) in level.iter().enumerate() {
            let h = g.relabel(&shuffled(g.n, a as u64));
            let iso = are_isomorphic(&multi[a], &h.to_multigraph(), DEFAULT_ISO_BUDGET).unwrap();
            out.check(iso.as_ref().is_some_and(|m| multi[a].is_isomorphism(&h.to_multigraph(), m)), || {
                format!("graph {:?} not matched with a shuffled copy", g.edges())
            });
            for b in a + 1..level.len() {
                if level[b].edge_count() != g.edge_count() {
                    continue;
                }
                let iso = are_isomorphic(&multi[a], &multi[b], DEFAULT_ISO_BUDGET).unwrap();
                out.check(iso.is_some() == (canon[a] == canon[b]), || {
                    format!("{:?} vs {:?}: are_isomorphic says {}", g.edges(), level[b].edges(), iso.is_some())
                });
            }
        }
    }
    out
}

/// `is_planar` against the Kuratowski subdivision search.
pub fn planarity_oracle(levels: &[Vec<SmallGraph>], max_n: usize) -> OracleOutcome {
    let mut out = OracleOutcome::default();
    for level in &levels[..max_n] {
        for g in level {
            let fast = g.to_multigraph().is_planar();
            let slow = !has_kuratowski_subdivision(g);
            out.check(fast == slow, || format!("{:?}: is_planar {fast}, Kuratowski search {slow}", g.edges()));
        }
    }
    out
}
