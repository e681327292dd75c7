//! Planarity of simple graphs.
//!
//! Each biconnected component is embedded incrementally: start from a cycle,
//! then repeatedly place a path of some fragment into a face that contains
//! all of the fragment's attachment vertices, always preferring a fragment
//! that fits into exactly one face. A fragment with no admissible face means
//! the component is not planar.

use std::collections::{HashSet, VecDeque};

use super::Multigraph;

/// Planarity of a graph read as simple (multiplicities, loops and free edges
/// are ignored).
pub fn is_simple_planar(g: &Multigraph) -> bool {
    let n = g.vertex_count();
    let edges: Vec<(usize, usize)> = g.edge_multiplicities().map(|(e, _)| e).collect();
    if n <= 4 || edges.len() <= 8 {
        return true;
    }
    if edges.len() > 3 * n - 6 {
        return false;
    }
    let adj = g.adjacency_lists();
    biconnected_components(n, &adj)
        .into_iter()
        .filter(|comp| comp.len() >= 9)
        .all(|comp| component_is_planar(&comp))
}

/// Edge sets of the biconnected components.
fn biconnected_components(n: usize, adj: &[Vec<usize>]) -> Vec<Vec<(usize, usize)>> {
    struct State<'a> {
        adj: &'a [Vec<usize>],
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        out: Vec<Vec<(usize, usize)>>,
    }

    fn visit(s: &mut State<'_>, v: usize, parent: usize) {
        s.time += 1;
        s.disc[v] = s.time;
        s.low[v] = s.time;
        for i in 0..s.adj[v].len() {
            let w = s.adj[v][i];
            if s.disc[w] == 0 {
                s.stack.push((v, w));
                visit(s, w, v);
                s.low[v] = s.low[v].min(s.low[w]);
                if s.low[w] >= s.disc[v] {
                    let mut comp = Vec::new();
                    while let Some(e) = s.stack.pop() {
                        comp.push(e);
                        if e == (v, w) {
                            break;
                        }
                    }
                    s.out.push(comp);
                }
            } else if w != parent && s.disc[w] < s.disc[v] {
                s.stack.push((v, w));
                s.low[v] = s.low[v].min(s.disc[w]);
            }
        }
    }

    let mut s = State {
        adj,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    for v in 0..n {
        if s.disc[v] == 0 {
            visit(&mut s, v, usize::MAX);
        }
    }
    s.out
}

enum Fragment {
    Chord(usize, usize),
    Component { vertices: Vec<usize>, attachments: Vec<usize> },
}

impl Fragment {
    fn attachments(&self) -> Vec<usize> {
        match self {
            Fragment::Chord(a, b) => vec![*a, *b],
            Fragment::Component { attachments, .. } => attachments.clone(),
        }
    }
}

fn component_is_planar(edges: &[(usize, usize)]) -> bool {
    // compact vertex numbering
    let mut ids: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    ids.sort_unstable();
    ids.dedup();
    let n = ids.len();
    let local = |v: usize| ids.binary_search(&v).expect("vertex of the component");
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        let (a, b) = (local(a), local(b));
        adj[a].push(b);
        adj[b].push(a);
    }
    if edges.len() > 3 * n - 6 {
        return false;
    }

    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    let mut on_vertex = vec![false; n];
    let mut on_edge: HashSet<(usize, usize)> = HashSet::new();

    // initial cycle through the first edge
    let (u, w) = (0, adj[0][0]);
    let path = match bfs_path(&adj, w, |x| x == u, |x, y| key(x, y) != key(u, w)) {
        Some(p) => p,
        None => return true,
    };
    let cycle = path;
    for i in 0..cycle.len() {
        on_vertex[cycle[i]] = true;
        on_edge.insert(key(cycle[i], cycle[(i + 1) % cycle.len()]));
    }
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle.into_iter().rev().collect()];

    loop {
        let fragments = fragments(&adj, &on_vertex, &on_edge);
        if fragments.is_empty() {
            return true;
        }
        let face_sets: Vec<HashSet<usize>> = faces.iter().map(|f| f.iter().copied().collect()).collect();
        let mut chosen: Option<(usize, usize)> = None;
        for (i, frag) in fragments.iter().enumerate() {
            let att = frag.attachments();
            let admissible: Vec<usize> = face_sets
                .iter()
                .enumerate()
                .filter(|(_, fs)| att.iter().all(|a| fs.contains(a)))
                .map(|(f, _)| f)
                .collect();
            match admissible.len() {
                0 => return false,
                1 => {
                    chosen = Some((i, admissible[0]));
                    break;
                }
                _ => {
                    if chosen.is_none() {
                        chosen = Some((i, admissible[0]));
                    }
                }
            }
        }
        let (fi, face) = chosen.expect("at least one fragment");
        let path = fragment_path(&adj, &on_vertex, &fragments[fi]);
        for i in 0..path.len() - 1 {
            on_edge.insert(key(path[i], path[i + 1]));
        }
        for &v in &path {
            on_vertex[v] = true;
        }
        let (f1, f2) = split_face(&faces[face], &path);
        faces[face] = f1;
        faces.push(f2);
    }
}

/// Shortest path from `start` to the first vertex satisfying `goal`, using
/// only edges accepted by `allowed`.
fn bfs_path(
    adj: &[Vec<usize>],
    start: usize,
    goal: impl Fn(usize) -> bool,
    allowed: impl Fn(usize, usize) -> bool,
) -> Option<Vec<usize>> {
    let mut prev = vec![usize::MAX; adj.len()];
    prev[start] = start;
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        if goal(x) {
            let mut path = vec![x];
            let mut cur = x;
            while cur != start {
                cur = prev[cur];
                path.push(cur);
            }
            return Some(path);
        }
        for &y in &adj[x] {
            if prev[y] == usize::MAX && allowed(x, y) {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}

fn fragments(adj: &[Vec<usize>], on_vertex: &[bool], on_edge: &HashSet<(usize, usize)>) -> Vec<Fragment> {
    let n = adj.len();
    let mut out = Vec::new();
    for a in 0..n {
        for &b in &adj[a] {
            if a < b && on_vertex[a] && on_vertex[b] && !on_edge.contains(&(a, b)) {
                out.push(Fragment::Chord(a, b));
            }
        }
    }
    let mut seen = vec![false; n];
    for s in 0..n {
        if on_vertex[s] || seen[s] {
            continue;
        }
        let mut vertices = vec![s];
        seen[s] = true;
        let mut attachments = Vec::new();
        let mut i = 0;
        while i < vertices.len() {
            let x = vertices[i];
            for &y in &adj[x] {
                if on_vertex[y] {
                    attachments.push(y);
                } else if !seen[y] {
                    seen[y] = true;
                    vertices.push(y);
                }
            }
            i += 1;
        }
        attachments.sort_unstable();
        attachments.dedup();
        out.push(Fragment::Component { vertices, attachments });
    }
    out
}

/// A path through the fragment joining two distinct attachment vertices.
fn fragment_path(adj: &[Vec<usize>], on_vertex: &[bool], frag: &Fragment) -> Vec<usize> {
    match frag {
        Fragment::Chord(a, b) => vec![*a, *b],
        Fragment::Component { vertices, attachments } => {
            let a = attachments[0];
            let inside: HashSet<usize> = vertices.iter().copied().collect();
            let start = *adj[a]
                .iter()
                .find(|y| inside.contains(y))
                .expect("attachment touches its fragment");
            let ends_elsewhere = |x: usize| adj[x].iter().any(|&y| on_vertex[y] && y != a);
            let mut path = bfs_path(adj, start, ends_elsewhere, |_, y| inside.contains(&y))
                .expect("a biconnected fragment has two attachments");
            path.reverse();
            let last = *path.last().expect("nonempty path");
            let b = *adj[last]
                .iter()
                .find(|&&y| on_vertex[y] && y != a)
                .expect("checked by the goal predicate");
            let mut full = vec![a];
            full.extend(path);
            full.push(b);
            full
        }
    }
}

/// Splits a face along a path whose end vertices lie on it.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let a = path[0];
    let b = *path.last().expect("path has two ends");
    let len = face.len();
    let i = face.iter().position(|&v| v == a).expect("path starts on the face");
    let j = face.iter().position(|&v| v == b).expect("path ends on the face");
    let walk = |from: usize, to: usize| {
        let mut out = vec![face[from]];
        let mut k = from;
        while k != to {
            k = (k + 1) % len;
            out.push(face[k]);
        }
        out
    };
    let interior = &path[1..path.len() - 1];
    let mut f1 = walk(i, j);
    f1.extend(interior.iter().rev());
    let mut f2 = walk(j, i);
    f2.extend(interior.iter());
    (f1, f2)
}
