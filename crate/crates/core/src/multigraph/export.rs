use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::Multigraph;
use crate::error::{Error, Result};

/// Value of the `kind` attribute on the synthetic node closing a free edge.
pub const DOT_FREE_END_KIND: &str = "free_end";

/// JSON form of a [`Multigraph`]:
/// `{"vertices":[..], "edges":[{"u":..,"v":..,"mult":k}], "loops":{v:k}, "free":{v:k}}`.
///
/// Edge endpoints and map keys are vertex labels. Zero counts are omitted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeJson>,
    #[serde(default)]
    pub loops: BTreeMap<String, usize>,
    #[serde(default)]
    pub free: BTreeMap<String, usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeJson {
    pub u: String,
    pub v: String,
    pub mult: usize,
}

impl From<&Multigraph> for GraphJson {
    fn from(g: &Multigraph) -> GraphJson {
        let counts = |c: &[usize]| {
            c.iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(v, &k)| (g.labels[v].clone(), k))
                .collect()
        };
        GraphJson {
            vertices: g.labels.clone(),
            edges: g
                .edge_multiplicities()
                .map(|((a, b), m)| EdgeJson {
                    u: g.labels[a].clone(),
                    v: g.labels[b].clone(),
                    mult: m,
                })
                .collect(),
            loops: counts(&g.loops),
            free: counts(&g.free),
        }
    }
}

impl TryFrom<GraphJson> for Multigraph {
    type Error = Error;

    fn try_from(j: GraphJson) -> Result<Multigraph> {
        let mut g = Multigraph::new(j.vertices)?;
        let find = |g: &Multigraph, l: &str| g.vertex_by_label(l).ok_or_else(|| Error::UnknownVertex(l.to_string()));
        for e in &j.edges {
            let (u, v) = (find(&g, &e.u)?, find(&g, &e.v)?);
            g.add_edges(u, v, e.mult)?;
        }
        for (l, &k) in &j.loops {
            let v = find(&g, l)?;
            g.add_edges(v, v, k)?;
        }
        for (l, &k) in &j.free {
            let v = find(&g, l)?;
            g.add_free_edges(v, k)?;
        }
        Ok(g)
    }
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

impl Multigraph {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&GraphJson::from(self)).expect("graph JSON serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Multigraph> {
        let j: GraphJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Multigraph::try_from(j)
    }

    /// Graphviz rendering. Parallel edges repeat, loops are self-edges, and
    /// every free edge ends in its own point node with `kind="free_end"`.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for l in &self.labels {
            let _ = writeln!(out, "  {};", quote(l));
        }
        for ((a, b), m) in self.edge_multiplicities() {
            for _ in 0..m {
                let _ = writeln!(out, "  {} -- {};", quote(&self.labels[a]), quote(&self.labels[b]));
            }
        }
        for (v, &k) in self.loops.iter().enumerate() {
            for _ in 0..k {
                let _ = writeln!(out, "  {} -- {};", quote(&self.labels[v]), quote(&self.labels[v]));
            }
        }
        for (v, &k) in self.free.iter().enumerate() {
            for i in 0..k {
                let end = quote(&format!("free:{}:{}", self.labels[v], i));
                let _ = writeln!(out, "  {end} [shape=point, kind=\"{DOT_FREE_END_KIND}\"];");
                let _ = writeln!(out, "  {} -- {end};", quote(&self.labels[v]));
            }
        }
        out.push_str("}\n");
        out
    }
}
