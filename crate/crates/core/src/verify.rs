//! Property suites run against a single group.
//!
//! | suite | check |
//! |-------|-------|
//! | a | double-coset sizes sum to `|G|` for every pair of subgroup classes |
//! | b | valency formula equals degree, neighbourhood equals adjacency |
//! | c | rebuilding over 20 random transversals gives the same graph |
//! | d | underlying graph of the map equals the monodromy graph |
//! | e | group criteria for free edges, loops, multi-edges agree with the darts |
//! | f | every `a_L` is an automorphism; for `U = 1` arcs form one orbit |
//! | g | monodromy representations of small graphs round-trip |

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algmap::AlgebraicMap;
use crate::coset::DoubleCosetDecomposition;
use crate::enumeration::{corefree_classes, pair_classes};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, DEFAULT_BOUND};
use crate::monodromy::{check_pair, MonodromyGraph};
use crate::multigraph::{are_isomorphic, Multigraph, DEFAULT_ISO_BUDGET};
use crate::representation::monodromy_representation;
use crate::subgroups::all_subgroup_classes;

pub const RANDOM_TRANSVERSALS: usize = 20;
pub const SEED: u64 = 0x6d6f6e;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteResult {
    pub suite: char,
    pub name: &'static str,
    pub checks: usize,
    /// First failure, if any.
    pub failure: Option<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub suites: Vec<SuiteResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::passed)
    }

    pub fn lines(&self) -> Vec<String> {
        self.suites
            .iter()
            .map(|s| match &s.failure {
                None => format!("PASS ({}) {}: {} checks", s.suite, s.name, s.checks),
                Some(f) => format!("FAIL ({}) {}: {}", s.suite, s.name, f),
            })
            .collect()
    }
}

struct Suite {
    result: SuiteResult,
}

impl Suite {
    fn new(suite: char, name: &'static str) -> Self {
        Suite {
            result: SuiteResult {
                suite,
                name,
                checks: 0,
                failure: None,
            },
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.result.checks += 1;
        if !ok && self.result.failure.is_none() {
            self.result.failure = Some(what());
        }
    }

    /// Errors from the library count as failures, except bound errors.
    fn absorb<T>(&mut self, r: Result<T>) -> Result<Option<T>> {
        match r {
            Ok(v) => Ok(Some(v)),
            Err(e @ (Error::BudgetExceeded { .. } | Error::ClosureExceedsBound { .. })) => Err(e),
            Err(e) => {
                self.check(false, || e.to_string());
                Ok(None)
            }
        }
    }
}

/// Runs every suite on `group`. With `pair`, only that `(ρ, τ)` is used;
/// otherwise one representative of every pair class.
pub fn verify_group(group: &FiniteGroup, pair: Option<(usize, usize)>) -> Result<VerifyReport> {
    let pairs = match pair {
        Some((rho, tau)) => {
            check_pair(group, rho, tau)?;
            vec![(rho, tau)]
        }
        None => pair_classes(group, false),
    };
    let all = all_subgroup_classes(group);
    let corefree = corefree_classes(group);

    let mut a = Suite::new('a', "double-coset sizes");
    for u in &all {
        for v in &all {
            if let Some(dc) = a.absorb(DoubleCosetDecomposition::new(group, &u.representative, &v.representative))? {
                let total: usize = dc.blocks().iter().map(|b| b.size).sum();
                a.check(total == group.order(), || {
                    format!("blocks of |U|={} |V|={} sum to {total}", u.order(), v.order())
                });
            }
        }
    }

    let mut b = Suite::new('b', "valency and neighbourhood");
    let mut c = Suite::new('c', "transversal independence");
    let mut d = Suite::new('d', "underlying graph");
    let mut e = Suite::new('e', "structure criteria");
    let mut f = Suite::new('f', "map automorphisms");
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut maps_checked = 0;

    for class in &all {
        let u = &class.representative;
        for &(rho, tau) in &pairs {
            let Some(mon) = b.absorb(MonodromyGraph::build_indexed(group, u, rho, tau))? else {
                continue;
            };
            let degrees = mon.graph().degrees();
            for block in mon.double_cosets().blocks() {
                let h = block.representative;
                let v = mon.vertex_of(h);
                b.check(mon.valency_indexed(h) == degrees[v], || {
                    format!("|U|={} vertex {}: formula {} degree {}", u.order(), mon.graph().label(v), mon.valency_indexed(h), degrees[v])
                });
                b.check(mon.neighborhood_indexed(h) == mon.graph_adjacency(v), || {
                    format!("neighbourhood of {} differs from adjacency", mon.graph().label(v))
                });
            }
            for _ in 0..RANDOM_TRANSVERSALS {
                let t = mon.random_transversal(&mut rng);
                if let Some(same) = c.absorb(mon.transversal_independence_check(&t))? {
                    c.check(same, || format!("|U|={}: graph changed under a random transversal", u.order()));
                }
            }
            if !mon.is_core_free() {
                continue;
            }
            let Some(map) = d.absorb(AlgebraicMap::build_indexed(group, u, rho, tau))? else {
                continue;
            };
            maps_checked += 1;
            let under = map.underlying_graph();
            d.check(&under == mon.graph(), || format!("|U|={}: underlying graph differs", u.order()));
            let iso = are_isomorphic(&under, mon.graph(), DEFAULT_ISO_BUDGET)?;
            d.check(iso.is_some(), || format!("|U|={}: underlying graph not isomorphic", u.order()));
            if let Some(s) = e.absorb(map.structure_predicates())? {
                e.check(s == map.dart_structure(), || "predicates disagree".into());
            }
            if let Some(auts) = f.absorb(mon.left_automorphisms())? {
                f.check(auts.composition_law_holds(), || "composition law fails".into());
                if u.is_trivial() {
                    f.check(auts.is_arc_transitive(), || "U = 1 but arcs form several orbits".into());
                }
            }
        }
    }
    let cells = corefree.len() * pairs.len();
    d.check(maps_checked == cells, || format!("{maps_checked} of {cells} census cells checked"));

    let mut g = Suite::new('g', "monodromy representation");
    for (name, sigma) in representation_examples() {
        if let Some(r) = g.absorb(monodromy_representation(&sigma, None, DEFAULT_BOUND))? {
            g.check(sigma.is_isomorphism(r.monodromy.graph(), &r.certificate), || format!("{name}: bad certificate"));
            let iso = are_isomorphic(&sigma, r.monodromy.graph(), DEFAULT_ISO_BUDGET)?;
            g.check(iso.is_some(), || format!("{name}: round trip not isomorphic"));
        }
    }

    Ok(VerifyReport {
        suites: [a, b, c, d, e, f, g].into_iter().map(|s| s.result).collect(),
    })
}

/// K2, K3, the path on four vertices with a loop at each end, and K4.
pub fn representation_examples() -> Vec<(&'static str, Multigraph)> {
    let complete = |n: usize| {
        let edges: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        Multigraph::from_edges(n, &edges).expect("valid edges")
    };
    let mut p4 = Multigraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).expect("valid edges");
    p4.add_edge(0, 0).expect("vertex 0");
    p4.add_edge(3, 3).expect("vertex 3");
    vec![("K2", complete(2)), ("K3", complete(3)), ("P4 with end loops", p4), ("K4", complete(4))]
}
