//! One PASS/FAIL line per acceptance criterion, printed by a plain `main`
//! so the lines always show. All comparisons are exact: integer counts, set equality and
//! graph isomorphism, with no tolerance.

mod common;

use std::collections::BTreeSet;

use common::*;
use mongraph::algmap::AlgebraicMap;
use mongraph::automorphism::pairs_isomorphic;
use mongraph::enumeration::{corefree_classes, count_all_maps, pair_classes, standard_labelling};
use mongraph::families::GroupSpec;
use mongraph::monodromy::MonodromyGraph;
use mongraph::multigraph::{are_isomorphic, DEFAULT_ISO_BUDGET};
use mongraph::verify::{verify_group, RANDOM_TRANSVERSALS};

/// Maps with at most this many darts enter the dart-bijection comparison.
const MAP_ORACLE_MAX_DARTS: usize = 24;
/// Graph isomorphism is compared on every graph up to this order.
const ISO_ORACLE_MAX_VERTICES: usize = 7;
/// Planarity is compared on every graph up to this order.
const PLANAR_ORACLE_MAX_VERTICES: usize = 8;
/// Isomorphism classes of graphs on 1..=8 vertices.
const GRAPH_COUNTS: [usize; 8] = [1, 2, 4, 11, 34, 156, 1044, 12346];

/// Criteria that fail as stated, with the computed value that contradicts
/// them. The decisions ledger holds the full analysis.
const DOCUMENTED_FAILURES: [(usize, &str); 2] = [
    (5, "all 24 A5 census graphs are planar: rho3 = rho1^2, so the pair3 column repeats pair1"),
    (6, "the degree-5 vertices carry the loops and the middle edge is doubled"),
];

struct Outcome {
    criterion: usize,
    name: &'static str,
    failures: Vec<String>,
    checks: usize,
}

impl Outcome {
    fn new(criterion: usize, name: &'static str) -> Self {
        Outcome {
            criterion,
            name,
            failures: Vec::new(),
            checks: 0,
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn line(&self) -> String {
        if self.passed() {
            format!("PASS {} {}: {} checks", self.criterion, self.name, self.checks)
        } else {
            format!("FAIL {} {}: {}", self.criterion, self.name, self.failures.join("; "))
        }
    }
}

fn census_counts() -> Outcome {
    let mut o = Outcome::new(1, "census counts");
    for (name, m, n) in [("A4", 3, 1), ("S4", 7, 2), ("A5", 8, 3)] {
        let c = labelled_census(name);
        o.check((c.m(), c.n(), c.total()) == (m, n, m * n), || {
            format!("{name}: {}", c.summary())
        });
    }
    for (name, total) in [("A4", 3), ("S4", 14)] {
        let direct = count_all_maps(&group(name), false).unwrap();
        o.check(direct == total, || format!("{name}: direct deduplication gives {direct}"));
    }
    o
}

fn subgroup_classes() -> Outcome {
    let mut o = Outcome::new(2, "subgroup classification");
    for name in ["A4", "S4", "A5"] {
        let spec = GroupSpec::parse(name).unwrap();
        let g = spec.build(mongraph::group::DEFAULT_BOUND).unwrap();
        let lab = standard_labelling(&spec).unwrap();
        let classes = corefree_classes(&g);
        o.check(classes.len() == lab.subgroups.len(), || {
            format!("{name}: {} classes, {} listed", classes.len(), lab.subgroups.len())
        });
        let mut hit = BTreeSet::new();
        for i in 0..lab.subgroups.len() {
            let u = lab.subgroup(&g, i).unwrap();
            let matches: Vec<usize> = (0..classes.len())
                .filter(|&k| g.conjugating_element(&classes[k].representative, &u).is_some())
                .collect();
            o.check(matches.len() == 1 && hit.insert(matches[0]), || {
                format!("{name} U{}: conjugate to classes {matches:?}", i + 1)
            });
        }
    }
    o
}

fn a5_pairs() -> Outcome {
    let mut o = Outcome::new(3, "pair classification");
    let g = group("A5");
    let classes = pair_classes(&g, false);
    o.check(classes.len() == 3, || format!("{} pair classes", classes.len()));
    let listed = [
        ("(1,5,4,3,2)", "(1,2)(3,4)"),
        ("(1,5,4)", "(1,2)(3,4)"),
        ("(1,4,2,5,3)", "(1,2)(3,4)"),
    ];
    let mut hit = BTreeSet::new();
    for (rho, tau) in listed {
        let pair = (perm(&g, rho), perm(&g, tau));
        let matches: Vec<usize> = (0..classes.len())
            .filter(|&k| pairs_isomorphic(&g, pair, classes[k]).is_some())
            .collect();
        o.check(matches.len() == 1 && hit.insert(matches[0]), || {
            format!("{rho} {tau}: classes {matches:?}")
        });
    }
    o
}

fn platonic() -> Outcome {
    let mut o = Outcome::new(4, "platonic maps");
    let cases = [
        ("A5", "(1,5,4,3,2)", (12, 30, 20), "icosahedron"),
        ("A5", "(1,5,4)", (20, 30, 12), "dodecahedron"),
        ("A4", "(1,3,2)", (4, 6, 4), "tetrahedron"),
        ("S4", "(1,2,3,4)", (6, 12, 8), "octahedron"),
        ("S4", "(1,2,4)", (8, 12, 6), "cube"),
    ];
    for (name, rho, (v, e, f), solid) in cases {
        let g = group(name);
        let tau = if name == "S4" { "(2,3)" } else { "(1,2)(3,4)" };
        let map = AlgebraicMap::build_indexed(&g, &g.trivial(), perm(&g, rho), perm(&g, tau)).unwrap();
        let c = map.counts();
        o.check((c.vertices, c.edges, c.faces, c.genus) == (v, e, f, Some(0)), || {
            format!("{solid}: V={} E={} F={} genus={:?}", c.vertices, c.edges, c.faces, c.genus)
        });
        let iso = are_isomorphic(&map.underlying_graph(), &fixture(solid), DEFAULT_ISO_BUDGET).unwrap();
        o.check(iso.is_some(), || format!("{solid}: underlying graph differs from fixture"));
    }
    o
}

fn planar_atlas() -> Outcome {
    let mut o = Outcome::new(5, "planar atlas");
    let a5 = labelled_census("A5");
    let planar: BTreeSet<(usize, usize)> = a5
        .planar_atlas()
        .iter()
        .filter(|e| e.planar)
        .map(|e| (e.stabilizer_class + 1, e.pair_class + 1))
        .collect();
    let expected: BTreeSet<(usize, usize)> =
        (1..=8).flat_map(|i| (1..=2).map(move |j| (i, j))).chain([(5, 3), (7, 3)]).collect();
    o.check(planar.len() == 18, || format!("A5: {} of 24 planar", planar.len()));
    o.check(planar == expected, || {
        let extra: Vec<_> = planar.difference(&expected).collect();
        format!("A5: unexpected planar cells {extra:?}")
    });
    for (name, total) in [("A4", 3), ("S4", 14)] {
        let c = labelled_census(name);
        o.check(c.planar_count() == total, || format!("{name}: {} of {total} planar", c.planar_count()));
    }
    o
}

fn graph_shapes() -> Outcome {
    let mut o = Outcome::new(6, "shape checks");
    let g = group("A5");
    let u5 = g.subgroup_generated(&[perm(&g, "(1,5,2,4,3)")]);
    let mon = MonodromyGraph::build_indexed(&g, &u5, perm(&g, "(1,5,4,3,2)"), perm(&g, "(1,2)(3,4)")).unwrap();
    let graph = mon.graph();
    o.check(graph.vertex_count() == 4, || format!("A5 U5: {} vertices", graph.vertex_count()));
    o.check(graph.ordinary_edge_count() == 3, || {
        format!("A5 U5: {} non-loop edges", graph.ordinary_edge_count())
    });
    let simple = graph.simplify();
    let path_degrees: Vec<usize> = (0..simple.vertex_count()).map(|v| simple.degree(v)).collect();
    let is_path = simple.is_connected() && simple.ordinary_edge_count() == 3 && path_degrees.iter().all(|&d| d <= 2);
    o.check(is_path, || format!("A5 U5: not a path, degrees {path_degrees:?}"));
    let ends: Vec<usize> = (0..simple.vertex_count()).filter(|&v| path_degrees[v] == 1).collect();
    let looped: Vec<usize> = (0..graph.vertex_count()).filter(|&v| graph.loop_count(v) == 1).collect();
    o.check(ends == looped, || {
        format!(
            "A5 U5: loops at {:?}, path ends at {:?}",
            looped.iter().map(|&v| graph.label(v)).collect::<Vec<_>>(),
            ends.iter().map(|&v| graph.label(v)).collect::<Vec<_>>()
        )
    });

    let a4 = group("A4");
    let u2 = a4.subgroup_generated(&[perm(&a4, "(1,3)(2,4)")]);
    let mon = MonodromyGraph::build_indexed(&a4, &u2, perm(&a4, "(1,3,2)"), perm(&a4, "(1,2)(3,4)")).unwrap();
    let free = mon.graph().total_free_edges();
    o.check(free == 2, || format!("A4 U2: {free} free edges"));
    o
}

fn property_suites() -> Outcome {
    let mut o = Outcome::new(7, "property suites");
    o.check(RANDOM_TRANSVERSALS == 20, || format!("{RANDOM_TRANSVERSALS} random transversals"));
    for name in ["A4", "S4", "A5", "D8", "C6"] {
        let report = verify_group(&group(name), None).unwrap();
        for (s, line) in report.suites.iter().zip(report.lines()) {
            o.check(s.passed() && s.checks > 0, || format!("{name} {line}"));
        }
    }
    o
}

fn oracles() -> Outcome {
    let mut o = Outcome::new(8, "oracle equivalences");
    let maps = map_iso_oracle(&["A4", "S4", "A5", "D8", "C6"], MAP_ORACLE_MAX_DARTS);
    o.check(maps.passed(), || format!("maps: {:?}", maps.failure));
    o.checks += maps.checks;

    let levels = all_graphs(PLANAR_ORACLE_MAX_VERTICES);
    let counts: Vec<usize> = levels.iter().map(Vec::len).collect();
    o.check(counts == GRAPH_COUNTS, || format!("graph generator counts {counts:?}"));

    let iso = graph_iso_oracle(&levels, ISO_ORACLE_MAX_VERTICES);
    o.check(iso.passed(), || format!("isomorphism: {:?}", iso.failure));
    o.checks += iso.checks;

    let planar = planarity_oracle(&levels, PLANAR_ORACLE_MAX_VERTICES);
    o.check(planar.passed(), || format!("planarity: {:?}", planar.failure));
    o.checks += planar.checks;
    o
}

fn main() {
    documented_failures_are_stable();
    let outcomes = [
        census_counts(),
        subgroup_classes(),
        a5_pairs(),
        platonic(),
        planar_atlas(),
        graph_shapes(),
        property_suites(),
        oracles(),
    ];
    for o in &outcomes {
        println!("{}", o.line());
    }
    for o in outcomes.iter().filter(|o| !o.passed()) {
        let reason = DOCUMENTED_FAILURES.iter().find(|(c, _)| *c == o.criterion);
        match reason {
            Some((_, why)) => println!("  criterion {} fails as analysed: {why}", o.criterion),
            None => panic!("undocumented failure: {}", o.line()),
        }
    }
}

/// The computed values behind the documented failures, pinned so that a
/// change in either is noticed.
fn documented_failures_are_stable() {
    let a5 = labelled_census("A5");
    assert_eq!(a5.planar_count(), 24);
    let g = group("A5");
    let (rho1, rho3, tau) = (perm(&g, "(1,5,4,3,2)"), perm(&g, "(1,4,2,5,3)"), perm(&g, "(1,2)(3,4)"));
    assert_eq!(g.mul(rho1, rho1), rho3);
    for (i, class) in a5.corefree_classes().iter().enumerate() {
        let u = &class.representative;
        let first = MonodromyGraph::build_indexed(&g, u, rho1, tau).unwrap();
        let third = MonodromyGraph::build_indexed(&g, u, rho3, tau).unwrap();
        assert_eq!(first.graph(), third.graph());
        let iso = are_isomorphic(a5.underlying_graph(i, 0), a5.underlying_graph(i, 2), DEFAULT_ISO_BUDGET).unwrap();
        assert!(iso.is_some());
    }

    let u5 = g.subgroup_generated(&[perm(&g, "(1,5,2,4,3)")]);
    let mon = MonodromyGraph::build_indexed(&g, &u5, perm(&g, "(1,5,4,3,2)"), perm(&g, "(1,2)(3,4)")).unwrap();
    let graph = mon.graph();
    let mut shape: Vec<(usize, usize)> = (0..4).map(|v| (graph.degree(v), graph.loop_count(v))).collect();
    shape.sort();
    assert_eq!(shape, [(1, 0), (1, 0), (5, 1), (5, 1)]);
    assert_eq!(graph.multiplicity_multiset(), [1, 1, 2]);
}
