//! End-to-end acceptance suite: round trips between the linear models, the
//! star recognizer against exhaustive search, synthesis, named instances,
//! the NeS closure rules, the X-interval test, large-instance timing and
//! exactness.
//!
//! The machine this runs on may have a single core, so every test holds
//! `SERIAL` to keep wall-clock budgets meaningful.

use std::sync::{Mutex, MutexGuard};
use std::time::{Duration, Instant};

use rand::Rng;

use leafpower::chordal::{chordality, is_chordal, maximal_cliques, Chordality};
use leafpower::interval::{is_x_interval, is_x_interval_on};
use leafpower::linear::{
    bluered_to_linear_leafroot, linear_leafroot_to_bluered, normalize_bluered, verify_bluered_model, verify_linear_leafroot,
};
use leafpower::nes::{merge_at_cut_vertex, verify_nes_model};
use leafpower::oracle::enumerate::connected_chordal_masks;
use leafpower::oracle::enumerate::graph_from_masks;
use leafpower::oracle::{self, ClosureRule};
use leafpower::star::{
    check_reach_conditions, find_good_partition, find_good_partition_detailed, is_good_permutation, synthesize_star_model,
    validate_good_partition, verify_star_model, StarOutcome,
};
use leafpower::{Graph, VertexSet};
use leafpower_cli as cli;

static SERIAL: Mutex<()> = Mutex::new(());

fn serial() -> MutexGuard<'static, ()> {
    SERIAL.lock().unwrap_or_else(|e| e.into_inner())
}

fn path(n: usize) -> Graph {
    let names: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
    let edges: Vec<(String, String)> = (1..n).map(|i| (names[i - 1].clone(), names[i].clone())).collect();
    Graph::new(names, edges).unwrap()
}

fn graph(vertices: &str, edges: &[(&str, &str)]) -> Graph {
    Graph::new(vertices.split(' '), edges.iter().copied()).unwrap()
}

fn three_sun() -> Graph {
    graph("x y z a b c", &[("x", "y"), ("y", "z"), ("x", "z"), ("a", "x"), ("a", "y"), ("b", "y"), ("b", "z"), ("c", "x"), ("c", "z")])
}

fn c4() -> Graph {
    graph("a b c d", &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])
}

#[test]
fn c01_bluered_to_linear_leafroot_round_trip() {
    let _guard = serial();
    let start = Instant::now();
    for seed in 0..1000u64 {
        let n = 1 + (seed % 30) as usize;
        let (g, m) = oracle::gen_bluered(seed, n);
        assert!(verify_bluered_model(&g, &m).unwrap().is_valid(), "seed {seed}: generator");
        let root = bluered_to_linear_leafroot(&g, &normalize_bluered(&m)).unwrap_or_else(|e| panic!("seed {seed}: {e}"));
        let report = verify_linear_leafroot(&g, &root).unwrap();
        assert!(report.is_valid(), "seed {seed}: {:?}", report.discrepancies);
    }
    assert!(start.elapsed() < Duration::from_secs(30), "took {:?}", start.elapsed());
}

#[test]
fn c02_linear_leafroot_to_bluered_round_trip() {
    let _guard = serial();
    for seed in 0..1000u64 {
        let n = 1 + (seed % 30) as usize;
        let (g, root) = oracle::gen_linear_root(seed, n);
        assert!((0..g.order()).all(|v| g.degree(v) > 0) || g.order() == 1, "seed {seed}: isolated vertex");
        let m = linear_leafroot_to_bluered(&g, &root).unwrap_or_else(|e| panic!("seed {seed}: {e}"));
        let report = verify_bluered_model(&g, &m).unwrap();
        assert!(report.is_valid(), "seed {seed}: {:?}", report.discrepancies);
    }
}

#[test]
fn c03_every_success_is_a_valid_good_partition() {
    let _guard = serial();
    let mut accepted = 0;
    for seed in 0..10_000u64 {
        let g = oracle::random_chordal(seed, 1 + (seed % 12) as usize);
        if let Some(gp) = find_good_partition(&g) {
            accepted += 1;
            let checked = validate_good_partition(&g, &gp.x, &gp.blocks).unwrap_or_else(|f| panic!("seed {seed}: {}", f.describe(&g)));
            assert_eq!(checked.x, gp.x);
            assert!(is_good_permutation(&g, &gp.x, &gp.blocks, &gp.permutation), "seed {seed}");
        }
    }
    // Most small random chordal graphs are star NeS; a collapse would mean
    // the check above tested nothing.
    assert!(accepted > 9000, "only {accepted} accepted");
}

fn agree_with_oracle(g: &Graph) -> bool {
    let fast = find_good_partition(g).is_some();
    let slow = oracle::bruteforce_good_partition(g, 8).expect("within oracle limit").is_some();
    fast == slow
}

#[test]
fn c04_agrees_with_exhaustive_search() {
    let _guard = serial();
    let start = Instant::now();
    let mut total = 0;
    let mut rejected = 0;
    for n in 1..=7 {
        for adj in connected_chordal_masks(n) {
            let g = graph_from_masks(&adj);
            total += 1;
            if find_good_partition(&g).is_none() {
                rejected += 1;
            }
            assert!(agree_with_oracle(&g), "disagreement on {:?}", g.edges().collect::<Vec<_>>());
        }
    }
    assert_eq!((total, rejected), (354, 10));
    for seed in 0..10_000u64 {
        let g = oracle::random_chordal(seed, 8);
        if !agree_with_oracle(&g) {
            let small = oracle::shrink_graph(&g, |h| !agree_with_oracle(h));
            panic!("seed {seed}: disagreement; minimal witness {:?}", small.edges().collect::<Vec<_>>());
        }
    }
    assert!(start.elapsed() < Duration::from_secs(600), "took {:?}", start.elapsed());
}

#[test]
fn c05_star_synthesis_round_trip() {
    let _guard = serial();
    for seed in 0..1000u64 {
        let n = 1 + (seed % 30) as usize;
        let beta = 1 + (seed % 5) as usize;
        let (g, model) = oracle::gen_star_model(seed, n, beta);
        assert!(model.ray_count() <= 5);
        assert!(g.same_graph(&model.induced_graph().unwrap()), "seed {seed}: generator");
        let gp = find_good_partition(&g).unwrap_or_else(|| panic!("seed {seed}: rejected"));
        let synthesized = synthesize_star_model(&g, &gp).unwrap();
        assert!(verify_star_model(&g, &synthesized).unwrap().is_valid(), "seed {seed}");
        assert!(g.same_graph(&synthesized.induced_graph().unwrap()), "seed {seed}: induced graph differs");
        check_reach_conditions(&g, &gp, &synthesized).unwrap_or_else(|e| panic!("seed {seed}: {e}"));
    }
}

#[test]
fn c06_named_instances() {
    let _guard = serial();
    let k3 = graph("a b c", &[("a", "b"), ("b", "c"), ("a", "c")]);
    assert_eq!(cli::recognize_star(&k3, "k3").code, cli::ACCEPT);

    for n in 1..=50 {
        let p = path(n);
        let gp = find_good_partition(&p).unwrap_or_else(|| panic!("P{n} rejected"));
        let m = synthesize_star_model(&p, &gp).unwrap();
        assert!(verify_star_model(&p, &m).unwrap().is_valid(), "P{n}");
        assert!(m.ray_count() <= 2, "P{n} used {} rays", m.ray_count());
    }

    let sun = three_sun();
    let star = cli::recognize_star(&sun, "sun");
    assert_eq!(star.code, cli::REJECT);
    assert_eq!(star.report["stage"], "no-good-partition");
    assert_eq!(cli::recognize_linear(&sun, "sun", 8, None).code, cli::REJECT);
    assert!(oracle::bruteforce_linear_leafpower(&sun, 8).unwrap().is_none());

    let square = c4();
    for outcome in [cli::recognize_star(&square, "c4"), cli::recognize_linear(&square, "c4", 8, None)] {
        assert_eq!(outcome.code, cli::REJECT);
        assert_eq!(outcome.report["stage"], "not-chordal");
        assert_eq!(outcome.report["cycle"].as_array().unwrap().len(), 4);
    }
    assert!(matches!(find_good_partition_detailed(&square), StarOutcome::NotChordal(_)));
}

#[test]
fn c07_closure_rules_and_cut_vertex_merges() {
    let _guard = serial();
    for rule in [ClosureRule::Universal, ClosureRule::Pendant, ClosureRule::MaxClique, ClosureRule::MinSeparator] {
        let mut cases = 0;
        let mut seed = 0u64;
        while cases < 500 {
            assert!(seed < 20_000, "{rule:?}: only {cases} applicable cases");
            if let Some(case) = oracle::gen_closure_case(seed, 2 + (seed % 10) as usize, rule) {
                let m = case.apply(rule).unwrap_or_else(|e| panic!("{rule:?} seed {seed}: {e}"));
                let report = verify_nes_model(&case.target, &m).unwrap();
                assert!(report.is_valid(), "{rule:?} seed {seed}: {:?}", report.discrepancies);
                cases += 1;
            }
            seed += 1;
        }
    }
    for seed in 0..200u64 {
        let case = oracle::gen_cut_vertex_case(seed, 2 + (seed % 8) as usize);
        let m = merge_at_cut_vertex(&case.models, &case.u, &case.graph).unwrap_or_else(|e| panic!("seed {seed}: {e}"));
        let report = verify_nes_model(&case.graph, &m).unwrap();
        assert!(report.is_valid(), "seed {seed}: {:?}", report.discrepancies);
    }
}

#[test]
fn c08_x_interval_test_matches_clique_orderings() {
    let _guard = serial();
    let mut instances = 0;
    for n in 1..=7 {
        for adj in connected_chordal_masks(n) {
            let g = graph_from_masks(&adj);
            let cliques = maximal_cliques(&g).unwrap();
            if cliques.len() > 8 {
                continue;
            }
            for x in &cliques {
                let fast = is_x_interval(&g, x).unwrap();
                let slow = oracle::bruteforce_x_interval(&g, x).unwrap();
                assert_eq!(fast.is_some(), slow.is_some(), "{:?} X={:?}", g.edges().collect::<Vec<_>>(), x.to_vec());
                instances += 1;
                // The recognizer asks the same question of X plus single components.
                for c in g.components_within(&g.all().difference(x)) {
                    let fast = is_x_interval_on(&g, x, &c).unwrap();
                    let slow = oracle::bruteforce_x_interval_on(&g, x, &c).unwrap();
                    assert_eq!(fast.is_some(), slow.is_some(), "{:?} X={:?} C={:?}", g.edges().collect::<Vec<_>>(), x.to_vec(), c.to_vec());
                    instances += 1;
                }
            }
        }
    }
    assert!(instances > 1000, "{instances}");
}

/// Up to `k` vertices around `start` in breadth-first order.
fn ball_around(g: &Graph, start: usize, k: usize) -> VertexSet {
    let mut set = VertexSet::singleton(g.order(), start);
    let mut queue = std::collections::VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for w in g.neighbors(v).iter() {
            if set.len() == k {
                return set;
            }
            if !set.contains(w) {
                set.insert(w);
                queue.push_back(w);
            }
        }
    }
    set
}

#[test]
fn c09_large_instances_are_fast() {
    let _guard = serial();
    for seed in 0..5u64 {
        let (g, _) = oracle::gen_star_model(seed, 500, 1 + seed as usize);
        assert_eq!(g.order(), 500);
        let start = Instant::now();
        let accepted = cli::recognize_star(&g, "big");
        let elapsed = start.elapsed();
        assert_eq!(accepted.code, cli::ACCEPT, "seed {seed}");
        assert!(elapsed < Duration::from_secs(10), "seed {seed}: accept took {elapsed:?}");

        let mut rng = oracle::generate::rng(seed + 100);
        let (a, b) = loop {
            let (a, b) = (rng.gen_range(0..500), rng.gen_range(0..500));
            if a != b {
                break (a, b);
            }
        };
        let h = g.toggle_edge(a, b);
        let start = Instant::now();
        let outcome = find_good_partition_detailed(&h);
        let elapsed = start.elapsed();
        assert!(elapsed < Duration::from_secs(10), "seed {seed}: toggled took {elapsed:?}");

        // Confirm the decision on an 8-vertex induced subgraph where that is meaningful.
        match outcome {
            StarOutcome::NotChordal(cycle) => {
                assert!(cycle.len() >= 4);
                if cycle.len() <= 8 {
                    let sub = h.induced_subgraph(&VertexSet::from_indices(h.order(), cycle.iter().copied()));
                    assert!(!is_chordal(&sub));
                    assert!(oracle::bruteforce_good_partition(&sub, 8).unwrap().is_none(), "seed {seed}");
                }
            }
            StarOutcome::Found(gp) => {
                let m = synthesize_star_model(&h, &gp).unwrap();
                assert!(verify_star_model(&h, &m).unwrap().is_valid(), "seed {seed}");
                let sub = h.induced_subgraph(&ball_around(&h, a, 8));
                assert!(oracle::bruteforce_good_partition(&sub, 8).unwrap().is_some(), "seed {seed}");
            }
            StarOutcome::NoGoodPartition(failures) => {
                // A rejection has no small witness in general; it must at least
                // have tried every maximal clique of a chordal graph.
                assert!(matches!(chordality(&h), Chordality::Chordal(_)));
                assert_eq!(failures.len(), maximal_cliques(&h).unwrap().len(), "seed {seed}");
            }
        }
    }
}

#[test]
fn c10_no_floating_point_in_sources() {
    let _guard = serial();
    let root = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("..");
    let mut offenders = Vec::new();
    let mut scanned = 0;
    let mut stack = vec![root.join("core/src"), root.join("cli/src"), root.join("py/src")];
    while let Some(dir) = stack.pop() {
        for entry in std::fs::read_dir(&dir).unwrap() {
            let p = entry.unwrap().path();
            if p.is_dir() {
                stack.push(p);
            } else if p.extension().is_some_and(|e| e == "rs") {
                scanned += 1;
                let text = std::fs::read_to_string(&p).unwrap();
                for (i, line) in text.lines().enumerate() {
                    let floaty = line
                        .split(|c: char| !c.is_alphanumeric() && c != '_')
                        .any(|tok| tok == "f32" || tok == "f64" || tok.ends_with("_f32") || tok.ends_with("_f64"));
                    if floaty {
                        offenders.push(format!("{}:{}", p.display(), i + 1));
                    }
                }
            }
        }
    }
    assert!(scanned > 10);
    assert!(offenders.is_empty(), "floating point in {offenders:?}");
}
