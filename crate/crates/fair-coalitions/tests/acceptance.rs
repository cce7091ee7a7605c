//! Acceptance suite: every reproduction target runs here with its stated
//! time budget, printing one pass/fail line per criterion.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use fair_coalitions::cli::solve_report;
use fair_coalitions::verify::{
    extremal_scan, parse_corpus, run_census, run_theorem_suite, tree_fair_domination_scan,
    CheckKind, CheckOutcome, Family, RowStatus, StrictValue,
};
use fair_coalitions::{c_kf, enumerate_kfd, naive_c_kf, Graph, SolveOutcome, SolverConfig};

fn cfg() -> SolverConfig {
    SolverConfig::default()
}

fn value(g: &Graph, k: usize) -> Option<usize> {
    c_kf(g, k, &cfg()).expect("solve succeeds").value()
}

fn data(name: &str) -> String {
    let path = format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("reading {path}: {e}"))
}

fn corpus(name: &str) -> Vec<(String, Graph)> {
    let (graphs, errors) = parse_corpus(&data(name));
    assert!(errors.is_empty(), "{name} has parse errors: {errors:?}");
    graphs.into_iter().map(|(_, g6, g)| (g6, g)).collect()
}

fn finish(criterion: usize, what: &str, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    println!(
        "criterion {criterion}: PASS ({what}; {:.2}s of {:.0}s budget)",
        elapsed.as_secs_f64(),
        budget.as_secs_f64()
    );
    assert!(
        elapsed <= budget,
        "criterion {criterion} exceeded its {budget:?} budget: {elapsed:?}"
    );
}

#[test]
fn criterion_01_complete_graphs() {
    let started = Instant::now();
    for n in 4..=9 {
        let g = Graph::complete(n).unwrap();
        for k in 2..n {
            assert_eq!(value(&g, k), Some(n - k + 2), "complete({n}) k={k}");
        }
    }
    finish(1, "complete(4..=9) all k", started, Duration::from_secs(60));
}

#[test]
fn criterion_02_paths() {
    let started = Instant::now();
    for n in 2..=10 {
        let g = Graph::path(n).unwrap();
        let expected = if n <= 3 { 2 } else { 3 };
        assert_eq!(value(&g, 2), Some(expected), "path({n})");
    }
    // The one-vertex row is a known discrepancy: the stated value is 1, the
    // strict reading admits no partition. Reported, not failed.
    let p1 = Graph::path(1).unwrap();
    assert_eq!(c_kf(&p1, 2, &cfg()).unwrap(), SolveOutcome::NoPartition);
    let suite = run_theorem_suite(4, &cfg());
    let row = suite
        .rows
        .iter()
        .find(|r| r.family == Family::Path { n: 1 })
        .expect("path(1) row present");
    assert_eq!(row.status, RowStatus::DiscrepancyReproduced);
    finish(2, "path(1..=10)", started, Duration::from_secs(30));
}

#[test]
fn criterion_03_cycles() {
    let started = Instant::now();
    for n in 3..=10 {
        let g = Graph::cycle(n).unwrap();
        let expected = if n % 2 == 0 { 4 } else { 3 };
        assert_eq!(value(&g, 2), Some(expected), "cycle({n})");
    }
    finish(3, "cycle(3..=10)", started, Duration::from_secs(60));
}

#[test]
fn criterion_04_complete_bipartite() {
    let started = Instant::now();
    // Equal parts at k = s = t.
    for k in [2, 3] {
        let g = Graph::complete_bipartite(k, k).unwrap();
        assert_eq!(value(&g, k), Some(4), "K_{{{k},{k}}} k={k}");
    }
    // k = s < t.
    for (k, t) in [(2, 3), (2, 4), (3, 4)] {
        let g = Graph::complete_bipartite(k, t).unwrap();
        assert_eq!(value(&g, k), Some(2), "K_{{{k},{t}}} k={k}");
    }
    // k > s.
    for (s, t, k) in [(2, 3, 3), (2, 5, 3), (3, 4, 4)] {
        let g = Graph::complete_bipartite(s, t).unwrap();
        assert_eq!(value(&g, k), Some(2), "K_{{{s},{t}}} k={k}");
    }
    // Bound-only regimes, checked as <= on instances within the cap:
    // k < s < 3k - 1 gives t - k + 3; s >= 3k - 1 gives s + t - 4k + 4.
    for (s, t, k) in [(3, 3, 2), (3, 4, 2), (4, 4, 2), (4, 4, 3), (4, 5, 3)] {
        let g = Graph::complete_bipartite(s, t).unwrap();
        let bound = t - k + 3;
        let v = value(&g, k).unwrap();
        assert!(v <= bound, "K_{{{s},{t}}} k={k}: {v} > {bound}");
    }
    let g = Graph::complete_bipartite(5, 5).unwrap();
    let v = value(&g, 2).unwrap();
    assert!(v <= 5 + 5 - 8 + 4, "K_{{5,5}} k=2: {v}");
    finish(4, "complete bipartite cases", started, Duration::from_secs(120));
}

#[test]
fn criterion_05_coronas() {
    let started = Instant::now();
    // Path coronas, n = 1..=5 (orders up to 10). The published n = 2 and
    // n = 5 rows conflict with the strict definition; the suite reproduces
    // the strict value and surfaces the discrepancy, and the brute-force
    // oracle confirms the solver on every one of these orders.
    let suite = run_theorem_suite(10, &cfg());
    for n in 1..=5usize {
        let row = suite
            .rows
            .iter()
            .find(|r| r.family == Family::PathCorona { n })
            .unwrap_or_else(|| panic!("path-corona({n}) row missing"));
        match n {
            2 | 5 => {
                assert_eq!(row.status, RowStatus::DiscrepancyReproduced, "n={n}");
                assert_eq!(row.actual, Some(StrictValue::Exact { value: 3 }));
                println!(
                    "  discrepancy surfaced: path-corona({n}) stated 2, strict 3 (oracle agrees)"
                );
            }
            _ => assert_eq!(row.status, RowStatus::Match, "n={n}"),
        }
        assert_eq!(row.oracle_agrees, Some(true), "oracle cross-check n={n}");
    }
    // Cycle coronas.
    let c3 = Graph::cycle(3).unwrap().corona(1).unwrap();
    assert_eq!(value(&c3, 2), Some(4));
    let c4 = Graph::cycle(4).unwrap().corona(1).unwrap();
    assert_eq!(value(&c4, 2), Some(3));
    finish(5, "coronas", started, Duration::from_secs(600));
}

#[test]
fn criterion_06_cubic_order_six() {
    let started = Instant::now();
    assert_eq!(value(&Graph::complete(4).unwrap(), 2), Some(4));
    assert_eq!(value(&Graph::triangular_prism(), 2), Some(4));
    assert_eq!(value(&Graph::utility_graph(), 2), Some(3));
    finish(6, "cubic graphs of order <= 6", started, Duration::from_secs(30));
}

#[test]
fn criterion_07_cubic_fair_floor() {
    let started = Instant::now();
    let mut graphs = 0;
    let mut sets = 0usize;
    for n in [4, 6, 8, 10] {
        for (g6, g) in corpus(&format!("cubic_n{n}.g6")) {
            graphs += 1;
            let floor = (2 * g.n()).div_ceil(5);
            for s in enumerate_kfd(&g, 2, None).unwrap() {
                sets += 1;
                assert!(
                    s.len() >= floor,
                    "cubic {g6}: 2-fair dominating set {s:?} below floor {floor}"
                );
            }
        }
    }
    finish(
        7,
        &format!("{sets} fair sets over {graphs} cubic graphs <= 10, zero violations"),
        started,
        Duration::from_secs(300),
    );
}

#[test]
fn criterion_08_cubic_sandwich() {
    let started = Instant::now();
    let mut graphs = 0;
    for n in [4, 6, 8] {
        for (g6, g) in corpus(&format!("cubic_n{n}.g6")) {
            graphs += 1;
            let v = value(&g, 3).unwrap_or_else(|| panic!("cubic {g6}: no partition at k=3"));
            assert!((3..=4).contains(&v), "cubic {g6}: value {v} outside [3,4]");
        }
    }
    finish(
        8,
        &format!("{graphs} cubic graphs <= 8 inside [3,4]"),
        started,
        Duration::from_secs(600),
    );
}

#[test]
fn criterion_09_bound_census() {
    let started = Instant::now();
    let checks = [
        CheckKind::DoubledDomaticLower,
        CheckKind::DegreeGapUpper,
        CheckKind::PartnerCap,
        CheckKind::TreeHalfOrderUpper,
        CheckKind::HalfKDomaticLower,
    ];
    let mut failures = 0;
    let mut passes = 0;
    let mut findings = Vec::new();
    for n in 1..=7 {
        let text = data(&format!("graphs_n{n}.g6"));
        for k in [2, 3] {
            let report = run_census(&format!("graphs_n{n}"), &text, k, &checks, &cfg());
            failures += report.summary.failures;
            passes += report.summary.passes;
            for row in &report.rows {
                for cr in &row.checks {
                    match &cr.outcome {
                        CheckOutcome::Fail { witness } => {
                            println!("  VIOLATION {} on {}: {}", cr.check, row.graph6, witness.detail)
                        }
                        CheckOutcome::Finding { satisfied, detail } if !satisfied => findings
                            .push(format!(
                                "{} on {} (k={k}): {detail}",
                                cr.check, row.graph6
                            )),
                        _ => {}
                    }
                }
            }
        }
    }
    assert_eq!(failures, 0, "bound census found violations");
    // The halved-k domatic comparison is checked empirically and reported
    // either way. The one-vertex graph genuinely violates it (no partition
    // exists at k = 2 while the 1-fair domatic number is 1).
    for f in &findings {
        println!("  empirical finding violated: {f}");
    }
    assert_eq!(
        findings.len(),
        1,
        "expected exactly the one-vertex violation of the halved-k comparison"
    );
    finish(
        9,
        &format!("{passes} gated bound checks, zero violations; halved-k findings reported"),
        started,
        Duration::from_secs(900),
    );
}

#[test]
fn criterion_10_oracle_equivalence() {
    let started = Instant::now();
    let mut compared = 0;
    // Exhaustive census up to order 7, both outcomes compared exactly.
    for n in 1..=7 {
        for (g6, g) in corpus(&format!("graphs_n{n}.g6")) {
            for k in [2, 3] {
                let fast = c_kf(&g, k, &cfg()).expect("within cap");
                let slow = naive_c_kf(&g, k).expect("within cap");
                assert_eq!(
                    fast.value(),
                    slow.value(),
                    "solver/oracle mismatch on {g6} k={k}"
                );
                compared += 1;
            }
        }
    }
    // 500 seeded random graphs of orders 8 through 10.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for trial in 0..500usize {
        let n = 8 + trial % 3;
        let p = 0.15 + 0.7 * rng.gen::<f64>();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen::<f64>() < p {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, &edges).unwrap();
        for k in [2, 3] {
            let fast = c_kf(&g, k, &cfg()).expect("within cap");
            let slow = naive_c_kf(&g, k).expect("within cap");
            assert_eq!(
                fast.value(),
                slow.value(),
                "solver/oracle mismatch on random trial {trial} k={k}"
            );
            compared += 1;
        }
    }
    finish(
        10,
        &format!("{compared} solver/oracle comparisons, zero mismatches"),
        started,
        Duration::from_secs(1200),
    );
}

#[test]
fn criterion_11_tree_properties() {
    let started = Instant::now();
    let mut trees = Vec::new();
    for n in 2..=9 {
        trees.extend(corpus(&format!("trees_n{n}.g6")));
    }
    // Twice the fair domination number never exceeds the order, with
    // equality exactly on coronas of smaller trees.
    let (rows, ok) = tree_fair_domination_scan(&trees);
    assert!(ok, "gamma_f tree scan failed: {:?}",
        rows.iter().filter(|r| !r.pass).collect::<Vec<_>>());
    let equalities = rows.iter().filter(|r| r.at_half_order).count();
    assert_eq!(equalities, 5, "coronas of trees of order 1..=4");

    // Extremal coalition values: the full order occurs among trees only for
    // the 2-path, order minus one only for the 3- and 4-paths; matching
    // complements reach the full order at every even order.
    let report = extremal_scan(10, &trees, &cfg());
    assert!(report.pass, "extremal scan failed");
    let full: Vec<_> = report
        .tree_rows
        .iter()
        .filter(|r| r.extremal_class.as_deref() == Some("full-order"))
        .collect();
    assert_eq!(full.len(), 1);
    assert_eq!(full[0].order, 2);
    let near: Vec<_> = report
        .tree_rows
        .iter()
        .filter(|r| r.extremal_class.as_deref() == Some("order-minus-one"))
        .collect();
    assert_eq!(near.iter().map(|r| r.order).collect::<Vec<_>>(), vec![3, 4]);
    finish(
        11,
        &format!("{} trees scanned", trees.len()),
        started,
        Duration::from_secs(600),
    );
}

#[test]
fn criterion_12_determinism_across_workers() {
    let started = Instant::now();
    let mut compared = 0;
    for n in 4..=9 {
        let g = Graph::complete(n).unwrap();
        for k in 2..n {
            let label = format!("complete({n})");
            let single = SolverConfig {
                workers: 1,
                ..Default::default()
            };
            let multi = SolverConfig {
                workers: 4,
                ..Default::default()
            };
            let (r1, c1) = solve_report(&g, &label, k, &single);
            let json1 = serde_json::to_string_pretty(&r1).unwrap();
            for _ in 0..2 {
                let (r2, c2) = solve_report(&g, &label, k, &multi);
                let json2 = serde_json::to_string_pretty(&r2).unwrap();
                assert_eq!(c1, c2);
                assert_eq!(json1, json2, "worker-count dependent report for {label} k={k}");
            }
            compared += 1;
        }
    }
    finish(
        12,
        &format!("{compared} instances byte-identical across worker counts"),
        started,
        Duration::from_secs(120),
    );
}
