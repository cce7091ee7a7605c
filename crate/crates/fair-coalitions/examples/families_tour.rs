//! Solves the named graph families and prints their coalition numbers.
//!
//! Run with: cargo run --example families_tour

use fair_coalitions::{c_kf, Graph, SolveOutcome, SolverConfig};

fn row(label: &str, g: &Graph, k: usize, cfg: &SolverConfig) {
    match c_kf(g, k, cfg).expect("these orders are within the cap") {
        SolveOutcome::Value(sol) => {
            println!("{label:<24} k={k}  C = {}", sol.value);
        }
        SolveOutcome::NoPartition => {
            println!("{label:<24} k={k}  no partition exists");
        }
    }
}

fn main() {
    let cfg = SolverConfig::default();

    println!("complete graphs (value is n - k + 2):");
    for n in 4..=8 {
        for k in [2, 3] {
            row(&format!("  complete({n})"), &Graph::complete(n).unwrap(), k, &cfg);
        }
    }

    println!("\npaths and cycles at k = 2:");
    for n in 2..=9 {
        row(&format!("  path({n})"), &Graph::path(n).unwrap(), 2, &cfg);
    }
    for n in 3..=9 {
        row(&format!("  cycle({n})"), &Graph::cycle(n).unwrap(), 2, &cfg);
    }

    println!("\ncoronas (one pendant per vertex):");
    for n in 1..=5 {
        let g = Graph::path(n).unwrap().corona(1).unwrap();
        row(&format!("  path({n}) + pendants"), &g, 2, &cfg);
    }
    for n in 3..=6 {
        let g = Graph::cycle(n).unwrap().corona(1).unwrap();
        row(&format!("  cycle({n}) + pendants"), &g, 2, &cfg);
    }

    println!("\nthe two cubic graphs on six vertices:");
    row("  triangular prism", &Graph::triangular_prism(), 2, &cfg);
    row("  K_{{3,3}}", &Graph::utility_graph(), 2, &cfg);

    println!("\ncomplete bipartite corner cases:");
    for (s, t, k) in [(2, 2, 2), (3, 3, 3), (2, 4, 2), (2, 5, 3)] {
        let g = Graph::complete_bipartite(s, t).unwrap();
        row(&format!("  K_{{{s},{t}}}"), &g, k, &cfg);
    }

    println!("\ncomplete minus a perfect matching reaches the full order:");
    for n in [4, 6, 8] {
        let g = Graph::complete_minus_perfect_matching(n).unwrap();
        row(&format!("  K_{n} minus matching"), &g, 2, &cfg);
    }
}
