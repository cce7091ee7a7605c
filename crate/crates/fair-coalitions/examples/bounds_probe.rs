//! Compares the certified bounds with the exact value on a spread of graphs.
//!
//! Run with: cargo run --example bounds_probe

use fair_coalitions::{bounds_report, c_kf, Graph, SolverConfig};

fn main() {
    let cfg = SolverConfig::default();
    let instances = [
        ("path(5)", Graph::path(5).unwrap(), 2),
        ("path(9)", Graph::path(9).unwrap(), 2),
        ("star K_{1,6}", Graph::complete_bipartite(1, 6).unwrap(), 2),
        ("cycle(6)", Graph::cycle(6).unwrap(), 2),
        ("cycle(9)", Graph::cycle(9).unwrap(), 2),
        ("prism", Graph::triangular_prism(), 3),
        ("K_{3,3}", Graph::utility_graph(), 3),
        ("complete(7)", Graph::complete(7).unwrap(), 4),
        ("K_6 minus matching", Graph::complete_minus_perfect_matching(6).unwrap(), 2),
    ];
    println!("{:<22} {:>2}  {:>10}  {:>22}  {:>22}", "graph", "k", "exact", "lower", "upper");
    for (label, g, k) in instances {
        let b = bounds_report(&g, k);
        let exact = c_kf(&g, k, &cfg)
            .unwrap()
            .value()
            .map(|v| v.to_string())
            .unwrap_or_else(|| "none".into());
        let lower = match (b.lower, b.lower_rule) {
            (Some(v), Some(r)) => format!("{v} ({r:?})"),
            _ => "-".into(),
        };
        println!(
            "{label:<22} {k:>2}  {exact:>10}  {lower:>22}  {:>22}",
            format!("{} ({:?})", b.upper, b.upper_rule)
        );
    }
}
