//! Sweeps a bundled graph6 corpus with the structural checks, printing the
//! per-check tallies. Violations would come with replayable witnesses.
//!
//! Run with: cargo run --example census_sweep [corpus] [k]
//! e.g.      cargo run --example census_sweep graphs_n6.g6 2

use fair_coalitions::verify::{run_census, CheckOutcome, ALL_CHECKS};
use fair_coalitions::SolverConfig;

fn main() {
    let corpus = std::env::args().nth(1).unwrap_or_else(|| "graphs_n6.g6".into());
    let k: usize = std::env::args()
        .nth(2)
        .and_then(|a| a.parse().ok())
        .unwrap_or(2);
    let path = format!("{}/data/{corpus}", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).expect("bundled corpus exists");

    let report = run_census(&corpus, &text, k, &ALL_CHECKS, &SolverConfig::default());
    println!(
        "{} graphs from {corpus} at k = {k}",
        report.summary.graphs
    );
    for row in &report.rows {
        for cr in &row.checks {
            match &cr.outcome {
                CheckOutcome::Fail { witness } => {
                    println!("VIOLATION {} on {}: {}", cr.check, row.graph6, witness.detail);
                    println!("  replay: graph6 {} k {}", witness.graph6, witness.k);
                }
                CheckOutcome::Finding { satisfied: false, detail } => {
                    println!("finding violated: {} on {}: {detail}", cr.check, row.graph6);
                }
                _ => {}
            }
        }
    }
    let s = &report.summary;
    println!(
        "passes {}, failures {}, hypothesis skips {}, findings {} ({} violated)",
        s.passes, s.failures, s.skips, s.findings, s.findings_violated
    );
    std::process::exit(if report.passed() { 0 } else { 1 });
}
