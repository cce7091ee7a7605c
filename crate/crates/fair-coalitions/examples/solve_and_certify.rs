//! Solves one instance and replays the returned certificate against the raw
//! predicates, showing what each block's justification means.
//!
//! Run with: cargo run --example solve_and_certify

use fair_coalitions::{
    c_kf, is_kfair_coalition, is_kfair_dominating, Graph, Justification, SolveOutcome,
    SolverConfig,
};

fn main() {
    let g = Graph::triangular_prism();
    let k = 2;

    let sol = match c_kf(&g, k, &SolverConfig::default()).unwrap() {
        SolveOutcome::Value(sol) => sol,
        SolveOutcome::NoPartition => unreachable!("the prism has valid partitions"),
    };
    println!("C_{{2f}}(prism) = {}", sol.value);
    println!("canonical witness:");
    for (i, block) in sol.witness.blocks().iter().enumerate() {
        println!("  block {i}: {block}");
    }

    println!("certificate, replayed against the predicates:");
    for (i, entry) in sol.certificate.entries.iter().enumerate() {
        let block = sol.witness.block(i);
        match *entry {
            Justification::StandaloneFair => {
                assert!(is_kfair_dominating(&g, block, k).unwrap());
                assert_eq!(block.len(), k);
                println!("  block {i} is itself {k}-fair dominating with exactly {k} vertices");
            }
            Justification::Partner { with } => {
                let partner = sol.witness.block(with);
                assert!(is_kfair_coalition(&g, block, partner, k).unwrap());
                println!(
                    "  block {i} forms a {k}-fair coalition with block {with}: neither is fair \
                     alone, their union is"
                );
            }
        }
    }
    println!("certificate verified.");
}
