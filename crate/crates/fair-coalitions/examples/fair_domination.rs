//! The fair-domination layer: the membership predicate with per-vertex
//! defects, minimality, the optimizers, and the fair domatic number.
//!
//! Run with: cargo run --example fair_domination

use fair_coalitions::{
    d_kf, gamma_f, gamma_kf_witness, is_kfair_dominating, is_minimal_kfd, FairnessProfile, Graph,
    VertexSet,
};

fn main() {
    let c4 = Graph::cycle(4).unwrap();
    let diagonal: VertexSet = [0usize, 2].into_iter().collect();

    println!("C_4, S = {diagonal}, k = 2:");
    println!("  is 2-fair dominating: {}", is_kfair_dominating(&c4, diagonal, 2).unwrap());
    println!("  minimal: {}", is_minimal_kfd(&c4, diagonal, 2).unwrap());

    // Defects show how far a candidate is from fairness: |N(v) & S| - k for
    // each vertex outside S.
    let bad: VertexSet = [0usize, 1].into_iter().collect();
    let profile = FairnessProfile::new(&c4, bad, 2).unwrap();
    println!("C_4, S = {bad}: defects");
    for (v, d) in profile.defects() {
        println!("  vertex {v}: {d:+}");
    }

    for (label, g) in [
        ("path(4)", Graph::path(4).unwrap()),
        ("complete(6)", Graph::complete(6).unwrap()),
        ("cycle(6)", Graph::cycle(6).unwrap()),
        ("K_{2,4}", Graph::complete_bipartite(2, 4).unwrap()),
    ] {
        let (size, witness) = gamma_kf_witness(&g, 2).unwrap();
        println!(
            "{label}: gamma_2f = {size} via {witness}, gamma_f = {}, d_2f = {}",
            gamma_f(&g),
            d_kf(&g, 2).unwrap()
        );
    }
}
