//! Streams k-fair dominating sets in increasing size, then lexicographic
//! order, optionally capped by size.
//!
//! Run with: cargo run --example enumerate_fair_sets

use fair_coalitions::{enumerate_kfd, Graph};

fn main() {
    let c4 = Graph::cycle(4).unwrap();
    println!("all 2-fair dominating sets of the 4-cycle:");
    for s in enumerate_kfd(&c4, 2, None).unwrap() {
        println!("  {s}");
    }

    println!("\nonly those with at most 2 vertices:");
    for s in enumerate_kfd(&c4, 2, Some(2)).unwrap() {
        println!("  {s}");
    }

    // On cubic graphs every 2-fair dominating set has at least ceil(2n/5)
    // vertices; the smallest one the stream yields shows the floor is tight
    // or not for this instance.
    let prism = Graph::triangular_prism();
    let first = enumerate_kfd(&prism, 2, None).unwrap().next().unwrap();
    println!(
        "\nprism: smallest 2-fair dominating set {first} (floor is {})",
        (2 * prism.n()).div_ceil(5)
    );
}
