//! Checks hand-built partitions against the coalition rules, showing both a
//! certificate and a violation.
//!
//! Run with: cargo run --example validate_partition

use fair_coalitions::{
    validate_partition, Graph, Partition, ValidationOutcome, VertexSet,
};

fn blocks(spec: &[&[usize]]) -> Vec<VertexSet> {
    spec.iter().map(|b| b.iter().copied().collect()).collect()
}

fn report(g: &Graph, spec: &[&[usize]], k: usize) {
    let p = Partition::new(g, &blocks(spec)).unwrap();
    match validate_partition(g, &p, k).unwrap() {
        ValidationOutcome::Valid(cert) => {
            println!("valid ({} blocks):", p.len());
            for (i, e) in cert.entries.iter().enumerate() {
                println!("  block {i} = {}: {e:?}", p.block(i));
            }
        }
        ValidationOutcome::Invalid(v) => println!("invalid: {v}"),
    }
}

fn main() {
    // The classic three-block partition of the 5-path at k = 2: the big
    // block pairs with either singleton.
    let p5 = Graph::path(5).unwrap();
    println!("path(5), {{0,3,4}} | {{1}} | {{2}}, k = 2:");
    report(&p5, &[&[0, 3, 4], &[1], &[2]], 2);

    // Both diagonals of the 4-cycle are fair with exactly k vertices, so
    // they stand alone.
    let c4 = Graph::cycle(4).unwrap();
    println!("\ncycle(4), diagonals, k = 2:");
    report(&c4, &[&[0, 2], &[1, 3]], 2);

    // A fair block of the wrong size poisons the partition: it can neither
    // stand alone nor join a coalition.
    println!("\ncycle(4), {{0,1,2}} | {{3}}, k = 2:");
    report(&c4, &[&[0, 1, 2], &[3]], 2);

    // And a block with no partner at all.
    let p3 = Graph::path(3).unwrap();
    println!("\npath(3), {{0,2}} | {{1}}, k = 2:");
    report(&p3, &[&[0, 2], &[1]], 2);
}
