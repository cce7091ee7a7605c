//! Builds the coalition graph of a partition (blocks as vertices, coalition
//! pairs as edges) and prints it in DOT format.
//!
//! Run with: cargo run --example coalition_graph_dot
//! Pipe into graphviz: cargo run --example coalition_graph_dot | dot -Tsvg

use fair_coalitions::cli::dot_output;
use fair_coalitions::{coalition_graph, partner_count, Graph, Partition, VertexSet};

fn main() {
    let g = Graph::path(5).unwrap();
    let blocks: Vec<VertexSet> = [&[0usize, 3, 4][..], &[1], &[2]]
        .iter()
        .map(|b| b.iter().copied().collect())
        .collect();
    let p = Partition::new(&g, &blocks).unwrap();

    let kfcg = coalition_graph(&g, &p, 2).unwrap();
    eprintln!(
        "coalition graph on {} blocks with {} edges",
        kfcg.n(),
        kfcg.edge_count()
    );
    for i in 0..p.len() {
        eprintln!(
            "  block {i} = {} has {} coalition partners",
            p.block(i),
            partner_count(&g, &p, 2, i).unwrap()
        );
    }
    print!("{}", dot_output(&kfcg, &p.to_vecs()));
}
