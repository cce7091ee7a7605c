//! Graph ingestion: graph6 strings, edge-list text, and the round trip
//! through the encoder. Parse errors carry byte offsets.
//!
//! Run with: cargo run --example graph_io

use fair_coalitions::{encode_graph6, parse_edge_list, parse_graph6, Graph};

fn main() {
    // "D??" is the edgeless graph on five vertices.
    let g = parse_graph6("D??").unwrap();
    println!("D?? -> order {}, {} edges", g.n(), g.edge_count());

    // Everything the constructors build round-trips through the encoder.
    for g in [
        Graph::cycle(6).unwrap(),
        Graph::complete(5).unwrap(),
        Graph::triangular_prism(),
        Graph::path(4).unwrap().corona(1).unwrap(),
    ] {
        let enc = encode_graph6(&g);
        assert_eq!(parse_graph6(&enc).unwrap(), g);
        println!("{g:?} <-> {enc}");
    }

    // Edge-list format: order first, then pairs.
    let g = parse_edge_list("4\n0 1\n1 2\n2 3\n").unwrap();
    println!("edge list -> {g:?}");

    // Errors point at the offending byte.
    for bad in ["D?", "4\n0 9", "4\n1 1"] {
        let err = parse_graph6(bad)
            .map(|_| ())
            .map_err(|e| e.to_string())
            .or_else(|_| parse_edge_list(bad).map(|_| ()).map_err(|e| e.to_string()))
            .unwrap_err();
        println!("{bad:?}: {err}");
    }
}
