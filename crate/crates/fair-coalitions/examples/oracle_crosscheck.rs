//! Cross-checks the validated solver against the exhaustive brute-force
//! oracle on seeded random graphs.
//!
//! Run with: cargo run --release --example oracle_crosscheck [trials]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use fair_coalitions::{c_kf, naive_c_kf, Graph, SolverConfig};

fn main() {
    let trials: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(100);
    let cfg = SolverConfig::default();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut agreements = 0;
    for trial in 0..trials {
        let n = 5 + trial % 5; // orders 5 through 9
        let p = 0.1 + 0.8 * rng.gen::<f64>();
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
            let fast = c_kf(&g, k, &cfg).unwrap();
            let slow = naive_c_kf(&g, k).unwrap();
            assert_eq!(
                fast.value(),
                slow.value(),
                "disagreement on n={n} k={k} edges={edges:?}"
            );
            agreements += 1;
        }
    }
    println!("{agreements} solves agreed with the exhaustive oracle");
}
