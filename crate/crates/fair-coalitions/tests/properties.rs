//! Property tests for the structural invariants: format round trips,
//! enumeration order, certificate soundness, and solver/oracle agreement.

use proptest::prelude::*;

use fair_coalitions::{
    c_kf, enumerate_kfd, encode_graph6, gamma_kf_witness, is_kfair_dominating, naive_c_kf,
    parse_graph6, validate_partition, Graph, Partition, SolverConfig, ValidationOutcome,
    VertexSet,
};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut idx = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[idx] {
                        edges.push((u, v));
                    }
                    idx += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn subset_strategy() -> impl Strategy<Value = u64> {
    any::<u64>()
}

proptest! {
    #[test]
    fn graph6_round_trip(g in graph_strategy(10)) {
        let encoded = encode_graph6(&g);
        let back = parse_graph6(&encoded).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn corona_order_and_size(g in graph_strategy(6), l in 1usize..=3) {
        let c = g.corona(l).unwrap();
        prop_assert_eq!(c.n(), g.n() * (l + 1));
        prop_assert_eq!(
            c.edge_count(),
            g.edge_count() + g.n() * (l + l * (l - 1) / 2)
        );
        // Original degrees all grow by exactly l.
        for v in g.vertices() {
            prop_assert_eq!(c.degree(v), g.degree(v) + l);
        }
    }

    #[test]
    fn enumeration_is_exactly_the_fair_sets_in_order(
        g in graph_strategy(7),
        k in 1usize..=3,
    ) {
        let enumerated: Vec<VertexSet> = enumerate_kfd(&g, k, None).unwrap().collect();
        // Completeness and soundness against the raw predicate.
        let mut expected: Vec<VertexSet> = (0..1u64 << g.n())
            .map(VertexSet::from_bits)
            .filter(|&s| is_kfair_dominating(&g, s, k).unwrap())
            .collect();
        expected.sort_by(|a, b| (a.len(), a.to_vec()).cmp(&(b.len(), b.to_vec())));
        prop_assert_eq!(enumerated, expected);
    }

    #[test]
    fn monotone_failure(g in graph_strategy(7), sbits in subset_strategy(), extra in subset_strategy()) {
        // Once a vertex outside the set sees more than k neighbors inside,
        // no superset that still excludes it can be fair.
        let full = g.vertex_set().bits();
        let s = VertexSet::from_bits(sbits & full);
        for k in 1..=2usize {
            for v in g.vertices().filter(|&v| !s.contains(v)) {
                if g.neighbors(v).intersection_size(s) > k {
                    let sup = VertexSet::from_bits((s.bits() | extra) & full & !(1 << v));
                    prop_assert!(!is_kfair_dominating(&g, sup, k).unwrap());
                }
            }
        }
    }

    #[test]
    fn gamma_witness_is_fair(g in graph_strategy(8), k in 1usize..=3) {
        let (size, w) = gamma_kf_witness(&g, k).unwrap();
        prop_assert!(size <= g.n());
        prop_assert_eq!(w.len(), size);
        prop_assert!(is_kfair_dominating(&g, w, k).unwrap());
    }

    #[test]
    fn certificates_replay_against_raw_predicates(
        g in graph_strategy(7),
        assignment in prop::collection::vec(0usize..4, 7),
        k in 1usize..=3,
    ) {
        // Random block assignment, normalized to a partition.
        let n = g.n();
        let mut blocks: Vec<VertexSet> = vec![VertexSet::EMPTY; 4];
        for v in 0..n {
            blocks[assignment[v] % n.min(4)].insert(v);
        }
        blocks.retain(|b| !b.is_empty());
        let p = Partition::new(&g, &blocks).unwrap();
        match validate_partition(&g, &p, k).unwrap() {
            ValidationOutcome::Valid(cert) => {
                for (i, entry) in cert.entries.iter().enumerate() {
                    match *entry {
                        fair_coalitions::Justification::StandaloneFair => {
                            prop_assert!(is_kfair_dominating(&g, p.block(i), k).unwrap());
                            prop_assert_eq!(p.block(i).len(), k);
                        }
                        fair_coalitions::Justification::Partner { with } => {
                            prop_assert!(fair_coalitions::is_kfair_coalition(
                                &g, p.block(i), p.block(with), k
                            ).unwrap());
                        }
                    }
                }
            }
            ValidationOutcome::Invalid(v) => {
                let block = match v {
                    fair_coalitions::Violation::FairWrongSize { block, size } => {
                        prop_assert!(is_kfair_dominating(&g, p.block(block), k).unwrap());
                        prop_assert_eq!(p.block(block).len(), size);
                        prop_assert_ne!(size, k);
                        block
                    }
                    fair_coalitions::Violation::NoPartner { block } => {
                        prop_assert!(!is_kfair_dominating(&g, p.block(block), k).unwrap());
                        for j in 0..p.len() {
                            if j != block {
                                prop_assert!(!fair_coalitions::is_kfair_coalition(
                                    &g, p.block(block), p.block(j), k
                                ).unwrap());
                            }
                        }
                        block
                    }
                };
                prop_assert!(block < p.len());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn solver_matches_oracle(g in graph_strategy(6), k in 1usize..=3) {
        let fast = c_kf(&g, k, &SolverConfig::default()).unwrap();
        let slow = naive_c_kf(&g, k).unwrap();
        prop_assert_eq!(fast.value(), slow.value());
    }

    #[test]
    fn witness_revalidates(g in graph_strategy(7), k in 1usize..=3) {
        if let fair_coalitions::SolveOutcome::Value(sol) =
            c_kf(&g, k, &SolverConfig::default()).unwrap()
        {
            prop_assert_eq!(sol.witness.len(), sol.value);
            match validate_partition(&g, &sol.witness, k).unwrap() {
                ValidationOutcome::Valid(cert) => prop_assert_eq!(cert, sol.certificate),
                ValidationOutcome::Invalid(v) => {
                    return Err(TestCaseError::fail(format!("witness invalid: {v:?}")));
                }
            }
        }
    }
}
