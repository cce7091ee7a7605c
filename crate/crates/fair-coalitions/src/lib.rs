//! Exact computation of fair domination and fair coalition invariants on
//! small simple graphs.
//!
//! A set S is k-fair dominating when every vertex outside S has exactly k
//! neighbors inside it. Two disjoint sets that both fail this test but whose
//! union passes form a k-fair coalition; a partition of the vertices where
//! every block is either a k-fair dominating set of size exactly k or a
//! coalition partner of another block is a k-fair coalition partition. The
//! largest possible number of blocks is the k-fair coalition number C_kf(G),
//! which this crate computes exactly via validated search, cross-checked by
//! an independent brute-force oracle.
//!
//! Start with the runnable examples (`cargo run --example families_tour`) or
//! the `kfair` binary for the command-line surface.

pub mod bounds;
pub mod cli;
pub mod fair;
pub mod formats;
pub mod graph;
pub mod partition;
pub mod solver;
pub mod verify;

pub use bounds::{bounds_report, lower_bound, upper_bound, BoundsReport};
pub use fair::{
    d_kf, enumerate_kfd, gamma_f, gamma_kf, gamma_kf_witness, is_kfair_dominating,
    is_minimal_kfd, FairError, FairnessProfile, DEFAULT_ORDER_CAP,
};
pub use formats::{encode_graph6, parse_blocks, parse_edge_list, parse_graph6, ParseError};
pub use graph::{Graph, GraphError, VertexSet, MAX_ORDER};
pub use partition::{
    coalition_graph, is_kfair_coalition, partner_count, validate_partition, CoalitionError,
    Justification, Partition, PartitionCertificate, ValidationOutcome, Violation,
};
pub use solver::{
    c_kf, naive_c_kf, InconclusiveReport, Solution, SolveError, SolveOutcome, SolverConfig,
    NAIVE_ORDER_CAP,
};
