//! Vertex partitions, the k-fair coalition predicate, certificate-producing
//! validation, partner counting, and the coalition graph on blocks.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fair::is_kfd;
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("block {index} is empty")]
    EmptyBlock { index: usize },
    #[error("vertex {vertex} appears in more than one block")]
    Overlap { vertex: usize },
    #[error("vertex {vertex} is not covered by any block")]
    Uncovered { vertex: usize },
    #[error("vertex {vertex} is out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("a partition needs at least one block")]
    NoBlocks,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoalitionError {
    #[error("k must be at least 1")]
    InvalidK,
    #[error("coalition sides must be nonempty")]
    EmptySide,
    #[error("coalition sides must be disjoint")]
    OverlappingSides,
    #[error("vertex {vertex} is out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("block index {index} is out of range ({blocks} blocks)")]
    BlockIndexOutOfRange { index: usize, blocks: usize },
    #[error("partition is not a valid k-fair coalition partition: {0}")]
    InvalidPartition(Violation),
}

/// An ordered partition of the vertex set: pairwise-disjoint nonempty blocks
/// covering every vertex, canonically sorted by smallest member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    order: usize,
    blocks: Vec<VertexSet>,
}

impl Partition {
    pub fn new(g: &Graph, blocks: &[VertexSet]) -> Result<Self, PartitionError> {
        if blocks.is_empty() {
            return Err(PartitionError::NoBlocks);
        }
        let full = g.vertex_set();
        let mut seen = VertexSet::EMPTY;
        for (index, &b) in blocks.iter().enumerate() {
            if b.is_empty() {
                return Err(PartitionError::EmptyBlock { index });
            }
            if !b.is_subset_of(full) {
                let vertex = b.difference(full).min_vertex().unwrap();
                return Err(PartitionError::VertexOutOfRange {
                    vertex,
                    order: g.n(),
                });
            }
            if !seen.is_disjoint(b) {
                let vertex = seen.intersection(b).min_vertex().unwrap();
                return Err(PartitionError::Overlap { vertex });
            }
            seen = seen.union(b);
        }
        if seen != full {
            let vertex = full.difference(seen).min_vertex().unwrap();
            return Err(PartitionError::Uncovered { vertex });
        }
        let mut blocks = blocks.to_vec();
        blocks.sort_by_key(|b| b.min_vertex());
        Ok(Partition {
            order: g.n(),
            blocks,
        })
    }

    /// Internal constructor for blocks already known to partition `0..order`
    /// in canonical order (as produced by restricted-growth enumeration).
    pub(crate) fn from_canonical_blocks(order: usize, blocks: Vec<VertexSet>) -> Self {
        debug_assert!(blocks.windows(2).all(|w| w[0].min_vertex() < w[1].min_vertex()));
        Partition { order, blocks }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> VertexSet {
        self.blocks[i]
    }

    /// Blocks as sorted vertex lists, the canonical external form.
    pub fn to_vecs(&self) -> Vec<Vec<usize>> {
        self.blocks.iter().map(|b| b.to_vec()).collect()
    }
}

/// Why a block is allowed to sit in a k-fair coalition partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "role", rename_all = "kebab-case")]
pub enum Justification {
    /// The block is itself k-fair dominating with exactly k vertices.
    StandaloneFair,
    /// The block pairs with the (smallest-index) partner block.
    Partner { with: usize },
}

/// One justification per block, in block order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionCertificate {
    pub entries: Vec<Justification>,
}

/// The first offending block of an invalid partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Violation {
    /// The block is k-fair dominating but has the wrong size, so it can
    /// neither stand alone nor join any coalition.
    FairWrongSize { block: usize, size: usize },
    /// The block is not k-fair dominating and no other block completes it.
    NoPartner { block: usize },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::FairWrongSize { block, size } => write!(
                f,
                "block {block} is k-fair dominating but has size {size} != k"
            ),
            Violation::NoPartner { block } => {
                write!(f, "block {block} has no coalition partner")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValidationOutcome {
    Valid(PartitionCertificate),
    Invalid(Violation),
}

fn check_k(k: usize) -> Result<(), CoalitionError> {
    if k == 0 {
        Err(CoalitionError::InvalidK)
    } else {
        Ok(())
    }
}

fn check_side(g: &Graph, s: VertexSet) -> Result<(), CoalitionError> {
    if s.is_empty() {
        return Err(CoalitionError::EmptySide);
    }
    if !s.is_subset_of(g.vertex_set()) {
        let vertex = s.difference(g.vertex_set()).min_vertex().unwrap();
        return Err(CoalitionError::VertexOutOfRange {
            vertex,
            order: g.n(),
        });
    }
    Ok(())
}

/// Two disjoint nonempty sets form a k-fair coalition when neither is k-fair
/// dominating but their union is.
pub fn is_kfair_coalition(
    g: &Graph,
    a: VertexSet,
    b: VertexSet,
    k: usize,
) -> Result<bool, CoalitionError> {
    check_k(k)?;
    check_side(g, a)?;
    check_side(g, b)?;
    if !a.is_disjoint(b) {
        return Err(CoalitionError::OverlappingSides);
    }
    Ok(!is_kfd(g, a, k) && !is_kfd(g, b, k) && is_kfd(g, a.union(b), k))
}

/// Checks every block: either a standalone k-fair dominating block of size
/// exactly k, or a non-fair block with a coalition partner. Returns the
/// smallest-index partner per block, or the first violation.
pub fn validate_partition(
    g: &Graph,
    p: &Partition,
    k: usize,
) -> Result<ValidationOutcome, CoalitionError> {
    check_k(k)?;
    let m = p.len();
    let fair: Vec<bool> = p.blocks().iter().map(|&b| is_kfd(g, b, k)).collect();
    let mut entries = Vec::with_capacity(m);
    for i in 0..m {
        if fair[i] {
            if p.block(i).len() == k {
                entries.push(Justification::StandaloneFair);
                continue;
            }
            return Ok(ValidationOutcome::Invalid(Violation::FairWrongSize {
                block: i,
                size: p.block(i).len(),
            }));
        }
        let partner = (0..m)
            .find(|&j| j != i && !fair[j] && is_kfd(g, p.block(i).union(p.block(j)), k));
        match partner {
            Some(with) => entries.push(Justification::Partner { with }),
            None => return Ok(ValidationOutcome::Invalid(Violation::NoPartner { block: i })),
        }
    }
    Ok(ValidationOutcome::Valid(PartitionCertificate { entries }))
}

/// How many other blocks form a k-fair coalition with block `i`. Zero for any
/// k-fair dominating block, by definition.
pub fn partner_count(
    g: &Graph,
    p: &Partition,
    k: usize,
    i: usize,
) -> Result<usize, CoalitionError> {
    check_k(k)?;
    if i >= p.len() {
        return Err(CoalitionError::BlockIndexOutOfRange {
            index: i,
            blocks: p.len(),
        });
    }
    let mut count = 0;
    for j in 0..p.len() {
        if j != i && is_kfair_coalition(g, p.block(i), p.block(j), k)? {
            count += 1;
        }
    }
    Ok(count)
}

/// Graph on the blocks of a valid partition, with an edge wherever two blocks
/// form a k-fair coalition. Rejects invalid partitions.
pub fn coalition_graph(g: &Graph, p: &Partition, k: usize) -> Result<Graph, CoalitionError> {
    match validate_partition(g, p, k)? {
        ValidationOutcome::Valid(_) => {}
        ValidationOutcome::Invalid(v) => return Err(CoalitionError::InvalidPartition(v)),
    }
    let m = p.len();
    let mut edges = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            if is_kfair_coalition(g, p.block(i), p.block(j), k)? {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph::from_edges(m, &edges).expect("block indices are in range"))
}
