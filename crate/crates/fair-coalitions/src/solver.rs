//! Exact computation of the k-fair coalition number.
//!
//! `c_kf` searches block counts m = U, U-1, ..., 1 for a valid partition with
//! exactly m blocks, where U is a proven upper bound; the first hit is the
//! maximum. Partitions are enumerated as restricted growth strings, so the
//! first valid partition at the winning level is also the lexicographically
//! smallest witness, which makes the output canonical.
//!
//! `naive_c_kf` is the independent oracle: it enumerates every set partition,
//! validates each with the raw predicates, and keeps the best. It shares no
//! search machinery, bounds, or memo tables with `c_kf`.

use rayon::prelude::*;
use std::sync::atomic::{AtomicUsize, Ordering};

use crate::fair::{is_kfd, KfdTable, DEFAULT_ORDER_CAP};
use crate::graph::{Graph, VertexSet};
use crate::partition::{
    is_kfair_coalition, Justification, Partition, PartitionCertificate,
};

/// Hard ceiling for the order-cap override; keeps the subset table in memory
/// and the masks in a u64 comfortably.
pub const MAX_SOLVER_ORDER: usize = 24;

/// Hard cap for the naive oracle (Bell(10) partitions is the practical limit).
pub const NAIVE_ORDER_CAP: usize = 10;

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone)]
pub struct SolverConfig {
    /// Refuse graphs larger than this.
    pub order_cap: usize,
    /// Approximate limit on search nodes before giving up.
    pub budget: u64,
    /// Worker threads. Results are identical for every worker count.
    pub workers: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            order_cap: DEFAULT_ORDER_CAP,
            budget: DEFAULT_NODE_BUDGET,
            workers: 1,
        }
    }
}

/// A solved instance: the exact value with a canonical witness, or the
/// explicit fact that no valid partition of any size exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    Value(Solution),
    NoPartition,
}

impl SolveOutcome {
    pub fn value(&self) -> Option<usize> {
        match self {
            SolveOutcome::Value(s) => Some(s.value),
            SolveOutcome::NoPartition => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub value: usize,
    pub witness: Partition,
    pub certificate: PartitionCertificate,
}

/// Budget exhaustion report. `ruled_out_above` block counts are proven
/// impossible; `best_found` is a valid partition discovered before stopping,
/// a certified lower bound.
#[derive(Debug, Clone)]
pub struct InconclusiveReport {
    pub ruled_out_above: usize,
    pub nodes_used: u64,
    pub best_found: Option<(usize, Partition)>,
}

#[derive(Debug, Clone, thiserror::Error)]
pub enum SolveError {
    #[error("k must be at least 1")]
    InvalidK,
    #[error("order {order} exceeds the cap {cap}; raise the cap explicitly to proceed")]
    OrderCapExceeded { order: usize, cap: usize },
    #[error("node budget exhausted: block counts above {} are ruled out", .0.ruled_out_above)]
    Inconclusive(Box<InconclusiveReport>),
}

/// Upper bound on the number of blocks, using only facts proven sound for
/// every input:
///  - n blocks is trivial;
///  - if some vertex can never see k set-neighbors (k > max degree), only V
///    is k-fair dominating, so at most two blocks can be justified;
///  - if delta < k <= Delta + 1, every k-fair dominating set must contain a
///    minimum-degree vertex, which caps the partition at Delta - k + 3.
fn sound_upper_bound(g: &Graph, k: usize) -> usize {
    let n = g.n();
    let mut ub = n;
    let max_deg = g.max_degree();
    if n >= 2 && k >= max_deg + 1 {
        ub = ub.min(2);
    }
    if k > g.min_degree() && k <= max_deg + 1 {
        ub = ub.min(max_deg + 3 - k);
    }
    ub.max(1)
}

struct LevelCtx<'a> {
    table: &'a KfdTable,
    n: usize,
    k: usize,
    m: usize,
    node_cap: u64,
}

/// A partial assignment of the first `depth` vertices to blocks.
#[derive(Clone)]
struct Prefix {
    assign: Vec<u8>,
    used: usize,
}

enum TaskResult {
    /// Subtree fully searched, no valid partition. Carries the node count.
    Empty(u64),
    /// First (lexicographically smallest) valid assignment in this subtree.
    Hit(u64, Vec<u8>),
    /// Node cap reached before the subtree was exhausted.
    Aborted(u64),
    /// Not searched because an earlier-indexed task already hit.
    Skipped,
}

struct TaskState<'a> {
    ctx: &'a LevelCtx<'a>,
    assign: Vec<u8>,
    blocks: Vec<u64>,
    sizes: Vec<usize>,
    nodes: u64,
    aborted: bool,
}

impl<'a> TaskState<'a> {
    fn from_prefix(ctx: &'a LevelCtx<'a>, prefix: &Prefix) -> Self {
        let mut blocks = vec![0u64; ctx.m];
        let mut sizes = vec![0usize; ctx.m];
        for (v, &b) in prefix.assign.iter().enumerate() {
            blocks[b as usize] |= 1 << v;
            sizes[b as usize] += 1;
        }
        let mut assign = prefix.assign.clone();
        assign.resize(ctx.n, 0);
        TaskState {
            ctx,
            assign,
            blocks,
            sizes,
            nodes: 0,
            aborted: false,
        }
    }

    /// Depth-first over restricted growth strings with exactly `m` blocks.
    /// Returns the first valid full assignment in lexicographic order.
    fn dfs(&mut self, i: usize, used: usize) -> Option<Vec<u8>> {
        self.nodes += 1;
        if self.nodes > self.ctx.node_cap {
            self.aborted = true;
            return None;
        }
        let (n, m) = (self.ctx.n, self.ctx.m);
        if i == n {
            debug_assert_eq!(used, m);
            return self.validate_leaf().then(|| self.assign.clone());
        }
        // A new block may open only below m; enough vertices must remain to
        // populate all m blocks.
        let top = if used < m { used } else { used - 1 };
        for c in 0..=top {
            let opens = usize::from(c == used);
            if used + opens + (n - i - 1) < m {
                continue;
            }
            self.assign[i] = c as u8;
            self.blocks[c] |= 1 << i;
            self.sizes[c] += 1;
            let hit = self.dfs(i + 1, used + opens);
            self.blocks[c] &= !(1 << i);
            self.sizes[c] -= 1;
            if hit.is_some() || self.aborted {
                return hit;
            }
        }
        None
    }

    fn validate_leaf(&self) -> bool {
        let (m, k) = (self.ctx.m, self.ctx.k);
        let table = self.ctx.table;
        let mut fair = 0u32;
        for a in 0..m {
            if table.get(self.blocks[a]) {
                if self.sizes[a] != k {
                    return false;
                }
                fair |= 1 << a;
            }
        }
        'blocks: for a in 0..m {
            if fair >> a & 1 == 1 {
                continue;
            }
            for b in 0..m {
                if b != a && fair >> b & 1 == 0 && table.get(self.blocks[a] | self.blocks[b]) {
                    continue 'blocks;
                }
            }
            return false;
        }
        true
    }
}

/// Enumerates feasible prefixes of the first `depth` vertices, in
/// lexicographic order.
fn level_prefixes(n: usize, m: usize, depth: usize) -> Vec<Prefix> {
    let mut out = Vec::new();
    let mut assign = vec![0u8; depth];
    fn rec(i: usize, used: usize, depth: usize, n: usize, m: usize, assign: &mut Vec<u8>, out: &mut Vec<Prefix>) {
        if i == depth {
            out.push(Prefix {
                assign: assign.clone(),
                used,
            });
            return;
        }
        let top = if used < m { used } else { used - 1 };
        for c in 0..=top {
            let opens = usize::from(c == used);
            if used + opens + (n - i - 1) < m {
                continue;
            }
            assign[i] = c as u8;
            rec(i + 1, used + opens, depth, n, m, assign, out);
        }
    }
    rec(0, 0, depth, n, m, &mut assign, &mut out);
    out
}

fn blocks_of_assignment(n: usize, m: usize, assign: &[u8]) -> Vec<VertexSet> {
    let mut blocks = vec![VertexSet::EMPTY; m];
    for v in 0..n {
        blocks[assign[v] as usize].insert(v);
    }
    blocks
}

fn certify(blocks: &[VertexSet], table: &KfdTable) -> PartitionCertificate {
    let m = blocks.len();
    let fair: Vec<bool> = blocks.iter().map(|b| table.get(b.bits())).collect();
    let entries = (0..m)
        .map(|a| {
            if fair[a] {
                Justification::StandaloneFair
            } else {
                let with = (0..m)
                    .find(|&b| {
                        b != a && !fair[b] && table.get(blocks[a].bits() | blocks[b].bits())
                    })
                    .expect("validated leaf has a partner for every non-fair block");
                Justification::Partner { with }
            }
        })
        .collect();
    PartitionCertificate { entries }
}

/// Exact k-fair coalition number with a canonical witness and certificate.
///
/// The result is a deterministic function of `(g, k)` alone: the same value,
/// witness, and certificate come back for every worker count.
pub fn c_kf(g: &Graph, k: usize, cfg: &SolverConfig) -> Result<SolveOutcome, SolveError> {
    if k == 0 {
        return Err(SolveError::InvalidK);
    }
    let n = g.n();
    let cap = cfg.order_cap.min(MAX_SOLVER_ORDER);
    if n > cap {
        return Err(SolveError::OrderCapExceeded { order: n, cap });
    }
    let table = KfdTable::build(g, k);
    let ub = sound_upper_bound(g, k);

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers.max(1))
        .build()
        .expect("thread pool");

    // Prefix depth balances task count against task size; task boundaries
    // depend only on the input so every worker count sees the same tasks.
    let depth = n.min(7);

    let mut nodes_used: u64 = 0;
    for m in (1..=ub).rev() {
        if nodes_used >= cfg.budget {
            return Err(SolveError::Inconclusive(Box::new(InconclusiveReport {
                ruled_out_above: m,
                nodes_used,
                best_found: None,
            })));
        }
        let prefixes = level_prefixes(n, m, depth.min(n));
        if prefixes.is_empty() {
            continue;
        }
        // The floor keeps one skewed subtree from aborting a level that fits
        // the budget overall; total overrun stays bounded by tasks * floor.
        let remaining = cfg.budget - nodes_used;
        let node_cap = (remaining / prefixes.len() as u64).max(1_000_000);
        let ctx = LevelCtx {
            table: &table,
            n,
            k,
            m,
            node_cap,
        };

        let first_hit = AtomicUsize::new(usize::MAX);
        let results: Vec<TaskResult> = pool.install(|| {
            prefixes
                .par_iter()
                .enumerate()
                .map(|(idx, prefix)| {
                    if first_hit.load(Ordering::Relaxed) < idx {
                        return TaskResult::Skipped;
                    }
                    let mut st = TaskState::from_prefix(&ctx, prefix);
                    let hit = st.dfs(depth.min(n), prefix.used);
                    match hit {
                        Some(assign) => {
                            first_hit.fetch_min(idx, Ordering::Relaxed);
                            TaskResult::Hit(st.nodes, assign)
                        }
                        None if st.aborted => TaskResult::Aborted(st.nodes),
                        None => TaskResult::Empty(st.nodes),
                    }
                })
                .collect()
        });

        // Deterministic reduction: scan tasks in index order. A hit counts
        // only once every earlier task finished cleanly; aborted tasks before
        // it (or anywhere, with no hit) make the level inconclusive.
        let mut level_nodes: u64 = 0;
        let mut abort_seen = false;
        let mut winner: Option<Vec<u8>> = None;
        for r in &results {
            match r {
                TaskResult::Empty(c) => level_nodes += c,
                TaskResult::Aborted(c) => {
                    level_nodes += c;
                    abort_seen = true;
                }
                TaskResult::Hit(c, assign) => {
                    level_nodes += c;
                    winner = Some(assign.clone());
                    break;
                }
                TaskResult::Skipped => {}
            }
        }

        if let Some(assign) = winner {
            let blocks = blocks_of_assignment(n, m, &assign);
            let witness = Partition::from_canonical_blocks(n, blocks.clone());
            if abort_seen {
                return Err(SolveError::Inconclusive(Box::new(InconclusiveReport {
                    ruled_out_above: m,
                    nodes_used: nodes_used + level_nodes,
                    best_found: Some((m, witness)),
                })));
            }
            let certificate = certify(&blocks, &table);
            return Ok(SolveOutcome::Value(Solution {
                value: m,
                witness,
                certificate,
            }));
        }
        if abort_seen {
            return Err(SolveError::Inconclusive(Box::new(InconclusiveReport {
                ruled_out_above: m,
                nodes_used: nodes_used + level_nodes,
                best_found: None,
            })));
        }
        nodes_used += level_nodes;
    }
    Ok(SolveOutcome::NoPartition)
}

/// Exhaustive oracle: every set partition via restricted growth strings, each
/// validated directly with the membership and coalition predicates. No
/// pruning, no subset table, no shared search state with `c_kf`.
pub fn naive_c_kf(g: &Graph, k: usize) -> Result<SolveOutcome, SolveError> {
    if k == 0 {
        return Err(SolveError::InvalidK);
    }
    let n = g.n();
    if n > NAIVE_ORDER_CAP {
        return Err(SolveError::OrderCapExceeded {
            order: n,
            cap: NAIVE_ORDER_CAP,
        });
    }

    fn partition_is_valid(g: &Graph, blocks: &[VertexSet], k: usize) -> bool {
        blocks.iter().all(|&b| {
            if is_kfd(g, b, k) {
                b.len() == k
            } else {
                blocks.iter().any(|&other| {
                    other != b && is_kfair_coalition(g, b, other, k).unwrap_or(false)
                })
            }
        })
    }

    let mut best: Option<Vec<VertexSet>> = None;
    let mut assign = vec![0u8; n];

    fn rec(
        i: usize,
        used: usize,
        g: &Graph,
        k: usize,
        assign: &mut Vec<u8>,
        best: &mut Option<Vec<VertexSet>>,
    ) {
        let n = g.n();
        if i == n {
            let blocks = blocks_of_assignment(n, used, assign);
            let improves = best.as_ref().map_or(true, |b| used > b.len());
            if improves && partition_is_valid(g, &blocks, k) {
                *best = Some(blocks);
            }
            return;
        }
        for c in 0..=used.min(n - 1) {
            assign[i] = c as u8;
            rec(i + 1, used.max(c + 1), g, k, assign, best);
        }
    }
    rec(0, 0, g, k, &mut assign, &mut best);

    match best {
        None => Ok(SolveOutcome::NoPartition),
        Some(blocks) => {
            let m = blocks.len();
            let entries = blocks
                .iter()
                .map(|&b| {
                    if is_kfd(g, b, k) {
                        Justification::StandaloneFair
                    } else {
                        let with = blocks
                            .iter()
                            .position(|&other| {
                                other != b
                                    && is_kfair_coalition(g, b, other, k).unwrap_or(false)
                            })
                            .expect("valid partition has a partner for every non-fair block");
                        Justification::Partner { with }
                    }
                })
                .collect();
            Ok(SolveOutcome::Value(Solution {
                value: m,
                witness: Partition::from_canonical_blocks(g.n(), blocks),
                certificate: PartitionCertificate { entries },
            }))
        }
    }
}
