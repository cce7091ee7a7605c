//! k-fair domination: the membership predicate, minimality, the optimizers
//! gamma_kf / gamma_f, ordered enumeration of k-fair dominating sets, and the
//! k-fair domatic number d_kf.
//!
//! A set S is k-fair dominating (kFD) when every vertex outside S has exactly
//! k neighbors inside S. The whole vertex set qualifies vacuously.

use std::collections::HashMap;

use thiserror::Error;

use crate::graph::{Graph, VertexSet};

/// Default guard for the exponential searches (d_kf and the coalition solver).
pub const DEFAULT_ORDER_CAP: usize = 14;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FairError {
    #[error("k must be at least 1")]
    InvalidK,
    #[error("set contains vertex {vertex}, out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("the given set is not k-fair dominating")]
    NotFairDominating,
    #[error("order {order} exceeds the search cap {cap}; raise the cap explicitly to proceed")]
    OrderCapExceeded { order: usize, cap: usize },
}

fn check_inputs(g: &Graph, s: VertexSet, k: usize) -> Result<(), FairError> {
    if k == 0 {
        return Err(FairError::InvalidK);
    }
    if !s.is_subset_of(g.vertex_set()) {
        let vertex = s.difference(g.vertex_set()).min_vertex().unwrap();
        return Err(FairError::VertexOutOfRange {
            vertex,
            order: g.n(),
        });
    }
    Ok(())
}

/// Fast-path predicate used by the optimizers and the solver. Callers must
/// guarantee `s` is within range and `k >= 1`.
pub(crate) fn is_kfd(g: &Graph, s: VertexSet, k: usize) -> bool {
    let sb = s.bits();
    let outside = g.vertex_set().bits() & !sb;
    let mut rest = outside;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if (g.neighbors(v).bits() & sb).count_ones() as usize != k {
            return false;
        }
    }
    true
}

/// True when every vertex outside `s` has exactly `k` neighbors in `s`.
/// `s = V` is accepted vacuously.
pub fn is_kfair_dominating(g: &Graph, s: VertexSet, k: usize) -> Result<bool, FairError> {
    check_inputs(g, s, k)?;
    Ok(is_kfd(g, s, k))
}

/// Per-vertex view of how far a candidate set is from k-fairness.
pub struct FairnessProfile<'g> {
    graph: &'g Graph,
    set: VertexSet,
    k: usize,
}

impl<'g> FairnessProfile<'g> {
    pub fn new(graph: &'g Graph, set: VertexSet, k: usize) -> Result<Self, FairError> {
        check_inputs(graph, set, k)?;
        Ok(FairnessProfile { graph, set, k })
    }

    /// `|N(v) & S| - k` for vertices outside the set, `None` for members.
    pub fn defect(&self, v: usize) -> Option<i64> {
        if self.set.contains(v) {
            None
        } else {
            Some(self.graph.neighbors(v).intersection_size(self.set) as i64 - self.k as i64)
        }
    }

    pub fn defects(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.graph
            .vertices()
            .filter_map(|v| self.defect(v).map(|d| (v, d)))
    }

    pub fn is_fair(&self) -> bool {
        self.defects().all(|(_, d)| d == 0)
    }
}

/// True when no proper subset of `s` is k-fair dominating. Requires `s`
/// itself to be k-fair dominating.
pub fn is_minimal_kfd(g: &Graph, s: VertexSet, k: usize) -> Result<bool, FairError> {
    check_inputs(g, s, k)?;
    if !is_kfd(g, s, k) {
        return Err(FairError::NotFairDominating);
    }
    let bits = s.bits();
    // Standard submask walk over proper subsets, including the empty set.
    let mut sub = bits.wrapping_sub(1) & bits;
    loop {
        if is_kfd(g, VertexSet::from_bits(sub), k) {
            return Ok(false);
        }
        if sub == 0 {
            break;
        }
        sub = sub.wrapping_sub(1) & bits;
    }
    Ok(true)
}

/// Streams the k-fair dominating sets of `g` in increasing size, and within a
/// size in lexicographic order of the sorted vertex sequences. No duplicates.
pub fn enumerate_kfd(
    g: &Graph,
    k: usize,
    max_size: Option<usize>,
) -> Result<KfdSets<'_>, FairError> {
    if k == 0 {
        return Err(FairError::InvalidK);
    }
    let limit = max_size.unwrap_or(g.n()).min(g.n());
    Ok(KfdSets {
        g,
        k,
        limit,
        size: 0,
        indices: None,
        done: false,
    })
}

pub struct KfdSets<'g> {
    g: &'g Graph,
    k: usize,
    limit: usize,
    size: usize,
    indices: Option<Vec<usize>>,
    done: bool,
}

impl KfdSets<'_> {
    /// Advances to the next size-`self.size` combination in lexicographic
    /// order, or moves to the next size. Returns false when exhausted.
    fn advance(&mut self) -> bool {
        let n = self.g.n();
        loop {
            match &mut self.indices {
                None => {
                    if self.size > self.limit {
                        return false;
                    }
                    if self.size == 0 {
                        // The single empty combination.
                        self.indices = Some(Vec::new());
                        return true;
                    }
                    if self.size > n {
                        return false;
                    }
                    self.indices = Some((0..self.size).collect());
                    return true;
                }
                Some(ix) => {
                    let s = ix.len();
                    if s == 0 {
                        self.size += 1;
                        self.indices = None;
                        continue;
                    }
                    // Rightmost index that can still move right.
                    let mut i = s;
                    loop {
                        if i == 0 {
                            self.size += 1;
                            self.indices = None;
                            break;
                        }
                        i -= 1;
                        if ix[i] < n - (s - i) {
                            ix[i] += 1;
                            for j in i + 1..s {
                                ix[j] = ix[j - 1] + 1;
                            }
                            return true;
                        }
                    }
                }
            }
        }
    }
}

impl Iterator for KfdSets<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if self.done {
            return None;
        }
        while self.advance() {
            let set: VertexSet = self
                .indices
                .as_ref()
                .unwrap()
                .iter()
                .copied()
                .collect();
            if is_kfd(self.g, set, self.k) {
                return Some(set);
            }
        }
        self.done = true;
        None
    }
}

/// Minimum size of a k-fair dominating set together with the first witness in
/// enumeration order. Always defined: `V` qualifies vacuously.
pub fn gamma_kf_witness(g: &Graph, k: usize) -> Result<(usize, VertexSet), FairError> {
    let mut it = enumerate_kfd(g, k, None)?;
    let w = it.next().expect("the full vertex set is k-fair dominating");
    Ok((w.len(), w))
}

/// The k-fair domination number gamma_kf.
pub fn gamma_kf(g: &Graph, k: usize) -> Result<usize, FairError> {
    gamma_kf_witness(g, k).map(|(size, _)| size)
}

/// The fair domination number: the minimum size of a nonempty set that is
/// k-fair dominating for some k >= 1. The edgeless graph returns n by
/// convention (and indeed only V qualifies there).
pub fn gamma_f(g: &Graph) -> usize {
    let delta = g.max_degree();
    if delta == 0 {
        return g.n();
    }
    // A proper kFD set forces k <= max degree; V itself works for every k.
    (1..=delta)
        .map(|k| gamma_kf(g, k).expect("k >= 1"))
        .min()
        .unwrap()
}

pub(crate) struct KfdTable {
    words: Vec<u64>,
}

impl KfdTable {
    /// Precomputes kFD status for every subset of `V`. Immutable afterwards,
    /// so it is safe to share across solver workers.
    pub(crate) fn build(g: &Graph, k: usize) -> KfdTable {
        let n = g.n();
        let total = 1usize << n;
        let mut words = vec![0u64; total.div_ceil(64)];
        for mask in 0..total as u64 {
            if is_kfd(g, VertexSet::from_bits(mask), k) {
                words[(mask / 64) as usize] |= 1 << (mask % 64);
            }
        }
        KfdTable { words }
    }

    #[inline]
    pub(crate) fn get(&self, mask: u64) -> bool {
        self.words[(mask / 64) as usize] >> (mask % 64) & 1 == 1
    }
}

/// The k-fair domatic number: the maximum number of blocks in a partition of
/// V into k-fair dominating sets. At least 1, since `{V}` always works.
pub fn d_kf(g: &Graph, k: usize) -> Result<usize, FairError> {
    d_kf_capped(g, k, DEFAULT_ORDER_CAP)
}

pub fn d_kf_capped(g: &Graph, k: usize, cap: usize) -> Result<usize, FairError> {
    if k == 0 {
        return Err(FairError::InvalidK);
    }
    if g.n() > cap {
        return Err(FairError::OrderCapExceeded {
            order: g.n(),
            cap,
        });
    }
    let table = KfdTable::build(g, k);
    let full = g.vertex_set().bits();
    let mut memo: HashMap<u64, usize> = HashMap::new();

    // Best cover of `mask` by disjoint kFD sets (0 when impossible, except
    // mask = 0 which covers trivially).
    fn cover(mask: u64, table: &KfdTable, memo: &mut HashMap<u64, usize>) -> Option<usize> {
        if mask == 0 {
            return Some(0);
        }
        if let Some(&v) = memo.get(&mask) {
            return if v == 0 { None } else { Some(v) };
        }
        let low = 1u64 << mask.trailing_zeros();
        let rest = mask & !low;
        let mut best: Option<usize> = None;
        // All subsets of `mask` containing its lowest vertex.
        let mut sub = rest;
        loop {
            let cand = sub | low;
            if table.get(cand) {
                if let Some(tail) = cover(mask & !cand, table, memo) {
                    let score = tail + 1;
                    if best.map_or(true, |b| score > b) {
                        best = Some(score);
                    }
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        memo.insert(mask, best.unwrap_or(0));
        best
    }

    Ok(cover(full, &table, &mut memo).expect("the full vertex set always covers"))
}
