//! Certified bounds on the k-fair coalition number, each tagged with the
//! structural fact it comes from. Bounds are only claimed where their
//! hypotheses hold, so `lower <= C_kf <= upper` whenever both are present.

use serde::{Deserialize, Serialize};

use crate::fair::{d_kf, DEFAULT_ORDER_CAP};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum UpperRule {
    /// k exceeds the minimum degree, so every fair set pins the same
    /// minimum-degree vertex: at most Delta - k + 3 blocks.
    DegreeGap,
    /// k-regular graphs carry a sandwich 3 <= C_kf <= 4.
    RegularSandwich,
    /// Trees with k = 2: at most floor(n/2) + 1 blocks.
    TreeHalfOrder,
    /// Every partition has at most n blocks.
    Order,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LowerRule {
    /// Splitting each block of a maximum fair-domatic partition doubles it:
    /// C_kf >= 2 d_kf on connected graphs with k >= 2.
    DoubledDomatic,
    /// The k-regular sandwich again, from below.
    RegularSandwich,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub upper: usize,
    pub upper_rule: UpperRule,
    pub lower: Option<usize>,
    pub lower_rule: Option<LowerRule>,
}

/// Tightest applicable upper bound with its provenance.
///
/// The degree-gap bound additionally requires k <= Delta + 1; above that the
/// only fair set is V itself and the stated formula no longer holds, so the
/// report falls back to the trivial bound.
pub fn upper_bound(g: &Graph, k: usize) -> (usize, UpperRule) {
    let n = g.n();
    let max_deg = g.max_degree();
    let mut best = (n, UpperRule::Order);

    if g.is_tree() && k == 2 {
        let b = n / 2 + 1;
        if b < best.0 {
            best = (b, UpperRule::TreeHalfOrder);
        }
    }
    if g.regularity() == Some(k) {
        if 4 < best.0 {
            best = (4, UpperRule::RegularSandwich);
        }
    }
    if k > g.min_degree() && k <= max_deg + 1 {
        let b = max_deg + 3 - k;
        if b <= best.0 {
            best = (b, UpperRule::DegreeGap);
        }
    }
    best
}

/// Tightest applicable lower bound, when any hypothesis holds.
///
/// The doubled-domatic bound needs a connected graph with k >= 2 and at
/// least two vertices (splitting a one-vertex fair set is impossible). The
/// regular sandwich floor excludes the single-edge graph, whose order is too
/// small to reach three blocks.
pub fn lower_bound(g: &Graph, k: usize) -> Option<(usize, LowerRule)> {
    let mut best: Option<(usize, LowerRule)> = None;
    if g.regularity() == Some(k) && !(k == 1 && g.n() == 2) {
        best = Some((3, LowerRule::RegularSandwich));
    }
    if k >= 2 && g.n() >= 2 && g.n() <= DEFAULT_ORDER_CAP && g.is_connected() {
        let d = d_kf(g, k).expect("order already checked against the cap");
        let b = 2 * d;
        if best.map_or(true, |(v, _)| b >= v) {
            best = Some((b, LowerRule::DoubledDomatic));
        }
    }
    best
}

pub fn bounds_report(g: &Graph, k: usize) -> BoundsReport {
    let (upper, upper_rule) = upper_bound(g, k);
    let lower = lower_bound(g, k);
    BoundsReport {
        upper,
        upper_rule,
        lower: lower.map(|(v, _)| v),
        lower_rule: lower.map(|(_, r)| r),
    }
}
