//! Verification suites: a table of known closed-form values for standard
//! families, census sweeps over graph6 corpora, and extremal scans. Reports
//! serialize to JSON and render as plain text.

use serde::{Deserialize, Serialize};

use crate::fair::{d_kf_capped, enumerate_kfd, gamma_f};
use crate::formats::{encode_graph6, parse_graph6};
use crate::graph::{Graph, GraphError};
use crate::partition::partner_count;
use crate::solver::{c_kf, naive_c_kf, SolveError, SolveOutcome, SolverConfig, NAIVE_ORDER_CAP};

/// A named family instance whose coalition number (or a bound on it) is
/// known in closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum Family {
    Complete { n: usize },
    CompleteBipartite { s: usize, t: usize },
    Path { n: usize },
    Cycle { n: usize },
    /// P_n with one pendant per vertex.
    PathCorona { n: usize },
    /// C_n with one pendant per vertex.
    CycleCorona { n: usize },
    /// The triangular prism, one of the two cubic graphs on six vertices.
    Prism,
    /// K_{3,3}, the other cubic graph on six vertices.
    Utility,
}

impl Family {
    pub fn build(&self) -> Result<Graph, GraphError> {
        match *self {
            Family::Complete { n } => Graph::complete(n),
            Family::CompleteBipartite { s, t } => Graph::complete_bipartite(s, t),
            Family::Path { n } => Graph::path(n),
            Family::Cycle { n } => Graph::cycle(n),
            Family::PathCorona { n } => Graph::path(n)?.corona(1),
            Family::CycleCorona { n } => Graph::cycle(n)?.corona(1),
            Family::Prism => Ok(Graph::triangular_prism()),
            Family::Utility => Ok(Graph::utility_graph()),
        }
    }

    pub fn order(&self) -> usize {
        match *self {
            Family::Complete { n } => n,
            Family::CompleteBipartite { s, t } => s + t,
            Family::Path { n } => n,
            Family::Cycle { n } => n,
            Family::PathCorona { n } => 2 * n,
            Family::CycleCorona { n } => 2 * n,
            Family::Prism | Family::Utility => 6,
        }
    }

    pub fn label(&self) -> String {
        match *self {
            Family::Complete { n } => format!("complete({n})"),
            Family::CompleteBipartite { s, t } => format!("complete-bipartite({s},{t})"),
            Family::Path { n } => format!("path({n})"),
            Family::Cycle { n } => format!("cycle({n})"),
            Family::PathCorona { n } => format!("path-corona({n})"),
            Family::CycleCorona { n } => format!("cycle-corona({n})"),
            Family::Prism => "prism".to_string(),
            Family::Utility => "utility".to_string(),
        }
    }
}

/// Outcome of an exact solve, for table purposes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum StrictValue {
    Exact { value: usize },
    NoPartition,
}

impl StrictValue {
    pub fn of(outcome: &SolveOutcome) -> StrictValue {
        match outcome.value() {
            Some(value) => StrictValue::Exact { value },
            None => StrictValue::NoPartition,
        }
    }
}

impl std::fmt::Display for StrictValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            StrictValue::Exact { value } => write!(f, "{value}"),
            StrictValue::NoPartition => write!(f, "no-partition"),
        }
    }
}

/// What the table claims about an instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Expected {
    /// The solver must reproduce this value exactly.
    Exact { value: usize },
    /// Only an upper bound is available; the solver value must not exceed it.
    UpperOnly { bound: usize },
    /// A published value that the strict partition definition provably
    /// contradicts. The solver must reproduce `strict`; the row is reported
    /// as a reproduced discrepancy, never as a failure.
    Discrepant { stated: usize, strict: StrictValue },
}

/// The closed-form table entry for a family instance at a given k, when one
/// is known.
///
/// The discrepant rows are pinned by independent brute force or by an
/// explicit witness plus a sound upper bound:
/// - path(1) at k = 2: stated 1, but the lone block has size 1 != 2;
/// - path-corona(2) at k = 2: stated 2, but the graph is the 4-path, whose
///   own row is 3 (a three-block witness exists);
/// - path-corona(5) at k = 2: stated 2, but a three-block witness exists;
/// - cycle-corona(n) for n >= 6 divisible by 3, at k = 2: stated 3, but the
///   pendant block together with the three spacing-3 vertex classes forms a
///   four-block partition, and the degree-gap bound closes it at 4.
pub fn closed_form(family: Family, k: usize) -> Option<Expected> {
    match family {
        Family::Complete { n } => {
            if k >= 2 && k + 1 <= n {
                Some(Expected::Exact { value: n - k + 2 })
            } else {
                None
            }
        }
        Family::Path { n } => {
            if k != 2 || n == 0 {
                return None;
            }
            Some(match n {
                1 => Expected::Discrepant {
                    stated: 1,
                    strict: StrictValue::NoPartition,
                },
                2 | 3 => Expected::Exact { value: 2 },
                _ => Expected::Exact { value: 3 },
            })
        }
        Family::Cycle { n } => {
            if k != 2 || n < 3 {
                return None;
            }
            Some(Expected::Exact {
                value: if n % 2 == 0 { 4 } else { 3 },
            })
        }
        Family::PathCorona { n } => {
            if k != 2 || n == 0 {
                return None;
            }
            Some(match n {
                1 | 3 => Expected::Exact { value: 2 },
                2 | 5 => Expected::Discrepant {
                    stated: 2,
                    strict: StrictValue::Exact { value: 3 },
                },
                _ => Expected::Exact { value: 3 },
            })
        }
        Family::CycleCorona { n } => {
            if k != 2 || n < 3 {
                return None;
            }
            Some(if n == 3 {
                Expected::Exact { value: 4 }
            } else if n % 3 == 0 {
                Expected::Discrepant {
                    stated: 3,
                    strict: StrictValue::Exact { value: 4 },
                }
            } else {
                Expected::Exact { value: 3 }
            })
        }
        Family::Prism => (k == 2).then_some(Expected::Exact { value: 4 }),
        Family::Utility => (k == 2).then_some(Expected::Exact { value: 3 }),
        Family::CompleteBipartite { s, t } => {
            let (s, t) = (s.min(t), s.max(t));
            if k < 2 {
                return None;
            }
            if k == s && s == t {
                Some(Expected::Exact { value: 4 })
            } else if k == s {
                Some(Expected::Exact { value: 2 })
            } else if k > s {
                Some(Expected::Exact { value: 2 })
            } else if s < 3 * k - 1 {
                Some(Expected::UpperOnly { bound: t - k + 3 })
            } else {
                Some(Expected::UpperOnly {
                    bound: s + t + 4 - 4 * k,
                })
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFormRow {
    #[serde(flatten)]
    pub family: Family,
    pub k: usize,
    pub expected: Expected,
}

/// Every table instance of order at most `max_order`.
pub fn closed_form_table(max_order: usize) -> Vec<ClosedFormRow> {
    let mut rows = Vec::new();
    let mut push = |family: Family, k: usize| {
        if family.order() <= max_order {
            if let Some(expected) = closed_form(family, k) {
                rows.push(ClosedFormRow {
                    family,
                    k,
                    expected,
                });
            }
        }
    };

    for n in 3..=max_order {
        for k in 2..n {
            push(Family::Complete { n }, k);
        }
    }
    for n in 1..=max_order {
        push(Family::Path { n }, 2);
    }
    for n in 3..=max_order {
        push(Family::Cycle { n }, 2);
    }
    for n in 1..=max_order / 2 {
        push(Family::PathCorona { n }, 2);
    }
    for n in 3..=max_order / 2 {
        push(Family::CycleCorona { n }, 2);
    }
    push(Family::Prism, 2);
    push(Family::Utility, 2);
    for s in 1..=max_order {
        for t in s..=max_order.saturating_sub(s) {
            for k in 2..=t {
                push(Family::CompleteBipartite { s, t }, k);
            }
        }
    }
    rows
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RowStatus {
    /// Exact value reproduced.
    Match,
    /// Value within the stated bound.
    WithinBound,
    /// A known-discrepant row whose strict value was reproduced.
    DiscrepancyReproduced,
    /// The solver disagrees with the table. A failure.
    Mismatch,
    /// Not solved (cap or budget); never counts as a pass.
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteRow {
    pub label: String,
    #[serde(flatten)]
    pub family: Family,
    pub k: usize,
    pub expected: Expected,
    pub actual: Option<StrictValue>,
    pub status: RowStatus,
    /// Independent brute-force agreement, where the oracle ran.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_agrees: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteSummary {
    pub total: usize,
    pub matches: usize,
    pub within_bound: usize,
    pub discrepancies_reproduced: usize,
    pub mismatches: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub max_order: usize,
    pub rows: Vec<SuiteRow>,
    pub summary: SuiteSummary,
}

impl SuiteReport {
    /// True when every row that was solved agrees with the table.
    pub fn passed(&self) -> bool {
        self.summary.mismatches == 0
    }
}

/// Runs every closed-form instance within `max_order` against the solver.
/// Corona rows small enough for the oracle are additionally cross-checked by
/// brute force, and disagreement is a mismatch.
pub fn run_theorem_suite(max_order: usize, cfg: &SolverConfig) -> SuiteReport {
    let mut rows = Vec::new();
    let mut summary = SuiteSummary::default();
    for row in closed_form_table(max_order.min(cfg.order_cap)) {
        let g = row
            .family
            .build()
            .expect("table families are constructible");
        let mut note = None;
        let actual = match c_kf(&g, row.k, cfg) {
            Ok(outcome) => Some(StrictValue::of(&outcome)),
            Err(e @ SolveError::Inconclusive(_)) | Err(e @ SolveError::OrderCapExceeded { .. }) => {
                note = Some(e.to_string());
                None
            }
            Err(e) => panic!("unexpected solver error: {e}"),
        };
        let corona_row = matches!(
            row.family,
            Family::PathCorona { .. } | Family::CycleCorona { .. }
        );
        let oracle_agrees = if corona_row && g.n() <= NAIVE_ORDER_CAP && actual.is_some() {
            let brute = StrictValue::of(&naive_c_kf(&g, row.k).expect("within oracle cap"));
            Some(Some(brute) == actual)
        } else {
            None
        };
        let status = match (actual, row.expected) {
            (None, _) => RowStatus::Skipped,
            (Some(a), Expected::Exact { value }) => {
                if a == (StrictValue::Exact { value }) && oracle_agrees != Some(false) {
                    RowStatus::Match
                } else {
                    RowStatus::Mismatch
                }
            }
            (Some(a), Expected::UpperOnly { bound }) => match a {
                StrictValue::Exact { value } if value > bound => RowStatus::Mismatch,
                _ => RowStatus::WithinBound,
            },
            (Some(a), Expected::Discrepant { strict, .. }) => {
                if a == strict && oracle_agrees != Some(false) {
                    RowStatus::DiscrepancyReproduced
                } else {
                    RowStatus::Mismatch
                }
            }
        };
        summary.total += 1;
        match status {
            RowStatus::Match => summary.matches += 1,
            RowStatus::WithinBound => summary.within_bound += 1,
            RowStatus::DiscrepancyReproduced => summary.discrepancies_reproduced += 1,
            RowStatus::Mismatch => summary.mismatches += 1,
            RowStatus::Skipped => summary.skipped += 1,
        }
        rows.push(SuiteRow {
            label: row.family.label(),
            family: row.family,
            k: row.k,
            expected: row.expected,
            actual,
            status,
            oracle_agrees,
            note,
        });
    }
    SuiteReport {
        max_order,
        rows,
        summary,
    }
}

/// The census checks. Each runs only where its hypotheses hold; skips are
/// recorded separately from passes and failures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    /// Connected, k >= 2, n >= 2: the value is at least twice the k-fair
    /// domatic number.
    DoubledDomaticLower,
    /// min degree < k <= max degree + 1: the value is at most Delta - k + 3.
    DegreeGapUpper,
    /// k <= max degree + 1: every block of the solver witness has at most
    /// Delta - k + 2 coalition partners.
    PartnerCap,
    /// Trees at k = 2: the value is at most floor(n/2) + 1.
    TreeHalfOrderUpper,
    /// k-regular graphs: the value lies in [3, 4].
    RegularSandwich,
    /// Cubic graphs at k = 2: every 2-fair dominating set has at least
    /// ceil(2n/5) vertices.
    CubicFairFloor,
    /// Even k: the value is at least the (k/2)-fair domatic number. Checked
    /// empirically; reported as a finding either way, never a failure.
    HalfKDomaticLower,
}

pub const ALL_CHECKS: [CheckKind; 7] = [
    CheckKind::DoubledDomaticLower,
    CheckKind::DegreeGapUpper,
    CheckKind::PartnerCap,
    CheckKind::TreeHalfOrderUpper,
    CheckKind::RegularSandwich,
    CheckKind::CubicFairFloor,
    CheckKind::HalfKDomaticLower,
];

impl CheckKind {
    pub fn name(&self) -> &'static str {
        match self {
            CheckKind::DoubledDomaticLower => "doubled-domatic-lower",
            CheckKind::DegreeGapUpper => "degree-gap-upper",
            CheckKind::PartnerCap => "partner-cap",
            CheckKind::TreeHalfOrderUpper => "tree-half-order-upper",
            CheckKind::RegularSandwich => "regular-sandwich",
            CheckKind::CubicFairFloor => "cubic-fair-floor",
            CheckKind::HalfKDomaticLower => "half-k-domatic-lower",
        }
    }

    pub fn from_name(name: &str) -> Option<CheckKind> {
        ALL_CHECKS.iter().copied().find(|c| c.name() == name)
    }
}

/// A failing check always carries enough to replay it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureWitness {
    pub graph6: String,
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partition: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub set: Option<Vec<usize>>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum CheckOutcome {
    Pass,
    Fail { witness: FailureWitness },
    Skipped { reason: String },
    Finding { satisfied: bool, detail: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check: String,
    #[serde(flatten)]
    pub outcome: CheckOutcome,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub graph6: String,
    pub order: usize,
    pub c_kf: Option<StrictValue>,
    pub checks: Vec<CheckResult>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusParseError {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusSummary {
    pub graphs: usize,
    pub passes: usize,
    pub failures: usize,
    pub skips: usize,
    pub findings: usize,
    pub findings_violated: usize,
    pub parse_errors: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub corpus: String,
    pub k: usize,
    pub rows: Vec<CensusRow>,
    pub parse_errors: Vec<CorpusParseError>,
    pub summary: CensusSummary,
}

impl CensusReport {
    pub fn passed(&self) -> bool {
        self.summary.failures == 0
    }
}

/// Parses a one-graph-per-line graph6 corpus; malformed lines are collected
/// with their positions and the rest of the run continues.
pub fn parse_corpus(text: &str) -> (Vec<(usize, String, Graph)>, Vec<CorpusParseError>) {
    let mut graphs = Vec::new();
    let mut errors = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        match parse_graph6(line) {
            Ok(g) => graphs.push((i + 1, line.to_string(), g)),
            Err(e) => errors.push(CorpusParseError {
                line: i + 1,
                message: e.to_string(),
            }),
        }
    }
    (graphs, errors)
}

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// Runs the selected checks over every graph of a corpus at one k.
pub fn run_census(
    corpus: &str,
    text: &str,
    k: usize,
    checks: &[CheckKind],
    cfg: &SolverConfig,
) -> CensusReport {
    let (mut graphs, parse_errors) = parse_corpus(text);
    graphs.sort_by(|a, b| a.1.cmp(&b.1));

    let mut rows = Vec::new();
    let mut summary = CensusSummary {
        parse_errors: parse_errors.len(),
        ..Default::default()
    };

    for (_line, g6, g) in &graphs {
        summary.graphs += 1;
        let n = g.n();
        let max_deg = g.max_degree();
        let min_deg = g.min_degree();

        let solved = c_kf(g, k, cfg);
        let (value, witness) = match &solved {
            Ok(SolveOutcome::Value(s)) => (Some(s.value), Some(&s.witness)),
            Ok(SolveOutcome::NoPartition) => (None, None),
            Err(_) => (None, None),
        };
        let solve_failed = solved.is_err();
        let c_kf_value = if solve_failed {
            None
        } else {
            Some(match value {
                Some(v) => StrictValue::Exact { value: v },
                None => StrictValue::NoPartition,
            })
        };

        let mut results = Vec::new();
        for &check in checks {
            let outcome = if solve_failed && check != CheckKind::CubicFairFloor {
                CheckOutcome::Skipped {
                    reason: "solver inconclusive".to_string(),
                }
            } else {
                match check {
                    CheckKind::DoubledDomaticLower => {
                        if !(k >= 2 && n >= 2 && g.is_connected()) {
                            skip("needs a connected graph with k >= 2 and n >= 2")
                        } else {
                            let d = d_kf_capped(g, k, cfg.order_cap)
                                .expect("solved graphs fit the cap");
                            match value {
                                Some(v) if v >= 2 * d => CheckOutcome::Pass,
                                Some(v) => fail(g6, k, None, None, format!(
                                    "value {v} is below the doubled domatic bound {}",
                                    2 * d
                                )),
                                None => fail(g6, k, None, None, format!(
                                    "no partition exists, yet the doubled domatic bound is {}",
                                    2 * d
                                )),
                            }
                        }
                    }
                    CheckKind::DegreeGapUpper => {
                        if !(k > min_deg && k <= max_deg + 1) {
                            skip("needs min degree < k <= max degree + 1")
                        } else {
                            let bound = max_deg + 3 - k;
                            match value {
                                Some(v) if v > bound => fail(g6, k, None, None, format!(
                                    "value {v} exceeds the degree-gap bound {bound}"
                                )),
                                _ => CheckOutcome::Pass,
                            }
                        }
                    }
                    CheckKind::PartnerCap => {
                        if k > max_deg + 1 {
                            skip("needs k <= max degree + 1")
                        } else {
                            match witness {
                                None => skip("no witness partition"),
                                Some(w) => {
                                    let cap = max_deg + 2 - k;
                                    let mut bad = None;
                                    for i in 0..w.len() {
                                        let pc = partner_count(g, w, k, i)
                                            .expect("witness indices are valid");
                                        if pc > cap {
                                            bad = Some((i, pc));
                                            break;
                                        }
                                    }
                                    match bad {
                                        None => CheckOutcome::Pass,
                                        Some((i, pc)) => fail(
                                            g6,
                                            k,
                                            Some(w.to_vecs()),
                                            None,
                                            format!(
                                                "block {i} has {pc} partners, above the cap {cap}"
                                            ),
                                        ),
                                    }
                                }
                            }
                        }
                    }
                    CheckKind::TreeHalfOrderUpper => {
                        if !(k == 2 && g.is_tree()) {
                            skip("needs a tree with k = 2")
                        } else {
                            let bound = n / 2 + 1;
                            match value {
                                Some(v) if v > bound => fail(g6, k, None, None, format!(
                                    "value {v} exceeds the tree bound {bound}"
                                )),
                                _ => CheckOutcome::Pass,
                            }
                        }
                    }
                    CheckKind::RegularSandwich => {
                        if g.regularity() != Some(k) {
                            skip("needs a k-regular graph")
                        } else {
                            match value {
                                Some(v) if (3..=4).contains(&v) => CheckOutcome::Pass,
                                Some(v) => fail(g6, k, None, None, format!(
                                    "value {v} escapes the regular sandwich [3, 4]"
                                )),
                                None => fail(
                                    g6,
                                    k,
                                    None,
                                    None,
                                    "no partition exists on a k-regular graph".to_string(),
                                ),
                            }
                        }
                    }
                    CheckKind::CubicFairFloor => {
                        if !(k == 2 && g.regularity() == Some(3)) {
                            skip("needs a cubic graph with k = 2")
                        } else {
                            let floor = ceil_div(2 * n, 5);
                            let offender = enumerate_kfd(g, 2, None)
                                .expect("k is valid")
                                .find(|s| s.len() < floor);
                            match offender {
                                None => CheckOutcome::Pass,
                                Some(s) => fail(
                                    g6,
                                    k,
                                    None,
                                    Some(s.to_vec()),
                                    format!(
                                        "2-fair dominating set of size {} is below the floor {floor}",
                                        s.len()
                                    ),
                                ),
                            }
                        }
                    }
                    CheckKind::HalfKDomaticLower => {
                        if k % 2 != 0 {
                            skip("needs even k")
                        } else {
                            let d = d_kf_capped(g, k / 2, cfg.order_cap)
                                .expect("solved graphs fit the cap");
                            let (satisfied, detail) = match value {
                                Some(v) => (
                                    v >= d,
                                    format!("value {v} vs half-k domatic number {d}"),
                                ),
                                None => (
                                    false,
                                    format!("no partition, half-k domatic number {d}"),
                                ),
                            };
                            CheckOutcome::Finding { satisfied, detail }
                        }
                    }
                }
            };
            match &outcome {
                CheckOutcome::Pass => summary.passes += 1,
                CheckOutcome::Fail { .. } => summary.failures += 1,
                CheckOutcome::Skipped { .. } => summary.skips += 1,
                CheckOutcome::Finding { satisfied, .. } => {
                    summary.findings += 1;
                    if !satisfied {
                        summary.findings_violated += 1;
                    }
                }
            }
            results.push(CheckResult {
                check: check.name().to_string(),
                outcome,
            });
        }
        rows.push(CensusRow {
            graph6: g6.clone(),
            order: n,
            c_kf: c_kf_value,
            checks: results,
        });
    }

    CensusReport {
        corpus: corpus.to_string(),
        k,
        rows,
        parse_errors,
        summary,
    }
}

fn skip(reason: &str) -> CheckOutcome {
    CheckOutcome::Skipped {
        reason: reason.to_string(),
    }
}

fn fail(
    graph6: &str,
    k: usize,
    partition: Option<Vec<Vec<usize>>>,
    set: Option<Vec<usize>>,
    detail: String,
) -> CheckOutcome {
    CheckOutcome::Fail {
        witness: FailureWitness {
            graph6: graph6.to_string(),
            k,
            partition,
            set,
            detail,
        },
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingExtremalRow {
    pub order: usize,
    pub graph6: String,
    pub value: Option<usize>,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeExtremalRow {
    pub graph6: String,
    pub order: usize,
    pub value: Option<StrictValue>,
    /// "full-order", "order-minus-one", or absent.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extremal_class: Option<String>,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalReport {
    pub matching_rows: Vec<MatchingExtremalRow>,
    pub tree_rows: Vec<TreeExtremalRow>,
    pub pass: bool,
}

fn is_path_graph(g: &Graph) -> bool {
    g.is_tree() && g.max_degree() <= 2
}

/// Extremal scan at k = 2:
/// - for every even order, the complement of a perfect matching (the unique
///   (n-2)-regular graph) must reach the full order n;
/// - over the supplied tree corpus, value n occurs only for the 2-path and
///   value n-1 only for the 3- and 4-paths.
pub fn extremal_scan(
    max_order: usize,
    trees: &[(String, Graph)],
    cfg: &SolverConfig,
) -> ExtremalReport {
    let mut matching_rows = Vec::new();
    let mut n = 2;
    while n <= max_order.min(cfg.order_cap) {
        let g = Graph::complete_minus_perfect_matching(n).expect("even order");
        let value = c_kf(&g, 2, cfg).ok().and_then(|o| o.value());
        matching_rows.push(MatchingExtremalRow {
            order: n,
            graph6: encode_graph6(&g),
            value,
            pass: value == Some(n),
        });
        n += 2;
    }

    let mut tree_rows = Vec::new();
    for (g6, g) in trees {
        let n = g.n();
        let outcome = c_kf(g, 2, cfg).ok().map(|o| StrictValue::of(&o));
        let value = match outcome {
            Some(StrictValue::Exact { value }) => Some(value),
            _ => None,
        };
        let (class, pass) = match value {
            Some(v) if v == n => (
                Some("full-order".to_string()),
                n == 2 && is_path_graph(g),
            ),
            Some(v) if v + 1 == n => (
                Some("order-minus-one".to_string()),
                (n == 3 || n == 4) && is_path_graph(g),
            ),
            _ => (None, true),
        };
        tree_rows.push(TreeExtremalRow {
            graph6: g6.clone(),
            order: n,
            value: outcome,
            extremal_class: class,
            pass,
        });
    }

    let pass = matching_rows.iter().all(|r| r.pass) && tree_rows.iter().all(|r| r.pass);
    ExtremalReport {
        matching_rows,
        tree_rows,
        pass,
    }
}

/// True when the tree is some smaller tree with one pendant attached to each
/// of its vertices. For orders above two this is equivalent to: half the
/// vertices are leaves and every internal vertex has exactly one leaf
/// neighbor.
pub fn is_tree_corona(g: &Graph) -> bool {
    let n = g.n();
    if n % 2 != 0 {
        return false;
    }
    if n == 2 {
        return true;
    }
    let leaves: Vec<usize> = g.vertices().filter(|&v| g.degree(v) == 1).collect();
    if leaves.len() != n / 2 {
        return false;
    }
    g.vertices().filter(|&v| g.degree(v) > 1).all(|v| {
        g.neighbors(v).iter().filter(|&u| g.degree(u) == 1).count() == 1
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeFairRow {
    pub graph6: String,
    pub order: usize,
    pub gamma_f: usize,
    pub at_half_order: bool,
    pub corona: bool,
    pub pass: bool,
}

/// Checks, over a tree corpus, that twice the fair domination number never
/// exceeds the order, with equality exactly on coronas of smaller trees.
pub fn tree_fair_domination_scan(trees: &[(String, Graph)]) -> (Vec<TreeFairRow>, bool) {
    let mut rows = Vec::new();
    for (g6, g) in trees {
        let n = g.n();
        let gf = gamma_f(g);
        let at_half = 2 * gf == n;
        let corona = is_tree_corona(g);
        let pass = 2 * gf <= n && at_half == corona;
        rows.push(TreeFairRow {
            graph6: g6.clone(),
            order: n,
            gamma_f: gf,
            at_half_order: at_half,
            corona,
            pass,
        });
    }
    let ok = rows.iter().all(|r| r.pass);
    (rows, ok)
}
