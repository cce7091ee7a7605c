//! Command-line surface for the library: solving, validating, bounds,
//! DOT export, the closed-form verification suite, and census sweeps.
//!
//! Exit codes are a stable contract:
//! 0 value / success, 1 failed verification, 2 bad input, 3 no partition
//! exists, 4 inconclusive (budget), 5 invalid partition.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::bounds::{bounds_report, BoundsReport};
use crate::fair::DEFAULT_ORDER_CAP;
use crate::formats::{encode_graph6, parse_blocks, parse_edge_list, parse_graph6};
use crate::graph::Graph;
use crate::partition::{
    coalition_graph, validate_partition, Justification, Partition, PartitionCertificate,
    ValidationOutcome, Violation,
};
use crate::solver::{c_kf, SolveError, SolveOutcome, SolverConfig, DEFAULT_NODE_BUDGET};
use crate::verify::{
    extremal_scan, parse_corpus, run_census, run_theorem_suite, CensusReport, CheckKind,
    ExtremalReport, SuiteReport, ALL_CHECKS,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_NO_PARTITION: i32 = 3;
pub const EXIT_INCONCLUSIVE: i32 = 4;
pub const EXIT_INVALID_PARTITION: i32 = 5;

#[derive(Parser)]
#[command(
    name = "kfair",
    version,
    about = "Exact k-fair domination and k-fair coalition invariants on small graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute the k-fair coalition number with a canonical witness.
    Solve {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, short)]
        k: usize,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Check a partition file against the k-fair coalition rules.
    Validate {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, short)]
        k: usize,
        /// Partition file: one block per line, space-separated vertex ids.
        #[arg(long)]
        partition: PathBuf,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Report certified bounds on the coalition number.
    Bounds {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, short)]
        k: usize,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Emit the coalition graph of a valid partition in DOT format.
    Dot {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, short)]
        k: usize,
        /// Partition file: one block per line, space-separated vertex ids.
        #[arg(long)]
        partition: PathBuf,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Run every closed-form instance up to a maximum order.
    Verify {
        #[arg(long, default_value_t = 10)]
        max_order: usize,
        /// Optional graph6 tree corpus; adds the extremal scan.
        #[arg(long)]
        trees: Option<PathBuf>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Sweep a graph6 corpus with structural checks at one k.
    Census {
        /// Corpus file, one graph6 string per line.
        #[arg(long)]
        file: PathBuf,
        #[arg(long, short)]
        k: usize,
        /// Comma-separated check names (default: all). Known names:
        /// doubled-domatic-lower, degree-gap-upper, partner-cap,
        /// tree-half-order-upper, regular-sandwich, cubic-fair-floor,
        /// half-k-domatic-lower.
        #[arg(long)]
        checks: Option<String>,
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Args)]
struct SourceArgs {
    /// Family: path | cycle | complete | complete-bipartite | path-corona |
    /// cycle-corona | complete-minus-matching | prism | utility.
    #[arg(long)]
    family: Option<String>,
    /// Order parameter for one-parameter families.
    #[arg(long)]
    n: Option<usize>,
    /// First part size for complete-bipartite.
    #[arg(long)]
    s: Option<usize>,
    /// Second part size for complete-bipartite.
    #[arg(long)]
    t: Option<usize>,
    /// Leaf clique size for the corona families.
    #[arg(long, default_value_t = 1)]
    l: usize,
    /// Inline graph6 string.
    #[arg(long)]
    g6: Option<String>,
    /// Graph file.
    #[arg(long)]
    file: Option<PathBuf>,
    /// File format: g6 | edges.
    #[arg(long, default_value = "g6")]
    format: String,
}

#[derive(Args)]
struct RunArgs {
    /// Worker threads; results are identical for every count.
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Order cap. Raising it above the default needs --force-cap.
    /// Env override: KFAIR_CAP.
    #[arg(long)]
    cap: Option<usize>,
    #[arg(long)]
    force_cap: bool,
    /// Solver node budget. Env override: KFAIR_BUDGET.
    #[arg(long)]
    budget: Option<u64>,
    /// Output format: text | json.
    #[arg(long, default_value = "text")]
    output: String,
}

#[derive(Debug)]
struct InputError(String);

impl<T: std::fmt::Display> From<T> for InputError {
    fn from(e: T) -> Self {
        InputError(e.to_string())
    }
}

fn env_usize(name: &str) -> Option<usize> {
    std::env::var(name).ok()?.parse().ok()
}

fn env_u64(name: &str) -> Option<u64> {
    std::env::var(name).ok()?.parse().ok()
}

impl RunArgs {
    fn config(&self) -> Result<SolverConfig, InputError> {
        let cap = self
            .cap
            .or_else(|| env_usize("KFAIR_CAP"))
            .unwrap_or(DEFAULT_ORDER_CAP);
        if cap > DEFAULT_ORDER_CAP && !self.force_cap {
            return Err(InputError(format!(
                "cap {cap} exceeds the default {DEFAULT_ORDER_CAP}; the search is exponential, pass --force-cap to confirm"
            )));
        }
        if self.workers == 0 {
            return Err(InputError("--workers must be at least 1".into()));
        }
        Ok(SolverConfig {
            order_cap: cap,
            budget: self
                .budget
                .or_else(|| env_u64("KFAIR_BUDGET"))
                .unwrap_or(DEFAULT_NODE_BUDGET),
            workers: self.workers,
        })
    }

    fn json(&self) -> Result<bool, InputError> {
        match self.output.as_str() {
            "json" => Ok(true),
            "text" => Ok(false),
            other => Err(InputError(format!(
                "unknown output format {other:?}; use text or json"
            ))),
        }
    }
}

impl SourceArgs {
    fn resolve(&self) -> Result<(Graph, String), InputError> {
        let picked = [
            self.family.is_some(),
            self.g6.is_some(),
            self.file.is_some(),
        ]
        .iter()
        .filter(|&&b| b)
        .count();
        if picked != 1 {
            return Err(InputError(
                "pick exactly one graph source: --family, --g6, or --file".into(),
            ));
        }
        if let Some(name) = &self.family {
            return self.build_family(name);
        }
        if let Some(g6) = &self.g6 {
            return Ok((parse_graph6(g6)?, format!("graph6 {g6:?}")));
        }
        let path = self.file.as_ref().unwrap();
        let text = fs::read_to_string(path)?;
        let g = match self.format.as_str() {
            "g6" => parse_graph6(text.trim())?,
            "edges" => parse_edge_list(&text)?,
            other => {
                return Err(InputError(format!(
                    "unknown graph format {other:?}; use g6 or edges"
                )))
            }
        };
        Ok((g, path.display().to_string()))
    }

    fn build_family(&self, name: &str) -> Result<(Graph, String), InputError> {
        let need_n = || {
            self.n
                .ok_or_else(|| InputError(format!("family {name:?} needs --n")))
        };
        let (g, label) = match name {
            "path" => {
                let n = need_n()?;
                (Graph::path(n)?, format!("path({n})"))
            }
            "cycle" => {
                let n = need_n()?;
                (Graph::cycle(n)?, format!("cycle({n})"))
            }
            "complete" => {
                let n = need_n()?;
                (Graph::complete(n)?, format!("complete({n})"))
            }
            "complete-bipartite" => {
                let s = self
                    .s
                    .ok_or_else(|| InputError("complete-bipartite needs --s and --t".into()))?;
                let t = self
                    .t
                    .ok_or_else(|| InputError("complete-bipartite needs --s and --t".into()))?;
                (
                    Graph::complete_bipartite(s, t)?,
                    format!("complete-bipartite({s},{t})"),
                )
            }
            "path-corona" => {
                let n = need_n()?;
                let label = if self.l == 1 {
                    format!("path-corona({n})")
                } else {
                    format!("path-corona({n}, l={})", self.l)
                };
                (Graph::path(n)?.corona(self.l)?, label)
            }
            "cycle-corona" => {
                let n = need_n()?;
                let label = if self.l == 1 {
                    format!("cycle-corona({n})")
                } else {
                    format!("cycle-corona({n}, l={})", self.l)
                };
                (Graph::cycle(n)?.corona(self.l)?, label)
            }
            "complete-minus-matching" => {
                let n = need_n()?;
                (
                    Graph::complete_minus_perfect_matching(n)?,
                    format!("complete-minus-matching({n})"),
                )
            }
            "prism" => (Graph::triangular_prism(), "prism".to_string()),
            "utility" => (Graph::utility_graph(), "utility".to_string()),
            other => return Err(InputError(format!("unknown family {other:?}"))),
        };
        Ok((g, label))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDesc {
    pub order: usize,
    pub graph6: String,
    pub source: String,
}

impl GraphDesc {
    fn new(g: &Graph, source: &str) -> Self {
        GraphDesc {
            order: g.n(),
            graph6: encode_graph6(g),
            source: source.to_string(),
        }
    }
}

/// The stable solve report. Deliberately excludes anything run-dependent
/// (timing, node counts) so repeated runs are byte-identical.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveReport {
    pub schema: String,
    pub graph: GraphDesc,
    pub k: usize,
    pub outcome: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Vec<Justification>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ruled_out_above: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub best_found: Option<Vec<Vec<usize>>>,
    pub bounds: BoundsReport,
}

/// Library-level entry used by both the CLI and the acceptance tests:
/// produces the deterministic report and the exit code.
pub fn solve_report(g: &Graph, source: &str, k: usize, cfg: &SolverConfig) -> (SolveReport, i32) {
    let bounds = bounds_report(g, k);
    let mut report = SolveReport {
        schema: "kfair.solve/1".to_string(),
        graph: GraphDesc::new(g, source),
        k,
        outcome: String::new(),
        value: None,
        witness: None,
        certificate: None,
        ruled_out_above: None,
        best_found: None,
        bounds,
    };
    let code = match c_kf(g, k, cfg) {
        Ok(SolveOutcome::Value(sol)) => {
            report.outcome = "value".to_string();
            report.value = Some(sol.value);
            report.witness = Some(sol.witness.to_vecs());
            report.certificate = Some(sol.certificate.entries);
            EXIT_OK
        }
        Ok(SolveOutcome::NoPartition) => {
            report.outcome = "no-partition".to_string();
            EXIT_NO_PARTITION
        }
        Err(SolveError::Inconclusive(r)) => {
            report.outcome = "inconclusive".to_string();
            report.ruled_out_above = Some(r.ruled_out_above);
            report.best_found = r.best_found.as_ref().map(|(_, p)| p.to_vecs());
            EXIT_INCONCLUSIVE
        }
        Err(e) => {
            report.outcome = format!("error: {e}");
            EXIT_INPUT
        }
    };
    (report, code)
}

fn blocks_text(blocks: &[Vec<usize>]) -> String {
    blocks
        .iter()
        .map(|b| {
            let inner = b
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(", ");
            format!("{{{inner}}}")
        })
        .collect::<Vec<_>>()
        .join(" | ")
}

fn bounds_text(b: &BoundsReport) -> String {
    let upper = format!("upper {} ({})", b.upper, rule_name(&serde_plain(&b.upper_rule)));
    match (b.lower, &b.lower_rule) {
        (Some(l), Some(r)) => format!("{upper}, lower {l} ({})", rule_name(&serde_plain(r))),
        _ => upper,
    }
}

fn serde_plain<T: Serialize>(v: &T) -> String {
    serde_json::to_value(v)
        .ok()
        .and_then(|j| j.as_str().map(str::to_string))
        .unwrap_or_default()
}

fn rule_name(s: &str) -> String {
    s.to_string()
}

fn print_solve_text(report: &SolveReport) {
    println!(
        "graph: {} (order {}, graph6 {:?})",
        report.graph.source, report.graph.order, report.graph.graph6
    );
    println!("k: {}", report.k);
    match report.outcome.as_str() {
        "value" => {
            println!("c_kf = {}", report.value.unwrap());
            println!("witness: {}", blocks_text(report.witness.as_ref().unwrap()));
            println!("certificate:");
            let witness = report.witness.as_ref().unwrap();
            for (i, j) in report.certificate.as_ref().unwrap().iter().enumerate() {
                let b = blocks_text(std::slice::from_ref(&witness[i]));
                match j {
                    Justification::StandaloneFair => {
                        println!("  block {i} {b}: fair dominating of size k")
                    }
                    Justification::Partner { with } => {
                        println!("  block {i} {b}: coalition with block {with}")
                    }
                }
            }
        }
        "no-partition" => println!("no k-fair coalition partition exists"),
        "inconclusive" => {
            println!(
                "inconclusive: block counts above {} are ruled out",
                report.ruled_out_above.unwrap()
            );
            if let Some(best) = &report.best_found {
                println!("best found: {}", blocks_text(best));
            }
        }
        other => println!("{other}"),
    }
    println!("bounds: {}", bounds_text(&report.bounds));
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidateReport {
    pub schema: String,
    pub graph: GraphDesc,
    pub k: usize,
    pub partition: Vec<Vec<usize>>,
    pub outcome: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Vec<Justification>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<Violation>,
}

fn validate_to_report(
    g: &Graph,
    source: &str,
    k: usize,
    partition: &Partition,
) -> (ValidateReport, i32) {
    let outcome = validate_partition(g, partition, k).expect("k was validated");
    let mut report = ValidateReport {
        schema: "kfair.validate/1".to_string(),
        graph: GraphDesc::new(g, source),
        k,
        partition: partition.to_vecs(),
        outcome: String::new(),
        certificate: None,
        violation: None,
    };
    let code = match outcome {
        ValidationOutcome::Valid(PartitionCertificate { entries }) => {
            report.outcome = "valid".to_string();
            report.certificate = Some(entries);
            EXIT_OK
        }
        ValidationOutcome::Invalid(v) => {
            report.outcome = "invalid".to_string();
            report.violation = Some(v);
            EXIT_INVALID_PARTITION
        }
    };
    (report, code)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsCmdReport {
    pub schema: String,
    pub graph: GraphDesc,
    pub k: usize,
    pub bounds: BoundsReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyCmdReport {
    pub schema: String,
    pub suite: SuiteReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extremal: Option<ExtremalReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusCmdReport {
    pub schema: String,
    pub census: CensusReport,
}

/// Renders a coalition graph in DOT, labeling block nodes with their vertex
/// sets.
pub fn dot_output(kfcg: &Graph, blocks: &[Vec<usize>]) -> String {
    let mut out = String::from("graph coalition {\n");
    for (i, b) in blocks.iter().enumerate() {
        let label = b
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",");
        let _ = writeln!(out, "  b{i} [label=\"{{{label}}}\"];");
    }
    for u in kfcg.vertices() {
        for v in kfcg.neighbors(u).iter() {
            if v > u {
                let _ = writeln!(out, "  b{u} -- b{v};");
            }
        }
    }
    out.push_str("}\n");
    out
}

fn emit<T: Serialize>(json_mode: bool, body: &T, text: impl FnOnce()) {
    if json_mode {
        println!(
            "{}",
            serde_json::to_string_pretty(body).expect("reports serialize")
        );
    } else {
        text();
    }
}

fn load_partition(g: &Graph, path: &PathBuf) -> Result<Partition, InputError> {
    let text = fs::read_to_string(path)?;
    let blocks = parse_blocks(&text, g.n())?;
    Ok(Partition::new(g, &blocks)?)
}

fn dispatch(cli: Cli) -> Result<i32, InputError> {
    match cli.cmd {
        Cmd::Solve { source, k, run } => {
            if k == 0 {
                return Err(InputError("k must be at least 1".into()));
            }
            let json = run.json()?;
            let cfg = run.config()?;
            let (g, label) = source.resolve()?;
            let started = Instant::now();
            let (report, code) = solve_report(&g, &label, k, &cfg);
            eprintln!(
                "solved {} in {:.1} ms",
                label,
                started.elapsed().as_secs_f64() * 1e3
            );
            if code == EXIT_INPUT {
                return Err(InputError(report.outcome));
            }
            emit(json, &report, || print_solve_text(&report));
            Ok(code)
        }
        Cmd::Validate {
            source,
            k,
            partition,
            run,
        } => {
            if k == 0 {
                return Err(InputError("k must be at least 1".into()));
            }
            let json = run.json()?;
            let (g, label) = source.resolve()?;
            let p = load_partition(&g, &partition)?;
            let (report, code) = validate_to_report(&g, &label, k, &p);
            emit(json, &report, || match report.outcome.as_str() {
                "valid" => {
                    println!("valid k-fair coalition partition with {} blocks", p.len());
                    for (i, j) in report.certificate.as_ref().unwrap().iter().enumerate() {
                        match j {
                            Justification::StandaloneFair => {
                                println!("  block {i}: fair dominating of size k")
                            }
                            Justification::Partner { with } => {
                                println!("  block {i}: coalition with block {with}")
                            }
                        }
                    }
                }
                _ => println!("invalid: {}", report.violation.unwrap()),
            });
            Ok(code)
        }
        Cmd::Bounds { source, k, run } => {
            if k == 0 {
                return Err(InputError("k must be at least 1".into()));
            }
            let json = run.json()?;
            let (g, label) = source.resolve()?;
            let report = BoundsCmdReport {
                schema: "kfair.bounds/1".to_string(),
                graph: GraphDesc::new(&g, &label),
                k,
                bounds: bounds_report(&g, k),
            };
            emit(json, &report, || {
                println!("graph: {} (order {})", label, g.n());
                println!("bounds: {}", bounds_text(&report.bounds));
            });
            Ok(EXIT_OK)
        }
        Cmd::Dot {
            source,
            k,
            partition,
            run,
        } => {
            if k == 0 {
                return Err(InputError("k must be at least 1".into()));
            }
            let _ = run.json()?;
            let (g, _label) = source.resolve()?;
            let p = load_partition(&g, &partition)?;
            match coalition_graph(&g, &p, k) {
                Ok(kfcg) => {
                    print!("{}", dot_output(&kfcg, &p.to_vecs()));
                    Ok(EXIT_OK)
                }
                Err(crate::partition::CoalitionError::InvalidPartition(v)) => {
                    eprintln!("invalid partition: {v}");
                    Ok(EXIT_INVALID_PARTITION)
                }
                Err(e) => Err(InputError(e.to_string())),
            }
        }
        Cmd::Verify {
            max_order,
            trees,
            run,
        } => {
            let json = run.json()?;
            let cfg = run.config()?;
            let suite = run_theorem_suite(max_order, &cfg);
            let extremal = match trees {
                None => None,
                Some(path) => {
                    let text = fs::read_to_string(&path)?;
                    let (graphs, errors) = parse_corpus(&text);
                    if let Some(e) = errors.first() {
                        return Err(InputError(format!(
                            "{}: line {}: {}",
                            path.display(),
                            e.line,
                            e.message
                        )));
                    }
                    let trees: Vec<(String, Graph)> =
                        graphs.into_iter().map(|(_, g6, g)| (g6, g)).collect();
                    Some(extremal_scan(max_order, &trees, &cfg))
                }
            };
            let ok = suite.passed() && extremal.as_ref().map_or(true, |e| e.pass);
            let report = VerifyCmdReport {
                schema: "kfair.verify/1".to_string(),
                suite,
                extremal,
            };
            emit(json, &report, || print_suite_text(&report));
            Ok(if ok { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        Cmd::Census {
            file,
            k,
            checks,
            run,
        } => {
            if k == 0 {
                return Err(InputError("k must be at least 1".into()));
            }
            let json = run.json()?;
            let cfg = run.config()?;
            let selected: Vec<CheckKind> = match checks {
                None => ALL_CHECKS.to_vec(),
                Some(list) => {
                    let mut out = Vec::new();
                    for name in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                        out.push(CheckKind::from_name(name).ok_or_else(|| {
                            InputError(format!("unknown check {name:?}"))
                        })?);
                    }
                    if out.is_empty() {
                        return Err(InputError("no checks selected".into()));
                    }
                    out
                }
            };
            let text = fs::read_to_string(&file)?;
            let census = run_census(&file.display().to_string(), &text, k, &selected, &cfg);
            let ok = census.passed();
            let report = CensusCmdReport {
                schema: "kfair.census/1".to_string(),
                census,
            };
            emit(json, &report, || print_census_text(&report.census));
            Ok(if ok { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
    }
}

fn print_suite_text(report: &VerifyCmdReport) {
    println!(
        "closed-form suite up to order {}: {} rows",
        report.suite.max_order, report.suite.summary.total
    );
    for row in &report.suite.rows {
        let actual = row
            .actual
            .map(|a| a.to_string())
            .unwrap_or_else(|| "-".to_string());
        let status = serde_plain(&row.status);
        let oracle = match row.oracle_agrees {
            Some(true) => " [oracle ok]",
            Some(false) => " [oracle DISAGREES]",
            None => "",
        };
        println!(
            "  {:<28} k={} -> {:<12} {}{}",
            row.label, row.k, actual, status, oracle
        );
    }
    let s = &report.suite.summary;
    println!(
        "summary: {} match, {} within bound, {} known discrepancies reproduced, {} mismatches, {} skipped",
        s.matches, s.within_bound, s.discrepancies_reproduced, s.mismatches, s.skipped
    );
    if let Some(ext) = &report.extremal {
        println!(
            "extremal scan: {} matching-complement rows, {} tree rows, pass={}",
            ext.matching_rows.len(),
            ext.tree_rows.len(),
            ext.pass
        );
    }
}

fn print_census_text(census: &CensusReport) {
    println!(
        "census {} at k={}: {} graphs",
        census.corpus, census.k, census.summary.graphs
    );
    for e in &census.parse_errors {
        println!("  line {}: parse error: {}", e.line, e.message);
    }
    for row in &census.rows {
        for cr in &row.checks {
            if let crate::verify::CheckOutcome::Fail { witness } = &cr.outcome {
                println!(
                    "  FAIL {} on {} (k={}): {}",
                    cr.check, row.graph6, census.k, witness.detail
                );
            }
        }
    }
    let s = &census.summary;
    println!(
        "summary: {} passes, {} failures, {} skips, {} findings ({} violated), {} parse errors",
        s.passes, s.failures, s.skips, s.findings, s.findings_violated, s.parse_errors
    );
}

/// Entry point for the `kfair` binary.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            EXIT_INPUT
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn source(family: &str, n: Option<usize>) -> SourceArgs {
        SourceArgs {
            family: Some(family.to_string()),
            n,
            s: None,
            t: None,
            l: 1,
            g6: None,
            file: None,
            format: "g6".to_string(),
        }
    }

    #[test]
    fn family_resolution() {
        let (g, label) = source("cycle", Some(6)).resolve().unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(label, "cycle(6)");

        let (g, _) = source("prism", None).resolve().unwrap();
        assert_eq!(g.regularity(), Some(3));

        assert!(source("heptagram", Some(7)).resolve().is_err());
        assert!(source("path", None).resolve().is_err());

        let two = SourceArgs {
            g6: Some("D??".into()),
            ..source("path", Some(3))
        };
        assert!(two.resolve().is_err());
    }

    #[test]
    fn solve_report_shapes() {
        let g = Graph::cycle(6).unwrap();
        let cfg = SolverConfig::default();
        let (report, code) = solve_report(&g, "cycle(6)", 2, &cfg);
        assert_eq!(code, EXIT_OK);
        assert_eq!(report.value, Some(4));
        let json = serde_json::to_string_pretty(&report).unwrap();
        let back: SolveReport = serde_json::from_str(&json).unwrap();
        assert_eq!(report, back);

        let k1 = Graph::path(1).unwrap();
        let (report, code) = solve_report(&k1, "path(1)", 2, &cfg);
        assert_eq!(code, EXIT_NO_PARTITION);
        assert_eq!(report.outcome, "no-partition");
    }

    #[test]
    fn dot_shape() {
        let g = Graph::path(5).unwrap();
        let blocks = crate::formats::parse_blocks("0 3 4\n1\n2\n", 5).unwrap();
        let p = Partition::new(&g, &blocks).unwrap();
        let kfcg = coalition_graph(&g, &p, 2).unwrap();
        let dot = dot_output(&kfcg, &p.to_vecs());
        assert!(dot.contains("b0 [label=\"{0,3,4}\"]"));
        assert!(dot.contains("b0 -- b1;"));
        assert!(dot.contains("b0 -- b2;"));
        assert!(!dot.contains("b1 -- b2;"));
    }
}
