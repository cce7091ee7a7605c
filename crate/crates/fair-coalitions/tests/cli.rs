//! End-to-end checks of the `kfair` binary: exit codes, output formats, and
//! the JSON schema round trip.

use std::io::Write;
use std::process::{Command, Output};

use fair_coalitions::cli::{SolveReport, ValidateReport};

fn kfair(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kfair"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

fn tempfile(contents: &str) -> tempfile_path::TempPath {
    tempfile_path::write(contents)
}

mod tempfile_path {
    use super::*;
    use std::path::PathBuf;

    pub struct TempPath(pub PathBuf);

    impl Drop for TempPath {
        fn drop(&mut self) {
            let _ = std::fs::remove_file(&self.0);
        }
    }

    pub fn write(contents: &str) -> TempPath {
        let mut path = std::env::temp_dir();
        path.push(format!(
            "kfair-test-{}-{:x}",
            std::process::id(),
            std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .unwrap()
                .as_nanos()
        ));
        let mut f = std::fs::File::create(&path).unwrap();
        f.write_all(contents.as_bytes()).unwrap();
        TempPath(path)
    }
}

#[test]
fn solve_families_and_exit_codes() {
    let out = kfair(&["solve", "--family", "cycle", "--n", "6", "--k", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("c_kf = 4"));

    let out = kfair(&["solve", "--family", "complete", "--n", "5", "--k", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("c_kf = 5"));

    // No partition at all: a one-vertex graph with k = 2.
    let out = kfair(&["solve", "--family", "path", "--n", "1", "--k", "2"]);
    assert_eq!(out.status.code(), Some(3));

    // Bad input exits 2.
    let out = kfair(&["solve", "--family", "nonsense", "--n", "3", "--k", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = kfair(&["solve", "--g6", "D?", "--k", "2"]);
    assert_eq!(out.status.code(), Some(2));

    // A starved budget is an explicit inconclusive, exit 4.
    let out = kfair(&[
        "solve", "--family", "cycle", "--n", "10", "--k", "2", "--budget", "1",
    ]);
    assert_eq!(out.status.code(), Some(4));
    assert!(stdout(&out).contains("inconclusive"));
}

#[test]
fn solve_edgeless_graph6_inline() {
    // The edgeless five-vertex graph: proper subsets are never fair, but any
    // bipartition unions to V, so the value is 2 for every k.
    let out = kfair(&["solve", "--g6", "D??", "--k", "1", "--output", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: SolveReport = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report.value, Some(2));
    assert_eq!(report.graph.order, 5);
}

#[test]
fn solve_json_round_trips_and_is_stable() {
    let args = [
        "solve", "--family", "complete", "--n", "7", "--k", "3", "--output", "json",
    ];
    let first = stdout(&kfair(&args));
    let report: SolveReport = serde_json::from_str(&first).unwrap();
    assert_eq!(report.schema, "kfair.solve/1");
    assert_eq!(report.value, Some(6));

    let mut multi = args.to_vec();
    multi.extend(["--workers", "4"]);
    let second = stdout(&kfair(&multi));
    assert_eq!(first, second, "JSON must not depend on the worker count");
}

#[test]
fn validate_certificate_and_violations() {
    // The three-block partition of the 5-path.
    let blocks = tempfile("0 3 4\n1\n2\n");
    let out = kfair(&[
        "validate",
        "--family",
        "path",
        "--n",
        "5",
        "--k",
        "2",
        "--partition",
        blocks.0.to_str().unwrap(),
        "--output",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: ValidateReport = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report.outcome, "valid");
    assert_eq!(report.partition.len(), 3);

    // Both diagonals of the 4-cycle stand alone.
    let blocks = tempfile("0 2\n1 3\n");
    let out = kfair(&[
        "validate", "--family", "cycle", "--n", "4", "--k", "2", "--partition",
        blocks.0.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));

    // Invalid coalition partition exits 5.
    let blocks = tempfile("0 2\n1\n");
    let out = kfair(&[
        "validate", "--family", "path", "--n", "3", "--k", "2", "--partition",
        blocks.0.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(5));
    assert!(stdout(&out).contains("invalid"));

    // Structural breakage (overlap) is an input error, exit 2.
    let blocks = tempfile("0 1\n1 2\n");
    let out = kfair(&[
        "validate", "--family", "path", "--n", "3", "--k", "2", "--partition",
        blocks.0.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bounds_and_dot() {
    let out = kfair(&["bounds", "--family", "path", "--n", "9", "--k", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("upper 3 (degree-gap)"));

    let blocks = tempfile("0 3 4\n1\n2\n");
    let out = kfair(&[
        "dot", "--family", "path", "--n", "5", "--k", "2", "--partition",
        blocks.0.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let dot = stdout(&out);
    assert_eq!(dot.matches("[label=").count(), 3);
    assert!(dot.contains("b0 -- b1;"));
    assert!(dot.contains("b0 -- b2;"));
}

#[test]
fn verify_suite_passes() {
    let out = kfair(&["verify", "--max-order", "8"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("0 mismatches"));
    assert!(text.contains("known discrepancies reproduced"));
}

#[test]
fn census_runs_and_reports() {
    let corpus = format!(
        "{}\n{}\n",
        "EhEG", // the 6-cycle
        "E???"  // edgeless on 6
    );
    let file = tempfile(&corpus);
    let out = kfair(&[
        "census",
        "--file",
        file.0.to_str().unwrap(),
        "--k",
        "2",
        "--checks",
        "doubled-domatic-lower,regular-sandwich",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("2 graphs"));

    // Malformed lines are positioned and the run continues.
    let file = tempfile("!!!bad\nEhEG\n");
    let out = kfair(&[
        "census",
        "--file",
        file.0.to_str().unwrap(),
        "--k",
        "2",
        "--checks",
        "regular-sandwich",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("line 1"));
    assert!(text.contains("1 parse errors"));
}

#[test]
fn cap_override_needs_acknowledgment() {
    let out = kfair(&[
        "solve", "--family", "path", "--n", "15", "--k", "2", "--cap", "15",
    ]);
    assert_eq!(out.status.code(), Some(2));

    let out = kfair(&[
        "solve", "--family", "path", "--n", "15", "--k", "2", "--cap", "15", "--force-cap",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("c_kf = 3"));
}
