//! End-to-end tests against the compiled binary: exit codes, output
//! formats, determinism across thread counts, and the environment override.

use frobthick::report::{Report, CSV_HEADER};
use std::process::{Command, Output};

fn frobthick(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_frobthick"))
        .args(args)
        .env_remove("FROBTHICK_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf8 stdout")
}

#[test]
fn analyze_reports_the_supersingular_miss() {
    let out = frobthick(&[
        "analyze", "--n", "2", "--p", "5", "--poly", "x0^3+x1^3+x2^3", "--t", "1", "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    let report = Report::from_json(text.trim()).unwrap();
    assert!(!report.result.injective);
    assert_eq!(report.query.t, 1);
    assert!(report.result.kernel_witness.is_some());
}

#[test]
fn json_reports_reparse_byte_identically() {
    for args in [
        vec!["analyze", "--n", "2", "--p", "7", "--poly", "x0^3-x1^2*x2", "--t", "1"],
        vec!["analyze", "--n", "2", "--p", "7", "--poly", "x0^3-x1^2*x2", "--t", "2"],
        vec![
            "analyze", "--n", "3", "--p", "5", "--ideal", "x0^2+x1^2+x2^2+x3^2", "--ideal",
            "x0^2+2*x1^2+3*x2^2+4*x3^2", "--t", "3",
        ],
    ] {
        let mut full = args.clone();
        full.extend_from_slice(&["--format", "json"]);
        let out = frobthick(&full);
        assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
        let line = stdout_of(&out);
        let line = line.trim();
        let reparsed = Report::from_json(line).unwrap().to_json();
        assert_eq!(reparsed, line, "round trip must be byte-identical");
    }
}

#[test]
fn minimal_t_matches_the_documented_example() {
    let out = frobthick(&["minimal-t", "--n", "2", "--p", "7", "--poly", "x0^3-x1^2*x2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("least injective t = 2"), "got: {text}");
}

#[test]
fn sweep_csv_has_the_documented_columns() {
    let out = frobthick(&[
        "sweep", "--n", "2", "--p-list", "5,7", "--fermat", "3", "--t", "1..2", "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    let mut lines = text.trim_end().lines();
    assert_eq!(lines.next(), Some(CSV_HEADER));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 4, "two primes x two exponents");
    for row in &rows {
        assert_eq!(row.split(',').count(), 7, "row shape: {row}");
    }
    // Supersingular p = 5 misses at t = 1; ordinary p = 7 already injects.
    assert!(rows[0].starts_with("5,1,0,") && rows[0].contains("false"));
    assert!(rows[2].starts_with("7,1,0,") && rows[2].contains("true"));
}

#[test]
fn sweep_output_is_independent_of_thread_count() {
    let args = [
        "sweep", "--n", "2", "--p-list", "5,7,11", "--poly", "x0^3-x1^2*x2", "--t", "1..4",
        "--format", "json",
    ];
    let single = Command::new(env!("CARGO_BIN_EXE_frobthick"))
        .args(args)
        .env("FROBTHICK_THREADS", "1")
        .output()
        .expect("binary runs");
    let several = Command::new(env!("CARGO_BIN_EXE_frobthick"))
        .args(args)
        .env("FROBTHICK_THREADS", "4")
        .output()
        .expect("binary runs");
    assert_eq!(single.status.code(), Some(0));
    assert_eq!(several.status.code(), Some(0));
    let a: Vec<Report> = stdout_of(&single)
        .lines()
        .map(|l| Report::from_json(l).unwrap())
        .collect();
    let b: Vec<Report> = stdout_of(&several)
        .lines()
        .map(|l| Report::from_json(l).unwrap())
        .collect();
    assert_eq!(a.len(), b.len());
    for (x, y) in a.iter().zip(&b) {
        assert!(x.same_analysis(y), "thread count changed an analysis");
    }
}

#[test]
fn threads_flag_is_overridden_by_the_environment() {
    // An invalid flag value would normally fail fast; the env var wins and
    // the run succeeds.
    let out = Command::new(env!("CARGO_BIN_EXE_frobthick"))
        .args(["sweep", "--n", "2", "--p-list", "5", "--fermat", "3", "--t", "1", "--threads",
            "0"])
        .env("FROBTHICK_THREADS", "2")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(0), "env override must win over --threads 0");

    let bad = Command::new(env!("CARGO_BIN_EXE_frobthick"))
        .args(["sweep", "--n", "2", "--p-list", "5", "--fermat", "3", "--t", "1"])
        .env("FROBTHICK_THREADS", "zero")
        .output()
        .expect("binary runs");
    assert_eq!(bad.status.code(), Some(2), "junk FROBTHICK_THREADS is an input error");
}

#[test]
fn parse_errors_exit_2_with_a_position() {
    let out = frobthick(&["analyze", "--n", "2", "--p", "5", "--poly", "x0^3++", "--t", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("byte"), "position missing from: {err}");

    let out = frobthick(&["analyze", "--n", "2", "--p", "6", "--poly", "x0^2", "--t", "1"]);
    assert_eq!(out.status.code(), Some(2), "composite modulus is an input error");
}

#[test]
fn guardrail_exits_3_and_force_overrides_conservatively() {
    let args = [
        "analyze", "--n", "4", "--p", "13", "--poly", "x0^5+x1^5+x2^5+x3^5+x4^5", "--t", "1",
    ];
    let out = frobthick(&args);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("exceeds limit"), "got: {err}");
    // No --force smoke run here: the refusal estimate (~6e5 columns) is the
    // point; the override path is unit-tested against the library.
}

#[test]
fn verify_subcommand_runs_named_checks() {
    let out = frobthick(&["verify", "cusp-formula", "quartic-twist-formula", "--p", "5,7"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("PASS cusp-formula"));
    assert!(text.contains("PASS quartic-twist-formula"));
    assert_eq!(text.trim_end().lines().count(), 2);

    let unknown = frobthick(&["verify", "no-such-check"]);
    assert_eq!(unknown.status.code(), Some(2));
}

#[test]
fn out_flag_writes_the_same_bytes_to_a_file() {
    let dir = std::env::temp_dir();
    let path = dir.join(format!("frobthick-out-{}.json", std::process::id()));
    let path_str = path.to_str().unwrap();
    let direct = frobthick(&[
        "analyze", "--n", "2", "--p", "5", "--poly", "x0^3+x1^3+x2^3", "--t", "2", "--format",
        "json",
    ]);
    let filed = frobthick(&[
        "analyze", "--n", "2", "--p", "5", "--poly", "x0^3+x1^3+x2^3", "--t", "2", "--format",
        "json", "--out", path_str,
    ]);
    assert_eq!(filed.status.code(), Some(0));
    assert!(stdout_of(&filed).is_empty(), "--out must silence stdout");
    let from_file = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    let a = Report::from_json(stdout_of(&direct).trim()).unwrap();
    let b = Report::from_json(from_file.trim()).unwrap();
    assert!(a.same_analysis(&b));
}

#[test]
fn help_and_version_exit_0() {
    assert_eq!(frobthick(&["--help"]).status.code(), Some(0));
    assert_eq!(frobthick(&["--version"]).status.code(), Some(0));
    assert_eq!(frobthick(&["analyze", "--help"]).status.code(), Some(0));
    // Missing required arguments are usage errors.
    assert_eq!(frobthick(&["analyze"]).status.code(), Some(2));
}
