//! End-to-end tests of the command-line surface: flags, exit codes, report
//! determinism and the matrix file format.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn relforest(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_relforest"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn stderr(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

fn write_file(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, contents).unwrap();
    path.to_string_lossy().into_owned()
}

const CHAIN3: &str = "3\n010\n001\n001\n";
const POINT0: &str = "3\n111\n000\n000\n";
const CYCLIC: &str = "3\n010\n100\n001\n";

#[test]
fn laws_wcc_suite_passes() {
    let out = relforest(&["laws", "--suite", "wcc", "--n", "3", "--samples", "200"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert_eq!(text.matches("PASS wcc/").count(), 7);
    assert!(text.contains("result: pass"));
    assert!(text.contains("seed: 0"));
}

#[test]
fn laws_all_exhaustive_at_n2() {
    let out = relforest(&["laws", "--suite", "all", "--n", "2", "--samples", "0"]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("result: pass"));
    assert!(!stdout(&out).contains("FAIL"));
}

#[test]
fn laws_unknown_suite_is_usage_error() {
    let out = relforest(&["laws", "--suite", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("unknown suite"));
}

#[test]
fn laws_reports_are_byte_identical_for_same_seed() {
    let args = ["laws", "--suite", "arrays", "--n", "3", "--samples", "150", "--seed", "9"];
    let a = relforest(&args);
    let b = relforest(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn laws_mutant_is_caught_with_counterexample() {
    let out = relforest(&["laws", "--mutant", "wcc-drop-transpose"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("FAIL wcc-drop-transpose"));
    assert!(text.contains("counterexample"));
    assert!(text.contains("result: fail"));
}

#[test]
fn laws_unknown_mutant_is_usage_error() {
    let out = relforest(&["laws", "--mutant", "no-such-thing"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn run_find_set_prints_root_and_trace() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_file(dir.path(), "chain3.mat", CHAIN3);
    let x = write_file(dir.path(), "point0.mat", POINT0);
    let trace = dir.path().join("trace.txt");
    let out = relforest(&[
        "run",
        "--program",
        "find_set",
        "--p",
        &p,
        "--x",
        &x,
        "--trace-out",
        trace.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("output y: point 2"));
    assert!(text.contains("verdict: pass"));
    let trace_text = fs::read_to_string(&trace).unwrap();
    assert!(trace_text.starts_with("trace v1\n"));
    assert!(trace_text.contains("variant=3"));
}

#[test]
fn run_rejects_cyclic_forest_in_strict_mode() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_file(dir.path(), "cyclic.mat", CYCLIC);
    let x = write_file(dir.path(), "point0.mat", POINT0);
    let out = relforest(&["run", "--program", "find_set", "--p", &p, "--x", &x]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("find_set_pre"));
}

#[test]
fn run_init_ranks_reports_iterations() {
    let out = relforest(&["run", "--program", "init_ranks", "--n", "4"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("iterations: 4"));
    assert!(text.contains("output p:"));
    assert!(text.contains("output rank:"));
}

#[test]
fn run_union_by_rank_from_files() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_file(dir.path(), "id.mat", "3\n100\n010\n001\n");
    let rank = write_file(dir.path(), "rank.mat", "3\n100\n100\n100\n");
    let x = write_file(dir.path(), "x.mat", POINT0);
    let y = write_file(dir.path(), "y.mat", "3\n000\n111\n000\n");
    let out = relforest(&[
        "run",
        "--program",
        "union_sets_by_rank",
        "--p",
        &p,
        "--rank",
        &rank,
        "--x",
        &x,
        "--y",
        &y,
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("verdict: pass"));
}

#[test]
fn run_bad_matrix_file_is_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_file(dir.path(), "bad.mat", "3\n01\n001\n001\n");
    let x = write_file(dir.path(), "x.mat", POINT0);
    let out = relforest(&["run", "--program", "find_set", "--p", &p, "--x", &x]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("expected 3 characters"));
}

#[test]
fn run_mismatched_sizes_is_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_file(dir.path(), "p.mat", "2\n10\n01\n");
    let x = write_file(dir.path(), "x.mat", POINT0);
    let out = relforest(&["run", "--program", "find_set", "--p", &p, "--x", &x]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("different universe sizes"));
}

#[test]
fn run_unknown_program_is_usage_error() {
    let out = relforest(&["run", "--program", "does_not_exist"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("known programs"));
}

#[test]
fn crossvalidate_agrees_and_is_deterministic() {
    let args = [
        "crossvalidate",
        "--n",
        "16",
        "--ops",
        "500",
        "--strategy",
        "compress",
        "--by-rank",
        "--seed",
        "7",
    ];
    let out = relforest(&args);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("ops executed: 500"));
    assert!(text.contains("result: pass"));
    let again = relforest(&args);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn crossvalidate_singleton_universe() {
    let out = relforest(&["crossvalidate", "--n", "1", "--ops", "50", "--strategy", "halve"]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("result: pass"));
}

#[test]
fn crossvalidate_unknown_strategy_is_usage_error() {
    let out = relforest(&["crossvalidate", "--n", "8", "--strategy", "warp"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn convert_round_trips_canonical_files() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_file(dir.path(), "in.mat", CHAIN3);
    let out = relforest(&["convert", &input]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), CHAIN3);

    let target = dir.path().join("out.mat");
    let out = relforest(&["convert", &input, "--output", target.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(fs::read_to_string(&target).unwrap(), CHAIN3);
}

#[test]
fn convert_rejects_malformed_input() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_file(dir.path(), "in.mat", "2\n0x\n00\n");
    let out = relforest(&["convert", &input]);
    assert_eq!(out.status.code(), Some(2));
}
