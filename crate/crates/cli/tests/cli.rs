//! End-to-end runs of the kcuts binary: pipelines between subcommands,
//! exit codes, and the stdout/stderr split.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn kcuts(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kcuts"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn write(dir: &Path, name: &str, content: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, content).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn gen_separate_verify_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let gen = kcuts(&["gen", "--columns", "6", "--seed", "3"]);
    assert_eq!(gen.status.code(), Some(0));
    let inst = write(dir.path(), "inst.json", &stdout(&gen));

    let sep = kcuts(&["separate", "--input", &inst, "--family", "ci"]);
    assert_eq!(sep.status.code(), Some(0));
    let cut_text = stdout(&sep);
    let cut_json: serde_json::Value = serde_json::from_str(&cut_text).unwrap();
    assert_eq!(cut_json["family"], "ci");
    // Logs are 1-based, files 0-based.
    assert!(stderr(&sep).contains("row 1"));
    assert_eq!(cut_json["row"], 0);

    let cut = write(dir.path(), "cut.json", &cut_text);
    let verify = kcuts(&["verify", "--instance", &inst, "--cut", &cut]);
    assert_eq!(verify.status.code(), Some(0));
    assert!(stderr(&verify).contains("holds at every feasible 0-1 point"));
}

#[test]
fn tampered_cut_is_rejected_as_bad_input() {
    let dir = tempfile::tempdir().unwrap();
    let gen = kcuts(&["gen", "--columns", "6", "--seed", "3"]);
    let inst = write(dir.path(), "inst.json", &stdout(&gen));
    let sep = kcuts(&["separate", "--input", &inst, "--family", "ci"]);
    let mut cut_json: serde_json::Value = serde_json::from_str(&stdout(&sep)).unwrap();
    cut_json["rhs"] = serde_json::json!(999);
    let cut = write(dir.path(), "cut.json", &cut_json.to_string());
    let verify = kcuts(&["verify", "--instance", &inst, "--cut", &cut]);
    assert_eq!(verify.status.code(), Some(2));
}

#[test]
fn missing_cut_exits_three_and_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let inst = write(
        dir.path(),
        "slack.json",
        r#"{"A":[[2,3,4]],"d":[9],"c":[1,1,1],"x":[1,1,0]}"#,
    );
    let sep = kcuts(&["separate", "--input", &inst, "--family", "ci"]);
    assert_eq!(sep.status.code(), Some(3));
    assert!(stdout(&sep).is_empty());
    assert!(stderr(&sep).contains("no violated ci inequality"));

    let garbled = write(dir.path(), "bad.json", "not json");
    let bad = kcuts(&["separate", "--input", &garbled, "--family", "ci"]);
    assert_eq!(bad.status.code(), Some(2));

    let unknown = kcuts(&["separate", "--input", &inst, "--family", "nope"]);
    assert_eq!(unknown.status.code(), Some(2));

    let gone = kcuts(&["separate", "--input", "/definitely/not/here.json", "--family", "ci"]);
    assert_eq!(gone.status.code(), Some(2));

    let zero_threads = kcuts(&["separate", "--input", &inst, "--family", "ci", "--threads", "0"]);
    assert_eq!(zero_threads.status.code(), Some(2));
}

#[test]
fn point_flag_overrides_the_file() {
    let dir = tempfile::tempdir().unwrap();
    let inst = write(dir.path(), "nopoint.json", r#"{"A":[[2,3,4]],"d":[6],"c":[1,1,1]}"#);
    let without = kcuts(&["separate", "--input", &inst, "--family", "ci"]);
    assert_eq!(without.status.code(), Some(2));

    let with = kcuts(&[
        "separate",
        "--input",
        &inst,
        "--family",
        "ci",
        "--point",
        r#"[0,1,"3/4"]"#,
    ]);
    assert_eq!(with.status.code(), Some(0));
    let cut: serde_json::Value = serde_json::from_str(&stdout(&with)).unwrap();
    assert_eq!(cut["certificate"]["cover"], serde_json::json!([1, 2]));

    let infeasible = kcuts(&[
        "separate",
        "--input",
        &inst,
        "--family",
        "ci",
        "--point",
        "[1,1,1]",
    ]);
    assert_eq!(infeasible.status.code(), Some(2));
}

#[test]
fn oracle_reports_the_best_row_and_facet_rank() {
    let dir = tempfile::tempdir().unwrap();
    // Row 0's cover {1, 2} is violated by 1/10, row 1's cover {0, 1} by
    // 7/10: best mode must pick row 1, first mode row 0.
    let inst = write(
        dir.path(),
        "two_rows.json",
        r#"{"A":[[2,3,4],[5,5,2]],"d":[6,9],"c":[1,1,1],"x":["4/5","9/10","1/5"]}"#,
    );
    let oracle = kcuts(&["oracle", "--input", &inst, "--family", "ci", "--facet"]);
    assert_eq!(oracle.status.code(), Some(0));
    let cut: serde_json::Value = serde_json::from_str(&stdout(&oracle)).unwrap();
    assert_eq!(cut["row"], 1);
    assert_eq!(cut["violation"], "7/10");
    assert!(stderr(&oracle).contains("tight-point affine rank"));

    let first = kcuts(&["oracle", "--input", &inst, "--family", "ci", "--mode", "first"]);
    let cut: serde_json::Value = serde_json::from_str(&stdout(&first)).unwrap();
    assert_eq!(cut["row"], 0);
}

#[test]
fn reduce_emits_the_worked_subset_sum_image() {
    let dir = tempfile::tempdir().unwrap();
    let ssp = write(dir.path(), "ssp.json", r#"{"alpha":[1,2],"w":3}"#);
    let out = kcuts(&["reduce", "--kind", "ssp-to-wi", "--input", &ssp]);
    assert_eq!(out.status.code(), Some(0));
    let image: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(image["A"], serde_json::json!([[3, 4, 18, 2, 2, 2]]));
    assert_eq!(image["d"], serde_json::json!([10]));
    assert_eq!(image["x"][0], "10/31");

    let unknown = kcuts(&["reduce", "--kind", "upwards", "--input", &ssp]);
    assert_eq!(unknown.status.code(), Some(2));
}

#[test]
fn greedy_point_needs_a_single_row() {
    let multi = kcuts(&["gen", "--columns", "5", "--rows", "2", "--greedy-point"]);
    assert_eq!(multi.status.code(), Some(2));

    let single = kcuts(&["gen", "--columns", "5", "--greedy-point", "--seed", "11"]);
    assert_eq!(single.status.code(), Some(0));
    let inst: serde_json::Value = serde_json::from_str(&stdout(&single)).unwrap();
    let coords = inst["x"].as_array().unwrap();
    // The greedy relaxation point has at most one fractional coordinate.
    let fractional = coords.iter().filter(|v| v.is_string()).count();
    assert!(fractional <= 1, "greedy point {coords:?}");
}

#[test]
fn bench_prints_one_table_row_per_family() {
    let bench = kcuts(&["bench", "--columns", "6", "--seeds", "10", "--weight-max", "12"]);
    assert_eq!(bench.status.code(), Some(0));
    let table = stdout(&bench);
    for tag in ["ci", "eci", "config", "genconfig", "wi"] {
        assert!(table.lines().any(|l| l.starts_with(tag)), "missing {tag} in:\n{table}");
    }
}
