use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_toric-poset"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .display()
        .to_string()
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn compute_st_of_cube() {
    let out = run(&["compute", "cube3", "st"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out), json!({ "st": [[3, 1, 1], [1, 5, 1]] }));
}

#[test]
fn compute_cd_index_of_boolean() {
    let out = run(&["compute", "boolean3", "cd-index"]);
    assert_eq!(stdout_json(&out), json!({ "cd-index": { "cc": 1, "d": 1 } }));
}

#[test]
fn generate_counts() {
    let out = run(&["generate", "boolean", "4"]);
    assert_eq!(stdout_json(&out)["elements"].as_array().unwrap().len(), 16);
    let out = run(&["generate", "cube", "3"]);
    assert_eq!(stdout_json(&out)["elements"].as_array().unwrap().len(), 28);
    let out = run(&["generate", "polygon", "5"]);
    let ranks = stdout_json(&out)["ranks"].clone();
    assert_eq!(ranks.as_object().unwrap().values().filter_map(Value::as_u64).max(), Some(3));
}

#[test]
fn generated_file_round_trips_through_compute_and_dual() {
    let dir = std::env::temp_dir().join(format!("toric-poset-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("cube3.json");
    let out = run(&["generate", "cube", "3", "--output", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let by_file = run(&["compute", "--input", file.to_str().unwrap(), "st", "toric-h"]);
    assert_eq!(stdout_json(&by_file)["toric-h"], json!([1, 5, 5, 1]));
    let dual = dir.join("dual.json");
    run(&["generate", &format!("dual-of:{}", file.display()), "--output", dual.to_str().unwrap()]);
    let out = run(&["compute", dual.to_str().unwrap(), "st", "toric-h"]);
    assert_eq!(stdout_json(&out), json!({ "st": [[3, 1, 1], [1, 3, 1]], "toric-h": [1, 3, 3, 1] }));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn non_eulerian_input_names_the_interval() {
    let out = run(&["compute", &data("three_atoms.json"), "cd-index"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("not Eulerian"), "{err}");
    assert!(err.contains("[0, 1]"), "{err}");
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(run(&["compute", &data("rank_skip.json"), "st"]).status.code(), Some(2));
    assert_eq!(run(&["generate", "simplex", "3"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "table1", "9"]).status.code(), Some(2));
    assert_eq!(run(&["compute", "cube5", "st", "--max-rank", "4"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn verify_table1_and_gessel() {
    let out = run(&["verify", "table1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["status"], "pass");
    for c in v["suites"][0]["checks"].as_array().unwrap() {
        assert!(c["anchor"].as_str().is_some_and(|a| !a.is_empty()));
    }
    assert_eq!(run(&["verify", "--suite", "gessel", "--max-rank", "6"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "reflection", "12"]).status.code(), Some(0));
}

#[test]
fn reports_are_byte_identical() {
    let a = run(&["verify", "dual-simplicial", "8"]);
    let b = run(&["verify", "dual-simplicial", "8"]);
    assert_eq!(a.stdout, b.stdout);
    let a = run(&["report", "polygon6"]);
    let b = run(&["report", "polygon6"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn report_summarises_structure() {
    let v = stdout_json(&run(&["report", "cube3"]));
    assert_eq!(v["eulerian"], true);
    assert_eq!(v["dual_simplicial"], true);
    assert_eq!(v["simplicial"], false);
    assert_eq!(v["rank_gaps"], json!([]));
    assert_eq!(v["invariants"]["toric-g"]["value"], json!([[1, 4, 1], [0, 1, 1]]));
    assert!(v["invariants"]["st"]["route"].is_string());
    let v = stdout_json(&run(&["report", &data("three_atoms.json")]));
    assert_eq!(v["eulerian"], false);
    assert_eq!(v["eulerian_witness"], json!(["0", "1"]));
}

#[test]
fn table_format() {
    let out = run(&["compute", "cube3", "st", "toric-g", "--format", "table"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("x^3 + 5x"), "{text}");
    assert!(text.contains("4x + 1"), "{text}");
    let out = run(&["verify", "table1", "--format", "table"]);
    assert!(String::from_utf8(out.stdout).unwrap().lines().all(|l| l.contains("PASS")));
}
