use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_equiobs")).args(args).output().expect("binary runs")
}

fn run_json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn assert_envelope(v: &Value, command: &str) {
    assert_eq!(v["schema"], 1);
    assert_eq!(v["command"], command);
    assert!(v["paper_ref"].is_object() || v["checks"].is_array(), "{command}: no paper_ref");
}

#[test]
fn theta_k1() {
    let v = run_json(&["theta", "--k", "1"]);
    assert_envelope(&v, "theta");
    assert_eq!(v["theta_mod4"], 2);
    assert_eq!(v["admissible_triple"], json!([8, 5, 2]));
}

#[test]
fn theta_k3_has_no_triple() {
    let v = run_json(&["theta", "--k", "3", "--cross-check"]);
    assert_eq!(v["theta_mod4"], 0);
    assert_eq!(v["admissible_triple"], Value::Null);
    assert_eq!(v["cross_check"]["agrees"], true);
}

#[test]
fn cohomology_n9() {
    let v = run_json(&["cohomology", "--n", "9"]);
    assert_envelope(&v, "cohomology");
    assert_eq!(v["invariant_factors"], json!([2, 2]));
    let v = run_json(&["cohomology", "--n", "10"]);
    assert_eq!(v["invariant_factors"], json!([4]));
    assert_eq!(v["generator_cocycles"], json!([[1, -1]]));
}

#[test]
fn sphere_degree() {
    let v = run_json(&["degree", "--m", "2", "--n", "2", "--sphere"]);
    assert_envelope(&v, "degree");
    assert_eq!(v["degree_abs"], 4);
    let v = run_json(&["degree", "--m", "4", "--n", "4"]);
    assert_eq!(v["degree"], 6);
    assert_eq!(v["certificate"]["pairs"].as_array().unwrap().len(), 6);
    assert_eq!(v["certificate_valid"], true);
}

#[test]
fn resultant_and_positivity() {
    let v = run_json(&["resultant", "--p", "1,0,1", "--q", "4,0,1"]);
    assert_envelope(&v, "resultant");
    assert_eq!(v["resultant"], 9);
    assert_eq!(v["positivity"]["positive"], true);
    let v = run_json(&["resultant", "--p", "-1,0,1", "--q", "4,0,1"]);
    assert!(v["positivity"]["not_applicable"].is_string());
    let v = run_json(&["resultant", "--p", "-1,1/2", "--q", "-3,1"]);
    assert_eq!(v["resultant"], "-1/2");
}

#[test]
fn admissible_and_congruence() {
    let v = run_json(&["admissible", "--d", "8", "--j", "5"]);
    assert_envelope(&v, "admissible");
    assert_eq!(v["verdict"], "ADMISSIBLE_BY_PRIMARY_OBSTRUCTION");
    assert_eq!(v["ramos_lower_bound"], 8);
    let v = run_json(&["admissible", "--d", "20", "--j", "13"]);
    assert_eq!(v["verdict"], "PRIMARY_OBSTRUCTION_VANISHES_INCONCLUSIVE");
    let v = run_json(&["congruence", "--k", "2"]);
    assert_envelope(&v, "congruence");
    assert_eq!(v["sphere_degree"], 12);
    assert_eq!(v["passed"], true);
}

#[test]
fn obstruction_commands() {
    let v = run_json(&["obstruction-example"]);
    assert_envelope(&v, "obstruction-example");
    assert_eq!(v["class"]["coordinates"], json!([2]));
    assert_eq!(v["group_invariant_factors"], json!([4]));
    assert_eq!(v["class_order"], 2);
    let g = data("z2.cayley");
    let p = data("z2_example.json");
    let v = run_json(&["obstruction", "--group", &g, "--problem", &p]);
    assert_envelope(&v, "obstruction");
    assert_eq!(v["class"]["coordinates"], json!([2]));
}

#[test]
fn verify_is_deterministic() {
    let a = run(&["verify"]);
    let b = run(&["verify"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["failed"], 0);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["ok"] == true && c["paper_ref"].is_string()));
}

#[test]
fn text_format() {
    let out = run(&["theta", "--k", "1", "--format", "text"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("theta = 2 mod 4"));
    assert!(text.contains("(8, 5, 2) is admissible"));
}

#[test]
fn invalid_arguments_exit_2() {
    let cases: &[&[&str]] = &[
        &["theta", "--k", "0"],
        &["theta", "--k", "9", "--cross-check"],
        &["cohomology", "--n", "7"],
        &["degree", "--m", "3", "--n", "2"],
        &["degree", "--m", "20", "--n", "20"],
        &["resultant", "--p", "1,x", "--q", "1"],
        &["resultant", "--p", "0", "--q", "1"],
        &["congruence", "--k", "9"],
        &["admissible", "--d", "0", "--j", "1"],
        &["obstruction", "--group", "/nonexistent", "--problem", "/nonexistent"],
        &["frobnicate"],
        &[],
    ];
    for args in cases {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}
