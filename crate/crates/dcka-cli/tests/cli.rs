use std::process::{Command, Output};

use serde_json::Value;

fn dcka(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dcka")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = dcka(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn dual_of_gapped_scheme() {
    let v = json(&["dual", "1,4,5,10,11"]);
    let p = &v["payload"];
    assert_eq!(p["dual"], "-2,-3,-4,-5,-8,-9,-11");
    assert_eq!(p["shift"], "24/1");
    assert_eq!(p["n_plus"], 5);
    assert_eq!(p["n_minus"], 7);
    assert_eq!(v["convention"], "L_(+)");
}

#[test]
fn dual_of_negative_scheme() {
    let v = json(&["dual", "-3"]);
    assert_eq!(v["payload"]["dual"], "1,2,3");
    assert_eq!(v["payload"]["shift"], "8/1");
}

#[test]
fn mixed_scheme_is_reduced_with_notice() {
    let out = dcka(&["dual", "2,-3"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("reduced"));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["payload"]["notice"].is_object());
}

#[test]
fn exact_potential() {
    let v = json(&["potential", "-3"]);
    let pot = &v["payload"]["potential"];
    assert_eq!(pot["m"], 1);
    assert_eq!(pot["constant"], "-2/1");
    assert_eq!(pot["numerator"], serde_json::json!(["-6/1", "0/1", "4/1"]));
    assert_eq!(pot["denominator"], serde_json::json!(["9/4", "0/1", "3/1", "0/1", "1/1"]));
}

#[test]
fn csv_samples() {
    let path = std::env::temp_dir().join(format!("dcka-cli-test-{}.csv", std::process::id()));
    let p = path.to_str().unwrap();
    json(&["potential", "1,4,5", "--format", "csv-samples", "--range", "0.5:4", "--samples", "11", p]);
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "x,V");
    assert_eq!(lines.len(), 12);
    let first: Vec<f64> = lines[1].split(',').map(|t| t.parse().unwrap()).collect();
    assert_eq!(first[0], 0.5);
    assert!(first[1].is_finite());
}

#[test]
fn spectrum_levels() {
    let v = json(&["spectrum", "-3", "--cutoff", "15"]);
    assert_eq!(v["convention"], "L_(-)");
    assert_eq!(v["payload"]["levels"], serde_json::json!(["3/1", "7/1", "11/1", "15/1"]));
    let plus = json(&["spectrum", "-3", "--cutoff", "20", "--convention", "plus"]);
    assert_eq!(plus["payload"]["levels"][0], "11/1");
}

#[test]
fn numeric_spectrum() {
    let v = json(&["spectrum", "1,4,5", "--numeric"]);
    let n = &v["payload"]["numeric"];
    assert!(n["max_abs_error"].as_f64().unwrap() < 5e-3);
    assert_eq!(n["gap_counts_match"], true);
}

#[test]
fn ladders_of_single_seed() {
    let v = json(&["ladders", "-3"]);
    let pairs = v["payload"]["pairs"].as_array().unwrap();
    assert!(pairs.iter().all(|p| p["steps_certified"] == true));
    assert!(pairs.iter().all(|p| p["expected_law_holds"] != false));
}

#[test]
fn verify_duality_suite() {
    let v = json(&["verify", "--suite", "duality"]);
    assert_eq!(v["payload"]["passed"], true);
}

#[test]
fn failures_exit_nonzero() {
    assert!(!dcka(&["dual", "1,x"]).status.success());
    assert!(!dcka(&["spectrum", "1", "--cutoff", "abc"]).status.success());
    let out = dcka(&["potential", "1,4"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("singular"));
    assert!(!dcka(&["potential", "1,4,5", "--format", "csv-samples"]).status.success());
}
