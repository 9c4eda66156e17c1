use std::path::PathBuf;
use std::process::{Command, Output};

use moufang_core::finite_loop::octonion_loop_16;
use serde_json::Value;

fn moufang(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_moufang"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn entry<'a>(report: &'a Value, name: &str) -> &'a Value {
    report["entries"]
        .as_array()
        .unwrap()
        .iter()
        .find(|e| e["name"] == name)
        .unwrap_or_else(|| panic!("entry {name} missing"))
}

#[test]
fn check_table_on_exported_octonion_loop() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("oct16.txt");
    std::fs::write(&path, octonion_loop_16().serialize()).unwrap();
    let out = moufang(&["check-table", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["order"], 16);
    assert_eq!(report["classification"]["is_moufang"]["holds"], true);
    assert_eq!(report["classification"]["is_group"]["holds"], false);
    assert_eq!(
        report["classification"]["is_group"]["counterexample"]["elements"],
        serde_json::json!([1, 2, 4])
    );
    assert_eq!(report["birep_axiom_defect"], 0);
}

#[test]
fn check_table_z2_is_a_group() {
    let out = moufang(&["--format", "text", "check-table", &fixture("z2.txt")]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("group: true"));
}

#[test]
fn check_table_errors_exit_2_with_location() {
    let out = moufang(&["check-table", &fixture("truncated_table.txt")]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line") && err.contains("column"), "{err}");

    let out = moufang(&["check-table", &fixture("duplicate_in_row.txt")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("row 1"));

    let out = moufang(&["check-table", "/nonexistent/table.txt"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn lie_cartan_defaults_pass_and_repeat() {
    let a = moufang(&["lie-cartan"]);
    assert_eq!(a.status.code(), Some(0));
    let report = json(&a);
    assert_eq!(report["version"], 1);
    assert_eq!(report["config"]["samples"], 20);
    assert_eq!(entry(&report, "lie_cartan_first")["pass"], true);
    let b = moufang(&["lie-cartan"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn lie_cartan_below_accuracy_floor_fails() {
    let out = moufang(&["lie-cartan", "--samples", "2", "--tol", "1e-15"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn lie_cartan_seed_changes_samples() {
    let a = moufang(&["lie-cartan", "--samples", "2", "--seed", "1"]);
    let b = moufang(&["lie-cartan", "--samples", "2", "--seed", "2"]);
    assert_ne!(a.stdout, b.stdout);
}

#[test]
fn charge_ledger_at_unit() {
    let out = moufang(&["charge-ledger", "--g", "0", "0", "0", "0", "0", "0", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    for e in report["entries"].as_array().unwrap() {
        for key in ["name", "paper_tag", "required", "max_residual", "tolerance", "samples", "pass"] {
            assert!(e.get(key).is_some(), "{key} missing");
        }
        if e["required"] == true {
            assert_eq!(e["pass"], true, "{}", e["name"]);
        }
    }
    assert!(!report["conventions"].as_array().unwrap().is_empty());
}

#[test]
fn charge_ledger_quaternionic_point_passes_everything() {
    let out = moufang(&["charge-ledger", "--algebra", "quaternion", "--g", "0.2", "-0.1", "0.3"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    for e in report["entries"].as_array().unwrap() {
        assert_eq!(e["required"], true);
        assert_eq!(e["pass"], true, "{}", e["name"]);
        assert!(e["max_residual"].as_f64().unwrap() < 1e-9);
    }
}

#[test]
fn charge_ledger_random_point_reports_variants() {
    let out = moufang(&["charge-ledger", "--random", "--seed", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["config"]["point"].as_array().unwrap().len(), 7);
    let red = entry(&report, "reductivity_t");
    let labels: Vec<&str> = red["variants"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v["label"].as_str().unwrap())
        .collect();
    assert_eq!(labels, ["printed_rhs", "yamaguti_printed"]);
    // The printed right-hand side is not what the charges satisfy.
    assert!(red["variants"][0]["max_residual"].as_f64().unwrap() > 1e-3);
}

#[test]
fn charge_ledger_domain_errors_exit_2() {
    for args in [
        vec!["charge-ledger", "--g", "0.9", "0.9", "0", "0", "0", "0", "0"],
        vec!["charge-ledger", "--g", "0.1", "0.2"],
        vec!["charge-ledger", "--g", "nan", "0", "0", "0", "0", "0", "0"],
        vec!["charge-ledger", "--radius", "1.0"],
        vec!["charge-ledger", "--tol", "split_ss"],
    ] {
        assert_eq!(moufang(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn charge_ledger_tolerance_override_can_fail_required_entry() {
    let out = moufang(&[
        "charge-ledger",
        "--random",
        "--tol",
        "lie_cartan_relations=1e-20",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("lie_cartan_relations"));
}

#[test]
fn selftest_with_perturbed_sign_table_names_moufang() {
    let out = moufang(&["selftest", "--perturb-sign-table"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("moufang"));
}

#[test]
fn malformed_arguments_exit_2() {
    assert_eq!(moufang(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(moufang(&["lie-cartan", "--samples", "-3"]).status.code(), Some(2));
    assert_eq!(moufang(&["lie-cartan", "--samples", "0"]).status.code(), Some(2));
    assert_eq!(moufang(&["--format", "yaml", "selftest"]).status.code(), Some(2));
    assert_eq!(moufang(&["--help"]).status.code(), Some(0));
}
