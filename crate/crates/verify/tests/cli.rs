use std::process::{Command, Output};

use mcg_verify::CheckReport;

fn mcg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mcg-verify"))
        .args(args)
        .env_remove("MCG_ORBIT_CAP")
        .env_remove("MCG_ENUM_CAP")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, CheckReport) {
    let mut all = args.to_vec();
    all.extend(["--output", "json"]);
    let out = mcg(&all);
    let report = CheckReport::from_json(&String::from_utf8(out.stdout).unwrap()).unwrap();
    (out.status.code().unwrap(), report)
}

#[test]
fn genus_four_theorem_lists_four_generators() {
    let (code, report) = json(&["--genus", "4", "--checks", "theorem"]);
    assert_eq!(code, 0);
    let item = &report.section("theorem").unwrap().items[0];
    assert_eq!(item.facts["generators"].as_array().unwrap().len(), 4);
    assert!(!report.conventions.is_empty());
    assert!(report.scope.contains("necessary"));
}

#[test]
fn genus_three_mod_two_order() {
    let (code, report) = json(&["--genus", "3", "--checks", "theorem,modp", "--prime", "2"]);
    assert_eq!(code, 0);
    let modp = report.section("modp").unwrap();
    assert_eq!(modp.items[0].facts["order"], 1_451_520);
    let theorem = report.section("theorem").unwrap();
    assert_eq!(theorem.items[0].facts["generators"].as_array().unwrap().len(), 5);
    assert_eq!(theorem.items[0].facts["involutions"], 4);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(mcg(&["--genus", "1", "--checks", "theorem"]).status.code(), Some(2));
    assert_eq!(mcg(&["--genus", "2", "--checks", "theorem"]).status.code(), Some(2));
    assert_eq!(mcg(&["--genus", "3", "--checks", "modp"]).status.code(), Some(2));
    assert_eq!(mcg(&["--genus", "3", "--checks", "modp", "--prime", "4"]).status.code(), Some(2));
    assert_eq!(mcg(&["--genus", "3", "--checks", "everything"]).status.code(), Some(2));
    assert_eq!(mcg(&["--checks", "theorem"]).status.code(), Some(2));
}

#[test]
fn inconclusive_orbit_exits_one() {
    let out = mcg(&["--genus", "4", "--checks", "theorem", "--orbit-cap", "3"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("INCONCLUSIVE"), "{err}");
}

#[test]
fn caps_come_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_mcg-verify"))
        .args(["--genus", "4", "--checks", "theorem", "--output", "json"])
        .env("MCG_ORBIT_CAP", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    // below the genus-3 group order, so only transitivity is reported
    let out = Command::new(env!("CARGO_BIN_EXE_mcg-verify"))
        .args(["--genus", "3", "--checks", "modp", "--prime", "2", "--output", "json"])
        .env("MCG_ENUM_CAP", "1000")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let report = CheckReport::from_json(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert!(report.section("modp").unwrap().items[0].label.contains("weaker certificate"));
}

#[test]
fn out_writes_the_report_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = mcg(&["--genus", "3", "--checks", "relations", "--output", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let report = CheckReport::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(report.passed());
}

#[test]
fn text_output_is_default() {
    let out = mcg(&["--genus", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("[relations] PASS"));
    assert!(text.trim_end().ends_with("overall: PASS"));
}
