use std::process::{Command, Output};

use serde_json::Value;

fn sklift(args: &[&str], cache: &std::path::Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sklift"))
        .args(args)
        .env("SKLIFT_CACHE_DIR", cache)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn hecke_weight_12() {
    let dir = tempfile::tempdir().unwrap();
    let out = sklift(&["hecke", "--weight", "12", "--ell", "2"], dir.path());
    assert!(out.status.success());
    let rec = stdout_json(&out);
    assert_eq!(rec["kind"], "matrix");
    assert_eq!(rec["payload"]["charpoly"], "x + 24");
}

#[test]
fn odd_weight_space_is_empty() {
    let dir = tempfile::tempdir().unwrap();
    let out = sklift(&["hecke", "--weight", "13", "--ell", "2"], dir.path());
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["payload"]["charpoly"], "1");
}

#[test]
fn cache_hit_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["hecke", "--weight", "24", "--ell", "3"];
    let first = sklift(&args, dir.path());
    assert!(first.status.success());
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    let second = sklift(&args, dir.path());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn bernoulli_scan_37() {
    let dir = tempfile::tempdir().unwrap();
    for extra in [&[][..], &["--naive"][..]] {
        let mut args = vec!["bernoulli", "--mod-p", "37", "--scan"];
        args.extend_from_slice(extra);
        let out = sklift(&args, dir.path());
        assert!(out.status.success());
        assert_eq!(stdout_json(&out)["payload"]["irregular_indices"], serde_json::json!([32]));
    }
}

#[test]
fn sk_lift_and_eigenvalue() {
    let dir = tempfile::tempdir().unwrap();
    let out = sklift(&["sk-lift", "--weight", "10"], dir.path());
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["payload"]["maass_check"]["pass"], true);
    let out = sklift(&["siegel-hecke", "--ell", "3"], dir.path());
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["payload"]["lambda"], serde_json::json!(["21960", "1"]));
}

#[test]
fn errors_are_json_with_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let out = sklift(&["newform", "--weight", "10"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "domain");
    assert!(out.stdout.is_empty());

    let out = sklift(&["hecke", "--weight", "24", "--ell", "2", "--prec", "3"], dir.path());
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(serde_json::from_slice::<Value>(&out.stderr).unwrap()["error"], "precision");

    let out = sklift(&["bernoulli", "--mod-p", "35", "--index", "4"], dir.path());
    assert_eq!(out.status.code(), Some(2));
}
