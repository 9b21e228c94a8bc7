//! The `nconc` binary end to end.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn nconc(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nconc"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("run nconc")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn sweep_output_is_byte_identical_across_worker_counts() {
    let dir = tempfile::tempdir().unwrap();
    let grid = "gamma=0,0.3;h=-1:1:0.25";
    let a = nconc(dir.path(), &["sweep", "--n", "4", "--grid", grid, "--workers", "1", "--out", "a.csv"]);
    let b = nconc(dir.path(), &["sweep", "--n", "4", "--grid", grid, "--workers", "3", "--out", "b.csv"]);
    assert!(a.status.success() && b.status.success());
    let a = std::fs::read(dir.path().join("a.csv")).unwrap();
    let b = std::fs::read(dir.path().join("b.csv")).unwrap();
    assert_eq!(a, b);
    let text = String::from_utf8(a).unwrap();
    assert_eq!(text.lines().count(), 1 + 2 * 9);
    // auto picks the analytic engine for the XX points and dense for the XY ones
    assert!(text.lines().nth(1).unwrap().contains(",analytic,"));
    assert!(text.lines().last().unwrap().contains(",dense,"));
}

#[test]
fn manifest_replay_matches_and_detects_tampering() {
    let dir = tempfile::tempdir().unwrap();
    let run = nconc(
        dir.path(),
        &["sweep", "--grid", "fig3", "--n", "10", "--out", "f3.csv", "--plot", "f3.gp", "--manifest", "run.json"],
    );
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    let m: Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("run.json")).unwrap()).unwrap();
    assert_eq!(m["outputs"].as_array().unwrap().len(), 2);
    assert_eq!(m["outputs"][0]["sha256"].as_str().unwrap().len(), 64);
    assert!(std::fs::read_to_string(dir.path().join("f3.gp")).unwrap().contains("'f3.csv'"));

    let replay = nconc(dir.path(), &["replay", "--manifest", "run.json"]);
    assert!(replay.status.success());
    assert!(stdout(&replay).contains("MATCH f3.csv"));

    // the replay regenerates the CSV, so tamper with the recorded digest instead
    let mut m = m;
    m["outputs"][0]["sha256"] = Value::String("0".repeat(64));
    std::fs::write(dir.path().join("bad.json"), m.to_string()).unwrap();
    let replay = nconc(dir.path(), &["replay", "--manifest", "bad.json"]);
    assert_eq!(replay.status.code(), Some(5));
    assert!(stdout(&replay).contains("MISMATCH f3.csv"));
}

#[test]
fn config_file_values_are_overridden_by_flags() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("run.ini"), "[chain]\nn = 6\nboundary = open\nengine = dense\n").unwrap();
    let from_cfg = nconc(dir.path(), &["critical", "--config", "run.ini", "--json"]);
    assert!(from_cfg.status.success());
    let v: Value = serde_json::from_str(stdout(&from_cfg).trim()).unwrap();
    assert_eq!(v["n"], 6);
    assert_eq!(v["boundary"], "open");
    assert_eq!(v["engine"], "dense");
    let expected = 2.0 * (std::f64::consts::PI / 14.0).sin();
    assert!((v["h_crit"].as_f64().unwrap() - expected).abs() < 1e-6);

    let flagged = nconc(dir.path(), &["critical", "--config", "run.ini", "--n", "4", "--engine", "analytic", "--json"]);
    let v: Value = serde_json::from_str(stdout(&flagged).trim()).unwrap();
    assert_eq!(v["n"], 4);
    assert_eq!(v["engine"], "analytic");
}

#[test]
fn ensemble_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let s = 0.5;
    // equal mixture of |00⟩ and |11⟩: separable, concurrence 0
    let mut dm = String::from("4 2\n");
    for i in 0..4 {
        for j in 0..4 {
            let v = if i == j && (i == 0 || i == 3) { s } else { 0.0 };
            dm.push_str(&format!("{v} 0\n"));
        }
    }
    std::fs::write(dir.path().join("rho.txt"), dm).unwrap();
    let o = nconc(dir.path(), &["ensemble", "--input", "rho.txt", "--out", "ens.txt", "--json"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert!(v["closed_form"].as_f64().unwrap().abs() < 1e-12);
    assert!(v["reconstruction_error"].as_f64().unwrap() < 1e-10);
    let ens = std::fs::read_to_string(dir.path().join("ens.txt")).unwrap();
    let header: Vec<usize> = ens.lines().next().unwrap().split(' ').map(|t| t.parse().unwrap()).collect();
    assert_eq!(header[0], 4);
    assert_eq!(ens.lines().count(), 1 + header[0] * header[1]);
}

#[test]
fn exit_codes_and_error_records() {
    let dir = tempfile::tempdir().unwrap();
    let usage = nconc(dir.path(), &["sweep", "--bogus"]);
    assert_eq!(usage.status.code(), Some(2));

    let input = nconc(dir.path(), &["ensemble", "--input", "missing.txt"]);
    assert_eq!(input.status.code(), Some(3));
    let rec: Value = serde_json::from_str(String::from_utf8_lossy(&input.stderr).lines().last().unwrap()).unwrap();
    assert_eq!(rec["error"], "Io");

    std::fs::write(dir.path().join("bad.txt"), "2 1\n1 0\n1 0\n").unwrap();
    let bad = nconc(dir.path(), &["ensemble", "--input", "bad.txt"]);
    assert_eq!(bad.status.code(), Some(3));

    let cap = nconc(dir.path(), &["thermal", "--n", "14", "--t", "0.1", "--engine", "dense"]);
    assert_eq!(cap.status.code(), Some(4));

    let fermionic = nconc(dir.path(), &["ensemble", "--random-dim", "8", "--seed", "1"]);
    assert_eq!(fermionic.status.code(), Some(3));
    let ok = nconc(dir.path(), &["ensemble", "--random-dim", "8", "--seed", "1", "--sites", "0,1"]);
    assert!(ok.status.success());
}

#[test]
fn threshold_and_validate_commands() {
    let dir = tempfile::tempdir().unwrap();
    let t = nconc(dir.path(), &["threshold", "--n", "10", "--json"]);
    let v: Value = serde_json::from_str(stdout(&t).trim()).unwrap();
    assert!((v["ratio"].as_f64().unwrap() - 0.8159).abs() < 5e-3);

    let val = nconc(dir.path(), &["validate", "--sizes", "4..6"]);
    assert!(val.status.success());
    let out = stdout(&val);
    assert!(out.contains("PASS") && !out.contains("FAIL"));
    assert!(out.contains("SKIP n=5"));
}

#[test]
fn help_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    let h = nconc(dir.path(), &["--help"]);
    assert_eq!(h.status.code(), Some(0));
    assert!(stdout(&h).contains("sweep"));
}
