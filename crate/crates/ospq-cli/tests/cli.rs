use std::process::{Command, Output};

use ospq::repth;
use ospq::tmat;
use ospq::Scalar;
use ospq_cli::encode;
use serde_json::Value;

fn ospq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ospq")).args(args).env_remove("OSPQ_TRUNC").output().expect("spawn ospq")
}

fn code(args: &[&str]) -> i32 {
    ospq(args).status.code().expect("exit code")
}

fn json(args: &[&str]) -> Value {
    let out = ospq(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

#[test]
fn tmat_fundamental_matches_listed_entries() {
    let v = json(&["tmat", "--l", "1", "--lambda", "0"]);
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 9);
    let listed = tmat::fundamental_entries();
    for e in entries {
        let (mp, m) = (e["mp"].as_i64().unwrap(), e["m"].as_i64().unwrap());
        let want = encode::a_element(&listed.get((1 - mp) as usize, (1 - m) as usize));
        assert_eq!(e["value"], want, "entry ({mp},{m})");
    }
}

#[test]
fn rep_of_trivial_irrep_is_zero() {
    let v = json(&["rep", "--l", "0"]);
    for key in ["H", "Vplus", "Vminus"] {
        assert_eq!(v[key], serde_json::json!([[[]]]), "{key}");
    }
    assert_eq!(code(&["rep", "--l", "-1"]), 2);
}

#[test]
fn rmatrix_fundamental_top_weight() {
    let v = json(&["rmatrix", "--l1", "1", "--l2", "1"]);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 9);
    assert!(rows.iter().all(|r| r.as_array().unwrap().len() == 9));
    assert_eq!(v["labels"][0], serde_json::json!([1, 1]));
    assert_eq!(rows[0][0], encode::scalar(&Scalar::q_pow(1)));
    let r = repth::r_matrix(&repth::irrep(1, 0).unwrap(), &repth::irrep(1, 0).unwrap());
    assert_eq!(v["rows"], encode::scalar_rows(&r));
}

#[test]
fn cgc_labels_add_up() {
    let v = json(&["cgc", "--l1", "1", "--l2", "1"]);
    for e in v["entries"].as_array().unwrap() {
        assert_eq!(e["m1"].as_i64().unwrap() + e["m2"].as_i64().unwrap(), e["m"].as_i64().unwrap());
    }
}

#[test]
fn jacobi_prints_both_polynomials_and_verdict() {
    let v = json(&["jacobi", "--l", "2", "--mp", "1", "--m", "0"]);
    assert_eq!(v["verdict"], "PASS");
    assert_eq!(v["p"], v["jacobi"]);
    assert_eq!(code(&["jacobi", "--l", "1", "--mp", "3", "--m", "0"]), 2);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["verify", "--suite", "fundamental"]), 0);
    assert_eq!(code(&["verify", "--suite", "pairing_delta", "--bounds", "0,0,0"]), 0);
    // The first orthogonality relation as stated fails on odd entries.
    assert_eq!(code(&["verify", "--suite", "ortho", "--max-l", "1"]), 1);
    assert_eq!(code(&["verify", "--suite", "no_such_suite"]), 2);
    assert_eq!(code(&["verify", "--suite", "fundamental", "--q-sample", "1.0"]), 2);
    assert_eq!(code(&["verify", "--suite", "fundamental", "--q-sample", "0"]), 2);
    assert_eq!(code(&["verify", "--suite", "comodule", "--max-l", "2", "--trunc", "3"]), 2);
    assert_eq!(code(&["verify", "--bounds", "1,2"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
}

#[test]
fn truncation_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_ospq"))
        .args(["verify", "--suite", "comodule", "--max-l", "1"])
        .env("OSPQ_TRUNC", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("trunc"));
}

#[test]
fn pairing_report_schema() {
    let v = json(&["verify", "--suite", "pairing_delta", "--bounds", "0,0,0"]);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 1);
    let keys: Vec<&str> = rows[0].as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["case-id", "details", "status", "suite"]);
    assert_eq!(rows[0]["status"], "PASS");
}

#[test]
fn reruns_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        vec!["verify", "--suite", "cgc", "--max-l", "1"],
        vec!["verify", "--suite", "recurrence", "--max-l", "1", "--format", "csv"],
        vec!["tmat", "--l", "2", "--lambda", "1"],
        vec!["cgc", "--l1", "2", "--l2", "1", "--format", "csv"],
    ] {
        let mut outs = Vec::new();
        for i in 0..2 {
            let path = dir.path().join(format!("out{i}"));
            let mut full = args.clone();
            full.extend(["--out", path.to_str().unwrap()]);
            ospq(&full);
            outs.push(std::fs::read(&path).unwrap());
        }
        assert!(!outs[0].is_empty(), "{args:?}");
        assert_eq!(outs[0], outs[1], "{args:?}");
    }
}

#[test]
fn verify_all_small_bounds() {
    let out = ospq(&["verify", "--suite", "all", "--max-l", "1", "--trunc", "4"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let rows = v.as_array().unwrap();
    let suites: std::collections::BTreeSet<&str> = rows.iter().map(|r| r["suite"].as_str().unwrap()).collect();
    assert_eq!(suites.len(), ospq_cli::SUITES.len());
    // Stated forms that fail at l = 1 make the run fail.
    let failed = rows.iter().filter(|r| r["status"] == "FAIL").count();
    assert!(failed > 0);
    assert_eq!(out.status.code(), Some(1));
}
