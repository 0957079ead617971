//! End-to-end tests of the atlas binary: verdict JSON, exit codes,
//! deterministic reports, and witness reproduction.

use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn atlas(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_atlas"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn check_s3_instance() {
    let out = atlas(&[
        "check",
        "--group",
        "dihedral:3",
        "--ring",
        "Z3",
        "--sigma",
        "builtin:theorem-i",
        "--f",
        "builtin:sign",
        "--oracle",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["normal"], true);
    assert_eq!(v["certificate"]["case"], "case_i");
    assert_eq!(v["oracle"]["normal"], true);
    assert_eq!(v["consistent"], true);
    assert_eq!(v["sigma"], serde_json::json!([0, 2, 1, 3, 4, 5]));
}

#[test]
fn check_d4_over_z3_reports_witness() {
    let out = atlas(&[
        "check",
        "--group",
        "dihedral:4",
        "--ring",
        "Z3",
        "--sigma",
        "builtin:classical",
        "--f",
        "builtin:trivial",
    ]);
    assert!(out.status.success(), "not-normal is still a consistent verdict");
    let v = stdout_json(&out);
    assert_eq!(v["normal"], false);
    assert_eq!(v["certificate"]["case"], "not_normal");
    assert_eq!(v["witness_kind"], "pair");
    assert_eq!(v["witness"], serde_json::json!([1, 4]));
}

#[test]
fn classify_q8() {
    let out = atlas(&[
        "classify",
        "--group",
        "quaternion:8",
        "--ring",
        "Z5",
        "--sigma",
        "builtin:classical",
        "--f",
        "builtin:trivial",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["certificate"]["case"], "case_ii_a");
    assert_eq!(v["certificate"]["witnesses"]["kind"], "case_ii");
}

#[test]
fn input_errors_exit_one() {
    let out = atlas(&[
        "check",
        "--group",
        "cyclic:4",
        "--ring",
        "Z99",
        "--sigma",
        "builtin:classical",
        "--f",
        "builtin:trivial",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("Z99"), "diagnostic names the label: {err}");

    // A Latin square with identity that is not associative.
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(
        file,
        "5\n0 1 2 3 4\n1 0 3 4 2\n2 3 4 0 1\n3 4 1 2 0\n4 2 0 1 3\n"
    )
    .unwrap();
    let path = format!("file:{}", file.path().display());
    let out = atlas(&[
        "check", "--group", &path, "--ring", "Z2", "--sigma", "builtin:classical", "--f",
        "builtin:trivial",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("associativity"), "names the invariant: {err}");
}

#[test]
fn group_file_round_trip() {
    // Export Q8's table and feed it back through the parser.
    let q8 = atlas_core::group::quaternion(8).unwrap();
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(file, "{}", q8.cayley_text()).unwrap();
    let path = format!("file:{}", file.path().display());
    let out = atlas(&[
        "check", "--group", &path, "--ring", "Z3", "--sigma", "builtin:classical", "--f",
        "builtin:trivial",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["normal"], true);
    assert_eq!(v["certificate"]["case"], "case_ii_a");

    // Q16 is not Hamiltonian, so its classical instance over Z3 fails.
    let q16 = atlas_core::group::quaternion(16).unwrap();
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(file, "{}", q16.cayley_text()).unwrap();
    let path = format!("file:{}", file.path().display());
    let out = atlas(&[
        "check", "--group", &path, "--ring", "Z3", "--sigma", "builtin:classical", "--f",
        "builtin:trivial",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["normal"], false);
    assert_eq!(v["certificate"]["case"], "not_normal");
}

#[test]
fn combined_spec_file_feeds_both_flags() {
    // Two-line involution spec: sigma indices then f literals.
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(file, "0 2 1 3 4 5\n1 1 1 2 2 2\n").unwrap();
    let path = format!("file:{}", file.path().display());
    let out = atlas(&[
        "check",
        "--group",
        "dihedral:3",
        "--ring",
        "Z3",
        "--sigma",
        &path,
        "--f",
        &path,
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["normal"], true);
    assert_eq!(v["certificate"]["case"], "case_i");
}

#[test]
fn sweep_reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let p1 = dir.path().join("s1.json");
    let p2 = dir.path().join("s2.json");
    for p in [&p1, &p2] {
        let out = atlas(&[
            "sweep",
            "--max-order",
            "6",
            "--rings",
            "Z2,Z3",
            "--out",
            p.to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    let b1 = std::fs::read(&p1).unwrap();
    let b2 = std::fs::read(&p2).unwrap();
    assert_eq!(b1, b2, "identical inputs must give byte-identical reports");
    let v: Value = serde_json::from_slice(&b1).unwrap();
    assert_eq!(v["summary"]["disagreements"], 0);
}

#[test]
fn sweep_csv_projection() {
    let dir = tempfile::tempdir().unwrap();
    let json_path = dir.path().join("s.json");
    let csv_path = dir.path().join("s.csv");
    let out = atlas(&[
        "sweep",
        "--max-order",
        "4",
        "--rings",
        "Z2",
        "--out",
        json_path.to_str().unwrap(),
        "--csv",
        csv_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let csv = std::fs::read_to_string(&csv_path).unwrap();
    let mut lines = csv.lines();
    assert_eq!(
        lines.next().unwrap(),
        "group,ring,sigma_index,f_index,normal,case,agree,witness_kind,witness"
    );
    let v: Value = serde_json::from_slice(&std::fs::read(&json_path).unwrap()).unwrap();
    assert_eq!(lines.count(), v["records"].as_array().unwrap().len());
}

#[test]
fn sweep_failure_records_reproduce_via_check() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.json");
    let out = atlas(&[
        "sweep",
        "--max-order",
        "8",
        "--rings",
        "Z3",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    let record = v["records"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["normal"] == false && r["group"] == "D4")
        .expect("a failing D4 record exists over Z3");
    let sigma_arg = format!(
        "indices:{}",
        record["sigma"]
            .as_array()
            .unwrap()
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    );
    let f_arg = format!(
        "values:{}",
        record["f"]
            .as_array()
            .unwrap()
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    );
    let out = atlas(&[
        "check", "--group", "dihedral:4", "--ring", "Z3", "--sigma", &sigma_arg, "--f", &f_arg,
    ]);
    assert!(out.status.success());
    let reproduced = stdout_json(&out);
    assert_eq!(reproduced["normal"], false);
    assert_eq!(reproduced["witness_kind"], record["witness_kind"]);
    assert_eq!(reproduced["witness"], record["witness"]);
}

#[test]
fn lemmas_and_oracle_compare_pass() {
    let out = atlas(&["lemmas", "--max-order", "6", "--rings", "Z2,Z3"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["failures"], 0);

    let out = atlas(&["oracle-compare", "--max-order", "4", "--rings", "Z2,Z3"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["disagreements"], 0);
}

#[test]
fn sweep_rejects_oversized_order() {
    let out = atlas(&["sweep", "--max-order", "64", "--rings", "Z2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn worker_cap_does_not_change_reports() {
    let dir = tempfile::tempdir().unwrap();
    let p1 = dir.path().join("par.json");
    let p2 = dir.path().join("seq.json");
    let out = atlas(&[
        "sweep", "--max-order", "6", "--rings", "Z3", "--out", p1.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let out = Command::new(env!("CARGO_BIN_EXE_atlas"))
        .env("ATLAS_WORKERS", "1")
        .args(["sweep", "--max-order", "6", "--rings", "Z3", "--out", p2.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(std::fs::read(&p1).unwrap(), std::fs::read(&p2).unwrap());
}

#[test]
fn oracle_out_of_bounds_is_an_input_error() {
    // 5^8 element enumerations are beyond the 2^16 bound.
    let out = atlas(&[
        "check",
        "--group",
        "quaternion:8",
        "--ring",
        "Z5",
        "--sigma",
        "builtin:classical",
        "--f",
        "builtin:trivial",
        "--oracle",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("bound"), "diagnostic mentions the bound: {err}");
}
