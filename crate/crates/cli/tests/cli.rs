use std::path::PathBuf;
use std::process::Command;

use ordmat::catalog::named;
use ordmat::solver::{find_consistent_ordering, SolverOptions};
use ordmat_cli::{execute, CertificateDocument};
use serde_json::Value;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name).display().to_string()
}

fn run(args: &[&str]) -> (i32, Value) {
    let out = execute(std::iter::once("ordmat").chain(args.iter().copied()));
    let v = if out.stdout.is_empty() { Value::Null } else { serde_json::from_str(&out.stdout).unwrap() };
    (out.code, v)
}

#[test]
fn order_f7_gives_efg_certificate() {
    let (code, v) = run(&["order", &fixture("f7.json")]);
    assert_eq!(code, 1);
    assert_eq!(v["verdict"], "not_orderable");
    assert_eq!(v["obstruction"]["kind"], "efg");
    assert_eq!(v["obstruction"]["pivot"], "1");
    assert_eq!(v["obstruction"]["circuit"], serde_json::json!(["1", "2", "3", "4"]));
}

#[test]
fn order_without_fastpath_exhausts() {
    let (code, v) = run(&["order", &fixture("f7.json"), "--no-obstruction-fastpath"]);
    assert_eq!(code, 1);
    assert_eq!(v["obstruction"]["kind"], "exhausted");
}

#[test]
fn verify_figure_orderings() {
    assert_eq!(run(&["verify", &fixture("o1.json"), &fixture("o1-ordering.txt")]).0, 0);
    assert_eq!(run(&["verify", &fixture("o2.json"), &fixture("o2-ordering.txt")]).0, 0);
}

#[test]
fn characterize_whirl() {
    let (code, v) = run(&["characterize", &fixture("whirl3.json")]);
    assert_eq!(code, 1);
    assert_eq!(v["orderable"], false);
    let (code, v) = run(&["characterize", &fixture("u24-balanced.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["trace"]["base"], 4);
    assert_eq!(run(&["characterize", &fixture("u24-balanced.json"), "--theta"]).0, 1);
    assert_eq!(run(&["characterize", &fixture("f7.json")]).0, 2);
}

#[test]
fn graphic_and_decompose() {
    let (code, v) = run(&["graphic", &fixture("k4.json")]);
    assert_eq!((code, &v["graphic"]), (0, &Value::Bool(true)));
    let (code, v) = run(&["graphic", &fixture("o1.json")]);
    assert_eq!(code, 1);
    assert_eq!(v["incompatible_arcs"]["arcs"].as_array().unwrap().len(), 3);
    assert_eq!(run(&["graphic", &fixture("whirl3.json")]).0, 2);
    let (code, v) = run(&["decompose", &fixture("o1.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["nodes"].as_array().unwrap().len(), 5);
    assert_eq!(v["edges"].as_array().unwrap().len(), 4);
}

#[test]
fn dual_minor_catalog() {
    let (code, v) = run(&["dual", &fixture("triangle.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["circuits"].as_array().unwrap().len(), 3);
    let (_, v) = run(&["minor", &fixture("f7.json"), "--delete", "7", "--contract", ""]);
    assert_eq!(v["ground"].as_array().unwrap().len(), 6);
    let (code, v) = run(&["catalog", "U(2,4)"]);
    assert_eq!(code, 0);
    assert_eq!(v["format"], "circuits");
    assert_eq!(run(&["catalog", "nope"]).0, 2);
}

#[test]
fn usage_and_input_errors() {
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["order", "/nonexistent.json"]).0, 2);
    let out = execute(["ordmat", "order", &fixture("o1-ordering.txt")]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("malformed_json"));
}

#[test]
fn indeterminate_budget() {
    let (code, v) = run(&["order", &fixture("o2.json"), "--budget", "1", "--no-obstruction-fastpath"]);
    assert_eq!(code, 3);
    assert_eq!(v["verdict"], "indeterminate");
}

#[test]
fn certificates_round_trip_and_match_library() {
    for name in ["f7.json", "o1.json", "whirl3.json", "u24-balanced.json"] {
        let path = fixture(name);
        let (_, v) = run(&["order", &path]);
        let doc: CertificateDocument = serde_json::from_value(v.clone()).unwrap();
        assert_eq!(serde_json::to_value(&doc).unwrap(), v);
        let m = ordmat_cli::parse_matroid_file(&std::fs::read(&path).unwrap()).unwrap();
        let cert = doc.load(&m).unwrap();
        let lib = find_consistent_ordering(&m, SolverOptions::default()).unwrap();
        assert_eq!(cert.verdict(), lib.verdict());
        assert_eq!(serde_json::to_value(CertificateDocument::new(&m, &lib, false)).unwrap(), v);
    }
    let m = named("O1").unwrap();
    let (_, v) = run(&["order", &fixture("f7.json")]);
    let doc: CertificateDocument = serde_json::from_value(v).unwrap();
    assert!(doc.load(&m).is_err());
}

#[test]
fn binary_process_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_ordmat");
    let out = Command::new(bin).args(["order", &fixture("f7.json")]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let lib = execute(["ordmat", "order", &fixture("f7.json")]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), lib.stdout);
    let out = Command::new(bin).args(["verify", &fixture("o1.json"), &fixture("o1-ordering.txt")]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let out = Command::new(bin).arg("--bogus").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
