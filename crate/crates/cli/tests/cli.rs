use std::process::Command;

use proptest::prelude::*;
use qcongr::cases::{CaseKind, CaseReport, Instance, Mode, Status};
use qcongr_cli::{emit_report, exit_code, run, Document, Format, Record, EXIT_FAIL, EXIT_OK, EXIT_USAGE};

fn call(args: &[&str]) -> (i32, String, String) {
    let argv: Vec<String> = std::iter::once("qcongr").chain(args.iter().copied()).map(String::from).collect();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(&argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> (i32, Document<Record>) {
    let mut a = args.to_vec();
    a.extend(["--format", "json", "--no-timing"]);
    let (code, out, _) = call(&a);
    (code, serde_json::from_str(&out).unwrap())
}

fn record(holds: bool) -> Record {
    Record {
        report: CaseReport {
            case: "thm_a".into(),
            instance: Instance::n(3),
            kind: CaseKind::Congruence,
            mode: Mode::Exact,
            status: if holds { Status::Holds } else { Status::Fails },
            holds,
            denominator_coprime: true,
            valuation: Some(5),
            target: "[n]Phi_n^4".into(),
            samples: 0,
            factors: Vec::new(),
            residue: None,
            note: None,
            elapsed_ms: Some(1.5),
        },
        engine_version: "0.1.0".into(),
        seed: 42,
    }
}

#[test]
fn verify_range_skips_even_n() {
    let (code, doc) = json(&["verify", "--case", "thm_a", "--n", "3..9"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(doc.records.len(), 4);
    assert!(doc.records.iter().all(|r| r.report.holds));
    let (_, _, err) = call(&["verify", "--case", "thm_a", "--n", "3..6", "--no-timing"]);
    assert!(err.contains("skipped 2"));
}

#[test]
fn explicit_even_n_is_reported() {
    let (code, doc) = json(&["verify", "--case", "thm_a", "--n", "4"]);
    assert_eq!(code, EXIT_FAIL);
    assert_eq!(doc.records.len(), 1);
    assert_eq!(doc.records[0].report.status, Status::OutOfDomain);
    assert!(doc.records[0].report.note.as_deref().unwrap().contains("out of domain"));
}

#[test]
fn list_prints_the_catalog() {
    let (code, out, _) = call(&["list"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.lines().count() >= 40);
    assert!(out.lines().any(|l| l.starts_with("thm_a") && l.contains("wei-a")));
}

#[test]
fn usage_errors() {
    for args in [&["verify", "--bogus"][..], &["verify", "--case", "thm_a", "--n", "x"], &["frobnicate"], &["verify", "--n", "3"]] {
        let (code, out, err) = call(args);
        assert_eq!(code, EXIT_USAGE, "{args:?}");
        assert!(out.is_empty());
        assert!(err.contains("--help") || err.contains("Usage"), "{err}");
    }
}

#[test]
fn emit_examples() {
    assert_eq!(emit_report(&[], Format::Json, 42), "{\"version\":1,\"seed\":42,\"records\":[]}\n");
    assert!(emit_report(&[record(true)], Format::Json, 42).contains("\"holds\":true"));
    let rs = vec![record(true), record(false), record(true)];
    assert_eq!(emit_report(&rs, Format::Table, 42).lines().count(), rs.len() + 1);
}

#[test]
fn records_round_trip() {
    let rs = vec![record(true), record(false)];
    let text = emit_report(&rs, Format::Json, 7);
    let back: Document<Record> = serde_json::from_str(&text).unwrap();
    assert_eq!(back.records, rs);
    assert_eq!(back.seed, 7);
    let mut quiet = record(true);
    quiet.report.elapsed_ms = None;
    assert!(!emit_report(&[quiet], Format::Json, 7).contains("elapsed_ms"));
}

#[test]
fn seed_flag_and_environment() {
    let (_, doc) = json(&["verify", "--case", "watson", "--m", "2", "--seed", "9"]);
    assert_eq!(doc.seed, 9);
    assert_eq!(doc.records[0].seed, 9);
    let bin = env!("CARGO_BIN_EXE_qcongr");
    let args = ["verify", "--case", "relation_id", "--format", "json", "--no-timing"];
    let env = Command::new(bin).args(args).env("QCONGR_SEED", "5").output().unwrap();
    assert!(String::from_utf8_lossy(&env.stdout).starts_with("{\"version\":1,\"seed\":5,"));
    let both = Command::new(bin).args(args).args(["--seed", "6"]).env("QCONGR_SEED", "5").output().unwrap();
    assert!(String::from_utf8_lossy(&both.stdout).starts_with("{\"version\":1,\"seed\":6,"));
    assert_eq!(both.status.code(), Some(0));
}

#[test]
fn oracle_command() {
    let (code, out, _) = call(&["oracle", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["records"].as_array().unwrap().len(), 360);
}

proptest! {
    #[test]
    fn exit_code_contract(flags in prop::collection::vec(any::<bool>(), 0..20)) {
        let rs: Vec<Record> = flags.iter().map(|&h| record(h)).collect();
        let want = if flags.iter().all(|&h| h) { EXIT_OK } else { EXIT_FAIL };
        prop_assert_eq!(exit_code(&rs), want);
    }
}
