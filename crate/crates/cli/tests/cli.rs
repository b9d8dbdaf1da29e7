//! End-to-end runs of the binary: exit codes, JSON shape, emission
//! roundtrips.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name);
    path.to_string_lossy().into_owned()
}

fn fcat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fcat"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn validate_passes_on_fixture() {
    let out = fcat(&["-f", &fixture("pointed.fcat"), "validate"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn proper_relative_check_fails_with_witness() {
    let out = fcat(&[
        "-f",
        &fixture("pointed.fcat"),
        "check-proper-relative",
        "--functor",
        "POINTED",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("[FAIL] relative[POINTED]"));
    assert!(text.contains("derived counit"));
}

#[test]
fn parse_error_exits_2() {
    let dir = std::env::temp_dir().join("fcat-cli-test-bad");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.fcat");
    std::fs::write(&path, "category C { objects: a\n  arrow f: a -> nowhere\n}").unwrap();
    let out = fcat(&["-f", path.to_str().unwrap(), "validate"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown object"));
}

#[test]
fn usage_error_exits_2() {
    let out = fcat(&["model-check", "--model", "MISSING"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enumerate_models_json_lists_three() {
    let out = fcat(&[
        "-f",
        &fixture("pointed.fcat"),
        "--json",
        "enumerate-models",
        "--category",
        "I1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let checks = json["checks"].as_array().unwrap();
    assert!(checks[0]["name"].as_str().unwrap().contains("3 structure(s)"));
    assert_eq!(json["stats"]["elapsed_ms"], 0);
}

#[test]
fn integrate_emits_reparsable_isomorphic_total() {
    let dir = std::env::temp_dir().join("fcat-cli-test-emit");
    std::fs::create_dir_all(&dir).unwrap();
    let emitted = dir.join("constpt.fcat");
    let out = fcat(&[
        "-f",
        &fixture("pointed.fcat"),
        "integrate",
        "--functor",
        "CONSTPT",
        "--emit",
        emitted.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&emitted).unwrap();
    let (ws, _) = fcat_cli::parser::parse_spec(&text, false).unwrap();
    let total = ws.categories().values().next().unwrap();
    assert!(fcat_core::fincat::are_isomorphic(total, &fcat_core::fincat::chain(2)).is_some());
}

#[test]
fn verify_theorem_on_named_diagram() {
    // CONSTPT is proper and relative: the integral suite passes on it.
    let out = fcat(&[
        "-f",
        &fixture("pointed.fcat"),
        "verify-theorem",
        "integral",
        "--functor",
        "CONSTPT",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    // POINTED is not relative: the suite reports the failure and exits 1.
    let out = fcat(&[
        "-f",
        &fixture("pointed.fcat"),
        "verify-theorem",
        "integral",
        "--functor",
        "POINTED",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("not relative"));
}

#[test]
fn later_files_see_earlier_definitions() {
    let dir = std::env::temp_dir().join("fcat-cli-test-multi");
    std::fs::create_dir_all(&dir).unwrap();
    let first = dir.join("base.fcat");
    let second = dir.join("structure.fcat");
    std::fs::write(&first, "poset I1 { order: 0 < 1 }\n").unwrap();
    std::fs::write(
        &second,
        "model m on I1 { weq: all  cof: all  fib: none }\n",
    )
    .unwrap();
    let out = fcat(&[
        "-f",
        first.to_str().unwrap(),
        "-f",
        second.to_str().unwrap(),
        "model-check",
        "--model",
        "m",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn straighten_identity_fibration() {
    let out = fcat(&[
        "-f",
        &fixture("pointed.fcat"),
        "straighten",
        "--fibration",
        "SELF",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("straighten[SELF]: 2 fibers"));
}

#[test]
fn export_dot_contains_class_attributes() {
    let out = fcat(&[
        "-f",
        &fixture("pointed.fcat"),
        "export-dot",
        "--model",
        "ex44",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("digraph"));
    assert!(text.contains("weq=true, cof=true, fib=false"));
    // Clustered export for diagrams.
    let out = fcat(&[
        "-f",
        &fixture("pointed.fcat"),
        "export-dot",
        "--functor",
        "POINTED",
    ]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("subgraph cluster_"));
}
