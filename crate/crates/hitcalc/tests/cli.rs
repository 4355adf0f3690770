//! End-to-end tests of the command-line surface: every subcommand, the
//! certificate file round trip, and the exit-code contract.

use std::process::{Command, Output};

fn hitcalc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hitcalc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "command failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn cohit_subcommand() {
    let out = hitcalc(&["cohit", "--vars", "2", "--degree", "2", "--json"]);
    let v = stdout_json(&out);
    assert_eq!(v["dim"], 1);
    assert_eq!(v["monomials"], 3);
    assert_eq!(v["basis"], serde_json::json!(["(1,1)"]));

    let human = hitcalc(&["cohit", "--vars", "2", "--degree", "2"]);
    let text = String::from_utf8_lossy(&human.stdout).to_string();
    assert!(text.contains("dim=1"));
    assert!(text.contains("(1,1)"));
}

#[test]
fn invariants_subcommand() {
    let out = hitcalc(&[
        "invariants",
        "--vars",
        "3",
        "--degree",
        "11",
        "--group",
        "gl",
        "--json",
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["group"], "gl");
    assert_eq!(v["k"], 3);
    assert!(v["cohit_dim"].as_u64().unwrap() > 0);

    let sym = hitcalc(&[
        "invariants",
        "--vars",
        "3",
        "--degree",
        "11",
        "--group",
        "sym",
        "--json",
    ]);
    let w = stdout_json(&sym);
    // Symmetric invariants contain the general linear ones.
    assert!(w["invariant_dim"].as_u64().unwrap() >= v["invariant_dim"].as_u64().unwrap());
}

#[test]
fn hit_test_and_certificate_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cert_path = dir.path().join("cert.json");
    let cert_str = cert_path.to_str().unwrap();

    let out = hitcalc(&[
        "hit-test",
        "--vars",
        "5",
        "--poly",
        " ( 11 , 0 , 0 , 0 , 0 ) ",
        "--certificate",
        cert_str,
        "--json",
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["hit"], true);
    assert_eq!(v["residue"], "0");

    // The emitted file has the documented shape.
    let cert: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&cert_path).unwrap()).unwrap();
    assert_eq!(cert["vars"], 5);
    assert_eq!(cert["degree"], 11);
    assert!(cert["summands"]
        .as_array()
        .unwrap()
        .iter()
        .all(|s| { s["i"].is_u64() && s["source"].is_string() }));

    let verify = hitcalc(&["certificate", "verify", cert_str]);
    assert!(verify.status.success());
    assert!(String::from_utf8_lossy(&verify.stdout).contains("VALID"));

    // A spike is not hit; its certificate carries the residue.
    let spike = hitcalc(&["hit-test", "--vars", "5", "--poly", "(7,3,1,0,0)", "--json"]);
    let v = stdout_json(&spike);
    assert_eq!(v["hit"], false);
    assert_eq!(v["residue"], "(7,3,1,0,0)");
}

#[test]
fn tampered_certificate_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let cert_path = dir.path().join("cert.json");
    let cert_str = cert_path.to_str().unwrap();

    hitcalc(&[
        "hit-test",
        "--vars",
        "5",
        "--poly",
        "(10,1,0,0,0)",
        "--certificate",
        cert_str,
    ]);

    // Flip the residue: the checker must fail with exit code 1.
    let mut cert: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&cert_path).unwrap()).unwrap();
    cert["residue"] = serde_json::json!("(7,3,1,0,0)");
    std::fs::write(&cert_path, serde_json::to_string(&cert).unwrap()).unwrap();

    let verify = hitcalc(&["certificate", "verify", cert_str]);
    assert_eq!(verify.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&verify.stdout).contains("INVALID"));

    // Structurally broken files exit with 2.
    std::fs::write(&cert_path, "{ not json").unwrap();
    let broken = hitcalc(&["certificate", "verify", cert_str]);
    assert_eq!(broken.status.code(), Some(2));
}

#[test]
fn hit_test_rejects_bad_input() {
    // Mixed degrees.
    let out = hitcalc(&["hit-test", "--vars", "2", "--poly", "(1,0)+(1,1)"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));

    // Arity mismatch between --vars and the tuple.
    let out = hitcalc(&["hit-test", "--vars", "3", "--poly", "(1,0)"]);
    assert_eq!(out.status.code(), Some(2));

    // vars = 0 is rejected by argument parsing.
    let out = hitcalc(&["cohit", "--vars", "0", "--degree", "3"]);
    assert!(!out.status.success());

    // Absurdly large configurations are refused up front.
    let out = hitcalc(&["cohit", "--vars", "12", "--degree", "40"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("monomials"));
}

#[test]
fn verify_paper_generic_modes() {
    let out = hitcalc(&["verify-paper", "--vars", "3", "--degree", "11", "--json"]);
    let v = stdout_json(&out);
    assert_eq!(v["mode"], "generic");
    assert_eq!(v["pass"], true);
    assert_eq!(v["conclusion"], serde_json::Value::Null);
    // The three-variable witnesses ride along at (3, 11).
    let witnesses = v["witnesses"].as_array().unwrap();
    assert_eq!(witnesses.len(), 2);
    assert!(witnesses.iter().all(|w| w["pass"] == true));

    let out = hitcalc(&["verify-paper", "--degree", "10", "--json"]);
    let v = stdout_json(&out);
    assert_eq!(v["mode"], "generic");
    assert_eq!(v["identities"]["total"], 0);
}

#[test]
fn verify_paper_full_run() {
    let out = hitcalc(&["verify-paper", "--json"]);
    let v = stdout_json(&out);
    assert_eq!(v["mode"], "full");
    assert_eq!(v["cohit"]["dim"], 315);
    assert_eq!(v["cohit"]["hit_rank"], 1050);
    assert_eq!(v["identities"]["total"], 100);
    assert_eq!(v["identities"]["passed"], 100);
    assert_eq!(v["invariants"]["invariant_dim"], 0);
    assert_eq!(v["spanning"]["pass"], true);
    assert_eq!(v["decomposition"]["direct"], true);
    assert_eq!(v["pass"], true);
    assert!(v["conclusion"].as_str().unwrap().contains("P(h_2)"));

    // Thread capping must not change the output.
    let capped = Command::new(env!("CARGO_BIN_EXE_hitcalc"))
        .args(["verify-paper", "--json"])
        .env("HITCALC_THREADS", "1")
        .output()
        .expect("binary runs");
    assert_eq!(out.stdout, capped.stdout);
}
