//! End-to-end checks of the command-line interface: report shapes,
//! determinism, and the exit-code contract (0 ran, 1 usage, 2 detector).

use std::process::{Command, Output};

fn opspectra(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_opspectra"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_graph(name: &str, body: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("opspectra-test-{name}"));
    std::fs::write(&path, body).expect("temp file");
    path
}

#[test]
fn check_reports_k4_not_outerplanar() {
    let path = write_graph(
        "k4.json",
        r#"{"n":4,"edges":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]}"#,
    );
    let out = opspectra(&["check", path.to_str().unwrap()]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["outerplanar"], false);
    assert_eq!(json["maximal"], false);
}

#[test]
fn check_reports_structure_of_maximal_graphs() {
    let path = write_graph(
        "c4p.json",
        r#"{"n":6,"edges":[[0,1],[1,2],[2,3],[3,0],[0,4],[0,5]]}"#,
    );
    let out = opspectra(&["check", path.to_str().unwrap()]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["outerplanar"], true);
    assert_eq!(json["bipartite"], true);
    assert_eq!(json["maximal"], true);
    assert_eq!(json["structure"]["kind"], "composite");
    assert_eq!(json["structure"]["pendant_roots"]["0"], 2);
}

#[test]
fn check_accepts_graph6() {
    let path = write_graph("c4.g6", "Cl\n");
    let out = opspectra(&["check", path.to_str().unwrap()]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn generate_family_graph() {
    let out = opspectra(&["generate", "--family", "g1", "--n", "36", "--s", "4"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["n"], 36);
    // out-of-range parameter requires the explicit escape hatch
    let out = opspectra(&["generate", "--family", "g1", "--n", "20", "--s", "6"]);
    assert_eq!(out.status.code(), Some(1));
    let out = opspectra(&[
        "generate",
        "--family",
        "g1",
        "--n",
        "20",
        "--s",
        "6",
        "--unchecked",
    ]);
    assert!(out.status.success());
}

#[test]
fn generate_dot_embedding() {
    let out = opspectra(&[
        "generate", "--family", "ladder", "--n", "8", "--emit", "dot",
    ]);
    assert!(out.status.success());
    let dot = String::from_utf8_lossy(&out.stdout);
    assert!(dot.contains("pos="));
}

#[test]
fn enumerate_streams_json_lines() {
    let out = opspectra(&["enumerate", "--family", "maximal2conn", "--n", "10"]);
    assert!(out.status.success());
    let lines: Vec<&str> = std::str::from_utf8(&out.stdout)
        .unwrap()
        .trim()
        .lines()
        .collect();
    assert_eq!(lines.len(), 5);
    let out = opspectra(&[
        "enumerate",
        "--family",
        "maximal2conn",
        "--n",
        "10",
        "--labeled",
    ]);
    let lines: Vec<&str> = std::str::from_utf8(&out.stdout)
        .unwrap()
        .trim()
        .lines()
        .collect();
    assert_eq!(lines.len(), 55);
}

#[test]
fn enumerate_cap_requires_override() {
    let out = opspectra(&["enumerate", "--family", "all-connected", "--n", "9"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn scan_is_deterministic() {
    let a = opspectra(&[
        "scan",
        "--family",
        "bip-outerplanar",
        "--n",
        "6",
        "--objective",
        "max-rho",
    ]);
    let b = opspectra(&[
        "scan",
        "--family",
        "bip-outerplanar",
        "--n",
        "6",
        "--objective",
        "max-rho",
    ]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let json: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    // at order 6 the edge-most ladder wins; the star does not
    assert_eq!(json["winner_edge_most"], true);
    assert_eq!(json["star_attains"], false);
}

#[test]
fn bounds_values() {
    let out = opspectra(&["bounds", "--kind", "max-two-connected", "--n", "16"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let v = json["value"].as_f64().unwrap();
    assert!((v - 14.0f64.sqrt()).abs() < 1e-12);
    // hypothesis violations are named
    let out = opspectra(&["bounds", "--kind", "max-two-connected", "--n", "12"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("n >= 16"));
}

#[test]
fn spectrum_and_certify() {
    let path = write_graph("c4s.json", r#"{"n":4,"edges":[[0,1],[0,3],[1,2],[2,3]]}"#);
    let out = opspectra(&["spectrum", path.to_str().unwrap()]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!((json["rho"].as_f64().unwrap() - 2.0).abs() < 1e-8);
    assert!((json["lambda"].as_f64().unwrap() + 2.0).abs() < 1e-8);

    let out = opspectra(&[
        "certify",
        "--poly",
        "1,0,0",
        "--r",
        "4",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["verdict"], "loose");
}

#[test]
fn verify_theorems_runs_and_exits_zero() {
    let out = opspectra(&["verify-theorems", "--suite", "rowsum", "--n", "4..8"]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json[0]["pass"], true);
}

#[test]
fn verify_theorems_table_format() {
    let out = opspectra(&[
        "verify-theorems",
        "--suite",
        "edgecount",
        "--n",
        "1..5",
        "--format",
        "table",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.starts_with("suite edgecount: PASS"));
    assert!(text.contains("[ok]"));
}

#[test]
fn detector_exit_code_is_two() {
    // the documented g2 claim fails for s >= 6 at the low end of its
    // range; the suite reports it and the process exits with the
    // detector code
    let out = opspectra(&["verify-theorems", "--suite", "g1g2", "--n", "36..40"]);
    assert_eq!(out.status.code(), Some(2));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json[0]["pass"], false);
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        vec!["frobnicate"],
        vec!["scan", "--family", "bip-outerplanar", "--n", "6"],
        vec!["generate", "--family", "star", "--bogus", "3"],
        vec!["enumerate", "--family", "nope", "--n", "4"],
    ] {
        let out = opspectra(&args);
        assert_eq!(out.status.code(), Some(1), "args {args:?}");
    }
}

#[test]
fn tolerance_config_is_loaded() {
    let cfg = write_graph("tol.json", r#"{"compare": 1e-6}"#);
    let out = Command::new(env!("CARGO_BIN_EXE_opspectra"))
        .args([
            "verify-theorems",
            "--suite",
            "star-extremal",
            "--n",
            "2..10",
        ])
        .env("OPSPECTRA_CONFIG", cfg.to_str().unwrap())
        .output()
        .expect("binary runs");
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    // malformed config is a usage error
    let bad = write_graph("tol-bad.json", "not json");
    let out = Command::new(env!("CARGO_BIN_EXE_opspectra"))
        .args(["verify-theorems", "--suite", "star-extremal"])
        .env("OPSPECTRA_CONFIG", bad.to_str().unwrap())
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(1));
}
