//! End-to-end tests of the binary: report contents, exit codes, and
//! byte-for-byte determinism of every output format.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fanlp"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "expected success for {args:?}, stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn failure_of(args: &[&str]) -> (i32, String) {
    let out = run(args);
    let code = out.status.code().expect("no signal");
    assert_ne!(code, 0, "expected failure for {args:?}");
    (code, String::from_utf8_lossy(&out.stderr).into_owned())
}

fn input(name: &str) -> String {
    fixture(name).to_string_lossy().into_owned()
}

#[test]
fn fan_lists_the_pentagon_classes() {
    let out = stdout_of(&["fan", "--input", &input("example5.json")]);
    assert!(out.contains("polygon: 5 vertices, 5 edges"));
    assert!(out.contains("classes (10):"));
    assert!(out.contains("c3: corner v3, cone (26.565, 63.435), width 36.870"));
    assert!(out.contains("c8: face e3, angle 63.435"));
    assert!(out.contains("e2 = v2 -> v3, normal 26.565"));
}

#[test]
fn solve_cross_checks_both_solvers() {
    let out = stdout_of(&["solve", "--input", &input("example5.json")]);
    assert!(out.contains("objective f1 = (2.000, 3.000)"));
    assert!(out.contains("enumeration: vertex v3 = (80.000, 40.000), value 280.000"));
    assert!(out.contains("simplex: x = (80.000, 40.000), value 280.000"));
    assert!(out.contains("agreement: yes"));
}

#[test]
fn solve_reports_an_edge_tie() {
    let out = stdout_of(&["solve", "--input", &input("edge_tie.json")]);
    assert!(out.contains("enumeration: edge e3 = (80.000, 40.000) -- (60.000, 50.000), value 160.000"));
    assert!(out.contains("agreement: yes"));
}

#[test]
fn classify_agreeing_objectives_find_the_ideal_vertex() {
    let out = stdout_of(&["classify", "--input", &input("example5_multi.json")]);
    assert!(out.contains("objectives (3):"));
    assert!(out.contains("groups:\n  c3: f1 f2 f3"));
    assert!(out.contains("verdict: ideal vertex v3 = (80.000, 40.000)"));
}

#[test]
fn classify_conflicting_objectives_report_no_ideal() {
    let out = stdout_of(&["classify", "--input", &input("conflict.json")]);
    assert!(out.contains("verdict: no ideal solution"));
    assert!(out.contains("c2: f2"));
    assert!(out.contains("c3: f1"));
}

#[test]
fn sensitivity_by_objective_prints_the_open_cone() {
    let out = stdout_of(&["sensitivity", "--input", &input("example5.json"), "--objective", "1"]);
    assert!(out.contains("class: c3 (corner v3)"));
    assert!(out.contains("cone: (26.565, 63.435) deg, width 36.870"));
}

#[test]
fn sensitivity_by_vertex_matches_the_objective_route() {
    let out = stdout_of(&["sensitivity", "--input", &input("example5.json"), "--vertex", "3"]);
    assert!(out.contains("vertex v3 = (80.000, 40.000)"));
    assert!(out.contains("cone: (26.565, 63.435) deg, width 36.870"));
}

#[test]
fn sensitivity_in_radians_and_custom_precision() {
    let out = stdout_of(&[
        "sensitivity",
        "--input",
        &input("example5.json"),
        "--vertex",
        "3",
        "--angle-unit",
        "rad",
    ]);
    assert!(out.contains("cone: (0.464, 1.107) rad"));
    let out = stdout_of(&[
        "sensitivity",
        "--input",
        &input("example5.json"),
        "--vertex",
        "3",
        "--precision",
        "1",
    ]);
    assert!(out.contains("cone: (26.6, 63.4) deg"));
}

#[test]
fn sensitivity_on_a_face_objective_reports_the_degenerate_cone() {
    let out = stdout_of(&["sensitivity", "--input", &input("edge_tie.json"), "--objective", "1"]);
    assert!(out.contains("class: c8 (face e3)"));
    assert!(out.contains("argmax edge e3 = (80.000, 40.000) -- (60.000, 50.000)"));
    assert!(out.contains("cone: degenerate; the argmax stays this edge only at angle 63.435 deg"));
}

#[test]
fn sensitivity_requires_exactly_one_selector() {
    let (code, _) = failure_of(&["sensitivity", "--input", &input("example5.json")]);
    assert_eq!(code, 2);
    let (code, _) = failure_of(&[
        "sensitivity",
        "--input",
        &input("example5.json"),
        "--vertex",
        "1",
        "--objective",
        "1",
    ]);
    assert_eq!(code, 2);
}

#[test]
fn json_reports_are_valid_and_carry_metadata() {
    let out = stdout_of(&["classify", "--input", &input("example5_multi.json"), "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&out).expect("valid JSON");
    assert_eq!(doc["angle_unit"], "deg");
    assert_eq!(doc["version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(doc["tolerances"]["eps_angle"], 1e-9);
    assert_eq!(doc["verdict"]["kind"], "ideal_vertex");
    assert_eq!(doc["verdict"]["vertex"], 3);
    assert_eq!(doc["classes"].as_array().unwrap().len(), 10);
    assert_eq!(doc["groups"][0]["objectives"], serde_json::json!([1, 2, 3]));

    let out = stdout_of(&["solve", "--input", &input("example5.json"), "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&out).expect("valid JSON");
    assert_eq!(doc["enumeration"]["kind"], "vertex");
    assert_eq!(doc["enumeration"]["vertex"], 3);
    assert_eq!(doc["agreement"], true);

    let out = stdout_of(&[
        "sensitivity",
        "--input",
        &input("example5.json"),
        "--vertex",
        "3",
        "--format",
        "json",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&out).expect("valid JSON");
    let lo = doc["cone"]["lo"].as_f64().unwrap();
    let hi = doc["cone"]["hi"].as_f64().unwrap();
    assert!((lo - 26.56505117707799).abs() < 1e-9);
    assert!((hi - 63.43494882292201).abs() < 1e-9);
}

#[test]
fn outputs_are_deterministic() {
    for args in [
        vec!["classify", "--input", &input("example5_multi.json")],
        vec!["classify", "--input", &input("example5_multi.json"), "--format", "json"],
        vec!["fan", "--input", &input("example5.json"), "--format", "json"],
    ] {
        let args: Vec<&str> = args.iter().map(|s| s.as_ref()).collect();
        let first = stdout_of(&args);
        let second = stdout_of(&args);
        assert_eq!(first, second, "non-deterministic output for {args:?}");
    }
}

#[test]
fn plot_writes_one_marker_per_vertex_and_cone() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("fan.svg");
    let out = stdout_of(&[
        "plot",
        "--input",
        &input("example5.json"),
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.contains("wrote "));
    let svg = std::fs::read_to_string(&path).expect("figure written");
    assert!(svg.starts_with("<svg "));
    assert!(svg.trim_end().ends_with("</svg>"));
    assert_eq!(svg.matches("class=\"vertex-label\"").count(), 5);
    assert_eq!(svg.matches("class=\"corner-cone\"").count(), 5);
    assert_eq!(svg.matches("class=\"edge-normal\"").count(), 5);
    assert_eq!(svg.matches("class=\"objective-arrow\"").count(), 1);

    let again = dir.path().join("fan2.svg");
    stdout_of(&[
        "plot",
        "--input",
        &input("example5.json"),
        "--output",
        again.to_str().unwrap(),
    ]);
    assert_eq!(svg, std::fs::read_to_string(&again).unwrap(), "plot is deterministic");
}

#[test]
fn domain_failures_exit_one_with_stable_prefixes() {
    let (code, err) = failure_of(&["classify", "--input", &input("empty.json")]);
    assert_eq!(code, 1);
    assert!(err.starts_with("E_EMPTY:"), "got {err}");

    let (code, err) = failure_of(&["classify", "--input", &input("unbounded.json")]);
    assert_eq!(code, 1);
    assert!(err.starts_with("E_UNBOUNDED:"), "got {err}");

    let (code, err) = failure_of(&["classify", "--input", &input("zeroform.json")]);
    assert_eq!(code, 1);
    assert!(err.starts_with("E_ZEROFORM:"), "got {err}");

    let (code, err) = failure_of(&["solve", "--input", &input("example5.json"), "--objective", "0"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("E_DOMAIN:"), "got {err}");
}

#[test]
fn parse_failures_exit_two() {
    let (code, err) = failure_of(&["fan", "--input", &input("bad_syntax.json")]);
    assert_eq!(code, 2);
    assert!(err.starts_with("E_PARSE:"), "got {err}");

    let (code, err) = failure_of(&["fan", "--input", &input("bad_schema.json")]);
    assert_eq!(code, 2);
    assert!(err.starts_with("E_PARSE:"), "got {err}");

    let (code, err) = failure_of(&["fan", "--input", "/definitely/not/there.json"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("E_PARSE:"), "got {err}");

    let (code, _) = failure_of(&["fan"]);
    assert_eq!(code, 2, "missing --input is a usage error");
}

#[test]
fn zero_objectives_are_accepted_until_used() {
    // `fan` never touches the objectives list, so a zero form parses fine.
    let out = stdout_of(&["fan", "--input", &input("zeroform.json")]);
    assert!(out.contains("classes (10):"));
    // `solve` uses it and must reject it.
    let (code, err) = failure_of(&["solve", "--input", &input("zeroform.json")]);
    assert_eq!(code, 1);
    assert!(err.starts_with("E_ZEROFORM:"));
}

#[test]
fn eps_val_flag_reaches_the_tie_detector() {
    // A huge tie tolerance makes non-adjacent vertices tie, which the
    // enumeration reports as a domain error.
    let (code, err) = failure_of(&[
        "solve",
        "--input",
        &input("example5.json"),
        "--eps-val",
        "10",
    ]);
    assert_eq!(code, 1);
    assert!(err.starts_with("E_DOMAIN:"), "got {err}");

    let (code, err) = failure_of(&["solve", "--input", &input("example5.json"), "--eps-geom=-1"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("E_PARSE:"), "got {err}");
}
