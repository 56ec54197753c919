//! End-to-end tests of the `spq` binary: exit codes, JSON output shape,
//! family -> check round-trips, and byte-level determinism.

use std::io::Write;
use std::path::Path;
use std::process::{Command, Output};

fn spq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_field(dir: &Path, name: &str, json: &str) -> String {
    let path = dir.join(name);
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(json.as_bytes()).unwrap();
    path.to_str().unwrap().to_string()
}

const EXAMPLE_FIELD: &str = r#"{
  "p": 2, "q": 2, "a": "2",
  "components": ["-x2", "x1 - x3", "x2", "0", "0"]
}"#;

const OFF_SURFACE_FIELD: &str = r#"{
  "p": 2, "q": 2, "a": "2",
  "components": ["x1", "0", "0", "0", "0"]
}"#;

const DEGREE_TWO_FIELD: &str = r#"{
  "p": 1, "q": 1, "a": "2",
  "components": ["x1^2", "0", "0"]
}"#;

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(spq(&["--help"]).status.code(), Some(0));
    assert_eq!(spq(&["--version"]).status.code(), Some(0));
    assert_eq!(spq(&["check", "--help"]).status.code(), Some(0));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(spq(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(spq(&["check"]).status.code(), Some(1)); // missing --field
    assert_eq!(spq(&["bounds", "--p", "2"]).status.code(), Some(1));
}

#[test]
fn check_reports_example_field() {
    let dir = tempfile::tempdir().unwrap();
    let field = write_field(dir.path(), "f.json", EXAMPLE_FIELD);
    let out = spq(&["check", "--field", &field, "--candidate", "x1 + x3"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["on_surface"], true);
    assert_eq!(doc["cofactor_h"], "0");
    let cand = &doc["candidates"][0];
    assert_eq!(cand["kind"], "meridian");
    assert_eq!(cand["invariant"], true);
    assert_eq!(cand["multiplicity"], 1);
    assert_eq!(cand["components"], 1);
}

#[test]
fn check_is_byte_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let field = write_field(dir.path(), "f.json", EXAMPLE_FIELD);
    let args = ["check", "--field", &field, "--candidate", "x1 + x3", "--candidate", "x4 - 1/2"];
    let first = spq(&args);
    let second = spq(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    assert!(!first.stdout.is_empty());
}

#[test]
fn check_off_surface_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let field = write_field(dir.path(), "f.json", OFF_SURFACE_FIELD);
    let out = spq(&["check", "--field", &field]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_malformed_document_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let field = write_field(dir.path(), "f.json", "{ not json");
    assert_eq!(spq(&["check", "--field", &field]).status.code(), Some(1));
    let missing = dir.path().join("missing.json");
    assert_eq!(
        spq(&["check", "--field", missing.to_str().unwrap()]).status.code(),
        Some(1)
    );
}

#[test]
fn meridians_lists_kernel_forms() {
    let dir = tempfile::tempdir().unwrap();
    let field = write_field(dir.path(), "f.json", EXAMPLE_FIELD);
    let out = spq(&["meridians", "--field", &field]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["upper_rank"], 2);
    assert_eq!(doc["nonreal_eigenvalue_pairs"], 1);
    assert_eq!(doc["kernel_full"], false);
    assert_eq!(doc["meridians"].as_array().unwrap().len(), 1);
    assert_eq!(doc["meridians"][0], "x1 + x3 = 0");
}

#[test]
fn meridians_rejects_higher_degree() {
    let dir = tempfile::tempdir().unwrap();
    let field = write_field(dir.path(), "f.json", DEGREE_TWO_FIELD);
    assert_eq!(spq(&["meridians", "--field", &field]).status.code(), Some(1));
}

#[test]
fn extactic_zero_state_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    let field_path = dir.path().join("stack.json");
    let field = field_path.to_str().unwrap();
    let built = spq(&[
        "family", "--kind", "thm4-p2", "--m", "4", "--a", "2",
        "--normal", "1,1,1", "--q", "2", "--out", field,
    ]);
    assert_eq!(built.status.code(), Some(0), "{}", String::from_utf8_lossy(&built.stderr));
    let out = spq(&["extactic", "--field", field, "--basis", "meridian"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["extactic_is_zero"], true);
    let text = spq(&["extactic", "--field", field, "--basis", "meridian", "--format", "text"]);
    assert!(String::from_utf8_lossy(&text.stdout).contains("no defined algebraic multiplicity"));
}

#[test]
fn extactic_explicit_basis_matches_meridian_basis() {
    let dir = tempfile::tempdir().unwrap();
    let field = write_field(dir.path(), "f.json", EXAMPLE_FIELD);
    let a = spq(&["extactic", "--field", &field, "--basis", "meridian"]);
    let b = spq(&["extactic", "--field", &field, "--basis", "x1,x2,x3"]);
    assert_eq!(a.status.code(), Some(0));
    let da: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    let db: serde_json::Value = serde_json::from_slice(&b.stdout).unwrap();
    assert_eq!(da["extactic"], db["extactic"]);
}

#[test]
fn classify_degree_two_sample_and_perturbation() {
    let dir = tempfile::tempdir().unwrap();
    let field_path = dir.path().join("sample.json");
    let field = field_path.to_str().unwrap();
    let built = spq(&[
        "family", "--kind", "degree-two-sample", "--p", "2", "--q", "2",
        "--a", "3/2", "--alphas", "1,-1", "--seed", "5", "--out", field,
    ]);
    assert_eq!(built.status.code(), Some(0), "{}", String::from_utf8_lossy(&built.stderr));
    let out = spq(&["classify", "--field", field]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["relations_hold"], true);
    assert_eq!(doc["consistent"], true);

    // breaking one structural slot flips the verdict and the exit code
    let mut broken: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(field).unwrap()).unwrap();
    let c0 = broken["components"][0].as_str().unwrap().to_string();
    broken["components"][0] = serde_json::Value::String(format!("{c0} + x1^2"));
    let bad = write_field(dir.path(), "broken.json", &broken.to_string());
    let out = spq(&["classify", "--field", &bad]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bounds_command_matches_formulas() {
    let out = spq(&["bounds", "--p", "2", "--degrees", "4,4,4,3,3"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["meridian_bound"], 12);

    // zero components marked with "-"
    let out = spq(&["bounds", "--p", "2", "--degrees", "4,4,4,-,-"]);
    assert_eq!(out.status.code(), Some(0));

    // an all-zero upper block disables the meridian bound but the parallel
    // bound still applies
    let out = spq(&["bounds", "--p", "2", "--degrees", "-,-,-,3,3"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["meridian_bound"], serde_json::Value::Null);
    assert_eq!(doc["parallel_bound"], 5);

    // when neither bound applies the command fails semantically
    let out = spq(&["bounds", "--p", "2", "--degrees", "-,-,-,4"]);
    assert_eq!(out.status.code(), Some(2));

    // threshold needs the surface parameter
    let out = spq(&["bounds", "--p", "2", "--degrees", "1,1,1,1,1", "--a", "2"]);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["first_integral_threshold"], "5");
}

#[test]
fn every_family_kind_round_trips_through_check() {
    let dir = tempfile::tempdir().unwrap();
    let cases: Vec<Vec<&str>> = vec![
        vec![
            "family", "--kind", "degree-one-skew", "--p", "2", "--q", "2", "--a", "2",
            "--upper", "0,-1,0,1,0,-1,0,1,0", "--lower", "0,0,0,0",
        ],
        vec!["family", "--kind", "thm4-p2", "--m", "5", "--a", "2", "--normal", "1,0,1", "--q", "2"],
        vec!["family", "--kind", "thm4-p3", "--m", "4", "--a", "2", "--normal", "1,1,1,1", "--q", "1"],
        vec![
            "family", "--kind", "hyperplane-family", "--p", "2", "--q", "2", "--a", "2",
            "--index", "4", "--roots", "1/2",
        ],
        vec!["family", "--kind", "s1q-meridians", "--q", "2", "--a", "2", "--lines", "1,1,1,-1"],
        vec!["family", "--kind", "s1q-first-integral", "--q", "2", "--a", "2"],
        vec!["family", "--kind", "sp1-parallels", "--p", "2", "--m", "4", "--a", "2", "--roots", "1/2"],
        vec!["family", "--kind", "sp1-first-integral", "--p", "2", "--a", "2"],
        vec![
            "family", "--kind", "degree-two-sample", "--p", "1", "--q", "2", "--a", "3/2",
            "--alphas", "1,2", "--seed", "9",
        ],
    ];
    for (i, case) in cases.iter().enumerate() {
        let path = dir.path().join(format!("fam{i}.json"));
        let field = path.to_str().unwrap();
        let mut args = case.clone();
        args.extend_from_slice(&["--out", field]);
        let built = spq(&args);
        assert_eq!(
            built.status.code(),
            Some(0),
            "family kind {} failed: {}",
            case[2],
            String::from_utf8_lossy(&built.stderr)
        );
        // the family report itself names the kind and is valid JSON
        let report: serde_json::Value = serde_json::from_slice(&built.stdout).unwrap();
        assert_eq!(report["family"]["spec"]["kind"], case[2]);
        // the written document loads and checks clean
        let check = spq(&["check", "--field", field]);
        assert_eq!(
            check.status.code(),
            Some(0),
            "check after family kind {} failed: {}",
            case[2],
            String::from_utf8_lossy(&check.stderr)
        );
        let doc: serde_json::Value = serde_json::from_slice(&check.stdout).unwrap();
        assert_eq!(doc["on_surface"], true, "family kind {}", case[2]);
    }
}

#[test]
fn family_with_bad_parameters_exits_two() {
    // sp1-parallels needs exactly m-3 roots
    let out = spq(&["family", "--kind", "sp1-parallels", "--p", "2", "--m", "5", "--a", "2", "--roots", "1/2"]);
    assert_eq!(out.status.code(), Some(2));
    // unknown kind is a usage error
    let out = spq(&["family", "--kind", "no-such-kind", "--a", "2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn parse_validates_expressions_and_documents() {
    let out = spq(&["parse", "x1^2 + 2/3*x2", "--nvars", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let out = spq(&["parse", "x1 +", "--nvars", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = spq(&["parse", "x7", "--nvars", "3"]);
    assert_eq!(out.status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let field = write_field(dir.path(), "f.json", EXAMPLE_FIELD);
    assert_eq!(spq(&["parse", "--field", &field]).status.code(), Some(0));
}

#[test]
fn text_format_mentions_surface_and_candidates() {
    let dir = tempfile::tempdir().unwrap();
    let field = write_field(dir.path(), "f.json", EXAMPLE_FIELD);
    let out = spq(&["check", "--field", &field, "--candidate", "x1 + x3", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("surface: S_{2,2} with a = 2"));
    assert!(text.contains("candidate: x1 + x3 = 0 [meridian]"));
    assert!(text.contains("extactic multiplicity: 1"));
}

#[test]
fn out_flag_writes_the_same_bytes_as_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let field = write_field(dir.path(), "f.json", EXAMPLE_FIELD);
    let report_path = dir.path().join("report.json");
    let report = report_path.to_str().unwrap();
    let streamed = spq(&["check", "--field", &field, "--candidate", "x1 + x3"]);
    let written = spq(&["check", "--field", &field, "--candidate", "x1 + x3", "--out", report]);
    assert_eq!(written.status.code(), Some(0));
    let file_bytes = std::fs::read(report).unwrap();
    assert_eq!(streamed.stdout, file_bytes);
}
