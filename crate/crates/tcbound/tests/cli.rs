//! End-to-end checks of the `tcbound` binary: exit codes, report
//! determinism, and the descriptor/report JSON contract.

use std::fs;
use std::process::{Command, Output};

use tcbound::report::ReportFile;

fn tcbound(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tcbound"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn run_builtin_rp2_reports_four_four() {
    let output = tcbound(&["run", "rp2", "--json"]);
    assert_eq!(output.status.code(), Some(0));
    let report = ReportFile::from_json(&stdout(&output)).unwrap();
    assert_eq!((report.bounds.lower, report.bounds.upper), (4, 4));
    assert_eq!(report.convention, "unreduced");
    assert!(report.input_hash.starts_with("sha256:"));
}

#[test]
fn run_builtin_lens_skeleton_n1_reports_five_five() {
    let output = tcbound(&["run", "lens_skeleton_n1", "--json"]);
    assert_eq!(output.status.code(), Some(0));
    let report = ReportFile::from_json(&stdout(&output)).unwrap();
    assert_eq!((report.bounds.lower, report.bounds.upper), (5, 5));
}

#[test]
fn identical_runs_produce_byte_identical_json() {
    let a = tcbound(&["run", "lens_skeleton_n3", "--json"]);
    let b = tcbound(&["run", "lens_skeleton_n3", "--json"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}

#[test]
fn report_json_round_trips() {
    let output = tcbound(&["run", "rp4", "--json"]);
    let text = stdout(&output);
    let report = ReportFile::from_json(&text).unwrap();
    assert_eq!(report.to_json().trim(), text.trim());
}

#[test]
fn default_output_has_both_renderings() {
    let output = tcbound(&["run", "rp2"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    assert!(text.contains("TC in [4, 4]"));
    assert!(text.contains("\"lower\": 4"));
}

#[test]
fn reduced_flag_changes_only_the_text() {
    let output = tcbound(&["run", "rp2", "--text", "--reduced"]);
    assert_eq!(output.status.code(), Some(0));
    assert!(stdout(&output).contains("TC in [3, 3]"));
}

#[test]
fn corrupted_pi1_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    fs::write(
        &path,
        r#"{"name": "bad", "dim": 2, "pi1": {"type": "cyclic"}}"#,
    )
    .unwrap();
    let output = tcbound(&["run", path.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn unknown_key_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("extra.json");
    fs::write(
        &path,
        r#"{"name": "x", "dim": 2, "pi1": {"type": "trivial"}, "extra": true}"#,
    )
    .unwrap();
    let output = tcbound(&["run", path.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn missing_input_exits_two() {
    let output = tcbound(&["run", "no_such_example"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn inconsistent_bounds_exit_three() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("clash.json");
    // cat = 1 forces TC <= 1 against the cup-length lower bound of RP2.
    fs::write(
        &path,
        r#"{
            "name": "clash",
            "dim": 2,
            "pi1": {"type": "cyclic", "order": 2},
            "cat": 1,
            "cohomology": {"preset": "rp", "n": 2}
        }"#,
    )
    .unwrap();
    let output = tcbound(&["run", path.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(3));
    let err = String::from_utf8_lossy(&output.stderr).into_owned();
    assert!(err.contains("cuplength-lower") && err.contains("cat-upper"), "{err}");
}

#[test]
fn directory_mode_writes_reports_atomically() {
    let dir = tempfile::tempdir().unwrap();
    for (name, body) in [
        (
            "a.json",
            r#"{"name": "a", "dim": 3, "pi1": {"type": "trivial"}}"#,
        ),
        (
            "b.json",
            r#"{"name": "b", "dim": 5, "pi1": {"type": "cd", "cd": 2}}"#,
        ),
    ] {
        fs::write(dir.path().join(name), body).unwrap();
    }
    let output = tcbound(&["run", dir.path().to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(0));
    for stem in ["a", "b"] {
        let report_path = dir.path().join(format!("{stem}.report.json"));
        let report = ReportFile::from_json(&fs::read_to_string(&report_path).unwrap()).unwrap();
        assert!(report.bounds.lower <= report.bounds.upper);
    }
}

#[test]
fn verify_passes_and_filters() {
    let output = tcbound(&["verify"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    assert!(text.contains("padic/lucas-oracle"));
    assert!(text.contains("PASS"));
    assert!(!text.contains("FAIL"));

    let filtered = tcbound(&["verify", "--only", "padic"]);
    assert_eq!(filtered.status.code(), Some(0));
    let text = stdout(&filtered);
    assert!(text.contains("padic/"));
    assert!(!text.contains("groupring/"));
}

#[test]
fn verify_with_injected_fault_exits_one() {
    let output = tcbound(&["verify", "--inject-fault"]);
    assert_eq!(output.status.code(), Some(1));
    assert!(stdout(&output).contains("FAIL"));
}

#[test]
fn shipped_schemas_are_valid_json() {
    for name in ["descriptor.schema.json", "report.schema.json"] {
        let path = concat!(env!("CARGO_MANIFEST_DIR"), "/docs/");
        let text = fs::read_to_string(format!("{path}{name}")).unwrap();
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(value["$schema"], "http://json-schema.org/draft-07/schema#");
    }
}

#[test]
fn list_names_the_corpus() {
    let output = tcbound(&["list"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    for name in ["rp2", "rp16", "lens_skeleton_n10", "torus_skeleton_mu6_d2", "cd2_dim5"] {
        assert!(text.lines().any(|l| l == name), "missing {name}");
    }
}
