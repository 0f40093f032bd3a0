use std::path::PathBuf;
use std::process::Command;

fn qw(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qw")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).display().to_string()
}

#[test]
fn check_exit_codes() {
    assert_eq!(qw(&["check", &fixture("om6.qw")]).0, 0);
    assert_eq!(qw(&["check", &fixture("not_be.qw")]).0, 1);
    let (code, _, err) = qw(&["check", &fixture("short_row.qw")]);
    assert_eq!(code, 2);
    assert!(err.contains("line 7"), "{err}");
    assert_eq!(qw(&["check", "/nonexistent.qw"]).0, 2);
}

#[test]
fn analyze_trivial_algebra() {
    let (code, out, _) = qw(&["analyze", &fixture("trivial.qw")]);
    assert_eq!(code, 0);
    assert!(out.contains("weakly linear: holds"));
    assert!(out.contains("filters (1):"));
}

#[test]
fn quotient_output_is_a_document() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out, _) = qw(&["quotient", &fixture("boolean4.qw"), "--ds", "a,1"]);
    assert_eq!(code, 0);
    let path = dir.path().join("q.qw");
    std::fs::write(&path, out).unwrap();
    assert_eq!(qw(&["check", path.to_str().unwrap()]).0, 0);
    let (code, _, err) = qw(&["quotient", &fixture("om6.qw"), "--ds", "a,1"]);
    assert_eq!(code, 2);
    assert!(err.contains("not a deductive system"));
}

#[test]
fn search_gate_and_override() {
    assert_eq!(qw(&["search", "--order", "9", "--limit", "1"]).0, 2);
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let (code, out, _) = qw(&["search", "--order", "5", "--limit", "2", "--out", d]);
    assert_eq!(code, 0);
    assert!(out.starts_with("order 5: 2 models (truncated)"));
    assert_eq!(std::fs::read_dir(d).unwrap().count(), 2);
    let status = Command::new(env!("CARGO_BIN_EXE_qw"))
        .args(["search", "--order", "2"])
        .env("QW_GATE_OVERRIDE", "1")
        .output()
        .unwrap();
    assert!(status.status.success());
}
