use std::path::Path;
use std::process::{Command, Output};

fn homyd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homyd")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn export(dir: &Path, id: &str, extra: &[&str]) -> String {
    let mut args = vec!["catalog", "show", id];
    args.extend_from_slice(extra);
    let out = homyd(&args);
    assert_eq!(out.status.code(), Some(0));
    let path = dir.join(format!("{id}.txt"));
    std::fs::write(&path, &out.stdout).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn twisted_taft_checks_clean() {
    let dir = tempfile::tempdir().unwrap();
    let file = export(dir.path(), "taft-twisted", &["--param", "2"]);
    let out = homyd(&["check", &file]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("== 2 reports, 0 failed"));
}

#[test]
fn construct_then_antipode_reproduces_the_table() {
    let dir = tempfile::tempdir().unwrap();
    let file = export(dir.path(), "line-over-kz2", &[]);
    let built = dir.path().join("built.txt").to_string_lossy().into_owned();
    let out = homyd(&["construct", "biproduct", &file, "--emit", &built]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let out = homyd(&["antipode", &built]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for line in ["S(1⊗1) = 1⊗1", "S(1⊗a) = 1⊗a", "S(z⊗1) = z⊗a", "S(z⊗a) = -z⊗1"] {
        assert!(text.contains(line), "missing `{line}` in\n{text}");
    }
}

#[test]
fn refused_biproduct_exits_with_math_failure() {
    let dir = tempfile::tempdir().unwrap();
    let file = export(dir.path(), "taft-over-kz2-signed", &[]);
    let out = homyd(&["--witness", "construct", "biproduct", &file]);
    assert_eq!(out.status.code(), Some(2));
    let text = stdout(&out);
    assert!(text.contains("FAIL  R4"));
    assert!(text.contains("witness:"));
}

#[test]
fn braided_commands_pass_on_the_line_bundle() {
    let dir = tempfile::tempdir().unwrap();
    let file = export(dir.path(), "line-over-kz2", &["--field", "GF7", "--param", "3"]);
    for cmd in ["ybe-test", "braiding-test"] {
        let out = homyd(&[cmd, &file]);
        assert_eq!(out.status.code(), Some(0), "{cmd}: {}", stdout(&out));
    }
}

#[test]
fn quasitriangular_check_reports_both_sides() {
    let dir = tempfile::tempdir().unwrap();
    let file = export(dir.path(), "kz2-r-matrix", &[]);
    let out = homyd(&["quasitriangular-check", &file]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("equivalence: true ⇔ true (agree)"));
    let out = homyd(&["catalog", "check", "kz2-r-matrix", "--field", "GF2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn degenerate_form_fails_with_witnesses() {
    let out = homyd(&["--witness", "catalog", "check", "kz2-degenerate-form"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("witness:"));
}

#[test]
fn usage_and_input_errors_exit_one() {
    assert_eq!(homyd(&["check", "/nonexistent/file.txt"]).status.code(), Some(1));
    assert_eq!(homyd(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(homyd(&["catalog", "show", "no-such-entry"]).status.code(), Some(1));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "FORMAT 1\nFIELD GF 4\n").unwrap();
    let out = homyd(&["check", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn sequential_mode_prints_the_same_report() {
    let dir = tempfile::tempdir().unwrap();
    let file = export(dir.path(), "taft-biproduct", &[]);
    let a = homyd(&["check", &file]);
    let b = homyd(&["--sequential", "check", &file]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), Some(0));
}
