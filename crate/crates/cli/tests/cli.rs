//! End-to-end tests of the `weylrep` binary: exit codes, report contents,
//! and byte-identical determinism across repeated invocations.

use std::path::Path;
use std::process::{Command, Output};

fn weylrep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weylrep")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

/// Path to a file at the workspace root (the tests run inside the package).
fn repo_path(rel: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..").join(rel).to_string_lossy().into_owned()
}

#[test]
fn fraction_reports_exact_value() {
    let out = weylrep(&["fraction", "--d", "10"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("275/504 ~ 0.5456349206"), "got: {text}");
}

#[test]
fn census_lists_contributions() {
    let out = weylrep(&["census", "--d", "7", "--predicate", "lonely"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("{3,2,2}: 210"), "got: {text}");
    assert!(text.contains("3703 of 5040"), "got: {text}");
}

#[test]
fn hamilton_weyl_subgroups() {
    let out = weylrep(&["algebra", "--spec", &repo_path("specs/hamilton.spec"), "weyl"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("{phi(sigma^0), phi(sigma^1)} (order 2)"), "got: {text}");
    assert!(text.contains("norm-one subgroup"), "got: {text}");
}

#[test]
fn cubic_report_excludes_d_cycle_for_norm_one() {
    let out = weylrep(&["algebra", "--spec", &repo_path("specs/cubic7.spec"), "report"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("{3}: excluded by [reducible-min-poly, root-of-unity]"), "got: {text}");
    assert!(text.contains("{1,1,1}: representable via the identity coset"), "got: {text}");
}

#[test]
fn hilbert_symbol_with_and_without_place() {
    let out = weylrep(&["hilbert", "--a", "-1", "--b", "-1", "--place", "2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("at 2: -1"));

    let out = weylrep(&["hilbert", "--a", "-1", "--b", "-1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("at infinity: -1"), "got: {text}");
    assert!(text.contains("product over all places: 1"), "got: {text}");
}

#[test]
fn norm_test_finds_witness() {
    let out = weylrep(&[
        "norm",
        "--field",
        &repo_path("specs/hamilton.spec"),
        "--c",
        "5",
        "--height",
        "4",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("yes:"), "got: {}", stdout(&out));
}

#[test]
fn verify_fast_suite_passes() {
    let out = weylrep(&["verify", "--suite", "charpoly", "--seed", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("[PASS]"), "got: {text}");
    assert!(!text.contains("[FAIL]"), "got: {text}");
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let args = ["algebra", "--spec", &repo_path("specs/cubic7.spec"), "report"];
    let first = weylrep(&args);
    let second = weylrep(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);

    let args = ["verify", "--suite", "charpoly", "--seed", "7"];
    let first = weylrep(&args);
    let second = weylrep(&args);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn usage_errors_exit_one() {
    // Unknown subcommand.
    assert_eq!(weylrep(&["frobnicate"]).status.code(), Some(1));
    // Unknown predicate name.
    assert_eq!(weylrep(&["census", "--d", "5", "--predicate", "huge"]).status.code(), Some(1));
    // Unknown verification suite.
    assert_eq!(weylrep(&["verify", "--suite", "nonsense"]).status.code(), Some(1));
    // Missing spec file.
    assert_eq!(
        weylrep(&["algebra", "--spec", "no-such-file.spec", "info"]).status.code(),
        Some(1)
    );
    // Malformed rational.
    assert_eq!(weylrep(&["hilbert", "--a", "1.5", "--b", "2"]).status.code(), Some(1));
    // Degree out of range for the census.
    assert_eq!(weylrep(&["census", "--d", "0", "--predicate", "big"]).status.code(), Some(1));
}

#[test]
fn help_exits_zero() {
    assert_eq!(weylrep(&["--help"]).status.code(), Some(0));
    assert_eq!(weylrep(&["algebra", "--help"]).status.code(), Some(0));
}
