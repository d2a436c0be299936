//! Golden-file tests for the `ddisc` binary.
//!
//! Each case runs the binary from the crate root and compares stdout with
//! `tests/golden/<name>.out` byte for byte. Set `DDISC_BLESS=1` to rewrite
//! the golden files after an intended change.

use std::path::PathBuf;
use std::process::{Command, Output};

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_ddisc"));
    cmd.current_dir(root()).args(args).env_remove("DDISC_MARGIN_CAP");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("failed to spawn ddisc")
}

fn golden(name: &str, args: &[&str], code: i32) {
    golden_env(name, args, &[], code)
}

fn golden_env(name: &str, args: &[&str], env: &[(&str, &str)], code: i32) {
    let out = run(args, env);
    assert_eq!(
        out.status.code(),
        Some(code),
        "{name}: stderr:\n{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let path = root().join("tests/golden").join(format!("{name}.out"));
    if std::env::var_os("DDISC_BLESS").is_some() {
        std::fs::write(&path, &out.stdout).unwrap();
        return;
    }
    let expected = std::fs::read(&path).unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
    assert_eq!(
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&expected),
        "stdout of {name} differs from {}",
        path.display()
    );
}

#[test]
fn build_lambda() {
    golden("build_lambda_221", &["build-lambda", "2", "2", "1"], 0);
}

#[test]
fn classify_lambda() {
    golden("classify_lambda_221", &["classify", "L(2,2,1)"], 0);
    golden("classify_lambda_221_pretty", &["--pretty", "classify", "L(2,2,1)"], 0);
}

#[test]
fn classify_kronecker_is_not_discrete() {
    golden("classify_kronecker", &["classify", "K2"], 0);
}

#[test]
fn classify_unknown_exits_2() {
    golden("classify_long_relation", &["classify", "tests/fixtures/long_relation.quiver"], 2);
}

#[test]
fn factors_of_a_sum() {
    golden("factors_sum", &["factors", "--n", "2", "L(2,2,1)+A3"], 0);
    golden("factors_sum_pretty", &["factors", "--n", "2", "--pretty", "L(2,2,1)+A3"], 0);
}

#[test]
fn series_from_file() {
    golden("series_renamed_lambda_221", &["series", "tests/fixtures/lambda_221.quiver"], 0);
    golden("series_sum_pretty", &["series", "--pretty", "L(1,2,1)+L(2,2,2)+A3"], 0);
}

#[test]
fn hom_tables() {
    golden("hom_x0_x0", &["hom", "L(2,2,0)", "--from", "X0", "--to", "X0", "--max-shift", "4"], 0);
    golden(
        "hom_y_x_pretty",
        &["--pretty", "hom", "tests/fixtures/lambda_221.quiver", "--from", "Y-1", "--to", "X0", "--max-shift", "5"],
        0,
    );
}

#[test]
fn the_arity_flag_changes_nothing() {
    let base = run(&["factors", "--n", "1", "L(3,3,0)+L(1,2,1)"], &[]);
    assert!(base.status.success());
    for n in ["2", "3", "4"] {
        assert_eq!(run(&["factors", "--n", n, "L(3,3,0)+L(1,2,1)"], &[]).stdout, base.stdout);
    }
}

#[test]
fn reports_are_byte_identical() {
    for args in [
        &["classify", "L(1,3,2)+D4"][..],
        &["series", "L(2,3,1)"][..],
        &["hom", "L(1,1,1)", "--from", "Y-1", "--to", "X0", "--max-shift", "3"][..],
    ] {
        assert_eq!(run(args, &[]).stdout, run(args, &[]).stdout);
    }
}

#[test]
fn both_fields_agree() {
    let args = ["hom", "L(3,3,1)", "--from", "X1", "--to", "Y-1", "--max-shift", "6"];
    let q: serde_json::Value = serde_json::from_slice(&run(&args, &[]).stdout).unwrap();
    let mut gf = args.to_vec();
    gf.extend(["--field", "gf32003"]);
    let p: serde_json::Value = serde_json::from_slice(&run(&gf, &[]).stdout).unwrap();
    assert_eq!(q["result"]["dims"], p["result"]["dims"]);
}

#[test]
fn file_input_matches_inline_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("l.quiver");
    std::fs::write(&path, run(&["build-lambda", "1", "2", "1"], &[]).stdout).unwrap();
    let from_file: serde_json::Value =
        serde_json::from_slice(&run(&["classify", path.to_str().unwrap()], &[]).stdout).unwrap();
    let inline: serde_json::Value = serde_json::from_slice(&run(&["classify", "L(1,2,1)"], &[]).stdout).unwrap();
    assert_eq!(from_file["result"], inline["result"]);
    assert_ne!(from_file["input"]["sha256"], inline["input"]["sha256"]);
}

#[test]
fn exit_codes() {
    let code = |args: &[&str], env: &[(&str, &str)]| run(args, env).status.code();
    assert_eq!(code(&["classify", "no-such-algebra"], &[]), Some(1));
    assert_eq!(code(&["build-lambda", "3", "2", "0"], &[]), Some(1));
    assert_eq!(code(&["factors", "--n", "0", "A2"], &[]), Some(1));
    assert_eq!(code(&["factors", "K2"], &[]), Some(1));
    assert_eq!(code(&["series", "K2"], &[]), Some(1));
    assert_eq!(code(&["hom", "A3", "--from", "X0", "--to", "X0", "--max-shift", "1"], &[]), Some(1));
    assert_eq!(code(&["hom", "L(2,2,0)", "--from", "X5", "--to", "X0", "--max-shift", "1"], &[]), Some(1));
    assert_eq!(code(&["factors", "tests/fixtures/long_relation.quiver"], &[]), Some(2));
    assert_eq!(code(&["series", "tests/fixtures/long_relation.quiver"], &[]), Some(2));
    let capped = ["hom", "L(2,2,0)", "--from", "X0", "--to", "X0", "--max-shift", "4"];
    assert_eq!(code(&capped, &[("DDISC_MARGIN_CAP", "0")]), Some(3));
    assert_eq!(code(&capped, &[("DDISC_MARGIN_CAP", "lots")]), Some(1));
}

#[test]
fn diagnostics_go_to_stderr() {
    let out = run(&["series", "K2"], &[]);
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error: "));
}
