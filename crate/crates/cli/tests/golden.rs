//! Scripted runs of the binary against recorded stdout and exit codes.
//!
//! Set `BLESS=1` to rewrite the recorded outputs.

use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bepoly")).args(args).output().expect("binary runs")
}

fn golden(name: &str, args: &[&str], code: i32) {
    let out = run(args);
    let stdout = String::from_utf8(out.stdout).expect("utf-8 stdout");
    assert_eq!(
        out.status.code(),
        Some(code),
        "{name}: exit status\nstdout:\n{stdout}\nstderr:\n{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", &format!("{name}.out")].iter().collect();
    if std::env::var_os("BLESS").is_some() {
        std::fs::write(&path, &stdout).unwrap();
        return;
    }
    let want = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(stdout, want, "{name}: stdout differs from {}", path.display());
}

fn usage_error(args: &[&str], needle: &str) {
    let out = run(args);
    assert_eq!(out.status.code(), Some(2), "{args:?}");
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains(needle), "{args:?}: stderr was {stderr}");
}

#[test]
fn numbers() {
    golden("bn_12", &["bn", "12"], 0);
    golden("en_6", &["en", "6"], 0);
}

#[test]
fn polynomials() {
    golden("bpoly_3", &["bpoly", "3"], 0);
    golden("epoly_4", &["epoly", "4"], 0);
    golden("bpoly_2_at_gaussian", &["bpoly", "2", "--at", "1/2+1/3*i"], 0);
    golden("epoly_3_at_half", &["epoly", "3", "--at", "1/2"], 0);
}

#[test]
fn check_passes_and_fails() {
    golden("check_b_vs_e", &["check", "B(n,z) == E(n,z)", "--n", "0..2"], 1);
    golden("check_odd_half", &["check", "B(n,1/2) == 0", "--n", "1..9", "--mod", "1,2", "--json"], 0);
    golden(
        "check_sampled_param",
        &[
            "check",
            "a^n*sum(k=0..n,binom(n,k)*B(n-k,z)/(k+1)) == 1/2*(E(n,a*z)+E(n,a*z+1))",
            "--n",
            "0..3",
            "--param",
            "a",
        ],
        0,
    );
    golden("check_empty_range", &["check", "B(n,z) == E(n,z)", "--n", "3..1", "--json"], 0);
}

#[test]
fn verify_single_entries() {
    golden("verify_t25a_json", &["verify", "T2.5a", "--n-max", "2", "--json"], 0);
    golden("verify_n46", &["verify", "N4.6", "--n-max", "15"], 0);
    // audit entries are reported but never fail the run
    golden("verify_abs1_json", &["verify", "ABS.1", "--n-max", "4", "--json"], 0);
}

#[test]
fn verify_all_json() {
    golden("verify_all_6", &["verify", "all", "--n-max", "6", "--json", "--include-audit"], 0);
}

#[test]
fn kernels() {
    golden("kernels_8", &["kernels", "--order", "8"], 0);
}

#[test]
fn zeta_check_runs() {
    let out = run(&["zeta-check", "--n-max", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<&str> = text.lines().filter(|l| l.trim_start().starts_with(char::is_numeric)).collect();
    assert_eq!(rows.len(), 6, "{text}");
    for row in rows {
        let err: f64 = row.split_whitespace().nth(3).unwrap().parse().unwrap();
        assert!(err < 1e-6, "{row}");
    }
}

#[test]
fn usage_errors_exit_with_two() {
    usage_error(&["check", "B(n,z) == E(n,z", "--n", "0..2"], "1:16");
    usage_error(&["check", "sum(k=0.., z) == 0", "--n", "0..2"], "1:8");
    usage_error(&["check", "B(n-1,z) == 0", "--n", "0..2"], "at n = 0");
    usage_error(&["check", "B(n,z) == B(n,z)", "--n", "0-2"], "expected <from>..<to>");
    usage_error(&["check", "B(n,z) == B(n,z)", "--n", "0..2", "--mod", "1,0"], "modulus");
    usage_error(&["verify", "T9.9", "--n-max", "3"], "unknown identity");
    usage_error(&["verify", "all"], "--n-max");
    usage_error(&["bpoly", "2", "--at", "x"], "invalid point");
    usage_error(&["bn", "-1"], "error");
    usage_error(&["frobnicate"], "unrecognized subcommand");
    usage_error(&["zeta-check", "--n-max", "2", "--terms", "0"], "error");
}
