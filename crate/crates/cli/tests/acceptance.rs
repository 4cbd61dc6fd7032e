//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Run with `cargo test -p bepoly-cli --test acceptance`.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use bepoly::arith::{factorial, rat_make};
use bepoly::catalog::{catalog, lookup, Domain, Group};
use bepoly::dsl::{parse_expr, parse_identity, parse_identity_with};
use bepoly::series::{bernoulli_gf, euler_gf, kernel_parameter_samples, verify_kernel, DEFAULT_KERNEL_ORDER};
use bepoly::special::{self, zeta_sanity};
use bepoly::verify::{check_identity_with, parameter_samples, verify, verify_range, Status};
use bepoly::{GaussRational, Int, KernelId, Polynomial};
use serde_json::Value;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn bepoly(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_bepoly")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned())
}

fn full_sweep() -> Outcome {
    let start = Instant::now();
    let (code, stdout) = bepoly(&["verify", "all", "--n-max", "32", "--json"]);
    let elapsed = start.elapsed();
    ensure(code == 0, || format!("exit code {code}"))?;
    let doc: Value = serde_json::from_str(&stdout).map_err(|e| e.to_string())?;
    let ids = doc["identities"].as_array().ok_or("no identities")?;
    let failed: Vec<&str> = ids.iter().filter(|r| r["status"] != "pass").filter_map(|r| r["id"].as_str()).collect();
    ensure(failed.is_empty(), || format!("failures: {failed:?}"))?;
    ensure(ids.len() == catalog().len() - 1, || format!("{} identities reported", ids.len()))?;
    let t34 = ids.iter().find(|r| r["id"] == "T3.4d").ok_or("T3.4d missing")?;
    let top = t34["n_tested"].as_array().and_then(|a| a.last()).and_then(Value::as_i64).unwrap_or(0);
    ensure(4 * top + 3 <= 67, || format!("T3.4d reached n = {top}"))?;
    let n46 = ids.iter().find(|r| r["id"] == "N4.6").ok_or("N4.6 missing")?;
    let parity_ok = n46["n_tested"].as_array().is_some_and(|a| a.iter().all(|n| n.as_i64().unwrap_or(0) % 2 == 1));
    ensure(parity_ok, || "N4.6 tested an even n".into())?;
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:.1?}"))?;
    Ok(format!("{} identities, zero failures, {elapsed:.1?}", ids.len()))
}

fn triple_oracle() -> Outcome {
    let bgf = bernoulli_gf(24);
    let egf = euler_gf(24);
    for n in 0..=24u32 {
        let fact = GaussRational::from_int(factorial(n));
        let b = special::bernoulli_poly(n);
        ensure(b == special::bernoulli_poly_oracle(n), || format!("B_{n} double sum"))?;
        ensure(b == bgf.coeff(n as usize).scale(&fact), || format!("B_{n} series"))?;
        let e = special::euler_poly(n);
        ensure(e == special::euler_poly_oracle(n), || format!("E_{n} difference of B"))?;
        ensure(e == egf.coeff(n as usize).scale(&fact), || format!("E_{n} series"))?;
    }
    for n in 1..=12u32 {
        let direct = special::euler_number(2 * n).map_err(|e| e.to_string())?;
        let quarter = special::euler_number_via_quarter(n).map_err(|e| e.to_string())?;
        ensure(quarter == bepoly::BigRational::from_integer(direct), || format!("E_{}", 2 * n))?;
    }
    Ok("B and E for n <= 24 by three routes; E_2n via B_2n+1(1/4) for n <= 12".into())
}

fn ground_truth() -> Outcome {
    let q = |n: i64, d: i64| rat_make(n, d).unwrap();
    let p = |cs: &[(i64, i64)]| {
        Polynomial::from_coeffs(cs.iter().map(|&(n, d)| GaussRational::ratio(n, d).unwrap()).collect())
    };
    let b = [q(1, 1), q(-1, 2), q(1, 6), q(0, 1), q(-1, 30)];
    let e = [1, 0, -1, 0, 5];
    for n in 0..5u32 {
        ensure(special::bernoulli_number(n) == b[n as usize], || format!("B_{n}"))?;
        ensure(special::euler_number(n).ok() == Some(Int::from(e[n as usize])), || format!("E_{n}"))?;
    }
    let polys = [
        (special::bernoulli_poly(0), p(&[(1, 1)])),
        (special::bernoulli_poly(1), p(&[(-1, 2), (1, 1)])),
        (special::bernoulli_poly(2), p(&[(1, 6), (-1, 1), (1, 1)])),
        (special::bernoulli_poly(3), p(&[(0, 1), (1, 2), (-3, 2), (1, 1)])),
        (special::euler_poly(0), p(&[(1, 1)])),
        (special::euler_poly(1), p(&[(-1, 2), (1, 1)])),
        (special::euler_poly(2), p(&[(0, 1), (-1, 1), (1, 1)])),
        (special::euler_poly(3), p(&[(1, 4), (0, 1), (-3, 2), (1, 1)])),
    ];
    for (i, (got, want)) in polys.iter().enumerate() {
        ensure(got == want, || format!("polynomial #{i}: {got}"))?;
    }
    Ok("B_0..B_4, E_0..E_4 and eight polynomials".into())
}

fn scalar_groups() -> Outcome {
    let mut points = 0;
    for e in catalog().iter().filter(|e| matches!(e.group, Group::KnownValue | Group::Number)) {
        let top = if e.id == "N4.6" { 29 } else { 20 };
        for n in (0..=top).filter(|&n| e.domain.contains(n)) {
            let v = verify(e, n).map_err(|err| err.to_string())?;
            ensure(v.passed(), || format!("{} at n = {n}", e.id))?;
            points += 1;
        }
    }
    Ok(format!("KV and NUM groups, {points} (identity, n) points, N4.6 odd n <= 29"))
}

fn kernels() -> Outcome {
    let mut runs = 0;
    for id in KernelId::ALL {
        let samples =
            if id.needs_parameter() { kernel_parameter_samples().into_iter().map(Some).collect() } else { vec![None] };
        for a in samples {
            let ok = verify_kernel(id, DEFAULT_KERNEL_ORDER, a.as_ref()).map_err(|e| e.to_string())?;
            ensure(ok, || format!("{id} with a = {a:?}"))?;
            runs += 1;
        }
    }
    Ok(format!("{runs} kernel checks at order {DEFAULT_KERNEL_ORDER}"))
}

fn parametric() -> Outcome {
    for id in ["T2.5a", "T2.5b"] {
        let e = lookup(id).ok_or("missing")?;
        let report = verify_range(e, 20).map_err(|err| err.to_string())?;
        ensure(report.passed(), || format!("{id} failed at {:?}", report.failed_ns()))?;
        ensure(report.n_tested == (0..=20).collect::<Vec<_>>(), || format!("{id} range"))?;
        ensure(report.certificate.as_deref().is_some_and(|c| c.contains("degree")), || format!("{id} certificate"))?;
        for n in [0, 7, 20] {
            let samples = parameter_samples(n);
            let mut distinct = samples.clone();
            distinct.dedup();
            let nonzero = samples.iter().all(|s| *s != GaussRational::from(0));
            ensure(samples.len() as i64 == n + 2 && distinct.len() == samples.len() && nonzero, || {
                format!("samples at n = {n}")
            })?;
            ensure(verify(e, n).map(|v| v.samples).ok() == Some(samples.len()), || format!("{id} sample count"))?;
        }
    }
    Ok("T2.5a and T2.5b at n+2 samples of a for n <= 20, certificate attached".into())
}

fn zeta() -> Outcome {
    let mut worst: f64 = 0.0;
    for n in 1..=6 {
        let r = zeta_sanity(n, 10_000).map_err(|e| e.to_string())?;
        ensure(r.relative_error < 1e-6, || format!("n = {n}: {:e}", r.relative_error))?;
        worst = worst.max(r.relative_error);
    }
    Ok(format!("n = 1..6 with 10^4 terms, worst relative error {worst:.1e}"))
}

fn abs1_audit() -> Outcome {
    let n44 = verify_range(lookup("N4.4").ok_or("missing")?, 12).map_err(|e| e.to_string())?;
    ensure(n44.passed() && n44.n_tested == (1..=12).collect::<Vec<_>>(), || "N4.4".into())?;
    let abs = verify_range(lookup("ABS.1").ok_or("missing")?, 12).map_err(|e| e.to_string())?;
    ensure(abs.audit && abs.n_tested == (1..=12).collect::<Vec<_>>(), || "ABS.1 not evaluated".into())?;
    let per_n: Vec<String> = abs
        .n_tested
        .iter()
        .map(|&n| format!("{n}:{}", if abs.status_at(n) == Some(Status::Pass) { "pass" } else { "fail" }))
        .collect();
    Ok(format!("N4.4 exact for n <= 12; ABS.1 observed {}", per_n.join(" ")))
}

const MALFORMED: &str = include_str!("../../core/tests/data/malformed.txt");

fn dsl_conformance() -> Outcome {
    let mut checked = 0;
    for e in catalog() {
        let params: Vec<&str> = e.param.into_iter().collect();
        let parsed = parse_identity_with(e.canonical, &params).map_err(|err| format!("{}: {err}", e.id))?;
        let again = parse_identity_with(&parsed.to_string(), &params).map_err(|err| format!("{}: {err}", e.id))?;
        ensure(again == parsed, || format!("{} round trip", e.id))?;
        let residue = match e.domain {
            Domain::Residue { modulus, residue, .. } => Some((residue, modulus)),
            Domain::From(_) => None,
        };
        let report = check_identity_with(e.canonical, &params, e.domain.start(), 12, residue)
            .map_err(|err| format!("{}: {err}", e.id))?;
        for &n in &report.n_tested {
            let catalog_pass = verify(e, n).map_err(|err| err.to_string())?.passed();
            ensure(catalog_pass == (report.status_at(n) == Some(Status::Pass)), || format!("{} at n = {n}", e.id))?;
            checked += 1;
        }
    }

    let mut rejected = 0;
    for line in MALFORMED.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty()) {
        let mut parts = line.splitn(3, '\t');
        let (kind, column, text) = (parts.next().unwrap(), parts.next().unwrap(), parts.next().unwrap());
        let err = if kind == "i" { parse_identity(text).err() } else { parse_expr(text).err() };
        let err = err.ok_or_else(|| format!("accepted `{text}`"))?;
        ensure(err.column.to_string() == column && err.offset <= text.len(), || format!("`{text}`: {err}"))?;
        rejected += 1;
    }
    ensure(rejected == 30, || format!("corpus has {rejected} cases"))?;

    let runs: [(&[&str], i32); 6] = [
        (&["verify", "T2.1a", "--n-max", "6"], 0),
        (&["verify", "ABS.1", "--n-max", "6"], 0),
        (&["check", "B(n,z) == E(n,z)", "--n", "0..2"], 1),
        (&["check", "B(n,z) == E(n,z", "--n", "0..2"], 2),
        (&["verify", "T9.9", "--n-max", "2"], 2),
        (&["bn"], 2),
    ];
    for (args, want) in runs {
        let (code, _) = bepoly(args);
        ensure(code == want, || format!("{args:?} exited {code}, expected {want}"))?;
    }
    Ok(format!(
        "{} canonical strings round-trip, {checked} verdicts match, {rejected} malformed inputs rejected, exit codes 0/1/2",
        catalog().len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("full catalog sweep, n_max = 32, under 60 s", full_sweep),
        ("triple-oracle generator agreement", triple_oracle),
        ("listed numbers and polynomials", ground_truth),
        ("known values and number identities", scalar_groups),
        ("generating-function kernels", kernels),
        ("parametric certification in a", parametric),
        ("zeta sanity check", zeta),
        ("ABS.1 audit against N4.4", abs1_audit),
        ("expression language and CLI conformance", dsl_conformance),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {} PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
