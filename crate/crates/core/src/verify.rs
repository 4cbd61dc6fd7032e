//! Exact verification of catalog entries and ad hoc identities.

use std::time::{Duration, Instant};

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::arith::GaussRational;
use crate::catalog::{catalog, lookup, Identity};
use crate::dsl::{eval_with, parse_identity_with, Bindings, EvalError, IdentityExpr, ParseError};
use crate::poly::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown identity `{0}`")]
    UnknownId(String),
    #[error("n = {n} is outside the domain of {id} ({domain})")]
    OutOfDomain { id: String, n: i64, domain: String },
    #[error("{id} needs a value for `{param}`")]
    MissingParameter { id: String, param: String },
    #[error("{id} does not take a parameter")]
    UnexpectedParameter { id: String },
    #[error("{id} is stated for nonzero `{param}` only")]
    ZeroParameter { id: String, param: String },
    #[error("residue filter modulus must be positive, got {0}")]
    BadModulus(i64),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("at n = {n}: {source}")]
    Eval { n: i64, source: EvalError },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Lhs,
    Rhs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    fn of(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

/// A disagreement, with both sides rendered exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub n: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sample: Option<String>,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome at a single `n`, over every parameter sample when there are any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub n: i64,
    pub samples: usize,
    pub failures: Vec<Failure>,
}

impl Verdict {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub id: String,
    pub paper_eq: String,
    pub n_tested: Vec<i64>,
    pub status: Status,
    pub failures: Vec<Failure>,
    pub range: String,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub audit: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<String>,
    #[serde(skip)]
    pub runtime: Duration,
}

impl VerificationReport {
    fn assemble(id: &str, paper_eq: &str, range: String, verdicts: Vec<Verdict>, runtime: Duration) -> Self {
        let n_tested = verdicts.iter().map(|v| v.n).collect();
        let failures: Vec<Failure> = verdicts.into_iter().flat_map(|v| v.failures).collect();
        VerificationReport {
            id: id.to_string(),
            paper_eq: paper_eq.to_string(),
            n_tested,
            status: Status::of(failures.is_empty()),
            failures,
            range,
            audit: false,
            certificate: None,
            runtime,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// `None` when `n` was not tested.
    pub fn status_at(&self, n: i64) -> Option<Status> {
        self.n_tested.contains(&n).then(|| Status::of(!self.failures.iter().any(|f| f.n == n)))
    }

    pub fn failed_ns(&self) -> Vec<i64> {
        let mut ns: Vec<i64> = self.failures.iter().map(|f| f.n).collect();
        ns.dedup();
        ns
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub n_max: i64,
    /// Verdict over the non-audit entries only.
    pub status: Status,
    pub identities: Vec<VerificationReport>,
    #[serde(skip)]
    pub runtime: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failures(&self) -> impl Iterator<Item = &VerificationReport> {
        self.identities.iter().filter(|r| !r.audit && !r.passed())
    }
}

/// Sample points for a parameter at index `n`: the integers `1..=n+1` and `1+i`.
pub fn parameter_samples(n: i64) -> Vec<GaussRational> {
    let mut out: Vec<GaussRational> = (1..=n.max(0) + 1).map(GaussRational::from).collect();
    out.push(GaussRational::from(1) + GaussRational::i());
    out
}

fn certificate(param: &str) -> String {
    format!(
        "both sides are polynomials of degree at most n in {param}; they agree at n+2 distinct \
         nonzero samples (1, ..., n+1 and 1+i), more points than such a polynomial needs, \
         so they agree for every {param}"
    )
}

fn bindings(e: &Identity, n: i64, sample: Option<&GaussRational>) -> Result<Bindings, VerifyError> {
    if !e.domain.contains(n) {
        return Err(VerifyError::OutOfDomain { id: e.id.into(), n, domain: e.domain.to_string() });
    }
    let b = Bindings::new(n);
    match (e.param, sample) {
        (None, None) => Ok(b),
        (None, Some(_)) => Err(VerifyError::UnexpectedParameter { id: e.id.into() }),
        (Some(p), None) => Err(VerifyError::MissingParameter { id: e.id.into(), param: p.into() }),
        (Some(p), Some(v)) if e.param_a() && v.is_zero() => {
            Err(VerifyError::ZeroParameter { id: e.id.into(), param: p.into() })
        }
        (Some(p), Some(v)) => Ok(b.with_param(p, v.clone())),
    }
}

fn eval_at(expr: &IdentityExpr, side: Side, b: &Bindings) -> Result<Polynomial, VerifyError> {
    let e = match side {
        Side::Lhs => &expr.lhs,
        Side::Rhs => &expr.rhs,
    };
    eval_with(e, b).map_err(|source| VerifyError::Eval { n: b.n, source })
}

/// Reduces one side of a catalog entry to a polynomial in `z`.
pub fn eval_side(e: &Identity, side: Side, n: i64, sample: Option<&GaussRational>) -> Result<Polynomial, VerifyError> {
    eval_at(&e.expr, side, &bindings(e, n, sample)?)
}

fn compare(expr: &IdentityExpr, b: &Bindings, sample: Option<&GaussRational>) -> Result<Option<Failure>, VerifyError> {
    let lhs = eval_at(expr, Side::Lhs, b)?;
    let rhs = eval_at(expr, Side::Rhs, b)?;
    Ok((lhs != rhs).then(|| Failure {
        n: b.n,
        sample: sample.map(|s| s.to_string()),
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    }))
}

/// Checks one `(n, sample)` point.
pub fn verify_at(e: &Identity, n: i64, sample: Option<&GaussRational>) -> Result<Verdict, VerifyError> {
    let b = bindings(e, n, sample)?;
    Ok(Verdict { n, samples: 1, failures: compare(&e.expr, &b, sample)?.into_iter().collect() })
}

/// Checks every parameter sample at `n`.
pub fn verify_parametric(e: &Identity, n: i64) -> Result<Verdict, VerifyError> {
    let samples = parameter_samples(n);
    let mut failures = Vec::new();
    for s in &samples {
        failures.extend(verify_at(e, n, Some(s))?.failures);
    }
    Ok(Verdict { n, samples: samples.len(), failures })
}

/// Checks `e` at `n`, sampling its parameter if it has one.
pub fn verify(e: &Identity, n: i64) -> Result<Verdict, VerifyError> {
    if e.param.is_some() {
        verify_parametric(e, n)
    } else {
        verify_at(e, n, None)
    }
}

fn range_text(e: &Identity, n_max: i64) -> String {
    format!("{}, n <= {}", e.domain, e.n_limit(n_max))
}

fn report_for(e: &Identity, n_max: i64, verdicts: Vec<Verdict>, runtime: Duration) -> VerificationReport {
    let mut r = VerificationReport::assemble(e.id, e.paper_eq, range_text(e, n_max), verdicts, runtime);
    r.audit = e.is_audit();
    r.certificate = e.param.map(certificate);
    r
}

/// Every admissible `n` up to the entry's limit for `n_max`.
pub fn verify_range(e: &Identity, n_max: i64) -> Result<VerificationReport, VerifyError> {
    let start = Instant::now();
    let verdicts = e.admissible(n_max).into_par_iter().map(|n| verify(e, n)).collect::<Result<Vec<_>, _>>()?;
    Ok(report_for(e, n_max, verdicts, start.elapsed()))
}

pub fn verify_id(id: &str, n_max: i64) -> Result<VerificationReport, VerifyError> {
    let e = lookup(id).ok_or_else(|| VerifyError::UnknownId(id.to_string()))?;
    verify_range(e, n_max)
}

/// Sweeps the whole catalog. Audit entries are reported when requested and
/// never affect the suite status.
pub fn verify_all(n_max: i64, include_audit: bool) -> Result<SuiteReport, VerifyError> {
    let start = Instant::now();
    let entries: Vec<&Identity> = catalog().iter().filter(|e| include_audit || !e.is_audit()).collect();
    let mut jobs: Vec<(usize, i64)> =
        entries.iter().enumerate().flat_map(|(i, e)| e.admissible(n_max).into_iter().map(move |n| (i, n))).collect();
    // large indices first so the long tail does not land on one thread
    jobs.sort_by_key(|&(i, n)| std::cmp::Reverse(n * i64::from(entries[i].index_scale)));
    let mut done = jobs
        .into_par_iter()
        .map(|(i, n)| {
            let t = Instant::now();
            verify(entries[i], n).map(|v| (i, v, t.elapsed()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    done.sort_by_key(|(i, v, _)| (*i, v.n));

    let mut per_entry: Vec<(Vec<Verdict>, Duration)> = entries.iter().map(|_| (Vec::new(), Duration::ZERO)).collect();
    for (i, v, t) in done {
        per_entry[i].0.push(v);
        per_entry[i].1 += t;
    }
    let identities: Vec<VerificationReport> =
        entries.iter().zip(per_entry).map(|(e, (verdicts, t))| report_for(e, n_max, verdicts, t)).collect();
    let ok = identities.iter().all(|r| r.audit || r.passed());
    Ok(SuiteReport { n_max, status: Status::of(ok), identities, runtime: start.elapsed() })
}

/// Verifies a DSL identity for `n_from..=n_to`, optionally only where `n = r (mod m)`.
pub fn check_identity(
    text: &str,
    n_from: i64,
    n_to: i64,
    residue: Option<(i64, i64)>,
) -> Result<VerificationReport, VerifyError> {
    check_identity_with(text, &[], n_from, n_to, residue)
}

/// As [`check_identity`], with sampled parameters. Every combination of
/// [`parameter_samples`] is tested, so cost grows as `(n+2)^params.len()`.
pub fn check_identity_with(
    text: &str,
    params: &[&str],
    n_from: i64,
    n_to: i64,
    residue: Option<(i64, i64)>,
) -> Result<VerificationReport, VerifyError> {
    let start = Instant::now();
    let expr = parse_identity_with(text, params)?;
    if let Some((_, m)) = residue {
        if m <= 0 {
            return Err(VerifyError::BadModulus(m));
        }
    }
    let ns: Vec<i64> =
        (n_from..=n_to).filter(|n| residue.is_none_or(|(r, m)| n.rem_euclid(m) == r.rem_euclid(m))).collect();
    let verdicts =
        ns.into_par_iter().map(|n| check_point(&expr, params, n)).collect::<Result<Vec<_>, VerifyError>>()?;
    let range = match residue {
        Some((r, m)) => format!("{n_from}..{n_to}, n = {r} mod {m}"),
        None => format!("{n_from}..{n_to}"),
    };
    let mut report = VerificationReport::assemble(&expr.to_string(), "ad hoc", range, verdicts, start.elapsed());
    if !params.is_empty() {
        report.certificate = Some(certificate(&params.join(", ")));
    }
    Ok(report)
}

fn check_point(expr: &IdentityExpr, params: &[&str], n: i64) -> Result<Verdict, VerifyError> {
    let samples = parameter_samples(n);
    let mut assignments: Vec<Vec<(&str, GaussRational)>> = vec![Vec::new()];
    for p in params {
        assignments = assignments
            .into_iter()
            .flat_map(|prefix| {
                samples.iter().map(move |s| {
                    let mut next = prefix.clone();
                    next.push((p, s.clone()));
                    next
                })
            })
            .collect();
    }
    let mut failures = Vec::new();
    for assignment in &assignments {
        let b = assignment.iter().fold(Bindings::new(n), |b, (p, v)| b.with_param(p, v.clone()));
        if let Some(mut f) = compare(expr, &b, None)? {
            if !assignment.is_empty() {
                let shown: Vec<String> = assignment.iter().map(|(p, v)| format!("{p} = {v}")).collect();
                f.sample = Some(shown.join(", "));
            }
            failures.push(f);
        }
    }
    Ok(Verdict { n, samples: assignments.len(), failures })
}
