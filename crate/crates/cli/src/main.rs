use std::io::Write;
use std::process::ExitCode;
use std::str::FromStr;

use bepoly::catalog::lookup;
use bepoly::series::{kernel_parameter_samples, verify_kernel, DEFAULT_KERNEL_ORDER};
use bepoly::special::{self, DEFAULT_ZETA_TERMS};
use bepoly::verify::{self, SuiteReport, VerificationReport};
use bepoly::{GaussRational, KernelId};
use clap::{Parser, Subcommand};

/// Like `println!`, but a closed stdout (e.g. piped into `head`) ends the process quietly.
macro_rules! out {
    ($($arg:tt)*) => {
        if writeln!(std::io::stdout(), $($arg)*).is_err() {
            std::process::exit(0);
        }
    };
}

const OK: u8 = 0;
const FAILED: u8 = 1;
const USAGE: u8 = 2;

/// Exact Bernoulli and Euler polynomials and identity checks.
#[derive(Parser)]
#[command(name = "bepoly", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Bernoulli number B_N.
    Bn { n: u32 },
    /// Print the Euler number E_N.
    En { n: u32 },
    /// Print B_N(z), or its value at a point.
    Bpoly {
        n: u32,
        #[arg(long, value_parser = parse_point)]
        at: Option<GaussRational>,
    },
    /// Print E_N(z), or its value at a point.
    Epoly {
        n: u32,
        #[arg(long, value_parser = parse_point)]
        at: Option<GaussRational>,
    },
    /// Verify a catalog identity, or `all` of them.
    Verify {
        id: String,
        #[arg(long)]
        n_max: u32,
        #[arg(long)]
        json: bool,
        /// Also report audit entries; they never change the exit code.
        #[arg(long)]
        include_audit: bool,
    },
    /// Verify an identity written in the expression language.
    Check {
        identity: String,
        /// Inclusive range, e.g. `0..12`.
        #[arg(long = "n", value_parser = parse_range)]
        range: (i64, i64),
        /// Only test n with n = r (mod m), given as `r,m`.
        #[arg(long = "mod", value_parser = parse_residue)]
        residue: Option<(i64, i64)>,
        /// Declare a sampled parameter; may be repeated.
        #[arg(long = "param")]
        params: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Compare both sides of every generating-function kernel.
    Kernels {
        #[arg(long, default_value_t = DEFAULT_KERNEL_ORDER)]
        order: usize,
    },
    /// Floating-point check of B_2n against the zeta formula.
    ZetaCheck {
        #[arg(long)]
        n_max: u32,
        #[arg(long, default_value_t = DEFAULT_ZETA_TERMS)]
        terms: u64,
    },
}

fn parse_point(s: &str) -> Result<GaussRational, String> {
    GaussRational::from_str(s).map_err(|e| e.to_string())
}

fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s.split_once("..").ok_or("expected <from>..<to>")?;
    let a = a.trim().parse().map_err(|_| format!("bad lower bound `{a}`"))?;
    let b = b.trim().parse().map_err(|_| format!("bad upper bound `{b}`"))?;
    Ok((a, b))
}

fn parse_residue(s: &str) -> Result<(i64, i64), String> {
    let (r, m) = s.split_once(',').ok_or("expected <r>,<m>")?;
    let r = r.trim().parse().map_err(|_| format!("bad residue `{r}`"))?;
    let m: i64 = m.trim().parse().map_err(|_| format!("bad modulus `{m}`"))?;
    if m <= 0 {
        return Err(format!("modulus must be positive, got {m}"));
    }
    Ok((r, m))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            USAGE
        }
    };
    ExitCode::from(code)
}

fn run(command: Command) -> Result<u8, String> {
    match command {
        Command::Bn { n } => out!("{}", special::bernoulli_number(n)),
        Command::En { n } => out!("{}", special::euler_number(n).map_err(|e| e.to_string())?),
        Command::Bpoly { n, at } => print_poly(special::bernoulli_poly(n), at),
        Command::Epoly { n, at } => print_poly(special::euler_poly(n), at),
        Command::Verify { id, n_max, json, include_audit } => {
            return verify_cmd(&id, i64::from(n_max), json, include_audit)
        }
        Command::Check { identity, range, residue, params, json } => {
            let params: Vec<&str> = params.iter().map(String::as_str).collect();
            let report = verify::check_identity_with(&identity, &params, range.0, range.1, residue)
                .map_err(|e| e.to_string())?;
            emit_report(&report, json)?;
            return Ok(if report.passed() { OK } else { FAILED });
        }
        Command::Kernels { order } => return Ok(kernels(order)),
        Command::ZetaCheck { n_max, terms } => return zeta(n_max, terms),
    }
    Ok(OK)
}

fn print_poly(p: bepoly::Polynomial, at: Option<GaussRational>) {
    match at {
        Some(x) => out!("{}", p.eval(&x)),
        None => out!("{p}"),
    }
}

fn verify_cmd(id: &str, n_max: i64, json: bool, include_audit: bool) -> Result<u8, String> {
    if id == "all" {
        let suite = verify::verify_all(n_max, include_audit).map_err(|e| e.to_string())?;
        if json {
            out!("{}", serde_json::to_string_pretty(&suite).map_err(|e| e.to_string())?);
        } else {
            print_suite(&suite);
        }
        return Ok(if suite.passed() { OK } else { FAILED });
    }
    let entry = lookup(id).ok_or_else(|| format!("unknown identity `{id}`"))?;
    let report = verify::verify_range(entry, n_max).map_err(|e| e.to_string())?;
    emit_report(&report, json)?;
    // an audit entry asked for by name is reported, not judged
    Ok(if report.passed() || report.audit { OK } else { FAILED })
}

fn emit_report(r: &VerificationReport, json: bool) -> Result<(), String> {
    if json {
        out!("{}", serde_json::to_string_pretty(r).map_err(|e| e.to_string())?);
    } else {
        print_report(r);
    }
    Ok(())
}

fn span(ns: &[i64]) -> String {
    match (ns.first(), ns.last()) {
        (Some(a), Some(b)) => format!("n in {a}..={b}, {} values", ns.len()),
        _ => "no n tested".to_string(),
    }
}

fn print_report(r: &VerificationReport) {
    let tag = if r.audit { " [audit]" } else { "" };
    out!("{:<8} {}{tag}  {} ({})", r.id, r.status, span(&r.n_tested), r.paper_eq);
    if let Some(c) = &r.certificate {
        out!("         certificate: {c}");
    }
    for f in &r.failures {
        match &f.sample {
            Some(s) => out!("         n = {} at {s}:", f.n),
            None => out!("         n = {}:", f.n),
        }
        out!("           lhs = {}", f.lhs);
        out!("           rhs = {}", f.rhs);
    }
}

fn print_suite(s: &SuiteReport) {
    for r in &s.identities {
        print_report(r);
    }
    let failed: Vec<&str> = s.failures().map(|r| r.id.as_str()).collect();
    let checked = s.identities.iter().filter(|r| !r.audit).count();
    out!(
        "{}: {} of {checked} identities verified up to n_max = {} in {:.2?}",
        s.status,
        checked - failed.len(),
        s.n_max,
        s.runtime
    );
    if !failed.is_empty() {
        out!("failed: {}", failed.join(", "));
    }
}

fn kernels(order: usize) -> u8 {
    let mut code = OK;
    for id in KernelId::ALL {
        let samples: Vec<Option<GaussRational>> =
            if id.needs_parameter() { kernel_parameter_samples().into_iter().map(Some).collect() } else { vec![None] };
        for a in samples {
            let label = match &a {
                Some(a) => format!("{id} a = {a}"),
                None => id.to_string(),
            };
            match verify_kernel(id, order, a.as_ref()) {
                Ok(true) => out!("{label:<18} pass  order {order}  {}", id.description()),
                Ok(false) => {
                    code = FAILED;
                    out!("{label:<18} fail  order {order}  {}", id.description());
                }
                Err(e) => {
                    code = FAILED;
                    out!("{label:<18} error {e}");
                }
            }
        }
    }
    code
}

fn zeta(n_max: u32, terms: u64) -> Result<u8, String> {
    out!("{:>3} {:>24} {:>24} {:>12} {:>14}", "n", "B_2n exact", "B_2n from zeta", "rel. error", "without tail");
    for n in 1..=n_max {
        let r = special::zeta_sanity(n, terms).map_err(|e| e.to_string())?;
        out!(
            "{:>3} {:>24.16e} {:>24.16e} {:>12.3e} {:>14.3e}",
            r.n, r.bernoulli_exact, r.bernoulli_from_zeta, r.relative_error, r.relative_error_uncorrected
        );
    }
    out!("partial sums of {terms} terms, tail estimated by Euler-Maclaurin");
    Ok(OK)
}
