//! Bernoulli and Euler numbers and polynomials.
//!
//! Each family has two construction paths that share no intermediate
//! values, so they can be checked against each other:
//!
//! * Bernoulli: `sum_k C(n,k) B_k z^(n-k)` from the number recurrence, and
//!   the double sum `sum_k 1/(k+1) sum_j (-1)^j C(k,j) (z+j)^n`.
//! * Euler: the double sum `sum_k 2^-k sum_j (-1)^j C(k,j) (z+j)^n`, and
//!   `2^(n+1)/(n+1) * (B_{n+1}((z+1)/2) - B_{n+1}(z/2))`.
//!
//! Generated values are memoised in a [`NumberCache`]. Entries are written
//! once and are always reproducible by recomputation.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::arith::{binomial, factorial, rat_int, rat_make, GaussRational};
use crate::poly::Polynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Bernoulli,
    Euler,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecialError {
    #[error("2^{n} * E_{n}(1/2) = {value} is not an integer")]
    NonIntegralEuler { n: u32, value: String },
    #[error("index {0} is outside the domain of this generator")]
    Domain(u32),
}

type ComposedKey = (Family, u32, GaussRational, GaussRational);

/// Memo table for numbers, polynomials and affine substitutions into them.
#[derive(Default)]
pub struct NumberCache {
    bernoulli: RwLock<Vec<BigRational>>,
    euler: RwLock<HashMap<u32, BigInt>>,
    polys: RwLock<HashMap<(Family, u32), Arc<Polynomial>>>,
    composed: RwLock<HashMap<ComposedKey, Arc<Polynomial>>>,
}

impl NumberCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn global() -> &'static NumberCache {
        static GLOBAL: OnceLock<NumberCache> = OnceLock::new();
        GLOBAL.get_or_init(NumberCache::new)
    }

    /// `B_n` via `sum_{k=0}^{m} C(m+1, k) B_k = 0`.
    pub fn bernoulli_number(&self, n: u32) -> BigRational {
        let idx = n as usize;
        if let Some(b) = self.bernoulli.read().expect("cache poisoned").get(idx) {
            return b.clone();
        }
        let mut table = self.bernoulli.write().expect("cache poisoned");
        while table.len() <= idx {
            let m = table.len() as i64;
            if m == 0 {
                table.push(BigRational::one());
                continue;
            }
            if m >= 3 && m % 2 == 1 {
                table.push(BigRational::zero());
                continue;
            }
            let mut acc = BigRational::zero();
            for (k, bk) in table.iter().enumerate() {
                if !bk.is_zero() {
                    acc += bk * rat_int(binomial(m + 1, k as i64));
                }
            }
            table.push(-acc / rat_int(m + 1));
        }
        table[idx].clone()
    }

    pub fn euler_number(&self, n: u32) -> Result<BigInt, SpecialError> {
        if let Some(e) = self.euler.read().expect("cache poisoned").get(&n) {
            return Ok(e.clone());
        }
        let half = GaussRational::ratio(1, 2).expect("nonzero denominator");
        let value = self.poly(Family::Euler, n).eval(&half);
        let scaled = value.re() * rat_int(num_traits::pow(BigInt::from(2), n as usize));
        let exact = if value.is_real() && scaled.is_integer() {
            scaled.to_integer()
        } else {
            return Err(SpecialError::NonIntegralEuler { n, value: scaled.to_string() });
        };
        self.euler.write().expect("cache poisoned").entry(n).or_insert(exact.clone());
        Ok(exact)
    }

    pub fn poly(&self, family: Family, n: u32) -> Arc<Polynomial> {
        if let Some(p) = self.polys.read().expect("cache poisoned").get(&(family, n)) {
            return Arc::clone(p);
        }
        let built = Arc::new(match family {
            Family::Bernoulli => self.build_bernoulli_poly(n),
            Family::Euler => build_euler_poly(n),
        });
        let mut polys = self.polys.write().expect("cache poisoned");
        Arc::clone(polys.entry((family, n)).or_insert(built))
    }

    /// `P_n(a*z + b)` for the chosen family.
    pub fn composed(&self, family: Family, n: u32, a: &GaussRational, b: &GaussRational) -> Arc<Polynomial> {
        if a.is_one() && b.is_zero() {
            return self.poly(family, n);
        }
        let key = (family, n, a.clone(), b.clone());
        if let Some(p) = self.composed.read().expect("cache poisoned").get(&key) {
            return Arc::clone(p);
        }
        let built = Arc::new(self.poly(family, n).compose_affine(a, b));
        let mut composed = self.composed.write().expect("cache poisoned");
        Arc::clone(composed.entry(key).or_insert(built))
    }

    fn build_bernoulli_poly(&self, n: u32) -> Polynomial {
        let n_i = n as i64;
        let mut coeffs = vec![GaussRational::zero(); n as usize + 1];
        for k in 0..=n {
            let b = self.bernoulli_number(k);
            if b.is_zero() {
                continue;
            }
            coeffs[(n - k) as usize] = GaussRational::real(b * rat_int(binomial(n_i, k as i64)));
        }
        Polynomial::from_coeffs(coeffs)
    }
}

/// Coefficient of `z^m` in `sum_k 2^-k sum_j (-1)^j C(k,j) (z+j)^n` is
/// `C(n,m) sum_k 2^-k D(k, n-m)` with `D(k,p) = sum_j (-1)^j C(k,j) j^p`,
/// an integer that vanishes for `k > p`.
fn build_euler_poly(n: u32) -> Polynomial {
    let n_us = n as usize;
    // powers[j][p] = j^p
    let powers: Vec<Vec<BigInt>> = (0..=n_us)
        .map(|j| {
            let mut row = Vec::with_capacity(n_us + 1);
            let mut acc = BigInt::one();
            for _ in 0..=n_us {
                row.push(acc.clone());
                acc *= j;
            }
            row
        })
        .collect();
    let mut coeffs = Vec::with_capacity(n_us + 1);
    for m in 0..=n_us {
        let p = n_us - m;
        let mut sum = BigRational::zero();
        for k in 0..=p {
            let mut diff = BigInt::zero();
            for (j, row) in powers.iter().enumerate().take(k + 1) {
                let term = binomial(k as i64, j as i64) * &row[p];
                if j % 2 == 0 {
                    diff += term;
                } else {
                    diff -= term;
                }
            }
            if !diff.is_zero() {
                sum += BigRational::new(diff, num_traits::pow(BigInt::from(2), k));
            }
        }
        coeffs.push(GaussRational::real(sum * rat_int(binomial(n as i64, m as i64))));
    }
    Polynomial::from_coeffs(coeffs)
}

pub fn bernoulli_number(n: u32) -> BigRational {
    NumberCache::global().bernoulli_number(n)
}

pub fn bernoulli_poly(n: u32) -> Polynomial {
    (*NumberCache::global().poly(Family::Bernoulli, n)).clone()
}

pub fn euler_poly(n: u32) -> Polynomial {
    (*NumberCache::global().poly(Family::Euler, n)).clone()
}

/// `E_n = 2^n E_n(1/2)`, checked to be an integer.
pub fn euler_number(n: u32) -> Result<BigInt, SpecialError> {
    NumberCache::global().euler_number(n)
}

/// Bernoulli polynomial from the double sum; uses no Bernoulli numbers.
pub fn bernoulli_poly_oracle(n: u32) -> Polynomial {
    let mut total = Polynomial::zero();
    for k in 0..=n {
        let mut inner = Polynomial::zero();
        for j in 0..=k {
            let shifted = Polynomial::affine(GaussRational::one(), GaussRational::from_int(j)).pow(n);
            let weight = GaussRational::from_int(binomial(k as i64, j as i64));
            let term = shifted.scale(&weight);
            inner = if j % 2 == 0 { inner + term } else { inner - term };
        }
        let w = GaussRational::real(rat_make(1, k as i64 + 1).expect("k + 1 > 0"));
        total = total + inner.scale(&w);
    }
    total
}

/// Euler polynomial rebuilt from Bernoulli polynomials alone.
pub fn euler_poly_oracle(n: u32) -> Polynomial {
    let half = GaussRational::ratio(1, 2).expect("nonzero denominator");
    let b = bernoulli_poly(n + 1);
    let upper = b.compose_affine(&half, &half);
    let lower = b.compose_affine(&half, &GaussRational::zero());
    let factor = rat_make(num_traits::pow(BigInt::from(2), n as usize + 1), n as i64 + 1).expect("n + 1 > 0");
    (&upper - &lower).scale(&GaussRational::real(factor))
}

/// `E_{2n} = -4^(2n+1)/(2n+1) * B_{2n+1}(1/4)` for `n >= 1`.
pub fn euler_number_via_quarter(n: u32) -> Result<BigRational, SpecialError> {
    if n == 0 {
        return Err(SpecialError::Domain(n));
    }
    let quarter = GaussRational::ratio(1, 4).expect("nonzero denominator");
    let value = bernoulli_poly(2 * n + 1).eval(&quarter);
    let scale = rat_make(num_traits::pow(BigInt::from(4), 2 * n as usize + 1), 2 * n as i64 + 1).expect("2n + 1 > 0");
    Ok(-(value.re() * scale))
}

/// Floating-point comparison of `B_{2n}` with
/// `(-1)^(n-1) (2n)! / (2^(2n-1) pi^(2n)) * zeta(2n)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ZetaReport {
    pub n: u32,
    pub terms: u64,
    /// Plain partial sum `sum_{k=1}^{terms} k^(-2n)`.
    pub zeta_partial: f64,
    /// Partial sum plus the Euler-Maclaurin estimate of the tail.
    pub zeta_estimate: f64,
    pub bernoulli_exact: f64,
    pub bernoulli_from_zeta: f64,
    pub relative_error: f64,
    /// Relative error when the tail estimate is left out.
    pub relative_error_uncorrected: f64,
}

pub const DEFAULT_ZETA_TERMS: u64 = 10_000;

pub fn zeta_sanity(n: u32, terms: u64) -> Result<ZetaReport, SpecialError> {
    if n == 0 || terms == 0 {
        return Err(SpecialError::Domain(n));
    }
    let s = 2.0 * n as f64;
    // smallest terms first
    let zeta_partial: f64 = (1..=terms).rev().map(|k| (k as f64).powf(-s)).sum();
    let big_n = terms as f64;
    // sum_{k>N} k^-s ~ N^(1-s)/(s-1) - N^-s/2 + s N^(-s-1)/12
    let tail = big_n.powf(1.0 - s) / (s - 1.0) - 0.5 * big_n.powf(-s) + s * big_n.powf(-s - 1.0) / 12.0;
    let zeta_estimate = zeta_partial + tail;

    let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
    let prefactor = sign * factorial(2 * n).to_f64().unwrap_or(f64::INFINITY)
        / (2f64.powi(2 * n as i32 - 1) * PI.powi(2 * n as i32));
    let bernoulli_exact = bernoulli_number(2 * n).to_f64().unwrap_or(f64::NAN);
    let bernoulli_from_zeta = prefactor * zeta_estimate;
    let rel = |approx: f64| ((approx - bernoulli_exact) / bernoulli_exact).abs();
    Ok(ZetaReport {
        n,
        terms,
        zeta_partial,
        zeta_estimate,
        bernoulli_exact,
        bernoulli_from_zeta,
        relative_error: rel(bernoulli_from_zeta),
        relative_error_uncorrected: rel(prefactor * zeta_partial),
    })
}
