//! Exact scalar arithmetic: canonical rationals, Gaussian rationals and the
//! integer combinatorics every summation in the catalog leans on.

mod gauss;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

pub use gauss::{GaussRational, ParsePointError};
pub use num_bigint::BigInt as Int;
pub use num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero raised to the negative power {0}")]
    ZeroToNegativePower(i64),
}

/// Builds `num/den` in canonical form.
pub fn rat_make(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<BigRational, ArithError> {
    let den = den.into();
    if den.is_zero() {
        return Err(ArithError::DivisionByZero);
    }
    Ok(BigRational::new(num.into(), den))
}

pub fn rat_int(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

pub fn rat_div(a: &BigRational, b: &BigRational) -> Result<BigRational, ArithError> {
    if b.is_zero() {
        return Err(ArithError::DivisionByZero);
    }
    Ok(a / b)
}

/// Integer power with a possibly negative exponent.
pub fn rat_pow(base: &BigRational, exp: i64) -> Result<BigRational, ArithError> {
    if exp < 0 {
        if base.is_zero() {
            return Err(ArithError::ZeroToNegativePower(exp));
        }
        let pos = int_pow_rat(base, exp.unsigned_abs());
        Ok(pos.recip())
    } else {
        Ok(int_pow_rat(base, exp as u64))
    }
}

fn int_pow_rat(base: &BigRational, exp: u64) -> BigRational {
    let mut acc = BigRational::one();
    let mut sq = base.clone();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &sq;
        }
        e >>= 1;
        if e > 0 {
            sq = &sq * &sq;
        }
    }
    acc
}

/// `base^exp` for a nonnegative exponent.
pub fn int_pow(base: i64, exp: u32) -> BigInt {
    num_traits::pow(BigInt::from(base), exp as usize)
}

/// Binomial coefficient with the empty-sum convention: zero when `k` lies
/// outside `0..=n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        // exact at every step: acc is C(n, j) before the update
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n as u64).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Floor division on integers; `None` when the divisor is zero.
pub fn floor_div(a: &BigInt, b: &BigInt) -> Option<BigInt> {
    if b.is_zero() {
        None
    } else {
        Some(a.div_floor(b))
    }
}

/// Returns the integer value of `r` when its denominator is one.
pub fn rat_to_integer(r: &BigRational) -> Option<BigInt> {
    r.is_integer().then(|| r.to_integer())
}
