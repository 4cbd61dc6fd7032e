use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::ArithError;

/// An element `re + im*i` of Q(i). Both parts are canonical rationals, so
/// structural equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussRational {
    re: BigRational,
    im: BigRational,
}

impl GaussRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        Self { re, im: BigRational::zero() }
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Self::real(BigRational::from_integer(n.into()))
    }

    /// `num/den` as a real Gaussian rational.
    pub fn ratio(num: i64, den: i64) -> Result<Self, ArithError> {
        super::rat_make(num, den).map(Self::real)
    }

    pub fn i() -> Self {
        Self { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -&self.im }
    }

    /// `re^2 + im^2`.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse via the conjugate over the squared modulus.
    pub fn inv(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        if self.is_real() {
            return Ok(Self::real(self.re.recip()));
        }
        let n = self.norm_sqr();
        Ok(Self { re: &self.re / &n, im: -(&self.im / &n) })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, exp: i64) -> Result<Self, ArithError> {
        if exp < 0 {
            if self.is_zero() {
                return Err(ArithError::ZeroToNegativePower(exp));
            }
            return self.inv()?.pow(-exp);
        }
        if self.is_real() {
            return Ok(Self::real(super::int_pow_rat(&self.re, exp as u64)));
        }
        let mut acc = Self::one();
        let mut sq = self.clone();
        let mut e = exp as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// The integer value, if this is a real number with denominator one.
    pub fn to_integer(&self) -> Option<BigInt> {
        if self.is_real() {
            super::rat_to_integer(&self.re)
        } else {
            None
        }
    }

    /// Same as [`GaussRational::to_integer`] but narrowed to `i64`.
    pub fn to_i64(&self) -> Option<i64> {
        use num_traits::ToPrimitive;
        self.to_integer().and_then(|n| n.to_i64())
    }
}

impl Zero for GaussRational {
    fn zero() -> Self {
        Self::default()
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussRational {
    fn one() -> Self {
        Self::real(BigRational::one())
    }
}

impl From<BigRational> for GaussRational {
    fn from(re: BigRational) -> Self {
        Self::real(re)
    }
}

impl From<BigInt> for GaussRational {
    fn from(n: BigInt) -> Self {
        Self::from_int(n)
    }
}

impl From<i64> for GaussRational {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl<'a> Add<&'a GaussRational> for &'a GaussRational {
    type Output = GaussRational;

    fn add(self, rhs: &GaussRational) -> GaussRational {
        GaussRational { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Add for GaussRational {
    type Output = GaussRational;

    fn add(self, rhs: GaussRational) -> GaussRational {
        GaussRational { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl AddAssign<&GaussRational> for GaussRational {
    fn add_assign(&mut self, rhs: &GaussRational) {
        self.re += &rhs.re;
        if !rhs.im.is_zero() {
            self.im += &rhs.im;
        }
    }
}

impl<'a> Sub<&'a GaussRational> for &'a GaussRational {
    type Output = GaussRational;

    fn sub(self, rhs: &GaussRational) -> GaussRational {
        GaussRational { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Sub for GaussRational {
    type Output = GaussRational;

    fn sub(self, rhs: GaussRational) -> GaussRational {
        GaussRational { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl SubAssign<&GaussRational> for GaussRational {
    fn sub_assign(&mut self, rhs: &GaussRational) {
        self.re -= &rhs.re;
        if !rhs.im.is_zero() {
            self.im -= &rhs.im;
        }
    }
}

impl<'a> Mul<&'a GaussRational> for &'a GaussRational {
    type Output = GaussRational;

    fn mul(self, rhs: &GaussRational) -> GaussRational {
        match (self.is_real(), rhs.is_real()) {
            (true, true) => GaussRational::real(&self.re * &rhs.re),
            (true, false) => GaussRational { re: &self.re * &rhs.re, im: &self.re * &rhs.im },
            (false, true) => GaussRational { re: &self.re * &rhs.re, im: &self.im * &rhs.re },
            (false, false) => GaussRational {
                re: &self.re * &rhs.re - &self.im * &rhs.im,
                im: &self.re * &rhs.im + &self.im * &rhs.re,
            },
        }
    }
}

impl Mul for GaussRational {
    type Output = GaussRational;

    fn mul(self, rhs: GaussRational) -> GaussRational {
        &self * &rhs
    }
}

impl Neg for GaussRational {
    type Output = GaussRational;

    fn neg(self) -> GaussRational {
        GaussRational { re: -self.re, im: -self.im }
    }
}

impl Neg for &GaussRational {
    type Output = GaussRational;

    fn neg(self) -> GaussRational {
        GaussRational { re: -&self.re, im: -&self.im }
    }
}

impl fmt::Display for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.re)?;
        if !self.im.is_zero() {
            if self.im.is_negative() {
                write!(f, " - {}*i", -&self.im)?;
            } else {
                write!(f, " + {}*i", self.im)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid point `{input}`: {reason}")]
pub struct ParsePointError {
    pub input: String,
    pub reason: &'static str,
}

/// Accepts the rendering format: `p/q`, `p/q + r/s*i`, `p/q - r/s*i`, and
/// the bare imaginary forms `r/s*i` and `i`. Whitespace is ignored.
impl FromStr for GaussRational {
    type Err = ParsePointError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason| ParsePointError { input: s.to_string(), reason };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty input"));
        }
        let Some(body) = compact.strip_suffix('i') else {
            return parse_rational(&compact).map(Self::real).ok_or_else(|| err("malformed rational"));
        };
        // split at the last sign that is not the leading one
        let split = body.char_indices().skip(1).filter(|&(_, c)| c == '+' || c == '-').map(|(idx, _)| idx).last();
        let (re_text, im_text) = match split {
            Some(idx) => (&body[..idx], &body[idx..]),
            None => ("0", body),
        };
        let re = parse_rational(re_text).ok_or_else(|| err("malformed real part"))?;
        let im = match im_text.strip_suffix('*') {
            Some(coeff) => parse_rational(coeff.strip_prefix('+').unwrap_or(coeff)),
            None => match im_text {
                "" | "+" => Some(BigRational::one()),
                "-" => Some(-BigRational::one()),
                _ => None,
            },
        }
        .ok_or_else(|| err("malformed imaginary part"))?;
        Ok(Self::new(re, im))
    }
}

fn parse_rational(text: &str) -> Option<BigRational> {
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let valid = |s: &str, signed: bool| {
        let digits = if signed { s.strip_prefix('-').unwrap_or(s) } else { s };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid(num, true) || !valid(den, false) {
        return None;
    }
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    super::rat_make(num, den).ok()
}
