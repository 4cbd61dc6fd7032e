//! Truncated power series in `t` with polynomial-in-`z` coefficients, and
//! the exponential/hyperbolic kernel identities the polynomial identities
//! are read off from.

use std::fmt;
use std::ops::{Add, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::arith::{factorial, ArithError, GaussRational};
use crate::poly::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("series orders differ ({0} vs {1})")]
    OrderMismatch(usize, usize),
    #[error("constant term must be the constant polynomial 1")]
    NonUnitConstant,
    #[error("constant term must vanish before dividing by t")]
    NonZeroConstant,
    #[error("unknown kernel `{0}`")]
    UnknownKernel(String),
    #[error("kernel {0} needs a nonzero parameter sample")]
    MissingParameter(KernelId),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// `sum_{k=0}^{N} c_k t^k`; always exactly `N + 1` stored coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct SeriesZ {
    coeffs: Vec<Polynomial>,
}

impl SeriesZ {
    pub fn from_coeffs(order: usize, mut coeffs: Vec<Polynomial>) -> Self {
        coeffs.resize(order + 1, Polynomial::zero());
        Self { coeffs }
    }

    pub fn constant(order: usize, c: Polynomial) -> Self {
        Self::from_coeffs(order, vec![c])
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, Polynomial::one())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &Polynomial {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Polynomial] {
        &self.coeffs
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, rhs: &SeriesZ) -> Result<SeriesZ, SeriesError> {
        if self.order() != rhs.order() {
            return Err(SeriesError::OrderMismatch(self.order(), rhs.order()));
        }
        let n = self.order();
        let coeffs = (0..=n)
            .map(|k| {
                (0..=k).fold(Polynomial::zero(), |acc, j| {
                    if self.coeffs[j].is_zero() || rhs.coeffs[k - j].is_zero() {
                        acc
                    } else {
                        acc + &self.coeffs[j] * &rhs.coeffs[k - j]
                    }
                })
            })
            .collect();
        Ok(SeriesZ { coeffs })
    }

    /// Inverse of a series whose constant term is exactly 1.
    pub fn recip(&self) -> Result<SeriesZ, SeriesError> {
        if self.coeffs[0] != Polynomial::one() {
            return Err(SeriesError::NonUnitConstant);
        }
        // b_k = -sum_{j=1}^{k} a_j b_{k-j}
        let mut out: Vec<Polynomial> = Vec::with_capacity(self.coeffs.len());
        out.push(Polynomial::one());
        for k in 1..self.coeffs.len() {
            let mut acc = Polynomial::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc = acc + &self.coeffs[j] * &out[k - j];
                }
            }
            out.push(-acc);
        }
        Ok(SeriesZ { coeffs: out })
    }

    pub fn scale(&self, c: &GaussRational) -> SeriesZ {
        SeriesZ { coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect() }
    }

    /// Substitutes `t -> c*t`.
    pub fn scale_var(&self, c: &GaussRational) -> SeriesZ {
        let mut power = GaussRational::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|p| {
                let out = p.scale(&power);
                power = &power * c;
                out
            })
            .collect();
        SeriesZ { coeffs }
    }

    /// Substitutes `z -> a*z + b` in every coefficient.
    pub fn map_z(&self, a: &GaussRational, b: &GaussRational) -> SeriesZ {
        SeriesZ { coeffs: self.coeffs.iter().map(|p| p.compose_affine(a, b)).collect() }
    }

    /// Divides by `t`, losing one order of precision.
    pub fn div_t(&self) -> Result<SeriesZ, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::NonZeroConstant);
        }
        if self.coeffs.len() == 1 {
            // nothing is known beyond order 0; keep the order-0 shape
            return Ok(self.clone());
        }
        Ok(SeriesZ { coeffs: self.coeffs[1..].to_vec() })
    }

    pub fn truncate(&self, order: usize) -> SeriesZ {
        SeriesZ::from_coeffs(order, self.coeffs[..=order.min(self.order())].to_vec())
    }
}

impl Add for &SeriesZ {
    type Output = SeriesZ;

    fn add(self, rhs: &SeriesZ) -> SeriesZ {
        let n = self.order().min(rhs.order());
        SeriesZ { coeffs: (0..=n).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect() }
    }
}

impl Sub for &SeriesZ {
    type Output = SeriesZ;

    fn sub(self, rhs: &SeriesZ) -> SeriesZ {
        let n = self.order().min(rhs.order());
        SeriesZ { coeffs: (0..=n).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect() }
    }
}

impl fmt::Debug for SeriesZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter().map(|p| p.to_string())).finish()
    }
}

/// `e^(c t)`, or `e^(c z t)` when `with_z` is set.
pub fn series_exp(c: &GaussRational, with_z: bool, order: usize) -> SeriesZ {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut power = GaussRational::one();
    let mut z_power = Polynomial::one();
    for k in 0..=order {
        let w = power.checked_div(&GaussRational::from_int(factorial(k as u32))).expect("factorial is nonzero");
        coeffs.push(if with_z { z_power.scale(&w) } else { Polynomial::constant(w) });
        power = &power * c;
        if with_z {
            z_power = z_power.shift_up();
        }
    }
    SeriesZ { coeffs }
}

fn half() -> GaussRational {
    GaussRational::ratio(1, 2).expect("nonzero denominator")
}

/// `(e^(ct) + e^(-ct)) / 2`.
fn cosh_series(c: &GaussRational, order: usize) -> SeriesZ {
    (&series_exp(c, false, order) + &series_exp(&-c, false, order)).scale(&half())
}

/// `sinh(ct) / (ct)` for nonzero `c`.
fn sinhc_series(c: &GaussRational, order: usize) -> Result<SeriesZ, SeriesError> {
    let sinh = (&series_exp(c, false, order + 1) - &series_exp(&-c, false, order + 1)).scale(&half());
    Ok(sinh.div_t()?.scale(&c.inv()?))
}

/// `(e^(ct) - 1) / (ct)` for nonzero `c`.
fn expm1c_series(c: &GaussRational, order: usize) -> Result<SeriesZ, SeriesError> {
    let shifted = &series_exp(c, false, order + 1) - &SeriesZ::one(order + 1);
    Ok(shifted.div_t()?.scale(&c.inv()?))
}

/// `t e^(zt) / (e^t - 1)`, as `e^(zt) * ((e^t - 1)/t)^-1`.
pub fn bernoulli_gf(order: usize) -> SeriesZ {
    let unit = expm1c_series(&GaussRational::one(), order).expect("c = 1 is nonzero");
    let inv = unit.recip().expect("constant term is 1");
    series_exp(&GaussRational::one(), true, order).mul(&inv).expect("same order")
}

/// `2 e^(zt) / (e^t + 1)`, as `e^(zt) * ((e^t + 1)/2)^-1`.
pub fn euler_gf(order: usize) -> SeriesZ {
    let unit = (&series_exp(&GaussRational::one(), false, order) + &SeriesZ::one(order)).scale(&half());
    let inv = unit.recip().expect("constant term is 1");
    series_exp(&GaussRational::one(), true, order).mul(&inv).expect("same order")
}

/// `sum_k w^(4k) / (4k)!`.
fn phi_series(order: usize) -> SeriesZ {
    let coeffs = (0..=order)
        .map(|k| {
            if k % 4 == 0 {
                Polynomial::constant(
                    GaussRational::one()
                        .checked_div(&GaussRational::from_int(factorial(k as u32)))
                        .expect("factorial is nonzero"),
                )
            } else {
                Polynomial::zero()
            }
        })
        .collect();
    SeriesZ { coeffs }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KernelId {
    K2_2,
    K2_6,
    K2_10a,
    K2_10b,
    K2_12,
    K2_19,
    K2_23,
}

impl KernelId {
    pub const ALL: [KernelId; 7] = [
        KernelId::K2_2,
        KernelId::K2_6,
        KernelId::K2_10a,
        KernelId::K2_10b,
        KernelId::K2_12,
        KernelId::K2_19,
        KernelId::K2_23,
    ];

    pub fn name(self) -> &'static str {
        match self {
            KernelId::K2_2 => "K2.2",
            KernelId::K2_6 => "K2.6",
            KernelId::K2_10a => "K2.10a",
            KernelId::K2_10b => "K2.10b",
            KernelId::K2_12 => "K2.12",
            KernelId::K2_19 => "K2.19",
            KernelId::K2_23 => "K2.23",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            KernelId::K2_2 => "cosh(t/4) tB(z;t) = e^(-t/4) tB(2z;t/2)",
            KernelId::K2_6 => "sinh(t/2)/(t/2) tB(z;2t) = e^(-t/2) E(2z;t)",
            KernelId::K2_10a => "e^(t/2) tB(z;2t) = sech(t/2) tB(2z;t)",
            KernelId::K2_10b => "sech(t/2) tB(2z;t) = (t/2)/sinh(t/2) E(2z;t)",
            KernelId::K2_12 => "(1+e^-t+e^t)/3 tB(z;3t) = e^(-t) tB(3z;t)",
            KernelId::K2_19 => "(e^(at)-1)/(at) tB(z;at) = (e^t+1)/2 E(az;t)",
            KernelId::K2_23 => "phi(w) tB(z;2(1+i)w) = sigma(w) tB(2z;(1+i)w)",
        }
    }

    pub fn needs_parameter(self) -> bool {
        self == KernelId::K2_19
    }
}

impl fmt::Display for KernelId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for KernelId {
    type Err = SeriesError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        KernelId::ALL.into_iter().find(|k| k.name() == s).ok_or_else(|| SeriesError::UnknownKernel(s.to_string()))
    }
}

/// Both sides of a kernel identity expanded to `order`.
pub fn kernel_sides(
    id: KernelId,
    order: usize,
    a_sample: Option<&GaussRational>,
) -> Result<(SeriesZ, SeriesZ), SeriesError> {
    let g = |n: i64, d: i64| GaussRational::ratio(n, d).expect("nonzero denominator");
    let zero = GaussRational::zero();
    let bgf = bernoulli_gf(order);
    let egf = euler_gf(order);
    // tB(alpha z; c t)
    let b_at = |alpha: &GaussRational, c: &GaussRational| bgf.map_z(alpha, &zero).scale_var(c);
    let e_at = |alpha: &GaussRational, c: &GaussRational| egf.map_z(alpha, &zero).scale_var(c);
    let one = GaussRational::one();

    let sides = match id {
        KernelId::K2_2 => (
            cosh_series(&g(1, 4), order).mul(&bgf)?,
            series_exp(&g(-1, 4), false, order).mul(&b_at(&g(2, 1), &g(1, 2)))?,
        ),
        KernelId::K2_6 => (
            sinhc_series(&g(1, 2), order)?.mul(&b_at(&one, &g(2, 1)))?,
            series_exp(&g(-1, 2), false, order).mul(&e_at(&g(2, 1), &one))?,
        ),
        KernelId::K2_10a => (
            series_exp(&g(1, 2), false, order).mul(&b_at(&one, &g(2, 1)))?,
            cosh_series(&g(1, 2), order).recip()?.mul(&b_at(&g(2, 1), &one))?,
        ),
        KernelId::K2_10b => (
            cosh_series(&g(1, 2), order).recip()?.mul(&b_at(&g(2, 1), &one))?,
            sinhc_series(&g(1, 2), order)?.recip()?.mul(&e_at(&g(2, 1), &one))?,
        ),
        KernelId::K2_12 => {
            let weight = (&(&SeriesZ::one(order) + &series_exp(&g(-1, 1), false, order))
                + &series_exp(&one, false, order))
                .scale(&g(1, 3));
            (weight.mul(&b_at(&one, &g(3, 1)))?, series_exp(&g(-1, 1), false, order).mul(&b_at(&g(3, 1), &one))?)
        }
        KernelId::K2_19 => {
            let a = match a_sample {
                Some(a) if !a.is_zero() => a,
                _ => return Err(SeriesError::MissingParameter(id)),
            };
            let weight = (&series_exp(&one, false, order) + &SeriesZ::one(order)).scale(&half());
            (expm1c_series(a, order)?.mul(&b_at(&one, a))?, weight.mul(&e_at(a, &one))?)
        }
        KernelId::K2_23 => {
            let w = &one + &GaussRational::i();
            let sigma =
                (&series_exp(&g(-1, 1), false, order) + &series_exp(&-GaussRational::i(), false, order)).scale(&half());
            (phi_series(order).mul(&b_at(&one, &(&g(2, 1) * &w)))?, sigma.mul(&b_at(&g(2, 1), &w))?)
        }
    };
    Ok(sides)
}

/// Exact coefficient-by-coefficient comparison of a kernel identity.
pub fn verify_kernel(id: KernelId, order: usize, a_sample: Option<&GaussRational>) -> Result<bool, SeriesError> {
    let (lhs, rhs) = kernel_sides(id, order, a_sample)?;
    Ok(lhs == rhs)
}

/// Default series order for kernel checks.
pub const DEFAULT_KERNEL_ORDER: usize = 16;

/// Parameter samples used for the `a`-dependent kernel.
pub fn kernel_parameter_samples() -> Vec<GaussRational> {
    vec![GaussRational::one(), GaussRational::from_int(2), &GaussRational::one() + &GaussRational::i()]
}
