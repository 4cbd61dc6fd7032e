//! Dense univariate polynomials in `z` over Q(i).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::arith::{ArithError, GaussRational};

/// Coefficients in ascending degree order. The last stored coefficient is
/// never zero; the zero polynomial stores nothing.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<GaussRational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(GaussRational::one())
    }

    /// The indeterminate `z`.
    pub fn z() -> Self {
        Self::from_coeffs(vec![GaussRational::zero(), GaussRational::one()])
    }

    pub fn constant(c: GaussRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `a*z + b`.
    pub fn affine(a: GaussRational, b: GaussRational) -> Self {
        Self::from_coeffs(vec![b, a])
    }

    pub fn from_coeffs(mut coeffs: Vec<GaussRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[GaussRational] {
        &self.coeffs
    }

    /// Coefficient of `z^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> GaussRational {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// The value of a constant polynomial; `None` if `z` occurs.
    pub fn as_constant(&self) -> Option<GaussRational> {
        match self.coeffs.len() {
            0 => Some(GaussRational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<&GaussRational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &GaussRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Division by a nonzero scalar.
    pub fn div_scalar(&self, c: &GaussRational) -> Result<Self, ArithError> {
        Ok(self.scale(&c.inv()?))
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        let mut sq = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        acc
    }

    /// Horner evaluation.
    pub fn eval(&self, at: &GaussRational) -> GaussRational {
        let mut acc = GaussRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * at;
            acc += c;
        }
        acc
    }

    /// `p(a*z + b)`, accumulated Horner-style in the polynomial ring.
    pub fn compose_affine(&self, a: &GaussRational, b: &GaussRational) -> Self {
        if a.is_zero() {
            return Self::constant(self.eval(b));
        }
        let inner = Self::affine(a.clone(), b.clone());
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * &inner;
            acc = acc.add_constant(c);
        }
        acc
    }

    fn add_constant(mut self, c: &GaussRational) -> Self {
        if self.coeffs.is_empty() {
            return Self::constant(c.clone());
        }
        self.coeffs[0] += c;
        Self::from_coeffs(self.coeffs)
    }

    /// `z * p`, used to step through Horner-style recurrences.
    pub fn shift_up(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(GaussRational::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        let mut coeffs = long.coeffs.clone();
        for (slot, c) in coeffs.iter_mut().zip(&short.coeffs) {
            *slot += c;
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Add for Polynomial {
    type Output = Polynomial;

    fn add(mut self, rhs: Polynomial) -> Polynomial {
        if self.coeffs.len() < rhs.coeffs.len() {
            return rhs + self;
        }
        for (slot, c) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *slot += c;
        }
        Polynomial::from_coeffs(self.coeffs)
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(n, GaussRational::zero());
        for (slot, c) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *slot -= c;
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        if self.coeffs.len() == 1 {
            return rhs.scale(&self.coeffs[0]);
        }
        if rhs.coeffs.len() == 1 {
            return self.scale(&rhs.coeffs[0]);
        }
        let mut out = vec![GaussRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        Polynomial::from_coeffs(out)
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial { coeffs: self.coeffs.into_iter().map(Neg::neg).collect() }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial { coeffs: self.coeffs.iter().map(Neg::neg).collect() }
    }
}

impl From<GaussRational> for Polynomial {
    fn from(c: GaussRational) -> Self {
        Self::constant(c)
    }
}

/// Ascending order, zero terms omitted: `1/6 - z + z^2`. Coefficients with
/// an imaginary part are parenthesised.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (negative, magnitude) =
                if c.is_real() && c.re().is_negative() { (true, -c) } else { (false, c.clone()) };
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let unit = magnitude.is_one();
            if k == 0 {
                if magnitude.is_real() {
                    write!(f, "{magnitude}")?;
                } else {
                    write!(f, "({magnitude})")?;
                }
                continue;
            }
            if !unit {
                if magnitude.is_real() {
                    write!(f, "{magnitude}*")?;
                } else {
                    write!(f, "({magnitude})*")?;
                }
            }
            if k == 1 {
                f.write_str("z")?;
            } else {
                write!(f, "z^{k}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(n: i64, d: i64) -> GaussRational {
        GaussRational::ratio(n, d).unwrap()
    }

    fn p(cs: &[(i64, i64)]) -> Polynomial {
        Polynomial::from_coeffs(cs.iter().map(|&(n, d)| c(n, d)).collect())
    }

    #[test]
    fn addition() {
        assert_eq!(&p(&[(-1, 2), (1, 1)]) + &p(&[(1, 2)]), Polynomial::z());
        let q = p(&[(1, 3), (2, 1), (-5, 7)]);
        assert_eq!(&q + &Polynomial::zero(), q);
        // B_2 + B_1 = (z^2 - z + 1/6) + (z - 1/2)
        let b2 = p(&[(1, 6), (-1, 1), (1, 1)]);
        let b1 = p(&[(-1, 2), (1, 1)]);
        assert_eq!(&b2 + &b1, p(&[(-1, 3), (0, 1), (1, 1)]));
        assert!((&q - &q).is_zero());
    }

    #[test]
    fn multiplication() {
        assert_eq!(&Polynomial::z() * &Polynomial::z(), p(&[(0, 1), (0, 1), (1, 1)]));
        let q = p(&[(1, 3), (2, 1), (-5, 7)]);
        assert_eq!(&q * &Polynomial::one(), q);
        let half = p(&[(-1, 2), (1, 1)]);
        assert_eq!(half.pow(2), p(&[(1, 4), (-1, 1), (1, 1)]));
    }

    #[test]
    fn normalisation() {
        let padded = Polynomial::from_coeffs(vec![c(0, 1), c(1, 1), c(0, 1)]);
        assert_eq!(padded, Polynomial::z());
        assert_eq!(padded.degree(), Some(1));
        assert_eq!(Polynomial::from_coeffs(vec![c(0, 1)]).degree(), None);
    }

    #[test]
    fn affine_composition() {
        let b1 = p(&[(-1, 2), (1, 1)]);
        let composed = b1.compose_affine(&c(2, 1), &c(-1, 2));
        assert_eq!(composed, p(&[(-1, 1), (2, 1)]));
        for at in [0, 1, 2] {
            let at = c(at, 1);
            assert_eq!(composed.eval(&at), b1.eval(&(&(&c(2, 1) * &at) + &c(-1, 2))));
        }
        let q = p(&[(1, 3), (2, 1), (-5, 7)]);
        assert_eq!(q.compose_affine(&c(1, 1), &c(0, 1)), q);
        assert_eq!(Polynomial::z().compose_affine(&c(0, 1), &c(3, 4)), p(&[(3, 4)]));
    }

    #[test]
    fn evaluation() {
        let b2 = p(&[(1, 6), (-1, 1), (1, 1)]);
        assert_eq!(b2.eval(&c(0, 1)), c(1, 6));
        assert_eq!(b2.eval(&c(1, 2)), c(-1, 12));
        assert_eq!(Polynomial::zero().eval(&c(7, 3)), GaussRational::zero());
    }

    #[test]
    fn equality_is_structural() {
        let b2 = p(&[(1, 6), (-1, 1), (1, 1)]);
        let e2 = p(&[(0, 1), (-1, 1), (1, 1)]);
        assert_eq!(b2, b2.clone());
        assert_ne!(b2, e2);
    }

    #[test]
    fn rendering() {
        assert_eq!(p(&[(1, 6), (-1, 1), (1, 1)]).to_string(), "1/6 - z + z^2");
        assert_eq!(p(&[(0, 1), (1, 2), (-3, 2), (1, 1)]).to_string(), "1/2*z - 3/2*z^2 + z^3");
        assert_eq!(Polynomial::zero().to_string(), "0");
        let w = Polynomial::affine(GaussRational::i(), c(-1, 1));
        assert_eq!(w.to_string(), "-1 + (0 + 1*i)*z");
    }

    fn arb_coeff() -> impl Strategy<Value = GaussRational> {
        (-9i64..10, 1i64..6, -3i64..4, 1i64..4).prop_map(|(a, b, x, y)| {
            GaussRational::new(crate::arith::rat_make(a, b).unwrap(), crate::arith::rat_make(x, y).unwrap())
        })
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(arb_coeff(), 0..=9).prop_map(Polynomial::from_coeffs)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), q in arb_poly()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a * &b) * &q, &a * &(&b * &q));
            prop_assert_eq!(&a * &(&b + &q), &(&a * &b) + &(&a * &q));
        }

        #[test]
        fn composition_matches_evaluation(q in arb_poly(), a in arb_coeff(), b in arb_coeff(), at in arb_coeff()) {
            let lhs = q.compose_affine(&a, &b).eval(&at);
            let rhs = q.eval(&(&(&a * &at) + &b));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn degrees_add(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            prop_assert_eq!((&a * &b).degree(), Some(a.degree().unwrap() + b.degree().unwrap()));
        }
    }
}
