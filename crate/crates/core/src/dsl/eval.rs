//! Exact evaluation of expression trees to polynomials in `z`.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use super::ast::Expr;
use crate::arith::{binomial, floor_div, ArithError, GaussRational};
use crate::poly::Polynomial;
use crate::special::{Family, NumberCache, SpecialError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("{what} must be an integer, got {value}")]
    NonInteger { what: &'static str, value: String },
    #[error("{what} must be nonnegative, got {value}")]
    Negative { what: &'static str, value: i64 },
    #[error("{what} is out of range")]
    OutOfRange { what: &'static str },
    #[error("division by the non-constant polynomial {0}")]
    NonConstantDivisor(String),
    #[error("negative power of the non-constant polynomial {0}")]
    NegativePolynomialPower(String),
    #[error("argument {0} is not affine in z")]
    NonAffineArgument(String),
    #[error("unbound variable `{0}`")]
    Unbound(String),
    #[error("no value supplied for parameter `{0}`")]
    MissingParameter(String),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Special(#[from] SpecialError),
}

/// Variable assignments for one evaluation.
#[derive(Debug, Clone, Default)]
pub struct Bindings {
    pub n: i64,
    pub params: Vec<(String, GaussRational)>,
}

impl Bindings {
    pub fn new(n: i64) -> Self {
        Self { n, params: Vec::new() }
    }

    pub fn with_param(mut self, name: &str, value: GaussRational) -> Self {
        self.params.push((name.to_string(), value));
        self
    }
}

/// Intermediate value: scalars skip the polynomial machinery.
#[derive(Debug, Clone)]
enum Value {
    Scalar(GaussRational),
    Poly(Polynomial),
}

impl Value {
    fn into_poly(self) -> Polynomial {
        match self {
            Value::Scalar(c) => Polynomial::constant(c),
            Value::Poly(p) => p,
        }
    }

    fn from_poly(p: Polynomial) -> Value {
        match p.as_constant() {
            Some(c) => Value::Scalar(c),
            None => Value::Poly(p),
        }
    }

    fn add(self, rhs: Value) -> Value {
        match (self, rhs) {
            (Value::Scalar(a), Value::Scalar(b)) => Value::Scalar(a + b),
            (a, b) => Value::from_poly(a.into_poly() + b.into_poly()),
        }
    }

    fn sub(self, rhs: Value) -> Value {
        match (self, rhs) {
            (Value::Scalar(a), Value::Scalar(b)) => Value::Scalar(a - b),
            (a, b) => Value::from_poly(a.into_poly() - b.into_poly()),
        }
    }

    fn mul(self, rhs: Value) -> Value {
        match (self, rhs) {
            (Value::Scalar(a), Value::Scalar(b)) => Value::Scalar(&a * &b),
            (Value::Scalar(a), Value::Poly(p)) | (Value::Poly(p), Value::Scalar(a)) => Value::from_poly(p.scale(&a)),
            (Value::Poly(p), Value::Poly(q)) => Value::Poly(&p * &q),
        }
    }

    fn neg(self) -> Value {
        match self {
            Value::Scalar(a) => Value::Scalar(-a),
            Value::Poly(p) => Value::Poly(-p),
        }
    }
}

struct Evaluator<'a> {
    cache: &'a NumberCache,
    bindings: &'a Bindings,
    bound: Vec<(&'a str, i64)>,
}

impl<'a> Evaluator<'a> {
    fn integer(&mut self, e: &'a Expr, what: &'static str) -> Result<i64, EvalError> {
        match self.eval(e)? {
            Value::Scalar(c) => match c.to_integer() {
                Some(n) => n.to_i64().ok_or(EvalError::OutOfRange { what }),
                None => Err(EvalError::NonInteger { what, value: c.to_string() }),
            },
            Value::Poly(p) => Err(EvalError::NonInteger { what, value: p.to_string() }),
        }
    }

    fn index(&mut self, e: &'a Expr) -> Result<u32, EvalError> {
        let what = "polynomial or number index";
        let n = self.integer(e, what)?;
        if n < 0 {
            return Err(EvalError::Negative { what, value: n });
        }
        u32::try_from(n).map_err(|_| EvalError::OutOfRange { what })
    }

    fn family_at(&mut self, family: Family, index: &'a Expr, arg: &'a Expr) -> Result<Value, EvalError> {
        let n = self.index(index)?;
        let (a, b) = match self.eval(arg)? {
            Value::Scalar(c) => (GaussRational::zero(), c),
            Value::Poly(p) if p.degree() == Some(1) => (p.coeff(1), p.coeff(0)),
            Value::Poly(p) => return Err(EvalError::NonAffineArgument(p.to_string())),
        };
        Ok(Value::from_poly((*self.cache.composed(family, n, &a, &b)).clone()))
    }

    fn eval(&mut self, e: &'a Expr) -> Result<Value, EvalError> {
        Ok(match e {
            Expr::IntLit(n) => Value::Scalar(GaussRational::from_int(n.clone())),
            Expr::RatLit(r) => Value::Scalar(GaussRational::real(r.clone())),
            Expr::ImagUnit => Value::Scalar(GaussRational::i()),
            Expr::VarN => Value::Scalar(GaussRational::from_int(self.bindings.n)),
            Expr::VarZ => Value::Poly(Polynomial::z()),
            Expr::Param(name) => Value::Scalar(
                self.bindings
                    .params
                    .iter()
                    .find(|(p, _)| p == name)
                    .map(|(_, v)| v.clone())
                    .ok_or_else(|| EvalError::MissingParameter(name.clone()))?,
            ),
            Expr::BoundVar(name) => {
                let v = self
                    .bound
                    .iter()
                    .rev()
                    .find(|(b, _)| b == name)
                    .map(|&(_, v)| v)
                    .ok_or_else(|| EvalError::Unbound(name.clone()))?;
                Value::Scalar(GaussRational::from_int(v))
            }
            Expr::BPoly { index, arg } => self.family_at(Family::Bernoulli, index, arg)?,
            Expr::EPoly { index, arg } => self.family_at(Family::Euler, index, arg)?,
            Expr::BNum(index) => {
                let n = self.index(index)?;
                Value::Scalar(GaussRational::real(self.cache.bernoulli_number(n)))
            }
            Expr::ENum(index) => {
                let n = self.index(index)?;
                Value::Scalar(GaussRational::from_int(self.cache.euler_number(n)?))
            }
            Expr::Binom(top, bottom) => {
                let n = self.integer(top, "binomial upper argument")?;
                if n < 0 {
                    return Err(EvalError::Negative { what: "binomial upper argument", value: n });
                }
                let k = self.integer(bottom, "binomial lower argument")?;
                Value::Scalar(GaussRational::from_int(binomial(n, k)))
            }
            Expr::Floor(a, b) => {
                let a = BigInt::from(self.integer(a, "floor numerator")?);
                let b = BigInt::from(self.integer(b, "floor denominator")?);
                let q = floor_div(&a, &b).ok_or(ArithError::DivisionByZero)?;
                Value::Scalar(GaussRational::from_int(q))
            }
            Expr::Pow(base, exp) => {
                let k = self.integer(exp, "exponent")?;
                match self.eval(base)? {
                    Value::Scalar(c) => Value::Scalar(c.pow(k)?),
                    Value::Poly(p) => {
                        if k < 0 {
                            return Err(EvalError::NegativePolynomialPower(p.to_string()));
                        }
                        let k = u32::try_from(k).map_err(|_| EvalError::OutOfRange { what: "exponent" })?;
                        Value::Poly(p.pow(k))
                    }
                }
            }
            Expr::Neg(x) => self.eval(x)?.neg(),
            Expr::Add(a, b) => self.eval(a)?.add(self.eval(b)?),
            Expr::Sub(a, b) => self.eval(a)?.sub(self.eval(b)?),
            Expr::Mul(a, b) => self.eval(a)?.mul(self.eval(b)?),
            Expr::Div(a, b) => {
                let num = self.eval(a)?;
                match self.eval(b)? {
                    Value::Scalar(d) => {
                        let inv = d.inv()?;
                        num.mul(Value::Scalar(inv))
                    }
                    Value::Poly(p) => return Err(EvalError::NonConstantDivisor(p.to_string())),
                }
            }
            Expr::Sum { var, lo, hi, body } => {
                let lo = self.integer(lo, "summation bound")?;
                let hi = self.integer(hi, "summation bound")?;
                let mut acc = Value::Scalar(GaussRational::zero());
                for k in lo..=hi {
                    self.bound.push((var.as_str(), k));
                    let term = self.eval(body);
                    self.bound.pop();
                    acc = acc.add(term?);
                }
                acc
            }
        })
    }
}

/// Evaluates `e` with `n` bound to `n_value` and no parameters.
pub fn eval_expr(e: &Expr, n_value: i64) -> Result<Polynomial, EvalError> {
    eval_with(e, &Bindings::new(n_value))
}

pub fn eval_with(e: &Expr, bindings: &Bindings) -> Result<Polynomial, EvalError> {
    eval_in(NumberCache::global(), e, bindings)
}

/// Evaluation against an explicit cache.
pub fn eval_in(cache: &NumberCache, e: &Expr, bindings: &Bindings) -> Result<Polynomial, EvalError> {
    let mut ev = Evaluator { cache, bindings, bound: Vec::new() };
    Ok(ev.eval(e)?.into_poly())
}
