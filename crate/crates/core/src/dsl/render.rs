use std::fmt;

use super::ast::{Expr, IdentityExpr};

const SUM: u8 = 1;
const PRODUCT: u8 = 2;
const UNARY: u8 = 3;
const POWER: u8 = 4;

fn child(f: &mut fmt::Formatter<'_>, e: &Expr, wrap: bool) -> fmt::Result {
    if wrap {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

fn binary(f: &mut fmt::Formatter<'_>, a: &Expr, op: &str, b: &Expr, prec: u8) -> fmt::Result {
    child(f, a, a.precedence() < prec)?;
    write!(f, " {op} ")?;
    // right operands of equal precedence keep their grouping
    child(f, b, b.precedence() <= prec)
}

/// Renders with the fewest parentheses that reparse to the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::IntLit(n) => write!(f, "{n}"),
            Expr::RatLit(r) => write!(f, "{r}"),
            Expr::ImagUnit => f.write_str("i"),
            Expr::VarN => f.write_str("n"),
            Expr::VarZ => f.write_str("z"),
            Expr::Param(name) | Expr::BoundVar(name) => f.write_str(name),
            Expr::BPoly { index, arg } => write!(f, "B({index}, {arg})"),
            Expr::EPoly { index, arg } => write!(f, "E({index}, {arg})"),
            Expr::BNum(index) => write!(f, "BN({index})"),
            Expr::ENum(index) => write!(f, "EN({index})"),
            Expr::Binom(a, b) => write!(f, "binom({a}, {b})"),
            Expr::Floor(a, b) => write!(f, "floor({a}, {b})"),
            Expr::Sum { var, lo, hi, body } => write!(f, "sum({var}={lo}..{hi}, {body})"),
            Expr::Add(a, b) => binary(f, a, "+", b, SUM),
            Expr::Sub(a, b) => binary(f, a, "-", b, SUM),
            Expr::Mul(a, b) => binary(f, a, "*", b, PRODUCT),
            Expr::Div(a, b) => binary(f, a, "/", b, PRODUCT),
            Expr::Neg(x) => {
                f.write_str("-")?;
                child(f, x, x.precedence() < UNARY)
            }
            Expr::Pow(base, exp) => {
                child(f, base, base.precedence() <= POWER)?;
                f.write_str("^")?;
                child(f, exp, exp.precedence() < UNARY)
            }
        }
    }
}

impl fmt::Display for IdentityExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} == {}", self.lhs, self.rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::super::parser::parse_expr;

    #[test]
    fn minimal_parentheses() {
        for (src, want) in [
            ("(1+2)*3", "(1 + 2) * 3"),
            ("1+(2+3)", "1 + (2 + 3)"),
            ("(1+2)+3", "1 + 2 + 3"),
            ("-(2^2)", "-2^2"),
            ("(-2)^2", "(-2)^2"),
            ("2^(3^2)", "2^3^2"),
            ("(2^3)^2", "(2^3)^2"),
            ("2^(-1)", "2^-1"),
            ("2^(n-1)", "2^(n - 1)"),
            ("z/(n*z)", "z / (n * z)"),
            ("--z", "--z"),
            ("sum(k=1..n-1,k*z)", "sum(k=1..n - 1, k * z)"),
        ] {
            let e = parse_expr(src).unwrap();
            assert_eq!(e.to_string(), want, "{src}");
            assert_eq!(parse_expr(&e.to_string()).unwrap(), e);
        }
    }
}
