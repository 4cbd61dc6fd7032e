use num_bigint::BigInt;
use num_rational::BigRational;

/// Expression tree of the identity language.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    IntLit(BigInt),
    /// Never produced by the parser, which reads `p/q` as a division.
    RatLit(BigRational),
    ImagUnit,
    VarN,
    VarZ,
    /// A sampled parameter such as `a`; declared by the caller when parsing.
    Param(String),
    /// An integer summation variable introduced by an enclosing `sum`.
    BoundVar(String),
    BPoly {
        index: Box<Expr>,
        arg: Box<Expr>,
    },
    EPoly {
        index: Box<Expr>,
        arg: Box<Expr>,
    },
    BNum(Box<Expr>),
    ENum(Box<Expr>),
    Binom(Box<Expr>, Box<Expr>),
    Floor(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Sum {
        var: String,
        lo: Box<Expr>,
        hi: Box<Expr>,
        body: Box<Expr>,
    },
}

/// `lhs == rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityExpr {
    pub lhs: Expr,
    pub rhs: Expr,
}

impl Expr {
    pub fn int(n: i64) -> Expr {
        Expr::IntLit(BigInt::from(n))
    }

    /// Binding strength used by the renderer: larger binds tighter.
    pub(crate) fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(..) => 3,
            Expr::Pow(..) => 4,
            Expr::IntLit(n) if n.sign() == num_bigint::Sign::Minus => 3,
            Expr::RatLit(_) => 2,
            _ => 5,
        }
    }

    /// Visits every node, parents first.
    pub fn walk<'a>(&'a self, f: &mut impl FnMut(&'a Expr)) {
        f(self);
        match self {
            Expr::IntLit(_)
            | Expr::RatLit(_)
            | Expr::ImagUnit
            | Expr::VarN
            | Expr::VarZ
            | Expr::Param(_)
            | Expr::BoundVar(_) => {}
            Expr::BNum(x) | Expr::ENum(x) | Expr::Neg(x) => x.walk(f),
            Expr::BPoly { index, arg } | Expr::EPoly { index, arg } => {
                index.walk(f);
                arg.walk(f);
            }
            Expr::Binom(a, b)
            | Expr::Floor(a, b)
            | Expr::Pow(a, b)
            | Expr::Add(a, b)
            | Expr::Sub(a, b)
            | Expr::Mul(a, b)
            | Expr::Div(a, b) => {
                a.walk(f);
                b.walk(f);
            }
            Expr::Sum { lo, hi, body, .. } => {
                lo.walk(f);
                hi.walk(f);
                body.walk(f);
            }
        }
    }

    pub fn mentions_param(&self, name: &str) -> bool {
        let mut found = false;
        self.walk(&mut |e| {
            if matches!(e, Expr::Param(p) if p == name) {
                found = true;
            }
        });
        found
    }
}
