//! Identity language: parsing, rendering and exact evaluation.

mod ast;
mod eval;
mod parser;
mod render;

pub use ast::{Expr, IdentityExpr};
pub use eval::{eval_expr, eval_in, eval_with, Bindings, EvalError};
pub use parser::{parse_expr, parse_expr_with, parse_identity, parse_identity_with, ParseError};
