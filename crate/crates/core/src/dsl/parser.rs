//! Tokenizer and recursive-descent parser.
//!
//! ```text
//! identity := expr "==" expr
//! expr     := term (("+" | "-") term)*
//! term     := factor (("*" | "/") factor)*
//! factor   := "-" factor | atom ("^" factor)?
//! atom     := INT | "i" | "n" | "z" | IDENT | call | "(" expr ")"
//! call     := ("B" | "E") "(" expr "," expr ")" | ("BN" | "EN") "(" expr ")"
//!           | "binom" "(" expr "," expr ")" | "floor" "(" expr "," expr ")"
//!           | "sum" "(" IDENT "=" expr ".." expr "," expr ")"
//! ```
//!
//! `^` is right-associative and binds tighter than unary minus, so `-2^2`
//! is `-(2^2)` while `2^-1` is `2^(-1)`.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use super::ast::{Expr, IdentityExpr};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    /// Byte offset into the input.
    pub offset: usize,
    /// 1-based.
    pub line: usize,
    /// 1-based, counted in characters.
    pub column: usize,
    pub message: String,
    pub expected: Vec<String>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Func(Builtin),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    Assign,
    EqEq,
    DotDot,
    Eof,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Builtin {
    B,
    E,
    BN,
    EN,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("integer `{n}`"),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Func(b) => format!("`{}`", builtin_name(*b)),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Assign => "`=`".into(),
            Tok::EqEq => "`==`".into(),
            Tok::DotDot => "`..`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

fn builtin_name(b: Builtin) -> &'static str {
    match b {
        Builtin::B => "B",
        Builtin::E => "E",
        Builtin::BN => "BN",
        Builtin::EN => "EN",
    }
}

const KEYWORDS: [&str; 6] = ["i", "n", "z", "binom", "floor", "sum"];

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn tokens(src: &'a str) -> Result<Vec<(Tok, usize)>, ParseError> {
        let mut lx = Lexer { src, pos: 0 };
        let mut out = Vec::new();
        loop {
            let (tok, at) = lx.next()?;
            let done = tok == Tok::Eof;
            out.push((tok, at));
            if done {
                return Ok(out);
            }
        }
    }

    fn next(&mut self) -> Result<(Tok, usize), ParseError> {
        let bytes = self.src.as_bytes();
        while self.pos < bytes.len() && (bytes[self.pos] as char).is_ascii_whitespace() {
            self.pos += 1;
        }
        let start = self.pos;
        let Some(&c) = bytes.get(self.pos) else {
            return Ok((Tok::Eof, start));
        };
        let single = |t: Tok, this: &mut Self| {
            this.pos += 1;
            Ok((t, start))
        };
        match c {
            b'+' => single(Tok::Plus, self),
            b'-' => single(Tok::Minus, self),
            b'*' => single(Tok::Star, self),
            b'/' => single(Tok::Slash, self),
            b'^' => single(Tok::Caret, self),
            b'(' => single(Tok::LParen, self),
            b')' => single(Tok::RParen, self),
            b',' => single(Tok::Comma, self),
            b'=' => {
                if bytes.get(self.pos + 1) == Some(&b'=') {
                    self.pos += 2;
                    Ok((Tok::EqEq, start))
                } else {
                    single(Tok::Assign, self)
                }
            }
            b'.' => {
                if bytes.get(self.pos + 1) == Some(&b'.') {
                    self.pos += 2;
                    Ok((Tok::DotDot, start))
                } else {
                    Err(error_at(self.src, start, "stray `.`; ranges are written `lo..hi`", &["`..`"]))
                }
            }
            b'0'..=b'9' => {
                while self.pos < bytes.len() && bytes[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let n: BigInt = self.src[start..self.pos].parse().expect("ascii digits");
                Ok((Tok::Int(n), start))
            }
            b'a'..=b'z' | b'A'..=b'Z' => {
                while self.pos < bytes.len() && bytes[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let word = &self.src[start..self.pos];
                let tok = match word {
                    "B" => Tok::Func(Builtin::B),
                    "E" => Tok::Func(Builtin::E),
                    "BN" => Tok::Func(Builtin::BN),
                    "EN" => Tok::Func(Builtin::EN),
                    w if w.as_bytes()[0].is_ascii_lowercase() && !w.bytes().any(|b| b.is_ascii_uppercase()) => {
                        Tok::Ident(w.to_string())
                    }
                    w => {
                        return Err(error_at(
                            self.src,
                            start,
                            &format!("unknown name `{w}`"),
                            &["`B`", "`E`", "`BN`", "`EN`", "lowercase identifier"],
                        ))
                    }
                };
                Ok((tok, start))
            }
            _ => {
                let ch = self.src[start..].chars().next().expect("in bounds");
                Err(error_at(self.src, start, &format!("unexpected character `{ch}`"), &[]))
            }
        }
    }
}

fn error_at(src: &str, offset: usize, message: &str, expected: &[&str]) -> ParseError {
    let offset = offset.min(src.len());
    let before = &src[..offset];
    let line = before.matches('\n').count() + 1;
    let line_start = before.rfind('\n').map_or(0, |i| i + 1);
    let column = src[line_start..offset].chars().count() + 1;
    ParseError {
        offset,
        line,
        column,
        message: message.to_string(),
        expected: expected.iter().map(|s| s.to_string()).collect(),
    }
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<(Tok, usize)>,
    idx: usize,
    scopes: Vec<String>,
    params: &'a [&'a str],
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, params: &'a [&'a str]) -> Result<Self, ParseError> {
        Ok(Parser { src, toks: Lexer::tokens(src)?, idx: 0, scopes: Vec::new(), params })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.idx].0
    }

    fn offset(&self) -> usize {
        self.toks[self.idx].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.idx].0.clone();
        if self.idx + 1 < self.toks.len() {
            self.idx += 1;
        }
        t
    }

    fn fail<T>(&self, message: &str, expected: &[&str]) -> Result<T, ParseError> {
        Err(error_at(self.src, self.offset(), message, expected))
    }

    fn unexpected<T>(&self, expected: &[&str]) -> Result<T, ParseError> {
        self.fail(&format!("unexpected {}", self.peek().describe()), expected)
    }

    fn expect(&mut self, tok: Tok, label: &str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.unexpected(&[label])
        }
    }

    fn identity(&mut self) -> Result<IdentityExpr, ParseError> {
        let lhs = self.expr()?;
        self.expect(Tok::EqEq, "`==`")?;
        let rhs = self.expr()?;
        self.end()?;
        Ok(IdentityExpr { lhs, rhs })
    }

    fn end(&mut self) -> Result<(), ParseError> {
        if *self.peek() == Tok::Eof {
            Ok(())
        } else {
            self.unexpected(&["operator", "end of input"])
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
                }
                Tok::Slash => {
                    self.bump();
                    acc = Expr::Div(Box::new(acc), Box::new(self.factor()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let base = self.atom()?;
        if *self.peek() == Tok::Caret {
            self.bump();
            let exp = self.factor()?;
            return Ok(Expr::Pow(Box::new(base), Box::new(exp)));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        const ATOM: &[&str] = &["integer", "`i`", "`n`", "`z`", "identifier", "function call", "`(`"];
        let at = self.offset();
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(Expr::IntLit(n))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            Tok::Func(b) => {
                self.bump();
                self.expect(Tok::LParen, "`(`")?;
                let first = self.expr()?;
                let node = match b {
                    Builtin::B | Builtin::E => {
                        self.expect(Tok::Comma, "`,`")?;
                        let arg = self.expr()?;
                        let (index, arg) = (Box::new(first), Box::new(arg));
                        if b == Builtin::B {
                            Expr::BPoly { index, arg }
                        } else {
                            Expr::EPoly { index, arg }
                        }
                    }
                    Builtin::BN => Expr::BNum(Box::new(first)),
                    Builtin::EN => Expr::ENum(Box::new(first)),
                };
                self.expect(Tok::RParen, "`)`")?;
                Ok(node)
            }
            Tok::Ident(name) => {
                self.bump();
                match name.as_str() {
                    "i" => Ok(Expr::ImagUnit),
                    "n" => Ok(Expr::VarN),
                    "z" => Ok(Expr::VarZ),
                    "binom" | "floor" => {
                        self.expect(Tok::LParen, "`(`")?;
                        let a = self.expr()?;
                        self.expect(Tok::Comma, "`,`")?;
                        let b = self.expr()?;
                        self.expect(Tok::RParen, "`)`")?;
                        let (a, b) = (Box::new(a), Box::new(b));
                        Ok(if name == "binom" { Expr::Binom(a, b) } else { Expr::Floor(a, b) })
                    }
                    "sum" => self.sum(),
                    _ if self.scopes.iter().rev().any(|s| *s == name) => Ok(Expr::BoundVar(name)),
                    _ if self.params.contains(&name.as_str()) => Ok(Expr::Param(name)),
                    _ => Err(error_at(self.src, at, &format!("unbound identifier `{name}`"), &[])),
                }
            }
            _ => self.unexpected(ATOM),
        }
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        self.expect(Tok::LParen, "`(`")?;
        let at = self.offset();
        let Tok::Ident(var) = self.peek().clone() else {
            return self.unexpected(&["summation variable"]);
        };
        self.bump();
        if KEYWORDS.contains(&var.as_str()) || self.params.contains(&var.as_str()) {
            return Err(error_at(
                self.src,
                at,
                &format!("`{var}` is reserved and cannot be a summation variable"),
                &[],
            ));
        }
        self.expect(Tok::Assign, "`=`")?;
        let lo = self.expr()?;
        let dots = self.offset();
        self.expect(Tok::DotDot, "`..`")?;
        if matches!(self.peek(), Tok::Comma | Tok::RParen | Tok::Eof) {
            return Err(error_at(self.src, dots, "range is missing its upper bound", &["expression after `..`"]));
        }
        let hi = self.expr()?;
        self.expect(Tok::Comma, "`,`")?;
        self.scopes.push(var.clone());
        let body = self.expr();
        self.scopes.pop();
        let body = body?;
        self.expect(Tok::RParen, "`)`")?;
        Ok(Expr::Sum { var, lo: Box::new(lo), hi: Box::new(hi), body: Box::new(body) })
    }
}

/// Parses `lhs == rhs` with no free parameters.
pub fn parse_identity(text: &str) -> Result<IdentityExpr, ParseError> {
    parse_identity_with(text, &[])
}

/// Parses `lhs == rhs`; names in `params` are accepted as free parameters.
pub fn parse_identity_with(text: &str, params: &[&str]) -> Result<IdentityExpr, ParseError> {
    Parser::new(text, params)?.identity()
}

/// Parses a single expression.
pub fn parse_expr(text: &str) -> Result<Expr, ParseError> {
    parse_expr_with(text, &[])
}

pub fn parse_expr_with(text: &str, params: &[&str]) -> Result<Expr, ParseError> {
    let mut p = Parser::new(text, params)?;
    let e = p.expr()?;
    p.end()?;
    Ok(e)
}
