use bepoly::catalog::{catalog, Domain};
use bepoly::dsl::{eval_expr, parse_expr, parse_identity, parse_identity_with, Expr};
use bepoly::verify::{check_identity_with, verify, Status};
use num_bigint::BigInt;
use proptest::prelude::*;

const MALFORMED: &str = include_str!("data/malformed.txt");

fn malformed_cases() -> Vec<(char, usize, &'static str)> {
    MALFORMED
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let mut parts = l.splitn(3, '\t');
            let kind = parts.next().unwrap().chars().next().unwrap();
            let column = parts.next().unwrap().parse().unwrap();
            (kind, column, parts.next().unwrap())
        })
        .collect()
}

#[test]
fn malformed_corpus_is_rejected_with_positions() {
    let cases = malformed_cases();
    assert_eq!(cases.len(), 30);
    for (kind, column, text) in cases {
        let err = match kind {
            'i' => parse_identity(text).map(|_| ()).unwrap_err(),
            _ => parse_expr(text).map(|_| ()).unwrap_err(),
        };
        assert!(err.offset <= text.len(), "{text}: offset {}", err.offset);
        assert_eq!(err.line, 1, "{text}");
        assert_eq!(err.column, column, "{text}: {err}");
        assert_eq!(err.column, err.offset + 1, "{text}");
        assert!(!err.message.is_empty());
    }
}

#[test]
fn positions_on_later_lines() {
    let err = parse_identity("B(n, z)\n  == B(n,\n z").unwrap_err();
    assert_eq!((err.line, err.column), (3, 3));
    assert_eq!(err.offset, "B(n, z)\n  == B(n,\n z".len());
}

#[test]
fn catalog_strings_round_trip() {
    for e in catalog() {
        let params: Vec<&str> = e.param.into_iter().collect();
        let rendered = e.expr.to_string();
        let again = parse_identity_with(&rendered, &params).unwrap_or_else(|err| panic!("{}: {err}\n{rendered}", e.id));
        assert_eq!(again, e.expr, "{}", e.id);
        assert_eq!(again.to_string(), rendered, "{}", e.id);
    }
}

fn residue_of(d: Domain) -> Option<(i64, i64)> {
    match d {
        Domain::From(_) => None,
        Domain::Residue { modulus, residue, .. } => Some((residue, modulus)),
    }
}

#[test]
fn check_agrees_with_catalog_up_to_twelve() {
    for e in catalog() {
        let params: Vec<&str> = e.param.into_iter().collect();
        let report = check_identity_with(e.canonical, &params, e.domain.start(), 12, residue_of(e.domain)).unwrap();
        let admissible: Vec<i64> = (0..=12).filter(|&n| e.domain.contains(n)).collect();
        assert_eq!(report.n_tested, admissible, "{}", e.id);
        for n in admissible {
            let catalog_verdict = verify(e, n).unwrap().passed();
            let dsl_verdict = report.status_at(n) == Some(Status::Pass);
            assert_eq!(catalog_verdict, dsl_verdict, "{} at n = {n}", e.id);
        }
    }
}

fn int(n: i64) -> Expr {
    Expr::IntLit(BigInt::from(n))
}

fn leaf() -> impl Strategy<Value = Expr> {
    prop_oneof![(0i64..30).prop_map(int), Just(Expr::VarN), Just(Expr::VarZ), Just(Expr::ImagUnit)]
}

fn expr() -> impl Strategy<Value = Expr> {
    leaf().prop_recursive(4, 32, 3, |inner| {
        let b = |e: Expr| Box::new(e);
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Add(b(x), b(y))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Sub(b(x), b(y))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Mul(b(x), b(y))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Div(b(x), b(y))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Pow(b(x), b(y))),
            inner.clone().prop_map(move |x| Expr::Neg(b(x))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::BPoly { index: b(x), arg: b(y) }),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Binom(b(x), b(y))),
            inner.clone().prop_map(move |x| Expr::ENum(b(x))),
            (0i64..3, 0i64..4, inner).prop_map(move |(lo, hi, body)| Expr::Sum {
                var: "k".into(),
                lo: b(int(lo)),
                hi: b(int(hi)),
                body: b(Expr::Mul(b(Expr::BoundVar("k".into())), b(body))),
            }),
        ]
    })
}

/// Arithmetic-only trees that always evaluate.
fn safe_expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![(0i64..6).prop_map(int), Just(Expr::VarN), Just(Expr::VarZ), Just(Expr::ImagUnit)];
    leaf.prop_recursive(4, 24, 2, |inner| {
        let b = |e: Expr| Box::new(e);
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Add(b(x), b(y))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Sub(b(x), b(y))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Mul(b(x), b(y))),
            inner.clone().prop_map(move |x| Expr::Neg(b(x))),
            (inner.clone(), 0i64..3).prop_map(move |(x, k)| Expr::Pow(b(x), b(int(k)))),
            (0i64..6, inner)
                .prop_map(move |(k, x)| Expr::BPoly { index: b(int(k)), arg: b(Expr::Add(b(Expr::VarZ), b(x))) }),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn render_then_parse_is_identity(e in expr()) {
        let text = e.to_string();
        let back = parse_expr(&text).map_err(|err| TestCaseError::fail(format!("{text}: {err}")))?;
        prop_assert_eq!(back, e);
    }

    #[test]
    fn rendering_preserves_value(e in safe_expr(), n in 0i64..5) {
        let text = e.to_string();
        let back = parse_expr(&text).unwrap();
        // the argument z + x is affine only when x is constant
        match (eval_expr(&e, n), eval_expr(&back, n)) {
            (Ok(a), Ok(b)) => prop_assert_eq!(a, b),
            (Err(a), Err(b)) => prop_assert_eq!(a, b),
            (a, b) => prop_assert!(false, "{:?} vs {:?}", a, b),
        }
    }
}
