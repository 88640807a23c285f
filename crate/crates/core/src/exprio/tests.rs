use num_complex::Complex64;
use proptest::prelude::*;

use super::*;
use crate::scalars::{qint, rat, LaurentPoly, QLaurent};
use crate::weyl::{Monomial, RootAlgebra, SymbolicAlgebra};

fn sym(n: usize) -> SymbolicAlgebra {
    SymbolicAlgebra::symbolic(n)
}

#[test]
fn weyl_examples() {
    let a = sym(1);
    assert_eq!(parse_weyl("d1*x1 - t*x1*d1", &a).unwrap(), a.one());
    assert_eq!(parse_weyl("d1*x1 \u{2212} t*x1*d1", &a).unwrap(), a.one());
    assert_eq!(parse_weyl("f", &a).unwrap(), a.f_element());
    assert_eq!(parse_weyl("1 - (1 - t)*x1*d1", &a).unwrap(), a.f_element());
    let b = sym(2);
    let m = parse_weyl("x1^2*d2", &b).unwrap();
    assert_eq!(m, b.monomial(Monomial::new(&[2, 0], &[0, 1]), b.ring().one()));
}

#[test]
fn printer_examples() {
    let a = sym(1);
    assert_eq!(print_weyl(&parse_weyl("d1*x1", &a).unwrap()), "1 + t*x1*d1");
    assert_eq!(print_weyl(&a.zero()), "0");
    let two = a.monomial(Monomial::new(&[1], &[0]), qint(2));
    assert_eq!(print_weyl(&two), "(1 + t)*x1");
    assert_eq!(print_weyl(&a.f_element()), "1 + (-1 + t)*x1*d1");
}

#[test]
fn precedence() {
    let a = sym(1);
    assert_eq!(parse_weyl("-x1^2", &a).unwrap(), -&a.x(1).pow(2));
    assert_eq!(parse_weyl("2*x1 + 3", &a).unwrap(), parse_weyl("3 + x1*2", &a).unwrap());
    assert_eq!(parse_weyl("x1 - x1 - x1", &a).unwrap(), -&a.x(1));
    assert_eq!(parse_weyl("(d1 + x1)^2", &a).unwrap(), (&a.d(1) + &a.x(1)).pow(2));
    assert_eq!(parse_weyl("t^-1*t", &a).unwrap(), a.one());
    assert_eq!(parse_weyl("t^(-2)", &a).unwrap(), parse_weyl("t^-1*t^-1", &a).unwrap());
    assert_ne!(parse_weyl("d1*x1", &a).unwrap(), parse_weyl("x1*d1", &a).unwrap());
}

#[test]
fn errors_are_positioned() {
    let a = sym(1);
    let err = |s: &str| parse_weyl(s, &a).unwrap_err();
    assert!(matches!(err("x1 $ d1").kind, ParseErrorKind::Lexical(_)));
    assert_eq!(err("x1 $ d1").pos, 3);
    assert!(matches!(err("x1 d1").kind, ParseErrorKind::Syntax(_)));
    assert_eq!(err("x1 d1").pos, 3);
    assert!(matches!(err("y1").kind, ParseErrorKind::UnknownIdentifier(_)));
    assert!(matches!(err("x2").kind, ParseErrorKind::IndexOutOfRange { .. }));
    assert!(matches!(err("f^-1").kind, ParseErrorKind::NegativePower(_)));
    assert!(matches!(err("x1^-1").kind, ParseErrorKind::NegativePower(_)));
    assert!(matches!(err("0.5*x1").kind, ParseErrorKind::NotAllowed(_)));
    assert!(matches!(err("i*x1").kind, ParseErrorKind::NotAllowed(_)));
    assert!(matches!(err("r1").kind, ParseErrorKind::NotAllowed(_)));
    assert!(matches!(err("x1/2").kind, ParseErrorKind::Lexical(_)));
    assert!(matches!(err("1/0").kind, ParseErrorKind::Lexical(_)));
    assert!(matches!(err("(x1").kind, ParseErrorKind::Syntax(_)));
    assert!(matches!(err("").kind, ParseErrorKind::Syntax(_)));
    assert!(matches!(err("x1^").kind, ParseErrorKind::Syntax(_)));
    assert!(err("x1 d1").to_string().contains("column 4"));
}

#[test]
fn numeric_context() {
    let q = Complex64::from_polar(1.0, 0.4);
    let a = WeylAlgebra::numeric(1, q).unwrap();
    let e = parse_weyl("(0.5 + 2*i)*x1 + 1e-3", &a).unwrap();
    let back = parse_weyl(&print_weyl(&e), &a).unwrap();
    assert_eq!(e, back);
    assert_eq!(parse_weyl("d1*x1 - q*x1*d1", &a).unwrap(), a.one());
}

#[test]
fn root_context() {
    let a = RootAlgebra::root_of_unity(1, 3).unwrap();
    assert!(parse_weyl("1 + q + q^2", &a).unwrap().is_zero());
    assert_eq!(parse_weyl("r1", &a).unwrap(), a.d(1).pow(3));
    assert_eq!(parse_weyl("s1*r1", &a).unwrap(), &a.x(1).pow(3) * &a.d(1).pow(3));
    let e = parse_weyl("(2 - q)*x1*d1^2 - 3/4*q^2*x1", &a).unwrap();
    assert_eq!(parse_weyl(&print_weyl(&e), &a).unwrap(), e);
}

#[test]
fn center_examples() {
    let p = parse_center("r1 + s1^2", 1).unwrap();
    let r = CenterPoly::r(RationalField, 1, 1).unwrap();
    let s = CenterPoly::s(RationalField, 1, 1).unwrap();
    assert_eq!(p, &r + &(&s * &s));
    assert!(parse_center("r1*s1 - s1*r1", 1).unwrap().is_zero());
    let p = parse_center("3/2*s2", 2).unwrap();
    assert_eq!(p.coeff(&[0, 1], &[0, 0]), rat(3, 2));
    assert_eq!(p.num_terms(), 1);
    assert!(parse_center("x1", 1).is_err());
    assert!(parse_center("t", 1).is_err());
    assert!(matches!(parse_center("r3", 2).unwrap_err().kind, ParseErrorKind::IndexOutOfRange { .. }));
    let text = parse_center("1 - 4*s1*r1 + r1^2*s2", 2).unwrap().to_text();
    assert_eq!(text, "1 - 4*s1*r1 + s2*r1^2");
    assert_eq!(parse_center(&text, 2).unwrap().to_text(), text);
}

#[test]
fn scalars() {
    assert_eq!(rational("-3/4").unwrap(), rat(-3, 4));
    assert_eq!(rational("1/2^2").unwrap(), rat(1, 4));
    assert_eq!(rational("2^-3").unwrap(), rat(1, 8));
    assert!(rational("r1").is_err());
    let field = crate::scalars::CyclotomicField::new(4);
    assert_eq!(parse_scalar("q^2", field.clone()).unwrap(), field.from_int(-1));
}

fn lp(low: i64, coeffs: &[(i64, i64)]) -> LaurentPoly<Rational> {
    QLaurent::default().from_terms(coeffs.iter().enumerate().map(|(k, &(a, b))| (low + k as i64, rat(a, b))))
}

fn arb_terms(n: usize) -> impl Strategy<Value = Vec<(Vec<u32>, Vec<u32>, i64, Vec<(i64, i64)>)>> {
    prop::collection::vec(
        (
            prop::collection::vec(0u32..=3, n),
            prop::collection::vec(0u32..=3, n),
            -2i64..=2,
            prop::collection::vec((-5i64..=5, 1i64..=4), 1..=3),
        ),
        0..=5,
    )
}

const VOCAB: &[&str] = &[
    "x1", "d1", "x2", "d3", "f", "f1", "t", "q", "r1", "s1", "i", "y", "1", "23", "3/4", "0.5", "+", "-", "\u{2212}", "*",
    "^", "^-", "(", ")", "/", "2", " ", "$", "1e-3", "7/0",
];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn symbolic_round_trip(raw in arb_terms(2)) {
        let a = sym(2);
        let e = a.from_terms(raw.iter().map(|(al, be, low, c)| (Monomial::new(al, be), lp(*low, c))));
        let text = print_weyl(&e);
        prop_assert_eq!(parse_weyl(&text, &a).unwrap(), e);
    }

    #[test]
    fn root_round_trip(raw in arb_terms(1), l in 2u32..=7) {
        let a = RootAlgebra::root_of_unity(1, l).unwrap();
        let field = a.ring().clone();
        let e = a.from_terms(raw.iter().map(|(al, be, low, c)| (Monomial::new(al, be), field.specialize(&lp(*low, c)))));
        prop_assert_eq!(parse_weyl(&print_weyl(&e), &a).unwrap(), e);
    }

    #[test]
    fn center_round_trip(raw in arb_terms(2)) {
        let p = CenterPoly::from_terms(
            RationalField, 2,
            raw.iter().map(|(s, r, _, c)| (Monomial::new(s, r), rat(c[0].0, c[0].1))).collect::<Vec<_>>(),
        );
        prop_assert_eq!(parse_center(&print_center(&p), 2).unwrap(), p);
    }

    #[test]
    fn parser_is_total(toks in prop::collection::vec(prop::sample::select(VOCAB), 0..14)) {
        let src: String = toks.concat();
        let a = sym(2);
        if let Err(e) = parse_weyl(&src, &a) {
            prop_assert!(e.pos <= src.chars().count());
        }
        let _ = parse_center(&src, 2);
    }
}
