use proptest::prelude::*;

use super::*;
use crate::scalars::{rat, Rational, RationalField};
use crate::weyl::{specialize_element, SymbolicAlgebra};

fn alg(n: usize, l: u32) -> RootAlgebra {
    RootAlgebra::root_of_unity(n, l).unwrap()
}

fn cp(field: &CyclotomicField, n: usize, terms: &[(&[u32], &[u32], i64)]) -> CenterPoly<CyclotomicField> {
    CenterPoly::from_terms(
        field.clone(),
        n,
        terms.iter().map(|(s, r, c)| (Monomial::new(s, r), field.from_int(*c))).collect::<Vec<_>>(),
    )
}

#[test]
fn centrality_examples() {
    for l in [2, 3, 5] {
        let a = alg(1, l);
        assert!(is_central(&a.x(1).pow(l)));
        assert!(is_central(&a.d(1).pow(l)));
        assert!(is_central(&a.f_element().pow(l)));
    }
    assert!(!is_central(&alg(1, 3).x(1)));
}

#[test]
fn theta_examples() {
    let a = alg(1, 3);
    let field = a.ring().clone();
    let r = CenterPoly::r(field.clone(), 1, 1).unwrap();
    let s = CenterPoly::s(field.clone(), 1, 1).unwrap();
    assert_eq!(theta_root(&r, &a).unwrap(), a.d(1).pow(3));
    assert_eq!(theta_root(&(&s * &r), &a).unwrap(), &a.x(1).pow(3) * &a.d(1).pow(3));
    assert_eq!(theta_root(&CenterPoly::one(field, 1), &a).unwrap(), a.one());
}

#[test]
fn theta_inverse_examples() {
    let a = alg(1, 2);
    let field = a.ring().clone();
    assert_eq!(theta_inverse(&a.d(1).pow(2), 2).unwrap(), CenterPoly::r(field.clone(), 1, 1).unwrap());
    let f2 = theta_inverse(&a.f_element().pow(2), 2).unwrap();
    assert_eq!(f2, cp(&field, 1, &[(&[0], &[0], 1), (&[1], &[1], -4)]));
    assert_eq!(f2.to_text(), "1 - 4*s1*r1");
    assert!(matches!(theta_inverse(&a.x(1), 2), Err(AlgebraError::NotCentral(_))));
}

#[test]
fn closed_form_examples() {
    let a = alg(1, 2);
    let field = a.ring().clone();
    let expected = a.from_terms([(Monomial::one(1), field.one()), (Monomial::new(&[2], &[2]), field.from_int(-4))]);
    assert_eq!(f_power_root(&a), expected);

    let a2 = alg(2, 2);
    assert_eq!(f_power_root(&a2), a2.f_element().pow(2));

    let a3 = alg(1, 3);
    let f3 = a3.ring().clone();
    let c = f3.neg(&f3.pow(&f3.sub(&f3.one(), &f3.zeta()), 3));
    let expected = a3.from_terms([(Monomial::one(1), f3.one()), (Monomial::new(&[3], &[3]), c)]);
    assert_eq!(f_power_root(&a3), expected);
}

#[test]
fn lemma_fm_small_levels() {
    let sym = SymbolicAlgebra::symbolic(2);
    for l in 2..=6 {
        for n in 1..=2 {
            let a = alg(n, l);
            let f = if n == 1 {
                specialize_element(&SymbolicAlgebra::symbolic(1).f_element(), &a)
            } else {
                specialize_element(&sym.f_element(), &a)
            };
            assert_eq!(f.pow(l), f_power_root(&a), "l = {l}, n = {n}");
        }
    }
}

#[test]
fn azumaya_examples() {
    let field = CyclotomicField::new(2);
    let pt = |a: Rational, b: Rational| MaxIdealPoint::Exact {
        field: field.clone(),
        a: vec![field.from_rational(&a)],
        b: vec![field.from_rational(&b)],
    };
    assert!(azumaya_test(&pt(rat(1, 1), rat(1, 1)), 2).unwrap());
    assert!(!azumaya_test(&pt(rat(1, 1), rat(1, 4)), 2).unwrap());
    assert!(azumaya_test(&pt(rat(0, 1), rat(0, 1)), 2).unwrap());
    assert!(azumaya_test(&pt(rat(0, 1), rat(0, 1)), 3).is_err());

    let num = |a: f64, b: f64| MaxIdealPoint::Numeric { a: vec![Complex64::new(a, 0.0)], b: vec![Complex64::new(b, 0.0)] };
    assert!(!azumaya_test(&num(1.0, 0.25), 2).unwrap());
    assert!(azumaya_test(&num(1.0, 0.2500001), 2).unwrap());

    let f3 = CyclotomicField::new(3);
    let boundary = MaxIdealPoint::Exact { field: f3.clone(), a: vec![f3.one()], b: vec![azumaya_threshold(&f3)] };
    assert!(!azumaya_test(&boundary, 3).unwrap());
}

#[test]
fn standard_center_polys() {
    let ring = RationalField;
    let r = CenterPoly::r(ring, 2, 1).unwrap();
    let s = CenterPoly::s(ring, 2, 2).unwrap();
    assert_eq!((&r + &s).to_text(), "r1 + s2");
    assert!(CenterPoly::r(ring, 2, 3).is_err());
    let p = &(&r * &r) * &s;
    assert_eq!(p.partial_r(1), (&r * &s).scale(&rat(2, 1)));
    assert_eq!(p.partial_s(2), &r * &r);
    assert!(p.partial_s(1).is_zero());
    assert_eq!(p.eval(&[rat(5, 1), rat(3, 1)], &[rat(2, 1), rat(7, 1)]), rat(12, 1));
}

fn arb_center(n: usize) -> impl Strategy<Value = Vec<(Vec<u32>, Vec<u32>, i64)>> {
    prop::collection::vec((prop::collection::vec(0u32..=2, n), prop::collection::vec(0u32..=2, n), -3i64..=3), 0..=4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn theta_is_a_homomorphism(p in arb_center(2), q in arb_center(2), l in 2u32..=4) {
        let a = alg(2, l);
        let field = a.ring().clone();
        let build = |v: &Vec<(Vec<u32>, Vec<u32>, i64)>| CenterPoly::from_terms(
            field.clone(), 2, v.iter().map(|(s, r, c)| (Monomial::new(s, r), field.from_int(*c))).collect::<Vec<_>>());
        let (p, q) = (build(&p), build(&q));
        let tp = theta_root(&p, &a).unwrap();
        let tq = theta_root(&q, &a).unwrap();
        prop_assert_eq!(theta_root(&(&p * &q), &a).unwrap(), &tp * &tq);
        prop_assert!(is_central(&tp));
        prop_assert_eq!(theta_inverse(&tp, l).unwrap(), p);
    }

    #[test]
    fn azumaya_matches_bad_locus(a in -4i64..=4, b in prop::sample::select(vec![rat(0, 1), rat(1, 4), rat(1, 2), rat(1, 1), rat(-1, 4)])) {
        let l = 2;
        let field = CyclotomicField::new(l);
        let bad = theta_inverse(&f_power_root(&alg(1, l)), l).unwrap();
        let (av, bv) = (field.from_int(a), field.from_rational(&b));
        let pt = MaxIdealPoint::Exact { field: field.clone(), a: vec![av.clone()], b: vec![bv.clone()] };
        prop_assert_eq!(azumaya_test(&pt, l).unwrap(), !field.is_zero(&bad.eval(&[av], &[bv])));
    }
}
