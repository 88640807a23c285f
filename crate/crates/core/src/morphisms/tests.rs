use proptest::prelude::*;

use super::*;
use crate::exprio::parse_weyl;
use crate::scalars::{rat, Ring};

fn sym() -> SymbolicAlgebra {
    SymbolicAlgebra::symbolic(1)
}

fn w(a: &SymbolicAlgebra, s: &str) -> WeylElement<QLaurent> {
    parse_weyl(s, a).unwrap()
}

#[test]
fn identity_and_shift_by_f() {
    let a = sym();
    let id = Endomorphism::identity(&a);
    assert!(id.validate().is_valid());
    assert_eq!(id.apply(&a.f_element()).unwrap(), a.f_element());

    let phi = Endomorphism::new(&a, vec![a.x(1)], vec![w(&a, "d1 + f")]).unwrap();
    assert!(phi.validate().is_valid());
    assert!(matches!(phi.apply(&a.x(1)), Err(AlgebraError::Unvalidated)));
    let phi = phi.validated().unwrap();
    // (d + f) x = 1 + t x d + t x f
    let expected = &w(&a, "1 + t*x1*d1") + &(&a.x(1) * &a.f_element()).scale(a.param());
    assert_eq!(phi.apply(&w(&a, "d1*x1")).unwrap(), expected);
    assert_eq!(phi.apply(&w(&a, "d1*x1 - t*x1*d1")).unwrap(), a.one());
}

#[test]
fn classical_shift_is_not_quantum() {
    let a = sym();
    let e = Endomorphism::new(&a, vec![a.x(1)], vec![w(&a, "d1 + x1")]).unwrap();
    let v = e.validate();
    assert_eq!(v.violations.len(), 1);
    // (d + x) x - t x (d + x) - 1 = (1 - t) x^2
    assert_eq!(v.violations[0].residual, w(&a, "(1 - t)*x1^2"));
    assert!(e.clone().validated().is_err());
    assert!(e.specialize_at_one().is_validated());
    let l3 = RootAlgebra::root_of_unity(1, 3).unwrap();
    assert!(!e.specialize(&l3).is_validated());
}

#[test]
fn composition() {
    let a = sym();
    let half = w(&a, "1/2");
    let phi = lift_phi(&a, &half).unwrap();
    let id = Endomorphism::identity(&a);
    assert_eq!(Endomorphism::compose(&id, &phi).unwrap(), phi);
    assert_eq!(Endomorphism::compose(&phi, &id).unwrap(), phi);
    let twice = Endomorphism::compose(&phi, &phi).unwrap();
    let f = a.f_element();
    let expected = &(&a.d(1) + &f.scale(&a.ring().constant(rat(1, 2)))) + &phi.apply(&f).unwrap().scale(&a.ring().constant(rat(1, 2)));
    assert_eq!(twice.images_d()[0], expected);
    assert_eq!(twice.images_x()[0], a.x(1));
    assert!(twice.validate().is_valid());
}

#[test]
fn lifts_validate_and_specialize() {
    let a = sym();
    let c = WeylAlgebra::classical(1);
    let phi1 = lift_phi(&a, &a.one()).unwrap();
    assert_eq!(phi1.images_d()[0], w(&a, "d1 + f"));
    let at_one = phi1.specialize_at_one();
    assert_eq!(at_one.images_d()[0], &c.d(1) + &c.one());

    for (lam, m) in [("1", 0), ("1/2", 1), ("2", 2)] {
        let f = w(&a, &format!("{lam}*x1^{m}"));
        let e = lift_phi(&a, &f).unwrap();
        assert_eq!(e.images_d()[0], &a.d(1) + &(&f * &a.f_element()));
        let one = e.specialize_at_one();
        assert_eq!(one.images_d()[0], &c.d(1) + &crate::exprio::parse_weyl(&format!("{lam}*x1^{m}"), &c).unwrap());
    }
    let psi = lift_psi(&a, &a.d(1)).unwrap();
    assert_eq!(psi.images_x()[0], w(&a, "x1 + f*d1"));
    assert_eq!(psi.specialize_at_one().images_x()[0], &c.x(1) + &c.d(1));

    assert!(lift_phi(&a, &a.d(1)).is_err());
    assert!(lift_psi(&a, &a.x(1)).is_err());
    assert!(lift_phi(&SymbolicAlgebra::symbolic(2), &SymbolicAlgebra::symbolic(2).one()).is_err());
}

#[test]
fn lifts_of_the_identity_differ() {
    let a = sym();
    let id = lift_phi(&a, &a.zero()).unwrap();
    let other = lift_phi(&a, &w(&a, "t - 1")).unwrap();
    assert_ne!(id, other);
    assert_eq!(id.specialize_at_one(), other.specialize_at_one());
    assert_eq!(other.specialize_at_one(), Endomorphism::identity(&WeylAlgebra::classical(1)));
}

#[test]
fn characters() {
    let l2 = RootAlgebra::root_of_unity(1, 2).unwrap();
    let f2 = l2.ring().clone();
    let e = one_dim_rep(&l2, &[f2.one()]).unwrap();
    assert_eq!(e.images_d()[0], l2.scalar(f2.from_rational(&rat(1, 2))));

    let l3 = RootAlgebra::root_of_unity(1, 3).unwrap();
    let f3 = l3.ring().clone();
    let e = one_dim_rep(&l3, &[f3.zeta()]).unwrap();
    assert!(e.is_validated());
    // not injective: d - (1-q)^-1 a^-1 goes to zero
    let kernel = &l3.d(1) - &e.images_d()[0];
    assert!(!kernel.is_zero());
    assert!(e.apply(&kernel).unwrap().is_zero());

    assert!(one_dim_rep(&l3, &[f3.zero()]).is_err());
    let c = WeylAlgebra::classical(1);
    assert!(matches!(one_dim_rep(&c, &[rat(1, 1)]), Err(AlgebraError::Unsupported(_))));
}

#[test]
fn degree_guard() {
    let a = sym();
    let e = lift_phi(&a, &a.x(1)).unwrap().with_max_degree(6);
    assert!(e.apply(&a.d(1).pow(2)).is_ok());
    assert!(matches!(e.apply(&a.d(1).pow(3)), Err(AlgebraError::DegreeBound { degree: 9, bound: 6 })));
}

#[test]
fn descriptor_round_trip() {
    let a = sym();
    let e = lift_phi(&a, &a.x(1)).unwrap();
    let d = EndoDescriptor::from_symbolic(&e);
    let json = serde_json::to_string(&d).unwrap();
    assert_eq!(json, r#"{"n":1,"param":"t","images_x":["x1"],"images_d":["d1 + x1 + (-1 + t)*x1^2*d1"]}"#);
    let back: EndoDescriptor = serde_json::from_str(&json).unwrap();
    match back.to_endomorphism().unwrap() {
        AnyEndomorphism::Symbolic(b) => assert_eq!(b, e),
        AnyEndomorphism::Root(_) => panic!("expected a symbolic map"),
    }
    let root: EndoDescriptor =
        serde_json::from_str(r#"{"n":1,"param":{"l":3},"images_x":["x1"],"images_d":["d1 + q*x1^2*f"]}"#).unwrap();
    match root.to_endomorphism().unwrap() {
        AnyEndomorphism::Root(r) => assert!(r.validate().is_valid()),
        AnyEndomorphism::Symbolic(_) => panic!("expected a root map"),
    }
    let bad: EndoDescriptor = serde_json::from_str(r#"{"n":1,"param":"s","images_x":["x1"],"images_d":["d1"]}"#).unwrap();
    assert!(bad.to_endomorphism().is_err());
}

fn arb_lift() -> impl Strategy<Value = (bool, Vec<(u32, i64, i64)>)> {
    (any::<bool>(), prop::collection::vec((0u32..=2, -2i64..=2, 1i64..=2), 1..=2))
}

fn make(a: &SymbolicAlgebra, (phi, terms): &(bool, Vec<(u32, i64, i64)>)) -> Endomorphism<QLaurent> {
    let ring = a.ring();
    let poly = terms.iter().fold(a.zero(), |acc, &(m, p, q)| {
        let g = if *phi { a.x(1) } else { a.d(1) };
        &acc + &g.pow(m).scale(&ring.constant(rat(p, q)))
    });
    if *phi { lift_phi(a, &poly) } else { lift_psi(a, &poly) }.unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn composition_is_associative(e1 in arb_lift(), e2 in arb_lift(), e3 in arb_lift()) {
        let a = sym();
        let (p, q, r) = (make(&a, &e1), make(&a, &e2), make(&a, &e3));
        let left = Endomorphism::compose(&Endomorphism::compose(&p, &q).unwrap(), &r).unwrap();
        let right = Endomorphism::compose(&p, &Endomorphism::compose(&q, &r).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn specialization_commutes_with_application(e in arb_lift(), l in 2u32..=5,
                                                 terms in prop::collection::vec((0u32..=2, 0u32..=2, -2i64..=2), 1..=3)) {
        let a = sym();
        let e = make(&a, &e);
        let x = a.from_terms(terms.iter().map(|&(i, j, c)| (crate::weyl::Monomial::new(&[i], &[j]), a.ring().constant(rat(c, 1)))));
        let target = RootAlgebra::root_of_unity(1, l).unwrap();
        let es = e.specialize(&target);
        prop_assert!(es.is_validated());
        prop_assert_eq!(
            specialize_element(&e.apply(&x).unwrap(), &target),
            es.apply(&specialize_element(&x, &target)).unwrap()
        );
    }
}
