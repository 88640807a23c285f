use proptest::prelude::*;

use super::*;
use crate::center::theta_root;
use crate::exprio::parse_center;
use crate::scalars::embedded_abs;
use crate::weyl::Monomial;

fn straight_expected(ctx: &PoissonContext, i: usize) -> WeylElement<CyclotomicField> {
    let alg = ctx.algebra();
    let l = ctx.level();
    let n = ctx.n();
    let mut e = vec![0; n];
    e[i - 1] = l;
    alg.from_terms([(Monomial::one(n), ctx.field().one()), (Monomial::new(&e, &e), ctx.straight_coefficient())])
}

#[test]
fn lambda_at_two_is_one() {
    let ctx = PoissonContext::new(1, 2).unwrap();
    assert!(ctx.field().is_one(ctx.lambda()));
}

#[test]
fn straight_at_level_two() {
    let ctx = PoissonContext::new(1, 2).unwrap();
    let a = ctx.algebra();
    let b = ctx.bracket(&a.d(1).pow(2), &a.x(1).pow(2)).unwrap();
    let expected = a.from_terms([(Monomial::one(1), ctx.field().one()), (Monomial::new(&[2], &[2]), ctx.field().from_int(-4))]);
    assert_eq!(b, expected);
    assert_eq!(ctx.bracket_reference(&a.d(1).pow(2), &a.x(1).pow(2)).unwrap(), expected);
}

#[test]
fn straight_small_levels() {
    for l in 2..=7 {
        for n in 1..=2 {
            let ctx = PoissonContext::new(n, l).unwrap();
            let a = ctx.algebra();
            for i in 1..=n {
                let b = ctx.bracket(&a.d(i).pow(l), &a.x(i).pow(l)).unwrap();
                assert_eq!(b, straight_expected(&ctx, i), "l = {l}, n = {n}, i = {i}");
            }
        }
        let ctx = PoissonContext::new(1, l).unwrap();
        assert!(!ctx.field().is_zero(&ctx.straight_coefficient()));
    }
}

#[test]
fn bracket_rejects_non_central() {
    let ctx = PoissonContext::new(1, 3).unwrap();
    let a = ctx.algebra();
    assert!(matches!(ctx.bracket(&a.x(1), &a.d(1).pow(3)), Err(AlgebraError::NotCentral(_))));
}

#[test]
fn standard_bracket_examples() {
    let p = |s: &str| parse_center(s, 2).unwrap();
    assert_eq!(standard_bracket(&p("r1"), &p("s1")).unwrap(), p("1"));
    assert!(standard_bracket(&p("r1"), &p("r2")).unwrap().is_zero());
    assert_eq!(standard_bracket(&p("r1*s1"), &p("s1")).unwrap(), p("s1"));
    assert_eq!(standard_bracket(&p("s1"), &p("r1")).unwrap(), p("-1"));
}

#[test]
fn transported_examples() {
    let ctx = PoissonContext::new(2, 2).unwrap();
    let field = ctx.field().clone();
    let p = |s: &str| center_to_field(&parse_center(s, 2).unwrap(), &field);
    assert_eq!(ctx.transported_bracket(&p("r1"), &p("s1")).unwrap(), p("1 - 4*s1*r1"));
    assert!(ctx.transported_bracket(&p("r1"), &p("r1")).unwrap().is_zero());
    assert!(ctx.transported_bracket(&p("r1"), &p("s2")).unwrap().is_zero());
}

#[test]
fn coefficient_magnitude_decreases() {
    let mags: Vec<f64> = [5, 7, 11, 13]
        .iter()
        .map(|&l| {
            let ctx = PoissonContext::new(1, l).unwrap();
            embedded_abs(ctx.field(), &ctx.straight_coefficient())
        })
        .collect();
    assert!(mags.windows(2).all(|w| w[1] < w[0]), "{mags:?}");
}

fn arb_center(n: usize) -> impl Strategy<Value = Vec<(Vec<u32>, Vec<u32>, i64, i64)>> {
    let mono = (prop::collection::vec(0u32..=2, n), prop::collection::vec(0u32..=2, n))
        .prop_filter("degree <= 2", |(s, r)| s.iter().chain(r).sum::<u32>() <= 2);
    prop::collection::vec((mono, -3i64..=3, 0i64..=2), 1..=3)
        .prop_map(|v| v.into_iter().map(|((s, r), c, k)| (s, r, c, k)).collect())
}

fn build(ctx: &PoissonContext, raw: &[(Vec<u32>, Vec<u32>, i64, i64)]) -> CenterPoly<CyclotomicField> {
    let f = ctx.field();
    CenterPoly::from_terms(
        f.clone(),
        ctx.n(),
        raw.iter().map(|(s, r, c, k)| (Monomial::new(s, r), f.mul(&f.from_int(*c), &f.zeta_pow(*k)))).collect::<Vec<_>>(),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn poisson_axioms(l in prop::sample::select(vec![2u32, 3]), n in 1usize..=2,
                      a in arb_center(2), b in arb_center(2), c in arb_center(2)) {
        let ctx = PoissonContext::new(n, l).unwrap();
        let trim = |v: &Vec<(Vec<u32>, Vec<u32>, i64, i64)>| -> Vec<_> {
            v.iter().map(|(s, r, c, k)| (s[..n].to_vec(), r[..n].to_vec(), *c, *k)).collect()
        };
        let (p, q, r) = (build(&ctx, &trim(&a)), build(&ctx, &trim(&b)), build(&ctx, &trim(&c)));
        let br = |x: &CenterPoly<CyclotomicField>, y: &CenterPoly<CyclotomicField>| ctx.transported_bracket(x, y).unwrap();
        prop_assert_eq!(br(&p, &q), -&br(&q, &p));
        prop_assert_eq!(br(&p, &(&q * &r)), &(&br(&p, &q) * &r) + &(&q * &br(&p, &r)));
        let jac = &(&br(&p, &br(&q, &r)) + &br(&q, &br(&r, &p))) + &br(&r, &br(&p, &q));
        prop_assert!(jac.is_zero());
        let out = ctx.bracket(&theta_root(&p, ctx.algebra()).unwrap(), &theta_root(&q, ctx.algebra()).unwrap()).unwrap();
        prop_assert!(is_central(&out));
    }

    #[test]
    fn routes_agree_and_lifts_do_not_matter(l in 2u32..=4, a in arb_center(1), b in arb_center(1),
                                            junk in prop::collection::vec((0u32..=3, 0u32..=3, -2i64..=2, -1i64..=2), 1..=3)) {
        let ctx = PoissonContext::new(1, l).unwrap();
        let alg = ctx.algebra();
        let p = theta_root(&build(&ctx, &a), alg).unwrap();
        let q = theta_root(&build(&ctx, &b), alg).unwrap();
        let expected = ctx.bracket(&p, &q).unwrap();
        prop_assert_eq!(ctx.bracket_reference(&p, &q).unwrap(), expected.clone());

        let lifts = ctx.lift_algebra();
        let ring = lifts.ring().clone();
        let f = ctx.field();
        let t_minus_q = ring.from_terms([(1, f.one()), (0, f.neg(&f.zeta()))]);
        let j = lifts.from_terms(junk.iter().map(|(al, be, c, e)| {
            (Monomial::new(&[*al], &[*be]), ring.monomial(*e, f.from_int(*c)))
        }));
        let j = j.scale(&t_minus_q);
        let p_alt = &ctx.lift(&p) + &j;
        prop_assert_eq!(ctx.project(&p_alt), p.clone());
        prop_assert_eq!(ctx.bracket_of_lifts(&p_alt, &ctx.lift(&q)).unwrap(), expected.clone());
        prop_assert_eq!(ctx.bracket_of_lifts(&ctx.lift(&q), &p_alt).unwrap(), -&expected);
    }
}

#[test]
fn rational_center_embedding() {
    let field = CyclotomicField::new(3);
    let p = center_to_field(&parse_center("1/2*r1 - s1", 1).unwrap(), &field);
    assert_eq!(p.coeff(&[0], &[1]), field.from_rational(&crate::scalars::rat(1, 2)));
}
