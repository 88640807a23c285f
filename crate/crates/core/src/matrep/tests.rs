use proptest::prelude::*;

use super::*;
use crate::center::{azumaya_threshold, numeric_threshold};
use crate::scalars::rat;

fn q2() -> CyclotomicField {
    CyclotomicField::new(2)
}

fn r(f: &CyclotomicField, n: i64, d: i64) -> Cyclo {
    f.from_rational(&rat(n, d))
}

#[test]
fn level_two_point() {
    let f = q2();
    let rep = build_rep_exact(&f, 1, &r(&f, 1, 1), &r(&f, 1, 1), None).unwrap();
    assert_eq!(rep.x.entries, vec![r(&f, 1, 1), r(&f, 0, 1), r(&f, 0, 1), r(&f, -1, 1)]);
    assert_eq!((rep.y.get(0, 0), rep.y.get(1, 1)), (&r(&f, 1, 2), &r(&f, -1, 2)));
    // Y^2 = I by hand: diag (1/4 + c, c + 1/4) with c = 3/4
    assert_eq!(rep.y.get(1, 0), &r(&f, 3, 4));
    assert!(rep.check().holds);
    assert_eq!(rep.burnside_span_dim(), 4);
    assert_eq!(rep.eigenvalues_distinct(), Some(true));
    assert!(rep.x_powers_independent());

    let bad = build_rep_exact(&f, 1, &r(&f, 1, 1), &r(&f, 1, 4), None).unwrap();
    assert!(bad.check().holds);
    assert!(bad.burnside_span_dim() < 4);
}

#[test]
fn truncated_polynomials() {
    let f = CyclotomicField::new(3);
    let rep = build_rep_exact(&f, 1, &f.zero(), &f.zero(), None).unwrap();
    assert_eq!(rep.kind, RepKind::Nilpotent);
    assert!(rep.check().holds);
    let q = f.zeta();
    // Y(x^2) = [2]_q x = (1 + q) x
    assert_eq!(rep.y.get(1, 2), &f.add(&f.one(), &q));
    assert_eq!(rep.y.get(0, 1), &f.one());
    assert_eq!(rep.burnside_span_dim(), 9);
    assert_eq!(rep.eigenvalues_distinct(), None);
}

#[test]
fn level_two_grid() {
    let f = q2();
    let vals = [r(&f, 0, 1), r(&f, 1, 4), r(&f, 1, 1)];
    let pts: Vec<_> = vals.iter().flat_map(|a| vals.iter().map(move |b| (a.clone(), b.clone()))).collect();
    let rows = cross_check_exact(&f, &pts).unwrap();
    assert_eq!(rows.len(), 9);
    assert!(rows.iter().all(|row| row.agree), "{rows:?}");
    assert_eq!(rows.iter().filter(|row| !row.azumaya).count(), 2);
}

#[test]
fn level_three_boundary() {
    let f = CyclotomicField::new(3);
    let rows = cross_check_exact(&f, &[(f.one(), azumaya_threshold(&f))]).unwrap();
    assert!(!rows[0].azumaya && rows[0].span_dim < 9 && rows[0].agree);
}

#[test]
fn supplied_roots_and_missing_roots() {
    let f = CyclotomicField::new(3);
    let lam = f.add(&f.one(), &f.zeta_pow(1).clone());
    let lam = f.add(&lam, &f.one());
    let a = f.pow(&lam, 3);
    let rep = build_rep_exact(&f, 1, &a, &f.one(), Some(lam)).unwrap();
    assert!(rep.check().holds);
    assert_eq!(rep.burnside_span_dim(), 9);
    assert!(matches!(build_rep_exact(&f, 1, &f.from_int(2), &f.one(), None), Err(AlgebraError::NoExactRoot(_))));
    assert!(matches!(build_rep_exact(&f, 1, &f.from_int(8), &f.one(), Some(f.one())), Err(AlgebraError::NoExactRoot(_))));
    assert!(build_rep_exact(&f, 3, &f.one(), &f.one(), None).is_err());
}

#[test]
fn other_primitive_root() {
    let f = CyclotomicField::new(5);
    let rep = build_rep_exact(&f, 2, &f.from_int(32), &f.from_int(3), None).unwrap();
    assert!(rep.check().holds);
    assert_eq!(rep.burnside_span_dim(), 25);
    let only_b = build_rep_exact(&f, 1, &f.zero(), &f.one(), None).unwrap();
    assert!(matches!(only_b.kind, RepKind::DiagonalY { .. }));
    assert!(only_b.check().holds);
}

#[test]
fn numeric_level_five() {
    let pts = [(Complex64::new(0.3, 0.1), Complex64::new(-1.2, 2.0)), (Complex64::new(2.0, 0.0), Complex64::new(0.0, 0.5))];
    let rows = cross_check_numeric(5, &pts).unwrap();
    assert!(rows.iter().all(|row| row.azumaya && row.span_dim == 25 && row.agree));
}

#[test]
fn json_form() {
    let f = q2();
    let v = build_rep_exact(&f, 1, &f.one(), &f.one(), None).unwrap().to_json();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["X"]["exact"][1][1], "-1");
    assert_eq!(v["relations_hold"], true);
}

fn complex_in(r: f64) -> impl Strategy<Value = Complex64> {
    (-r..r, -r..r).prop_map(|(a, b)| Complex64::new(a, b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn numeric_agreement(l in prop::sample::select(vec![3u32, 5]), a in complex_in(2.0), b in complex_in(2.0), boundary in any::<bool>()) {
        prop_assume!(a.norm() > 0.1);
        let b = if boundary { numeric_threshold(l) / a } else { b };
        let rep = build_rep_numeric(l, 1, a, b).unwrap();
        let check = rep.check();
        prop_assert!(check.holds, "{:?}", check.max_residuals);
        prop_assert_eq!(rep.eigenvalues_distinct(), Some(true));
        prop_assert!(rep.x_powers_independent());
        let rows = cross_check_numeric(l, &[(a, b)]).unwrap();
        prop_assert!(rows[0].agree, "{:?}", rows[0]);
        if boundary {
            prop_assert!(!rows[0].azumaya);
        }
    }

    #[test]
    fn exact_cubes(c in 1i64..=4, d in 1i64..=3, sign in any::<bool>(), bn in -5i64..=5) {
        let f = CyclotomicField::new(3);
        let root = f.from_rational(&rat(if sign { c } else { -c }, d));
        let a = f.pow(&root, 3);
        let b = f.from_int(bn);
        let rep = build_rep_exact(&f, 1, &a, &b, None).unwrap();
        prop_assert!(rep.check().holds);
        let pt = MaxIdealPoint::Exact { field: f.clone(), a: vec![a], b: vec![b] };
        prop_assert_eq!(azumaya_test(&pt, 3).unwrap(), rep.burnside_span_dim() == 9);
    }
}
