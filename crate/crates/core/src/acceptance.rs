//! The acceptance suite: eleven end-to-end checks, each with a time budget.
//! Shared by the `sweep` subcommand and the acceptance integration test.

use std::time::{Duration, Instant};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::center::{f_power_closed_form, is_central, theta_root, CenterPoly};
use crate::hatmap::{
    check_center_preservation, constant_trajectory, hat, hat_endo, trajectory_converges, transport_limit, PrimeSchedule,
    Tolerances, Verdict,
};
use crate::matrep::{cross_check_exact, cross_check_numeric};
use crate::morphisms::{lift_phi, lift_psi, one_dim_rep, Endomorphism};
use crate::poisson::PoissonContext;
use crate::scalars::{rat, Cyclo, CyclotomicField, QLaurent, RationalField, Ring};
use crate::weyl::{act, divisible_by_f, specialize_element, Monomial, RootAlgebra, SymbolicAlgebra, WeylAlgebra, WeylElement, XPoly};

type Check = fn() -> Result<String, String>;

/// One entry of the manifest.
pub struct Criterion {
    pub id: u8,
    pub title: &'static str,
    pub budget: Duration,
    check: Check,
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub budget: Duration,
}

impl Outcome {
    /// `criterion 3 PASS straight bracket (1.20 s of 60 s): ...`
    pub fn line(&self) -> String {
        format!(
            "criterion {:>2} {} {} ({:.2} s of {} s): {}",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.title,
            self.elapsed.as_secs_f64(),
            self.budget.as_secs(),
            self.detail
        )
    }
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

/// The fixed manifest, in output order.
pub fn manifest() -> Vec<Criterion> {
    let c = |id, title, budget, check| Criterion { id, title, budget, check };
    vec![
        c(1, "defining relations and PBW", secs(10), relations_and_pbw as Check),
        c(2, "power of f at roots of unity", secs(30), f_power),
        c(3, "straight bracket", secs(60), straight_bracket),
        c(4, "Poisson axioms", secs(120), poisson_axioms),
        c(5, "transported bracket limit", secs(60), transport),
        c(6, "power of the shifted derivative", secs(120), shifted_power),
        c(7, "limit maps", secs(180), hat_limits),
        c(8, "primes are needed", secs(60), prime_necessity),
        c(9, "Azumaya locus vs Burnside span", secs(60), azumaya_vs_burnside),
        c(10, "center preservation", secs(120), center_preservation),
        c(11, "divisibility by f", secs(30), divisibility),
    ]
}

impl Criterion {
    pub fn run(&self) -> Outcome {
        let start = Instant::now();
        let result = std::panic::catch_unwind(self.check).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let (mut passed, mut detail) = match result {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        if passed && elapsed > self.budget {
            passed = false;
            detail = format!("over budget; {detail}");
        }
        Outcome { id: self.id, title: self.title, passed, detail, elapsed, budget: self.budget }
    }
}

/// Runs the whole manifest sequentially so each timing is its own.
pub fn run_all() -> Vec<Outcome> {
    manifest().iter().map(Criterion::run).collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond { Ok(()) } else { Err(msg()) }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_symbolic(rng: &mut ChaCha8Rng, alg: &SymbolicAlgebra, max_degree: u32, max_terms: usize) -> WeylElement<QLaurent> {
    let n = alg.n();
    let ring = alg.ring();
    let count = rng.gen_range(1..=max_terms);
    let terms: Vec<_> = (0..count)
        .map(|_| {
            let mut exps = vec![0u32; 2 * n];
            for _ in 0..rng.gen_range(0..=max_degree) {
                exps[rng.gen_range(0..2 * n)] += 1;
            }
            let low = rng.gen_range(-1..=1);
            let c = ring.from_terms([(low, rat(rng.gen_range(-3..=3), 1)), (low + 1, rat(rng.gen_range(-3..=3), 1))]);
            (Monomial::new(&exps[..n], &exps[n..]), c)
        })
        .collect();
    alg.from_terms(terms)
}

fn check_relations<R: Ring>(alg: &WeylAlgebra<R>) -> Result<(), String> {
    let n = alg.n();
    let e = |r: Result<WeylElement<R>, crate::AlgebraError>| r.map_err(|e| e.to_string());
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                ensure(e(alg.q_commutator(&alg.d(i), &alg.x(i)))? == alg.one(), || format!("[d{i}, x{i}]_t != 1"))?;
            } else {
                ensure(e(alg.commutator(&alg.d(i), &alg.x(j)))?.is_zero(), || format!("[d{i}, x{j}] != 0"))?;
            }
            ensure(e(alg.commutator(&alg.x(i), &alg.x(j)))?.is_zero(), || format!("[x{i}, x{j}] != 0"))?;
            ensure(e(alg.commutator(&alg.d(i), &alg.d(j)))?.is_zero(), || format!("[d{i}, d{j}] != 0"))?;
        }
    }
    Ok(())
}

fn relations_and_pbw() -> Result<String, String> {
    let mut rng = rng(1);
    let mut cases = 0;
    for n in 1..=2 {
        let alg = SymbolicAlgebra::symbolic(n);
        check_relations(&alg)?;
        let ring = alg.ring().clone();
        for _ in 0..40 {
            let (a, b, c) =
                (random_symbolic(&mut rng, &alg, 4, 4), random_symbolic(&mut rng, &alg, 4, 4), random_symbolic(&mut rng, &alg, 4, 4));
            ensure(&(&a * &b) * &c == &a * &(&b * &c), || format!("associativity fails for {a}, {b}, {c}"))?;
            ensure(&a * &(&b + &c) == &(&a * &b) + &(&a * &c), || "left distributivity fails".into())?;
            ensure(&(&a + &b) * &c == &(&a * &c) + &(&b * &c), || "right distributivity fails".into())?;
            ensure(&alg.one() * &a == a && &a * &alg.one() == a, || "unit fails".into())?;
            let v: XPoly<_> = (0..3)
                .map(|_| ((0..n).map(|_| rng.gen_range(0..=3)).collect::<Vec<u32>>(), ring.constant(rat(rng.gen_range(1..=4), 1))))
                .collect();
            ensure(act(&(&a * &b), &v) == act(&a, &act(&b, &v)), || format!("the action disagrees with the product of {a} and {b}"))?;
            cases += 1;
        }
    }
    for l in [2, 3, 5] {
        check_relations(&RootAlgebra::root_of_unity(2, l).map_err(|e| e.to_string())?)?;
    }
    Ok(format!("{cases} random triples, relations at t and at l = 2, 3, 5"))
}

fn f_power() -> Result<String, String> {
    let jobs: Vec<(u32, u32, usize)> = (2..=12u32)
        .flat_map(|l| (1..l).filter(move |k| num_integer::gcd(*k, l) == 1).flat_map(move |k| [(l, k, 1), (l, k, 2)]))
        .collect();
    let failures: Vec<String> = jobs
        .par_iter()
        .filter_map(|&(l, k, n)| {
            let field = CyclotomicField::new(l);
            let q = field.zeta_pow(k as i64);
            let alg = WeylAlgebra::new(n, field, q).ok()?;
            (alg.f_element().pow(l) != f_power_closed_form(&alg, l)).then(|| format!("l = {l}, q = zeta^{k}, n = {n}"))
        })
        .collect();
    ensure(failures.is_empty(), || format!("closed form fails at {failures:?}"))?;
    Ok(format!("{} (l, q, n) cases", jobs.len()))
}

/// `l (q - 1) / [l-1]_q!` evaluated directly.
fn straight_oracle(field: &CyclotomicField) -> Cyclo {
    let q = field.zeta();
    let l = field.level();
    let num = field.mul(&field.from_int(l as i64), &field.sub(&q, &field.one()));
    let mut fact = field.one();
    for k in 1..l {
        let mut qint = field.zero();
        for j in 0..k {
            qint = field.add(&qint, &field.zeta_pow(j as i64));
        }
        fact = field.mul(&fact, &qint);
    }
    field.mul(&num, &field.try_inv(&fact).expect("[l-1]! is a unit"))
}

fn straight_bracket() -> Result<String, String> {
    let jobs: Vec<(u32, usize, usize)> = (2..=12u32).flat_map(|l| [(l, 1, 1), (l, 2, 1), (l, 2, 2)]).collect();
    let failures: Vec<String> = jobs
        .par_iter()
        .filter_map(|&(l, n, i)| {
            let ctx = PoissonContext::new(n, l).ok()?;
            let alg = ctx.algebra();
            let field = ctx.field();
            let mut e = vec![0; n];
            e[i - 1] = l;
            let expected = alg.from_terms([(Monomial::one(n), field.one()), (Monomial::new(&e, &e), straight_oracle(field))]);
            match ctx.bracket(&alg.d(i).pow(l), &alg.x(i).pow(l)) {
                Ok(b) if b == expected => None,
                Ok(b) => Some(format!("l = {l}, n = {n}, i = {i}: got {b}")),
                Err(err) => Some(format!("l = {l}: {err}")),
            }
        })
        .collect();
    ensure(failures.is_empty(), || failures.join("; "))?;
    let ctx = PoissonContext::new(1, 2).map_err(|e| e.to_string())?;
    let alg = ctx.algebra();
    let b = ctx.bracket(&alg.d(1).pow(2), &alg.x(1).pow(2)).map_err(|e| e.to_string())?;
    ensure(b.to_text() == "1 - 4*x1^2*d1^2", || format!("l = 2 gives {b}"))?;
    Ok(format!("{} cases, l = 2 gives {b}", jobs.len()))
}

fn random_center(rng: &mut ChaCha8Rng, field: &CyclotomicField, n: usize) -> CenterPoly<CyclotomicField> {
    let count = rng.gen_range(1..=3);
    let terms: Vec<_> = (0..count)
        .map(|_| {
            let mut exps = vec![0u32; 2 * n];
            for _ in 0..rng.gen_range(1..=2) {
                exps[rng.gen_range(0..2 * n)] += 1;
            }
            let c = field.mul(&field.from_int(rng.gen_range(1..=3)), &field.zeta_pow(rng.gen_range(0..3)));
            (Monomial::new(&exps[..n], &exps[n..]), c)
        })
        .collect();
    CenterPoly::from_terms(field.clone(), n, terms)
}

/// Checks the axioms on one random triple; returns whether `{p, q}` is nonzero.
fn poisson_triple(l: u32, n: usize, seed: u64) -> Result<bool, String> {
    let mut rng = rng(seed);
    let ctx = PoissonContext::new(n, l).map_err(|e| e.to_string())?;
    let field = ctx.field().clone();
    let (p, q, r) = (random_center(&mut rng, &field, n), random_center(&mut rng, &field, n), random_center(&mut rng, &field, n));
    let br = |a: &CenterPoly<CyclotomicField>, b: &CenterPoly<CyclotomicField>| ctx.transported_bracket(a, b).map_err(|e| e.to_string());
    let tag = format!("l = {l}, n = {n}, seed {seed}");
    ensure(br(&p, &q)? == -&br(&q, &p)?, || format!("antisymmetry fails ({tag})"))?;
    ensure(br(&p, &(&q * &r))? == &(&br(&p, &q)? * &r) + &(&q * &br(&p, &r)?), || format!("Leibniz fails ({tag})"))?;
    let jac = &(&br(&p, &br(&q, &r)?)? + &br(&q, &br(&r, &p)?)?) + &br(&r, &br(&p, &q)?)?;
    ensure(jac.is_zero(), || format!("Jacobi fails ({tag})"))?;
    let alg = ctx.algebra();
    let (tp, tq) = (theta_root(&p, alg).map_err(|e| e.to_string())?, theta_root(&q, alg).map_err(|e| e.to_string())?);
    let out = ctx.bracket(&tp, &tq).map_err(|e| e.to_string())?;
    ensure(is_central(&out), || format!("bracket not central ({tag})"))?;
    // another lift of p: add (t - zeta) J
    let lifts = ctx.lift_algebra();
    let ring = lifts.ring().clone();
    let t_minus_q = ring.from_terms([(1, field.one()), (0, field.neg(&field.zeta()))]);
    let junk = lifts.from_terms((0..2).map(|_| {
        let e: Vec<u32> = (0..2 * n).map(|_| rng.gen_range(0..=3)).collect();
        (Monomial::new(&e[..n], &e[n..]), ring.monomial(rng.gen_range(-1..=2), field.from_int(rng.gen_range(-2..=2))))
    }));
    let p_alt = &ctx.lift(&tp) + &junk.scale(&t_minus_q);
    let other = ctx.bracket_of_lifts(&p_alt, &ctx.lift(&tq)).map_err(|e| e.to_string())?;
    ensure(other == out, || format!("bracket depends on the lift ({tag})"))?;
    Ok(!out.is_zero())
}

fn poisson_axioms() -> Result<String, String> {
    let jobs: Vec<(u32, usize, u64)> =
        [2u32, 3, 5].iter().flat_map(|&l| (0..40u64).map(move |s| (l, 1 + (s % 2) as usize, 1000 * l as u64 + s))).collect();
    let results: Vec<Result<bool, String>> = jobs.par_iter().map(|&(l, n, s)| poisson_triple(l, n, s)).collect();
    let failures: Vec<&String> = results.iter().filter_map(|r| r.as_ref().err()).collect();
    ensure(failures.is_empty(), || failures.iter().map(|s| s.as_str()).collect::<Vec<_>>().join("; "))?;
    let nonzero = results.iter().filter(|r| matches!(r, Ok(true))).count();
    ensure(nonzero * 2 >= jobs.len(), || format!("only {nonzero} nonzero brackets"))?;
    Ok(format!("{} random triples at l = 2, 3, 5, {nonzero} with a nonzero bracket", jobs.len()))
}

/// `l (q - 1) / [l-1]_q!` in floating point at `q = exp(2 pi i / l)`.
fn straight_numeric(l: u32) -> Complex64 {
    let q = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / l as f64);
    let mut fact = Complex64::new(1.0, 0.0);
    for k in 1..l {
        fact *= (0..k).map(|j| q.powu(j)).sum::<Complex64>();
    }
    (q - 1.0) * l as f64 / fact
}

fn transport() -> Result<String, String> {
    let schedule = PrimeSchedule::new(vec![11, 13, 17, 19, 23, 29, 31]).map_err(|e| e.to_string())?;
    let r1 = CenterPoly::r(RationalField, 1, 1).map_err(|e| e.to_string())?;
    let s1 = CenterPoly::s(RationalField, 1, 1).map_err(|e| e.to_string())?;
    let report = transport_limit(&r1, &s1, &schedule).map_err(|e| e.to_string())?;
    ensure(report.is_converged(), || format!("verdict {:?}", report.verdict))?;
    ensure(report.limit_text().as_deref() == Some("1"), || format!("limit {:?}", report.limit_text()))?;
    ensure(report.matches_expected() == Some(true), || "limit differs from the standard bracket".into())?;
    let sr = Monomial::new(&[1], &[1]);
    let mags: Vec<f64> = report.trajectory(&sr).iter().map(|z| z.map_or(f64::NAN, |z| z.norm())).collect();
    let oracle = straight_numeric(11).norm();
    ensure((mags[0] - oracle).abs() < 1e-9 * oracle.max(1.0) && (mags[0] - 1.8e-3).abs() < 0.1e-3, || {
        format!("sr-coefficient at l = 11 is {:.3e}, direct evaluation gives {oracle:.3e}", mags[0])
    })?;
    ensure(mags.windows(2).all(|w| w[1] < w[0]), || format!("magnitudes not decreasing: {mags:?}"))?;
    let last = report.primes.last().expect("nonempty schedule");
    let deviation = last
        .coeffs
        .iter()
        .map(|(m, _, z)| if m.is_one() { (z - 1.0).norm() } else { z.norm() })
        .fold(0.0, f64::max);
    ensure(deviation < 1e-8, || format!("deviation {deviation:.3e} at l = 31"))?;
    Ok(format!("|c_11| = {:.3e}, deviation at l = 31 is {deviation:.1e}", mags[0]))
}

fn shifted_power() -> Result<String, String> {
    let mut jobs = Vec::new();
    for l in [3u32, 5, 7, 11, 13] {
        for m in 0..=2u32 {
            if l > m + 1 {
                for lam in [(1, 1), (1, 2), (2, 1)] {
                    jobs.push((l, m, lam));
                }
            }
        }
    }
    let failures: Vec<String> = jobs
        .par_iter()
        .filter_map(|&(l, m, (ln, ld))| {
            let alg = RootAlgebra::root_of_unity(1, l).ok()?;
            let field = alg.ring().clone();
            let lam = field.from_rational(&rat(ln, ld));
            let f = alg.f_element();
            let shift = &alg.d(1) + &(&alg.x(1).pow(m) * &f).scale(&lam);
            let lhs = shift.pow(l);
            let rhs = &alg.d(1).pow(l) + &(&alg.x(1).pow(m * l) * &f.pow(l)).scale(&field.pow(&lam, l as u64));
            (lhs != rhs).then(|| format!("l = {l}, m = {m}, lambda = {ln}/{ld}"))
        })
        .collect();
    ensure(failures.is_empty(), || failures.join("; "))?;
    Ok(format!("{} (l, m, lambda) cases", jobs.len()))
}

fn phi_of(lam: (i64, i64), m: u32) -> Result<Endomorphism<QLaurent>, String> {
    let a = SymbolicAlgebra::symbolic(1);
    let f = a.x(1).pow(m).scale(&a.ring().constant(rat(lam.0, lam.1)));
    lift_phi(&a, &f).map_err(|e| e.to_string())
}

fn psi_of(lam: (i64, i64), m: u32) -> Result<Endomorphism<QLaurent>, String> {
    let a = SymbolicAlgebra::symbolic(1);
    let g = a.d(1).pow(m).scale(&a.ring().constant(rat(lam.0, lam.1)));
    lift_psi(&a, &g).map_err(|e| e.to_string())
}

fn center(src: &str) -> Result<CenterPoly<RationalField>, String> {
    crate::exprio::parse_center(src, 1).map_err(|e| e.to_string())
}

fn hat_limits() -> Result<String, String> {
    let schedule = PrimeSchedule::default();
    for m in 0..=2u32 {
        let rep = hat_endo(&phi_of((1, 1), m)?, &schedule);
        ensure(rep.is_converged(), || format!("m = {m} did not converge"))?;
        let (s_img, r_img) = rep.induced_rational().ok_or_else(|| format!("m = {m}: limit is not rational"))?;
        let want_r = center(&format!("r1 + s1^{m}"))?;
        ensure(r_img[0] == want_r && s_img[0] == center("s1")?, || format!("m = {m}: r -> {}, s -> {}", r_img[0], s_img[0]))?;
        let integral = r_img[0].terms().chain(s_img[0].terms()).all(|(_, c)| c.is_integer());
        ensure(integral, || format!("m = {m}: non-integral coefficients"))?;
    }
    let half = phi_of((1, 2), 0)?;
    let twice = Endomorphism::compose(&half, &half).map_err(|e| e.to_string())?;
    let rep = hat_endo(&twice, &schedule);
    let (s_img, r_img) = rep.induced_rational().ok_or("the doubled half-shift did not converge")?;
    ensure(r_img[0] == center("r1")? && s_img[0] == center("s1")?, || format!("doubled half-shift gives r -> {}", r_img[0]))?;
    let rep = hat_endo(&phi_of((2, 1), 0)?, &schedule);
    ensure(!rep.is_converged() && matches!(rep.image_r(1).verdict, Verdict::Diverged { .. }), || {
        format!("lambda = 2 gave {:?}", rep.image_r(1).verdict)
    })?;
    Ok("r -> r + s^m for m = 0, 1, 2; doubled half-shift -> identity; lambda = 2 diverges".into())
}

fn prime_necessity() -> Result<String, String> {
    let e = phi_of((1, 1), 1)?;
    let r = center("r1")?;
    let tol = Tolerances::default();
    let collect = |levels: &[u32]| -> Result<Vec<Complex64>, String> {
        constant_trajectory(&e, &r, levels)
            .into_iter()
            .zip(levels)
            .map(|(z, l)| z.ok_or_else(|| format!("no constant coefficient at l = {l}")))
            .collect()
    };
    let primes = collect(&[3, 5, 7, 11, 13])?;
    let evens = collect(&[4, 6, 8, 10, 12])?;
    ensure(trajectory_converges(&primes, &tol), || format!("prime trajectory does not converge: {primes:?}"))?;
    ensure(!trajectory_converges(&evens, &tol), || format!("even trajectory converges: {evens:?}"))?;
    let report = hat(&e, &r, &PrimeSchedule::default());
    ensure(report.is_converged(), || "prime hat does not converge".into())?;
    let mags: Vec<String> = evens.iter().map(|z| format!("{:.3}", z.norm())).collect();
    Ok(format!("even-level |constant| = [{}], prime-level constant = 0", mags.join(", ")))
}

fn azumaya_vs_burnside() -> Result<String, String> {
    let f2 = CyclotomicField::new(2);
    let vals = [f2.zero(), f2.from_rational(&rat(1, 4)), f2.one()];
    let grid: Vec<_> = vals.iter().flat_map(|a| vals.iter().map(move |b| (a.clone(), b.clone()))).collect();
    let rows = cross_check_exact(&f2, &grid).map_err(|e| e.to_string())?;
    ensure(rows.iter().all(|r| r.agree), || format!("grid disagreement: {rows:?}"))?;
    let boundary = rows.iter().filter(|r| !r.azumaya).count();

    let mut rng = rng(9);
    let mut count = 0;
    let mut on_locus = 0;
    for l in [3u32, 5] {
        let bad = crate::center::numeric_threshold(l);
        let mut pts = Vec::new();
        for k in 0..12 {
            let a = Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
            let a = if a.norm() < 0.1 { a + 1.0 } else { a };
            let b = if k % 3 == 0 { bad / a } else { Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)) };
            pts.push((a, b));
        }
        let rows = cross_check_numeric(l, &pts).map_err(|e| e.to_string())?;
        ensure(rows.iter().all(|r| r.agree), || format!("l = {l} disagreement: {:?}", rows.iter().find(|r| !r.agree)))?;
        count += rows.len();
        on_locus += rows.iter().filter(|r| !r.azumaya).count();
    }
    // exact boundary at l = 3
    let f3 = CyclotomicField::new(3);
    let row = cross_check_exact(&f3, &[(f3.one(), crate::center::azumaya_threshold(&f3))]).map_err(|e| e.to_string())?;
    ensure(row[0].agree && !row[0].azumaya, || "exact l = 3 boundary disagrees".into())?;
    Ok(format!("9 grid points ({boundary} on the bad locus), {count} numeric points ({on_locus} on the bad locus)"))
}

fn center_preservation() -> Result<String, String> {
    let a = SymbolicAlgebra::symbolic(1);
    let mut maps = Vec::new();
    for m in 0..=2u32 {
        for lam in [(1, 1), (1, 2), (2, 1), (-1, 1)] {
            maps.push((format!("phi {}/{} x^{m}", lam.0, lam.1), phi_of(lam, m)?));
            maps.push((format!("psi {}/{} d^{m}", lam.0, lam.1), psi_of(lam, m)?));
        }
    }
    let mixed_f = crate::exprio::parse_weyl("1 + x1 - 1/2*x1^2", &a).map_err(|e| e.to_string())?;
    let mixed_g = crate::exprio::parse_weyl("2 - d1 + 3*d1^2", &a).map_err(|e| e.to_string())?;
    maps.push(("phi 1 + x - x^2/2".into(), lift_phi(&a, &mixed_f).map_err(|e| e.to_string())?));
    maps.push(("psi 2 - d + 3 d^2".into(), lift_psi(&a, &mixed_g).map_err(|e| e.to_string())?));
    let jobs: Vec<(usize, u32)> = (0..maps.len()).flat_map(|i| [3u32, 5, 7, 11].map(|l| (i, l))).collect();
    let failures: Vec<String> = jobs
        .par_iter()
        .filter(|&&(i, l)| !check_center_preservation(&maps[i].1, l))
        .map(|&(i, l)| format!("{} at l = {l}", maps[i].0))
        .collect();
    ensure(failures.is_empty(), || failures.join("; "))?;
    Ok(format!("{} lifts at l = 3, 5, 7, 11", maps.len()))
}

/// A character value of `a` at `q = zeta_3`; characters kill `f`, so a
/// nonzero value shows `a` is not in `(f)`.
fn character_witness(a: &WeylElement<QLaurent>) -> bool {
    let target = RootAlgebra::root_of_unity(1, 3).expect("l = 3");
    let field = target.ring().clone();
    let sa = specialize_element(a, &target);
    [field.one(), field.from_int(2), field.zeta(), field.from_int(-3)].iter().any(|v| {
        one_dim_rep(&target, std::slice::from_ref(v))
            .and_then(|chi| chi.apply(&sa))
            .map(|img| !img.is_zero())
            .unwrap_or(false)
    })
}

fn divisibility() -> Result<String, String> {
    let alg = SymbolicAlgebra::symbolic(1);
    let f = alg.f_element();
    let mut rng = rng(11);
    let mut tested = 0;
    let mut draws = 0;
    while tested < 50 {
        draws += 1;
        ensure(draws < 1000, || "could not draw enough f-free elements".into())?;
        let a = random_symbolic(&mut rng, &alg, 3, 4);
        if !character_witness(&a) {
            continue;
        }
        let e = |r: Result<bool, crate::AlgebraError>| r.map_err(|e| e.to_string());
        ensure(!e(divisible_by_f(&a, 1))?, || format!("{a} reported divisible"))?;
        ensure(e(divisible_by_f(&(&f * &a), 1))?, || format!("f*({a}) reported not divisible"))?;
        ensure(e(divisible_by_f(&(&a * &f), 1))?, || format!("({a})*f reported not divisible"))?;
        tested += 1;
    }
    Ok(format!("{tested} f-free elements ({draws} draws)"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn manifest_is_ordered() {
        let ids: Vec<u8> = manifest().iter().map(|c| c.id).collect();
        assert_eq!(ids, (1..=11).collect::<Vec<_>>());
    }

    #[test]
    fn straight_oracles_agree() {
        for l in [3, 5, 11] {
            let field = CyclotomicField::new(l);
            let exact = field.embed(&straight_oracle(&field));
            assert!((exact - straight_numeric(l)).norm() < 1e-9);
            // equals -(1 - q)^l
            let q = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / l as f64);
            assert!((exact + (1.0 - q).powu(l)).norm() < 1e-9);
        }
    }

    #[test]
    fn witness_sees_generators() {
        let alg = SymbolicAlgebra::symbolic(1);
        assert!(character_witness(&alg.x(1)));
        assert!(!character_witness(&alg.f_element()));
    }
}
