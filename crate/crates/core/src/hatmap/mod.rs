//! The limit map: push a polynomial through `Theta_l`, a specialized
//! endomorphism and `Theta_l^-1` at each prime of a schedule, embed the
//! coefficients in `C` and look for a limit.

mod report;

pub use report::{substitute, ConvergenceReport, EndoReport, LimitCoeff, LimitTerm, PrimeEntry, Tolerances, Verdict};

use std::collections::BTreeSet;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::center::{is_central, theta, theta_inverse, CenterPoly};
use crate::error::AlgebraError;
use crate::morphisms::Endomorphism;
use crate::poisson::{center_to_field, standard_bracket, PoissonContext};
use crate::scalars::{CyclotomicField, QLaurent, RationalField};
use crate::weyl::{Monomial, RootAlgebra};

/// Ascending primes at which the limit is sampled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeSchedule {
    primes: Vec<u32>,
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

impl Default for PrimeSchedule {
    fn default() -> Self {
        Self::up_to(31)
    }
}

impl PrimeSchedule {
    /// Fails unless the entries are strictly ascending primes `>= 3`.
    pub fn new(primes: Vec<u32>) -> Result<Self, AlgebraError> {
        if let Some(bad) = primes.iter().find(|&&p| p < 3 || !is_prime(p)) {
            return Err(AlgebraError::Unsupported(format!("{bad} is not an odd prime")));
        }
        if primes.windows(2).any(|w| w[0] >= w[1]) {
            return Err(AlgebraError::Unsupported("primes must be strictly ascending".into()));
        }
        if primes.is_empty() {
            return Err(AlgebraError::Unsupported("empty prime schedule".into()));
        }
        Ok(Self { primes })
    }

    /// All odd primes up to `max`.
    pub fn up_to(max: u32) -> Self {
        Self { primes: (3..=max).filter(|&p| is_prime(p)).collect() }
    }

    pub fn primes(&self) -> &[u32] {
        &self.primes
    }
}

/// `Theta_l^-1 e_q Theta_l (p)` at `q = zeta_l`. Failures (the specialized
/// map is not an endomorphism, or the image is not central) are returned as
/// the error string.
pub fn hat_step(
    e: &Endomorphism<QLaurent>,
    p: &CenterPoly<RationalField>,
    l: u32,
) -> Result<CenterPoly<CyclotomicField>, String> {
    if p.n() != e.algebra().n() {
        return Err("polynomial and endomorphism have different n".into());
    }
    let target = RootAlgebra::root_of_unity(e.algebra().n(), l).map_err(|err| err.to_string())?;
    let es = e.specialize(&target);
    if !es.is_validated() {
        return Err(format!("the map is not an endomorphism at l = {l}"));
    }
    let lifted = center_to_field(p, target.ring());
    let image = es.apply(&theta(&lifted, &target, l).map_err(|err| err.to_string())?).map_err(|err| err.to_string())?;
    theta_inverse(&image, l).map_err(|err| err.to_string())
}

/// Whether `e_q(g^l)` is central for every generator `g`.
pub fn check_center_preservation(e: &Endomorphism<QLaurent>, l: u32) -> bool {
    let Ok(target) = RootAlgebra::root_of_unity(e.algebra().n(), l) else {
        return false;
    };
    let es = e.specialize(&target);
    es.is_validated()
        && target.generators().iter().all(|g| es.apply(&g.pow(l)).map(|img| is_central(&img)).unwrap_or(false))
}

/// Per-level outcome used by the convergence machinery.
pub(crate) struct LevelResult {
    pub l: u32,
    pub field: CyclotomicField,
    pub value: Result<CenterPoly<CyclotomicField>, String>,
}

/// Runs `step` at each level in parallel; results come back in input order.
pub(crate) fn run_levels<F>(levels: &[u32], step: F) -> Vec<LevelResult>
where
    F: Fn(u32) -> Result<CenterPoly<CyclotomicField>, String> + Sync,
{
    levels.par_iter().map(|&l| LevelResult { l, field: CyclotomicField::new(l), value: step(l) }).collect()
}

/// Trajectory of one monomial: its embedded coefficient at each surviving level.
pub(crate) fn trajectory(levels: &[LevelResult], m: &Monomial) -> Vec<Complex64> {
    levels
        .iter()
        .filter_map(|r| r.value.as_ref().ok().map(|p| (r, p)))
        .map(|(r, p)| {
            let c = p.terms().find(|(k, _)| *k == m).map(|(_, c)| c.clone());
            c.map(|c| r.field.embed(&c)).unwrap_or_default()
        })
        .collect()
}

/// Applies the stability criterion and assembles the report.
pub(crate) fn summarize(endo: String, poly: String, n: usize, levels: Vec<LevelResult>, tol: Tolerances) -> ConvergenceReport {
    let mut support: BTreeSet<Monomial> = BTreeSet::new();
    for r in &levels {
        if let Ok(p) = &r.value {
            support.extend(p.terms().map(|(m, _)| m.clone()));
        }
    }
    let survivors = levels.iter().filter(|r| r.value.is_ok()).count();
    let failed: Vec<u32> = levels.iter().filter(|r| r.value.is_err()).map(|r| r.l).collect();
    let mut verdict = if survivors < 3 { Some(Verdict::CentralityFailed { primes: failed.clone() }) } else { None };
    let mut limit = Vec::new();
    if verdict.is_none() {
        for m in &support {
            let traj = trajectory(&levels, m);
            let k = traj.len();
            if traj[k - 2..].iter().all(|c| c.norm() < tol.kill) {
                continue;
            }
            let last = traj[k - 1];
            if traj[k - 3..].iter().any(|c| (c - last).norm() >= tol.conv) {
                verdict = Some(Verdict::Diverged { witness: m.clone() });
                break;
            }
            limit.push(LimitTerm { monomial: m.clone(), value: LimitCoeff::round(last, tol.rounding, tol.max_den) });
        }
    }
    let verdict = verdict.unwrap_or(Verdict::Converged);
    if verdict != Verdict::Converged {
        limit.clear();
    }
    ConvergenceReport::new(endo, poly, n, levels, verdict, limit, tol)
}

/// Short description of an endomorphism for reports.
pub fn describe_endo(e: &Endomorphism<QLaurent>) -> String {
    let n = e.algebra().n();
    let mut parts = Vec::new();
    for i in 0..n {
        parts.push(format!("x{} -> {}", i + 1, e.images_x()[i]));
        parts.push(format!("d{} -> {}", i + 1, e.images_d()[i]));
    }
    parts.join(", ")
}

/// `hat_step` over arbitrary levels (even ones included) and the verdict.
pub fn hat_over_levels(e: &Endomorphism<QLaurent>, p: &CenterPoly<RationalField>, levels: &[u32]) -> ConvergenceReport {
    let results = run_levels(levels, |l| hat_step(e, p, l));
    summarize(describe_endo(e), p.to_text(), p.n(), results, Tolerances::default())
}

/// The hat of `p` along the schedule.
pub fn hat(e: &Endomorphism<QLaurent>, p: &CenterPoly<RationalField>, schedule: &PrimeSchedule) -> ConvergenceReport {
    hat_over_levels(e, p, schedule.primes())
}

/// The hat of every coordinate `r_i`, `s_i`.
pub fn hat_endo(e: &Endomorphism<QLaurent>, schedule: &PrimeSchedule) -> EndoReport {
    let n = e.algebra().n();
    let mut coords = Vec::with_capacity(2 * n);
    for i in 1..=n {
        coords.push(CenterPoly::r(RationalField, n, i).expect("index in range"));
    }
    for i in 1..=n {
        coords.push(CenterPoly::s(RationalField, n, i).expect("index in range"));
    }
    let reports = coords.par_iter().map(|p| hat(e, p, schedule)).collect();
    EndoReport::new(describe_endo(e), n, reports)
}

/// Transported brackets `Theta_l^-1 {Theta_l p, Theta_l q}` along the schedule,
/// compared with the standard bracket when they converge.
pub fn transport_limit(
    p: &CenterPoly<RationalField>,
    q: &CenterPoly<RationalField>,
    schedule: &PrimeSchedule,
) -> Result<ConvergenceReport, AlgebraError> {
    if p.n() != q.n() {
        return Err(AlgebraError::ContextMismatch);
    }
    let n = p.n();
    let results = run_levels(schedule.primes(), |l| {
        let ctx = PoissonContext::new(n, l).map_err(|e| e.to_string())?;
        let field = ctx.field().clone();
        ctx.transported_bracket(&center_to_field(p, &field), &center_to_field(q, &field)).map_err(|e| e.to_string())
    });
    let mut report = summarize("Poisson bracket".into(), format!("{{{}, {}}}", p.to_text(), q.to_text()), n, results, Tolerances::default());
    let expected = standard_bracket(p, q)?;
    report.set_expected(expected);
    Ok(report)
}

/// Constant coefficient of `e_q(Theta_l(p))` at each level, read off before
/// any centrality check, so it is defined at every level.
pub fn constant_trajectory(e: &Endomorphism<QLaurent>, p: &CenterPoly<RationalField>, levels: &[u32]) -> Vec<Option<Complex64>> {
    levels
        .par_iter()
        .map(|&l| {
            let target = RootAlgebra::root_of_unity(e.algebra().n(), l).ok()?;
            let es = e.specialize(&target);
            if !es.is_validated() {
                return None;
            }
            let lifted = center_to_field(p, target.ring());
            let image = es.apply(&theta(&lifted, &target, l).ok()?).ok()?;
            Some(target.ring().embed(&image.constant_term()))
        })
        .collect()
}

/// Whether a trajectory passes the stability test on its last three entries.
pub fn trajectory_converges(traj: &[Complex64], tol: &Tolerances) -> bool {
    let k = traj.len();
    if k < 3 {
        return false;
    }
    if traj[k - 2..].iter().all(|c| c.norm() < tol.kill) {
        return true;
    }
    let last = traj[k - 1];
    traj[k - 3..].iter().all(|c| (c - last).norm() < tol.conv)
}
