//! Convergence reports and their JSON form.

use num_complex::Complex64;
use num_traits::Zero;
use serde_json::{json, Value};

use super::LevelResult;
use crate::center::CenterPoly;
use crate::scalars::{nearest_small_rational, ComplexField, Rational, RationalField, Ring};
use crate::weyl::Monomial;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances {
    /// Spread allowed over the last three levels.
    pub conv: f64,
    /// Below this at the last two levels a coefficient counts as vanishing.
    pub kill: f64,
    /// Distance allowed when snapping to a small rational.
    pub rounding: f64,
    pub max_den: i64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self { conv: 1e-6, kill: 1e-9, rounding: 1e-6, max_den: 64 }
    }
}

/// A limiting coefficient after rounding.
#[derive(Clone, Debug, PartialEq)]
pub enum LimitCoeff {
    Exact(Rational),
    /// Real and imaginary parts, both small rationals.
    Gaussian(Rational, Rational),
    Float(Complex64),
}

fn snap(x: f64, tol: f64, max_den: i64) -> Option<Rational> {
    let r = nearest_small_rational(x, max_den)?;
    let approx = num_traits::ToPrimitive::to_f64(&r)?;
    ((x - approx).abs() < tol).then_some(r)
}

impl LimitCoeff {
    pub fn round(z: Complex64, tol: f64, max_den: i64) -> Self {
        match (snap(z.re, tol, max_den), snap(z.im, tol, max_den)) {
            (Some(re), Some(im)) if im.is_zero() => Self::Exact(re),
            (Some(re), Some(im)) => Self::Gaussian(re, im),
            _ => Self::Float(z),
        }
    }

    pub fn approx(&self) -> Complex64 {
        let f = |r: &Rational| num_traits::ToPrimitive::to_f64(r).unwrap_or(f64::NAN);
        match self {
            Self::Exact(r) => Complex64::new(f(r), 0.0),
            Self::Gaussian(re, im) => Complex64::new(f(re), f(im)),
            Self::Float(z) => *z,
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            Self::Exact(r) => r.to_string(),
            Self::Gaussian(re, im) => format!("{re} + {im}*i"),
            Self::Float(z) => format!("{} + {}*i", z.re, z.im),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LimitTerm {
    pub monomial: Monomial,
    pub value: LimitCoeff,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Verdict {
    Converged,
    Diverged { witness: Monomial },
    /// Too few levels survived; lists the failing ones.
    CentralityFailed { primes: Vec<u32> },
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Converged => "Converged",
            Self::Diverged { .. } => "Diverged",
            Self::CentralityFailed { .. } => "CentralityFailed",
        }
    }
}

/// One level of a report.
#[derive(Clone, Debug)]
pub struct PrimeEntry {
    pub l: u32,
    pub centrality: bool,
    pub failure: Option<String>,
    /// `(monomial, exact text, embedding)`.
    pub coeffs: Vec<(Monomial, String, Complex64)>,
}

#[derive(Clone, Debug)]
pub struct ConvergenceReport {
    pub endo: String,
    pub poly: String,
    pub n: usize,
    pub primes: Vec<PrimeEntry>,
    pub verdict: Verdict,
    pub limit: Vec<LimitTerm>,
    pub tolerances: Tolerances,
    /// Reference value, when one is known (the standard bracket for transports).
    pub expected: Option<CenterPoly<RationalField>>,
}

fn monomial_json(m: &Monomial) -> Value {
    json!([m.alpha(), m.beta()])
}

impl ConvergenceReport {
    pub(crate) fn new(
        endo: String,
        poly: String,
        n: usize,
        levels: Vec<LevelResult>,
        verdict: Verdict,
        limit: Vec<LimitTerm>,
        tolerances: Tolerances,
    ) -> Self {
        let primes = levels
            .into_iter()
            .map(|r| match r.value {
                Ok(p) => PrimeEntry {
                    l: r.l,
                    centrality: true,
                    failure: None,
                    coeffs: p.terms().map(|(m, c)| (m.clone(), r.field.format(c), r.field.embed(c))).collect(),
                },
                Err(reason) => PrimeEntry { l: r.l, centrality: false, failure: Some(reason), coeffs: Vec::new() },
            })
            .collect();
        Self { endo, poly, n, primes, verdict, limit, tolerances, expected: None }
    }

    pub fn is_converged(&self) -> bool {
        self.verdict == Verdict::Converged
    }

    /// Embedded coefficient of `m` at each level; `None` where the level failed.
    pub fn trajectory(&self, m: &Monomial) -> Vec<Option<Complex64>> {
        self.primes
            .iter()
            .map(|e| e.centrality.then(|| e.coeffs.iter().find(|(k, ..)| k == m).map(|c| c.2).unwrap_or_default()))
            .collect()
    }

    /// Every monomial seen at some level.
    pub fn support(&self) -> Vec<Monomial> {
        let mut out: Vec<Monomial> = self.primes.iter().flat_map(|e| e.coeffs.iter().map(|c| c.0.clone())).collect();
        out.sort();
        out.dedup();
        out
    }

    /// The limit with complex coefficients, if converged.
    pub fn limit_complex(&self) -> Option<CenterPoly<ComplexField>> {
        self.is_converged()
            .then(|| CenterPoly::from_terms(ComplexField, self.n, self.limit.iter().map(|t| (t.monomial.clone(), t.value.approx()))))
    }

    /// The limit over `Q`, if converged with rational coefficients.
    pub fn limit_rational(&self) -> Option<CenterPoly<RationalField>> {
        if !self.is_converged() {
            return None;
        }
        let terms = self
            .limit
            .iter()
            .map(|t| match &t.value {
                LimitCoeff::Exact(r) => Some((t.monomial.clone(), r.clone())),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()?;
        Some(CenterPoly::from_terms(RationalField, self.n, terms))
    }

    pub fn limit_text(&self) -> Option<String> {
        if !self.is_converged() {
            return None;
        }
        Some(match self.limit_rational() {
            Some(p) => p.to_text(),
            None => {
                let parts: Vec<String> = self
                    .limit
                    .iter()
                    .map(|t| format!("({})*{}", t.value.to_text(), t.monomial.to_text_with("s", "r")))
                    .collect();
                if parts.is_empty() { "0".into() } else { parts.join(" + ") }
            }
        })
    }

    pub(crate) fn set_expected(&mut self, p: CenterPoly<RationalField>) {
        self.expected = Some(p);
    }

    /// Whether the converged limit equals the reference value.
    pub fn matches_expected(&self) -> Option<bool> {
        let expected = self.expected.as_ref()?;
        Some(self.limit_rational().is_some_and(|l| &l == expected))
    }

    pub fn to_json(&self) -> Value {
        let primes: Vec<Value> = self
            .primes
            .iter()
            .map(|e| {
                let coeffs: Vec<Value> = e
                    .coeffs
                    .iter()
                    .map(|(m, exact, z)| json!({"monomial": monomial_json(m), "exact": exact, "approx": [z.re, z.im]}))
                    .collect();
                let mut v = json!({"l": e.l, "centrality": e.centrality, "coeffs": coeffs});
                if let Some(f) = &e.failure {
                    v["failure"] = json!(f);
                }
                v
            })
            .collect();
        let trajectories: Vec<Value> = self
            .support()
            .iter()
            .map(|m| {
                let values: Vec<Value> = self.trajectory(m).iter().map(|z| z.map_or(Value::Null, |z| json!([z.re, z.im]))).collect();
                json!({"monomial": monomial_json(m), "values": values})
            })
            .collect();
        let mut v = json!({
            "schema": 1,
            "endo": self.endo,
            "poly": self.poly,
            "primes": primes,
            "trajectories": trajectories,
            "verdict": self.verdict.name(),
            "limit": self.limit_text(),
            "tolerances": {
                "conv": self.tolerances.conv,
                "kill": self.tolerances.kill,
                "rounding": self.tolerances.rounding,
                "max_den": self.tolerances.max_den,
            },
        });
        match &self.verdict {
            Verdict::Diverged { witness } => v["witness"] = monomial_json(witness),
            Verdict::CentralityFailed { primes } => v["failed_primes"] = json!(primes),
            Verdict::Converged => {}
        }
        if let Some(e) = &self.expected {
            v["expected"] = json!(e.to_text());
            v["matches_expected"] = json!(self.matches_expected());
        }
        v
    }
}

/// Hats of `r_1..r_n` followed by `s_1..s_n`.
#[derive(Clone, Debug)]
pub struct EndoReport {
    pub endo: String,
    pub n: usize,
    pub reports: Vec<ConvergenceReport>,
}

impl EndoReport {
    pub(crate) fn new(endo: String, n: usize, reports: Vec<ConvergenceReport>) -> Self {
        Self { endo, n, reports }
    }

    pub fn is_converged(&self) -> bool {
        self.reports.iter().all(ConvergenceReport::is_converged)
    }

    pub fn image_r(&self, i: usize) -> &ConvergenceReport {
        &self.reports[i - 1]
    }

    pub fn image_s(&self, i: usize) -> &ConvergenceReport {
        &self.reports[self.n + i - 1]
    }

    /// The induced map as `(images of s, images of r)` over `Q`.
    pub fn induced_rational(&self) -> Option<(Vec<CenterPoly<RationalField>>, Vec<CenterPoly<RationalField>>)> {
        let all = self.reports.iter().map(ConvergenceReport::limit_rational).collect::<Option<Vec<_>>>()?;
        let (r, s) = all.split_at(self.n);
        Some((s.to_vec(), r.to_vec()))
    }

    pub fn to_json(&self) -> Value {
        let mut images = serde_json::Map::new();
        for i in 1..=self.n {
            images.insert(format!("r{i}"), json!(self.image_r(i).limit_text()));
            images.insert(format!("s{i}"), json!(self.image_s(i).limit_text()));
        }
        json!({
            "schema": 1,
            "endo": self.endo,
            "verdict": if self.is_converged() { "Converged" } else { "NotConverged" },
            "images": images,
            "reports": self.reports.iter().map(ConvergenceReport::to_json).collect::<Vec<_>>(),
        })
    }
}

/// `p(images_s, images_r)`: substitutes polynomials for `s_i` and `r_i`.
pub fn substitute<R: Ring>(p: &CenterPoly<R>, images_s: &[CenterPoly<R>], images_r: &[CenterPoly<R>]) -> CenterPoly<R> {
    let ring = p.ring().clone();
    let n = images_s.first().map_or(p.n(), CenterPoly::n);
    let mut out = CenterPoly::zero(ring.clone(), n);
    for (m, c) in p.terms() {
        let mut term = CenterPoly::constant(ring.clone(), n, c.clone());
        for (img, &e) in images_s.iter().zip(m.alpha()).chain(images_r.iter().zip(m.beta())) {
            if e > 0 {
                term = &term * &img.pow(e);
            }
        }
        out = &out + &term;
    }
    out
}
