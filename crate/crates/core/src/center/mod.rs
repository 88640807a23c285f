//! The center of `A_q^n` at a primitive `l`-th root of unity: it is the
//! polynomial ring on `x_i^l, d_i^l`, identified with `K[s, r]` by `Theta_l`.

mod poly;

pub use poly::CenterPoly;

use num_complex::Complex64;

use crate::error::AlgebraError;
use crate::scalars::{Cyclo, CyclotomicField, Ring};
use crate::weyl::{Monomial, RootAlgebra, WeylAlgebra, WeylElement};

/// Residual tolerance of the numeric Azumaya test.
pub const AZUMAYA_TOLERANCE: f64 = 1e-9;

/// Whether `a` commutes with every generator `x_i, d_i`.
pub fn is_central<R: Ring>(a: &WeylElement<R>) -> bool {
    let alg = a.algebra();
    alg.generators().iter().all(|g| alg.commutator(a, g).map(|c| c.is_zero()).unwrap_or(false))
}

/// `Theta_l`: `s_i -> x_i^l`, `r_i -> d_i^l`.
pub fn theta<R: Ring>(p: &CenterPoly<R>, alg: &WeylAlgebra<R>, l: u32) -> Result<WeylElement<R>, AlgebraError> {
    if p.n() != alg.n() || p.ring() != alg.ring() {
        return Err(AlgebraError::ContextMismatch);
    }
    // x^(l alpha) d^(l beta) is already in normal form
    Ok(alg.from_terms(p.terms().map(|(m, c)| {
        let exps: Vec<u32> = m.exps().iter().map(|e| e * l).collect();
        let (s, r) = exps.split_at(alg.n());
        (Monomial::new(s, r), c.clone())
    })))
}

/// `Theta_l` into `A_q^n` with `l` the level of the algebra.
pub fn theta_root(p: &CenterPoly<CyclotomicField>, alg: &RootAlgebra) -> Result<WeylElement<CyclotomicField>, AlgebraError> {
    theta(p, alg, alg.level())
}

/// Inverse of `Theta_l` on central elements.
pub fn theta_inverse<R: Ring>(a: &WeylElement<R>, l: u32) -> Result<CenterPoly<R>, AlgebraError> {
    let alg = a.algebra();
    let n = alg.n();
    let mut terms = Vec::with_capacity(a.num_terms());
    for (m, c) in a.terms() {
        if let Some(&e) = m.exps().iter().find(|&&e| e % l != 0) {
            return Err(AlgebraError::NotCentral(format!(
                "monomial {} has exponent {e} not divisible by {l}",
                m.to_text()
            )));
        }
        let exps: Vec<u32> = m.exps().iter().map(|e| e / l).collect();
        let (s, r) = exps.split_at(n);
        terms.push((Monomial::new(s, r), c.clone()));
    }
    if !is_central(a) {
        return Err(AlgebraError::NotCentral("element does not commute with the generators".into()));
    }
    Ok(CenterPoly::from_terms(alg.ring().clone(), n, terms))
}

/// `prod_i (1 - (1 - q)^l x_i^l d_i^l)`, built without multiplying out `f^l`.
pub fn f_power_closed_form<R: Ring>(alg: &WeylAlgebra<R>, l: u32) -> WeylElement<R> {
    let ring = alg.ring();
    let n = alg.n();
    let c = ring.neg(&ring.pow(&ring.sub(&ring.one(), alg.param()), l as u64));
    // the factors commute and involve disjoint variables: expand subsets
    let terms = (0u64..1 << n).map(|mask| {
        let exps: Vec<u32> = (0..n).map(|i| if mask >> i & 1 == 1 { l } else { 0 }).collect();
        (Monomial::new(&exps, &exps), ring.pow(&c, mask.count_ones() as u64))
    });
    alg.from_terms(terms.collect::<Vec<_>>())
}

/// The same closed form at the level of the algebra.
pub fn f_power_root(alg: &RootAlgebra) -> WeylElement<CyclotomicField> {
    f_power_closed_form(alg, alg.level())
}

/// A central character `x_i^l -> a_i`, `d_i^l -> b_i`.
#[derive(Clone, Debug)]
pub enum MaxIdealPoint {
    Exact { field: CyclotomicField, a: Vec<Cyclo>, b: Vec<Cyclo> },
    Numeric { a: Vec<Complex64>, b: Vec<Complex64> },
}

impl MaxIdealPoint {
    pub fn n(&self) -> usize {
        match self {
            Self::Exact { a, .. } => a.len(),
            Self::Numeric { a, .. } => a.len(),
        }
    }
}

/// `(1 - q)^-l` at `q = zeta_l`.
pub fn azumaya_threshold(field: &CyclotomicField) -> Cyclo {
    let one_minus = field.sub(&field.one(), &field.zeta());
    field.try_inv(&field.pow(&one_minus, field.level() as u64)).expect("1 - zeta is a unit")
}

/// Whether the point lies in the Azumaya locus: `a_i b_i != (1 - q)^-l` for
/// every `i`. Numeric points use [`AZUMAYA_TOLERANCE`].
pub fn azumaya_test(pt: &MaxIdealPoint, l: u32) -> Result<bool, AlgebraError> {
    if l < 2 {
        return Err(AlgebraError::Unsupported(format!("level must be >= 2, got {l}")));
    }
    match pt {
        MaxIdealPoint::Exact { field, a, b } => {
            if field.level() != l {
                return Err(AlgebraError::ContextMismatch);
            }
            if a.len() != b.len() {
                return Err(AlgebraError::Unsupported("a and b have different lengths".into()));
            }
            let bad = azumaya_threshold(field);
            Ok(a.iter().zip(b).all(|(ai, bi)| !field.equal(&field.mul(ai, bi), &bad)))
        }
        MaxIdealPoint::Numeric { a, b } => {
            if a.len() != b.len() {
                return Err(AlgebraError::Unsupported("a and b have different lengths".into()));
            }
            let bad = numeric_threshold(l);
            Ok(a.iter().zip(b).all(|(ai, bi)| (ai * bi - bad).norm() > AZUMAYA_TOLERANCE))
        }
    }
}

/// `(1 - q)^-l` at `q = exp(2 pi i / l)` in floating point.
pub fn numeric_threshold(l: u32) -> Complex64 {
    let field = CyclotomicField::new(l);
    field.embed(&azumaya_threshold(&field))
}

#[cfg(test)]
mod tests;
