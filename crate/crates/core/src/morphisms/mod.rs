//! Algebra endomorphisms given by the images of the generators.

mod descriptor;

pub use descriptor::{AnyEndomorphism, EndoDescriptor, ParamSpec};

use std::collections::HashMap;

use crate::error::AlgebraError;
use crate::scalars::{CyclotomicField, QLaurent, RationalField, Ring};
use crate::weyl::{specialize_at_one, specialize_element, RootAlgebra, SymbolicAlgebra, WeylAlgebra, WeylElement};

/// Default bound on the Bernstein degree of a substituted monomial.
pub const DEFAULT_MAX_DEGREE: u64 = 512;

/// A relation image that failed to vanish.
#[derive(Clone, Debug)]
pub struct Violation<R: Ring> {
    /// Human-readable relation, e.g. `d1*x1 - t*x1*d1 - 1`.
    pub relation: String,
    pub residual: WeylElement<R>,
}

/// Result of substituting the images into every defining relation.
#[derive(Clone, Debug)]
pub struct Validation<R: Ring> {
    pub violations: Vec<Violation<R>>,
}

impl<R: Ring> Validation<R> {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// `x_i -> images_x[i]`, `d_i -> images_d[i]`.
#[derive(Clone, Debug)]
pub struct Endomorphism<R: Ring> {
    alg: WeylAlgebra<R>,
    images_x: Vec<WeylElement<R>>,
    images_d: Vec<WeylElement<R>>,
    validated: bool,
    max_degree: u64,
}

impl<R: Ring> PartialEq for Endomorphism<R> {
    fn eq(&self, other: &Self) -> bool {
        self.alg == other.alg && self.images_x == other.images_x && self.images_d == other.images_d
    }
}

impl<R: Ring> Endomorphism<R> {
    /// An unvalidated map; see [`Self::validated`].
    pub fn new(
        alg: &WeylAlgebra<R>,
        images_x: Vec<WeylElement<R>>,
        images_d: Vec<WeylElement<R>>,
    ) -> Result<Self, AlgebraError> {
        if images_x.len() != alg.n() || images_d.len() != alg.n() {
            return Err(AlgebraError::InvalidEndomorphism(format!(
                "expected {} images of each kind, got {} and {}",
                alg.n(),
                images_x.len(),
                images_d.len()
            )));
        }
        if images_x.iter().chain(&images_d).any(|g| g.algebra() != alg) {
            return Err(AlgebraError::ContextMismatch);
        }
        Ok(Self { alg: alg.clone(), images_x, images_d, validated: false, max_degree: DEFAULT_MAX_DEGREE })
    }

    pub fn identity(alg: &WeylAlgebra<R>) -> Self {
        let n = alg.n();
        let e = Self::new(alg, (1..=n).map(|i| alg.x(i)).collect(), (1..=n).map(|i| alg.d(i)).collect())
            .expect("identity has the right shape");
        Self { validated: true, ..e }
    }

    pub fn algebra(&self) -> &WeylAlgebra<R> {
        &self.alg
    }

    pub fn images_x(&self) -> &[WeylElement<R>] {
        &self.images_x
    }

    pub fn images_d(&self) -> &[WeylElement<R>] {
        &self.images_d
    }

    pub fn is_validated(&self) -> bool {
        self.validated
    }

    pub fn max_degree(&self) -> u64 {
        self.max_degree
    }

    pub fn with_max_degree(mut self, bound: u64) -> Self {
        self.max_degree = bound;
        self
    }

    /// `N`: the largest Bernstein degree of a generator image (0 for zero images).
    pub fn degree_bound(&self) -> u64 {
        self.images_x.iter().chain(&self.images_d).map(|g| g.bernstein_degree().unwrap_or(0)).max().unwrap_or(0)
    }

    /// Substitutes the images into `d_i x_j - t^{delta_ij} x_j d_i - delta_ij`,
    /// `x_i x_j - x_j x_i` and `d_i d_j - d_j d_i`.
    pub fn validate(&self) -> Validation<R> {
        let alg = &self.alg;
        let n = alg.n();
        let mut violations = Vec::new();
        let mut check = |relation: String, residual: WeylElement<R>| {
            if !residual.is_zero() {
                violations.push(Violation { relation, residual });
            }
        };
        for i in 0..n {
            for j in 0..n {
                let (dx, xd) = (&self.images_d[i] * &self.images_x[j], &self.images_x[j] * &self.images_d[i]);
                let residual = if i == j {
                    &(&dx - &xd.scale(alg.param())) - &alg.one()
                } else {
                    &dx - &xd
                };
                let t = if i == j { "t*" } else { "" };
                let one = if i == j { " - 1" } else { "" };
                check(format!("d{0}*x{1} - {t}x{1}*d{0}{one}", i + 1, j + 1), residual);
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                let xx = &(&self.images_x[i] * &self.images_x[j]) - &(&self.images_x[j] * &self.images_x[i]);
                check(format!("x{0}*x{1} - x{1}*x{0}", i + 1, j + 1), xx);
                let dd = &(&self.images_d[i] * &self.images_d[j]) - &(&self.images_d[j] * &self.images_d[i]);
                check(format!("d{0}*d{1} - d{1}*d{0}", i + 1, j + 1), dd);
            }
        }
        Validation { violations }
    }

    /// Runs [`Self::validate`] and records the certificate.
    pub fn validated(mut self) -> Result<Self, AlgebraError> {
        let v = self.validate();
        if let Some(first) = v.violations.first() {
            return Err(AlgebraError::InvalidEndomorphism(format!(
                "{} maps to {}",
                first.relation,
                first.residual.to_text()
            )));
        }
        self.validated = true;
        Ok(self)
    }

    /// Image of `a`, substituting monomial by monomial (`x^alpha` first,
    /// then `d^beta`).
    pub fn apply(&self, a: &WeylElement<R>) -> Result<WeylElement<R>, AlgebraError> {
        if !self.validated {
            return Err(AlgebraError::Unvalidated);
        }
        if a.algebra() != &self.alg {
            return Err(AlgebraError::ContextMismatch);
        }
        let n = self.alg.n();
        let gens: Vec<&WeylElement<R>> = self.images_x.iter().chain(&self.images_d).collect();
        let degs: Vec<u64> = gens.iter().map(|g| g.bernstein_degree().unwrap_or(0)).collect();
        let mut max_exp = vec![0u32; 2 * n];
        for (m, _) in a.terms() {
            let degree: u64 = m.exps().iter().zip(&degs).map(|(&e, &d)| e as u64 * d).sum();
            if degree > self.max_degree {
                return Err(AlgebraError::DegreeBound { degree, bound: self.max_degree });
            }
            for (slot, &e) in max_exp.iter_mut().zip(m.exps()) {
                *slot = (*slot).max(e);
            }
        }
        let mut powers: HashMap<(usize, u32), WeylElement<R>> = HashMap::new();
        for (k, &top) in max_exp.iter().enumerate() {
            let mut acc = self.alg.one();
            for e in 1..=top {
                acc = gens[k] * &acc;
                powers.insert((k, e), acc.clone());
            }
        }
        let mut out = self.alg.zero();
        for (m, c) in a.terms() {
            let mut term = self.alg.scalar(c.clone());
            for (k, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    term = &term * &powers[&(k, e)];
                }
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// `e1 . e2`: the images of `e2` pushed through `e1`.
    pub fn compose(e1: &Self, e2: &Self) -> Result<Self, AlgebraError> {
        if e1.alg != e2.alg {
            return Err(AlgebraError::ContextMismatch);
        }
        if !e2.validated {
            return Err(AlgebraError::Unvalidated);
        }
        let images_x = e2.images_x.iter().map(|g| e1.apply(g)).collect::<Result<Vec<_>, _>>()?;
        let images_d = e2.images_d.iter().map(|g| e1.apply(g)).collect::<Result<Vec<_>, _>>()?;
        let e = Self::new(&e1.alg, images_x, images_d)?;
        Ok(Self { validated: true, max_degree: e1.max_degree.max(e2.max_degree), ..e })
    }

    /// Maps the images into another algebra and re-runs validation there.
    pub fn map_to<S: Ring>(
        &self,
        target: &WeylAlgebra<S>,
        f: impl Fn(&WeylElement<R>) -> WeylElement<S>,
    ) -> Endomorphism<S> {
        let images_x = self.images_x.iter().map(&f).collect();
        let images_d = self.images_d.iter().map(&f).collect();
        let mut e = Endomorphism::new(target, images_x, images_d).expect("same shape");
        e.max_degree = self.max_degree;
        e.validated = e.validate().is_valid();
        e
    }
}

impl Endomorphism<QLaurent> {
    /// `e` at `q = zeta_l`, revalidated.
    pub fn specialize(&self, target: &RootAlgebra) -> Endomorphism<CyclotomicField> {
        self.map_to(target, |g| specialize_element(g, target))
    }

    /// `e` at `t = 1`, in the classical Weyl algebra, revalidated.
    pub fn specialize_at_one(&self) -> Endomorphism<RationalField> {
        let target = WeylAlgebra::classical(self.alg.n());
        self.map_to(&target, |g| specialize_at_one(g, &target))
    }
}

fn single_pair<R: Ring>(alg: &WeylAlgebra<R>) -> Result<(), AlgebraError> {
    if alg.n() != 1 {
        return Err(AlgebraError::Unsupported("this lift is defined for one variable pair".into()));
    }
    Ok(())
}

/// `x -> x`, `d -> d + F(x) f`, for `F` a polynomial in `x` alone.
pub fn lift_phi(alg: &SymbolicAlgebra, poly: &WeylElement<QLaurent>) -> Result<Endomorphism<QLaurent>, AlgebraError> {
    single_pair(alg)?;
    if poly.terms().any(|(m, _)| m.beta()[0] != 0) {
        return Err(AlgebraError::InvalidEndomorphism("F must be a polynomial in x1".into()));
    }
    let d = &alg.d(1) + &(poly * &alg.f_element());
    Endomorphism::new(alg, vec![alg.x(1)], vec![d])?.validated()
}

/// `x -> x + f G(d)`, `d -> d`, for `G` a polynomial in `d` alone.
pub fn lift_psi(alg: &SymbolicAlgebra, poly: &WeylElement<QLaurent>) -> Result<Endomorphism<QLaurent>, AlgebraError> {
    single_pair(alg)?;
    if poly.terms().any(|(m, _)| m.alpha()[0] != 0) {
        return Err(AlgebraError::InvalidEndomorphism("G must be a polynomial in d1".into()));
    }
    let x = &alg.x(1) + &(&alg.f_element() * poly);
    Endomorphism::new(alg, vec![x], vec![alg.d(1)])?.validated()
}

/// The scalar-valued map `x_i -> a_i`, `d_i -> (1 - q)^-1 a_i^-1`: a
/// one-dimensional representation viewed as an endomorphism.
pub fn one_dim_rep<R: Ring>(alg: &WeylAlgebra<R>, a: &[R::Elem]) -> Result<Endomorphism<R>, AlgebraError> {
    let ring = alg.ring();
    if a.len() != alg.n() {
        return Err(AlgebraError::InvalidEndomorphism(format!("expected {} values", alg.n())));
    }
    let one_minus = ring.sub(&ring.one(), alg.param());
    let inv_one_minus = ring
        .try_inv(&one_minus)
        .ok_or_else(|| AlgebraError::Unsupported("no one-dimensional representations when q = 1".into()))?;
    let mut images_d = Vec::with_capacity(a.len());
    for ai in a {
        let inv = ring
            .try_inv(ai)
            .ok_or_else(|| AlgebraError::InvalidEndomorphism(format!("a = {} is not a unit", ring.format(ai))))?;
        images_d.push(alg.scalar(ring.mul(&inv_one_minus, &inv)));
    }
    let images_x = a.iter().map(|ai| alg.scalar(ai.clone())).collect();
    Endomorphism::new(alg, images_x, images_d)?.validated()
}

#[cfg(test)]
mod tests;
