//! Operations tied to particular coefficient rings: specialization `t -> q`,
//! the `f_i`-twist, and the test for membership in the ideal `(f_i)`.

use std::collections::BTreeMap;

use super::algebra::{RootAlgebra, SymbolicAlgebra, WeylAlgebra, WeylElement};
use super::monomial::Monomial;
use crate::error::AlgebraError;
use crate::scalars::{CyclotomicField, LaurentPoly, QLaurent, Rational, RationalField, Ring};

/// The specialization `pi_q: A_t^n -> A_q^n`, `q = zeta_l`.
pub fn specialize_element(a: &WeylElement<QLaurent>, target: &RootAlgebra) -> WeylElement<CyclotomicField> {
    let field = target.ring().clone();
    a.map_coeffs(target, |c| field.specialize(c))
}

/// Specialization at `t = 1`, landing in the classical Weyl algebra.
pub fn specialize_at_one(a: &WeylElement<QLaurent>, target: &WeylAlgebra<RationalField>) -> WeylElement<RationalField> {
    let ring = a.algebra().ring().clone();
    let one = Rational::from_integer(1.into());
    a.map_coeffs(target, |c| ring.eval(c, &one).expect("1 is a unit"))
}

/// The element `Q` with `f_i P = Q f_i`, namely
/// `Q = sum a_{alpha,beta} t^(alpha_i - beta_i) x^alpha d^beta`.
pub fn twist_by_f<R: Ring>(a: &WeylElement<R>, i: usize) -> Result<WeylElement<R>, AlgebraError> {
    let alg = a.algebra();
    if i == 0 || i > alg.n() {
        return Err(AlgebraError::IndexOutOfRange { index: i, n: alg.n() });
    }
    let ring = alg.ring();
    Ok(alg.from_terms(a.terms().map(|(m, c)| {
        let shift = m.alpha()[i - 1] as i64 - m.beta()[i - 1] as i64;
        let factor = if shift >= 0 {
            ring.pow(alg.param(), shift as u64)
        } else {
            ring.pow(alg.param_inv(), shift.unsigned_abs())
        };
        (m.clone(), ring.mul(c, &factor))
    })))
}

/// `num / (1 - t)^den_power` in `Q[t, t^-1]` localized at `1 - t`.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalizedCoeff {
    pub num: LaurentPoly<Rational>,
    pub den_power: u32,
}

/// Key of the quotient `A_t^n / (f_i)` after inverting `1 - t`: the exponent
/// of `X = x_i` (negative powers come from `d_i`) and the untouched exponents
/// of the other variable pairs.
pub type QuotientKey = (i64, Vec<u32>);

/// Image of `a` under `x_i -> X`, `d_i -> (1-t)^-1 X^-1` in
/// `R_{1-t}[X, X^-1] (x) A_t^{n-1}`. The ideal `(f_i)` is exactly the kernel.
pub fn quotient_image(a: &WeylElement<QLaurent>, i: usize) -> Result<BTreeMap<QuotientKey, LocalizedCoeff>, AlgebraError> {
    let alg = a.algebra();
    let n = alg.n();
    if i == 0 || i > n {
        return Err(AlgebraError::IndexOutOfRange { index: i, n });
    }
    let ring = alg.ring();
    let one_minus_t = ring.sub(&ring.one(), alg.param());
    let mut grouped: BTreeMap<QuotientKey, Vec<(u32, LaurentPoly<Rational>)>> = BTreeMap::new();
    for (m, c) in a.terms() {
        let x_exp = m.alpha()[i - 1] as i64 - m.beta()[i - 1] as i64;
        let mut rest = m.exps().to_vec();
        rest.remove(n + i - 1);
        rest.remove(i - 1);
        grouped.entry((x_exp, rest)).or_default().push((m.beta()[i - 1], c.clone()));
    }
    let mut image = BTreeMap::new();
    for (key, parts) in grouped {
        let den_power = parts.iter().map(|(b, _)| *b).max().unwrap_or(0);
        let mut num = ring.zero();
        for (b, c) in parts {
            let lifted = ring.mul(&c, &ring.pow(&one_minus_t, (den_power - b) as u64));
            num = ring.add(&num, &lifted);
        }
        if !ring.is_zero(&num) {
            image.insert(key, LocalizedCoeff { num, den_power });
        }
    }
    Ok(image)
}

/// Whether `a` lies in the two-sided ideal generated by `f_i`.
pub fn divisible_by_f(a: &WeylElement<QLaurent>, i: usize) -> Result<bool, AlgebraError> {
    Ok(quotient_image(a, i)?.is_empty())
}

/// Polynomials in `x_1..x_n`, keyed by exponent vectors.
pub type XPoly<E> = BTreeMap<Vec<u32>, E>;

/// The action on `K[x_1..x_n]` where `x_i` multiplies and
/// `d_i(x_i^m) = [m] x_i^(m-1)`. This representation is faithful, which
/// makes it an independent check on normal-form multiplication.
pub fn act<R: Ring>(a: &WeylElement<R>, v: &XPoly<R::Elem>) -> XPoly<R::Elem> {
    let alg = a.algebra();
    let ring = alg.ring();
    let n = alg.n();
    let mut out: XPoly<R::Elem> = BTreeMap::new();
    for (m, c) in a.terms() {
        for (gamma, vc) in v {
            // d^beta first
            let mut coeff = ring.mul(c, vc);
            let mut exps = gamma.clone();
            let mut dead = false;
            for k in 0..n {
                let b = m.beta()[k];
                if b > exps[k] {
                    dead = true;
                    break;
                }
                for j in 0..b {
                    coeff = ring.mul(&coeff, &ring.qint_at(alg.param(), exps[k] - j));
                }
                exps[k] -= b;
            }
            if dead || ring.is_zero(&coeff) {
                continue;
            }
            for k in 0..n {
                exps[k] += m.alpha()[k];
            }
            match out.get_mut(&exps) {
                Some(existing) => ring.add_assign(existing, &coeff),
                None => {
                    out.insert(exps, coeff);
                }
            }
        }
    }
    out.retain(|_, c| !ring.is_zero(c));
    out
}

/// Convenience: the monomial `x^alpha d^beta` with coefficient one.
pub fn basis_element<R: Ring>(alg: &WeylAlgebra<R>, alpha: &[u32], beta: &[u32]) -> WeylElement<R> {
    alg.monomial(Monomial::new(alpha, beta), alg.ring().one())
}

impl SymbolicAlgebra {
    /// `pi_q` into a freshly built `A_q^n`.
    pub fn specialize(&self, a: &WeylElement<QLaurent>, l: u32) -> Result<WeylElement<CyclotomicField>, AlgebraError> {
        let target = RootAlgebra::root_of_unity(self.n(), l)?;
        Ok(specialize_element(a, &target))
    }
}
