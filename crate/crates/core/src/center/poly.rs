use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::AlgebraError;
use crate::scalars::{append_term, Ring};
use crate::weyl::Monomial;

/// A commutative polynomial `sum c s^alpha r^beta` in `s_1..s_n, r_1..r_n`.
///
/// Monomials reuse [`Monomial`] with `alpha` the `s`-exponents and `beta` the
/// `r`-exponents, matching `x^(l alpha) d^(l beta)` under `Theta_l`.
pub struct CenterPoly<R: Ring> {
    ring: R,
    n: usize,
    terms: BTreeMap<Monomial, R::Elem>,
}

impl<R: Ring> Clone for CenterPoly<R> {
    fn clone(&self) -> Self {
        Self { ring: self.ring.clone(), n: self.n, terms: self.terms.clone() }
    }
}

impl<R: Ring> PartialEq for CenterPoly<R> {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.ring == other.ring && (self - other).is_zero()
    }
}

impl<R: Ring> fmt::Debug for CenterPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl<R: Ring> fmt::Display for CenterPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl<R: Ring> CenterPoly<R> {
    pub fn zero(ring: R, n: usize) -> Self {
        Self { ring, n, terms: BTreeMap::new() }
    }

    pub fn constant(ring: R, n: usize, c: R::Elem) -> Self {
        Self::from_terms(ring, n, [(Monomial::one(n), c)])
    }

    pub fn one(ring: R, n: usize) -> Self {
        let c = ring.one();
        Self::constant(ring, n, c)
    }

    /// `c * s^s_exps * r^r_exps`.
    pub fn monomial(ring: R, s_exps: &[u32], r_exps: &[u32], c: R::Elem) -> Self {
        let n = s_exps.len();
        Self::from_terms(ring, n, [(Monomial::new(s_exps, r_exps), c)])
    }

    pub fn from_terms(ring: R, n: usize, terms: impl IntoIterator<Item = (Monomial, R::Elem)>) -> Self {
        let mut acc: BTreeMap<Monomial, R::Elem> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.n(), n, "monomial arity does not match");
            match acc.get_mut(&m) {
                Some(e) => ring.add_assign(e, &c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        acc.retain(|_, c| !ring.is_zero(c));
        Self { ring, n, terms: acc }
    }

    fn unit(&self, i: usize) -> Result<Vec<u32>, AlgebraError> {
        if i == 0 || i > self.n {
            return Err(AlgebraError::IndexOutOfRange { index: i, n: self.n });
        }
        let mut v = vec![0; self.n];
        v[i - 1] = 1;
        Ok(v)
    }

    /// The variable `r_i`.
    pub fn r(ring: R, n: usize, i: usize) -> Result<Self, AlgebraError> {
        let z = Self::zero(ring, n);
        let e = z.unit(i)?;
        let one = z.ring.one();
        Ok(Self::monomial(z.ring, &vec![0; n], &e, one))
    }

    /// The variable `s_i`.
    pub fn s(ring: R, n: usize, i: usize) -> Result<Self, AlgebraError> {
        let z = Self::zero(ring, n);
        let e = z.unit(i)?;
        let one = z.ring.one();
        Ok(Self::monomial(z.ring, &e, &vec![0; n], one))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms keyed by `(s-exponents, r-exponents)` monomials.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &R::Elem)> {
        self.terms.iter()
    }

    pub fn coeff(&self, s_exps: &[u32], r_exps: &[u32]) -> R::Elem {
        self.terms.get(&Monomial::new(s_exps, r_exps)).cloned().unwrap_or_else(|| self.ring.zero())
    }

    /// Total degree, `None` for zero.
    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    fn compatible(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.n == other.n && self.ring == other.ring {
            Ok(())
        } else {
            Err(AlgebraError::ContextMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.compatible(other)?;
        let terms = self.terms.iter().chain(&other.terms).map(|(m, c)| (m.clone(), c.clone()));
        Ok(Self::from_terms(self.ring.clone(), self.n, terms))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.compatible(other)?;
        let mut out = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let exps = ma.exps().iter().zip(mb.exps()).map(|(a, b)| a + b).collect::<Vec<_>>();
                let (s, r) = exps.split_at(self.n);
                out.push((Monomial::new(s, r), self.ring.mul(ca, cb)));
            }
        }
        Ok(Self::from_terms(self.ring.clone(), self.n, out))
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let terms = self.terms.iter().map(|(m, x)| (m.clone(), self.ring.mul(x, c)));
        Self::from_terms(self.ring.clone(), self.n, terms)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.ring.clone(), self.n), |acc, _| &acc * self)
    }

    /// `d/d r_i`.
    pub fn partial_r(&self, i: usize) -> Self {
        self.partial(self.n + i - 1)
    }

    /// `d/d s_i`.
    pub fn partial_s(&self, i: usize) -> Self {
        self.partial(i - 1)
    }

    fn partial(&self, slot: usize) -> Self {
        let terms = self.terms.iter().filter(|(m, _)| m.exps()[slot] > 0).map(|(m, c)| {
            let mut exps = m.exps().to_vec();
            let e = exps[slot];
            exps[slot] -= 1;
            let (s, r) = exps.split_at(self.n);
            (Monomial::new(s, r), self.ring.mul(c, &self.ring.from_int(e as i64)))
        });
        Self::from_terms(self.ring.clone(), self.n, terms)
    }

    /// Value at `s = s_vals`, `r = r_vals`.
    pub fn eval(&self, s_vals: &[R::Elem], r_vals: &[R::Elem]) -> R::Elem {
        assert_eq!(s_vals.len(), self.n);
        assert_eq!(r_vals.len(), self.n);
        let mut acc = self.ring.zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in s_vals.iter().chain(r_vals).zip(m.exps()) {
                if e > 0 {
                    v = self.ring.mul(&v, &self.ring.pow(x, e as u64));
                }
            }
            self.ring.add_assign(&mut acc, &v);
        }
        acc
    }

    /// Applies a ring map to the coefficients.
    pub fn map_coeffs<S: Ring>(&self, target: S, f: impl Fn(&R::Elem) -> S::Elem) -> CenterPoly<S> {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), f(c))).collect::<Vec<_>>();
        CenterPoly::from_terms(target, self.n, terms)
    }

    /// Canonical text such as `1 - 4*s1*r1`.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (m, c) in &self.terms {
            append_term(&mut out, &self.ring, c, &m.to_text_with("s", "r"));
        }
        out
    }
}

impl<R: Ring> Add for &CenterPoly<R> {
    type Output = CenterPoly<R>;
    fn add(self, rhs: Self) -> CenterPoly<R> {
        self.checked_add(rhs).expect("incompatible center polynomials")
    }
}

impl<R: Ring> Sub for &CenterPoly<R> {
    type Output = CenterPoly<R>;
    fn sub(self, rhs: Self) -> CenterPoly<R> {
        self.checked_add(&-rhs).expect("incompatible center polynomials")
    }
}

impl<R: Ring> Mul for &CenterPoly<R> {
    type Output = CenterPoly<R>;
    fn mul(self, rhs: Self) -> CenterPoly<R> {
        self.checked_mul(rhs).expect("incompatible center polynomials")
    }
}

impl<R: Ring> Neg for &CenterPoly<R> {
    type Output = CenterPoly<R>;
    fn neg(self) -> CenterPoly<R> {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), self.ring.neg(c))).collect();
        CenterPoly { ring: self.ring.clone(), n: self.n, terms }
    }
}
