//! Laurent polynomials in the single variable `t`.

use super::ring::{Field, Rational, RationalField, Ring};
use crate::error::ScalarError;

/// `sum_k coeffs[k] * t^(low + k)`, trimmed so that the first and last stored
/// coefficients are nonzero. The zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly<E> {
    low: i64,
    coeffs: Vec<E>,
}

impl<E> LaurentPoly<E> {
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn low(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.low)
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn high(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, exp: i64) -> Option<&E> {
        let idx = exp.checked_sub(self.low)?;
        usize::try_from(idx).ok().and_then(|i| self.coeffs.get(i))
    }

    /// `(exponent, coefficient)` pairs in ascending exponent order, including
    /// interior zeros.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &E)> {
        self.coeffs.iter().enumerate().map(move |(k, c)| (self.low + k as i64, c))
    }

    pub fn num_stored(&self) -> usize {
        self.coeffs.len()
    }
}

/// Laurent polynomials `K[t, t^-1]` over a base ring.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentRing<R> {
    base: R,
}

/// `Q[t, t^-1]`, the coefficient ring of the symbolic algebra.
pub type QLaurent = LaurentRing<RationalField>;

impl<R: Ring> LaurentRing<R> {
    pub fn new(base: R) -> Self {
        Self { base }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms(&self, terms: impl IntoIterator<Item = (i64, R::Elem)>) -> LaurentPoly<R::Elem> {
        let terms: Vec<_> = terms.into_iter().collect();
        let Some(lo) = terms.iter().map(|(e, _)| *e).min() else {
            return LaurentPoly { low: 0, coeffs: vec![] };
        };
        let hi = terms.iter().map(|(e, _)| *e).max().unwrap();
        let mut coeffs = vec![self.base.zero(); (hi - lo + 1) as usize];
        for (e, c) in &terms {
            self.base.add_assign(&mut coeffs[(e - lo) as usize], c);
        }
        self.normalize(lo, coeffs)
    }

    /// `c * t^exp`.
    pub fn monomial(&self, exp: i64, c: R::Elem) -> LaurentPoly<R::Elem> {
        self.normalize(exp, vec![c])
    }

    pub fn constant(&self, c: R::Elem) -> LaurentPoly<R::Elem> {
        self.monomial(0, c)
    }

    /// The variable `t`.
    pub fn t(&self) -> LaurentPoly<R::Elem> {
        self.monomial(1, self.base.one())
    }

    /// The constant term when the polynomial is a constant.
    pub fn as_constant(&self, p: &LaurentPoly<R::Elem>) -> Option<R::Elem> {
        match (p.low(), p.coeffs.len()) {
            (None, _) => Some(self.base.zero()),
            (Some(0), 1) => Some(p.coeffs[0].clone()),
            _ => None,
        }
    }

    fn normalize(&self, mut low: i64, mut coeffs: Vec<R::Elem>) -> LaurentPoly<R::Elem> {
        while coeffs.last().is_some_and(|c| self.base.is_zero(c)) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| self.base.is_zero(c)).count();
        if lead > 0 {
            coeffs.drain(..lead);
            low += lead as i64;
        }
        if coeffs.is_empty() {
            low = 0;
        }
        LaurentPoly { low, coeffs }
    }

    /// Evaluates at an invertible element of the base ring.
    pub fn eval(&self, p: &LaurentPoly<R::Elem>, at: &R::Elem) -> Option<R::Elem> {
        if p.is_zero() {
            return Some(self.base.zero());
        }
        // Horner on the polynomial part, then multiply by at^low.
        let mut acc = self.base.zero();
        for c in p.coeffs.iter().rev() {
            acc = self.base.add(&self.base.mul(&acc, at), c);
        }
        let shift = self.base.pow_signed(at, p.low)?;
        Some(self.base.mul(&acc, &shift))
    }

    /// Applies a ring map to every coefficient.
    pub fn map_coeffs<S: Ring>(
        &self,
        target: &LaurentRing<S>,
        p: &LaurentPoly<R::Elem>,
        f: impl Fn(&R::Elem) -> S::Elem,
    ) -> LaurentPoly<S::Elem> {
        target.normalize(p.low, p.coeffs.iter().map(f).collect())
    }
}

impl<R: Field> LaurentRing<R> {
    /// Exact quotient `p / (t - root)`.
    ///
    /// Fails when `p(root) != 0`.
    pub fn exact_div(
        &self,
        p: &LaurentPoly<R::Elem>,
        root: &R::Elem,
    ) -> Result<LaurentPoly<R::Elem>, ScalarError> {
        if p.is_zero() {
            return Ok(p.clone());
        }
        if self.base.is_zero(root) {
            return Err(ScalarError::NotDivisible("root is zero".into()));
        }
        // p = t^low * P(t), P of degree d; synthetic division of P by (t - root).
        let a = &p.coeffs;
        let d = a.len() - 1;
        if d == 0 {
            return Err(ScalarError::NotDivisible(format!(
                "{} does not vanish at {}",
                self.format(p),
                self.base.format(root)
            )));
        }
        let mut quot = vec![self.base.zero(); d];
        quot[d - 1] = a[d].clone();
        for k in (1..d).rev() {
            quot[k - 1] = self.base.add(&a[k], &self.base.mul(root, &quot[k]));
        }
        let remainder = self.base.add(&a[0], &self.base.mul(root, &quot[0]));
        if !self.base.is_zero(&remainder) {
            return Err(ScalarError::NotDivisible(format!(
                "{} does not vanish at {}",
                self.format(p),
                self.base.format(root)
            )));
        }
        Ok(self.normalize(p.low, quot))
    }
}

impl<R: Ring> Ring for LaurentRing<R> {
    type Elem = LaurentPoly<R::Elem>;

    fn zero(&self) -> Self::Elem {
        LaurentPoly { low: 0, coeffs: vec![] }
    }
    fn one(&self) -> Self::Elem {
        self.constant(self.base.one())
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.coeffs.is_empty()
    }
    fn is_one(&self, a: &Self::Elem) -> bool {
        a.low == 0 && a.coeffs.len() == 1 && self.base.is_one(&a.coeffs[0])
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.is_zero() {
            return b.clone();
        }
        if b.is_zero() {
            return a.clone();
        }
        let lo = a.low.min(b.low);
        let hi = a.high().unwrap().max(b.high().unwrap());
        let mut coeffs = vec![self.base.zero(); (hi - lo + 1) as usize];
        for (e, c) in a.iter() {
            coeffs[(e - lo) as usize] = c.clone();
        }
        for (e, c) in b.iter() {
            self.base.add_assign(&mut coeffs[(e - lo) as usize], c);
        }
        self.normalize(lo, coeffs)
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        LaurentPoly { low: a.low, coeffs: a.coeffs.iter().map(|c| self.base.neg(c)).collect() }
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        // Single-term factors are the common case (powers of t).
        if a.coeffs.len() == 1 || b.coeffs.len() == 1 {
            let (single, other) = if a.coeffs.len() == 1 { (a, b) } else { (b, a) };
            let c = &single.coeffs[0];
            let coeffs = if self.base.is_one(c) {
                other.coeffs.clone()
            } else {
                other.coeffs.iter().map(|x| self.base.mul(x, c)).collect()
            };
            return self.normalize(single.low + other.low, coeffs);
        }
        let mut coeffs = vec![self.base.zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if self.base.is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if self.base.is_zero(y) {
                    continue;
                }
                let prod = self.base.mul(x, y);
                self.base.add_assign(&mut coeffs[i + j], &prod);
            }
        }
        self.normalize(a.low + b.low, coeffs)
    }

    fn from_rational(&self, r: &Rational) -> Self::Elem {
        self.constant(self.base.from_rational(r))
    }

    fn try_inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        if a.coeffs.len() != 1 {
            return None;
        }
        let inv = self.base.try_inv(&a.coeffs[0])?;
        Some(self.monomial(-a.low, inv))
    }

    fn format(&self, a: &Self::Elem) -> String {
        if a.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (e, c) in a.iter() {
            if self.base.is_zero(c) {
                continue;
            }
            let var = match e {
                0 => String::new(),
                1 => "t".into(),
                _ => format!("t^{e}"),
            };
            append_term(&mut out, &self.base, c, &var);
        }
        out
    }

    fn is_atomic(&self, a: &Self::Elem) -> bool {
        a.coeffs.len() <= 1 && a.coeffs.iter().all(|c| self.base.is_atomic(c))
    }
}

/// Appends `c*var` to a sum being printed, handling signs and unit
/// coefficients. Shared by all polynomial printers.
pub(crate) fn append_term<R: Ring>(out: &mut String, ring: &R, c: &R::Elem, var: &str) {
    let text = ring.format(c);
    let (negative, body) = match text.strip_prefix('-') {
        Some(rest) if ring.is_atomic(c) => (true, rest.to_string()),
        _ => (false, text),
    };
    let body = if ring.is_atomic(c) { body } else { format!("({body})") };
    let piece = match (var.is_empty(), body.as_str()) {
        (true, _) => body.clone(),
        (false, "1") => var.to_string(),
        (false, _) => format!("{body}*{var}"),
    };
    if out.is_empty() {
        if negative {
            out.push('-');
        }
    } else {
        out.push_str(if negative { " - " } else { " + " });
    }
    out.push_str(&piece);
}

/// `[m]_t = 1 + t + ... + t^(m-1)` over the rationals.
pub fn qint(m: u32) -> LaurentPoly<Rational> {
    let ring = QLaurent::default();
    ring.from_terms((0..m as i64).map(|e| (e, ring.base.one())))
}

/// `[m]_t! = [m]_t [m-1]_t ... [1]_t` over the rationals.
pub fn qfact(m: u32) -> LaurentPoly<Rational> {
    let ring = QLaurent::default();
    (1..=m).fold(ring.one(), |acc, k| ring.mul(&acc, &qint(k)))
}

impl Default for QLaurent {
    fn default() -> Self {
        LaurentRing::new(RationalField)
    }
}
