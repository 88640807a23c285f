//! First-order jets `K[eps]/(eps^2)` around a base point of `t`.
//!
//! With `t = zeta + eps`, the class of a Laurent polynomial `p(t)` is
//! `p(zeta) + p'(zeta) eps`, which is all the information needed to form
//! `(p / (t - zeta))(zeta)` once `p(zeta) = 0`.

use super::ring::{Rational, Ring};

/// `value + slope * eps`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Jet<E> {
    pub value: E,
    pub slope: E,
}

#[derive(Clone, Debug, PartialEq)]
pub struct JetRing<R> {
    base: R,
}

impl<R: Ring> JetRing<R> {
    pub fn new(base: R) -> Self {
        Self { base }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn constant(&self, c: R::Elem) -> Jet<R::Elem> {
        Jet { value: c, slope: self.base.zero() }
    }

    /// `point + eps`, the jet of the variable `t` at `point`.
    pub fn variable_at(&self, point: R::Elem) -> Jet<R::Elem> {
        Jet { value: point, slope: self.base.one() }
    }

    /// `c * eps`.
    pub fn infinitesimal(&self, c: R::Elem) -> Jet<R::Elem> {
        Jet { value: self.base.zero(), slope: c }
    }
}

impl<R: Ring> Ring for JetRing<R> {
    type Elem = Jet<R::Elem>;

    fn zero(&self) -> Self::Elem {
        self.constant(self.base.zero())
    }
    fn one(&self) -> Self::Elem {
        self.constant(self.base.one())
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        self.base.is_zero(&a.value) && self.base.is_zero(&a.slope)
    }
    fn is_one(&self, a: &Self::Elem) -> bool {
        self.base.is_one(&a.value) && self.base.is_zero(&a.slope)
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        Jet { value: self.base.add(&a.value, &b.value), slope: self.base.add(&a.slope, &b.slope) }
    }
    fn add_assign(&self, a: &mut Self::Elem, b: &Self::Elem) {
        self.base.add_assign(&mut a.value, &b.value);
        self.base.add_assign(&mut a.slope, &b.slope);
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        Jet { value: self.base.sub(&a.value, &b.value), slope: self.base.sub(&a.slope, &b.slope) }
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        Jet { value: self.base.neg(&a.value), slope: self.base.neg(&a.slope) }
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let value = self.base.mul(&a.value, &b.value);
        let mut slope = self.base.mul(&a.value, &b.slope);
        self.base.add_assign(&mut slope, &self.base.mul(&a.slope, &b.value));
        Jet { value, slope }
    }
    fn from_rational(&self, r: &Rational) -> Self::Elem {
        self.constant(self.base.from_rational(r))
    }
    fn try_inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        // (v + s eps)^-1 = v^-1 - s v^-2 eps
        let inv = self.base.try_inv(&a.value)?;
        let slope = self.base.neg(&self.base.mul(&a.slope, &self.base.mul(&inv, &inv)));
        Some(Jet { value: inv, slope })
    }
    fn format(&self, a: &Self::Elem) -> String {
        format!("[{}; {}]", self.base.format(&a.value), self.base.format(&a.slope))
    }
    fn is_atomic(&self, _a: &Self::Elem) -> bool {
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::cyclo::CyclotomicField;
    use crate::scalars::laurent::{qint, LaurentRing};
    use crate::scalars::ring::Field;

    #[test]
    fn jet_of_polynomial_is_value_and_derivative() {
        let field = CyclotomicField::new(5);
        let jets = JetRing::new(field.clone());
        let t = jets.variable_at(field.zeta());
        // [5]_t at zeta: value 0, slope = derivative.
        let p = jets.qint_at(&t, 5);
        assert!(field.is_zero(&p.value));
        // Compare slope with exact division of [5]_t by (t - zeta).
        let lring = LaurentRing::new(field.clone());
        let lifted = lring.from_terms(qint(5).iter().map(|(e, c)| (e, field.from_rational(c))));
        let h = lring.exact_div(&lifted, &field.zeta()).unwrap();
        assert_eq!(lring.eval(&h, &field.zeta()).unwrap(), p.slope);
        let inv = jets.try_inv(&t).unwrap();
        assert!(jets.is_one(&jets.mul(&t, &inv)));
        assert!(field.div(&field.one(), &field.zero()).is_none());
    }
}
