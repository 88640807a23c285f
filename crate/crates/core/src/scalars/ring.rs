use std::fmt;

use num_rational::BigRational;

/// Exact rational numbers.
pub type Rational = BigRational;

/// A commutative coefficient ring described by a runtime value.
///
/// Elements are plain data; every operation goes through the ring so that
/// rings parameterized at runtime (the cyclotomic field of level `l`, Laurent
/// polynomials over it) need not store their parameters in each element.
/// Implementations keep elements in a canonical form, so `==` on elements is
/// equality in the ring for all exact rings.
pub trait Ring: Clone + fmt::Debug + PartialEq + Send + Sync {
    type Elem: Clone + fmt::Debug + PartialEq + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn from_rational(&self, r: &Rational) -> Self::Elem;

    /// Multiplicative inverse, if `a` is a unit.
    fn try_inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// Canonical text form, written in terms of `t` (Laurent rings) or `q`
    /// (cyclotomic fields).
    fn format(&self, a: &Self::Elem) -> String;

    /// Whether `format` yields a product-like atom that needs no parentheses
    /// when followed by `*`.
    fn is_atomic(&self, a: &Self::Elem) -> bool;

    fn is_one(&self, a: &Self::Elem) -> bool {
        self.is_zero(&self.sub(a, &self.one()))
    }

    fn equal(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.is_zero(&self.sub(a, b))
    }

    fn add_assign(&self, a: &mut Self::Elem, b: &Self::Elem) {
        *a = self.add(a, b);
    }

    fn from_int(&self, n: i64) -> Self::Elem {
        self.from_rational(&Rational::from_integer(n.into()))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// `a^e` for any integer `e`; `None` when `e < 0` and `a` is not a unit.
    fn pow_signed(&self, a: &Self::Elem, e: i64) -> Option<Self::Elem> {
        if e >= 0 {
            Some(self.pow(a, e as u64))
        } else {
            self.try_inv(a).map(|inv| self.pow(&inv, e.unsigned_abs()))
        }
    }

    /// The quantum integer `[m] = 1 + t + ... + t^(m-1)` evaluated at `t`.
    fn qint_at(&self, t: &Self::Elem, m: u32) -> Self::Elem {
        let mut acc = self.zero();
        let mut power = self.one();
        for _ in 0..m {
            self.add_assign(&mut acc, &power);
            power = self.mul(&power, t);
        }
        acc
    }

    /// The quantum factorial `[m]! = [m][m-1]...[1]` evaluated at `t`.
    fn qfact_at(&self, t: &Self::Elem, m: u32) -> Self::Elem {
        (1..=m).fold(self.one(), |acc, k| self.mul(&acc, &self.qint_at(t, k)))
    }
}

/// Division for rings that are fields.
pub trait Field: Ring {
    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.try_inv(b).map(|inv| self.mul(a, &inv))
    }
}

/// The rational numbers as a [`Ring`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RationalField;

impl Ring for RationalField {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::from_integer(0.into())
    }
    fn one(&self) -> Rational {
        Rational::from_integer(1.into())
    }
    fn is_zero(&self, a: &Rational) -> bool {
        num_traits::Zero::is_zero(a)
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn from_rational(&self, r: &Rational) -> Rational {
        r.clone()
    }
    fn try_inv(&self, a: &Rational) -> Option<Rational> {
        (!self.is_zero(a)).then(|| a.recip())
    }
    fn format(&self, a: &Rational) -> String {
        a.to_string()
    }
    fn is_atomic(&self, _a: &Rational) -> bool {
        true
    }
    fn add_assign(&self, a: &mut Rational, b: &Rational) {
        *a += b;
    }
}

impl Field for RationalField {}

/// Parses `INT` or `INT/INT`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: num_bigint::BigInt = n.trim().parse().ok()?;
            let d: num_bigint::BigInt = d.trim().parse().ok()?;
            if num_traits::Zero::is_zero(&d) {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}

pub(crate) fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
