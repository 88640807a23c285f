use num_complex::Complex64;

use super::ring::{Field, Rational, Ring};
use num_traits::ToPrimitive;

/// Magnitude below which a floating coefficient counts as zero.
pub const NUMERIC_ZERO: f64 = 1e-12;

/// Double-precision complex numbers; only used where limits are taken or
/// where no exact root is available.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct ComplexField;

pub type ComplexApprox = Complex64;

impl Ring for ComplexField {
    type Elem = Complex64;

    fn zero(&self) -> Complex64 {
        Complex64::new(0.0, 0.0)
    }
    fn one(&self) -> Complex64 {
        Complex64::new(1.0, 0.0)
    }
    fn is_zero(&self, a: &Complex64) -> bool {
        a.norm() <= NUMERIC_ZERO
    }
    fn add(&self, a: &Complex64, b: &Complex64) -> Complex64 {
        a + b
    }
    fn sub(&self, a: &Complex64, b: &Complex64) -> Complex64 {
        a - b
    }
    fn neg(&self, a: &Complex64) -> Complex64 {
        -a
    }
    fn mul(&self, a: &Complex64, b: &Complex64) -> Complex64 {
        a * b
    }
    fn from_rational(&self, r: &Rational) -> Complex64 {
        Complex64::new(r.to_f64().unwrap_or(f64::NAN), 0.0)
    }
    fn try_inv(&self, a: &Complex64) -> Option<Complex64> {
        (!self.is_zero(a)).then(|| a.inv())
    }
    fn format(&self, a: &Complex64) -> String {
        match (a.re == 0.0, a.im == 0.0) {
            (_, true) => format!("{:?}", a.re),
            (true, false) => format!("{:?}*i", a.im),
            _ if a.im < 0.0 => format!("{:?} - {:?}*i", a.re, -a.im),
            _ => format!("{:?} + {:?}*i", a.re, a.im),
        }
    }
    fn is_atomic(&self, a: &Complex64) -> bool {
        a.re == 0.0 || a.im == 0.0
    }
}

impl Field for ComplexField {}
