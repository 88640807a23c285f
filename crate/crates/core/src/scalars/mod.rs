//! Coefficient domains: rationals, Laurent polynomials in `t`, cyclotomic
//! fields, first-order jets and floating complex numbers.

mod complex;
mod cyclo;
mod jet;
mod laurent;
mod precise;
mod ring;

pub use complex::{ComplexApprox, ComplexField, NUMERIC_ZERO};
pub use cyclo::{cyclotomic_polynomial, embedded_abs, Cyclo, CyclotomicField};
pub use jet::{Jet, JetRing};
pub use laurent::{qfact, qint, LaurentPoly, LaurentRing, QLaurent};
pub(crate) use laurent::append_term;
pub use precise::{nearest_small_rational, rational_nth_root};
pub use ring::{parse_rational, Field, Rational, RationalField, Ring};
pub(crate) use ring::rat;

/// Evaluates `p` at `t = zeta_l`.
pub fn specialize(p: &LaurentPoly<Rational>, l: u32) -> Cyclo {
    CyclotomicField::new(l).specialize(p)
}
