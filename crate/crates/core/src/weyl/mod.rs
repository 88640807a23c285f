//! Sparse PBW normal-form arithmetic in quantized Weyl algebras.

mod algebra;
mod monomial;
mod special;

pub use algebra::{RootAlgebra, SymbolicAlgebra, WeylAlgebra, WeylElement};
pub use monomial::Monomial;
pub use special::{
    act, basis_element, divisible_by_f, quotient_image, specialize_at_one, specialize_element, twist_by_f,
    LocalizedCoeff, QuotientKey, XPoly,
};
