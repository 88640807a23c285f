//! Exact computation in quantized Weyl algebras `A_t^n` and their
//! specializations `A_q^n` at roots of unity: PBW normal forms, the center
//! and its Azumaya locus, the divided-commutator Poisson bracket, endomorphism
//! lifts and the prime-indexed limit map to polynomial symplectomorphisms.

pub mod acceptance;
pub mod center;
pub mod error;
pub mod exprio;
pub mod hatmap;
pub mod matrep;
pub mod morphisms;
pub mod poisson;
pub mod scalars;
pub mod weyl;

pub use error::{AlgebraError, ScalarError};
