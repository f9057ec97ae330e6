//! Exact arithmetic for recursive towers of function fields arising from
//! Drinfeld modular curves, the Deuring-type polynomials that describe their
//! splitting loci, and the supersingular locus of the rank-two family
//! `phi_T = u tau^2 + (u + T) tau + T`.

pub mod check;
pub mod dense;
pub mod deuring;
pub mod drinfeld;
pub mod error;
pub mod fields;
pub mod modular;
pub mod polys;
pub mod primes;
pub mod suite;
pub mod towers;

pub use dense::DensePoly;
pub use fields::{Field, FieldCtx, FieldElem, FieldError};
