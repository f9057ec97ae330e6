use thiserror::Error;

use crate::fields::FieldError;
use crate::polys::PolyError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("the prime {0} is excluded (it divides the level)")]
    ExcludedPrime(String),
    #[error("{0} is not a monic irreducible polynomial in T")]
    NotPrime(String),
    #[error("{what} = {value} exceeds the limit {limit}")]
    Guard {
        what: &'static str,
        value: u128,
        limit: u128,
    },
    #[error("invalid parameter: {0}")]
    Invalid(String),
    #[error("step polynomial vanishes identically at {0}")]
    Degenerate(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
