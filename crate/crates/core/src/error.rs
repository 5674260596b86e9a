use thiserror::Error;

use crate::ops::ClosureError;
use crate::setio::SetError;
use crate::table::TableError;

/// A value lies outside the domain of the type it was meant to build.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum DomainError {
    #[error("{name} out of range: {value} is not in [0, 1]")]
    OutOfUnitInterval { name: &'static str, value: f64 },
    #[error("invalid penta vector (t={t}, c={c}, u={u}, f={f}): {reason}")]
    InvalidPenta {
        t: f64,
        c: f64,
        u: f64,
        f: f64,
        reason: &'static str,
    },
    #[error("penta vector has no unique bifuzzy preimage: {0}")]
    AmbiguousPreimage(&'static str),
    #[error("the balanced transform has no known inverse")]
    BalancedInverse,
    #[error("invalid Frank parameter s={0}: must be finite, positive and different from 1")]
    FrankParameter(f64),
}

/// Crate-wide error.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Domain(#[from] DomainError),
    #[error(transparent)]
    Closure(#[from] ClosureError),
    #[error(transparent)]
    Table(#[from] TableError),
    #[error(transparent)]
    Set(#[from] SetError),
}
