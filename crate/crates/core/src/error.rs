use num_bigint::BigInt;
use thiserror::Error;

use crate::numerics::Rational;

/// Errors raised by the exact computation layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("incompatible radicands sqrt({0}) and sqrt({1})")]
    IncompatibleRadicands(BigInt, BigInt),
    #[error("negative radicand {0}")]
    NegativeRadicand(Rational),
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero vector has no direction")]
    ZeroVector,
    #[error("truncation mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("variety mismatch: {0} vs {1}")]
    VarietyMismatch(String, String),
    #[error("non-integral pairing {0}")]
    NonIntegral(Rational),
    #[error("lattice violation: {0}")]
    Lattice(String),
    #[error("not in Kuznetsov component lattice: {0}")]
    NotInKu(String),
    #[error("not primitive (gcd {0})")]
    NotPrimitive(i64),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("phase undefined: {0}")]
    PhaseUndefined(String),
    #[error("no wall: {0}")]
    NoWall(String),
    #[error("internal invariant broken: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
