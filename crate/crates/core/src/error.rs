use thiserror::Error;

use crate::ring::RingDescriptor;

/// Errors raised by the library.
///
/// Every variant describes a caller mistake or an impossible request; none of
/// them signal an internal inconsistency.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch {
        left: RingDescriptor,
        right: RingDescriptor,
    },

    #[error("dimension mismatch: {left} vs {right} variables")]
    DimensionMismatch { left: usize, right: usize },

    #[error("{0} is not a unit")]
    NotAUnit(String),

    #[error("series is not invertible: linear coefficient {0} is not a unit")]
    NotInvertible(String),

    #[error("invalid modulus {0}: expected an integer >= 2")]
    InvalidModulus(String),

    #[error("invalid ring {0:?}: expected z, zmod:<m> or q")]
    InvalidRing(String),

    #[error("invalid generator {0}: generators must be positive")]
    InvalidGenerator(u64),

    #[error("invalid bound {0}: must be at least 1")]
    InvalidBound(u64),

    #[error("invalid dimension {0}: must be at least 1")]
    InvalidDimension(usize),

    #[error("invalid precision {0}: must be at least 1")]
    InvalidPrecision(usize),

    #[error("monoid too large: conductor search exceeded {limit}")]
    ConductorTooLarge { limit: u64 },

    #[error("constant term not allowed (at byte {pos}); series must lie in xR[[x]]")]
    ConstantTermNotAllowed { pos: usize },

    #[error("parse error at byte {pos}: {message}")]
    Parse { pos: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
