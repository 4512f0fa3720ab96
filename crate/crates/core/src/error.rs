use num_bigint::BigInt;
use thiserror::Error;

use crate::divisor::{Point, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("divisor is not integral: coefficient {coeff} at point {point}")]
    NonIntegralDivisor { point: Point, coeff: Box<Rat> },

    #[error("negative multiplicity {multiplicity} at point {point}: not a polynomial")]
    NotAPolynomial { point: Point, multiplicity: BigInt },

    #[error("D+ + D- must be <= 0, but equals {value} at point {point}")]
    SumConditionViolated { point: Point, value: Box<Rat> },

    #[error("({d}, {e}) is not a quotient singularity type: gcd(e mod d, d) != 1")]
    NotCoprime { d: BigInt, e: BigInt },

    #[error("invalid cone: {0}")]
    InvalidCone(String),

    #[error("point {point} is not a fixed point (D+ + D- = 0 there)")]
    NotAFixedPoint { point: Point },

    #[error("generator list is empty")]
    EmptyGenerators,

    #[error("degree must be positive, got {0}")]
    NonPositiveDegree(BigInt),

    #[error("degrees {d_plus} and {d_minus} are not coprime")]
    DegreesNotCoprime { d_plus: BigInt, d_minus: BigInt },

    #[error("cyclic cover with gcd(b, d) = {k} > 1 requires both divisors supported in {{0}}, but point {point} is in the support")]
    UnsupportedCoverSupport { k: BigInt, point: Point },

    #[error("matrix dimensions do not match: {0}")]
    DimensionMismatch(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
