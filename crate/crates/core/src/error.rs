use thiserror::Error;

use crate::eisenstein::EisensteinInteger;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parameter n={n} outside the supported range |n| <= {max}")]
    ParameterOutOfRange { n: i64, max: i64 },

    #[error("field elements belong to different fields (n={left} and n={right})")]
    ParameterMismatch { left: i64, right: i64 },

    #[error("Legendre symbol mod 3 undefined for {0}, which is divisible by 3")]
    DivisibleByThree(i128),

    #[error("division by zero in Z[ζ]")]
    DivisionByZero,

    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,

    #[error("no divisor of {target} with norm {norm}")]
    NoDivisor {
        target: EisensteinInteger,
        norm: u128,
    },

    #[error("no associate of ({a0}, {a1}) gives an integral m for n={n}")]
    NonIntegralM { n: i64, a0: i128, a1: i128 },

    #[error("group ring element has non-integral coordinates")]
    NonIntegralCoordinates,

    #[error("operation requires a {expected} field, n={n} is {actual}")]
    WrongCase {
        n: i64,
        expected: &'static str,
        actual: &'static str,
    },

    #[error("internal inconsistency for n={n}: {detail}")]
    Inconsistent { n: i64, detail: String },
}
