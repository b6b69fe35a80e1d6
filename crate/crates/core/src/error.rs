use thiserror::Error;

/// Errors raised by the core computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid modulus {0}: expected 5 <= n < 32768")]
    InvalidModulus(u64),

    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u32, right: u32 },

    #[error("{value} is not a unit modulo {modulus}")]
    NotAUnit { value: u32, modulus: u32 },

    #[error("degree {degree} outside the supported range 0..={max}")]
    DegreeOutOfRange { degree: u32, max: u32 },

    #[error("(1 - g)^2 = {numerator} is not divisible by n^2 = {denominator}")]
    NonIntegralChi { numerator: u64, denominator: u64 },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("the action of G on C x C is not free")]
    NotFree,

    #[error("no witness found for n = {n}, m = {m}")]
    NoWitness { n: u32, m: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
