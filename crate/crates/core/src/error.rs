use alloc::string::String;

/// Errors raised by the exact engine.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("no element of order {n} modulo {q}")]
    NoSuchExponent { q: u64, n: u64 },
    #[error("{k} is not an admissible twist exponent modulo {q}")]
    BadTwist { q: u64, k: u64 },
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("invalid monodromy: {0}")]
    InvalidMonodromy(String),
    #[error("characters belong to different groups")]
    SpecMismatch,
    #[error("inner product is not rational")]
    IrrationalInnerProduct,
    #[error("division by zero")]
    DivisionByZero,
    #[error("exponent {t} is not a unit modulo {n}")]
    BadExponent { t: u64, n: u64 },
    #[error("element is not real")]
    NotReal,
    #[error("sign could not be decided up to {0} bits")]
    SignUndecided(u32),
    #[error("generator is degenerate (alpha equals its conjugate)")]
    DegenerateGenerator,
    #[error("operation not supported for the {0} family")]
    UnsupportedFamily(&'static str),
    #[error("identity `{check}` failed: {difference}")]
    IdentityFailed { check: String, difference: String },
    #[error("model is singular (vanishing discriminant)")]
    SingularModel,
    #[error("expected a polynomial of degree 5 or 6, got degree {0}")]
    WrongDegree(usize),
    #[error("invariant violated: {0}")]
    Inconsistent(String),
}

pub type Result<T> = core::result::Result<T, Error>;
