use alloc::string::String;

/// Failure modes shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("insufficient precision: {0}")]
    InsufficientPrecision(&'static str),
    #[error("outside convergence domain")]
    OutsideConvergence,
    #[error("not a unit")]
    NotAUnit,
    #[error("logarithm of zero")]
    LogOfZero,
    #[error("window exhausted: coefficient of exponent {0} is not known")]
    WindowExhausted(i64),
    #[error("not meromorphic (log-degree {0})")]
    NotMeromorphic(usize),
    #[error("not in A-prime")]
    NotInAPrime,
    #[error("invalid auxiliary integral for {0}")]
    InvalidAuxIntegral(&'static str),
    #[error("not simple-pole")]
    NotSimplePole,
    #[error("outside series-reachable locus: {0}")]
    Unreachable(String),
    #[error("requires splitting field: {0}")]
    RequiresSplitting(String),
    #[error("residue disc collision: {0}")]
    ResidueDiscCollision(String),
    #[error("not A-prime on end {0}")]
    NotAPrimeOnEnd(String),
    #[error("form not of the second kind: {0}")]
    NotSecondKind(String),
    #[error("fixture not evaluable: {0}")]
    NotEvaluable(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("mismatched primes {0} and {1}")]
    PrimeMismatch(u32, u32),
}

pub type Result<T> = core::result::Result<T, Error>;
