use std::fmt;

use reglab_core::Error;

/// Failures surfaced by the command line, each with its own exit status.
#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    /// Malformed or rejected input.
    Parse(String),
    /// Reading an input file failed.
    Io(String),
    /// A condition check or self-test did not pass.
    ConditionFailed(String),
    Core(Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Io(_) => 2,
            CliError::ConditionFailed(_) => 5,
            CliError::Core(e) => match e {
                Error::Unreachable(_) | Error::NotEvaluable(_) => 3,
                Error::WindowExhausted(_) => 4,
                Error::InsufficientPrecision(_) | Error::OutsideConvergence | Error::NotAUnit | Error::LogOfZero => 1,
                _ => 2,
            },
        }
    }

    /// Short machine-readable name.
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Parse(_) => "parse",
            CliError::Io(_) => "io",
            CliError::ConditionFailed(_) => "condition-failed",
            CliError::Core(e) => match e {
                Error::Unreachable(_) => "unreachable",
                Error::NotEvaluable(_) => "not-evaluable",
                Error::WindowExhausted(_) => "window-exhausted",
                Error::InsufficientPrecision(_) => "insufficient-precision",
                Error::OutsideConvergence => "outside-convergence",
                Error::NotAUnit => "not-a-unit",
                Error::LogOfZero => "log-of-zero",
                Error::NotMeromorphic(_) => "not-meromorphic",
                Error::NotInAPrime => "not-in-a-prime",
                Error::InvalidAuxIntegral(_) => "invalid-aux-integral",
                Error::NotSimplePole => "not-simple-pole",
                Error::RequiresSplitting(_) => "requires-splitting",
                Error::ResidueDiscCollision(_) => "residue-disc-collision",
                Error::NotAPrimeOnEnd(_) => "not-a-prime-on-end",
                Error::NotSecondKind(_) => "not-second-kind",
                Error::Invalid(_) => "invalid",
                Error::PrimeMismatch(..) => "prime-mismatch",
            },
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(m) => write!(f, "parse error: {}", m),
            CliError::Io(m) => write!(f, "io error: {}", m),
            CliError::ConditionFailed(m) => write!(f, "condition failed: {}", m),
            CliError::Core(e) => write!(f, "{}", e),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}
