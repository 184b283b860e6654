use thiserror::Error;

/// Errors raised by the algebra engine, the stack model and the CLI layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("attempted to invert zero")]
    ZeroInversion,
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("series power needs constant term 1")]
    NonUnitConstantTerm,
    #[error("series exponential needs a nilpotent argument (constant term 0)")]
    NonNilpotentArgument,
    #[error("polynomial does not split into linear factors over Q(z{conductor})")]
    IncompleteSplitting { conductor: u32 },
    #[error("action has infinite stabilizers: {0}")]
    InfiniteStabilizer(String),
    #[error("pair ({0}, {1}) has an empty fixed locus")]
    EmptyPairLocus(String, String),
    #[error("obstruction multiplicity {multiplicity} of {character} at ({g1}, {g2}) is not a non-negative integer")]
    NonIntegralMultiplicity {
        g1: String,
        g2: String,
        character: String,
        multiplicity: String,
    },
    #[error("negative multiplicity {multiplicity} of {character} in an Euler class")]
    NegativeMultiplicity {
        character: String,
        multiplicity: String,
    },
    #[error("coordinate set {sub} is not contained in {sup}")]
    NotASubset { sub: String, sup: String },
    #[error("classes belong to a different stack")]
    StackMismatch,
    #[error("Chow class is not homogeneous")]
    NonHomogeneous,
    #[error("root of unity exp(i*pi*{0}) is not in the working field Q(z{1})")]
    ConductorTooSmall(String, u32),
    #[error("restriction onto the local summand at {0} is not invertible")]
    SingularRestriction(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid configuration: {}", .0.join("; "))]
    Validation(Vec<String>),
    #[error("unknown bundle name `{0}`")]
    UnknownBundleName(String),
    #[error("unsupported combination: {0}")]
    UnsupportedCombination(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// True for errors that indicate a violated internal invariant rather
    /// than bad user input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::NonIntegralMultiplicity { .. }
                | Error::SingularRestriction(_)
                | Error::IncompleteSplitting { .. }
                | Error::RingMismatch
                | Error::StackMismatch
                | Error::ZeroInversion
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
