//! Error types shared by every module.

use thiserror::Error;

/// Surface and placement validation failures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("Weichold violation: no Klein surface has (g, t, s) = ({g}, {t}, {s})")]
    Weichold { g: u32, t: u32, s: u32 },
    #[error("oval {oval} has an odd number of segments ({count})")]
    OddSegmentCount { oval: usize, count: usize },
    #[error("oval {oval}: segment signs do not alternate")]
    NonAlternatingSigns { oval: usize },
    #[error("surface marked noncommutative but every sign is +")]
    PositiveDefiniteMarkedAsWitt,
    #[error("surface marked commutative but carries a - sign")]
    NegativeSignOnKleinCurve,
    #[error("topology has {expected} ovals but {found} were described")]
    OvalCountMismatch { expected: u32, found: usize },
    #[error("unrealizable Witt surface: {0}")]
    Unrealizable(String),
    #[error("invalid placement: {0}")]
    Placement(String),
    #[error("weight {0} is below 2")]
    WeightTooSmall(u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("kind mismatch: {left} vs {right}")]
    KindMismatch { left: String, right: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("inconsistent data: {0}")]
    InconsistentData(String),
    #[error("valuation of the zero series is undefined")]
    UndefinedValuation,
    #[error("mismatched ring parameters: {0}")]
    MismatchedRing(String),
    #[error(transparent)]
    Validation(#[from] ValidationError),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("unavailable: {0}")]
    Unavailable(String),
    #[error("unknown name: {0}")]
    UnknownName(String),
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) => 1,
            Error::Validation(_) | Error::UnknownName(_) => 2,
            _ => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
