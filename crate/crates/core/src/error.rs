use thiserror::Error;

/// Every failure the library can report.
///
/// Variants map one-to-one onto the CLI's exit codes (see [`Error::exit_code`]).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial is zero or constant")]
    DegeneratePolynomial,
    #[error("polynomial is reducible over the rationals (factor {factor})")]
    NotIrreducible { factor: String },
    #[error("irreducibility could not be certified within the search budget")]
    IrreducibilityUnverified,
    #[error("isolating interval must satisfy lo < hi")]
    EmptyInterval,
    #[error("interval contains {count} real roots, expected exactly one")]
    NoRootIsolated { count: usize },
    #[error("the isolated root is not greater than one")]
    BetaNotGreaterThanOne,
    #[error("endpoint l must lie in (-1, 0]")]
    EndpointOutOfRange,
    #[error("division by zero")]
    DivisionByZero,
    #[error("point lies outside the transformation domain")]
    OutOfDomain,
    #[error("reference strings are not periodic within {budget} iterations")]
    RefsNotPeriodic { budget: usize },
    #[error("endpoint l must lie in [-beta/(beta+1), -1/(beta+1)] for this operation")]
    EndpointOutsideRestriction,
    #[error("no representation found within {max_k} scalings")]
    NoRepresentationFound { max_k: usize },
    #[error("gap between points {index} and {next} could not be labelled")]
    UnlabeledGap { index: i64, next: i64 },
    #[error("gap label {letter} is not realized by any searched pair")]
    GapNotRealized { letter: usize },
    #[error("inconsistent morphism image for letter {letter}: {detail}")]
    InconsistentImage { letter: usize, detail: String },
    #[error("word window too short for horizon {horizon}")]
    HorizonTooShort { horizon: usize },
    #[error("letter {letter} has no tabulated image")]
    LetterNotTabulated { letter: usize },
    #[error("search budget exhausted: {0}")]
    BudgetExhausted(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) => 2,
            Error::DegeneratePolynomial => 3,
            Error::NotIrreducible { .. } => 4,
            Error::IrreducibilityUnverified => 5,
            Error::EmptyInterval => 6,
            Error::NoRootIsolated { .. } => 7,
            Error::BetaNotGreaterThanOne => 8,
            Error::EndpointOutOfRange => 9,
            Error::DivisionByZero => 10,
            Error::OutOfDomain => 11,
            Error::RefsNotPeriodic { .. } => 12,
            Error::EndpointOutsideRestriction => 13,
            Error::NoRepresentationFound { .. } => 14,
            Error::UnlabeledGap { .. } => 15,
            Error::GapNotRealized { .. } => 16,
            Error::InconsistentImage { .. } => 17,
            Error::HorizonTooShort { .. } => 18,
            Error::LetterNotTabulated { .. } => 19,
            Error::BudgetExhausted(_) => 20,
            Error::InvalidArgument(_) => 21,
        }
    }

    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DegeneratePolynomial => "DegeneratePolynomial",
            Error::NotIrreducible { .. } => "NotIrreducible",
            Error::IrreducibilityUnverified => "IrreducibilityUnverified",
            Error::EmptyInterval => "EmptyInterval",
            Error::NoRootIsolated { .. } => "NoRootIsolated",
            Error::BetaNotGreaterThanOne => "BetaNotGreaterThanOne",
            Error::EndpointOutOfRange => "EndpointOutOfRange",
            Error::DivisionByZero => "DivisionByZero",
            Error::OutOfDomain => "OutOfDomain",
            Error::RefsNotPeriodic { .. } => "RefsNotPeriodic",
            Error::EndpointOutsideRestriction => "EndpointOutsideRestriction",
            Error::NoRepresentationFound { .. } => "NoRepresentationFound",
            Error::UnlabeledGap { .. } => "UnlabeledGap",
            Error::GapNotRealized { .. } => "GapNotRealized",
            Error::InconsistentImage { .. } => "InconsistentImage",
            Error::HorizonTooShort { .. } => "HorizonTooShort",
            Error::LetterNotTabulated { .. } => "LetterNotTabulated",
            Error::BudgetExhausted(_) => "BudgetExhausted",
            Error::Parse(_) => "Parse",
            Error::InvalidArgument(_) => "InvalidArgument",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
