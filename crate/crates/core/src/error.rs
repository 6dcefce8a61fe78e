use thiserror::Error;

/// Every failure a public operation can report.
///
/// `name()` gives the stable identifier used in the CLI error JSON.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid context: {0}")]
    InvalidContext(String),
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("invalid cocharacter: a'-b' != c'-d' at embedding {0}")]
    InvalidCochar(usize),
    #[error("character is not p-restricted")]
    NotPRestricted,
    #[error("depth {found} is below the required {required}")]
    DepthTooSmall { required: i64, found: i64 },
    #[error("central action is not trivial")]
    NotCentrallyTrivial,
    #[error("input is not in descended form")]
    NotDescended,
    #[error("type is not irreducible")]
    NonIrreducibleType,
    #[error("Jordan-Hoelder factors are not pairwise distinct")]
    DistinctnessViolated,
    #[error("weight is not a Jordan-Hoelder factor of the type")]
    NotAFactor,
    #[error("several intersection witnesses found")]
    AmbiguousWitness,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("search exhausted within radius {radius}")]
    SearchExhausted { radius: i64 },
    #[error("inertial type is not essentially self-dual")]
    NotSelfDual,
    #[error("trivial character")]
    TrivialCharacter,
    #[error("degenerate parameter")]
    DegenerateParameter,
    #[error("multiplier is not cyclotomic")]
    NotCyclotomic,
    #[error("internal consistency failure: {0}")]
    ConsistencyFailure(String),
    #[error("determinant does not have v-valuation 1")]
    WrongDeterminantValuation,
    #[error("matrix is not admissible")]
    NotAdmissible,
    #[error("a unit coefficient is zero")]
    ZeroUnit,
    #[error("deformation relation violated")]
    RelationViolated,
    #[error("truncation degree too short")]
    TruncationTooShort,
    #[error("integer overflow")]
    Overflow,
}

impl Error {
    pub fn name(&self) -> &'static str {
        match self {
            Error::InvalidContext(_) => "InvalidContext",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::InvalidCochar(_) => "InvalidCochar",
            Error::NotPRestricted => "NotPRestricted",
            Error::DepthTooSmall { .. } => "DepthTooSmall",
            Error::NotCentrallyTrivial => "NotCentrallyTrivial",
            Error::NotDescended => "NotDescended",
            Error::NonIrreducibleType => "NonIrreducibleType",
            Error::DistinctnessViolated => "DistinctnessViolated",
            Error::NotAFactor => "NotAFactor",
            Error::AmbiguousWitness => "AmbiguousWitness",
            Error::PreconditionViolated(_) => "PreconditionViolated",
            Error::SearchExhausted { .. } => "SearchExhausted",
            Error::NotSelfDual => "NotSelfDual",
            Error::TrivialCharacter => "TrivialCharacter",
            Error::DegenerateParameter => "DegenerateParameter",
            Error::NotCyclotomic => "NotCyclotomic",
            Error::ConsistencyFailure(_) => "ConsistencyFailure",
            Error::WrongDeterminantValuation => "WrongDeterminantValuation",
            Error::NotAdmissible => "NotAdmissible",
            Error::ZeroUnit => "ZeroUnit",
            Error::RelationViolated => "RelationViolated",
            Error::TruncationTooShort => "TruncationTooShort",
            Error::Overflow => "Overflow",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
