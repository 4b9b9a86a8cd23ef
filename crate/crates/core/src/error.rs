use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the zero vector has no slope")]
    ZeroVector,
    #[error("coordinates must be nonnegative")]
    NegativeCoordinate,
    #[error("gcd of (0, 0) is undefined")]
    BothZero,
    #[error("vector ({0}) is not phi-minimal: its coordinates share a factor")]
    NotPhiMinimal(String),
    #[error("a transformed column left the nonnegative quadrant")]
    NegativeResult,
    #[error("two generators share the slope {0}")]
    DuplicatePhi(String),
    #[error("normalization moved a generator outside the nonnegative quadrant")]
    NormalizationEscapesCone,
    #[error("expected 2 or 3 generators, got {0}")]
    EmbeddingDimension(usize),
    #[error("the generators do not generate minimally: ({0}) is redundant")]
    NotMinimallyGenerated(String),
    #[error("element is not in the monoid")]
    NotMember,
    #[error("elasticity of the zero element is undefined")]
    ZeroElement,
    #[error("gcd({0}, {1}) is not 1")]
    GcdNotOne(String, String),
    #[error("representation does not sum to the first coordinate")]
    RepMismatch,
    #[error("factorization does not map to the target vector")]
    FactorizationMismatch,
    #[error("this computation needs bc - ad = 1")]
    StarRequired,
    #[error("multiplier {k} is not divisible by {modulus}")]
    PeriodicityViolated { k: String, modulus: String },
    #[error("element lies on the wrong side of the middle generator for this formula")]
    WrongBranch,
    #[error("generators must be nonzero")]
    ZeroGenerator,
    #[error("generator ({0}) is listed twice")]
    DuplicateGenerator(String),
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("coordinates too large for the brute-force enumerator")]
    OracleOverflow,
    #[error("k must be positive")]
    NonPositiveMultiplier,
}

impl Error {
    /// Stable machine-readable identifier used in JSON reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::ZeroVector => "ZeroVector",
            Error::NegativeCoordinate => "NegativeCoordinate",
            Error::BothZero => "BothZero",
            Error::NotPhiMinimal(_) => "NotPhiMinimal",
            Error::NegativeResult => "NegativeResult",
            Error::DuplicatePhi(_) => "DuplicatePhi",
            Error::NormalizationEscapesCone => "NormalizationEscapesCone",
            Error::EmbeddingDimension(_) => "EmbeddingDimension",
            Error::NotMinimallyGenerated(_) => "NotMinimallyGenerated",
            Error::NotMember => "NotMember",
            Error::ZeroElement => "ZeroElement",
            Error::GcdNotOne(..) => "GcdNotOne",
            Error::RepMismatch => "RepMismatch",
            Error::FactorizationMismatch => "FactorizationMismatch",
            Error::StarRequired => "StarRequired",
            Error::PeriodicityViolated { .. } => "PeriodicityViolated",
            Error::WrongBranch => "WrongBranch",
            Error::ZeroGenerator => "ZeroGenerator",
            Error::DuplicateGenerator(_) => "DuplicateGenerator",
            Error::Syntax { .. } => "SyntaxError",
            Error::OracleOverflow => "OracleOverflow",
            Error::NonPositiveMultiplier => "NonPositiveMultiplier",
        }
    }
}
