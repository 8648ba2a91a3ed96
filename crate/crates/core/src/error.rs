use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("dimension mismatch in {what}: expected {expected}, found {found}")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("vertex {vertex}: self-intersection {weight} must be at most -1")]
    NonNegativeWeight { vertex: usize, weight: i64 },

    #[error("edge {i}-{j}: negative multiplicity {mult}")]
    NegativeMultiplicity { i: usize, j: usize, mult: i64 },

    #[error("vertex {vertex}: negative arithmetic genus {genus}")]
    NegativeGenus { vertex: usize, genus: i64 },

    #[error("invalid edge {i}-{j}: {reason}")]
    InvalidEdge { i: usize, j: usize, reason: String },

    #[error("graph cannot be analyzed: {0}")]
    InvalidGraph(String),

    #[error("vertex index {index} out of range for {n} vertices")]
    VertexOutOfRange { index: usize, n: usize },

    #[error("a fundamental half-space needs two distinct vertices, got {0} twice")]
    SameVertex(usize),

    #[error("divisor is not effective")]
    NotEffective,

    #[error("divisor is zero")]
    ZeroDivisor,

    #[error("matrix is singular")]
    Singular,

    #[error("divisor is not strictly anti-nef (D.E_{vertex} = {value}); no multiplier is guaranteed")]
    NoMultiplierGuarantee { vertex: usize, value: String },

    #[error("bad family parameters: {0}")]
    FamilyParameter(String),

    #[error("json: {0}")]
    Json(String),

    /// A computed certificate failed re-verification. Always a bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn syntax(line: usize, message: impl Into<String>) -> Self {
        Error::Syntax {
            line,
            message: message.into(),
        }
    }

    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
