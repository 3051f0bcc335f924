use thiserror::Error;

pub use crate::formula::ParseError;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("state vector is not normalized (norm {0})")]
    NotNormalized(f64),

    #[error("operator is not Hermitian (‖A − A†‖_F = {0:e})")]
    NotHermitian(f64),

    #[error("matrix is not an orthogonal projector ({0})")]
    NotProjector(String),

    #[error("zero-probability branch (⟨Ψ|P|Ψ⟩ = {0:e})")]
    ZeroProbabilityBranch(f64),

    #[error("ambiguous numerical rank: eigenvalue {0:e} is neither zero nor clearly nonzero")]
    RankAmbiguous(f64),

    #[error("precondition violated: {0}")]
    PreconditionViolation(String),

    #[error("truth value {value} is not legal in the {system} system")]
    IllegalValueForSystem { value: f64, system: &'static str },

    #[error("truth degree {0} lies outside [0, 1]")]
    DegreeOutOfRange(f64),

    #[error("valuation carries no state")]
    NoState,

    #[error("table-driven valuations cannot value lattice elements")]
    NotLatticeBacked,

    #[error("unbound atom `{0}`")]
    UnboundAtom(String),

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("invalid configuration: {field}: {reason}")]
    ConfigInvalid { field: String, reason: String },

    #[error("index {index} out of range (length {len})")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("invalid tolerance: {0}")]
    InvalidTolerance(String),

    #[error("scenario: {0}")]
    Scenario(String),
}

impl Error {
    pub(crate) fn config(field: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::ConfigInvalid {
            field: field.into(),
            reason: reason.into(),
        }
    }

    /// Whether the error stems from invalid user input rather than a failure during computation.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::DimensionMismatch { .. }
                | Error::NonFinite(_)
                | Error::NotSquare { .. }
                | Error::NotNormalized(_)
                | Error::NotHermitian(_)
                | Error::NotProjector(_)
                | Error::IllegalValueForSystem { .. }
                | Error::DegreeOutOfRange(_)
                | Error::UnboundAtom(_)
                | Error::Parse(_)
                | Error::ConfigInvalid { .. }
                | Error::IndexOutOfRange { .. }
                | Error::InvalidTolerance(_)
                | Error::Scenario(_)
                | Error::NoState
                | Error::NotLatticeBacked
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
