use thiserror::Error;

/// Errors raised by group construction, the lemma constructions and the
/// theorem drivers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid prime {0}: expected an odd prime")]
    InvalidPrime(u64),

    #[error("closure has order {order}, which is not a power of {prime}")]
    NotAPGroup { order: usize, prime: u64 },

    #[error("closure exceeded the element cap of {cap}")]
    OrderCapExceeded { cap: usize },

    #[error("more than {cap} normal subgroups")]
    EnumerationCapExceeded { cap: usize },

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("subgroup is not contained in the ambient subgroup")]
    NotContained,

    #[error("quotient is not elementary abelian")]
    NotElementaryAbelian,

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("no admissible index-p subgroup survived the filters")]
    SelectionExhausted,

    #[error("cl_f did not terminate within {cap} levels")]
    ClFDiverged { cap: usize },

    #[error("internal contradiction: {0}")]
    InternalContradiction(String),

    #[error("the trivial group is not a valid input")]
    TrivialGroup,

    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("line {line}: matrix is not upper unitriangular")]
    NotUnitriangular { line: usize },

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    #[error("{0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::PreconditionViolated(msg.into())
}

pub(crate) fn contradiction(msg: impl Into<String>) -> Error {
    Error::InternalContradiction(msg.into())
}
