use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex {vertex} out of range for a digraph on {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },

    #[error("loop arc ({0}, {0}) is not allowed")]
    LoopArc(usize),

    #[error("duplicate arc ({0}, {1})")]
    DuplicateArc(usize, usize),

    #[error("forest does not match the host digraph: {0}")]
    VertexMismatch(String),

    #[error("search budget exceeded")]
    BudgetExceeded,

    #[error("input is not {0}")]
    WrongClass(&'static str),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid CNF instance: {0}")]
    InvalidCnf(String),

    #[error("instance too large for exhaustive oracle: {0}")]
    TooLarge(String),

    #[error("assignment does not NAE-satisfy the instance")]
    NotNaeSatisfying,

    #[error("gadget is missing role labels: {0}")]
    MissingLabels(String),

    #[error("construction invariant violated: {0}")]
    Invariant(String),
}
