use thiserror::Error;

/// Errors raised when values from incompatible or malformed models meet.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("state space `{name}` has no atoms")]
    EmptySpace { name: String },
    #[error("atom `{atom}` declared twice in state space `{space}`")]
    DuplicateAtom { space: String, atom: String },
    #[error("state space `{space}` has {count} atoms; at most {max} are supported")]
    TooManyAtoms { space: String, count: usize, max: usize },
    #[error("atom `{atom}` is not in state space `{space}`")]
    UnknownAtom { space: String, atom: String },
    #[error("atom index {index} out of range for state space `{space}` of size {size}")]
    IndexOutOfRange { space: String, index: usize, size: usize },
    #[error("operands live in different state spaces (`{left}` and `{right}`)")]
    SpaceMismatch { left: String, right: String },
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, ModelError>;
