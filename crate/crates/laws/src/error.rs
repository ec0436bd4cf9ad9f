use thiserror::Error;
use tp_core::ModelError;

#[derive(Debug, Error)]
pub enum LawError {
    #[error("unknown law `{id}`; known laws: {known}")]
    UnknownLaw { id: String, known: String },
    #[error("{0}")]
    TooLarge(String),
    #[error(transparent)]
    Model(#[from] ModelError),
}
