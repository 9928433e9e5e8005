use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("malformed JSON: {0}")]
    MalformedJson(String),
    #[error("unknown format tag {0}")]
    UnknownFormat(String),
    #[error("invalid document: {0}")]
    Document(String),
    #[error("{0}")]
    Io(String),
    #[error(transparent)]
    Matroid(#[from] ordmat::Error),
}

impl CliError {
    pub fn document(msg: impl Into<String>) -> Self {
        CliError::Document(msg.into())
    }

    /// Stable machine-readable error code.
    pub fn code(&self) -> &'static str {
        use ordmat::Error as E;
        match self {
            CliError::MalformedJson(_) => "malformed_json",
            CliError::UnknownFormat(_) => "unknown_format",
            CliError::Document(_) => "invalid_document",
            CliError::Io(_) => "io",
            CliError::Matroid(e) => match e {
                E::UnknownElement(_) => "unknown_element",
                E::InvalidElementId(_) => "invalid_element_id",
                E::DuplicateElement(_) => "duplicate_element",
                E::CircuitAxiom(_) => "circuit_axiom",
                E::CapExceeded { .. } => "cap_exceeded",
                E::Input(_) => "invalid_input",
                E::Invariant(_) => "internal",
            },
        }
    }
}
