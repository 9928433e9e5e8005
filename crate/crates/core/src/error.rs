use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("invalid element id `{0}`: ids must be nonempty and contain no whitespace or commas")]
    InvalidElementId(String),
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("circuit axiom violated: {0}")]
    CircuitAxiom(String),
    #[error("ground set of {size} elements exceeds the cap of {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("invalid input: {0}")]
    Input(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}
