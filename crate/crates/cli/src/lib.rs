//! File formats, certificates and commands for the `ordmat` binary.

pub mod certificate;
pub mod commands;
pub mod document;
pub mod error;

pub use certificate::CertificateDocument;
pub use commands::{execute, Output};
pub use document::{parse_matroid_file, serialize_matroid, MatroidDocument};
pub use error::CliError;
