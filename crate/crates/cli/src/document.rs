//! JSON matroid documents.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use ordmat::catalog::{self, ConstructionTrace, Graph};
use ordmat::{BinaryMatrix, Matroid};

use crate::error::CliError;

pub const FORMATS: [&str; 5] = ["circuits", "binary", "graph", "named", "trace"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "format", rename_all = "lowercase", deny_unknown_fields)]
pub enum MatroidDocument {
    Circuits {
        ground: Vec<String>,
        circuits: Vec<Vec<String>>,
    },
    /// Row-major 0/1 matrix; column `j` is the element `columns[j]`.
    Binary {
        columns: Vec<String>,
        matrix: Vec<Vec<u8>>,
    },
    /// Edge triples `[u, v, id]`.
    Graph {
        edges: Vec<(String, String, String)>,
    },
    Named {
        name: String,
    },
    Trace(ConstructionTrace),
}

impl MatroidDocument {
    /// The canonical circuits document of `m`.
    pub fn of(m: &Matroid) -> MatroidDocument {
        MatroidDocument::Circuits {
            ground: m.ground().to_vec(),
            circuits: m.circuit_ids().into_iter().map(|c| c.into_iter().map(str::to_string).collect()).collect(),
        }
    }

    pub fn to_matroid(&self) -> Result<Matroid, CliError> {
        let m = match self {
            MatroidDocument::Circuits { ground, circuits } => Matroid::from_circuits(ground, circuits)?,
            MatroidDocument::Binary { columns, matrix } => {
                for (i, row) in matrix.iter().enumerate() {
                    if row.len() != columns.len() {
                        return Err(CliError::document(format!(
                            "matrix row {i} has {} entries, expected {}",
                            row.len(),
                            columns.len()
                        )));
                    }
                    if let Some(j) = row.iter().position(|&b| b > 1) {
                        return Err(CliError::document(format!("matrix entry ({i}, {j}) is not 0 or 1")));
                    }
                }
                if columns.len() > 64 {
                    return Err(CliError::document("binary matrices are limited to 64 columns"));
                }
                Matroid::from_binary(columns, BinaryMatrix::from_rows(columns.len(), matrix))?
            }
            MatroidDocument::Graph { edges } => Graph::new(edges).cycle_matroid()?,
            MatroidDocument::Named { name } => catalog::named(name)?,
            MatroidDocument::Trace(t) => t.replay()?,
        };
        Ok(m)
    }
}

/// Parse a matroid document, distinguishing malformed JSON, unknown format tags, schema
/// errors and matroid errors.
pub fn parse_matroid_document(bytes: &[u8]) -> Result<MatroidDocument, CliError> {
    let value: Value = serde_json::from_slice(bytes).map_err(|e| CliError::MalformedJson(e.to_string()))?;
    let tag = value.get("format").ok_or_else(|| CliError::document("missing `format` field"))?;
    match tag.as_str() {
        Some(t) if FORMATS.contains(&t) => {}
        _ => return Err(CliError::UnknownFormat(tag.to_string())),
    }
    serde_json::from_value(value).map_err(|e| CliError::document(e.to_string()))
}

pub fn parse_matroid_file(bytes: &[u8]) -> Result<Matroid, CliError> {
    parse_matroid_document(bytes)?.to_matroid()
}

/// Canonical JSON text of `m`.
pub fn serialize_matroid(m: &Matroid) -> String {
    serde_json::to_string(&MatroidDocument::of(m)).expect("documents serialize")
}
