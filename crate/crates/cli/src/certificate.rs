//! Certificate documents: a verdict with its witness ordering, obstruction or search record.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use ordmat::ordering::parse_assignment;
use ordmat::solver::{
    Certificate, EfgObstruction, Obstruction, PairCertificate, SearchRecord, SeriesEfgObstruction, Verdict,
};
use ordmat::{ElemSet, Matroid};

use crate::document::serialize_matroid;
use crate::error::CliError;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// `sha256:` followed by the hex digest of the canonical serialization of `m`.
pub fn digest(m: &Matroid) -> String {
    let hash = Sha256::digest(serialize_matroid(m).as_bytes());
    format!("sha256:{hash:x}")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictTag {
    Orderable,
    NotOrderable,
    Indeterminate,
}

impl From<Verdict> for VerdictTag {
    fn from(v: Verdict) -> Self {
        match v {
            Verdict::Orderable => VerdictTag::Orderable,
            Verdict::NotOrderable => VerdictTag::NotOrderable,
            Verdict::Indeterminate => VerdictTag::Indeterminate,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairDoc {
    pub e: String,
    pub g: String,
    pub through: Vec<String>,
    pub d: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exception: Option<String>,
    /// `[d, circuit containing {e, c, g, d}]`.
    pub witnesses: Vec<(String, Vec<String>)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchDoc {
    pub circuit_order: Vec<Vec<String>>,
    pub nodes: u64,
    pub budget: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ObstructionDoc {
    Efg { circuit: Vec<String>, pivot: String, pairs: Vec<PairDoc> },
    SeriesEfg { circuit: Vec<String>, pivot: String, pairs: Vec<PairDoc> },
    Exhausted(SearchDoc),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDocument {
    pub version: String,
    pub input_digest: String,
    pub theta: bool,
    pub verdict: VerdictTag,
    /// One parenthesized ordering per circuit.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub obstruction: Option<ObstructionDoc>,
    /// The search record when the budget ran out.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub search: Option<SearchDoc>,
}

fn names(m: &Matroid, s: ElemSet) -> Vec<String> {
    m.ids(s).into_iter().map(str::to_string).collect()
}

fn pair_doc(m: &Matroid, p: &PairCertificate) -> PairDoc {
    PairDoc {
        e: m.id(p.e).to_string(),
        g: m.id(p.g).to_string(),
        through: names(m, p.through),
        d: names(m, p.d),
        exception: p.exception.map(|x| m.id(x).to_string()),
        witnesses: p.witnesses.iter().map(|&(x, w)| (m.id(x).to_string(), names(m, w))).collect(),
    }
}

fn pair_cert(m: &Matroid, p: &PairDoc) -> Result<PairCertificate, CliError> {
    Ok(PairCertificate {
        e: m.index_of(&p.e)?,
        g: m.index_of(&p.g)?,
        through: m.set_of(&p.through)?,
        d: m.set_of(&p.d)?,
        exception: p.exception.as_deref().map(|x| m.index_of(x)).transpose()?,
        witnesses: p
            .witnesses
            .iter()
            .map(|(x, w)| Ok((m.index_of(x)?, m.set_of(w)?)))
            .collect::<Result<_, CliError>>()?,
    })
}

fn search_doc(m: &Matroid, r: &SearchRecord) -> SearchDoc {
    SearchDoc {
        circuit_order: r.circuit_order.iter().map(|&c| names(m, c)).collect(),
        nodes: r.nodes,
        budget: r.budget,
    }
}

fn search_record(m: &Matroid, s: &SearchDoc, theta: bool) -> Result<SearchRecord, CliError> {
    Ok(SearchRecord {
        circuit_order: s.circuit_order.iter().map(|c| m.set_of(c)).collect::<Result<_, _>>()?,
        nodes: s.nodes,
        budget: s.budget,
        theta,
    })
}

impl CertificateDocument {
    pub fn new(m: &Matroid, cert: &Certificate, theta: bool) -> CertificateDocument {
        let mut doc = CertificateDocument {
            version: VERSION.to_string(),
            input_digest: digest(m),
            theta,
            verdict: cert.verdict().into(),
            witness: None,
            obstruction: None,
            search: None,
        };
        match cert {
            Certificate::Orderable(a) => doc.witness = Some(a.to_lines(m)),
            Certificate::NotOrderable(Obstruction::Efg(o)) => {
                doc.obstruction = Some(ObstructionDoc::Efg {
                    circuit: names(m, o.circuit),
                    pivot: m.id(o.pivot).to_string(),
                    pairs: o.pairs.iter().map(|p| pair_doc(m, p)).collect(),
                })
            }
            Certificate::NotOrderable(Obstruction::SeriesEfg(o)) => {
                doc.obstruction = Some(ObstructionDoc::SeriesEfg {
                    circuit: names(m, o.circuit),
                    pivot: m.id(o.pivot).to_string(),
                    pairs: o.pairs.iter().map(|p| pair_doc(m, p)).collect(),
                })
            }
            Certificate::NotOrderable(Obstruction::Exhausted(r)) => {
                doc.obstruction = Some(ObstructionDoc::Exhausted(search_doc(m, r)))
            }
            Certificate::Indeterminate(r) => doc.search = Some(search_doc(m, r)),
        }
        doc
    }

    /// Rebuild the certificate against `m`, checking the digest and re-verifying witnesses
    /// and obstructions.
    pub fn load(&self, m: &Matroid) -> Result<Certificate, CliError> {
        if self.input_digest != digest(m) {
            return Err(CliError::document("certificate digest does not match the matroid"));
        }
        let bad = || CliError::document("verdict does not match the certificate contents");
        let cert = match (self.verdict, &self.witness, &self.obstruction, &self.search) {
            (VerdictTag::Orderable, Some(lines), None, None) => {
                Certificate::Orderable(parse_assignment(m, &lines.join("\n"))?)
            }
            (VerdictTag::NotOrderable, None, Some(o), None) => Certificate::NotOrderable(match o {
                ObstructionDoc::Efg { circuit, pivot, pairs } => Obstruction::Efg(EfgObstruction {
                    circuit: m.set_of(circuit)?,
                    pivot: m.index_of(pivot)?,
                    pairs: pairs.iter().map(|p| pair_cert(m, p)).collect::<Result<_, _>>()?,
                }),
                ObstructionDoc::SeriesEfg { circuit, pivot, pairs } => Obstruction::SeriesEfg(SeriesEfgObstruction {
                    circuit: m.set_of(circuit)?,
                    pivot: m.index_of(pivot)?,
                    pairs: pairs.iter().map(|p| pair_cert(m, p)).collect::<Result<_, _>>()?,
                }),
                ObstructionDoc::Exhausted(s) => Obstruction::Exhausted(search_record(m, s, self.theta)?),
            }),
            (VerdictTag::Indeterminate, None, None, Some(s)) => {
                Certificate::Indeterminate(search_record(m, s, self.theta)?)
            }
            _ => return Err(bad()),
        };
        cert.check(m, self.theta).map_err(CliError::document)?;
        Ok(cert)
    }
}
