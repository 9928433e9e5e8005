//! The command surface. Every command returns an exit code and a JSON value for standard
//! output; diagnostics go to standard error.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use ordmat::catalog::{self, TraceStep};
use ordmat::characterize::{decide_nonbinary_orderable, decide_nonbinary_theta_orderable, find_incompatible_arcs};
use ordmat::ordering::{parse_assignment, verify_consistent, verify_theta_ordering};
use ordmat::solver::{find_consistent_ordering, find_theta_ordering, SolverOptions, Verdict, DEFAULT_BUDGET};
use ordmat::structure::canonical_tree_decomposition;
use ordmat::{ElemSet, Matroid};

use crate::certificate::CertificateDocument;
use crate::document::{parse_matroid_file, MatroidDocument};
use crate::error::CliError;

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INDETERMINATE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "ordmat", version, about = "Consistent circuit orderings of matroids")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide orderability (or theta-orderability) and print a certificate.
    Order {
        file: PathBuf,
        #[arg(long)]
        theta: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        no_obstruction_fastpath: bool,
    },
    /// Check an ordering file against a matroid.
    Verify {
        file: PathBuf,
        ordering: PathBuf,
        #[arg(long)]
        theta: bool,
    },
    /// Decide graphicness of a binary matroid by incompatible arcs.
    Graphic { file: PathBuf },
    /// Decide orderability of a connected non-binary matroid structurally.
    Characterize {
        file: PathBuf,
        #[arg(long)]
        theta: bool,
    },
    /// Print the canonical tree decomposition.
    Decompose { file: PathBuf },
    /// Print the dual matroid.
    Dual { file: PathBuf },
    /// Print a minor; ids are comma-separated.
    Minor {
        file: PathBuf,
        #[arg(long, default_value = "")]
        delete: String,
        #[arg(long, default_value = "")]
        contract: String,
    },
    /// Print a catalog matroid.
    Catalog { name: String },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn json(code: i32, v: Value) -> Output {
        Output { code, stdout: format!("{}\n", serde_json::to_string_pretty(&v).expect("json")), stderr: String::new() }
    }

    fn error(e: &CliError) -> Output {
        let v = json!({ "error": e.code(), "message": e.to_string() });
        Output { code: EXIT_USAGE, stdout: String::new(), stderr: format!("{v}\n") }
    }
}

/// Parse `argv` (including the program name) and run the command.
pub fn execute<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(argv) {
        Ok(cli) => match run(&cli.command) {
            Ok(out) => out,
            Err(e) => Output::error(&e),
        },
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_YES };
            let text = e.render().to_string();
            if e.use_stderr() {
                Output { code, stdout: String::new(), stderr: text }
            } else {
                Output { code, stdout: text, stderr: String::new() }
            }
        }
    }
}

fn read(path: &Path) -> Result<Vec<u8>, CliError> {
    std::fs::read(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Matroid, CliError> {
    parse_matroid_file(&read(path)?)
}

fn ids(m: &Matroid, s: ElemSet) -> Vec<String> {
    m.ids(s).into_iter().map(str::to_string).collect()
}

fn split_ids(list: &str) -> Vec<String> {
    list.split(',').map(str::trim).filter(|s| !s.is_empty()).map(str::to_string).collect()
}

pub fn verdict_code(v: Verdict) -> i32 {
    match v {
        Verdict::Orderable => EXIT_YES,
        Verdict::NotOrderable => EXIT_NO,
        Verdict::Indeterminate => EXIT_INDETERMINATE,
    }
}

fn yes_no(b: bool) -> i32 {
    if b {
        EXIT_YES
    } else {
        EXIT_NO
    }
}

pub fn run(cmd: &Command) -> Result<Output, CliError> {
    match cmd {
        Command::Order { file, theta, budget, no_obstruction_fastpath } => {
            let m = load(file)?;
            let opts = SolverOptions { budget: *budget, obstruction_fastpath: !no_obstruction_fastpath };
            let cert = if *theta { find_theta_ordering(&m, opts)? } else { find_consistent_ordering(&m, opts)? };
            let doc = CertificateDocument::new(&m, &cert, *theta);
            Ok(Output::json(verdict_code(cert.verdict()), serde_json::to_value(doc).expect("json")))
        }
        Command::Verify { file, ordering, theta } => {
            let m = load(file)?;
            let text = String::from_utf8(read(ordering)?).map_err(|e| CliError::Io(e.to_string()))?;
            let a = parse_assignment(&m, &text)?;
            let violation = if *theta {
                verify_theta_ordering(&m, &a)?.map(|v| v.describe(&m))
            } else {
                verify_consistent(&m, &a)?.map(|v| v.describe(&m))
            };
            Ok(Output::json(
                yes_no(violation.is_none()),
                json!({ "consistent": violation.is_none(), "theta": theta, "violation": violation }),
            ))
        }
        Command::Graphic { file } => {
            let m = load(file)?;
            if !m.is_binary() {
                return Err(ordmat::Error::Input("graphic needs a binary matroid".into()).into());
            }
            let triple = find_incompatible_arcs(&m)?;
            let witness = triple.map(|t| {
                json!({
                    "circuit": ids(&m, t.arcs[0].of_circuit),
                    "arcs": t.arcs.iter().map(|a| json!({ "relative_to": ids(&m, a.relative_to), "members": ids(&m, a.members) })).collect::<Vec<_>>(),
                })
            });
            Ok(Output::json(
                yes_no(witness.is_none()),
                json!({ "graphic": witness.is_none(), "incompatible_arcs": witness }),
            ))
        }
        Command::Characterize { file, theta } => {
            let m = load(file)?;
            if *theta {
                let ok = decide_nonbinary_theta_orderable(&m)?;
                return Ok(Output::json(yes_no(ok), json!({ "theta_orderable": ok })));
            }
            let d = decide_nonbinary_orderable(&m)?;
            let pruned: Vec<&TraceStep> = d.pruned.iter().collect();
            Ok(Output::json(
                yes_no(d.orderable),
                json!({ "orderable": d.orderable, "trace": d.trace, "pruned": pruned, "failure": d.failure }),
            ))
        }
        Command::Decompose { file } => {
            let m = load(file)?;
            let t = canonical_tree_decomposition(&m)?;
            let nodes: Vec<Value> = t
                .nodes
                .iter()
                .map(|n| json!({ "kind": n.kind.name(), "matroid": MatroidDocument::of(&n.matroid) }))
                .collect();
            let edges: Vec<Value> =
                t.edges.iter().map(|(a, b, p)| json!({ "from": a, "to": b, "basepoint": p })).collect();
            Ok(Output::json(EXIT_YES, json!({ "nodes": nodes, "edges": edges })))
        }
        Command::Dual { file } => {
            let m = load(file)?;
            Ok(Output::json(EXIT_YES, serde_json::to_value(MatroidDocument::of(&m.dual())).expect("json")))
        }
        Command::Minor { file, delete, contract } => {
            let m = load(file)?;
            let minor = m.minor_ids(&split_ids(delete), &split_ids(contract))?;
            Ok(Output::json(EXIT_YES, serde_json::to_value(MatroidDocument::of(&minor)).expect("json")))
        }
        Command::Catalog { name } => {
            let m = catalog::named(name)?;
            Ok(Output::json(EXIT_YES, serde_json::to_value(MatroidDocument::of(&m)).expect("json")))
        }
    }
}
