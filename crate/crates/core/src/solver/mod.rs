//! Deciding orderability and theta-orderability with checkable certificates.

mod construct;
mod efg;
mod search;

pub use construct::{
    balanced_u2n_labelled, balanced_u2n_ordering, graphic_ordering, parallel_path_transfer, trace_ordering,
};
pub use efg::{
    check_efg, check_series_efg, efg_obstruction, series_efg_obstruction, EfgObstruction, PairCertificate,
    SeriesEfgObstruction,
};

use search::{Engine, Outcome};

use crate::error::{Error, Result};
use crate::matroid::{check_cap, Matroid};
use crate::ordering::{verify_consistent, verify_theta_ordering, OrderingAssignment};
use crate::set::ElemSet;

/// Default node budget for the backtracking search.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolverOptions {
    pub budget: u64,
    /// Try the (e,f,g) obstructions before searching.
    pub obstruction_fastpath: bool,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions { budget: DEFAULT_BUDGET, obstruction_fastpath: true }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Orderable,
    NotOrderable,
    Indeterminate,
}

/// What the search did: the circuits in branching order and the nodes it visited.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchRecord {
    pub circuit_order: Vec<ElemSet>,
    pub nodes: u64,
    pub budget: u64,
    pub theta: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Obstruction {
    Efg(EfgObstruction),
    SeriesEfg(SeriesEfgObstruction),
    Exhausted(SearchRecord),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Orderable(OrderingAssignment),
    NotOrderable(Obstruction),
    /// The budget ran out first.
    Indeterminate(SearchRecord),
}

impl Certificate {
    pub fn verdict(&self) -> Verdict {
        match self {
            Certificate::Orderable(_) => Verdict::Orderable,
            Certificate::NotOrderable(_) => Verdict::NotOrderable,
            Certificate::Indeterminate(_) => Verdict::Indeterminate,
        }
    }

    pub fn ordering(&self) -> Option<&OrderingAssignment> {
        match self {
            Certificate::Orderable(a) => Some(a),
            _ => None,
        }
    }

    /// Re-check the certificate against `m`: witnesses must verify and obstructions must
    /// satisfy their hypotheses. Exhausted and indeterminate records carry no proof.
    pub fn check(&self, m: &Matroid, theta: bool) -> std::result::Result<(), String> {
        match self {
            Certificate::Orderable(a) => {
                let bad = if theta {
                    verify_theta_ordering(m, a).map_err(|e| e.to_string())?.map(|v| v.describe(m))
                } else {
                    verify_consistent(m, a).map_err(|e| e.to_string())?.map(|v| v.describe(m))
                };
                bad.map_or(Ok(()), Err)
            }
            Certificate::NotOrderable(Obstruction::Efg(o)) => check_efg(m, o),
            Certificate::NotOrderable(Obstruction::SeriesEfg(o)) => check_series_efg(m, o),
            Certificate::NotOrderable(Obstruction::Exhausted(_)) | Certificate::Indeterminate(_) => Ok(()),
        }
    }
}

fn solve(m: &Matroid, theta: bool, opts: SolverOptions) -> Result<Certificate> {
    check_cap(m.len())?;
    if opts.obstruction_fastpath {
        if let Some(o) = efg_obstruction(m) {
            return Ok(Certificate::NotOrderable(Obstruction::Efg(o)));
        }
        if let Some(o) = series_efg_obstruction(m) {
            return Ok(Certificate::NotOrderable(Obstruction::SeriesEfg(o)));
        }
    }
    let mut engine = Engine::new(m, theta, opts.budget);
    let mut found = None;
    let outcome = engine.run(&mut |e| {
        found = Some(e.assignment());
        false
    });
    let record =
        SearchRecord { circuit_order: engine.circuit_order(), nodes: engine.nodes, budget: opts.budget, theta };
    Ok(match outcome {
        Outcome::Stopped => {
            let a = found.expect("solution recorded");
            let cert = Certificate::Orderable(a);
            cert.check(m, theta).map_err(Error::Invariant)?;
            cert
        }
        Outcome::Exhausted => Certificate::NotOrderable(Obstruction::Exhausted(record)),
        Outcome::OutOfBudget => Certificate::Indeterminate(record),
    })
}

/// Decide whether `m` has a consistent ordering.
pub fn find_consistent_ordering(m: &Matroid, opts: SolverOptions) -> Result<Certificate> {
    solve(m, false, opts)
}

/// Decide whether `m` has a theta-ordering.
pub fn find_theta_ordering(m: &Matroid, opts: SolverOptions) -> Result<Certificate> {
    solve(m, true, opts)
}

/// Every consistent ordering (theta-orderings if `theta`), up to `limit` of them. The flag
/// is false if the enumeration stopped early (limit or budget).
pub fn all_orderings(m: &Matroid, theta: bool, limit: usize, budget: u64) -> Result<(Vec<OrderingAssignment>, bool)> {
    check_cap(m.len())?;
    let mut engine = Engine::new(m, theta, budget);
    let mut out = Vec::new();
    let outcome = engine.run(&mut |e| {
        out.push(e.assignment());
        out.len() < limit
    });
    Ok((out, outcome == Outcome::Exhausted))
}
