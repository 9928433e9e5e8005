//! Explicit consistent orderings: graphs, balanced extensions of U(2,n), and their
//! transfer through parallel-path additions.

use std::collections::HashMap;

use crate::catalog::{inflate, parallel_path_addition, uniform_labelled, ConstructionTrace, Graph, TraceStep};
use crate::error::{input, Error, Result};
use crate::matroid::Matroid;
use crate::ordering::{verify_consistent, CyclicOrdering, OrderingAssignment};
use crate::set::ElemSet;

/// Order every circuit of the cycle matroid `m` of `g` by walking its cycle.
pub fn graphic_ordering(g: &Graph, m: &Matroid) -> Result<OrderingAssignment> {
    if g.cycle_matroid()? != *m {
        return input("matroid is not the cycle matroid of the graph");
    }
    let mut out = Vec::with_capacity(m.circuits().len());
    for &c in m.circuits() {
        let ids = m.ids(c);
        let walk = g.walk_cycle(&ids).ok_or_else(|| Error::Invariant("circuit is not a cycle of the graph".into()))?;
        out.push(CyclicOrdering::from_ids(m, &walk)?);
    }
    OrderingAssignment::new(m, out)
}

/// The balanced series extension of order `k` of U(2,n) on `1..=n`, with its explicit
/// consistent ordering.
pub fn balanced_u2n_ordering(n: usize, k: usize) -> Result<(Matroid, OrderingAssignment)> {
    if n < 2 || k == 0 {
        return input("balanced_u2n_ordering needs n >= 2 and k >= 1");
    }
    let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let classes: Vec<Vec<String>> = labels
        .iter()
        .map(|l| if k == 1 { vec![l.clone()] } else { (0..k).map(|i| format!("{l}_{i}")).collect() })
        .collect();
    balanced_u2n_labelled(&labels, &classes)
}

/// As [`balanced_u2n_ordering`] with base ids `labels` and `classes[i]` the series class
/// replacing `labels[i]`. All classes have the same size k.
///
/// Write `1` for the first base element and `x_i` for the `i`-th element of the class of
/// `x`. A circuit `S_1 ∪ S_x ∪ S_y` (x before y) is ordered
/// `(y_0 1_0 x_0 y_1 1_1 x_1 ... y_{k-1} 1_{k-1} x_{k-1})`, and a circuit `S_x ∪ S_y ∪ S_z`
/// avoiding `S_1` (x before y before z) is ordered
/// `(z_1 x_0 y_1 z_2 x_1 y_2 ... z_0 x_{k-1} y_0)`, indices mod k.
pub fn balanced_u2n_labelled(labels: &[String], classes: &[Vec<String>]) -> Result<(Matroid, OrderingAssignment)> {
    if labels.len() != classes.len() || classes.is_empty() {
        return input("one class per base element is required");
    }
    let k = classes[0].len();
    if k == 0 || classes.iter().any(|c| c.len() != k) {
        return input("classes must be nonempty and of equal size");
    }
    let base = uniform_labelled(2, labels)?;
    let map: HashMap<String, Vec<String>> = labels.iter().cloned().zip(classes.iter().cloned()).collect();
    let m = inflate(&base, &map)?;
    let idx: Vec<Vec<usize>> =
        classes.iter().map(|c| c.iter().map(|id| m.index_of(id)).collect()).collect::<Result<_>>()?;
    let class_of = |e: usize| idx.iter().position(|c| c.contains(&e)).unwrap();
    let mut out = Vec::with_capacity(m.circuits().len());
    for &c in m.circuits() {
        let mut triple: Vec<usize> = c.iter().map(class_of).collect();
        triple.sort_unstable();
        triple.dedup();
        let seq: Vec<usize> = match triple[..] {
            [0, x, y] => (0..k).flat_map(|i| [idx[y][i], idx[0][i], idx[x][i]]).collect(),
            [x, y, z] => (0..k).flat_map(|i| [idx[z][(i + 1) % k], idx[x][i], idx[y][(i + 1) % k]]).collect(),
            _ => return Err(Error::Invariant("circuit is not a union of three classes".into())),
        };
        out.push(CyclicOrdering::canonicalize(&seq)?);
    }
    let a = OrderingAssignment::new(&m, out)?;
    Ok((m, a))
}

/// Add the path `fresh` parallel to `path` and extend the verified assignment `a`:
/// circuits avoiding `fresh` keep their ordering, `(C - path) ∪ fresh` copies the ordering
/// of `C` with each `path[i]` replaced by `fresh[i]`, and `path ∪ fresh` is ordered
/// `B1 B1' B2 B2' ...` where `B1, B2, ...` are the runs of `path` in a circuit through it.
pub fn parallel_path_transfer<S: AsRef<str>>(
    m: &Matroid,
    a: &OrderingAssignment,
    path: &[S],
    fresh: &[S],
) -> Result<(Matroid, OrderingAssignment)> {
    if let Some(v) = verify_consistent(m, a)? {
        return input(format!("input ordering is not consistent: {}", v.describe(m)));
    }
    let out_m = parallel_path_addition(m, path, fresh)?;
    let path: Vec<&str> = path.iter().map(|s| s.as_ref()).collect();
    let fresh: Vec<&str> = fresh.iter().map(|s| s.as_ref()).collect();
    let swap: HashMap<&str, &str> = path.iter().copied().zip(fresh.iter().copied()).collect();
    let p_old = m.set_of(&path)?;
    let p_new = out_m.set_of(&path)?;
    let f_new = out_m.set_of(&fresh)?;

    let mut out = Vec::with_capacity(out_m.circuits().len());
    for &c in out_m.circuits() {
        let ids: Vec<String> = if !c.intersects(f_new) {
            let src = a.get(m.set_of(&out_m.ids(c))?).ok_or_else(|| Error::Invariant("lost circuit".into()))?;
            src.sequence().iter().map(|&e| m.id(e).to_string()).collect()
        } else if !c.intersects(p_new) {
            let back: Vec<&str> = out_m
                .ids(c)
                .into_iter()
                .map(|id| path.iter().zip(&fresh).find(|(_, f)| **f == id).map_or(id, |(p, _)| *p))
                .collect();
            let src = a.get(m.set_of(&back)?).ok_or_else(|| Error::Invariant("lost circuit".into()))?;
            src.sequence().iter().map(|&e| m.id(e)).map(|id| swap.get(id).copied().unwrap_or(id).to_string()).collect()
        } else {
            debug_assert_eq!(c, p_new.union(f_new));
            let t = p_old.first().unwrap();
            let d = *m.circuits_with(t).first().ok_or_else(|| Error::Invariant("path lies in no circuit".into()))?;
            path_runs(a.get(d).unwrap(), p_old)
                .into_iter()
                .flat_map(|run| {
                    let ids: Vec<&str> = run.iter().map(|&e| m.id(e)).collect();
                    let primes: Vec<&str> = ids.iter().map(|id| swap[id]).collect();
                    ids.into_iter().chain(primes).map(str::to_string).collect::<Vec<_>>()
                })
                .collect()
        };
        out.push(CyclicOrdering::from_ids(&out_m, &ids)?);
    }
    let out_a = OrderingAssignment::new(&out_m, out)?;
    Ok((out_m, out_a))
}

/// The maximal runs of `p` in the cyclic ordering `o`, in cyclic order.
fn path_runs(o: &CyclicOrdering, p: ElemSet) -> Vec<Vec<usize>> {
    let seq = o.sequence();
    let n = seq.len();
    // Start just after an element outside p so that no run wraps.
    let start = (0..n).find(|&i| !p.contains(seq[i])).map_or(0, |i| i + 1);
    let mut runs: Vec<Vec<usize>> = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    for j in 0..n {
        let e = seq[(start + j) % n];
        if p.contains(e) {
            current.push(e);
        } else if !current.is_empty() {
            runs.push(std::mem::take(&mut current));
        }
    }
    if !current.is_empty() {
        runs.push(current);
    }
    runs
}

/// Replay a construction trace and build a consistent ordering alongside it, through
/// [`balanced_u2n_labelled`] and [`parallel_path_transfer`]. The trace is normalised first.
pub fn trace_ordering(trace: &ConstructionTrace) -> Result<(Matroid, OrderingAssignment)> {
    let t = trace.normalized()?;
    let labels = t.labels();
    let mut steps = t.steps.iter().peekable();
    let classes: Vec<Vec<String>> = match steps.peek() {
        Some(TraceStep::BalancedSeriesExtension { order, classes: Some(map) }) => {
            steps.next();
            labels
                .iter()
                .map(|l| map.get(l).cloned().filter(|c| c.len() == *order))
                .collect::<Option<_>>()
                .ok_or_else(|| Error::Input("balanced extension classes do not match the base".into()))?
        }
        _ => labels.iter().map(|l| vec![l.clone()]).collect(),
    };
    let (mut m, mut a) = balanced_u2n_labelled(&labels, &classes)?;
    for step in steps {
        match step {
            TraceStep::ParallelPathAddition { path, fresh } => {
                let (m2, a2) = parallel_path_transfer(&m, &a, path, fresh)?;
                m = m2;
                a = a2;
            }
            TraceStep::BalancedSeriesExtension { .. } => {
                return Err(Error::Invariant("normalised trace has a late balanced extension".into()))
            }
        }
    }
    Ok((m, a))
}
