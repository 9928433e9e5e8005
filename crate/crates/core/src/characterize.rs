//! Arcs and Wagner's graphicness test for binary matroids, the decision procedures for
//! non-binary orderability and theta-orderability, and graph reconstruction from a
//! consistently ordered spanning circuit.

use std::collections::BTreeMap;

use crate::catalog::{ConstructionTrace, Graph, TraceStep};
use crate::error::{input, Error, Result};
use crate::matroid::{check_cap, Matroid};
use crate::ordering::{verify_consistent, OrderingAssignment};
use crate::set::ElemSet;
use crate::structure::{canonical_tree_decomposition, PartKind, TreeDecomposition};

/// A minimal nonempty `members ⊆ of_circuit` such that `members ∪ relative_to` contains at
/// least two circuits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Arc {
    pub of_circuit: ElemSet,
    pub relative_to: ElemSet,
    pub members: ElemSet,
}

/// Three arcs of one circuit with a common element and a private element each.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IncompatibleTriple {
    pub arcs: [Arc; 3],
}

impl IncompatibleTriple {
    pub fn holds(&self) -> bool {
        is_incompatible(self.arcs.map(|a| a.members))
    }
}

fn is_incompatible([a, b, c]: [ElemSet; 3]) -> bool {
    !a.inter(b).inter(c).is_empty()
        && !a.minus(b.union(c)).is_empty()
        && !b.minus(a.union(c)).is_empty()
        && !c.minus(a.union(b)).is_empty()
}

fn at_least_two_circuits(m: &Matroid, s: ElemSet) -> bool {
    m.circuits().iter().filter(|c| c.is_subset(s)).take(2).count() == 2
}

/// All arcs of `c` relative to `d`, ordered by size then lexicographically.
pub fn arcs(m: &Matroid, c: ElemSet, d: ElemSet) -> Result<Vec<Arc>> {
    if !m.is_circuit(c) || !m.is_circuit(d) {
        return input("arcs are defined for circuits only");
    }
    if c == d {
        return input("arcs need two distinct circuits");
    }
    Ok(arcs_unchecked(m, c, d))
}

fn arcs_unchecked(m: &Matroid, c: ElemSet, d: ElemSet) -> Vec<Arc> {
    let mut subsets: Vec<ElemSet> = c.subsets().filter(|a| !a.is_empty()).collect();
    subsets.sort_by(|a, b| a.len().cmp(&b.len()).then(a.lex_cmp(*b)));
    let mut found: Vec<ElemSet> = Vec::new();
    for a in subsets {
        if found.iter().any(|f| f.is_subset(a)) {
            continue;
        }
        if at_least_two_circuits(m, a.union(d)) {
            found.push(a);
        }
    }
    found.into_iter().map(|members| Arc { of_circuit: c, relative_to: d, members }).collect()
}

/// The first incompatible triple: circuits in canonical order, and for each circuit its
/// distinct arcs (over every other circuit, first occurrence kept) ordered by size then
/// lexicographically, triples in lexicographic index order.
pub fn find_incompatible_arcs(m: &Matroid) -> Result<Option<IncompatibleTriple>> {
    check_cap(m.len())?;
    for &c in m.circuits() {
        let mut all: Vec<Arc> = Vec::new();
        for &d in m.circuits() {
            if d == c {
                continue;
            }
            for arc in arcs_unchecked(m, c, d) {
                if !all.iter().any(|a| a.members == arc.members) {
                    all.push(arc);
                }
            }
        }
        all.sort_by(|a, b| a.members.len().cmp(&b.members.len()).then(a.members.lex_cmp(b.members)));
        let n = all.len();
        for i in 0..n {
            for j in i + 1..n {
                if all[i].members.inter(all[j].members).is_empty() {
                    continue;
                }
                for k in j + 1..n {
                    if is_incompatible([all[i].members, all[j].members, all[k].members]) {
                        return Ok(Some(IncompatibleTriple { arcs: [all[i], all[j], all[k]] }));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Graphicness of a binary matroid: true iff it has no incompatible arcs.
pub fn is_graphic_binary(m: &Matroid) -> Result<bool> {
    if !m.is_binary() {
        return input("is_graphic_binary needs a binary matroid");
    }
    Ok(find_incompatible_arcs(m)?.is_none())
}

/// Outcome of [`decide_nonbinary_orderable`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonbinaryDecision {
    pub orderable: bool,
    /// A trace rebuilding the input from U(2,n), when orderable.
    pub trace: Option<ConstructionTrace>,
    /// Parallel-path additions undone, in the order they were removed.
    pub pruned: Vec<TraceStep>,
    /// Why the matroid was rejected.
    pub failure: Option<String>,
}

fn require_nonbinary_connected(m: &Matroid) -> Result<()> {
    check_cap(m.len())?;
    if !m.is_connected() {
        return input("expected a connected matroid");
    }
    if m.is_binary() {
        return input("expected a non-binary matroid");
    }
    Ok(())
}

/// Rank 2, simple, at least four elements.
fn is_u2n(m: &Matroid) -> bool {
    m.is_u2n(4)
}

/// If `m` is a balanced series extension of U(2,n) with n >= 4, its representatives (first
/// element of each series class) and the classes.
fn balanced_u2n_classes(m: &Matroid) -> Option<(Vec<String>, Vec<Vec<String>>)> {
    if !m.coloops().is_empty() || !m.loops().is_empty() {
        return None;
    }
    let blocks = m.series_classes().blocks;
    let k = blocks.first()?.len();
    if blocks.iter().any(|b| b.len() != k) || !is_u2n(&m.cosimplification()) {
        return None;
    }
    let classes: Vec<Vec<String>> =
        blocks.iter().map(|b| m.ids(*b).into_iter().map(str::to_string).collect()).collect();
    let reps = classes.iter().map(|c| c[0].clone()).collect();
    Some((reps, classes))
}

/// Two leaves of a cocircuit part with the same number of elements (a part's own non-basepoint
/// elements count as leaves of size one). Returns `(kept, removed)`.
fn equal_leaves(t: &TreeDecomposition) -> Option<(Vec<String>, Vec<String>)> {
    for (v, node) in t.nodes.iter().enumerate() {
        if node.kind != PartKind::Cocircuit {
            continue;
        }
        let bps = t.basepoints();
        let mut branches: Vec<Vec<String>> =
            node.matroid.ground().iter().filter(|g| !bps.contains(&g.as_str())).map(|g| vec![g.clone()]).collect();
        for (w, bp) in t.neighbours(v) {
            let leaf = &t.nodes[w];
            if t.degree(w) == 1 && leaf.kind == PartKind::Circuit {
                branches.push(leaf.matroid.ground().iter().filter(|g| g.as_str() != bp).cloned().collect());
            }
        }
        branches.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        for pair in branches.windows(2) {
            if pair[0].len() == pair[1].len() {
                return Some((pair[0].clone(), pair[1].clone()));
            }
        }
    }
    None
}

/// Decide orderability of a connected non-binary matroid structurally: undo parallel
/// elements and parallel-path additions (pairs of equal leaves hanging off a cocircuit part
/// of the canonical tree decomposition) for as long as possible, then test for a balanced
/// series extension of U(2,n).
pub fn decide_nonbinary_orderable(m: &Matroid) -> Result<NonbinaryDecision> {
    require_nonbinary_connected(m)?;
    let mut cur = m.clone();
    let mut pruned: Vec<TraceStep> = Vec::new();
    let reject = |pruned: Vec<TraceStep>, why: String| NonbinaryDecision {
        orderable: false,
        trace: None,
        pruned,
        failure: Some(why),
    };

    for block in cur.parallel_classes().blocks.clone() {
        let ids: Vec<String> = cur.ids(block).into_iter().map(str::to_string).collect();
        for f in &ids[1..] {
            pruned.push(TraceStep::ParallelPathAddition { path: vec![ids[0].clone()], fresh: vec![f.clone()] });
        }
    }
    let extra: Vec<String> = pruned
        .iter()
        .flat_map(|s| match s {
            TraceStep::ParallelPathAddition { fresh, .. } => fresh.clone(),
            _ => Vec::new(),
        })
        .collect();
    cur = cur.delete(cur.set_of(&extra)?);

    loop {
        let t = canonical_tree_decomposition(&cur)?;
        let three: Vec<&Matroid> =
            t.nodes.iter().filter(|n| n.kind == PartKind::ThreeConnected).map(|n| &n.matroid).collect();
        if three.len() != 1 {
            return Ok(reject(pruned, format!("{} 3-connected parts in the tree decomposition", three.len())));
        }
        if !is_u2n(three[0]) {
            return Ok(reject(pruned, "the 3-connected part is not U(2,n) with n >= 4".into()));
        }
        let Some((kept, removed)) = equal_leaves(&t) else { break };
        cur = cur.delete(cur.set_of(&removed)?);
        pruned.push(TraceStep::ParallelPathAddition { path: kept, fresh: removed });
    }

    let Some((reps, classes)) = balanced_u2n_classes(&cur) else {
        return Ok(reject(pruned, "the pruned matroid is not a balanced series extension of U(2,n)".into()));
    };
    let k = classes[0].len();
    let mut steps = Vec::new();
    if k > 1 {
        let map: BTreeMap<String, Vec<String>> = reps.iter().cloned().zip(classes).collect();
        steps.push(TraceStep::BalancedSeriesExtension { order: k, classes: Some(map) });
    }
    steps.extend(pruned.iter().rev().cloned());
    let trace = ConstructionTrace { base: reps.len(), base_labels: Some(reps), steps };
    if trace.replay()? != *m {
        return Err(Error::Invariant("construction trace does not rebuild the input".into()));
    }
    Ok(NonbinaryDecision { orderable: true, trace: Some(trace), pruned, failure: None })
}

/// Theta-orderability of a connected non-binary matroid: its simplification must be a
/// balanced series extension of U(2,n), n >= 4.
pub fn decide_nonbinary_theta_orderable(m: &Matroid) -> Result<bool> {
    require_nonbinary_connected(m)?;
    Ok(balanced_u2n_classes(&m.simplification()).is_some())
}

/// Rebuild a graph from a binary matroid with a spanning circuit `C` and a verified
/// consistent ordering: `C` becomes a cycle in its given order and every other element a
/// chord across the run of `C` in its fundamental circuit relative to `C` minus its first
/// element.
pub fn graph_from_spanning_circuit(m: &Matroid, a: &OrderingAssignment) -> Result<Graph> {
    if !m.is_binary() {
        return input("graph reconstruction needs a binary matroid");
    }
    if let Some(v) = verify_consistent(m, a)? {
        return input(format!("ordering is not consistent: {}", v.describe(m)));
    }
    let r = m.full_rank();
    let Some(&c) = m.circuits().iter().find(|c| c.len() == r + 1) else {
        return input("matroid has no spanning circuit");
    };
    let seq = a.get(c).ok_or_else(|| Error::Invariant("assignment misses a circuit".into()))?.sequence().to_vec();
    let n = seq.len();
    let vertex = |i: usize| format!("v{}", i % n);
    let mut edges: Vec<(String, String, String)> =
        seq.iter().enumerate().map(|(i, &e)| (vertex(i), vertex(i + 1), m.id(e).to_string())).collect();
    let basis = c.without(seq[0]);
    for f in m.full_set().minus(c).iter() {
        let cf = *m
            .circuits_with(f)
            .iter()
            .find(|x| x.without(f).is_subset(basis))
            .ok_or_else(|| Error::Invariant("element has no fundamental circuit".into()))?;
        let run: Vec<usize> = (0..n).filter(|&i| cf.contains(seq[i])).collect();
        let (u, v) = match (run.first(), run.last()) {
            (Some(&lo), Some(&hi)) if hi - lo + 1 == run.len() => (vertex(lo), vertex(hi + 1)),
            (None, None) => (vertex(0), vertex(0)),
            _ => return Err(Error::Invariant("fundamental circuit is not a block of the spanning circuit".into())),
        };
        edges.push((u, v, m.id(f).to_string()));
    }
    let g = Graph::new(&edges);
    if g.cycle_matroid()? != *m {
        return Err(Error::Invariant("reconstructed graph has a different cycle matroid".into()));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, named};
    use crate::solver::graphic_ordering;

    #[test]
    fn k4_graphic_f7_dual_not() {
        assert!(is_graphic_binary(&named("M(K4)").unwrap()).unwrap());
        let t = find_incompatible_arcs(&named("F7*").unwrap()).unwrap().unwrap();
        assert!(t.holds());
        assert!(is_graphic_binary(&named("U(2,4)").unwrap()).is_err());
    }

    #[test]
    fn arcs_of_k4_triangles() {
        let m = named("M(K4)").unwrap();
        let tri: Vec<ElemSet> = m.circuits().iter().copied().filter(|c| c.len() == 3).collect();
        let (c, d) = (tri[0], tri[1]);
        let found = arcs(&m, c, d).unwrap();
        assert!(!found.is_empty());
        assert!(arcs(&m, c, c).is_err());
    }

    #[test]
    fn balanced_and_unbalanced() {
        let u25 = catalog::uniform(2, 5).unwrap();
        let b = catalog::balanced_series_extension(&u25, 2).unwrap();
        let d = decide_nonbinary_orderable(&b).unwrap();
        assert!(d.orderable);
        let t = d.trace.unwrap();
        assert_eq!(t.base, 5);
        assert_eq!(t.replay().unwrap(), b);
        let u24 = catalog::uniform(2, 4).unwrap();
        let un = catalog::add_series(&u24, "1", "s").unwrap();
        assert!(!decide_nonbinary_orderable(&un).unwrap().orderable);
        assert!(!decide_nonbinary_orderable(&named("W3").unwrap()).unwrap().orderable);
    }

    #[test]
    fn wheel_reconstruction() {
        for g in [catalog::k4(), catalog::wheel(4)] {
            let m = g.cycle_matroid().unwrap();
            let a = graphic_ordering(&g, &m).unwrap();
            let h = graph_from_spanning_circuit(&m, &a).unwrap();
            assert_eq!(h.cycle_matroid().unwrap(), m);
        }
    }
}
