//! Separations, Tutte connectivity and the canonical tree decomposition into 3-connected
//! matroids, circuits and cocircuits glued by 2-sums.

use std::collections::HashSet;

use crate::catalog::two_sum;
use crate::error::{input, Error, Result};
use crate::matroid::{check_cap, Matroid};
use crate::set::ElemSet;

/// `r(X) + r(E - X) - r(M)`.
pub fn connectivity(m: &Matroid, x: ElemSet) -> usize {
    m.rank(x) + m.rank(m.full_set().minus(x)) - m.full_rank()
}

/// Every exact 2-separation `(X, Y)` of a connected matroid, with `X` the smaller side
/// (the lexicographically least on ties), ordered by `|X|` then lexicographically.
pub fn two_separations(m: &Matroid) -> Result<Vec<(ElemSet, ElemSet)>> {
    check_cap(m.len())?;
    if !m.is_connected() {
        return input("two_separations needs a connected matroid");
    }
    Ok(two_separations_unchecked(m))
}

fn two_separations_unchecked(m: &Matroid) -> Vec<(ElemSet, ElemSet)> {
    let n = m.len();
    let full = m.full_set();
    let mut out = Vec::new();
    if n < 4 {
        return out;
    }
    // Subsets containing element 0 enumerate each bipartition once.
    for rest in full.without(0).subsets() {
        let x = rest.with(0);
        let y = full.minus(x);
        if x.len() < 2 || y.len() < 2 || connectivity(m, x) != 1 {
            continue;
        }
        let (a, b) = if x.len() < y.len() || (x.len() == y.len() && x.lex_cmp(y).is_lt()) { (x, y) } else { (y, x) };
        out.push((a, b));
    }
    out.sort_by(|p, q| p.0.len().cmp(&q.0.len()).then(p.0.lex_cmp(q.0)));
    out
}

/// Tutte `k`-connectivity: no `j`-separation for `j < k`, by exhaustive scan.
pub fn is_k_connected(m: &Matroid, k: usize) -> Result<bool> {
    check_cap(m.len())?;
    if k <= 1 || m.is_empty() {
        return Ok(true);
    }
    let full = m.full_set();
    for rest in full.without(0).subsets() {
        let x = rest.with(0);
        let y = full.minus(x);
        if y.is_empty() {
            continue;
        }
        let small = x.len().min(y.len());
        let lambda = connectivity(m, x);
        if (1..k).any(|j| small >= j && lambda < j) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PartKind {
    ThreeConnected,
    Circuit,
    Cocircuit,
}

impl PartKind {
    pub fn name(self) -> &'static str {
        match self {
            PartKind::ThreeConnected => "threeconnected",
            PartKind::Circuit => "circuit",
            PartKind::Cocircuit => "cocircuit",
        }
    }
}

/// The kind of a connected part.
pub fn part_kind(m: &Matroid) -> PartKind {
    if m.circuits().len() == 1 && m.circuits()[0] == m.full_set() {
        PartKind::Circuit
    } else if m.full_rank() == 1 && m.loops().is_empty() {
        PartKind::Cocircuit
    } else {
        PartKind::ThreeConnected
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeNode {
    pub matroid: Matroid,
    pub kind: PartKind,
}

/// A tree of parts; `edges` join two parts sharing exactly the named basepoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    pub nodes: Vec<TreeNode>,
    pub edges: Vec<(usize, usize, String)>,
}

impl TreeDecomposition {
    pub fn neighbours(&self, v: usize) -> Vec<(usize, &str)> {
        self.edges
            .iter()
            .filter_map(|(a, b, p)| {
                if *a == v {
                    Some((*b, p.as_str()))
                } else if *b == v {
                    Some((*a, p.as_str()))
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|(a, b, _)| *a == v || *b == v).count()
    }

    pub fn basepoints(&self) -> Vec<&str> {
        self.edges.iter().map(|(_, _, p)| p.as_str()).collect()
    }

    /// Fold the tree back together by 2-sums along every edge.
    pub fn recompose(&self) -> Result<Matroid> {
        let mut parts: Vec<Option<Matroid>> = self.nodes.iter().map(|n| Some(n.matroid.clone())).collect();
        let mut edges = self.edges.clone();
        while let Some((a, b, p)) = edges.pop() {
            let ma = parts[a].take().ok_or_else(|| Error::Invariant("tree has a cycle".into()))?;
            let mb = parts[b].take().ok_or_else(|| Error::Invariant("tree has a cycle".into()))?;
            parts[a] = Some(two_sum(&ma, &mb, &p)?);
            for e in edges.iter_mut() {
                if e.0 == b {
                    e.0 = a;
                }
                if e.1 == b {
                    e.1 = a;
                }
            }
        }
        let mut left: Vec<Matroid> = parts.into_iter().flatten().collect();
        if left.len() != 1 {
            return Err(Error::Invariant("tree is not connected".into()));
        }
        Ok(left.pop().unwrap())
    }

    /// Check the defining properties: parts share exactly their edge basepoints, no
    /// basepoint is a loop or coloop of its parts, no two adjacent parts are both circuits
    /// or both cocircuits, and parts have at least three elements.
    pub fn check(&self) -> std::result::Result<(), String> {
        let n = self.nodes.len();
        if self.edges.len() + 1 != n {
            return Err("not a tree".into());
        }
        for i in 0..n {
            for j in i + 1..n {
                let gi: HashSet<&String> = self.nodes[i].matroid.ground().iter().collect();
                let shared: Vec<&String> = self.nodes[j].matroid.ground().iter().filter(|g| gi.contains(g)).collect();
                let edge = self.edges.iter().find(|(a, b, _)| (*a, *b) == (i, j) || (*a, *b) == (j, i));
                match edge {
                    Some((_, _, p)) if shared.len() == 1 && shared[0] == p => {}
                    None if shared.is_empty() => {}
                    _ => return Err(format!("parts {i} and {j} share {shared:?}")),
                }
            }
        }
        for (a, b, p) in &self.edges {
            for v in [*a, *b] {
                let m = &self.nodes[v].matroid;
                let e = m.index_of(p).map_err(|e| e.to_string())?;
                if m.loops().contains(e) || m.coloops().contains(e) {
                    return Err(format!("basepoint {p} is a separator of part {v}"));
                }
            }
            let (ka, kb) = (self.nodes[*a].kind, self.nodes[*b].kind);
            if ka == kb && ka != PartKind::ThreeConnected {
                return Err(format!("adjacent parts {a} and {b} are both {}", ka.name()));
            }
        }
        if n > 1 && self.nodes.iter().any(|v| v.matroid.len() < 3) {
            return Err("a part has fewer than three elements".into());
        }
        Ok(())
    }
}

/// The canonical tree decomposition of a connected matroid: split along 2-separations
/// (smallest side first, then lexicographically least) until every part is 3-connected, a
/// circuit or a cocircuit, then merge adjacent circuits and adjacent cocircuits.
/// Basepoints are named `_p0, _p1, ...` (skipping ids in use).
pub fn canonical_tree_decomposition(m: &Matroid) -> Result<TreeDecomposition> {
    check_cap(m.len())?;
    if m.is_empty() || !m.is_connected() {
        return input("tree decomposition needs a nonempty connected matroid");
    }
    let mut nodes: Vec<Option<Matroid>> = vec![Some(m.clone())];
    let mut edges: Vec<(usize, usize, String)> = Vec::new();
    let mut next_bp = 0usize;
    let mut fresh = || loop {
        let id = format!("_p{next_bp}");
        next_bp += 1;
        if m.index_of(&id).is_err() {
            return id;
        }
    };
    let mut work = vec![0usize];
    while let Some(v) = work.pop() {
        let part = nodes[v].clone().unwrap();
        if part_kind(&part) != PartKind::ThreeConnected {
            continue;
        }
        let seps = two_separations_unchecked(&part);
        let Some(&(x, y)) = seps.first() else { continue };
        let p = fresh();
        let (m1, m2) = split(&part, x, y, &p)?;
        let w = nodes.len();
        let y_ids: HashSet<String> = part.ids(y).into_iter().map(str::to_string).collect();
        nodes[v] = Some(m1);
        nodes.push(Some(m2));
        for e in edges.iter_mut() {
            if e.0 == v && y_ids.contains(&e.2) {
                e.0 = w;
            } else if e.1 == v && y_ids.contains(&e.2) {
                e.1 = w;
            }
        }
        edges.push((v, w, p));
        work.push(v);
        work.push(w);
    }
    // Merge adjacent circuits and adjacent cocircuits.
    loop {
        let kinds: Vec<Option<PartKind>> = nodes.iter().map(|n| n.as_ref().map(part_kind)).collect();
        let Some(pos) =
            edges.iter().position(|(a, b, _)| kinds[*a] == kinds[*b] && kinds[*a] != Some(PartKind::ThreeConnected))
        else {
            break;
        };
        let (a, b, p) = edges.remove(pos);
        let merged = two_sum(nodes[a].as_ref().unwrap(), nodes[b].as_ref().unwrap(), &p)?;
        nodes[a] = Some(merged);
        nodes[b] = None;
        for e in edges.iter_mut() {
            if e.0 == b {
                e.0 = a;
            }
            if e.1 == b {
                e.1 = a;
            }
        }
    }
    // Compact node indices.
    let mut index = vec![usize::MAX; nodes.len()];
    let mut out_nodes = Vec::new();
    for (i, n) in nodes.into_iter().enumerate() {
        if let Some(matroid) = n {
            index[i] = out_nodes.len();
            let kind = part_kind(&matroid);
            out_nodes.push(TreeNode { matroid, kind });
        }
    }
    let edges = edges.into_iter().map(|(a, b, p)| (index[a].min(index[b]), index[a].max(index[b]), p)).collect();
    Ok(TreeDecomposition { nodes: out_nodes, edges })
}

/// Split along the exact 2-separation `(x, y)` with new basepoint `p`: the part on `x`
/// keeps the circuits inside `x` and gains `(C ∩ x) + p` for circuits `C` meeting both
/// sides; symmetrically for `y`.
fn split(m: &Matroid, x: ElemSet, y: ElemSet, p: &str) -> Result<(Matroid, Matroid)> {
    let side = |s: ElemSet, other: ElemSet| -> Result<Matroid> {
        let mut ground: Vec<String> = m.ids(s).into_iter().map(str::to_string).collect();
        ground.push(p.to_string());
        let pos = |e: usize| s.iter().position(|f| f == e).unwrap();
        let bp = s.len();
        let mut circuits = Vec::new();
        for &c in m.circuits() {
            let inside = ElemSet::from_indices(c.inter(s).iter().map(pos));
            if c.is_subset(s) {
                circuits.push(inside);
            } else if c.intersects(other) && c.intersects(s) {
                circuits.push(inside.with(bp));
            }
        }
        let circuits = crate::set::minimal_members(circuits);
        let part = Matroid::from_circuits(
            &ground,
            &circuits.iter().map(|c| c.iter().map(|e| ground[e].clone()).collect()).collect::<Vec<Vec<String>>>(),
        )?;
        Ok(part)
    };
    Ok((side(x, y)?, side(y, x)?))
}
