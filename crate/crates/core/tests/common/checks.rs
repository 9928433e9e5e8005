//! Corpora and whole-matroid checks shared by the property tests and the acceptance run.

use std::collections::HashMap;

use ordmat::catalog::{self, named, NAMES};
use ordmat::ordering::AdjacencyRelation;
use ordmat::solver::all_orderings;
use ordmat::structure::{canonical_tree_decomposition, PartKind, TreeDecomposition};
use ordmat::Matroid;
use rand::Rng;

/// The binary matroids used to compare graphicness tests: catalog entries of at most 12
/// elements, some duals, random graphs with their duals and random binary matrices.
pub fn binary_corpus() -> Vec<(String, Matroid)> {
    let mut out: Vec<(String, Matroid)> = [
        "F7",
        "F7*",
        "MstarK5",
        "MstarK33",
        "MstarK33p",
        "MstarK33pp",
        "MstarK33ppp",
        "R10",
        "M(K4)",
        "O1",
        "O2",
        "U(1,4)",
        "U(3,4)",
    ]
    .iter()
    .map(|n| (n.to_string(), named(n).unwrap()))
    .filter(|(_, m)| m.len() <= 12)
    .collect();
    for n in ["MstarK5", "MstarK33"] {
        out.push((format!("{n} dual"), named(n).unwrap().dual()));
    }
    out.push(("M(K5)".into(), catalog::k5().cycle_matroid().unwrap()));
    out.push(("M(K33)".into(), catalog::k33(0).cycle_matroid().unwrap()));
    let mut r = super::rng(11);
    for i in 0..12 {
        let g = super::random_graph(&mut r, 6, 11);
        let m = g.cycle_matroid().unwrap();
        out.push((format!("graph {i}"), m.clone()));
        out.push((format!("cograph {i}"), m.dual()));
    }
    for i in 0..12 {
        out.push((format!("binary {i}"), super::random_binary(&mut r, 4, 9)));
    }
    out
}

/// Connected matroids of at most 14 elements from the catalog, the non-binary corpus and
/// random graphs.
pub fn connected_corpus() -> Vec<Matroid> {
    let mut out: Vec<Matroid> =
        NAMES.iter().map(|n| named(n).unwrap()).filter(|m| m.len() <= 14 && m.is_connected()).collect();
    out.extend(super::nonbinary_corpus(21, 30, 14));
    let mut r = super::rng(9);
    for _ in 0..20 {
        let m = super::random_graph(&mut r, 6, 10).cycle_matroid().unwrap();
        if m.is_connected() {
            out.push(m);
        }
    }
    out
}

type Signature = Vec<(PartKind, usize, Vec<String>, usize)>;

/// Node labels up to basepoint names: kind, size, non-basepoint ids and degree.
fn tree_signature(t: &TreeDecomposition) -> Signature {
    let bps = t.basepoints();
    let mut sig: Signature = t
        .nodes
        .iter()
        .enumerate()
        .map(|(i, n)| {
            let own = n.matroid.ground().iter().filter(|g| !bps.contains(&g.as_str())).cloned().collect();
            (n.kind, n.matroid.len(), own, t.degree(i))
        })
        .collect();
    sig.sort();
    sig
}

/// The decomposition of `m` is valid and recomposes to `m`; renaming its basepoints and
/// decomposing the recomposition gives the same tree.
pub fn check_tree(m: &Matroid) -> Result<(), String> {
    let t = canonical_tree_decomposition(m).map_err(|e| e.to_string())?;
    t.check()?;
    if t.recompose().map_err(|e| e.to_string())? != *m {
        return Err("recomposition differs".into());
    }
    let map: HashMap<String, String> =
        t.basepoints().iter().enumerate().map(|(i, p)| (p.to_string(), format!("bp{i}x"))).collect();
    let mut renamed = t.clone();
    for node in renamed.nodes.iter_mut() {
        let local: HashMap<String, String> =
            map.iter().filter(|(k, _)| node.matroid.index_of(k).is_ok()).map(|(k, v)| (k.clone(), v.clone())).collect();
        node.matroid = node.matroid.relabel(&local).map_err(|e| e.to_string())?;
    }
    for e in renamed.edges.iter_mut() {
        e.2 = map[&e.2].clone();
    }
    let back = renamed.recompose().map_err(|e| e.to_string())?;
    if back != *m {
        return Err("recomposition after renaming differs".into());
    }
    let again = canonical_tree_decomposition(&back).map_err(|e| e.to_string())?;
    if tree_signature(&again) != tree_signature(&t) {
        return Err("decomposition is not unique".into());
    }
    Ok(())
}

/// Series extensions of M(K4) of orders 1 to 3, balanced and with random class sizes, each
/// with the class of every original element.
pub fn k4_series_extensions(seed: u64) -> Vec<(Matroid, HashMap<String, Vec<String>>)> {
    let mk4 = named("M(K4)").unwrap();
    let mut out = Vec::new();
    for k in 1..=3 {
        let classes: HashMap<String, Vec<String>> = mk4
            .ground()
            .iter()
            .map(|g| (g.clone(), if k == 1 { vec![g.clone()] } else { (0..k).map(|i| format!("{g}_{i}")).collect() }))
            .collect();
        out.push((catalog::balanced_series_extension(&mk4, k).unwrap(), classes));
    }
    let mut r = super::rng(seed);
    for _ in 0..6 {
        let classes: HashMap<String, Vec<String>> = mk4
            .ground()
            .iter()
            .map(|g| (g.clone(), (0..r.gen_range(1..=3)).map(|i| format!("{g}{i}")).collect()))
            .collect();
        out.push((catalog::inflate(&mk4, &classes).unwrap(), classes));
    }
    out
}

/// In every ordering found (up to `limit`), elements from the series classes of opposite
/// edges of K4 are never adjacent.
pub fn check_k4_opposite(m: &Matroid, classes: &HashMap<String, Vec<String>>, limit: usize) -> Result<usize, String> {
    let opposite = [("p", "b"), ("a", "e"), ("c", "d")];
    let (found, _) = all_orderings(m, false, limit, 10_000_000).map_err(|e| e.to_string())?;
    if found.is_empty() {
        return Err("no ordering found".into());
    }
    for a in &found {
        let rel = AdjacencyRelation::from_assignment(m, a);
        for (x, y) in opposite {
            for xe in &classes[x] {
                for ye in &classes[y] {
                    let (i, j) = (m.index_of(xe).unwrap(), m.index_of(ye).unwrap());
                    if rel.adjacent_to(i).contains(j) {
                        return Err(format!("{xe} and {ye} are adjacent"));
                    }
                }
            }
        }
    }
    Ok(found.len())
}
