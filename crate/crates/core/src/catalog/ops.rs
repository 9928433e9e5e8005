//! Building operations: series inflation, 2-sum, parallel-path addition, relaxation.

use std::collections::HashMap;

use crate::error::{input, Error, Result};
use crate::matroid::{validate_id, Matroid};
use crate::set::ElemSet;

/// Replace each element by a nonempty list of ids in series. Elements not listed keep their id.
pub fn inflate(m: &Matroid, classes: &HashMap<String, Vec<String>>) -> Result<Matroid> {
    let mut ground: Vec<String> = Vec::new();
    let mut images: Vec<ElemSet> = Vec::with_capacity(m.len());
    for (e, id) in m.ground().iter().enumerate() {
        let new_ids: Vec<String> = match classes.get(id) {
            Some(v) if v.is_empty() => return input(format!("empty series class for `{id}`")),
            Some(v) => v.clone(),
            None => vec![id.clone()],
        };
        let mut img = ElemSet::EMPTY;
        for nid in new_ids {
            validate_id(&nid)?;
            img = img.with(ground.len());
            ground.push(nid);
        }
        debug_assert_eq!(images.len(), e);
        images.push(img);
    }
    check_distinct(&ground)?;
    crate::matroid::check_cap(ground.len())?;
    let circuits = m.circuits().iter().map(|c| c.iter().fold(ElemSet::EMPTY, |s, e| s.union(images[e]))).collect();
    Ok(Matroid::from_sets(ground, circuits))
}

fn check_distinct(ids: &[String]) -> Result<()> {
    let mut seen = std::collections::HashSet::new();
    for id in ids {
        if !seen.insert(id) {
            return Err(Error::DuplicateElement(id.clone()));
        }
    }
    Ok(())
}

/// Add `new_id` in series with `e`.
pub fn add_series(m: &Matroid, e: &str, new_id: &str) -> Result<Matroid> {
    m.index_of(e)?;
    let mut classes = HashMap::new();
    classes.insert(e.to_string(), vec![e.to_string(), new_id.to_string()]);
    inflate(m, &classes)
}

/// Add `new_id` in parallel with `e`.
pub fn add_parallel(m: &Matroid, e: &str, new_id: &str) -> Result<Matroid> {
    let ei = m.index_of(e)?;
    validate_id(new_id)?;
    if m.index_of(new_id).is_ok() {
        return Err(Error::DuplicateElement(new_id.to_string()));
    }
    let n = m.len();
    let mut ground: Vec<String> = m.ground().to_vec();
    ground.push(new_id.to_string());
    let f = n;
    let mut circuits: Vec<ElemSet> = m.circuits().to_vec();
    if m.loops().contains(ei) {
        circuits.push(ElemSet::singleton(f));
    } else {
        circuits.push(ElemSet::singleton(ei).with(f));
        for c in m.circuits_with(ei) {
            circuits.push(c.without(ei).with(f));
        }
    }
    Ok(Matroid::from_sets(ground, circuits))
}

/// Balanced series extension of order `k`: element `e` becomes `e_0, ..., e_{k-1}`.
/// Order 1 returns the matroid unchanged.
pub fn balanced_series_extension(m: &Matroid, k: usize) -> Result<Matroid> {
    if k == 0 {
        return input("order of a balanced series extension must be at least 1");
    }
    if !m.coloops().is_empty() {
        return input("balanced series extension needs a matroid without coloops");
    }
    if k == 1 {
        return Ok(m.clone());
    }
    let classes = m.ground().iter().map(|g| (g.clone(), (0..k).map(|i| format!("{g}_{i}")).collect())).collect();
    inflate(m, &classes)
}

/// The 2-sum of `m1` and `m2` along the shared element `basepoint`.
pub fn two_sum(m1: &Matroid, m2: &Matroid, basepoint: &str) -> Result<Matroid> {
    let p1 = m1.index_of(basepoint)?;
    let p2 = m2.index_of(basepoint)?;
    for g in m1.ground() {
        if g != basepoint && m2.index_of(g).is_ok() {
            return input(format!("2-sum operands share `{g}` besides the basepoint"));
        }
    }
    for (m, p) in [(m1, p1), (m2, p2)] {
        if m.loops().contains(p) || m.coloops().contains(p) {
            return input(format!("basepoint `{basepoint}` is a loop or coloop"));
        }
    }
    let mut ground: Vec<String> = Vec::new();
    let mut map1 = vec![usize::MAX; m1.len()];
    let mut map2 = vec![usize::MAX; m2.len()];
    for (i, g) in m1.ground().iter().enumerate() {
        if i != p1 {
            map1[i] = ground.len();
            ground.push(g.clone());
        }
    }
    for (i, g) in m2.ground().iter().enumerate() {
        if i != p2 {
            map2[i] = ground.len();
            ground.push(g.clone());
        }
    }
    crate::matroid::check_cap(ground.len())?;
    let tr =
        |c: ElemSet, map: &[usize]| ElemSet::from_indices(c.iter().filter(|&e| map[e] != usize::MAX).map(|e| map[e]));
    let mut circuits = Vec::new();
    for c in m1.circuits().iter().filter(|c| !c.contains(p1)) {
        circuits.push(tr(*c, &map1));
    }
    for c in m2.circuits().iter().filter(|c| !c.contains(p2)) {
        circuits.push(tr(*c, &map2));
    }
    for c1 in m1.circuits_with(p1) {
        for c2 in m2.circuits_with(p2) {
            circuits.push(tr(*c1, &map1).union(tr(*c2, &map2)));
        }
    }
    Ok(Matroid::from_sets(ground, circuits))
}

/// An id of the form `{stem}{k}` not present in either matroid.
pub(crate) fn fresh_id(stem: &str, taken: &[&Matroid]) -> String {
    (0..).map(|k| format!("{stem}{k}")).find(|c| taken.iter().all(|m| m.index_of(c).is_err())).unwrap()
}

/// Add the path `fresh` in parallel to the path `path`, which must lie inside one series
/// class. `path[i]` corresponds to `fresh[i]`.
///
/// Fixes `t = path[0]`, contracts the rest of `path`, and 2-sums the result along `t`
/// with the cycle matroid of a theta-graph whose series classes are `{t}`, `path`, `fresh`.
pub fn parallel_path_addition<S: AsRef<str>>(m: &Matroid, path: &[S], fresh: &[S]) -> Result<Matroid> {
    if path.is_empty() {
        return input("parallel path must be nonempty");
    }
    if path.len() != fresh.len() {
        return input("parallel path and fresh ids differ in length");
    }
    let p = m.set_of(path)?;
    if p.len() != path.len() {
        return input("parallel path repeats an element");
    }
    for f in fresh {
        validate_id(f.as_ref())?;
        if m.index_of(f.as_ref()).is_ok() {
            return Err(Error::DuplicateElement(f.as_ref().to_string()));
        }
    }
    let t = p.first().unwrap();
    if m.coloops().contains(t) {
        return input("parallel path lies in a coloop class");
    }
    let class = m.series_classes().block_of(t);
    if !p.is_subset(class) {
        return input("parallel path straddles series classes");
    }
    let bp = fresh_id("_bp", &[m]);
    let contracted = m.contract(p.without(t));
    let mut rename = HashMap::new();
    rename.insert(m.id(t).to_string(), bp.clone());
    let m_prime = contracted.relabel(&rename)?;

    let mut theta_ground: Vec<String> = vec![bp.clone()];
    theta_ground.extend(path.iter().map(|s| s.as_ref().to_string()));
    theta_ground.extend(fresh.iter().map(|s| s.as_ref().to_string()));
    let k = path.len();
    let bp_set = ElemSet::singleton(0);
    let p_set = ElemSet::from_indices(1..=k);
    let f_set = ElemSet::from_indices(k + 1..=2 * k);
    let theta = Matroid::from_sets(theta_ground, vec![bp_set.union(p_set), bp_set.union(f_set), p_set.union(f_set)]);
    two_sum(&m_prime, &theta, &bp)
}

/// Relax the circuit-hyperplane `x`: it becomes a basis.
pub fn relax(m: &Matroid, x: ElemSet) -> Result<Matroid> {
    if !m.is_circuit(x) {
        return input("relaxed set is not a circuit");
    }
    let r = m.full_rank();
    if m.rank(x) + 1 != r || m.closure(x) != x {
        return input("relaxed set is not a hyperplane");
    }
    let mut circuits: Vec<ElemSet> = m.circuits().iter().copied().filter(|c| *c != x).collect();
    for e in m.full_set().minus(x).iter() {
        circuits.push(x.with(e));
    }
    Ok(Matroid::from_sets(m.ground().to_vec(), circuits))
}

pub fn relax_ids<S: AsRef<str>>(m: &Matroid, x: &[S]) -> Result<Matroid> {
    relax(m, m.set_of(x)?)
}

/// All circuit-hyperplanes of `m`.
pub fn circuit_hyperplanes(m: &Matroid) -> Vec<ElemSet> {
    let r = m.full_rank();
    m.circuits().iter().copied().filter(|&c| m.rank(c) + 1 == r && m.closure(c) == c).collect()
}
