//! Matroid isomorphism by backtracking over element maps.
//!
//! Elements are only mapped onto elements with the same circuit-size profile, and every
//! circuit whose elements are all mapped must land on a circuit.

use std::collections::HashSet;

use super::Matroid;
use crate::set::ElemSet;

fn profile(m: &Matroid, e: usize) -> Vec<usize> {
    let mut counts = vec![0usize; m.len() + 1];
    for c in m.circuits_with(e) {
        counts[c.len()] += 1;
    }
    counts
}

fn size_spectrum(m: &Matroid) -> Vec<usize> {
    let mut counts = vec![0usize; m.len() + 1];
    for c in m.circuits() {
        counts[c.len()] += 1;
    }
    counts
}

/// Find a bijection `map` (indices of `a` to indices of `b`) carrying circuits onto circuits.
pub fn find_isomorphism(a: &Matroid, b: &Matroid) -> Option<Vec<usize>> {
    if a.len() != b.len() || a.circuits().len() != b.circuits().len() || size_spectrum(a) != size_spectrum(b) {
        return None;
    }
    let n = a.len();
    let pa: Vec<Vec<usize>> = (0..n).map(|e| profile(a, e)).collect();
    let pb: Vec<Vec<usize>> = (0..n).map(|e| profile(b, e)).collect();
    let mut sa = pa.clone();
    let mut sb = pb.clone();
    sa.sort();
    sb.sort();
    if sa != sb {
        return None;
    }
    // Map elements of `a` in an order that closes circuits early.
    let mut order = Vec::with_capacity(n);
    let mut placed = ElemSet::EMPTY;
    while order.len() < n {
        let next = (0..n)
            .filter(|&e| !placed.contains(e))
            .max_by_key(|&e| {
                let closes = a.circuits_with(e).iter().filter(|c| c.without(e).is_subset(placed)).count();
                let touches = a.circuits_with(e).iter().filter(|c| c.intersects(placed)).count();
                (closes, touches, std::cmp::Reverse(e))
            })
            .unwrap();
        order.push(next);
        placed = placed.with(next);
    }
    let targets: HashSet<u64> = b.circuits().iter().map(|c| c.0).collect();
    let mut map = vec![usize::MAX; n];
    let mut used = ElemSet::EMPTY;
    let mut domain = ElemSet::EMPTY;
    if extend(a, &order, 0, &pa, &pb, &targets, &mut map, &mut used, &mut domain) {
        Some(map)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    a: &Matroid,
    order: &[usize],
    depth: usize,
    pa: &[Vec<usize>],
    pb: &[Vec<usize>],
    targets: &HashSet<u64>,
    map: &mut Vec<usize>,
    used: &mut ElemSet,
    domain: &mut ElemSet,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let e = order[depth];
    for t in 0..pb.len() {
        if used.contains(t) || pb[t] != pa[e] {
            continue;
        }
        map[e] = t;
        let dom = domain.with(e);
        let ok = a.circuits_with(e).iter().filter(|c| c.is_subset(dom)).all(|c| {
            let img = c.iter().fold(0u64, |acc, x| acc | 1 << map[x]);
            targets.contains(&img)
        });
        if ok {
            *used = used.with(t);
            *domain = dom;
            if extend(a, order, depth + 1, pa, pb, targets, map, used, domain) {
                return true;
            }
            *used = used.without(t);
            *domain = domain.without(e);
        }
        map[e] = usize::MAX;
    }
    false
}

pub fn is_isomorphic(a: &Matroid, b: &Matroid) -> bool {
    find_isomorphism(a, b).is_some()
}
