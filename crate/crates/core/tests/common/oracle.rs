//! Brute-force reference implementations, written without the library's solver,
//! verifier or structural code.

use std::collections::HashMap;

use ordmat::catalog::Graph;
use ordmat::{ElemSet, Matroid};

/// Every cyclic ordering of `c` up to rotation and reflection.
pub fn cyclic_orderings(c: &[usize]) -> Vec<Vec<usize>> {
    if c.len() <= 3 {
        return vec![c.to_vec()];
    }
    let first = c[0];
    let rest: Vec<usize> = c[1..].to_vec();
    let mut out = Vec::new();
    permute(&rest, &mut Vec::new(), &mut vec![false; rest.len()], &mut |p| {
        if p[0] < p[p.len() - 1] {
            let mut seq = vec![first];
            seq.extend_from_slice(p);
            out.push(seq);
        }
    });
    out
}

fn permute(items: &[usize], cur: &mut Vec<usize>, used: &mut Vec<bool>, f: &mut dyn FnMut(&[usize])) {
    if cur.len() == items.len() {
        f(cur);
        return;
    }
    for i in 0..items.len() {
        if !used[i] {
            used[i] = true;
            cur.push(items[i]);
            permute(items, cur, used, f);
            cur.pop();
            used[i] = false;
        }
    }
}

fn pairs_of(seq: &[usize]) -> Vec<(usize, usize)> {
    let n = seq.len();
    match n {
        0 | 1 => Vec::new(),
        2 => vec![(seq[0].min(seq[1]), seq[0].max(seq[1]))],
        _ => (0..n).map(|i| (seq[i].min(seq[(i + 1) % n]), seq[i].max(seq[(i + 1) % n]))).collect(),
    }
}

/// Three pairwise disjoint nonempty sets whose pairwise unions are exactly the circuits
/// inside their union.
pub fn thetas(m: &Matroid) -> Vec<[ElemSet; 3]> {
    let cs = m.circuits();
    let mut out: Vec<[ElemSet; 3]> = Vec::new();
    for x in cs {
        for y in cs {
            if x == y || !x.intersects(*y) {
                continue;
            }
            let (a, b, c) = (x.inter(*y), x.minus(*y), y.minus(*x));
            let u = x.union(*y);
            let inside: Vec<ElemSet> = cs.iter().copied().filter(|z| z.is_subset(u)).collect();
            if inside.len() == 3 && inside.contains(&b.union(c)) {
                let mut t = [a, b, c];
                t.sort_by_key(|s| s.0);
                if !out.contains(&t) {
                    out.push(t);
                }
            }
        }
    }
    out
}

fn contiguous(seq: &[usize], part: ElemSet) -> bool {
    let n = seq.len();
    let inside: Vec<bool> = seq.iter().map(|&e| part.contains(e)).collect();
    let starts = (0..n).filter(|&i| inside[i] && !inside[(i + n - 1) % n]).count();
    starts <= 1
}

/// The number of consistent orderings (theta-orderings if `theta`), by backtracking over
/// the circuits with a shared adjacency table. Stops counting at `limit`.
pub fn count_orderings(m: &Matroid, theta: bool, limit: usize) -> usize {
    let circuits: Vec<Vec<usize>> = m.circuits().iter().map(|c| c.to_vec()).collect();
    let options: Vec<Vec<Vec<usize>>> = circuits.iter().map(|c| cyclic_orderings(c)).collect();
    let thetas = if theta { thetas(m) } else { Vec::new() };
    let mut count = 0;
    let mut chosen: Vec<Vec<usize>> = Vec::new();
    walk(m, &circuits, &options, &thetas, &mut chosen, &mut count, limit);
    count
}

fn walk(
    m: &Matroid,
    circuits: &[Vec<usize>],
    options: &[Vec<Vec<usize>>],
    thetas: &[[ElemSet; 3]],
    chosen: &mut Vec<Vec<usize>>,
    count: &mut usize,
    limit: usize,
) {
    if *count >= limit {
        return;
    }
    let i = chosen.len();
    if i == circuits.len() {
        if consistent(m, circuits, chosen) && theta_ok(circuits, chosen, thetas) {
            *count += 1;
        }
        return;
    }
    for o in &options[i] {
        chosen.push(o.clone());
        if consistent(m, &circuits[..=i], chosen) {
            walk(m, circuits, options, thetas, chosen, count, limit);
        }
        chosen.pop();
    }
}

/// Pairs sharing two chosen circuits must be adjacent in both or in neither.
fn consistent(_m: &Matroid, circuits: &[Vec<usize>], chosen: &[Vec<usize>]) -> bool {
    let mut verdict: HashMap<(usize, usize), bool> = HashMap::new();
    for (c, seq) in circuits.iter().zip(chosen) {
        let adj = pairs_of(seq);
        for (i, &e) in c.iter().enumerate() {
            for &f in &c[i + 1..] {
                let key = (e.min(f), e.max(f));
                let here = adj.contains(&key);
                if let Some(&prev) = verdict.get(&key) {
                    if prev != here {
                        return false;
                    }
                }
                verdict.insert(key, here);
            }
        }
    }
    true
}

fn theta_ok(circuits: &[Vec<usize>], chosen: &[Vec<usize>], thetas: &[[ElemSet; 3]]) -> bool {
    for t in thetas {
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            let c = t[i].union(t[j]);
            let k = circuits.iter().position(|x| ElemSet::from_indices(x.iter().copied()) == c).unwrap();
            if !contiguous(&chosen[k], t[i]) || !contiguous(&chosen[k], t[j]) {
                return false;
            }
        }
    }
    true
}

/// Rank of an edge set in a graph given as vertex pairs, by union-find.
fn graph_rank(edges: &[(usize, usize)], vertices: usize) -> usize {
    let mut parent: Vec<usize> = (0..vertices).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    let mut rank = 0;
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
            rank += 1;
        }
    }
    rank
}

/// Graphicness by graph search on the matroid with series and parallel classes reduced to
/// single elements (subdividing or doubling edges preserves graphicness both ways).
pub fn graphic_by_search(m: &Matroid) -> bool {
    let mut core = m.clone();
    loop {
        let next = core.simplification().cosimplification();
        if next.len() == core.len() {
            break;
        }
        core = next;
    }
    if core.is_empty() {
        return true;
    }
    match find_graph(&core) {
        Some(g) => {
            assert_eq!(g.cycle_matroid().unwrap(), core);
            true
        }
        None => false,
    }
}

/// Search for a graph whose cycle matroid is `m`. A basis becomes a spanning forest, built
/// edge by edge with vertices numbered in order of first use; each other element `f` then
/// joins the ends of the path formed by its fundamental circuit. Partial forests are pruned
/// as soon as a fundamental circuit stops being a union of vertex-disjoint paths.
pub fn find_graph(m: &Matroid) -> Option<Graph> {
    let n = m.len();
    let mut basis = ElemSet::EMPTY;
    for e in 0..n {
        if m.rank(basis.with(e)) > basis.len() {
            basis = basis.with(e);
        }
    }
    let fundamental: Vec<(usize, ElemSet)> = (0..n)
        .filter(|&f| !basis.contains(f))
        .map(|f| {
            let c = m.circuits_with(f).iter().find(|c| c.without(f).is_subset(basis)).copied().unwrap();
            (f, c.without(f))
        })
        .collect();
    // Place basis elements so that fundamental circuits fill up early.
    let mut order: Vec<usize> = Vec::new();
    let mut placed = ElemSet::EMPTY;
    while placed != basis {
        let next = basis
            .minus(placed)
            .iter()
            .max_by_key(|&b| {
                let touched = fundamental.iter().filter(|(_, p)| p.contains(b));
                let done = touched.clone().filter(|(_, p)| p.minus(placed).len() == 1).count();
                (done, touched.count(), usize::MAX - b)
            })
            .unwrap();
        order.push(next);
        placed = placed.with(next);
    }
    let vertices = basis.len() + m.components().len().max(1);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut result = None;
    forest(m, &order, &fundamental, vertices, 0, &mut edges, &mut result);
    result
}

fn forest(
    m: &Matroid,
    order: &[usize],
    fundamental: &[(usize, ElemSet)],
    vertices: usize,
    used: usize,
    edges: &mut Vec<(usize, usize)>,
    result: &mut Option<Graph>,
) {
    if result.is_some() {
        return;
    }
    let k = edges.len();
    if k == order.len() {
        *result = finish(m, order, fundamental, edges);
        return;
    }
    for u in 0..=used.min(vertices - 1) {
        let vmax = if u == used { used + 1 } else { used };
        for v in u + 1..=vmax.min(vertices - 1) {
            edges.push((u, v));
            if graph_rank(edges, vertices) == edges.len() && paths_ok(order, fundamental, edges) {
                forest(m, order, fundamental, vertices, used.max(v + 1), edges, result);
            }
            edges.pop();
            if result.is_some() {
                return;
            }
        }
    }
}

/// Degrees of the placed part of each fundamental circuit are at most 2.
fn paths_ok(order: &[usize], fundamental: &[(usize, ElemSet)], edges: &[(usize, usize)]) -> bool {
    fundamental.iter().all(|(_, p)| {
        let mut deg: HashMap<usize, usize> = HashMap::new();
        for (&e, &(u, v)) in order.iter().zip(edges) {
            if p.contains(e) {
                *deg.entry(u).or_default() += 1;
                *deg.entry(v).or_default() += 1;
            }
        }
        deg.values().all(|&d| d <= 2)
    })
}

fn finish(m: &Matroid, order: &[usize], fundamental: &[(usize, ElemSet)], edges: &[(usize, usize)]) -> Option<Graph> {
    let mut triples: Vec<(String, String, String)> =
        order.iter().zip(edges).map(|(&e, &(u, v))| (format!("v{u}"), format!("v{v}"), m.id(e).to_string())).collect();
    for (f, p) in fundamental {
        let path: Vec<(usize, usize)> =
            order.iter().zip(edges).filter(|(e, _)| p.contains(**e)).map(|(_, &x)| x).collect();
        let (u, v) = if path.is_empty() {
            (0, 0)
        } else {
            let mut deg: HashMap<usize, usize> = HashMap::new();
            for &(a, b) in &path {
                *deg.entry(a).or_default() += 1;
                *deg.entry(b).or_default() += 1;
            }
            let ends: Vec<usize> = deg.iter().filter(|(_, &d)| d == 1).map(|(&x, _)| x).collect();
            if ends.len() != 2 || graph_rank(&path, edges.len() + 2) != path.len() {
                return None;
            }
            (ends[0], ends[1])
        };
        triples.push((format!("v{u}"), format!("v{v}"), m.id(*f).to_string()));
    }
    let g = Graph::new(&triples);
    (g.cycle_matroid().ok()? == *m).then_some(g)
}
