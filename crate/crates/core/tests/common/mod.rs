//! Shared generators for integration tests.
#![allow(dead_code)]

pub mod checks;
pub mod oracle;

use ordmat::catalog::{self, ConstructionTrace, TraceStep};
use ordmat::Matroid;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

/// A random construction trace from U(2,n) of at most `cap` elements.
pub fn random_trace(rng: &mut ChaCha8Rng, cap: usize) -> (ConstructionTrace, Matroid) {
    let n = rng.gen_range(4..=6);
    let k = if 2 * n <= cap { rng.gen_range(1..=2) } else { 1 };
    let mut trace = ConstructionTrace::new(n);
    if k > 1 {
        trace.steps.push(TraceStep::BalancedSeriesExtension { order: k, classes: None });
    }
    let mut m = trace.replay().unwrap();
    let mut fresh = 0;
    for _ in 0..rng.gen_range(0..=3) {
        let blocks = m.series_classes().blocks;
        let class = *blocks.choose(rng).unwrap();
        let size = rng.gen_range(1..=class.len());
        if m.len() + size > cap {
            break;
        }
        let mut members: Vec<String> = m.ids(class).into_iter().map(str::to_string).collect();
        members.shuffle(rng);
        let path: Vec<String> = members[..size].to_vec();
        let new: Vec<String> = (0..size)
            .map(|_| {
                fresh += 1;
                format!("q{fresh}")
            })
            .collect();
        let step = TraceStep::ParallelPathAddition { path, fresh: new };
        m = catalog::apply_step(&m, &step).unwrap();
        trace.steps.push(step);
    }
    (trace, m)
}

/// A structural mutation of `m` that usually breaks balance or path structure. `None` when
/// the result is disconnected, binary or too large.
pub fn mutate(rng: &mut ChaCha8Rng, m: &Matroid, cap: usize) -> Option<Matroid> {
    let ids: Vec<String> = m.ground().to_vec();
    let e = ids.choose(rng).unwrap().clone();
    let out = match rng.gen_range(0..5) {
        0 => catalog::add_series(m, &e, "x_s").ok()?,
        1 => {
            let p = catalog::add_parallel(m, &e, "x_p").ok()?;
            catalog::add_series(&p, "x_p", "x_q").ok()?
        }
        2 => m.delete(m.set_of(&[e.as_str()]).ok()?),
        3 => m.contract(m.set_of(&[e.as_str()]).ok()?),
        _ => {
            let s = catalog::add_series(m, &e, "x_s").ok()?;
            let f = ids.choose(rng).unwrap().clone();
            catalog::add_series(&s, &f, "x_t").ok()?
        }
    };
    (out.len() <= cap && out.is_connected() && !out.is_binary()).then_some(out)
}

/// At least `count` connected non-binary matroids: positives from random traces and
/// negatives from mutations, alternating.
pub fn nonbinary_corpus(seed: u64, count: usize, cap: usize) -> Vec<Matroid> {
    let mut r = rng(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let (_, m) = random_trace(&mut r, cap);
        if let Some(x) = mutate(&mut r, &m, cap) {
            out.push(x);
        }
        out.push(m);
    }
    out
}

/// A random simple-ish graph on at most `max_vertices` vertices with at least one edge.
pub fn random_graph(rng: &mut ChaCha8Rng, max_vertices: usize, max_edges: usize) -> catalog::Graph {
    let v = rng.gen_range(3..=max_vertices);
    let mut pairs: Vec<(usize, usize)> = (0..v).flat_map(|a| (a + 1..v).map(move |b| (a, b))).collect();
    pairs.shuffle(rng);
    let count = rng.gen_range(v - 1..=pairs.len().min(max_edges));
    let edges: Vec<(String, String, String)> = pairs[..count]
        .iter()
        .enumerate()
        .map(|(i, &(a, b))| (format!("x{a}"), format!("x{b}"), format!("e{i}")))
        .collect();
    catalog::Graph::new(&edges)
}

/// A random binary matroid from a `rows x cols` 0/1 matrix.
pub fn random_binary(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matroid {
    let matrix: Vec<Vec<u8>> = (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(0..2)).collect()).collect();
    let ids: Vec<String> = (0..cols).map(|i| format!("b{i}")).collect();
    Matroid::from_binary(&ids, ordmat::BinaryMatrix::from_rows(cols, &matrix)).unwrap()
}
