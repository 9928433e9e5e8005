//! One pass/fail line per acceptance criterion. Exits nonzero if any fails.

mod common;

use std::collections::HashMap;
use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use ordmat::catalog::{self, figure_ordering, named, NAMES};
use ordmat::characterize::{decide_nonbinary_orderable, decide_nonbinary_theta_orderable, is_graphic_binary};
use ordmat::matroid::iso::is_isomorphic;
use ordmat::ordering::{verify_consistent, verify_theta_ordering, CyclicOrdering, OrderingAssignment};
use ordmat::solver::{
    balanced_u2n_ordering, find_consistent_ordering, find_theta_ordering, graphic_ordering, trace_ordering,
    Certificate, Obstruction, SolverOptions, Verdict,
};
use ordmat::structure::is_k_connected;
use ordmat::{ElemSet, Matroid};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn timed<T>(limit: Duration, what: &str, f: impl FnOnce() -> T) -> Result<T, String> {
    let start = Instant::now();
    let out = f();
    let took = start.elapsed();
    ensure(took <= limit, || format!("{what} took {took:?}, limit {limit:?}"))?;
    Ok(out)
}

fn solve(m: &Matroid, theta: bool) -> Result<Certificate, String> {
    let cert = if theta {
        find_theta_ordering(m, SolverOptions::default())
    } else {
        find_consistent_ordering(m, SolverOptions::default())
    }
    .map_err(|e| e.to_string())?;
    cert.check(m, theta)?;
    Ok(cert)
}

fn verdict(m: &Matroid, theta: bool) -> Result<Verdict, String> {
    Ok(solve(m, theta)?.verdict())
}

fn c1() -> Outcome {
    let names = ["F7", "F7*", "MstarK5", "MstarK33", "MstarK33p", "MstarK33pp", "MstarK33ppp", "R10"];
    for name in names {
        let m = named(name).map_err(|e| e.to_string())?;
        let cert = timed(Duration::from_secs(10), name, || solve(&m, false))??;
        ensure(cert.verdict() == Verdict::NotOrderable, || format!("{name}: {:?}", cert.verdict()))?;
        let expected = match name {
            "F7" => Some(["1", "2", "3", "4"]),
            "MstarK33" => Some(["1", "3", "5", "8"]),
            _ => None,
        };
        if let Some(circuit) = expected {
            match &cert {
                Certificate::NotOrderable(Obstruction::Efg(o)) => {
                    ensure(m.ids(o.circuit) == circuit && m.id(o.pivot) == "1", || {
                        format!("{name}: pivot {} on {:?}", m.id(o.pivot), m.ids(o.circuit))
                    })?;
                }
                other => return Err(format!("{name}: expected an (e,f,g) certificate, got {other:?}")),
            }
        }
    }
    Ok(format!("{} matroids not orderable, pivots as expected", names.len()))
}

/// Every assignment that differs from `a` on exactly one circuit by a transposition.
fn perturbations(m: &Matroid, a: &OrderingAssignment) -> Vec<OrderingAssignment> {
    let mut out = Vec::new();
    for (k, o) in a.orderings().iter().enumerate() {
        let seq = o.sequence();
        for i in 0..seq.len() {
            for j in i + 1..seq.len() {
                let mut s = seq.to_vec();
                s.swap(i, j);
                let changed = CyclicOrdering::canonicalize(&s).unwrap();
                if changed == *o {
                    continue;
                }
                let mut all = a.orderings().to_vec();
                all[k] = changed;
                out.push(OrderingAssignment::new(m, all).unwrap());
            }
        }
    }
    out
}

fn c2() -> Outcome {
    let mut perturbed = 0;
    for (name, circuits) in [("O1", 7), ("O2", 15)] {
        let m = named(name).map_err(|e| e.to_string())?;
        let a = figure_ordering(name).unwrap().map_err(|e| e.to_string())?;
        ensure(a.orderings().len() == circuits && m.circuits().len() == circuits, || format!("{name}: circuit count"))?;
        let v = verify_consistent(&m, &a).map_err(|e| e.to_string())?;
        ensure(v.is_none(), || format!("{name}: figure ordering fails: {}", v.unwrap().describe(&m)))?;
        for p in perturbations(&m, &a) {
            ensure(verify_consistent(&m, &p).map_err(|e| e.to_string())?.is_some(), || {
                format!("{name}: a perturbed ordering is still consistent")
            })?;
            perturbed += 1;
        }
        let v = timed(Duration::from_secs(60), name, || verdict(&m, false))??;
        ensure(v == Verdict::Orderable, || format!("{name}: solver says {v:?}"))?;
    }
    Ok(format!("figures verify, {perturbed} single-circuit perturbations all rejected, solver finds orderings"))
}

fn c3() -> Outcome {
    let mut count = 0;
    for n in 1..=7 {
        for r in 0..=n {
            let m = catalog::uniform(r, n).map_err(|e| e.to_string())?;
            let expected = r <= 2 || r + 1 >= n;
            let v = verdict(&m, false)?;
            ensure(v == if expected { Verdict::Orderable } else { Verdict::NotOrderable }, || {
                format!("U({r},{n}): {v:?}")
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} uniform matroids, orderable exactly when rank <= 2 or binary"))
}

fn c4() -> Outcome {
    for name in ["W3", "W4"] {
        let v = verdict(&named(name).map_err(|e| e.to_string())?, false)?;
        ensure(v == Verdict::NotOrderable, || format!("{name}: {v:?}"))?;
    }
    let w2 = named("W2").map_err(|e| e.to_string())?;
    let u24 = catalog::uniform(2, 4).map_err(|e| e.to_string())?;
    ensure(is_isomorphic(&w2, &u24), || "W2 is not U(2,4)".into())?;
    ensure(verdict(&w2, false)? == Verdict::Orderable, || "W2 not orderable".into())?;
    Ok("W3, W4 not orderable; W2 = U(2,4) orderable".into())
}

fn c5() -> Outcome {
    for n in 4..=6 {
        for k in 1..=3 {
            let (m, a) = balanced_u2n_ordering(n, k).map_err(|e| e.to_string())?;
            let v = verify_consistent(&m, &a).map_err(|e| e.to_string())?;
            ensure(v.is_none(), || format!("balanced ({n},{k}) fails: {}", v.unwrap().describe(&m)))?;
        }
    }
    let u24 = catalog::uniform(2, 4).map_err(|e| e.to_string())?;
    let mut unbalanced = 0;
    for mask in 1u32..15 {
        let classes: HashMap<String, Vec<String>> = u24
            .ground()
            .iter()
            .enumerate()
            .map(|(i, g)| (g.clone(), (0..1 + ((mask >> i) & 1)).map(|j| format!("{g}_{j}")).collect()))
            .collect();
        let m = catalog::inflate(&u24, &classes).map_err(|e| e.to_string())?;
        let v = timed(Duration::from_secs(5), &format!("sizes {mask:04b}"), || verdict(&m, false))??;
        ensure(v == Verdict::NotOrderable, || format!("class sizes {mask:04b}: {v:?}"))?;
        unbalanced += 1;
    }
    Ok(format!("9 balanced orderings verify, {unbalanced} unbalanced extensions not orderable"))
}

fn criterion6_corpus() -> Vec<Matroid> {
    common::nonbinary_corpus(7, 60, 14)
}

fn c6() -> Outcome {
    let corpus = criterion6_corpus();
    ensure(corpus.len() >= 50, || format!("corpus has {} matroids", corpus.len()))?;
    let (mut pos, mut neg) = (0, 0);
    for m in &corpus {
        ensure(m.is_connected() && !m.is_binary() && m.len() <= 14, || "corpus member out of scope".into())?;
        let d = decide_nonbinary_orderable(m).map_err(|e| e.to_string())?;
        let v = verdict(m, false)?;
        ensure(v != Verdict::Indeterminate, || "solver indeterminate".into())?;
        ensure(d.orderable == (v == Verdict::Orderable), || format!("disagreement on {:?}", m.circuit_ids()))?;
        match d.trace {
            Some(t) => {
                ensure(t.replay().map_err(|e| e.to_string())? == *m, || "trace does not replay".into())?;
                let (rm, a) = trace_ordering(&t).map_err(|e| e.to_string())?;
                ensure(rm == *m && verify_consistent(&rm, &a).map_err(|e| e.to_string())?.is_none(), || {
                    "trace ordering fails".into()
                })?;
                pos += 1;
            }
            None => {
                ensure(!d.orderable, || "orderable without a trace".into())?;
                neg += 1;
            }
        }
    }
    Ok(format!("{} matroids ({pos} orderable, {neg} not), 0 disagreements, traces replay", corpus.len()))
}

fn c7() -> Outcome {
    let corpus = common::checks::binary_corpus();
    for (name, m) in &corpus {
        let w = is_graphic_binary(m).map_err(|e| e.to_string())?;
        ensure(w == common::oracle::graphic_by_search(m), || format!("{name}: disagreement"))?;
    }
    let mut r = common::rng(31);
    for i in 0..20 {
        let m = common::random_graph(&mut r, 6, 12).cycle_matroid().map_err(|e| e.to_string())?;
        ensure(is_graphic_binary(&m).map_err(|e| e.to_string())?, || format!("random graph {i} reported non-graphic"))?;
    }
    for name in ["F7", "F7*", "MstarK5", "MstarK33", "MstarK33p", "MstarK33pp", "MstarK33ppp", "R10"] {
        let m = named(name).map_err(|e| e.to_string())?;
        ensure(!is_graphic_binary(&m).map_err(|e| e.to_string())?, || format!("{name} reported graphic"))?;
    }
    Ok(format!("{} corpus matroids agree with graph search; 20 graphs graphic; 8 unorderable ones not", corpus.len()))
}

fn c8() -> Outcome {
    let mut r = common::rng(41);
    for i in 0..20 {
        let g = common::random_graph(&mut r, 6, 12);
        let m = g.cycle_matroid().map_err(|e| e.to_string())?;
        let a = graphic_ordering(&g, &m).map_err(|e| e.to_string())?;
        let v = verify_theta_ordering(&m, &a).map_err(|e| e.to_string())?;
        ensure(v.is_none(), || format!("graph {i}: {}", v.unwrap().describe(&m)))?;
    }
    let f7d = named("F7*").map_err(|e| e.to_string())?;
    ensure(verdict(&f7d, true)? == Verdict::NotOrderable, || "F7* theta-orderable".into())?;
    let u24 = catalog::uniform(2, 4).map_err(|e| e.to_string())?;
    let b = catalog::balanced_series_extension(&u24, 2).map_err(|e| e.to_string())?;
    let pp = catalog::parallel_path_addition(&b, &["1_0", "1_1"], &["p", "q"]).map_err(|e| e.to_string())?;
    ensure(verdict(&pp, true)? == Verdict::NotOrderable, || {
        "U(2,4) with a size-2 path addition theta-orderable".into()
    })?;
    let corpus = criterion6_corpus();
    for m in &corpus {
        let d = decide_nonbinary_theta_orderable(m).map_err(|e| e.to_string())?;
        ensure(d == (verdict(m, true)? == Verdict::Orderable), || {
            format!("theta disagreement on {:?}", m.circuit_ids())
        })?;
    }
    Ok(format!(
        "20 graph orderings theta-verify; F7* and the path addition not theta-orderable; {} agree",
        corpus.len()
    ))
}

fn c9() -> Outcome {
    let mut r = common::rng(51);
    let mut checked = 0;
    for i in 0..40 {
        let m = common::random_binary(&mut r, 1 + i % 5, 4 + i % 8);
        let d = m.dual();
        ensure(d.dual() == m, || format!("binary {i}: dual of dual differs"))?;
        let full = m.full_set();
        for x in full.subsets() {
            ensure(d.rank(x) == x.len() + m.rank(full.minus(x)) - m.full_rank(), || format!("binary {i}: dual rank"))?;
        }
        checked += 1;
    }
    for name in NAMES {
        let m = named(name).map_err(|e| e.to_string())?;
        ensure(m.dual().dual() == m, || format!("{name}: dual of dual differs"))?;
        if m.len() <= 16 {
            m.check_axioms().map_err(|e| format!("{name}: {e}"))?;
            m.dual().check_axioms().map_err(|e| format!("{name} dual: {e}"))?;
        }
    }
    let mut deletions = 0;
    for name in NAMES.iter().copied().chain(["U(2,4)", "U(2,5)", "U(2,6)", "U(1,4)", "U(3,4)", "W2", "theta(1,2,3)"]) {
        let m = named(name).map_err(|e| e.to_string())?;
        if m.len() > 16 || verdict(&m, false)? != Verdict::Orderable {
            continue;
        }
        for e in 0..m.len() {
            let d = m.delete(ElemSet::singleton(e));
            ensure(verdict(&d, false)? == Verdict::Orderable, || format!("{name} \\ {} not orderable", m.id(e)))?;
            deletions += 1;
        }
    }
    let trees = common::checks::connected_corpus();
    for m in &trees {
        common::checks::check_tree(m).map_err(|e| format!("{:?}: {e}", m.circuit_ids()))?;
    }
    let mut orderings = 0;
    for (m, classes) in common::checks::k4_series_extensions(17) {
        orderings += common::checks::check_k4_opposite(&m, &classes, 300)?;
    }
    Ok(format!(
        "{checked} dual checks, catalog axioms, {deletions} deletions orderable, {} trees recompose, {orderings} K4 orderings",
        trees.len()
    ))
}

fn c10() -> Outcome {
    let o2 = named("O2").map_err(|e| e.to_string())?;
    ensure(verdict(&o2, false)? == Verdict::Orderable, || "O2 not orderable".into())?;
    ensure(!is_graphic_binary(&o2).map_err(|e| e.to_string())?, || "O2 graphic".into())?;
    ensure(!common::oracle::graphic_by_search(&o2), || "graph search finds a graph for O2".into())?;
    ensure(!is_k_connected(&o2, 4).map_err(|e| e.to_string())?, || "O2 is 4-connected".into())?;
    Ok("O2 orderable, non-graphic, not 4-connected".into())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("unorderable suite", c1),
        ("figure orderings", c2),
        ("uniform matroids", c3),
        ("whirls", c4),
        ("balanced and unbalanced extensions", c5),
        ("non-binary characterization", c6),
        ("graphicness", c7),
        ("theta orderings", c8),
        ("structural properties", c9),
        ("O2 facts", c10),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let took = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {:>2} PASS {name}: {detail} ({took:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {why} ({took:.2}s)", i + 1);
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
