//! Named matroids and the operations that build new matroids from old ones.
//!
//! Labels follow the usual figures: the Fano plane with lines 125, 567, 147, 136, 345,
//! 237, 246; K5 and K3,3 with numbered edges; M(K4) with edges p, a, b, c, d, e.

mod graph;
mod ops;
mod trace;

pub use graph::{Edge, Graph};
pub use ops::{
    add_parallel, add_series, balanced_series_extension, circuit_hyperplanes, inflate, parallel_path_addition, relax,
    relax_ids, two_sum,
};
pub use trace::{apply_step, ConstructionTrace, TraceStep};

use crate::error::{input, Error, Result};
use crate::matroid::{check_cap, check_ids, BinaryMatrix, Matroid};
use crate::ordering::{parse_assignment, OrderingAssignment};
use crate::set::{k_subsets, ElemSet};

/// Every name accepted by [`named`] apart from the parameterised families.
pub const NAMES: &[&str] = &[
    "F7",
    "F7-",
    "F7*",
    "M(K4)",
    "MstarK5",
    "MstarK33",
    "MstarK33p",
    "MstarK33pp",
    "MstarK33ppp",
    "R10",
    "W3",
    "W4",
    "W5",
    "W6",
    "AG23",
    "PG23",
    "O7",
    "P7",
    "O1",
    "O2",
];

/// Look up a matroid by name. Besides [`NAMES`], accepts `U(r,n)`, `W^r`/`Wr` for
/// 2 <= r <= 6 and `theta(a,b,c)`.
pub fn named(name: &str) -> Result<Matroid> {
    let name = name.trim();
    if let Some(args) = params(name, "U") {
        return match args[..] {
            [r, n] => uniform(r, n),
            _ => input(format!("`{name}` needs two parameters")),
        };
    }
    if let Some(args) = params(name, "theta") {
        return match args[..] {
            [a, b, c] => theta(a, b, c),
            _ => input(format!("`{name}` needs three parameters")),
        };
    }
    if let Some(r) = name.strip_prefix("W^").or_else(|| name.strip_prefix('W')).and_then(|s| s.parse::<usize>().ok()) {
        return whirl(r);
    }
    match name {
        "F7" => Ok(fano()),
        "F7-" => Ok(fano_minus()),
        "F7*" => Ok(fano_dual()),
        "M(K4)" | "MK4" => Ok(mk4()),
        "MstarK5" => Ok(k5().cycle_matroid().expect("K5").dual()),
        "MstarK33" => Ok(k33(0).cycle_matroid().expect("K33").dual()),
        "MstarK33p" => Ok(k33(1).cycle_matroid().expect("K33'").dual()),
        "MstarK33pp" => Ok(k33(2).cycle_matroid().expect("K33''").dual()),
        "MstarK33ppp" => Ok(k33(3).cycle_matroid().expect("K33'''").dual()),
        "R10" => Ok(r10()),
        "AG23" => Ok(ag23()),
        "PG23" => Ok(pg23()),
        "O7" => Ok(pg23().minor_ids(&["6", "8", "9", "b", "c", "d"], &[]).expect("O7")),
        "P7" => Ok(pg23().minor_ids(&["7", "8", "9", "a", "b", "d"], &[]).expect("P7")),
        "O1" => Ok(o1()),
        "O2" => Ok(o2()),
        _ => Err(Error::Input(format!("unknown catalog name `{name}`"))),
    }
}

fn params(name: &str, head: &str) -> Option<Vec<usize>> {
    let rest = name.strip_prefix(head)?.trim_start();
    let inner = rest.strip_prefix('(')?.strip_suffix(')')?;
    inner.split(',').map(|s| s.trim().parse::<usize>().ok()).collect()
}

/// The stored consistent ordering for `O1` or `O2`, transcribed from their figures.
pub fn figure_ordering(name: &str) -> Option<Result<OrderingAssignment>> {
    let (m, lines) = match name {
        "O1" => (o1(), O1_FIGURE),
        "O2" => (o2(), O2_FIGURE),
        _ => return None,
    };
    Some(parse_assignment(&m, &lines.join("\n")))
}

pub const O1_FIGURE: &[&str] = &[
    "(1 5 1' 2' 6 2)",
    "(1 5 1' 7' 3 7)",
    "(2 6 2' 7' 3 7)",
    "(3 4 5 4' 6 4'')",
    "(1 4' 2' 1' 4 3 4'' 2)",
    "(1 7 4 1' 7' 4'' 6 4')",
    "(2 7 4 5 4' 2' 7' 4'')",
];

pub const O2_FIGURE: &[&str] = &[
    "(4 6 5 7)",
    "(2' 1 2 6 5 8 9)",
    "(0' 1 0 9 3 4 6)",
    "(2' 1 2 4 7 8 9)",
    "(3 7 8 9)",
    "(2 1 2' 3 7 5 6)",
    "(0' 1 0 8 7 4 6)",
    "(0' 1 0 9 3 7 5)",
    "(0' 2' 3 4 2 0 8 5)",
    "(0' 2' 9 0 2 4 7 5)",
    "(2' 0' 6 2 0 8 7 3)",
    "(2 1 2' 3 4)",
    "(0 1 0' 5 8)",
    "(0 2 6 0' 2' 9)",
    "(3 4 6 5 8 9)",
];

/// U(r,n) on `1..=n`.
pub fn uniform(r: usize, n: usize) -> Result<Matroid> {
    let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    uniform_labelled(r, &labels)
}

pub fn uniform_labelled(r: usize, labels: &[String]) -> Result<Matroid> {
    let n = labels.len();
    if r > n {
        return input(format!("U({r},{n}) needs r <= n"));
    }
    if n == 0 {
        return input("a matroid needs at least one element");
    }
    check_cap(n)?;
    let circuits = if r < n { k_subsets(n, r + 1).collect() } else { Vec::new() };
    check_ids(labels)?;
    Ok(Matroid::from_sets(labels.to_vec(), circuits))
}

fn binary(ids: &[&str], columns: &[u64]) -> Matroid {
    let height = 64 - columns.iter().fold(0u64, |a, c| a | c).leading_zeros() as usize;
    let rows = (0..height)
        .map(|bit| columns.iter().enumerate().fold(0u64, |acc, (j, c)| acc | (((c >> bit) & 1) << j)))
        .collect();
    Matroid::from_binary(ids, BinaryMatrix::new(ids.len(), rows)).expect("catalog matrix")
}

/// F7 with lines 125, 567, 147, 136, 345, 237, 246.
pub fn fano() -> Matroid {
    // 1, 5, 7 are the coordinate points; the rest are their sums.
    let ids = ["1", "2", "3", "4", "5", "6", "7"];
    binary(&ids, &[0b001, 0b011, 0b111, 0b101, 0b010, 0b110, 0b100])
}

/// F7 with the line 246 relaxed.
pub fn fano_minus() -> Matroid {
    relax_ids(&fano(), &["2", "4", "6"]).expect("246 is a circuit-hyperplane of F7")
}

/// F7* with circuits 1234, 1357, 2457, 1256, 2367, 3456, 1467.
pub fn fano_dual() -> Matroid {
    // The Fano plane whose lines are the complements of those circuits.
    let ids = ["1", "2", "3", "4", "5", "6", "7"];
    binary(&ids, &[0b001, 0b010, 0b111, 0b100, 0b101, 0b110, 0b011]).dual()
}

/// K4 with centre O and outer vertices N, L, R: rim p = LR, a = NL, c = NR; spokes
/// b = ON, d = OL, e = OR. Opposite pairs are (p,b), (a,e), (c,d).
pub fn k4() -> Graph {
    Graph::new(&[("L", "R", "p"), ("N", "L", "a"), ("O", "N", "b"), ("N", "R", "c"), ("O", "L", "d"), ("O", "R", "e")])
}

pub fn mk4() -> Matroid {
    k4().cycle_matroid().expect("K4")
}

/// K5 on V0..V4 with edges numbered 0..9.
pub fn k5() -> Graph {
    Graph::new(&[
        ("V2", "V3", "0"),
        ("V1", "V2", "1"),
        ("V1", "V3", "2"),
        ("V1", "V4", "3"),
        ("V0", "V1", "4"),
        ("V0", "V2", "5"),
        ("V0", "V3", "6"),
        ("V0", "V4", "7"),
        ("V2", "V4", "8"),
        ("V3", "V4", "9"),
    ])
}

/// K3,3 with sides T0, T1, T2 and B0, B2, B4, edges 1..9, plus `extra` of the edges
/// a = B0B2, b = B2B4, c = B0B4.
pub fn k33(extra: usize) -> Graph {
    let mut edges = Vec::new();
    let mut id = 1;
    for t in ["T0", "T1", "T2"] {
        for b in ["B0", "B2", "B4"] {
            edges.push((t.to_string(), b.to_string(), id.to_string()));
            id += 1;
        }
    }
    for (u, v, e) in [("B0", "B2", "a"), ("B2", "B4", "b"), ("B0", "B4", "c")].into_iter().take(extra) {
        edges.push((u.into(), v.into(), e.into()));
    }
    Graph::new(&edges)
}

/// R10: the graft of K3,3 whose extra element `e_gamma` is the all-ones vertex vector.
pub fn r10() -> Matroid {
    let g = k33(0);
    let verts = g.vertices();
    let mut ids: Vec<&str> = g.edges.iter().map(|e| e.id.as_str()).collect();
    let mut cols: Vec<u64> = g
        .edges
        .iter()
        .map(|e| {
            let u = verts.iter().position(|v| *v == e.u).unwrap();
            let v = verts.iter().position(|v| *v == e.v).unwrap();
            (1u64 << u) | (1u64 << v)
        })
        .collect();
    ids.push("e_gamma");
    cols.push((1u64 << verts.len()) - 1);
    binary(&ids, &cols)
}

/// The rank-`r` wheel: hub `h`, rim vertices `v0..`, spokes `s1..sr`, rim edges `r1..rr`.
pub fn wheel(r: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..r {
        edges.push(("h".to_string(), format!("v{i}"), format!("s{}", i + 1)));
    }
    for i in 0..r {
        edges.push((format!("v{i}"), format!("v{}", (i + 1) % r), format!("r{}", i + 1)));
    }
    Graph::new(&edges)
}

/// The whirl W^r, 2 <= r <= 6: the wheel with its rim relaxed.
pub fn whirl(r: usize) -> Result<Matroid> {
    if !(2..=6).contains(&r) {
        return input(format!("whirls are supported for 2 <= r <= 6, not {r}"));
    }
    let w = wheel(r).cycle_matroid()?;
    let rim: Vec<String> = (1..=r).map(|i| format!("r{i}")).collect();
    relax_ids(&w, &rim)
}

/// The cycle matroid of a theta-graph with paths of `a`, `b`, `c` edges named
/// `x1..`, `y1..`, `z1..`.
pub fn theta(a: usize, b: usize, c: usize) -> Result<Matroid> {
    theta_graph(a, b, c)?.cycle_matroid()
}

pub fn theta_graph(a: usize, b: usize, c: usize) -> Result<Graph> {
    if a == 0 || b == 0 || c == 0 {
        return input("theta paths need at least one edge each");
    }
    let mut edges = Vec::new();
    for (stem, len) in [("x", a), ("y", b), ("z", c)] {
        for i in 0..len {
            let u = if i == 0 { "s".to_string() } else { format!("{stem}v{i}") };
            let v = if i + 1 == len { "t".to_string() } else { format!("{stem}v{}", i + 1) };
            edges.push((u, v, format!("{stem}{}", i + 1)));
        }
    }
    Ok(Graph::new(&edges))
}

/// A simple rank-3 matroid given by its points and the lines with at least three points.
pub fn from_lines(points: &[&str], lines: &[&[&str]]) -> Result<Matroid> {
    let idx = |p: &str| points.iter().position(|q| *q == p).ok_or_else(|| Error::UnknownElement(p.to_string()));
    let mut line_sets = Vec::new();
    for l in lines {
        let mut s = ElemSet::EMPTY;
        for p in *l {
            s = s.with(idx(p)?);
        }
        line_sets.push(s);
    }
    let collinear = |s: ElemSet| line_sets.iter().any(|l| s.is_subset(*l));
    let n = points.len();
    let mut circuits: Vec<ElemSet> = k_subsets(n, 3).filter(|s| collinear(*s)).collect();
    circuits.extend(k_subsets(n, 4).filter(|s| !k_subsets(4, 3).any(|t| collinear(pick(*s, t)))));
    let ground = points.iter().map(|p| p.to_string()).collect();
    let m = Matroid::from_sets(ground, circuits);
    m.check_axioms()?;
    Ok(m)
}

/// The elements of `s` at the positions in `positions`.
fn pick(s: ElemSet, positions: ElemSet) -> ElemSet {
    let v = s.to_vec();
    ElemSet::from_indices(positions.iter().map(|i| v[i]))
}

const AG_LINES: [[&str; 3]; 12] = [
    ["1", "2", "3"],
    ["4", "5", "6"],
    ["7", "8", "9"],
    ["1", "4", "7"],
    ["2", "5", "8"],
    ["3", "6", "9"],
    ["1", "5", "9"],
    ["2", "6", "7"],
    ["3", "4", "8"],
    ["3", "5", "7"],
    ["1", "6", "8"],
    ["2", "4", "9"],
];

/// AG(2,3) on the 3x3 grid `1..9`, read row by row.
pub fn ag23() -> Matroid {
    let points = ["1", "2", "3", "4", "5", "6", "7", "8", "9"];
    let lines: Vec<&[&str]> = AG_LINES.iter().map(|l| &l[..]).collect();
    from_lines(&points, &lines).expect("AG(2,3)")
}

/// PG(2,3): AG(2,3) with points at infinity a (rows), c (columns), b and d (diagonals).
pub fn pg23() -> Matroid {
    let points = ["1", "2", "3", "4", "5", "6", "7", "8", "9", "a", "b", "c", "d"];
    let at_infinity = ["a", "a", "a", "c", "c", "c", "b", "b", "b", "d", "d", "d"];
    let lines: Vec<Vec<&str>> = AG_LINES
        .iter()
        .zip(at_infinity)
        .map(|(l, p)| vec![l[0], l[1], l[2], p])
        .chain(std::iter::once(vec!["a", "b", "c", "d"]))
        .collect();
    let refs: Vec<&[&str]> = lines.iter().map(|l| &l[..]).collect();
    from_lines(&points, &refs).expect("PG(2,3)")
}

/// F7* with 1', 2', 7' in series with 1, 2, 7 and 4', 4'' in series with 4.
pub fn o1() -> Matroid {
    let mut m = fano_dual();
    for (e, f) in [("1", "1'"), ("2", "2'"), ("7", "7'"), ("4", "4'"), ("4", "4''")] {
        m = add_series(&m, e, f).expect("O1");
    }
    m
}

/// M*(K5) with 0', 2' in series with 0, 2.
pub fn o2() -> Matroid {
    let mut m = named("MstarK5").expect("M*(K5)");
    for (e, f) in [("0", "0'"), ("2", "2'")] {
        m = add_series(&m, e, f).expect("O2");
    }
    m
}
