//! Reversible cyclic orderings of circuits, consistency, and theta-orderings.

use std::collections::HashMap;

use crate::error::{input, Error, Result};
use crate::matroid::Matroid;
use crate::set::ElemSet;

/// A reversible cyclic ordering of one circuit, stored as the lexicographically least
/// sequence over all rotations and both directions (element indices of the host matroid).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclicOrdering {
    circuit: ElemSet,
    seq: Vec<usize>,
}

impl CyclicOrdering {
    /// Canonical representative of the cyclic ordering `seq`.
    pub fn canonicalize(seq: &[usize]) -> Result<CyclicOrdering> {
        let circuit = ElemSet::from_indices(seq.iter().copied());
        if circuit.len() != seq.len() {
            return input("ordering repeats an element");
        }
        if seq.is_empty() {
            return input("ordering of an empty set");
        }
        Ok(CyclicOrdering { circuit, seq: canonical_rotation(seq) })
    }

    pub fn from_ids<S: AsRef<str>>(m: &Matroid, ids: &[S]) -> Result<CyclicOrdering> {
        let seq = ids.iter().map(|s| m.index_of(s.as_ref())).collect::<Result<Vec<_>>>()?;
        CyclicOrdering::canonicalize(&seq)
    }

    pub fn circuit(&self) -> ElemSet {
        self.circuit
    }

    pub fn sequence(&self) -> &[usize] {
        &self.seq
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    /// Whether `e` and `f` are adjacent. In a 2-circuit the two elements are adjacent;
    /// a 1-circuit has no adjacent pairs.
    pub fn adjacent(&self, e: usize, f: usize) -> bool {
        if e == f || !self.circuit.contains(e) || !self.circuit.contains(f) {
            return false;
        }
        let n = self.seq.len();
        if n <= 3 {
            return n >= 2;
        }
        let i = self.seq.iter().position(|&x| x == e).unwrap();
        self.seq[(i + 1) % n] == f || self.seq[(i + n - 1) % n] == f
    }

    /// The neighbours of `e` inside this circuit.
    pub fn neighbours(&self, e: usize) -> ElemSet {
        self.circuit.without(e).iter().filter(|&f| self.adjacent(e, f)).fold(ElemSet::EMPTY, |s, f| s.with(f))
    }

    /// Whether `b` is a contiguous run of the cyclic ordering.
    pub fn is_block(&self, b: ElemSet) -> bool {
        if !b.is_subset(self.circuit) || b.is_empty() {
            return false;
        }
        if b == self.circuit {
            return true;
        }
        let n = self.seq.len();
        let exits = (0..n).filter(|&i| b.contains(self.seq[i]) && !b.contains(self.seq[(i + 1) % n])).count();
        exits == 1
    }

    pub fn to_text(&self, m: &Matroid) -> String {
        let ids: Vec<&str> = self.seq.iter().map(|&e| m.id(e)).collect();
        format!("({})", ids.join(" "))
    }

    /// The same ordering with indices translated through `map` (which must be injective
    /// on the circuit).
    pub fn mapped(&self, map: impl Fn(usize) -> usize) -> Result<CyclicOrdering> {
        let seq: Vec<usize> = self.seq.iter().map(|&e| map(e)).collect();
        CyclicOrdering::canonicalize(&seq)
    }
}

fn canonical_rotation(seq: &[usize]) -> Vec<usize> {
    let n = seq.len();
    if n <= 2 {
        let mut s = seq.to_vec();
        s.sort_unstable();
        return s;
    }
    let mut best: Option<Vec<usize>> = None;
    let rev: Vec<usize> = seq.iter().rev().copied().collect();
    for base in [seq, &rev[..]] {
        for r in 0..n {
            let cand: Vec<usize> = base[r..].iter().chain(base[..r].iter()).copied().collect();
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap()
}

/// One cyclic ordering per circuit of a matroid, indexed in the matroid's canonical
/// circuit order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderingAssignment {
    orderings: Vec<CyclicOrdering>,
}

impl OrderingAssignment {
    /// Assemble an assignment; every circuit of `m` must be ordered exactly once.
    pub fn new(m: &Matroid, mut orderings: Vec<CyclicOrdering>) -> Result<OrderingAssignment> {
        orderings.sort_by(|a, b| a.circuit.lex_cmp(b.circuit));
        for w in orderings.windows(2) {
            if w[0].circuit == w[1].circuit {
                return input(format!("circuit {} is ordered twice", set_text(m, w[0].circuit)));
            }
        }
        for o in &orderings {
            if !m.is_circuit(o.circuit) {
                return input(format!("{} is not a circuit", set_text(m, o.circuit)));
            }
        }
        if orderings.len() != m.circuits().len() {
            let missing = m
                .circuits()
                .iter()
                .find(|c| orderings.binary_search_by(|o| o.circuit.lex_cmp(**c)).is_err())
                .copied()
                .unwrap_or_default();
            return input(format!("no ordering given for circuit {}", set_text(m, missing)));
        }
        Ok(OrderingAssignment { orderings })
    }

    pub fn orderings(&self) -> &[CyclicOrdering] {
        &self.orderings
    }

    pub fn get(&self, circuit: ElemSet) -> Option<&CyclicOrdering> {
        self.orderings.binary_search_by(|o| o.circuit.lex_cmp(circuit)).ok().map(|i| &self.orderings[i])
    }

    /// One parenthesised line per circuit.
    pub fn to_lines(&self, m: &Matroid) -> Vec<String> {
        self.orderings.iter().map(|o| o.to_text(m)).collect()
    }

    /// Carry the assignment from `from` onto `to` by element id. Circuits of `to` must be
    /// circuits of `from` (as for restrictions and relabelled copies).
    pub fn transfer(&self, from: &Matroid, to: &Matroid) -> Result<OrderingAssignment> {
        let mut out = Vec::with_capacity(to.circuits().len());
        for &c in to.circuits() {
            let src = from.set_of(&to.ids(c))?;
            let o = self.get(src).ok_or_else(|| Error::Input(format!("no ordering for {}", set_text(to, c))))?;
            let ids: Vec<&str> = o.seq.iter().map(|&e| from.id(e)).collect();
            out.push(CyclicOrdering::from_ids(to, &ids)?);
        }
        OrderingAssignment::new(to, out)
    }
}

fn set_text(m: &Matroid, s: ElemSet) -> String {
    format!("{{{}}}", m.ids(s).join(","))
}

/// Parse the text format: one `(a b c ...)` line per circuit, blank lines ignored. A
/// line's circuit is the circuit with the same element set.
pub fn parse_assignment(m: &Matroid, text: &str) -> Result<OrderingAssignment> {
    let mut orderings = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let at = |msg: String| Error::Input(format!("line {}: {msg}", lineno + 1));
        let inner = line
            .strip_prefix('(')
            .and_then(|l| l.strip_suffix(')'))
            .ok_or_else(|| at("expected a parenthesised id sequence".into()))?;
        let ids: Vec<&str> = inner.split_whitespace().collect();
        let o = CyclicOrdering::from_ids(m, &ids).map_err(|e| at(e.to_string()))?;
        if !m.is_circuit(o.circuit) {
            return Err(at(format!("{} is not a circuit", set_text(m, o.circuit))));
        }
        orderings.push(o);
    }
    OrderingAssignment::new(m, orderings)
}

/// Adjacency status of a pair of elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairStatus {
    Adjacent,
    NonAdjacent,
    Undecided,
}

/// Adjacency of every pair of elements that share a circuit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjacencyRelation {
    cohabit: Vec<ElemSet>,
    adjacent: Vec<ElemSet>,
    decided: Vec<ElemSet>,
}

impl AdjacencyRelation {
    /// An all-undecided relation over the cohabiting pairs of `m`.
    pub fn undecided(m: &Matroid) -> AdjacencyRelation {
        let n = m.len();
        let mut cohabit = vec![ElemSet::EMPTY; n];
        for &c in m.circuits() {
            for e in c.iter() {
                cohabit[e] = cohabit[e].union(c.without(e));
            }
        }
        AdjacencyRelation { cohabit, adjacent: vec![ElemSet::EMPTY; n], decided: vec![ElemSet::EMPTY; n] }
    }

    /// The relation read off an assignment, taking each pair's status from the first circuit
    /// containing it.
    pub fn from_assignment(m: &Matroid, a: &OrderingAssignment) -> AdjacencyRelation {
        let mut rel = AdjacencyRelation::undecided(m);
        for o in a.orderings() {
            for e in o.circuit.iter() {
                for f in o.circuit.iter().filter(|&f| f > e) {
                    if !rel.decided[e].contains(f) {
                        rel.set(e, f, o.adjacent(e, f));
                    }
                }
            }
        }
        rel
    }

    pub fn set(&mut self, e: usize, f: usize, adjacent: bool) {
        self.decided[e] = self.decided[e].with(f);
        self.decided[f] = self.decided[f].with(e);
        if adjacent {
            self.adjacent[e] = self.adjacent[e].with(f);
            self.adjacent[f] = self.adjacent[f].with(e);
        }
    }

    /// `None` if `e` and `f` share no circuit.
    pub fn status(&self, e: usize, f: usize) -> Option<PairStatus> {
        if e == f || !self.cohabit[e].contains(f) {
            return None;
        }
        Some(if !self.decided[e].contains(f) {
            PairStatus::Undecided
        } else if self.adjacent[e].contains(f) {
            PairStatus::Adjacent
        } else {
            PairStatus::NonAdjacent
        })
    }

    pub fn adjacent_to(&self, e: usize) -> ElemSet {
        self.adjacent[e]
    }

    pub fn cohabitants(&self, e: usize) -> ElemSet {
        self.cohabit[e]
    }
}

/// A pair whose adjacency differs between two circuits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub pair: (usize, usize),
    pub first: ElemSet,
    pub second: ElemSet,
}

impl Violation {
    pub fn describe(&self, m: &Matroid) -> String {
        format!(
            "{} and {} are adjacent in exactly one of {} and {}",
            m.id(self.pair.0),
            m.id(self.pair.1),
            set_text(m, self.first),
            set_text(m, self.second)
        )
    }
}

/// Check that every pair has the same adjacency in all circuits containing it. Circuits are
/// scanned in canonical order and pairs lexicographically; the first disagreement with an
/// earlier circuit is reported.
pub fn verify_consistent(m: &Matroid, a: &OrderingAssignment) -> Result<Option<Violation>> {
    check_covers(m, a)?;
    let mut seen: HashMap<(usize, usize), (bool, ElemSet)> = HashMap::new();
    for o in a.orderings() {
        let c = o.circuit;
        for e in c.iter() {
            for f in c.iter().filter(|&f| f > e) {
                let adj = o.adjacent(e, f);
                match seen.get(&(e, f)) {
                    Some(&(prev, first)) if prev != adj => {
                        return Ok(Some(Violation { pair: (e, f), first, second: c }));
                    }
                    Some(_) => {}
                    None => {
                        seen.insert((e, f), (adj, c));
                    }
                }
            }
        }
    }
    Ok(None)
}

fn check_covers(m: &Matroid, a: &OrderingAssignment) -> Result<()> {
    if a.orderings().len() != m.circuits().len() {
        return input("assignment does not cover the circuit family");
    }
    for (o, &c) in a.orderings().iter().zip(m.circuits()) {
        if o.circuit != c {
            return input(format!("no ordering given for circuit {}", set_text(m, c)));
        }
    }
    Ok(())
}

/// The arcs of a theta-graph restriction, sorted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ThetaRestriction {
    pub arcs: [ElemSet; 3],
}

impl ThetaRestriction {
    pub fn new(mut arcs: [ElemSet; 3]) -> Self {
        arcs.sort_by(|a, b| a.lex_cmp(*b));
        ThetaRestriction { arcs }
    }

    pub fn ground(&self) -> ElemSet {
        self.arcs[0].union(self.arcs[1]).union(self.arcs[2])
    }

    /// The three circuits `Ai ∪ Aj` with the arcs they contain.
    pub fn circuits(&self) -> [(ElemSet, ElemSet, ElemSet); 3] {
        let [a, b, c] = self.arcs;
        [(a.union(b), a, b), (a.union(c), a, c), (b.union(c), b, c)]
    }
}

/// All theta-graph restrictions: pairs of meeting circuits whose union holds exactly three
/// circuits, the third being their symmetric difference.
pub fn theta_restrictions(m: &Matroid) -> Vec<ThetaRestriction> {
    let circuits = m.circuits();
    let mut out: Vec<ThetaRestriction> = Vec::new();
    for (i, &c1) in circuits.iter().enumerate() {
        for &c2 in &circuits[i + 1..] {
            if !c1.intersects(c2) {
                continue;
            }
            let u = c1.union(c2);
            let inside = circuits.iter().filter(|c| c.is_subset(u)).count();
            if inside != 3 || !m.is_circuit(c1.sym_diff(c2)) {
                continue;
            }
            let t = ThetaRestriction::new([c1.inter(c2), c1.minus(c2), c2.minus(c1)]);
            if !out.contains(&t) {
                out.push(t);
            }
        }
    }
    out.sort_by(|a, b| {
        a.arcs
            .iter()
            .zip(b.arcs.iter())
            .map(|(x, y)| x.lex_cmp(*y))
            .find(|o| o.is_ne())
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    out
}

/// Why an assignment fails to be a theta-ordering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ThetaViolation {
    Inconsistent(Violation),
    /// `arc` is not a block of the ordering of `circuit`.
    ArcNotBlock {
        theta: ThetaRestriction,
        circuit: ElemSet,
        arc: ElemSet,
    },
}

impl ThetaViolation {
    pub fn describe(&self, m: &Matroid) -> String {
        match self {
            ThetaViolation::Inconsistent(v) => v.describe(m),
            ThetaViolation::ArcNotBlock { circuit, arc, .. } => {
                format!("theta-arc {} is not a block of {}", set_text(m, *arc), set_text(m, *circuit))
            }
        }
    }
}

/// Consistency plus: every theta-arc is a block in both circuits of its theta-graph that
/// contain it.
pub fn verify_theta_ordering(m: &Matroid, a: &OrderingAssignment) -> Result<Option<ThetaViolation>> {
    if let Some(v) = verify_consistent(m, a)? {
        return Ok(Some(ThetaViolation::Inconsistent(v)));
    }
    for theta in theta_restrictions(m) {
        for (c, x, y) in theta.circuits() {
            let o = a.get(c).expect("covered");
            for arc in [x, y] {
                if !o.is_block(arc) {
                    return Ok(Some(ThetaViolation::ArcNotBlock { theta, circuit: c, arc }));
                }
            }
        }
    }
    Ok(None)
}
