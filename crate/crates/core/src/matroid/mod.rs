//! Matroids represented by their circuit families, with an optional GF(2) representation.

pub mod binary;
pub mod ids;
pub mod iso;

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::sync::OnceLock;

use crate::error::{input, Error, Result};
use crate::set::{k_subsets, minimal_members, sort_family, ElemSet, MAX_ELEMENTS};

pub use binary::BinaryMatrix;
pub use ids::{natural_cmp, validate_id};

/// Default cap on ground-set size for operations that enumerate circuits.
pub const DEFAULT_GROUND_CAP: usize = 24;

/// Environment variable overriding [`DEFAULT_GROUND_CAP`].
pub const GROUND_CAP_ENV: &str = "ORDMAT_GROUND_CAP";

/// Ground sets at or below this size get the exhaustive circuit-elimination check.
pub const ELIMINATION_CHECK_LIMIT: usize = 16;

/// The configured ground-set cap (read once from the environment).
pub fn ground_cap() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var(GROUND_CAP_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .map(|c| c.clamp(1, MAX_ELEMENTS))
            .unwrap_or(DEFAULT_GROUND_CAP)
    })
}

pub(crate) fn check_cap(n: usize) -> Result<()> {
    let cap = ground_cap();
    if n > cap {
        return Err(Error::CapExceeded { size: n, cap });
    }
    Ok(())
}

/// A matroid on a labelled ground set, stored by its circuits.
///
/// The ground set is kept in natural id order and circuits are kept sorted
/// lexicographically, so two matroids are equal exactly when they have the same
/// ids and the same circuit family.
#[derive(Clone)]
pub struct Matroid {
    ground: Vec<String>,
    circuits: Vec<ElemSet>,
    binary_rep: Option<BinaryMatrix>,
    by_element: Vec<Vec<ElemSet>>,
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.ground == other.ground && self.circuits == other.circuits
    }
}

impl Eq for Matroid {}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let circuits: Vec<String> = self.circuits.iter().map(|c| format!("{{{}}}", self.ids(*c).join(","))).collect();
        f.debug_struct("Matroid")
            .field("ground", &self.ground)
            .field("circuits", &circuits)
            .field("binary", &self.binary_rep.is_some())
            .finish()
    }
}

/// A partition of the ground set into blocks (series or parallel classes).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassPartition {
    pub blocks: Vec<ElemSet>,
}

impl ClassPartition {
    pub fn block_of(&self, e: usize) -> ElemSet {
        self.blocks.iter().copied().find(|b| b.contains(e)).unwrap_or(ElemSet::singleton(e))
    }
}

pub type SeriesClassPartition = ClassPartition;

impl Matroid {
    /// Build a matroid from ids and circuits given as id lists, checking every circuit axiom.
    pub fn from_circuits<S: AsRef<str>>(ground: &[S], circuits: &[Vec<S>]) -> Result<Matroid> {
        let ground: Vec<String> = ground.iter().map(|s| s.as_ref().to_string()).collect();
        check_ids(&ground)?;
        check_cap(ground.len())?;
        let index: HashMap<&str, usize> = ground.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
        let mut sets = Vec::with_capacity(circuits.len());
        for (ci, c) in circuits.iter().enumerate() {
            let mut s = ElemSet::EMPTY;
            for id in c {
                let id = id.as_ref();
                let &i = index.get(id).ok_or_else(|| Error::UnknownElement(id.to_string()))?;
                if s.contains(i) {
                    return Err(Error::CircuitAxiom(format!("circuit #{ci} repeats element `{id}`")));
                }
                s = s.with(i);
            }
            sets.push(s);
        }
        let m = Matroid::from_sets(ground, sets);
        m.check_axioms()?;
        Ok(m)
    }

    /// Build the matroid represented over GF(2) by `matrix`, whose columns are labelled by `ground`.
    pub fn from_binary<S: AsRef<str>>(ground: &[S], matrix: BinaryMatrix) -> Result<Matroid> {
        let ground: Vec<String> = ground.iter().map(|s| s.as_ref().to_string()).collect();
        check_ids(&ground)?;
        check_cap(ground.len())?;
        if matrix.cols() != ground.len() {
            return input(format!("matrix has {} columns but {} column ids were given", matrix.cols(), ground.len()));
        }
        let circuits = matrix.circuits();
        Ok(Matroid::build(ground, circuits, Some(matrix)))
    }

    /// Trusted constructor: ids are valid and distinct, `circuits` satisfy the axioms.
    pub(crate) fn from_sets(ground: Vec<String>, circuits: Vec<ElemSet>) -> Matroid {
        Matroid::build(ground, circuits, None)
    }

    fn build(ground: Vec<String>, circuits: Vec<ElemSet>, rep: Option<BinaryMatrix>) -> Matroid {
        // Put the ground set into natural order and remap everything.
        let mut order: Vec<usize> = (0..ground.len()).collect();
        order.sort_by(|&a, &b| natural_cmp(&ground[a], &ground[b]));
        let mut new_pos = vec![0usize; ground.len()];
        for (new, &old) in order.iter().enumerate() {
            new_pos[old] = new;
        }
        let remap = |s: ElemSet| ElemSet::from_indices(s.iter().map(|i| new_pos[i]));
        let sorted_ground: Vec<String> = order.iter().map(|&i| ground[i].clone()).collect();
        let mut circuits: Vec<ElemSet> = circuits.into_iter().map(remap).collect();
        sort_family(&mut circuits);
        let rep = rep.map(|r| r.select_columns(&order));
        let mut by_element = vec![Vec::new(); sorted_ground.len()];
        for &c in &circuits {
            for e in c.iter() {
                by_element[e].push(c);
            }
        }
        Matroid { ground: sorted_ground, circuits, binary_rep: rep, by_element }
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    pub fn len(&self) -> usize {
        self.ground.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ground.is_empty()
    }

    pub fn full_set(&self) -> ElemSet {
        ElemSet::full(self.ground.len())
    }

    /// Circuits in canonical order.
    pub fn circuits(&self) -> &[ElemSet] {
        &self.circuits
    }

    /// Circuits containing element `e`.
    pub fn circuits_with(&self, e: usize) -> &[ElemSet] {
        &self.by_element[e]
    }

    pub fn binary_rep(&self) -> Option<&BinaryMatrix> {
        self.binary_rep.as_ref()
    }

    pub fn is_circuit(&self, s: ElemSet) -> bool {
        match s.first() {
            Some(e) => self.by_element[e].contains(&s),
            None => false,
        }
    }

    pub fn id(&self, e: usize) -> &str {
        &self.ground[e]
    }

    pub fn index_of(&self, id: &str) -> Result<usize> {
        self.ground
            .binary_search_by(|g| natural_cmp(g, id))
            .ok()
            .filter(|&i| self.ground[i] == id)
            .or_else(|| self.ground.iter().position(|g| g == id))
            .ok_or_else(|| Error::UnknownElement(id.to_string()))
    }

    pub fn set_of<S: AsRef<str>>(&self, ids: &[S]) -> Result<ElemSet> {
        ids.iter().try_fold(ElemSet::EMPTY, |s, id| Ok(s.with(self.index_of(id.as_ref())?)))
    }

    pub fn ids(&self, s: ElemSet) -> Vec<&str> {
        s.iter().map(|i| self.ground[i].as_str()).collect()
    }

    pub fn circuit_ids(&self) -> Vec<Vec<&str>> {
        self.circuits.iter().map(|c| self.ids(*c)).collect()
    }

    /// Rank of `x`: the size of a largest subset of `x` containing no circuit.
    pub fn rank(&self, x: ElemSet) -> usize {
        let mut ind = ElemSet::EMPTY;
        for e in x.iter() {
            let t = ind.with(e);
            if !self.by_element[e].iter().any(|c| c.is_subset(t)) {
                ind = t;
            }
        }
        ind.len()
    }

    pub fn rank_of_ids<S: AsRef<str>>(&self, ids: &[S]) -> Result<usize> {
        Ok(self.rank(self.set_of(ids)?))
    }

    pub fn full_rank(&self) -> usize {
        self.rank(self.full_set())
    }

    pub fn is_independent(&self, x: ElemSet) -> bool {
        !self.circuits.iter().any(|c| c.is_subset(x))
    }

    pub fn closure(&self, x: ElemSet) -> ElemSet {
        let r = self.rank(x);
        self.full_set().minus(x).iter().filter(|&e| self.rank(x.with(e)) == r).fold(x, |s, e| s.with(e))
    }

    pub fn loops(&self) -> ElemSet {
        self.circuits.iter().filter(|c| c.len() == 1).fold(ElemSet::EMPTY, |s, c| s.union(*c))
    }

    pub fn coloops(&self) -> ElemSet {
        (0..self.len()).filter(|&e| self.by_element[e].is_empty()).fold(ElemSet::EMPTY, |s, e| s.with(e))
    }

    /// Check incomparability (always) and circuit elimination (for small ground sets).
    pub fn check_axioms(&self) -> Result<()> {
        for (i, c) in self.circuits.iter().enumerate() {
            if c.is_empty() {
                return Err(Error::CircuitAxiom("empty circuit".into()));
            }
            for d in &self.circuits[i + 1..] {
                if c.is_subset(*d) || d.is_subset(*c) {
                    return Err(Error::CircuitAxiom(format!(
                        "circuit {{{}}} and circuit {{{}}} are comparable",
                        self.ids(*c).join(","),
                        self.ids(*d).join(",")
                    )));
                }
            }
        }
        if self.len() <= ELIMINATION_CHECK_LIMIT {
            self.check_elimination()?;
        }
        Ok(())
    }

    fn check_elimination(&self) -> Result<()> {
        for (i, &c1) in self.circuits.iter().enumerate() {
            for &c2 in &self.circuits[i + 1..] {
                let common = c1.inter(c2);
                let u = c1.union(c2);
                for e in common.iter() {
                    let target = u.without(e);
                    if !self.circuits.iter().any(|c| c.is_subset(target)) {
                        return Err(Error::CircuitAxiom(format!(
                            "elimination fails for {{{}}}, {{{}}} at `{}`",
                            self.ids(c1).join(","),
                            self.ids(c2).join(","),
                            self.id(e)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// The minor `M \ delete / contract`.
    pub fn minor(&self, delete: ElemSet, contract: ElemSet) -> Result<Matroid> {
        if delete.intersects(contract) {
            return input("deletion and contraction sets overlap");
        }
        if !delete.union(contract).is_subset(self.full_set()) {
            return input("minor sets are not inside the ground set");
        }
        let kept: Vec<usize> = self.full_set().minus(delete).minus(contract).to_vec();
        let mut pos = vec![usize::MAX; self.len()];
        for (n, &o) in kept.iter().enumerate() {
            pos[o] = n;
        }
        let reduced: Vec<ElemSet> =
            self.circuits.iter().filter(|c| !c.intersects(delete)).map(|c| c.minus(contract)).collect();
        let circuits: Vec<ElemSet> =
            minimal_members(reduced).into_iter().map(|c| ElemSet::from_indices(c.iter().map(|i| pos[i]))).collect();
        let rep = self.binary_rep.as_ref().map(|r| {
            let r = contract.iter().fold(r.clone(), |acc, c| acc.contract_column(c));
            r.select_columns(&kept)
        });
        let ground = kept.iter().map(|&i| self.ground[i].clone()).collect();
        Ok(Matroid::build(ground, circuits, rep))
    }

    pub fn minor_ids<S: AsRef<str>>(&self, delete: &[S], contract: &[S]) -> Result<Matroid> {
        self.minor(self.set_of(delete)?, self.set_of(contract)?)
    }

    pub fn delete(&self, x: ElemSet) -> Matroid {
        self.minor(x, ElemSet::EMPTY).expect("deletion inside ground set")
    }

    pub fn contract(&self, x: ElemSet) -> Matroid {
        self.minor(ElemSet::EMPTY, x).expect("contraction inside ground set")
    }

    pub fn restrict(&self, x: ElemSet) -> Matroid {
        self.delete(self.full_set().minus(x))
    }

    /// The dual matroid: its circuits are the cocircuits of `self`.
    pub fn dual(&self) -> Matroid {
        if let Some(rep) = &self.binary_rep {
            let d = rep.dual();
            let circuits = d.circuits();
            return Matroid::build(self.ground.clone(), circuits, Some(d));
        }
        let n = self.len();
        let full = self.full_set();
        let r = self.full_rank();
        let corank = n - r;
        let circuits = circuits_by_dependence(n, corank + 1, |d| self.rank(full.minus(d)) < r);
        Matroid::build(self.ground.clone(), circuits, None)
    }

    /// Minimal dependent sets recomputed from the representation (binary matrix when
    /// present, otherwise the rank oracle).
    pub fn enumerate_circuits(&self) -> Result<Vec<ElemSet>> {
        check_cap(self.len())?;
        if let Some(rep) = &self.binary_rep {
            return Ok(rep.circuits());
        }
        let r = self.full_rank();
        Ok(circuits_by_dependence(self.len(), r + 1, |s| self.rank(s) < s.len()))
    }

    /// Series classes: blocks of elements such that every circuit containing one contains all.
    /// Coloops form singleton blocks.
    pub fn series_classes(&self) -> ClassPartition {
        let mut groups: BTreeMap<Vec<usize>, ElemSet> = BTreeMap::new();
        let mut blocks = Vec::new();
        for e in 0..self.len() {
            if self.by_element[e].is_empty() {
                blocks.push(ElemSet::singleton(e));
                continue;
            }
            let sig: Vec<usize> =
                self.circuits.iter().enumerate().filter(|(_, c)| c.contains(e)).map(|(i, _)| i).collect();
            let slot = groups.entry(sig).or_default();
            *slot = slot.with(e);
        }
        blocks.extend(groups.into_values());
        blocks.sort_by(|a, b| a.lex_cmp(*b));
        ClassPartition { blocks }
    }

    /// Parallel classes: non-loop elements grouped by forming 2-circuits; loops are singletons.
    pub fn parallel_classes(&self) -> ClassPartition {
        let loops = self.loops();
        let mut seen = ElemSet::EMPTY;
        let mut blocks = Vec::new();
        for e in 0..self.len() {
            if seen.contains(e) {
                continue;
            }
            let mut b = ElemSet::singleton(e);
            if !loops.contains(e) {
                for c in &self.by_element[e] {
                    if c.len() == 2 {
                        b = b.union(*c);
                    }
                }
            }
            seen = seen.union(b);
            blocks.push(b);
        }
        blocks.sort_by(|a, b| a.lex_cmp(*b));
        ClassPartition { blocks }
    }

    /// Connected components as element sets, in order of least element.
    pub fn components(&self) -> Vec<ElemSet> {
        let n = self.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nx = p[y];
                p[y] = r;
                y = nx;
            }
            r
        }
        for c in &self.circuits {
            let mut it = c.iter();
            if let Some(a) = it.next() {
                for b in it {
                    let ra = find(&mut parent, a);
                    let rb = find(&mut parent, b);
                    if ra != rb {
                        parent[rb] = ra;
                    }
                }
            }
        }
        let mut comps: BTreeMap<usize, ElemSet> = BTreeMap::new();
        for e in 0..n {
            let r = find(&mut parent, e);
            let slot = comps.entry(r).or_default();
            *slot = slot.with(e);
        }
        let mut out: Vec<ElemSet> = comps.into_values().collect();
        out.sort_by_key(|c| c.first());
        out
    }

    /// True iff every pair of elements lies in a common circuit.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// True iff the matroid is representable over GF(2).
    ///
    /// Uses the criterion that the symmetric difference of any two distinct circuits is a
    /// disjoint union of circuits. When a GF(2) matrix is attached this is `true` by
    /// construction; debug builds cross-check it.
    pub fn is_binary(&self) -> bool {
        if self.binary_rep.is_some() {
            debug_assert!(self.len() > 14 || self.is_binary_by_circuits());
            return true;
        }
        self.is_binary_by_circuits()
    }

    fn is_binary_by_circuits(&self) -> bool {
        let mut memo: HashMap<u64, bool> = HashMap::new();
        for (i, &c1) in self.circuits.iter().enumerate() {
            for &c2 in &self.circuits[i + 1..] {
                if !self.is_disjoint_circuit_union(c1.sym_diff(c2), &mut memo) {
                    return false;
                }
            }
        }
        true
    }

    fn is_disjoint_circuit_union(&self, x: ElemSet, memo: &mut HashMap<u64, bool>) -> bool {
        let Some(e) = x.first() else { return true };
        if let Some(&v) = memo.get(&x.0) {
            return v;
        }
        let mut ok = false;
        for &c in &self.by_element[e] {
            if c.is_subset(x) && self.is_disjoint_circuit_union(x.minus(c), memo) {
                ok = true;
                break;
            }
        }
        memo.insert(x.0, ok);
        ok
    }

    /// Rename elements; `rename` maps old ids to new ids (ids not in the map are kept).
    pub fn relabel(&self, rename: &HashMap<String, String>) -> Result<Matroid> {
        let ground: Vec<String> =
            self.ground.iter().map(|g| rename.get(g).cloned().unwrap_or_else(|| g.clone())).collect();
        check_ids(&ground)?;
        Ok(Matroid::build(ground, self.circuits.clone(), self.binary_rep.clone()))
    }

    /// Simplification: delete loops and all but the least element of each parallel class.
    pub fn simplification(&self) -> Matroid {
        let mut drop = self.loops();
        for b in self.parallel_classes().blocks {
            if let Some(f) = b.first() {
                drop = drop.union(b.without(f));
            }
        }
        self.delete(drop)
    }

    /// Cosimplification: delete coloops and contract all but the least element of each
    /// series class.
    pub fn cosimplification(&self) -> Matroid {
        let coloops = self.coloops();
        let mut contract = ElemSet::EMPTY;
        for b in self.series_classes().blocks {
            if b.intersects(coloops) {
                continue;
            }
            if let Some(f) = b.first() {
                contract = contract.union(b.without(f));
            }
        }
        self.minor(coloops, contract).expect("disjoint minor sets")
    }

    pub fn is_simple(&self) -> bool {
        !self.circuits.iter().any(|c| c.len() <= 2)
    }

    /// Rank-2 simple connected on at least `min_n` elements, i.e. isomorphic to U(2,n).
    pub fn is_u2n(&self, min_n: usize) -> bool {
        self.len() >= min_n && self.full_rank() == 2 && self.is_simple() && self.coloops().is_empty()
    }
}

pub(crate) fn check_ids(ground: &[String]) -> Result<()> {
    let mut seen = HashSet::new();
    for g in ground {
        validate_id(g)?;
        if !seen.insert(g.as_str()) {
            return Err(Error::DuplicateElement(g.clone()));
        }
    }
    Ok(())
}

/// Minimal sets (of size at most `max_size`) for which `dependent` holds, found by a
/// size-ordered subset search that skips supersets of sets already found.
pub(crate) fn circuits_by_dependence(n: usize, max_size: usize, dependent: impl Fn(ElemSet) -> bool) -> Vec<ElemSet> {
    let mut found: Vec<ElemSet> = Vec::new();
    for k in 1..=max_size.min(n) {
        let before = found.len();
        for s in k_subsets(n, k) {
            if found[..before].iter().any(|c| c.is_subset(s)) {
                continue;
            }
            if dependent(s) {
                found.push(s);
            }
        }
    }
    sort_family(&mut found);
    found
}
