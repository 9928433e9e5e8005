//! Circuit-pattern obstructions to consistent orderings.
//!
//! A matroid has the (e,f,g)-property when some circuit contains {e,f,g}, the three are
//! distinct, and some circuit D of size at least 3 through f avoiding e and g has, for all but at most one
//! d in D, a circuit containing {e,f,g,d}. Then f cannot be adjacent to both e and g.
//! If a circuit C has an element c with the (e,c,g)-property for every pair in C - c,
//! c has no possible neighbours in C and the matroid is not orderable.
//!
//! The series variant requires S_f to differ from S_e and S_g, lets e = g, only asks that
//! D not contain both e and g, and needs a witness for every d in D. It rules out every
//! series extension.

use crate::matroid::Matroid;
use crate::set::ElemSet;

/// Certificate for one pair {e, g} of C - c.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairCertificate {
    pub e: usize,
    pub g: usize,
    /// A circuit containing {e, c, g}.
    pub through: ElemSet,
    /// The circuit D through the pivot.
    pub d: ElemSet,
    /// The one element of D without a witness (plain variant only).
    pub exception: Option<usize>,
    /// For each other d in D, a circuit containing {e, c, g, d}.
    pub witnesses: Vec<(usize, ElemSet)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EfgObstruction {
    pub circuit: ElemSet,
    pub pivot: usize,
    pub pairs: Vec<PairCertificate>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesEfgObstruction {
    pub circuit: ElemSet,
    pub pivot: usize,
    pub pairs: Vec<PairCertificate>,
}

/// Candidate (circuit, pivot) pairs: pivots in element order, then circuits through the
/// pivot by the sum of their element positions, then lexicographically.
fn candidates(m: &Matroid, min_size: usize) -> Vec<(ElemSet, usize)> {
    let mut out = Vec::new();
    for c in 0..m.len() {
        let mut through: Vec<ElemSet> = m.circuits_with(c).iter().copied().filter(|x| x.len() >= min_size).collect();
        through.sort_by(|a, b| {
            let sa: usize = a.iter().sum();
            let sb: usize = b.iter().sum();
            sa.cmp(&sb).then(a.lex_cmp(*b))
        });
        out.extend(through.into_iter().map(|x| (x, c)));
    }
    out
}

fn first_circuit_containing(m: &Matroid, s: ElemSet) -> Option<ElemSet> {
    let e = s.first()?;
    m.circuits_with(e).iter().copied().find(|c| s.is_subset(*c))
}

fn pair_certificate(
    m: &Matroid,
    circuit: ElemSet,
    c: usize,
    e: usize,
    g: usize,
    series: bool,
) -> Option<PairCertificate> {
    let eg = ElemSet::singleton(e).with(g);
    let core = eg.with(c);
    for &d in m.circuits_with(c) {
        // f needs two neighbours in D for the plain variant.
        let allowed = if series { !eg.is_subset(d) } else { !d.intersects(eg) && d.len() >= 3 };
        if !allowed {
            continue;
        }
        let mut witnesses = Vec::new();
        let mut missing = Vec::new();
        for x in d.iter() {
            let w = if core.contains(x) { Some(circuit) } else { first_circuit_containing(m, core.with(x)) };
            match w {
                Some(w) => witnesses.push((x, w)),
                None => missing.push(x),
            }
            if missing.len() > usize::from(!series) {
                break;
            }
        }
        if missing.len() <= usize::from(!series) {
            return Some(PairCertificate { e, g, through: circuit, d, exception: missing.first().copied(), witnesses });
        }
    }
    None
}

fn pairs_of(circuit: ElemSet, c: usize, with_equal: bool) -> Vec<(usize, usize)> {
    let rest = circuit.without(c).to_vec();
    let mut out = Vec::new();
    for (i, &e) in rest.iter().enumerate() {
        let from = if with_equal { i } else { i + 1 };
        for &g in &rest[from..] {
            out.push((e, g));
        }
    }
    out
}

/// The first circuit and pivot for which every pair has the (e,c,g)-property.
pub fn efg_obstruction(m: &Matroid) -> Option<EfgObstruction> {
    for (circuit, c) in candidates(m, 3) {
        let pairs: Option<Vec<PairCertificate>> = pairs_of(circuit, c, false)
            .into_iter()
            .map(|(e, g)| pair_certificate(m, circuit, c, e, g, false))
            .collect();
        if let Some(pairs) = pairs {
            return Some(EfgObstruction { circuit, pivot: c, pairs });
        }
    }
    None
}

/// The first circuit and pivot for which every pair (including e = g) has the series
/// (e,c,g)-property.
pub fn series_efg_obstruction(m: &Matroid) -> Option<SeriesEfgObstruction> {
    let classes = m.series_classes();
    for (circuit, c) in candidates(m, 2) {
        let sc = classes.block_of(c);
        if circuit.without(c).intersects(sc) {
            continue;
        }
        let pairs: Option<Vec<PairCertificate>> =
            pairs_of(circuit, c, true).into_iter().map(|(e, g)| pair_certificate(m, circuit, c, e, g, true)).collect();
        if let Some(pairs) = pairs {
            return Some(SeriesEfgObstruction { circuit, pivot: c, pairs });
        }
    }
    None
}

fn check_common(
    m: &Matroid,
    circuit: ElemSet,
    c: usize,
    pairs: &[PairCertificate],
    series: bool,
) -> Result<(), String> {
    if !m.is_circuit(circuit) {
        return Err("cited set C is not a circuit".into());
    }
    if !circuit.contains(c) {
        return Err("pivot is not in C".into());
    }
    let mut want = pairs_of(circuit, c, series);
    let mut got: Vec<(usize, usize)> = pairs.iter().map(|p| (p.e.min(p.g), p.e.max(p.g))).collect();
    want.sort();
    got.sort();
    if want != got {
        return Err("pair certificates do not cover C - c exactly".into());
    }
    for p in pairs {
        let eg = ElemSet::singleton(p.e).with(p.g);
        let core = eg.with(c);
        if !m.is_circuit(p.through) || !core.is_subset(p.through) {
            return Err(format!("no valid circuit through {{e,c,g}} for pair ({},{})", p.e, p.g));
        }
        if !m.is_circuit(p.d) || !p.d.contains(c) {
            return Err("D is not a circuit through the pivot".into());
        }
        if series && eg.is_subset(p.d) {
            return Err("D contains {e,g}".into());
        }
        if !series && p.d.intersects(eg) {
            return Err("D meets {e,g}".into());
        }
        if !series && p.d.len() < 3 {
            return Err("D has fewer than three elements".into());
        }
        let mut covered = ElemSet::EMPTY;
        for &(x, w) in &p.witnesses {
            if !p.d.contains(x) || !m.is_circuit(w) || !core.with(x).is_subset(w) {
                return Err(format!("bad witness for d = {x}"));
            }
            covered = covered.with(x);
        }
        let uncovered = p.d.minus(covered);
        match (series, p.exception) {
            (true, _) if !uncovered.is_empty() => return Err("series variant needs a witness for every d".into()),
            (false, Some(x)) if uncovered.minus(ElemSet::singleton(x)).is_empty() && p.d.contains(x) => {}
            (false, None) if uncovered.is_empty() => {}
            (true, _) => {}
            _ => return Err("more than one d lacks a witness".into()),
        }
    }
    Ok(())
}

/// Re-check every hypothesis of an (e,f,g) obstruction against `m`.
pub fn check_efg(m: &Matroid, o: &EfgObstruction) -> Result<(), String> {
    if o.pairs.iter().any(|p| p.e == p.g || p.e == o.pivot || p.g == o.pivot) {
        return Err("e, c, g must be distinct".into());
    }
    check_common(m, o.circuit, o.pivot, &o.pairs, false)
}

/// Re-check every hypothesis of a series (e,f,g) obstruction against `m`.
pub fn check_series_efg(m: &Matroid, o: &SeriesEfgObstruction) -> Result<(), String> {
    let classes = m.series_classes();
    let sc = classes.block_of(o.pivot);
    if o.circuit.without(o.pivot).intersects(sc) {
        return Err("S_c meets C - c".into());
    }
    check_common(m, o.circuit, o.pivot, &o.pairs, true)
}
