//! Element subsets as 64-bit masks over ground-set indices.

use std::cmp::Ordering;
use std::fmt;

/// Hard upper bound on ground-set size imposed by the mask width.
pub const MAX_ELEMENTS: usize = 64;

/// A subset of a ground set, stored as a bitmask over element indices.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct ElemSet(pub u64);

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet(0);

    #[inline]
    pub fn singleton(i: usize) -> Self {
        ElemSet(1u64 << i)
    }

    /// The set `{0, 1, ..., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            ElemSet(u64::MAX)
        } else {
            ElemSet((1u64 << n) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        it.into_iter().fold(ElemSet::EMPTY, |s, i| s.with(i))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    #[inline]
    pub fn with(self, i: usize) -> Self {
        ElemSet(self.0 | 1u64 << i)
    }

    #[inline]
    pub fn without(self, i: usize) -> Self {
        ElemSet(self.0 & !(1u64 << i))
    }

    #[inline]
    pub fn union(self, o: Self) -> Self {
        ElemSet(self.0 | o.0)
    }

    #[inline]
    pub fn inter(self, o: Self) -> Self {
        ElemSet(self.0 & o.0)
    }

    #[inline]
    pub fn minus(self, o: Self) -> Self {
        ElemSet(self.0 & !o.0)
    }

    #[inline]
    pub fn sym_diff(self, o: Self) -> Self {
        ElemSet(self.0 ^ o.0)
    }

    #[inline]
    pub fn is_subset(self, o: Self) -> bool {
        self.0 & !o.0 == 0
    }

    #[inline]
    pub fn intersects(self, o: Self) -> bool {
        self.0 & o.0 != 0
    }

    #[inline]
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Lexicographic comparison of the two sets viewed as increasing index sequences.
    pub fn lex_cmp(self, other: Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let d = diff.trailing_zeros();
        let (has, lacks) = if self.0 >> d & 1 == 1 { (self, other) } else { (other, self) };
        // `has` continues with d; `lacks` continues with something larger, or stops.
        let has_is_smaller = (lacks.0 >> d) != 0;
        let self_is_has = has == self;
        match (has_is_smaller, self_is_has) {
            (true, true) | (false, false) => Ordering::Less,
            _ => Ordering::Greater,
        }
    }

    /// All subsets of `self`, including the empty set and `self`.
    pub fn subsets(self) -> Subsets {
        Subsets { mask: self.0, cur: 0, done: false }
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;
    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

pub struct Subsets {
    mask: u64,
    cur: u64,
    done: bool,
}

impl Iterator for Subsets {
    type Item = ElemSet;
    fn next(&mut self) -> Option<ElemSet> {
        if self.done {
            return None;
        }
        let out = ElemSet(self.cur);
        if self.cur == self.mask {
            self.done = true;
        } else {
            self.cur = (self.cur.wrapping_sub(self.mask)) & self.mask;
        }
        Some(out)
    }
}

/// All `k`-element subsets of `{0..n}`, in increasing numeric order of their masks.
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = ElemSet> {
    let limit: u128 = 1u128 << n;
    let mut cur: u128 = if k == 0 { 0 } else { (1u128 << k) - 1 };
    let mut done = k > n;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = ElemSet(cur as u64);
        if k == 0 {
            done = true;
        } else {
            // Gosper's hack
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            cur = (((r ^ cur) >> 2) / c) | r;
            if cur >= limit {
                done = true;
            }
        }
        Some(out)
    })
}

/// Sort a family of sets into canonical (lexicographic) order and drop duplicates.
pub fn sort_family(family: &mut Vec<ElemSet>) {
    family.sort_by(|a, b| a.lex_cmp(*b));
    family.dedup();
}

/// Keep only the inclusion-minimal nonempty members of a family.
pub fn minimal_members(mut family: Vec<ElemSet>) -> Vec<ElemSet> {
    family.retain(|s| !s.is_empty());
    family.sort_by_key(|s| (s.len(), s.0));
    family.dedup();
    let mut out: Vec<ElemSet> = Vec::with_capacity(family.len());
    for s in family {
        if !out.iter().any(|m| m.is_subset(s)) {
            out.push(s);
        }
    }
    sort_family(&mut out);
    out
}
