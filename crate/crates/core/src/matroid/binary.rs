//! Dense GF(2) matrices with at most 64 columns; each row is a bitmask over columns.

use crate::set::{minimal_members, ElemSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryMatrix {
    cols: usize,
    rows: Vec<u64>,
}

impl BinaryMatrix {
    pub fn new(cols: usize, rows: Vec<u64>) -> Self {
        debug_assert!(cols <= 64);
        let mask = ElemSet::full(cols).0;
        BinaryMatrix { cols, rows: rows.into_iter().map(|r| r & mask).collect() }
    }

    /// Build from row-major 0/1 entries.
    pub fn from_rows(cols: usize, entries: &[Vec<u8>]) -> Self {
        let rows = entries
            .iter()
            .map(|r| r.iter().enumerate().fold(0u64, |acc, (j, &b)| if b & 1 == 1 { acc | 1 << j } else { acc }))
            .collect();
        BinaryMatrix::new(cols, rows)
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn column(&self, j: usize) -> u64 {
        self.rows.iter().enumerate().fold(0u64, |acc, (i, r)| acc | (r >> j & 1) << i)
    }

    /// Reduced row echelon form with zero rows dropped; returns (rows, pivot columns).
    pub fn rref(&self) -> (Vec<u64>, Vec<usize>) {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(p) = (r..rows.len()).find(|&i| rows[i] >> c & 1 == 1) else { continue };
            rows.swap(r, p);
            let pr = rows[r];
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && *row >> c & 1 == 1 {
                    *row ^= pr;
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        rows.truncate(r);
        (rows, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// GF(2) rank of the column subset `cols`.
    pub fn rank_of(&self, cols: ElemSet) -> usize {
        let restricted = BinaryMatrix::new(self.cols, self.rows.iter().map(|r| r & cols.0).collect());
        restricted.rank()
    }

    /// A basis of the null space (the cycle space of the represented matroid), as column masks.
    pub fn null_space_basis(&self) -> Vec<u64> {
        let (rows, pivots) = self.rref();
        let pivot_set = ElemSet::from_indices(pivots.iter().copied());
        let mut basis = Vec::new();
        for f in ElemSet::full(self.cols).minus(pivot_set).iter() {
            let mut v = 1u64 << f;
            for (row, &pc) in rows.iter().zip(&pivots) {
                if row >> f & 1 == 1 {
                    v |= 1 << pc;
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Matrix whose rows span the null space of `self`.
    pub fn dual(&self) -> BinaryMatrix {
        BinaryMatrix::new(self.cols, self.null_space_basis())
    }

    /// Minimal nonempty supports of null-space vectors: the circuits of the represented matroid.
    pub fn circuits(&self) -> Vec<ElemSet> {
        let basis = self.null_space_basis();
        let d = basis.len();
        assert!(d < 40, "null space too large to enumerate");
        let mut supports = Vec::with_capacity(1 << d);
        // Gray-code walk over the whole null space.
        let mut v = 0u64;
        for i in 1u64..(1u64 << d) {
            let bit = i.trailing_zeros() as usize;
            v ^= basis[bit];
            supports.push(ElemSet(v));
        }
        minimal_members(supports)
    }

    /// Keep only the columns listed in `keep`, renumbered in increasing order.
    pub fn select_columns(&self, keep: &[usize]) -> BinaryMatrix {
        let rows = self
            .rows
            .iter()
            .map(|r| keep.iter().enumerate().fold(0u64, |acc, (nj, &oj)| acc | (r >> oj & 1) << nj))
            .collect();
        BinaryMatrix::new(keep.len(), rows)
    }

    /// Contract column `c` (pivot it out); the column becomes zero.
    pub fn contract_column(&self, c: usize) -> BinaryMatrix {
        let mut rows = self.rows.clone();
        if let Some(p) = rows.iter().position(|r| r >> c & 1 == 1) {
            let pr = rows.remove(p);
            for row in rows.iter_mut() {
                if *row >> c & 1 == 1 {
                    *row ^= pr;
                }
            }
        }
        BinaryMatrix::new(self.cols, rows)
    }
}
