//! Packed GF(2) vectors and incremental Gaussian elimination.
//!
//! Everything here works on column lists: a matrix is a slice of [`BitVec`]
//! columns of equal length. Elimination uses the lowest set bit of each
//! reduced vector as its pivot.

use std::collections::HashMap;
use std::fmt;

const WORD: usize = 64;

/// A fixed-length vector over GF(2), packed 64 entries per word.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        Self { len, words: vec![0; len.div_ceil(WORD)] }
    }

    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(index, true);
        v
    }

    pub fn from_ones<I: IntoIterator<Item = usize>>(len: usize, ones: I) -> Self {
        let mut v = Self::zeros(len);
        for i in ones {
            v.flip(i);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "length mismatch in xor");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Inner product over GF(2).
    pub fn dot(&self, other: &BitVec) -> bool {
        assert_eq!(self.len, other.len, "length mismatch in dot");
        let parity: u32 = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum();
        parity % 2 == 1
    }

    pub fn lowest_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * WORD + b)
            })
        })
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (0..self.len).map(|i| if self.get(i) { '1' } else { '0' }).collect();
        write!(f, "BitVec[{s}]")
    }
}

/// Row-echelon basis of a subspace, built one vector at a time.
///
/// Each stored vector carries a `combo` recording which inserted inputs it is
/// the sum of, so membership queries can return an explicit combination.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    dim: usize,
    inputs: usize,
    rows: Vec<(BitVec, BitVec)>,
    pivots: HashMap<usize, usize>,
    tracked_len: usize,
}

impl EchelonBasis {
    /// `tracked_len` bounds how many inputs will be inserted.
    pub fn new(dim: usize, tracked_len: usize) -> Self {
        Self { dim, inputs: 0, rows: Vec::new(), pivots: HashMap::new(), tracked_len }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Reduces `v`, returning the residual and the combination of inserted
    /// inputs that was added to it.
    pub fn reduce(&self, v: &BitVec) -> (BitVec, BitVec) {
        let mut residual = v.clone();
        let mut combo = BitVec::zeros(self.tracked_len);
        // Stored rows are fully reduced: each carries exactly one pivot bit.
        loop {
            let Some(p) = first_pivot_hit(&residual, &self.pivots) else { break };
            let (row, rc) = &self.rows[self.pivots[&p]];
            residual.xor_assign(row);
            combo.xor_assign(rc);
        }
        (residual, combo)
    }

    /// Inserts the next input vector. Returns `Some(combo)` when the input
    /// is dependent; `combo` then lists inputs (including this one) summing to 0.
    pub fn insert(&mut self, v: &BitVec) -> Option<BitVec> {
        assert_eq!(v.len(), self.dim, "dimension mismatch");
        assert!(self.inputs < self.tracked_len, "tracking capacity exceeded");
        let idx = self.inputs;
        self.inputs += 1;
        let (residual, mut combo) = self.reduce(v);
        combo.flip(idx);
        match residual.lowest_one() {
            None => Some(combo),
            Some(p) => {
                // Keep the basis fully reduced at the new pivot.
                for (row, rc) in self.rows.iter_mut() {
                    if row.get(p) {
                        row.xor_assign(&residual);
                        rc.xor_assign(&combo);
                    }
                }
                self.pivots.insert(p, self.rows.len());
                self.rows.push((residual, combo));
                None
            }
        }
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v).0.is_zero()
    }
}

fn first_pivot_hit(v: &BitVec, pivots: &HashMap<usize, usize>) -> Option<usize> {
    v.iter_ones().find(|i| pivots.contains_key(i))
}

/// Rank of the matrix whose columns are `cols`.
pub fn rank(dim: usize, cols: &[BitVec]) -> usize {
    let mut basis = EchelonBasis::new(dim, cols.len());
    for c in cols {
        basis.insert(c);
    }
    basis.rank()
}

/// Basis of `{x : Σ x_j cols_j = 0}`.
pub fn nullspace(dim: usize, cols: &[BitVec]) -> Vec<BitVec> {
    let mut basis = EchelonBasis::new(dim, cols.len());
    cols.iter().filter_map(|c| basis.insert(c)).collect()
}

/// Outcome of solving `A x = b` over GF(2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    /// `x` with `A x = b`.
    Solved(BitVec),
    /// `y` with `yᵀA = 0` and `y·b = 1`.
    Obstructed(BitVec),
}

/// Solves `A x = b` where `A` has the given columns of length `dim`.
pub fn solve(dim: usize, cols: &[BitVec], b: &BitVec) -> Solution {
    let mut basis = EchelonBasis::new(dim, cols.len());
    for c in cols {
        basis.insert(c);
    }
    let (residual, combo) = basis.reduce(b);
    if residual.is_zero() {
        return Solution::Solved(combo);
    }
    // Rows of [A | b]; the obstruction is a combination of them equal to e_last.
    let width = cols.len() + 1;
    let mut rows = EchelonBasis::new(width, dim);
    for i in 0..dim {
        let mut row = BitVec::zeros(width);
        for (j, c) in cols.iter().enumerate() {
            if c.get(i) {
                row.set(j, true);
            }
        }
        row.set(cols.len(), b.get(i));
        rows.insert(&row);
    }
    let (res, y) = rows.reduce(&BitVec::unit(width, cols.len()));
    debug_assert!(res.is_zero(), "b outside the column space must give e_last in the row space");
    Solution::Obstructed(y)
}

/// Computes `A x` for the column list `cols`.
pub fn apply(dim: usize, cols: &[BitVec], x: &BitVec) -> BitVec {
    let mut out = BitVec::zeros(dim);
    for j in x.iter_ones() {
        out.xor_assign(&cols[j]);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn dense_rank(mut m: Vec<Vec<bool>>) -> usize {
        let rows = m.len();
        let cols = if rows == 0 { 0 } else { m[0].len() };
        let mut r = 0;
        for c in 0..cols {
            if let Some(p) = (r..rows).find(|&i| m[i][c]) {
                m.swap(r, p);
                for i in 0..rows {
                    if i != r && m[i][c] {
                        for k in 0..cols {
                            let v = m[r][k];
                            m[i][k] ^= v;
                        }
                    }
                }
                r += 1;
            }
        }
        r
    }

    #[test]
    fn bit_ops() {
        let mut v = BitVec::zeros(130);
        v.set(0, true);
        v.set(64, true);
        v.set(129, true);
        assert_eq!(v.iter_ones().collect::<Vec<_>>(), vec![0, 64, 129]);
        assert_eq!(v.count_ones(), 3);
        assert_eq!(v.lowest_one(), Some(0));
        let w = BitVec::from_ones(130, [64, 100]);
        assert!(v.dot(&w));
        v.xor_assign(&w);
        assert_eq!(v.iter_ones().collect::<Vec<_>>(), vec![0, 100, 129]);
    }

    #[test]
    fn identity_rank_and_empty_kernel() {
        let cols: Vec<_> = (0..5).map(|i| BitVec::unit(5, i)).collect();
        assert_eq!(rank(5, &cols), 5);
        assert!(nullspace(5, &cols).is_empty());
    }

    #[test]
    fn obstruction_certificate() {
        // Columns span {e0+e1}; b = e0 is not reachable.
        let cols = vec![BitVec::from_ones(2, [0, 1])];
        let b = BitVec::unit(2, 0);
        match solve(2, &cols, &b) {
            Solution::Obstructed(y) => {
                assert!(!y.dot(&cols[0]));
                assert!(y.dot(&b));
            }
            other => panic!("expected obstruction, got {other:?}"),
        }
    }

    proptest! {
        #[test]
        fn rank_matches_dense(bits in proptest::collection::vec(any::<bool>(), 0..80), rows in 1usize..9) {
            let ncols = bits.len() / rows;
            let cols: Vec<BitVec> = (0..ncols)
                .map(|j| BitVec::from_ones(rows, (0..rows).filter(|&i| bits[j * rows + i])))
                .collect();
            let dense: Vec<Vec<bool>> = (0..rows).map(|i| (0..ncols).map(|j| bits[j * rows + i]).collect()).collect();
            prop_assert_eq!(rank(rows, &cols), dense_rank(dense));
            for k in nullspace(rows, &cols) {
                prop_assert!(apply(rows, &cols, &k).is_zero());
            }
            prop_assert_eq!(nullspace(rows, &cols).len() + rank(rows, &cols), ncols);
        }

        #[test]
        fn solve_is_certified(bits in proptest::collection::vec(any::<bool>(), 0..64), b in proptest::collection::vec(any::<bool>(), 6)) {
            let rows = 6;
            let ncols = bits.len() / rows;
            let cols: Vec<BitVec> = (0..ncols)
                .map(|j| BitVec::from_ones(rows, (0..rows).filter(|&i| bits[j * rows + i])))
                .collect();
            let b = BitVec::from_ones(rows, (0..rows).filter(|&i| b[i]));
            match solve(rows, &cols, &b) {
                Solution::Solved(x) => prop_assert_eq!(apply(rows, &cols, &x), b),
                Solution::Obstructed(y) => {
                    prop_assert!(cols.iter().all(|c| !y.dot(c)));
                    prop_assert!(y.dot(&b));
                }
            }
        }
    }
}
