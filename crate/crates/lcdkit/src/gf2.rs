//! Dense bit-packed linear algebra over GF(2).
//!
//! A [`BitMatrix`] stores each row as a run of `u64` words, least significant
//! bit first, so column `j` of row `i` lives at bit `j % 64` of word
//! `j / 64`. All arithmetic is carried by word-wide XOR/AND plus popcount.
//! Every operation maintains the invariant that bits past the last column in
//! the final word of a row are zero; `multiply` and `rank` rely on that to
//! avoid per-bit masking. Matrices with zero rows are legal (they represent
//! the generator of the zero code, e.g. the dual of the full space).

use crate::{Error, Result};
use std::fmt;

/// A dense matrix over GF(2) with bit-packed rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    data: Vec<u64>,
}

fn words_for(cols: usize) -> usize {
    cols.div_ceil(64).max(1)
}

/// Mask selecting the in-range bits of the last word of a row.
fn tail_mask(cols: usize) -> u64 {
    match cols % 64 {
        0 => {
            if cols == 0 {
                0
            } else {
                u64::MAX
            }
        }
        r => (1u64 << r) - 1,
    }
}

impl BitMatrix {
    /// The all-zero `rows x cols` matrix.
    pub fn zero(rows: usize, cols: usize) -> Self {
        let words_per_row = words_for(cols);
        BitMatrix {
            rows,
            cols,
            words_per_row,
            data: vec![0; rows * words_per_row],
        }
    }

    /// The `n x n` identity.
    pub fn identity(n: usize) -> Self {
        let mut m = BitMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// The all-ones `n x n` matrix (J_n).
    pub fn all_ones(n: usize) -> Self {
        let mut m = BitMatrix::zero(n, n);
        if n == 0 {
            return m;
        }
        for i in 0..n {
            let (lo, hi) = m.row_range(i);
            for w in &mut m.data[lo..hi] {
                *w = u64::MAX;
            }
            m.data[hi - 1] = tail_mask(n);
        }
        m
    }

    /// Builds a matrix from rows of `0`/`1` entries. All rows must share one
    /// length, which becomes the column count.
    pub fn from_dense(rows: &[Vec<u8>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = BitMatrix::zero(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::ShapeMismatch {
                    expected: (rows.len(), cols),
                    got: (i + 1, row.len()),
                    op: "from_dense",
                });
            }
            for (j, &b) in row.iter().enumerate() {
                match b {
                    0 => {}
                    1 => m.set(i, j, true),
                    _ => {
                        return Err(Error::BadParameter(format!(
                            "entry ({i},{j}) is {b}, want 0 or 1"
                        )))
                    }
                }
            }
        }
        Ok(m)
    }

    /// Builds a matrix from strings of `0`/`1` characters, one row per string.
    pub fn parse_rows(rows: &[&str]) -> Result<Self> {
        let dense: Vec<Vec<u8>> = rows
            .iter()
            .enumerate()
            .map(|(i, s)| {
                s.chars()
                    .map(|c| match c {
                        '0' => Ok(0u8),
                        '1' => Ok(1u8),
                        _ => Err(Error::Parse {
                            line: i + 1,
                            msg: format!("unexpected character {c:?} in row"),
                        }),
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        BitMatrix::from_dense(&dense)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    fn row_range(&self, i: usize) -> (usize, usize) {
        let lo = i * self.words_per_row;
        (lo, lo + self.words_per_row)
    }

    /// The packed words of row `i`.
    pub fn row_words(&self, i: usize) -> &[u64] {
        let (lo, hi) = self.row_range(i);
        &self.data[lo..hi]
    }

    /// Row `i` as a single word. Only valid when `cols <= 64`.
    pub fn row_as_u64(&self, i: usize) -> u64 {
        debug_assert!(self.cols <= 64);
        self.data[i * self.words_per_row]
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.rows && j < self.cols);
        let w = self.data[i * self.words_per_row + j / 64];
        (w >> (j % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, bit: bool) {
        debug_assert!(i < self.rows && j < self.cols);
        let w = &mut self.data[i * self.words_per_row + j / 64];
        if bit {
            *w |= 1u64 << (j % 64);
        } else {
            *w &= !(1u64 << (j % 64));
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let (alo, _) = self.row_range(a);
        let (blo, _) = self.row_range(b);
        for k in 0..self.words_per_row {
            self.data.swap(alo + k, blo + k);
        }
    }

    /// Row `dst` ^= row `src`.
    pub fn xor_row(&mut self, dst: usize, src: usize) {
        let (slo, shi) = self.row_range(src);
        let (dlo, _) = self.row_range(dst);
        for k in 0..(shi - slo) {
            let v = self.data[slo + k];
            self.data[dlo + k] ^= v;
        }
    }

    /// XORs an externally held row (same width) into row `dst`.
    pub fn xor_row_words(&mut self, dst: usize, words: &[u64]) {
        let (dlo, dhi) = self.row_range(dst);
        debug_assert_eq!(words.len(), dhi - dlo);
        for (k, &v) in words.iter().enumerate() {
            self.data[dlo + k] ^= v;
        }
    }

    /// Hamming weight of row `i`.
    pub fn row_weight(&self, i: usize) -> u32 {
        self.row_words(i).iter().map(|w| w.count_ones()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == BitMatrix::identity(self.rows)
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            let (lo, hi) = self.row_range(i);
            for (wi, &w) in self.data[lo..hi].iter().enumerate() {
                let mut bits = w;
                while bits != 0 {
                    let j = wi * 64 + bits.trailing_zeros() as usize;
                    t.set(j, i, true);
                    bits &= bits - 1;
                }
            }
        }
        t
    }

    /// Matrix product over GF(2). Requires `self.cols == rhs.rows`.
    pub fn multiply(&self, rhs: &BitMatrix) -> Result<BitMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch {
                expected: (self.cols, rhs.cols),
                got: (rhs.rows, rhs.cols),
                op: "multiply",
            });
        }
        let rt = rhs.transpose();
        let mut out = BitMatrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            let a = self.row_words(i);
            for j in 0..rhs.cols {
                let b = rt.row_words(j);
                let mut acc = 0u64;
                for k in 0..a.len() {
                    acc ^= a[k] & b[k];
                }
                if acc.count_ones() & 1 == 1 {
                    out.set(i, j, true);
                }
            }
        }
        Ok(out)
    }

    /// Entrywise sum (XOR). Requires equal shapes.
    pub fn add(&self, rhs: &BitMatrix) -> Result<BitMatrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::ShapeMismatch {
                expected: (self.rows, self.cols),
                got: (rhs.rows, rhs.cols),
                op: "add",
            });
        }
        let mut out = self.clone();
        for (d, s) in out.data.iter_mut().zip(rhs.data.iter()) {
            *d ^= s;
        }
        Ok(out)
    }

    /// Reduced row echelon form. Returns the reduced matrix with zero rows
    /// trimmed, the strictly increasing pivot column list, and the rank.
    pub fn rref(&self) -> (BitMatrix, Vec<usize>, usize) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| m.get(i, c)) else {
                continue;
            };
            m.swap_rows(r, p);
            let pivot_row: Vec<u64> = m.row_words(r).to_vec();
            for i in 0..m.rows {
                if i != r && m.get(i, c) {
                    m.xor_row_words(i, &pivot_row);
                }
            }
            pivots.push(c);
            r += 1;
        }
        let rank = pivots.len();
        m.rows = rank;
        m.data.truncate(rank * m.words_per_row);
        (m, pivots, rank)
    }

    pub fn rank(&self) -> usize {
        self.rref().2
    }

    /// Determinant over GF(2): `true` exactly when the matrix is square and
    /// invertible.
    pub fn determinant(&self) -> Result<bool> {
        if self.rows != self.cols {
            return Err(Error::ShapeMismatch {
                expected: (self.rows, self.rows),
                got: (self.rows, self.cols),
                op: "determinant",
            });
        }
        Ok(self.rank() == self.rows)
    }

    /// Inverse of a square invertible matrix, by eliminating `[self | I]`.
    pub fn inverse(&self) -> Result<BitMatrix> {
        if self.rows != self.cols {
            return Err(Error::NotInvertible);
        }
        let n = self.rows;
        let aug = self.augment_columns(&BitMatrix::identity(n))?;
        let (red, pivots, _) = aug.rref();
        if pivots.len() != n || pivots.iter().copied().ne(0..n) {
            return Err(Error::NotInvertible);
        }
        Ok(red.submatrix_cols(&(n..2 * n).collect::<Vec<_>>()))
    }

    /// Kronecker product: if `self` is `m x n` and `rhs` is `p x q`, the
    /// result is `mp x nq` with block `(i,j)` equal to `a_ij * rhs`.
    pub fn kronecker(&self, rhs: &BitMatrix) -> BitMatrix {
        let (m, n) = (self.rows, self.cols);
        let (p, q) = (rhs.rows, rhs.cols);
        let mut out = BitMatrix::zero(m * p, n * q);
        for i in 0..m {
            for j in 0..n {
                if !self.get(i, j) {
                    continue;
                }
                for r in 0..p {
                    for c in 0..q {
                        if rhs.get(r, c) {
                            out.set(i * p + r, j * q + c, true);
                        }
                    }
                }
            }
        }
        out
    }

    /// Horizontal concatenation `[self | rhs]`. Row counts must match.
    pub fn augment_columns(&self, rhs: &BitMatrix) -> Result<BitMatrix> {
        if self.rows != rhs.rows {
            return Err(Error::ShapeMismatch {
                expected: (self.rows, rhs.cols),
                got: (rhs.rows, rhs.cols),
                op: "augment_columns",
            });
        }
        let mut out = BitMatrix::zero(self.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) {
                    out.set(i, j, true);
                }
            }
            for j in 0..rhs.cols {
                if rhs.get(i, j) {
                    out.set(i, self.cols + j, true);
                }
            }
        }
        Ok(out)
    }

    /// Widens the matrix by one all-zero column on the right.
    pub fn append_zero_column(&self) -> BitMatrix {
        let mut out = BitMatrix::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            let (lo, hi) = self.row_range(i);
            let (olo, _) = out.row_range(i);
            out.data[olo..olo + (hi - lo)].copy_from_slice(&self.data[lo..hi]);
        }
        out
    }

    /// Vertical concatenation. Column counts must match.
    pub fn vstack(&self, rhs: &BitMatrix) -> Result<BitMatrix> {
        if self.cols != rhs.cols {
            return Err(Error::ShapeMismatch {
                expected: (self.rows, self.cols),
                got: (rhs.rows, rhs.cols),
                op: "vstack",
            });
        }
        let mut out = BitMatrix::zero(self.rows + rhs.rows, self.cols);
        out.data[..self.data.len()].copy_from_slice(&self.data);
        out.data[self.data.len()..].copy_from_slice(&rhs.data);
        Ok(out)
    }

    /// A new matrix made of the listed rows, in order (repeats allowed).
    pub fn row_submatrix(&self, indices: &[usize]) -> Result<BitMatrix> {
        if let Some(&bad) = indices.iter().find(|&&i| i >= self.rows) {
            return Err(Error::BadParameter(format!(
                "row index {bad} out of range for {} rows",
                self.rows
            )));
        }
        let mut out = BitMatrix::zero(indices.len(), self.cols);
        for (oi, &i) in indices.iter().enumerate() {
            let (lo, hi) = self.row_range(i);
            let (olo, ohi) = out.row_range(oi);
            out.data[olo..ohi].copy_from_slice(&self.data[lo..hi]);
        }
        Ok(out)
    }

    /// A new matrix made of the listed columns, in order (repeats allowed).
    /// Indices must be in range.
    pub fn submatrix_cols(&self, indices: &[usize]) -> BitMatrix {
        let mut out = BitMatrix::zero(self.rows, indices.len());
        for i in 0..self.rows {
            for (oj, &j) in indices.iter().enumerate() {
                if self.get(i, j) {
                    out.set(i, oj, true);
                }
            }
        }
        out
    }

    /// Applies a column permutation: column `j` of the result is column
    /// `perm[j]` of `self`. `perm` must be a permutation of `0..cols`.
    pub fn permute_columns(&self, perm: &[usize]) -> Result<BitMatrix> {
        if perm.len() != self.cols {
            return Err(Error::BadParameter(format!(
                "permutation length {} does not match {} columns",
                perm.len(),
                self.cols
            )));
        }
        let mut seen = vec![false; self.cols];
        for &p in perm {
            if p >= self.cols || seen[p] {
                return Err(Error::BadParameter(
                    "column permutation is not a bijection".into(),
                ));
            }
            seen[p] = true;
        }
        Ok(self.submatrix_cols(perm))
    }

    /// Uniformly random matrix from the supplied generator.
    pub fn random<R: rand::Rng>(rows: usize, cols: usize, rng: &mut R) -> BitMatrix {
        let mut m = BitMatrix::zero(rows, cols);
        if cols == 0 {
            return m;
        }
        let mask = tail_mask(cols);
        for i in 0..rows {
            let (lo, hi) = m.row_range(i);
            for w in &mut m.data[lo..hi] {
                *w = rng.gen();
            }
            m.data[hi - 1] &= mask;
        }
        m
    }

    /// Uniformly random invertible `n x n` matrix (rejection sampling).
    pub fn random_invertible<R: rand::Rng>(n: usize, rng: &mut R) -> BitMatrix {
        loop {
            let m = BitMatrix::random(n, n, rng);
            if m.rank() == n {
                return m;
            }
        }
    }

    #[cfg(test)]
    fn tail_bits_clear(&self) -> bool {
        if self.cols == 0 {
            return self.data.iter().all(|&w| w == 0);
        }
        let mask = tail_mask(self.cols);
        (0..self.rows).all(|i| {
            let (_, hi) = self.row_range(i);
            self.data[hi - 1] & !mask == 0
        })
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for j in 0..self.cols {
                f.write_str(if self.get(i, j) { "1" } else { "0" })?;
            }
            if i + 1 < self.rows {
                f.write_str("\n")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}:", self.rows, self.cols)?;
        fmt::Display::fmt(self, f)
    }
}
