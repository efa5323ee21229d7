//! Binary linear codes: duals, hulls, LCD tests, minimum distance, weight
//! distributions, the MacWilliams transform, and the elementary combinators
//! (zero-column padding, Kronecker product, direct sum) that transport the
//! LCD property.
//!
//! A code is stored by a canonical generator matrix: full rank, reduced row
//! echelon form. Two values are equal as codes exactly when the stored
//! matrices are equal, which makes deduplication in search tables a plain
//! equality test.

use crate::gf2::BitMatrix;
use crate::lpbound::krawtchouk_table;
use crate::{Error, Result};
use std::fmt;
use std::io::{BufRead, Write};

/// Messages longer than this make codeword enumeration unreasonable.
pub const ENUMERATION_CAP: usize = 28;

/// A binary linear `[n, k]` code, held as a canonical (RREF, full-rank)
/// generator matrix. `k = 0` is legal and represents the zero code.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearCode {
    generator: BitMatrix,
}

impl LinearCode {
    /// The code spanned by the rows of `g`. Dependent and zero rows are
    /// allowed; the stored generator is the canonical RREF basis.
    pub fn from_matrix(g: &BitMatrix) -> Result<LinearCode> {
        if g.cols() == 0 {
            return Err(Error::BadParameter("a code needs length at least 1".into()));
        }
        let (reduced, _, _) = g.rref();
        Ok(LinearCode { generator: reduced })
    }

    /// The zero code of length `n`.
    pub fn zero_code(n: usize) -> Result<LinearCode> {
        LinearCode::from_matrix(&BitMatrix::zero(0, n))
    }

    /// The `[n, 1, n]` repetition code.
    pub fn repetition(n: usize) -> Result<LinearCode> {
        let mut row = BitMatrix::zero(1, n);
        for j in 0..n {
            row.set(0, j, true);
        }
        LinearCode::from_matrix(&row)
    }

    /// The full `[n, n, 1]` code.
    pub fn full_space(n: usize) -> Result<LinearCode> {
        LinearCode::from_matrix(&BitMatrix::identity(n))
    }

    pub fn n(&self) -> usize {
        self.generator.cols()
    }

    pub fn k(&self) -> usize {
        self.generator.rows()
    }

    /// The canonical generator matrix.
    pub fn generator(&self) -> &BitMatrix {
        &self.generator
    }

    /// The Gram matrix G·Gᵀ.
    pub fn gram(&self) -> BitMatrix {
        self.generator
            .multiply(&self.generator.transpose())
            .expect("generator times its own transpose always conforms")
    }

    /// The dual code: all vectors orthogonal to every codeword.
    pub fn dual(&self) -> LinearCode {
        let n = self.n();
        let k = self.k();
        let (_, pivots, _) = self.generator.rref();
        let mut is_pivot = vec![false; n];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
        let mut h = BitMatrix::zero(n - k, n);
        for (r, &f) in free.iter().enumerate() {
            h.set(r, f, true);
            for (row, &p) in pivots.iter().enumerate() {
                if self.generator.get(row, f) {
                    h.set(r, p, true);
                }
            }
        }
        LinearCode::from_matrix(&h).expect("dual construction keeps the length")
    }

    /// Membership test for a length-`n` word given as a 1-row matrix.
    pub fn contains(&self, word: &BitMatrix) -> Result<bool> {
        if word.rows() != 1 || word.cols() != self.n() {
            return Err(Error::ShapeMismatch {
                expected: (1, self.n()),
                got: (word.rows(), word.cols()),
                op: "contains",
            });
        }
        Ok(self.generator.vstack(word)?.rank() == self.k())
    }

    /// Dimension of the hull C ∩ C⊥, computed as k − rank(GGᵀ).
    pub fn hull_dimension(&self) -> usize {
        self.k() - self.gram().rank()
    }

    /// Whether the code is linear complementary dual: the hull is trivial,
    /// equivalently det(GGᵀ) = 1. The zero code counts as LCD.
    pub fn is_lcd(&self) -> bool {
        self.gram()
            .determinant()
            .expect("gram matrix is always square")
    }

    /// GGᵀ = 0, i.e. the code is contained in its dual.
    pub fn is_self_orthogonal(&self) -> bool {
        self.gram().is_zero()
    }

    pub fn is_self_dual(&self) -> bool {
        self.n() == 2 * self.k() && self.is_self_orthogonal()
    }

    /// Walks all nonzero codewords in Gray order (one generator-row XOR per
    /// step), feeding each packed codeword to `visit`.
    fn enumerate_nonzero<F: FnMut(&[u64])>(&self, mut visit: F) -> Result<()> {
        let k = self.k();
        if k == 0 {
            return Err(Error::BadParameter(
                "distance undefined: the zero code has no nonzero codeword".into(),
            ));
        }
        if k > ENUMERATION_CAP {
            return Err(Error::BadParameter(format!(
                "enumeration cap: k = {k} exceeds {ENUMERATION_CAP}"
            )));
        }
        let words = self.generator.row_words(0).len();
        let mut current = vec![0u64; words];
        for m in 1u64..(1u64 << k) {
            let flip = m.trailing_zeros() as usize;
            for (c, &w) in current.iter_mut().zip(self.generator.row_words(flip)) {
                *c ^= w;
            }
            visit(&current);
        }
        Ok(())
    }

    /// Least weight of a nonzero codeword.
    pub fn minimum_distance(&self) -> Result<usize> {
        let mut best = usize::MAX;
        self.enumerate_nonzero(|word| {
            let w = word.iter().map(|x| x.count_ones() as usize).sum();
            if w < best {
                best = w;
            }
        })?;
        Ok(best)
    }

    /// Exact weight distribution (A_0 .. A_n).
    pub fn weight_distribution(&self) -> Result<WeightDistribution> {
        let mut counts = vec![0u128; self.n() + 1];
        counts[0] = 1;
        if self.k() > 0 {
            self.enumerate_nonzero(|word| {
                let w: usize = word.iter().map(|x| x.count_ones() as usize).sum();
                counts[w] += 1;
            })?;
        }
        Ok(WeightDistribution {
            n: self.n(),
            counts,
        })
    }

    /// Appends a zero coordinate: an `[n+1, k]` code with the same Gram
    /// matrix, hence the same LCD status, and the same distance when k ≥ 1.
    pub fn extend_zero_column(&self) -> LinearCode {
        LinearCode {
            generator: self.generator.append_zero_column(),
        }
    }

    /// Kronecker product code: parameters `[n·m, k·l]`, distance d₁·d₂, LCD
    /// whenever both factors are.
    pub fn kronecker_code(c1: &LinearCode, c2: &LinearCode) -> Result<LinearCode> {
        if c1.k() == 0 || c2.k() == 0 {
            return LinearCode::zero_code(c1.n() * c2.n());
        }
        LinearCode::from_matrix(&c1.generator.kronecker(&c2.generator))
    }

    /// Direct sum: parameters `[n+m, k+l]`, distance min(d₁, d₂), LCD
    /// whenever both summands are.
    pub fn direct_sum(c1: &LinearCode, c2: &LinearCode) -> Result<LinearCode> {
        let top = c1
            .generator
            .augment_columns(&BitMatrix::zero(c1.k(), c2.n()))?;
        let bottom = BitMatrix::zero(c2.k(), c1.n()).augment_columns(&c2.generator)?;
        LinearCode::from_matrix(&top.vstack(&bottom)?)
    }

    /// Serializes in the shared code file format: a `n k` header line, then
    /// `k` rows of `n` characters from {0,1}.
    pub fn write_to<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "{} {}", self.n(), self.k())?;
        for i in 0..self.k() {
            let row: String = (0..self.n())
                .map(|j| if self.generator.get(i, j) { '1' } else { '0' })
                .collect();
            writeln!(w, "{row}")?;
        }
        Ok(())
    }

    pub fn save(&self, path: &std::path::Path) -> Result<()> {
        let mut buf = Vec::new();
        self.write_to(&mut buf)?;
        std::fs::write(path, buf)?;
        Ok(())
    }

    /// Parses the shared code file format. Lines starting with `#` are
    /// comments and may appear before the header or between rows.
    pub fn read_from<R: BufRead>(r: R) -> Result<LinearCode> {
        let matrix = read_matrix_file(r)?;
        let k = matrix.rows();
        let code = LinearCode::from_matrix(&matrix)?;
        if code.k() != k {
            return Err(Error::Parse {
                line: 0,
                msg: format!(
                    "declared dimension {k} but rows only span a {}-dimensional code",
                    code.k()
                ),
            });
        }
        Ok(code)
    }

    pub fn load(path: &std::path::Path) -> Result<LinearCode> {
        let file = std::fs::File::open(path)?;
        LinearCode::read_from(std::io::BufReader::new(file))
    }
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}] code\n{}", self.n(), self.k(), self.generator)
    }
}

/// Reads the `n k` + bit-rows file body shared by code and matrix files.
pub(crate) fn read_matrix_file<R: BufRead>(r: R) -> Result<BitMatrix> {
    let mut header: Option<(usize, usize)> = None;
    let mut rows: Vec<String> = Vec::new();
    for (idx, line) in r.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        match header {
            None => {
                let mut it = trimmed.split_whitespace();
                let n = it.next().and_then(|t| t.parse::<usize>().ok());
                let k = it.next().and_then(|t| t.parse::<usize>().ok());
                match (n, k, it.next()) {
                    (Some(n), Some(k), None) => header = Some((n, k)),
                    _ => {
                        return Err(Error::Parse {
                            line: idx + 1,
                            msg: "expected header `n k`".into(),
                        })
                    }
                }
            }
            Some((n, k)) => {
                if trimmed.len() != n {
                    return Err(Error::Parse {
                        line: idx + 1,
                        msg: format!("row has {} characters, expected {n}", trimmed.len()),
                    });
                }
                if rows.len() == k {
                    return Err(Error::Parse {
                        line: idx + 1,
                        msg: format!("more than {k} rows"),
                    });
                }
                rows.push(trimmed.to_string());
            }
        }
    }
    let Some((n, k)) = header else {
        return Err(Error::Parse {
            line: 0,
            msg: "missing header line".into(),
        });
    };
    if rows.len() != k {
        return Err(Error::Parse {
            line: 0,
            msg: format!("expected {k} rows, found {}", rows.len()),
        });
    }
    let refs: Vec<&str> = rows.iter().map(|s| s.as_str()).collect();
    let m = if k == 0 {
        BitMatrix::zero(0, n)
    } else {
        BitMatrix::parse_rows(&refs)?
    };
    if m.cols() != n {
        return Err(Error::Parse {
            line: 0,
            msg: format!("rows have {} columns, header says {n}", m.cols()),
        });
    }
    Ok(m)
}

/// The weight enumerator of a code as raw counts: `counts[w]` is the number
/// of codewords of Hamming weight `w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDistribution {
    pub n: usize,
    pub counts: Vec<u128>,
}

impl WeightDistribution {
    /// Total number of codewords.
    pub fn total(&self) -> u128 {
        self.counts.iter().sum()
    }
}

/// The weight distribution of the dual of a `k`-dimensional code with
/// distribution `a`, via B_i = 2^{-k} Σ_j A_j P_i(j). A non-integer or
/// negative entry means `a` is not the distribution of a `k`-dimensional
/// linear code and is reported as an error.
pub fn macwilliams_transform(a: &WeightDistribution, k: usize) -> Result<WeightDistribution> {
    let n = a.n;
    if a.counts.len() != n + 1 {
        return Err(Error::BadParameter(format!(
            "distribution has {} entries for length {n}",
            a.counts.len()
        )));
    }
    let table = krawtchouk_table(n);
    let mut counts = vec![0u128; n + 1];
    for i in 0..=n {
        let mut acc: i128 = 0;
        for j in 0..=n {
            let aj = i128::try_from(a.counts[j])
                .map_err(|_| Error::BadParameter("count too large".into()))?;
            acc += aj * table.value_i128(i, j);
        }
        let denom = 1i128 << k;
        if acc < 0 || acc % denom != 0 {
            return Err(Error::BadParameter(format!(
                "transform entry {i} is {acc}/2^{k}, not a nonnegative integer"
            )));
        }
        counts[i] = (acc / denom) as u128;
    }
    Ok(WeightDistribution { n, counts })
}
