//! Arithmetic in the local rings R_k = F2[u_1..u_k]/(u_i^2, u_i u_j - u_j u_i),
//! codes over them, and the Gray map down to binary codes.
//!
//! An element is a sum of monomials u_A over subsets A of {1..k}; the
//! coefficient vector is packed into a u64 indexed by subset masks, so
//! the representation supports k <= 6. The Gray map phi is defined
//! recursively: writing c = c1 + u_k c2 with c1, c2 in R_{k-1},
//! phi(c) = (phi(c2), phi(c1) + phi(c2)), with phi the identity on F2.

use std::collections::BTreeSet;
use std::fmt;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use crate::codes::LinearCode;
use crate::gf2::BitMatrix;
use crate::{Error, Result};

/// Largest ring index whose coefficient vector fits in one u64.
pub const REPRESENTATION_CAP: usize = 6;

fn check_ring_index(k: usize) -> Result<()> {
    if k == 0 || k > REPRESENTATION_CAP {
        return Err(Error::BadParameter(format!(
            "ring index must satisfy 1 <= k <= {REPRESENTATION_CAP}, got {k}"
        )));
    }
    Ok(())
}

fn coeff_mask(k: usize) -> u64 {
    if 1 << k >= 64 {
        u64::MAX
    } else {
        (1u64 << (1u64 << k)) - 1
    }
}

/// An element of R_k with coefficients packed by subset mask: bit m of
/// `coeffs` is the coefficient of the monomial u_A where A is the set
/// of i with bit i-1 set in m.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RkElement {
    k: usize,
    coeffs: u64,
}

impl RkElement {
    pub fn zero(k: usize) -> RkElement {
        RkElement { k, coeffs: 0 }
    }

    pub fn one(k: usize) -> RkElement {
        RkElement { k, coeffs: 1 }
    }

    /// The generator u_i, for 1 <= i <= k.
    pub fn generator(k: usize, i: usize) -> Result<RkElement> {
        check_ring_index(k)?;
        if i == 0 || i > k {
            return Err(Error::BadParameter(format!(
                "generator index must satisfy 1 <= i <= {k}, got {i}"
            )));
        }
        Ok(RkElement {
            k,
            coeffs: 1 << (1 << (i - 1)),
        })
    }

    /// Builds an element from a packed coefficient vector.
    pub fn from_coeffs(k: usize, coeffs: u64) -> Result<RkElement> {
        check_ring_index(k)?;
        if coeffs & !coeff_mask(k) != 0 {
            return Err(Error::BadParameter(format!(
                "coefficient vector {coeffs:#x} has bits beyond the {} subsets of a {k}-set",
                1u64 << k
            )));
        }
        Ok(RkElement { k, coeffs })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn coeffs(&self) -> u64 {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs == 0
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == 1
    }

    fn check_same_ring(&self, other: RkElement, op: &'static str) -> Result<()> {
        if self.k != other.k {
            return Err(Error::BadParameter(format!(
                "{op} needs operands from the same ring, got R_{} and R_{}",
                self.k, other.k
            )));
        }
        Ok(())
    }

    /// Coefficientwise sum; addition in R_k is XOR of packed vectors.
    pub fn add(self, other: RkElement) -> Result<RkElement> {
        self.check_same_ring(other, "addition")?;
        Ok(RkElement {
            k: self.k,
            coeffs: self.coeffs ^ other.coeffs,
        })
    }

    /// Product in R_k. Since each u_i squares to zero, the monomial
    /// product u_A u_B survives exactly when A and B are disjoint, in
    /// which case it is u_{A union B}.
    pub fn mul(self, other: RkElement) -> Result<RkElement> {
        self.check_same_ring(other, "multiplication")?;
        let mut out = 0u64;
        let mut x = self.coeffs;
        while x != 0 {
            let a = x.trailing_zeros() as u64;
            x &= x - 1;
            let mut y = other.coeffs;
            while y != 0 {
                let b = y.trailing_zeros() as u64;
                y &= y - 1;
                if a & b == 0 {
                    out ^= 1 << (a | b);
                }
            }
        }
        Ok(RkElement {
            k: self.k,
            coeffs: out,
        })
    }

    /// The Gray image as a bit vector of length 2^k, bit j being
    /// coordinate j of the image.
    pub fn gray_bits(&self) -> u64 {
        gray_rec(self.k, self.coeffs)
    }

    /// Hamming weight of the Gray image, which serves as the weight of
    /// the ring element itself.
    pub fn gray_weight(&self) -> u32 {
        self.gray_bits().count_ones()
    }
}

fn gray_rec(k: usize, coeffs: u64) -> u64 {
    if k == 0 {
        return coeffs & 1;
    }
    let half = 1u64 << (k - 1);
    let lo_mask = (1u64 << half) - 1;
    let g1 = gray_rec(k - 1, coeffs & lo_mask);
    let g2 = gray_rec(k - 1, coeffs >> half);
    g2 | ((g1 ^ g2) << half)
}

impl fmt::Display for RkElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs == 0 {
            return write!(f, "0");
        }
        let mut terms = Vec::new();
        for m in 0..(1u64 << self.k) {
            if (self.coeffs >> m) & 1 == 1 {
                if m == 0 {
                    terms.push("1".to_string());
                } else {
                    let mut t = String::new();
                    for i in 1..=self.k {
                        if (m >> (i - 1)) & 1 == 1 {
                            t.push_str(&format!("u{i}"));
                        }
                    }
                    terms.push(t);
                }
            }
        }
        write!(f, "{}", terms.join("+"))
    }
}

impl fmt::Debug for RkElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R_{}[{}]", self.k, self)
    }
}

/// A vector over R_k.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct RkVector {
    k: usize,
    entries: Vec<RkElement>,
}

impl RkVector {
    pub fn new(k: usize, entries: Vec<RkElement>) -> Result<RkVector> {
        check_ring_index(k)?;
        if entries.is_empty() {
            return Err(Error::BadParameter("a ring vector needs at least one entry".into()));
        }
        for e in &entries {
            if e.k() != k {
                return Err(Error::BadParameter(format!(
                    "entry from R_{} in a vector over R_{k}",
                    e.k()
                )));
            }
        }
        Ok(RkVector { k, entries })
    }

    pub fn zero(k: usize, n: usize) -> Result<RkVector> {
        RkVector::new(k, vec![RkElement::zero(k); n])
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entry(&self, i: usize) -> RkElement {
        self.entries[i]
    }

    pub fn entries(&self) -> &[RkElement] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    fn check_same_shape(&self, other: &RkVector, op: &'static str) -> Result<()> {
        if self.k != other.k || self.len() != other.len() {
            return Err(Error::BadParameter(format!(
                "{op} needs vectors of equal length over the same ring"
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &RkVector) -> Result<RkVector> {
        self.check_same_shape(other, "vector addition")?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.add(*b))
            .collect::<Result<Vec<_>>>()?;
        RkVector::new(self.k, entries)
    }

    pub fn scale(&self, r: RkElement) -> Result<RkVector> {
        let entries = self
            .entries
            .iter()
            .map(|e| e.mul(r))
            .collect::<Result<Vec<_>>>()?;
        RkVector::new(self.k, entries)
    }

    /// The standard bilinear form sum_i x_i y_i, valued in R_k.
    pub fn inner_product(&self, other: &RkVector) -> Result<RkElement> {
        self.check_same_shape(other, "inner product")?;
        let mut acc = RkElement::zero(self.k);
        for (a, b) in self.entries.iter().zip(&other.entries) {
            acc = acc.add(a.mul(*b)?)?;
        }
        Ok(acc)
    }

    /// Componentwise Gray image: entry t occupies coordinates
    /// t*2^k .. (t+1)*2^k of a binary row of length n*2^k.
    pub fn gray(&self) -> BitMatrix {
        let block = 1usize << self.k;
        let mut row = BitMatrix::zero(1, self.len() * block);
        for (t, e) in self.entries.iter().enumerate() {
            let bits = e.gray_bits();
            for j in 0..block {
                if (bits >> j) & 1 == 1 {
                    row.set(0, t * block + j, true);
                }
            }
        }
        row
    }

    pub fn gray_weight(&self) -> u32 {
        self.entries.iter().map(|e| e.gray_weight()).sum()
    }
}

/// A finitely generated code (submodule of R_k^n).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RkCode {
    k: usize,
    n: usize,
    generators: Vec<RkVector>,
}

fn all_elements(k: usize) -> Vec<RkElement> {
    debug_assert!(1 << k <= 20);
    (0..=coeff_mask(k))
        .map(|c| RkElement { k, coeffs: c })
        .collect()
}

impl RkCode {
    pub fn new(k: usize, n: usize, generators: Vec<RkVector>) -> Result<RkCode> {
        check_ring_index(k)?;
        if n == 0 {
            return Err(Error::BadParameter("code length must be positive".into()));
        }
        for g in &generators {
            if g.k() != k || g.len() != n {
                return Err(Error::BadParameter(format!(
                    "generator over R_{} of length {}, expected R_{k} length {n}",
                    g.k(),
                    g.len()
                )));
            }
        }
        Ok(RkCode { k, n, generators })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[RkVector] {
        &self.generators
    }

    fn check_ambient_guard(&self) -> Result<()> {
        if (1usize << self.k) * self.n > 20 {
            return Err(Error::BadParameter(format!(
                "ambient module R_{}^{} is too large to enumerate (2^k * n must stay <= 20)",
                self.k, self.n
            )));
        }
        Ok(())
    }

    /// Every codeword, produced by folding scalar multiples of the
    /// generators into a closure. Guarded by the ambient size bound.
    pub fn enumerate_codewords(&self) -> Result<BTreeSet<RkVector>> {
        self.check_ambient_guard()?;
        let scalars = all_elements(self.k);
        let mut span: BTreeSet<RkVector> = BTreeSet::new();
        span.insert(RkVector::zero(self.k, self.n)?);
        for g in &self.generators {
            let mut next = BTreeSet::new();
            for s in &span {
                for r in &scalars {
                    next.insert(s.add(&g.scale(*r)?)?);
                }
            }
            span = next;
        }
        Ok(span)
    }

    /// The Gray image of the code as a binary linear code of length
    /// n * 2^k, generated by the images of u_A g over all generators g
    /// and subset monomials u_A.
    pub fn gray_image(&self) -> Result<LinearCode> {
        let block = 1usize << self.k;
        if self.n * block > 24 {
            return Err(Error::BadParameter(format!(
                "Gray image of length {} exceeds the enumeration-friendly cap of 24",
                self.n * block
            )));
        }
        if self.generators.is_empty() {
            return LinearCode::zero_code(self.n * block);
        }
        let mut rows = BitMatrix::zero(0, self.n * block);
        for g in &self.generators {
            for m in 0..block as u64 {
                let monomial = RkElement {
                    k: self.k,
                    coeffs: 1 << m,
                };
                rows = rows.vstack(&g.scale(monomial)?.gray())?;
            }
        }
        LinearCode::from_matrix(&rows)
    }

    fn write_to<W: Write>(&self, w: &mut W) -> Result<()> {
        writeln!(w, "{} {} {}", self.n, self.k, self.generators.len())?;
        let block = 1usize << self.k;
        for g in &self.generators {
            let tokens: Vec<String> = g
                .entries()
                .iter()
                .map(|e| {
                    (0..block)
                        .map(|p| if (e.coeffs() >> p) & 1 == 1 { '1' } else { '0' })
                        .collect()
                })
                .collect();
            writeln!(w, "{}", tokens.join(" "))?;
        }
        Ok(())
    }

    pub fn save<P: AsRef<Path>>(&self, path: P) -> Result<()> {
        let mut w = BufWriter::new(File::create(path)?);
        self.write_to(&mut w)
    }

    /// Parses the ring code file format: a header `n k g`, then g
    /// lines of n tokens, each token 2^k characters of 0/1 giving the
    /// coefficients by subset index. Blank lines and `#` comments are
    /// skipped.
    pub fn read_from<R: BufRead>(reader: R) -> Result<RkCode> {
        let mut header: Option<(usize, usize, usize)> = None;
        let mut generators: Vec<RkVector> = Vec::new();
        for (idx, line) in reader.lines().enumerate() {
            let line = line?;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            match header {
                None => {
                    let fields: Vec<&str> = trimmed.split_whitespace().collect();
                    if fields.len() != 3 {
                        return Err(Error::Parse {
                            line: idx + 1,
                            msg: "header must be three integers: n k g".into(),
                        });
                    }
                    let parse = |s: &str| -> Result<usize> {
                        s.parse().map_err(|_| Error::Parse {
                            line: idx + 1,
                            msg: format!("bad header field {s:?}"),
                        })
                    };
                    let n = parse(fields[0])?;
                    let k = parse(fields[1])?;
                    let g = parse(fields[2])?;
                    check_ring_index(k).map_err(|e| Error::Parse {
                        line: idx + 1,
                        msg: e.to_string(),
                    })?;
                    header = Some((n, k, g));
                }
                Some((n, k, g)) => {
                    if generators.len() == g {
                        return Err(Error::Parse {
                            line: idx + 1,
                            msg: format!("more than the declared {g} generators"),
                        });
                    }
                    let block = 1usize << k;
                    let tokens: Vec<&str> = trimmed.split_whitespace().collect();
                    if tokens.len() != n {
                        return Err(Error::Parse {
                            line: idx + 1,
                            msg: format!("expected {n} tokens, found {}", tokens.len()),
                        });
                    }
                    let mut entries = Vec::with_capacity(n);
                    for tok in tokens {
                        if tok.len() != block {
                            return Err(Error::Parse {
                                line: idx + 1,
                                msg: format!(
                                    "token {tok:?} must have exactly {block} characters"
                                ),
                            });
                        }
                        let mut coeffs = 0u64;
                        for (p, ch) in tok.chars().enumerate() {
                            match ch {
                                '1' => coeffs |= 1 << p,
                                '0' => {}
                                _ => {
                                    return Err(Error::Parse {
                                        line: idx + 1,
                                        msg: format!("bad character {ch:?} in token {tok:?}"),
                                    })
                                }
                            }
                        }
                        entries.push(RkElement { k, coeffs });
                    }
                    generators.push(RkVector::new(k, entries)?);
                }
            }
        }
        let (n, k, g) = header.ok_or(Error::Parse {
            line: 0,
            msg: "empty ring code file".into(),
        })?;
        if generators.len() != g {
            return Err(Error::Parse {
                line: 0,
                msg: format!("declared {g} generators but found {}", generators.len()),
            });
        }
        RkCode::new(k, n, generators)
    }

    pub fn load<P: AsRef<Path>>(path: P) -> Result<RkCode> {
        RkCode::read_from(BufReader::new(File::open(path)?))
    }
}

/// The dual code with respect to the standard form, computed by
/// filtering the (guarded) ambient module and reducing the result to a
/// small generating set.
pub fn dual_ring_code(code: &RkCode) -> Result<RkCode> {
    code.check_ambient_guard()?;
    let members = dual_member_set(code)?;
    let scalars = all_elements(code.k());
    let mut gens: Vec<RkVector> = Vec::new();
    let mut span: BTreeSet<RkVector> = BTreeSet::new();
    span.insert(RkVector::zero(code.k(), code.n())?);
    for v in &members {
        if span.contains(v) {
            continue;
        }
        let mut next = BTreeSet::new();
        for s in &span {
            for r in &scalars {
                next.insert(s.add(&v.scale(*r)?)?);
            }
        }
        span = next;
        gens.push(v.clone());
    }
    RkCode::new(code.k(), code.n(), gens)
}

fn dual_member_set(code: &RkCode) -> Result<BTreeSet<RkVector>> {
    let k = code.k();
    let n = code.n();
    let bits_per_entry = 1usize << k;
    let total_bits = bits_per_entry * n;
    let mut out = BTreeSet::new();
    for packed in 0..(1u64 << total_bits) {
        let entries: Vec<RkElement> = (0..n)
            .map(|t| RkElement {
                k,
                coeffs: (packed >> (t * bits_per_entry)) & coeff_mask(k),
            })
            .collect();
        let v = RkVector::new(k, entries)?;
        let mut orthogonal = true;
        for g in code.generators() {
            if !v.inner_product(g)?.is_zero() {
                orthogonal = false;
                break;
            }
        }
        if orthogonal {
            out.insert(v);
        }
    }
    Ok(out)
}

/// Whether the code meets its dual only in the zero vector.
pub fn is_lcd_ring(code: &RkCode) -> Result<bool> {
    let span = code.enumerate_codewords()?;
    let dual = dual_member_set(code)?;
    let overlap = span.intersection(&dual).count();
    Ok(overlap == 1)
}

/// Gram condition a binary generator can be checked against before
/// lifting it to a ring code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GramCondition {
    Identity,
    JMinusI,
}

/// Lifts a binary generator matrix with a recognized Gram matrix to a
/// code over R_k by reading its entries as constants. The identity
/// condition always transfers the LCD property; the J - I condition
/// additionally needs an even number of rows, as in the binary case.
pub fn ring_code_from_binary_gram(
    g: &BitMatrix,
    k: usize,
    condition: GramCondition,
) -> Result<RkCode> {
    check_ring_index(k)?;
    if g.rows() == 0 || g.cols() == 0 {
        return Err(Error::BadParameter("generator must be nonempty".into()));
    }
    let gram = g.multiply(&g.transpose())?;
    match condition {
        GramCondition::Identity => {
            if !gram.is_identity() {
                return Err(Error::BadParameter(
                    "Gram matrix of the generator is not the identity".into(),
                ));
            }
        }
        GramCondition::JMinusI => {
            if g.rows() % 2 != 0 {
                return Err(Error::BadParameter(format!(
                    "Gram matrix J - I of odd order {} is singular, so the lift cannot be LCD",
                    g.rows()
                )));
            }
            let expected = BitMatrix::all_ones(g.rows()).add(&BitMatrix::identity(g.rows()))?;
            if gram != expected {
                return Err(Error::BadParameter(
                    "Gram matrix of the generator is not J - I".into(),
                ));
            }
        }
    }
    let generators = (0..g.rows())
        .map(|i| {
            let entries = (0..g.cols())
                .map(|j| {
                    if g.get(i, j) {
                        RkElement::one(k)
                    } else {
                        RkElement::zero(k)
                    }
                })
                .collect();
            RkVector::new(k, entries)
        })
        .collect::<Result<Vec<_>>>()?;
    RkCode::new(k, g.cols(), generators)
}
