//! Constructions that manufacture LCD codes: orthogonal matrices over
//! GF(2) (random walks, exhaustive enumeration, transvections), the
//! correspondence with self-dual codes, Gram-condition factories, and
//! incidence codes of 2-designs.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

use num::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::codes::LinearCode;
use crate::gf2::BitMatrix;
use crate::{Error, Result};

/// A square matrix Q over GF(2) with Q Q^T = I, kept valid by construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrthogonalMatrix {
    q: BitMatrix,
}

impl OrthogonalMatrix {
    /// Wraps a matrix after checking the defining condition.
    pub fn new(q: BitMatrix) -> Result<Self> {
        if !is_orthogonal(&q)? {
            return Err(Error::BadParameter(
                "matrix is not orthogonal: QQ^T differs from the identity".into(),
            ));
        }
        Ok(OrthogonalMatrix { q })
    }

    pub fn n(&self) -> usize {
        self.q.rows()
    }

    pub fn matrix(&self) -> &BitMatrix {
        &self.q
    }

    pub fn into_matrix(self) -> BitMatrix {
        self.q
    }
}

/// Tests Q Q^T = I. Errors on non-square input.
pub fn is_orthogonal(m: &BitMatrix) -> Result<bool> {
    if m.rows() != m.cols() {
        return Err(Error::BadParameter(format!(
            "orthogonality is defined for square matrices, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let product = m.multiply(&m.transpose())?;
    Ok(product.is_identity())
}

/// Builds the transvection T_u = I + u^T u for a weight-4 row vector u.
///
/// Every such T_u is orthogonal, and together with the permutation
/// matrices these generate the full orthogonal group.
pub fn transvection_matrix(u: &BitMatrix) -> Result<OrthogonalMatrix> {
    if u.rows() != 1 {
        return Err(Error::BadParameter(format!(
            "transvection vector must be a single row, got {} rows",
            u.rows()
        )));
    }
    if u.row_weight(0) != 4 {
        return Err(Error::BadParameter(format!(
            "transvection vector must have weight 4, got weight {}",
            u.row_weight(0)
        )));
    }
    let outer = u.transpose().multiply(u)?;
    let t = outer.add(&BitMatrix::identity(u.cols()))?;
    OrthogonalMatrix::new(t)
}

fn random_permutation_matrix(n: usize, rng: &mut ChaCha8Rng) -> BitMatrix {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut p = BitMatrix::zero(n, n);
    for (i, &j) in perm.iter().enumerate() {
        p.set(i, j, true);
    }
    p
}

fn random_weight4_vector(n: usize, rng: &mut ChaCha8Rng) -> BitMatrix {
    let mut idx: Vec<usize> = (0..n).collect();
    idx.shuffle(rng);
    let mut u = BitMatrix::zero(1, n);
    for &j in &idx[..4] {
        u.set(0, j, true);
    }
    u
}

/// A reasonable walk length for mixing at size n.
pub fn default_walk_length(n: usize) -> usize {
    8 * n
}

/// Samples an orthogonal matrix by a seeded random walk whose steps
/// multiply in either a random permutation matrix or a fresh
/// transvection. Requires n >= 4 so that weight-4 vectors exist.
pub fn random_orthogonal(n: usize, seed: u64, walk_length: usize) -> Result<OrthogonalMatrix> {
    if n < 4 {
        return Err(Error::BadParameter(format!(
            "random orthogonal sampling needs n >= 4, got {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut acc = BitMatrix::identity(n);
    for _ in 0..walk_length {
        let step = if rng.gen::<bool>() {
            random_permutation_matrix(n, &mut rng)
        } else {
            transvection_matrix(&random_weight4_vector(n, &mut rng))?.into_matrix()
        };
        acc = acc.multiply(&step)?;
    }
    OrthogonalMatrix::new(acc)
}

fn enumerate_rows(
    n: usize,
    candidates: &[u32],
    rows: &mut Vec<u32>,
    out: &mut Vec<OrthogonalMatrix>,
) -> Result<()> {
    if rows.len() == n {
        let mut m = BitMatrix::zero(n, n);
        for (i, &r) in rows.iter().enumerate() {
            for j in 0..n {
                if (r >> j) & 1 == 1 {
                    m.set(i, j, true);
                }
            }
        }
        out.push(OrthogonalMatrix::new(m)?);
        return Ok(());
    }
    for &v in candidates {
        if rows.iter().all(|&p| (v & p).count_ones() % 2 == 0) {
            rows.push(v);
            enumerate_rows(n, candidates, rows, out)?;
            rows.pop();
        }
    }
    Ok(())
}

/// Lists every orthogonal matrix of size n, for n <= 4, by backtracking
/// over rows of odd weight with pairwise even overlap.
pub fn enumerate_orthogonal(n: usize) -> Result<Vec<OrthogonalMatrix>> {
    if n == 0 || n > 4 {
        return Err(Error::BadParameter(format!(
            "exhaustive orthogonal enumeration supports 1 <= n <= 4, got {n}"
        )));
    }
    let candidates: Vec<u32> = (1..(1u32 << n))
        .filter(|v| v.count_ones() % 2 == 1)
        .collect();
    let mut out = Vec::new();
    enumerate_rows(n, &candidates, &mut Vec::new(), &mut out)?;
    Ok(out)
}

/// The closed-form count 2^(k^2) * prod_{i=1..k} (2^(2i) - 1) with
/// k = floor(n/2), offered for comparison against direct enumeration.
pub fn orthogonal_group_order_formula(n: usize) -> BigUint {
    let k = n / 2;
    let mut order = BigUint::from(1u32) << (k * k);
    for i in 1..=k {
        order *= (BigUint::from(1u32) << (2 * i)) - BigUint::from(1u32);
    }
    order
}

/// The outcome of splitting a self-dual generator matrix into
/// systematic form (I | X): the orthogonal right half together with the
/// column permutation that was applied. Column j of the permuted
/// matrix is column `column_permutation[j]` of the original.
#[derive(Clone, Debug)]
pub struct SelfDualSplit {
    pub x: OrthogonalMatrix,
    pub column_permutation: Vec<usize>,
}

/// Extracts an orthogonal matrix from a self-dual code's generator.
///
/// The generator must be k x 2k with G G^T = 0 and independent rows.
/// After row reduction, moving the pivot columns to the front yields
/// (I | X), and self-duality forces X X^T = I.
pub fn orthogonal_from_selfdual(g: &BitMatrix) -> Result<SelfDualSplit> {
    let k = g.rows();
    if k == 0 || g.cols() != 2 * k {
        return Err(Error::BadParameter(format!(
            "a self-dual generator must be k x 2k with k >= 1, got {}x{}",
            k,
            g.cols()
        )));
    }
    let gram = g.multiply(&g.transpose())?;
    if !gram.is_zero() {
        return Err(Error::BadParameter(
            "generator is not self-orthogonal: GG^T has a nonzero entry".into(),
        ));
    }
    let (reduced, pivots, rank) = g.rref();
    if rank < k {
        return Err(Error::BadParameter(format!(
            "generator rows are dependent: rank {rank} < {k}"
        )));
    }
    let mut column_permutation = pivots.clone();
    let pivot_set: Vec<bool> = {
        let mut s = vec![false; 2 * k];
        for &p in &pivots {
            s[p] = true;
        }
        s
    };
    for c in 0..2 * k {
        if !pivot_set[c] {
            column_permutation.push(c);
        }
    }
    let free_cols: Vec<usize> = column_permutation[k..].to_vec();
    let x = reduced.submatrix_cols(&free_cols);
    Ok(SelfDualSplit {
        x: OrthogonalMatrix::new(x)?,
        column_permutation,
    })
}

/// Builds the self-dual code generated by (I | X).
pub fn selfdual_from_orthogonal(x: &OrthogonalMatrix) -> Result<LinearCode> {
    let n = x.n();
    let g = BitMatrix::identity(n).augment_columns(x.matrix())?;
    LinearCode::from_matrix(&g)
}

/// The code spanned by a subset of rows of an orthogonal matrix. Such
/// a code has identity Gram matrix, hence is always LCD.
pub fn lcd_from_orthogonal_rows(q: &OrthogonalMatrix, rows: &[usize]) -> Result<LinearCode> {
    if rows.is_empty() {
        return Err(Error::BadParameter(
            "row subset must be nonempty; the zero code needs no witness rows".into(),
        ));
    }
    let mut seen = vec![false; q.n()];
    for &r in rows {
        if r >= q.n() {
            return Err(Error::BadParameter(format!(
                "row index {r} out of range for a {} x {} matrix",
                q.n(),
                q.n()
            )));
        }
        if seen[r] {
            return Err(Error::BadParameter(format!("row index {r} repeated")));
        }
        seen[r] = true;
    }
    let sub = q.matrix().row_submatrix(rows)?;
    let code = LinearCode::from_matrix(&sub)?;
    debug_assert!(code.is_lcd());
    Ok(code)
}

/// Builds a code from a generator whose Gram matrix equals J - I (all
/// ones off the diagonal, zero on it). Such a code is LCD exactly when
/// the number of rows is even, so odd row counts are rejected.
pub fn lcd_from_gram_j_minus_i(g: &BitMatrix) -> Result<LinearCode> {
    let k = g.rows();
    if k == 0 {
        return Err(Error::BadParameter("generator must have at least one row".into()));
    }
    if k % 2 != 0 {
        return Err(Error::BadParameter(format!(
            "Gram matrix J - I of odd order {k} is singular, so the code cannot be LCD"
        )));
    }
    let gram = g.multiply(&g.transpose())?;
    let expected = BitMatrix::all_ones(k).add(&BitMatrix::identity(k))?;
    if gram != expected {
        return Err(Error::BadParameter(
            "Gram matrix of the generator is not J - I".into(),
        ));
    }
    let code = LinearCode::from_matrix(g)?;
    debug_assert!(code.is_lcd());
    Ok(code)
}

/// A 2-design: v points, b blocks of a common size, every point on r
/// blocks and every pair of points on lambda blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Design {
    v: usize,
    blocks: Vec<Vec<usize>>,
    r: usize,
    block_size: usize,
    lambda: usize,
}

impl Design {
    /// Validates the defining regularity conditions and the standard
    /// counting identities vr = bk and lambda(v-1) = r(k-1).
    pub fn new(v: usize, blocks: Vec<Vec<usize>>) -> Result<Design> {
        if v < 2 {
            return Err(Error::BadParameter("a 2-design needs at least two points".into()));
        }
        if blocks.is_empty() {
            return Err(Error::BadParameter("a design needs at least one block".into()));
        }
        let block_size = blocks[0].len();
        if block_size < 2 {
            return Err(Error::BadParameter(
                "blocks must contain at least two points".into(),
            ));
        }
        let mut replication = vec![0usize; v];
        let mut pair_counts: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for (bi, block) in blocks.iter().enumerate() {
            if block.len() != block_size {
                return Err(Error::BadParameter(format!(
                    "block {bi} has size {}, expected uniform size {block_size}",
                    block.len()
                )));
            }
            let mut sorted = block.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != block.len() {
                return Err(Error::BadParameter(format!("block {bi} repeats a point")));
            }
            for &p in block {
                if p >= v {
                    return Err(Error::BadParameter(format!(
                        "block {bi} mentions point {p}, but there are only {v} points"
                    )));
                }
                replication[p] += 1;
            }
            for i in 0..sorted.len() {
                for j in i + 1..sorted.len() {
                    *pair_counts.entry((sorted[i], sorted[j])).or_insert(0) += 1;
                }
            }
        }
        let r = replication[0];
        if replication.iter().any(|&c| c != r) {
            return Err(Error::BadParameter(
                "replication number is not uniform across points".into(),
            ));
        }
        if pair_counts.len() != v * (v - 1) / 2 {
            return Err(Error::BadParameter(
                "some pair of points lies on no block".into(),
            ));
        }
        let lambda = *pair_counts.values().next().unwrap();
        if pair_counts.values().any(|&c| c != lambda) {
            return Err(Error::BadParameter(
                "pair coverage is not uniform across point pairs".into(),
            ));
        }
        let b = blocks.len();
        if v * r != b * block_size || lambda * (v - 1) != r * (block_size - 1) {
            return Err(Error::BadParameter(
                "design counts violate the standard identities".into(),
            ));
        }
        Ok(Design {
            v,
            blocks,
            r,
            block_size,
            lambda,
        })
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn b(&self) -> usize {
        self.blocks.len()
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn block_size(&self) -> usize {
        self.block_size
    }

    pub fn lambda(&self) -> usize {
        self.lambda
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// The v x b point-block incidence matrix.
    pub fn incidence_matrix(&self) -> BitMatrix {
        let mut m = BitMatrix::zero(self.v, self.blocks.len());
        for (j, block) in self.blocks.iter().enumerate() {
            for &p in block {
                m.set(p, j, true);
            }
        }
        m
    }

    /// Parses the design file format: a `v b` header line followed by
    /// b lines listing the points of each block. Blank lines and lines
    /// starting with `#` are skipped.
    pub fn read_from<R: BufRead>(reader: R) -> Result<Design> {
        let mut header: Option<(usize, usize)> = None;
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (idx, line) in reader.lines().enumerate() {
            let line = line?;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = trimmed.split_whitespace().collect();
            match header {
                None => {
                    if fields.len() != 2 {
                        return Err(Error::Parse {
                            line: idx + 1,
                            msg: "header must be two integers: v b".into(),
                        });
                    }
                    let v = fields[0].parse().map_err(|_| Error::Parse {
                        line: idx + 1,
                        msg: format!("bad point count {:?}", fields[0]),
                    })?;
                    let b = fields[1].parse().map_err(|_| Error::Parse {
                        line: idx + 1,
                        msg: format!("bad block count {:?}", fields[1]),
                    })?;
                    header = Some((v, b));
                }
                Some((_, b)) => {
                    if blocks.len() == b {
                        return Err(Error::Parse {
                            line: idx + 1,
                            msg: format!("more than the declared {b} blocks"),
                        });
                    }
                    let mut block = Vec::with_capacity(fields.len());
                    for f in fields {
                        block.push(f.parse().map_err(|_| Error::Parse {
                            line: idx + 1,
                            msg: format!("bad point index {f:?}"),
                        })?);
                    }
                    blocks.push(block);
                }
            }
        }
        let (v, b) = header.ok_or(Error::Parse {
            line: 0,
            msg: "empty design file".into(),
        })?;
        if blocks.len() != b {
            return Err(Error::Parse {
                line: 0,
                msg: format!("declared {b} blocks but found {}", blocks.len()),
            });
        }
        Design::new(v, blocks)
    }

    pub fn load<P: AsRef<Path>>(path: P) -> Result<Design> {
        Design::read_from(BufReader::new(File::open(path)?))
    }
}

/// The incidence code of a design together with the audit of the
/// claimed distance bound 2(r - lambda).
#[derive(Clone, Debug)]
pub struct BibdCode {
    pub code: LinearCode,
    pub distance: usize,
    pub claimed_distance_bound: usize,
    pub claim_met: bool,
}

/// Builds the binary code spanned by the rows of the incidence matrix.
///
/// The Gram determinant equals rk(r - lambda) mod 2, so the code is
/// LCD exactly when r, the block size, and r - lambda are all odd;
/// otherwise the offending even factor is reported. The measured
/// minimum distance is compared against the claimed lower bound
/// 2(r - lambda), which concrete designs are known to violate.
pub fn bibd_code(design: &Design) -> Result<BibdCode> {
    let r = design.r();
    let k = design.block_size();
    let lambda = design.lambda();
    if r <= lambda {
        return Err(Error::BadParameter(format!(
            "replication r = {r} must exceed lambda = {lambda}"
        )));
    }
    let diff = r - lambda;
    if r % 2 == 0 {
        return Err(Error::BadParameter(format!(
            "incidence code is not LCD: replication number r = {r} is even"
        )));
    }
    if k % 2 == 0 {
        return Err(Error::BadParameter(format!(
            "incidence code is not LCD: block size k = {k} is even"
        )));
    }
    if diff % 2 == 0 {
        return Err(Error::BadParameter(format!(
            "incidence code is not LCD: r - lambda = {diff} is even"
        )));
    }
    let code = LinearCode::from_matrix(&design.incidence_matrix())?;
    if code.k() != design.v() {
        return Err(Error::BadParameter(format!(
            "incidence matrix rank {} is below the point count {}",
            code.k(),
            design.v()
        )));
    }
    debug_assert!(code.is_lcd());
    let distance = code.minimum_distance()?;
    let claimed_distance_bound = 2 * diff;
    Ok(BibdCode {
        code,
        distance,
        claim_met: distance >= claimed_distance_bound,
        claimed_distance_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn hamming_x() -> BitMatrix {
        BitMatrix::all_ones(4).add(&BitMatrix::identity(4)).unwrap()
    }

    fn hamming_sd_generator() -> BitMatrix {
        BitMatrix::identity(4).augment_columns(&hamming_x()).unwrap()
    }

    #[test]
    fn identity_is_orthogonal() {
        assert!(is_orthogonal(&BitMatrix::identity(5)).unwrap());
    }

    #[test]
    fn j_minus_i_is_orthogonal_exactly_in_even_dimensions() {
        for n in 2..9 {
            let m = BitMatrix::all_ones(n).add(&BitMatrix::identity(n)).unwrap();
            assert_eq!(is_orthogonal(&m).unwrap(), n % 2 == 0, "n = {n}");
        }
    }

    #[test]
    fn non_square_orthogonality_is_an_error() {
        assert!(is_orthogonal(&BitMatrix::zero(2, 3)).is_err());
    }

    #[test]
    fn transvection_by_all_ones_vector() {
        let mut u = BitMatrix::zero(1, 4);
        for j in 0..4 {
            u.set(0, j, true);
        }
        let t = transvection_matrix(&u).unwrap();
        let mut e1 = BitMatrix::zero(1, 4);
        e1.set(0, 0, true);
        let image = e1.multiply(t.matrix()).unwrap();
        let parsed = BitMatrix::parse_rows(&["0111"]).unwrap();
        assert_eq!(image, parsed);
    }

    #[test]
    fn transvection_rejects_wrong_weight() {
        let u = BitMatrix::parse_rows(&["110000"]).unwrap();
        assert!(transvection_matrix(&u).is_err());
        let u = BitMatrix::parse_rows(&["111110"]).unwrap();
        assert!(transvection_matrix(&u).is_err());
    }

    #[test]
    fn random_walks_stay_orthogonal() {
        for n in [4usize, 5, 7, 9, 12] {
            for seed in 0..40u64 {
                let q = random_orthogonal(n, seed, default_walk_length(n)).unwrap();
                assert!(is_orthogonal(q.matrix()).unwrap());
            }
        }
    }

    #[test]
    fn random_walk_is_seed_deterministic() {
        let a = random_orthogonal(6, 99, 48).unwrap();
        let b = random_orthogonal(6, 99, 48).unwrap();
        assert_eq!(a, b);
        let c = random_orthogonal(6, 100, 48).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn random_walk_rejects_small_sizes() {
        for n in 0..4 {
            assert!(random_orthogonal(n, 1, 8).is_err());
        }
    }

    #[test]
    fn enumeration_counts_small_sizes() {
        assert_eq!(enumerate_orthogonal(1).unwrap().len(), 1);
        assert_eq!(enumerate_orthogonal(2).unwrap().len(), 2);
        assert_eq!(enumerate_orthogonal(3).unwrap().len(), 6);
        assert_eq!(enumerate_orthogonal(4).unwrap().len(), 48);
        assert!(enumerate_orthogonal(5).is_err());
    }

    #[test]
    fn enumeration_is_duplicate_free_and_closed() {
        let group: Vec<_> = enumerate_orthogonal(3).unwrap();
        let set: HashSet<_> = group.iter().map(|q| q.matrix().clone()).collect();
        assert_eq!(set.len(), group.len());
        for a in &group {
            for b in &group {
                let prod = a.matrix().multiply(b.matrix()).unwrap();
                assert!(set.contains(&prod));
            }
        }
    }

    #[test]
    fn order_formula_matches_enumeration_only_for_odd_sizes() {
        assert_eq!(orthogonal_group_order_formula(1), BigUint::from(1u32));
        assert_eq!(orthogonal_group_order_formula(3), BigUint::from(6u32));
        assert_eq!(orthogonal_group_order_formula(2), BigUint::from(6u32));
        assert_eq!(orthogonal_group_order_formula(4), BigUint::from(720u32));
        assert_ne!(
            orthogonal_group_order_formula(2),
            BigUint::from(enumerate_orthogonal(2).unwrap().len() as u32)
        );
        assert_ne!(
            orthogonal_group_order_formula(4),
            BigUint::from(enumerate_orthogonal(4).unwrap().len() as u32)
        );
    }

    #[test]
    fn walk_samples_land_inside_the_enumerated_group() {
        let group: HashSet<_> = enumerate_orthogonal(4)
            .unwrap()
            .into_iter()
            .map(OrthogonalMatrix::into_matrix)
            .collect();
        for seed in 0..25u64 {
            let q = random_orthogonal(4, seed, 32).unwrap();
            assert!(group.contains(q.matrix()));
        }
    }

    #[test]
    fn selfdual_split_recovers_an_orthogonal_matrix() {
        let g = hamming_sd_generator();
        let split = orthogonal_from_selfdual(&g).unwrap();
        assert_eq!(split.x.n(), 4);
        assert_eq!(split.column_permutation, vec![0, 1, 2, 3, 4, 5, 6, 7]);
        assert_eq!(*split.x.matrix(), hamming_x());
    }

    #[test]
    fn selfdual_split_records_a_nontrivial_permutation() {
        let g = hamming_sd_generator();
        let perm = [4usize, 0, 1, 5, 2, 6, 3, 7];
        let shuffled = g.permute_columns(&perm).unwrap();
        let split = orthogonal_from_selfdual(&shuffled).unwrap();
        assert!(is_orthogonal(split.x.matrix()).unwrap());
        let mut cols = split.column_permutation.clone();
        assert_eq!(cols.len(), 8);
        cols.sort_unstable();
        assert_eq!(cols, (0..8).collect::<Vec<_>>());
        let code = selfdual_from_orthogonal(&split.x);
        let code = code.unwrap();
        assert!(code.is_self_dual());
    }

    #[test]
    fn selfdual_split_rejects_non_selfdual_input() {
        let g = BitMatrix::parse_rows(&["1110", "0101"]).unwrap();
        assert!(orthogonal_from_selfdual(&g).unwrap_err().to_string().contains("nonzero"));
        let dependent = BitMatrix::parse_rows(&["1100", "1100"]).unwrap();
        assert!(orthogonal_from_selfdual(&dependent).is_err());
        let wrong_shape = BitMatrix::parse_rows(&["110000", "001100"]).unwrap();
        assert!(orthogonal_from_selfdual(&wrong_shape).is_err());
    }

    #[test]
    fn selfdual_from_orthogonal_builds_a_self_dual_code() {
        for seed in 0..5u64 {
            let q = random_orthogonal(5, seed, 40).unwrap();
            let code = selfdual_from_orthogonal(&q).unwrap();
            assert_eq!((code.n(), code.k()), (10, 5));
            assert!(code.is_self_dual());
            assert!(!code.is_lcd());
        }
    }

    #[test]
    fn orthogonal_row_subsets_are_lcd() {
        for seed in 0..10u64 {
            let q = random_orthogonal(6, seed, 48).unwrap();
            for rows in [vec![0], vec![1, 3], vec![0, 2, 4, 5], (0..6).collect()] {
                let code = lcd_from_orthogonal_rows(&q, &rows).unwrap();
                assert!(code.is_lcd());
                assert_eq!(code.k(), rows.len());
                assert_eq!(code.n(), 6);
            }
        }
    }

    #[test]
    fn orthogonal_row_subset_validation() {
        let q = random_orthogonal(4, 7, 32).unwrap();
        assert!(lcd_from_orthogonal_rows(&q, &[]).is_err());
        assert!(lcd_from_orthogonal_rows(&q, &[4]).is_err());
        assert!(lcd_from_orthogonal_rows(&q, &[1, 1]).is_err());
    }

    #[test]
    fn gram_j_minus_i_accepts_even_row_counts() {
        let g = BitMatrix::parse_rows(&["110", "011"]).unwrap();
        let gram = g.multiply(&g.transpose()).unwrap();
        let expected = BitMatrix::all_ones(2).add(&BitMatrix::identity(2)).unwrap();
        assert_eq!(gram, expected);
        let code = lcd_from_gram_j_minus_i(&g).unwrap();
        assert!(code.is_lcd());
        assert_eq!((code.n(), code.k()), (3, 2));
    }

    #[test]
    fn gram_j_minus_i_rejects_odd_and_mismatched() {
        let odd = BitMatrix::parse_rows(&["110", "011", "101"]).unwrap();
        let err = lcd_from_gram_j_minus_i(&odd).unwrap_err();
        assert!(err.to_string().contains("odd"));
        let mismatched = BitMatrix::parse_rows(&["10", "01"]).unwrap();
        assert!(lcd_from_gram_j_minus_i(&mismatched).is_err());
    }

    fn fano() -> Design {
        Design::new(
            7,
            vec![
                vec![0, 1, 2],
                vec![0, 3, 4],
                vec![0, 5, 6],
                vec![1, 3, 5],
                vec![1, 4, 6],
                vec![2, 3, 6],
                vec![2, 4, 5],
            ],
        )
        .unwrap()
    }

    fn design_6_3_2() -> Design {
        Design::new(
            6,
            vec![
                vec![4, 0, 1],
                vec![0, 1, 2],
                vec![1, 2, 3],
                vec![2, 3, 4],
                vec![3, 4, 0],
                vec![5, 0, 2],
                vec![5, 1, 3],
                vec![5, 2, 4],
                vec![5, 3, 0],
                vec![5, 4, 1],
            ],
        )
        .unwrap()
    }

    #[test]
    fn fano_parameters() {
        let d = fano();
        assert_eq!((d.v(), d.b(), d.r(), d.block_size(), d.lambda()), (7, 7, 3, 3, 1));
    }

    #[test]
    fn design_validation_rejects_irregular_inputs() {
        assert!(Design::new(4, vec![vec![0, 1], vec![2, 3]]).is_err());
        assert!(Design::new(3, vec![vec![0, 1], vec![1, 2], vec![0, 2], vec![0, 1]]).is_err());
        assert!(Design::new(3, vec![vec![0, 1, 5]]).is_err());
        assert!(Design::new(3, vec![vec![0, 0, 1]]).is_err());
        assert!(Design::new(3, vec![vec![0, 1, 2], vec![0, 1]]).is_err());
    }

    #[test]
    fn triangle_design_is_valid() {
        let d = Design::new(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        assert_eq!((d.r(), d.lambda()), (2, 1));
    }

    #[test]
    fn fano_incidence_code_is_rejected_for_parity() {
        let err = bibd_code(&fano()).unwrap_err();
        assert!(err.to_string().contains("r - lambda = 2 is even"), "{err}");
    }

    #[test]
    fn design_6_3_2_gives_a_short_distance_lcd_code() {
        let out = bibd_code(&design_6_3_2()).unwrap();
        assert_eq!((out.code.n(), out.code.k()), (10, 6));
        assert!(out.code.is_lcd());
        assert_eq!(out.distance, 3);
        assert_eq!(out.claimed_distance_bound, 6);
        assert!(!out.claim_met);
    }

    #[test]
    fn biplane_code_has_unit_distance() {
        let blocks: Vec<Vec<usize>> = (0..11)
            .map(|i| [1usize, 3, 4, 5, 9].iter().map(|&x| (x + i) % 11).collect())
            .collect();
        let d = Design::new(11, blocks).unwrap();
        assert_eq!((d.r(), d.block_size(), d.lambda()), (5, 5, 2));
        let out = bibd_code(&d).unwrap();
        assert_eq!((out.code.n(), out.code.k()), (11, 11));
        assert_eq!(out.distance, 1);
        assert!(!out.claim_met);
    }

    #[test]
    fn design_file_round_trip_of_text() {
        let text = "# triangle\n3 3\n0 1\n1 2\n0 2\n";
        let d = Design::read_from(text.as_bytes()).unwrap();
        assert_eq!(d.v(), 3);
        assert_eq!(d.b(), 3);
    }

    #[test]
    fn design_file_rejects_malformed_input() {
        assert!(Design::read_from("".as_bytes()).is_err());
        assert!(Design::read_from("3\n0 1\n".as_bytes()).is_err());
        assert!(Design::read_from("3 2\n0 1\n".as_bytes()).is_err());
        assert!(Design::read_from("3 1\n0 x\n".as_bytes()).is_err());
        assert!(Design::read_from("3 1\n0 1\n1 2\n".as_bytes()).is_err());
    }

    #[test]
    fn incidence_matrix_matches_blocks() {
        let d = fano();
        let m = d.incidence_matrix();
        assert_eq!((m.rows(), m.cols()), (7, 7));
        for (j, block) in d.blocks().iter().enumerate() {
            for p in 0..7 {
                assert_eq!(m.get(p, j), block.contains(&p));
            }
        }
    }
}
