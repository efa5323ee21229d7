//! Lower-bound tables for the largest LCD dimension at a given length
//! and distance target: exhaustive enumeration at short lengths, a
//! randomized search portfolio above them, verified persistent records,
//! and the command line front end.

mod cli;

pub use cli::cli_main;

use std::collections::{BTreeMap, HashMap};
use std::env;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::sync::{Mutex, OnceLock};
use std::time::{SystemTime, UNIX_EPOCH};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::codes::LinearCode;
use crate::construct::{
    default_walk_length, lcd_from_orthogonal_rows, orthogonal_from_selfdual, random_orthogonal,
    OrthogonalMatrix,
};
use crate::gf2::BitMatrix;
use crate::{Error, Result};

/// Longest length at which the exhaustive subspace sweep is allowed.
pub const EXHAUSTIVE_CAP: usize = 9;

/// Longest length the randomized search accepts.
pub const SEARCH_CAP: usize = 30;

/// How a recorded code was found.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    OrthogonalRows,
    SelfDual,
    Bibd,
    Gray,
    Combinator,
    Exhaustive,
}

impl Provenance {
    pub fn as_str(&self) -> &'static str {
        match self {
            Provenance::OrthogonalRows => "orthogonal-rows",
            Provenance::SelfDual => "self-dual",
            Provenance::Bibd => "bibd",
            Provenance::Gray => "gray",
            Provenance::Combinator => "combinator",
            Provenance::Exhaustive => "exhaustive",
        }
    }

    pub fn parse(s: &str) -> Result<Provenance> {
        Ok(match s {
            "orthogonal-rows" => Provenance::OrthogonalRows,
            "self-dual" => Provenance::SelfDual,
            "bibd" => Provenance::Bibd,
            "gray" => Provenance::Gray,
            "combinator" => Provenance::Combinator,
            "exhaustive" => Provenance::Exhaustive,
            _ => {
                return Err(Error::BadParameter(format!(
                    "unknown provenance tag {s:?}"
                )))
            }
        })
    }
}

/// A witnessed lower bound: an LCD code of length n and dimension k
/// whose minimum distance is at least d.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundRecord {
    pub n: usize,
    pub d: usize,
    pub k: usize,
    pub generator: BitMatrix,
    pub provenance: Provenance,
    pub seed: u64,
    pub verified: bool,
}

impl BoundRecord {
    /// Re-checks the witness: the generator must span a k-dimensional
    /// LCD code of length n with minimum distance at least d.
    pub fn verify(&self) -> bool {
        if self.generator.cols() != self.n || self.generator.rows() != self.k {
            return false;
        }
        if self.k == 0 {
            return true;
        }
        let Ok(code) = LinearCode::from_matrix(&self.generator) else {
            return false;
        };
        code.k() == self.k
            && code.is_lcd()
            && code.minimum_distance().map(|dd| dd >= self.d).unwrap_or(false)
    }
}

/// Directory holding the bundled code and design fixtures. The
/// `LCDKIT_DATA` environment variable overrides the default, which is
/// the `data` directory next to the crate manifest.
pub fn fixtures_dir() -> PathBuf {
    match env::var_os("LCDKIT_DATA") {
        Some(p) => PathBuf::from(p),
        None => Path::new(env!("CARGO_MANIFEST_DIR")).join("data"),
    }
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E3779B97F4A7C15);
    x ^= x >> 30;
    x = x.wrapping_mul(0xBF58476D1CE4E5B9);
    x ^= x >> 27;
    x = x.wrapping_mul(0x94D049BB133111EB);
    x ^= x >> 31;
    x
}

/// A stable per-cell seed derived from the master seed and the cell
/// coordinates, independent of hasher internals and iteration order.
pub fn cell_seed(master: u64, n: usize, d: usize) -> u64 {
    splitmix64(splitmix64(master ^ (n as u64)) ^ ((d as u64).rotate_left(32)))
}

type SweepRow = std::sync::Arc<Vec<(usize, Vec<u16>)>>;

static SWEEPS: OnceLock<Mutex<HashMap<usize, SweepRow>>> = OnceLock::new();

fn check_exhaustive_n(n: usize) -> Result<()> {
    if n == 0 || n > EXHAUSTIVE_CAP {
        return Err(Error::BadParameter(format!(
            "exhaustive enumeration supports 1 <= n <= {EXHAUSTIVE_CAP}, got {n}"
        )));
    }
    Ok(())
}

fn lcd_sweep_cached(n: usize) -> SweepRow {
    let lock = SWEEPS.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(row) = lock.lock().unwrap().get(&n) {
        return row.clone();
    }
    let row: SweepRow = std::sync::Arc::new(lcd_sweep(n));
    lock.lock().unwrap().entry(n).or_insert_with(|| row.clone());
    row
}

/// For each dimension k, the best minimum distance over all LCD codes
/// of length n and dimension k, together with a witness in reduced
/// row-echelon form. Every RREF matrix is visited exactly once per
/// pivot-column pattern, with a Gram-determinant filter before the
/// distance enumeration.
fn lcd_sweep(n: usize) -> Vec<(usize, Vec<u16>)> {
    let mut out = vec![(0usize, Vec::new()); n];
    for k in 1..=n {
        let mut best_d = 0usize;
        let mut best_rows: Vec<u16> = Vec::new();
        let mut pivots = Vec::with_capacity(k);
        sweep_pivots(n, k, 0, &mut pivots, &mut best_d, &mut best_rows);
        out[k - 1] = (best_d, best_rows);
    }
    out
}

fn sweep_pivots(
    n: usize,
    k: usize,
    start: usize,
    pivots: &mut Vec<usize>,
    best_d: &mut usize,
    best_rows: &mut Vec<u16>,
) {
    if pivots.len() == k {
        sweep_free_cells(n, pivots, best_d, best_rows);
        return;
    }
    let remaining = k - pivots.len();
    for c in start..=(n - remaining) {
        pivots.push(c);
        sweep_pivots(n, k, c + 1, pivots, best_d, best_rows);
        pivots.pop();
    }
}

fn sweep_free_cells(n: usize, pivots: &[usize], best_d: &mut usize, best_rows: &mut Vec<u16>) {
    let pivot_mask: u16 = pivots.iter().fold(0, |m, &p| m | (1 << p));
    let mut cells: Vec<(usize, u16)> = Vec::new();
    for (i, &p) in pivots.iter().enumerate() {
        for c in (p + 1)..n {
            if (pivot_mask >> c) & 1 == 0 {
                cells.push((i, 1 << c));
            }
        }
    }
    let mut rows: Vec<u16> = pivots.iter().map(|&p| 1 << p).collect();
    let total: u64 = 1 << cells.len();
    let mut m: u64 = 0;
    loop {
        evaluate_candidate(&rows, best_d, best_rows);
        m += 1;
        if m == total {
            break;
        }
        let (row, bit) = cells[m.trailing_zeros() as usize];
        rows[row] ^= bit;
    }
}

fn evaluate_candidate(rows: &[u16], best_d: &mut usize, best_rows: &mut Vec<u16>) {
    let k = rows.len();
    let mut gram = [0u16; 16];
    for i in 0..k {
        let mut g = 0u16;
        for (j, &rj) in rows.iter().enumerate() {
            g |= (((rows[i] & rj).count_ones() & 1) as u16) << j;
        }
        gram[i] = g;
    }
    for col in 0..k {
        let mut piv = usize::MAX;
        for r in col..k {
            if (gram[r] >> col) & 1 == 1 {
                piv = r;
                break;
            }
        }
        if piv == usize::MAX {
            return;
        }
        gram.swap(col, piv);
        for r in (col + 1)..k {
            if (gram[r] >> col) & 1 == 1 {
                gram[r] ^= gram[col];
            }
        }
    }
    let floor = *best_d;
    let mut acc = 0u16;
    let mut min = usize::MAX;
    for m in 1u32..(1u32 << k) {
        acc ^= rows[m.trailing_zeros() as usize];
        let w = acc.count_ones() as usize;
        if w <= floor {
            return;
        }
        if w < min {
            min = w;
        }
    }
    *best_d = min;
    *best_rows = rows.to_vec();
}

fn witness_matrix(n: usize, rows: &[u16]) -> BitMatrix {
    let mut m = BitMatrix::zero(rows.len(), n);
    for (i, &r) in rows.iter().enumerate() {
        for j in 0..n {
            if (r >> j) & 1 == 1 {
                m.set(i, j, true);
            }
        }
    }
    m
}

/// The best minimum distance over all LCD codes of length n and
/// dimension k, by exhaustive enumeration. Requires n <= 9.
pub fn exhaustive_lcd_nk(n: usize, k: usize) -> Result<usize> {
    check_exhaustive_n(n)?;
    if k == 0 || k > n {
        return Err(Error::BadParameter(format!(
            "dimension must satisfy 1 <= k <= {n}, got {k}"
        )));
    }
    Ok(lcd_sweep_cached(n)[k - 1].0)
}

/// The largest dimension of an LCD code of length n with minimum
/// distance at least d, by exhaustive enumeration; 0 if none exists.
/// Requires n <= 9.
pub fn exhaustive_lck_nd(n: usize, d: usize) -> Result<usize> {
    check_exhaustive_n(n)?;
    if d == 0 || d > n {
        return Err(Error::BadParameter(format!(
            "distance target must satisfy 1 <= d <= {n}, got {d}"
        )));
    }
    let row = lcd_sweep_cached(n);
    Ok((1..=n).rev().find(|&k| row[k - 1].0 >= d).unwrap_or(0))
}

fn load_fixture_split(name: &str) -> Option<OrthogonalMatrix> {
    let path = fixtures_dir().join(name);
    let code = LinearCode::load(&path).ok()?;
    let split = orthogonal_from_selfdual(code.generator()).ok()?;
    Some(split.x)
}

const SELF_DUAL_FIXTURES: [&str; 2] = ["fixture_golay_sd.code", "fixture_hamming_sd.code"];

fn rows_as_u32(q: &OrthogonalMatrix) -> Vec<u32> {
    (0..q.n())
        .map(|i| {
            let mut r = 0u32;
            for j in 0..q.n() {
                if q.matrix().get(i, j) {
                    r |= 1 << j;
                }
            }
            r
        })
        .collect()
}

fn subset_distance_at_least(rows: &[u32], subset: &[usize], d: usize) -> bool {
    let k = subset.len();
    let mut acc = 0u32;
    for m in 1u32..(1u32 << k) {
        acc ^= rows[subset[m.trailing_zeros() as usize]];
        if (acc.count_ones() as usize) < d {
            return false;
        }
    }
    true
}

/// The largest subset of rows of an orthogonal matrix spanning a code
/// of minimum distance at least d. For matrices up to size 12 every
/// subset is tried; beyond that a seeded greedy pass over shuffled row
/// orders is used. The result may be empty.
pub fn best_orthogonal_row_subset(q: &OrthogonalMatrix, d: usize, seed: u64) -> Vec<usize> {
    let n = q.n();
    let rows = rows_as_u32(q);
    if n <= 12 {
        let mut best: Vec<usize> = Vec::new();
        for mask in 1u32..(1u32 << n) {
            let k = mask.count_ones() as usize;
            if k <= best.len() {
                continue;
            }
            let subset: Vec<usize> = (0..n).filter(|&i| (mask >> i) & 1 == 1).collect();
            if subset_distance_at_least(&rows, &subset, d) {
                best = subset;
            }
        }
        best
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut best: Vec<usize> = Vec::new();
        for _ in 0..8 {
            let mut order: Vec<usize> = (0..n).collect();
            order.shuffle(&mut rng);
            let mut chosen: Vec<usize> = Vec::new();
            for idx in order {
                chosen.push(idx);
                if !subset_distance_at_least(&rows, &chosen, d) {
                    chosen.pop();
                }
            }
            if chosen.len() > best.len() {
                best = chosen;
            }
        }
        best
    }
}

struct Candidate {
    code: LinearCode,
    provenance: Provenance,
}

fn offer(best: &mut Option<Candidate>, code: LinearCode, provenance: Provenance) {
    let improves = best.as_ref().map_or(true, |b| code.k() > b.code.k());
    if improves && code.k() > 0 {
        *best = Some(Candidate { code, provenance });
    }
}

fn pad_to_length(code: &LinearCode, n: usize) -> LinearCode {
    let mut out = code.clone();
    while out.n() < n {
        out = out.extend_zero_column();
    }
    out
}

fn record_code(code: &LinearCode) -> Result<LinearCode> {
    LinearCode::from_matrix(code.generator())
}

fn repetition_block_sum(n: usize, d: usize) -> Result<Option<LinearCode>> {
    let m = if d % 2 == 1 { d } else { d + 1 };
    if m > n {
        return Ok(None);
    }
    let t = n / m;
    let mut g = BitMatrix::zero(t, n);
    for i in 0..t {
        for j in 0..m {
            g.set(i, i * m + j, true);
        }
    }
    Ok(Some(LinearCode::from_matrix(&g)?))
}

fn even_weight_family(n: usize) -> Result<Option<LinearCode>> {
    let span = if n % 2 == 1 { n } else { n - 1 };
    if span < 2 {
        return Ok(None);
    }
    let mut g = BitMatrix::zero(span - 1, n);
    for i in 0..span - 1 {
        g.set(i, i, true);
        g.set(i, span - 1, true);
    }
    Ok(Some(LinearCode::from_matrix(&g)?))
}

fn search_cell(
    n: usize,
    d: usize,
    budget: u64,
    seed: u64,
    prior: &BTreeMap<(usize, usize), BoundRecord>,
) -> Result<BoundRecord> {
    if n == 0 || n > SEARCH_CAP {
        return Err(Error::BadParameter(format!(
            "search supports 1 <= n <= {SEARCH_CAP}, got {n}"
        )));
    }
    if d == 0 || d > n {
        return Err(Error::BadParameter(format!(
            "distance target must satisfy 1 <= d <= {n}, got {d}"
        )));
    }

    let finalize = |code: Option<Candidate>| -> Result<BoundRecord> {
        let (k, generator, provenance) = match code {
            Some(c) => (
                c.code.k(),
                record_code(&c.code)?.generator().clone(),
                c.provenance,
            ),
            None => (0, BitMatrix::zero(0, n), Provenance::Combinator),
        };
        let record = BoundRecord {
            n,
            d,
            k,
            generator,
            provenance,
            seed,
            verified: false,
        };
        if !record.verify() {
            return Err(Error::BadParameter(format!(
                "search produced an invalid witness for n = {n}, d = {d}"
            )));
        }
        Ok(BoundRecord {
            verified: true,
            ..record
        })
    };

    if n <= EXHAUSTIVE_CAP {
        let row = lcd_sweep_cached(n);
        let k = (1..=n).rev().find(|&k| row[k - 1].0 >= d).unwrap_or(0);
        let mut best = None;
        if k > 0 {
            let code = LinearCode::from_matrix(&witness_matrix(n, &row[k - 1].1))?;
            offer(&mut best, code, Provenance::Exhaustive);
        }
        return finalize(best);
    }

    let mut best: Option<Candidate> = None;

    if d == 1 {
        offer(&mut best, LinearCode::full_space(n)?, Provenance::Combinator);
        return finalize(best);
    }

    for (fi, name) in SELF_DUAL_FIXTURES.iter().enumerate() {
        if let Some(x) = load_fixture_split(name) {
            if x.n() <= n {
                let subset =
                    best_orthogonal_row_subset(&x, d, splitmix64(seed ^ (fi as u64 + 1)));
                if !subset.is_empty() {
                    let code = lcd_from_orthogonal_rows(&x, &subset)?;
                    offer(&mut best, pad_to_length(&code, n), Provenance::SelfDual);
                }
            }
        }
    }

    for n2 in (1..n).rev() {
        if let Some(r) = prior.get(&(n2, d)) {
            if r.k > 0 {
                let code = LinearCode::from_matrix(&r.generator)?;
                offer(&mut best, pad_to_length(&code, n), Provenance::Combinator);
            }
        }
    }

    for a in 1..n {
        let b = n - a;
        if let (Some(ra), Some(rb)) = (prior.get(&(a, d)), prior.get(&(b, d))) {
            if ra.k > 0 && rb.k > 0 {
                let ca = LinearCode::from_matrix(&ra.generator)?;
                let cb = LinearCode::from_matrix(&rb.generator)?;
                offer(
                    &mut best,
                    LinearCode::direct_sum(&ca, &cb)?,
                    Provenance::Combinator,
                );
            }
        }
    }

    for a in 2..=n / 2 {
        if n % a != 0 {
            continue;
        }
        let b = n / a;
        for ((_, d1), ra) in prior.range((a, 1)..=(a, a)) {
            if ra.k == 0 {
                continue;
            }
            for ((_, d2), rb) in prior.range((b, 1)..=(b, b)) {
                if rb.k == 0 || d1 * d2 < d {
                    continue;
                }
                let ca = LinearCode::from_matrix(&ra.generator)?;
                let cb = LinearCode::from_matrix(&rb.generator)?;
                offer(
                    &mut best,
                    LinearCode::kronecker_code(&ca, &cb)?,
                    Provenance::Combinator,
                );
            }
        }
    }

    if let Some(code) = repetition_block_sum(n, d)? {
        offer(&mut best, code, Provenance::Combinator);
    }
    if d == 2 {
        if let Some(code) = even_weight_family(n)? {
            offer(&mut best, code, Provenance::Combinator);
        }
    }

    for t in 0..budget {
        let walk_seed = splitmix64(seed ^ (0x1000 + t));
        let q = random_orthogonal(n, walk_seed, default_walk_length(n))?;
        let subset = best_orthogonal_row_subset(&q, d, splitmix64(seed ^ (0x2000 + t)));
        let needs_beating = best.as_ref().map_or(0, |b| b.code.k());
        if subset.len() > needs_beating {
            let code = lcd_from_orthogonal_rows(&q, &subset)?;
            offer(&mut best, code, Provenance::OrthogonalRows);
        }
    }

    finalize(best)
}

/// Searches for the largest LCD dimension achievable at length n with
/// minimum distance at least d, returning a verified witness record.
/// Below length 10 the answer is exact; above it the portfolio covers
/// fixture-derived orthogonal matrices, combinations of previously
/// found codes, elementary families, and seeded random orthogonal
/// walks, and the result is only a lower bound.
pub fn search_lck_lower(n: usize, d: usize, budget: u64, seed: u64) -> Result<BoundRecord> {
    search_cell(n, d, budget, seed, &BTreeMap::new())
}

/// A table of lower-bound records indexed by (length, distance).
#[derive(Clone, Debug)]
pub struct BoundTable {
    records: BTreeMap<(usize, usize), BoundRecord>,
    budget: u64,
    built_at: Option<String>,
}

impl BoundTable {
    /// Assembles a table from already-verified records.
    pub fn from_records(records: BTreeMap<(usize, usize), BoundRecord>, budget: u64) -> BoundTable {
        BoundTable {
            records,
            budget,
            built_at: None,
        }
    }

    pub fn records(&self) -> &BTreeMap<(usize, usize), BoundRecord> {
        &self.records
    }

    pub fn get(&self, n: usize, d: usize) -> Option<&BoundRecord> {
        self.records.get(&(n, d))
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    /// Wall-clock seconds since the epoch at build time. Present only
    /// on freshly built tables; never persisted, so that saved tables
    /// are byte-for-byte reproducible.
    pub fn built_at(&self) -> Option<&str> {
        self.built_at.as_deref()
    }

    /// Plain-text grid, one line per length, dimensions listed by
    /// ascending distance target.
    pub fn render_grid(&self) -> String {
        let mut out = String::new();
        let nmax = self.records.keys().map(|&(n, _)| n).max().unwrap_or(0);
        for n in 1..=nmax {
            let ks: Vec<String> = self
                .records
                .range((n, 1)..=(n, n))
                .map(|(_, r)| r.k.to_string())
                .collect();
            if !ks.is_empty() {
                out.push_str(&format!("{n}: {}\n", ks.join(" ")));
            }
        }
        out
    }

    pub fn write_to<W: Write>(&self, w: &mut W) -> Result<()> {
        writeln!(w, "# lcdkit lower-bound table")?;
        writeln!(w, "# budget {}", self.budget)?;
        for r in self.records.values() {
            writeln!(
                w,
                "{} {} {} {} {}",
                r.n,
                r.d,
                r.k,
                r.seed,
                r.provenance.as_str()
            )?;
            for i in 0..r.generator.rows() {
                let row: String = (0..r.n)
                    .map(|j| if r.generator.get(i, j) { '1' } else { '0' })
                    .collect();
                writeln!(w, "{row}")?;
            }
            writeln!(w, "%")?;
        }
        Ok(())
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let mut w = BufWriter::new(File::create(path)?);
        self.write_to(&mut w)
    }

    /// Parses a saved table and re-verifies every record; a record
    /// whose witness fails any check is rejected by name.
    pub fn read_from<R: BufRead>(reader: R) -> Result<BoundTable> {
        let mut records = BTreeMap::new();
        let mut budget = 0u64;
        let mut pending: Option<(BoundRecord, usize)> = None;
        for (idx, line) in reader.lines().enumerate() {
            let line = line?;
            let trimmed = line.trim();
            if trimmed.is_empty() {
                continue;
            }
            if let Some(rest) = trimmed.strip_prefix('#') {
                let fields: Vec<&str> = rest.split_whitespace().collect();
                if fields.len() == 2 && fields[0] == "budget" {
                    budget = fields[1].parse().map_err(|_| Error::Parse {
                        line: idx + 1,
                        msg: format!("bad budget value {:?}", fields[1]),
                    })?;
                }
                continue;
            }
            match pending.take() {
                None => {
                    let fields: Vec<&str> = trimmed.split_whitespace().collect();
                    if fields.len() != 5 {
                        return Err(Error::Parse {
                            line: idx + 1,
                            msg: "record header must be: n d k seed provenance".into(),
                        });
                    }
                    let parse_num = |s: &str| -> Result<usize> {
                        s.parse().map_err(|_| Error::Parse {
                            line: idx + 1,
                            msg: format!("bad number {s:?}"),
                        })
                    };
                    let n = parse_num(fields[0])?;
                    let d = parse_num(fields[1])?;
                    let k = parse_num(fields[2])?;
                    let seed: u64 = fields[3].parse().map_err(|_| Error::Parse {
                        line: idx + 1,
                        msg: format!("bad seed {:?}", fields[3]),
                    })?;
                    let provenance = Provenance::parse(fields[4]).map_err(|e| Error::Parse {
                        line: idx + 1,
                        msg: e.to_string(),
                    })?;
                    pending = Some((
                        BoundRecord {
                            n,
                            d,
                            k,
                            generator: BitMatrix::zero(0, n),
                            provenance,
                            seed,
                            verified: false,
                        },
                        0,
                    ));
                }
                Some((mut rec, rows_seen)) => {
                    if trimmed == "%" {
                        if rows_seen != rec.k {
                            return Err(Error::Parse {
                                line: idx + 1,
                                msg: format!(
                                    "record for n = {}, d = {} declares k = {} but has {} rows",
                                    rec.n, rec.d, rec.k, rows_seen
                                ),
                            });
                        }
                        if !rec.verify() {
                            return Err(Error::BadParameter(format!(
                                "record for n = {}, d = {} failed verification on load",
                                rec.n, rec.d
                            )));
                        }
                        rec.verified = true;
                        records.insert((rec.n, rec.d), rec);
                    } else {
                        if trimmed.len() != rec.n
                            || !trimmed.chars().all(|c| c == '0' || c == '1')
                        {
                            return Err(Error::Parse {
                                line: idx + 1,
                                msg: format!(
                                    "expected a row of {} binary digits or '%', got {trimmed:?}",
                                    rec.n
                                ),
                            });
                        }
                        let mut g = rec.generator.clone();
                        let parsed = BitMatrix::parse_rows(&[trimmed])?;
                        g = g.vstack(&parsed)?;
                        rec.generator = g;
                        pending = Some((rec, rows_seen + 1));
                    }
                }
            }
        }
        if pending.is_some() {
            return Err(Error::Parse {
                line: 0,
                msg: "unterminated record at end of table file".into(),
            });
        }
        Ok(BoundTable {
            records,
            budget,
            built_at: None,
        })
    }

    pub fn load(path: &Path) -> Result<BoundTable> {
        BoundTable::read_from(BufReader::new(File::open(path)?))
    }
}

/// Builds the full lower-bound table for lengths up to nmax, distance
/// targets up to dmax (or the length when absent), working upward in
/// length so that each cell's search can reuse the records below it.
/// Cells of equal length run in parallel; every cell seed is derived
/// stably from the master seed, so the result is reproducible.
pub fn build_lower_table(
    nmax: usize,
    dmax: Option<usize>,
    budget: u64,
    seed: u64,
) -> Result<BoundTable> {
    if nmax == 0 || nmax > 24 {
        return Err(Error::BadParameter(format!(
            "table building supports 1 <= nmax <= 24, got {nmax}"
        )));
    }
    let mut records: BTreeMap<(usize, usize), BoundRecord> = BTreeMap::new();
    for n in 1..=nmax {
        let dtop = dmax.unwrap_or(n).min(n);
        let cells: Vec<Result<BoundRecord>> = (1..=dtop)
            .collect::<Vec<_>>()
            .par_iter()
            .map(|&d| search_cell(n, d, budget, cell_seed(seed, n, d), &records))
            .collect();
        for cell in cells {
            let rec = cell?;
            records.insert((rec.n, rec.d), rec);
        }
    }
    let built_at = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|t| t.as_secs().to_string())
        .ok();
    Ok(BoundTable {
        records,
        budget,
        built_at,
    })
}
