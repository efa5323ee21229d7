//! Command line front end for the toolkit. Exit code 0 on success, 1
//! for domain failures (bad mathematics, unreadable files), 2 for
//! usage mistakes.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs::File;
use std::io::{BufReader, Write};
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use crate::codes::{read_matrix_file, LinearCode};
use crate::construct::{
    bibd_code, default_walk_length, orthogonal_from_selfdual, random_orthogonal, Design,
};
use crate::gf2::BitMatrix;
use crate::lpbound::{
    bound_scan_diagnostics, classical_lp_dimension_upper, emit_lp_table, lcd_dimension_upper,
};
use crate::ringrk::RkCode;
use crate::tables::{
    build_lower_table, exhaustive_lcd_nk, exhaustive_lck_nd, fixtures_dir, search_lck_lower,
    BoundTable,
};
use crate::Error;

#[derive(Parser)]
#[command(
    name = "lcdkit",
    version,
    about = "LCD code toolkit: LP dimension bounds, constructions, and bound tables"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Md,
}

#[derive(Subcommand)]
enum Cmd {
    /// Report whether a stored code is LCD, and its hull dimension
    CheckLcd { file: PathBuf },
    /// Print the minimum distance of a stored code
    Mindist { file: PathBuf },
    /// Compute the dual of a stored code
    Dual {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// LP upper bound on LCD dimension at length n and distance d
    LpBound {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        /// Print the classical Delsarte LP bound instead
        #[arg(long)]
        classical: bool,
        /// Show the per-dimension scan under both right-hand sides
        #[arg(long)]
        diagnostics: bool,
    },
    /// Emit the LP bound grid for all lengths up to nmax
    LpTable {
        #[arg(long)]
        nmax: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sample a random orthogonal matrix by a seeded walk
    SampleOrth {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long = "walk-len")]
        walk_len: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Split a self-dual generator into systematic form, reporting the
    /// orthogonal right half and the column permutation used
    FromSelfdual {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the incidence code of a 2-design and audit its distance
    Bibd {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Map a stored ring code to its binary Gray image
    Gray {
        #[arg(long)]
        k: usize,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search for a high-dimensional LCD code of length n with minimum
    /// distance at least d
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 40)]
        budget: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build and save the lower-bound table up to nmax
    BuildTable {
        #[arg(long)]
        nmax: usize,
        #[arg(long)]
        dmax: Option<usize>,
        #[arg(long, default_value_t = 40)]
        budget: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Exhaustive answers at short lengths: best distance for a
    /// dimension (--k) or best dimension for a distance target (--d)
    Exhaustive {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
    },
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type CliResult = Result<(), Failure>;

/// Runs the command line tool on the given argument list and returns
/// the process exit code.
pub fn cli_main<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    match run(cli.cmd) {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            2
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            1
        }
    }
}

/// Falls back to the fixtures directory for bare names that do not
/// resolve relative to the working directory.
fn resolve_input(path: &Path) -> PathBuf {
    if path.exists() {
        return path.to_path_buf();
    }
    let alt = fixtures_dir().join(path);
    if alt.exists() {
        alt
    } else {
        path.to_path_buf()
    }
}

fn load_code(path: &Path) -> Result<LinearCode, Error> {
    LinearCode::load(&resolve_input(path))
}

fn load_matrix(path: &Path) -> Result<BitMatrix, Error> {
    let f = File::open(resolve_input(path))?;
    read_matrix_file(BufReader::new(f))
}

fn render_matrix_file(m: &BitMatrix) -> String {
    let mut s = format!("{} {}\n", m.cols(), m.rows());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            s.push(if m.get(i, j) { '1' } else { '0' });
        }
        s.push('\n');
    }
    s
}

fn emit_text(out: Option<&Path>, content: &str) -> Result<(), Error> {
    match out {
        Some(p) => {
            std::fs::write(p, content)?;
            Ok(())
        }
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn emit_code(out: Option<&Path>, code: &LinearCode) -> Result<(), Error> {
    match out {
        Some(p) => code.save(p),
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            code.write_to(&mut lock)?;
            lock.flush()?;
            Ok(())
        }
    }
}

fn run(cmd: Cmd) -> CliResult {
    match cmd {
        Cmd::CheckLcd { file } => {
            let code = load_code(&file)?;
            if code.is_lcd() {
                println!("LCD, hull dim 0");
            } else {
                println!("not LCD, hull dim {}", code.hull_dimension());
            }
            Ok(())
        }
        Cmd::Mindist { file } => {
            let code = load_code(&file)?;
            println!("{}", code.minimum_distance()?);
            Ok(())
        }
        Cmd::Dual { input, out } => {
            let code = load_code(&input)?;
            emit_code(out.as_deref(), &code.dual())?;
            Ok(())
        }
        Cmd::LpBound {
            n,
            d,
            classical,
            diagnostics,
        } => {
            if diagnostics {
                let diag = bound_scan_diagnostics(n, d)?;
                print!("{}", diag.render());
                return Ok(());
            }
            if classical {
                println!("{}", classical_lp_dimension_upper(n, d)?);
                return Ok(());
            }
            let lcd = lcd_dimension_upper(n, d)?;
            match classical_lp_dimension_upper(n, d) {
                Ok(c) if c != lcd => println!("{lcd} (classical {c})"),
                Ok(_) => println!("{lcd}"),
                Err(Error::Unbounded) => println!("{lcd} (classical unbounded)"),
                Err(e) => return Err(e.into()),
            }
            Ok(())
        }
        Cmd::LpTable { nmax, format, out } => {
            let table = emit_lp_table(nmax)?;
            let text = match format {
                TableFormat::Csv => table.render_csv(),
                TableFormat::Md => table.render_markdown(),
            };
            emit_text(out.as_deref(), &text)?;
            Ok(())
        }
        Cmd::SampleOrth {
            n,
            seed,
            walk_len,
            out,
        } => {
            let q = random_orthogonal(n, seed, walk_len.unwrap_or_else(|| default_walk_length(n)))?;
            emit_text(out.as_deref(), &render_matrix_file(q.matrix()))?;
            Ok(())
        }
        Cmd::FromSelfdual { input, out } => {
            let g = load_matrix(&input)?;
            let split = orthogonal_from_selfdual(&g)?;
            let perm: Vec<String> = split
                .column_permutation
                .iter()
                .map(|c| c.to_string())
                .collect();
            println!("column permutation: {}", perm.join(" "));
            emit_text(out.as_deref(), &render_matrix_file(split.x.matrix()))?;
            Ok(())
        }
        Cmd::Bibd { input, out } => {
            let design = Design::load(resolve_input(&input))?;
            let result = bibd_code(&design)?;
            println!(
                "[{},{}] incidence code, distance {}",
                result.code.n(),
                result.code.k(),
                result.distance
            );
            println!(
                "claimed bound 2(r - lambda) = {}: {}",
                result.claimed_distance_bound,
                if result.claim_met { "met" } else { "violated" }
            );
            if let Some(p) = out {
                result.code.save(&p)?;
            }
            Ok(())
        }
        Cmd::Gray { k, input, out } => {
            let ring = RkCode::load(resolve_input(&input))?;
            if ring.k() != k {
                return Err(Failure::Domain(Error::BadParameter(format!(
                    "--k {k} does not match the file's ring index {}",
                    ring.k()
                ))));
            }
            let image = ring.gray_image()?;
            emit_code(out.as_deref(), &image)?;
            Ok(())
        }
        Cmd::Search {
            n,
            d,
            budget,
            seed,
            out,
        } => {
            let rec = search_lck_lower(n, d, budget, seed)?;
            println!(
                "n={} d={} k={} provenance={} seed={}",
                rec.n,
                rec.d,
                rec.k,
                rec.provenance.as_str(),
                rec.seed
            );
            if let Some(p) = out {
                let mut records = BTreeMap::new();
                records.insert((rec.n, rec.d), rec);
                BoundTable::from_records(records, budget).save(&p)?;
            }
            Ok(())
        }
        Cmd::BuildTable {
            nmax,
            dmax,
            budget,
            seed,
            out,
        } => {
            let table = build_lower_table(nmax, dmax, budget, seed)?;
            table.save(&out)?;
            print!("{}", table.render_grid());
            println!("{} records written", table.records().len());
            Ok(())
        }
        Cmd::Exhaustive { n, k, d } => match (k, d) {
            (Some(k), None) => {
                println!("{}", exhaustive_lcd_nk(n, k)?);
                Ok(())
            }
            (None, Some(d)) => {
                println!("{}", exhaustive_lck_nd(n, d)?);
                Ok(())
            }
            _ => Err(Failure::Usage(
                "pass exactly one of --k or --d".into(),
            )),
        },
    }
}
