//! Binary LCD (linear complementary dual) codes: exact linear-programming
//! upper bounds on their dimension, constructions from orthogonal matrices,
//! self-dual codes, block designs and Gray maps over the rings `R_k`, and a
//! persistent table of best-known lower bounds.
//!
//! The crate is organized around six subsystems:
//!
//! - [`gf2`] — dense bit-packed linear algebra over GF(2)
//! - [`codes`] — binary linear codes: duals, hulls, LCD tests, distances,
//!   weight distributions and the MacWilliams transform
//! - [`lpbound`] — Krawtchouk polynomials, an exact rational simplex solver,
//!   and the LCD-specific and classical LP dimension bounds
//! - [`construct`] — LCD code factories: orthogonal matrices over GF(2),
//!   self-dual correspondences and block-design incidence codes
//! - [`ringrk`] — arithmetic in `R_k`, codes over `R_k` and the Gray map
//! - [`tables`] — exhaustive small-length oracles, randomized lower-bound
//!   search, table persistence and the CLI entry point

pub mod codes;
pub mod construct;
pub mod error;
pub mod gf2;
pub mod lpbound;
pub mod ringrk;
pub mod tables;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
