//! Exact integer Krawtchouk polynomial tables.
//!
//! The value grid for a fixed length `n` holds `P_i(j)` for all
//! `0 <= i, j <= n`, where `P_i(j)` is the coefficient of `z^i` in
//! `(1+z)^{n-j} (1-z)^j`. Everything is arbitrary-precision, so the tables
//! stay exact at any length this crate touches.

use num::bigint::BigInt;
use num::traits::{One, Zero};

/// Binomial coefficient C(n, k) as an exact integer.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// The full `(n+1) x (n+1)` grid of Krawtchouk values for length `n`.
#[derive(Clone, Debug)]
pub struct KrawtchoukTable {
    n: usize,
    values: Vec<Vec<BigInt>>,
}

/// Builds the table for length `n` by expanding the generating polynomial
/// column by column.
pub fn krawtchouk_table(n: usize) -> KrawtchoukTable {
    let mut values = vec![vec![BigInt::zero(); n + 1]; n + 1];
    for j in 0..=n {
        let mut poly: Vec<BigInt> = vec![BigInt::one()];
        for _ in 0..(n - j) {
            poly = shift_add(&poly, false);
        }
        for _ in 0..j {
            poly = shift_add(&poly, true);
        }
        for (i, coeff) in poly.into_iter().enumerate() {
            values[i][j] = coeff;
        }
    }
    KrawtchoukTable { n, values }
}

/// Multiplies a polynomial by (1 + z) or, when `negate` is set, by (1 - z).
fn shift_add(poly: &[BigInt], negate: bool) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); poly.len() + 1];
    for (i, c) in poly.iter().enumerate() {
        out[i] += c;
        if negate {
            out[i + 1] -= c;
        } else {
            out[i + 1] += c;
        }
    }
    out
}

impl KrawtchoukTable {
    pub fn n(&self) -> usize {
        self.n
    }

    /// P_i(j).
    pub fn value(&self, i: usize, j: usize) -> &BigInt {
        &self.values[i][j]
    }

    /// P_i(j) narrowed to `i128`. Panics if the entry does not fit, which
    /// cannot happen at the lengths this crate enumerates (n <= 64).
    pub fn value_i128(&self, i: usize, j: usize) -> i128 {
        i128::try_from(&self.values[i][j]).expect("Krawtchouk value exceeds i128")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(0, 0), BigInt::from(1));
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(10, 5), BigInt::from(252));
        assert_eq!(binomial(4, 7), BigInt::zero());
        assert_eq!(binomial(52, 26).to_string(), "495918532948104");
    }

    #[test]
    fn column_zero_is_binomial_row() {
        for n in 1..=12 {
            let t = krawtchouk_table(n);
            for i in 0..=n {
                assert_eq!(*t.value(i, 0), binomial(n, i), "n={n} i={i}");
            }
        }
    }

    #[test]
    fn degree_zero_and_one_rows() {
        for n in 1..=10 {
            let t = krawtchouk_table(n);
            for j in 0..=n {
                assert_eq!(*t.value(0, j), BigInt::one());
                assert_eq!(
                    t.value_i128(1, j),
                    n as i128 - 2 * j as i128,
                    "n={n} j={j}"
                );
            }
        }
    }

    #[test]
    fn orthogonality_relation() {
        for n in 1..=10 {
            let t = krawtchouk_table(n);
            for i in 0..=n {
                for j in 0..=n {
                    let mut acc = BigInt::zero();
                    for x in 0..=n {
                        acc += binomial(n, x) * t.value(i, x) * t.value(j, x);
                    }
                    let expected = if i == j {
                        (BigInt::one() << n) * binomial(n, i)
                    } else {
                        BigInt::zero()
                    };
                    assert_eq!(acc, expected, "n={n} i={i} j={j}");
                }
            }
        }
    }

    #[test]
    fn reflection_symmetry() {
        for n in 2..=9 {
            let t = krawtchouk_table(n);
            for i in 0..=n {
                for j in 0..=n {
                    assert_eq!(
                        binomial(n, j) * t.value(i, j),
                        binomial(n, i) * t.value(j, i),
                        "n={n} i={i} j={j}"
                    );
                }
            }
        }
    }
}
