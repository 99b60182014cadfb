//! Big-integer counting of Carlitz compositions.
//!
//! The table follows the last-part recurrence
//! `c[n][m] = a[n-m] - c[n-m][m]` with `a[0] = 1`, where `a[k]` is the row
//! total. Summing over the previous part replaces the per-part-count index
//! from the subtractive formulation; totals are identical. Cost is O(n^2)
//! time and space in word operations times the integer size.

use rayon::prelude::*;
use rug::{Integer, Rational};

use crate::composition::Composition;
use crate::error::{Error, Result};

/// DP table of Carlitz-composition counts by total and last part, with an
/// optional forbidden part size.
#[derive(Debug, Clone)]
pub struct CountTable {
    n_max: usize,
    forbidden: Option<u32>,
    /// `rows[n][m-1]` counts Carlitz compositions of `n` with last part `m`.
    rows: Vec<Vec<Integer>>,
    /// `totals[n]` is `a_n` (or `a_{n,j}`); `totals[0] = 1` for the empty
    /// composition, matching the generating function's constant term.
    totals: Vec<Integer>,
    zero: Integer,
}

impl CountTable {
    /// Builds the table up to `n_max`, optionally zeroing the column of a
    /// forbidden part size `j`.
    pub fn build(n_max: usize, forbidden: Option<u32>) -> Self {
        let mut rows: Vec<Vec<Integer>> = Vec::with_capacity(n_max + 1);
        let mut totals: Vec<Integer> = Vec::with_capacity(n_max + 1);
        rows.push(Vec::new());
        totals.push(Integer::from(1));
        for n in 1..=n_max {
            let mut row = Vec::with_capacity(n);
            let mut total = Integer::new();
            for m in 1..=n {
                let cell = if Some(m as u32) == forbidden {
                    Integer::new()
                } else {
                    let rest = n - m;
                    let mut v = totals[rest].clone();
                    if rest >= 1 && m <= rest {
                        v -= &rows[rest][m - 1];
                    }
                    if rest == 0 {
                        // totals[0] = 1 already credits the single-part case.
                    }
                    v
                };
                total += &cell;
                row.push(cell);
            }
            rows.push(row);
            totals.push(total);
        }
        Self { n_max, forbidden, rows, totals, zero: Integer::new() }
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn forbidden(&self) -> Option<u32> {
        self.forbidden
    }

    /// `a_n` (no forbidden size) or `a_{n,j}`.
    ///
    /// Panics if `n > n_max`.
    pub fn total(&self, n: usize) -> &Integer {
        &self.totals[n]
    }

    /// Count of Carlitz compositions of `n` with last part `m`; zero when
    /// `m > n` or `m` is forbidden.
    ///
    /// Panics if `n > n_max`.
    pub fn last_part_count(&self, n: usize, m: u32) -> &Integer {
        let m = m as usize;
        if m == 0 || m > n {
            return &self.zero;
        }
        &self.rows[n][m - 1]
    }
}

/// `a_n`: the number of Carlitz compositions of `n` (sequence 1, 1, 1, 3,
/// 4, 7, 14, ...), with `a_0 = 1` for the empty composition.
pub fn count_carlitz(n: usize) -> Integer {
    CountTable::build(n, None).total(n).clone()
}

/// `a_{n,j}`: Carlitz compositions of `n` that avoid part size `j`
/// everywhere. Equals `a_n` whenever `j > n`.
pub fn count_carlitz_avoiding(n: usize, j: u32) -> Integer {
    assert!(j >= 1, "forbidden part size must be positive");
    CountTable::build(n, Some(j)).total(n).clone()
}

/// Unrestricted compositions of `n` with every part >= 2. Satisfies
/// `b(n) = b(n-1) + b(n-2)` with `b(2) = b(3) = 1` (Fibonacci shifted).
pub fn count_compositions_avoiding_one(n: usize) -> Integer {
    let (mut prev, mut cur) = (Integer::from(1), Integer::new()); // b(0), b(1)
    for _ in 0..n {
        let next = Integer::from(&prev + &cur);
        prev = cur;
        cur = next;
    }
    cur
}

/// Exact expected number of distinct part sizes of a uniform Carlitz
/// composition of `n`, with the per-size inclusion probabilities.
#[derive(Debug, Clone)]
pub struct ExactExpectation {
    pub n: usize,
    /// `E[D_n]` as an exact rational.
    pub value: Rational,
    /// `per_j[j-1] = P(some part equals j) = 1 - a_{n,j}/a_n` for j = 1..n.
    pub per_j: Vec<Rational>,
}

/// Computes `E[D_n] = sum_j (1 - a_{n,j}/a_n)` exactly. One avoidance table
/// per j; the per-j loop is embarrassingly parallel and merged in j order.
pub fn expected_distinct_exact(n: usize) -> ExactExpectation {
    assert!(n >= 1);
    let a_n = CountTable::build(n, None).total(n).clone();
    let per_j: Vec<Rational> = (1..=n as u32)
        .into_par_iter()
        .map(|j| {
            let a_nj = CountTable::build(n, Some(j)).total(n).clone();
            Rational::from(1) - Rational::from((a_nj, a_n.clone()))
        })
        .collect();
    let value = per_j.iter().fold(Rational::new(), |acc, p| acc + p);
    ExactExpectation { n, value, per_j }
}

/// Carlitz compositions of `n` whose *first* part is `m`. By the reversal
/// bijection this equals the last-part count; exposed for the exact sampler
/// and its tests.
pub fn first_part_count(table: &CountTable, n: usize, m: u32) -> &Integer {
    table.last_part_count(n, m)
}

impl ExactExpectation {
    /// Convenience float view at `bits` precision.
    pub fn to_float(&self, bits: u32) -> rug::Float {
        rug::Float::with_val(bits, &self.value)
    }
}

/// Guards for samplers that read a table.
pub(crate) fn require_plain_table(table: &CountTable, n: usize) -> Result<()> {
    if table.forbidden().is_some() {
        return Err(Error::TableMismatch("table has a forbidden part size".into()));
    }
    if table.n_max() < n {
        return Err(Error::TableMismatch(format!(
            "table covers n <= {}, asked for {n}",
            table.n_max()
        )));
    }
    Ok(())
}

/// Mean of `distinct_sizes` over an explicit list, as an exact rational.
/// Test oracle shared by the expectation and sampler tests.
pub fn mean_distinct_sizes(comps: &[Composition]) -> Rational {
    let sum: u64 = comps.iter().map(|c| c.distinct_sizes() as u64).sum();
    Rational::from((Integer::from(sum), Integer::from(comps.len())))
}
