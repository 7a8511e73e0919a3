//! Brute-force walk of canonical pairs in diagonal order.
//!
//! Diagonal `i ≥ 2` holds the pairs `(x, y)` with `x + y = i` and `x ≥ y`,
//! ordered by increasing `y`. Concatenating diagonals `2, 3, 4, …` gives the
//! canonical order, whose 1-based positions coincide with `F`. Nothing here
//! uses the closed-form inverses, so [`unrank`] serves as an independent
//! oracle for [`f_unpair`](crate::f_unpair).

use std::fmt;
use std::iter::FusedIterator;

use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::pairing::{f_pair, CanonicalPair};
use crate::Natural;

/// Coordinate sum `i ≥ 2` of a diagonal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DiagonalIndex(u64);

impl DiagonalIndex {
    pub fn new(i: u64) -> Result<Self> {
        if i < 2 {
            return Err(Error::domain(format!("diagonal index must be at least 2, got {i}")));
        }
        Ok(Self(i))
    }

    pub fn get(self) -> u64 {
        self.0
    }

    /// Number of canonical pairs on the diagonal, `⌊i/2⌋`.
    pub fn len(self) -> u64 {
        self.0 / 2
    }

    pub fn is_empty(self) -> bool {
        false
    }
}

/// 1-based position in the canonical order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rank(Natural);

impl Rank {
    pub fn new(k: Natural) -> Result<Self> {
        if k.is_zero() {
            return Err(Error::domain("rank must be at least 1"));
        }
        Ok(Self(k))
    }

    pub fn get(&self) -> &Natural {
        &self.0
    }

    pub fn into_inner(self) -> Natural {
        self.0
    }
}

impl From<u64> for Rank {
    /// Panics on 0.
    fn from(k: u64) -> Self {
        Rank::new(Natural::from(k)).expect("rank must be at least 1")
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn pair_u64(x: u64, y: u64) -> CanonicalPair {
    CanonicalPair::new(Natural::from(x), Natural::from(y)).expect("x >= y on every diagonal")
}

/// Elements of diagonal `i`: `(i−1, 1), (i−2, 2), …, (i−⌊i/2⌋, ⌊i/2⌋)`.
pub fn diagonal_elements(i: DiagonalIndex) -> Vec<CanonicalPair> {
    let i = i.get();
    (1..=i / 2).map(|y| pair_u64(i - y, y)).collect()
}

/// Lazy iterator over every canonical pair of positive integers in order.
#[derive(Debug, Clone)]
pub struct CanonicalOrder {
    diagonal: u64,
    y: u64,
}

impl CanonicalOrder {
    pub fn new() -> Self {
        Self { diagonal: 2, y: 1 }
    }
}

impl Default for CanonicalOrder {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for CanonicalOrder {
    type Item = CanonicalPair;

    fn next(&mut self) -> Option<CanonicalPair> {
        let item = pair_u64(self.diagonal - self.y, self.y);
        if self.y == self.diagonal / 2 {
            self.diagonal += 1;
            self.y = 1;
        } else {
            self.y += 1;
        }
        Some(item)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        (usize::MAX, None)
    }
}

impl FusedIterator for CanonicalOrder {}

/// The `k`-th canonical pair, found by skipping whole diagonals.
pub fn unrank(k: &Rank) -> Result<CanonicalPair> {
    let mut remaining = k
        .get()
        .to_u64()
        .ok_or_else(|| Error::OracleRange(k.to_string()))?;
    let mut i = 2u64;
    while remaining > i / 2 {
        remaining -= i / 2;
        i += 1;
    }
    Ok(pair_u64(i - remaining, remaining))
}

/// Position of a canonical pair of positive integers; equal to `F(m, n)`.
pub fn rank(p: &CanonicalPair) -> Result<Rank> {
    if p.n().is_zero() {
        return Err(Error::domain(format!("{p} has a zero coordinate")));
    }
    Rank::new(f_pair(p.m(), p.n())?)
}

/// Outcome of one lemma family over a range of diagonals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaCheck {
    pub name: &'static str,
    /// First counterexample, if any.
    pub failure: Option<String>,
}

impl LemmaCheck {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaReport {
    pub limit: u64,
    pub checks: Vec<LemmaCheck>,
}

impl LemmaReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(LemmaCheck::passed)
    }
}

pub const WITHIN_DIAGONAL: &str = "within-diagonal unit steps";
pub const ACROSS_DIAGONAL: &str = "cross-diagonal unit step";
pub const DIAGONAL_ORDERING: &str = "diagonal ordering";

/// Runs the diagonal lemma checks on `F` for all diagonals `2 ≤ i ≤ limit`.
pub fn check_lemmas(limit: u64) -> Result<LemmaReport> {
    check_lemmas_with(limit, f_pair)
}

/// As [`check_lemmas`], against an arbitrary candidate for `F`.
///
/// Checks that consecutive values along each diagonal differ by exactly 1,
/// that the first value of diagonal `i+1` exceeds the last value of diagonal
/// `i` by exactly 1, and that every value on diagonal `i` is below every
/// value on diagonal `i+1`.
pub fn check_lemmas_with<P>(limit: u64, pair: P) -> Result<LemmaReport>
where
    P: Fn(&Natural, &Natural) -> Result<Natural>,
{
    if limit < 2 {
        return Err(Error::domain(format!("lemma limit must be at least 2, got {limit}")));
    }
    let mut within = None;
    let mut across = None;
    let mut ordering = None;

    let mut prev: Option<(u64, Vec<Natural>)> = None;
    for i in 2..=limit {
        let values = diagonal_elements(DiagonalIndex(i))
            .iter()
            .map(|p| pair(p.m(), p.n()))
            .collect::<Result<Vec<_>>>()?;

        if within.is_none() {
            for (y, w) in values.windows(2).enumerate() {
                if w[1] != &w[0] + 1u8 {
                    within = Some(format!(
                        "diagonal {i}: F({}, {}) = {} but F({}, {}) = {}",
                        i - 1 - y as u64,
                        y + 1,
                        w[0],
                        i - 2 - y as u64,
                        y + 2,
                        w[1]
                    ));
                    break;
                }
            }
        }

        if let Some((j, prev_values)) = &prev {
            let last = prev_values.last().expect("diagonals are non-empty");
            let first = &values[0];
            if across.is_none() && *first != last + 1u8 {
                across = Some(format!(
                    "F({i}, 1) = {first} but the last value of diagonal {j} is {last}"
                ));
            }
            if ordering.is_none() {
                let hi = prev_values.iter().max().expect("non-empty");
                let lo = values.iter().min().expect("non-empty");
                if hi >= lo {
                    ordering = Some(format!(
                        "diagonal {j} reaches {hi} but diagonal {i} starts at {lo}"
                    ));
                }
            }
        }
        prev = Some((i, values));
    }

    Ok(LemmaReport {
        limit,
        checks: vec![
            LemmaCheck { name: WITHIN_DIAGONAL, failure: within },
            LemmaCheck { name: ACROSS_DIAGONAL, failure: across },
            LemmaCheck { name: DIAGONAL_ORDERING, failure: ordering },
        ],
    })
}
