//! The self-verification suite behind `sympair check`.
//!
//! The suite is parameterised over a [`Formulas`] table so that tests can
//! substitute deliberately broken formulas and confirm the suite notices.

use std::collections::HashSet;
use std::fmt;

use num_bigint::{BigInt, RandBigInt};
use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arith::residue;
use crate::enumeration::{check_lemmas_with, CanonicalOrder};
use crate::error::{Error, Result};
use crate::pairing::{self, CanonicalPair};
use crate::Natural;

pub const DEFAULT_LIMIT: u64 = 10_000;

/// Side of the square grids used for symmetry and shift checks.
const GRID_SIDE: u64 = 300;
/// Largest coordinate sum for the injectivity check.
const INJECTIVITY_SUM: u64 = 200;
/// Largest diagonal handed to the lemma checks.
const LEMMA_DIAGONALS: u64 = 1000;
const BIG_SAMPLES: usize = 100;
const BIG_BITS: u64 = 256;
const BIG_SEED: u64 = 0x5eed_f00d;

/// The six functions under test.
#[derive(Clone, Copy)]
pub struct Formulas {
    pub f_pair: fn(&Natural, &Natural) -> Result<Natural>,
    pub f_unpair: fn(&Natural) -> Result<CanonicalPair>,
    pub g_pair: fn(&Natural, &Natural) -> Natural,
    pub g_unpair: fn(&Natural) -> Result<CanonicalPair>,
    pub cantor_pair: fn(&Natural, &Natural) -> Natural,
    pub cantor_unpair: fn(&Natural) -> Result<(Natural, Natural)>,
}

impl Default for Formulas {
    fn default() -> Self {
        Self {
            f_pair: pairing::f_pair,
            f_unpair: pairing::f_unpair,
            g_pair: pairing::g_pair,
            g_unpair: pairing::g_unpair,
            cantor_pair: pairing::cantor_pair,
            cantor_unpair: pairing::cantor_unpair,
        }
    }
}

impl fmt::Debug for Formulas {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Formulas { .. }")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckEntry {
    pub name: String,
    pub failure: Option<String>,
}

impl CheckEntry {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub limit: u64,
    pub entries: Vec<CheckEntry>,
}

impl CheckReport {
    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(CheckEntry::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| !e.passed())
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            match &e.failure {
                None => writeln!(f, "PASS  {}", e.name)?,
                Some(why) => writeln!(f, "FAIL  {}: {why}", e.name)?,
            }
        }
        let failed = self.failures().count();
        write!(
            f,
            "{} of {} checks passed (limit {})",
            self.entries.len() - failed,
            self.entries.len(),
            self.limit
        )
    }
}

/// First failure message over a sequence of cases.
fn first_failure<I, F>(cases: I, mut test: F) -> Option<String>
where
    I: IntoIterator,
    F: FnMut(I::Item) -> std::result::Result<(), String>,
{
    cases.into_iter().find_map(|c| test(c).err())
}

fn nat(v: u64) -> Natural {
    Natural::from(v)
}

fn grid(lo: u64, hi: u64) -> impl Iterator<Item = (u64, u64)> {
    (lo..=hi).flat_map(move |m| (lo..=hi).map(move |n| (m, n)))
}

/// Runs every check at the given scale. Codes `1..=limit` (or `0..=limit`)
/// are inverted; grid checks use sides capped at 300.
pub fn run_checks(limit: u64, fx: &Formulas) -> Result<CheckReport> {
    if limit < 2 {
        return Err(Error::domain(format!("check limit must be at least 2, got {limit}")));
    }
    let side = limit.min(GRID_SIDE);
    let mut entries = Vec::new();
    let mut push = |name: &str, failure: Option<String>| {
        entries.push(CheckEntry { name: name.to_owned(), failure })
    };

    push(
        "F symmetry",
        first_failure(grid(1, side), |(m, n)| {
            let a = (fx.f_pair)(&nat(m), &nat(n)).map_err(|e| e.to_string())?;
            let b = (fx.f_pair)(&nat(n), &nat(m)).map_err(|e| e.to_string())?;
            (a == b).then_some(()).ok_or(format!("F({m}, {n}) = {a} but F({n}, {m}) = {b}"))
        }),
    );

    push(
        "G symmetry",
        first_failure(grid(0, side), |(m, n)| {
            let a = (fx.g_pair)(&nat(m), &nat(n));
            let b = (fx.g_pair)(&nat(n), &nat(m));
            (a == b).then_some(()).ok_or(format!("G({m}, {n}) = {a} but G({n}, {m}) = {b}"))
        }),
    );

    push(
        "F inverse round trip",
        first_failure(1..=limit, |c| {
            let p = (fx.f_unpair)(&nat(c)).map_err(|e| format!("F^-1({c}): {e}"))?;
            if p.n() < &Natural::one() || p.m() < p.n() {
                return Err(format!("F^-1({c}) = {p} is not a canonical positive pair"));
            }
            let back = (fx.f_pair)(p.m(), p.n()).map_err(|e| e.to_string())?;
            (back == nat(c)).then_some(()).ok_or(format!("F{p} = {back}, expected {c}"))
        }),
    );

    push(
        "F inverse matches enumeration oracle",
        first_failure((1..=limit).zip(CanonicalOrder::new()), |(c, expected)| {
            let p = (fx.f_unpair)(&nat(c)).map_err(|e| format!("F^-1({c}): {e}"))?;
            (p == expected).then_some(()).ok_or(format!("F^-1({c}) = {p}, oracle gives {expected}"))
        }),
    );

    push(
        "rank identity on canonical order",
        first_failure((1..=limit).zip(CanonicalOrder::new()), |(k, p)| {
            let v = (fx.f_pair)(p.m(), p.n()).map_err(|e| e.to_string())?;
            (v == nat(k)).then_some(()).ok_or(format!("pair #{k} {p} maps to {v}"))
        }),
    );

    push(
        "G inverse round trip and shift path",
        first_failure(0..=limit, |c| {
            let p = (fx.g_unpair)(&nat(c)).map_err(|e| format!("G^-1({c}): {e}"))?;
            if p.m() < p.n() {
                return Err(format!("G^-1({c}) = {p} is not canonical"));
            }
            let back = (fx.g_pair)(p.m(), p.n());
            if back != nat(c) {
                return Err(format!("G{p} = {back}, expected {c}"));
            }
            let shifted = (fx.f_unpair)(&nat(c + 1)).map_err(|e| format!("F^-1({}): {e}", c + 1))?;
            let (sm, sn) = shifted.into_parts();
            let via_f = (sm - 1u8, sn - 1u8);
            let (m, n) = p.into_parts();
            ((m.clone(), n.clone()) == via_f)
                .then_some(())
                .ok_or(format!("G^-1({c}) = ({m}, {n}) but F^-1({}) - (1, 1) = {via_f:?}", c + 1))
        }),
    );

    push(
        "Cantor round trip",
        first_failure(0..=limit, |z| {
            let (m, n) = (fx.cantor_unpair)(&nat(z)).map_err(|e| format!("C^-1({z}): {e}"))?;
            let back = (fx.cantor_pair)(&m, &n);
            (back == nat(z)).then_some(()).ok_or(format!("C({m}, {n}) = {back}, expected {z}"))
        })
        .or_else(|| {
            first_failure(grid(0, side), |(m, n)| {
                let z = (fx.cantor_pair)(&nat(m), &nat(n));
                let back = (fx.cantor_unpair)(&z).map_err(|e| format!("C^-1({z}): {e}"))?;
                (back == (nat(m), nat(n)))
                    .then_some(())
                    .ok_or(format!("C^-1(C({m}, {n})) = {back:?}"))
            })
        }),
    );

    let sum_cap = limit.min(INJECTIVITY_SUM);
    let mut seen = HashSet::new();
    push(
        "F injective on canonical pairs",
        first_failure(
            (2..=sum_cap).flat_map(|s| (1..=s / 2).map(move |n| (s - n, n))),
            |(m, n)| {
                let v = (fx.f_pair)(&nat(m), &nat(n)).map_err(|e| e.to_string())?;
                seen.insert(v.clone())
                    .then_some(())
                    .ok_or(format!("F({m}, {n}) = {v} collides with an earlier pair"))
            },
        ),
    );

    push(
        "shift identity G(m, n) = F(m+1, n+1) - 1",
        first_failure(grid(0, side), |(m, n)| {
            let g = (fx.g_pair)(&nat(m), &nat(n));
            let f = (fx.f_pair)(&nat(m + 1), &nat(n + 1)).map_err(|e| e.to_string())?;
            (&g + 1u8 == f).then_some(()).ok_or(format!("G({m}, {n}) = {g}, F({}, {}) = {f}", m + 1, n + 1))
        }),
    );

    let two = nat(2);
    #[allow(clippy::manual_div_ceil)]
    push(
        "parity identities",
        first_failure(1..=limit, |x| {
            let r = residue(&BigInt::from(x), &two).map_err(|e| e.to_string())?;
            let up = nat((x + 1) / 2) * 2u8 - &r;
            let down = nat(x / 2) * 2u8 + &r;
            (up == nat(x) && down == nat(x))
                .then_some(())
                .ok_or(format!("x = {x}: got {up} and {down}"))
        }),
    );

    let lemmas = check_lemmas_with(limit.min(LEMMA_DIAGONALS), fx.f_pair)?;
    for c in lemmas.checks {
        push(&format!("lemma: {}", c.name), c.failure);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(BIG_SEED);
    let samples: Vec<(Natural, Natural)> = (0..BIG_SAMPLES)
        .map(|_| {
            let m = rng.gen_biguint(BIG_BITS) + 1u8;
            let n = rng.gen_biguint(BIG_BITS) + 1u8;
            (m, n)
        })
        .collect();
    push(
        "256-bit round trip",
        first_failure(samples, |(m, n)| {
            let c = (fx.f_pair)(&m, &n).map_err(|e| e.to_string())?;
            let p = (fx.f_unpair)(&c).map_err(|e| format!("F^-1({c}): {e}"))?;
            let expected = CanonicalPair::from_unordered(m, n);
            (p == expected).then_some(()).ok_or(format!("F^-1(F{expected}) = {p}"))
        }),
    );

    Ok(CheckReport { limit, entries })
}
