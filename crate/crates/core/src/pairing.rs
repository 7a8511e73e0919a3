//! The three pairing functions and their closed-form inverses.
//!
//! `f_pair` maps ℕ⁺ × ℕ⁺ onto ℕ⁺ and `g_pair` maps ℕ × ℕ onto ℕ; both are
//! symmetric, so they are bijective on canonical pairs `(m, n)` with `m ≥ n`.
//! `cantor_pair` is the classical ordered bijection ℕ × ℕ → ℕ.
//!
//! Every inverse re-evaluates the forward function on its result before
//! returning it; a mismatch surfaces as [`Error::InverseMismatch`].

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::arith::{exact_half, exact_quarter, floor_sqrt, min2, residue, sgn, sgn_prime};
use crate::error::{Error, Result};
use crate::{Natural, Scheme};

/// Representative `(m, n)` of an unordered pair, with `m ≥ n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalPair {
    m: Natural,
    n: Natural,
}

impl CanonicalPair {
    /// Fails unless `m ≥ n`.
    pub fn new(m: Natural, n: Natural) -> Result<Self> {
        if m < n {
            return Err(Error::domain(format!("pair ({m}, {n}) is not canonical: need m >= n")));
        }
        Ok(Self { m, n })
    }

    /// Orders the endpoints as `(max, min)`.
    pub fn from_unordered(u: Natural, v: Natural) -> Self {
        if u >= v {
            Self { m: u, n: v }
        } else {
            Self { m: v, n: u }
        }
    }

    pub fn m(&self) -> &Natural {
        &self.m
    }

    pub fn n(&self) -> &Natural {
        &self.n
    }

    pub fn into_parts(self) -> (Natural, Natural) {
        (self.m, self.n)
    }
}

impl From<CanonicalPair> for (Natural, Natural) {
    fn from(p: CanonicalPair) -> Self {
        p.into_parts()
    }
}

impl fmt::Display for CanonicalPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.m, self.n)
    }
}

fn signed(x: &Natural) -> BigInt {
    BigInt::from(x.clone())
}

fn unsigned(x: BigInt, what: &str) -> Result<Natural> {
    x.to_biguint()
        .ok_or_else(|| Error::InverseMismatch(format!("{what} evaluated to a negative value")))
}

fn smaller(m: &Natural, n: &Natural) -> Natural {
    min2(&signed(m), &signed(n))
        .to_biguint()
        .expect("minimum of naturals is a natural")
}

/// `((s² − s % 2) / 4)` for the diagonal offset `s`.
fn diagonal_base(s: &Natural) -> Natural {
    let parity = residue(&signed(s), &BigUint::from(2u8)).expect("modulus 2 is valid");
    exact_quarter(&(s * s - parity))
}

/// `F(m, n) = ((m+n−1)² − (m+n−1) % 2) / 4 + min(m, n)` on ℕ⁺ × ℕ⁺.
pub fn f_pair(m: &Natural, n: &Natural) -> Result<Natural> {
    if m.is_zero() || n.is_zero() {
        return Err(Error::domain(format!(
            "F is defined on positive integers only, got ({m}, {n})"
        )));
    }
    let s = m + n - 1u8;
    Ok(diagonal_base(&s) + smaller(m, n))
}

/// Unique `(m, n)` with `m ≥ n ≥ 1` and `F(m, n) = c`.
pub fn f_unpair(c: &Natural) -> Result<CanonicalPair> {
    if c.is_zero() {
        return Err(Error::domain("F never takes the value 0"));
    }
    let cs = signed(c);
    let t = signed(&floor_sqrt(c));
    let one = BigInt::one();
    let t_sq = &t * &t;
    let a = sgn(&(&cs - &t_sq));
    let b = BigInt::from(sgn_prime(&(&cs - &t_sq - &t)));

    let fixed = (&one - &a) * &t;
    let t1 = &t + &one;
    let m = &fixed + &a * (&t1 * (&t1 + &b) - &cs);
    let n = &fixed + &a * (&cs - &t * (&t + &b));

    let pair = canonical_checked(unsigned(m, "m")?, unsigned(n, "n")?)?;
    if pair.n.is_zero() || f_pair(&pair.m, &pair.n)? != *c {
        return Err(Error::InverseMismatch(format!("F{pair} != {c}")));
    }
    Ok(pair)
}

/// `G(m, n) = ((m+n+1)² − (m+n+1) % 2) / 4 + min(m, n)` on ℕ × ℕ.
pub fn g_pair(m: &Natural, n: &Natural) -> Natural {
    let s = m + n + 1u8;
    diagonal_base(&s) + smaller(m, n)
}

/// Unique `(m, n)` with `m ≥ n ≥ 0` and `G(m, n) = c`.
pub fn g_unpair(c: &Natural) -> Result<CanonicalPair> {
    let cs = signed(c);
    let t = signed(&floor_sqrt(c));
    let one = BigInt::one();
    let t_sq = &t * &t;
    let a = sgn(&(&cs - &t_sq));
    let b = BigInt::from(sgn_prime(&(&t_sq + &t - &cs)));
    let nonzero = sgn(&t);

    let m = &nonzero
        * ((BigInt::from(2) * &t - &one) * (&one - &a)
            + &a * (&t * (&t + BigInt::from(3)) - (&t + &one) * &b - &cs));
    let n = &nonzero * &a * (&cs - &t * (&t + &one - &b));

    let pair = canonical_checked(unsigned(m, "m")?, unsigned(n, "n")?)?;
    if g_pair(&pair.m, &pair.n) != *c {
        return Err(Error::InverseMismatch(format!("G{pair} != {c}")));
    }
    Ok(pair)
}

/// Cantor's `C(m, n) = (m+n)(m+n+1)/2 + n`.
pub fn cantor_pair(m: &Natural, n: &Natural) -> Natural {
    let s = m + n;
    let tri = exact_half(&signed(&(&s * (&s + 1u8))))
        .to_biguint()
        .expect("triangular number is non-negative");
    tri + n
}

/// Inverse of [`cantor_pair`]: the diagonal `w = m + n` is the largest `w`
/// with `w(w+1)/2 ≤ z`, recovered as `⌊(⌊√(8z+1)⌋ − 1) / 2⌋`.
pub fn cantor_unpair(z: &Natural) -> Result<(Natural, Natural)> {
    let root = floor_sqrt(&(z * 8u8 + 1u8));
    let w: Natural = (root - 1u8) >> 1u32;
    let tri: Natural = (&w * (&w + 1u8)) >> 1u32;
    if tri > *z {
        return Err(Error::InverseMismatch(format!("diagonal {w} overshoots {z}")));
    }
    let n = z - &tri;
    if n > w {
        return Err(Error::InverseMismatch(format!("diagonal {w} undershoots {z}")));
    }
    let m = &w - &n;
    if cantor_pair(&m, &n) != *z {
        return Err(Error::InverseMismatch(format!("C({m}, {n}) != {z}")));
    }
    Ok((m, n))
}

fn canonical_checked(m: Natural, n: Natural) -> Result<CanonicalPair> {
    CanonicalPair::new(m, n).map_err(|e| Error::InverseMismatch(e.to_string()))
}

/// Dispatches to the pairing function selected by `scheme`.
pub fn pair(scheme: Scheme, m: &Natural, n: &Natural) -> Result<Natural> {
    match scheme {
        Scheme::Cantor => Ok(cantor_pair(m, n)),
        Scheme::F => f_pair(m, n),
        Scheme::G => Ok(g_pair(m, n)),
    }
}

/// Dispatches to the inverse selected by `scheme`. Symmetric schemes return
/// the canonical `(max, min)` pair; Cantor returns the ordered pair.
pub fn unpair(scheme: Scheme, c: &Natural) -> Result<(Natural, Natural)> {
    match scheme {
        Scheme::Cantor => cantor_unpair(c),
        Scheme::F => f_unpair(c).map(CanonicalPair::into_parts),
        Scheme::G => g_unpair(c).map(CanonicalPair::into_parts),
    }
}
