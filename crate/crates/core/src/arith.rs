//! Exact integer helpers shared by the pairing formulas.
//!
//! Everything here works on arbitrary-precision integers; nothing is ever
//! routed through floating point.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::{Natural, SignedInt};

/// Signum: −1, 0 or 1.
pub fn sgn(x: &SignedInt) -> SignedInt {
    match x.sign() {
        Sign::Minus => -BigInt::one(),
        Sign::NoSign => BigInt::zero(),
        Sign::Plus => BigInt::one(),
    }
}

/// Clamped signum, `(sgn(x)² + sgn(x)) / 2`: 0 for `x ≤ 0`, 1 for `x > 0`.
pub fn sgn_prime(x: &SignedInt) -> Natural {
    let s = sgn(x);
    let doubled = &s * &s + &s;
    exact_half(&doubled)
        .to_biguint()
        .expect("sgn² + sgn is never negative")
}

/// `(x + y + |x − y|) / 2`.
pub fn max2(x: &SignedInt, y: &SignedInt) -> SignedInt {
    exact_half(&(x + y + (x - y).abs()))
}

/// `(x + y − |x − y|) / 2`.
pub fn min2(x: &SignedInt, y: &SignedInt) -> SignedInt {
    exact_half(&(x + y - (x - y).abs()))
}

/// Least non-negative residue of `n` modulo `m`.
pub fn residue(n: &SignedInt, m: &Natural) -> Result<Natural> {
    if m.is_zero() {
        return Err(Error::InvalidModulus);
    }
    let m = BigInt::from(m.clone());
    Ok(n.mod_floor(&m)
        .to_biguint()
        .expect("floor modulo a positive modulus is non-negative"))
}

/// `⌊√c⌋` by integer Newton iteration.
///
/// The starting guess `2^⌈bits/2⌉` is never below the root, and every step
/// strictly decreases the iterate until it reaches the floor, so the loop
/// terminates after O(log bits) steps.
pub fn floor_sqrt(c: &Natural) -> Natural {
    if c < &BigUint::from(2u8) {
        return c.clone();
    }
    let bits = c.bits();
    let mut x = BigUint::one() << bits.div_ceil(2);
    loop {
        let y = (&x + c / &x) >> 1u32;
        if y >= x {
            return x;
        }
        x = y;
    }
}

/// Halves a value that is known to be even.
pub(crate) fn exact_half(x: &BigInt) -> BigInt {
    let (q, r) = x.div_rem(&BigInt::from(2));
    assert!(r.is_zero(), "{x} is not divisible by 2");
    q
}

/// Quarters a value that is known to be a multiple of 4.
pub(crate) fn exact_quarter(x: &BigUint) -> BigUint {
    let (q, r) = x.div_rem(&BigUint::from(4u8));
    assert!(r.is_zero(), "{x} is not divisible by 4");
    q
}
