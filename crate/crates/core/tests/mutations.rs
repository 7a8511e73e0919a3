//! The check suite must reject deliberately broken formulas.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use sympair::check::{run_checks, Formulas};
use sympair::{f_pair, floor_sqrt, sgn, sgn_prime, CanonicalPair, Error, Natural, Result};

const LIMIT: u64 = 1000;

fn assert_caught(name: &str, fx: Formulas) {
    let report = run_checks(LIMIT, &fx).unwrap();
    assert!(!report.all_passed(), "mutation `{name}` slipped through:\n{report}");
}

fn f_with_max(m: &Natural, n: &Natural) -> Result<Natural> {
    let s = m + n - 1u8;
    Ok((&s * &s - (&s % 2u8)) / 4u8 + m.max(n).clone())
}

/// Rounds the diagonal base up instead of down on odd diagonals. (Plain
/// floor division without the parity term would be an equivalent mutant.)
fn f_rounds_up(m: &Natural, n: &Natural) -> Result<Natural> {
    if m.is_zero() || n.is_zero() {
        return Err(Error::Domain("zero".into()));
    }
    let s = m + n - 1u8;
    Ok((&s * &s + (&s % 2u8) * 3u8) / 4u8 + m.min(n).clone())
}

fn f_wrong_diagonal(m: &Natural, n: &Natural) -> Result<Natural> {
    let s = m + n;
    Ok((&s * &s - (&s % 2u8)) / 4u8 + m.min(n).clone())
}

fn g_missing_shift(m: &Natural, n: &Natural) -> Natural {
    f_pair(&(m + 1u8), &(n + 1u8)).unwrap()
}

fn cantor_adds_m(m: &Natural, n: &Natural) -> Natural {
    let s = m + n;
    (&s * (&s + 1u8)) / 2u8 + m
}

fn cantor_unpair_swapped(z: &Natural) -> Result<(Natural, Natural)> {
    sympair::cantor_unpair(z).map(|(m, n)| (n, m))
}

/// Closed-form F inverse with the branch selector taken from the wrong side.
fn f_unpair_wrong_branch(c: &Natural) -> Result<CanonicalPair> {
    let cs = BigInt::from(c.clone());
    let t = BigInt::from(floor_sqrt(c));
    let one = BigInt::one();
    let a = sgn(&(&cs - &t * &t));
    let b = BigInt::from(sgn_prime(&(&t * &t + &t - &cs)));
    let fixed = (&one - &a) * &t;
    let m = &fixed + &a * ((&t + &one) * (&t + &one + &b) - &cs);
    let n = &fixed + &a * (&cs - &t * (&t + &b));
    let (m, n) = (m.to_biguint().unwrap_or_default(), n.to_biguint().unwrap_or_default());
    Ok(CanonicalPair::from_unordered(m, n))
}

fn g_unpair_unshifted(c: &Natural) -> Result<CanonicalPair> {
    sympair::f_unpair(&(c + 1u8))
}

#[test]
fn baseline_passes() {
    assert!(run_checks(LIMIT, &Formulas::default()).unwrap().all_passed());
}

#[test]
fn forward_mutations_are_caught() {
    let base = Formulas::default();
    assert_caught("F uses max", Formulas { f_pair: f_with_max, ..base });
    assert_caught("F rounds up", Formulas { f_pair: f_rounds_up, ..base });
    assert_caught("F wrong diagonal", Formulas { f_pair: f_wrong_diagonal, ..base });
    assert_caught("G missing -1", Formulas { g_pair: g_missing_shift, ..base });
    assert_caught("Cantor adds m", Formulas { cantor_pair: cantor_adds_m, ..base });
}

#[test]
fn inverse_mutations_are_caught() {
    let base = Formulas::default();
    assert_caught("F inverse wrong branch", Formulas { f_unpair: f_unpair_wrong_branch, ..base });
    assert_caught("G inverse unshifted", Formulas { g_unpair: g_unpair_unshifted, ..base });
    assert_caught("Cantor inverse swapped", Formulas { cantor_unpair: cantor_unpair_swapped, ..base });
}
