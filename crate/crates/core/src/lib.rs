//! Symmetric invertible pairing functions over arbitrary-precision integers.
//!
//! * [`f_pair`] / [`f_unpair`]: symmetric bijection between unordered pairs of
//!   positive integers and the positive integers.
//! * [`g_pair`] / [`g_unpair`]: the same construction on ℕ, with
//!   `G(m, n) = F(m+1, n+1) − 1`.
//! * [`cantor_pair`] / [`cantor_unpair`]: Cantor's ordered pairing on ℕ.
//!
//! The [`enumeration`] module walks canonical pairs diagonal by diagonal and
//! is used as an independent oracle for the closed-form inverses. The
//! [`codec`] module builds tuple and undirected-edge keys on top.

pub mod arith;
pub mod check;
pub mod cli;
pub mod codec;
pub mod enumeration;
mod error;
pub mod pairing;
mod scheme;
pub mod table;

pub use arith::{floor_sqrt, max2, min2, residue, sgn, sgn_prime};
pub use codec::{
    decode_tuple, decode_unordered, edge_keys, encode_edge_stream, encode_tuple, encode_unordered,
    EdgeKey, TupleCode,
};
pub use enumeration::{check_lemmas, diagonal_elements, rank, unrank, CanonicalOrder, DiagonalIndex, Rank};
pub use error::{Error, Result};
pub use pairing::{
    cantor_pair, cantor_unpair, f_pair, f_unpair, g_pair, g_unpair, pair, unpair, CanonicalPair,
};
pub use scheme::Scheme;
pub use table::{render_table, TableFormat, TableSpec};

/// Non-negative integer of unbounded size.
pub type Natural = num_bigint::BigUint;

/// Signed integer of unbounded size.
pub type SignedInt = num_bigint::BigInt;

/// Parses a plain decimal natural: ASCII digits only, no sign or grouping.
pub fn parse_natural(s: &str) -> Option<Natural> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    Natural::parse_bytes(s.as_bytes(), 10)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_parsing() {
        assert_eq!(parse_natural("0"), Some(Natural::from(0u8)));
        assert_eq!(parse_natural("007"), Some(Natural::from(7u8)));
        assert_eq!(
            parse_natural("340282366920938463463374607431768211456"),
            Some(Natural::from(1u8) << 128u32)
        );
        for bad in ["", "+1", "-1", "1_000", "1,000", " 1", "0x10", "1e3"] {
            assert_eq!(parse_natural(bad), None, "{bad:?}");
        }
    }
}
