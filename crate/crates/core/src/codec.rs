//! Folding tuples and unordered pairs into single naturals.
//!
//! Ordered tuples fold left with Cantor pairing, since the symmetric
//! functions forget argument order. Unordered pairs (undirected edges) use
//! `F` or `G`, whose keys are invariant under endpoint swap.

use std::io::{BufRead, Write};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::pairing::{cantor_pair, cantor_unpair, f_unpair, g_unpair, pair, CanonicalPair};
use crate::{parse_natural, Natural, Scheme};

/// A tuple folded into one natural. The arity is not recoverable from the
/// code and travels alongside it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TupleCode {
    pub code: Natural,
    pub arity: usize,
}

pub fn encode_tuple(values: &[Natural]) -> Result<TupleCode> {
    let (first, rest) = values
        .split_first()
        .ok_or_else(|| Error::domain("cannot encode an empty tuple"))?;
    let code = rest
        .iter()
        .fold(first.clone(), |acc, v| cantor_pair(&acc, v));
    Ok(TupleCode { code, arity: values.len() })
}

/// Peels the last coordinate off with Cantor unpairing `arity − 1` times.
pub fn decode_tuple(t: &TupleCode) -> Result<Vec<Natural>> {
    if t.arity == 0 {
        return Err(Error::domain("tuple arity must be at least 1"));
    }
    let mut out = Vec::with_capacity(t.arity);
    let mut code = t.code.clone();
    for _ in 1..t.arity {
        let (head, last) = cantor_unpair(&code)?;
        out.push(last);
        code = head;
    }
    out.push(code);
    out.reverse();
    Ok(out)
}

/// Swap-invariant key for an unordered pair under a symmetric scheme.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeKey {
    key: Natural,
    scheme: Scheme,
}

impl EdgeKey {
    pub fn new(key: Natural, scheme: Scheme) -> Result<Self> {
        if !scheme.is_symmetric() {
            return Err(Error::NotSymmetric(scheme));
        }
        if scheme == Scheme::F && key.is_zero() {
            return Err(Error::domain("scheme f has no key 0"));
        }
        Ok(Self { key, scheme })
    }

    pub fn key(&self) -> &Natural {
        &self.key
    }

    pub fn scheme(&self) -> Scheme {
        self.scheme
    }
}

pub fn encode_unordered(u: &Natural, v: &Natural, scheme: Scheme) -> Result<EdgeKey> {
    if !scheme.is_symmetric() {
        return Err(Error::NotSymmetric(scheme));
    }
    Ok(EdgeKey { key: pair(scheme, u, v)?, scheme })
}

/// Recovers the `(max, min)` endpoints.
pub fn decode_unordered(k: &EdgeKey) -> Result<CanonicalPair> {
    match k.scheme {
        Scheme::F => f_unpair(&k.key),
        Scheme::G => g_unpair(&k.key),
        Scheme::Cantor => Err(Error::NotSymmetric(Scheme::Cantor)),
    }
}

/// Iterator of keys for an edge-list text stream.
///
/// Each non-blank line not starting with `#` must hold exactly two decimal
/// naturals separated by whitespace. Errors carry the 1-based line number.
pub fn edge_keys<R: BufRead>(input: R, scheme: Scheme) -> impl Iterator<Item = Result<Natural>> {
    input
        .lines()
        .enumerate()
        .filter_map(move |(idx, line)| {
            let line_no = idx + 1;
            let line = match line {
                Ok(l) => l,
                Err(e) => return Some(Err(Error::Io(e))),
            };
            let body = line.trim();
            if body.is_empty() || body.starts_with('#') {
                return None;
            }
            Some(edge_line(body, scheme).map_err(|message| Error::Line { line: line_no, message }))
        })
}

fn edge_line(body: &str, scheme: Scheme) -> std::result::Result<Natural, String> {
    let fields: Vec<&str> = body.split_whitespace().collect();
    let [u, v] = fields.as_slice() else {
        return Err(format!("expected two endpoints, found {} fields", fields.len()));
    };
    let parse = |s: &str| parse_natural(s).ok_or_else(|| format!("`{s}` is not a decimal natural"));
    let (u, v) = (parse(u)?, parse(v)?);
    pair(scheme, &u, &v).map_err(|e| e.to_string())
}

/// Writes one decimal key per edge line, LF-terminated, in input order.
/// Returns the number of keys written.
pub fn encode_edge_stream<R: BufRead, W: Write>(input: R, scheme: Scheme, mut output: W) -> Result<usize> {
    let mut count = 0;
    for key in edge_keys(input, scheme) {
        writeln!(output, "{}", key?)?;
        count += 1;
    }
    output.flush()?;
    Ok(count)
}
