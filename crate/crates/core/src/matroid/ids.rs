//! Element identifiers and their canonical ordering.

use std::cmp::Ordering;

use crate::error::{Error, Result};

/// Check that an element id is a nonempty token without whitespace or commas.
pub fn validate_id(id: &str) -> Result<()> {
    if id.is_empty() || id.chars().any(|c| c.is_whitespace() || c == ',') {
        return Err(Error::InvalidElementId(id.to_string()));
    }
    Ok(())
}

/// Natural ordering on ids: runs of ASCII digits compare numerically, everything
/// else compares by code point, and digit runs sort before non-digit runs.
/// So `1 < 1' < 1'' < 2 < 10 < a < e_gamma`, and `3_0 < 3_1 < 10_0`.
pub fn natural_cmp(a: &str, b: &str) -> Ordering {
    let ca = chunks(a);
    let cb = chunks(b);
    for (x, y) in ca.iter().zip(cb.iter()) {
        let ord = match (x, y) {
            (Chunk::Num(p), Chunk::Num(q)) => cmp_digits(p, q),
            (Chunk::Num(_), Chunk::Text(_)) => Ordering::Less,
            (Chunk::Text(_), Chunk::Num(_)) => Ordering::Greater,
            (Chunk::Text(p), Chunk::Text(q)) => p.cmp(q),
        };
        if ord != Ordering::Equal {
            return ord;
        }
    }
    ca.len().cmp(&cb.len()).then_with(|| a.cmp(b))
}

enum Chunk<'a> {
    Num(&'a str),
    Text(&'a str),
}

fn chunks(s: &str) -> Vec<Chunk<'_>> {
    let mut out = Vec::new();
    let bytes = s.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let digit = bytes[i].is_ascii_digit();
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() == digit {
            i += 1;
        }
        // `s` may contain multi-byte chars only in text runs, whose boundaries are ASCII digits.
        let piece = &s[start..i];
        out.push(if digit { Chunk::Num(piece) } else { Chunk::Text(piece) });
    }
    out
}

fn cmp_digits(p: &str, q: &str) -> Ordering {
    let p = p.trim_start_matches('0');
    let q = q.trim_start_matches('0');
    p.len().cmp(&q.len()).then_with(|| p.cmp(q))
}
