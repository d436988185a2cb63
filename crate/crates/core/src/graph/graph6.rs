//! graph6 reader and writer.
//!
//! The size header is `63 + n` for `n < 63`, `~` plus three 6-bit groups for
//! `n < 258048`, and `~~` plus six groups beyond that. The body packs the
//! upper triangle column by column (`(0,1), (0,2), (1,2), (0,3), ...`), six
//! bits per printable byte, most significant bit first, offset by 63.

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        pos,
        msg: msg.into(),
    })
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(63 + n as u8);
    } else if n < 258048 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + ((n >> shift) & 63) as u8);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(63 + ((n >> shift) & 63) as u8);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Parses one graph6 string. Surrounding whitespace and a leading
/// `>>graph6<<` header are accepted; byte positions in errors refer to the
/// trimmed string.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return err(0, "empty input");
    }
    match bytes[0] {
        b':' => return err(0, "sparse6 input is not supported"),
        b'&' => return err(0, "digraph6 input is not supported"),
        _ => {}
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return err(i, format!("byte 0x{b:02x} outside the printable range 63..=126"));
        }
    }
    let group = |at: usize, len: usize| -> Result<usize> {
        if bytes.len() < at + len {
            return err(bytes.len(), "truncated size header");
        }
        Ok(bytes[at..at + len]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize))
    };
    let (n, body_start) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, 1)
    } else if bytes.get(1) != Some(&126) {
        let n = group(1, 3)?;
        if n < 63 {
            return err(1, format!("size {n} must use the short header"));
        }
        (n, 4)
    } else {
        let n = group(2, 6)?;
        if n < 258048 {
            return err(2, format!("size {n} must use a shorter header"));
        }
        (n, 8)
    };
    if n > 1 << 16 {
        return err(0, format!("graph with {n} vertices is too large"));
    }
    let body = &bytes[body_start..];
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if body.len() != need {
        let pos = body_start + body.len().min(need);
        return err(
            pos,
            format!("expected {need} body bytes for n = {n}, found {}", body.len()),
        );
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.set_edge(u, v);
            }
            k += 1;
        }
    }
    Ok(g)
}
