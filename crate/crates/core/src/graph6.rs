//! graph6 encoding and decoding.
//!
//! Only the short header form (`n + 63`, `n <= 62`) can occur for graphs that
//! fit in a [`Graph`]; longer headers are recognised and rejected with a
//! capacity error.

use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::{check_capacity, Graph};

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            nbits += 1;
            if nbits == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push(((acc << (6 - nbits)) + 63) as char);
    }
    out
}

pub fn decode(line: &str) -> Result<Graph> {
    let s = line.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(Error::Graph6("empty line".into()));
    };
    if !(63..=126).contains(&first) {
        return Err(Error::Graph6(format!("invalid header byte {first:#04x}")));
    }
    if first == 126 {
        let n = long_order(bytes)?;
        check_capacity(n)?;
        return Err(Error::Graph6(format!("long header used for order {n}")));
    }
    let n = (first - 63) as usize;
    check_capacity(n)?;
    let body = &bytes[1..];
    let need = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if body.len() != need {
        return Err(Error::Graph6(format!(
            "expected {need} data bytes for {n} vertices, found {}",
            body.len()
        )));
    }
    let mut g = Graph::new(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6];
            if !(63..=126).contains(&byte) {
                return Err(Error::Graph6(format!("invalid data byte {byte:#04x}")));
            }
            if (byte - 63) & (1 << (5 - k % 6)) != 0 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    for &byte in body {
        if !(63..=126).contains(&byte) {
            return Err(Error::Graph6(format!("invalid data byte {byte:#04x}")));
        }
    }
    // Padding bits must be zero.
    if k % 6 != 0 {
        let last = body[body.len() - 1] - 63;
        if last & ((1 << (6 - k % 6)) - 1) != 0 {
            return Err(Error::Graph6("non-zero padding bits".into()));
        }
    }
    Ok(g)
}

fn long_order(bytes: &[u8]) -> Result<usize> {
    let field = |r: std::ops::Range<usize>| -> Result<usize> {
        let part = bytes
            .get(r)
            .ok_or_else(|| Error::Graph6("truncated header".into()))?;
        part.iter().try_fold(0usize, |acc, &b| {
            if (63..=126).contains(&b) {
                Ok((acc << 6) | (b - 63) as usize)
            } else {
                Err(Error::Graph6(format!("invalid header byte {b:#04x}")))
            }
        })
    };
    if bytes.get(1) == Some(&126) {
        field(2..8)
    } else {
        field(1..4)
    }
}

/// One decoded line of a graph6 stream.
pub struct Record {
    pub line_number: usize,
    pub graph: Result<Graph>,
}

/// Decode a newline-delimited graph6 stream, skipping blank lines.
pub fn read_stream<R: BufRead>(reader: R) -> impl Iterator<Item = std::io::Result<Record>> {
    reader
        .lines()
        .enumerate()
        .filter_map(|(i, line)| match line {
            Ok(l) if l.trim().is_empty() => None,
            Ok(l) => Some(Ok(Record {
                line_number: i + 1,
                graph: decode(l.trim()),
            })),
            Err(e) => Some(Err(e)),
        })
}
