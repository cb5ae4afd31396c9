//! The graph6 format: a size prefix, then the upper triangle of the adjacency
//! matrix column by column, six bits per printable byte.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

const HEADER: &str = ">>graph6<<";

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            k += 1;
            if k == 6 {
                out.push(acc + 63);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

fn err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        pos,
        msg: msg.into(),
    }
}

pub fn decode(s: &str) -> Result<Graph> {
    let start = if s.starts_with(HEADER) { HEADER.len() } else { 0 };
    let bytes = s[start..].trim_end().as_bytes();
    let at = |i: usize| start + i;
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(at(i), format!("byte {b:#04x} is not graph6")));
        }
    }
    let Some(&first) = bytes.first() else {
        return Err(err(at(0), "empty graph6 string"));
    };
    let (n, mut pos) = if first < 126 {
        ((first - 63) as usize, 1)
    } else {
        if bytes.get(1) == Some(&126) {
            return Err(err(at(1), format!("order exceeds {MAX_ORDER}")));
        }
        if bytes.len() < 4 {
            return Err(err(at(bytes.len()), "truncated order"));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, 4)
    };
    if n > MAX_ORDER {
        return Err(err(at(0), format!("order {n} exceeds {MAX_ORDER}")));
    }
    let needed = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if bytes.len() - pos != needed {
        return Err(err(
            at(bytes.len().min(pos + needed)),
            format!("expected {needed} data bytes for order {n}, found {}", bytes.len() - pos),
        ));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 6;
    let mut cur = 0u8;
    for j in 1..n {
        for i in 0..j {
            if k == 6 {
                cur = bytes[pos] - 63;
                pos += 1;
                k = 0;
            }
            if cur & (1 << (5 - k)) != 0 {
                g.link(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}
