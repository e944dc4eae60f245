//! graph6 (short form, n <= 62) and plain edge-list text formats.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

fn g6_err(offset: usize, msg: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        msg: msg.into(),
    }
}

fn payload_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decode one graph6 line. Surrounding whitespace is ignored.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let lead = text.len() - text.trim_start().len();
    let bytes = text.trim().as_bytes();
    let header = *bytes.first().ok_or_else(|| g6_err(lead, "empty input"))?;
    if !(63..=126).contains(&header) {
        return Err(g6_err(
            lead,
            format!("header byte {header} outside 63..=126"),
        ));
    }
    if header == 126 {
        return Err(g6_err(
            lead,
            "multi-byte size header (n > 62) is not supported",
        ));
    }
    let n = (header - 63) as usize;
    let need = payload_len(n);
    let payload = &bytes[1..];
    for (i, &b) in payload.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(g6_err(lead + 1 + i, format!("byte {b} outside 63..=126")));
        }
    }
    if payload.len() < need {
        return Err(g6_err(
            lead + bytes.len(),
            format!("truncated payload: {} of {need} bytes", payload.len()),
        ));
    }
    if payload.len() > need {
        return Err(g6_err(lead + 1 + need, "trailing bytes after payload"));
    }

    let mut g = Graph::empty(n)?;
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = payload[bit / 6] - 63;
            if byte >> (5 - bit % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            bit += 1;
        }
    }
    Ok(g)
}

/// Encode in canonical graph6 short form, without the `>>graph6<<` header.
pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let mut out = Vec::with_capacity(1 + payload_len(n));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Parse `n` on the first line followed by one `u v` pair per line (0-based).
/// Blank lines and lines starting with `#` are skipped; duplicate edges collapse.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let err = |line: usize, msg: String| Error::EdgeList { line, msg };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (first, header) = lines
        .next()
        .ok_or_else(|| err(1, "missing vertex count".into()))?;
    let n: usize = header.parse().map_err(|_| {
        err(
            first,
            format!("vertex count {header:?} is not a non-negative integer"),
        )
    })?;
    if n > MAX_VERTICES {
        return Err(err(
            first,
            format!("{n} vertices is above the maximum of {MAX_VERTICES}"),
        ));
    }
    let mut g = Graph::empty(n)?;
    for (line, text) in lines {
        let mut tokens = text.split_whitespace();
        let mut endpoint = || -> Result<usize> {
            let tok = tokens
                .next()
                .ok_or_else(|| err(line, "expected two vertices".into()))?;
            tok.parse::<usize>()
                .map_err(|_| err(line, format!("{tok:?} is not a vertex number")))
        };
        let u = endpoint()?;
        let v = endpoint()?;
        if tokens.next().is_some() {
            return Err(err(line, "more than two tokens".into()));
        }
        if u >= n || v >= n {
            return Err(err(line, format!("vertex out of range 0..{n}")));
        }
        if u == v {
            return Err(err(line, format!("self-loop at vertex {u}")));
        }
        g.add_edge(u, v);
    }
    Ok(g)
}

/// graph6 or edge list, told apart by the first non-blank character: graph6 bytes start
/// at `?` (63), so a leading digit can only be an edge list.
pub fn parse_graph(text: &str) -> Result<Graph> {
    match text.trim_start().chars().next() {
        Some(c) if c.is_ascii_digit() || c == '#' => parse_edge_list(text),
        _ => parse_graph6(text),
    }
}
