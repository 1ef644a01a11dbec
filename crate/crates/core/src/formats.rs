//! Edge-list documents and graph6 strings.
//!
//! Edge list:
//!
//! ```text
//! # comment
//! n 4
//! 0 1
//! 1 2
//! ```
//!
//! graph6 (orders up to 62): one byte `n + 63`, then the upper triangle in
//! column order `(0,1), (0,2), (1,2), (0,3), ...`, six bits per byte, each
//! byte offset by 63, padded with zero bits.

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, MAX_VERTICES};

const GRAPH6_MAX_ORDER: usize = 62;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut graph: Option<Graph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let Some(g) = graph.as_mut() else {
            let [tag, count] = fields[..] else {
                return Err(parse_err(lineno, "expected header `n <count>`"));
            };
            if tag != "n" {
                return Err(parse_err(lineno, "expected header `n <count>`"));
            }
            let n: usize = count
                .parse()
                .map_err(|_| parse_err(lineno, format!("bad vertex count {count:?}")))?;
            if n > MAX_VERTICES {
                return Err(Error::TooLarge {
                    n,
                    max: MAX_VERTICES,
                });
            }
            graph = Some(Graph::new(n)?);
            continue;
        };
        let [a, b] = fields[..] else {
            return Err(parse_err(lineno, "expected `u v`"));
        };
        let endpoint = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| parse_err(lineno, format!("bad vertex {s:?}")))
        };
        g.add_edge(endpoint(a)?, endpoint(b)?)?;
    }
    graph.ok_or_else(|| parse_err(0, "missing header `n <count>`"))
}

/// Canonical document: header, then edges `u v` with `u < v` in order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

fn triangle_pairs(n: usize) -> impl Iterator<Item = Edge> {
    (1..n).flat_map(|v| (0..v).map(move |u| (u, v)))
}

pub fn parse_graph6(line: &str) -> Result<Graph> {
    let bytes = line.trim_end_matches(['\n', '\r']).as_bytes();
    let (&head, body) = bytes
        .split_first()
        .ok_or_else(|| parse_err(1, "empty graph6 string"))?;
    if head == 126 {
        return Err(parse_err(1, "graph6 orders above 62 are not supported"));
    }
    if !(63..=125).contains(&head) {
        return Err(parse_err(
            1,
            format!("invalid graph6 character {:?}", head as char),
        ));
    }
    let n = (head - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if let Some(&c) = body.iter().find(|c| !(63..=126).contains(*c)) {
        return Err(parse_err(
            1,
            format!("invalid graph6 character {:?}", c as char),
        ));
    }
    if body.len() < need {
        return Err(parse_err(
            1,
            format!("truncated graph6: {} of {need} data bytes", body.len()),
        ));
    }
    if body.len() > need {
        return Err(parse_err(
            1,
            format!(
                "trailing graph6 data: {} bytes, expected {need}",
                body.len()
            ),
        ));
    }
    let mut g = Graph::new(n)?;
    for (k, (u, v)) in triangle_pairs(n).enumerate() {
        let byte = body[k / 6] - 63;
        if byte >> (5 - k % 6) & 1 == 1 {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(Error::TooLarge {
            n,
            max: GRAPH6_MAX_ORDER,
        });
    }
    let mut out = vec![n as u8 + 63];
    let mut acc = 0u8;
    let mut filled = 0;
    for (u, v) in triangle_pairs(n) {
        acc = acc << 1 | g.has_edge(u, v) as u8;
        filled += 1;
        if filled == 6 {
            out.push(acc + 63);
            acc = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 is ASCII"))
}
