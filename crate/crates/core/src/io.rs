//! Graph serialization: a plain edge-list format and graph6.
//!
//! Edge list: first line `n m`, then `m` lines `u v` with `0 <= u < v < n`.
//! graph6: the standard printable-ASCII encoding, bit-exact.

use std::fmt;

use crate::graph::{Graph, GraphBuilder};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Graph6,
}

/// A parse failure, with the 1-based input line it occurred on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Malformed(String),
    SelfLoop { v: usize },
    VertexOutOfRange { v: usize, n: usize },
    DuplicateEdge { u: usize, v: usize },
    WrongEdgeCount { expected: usize, found: usize },
    Graph6(String),
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: ", self.line)?;
        match &self.kind {
            ParseErrorKind::Malformed(msg) => write!(f, "malformed line: {msg}"),
            ParseErrorKind::SelfLoop { v } => write!(f, "self-loop at vertex {v}"),
            ParseErrorKind::VertexOutOfRange { v, n } => {
                write!(f, "vertex {v} out of range for {n}-vertex graph")
            }
            ParseErrorKind::DuplicateEdge { u, v } => write!(f, "duplicate edge ({u}, {v})"),
            ParseErrorKind::WrongEdgeCount { expected, found } => {
                write!(f, "expected {expected} edges, found {found}")
            }
            ParseErrorKind::Graph6(msg) => write!(f, "invalid graph6: {msg}"),
        }
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph, ParseError> {
    match format {
        GraphFormat::EdgeList => parse_edgelist(text),
        GraphFormat::Graph6 => parse_graph6(text),
    }
}

pub fn serialize_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::EdgeList => to_edgelist(g),
        GraphFormat::Graph6 => to_graph6(g),
    }
}

pub fn parse_edgelist(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (lno, header) = lines
        .next()
        .ok_or_else(|| err(1, ParseErrorKind::Malformed("empty input".into())))?;
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| err(lno, ParseErrorKind::Malformed("expected vertex count".into())))?;
    let m: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| err(lno, ParseErrorKind::Malformed("expected edge count".into())))?;
    if it.next().is_some() {
        return Err(err(lno, ParseErrorKind::Malformed("trailing tokens in header".into())));
    }

    let mut b = GraphBuilder::new(n);
    let mut found = 0usize;
    let mut last_line = lno;
    for (lno, line) in lines {
        last_line = lno;
        let mut it = line.split_whitespace();
        let parse_id = |tok: Option<&str>| -> Result<usize, ParseError> {
            tok.and_then(|t| t.parse().ok())
                .ok_or_else(|| err(lno, ParseErrorKind::Malformed("expected two vertex ids".into())))
        };
        let u = parse_id(it.next())?;
        let v = parse_id(it.next())?;
        if it.next().is_some() {
            return Err(err(lno, ParseErrorKind::Malformed("trailing tokens".into())));
        }
        if u == v {
            return Err(err(lno, ParseErrorKind::SelfLoop { v: u }));
        }
        if u > v {
            return Err(err(
                lno,
                ParseErrorKind::Malformed(format!("endpoints not increasing: {u} {v}")),
            ));
        }
        if v >= n {
            return Err(err(lno, ParseErrorKind::VertexOutOfRange { v, n }));
        }
        if b.has_edge(u, v) {
            return Err(err(lno, ParseErrorKind::DuplicateEdge { u, v }));
        }
        b.add_edge(u, v);
        found += 1;
        if found > m {
            return Err(err(lno, ParseErrorKind::WrongEdgeCount { expected: m, found }));
        }
    }
    if found != m {
        return Err(err(last_line, ParseErrorKind::WrongEdgeCount { expected: m, found }));
    }
    Ok(b.build())
}

pub fn to_edgelist(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.vertex_count(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

const G6_HEADER: &str = ">>graph6<<";
const G6_MAX_N: usize = 258_047;

pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let mut s = text.trim();
    if let Some(rest) = s.strip_prefix(G6_HEADER) {
        s = rest;
    }
    let bytes = s.as_bytes();
    let g6 = |msg: &str| err(1, ParseErrorKind::Graph6(msg.into()));
    if bytes.is_empty() {
        return Err(g6("empty input"));
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(g6(&format!("byte {b} outside printable range 63..=126")));
        }
    }

    // N(n): one byte for n <= 62, '~' plus three bytes up to 258047
    let (n, mut pos) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(g6("graphs beyond 258047 vertices are not supported"));
        }
        if bytes.len() < 4 {
            return Err(g6("truncated vertex count"));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, 4)
    } else {
        ((bytes[0] - 63) as usize, 1)
    };

    let nbits = n * n.saturating_sub(1) / 2;
    let nchars = nbits.div_ceil(6);
    if bytes.len() - pos != nchars {
        return Err(g6(&format!(
            "expected {} data bytes for {} vertices, found {}",
            nchars,
            n,
            bytes.len() - pos
        )));
    }

    let mut b = GraphBuilder::new(n);
    let mut bit = 0usize;
    let mut cur = 0u8;
    for j in 1..n {
        for i in 0..j {
            if bit.is_multiple_of(6) {
                cur = bytes[pos] - 63;
                pos += 1;
            }
            if cur >> (5 - bit % 6) & 1 == 1 {
                b.add_edge(i, j);
            }
            bit += 1;
        }
    }
    // canonical encoding pads with zero bits
    if !bit.is_multiple_of(6) && cur & ((1 << (6 - bit % 6)) - 1) != 0 {
        return Err(g6("nonzero padding bits"));
    }
    Ok(b.build())
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    assert!(n <= G6_MAX_N, "graph too large for graph6 encoding");
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
    let mut cur = 0u8;
    let mut fill = 0;
    for j in 1..n {
        for i in 0..j {
            cur = (cur << 1) | g.has_edge(i, j) as u8;
            fill += 1;
            if fill == 6 {
                out.push(cur + 63);
                cur = 0;
                fill = 0;
            }
        }
    }
    if fill > 0 {
        out.push((cur << (6 - fill)) + 63);
    }
    String::from_utf8(out).unwrap()
}
