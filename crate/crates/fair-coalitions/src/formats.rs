//! Text formats: graph6 (short form, order <= 62), plain edge lists, and
//! partition block files. Parse errors carry the byte offset of the offender.

use thiserror::Error;

use crate::graph::{Graph, VertexSet, MAX_ORDER};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{kind} at byte {offset}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub offset: usize,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("empty input")]
    Empty,
    #[error("byte {byte:#04x} is not a valid graph6 character")]
    InvalidChar { byte: u8 },
    #[error("long-form graph6 orders (n > {max}) are not supported", max = MAX_ORDER)]
    LongForm,
    #[error("order {got} exceeds the supported maximum {max}", max = MAX_ORDER)]
    OrderTooLarge { got: usize },
    #[error("input ends before the encoding is complete")]
    Truncated,
    #[error("unexpected data after the encoding")]
    TrailingData,
    #[error("nonzero padding bits")]
    DirtyPadding,
    #[error("malformed integer")]
    BadInteger,
    #[error("vertex {vertex} is out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("order must be at least 1")]
    ZeroOrder,
}

fn err<T>(kind: ParseErrorKind, offset: usize) -> Result<T, ParseError> {
    Err(ParseError { kind, offset })
}

/// Decodes one short-form graph6 line.
pub fn parse_graph6(line: &str) -> Result<Graph, ParseError> {
    let bytes = line.trim_end_matches(['\r', '\n']).as_bytes();
    if bytes.is_empty() {
        return err(ParseErrorKind::Empty, 0);
    }
    let b0 = bytes[0];
    if b0 == b'~' {
        return err(ParseErrorKind::LongForm, 0);
    }
    if !(63..=126).contains(&b0) {
        return err(ParseErrorKind::InvalidChar { byte: b0 }, 0);
    }
    let n = (b0 - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() < 1 + nbytes {
        return err(ParseErrorKind::Truncated, bytes.len());
    }
    if bytes.len() > 1 + nbytes {
        return err(ParseErrorKind::TrailingData, 1 + nbytes);
    }

    let mut edges = Vec::new();
    let mut bit = 0usize;
    // Column-major upper triangle: x(0,1), x(0,2), x(1,2), x(0,3), ...
    'cols: for j in 1..n {
        for i in 0..j {
            let byte = bytes[1 + bit / 6];
            if !(63..=126).contains(&byte) {
                return err(ParseErrorKind::InvalidChar { byte }, 1 + bit / 6);
            }
            let chunk = byte - 63;
            if chunk >> (5 - bit % 6) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
            if bit == nbits {
                break 'cols;
            }
        }
    }
    // Remaining pad bits in the last byte must be zero.
    if nbits % 6 != 0 {
        let last = bytes[nbytes] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return err(ParseErrorKind::DirtyPadding, nbytes);
        }
    }
    // Validate the last data byte's range too when n has no edges bits.
    if n == 0 {
        return err(ParseErrorKind::ZeroOrder, 0);
    }

    Graph::from_edges(n, &edges).map_err(|_| ParseError {
        kind: ParseErrorKind::ZeroOrder,
        offset: 0,
    })
}

/// Encodes a graph as short-form graph6.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    debug_assert!(n <= MAX_ORDER);
    let mut out = vec![63 + n as u8];
    let mut acc = 0u8;
    let mut fill = 0u8;
    for j in 1..n {
        for i in 0..j {
            acc <<= 1;
            if g.has_edge(i, j) {
                acc |= 1;
            }
            fill += 1;
            if fill == 6 {
                out.push(63 + acc);
                acc = 0;
                fill = 0;
            }
        }
    }
    if fill > 0 {
        out.push(63 + (acc << (6 - fill)));
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

struct Tokens<'a> {
    text: &'a [u8],
    pos: usize,
}

impl<'a> Tokens<'a> {
    fn new(text: &'a str) -> Self {
        Tokens {
            text: text.as_bytes(),
            pos: 0,
        }
    }

    fn next(&mut self) -> Option<(usize, &'a str)> {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        if self.pos >= self.text.len() {
            return None;
        }
        let start = self.pos;
        while self.pos < self.text.len() && !self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        let tok = std::str::from_utf8(&self.text[start..self.pos]).ok()?;
        Some((start, tok))
    }
}

fn parse_usize(tok: &str, offset: usize) -> Result<usize, ParseError> {
    tok.parse().map_err(|_| ParseError {
        kind: ParseErrorKind::BadInteger,
        offset,
    })
}

/// Parses the plain edge-list format: a leading order `n`, then
/// whitespace-separated `u v` pairs with 0-based labels.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut toks = Tokens::new(text);
    let (off, tok) = match toks.next() {
        Some(t) => t,
        None => return err(ParseErrorKind::Empty, 0),
    };
    let n = parse_usize(tok, off)?;
    if n == 0 {
        return err(ParseErrorKind::ZeroOrder, off);
    }
    if n > MAX_ORDER {
        return err(ParseErrorKind::OrderTooLarge { got: n }, off);
    }
    let mut edges = Vec::new();
    loop {
        let (uo, ut) = match toks.next() {
            Some(t) => t,
            None => break,
        };
        let u = parse_usize(ut, uo)?;
        let (vo, vt) = match toks.next() {
            Some(t) => t,
            None => return err(ParseErrorKind::Truncated, uo + ut.len()),
        };
        let v = parse_usize(vt, vo)?;
        if u >= n {
            return err(ParseErrorKind::VertexOutOfRange { vertex: u, order: n }, uo);
        }
        if v >= n {
            return err(ParseErrorKind::VertexOutOfRange { vertex: v, order: n }, vo);
        }
        if u == v {
            return err(ParseErrorKind::SelfLoop { vertex: u }, uo);
        }
        edges.push((u, v));
    }
    Ok(Graph::from_edges(n, &edges).expect("inputs were validated"))
}

/// Parses a partition block file: one block per line, space-separated vertex
/// ids. Blank lines are ignored. Structural validation (disjointness, cover)
/// happens in `Partition::new`.
pub fn parse_blocks(text: &str, order: usize) -> Result<Vec<VertexSet>, ParseError> {
    let mut blocks = Vec::new();
    let mut base = 0usize;
    for line in text.split('\n') {
        let mut set = VertexSet::EMPTY;
        let mut toks = Tokens::new(line);
        while let Some((off, tok)) = toks.next() {
            let v = parse_usize(tok, base + off)?;
            if v >= order {
                return err(
                    ParseErrorKind::VertexOutOfRange {
                        vertex: v,
                        order,
                    },
                    base + off,
                );
            }
            set.insert(v);
        }
        if !set.is_empty() {
            blocks.push(set);
        }
        base += line.len() + 1;
    }
    if blocks.is_empty() {
        return err(ParseErrorKind::Empty, 0);
    }
    Ok(blocks)
}
