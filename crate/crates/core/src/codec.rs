//! graph6 and sparse6 encodings, plus a brute-force canonical code.
//!
//! Both formats follow nauty's `formats.txt`: every byte is a 6-bit group
//! offset by 63, the vertex count uses the `N(n)` header, graph6 stores the
//! upper triangle column by column, and sparse6 (leading `:`) stores a
//! stream of `(b, x)` pairs. Malformed padding is rejected, not repaired.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::Multigraph;

const BIAS: u8 = 63;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodecError {
    #[error("empty graph code")]
    Empty,
    #[error("character {ch:?} at position {pos} is outside the printable range 63..=126")]
    BadCharacter { ch: char, pos: usize },
    #[error("malformed length header")]
    BadHeader,
    #[error("expected {expected} data bytes, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("nonzero padding bits")]
    NonzeroPadding,
    #[error("malformed sparse6 padding")]
    BadSparsePadding,
    #[error("sparse6 code must start with ':'")]
    NotSparse6,
    #[error("graph6 cannot encode {0}")]
    NotSimple(&'static str),
    #[error("canonical codes are limited to 10 vertices, got {0}")]
    TooLarge(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CodeFormat {
    Graph6,
    Sparse6,
}

/// A graph6 or sparse6 string.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GraphCode(String);

impl GraphCode {
    pub fn new(text: impl Into<String>) -> Result<Self, CodecError> {
        let text = text.into();
        if text.is_empty() {
            return Err(CodecError::Empty);
        }
        let body = text.strip_prefix(':').unwrap_or(&text);
        check_printable(body, text.len() - body.len())?;
        Ok(GraphCode(text))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn format(&self) -> CodeFormat {
        if self.0.starts_with(':') {
            CodeFormat::Sparse6
        } else {
            CodeFormat::Graph6
        }
    }

    pub fn decode(&self) -> Result<Multigraph, CodecError> {
        match self.format() {
            CodeFormat::Graph6 => parse_graph6(&self.0),
            CodeFormat::Sparse6 => parse_sparse6(&self.0),
        }
    }
}

impl fmt::Display for GraphCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for GraphCode {
    type Err = CodecError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GraphCode::new(s)
    }
}

/// Decode either format, dispatching on the leading `:`.
pub fn parse_code(text: &str) -> Result<Multigraph, CodecError> {
    GraphCode::new(text.trim_end_matches(['\n', '\r']))?.decode()
}

fn check_printable(s: &str, offset: usize) -> Result<(), CodecError> {
    for (i, ch) in s.chars().enumerate() {
        if !(63..=126).contains(&(ch as u32)) {
            return Err(CodecError::BadCharacter { ch, pos: i + offset });
        }
    }
    Ok(())
}

fn encode_n(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    }
}

/// Returns `(n, header length)`.
fn decode_n(bytes: &[u8]) -> Result<(usize, usize), CodecError> {
    let group = |b: u8| (b - BIAS) as usize;
    match bytes {
        [] => Err(CodecError::BadHeader),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(CodecError::BadHeader);
            }
            let n = rest[..6].iter().fold(0, |acc, &b| (acc << 6) | group(b));
            if n <= 258_047 {
                return Err(CodecError::BadHeader);
            }
            Ok((n, 8))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(CodecError::BadHeader);
            }
            let n = rest[..3].iter().fold(0, |acc, &b| (acc << 6) | group(b));
            if n <= 62 {
                return Err(CodecError::BadHeader);
            }
            Ok((n, 4))
        }
        [b, ..] => Ok((group(*b), 1)),
    }
}

struct BitWriter {
    out: Vec<u8>,
    cur: u8,
    filled: u8,
}

impl BitWriter {
    fn new(out: Vec<u8>) -> Self {
        BitWriter { out, cur: 0, filled: 0 }
    }

    fn push(&mut self, bit: bool) {
        self.cur = (self.cur << 1) | u8::from(bit);
        self.filled += 1;
        if self.filled == 6 {
            self.out.push(self.cur + BIAS);
            self.cur = 0;
            self.filled = 0;
        }
    }

    fn push_bits(&mut self, value: usize, width: u32) {
        for i in (0..width).rev() {
            self.push((value >> i) & 1 == 1);
        }
    }

    fn free_bits(&self) -> u8 {
        if self.filled == 0 {
            0
        } else {
            6 - self.filled
        }
    }
}

struct BitReader<'a> {
    data: &'a [u8],
    pos: usize,
}

impl<'a> BitReader<'a> {
    fn remaining(&self) -> usize {
        self.data.len() * 6 - self.pos
    }

    fn read(&mut self) -> bool {
        let byte = self.data[self.pos / 6] - BIAS;
        let bit = (byte >> (5 - self.pos % 6)) & 1 == 1;
        self.pos += 1;
        bit
    }

    fn read_bits(&mut self, width: u32) -> usize {
        (0..width).fold(0, |acc, _| (acc << 1) | usize::from(self.read()))
    }
}

pub fn parse_graph6(text: &str) -> Result<Multigraph, CodecError> {
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    if text.is_empty() {
        return Err(CodecError::Empty);
    }
    check_printable(text, 0)?;
    let bytes = text.as_bytes();
    let (n, header) = decode_n(bytes)?;
    let data = &bytes[header..];
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if data.len() != expected {
        return Err(CodecError::WrongLength { expected, found: data.len() });
    }
    let mut reader = BitReader { data, pos: 0 };
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if reader.read() {
                edges.push((i, j));
            }
        }
    }
    while reader.remaining() > 0 {
        if reader.read() {
            return Err(CodecError::NonzeroPadding);
        }
    }
    Ok(Multigraph::new(n, edges).expect("decoded endpoints are in range"))
}

pub fn encode_graph6(g: &Multigraph) -> Result<GraphCode, CodecError> {
    if g.has_loop() {
        return Err(CodecError::NotSimple("loops"));
    }
    if g.max_multiplicity() > 1 {
        return Err(CodecError::NotSimple("parallel edges"));
    }
    let n = g.order();
    let matrix = g.multiplicity_matrix();
    let mut header = Vec::new();
    encode_n(n, &mut header);
    let mut w = BitWriter::new(header);
    for j in 1..n {
        for i in 0..j {
            w.push(matrix[i * n + j] > 0);
        }
    }
    while w.filled != 0 {
        w.push(false);
    }
    Ok(GraphCode(String::from_utf8(w.out).expect("ascii")))
}

/// Bits needed to write `n - 1` in binary (0 for n <= 1).
fn sparse6_width(n: usize) -> u32 {
    let mut k = 0;
    while n > 1 && (1usize << k) < n {
        k += 1;
    }
    k
}

pub fn parse_sparse6(text: &str) -> Result<Multigraph, CodecError> {
    let body = text.strip_prefix(">>sparse6<<").unwrap_or(text);
    let body = body.strip_prefix(':').ok_or(CodecError::NotSparse6)?;
    if body.is_empty() {
        return Err(CodecError::BadHeader);
    }
    check_printable(body, 1)?;
    let bytes = body.as_bytes();
    let (n, header) = decode_n(bytes)?;
    let k = sparse6_width(n);
    let mut reader = BitReader { data: &bytes[header..], pos: 0 };
    let mut edges = Vec::new();
    let mut v = 0usize;
    while reader.remaining() > k as usize {
        let start = reader.pos;
        if reader.read() {
            v += 1;
        }
        let x = reader.read_bits(k);
        if x > v {
            v = x;
        } else if v < n {
            edges.push((x, v));
        } else if v >= n {
            // Padding pair; the rest of the stream must be padding too.
            reader.pos = start;
            break;
        }
    }
    // Leftover bits: either all ones, or a single zero followed by ones
    // (the n = 2^k special case). Anything else is malformed.
    let leftover = reader.remaining();
    if leftover >= 6 {
        return Err(CodecError::BadSparsePadding);
    }
    let mut tail = Vec::with_capacity(leftover);
    while reader.remaining() > 0 {
        tail.push(reader.read());
    }
    let ok = tail.iter().all(|&b| b) || (tail.first() == Some(&false) && tail[1..].iter().all(|&b| b));
    if !ok {
        return Err(CodecError::BadSparsePadding);
    }
    Ok(Multigraph::new(n, edges).expect("decoded endpoints are in range"))
}

/// Straightforward sparse6 encoder with nauty's edge order and padding, so
/// codes produced by nauty tools round-trip byte for byte.
pub fn encode_sparse6(g: &Multigraph) -> GraphCode {
    let n = g.order();
    let k = sparse6_width(n);
    let mut header = vec![b':'];
    encode_n(n, &mut header);
    let mut w = BitWriter::new(header);
    let sorted = g.with_sorted_edges();
    let mut cur = 0usize;
    for &(u, v) in sorted.edges() {
        if v == cur {
            w.push(false);
            w.push_bits(u, k);
        } else if v == cur + 1 {
            w.push(true);
            w.push_bits(u, k);
            cur = v;
        } else {
            w.push(true);
            w.push_bits(v, k);
            w.push(false);
            w.push_bits(u, k);
            cur = v;
        }
    }
    let free = w.free_bits();
    if free > 0 {
        let special = n > 1 && n == (1 << k) && free as u32 > k && cur == n - 2;
        if special {
            w.push(false);
        }
        while w.filled != 0 {
            w.push(true);
        }
    }
    GraphCode(String::from_utf8(w.out).expect("ascii"))
}

/// graph6 for simple graphs, sparse6 otherwise.
pub fn encode_auto(g: &Multigraph) -> GraphCode {
    encode_graph6(g).unwrap_or_else(|_| encode_sparse6(g))
}

/// A string equal for two multigraphs iff they are isomorphic.
///
/// The key of a labelling is its degree sequence followed by the upper
/// triangle of the multiplicity matrix in column order; the canonical code
/// is the sparse6 string of the labelling with the lexicographically largest
/// key over all vertex permutations. Since the degree sequence leads the
/// key, only degree-sorted labellings can win, and the search only visits
/// those. Loops are kept on the diagonal.
pub fn canonical_code(g: &Multigraph) -> Result<String, CodecError> {
    let n = g.order();
    if n > 10 {
        return Err(CodecError::TooLarge(n));
    }
    let perm = canonical_labelling(g);
    Ok(encode_sparse6(&g.relabel(&perm)).0)
}

/// `perm[v]` is the canonical position of vertex `v`.
fn canonical_labelling(g: &Multigraph) -> Vec<usize> {
    let n = g.order();
    let m = g.multiplicity_matrix();
    let deg = g.degrees();
    let mut order_deg = deg.clone();
    order_deg.sort_unstable_by(|a, b| b.cmp(a));

    struct Search<'a> {
        n: usize,
        m: &'a [u32],
        deg: &'a [usize],
        target: &'a [usize],
        placed: Vec<usize>,
        used: Vec<bool>,
        key: Vec<u32>,
        best: Option<(Vec<u32>, Vec<usize>)>,
    }

    impl Search<'_> {
        fn go(&mut self, pos: usize) {
            if pos == self.n {
                let better = match &self.best {
                    None => true,
                    Some((k, _)) => self.key > *k,
                };
                if better {
                    self.best = Some((self.key.clone(), self.placed.clone()));
                }
                return;
            }
            for v in 0..self.n {
                if self.used[v] || self.deg[v] != self.target[pos] {
                    continue;
                }
                let base = self.key.len();
                // Column `pos`: diagonal first, then rows 0..pos.
                self.key.push(self.m[v * self.n + v]);
                for &w in &self.placed {
                    self.key.push(self.m[w * self.n + v]);
                }
                let keep = match &self.best {
                    None => true,
                    Some((k, _)) => self.key[..] >= k[..self.key.len()],
                };
                if keep {
                    self.used[v] = true;
                    self.placed.push(v);
                    self.go(pos + 1);
                    self.placed.pop();
                    self.used[v] = false;
                }
                self.key.truncate(base);
            }
        }
    }

    let mut s = Search {
        n,
        m: &m,
        deg: &deg,
        target: &order_deg,
        placed: Vec::with_capacity(n),
        used: vec![false; n],
        key: Vec::new(),
        best: None,
    };
    s.go(0);
    let placed = s.best.map(|(_, p)| p).unwrap_or_default();
    let mut perm = vec![0; n];
    for (pos, &v) in placed.iter().enumerate() {
        perm[v] = pos;
    }
    perm
}
