//! Multiplicity-aware subgraph monomorphism and the forcing-subgraph filter.
//!
//! A pattern embeds in a host when there is an injective vertex map under
//! which every pattern edge lands on a distinct host edge, i.e. host
//! multiplicities dominate pattern multiplicities pairwise. If a graph with
//! `χ'_c = Δ + 1` embeds in a host of the same `Δ`, the host has
//! `χ'_c ≥ Δ + 1`; for simple hosts Vizing makes this an equality.

use std::fmt;
use std::path::Path;

use thiserror::Error;

use crate::codec::{encode_auto, parse_code, CodecError, GraphCode};
use crate::fraction::Fraction;
use crate::graph::Multigraph;

struct Matcher<'a> {
    host_n: usize,
    host_mult: Vec<u32>,
    host_deg: Vec<usize>,
    pat_n: usize,
    pat_mult: Vec<u32>,
    pat_deg: Vec<usize>,
    order: &'a [usize],
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Matcher<'_> {
    fn fits(&self, v: usize, h: usize, depth: usize) -> bool {
        if self.used[h] || self.host_deg[h] < self.pat_deg[v] {
            return false;
        }
        if self.host_mult[h * self.host_n + h] < self.pat_mult[v * self.pat_n + v] {
            return false;
        }
        self.order[..depth].iter().all(|&u| {
            self.host_mult[self.map[u] * self.host_n + h] >= self.pat_mult[u * self.pat_n + v]
        })
    }

    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        for h in 0..self.host_n {
            if self.fits(v, h, depth) {
                self.map[v] = h;
                self.used[h] = true;
                if self.extend(depth + 1) {
                    return true;
                }
                self.used[h] = false;
            }
        }
        false
    }
}

/// Pattern vertices in search order: start from a max-degree vertex, then
/// repeatedly take the unplaced vertex with most edges to placed ones,
/// breaking ties by degree.
fn search_order(pattern: &Multigraph) -> Vec<usize> {
    let n = pattern.order();
    let deg = pattern.degrees();
    let mult = pattern.multiplicity_matrix();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let links: u32 = order.iter().map(|&u: &usize| mult[u * n + v]).sum();
                (links, deg[v], std::cmp::Reverse(v))
            })
            .expect("unplaced vertex");
        placed[next] = true;
        order.push(next);
    }
    order
}

pub fn contains_monomorphic(host: &Multigraph, pattern: &Multigraph) -> bool {
    if pattern.order() > host.order() || pattern.size() > host.size() {
        return false;
    }
    if pattern.max_degree() > host.max_degree() {
        return false;
    }
    let order = search_order(pattern);
    let mut m = Matcher {
        host_n: host.order(),
        host_mult: host.multiplicity_matrix(),
        host_deg: host.degrees(),
        pat_n: pattern.order(),
        pat_mult: pattern.multiplicity_matrix(),
        pat_deg: pattern.degrees(),
        order: &order,
        map: vec![usize::MAX; pattern.order()],
        used: vec![false; host.order()],
    };
    m.extend(0)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("line {line}: expected code, delta and value separated by tabs")]
    Fields { line: usize },
    #[error("line {line}: {source}")]
    Code { line: usize, source: CodecError },
    #[error("line {line}: {what}")]
    Value { line: usize, what: String },
    #[error("{0}")]
    Io(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForcingEntry {
    pub pattern: Multigraph,
    pub delta: usize,
    pub value: Fraction,
    pub code: GraphCode,
}

impl ForcingEntry {
    /// Entry for `pattern`, whose circular chromatic index must already be
    /// known to be `Δ + 1`.
    pub fn new(pattern: Multigraph) -> Self {
        let pattern = pattern.with_sorted_edges();
        let delta = pattern.max_degree();
        ForcingEntry {
            code: encode_auto(&pattern),
            value: Fraction::integer(delta as u64 + 1),
            delta,
            pattern,
        }
    }
}

impl fmt::Display for ForcingEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\t{}\t{}", self.code, self.delta, self.value)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ForcingCatalog {
    pub entries: Vec<ForcingEntry>,
}

impl ForcingCatalog {
    /// The shipped catalog: the two subcubic exceptions, `K5`, `K5 - e` with
    /// a pendant at a degree-3 vertex, and two larger forcers.
    pub fn builtin() -> Self {
        let k4_sub = Multigraph::new(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 4)]).unwrap();
        let triple_sub = Multigraph::new(3, [(0, 1), (0, 1), (0, 2), (1, 2)]).unwrap();
        let k5_minus_pendant = Multigraph::new(
            6,
            [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4), (0, 5)],
        )
        .unwrap();
        let mut entries = vec![
            ForcingEntry::new(k4_sub),
            ForcingEntry::new(triple_sub),
            ForcingEntry::new(Multigraph::complete(5)),
            ForcingEntry::new(k5_minus_pendant),
        ];
        for code in ["HEhbtjK", "HCRUnbU"] {
            entries.push(ForcingEntry::new(parse_code(code).expect("builtin code")));
        }
        ForcingCatalog { entries }
    }

    pub fn parse(text: &str) -> Result<Self, CatalogError> {
        let mut entries = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let raw = raw.trim_end_matches('\r');
            if raw.trim().is_empty() || raw.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = raw.split('\t').collect();
            let [code, delta, value] = fields[..] else {
                return Err(CatalogError::Fields { line });
            };
            let code: GraphCode = code.parse().map_err(|source| CatalogError::Code { line, source })?;
            let pattern = code.decode().map_err(|source| CatalogError::Code { line, source })?;
            let delta: usize = delta
                .trim()
                .parse()
                .map_err(|_| CatalogError::Value { line, what: format!("bad delta {delta:?}") })?;
            let value: Fraction = value
                .trim()
                .parse()
                .map_err(|_| CatalogError::Value { line, what: format!("bad value {value:?}") })?;
            if pattern.max_degree() != delta {
                return Err(CatalogError::Value {
                    line,
                    what: format!("pattern has max degree {}, not {delta}", pattern.max_degree()),
                });
            }
            if value != Fraction::integer(delta as u64 + 1) {
                return Err(CatalogError::Value { line, what: format!("value {value} is not delta + 1") });
            }
            entries.push(ForcingEntry { pattern, delta, value, code });
        }
        Ok(ForcingCatalog { entries })
    }

    pub fn load(path: &Path) -> Result<Self, CatalogError> {
        let text = std::fs::read_to_string(path).map_err(|e| CatalogError::Io(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn extend(&mut self, other: ForcingCatalog) {
        self.entries.extend(other.entries);
    }
}

impl fmt::Display for ForcingCatalog {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            writeln!(f, "{e}")?;
        }
        Ok(())
    }
}

/// First catalog entry with the host's `Δ` that embeds in `g`.
pub fn forcing_filter<'c>(g: &Multigraph, catalog: &'c ForcingCatalog) -> Option<&'c ForcingEntry> {
    let delta = g.max_degree();
    catalog
        .entries
        .iter()
        .find(|e| e.delta == delta && contains_monomorphic(g, &e.pattern))
}
