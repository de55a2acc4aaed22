//! Circular `(p, q)`-edge-colourings: the integer model, verification, and
//! the decision back ends.
//!
//! A circular `p/q`-edge-colouring is modelled on `Z_p`: every edge gets a
//! colour in `0..p` and incident edges must be at circular distance at
//! least `q`.

mod backtrack;
mod cnf;
mod external;
mod heuristic;

use std::fmt;
use std::time::Duration;

use thiserror::Error;

use crate::graph::Multigraph;

pub use backtrack::{decide_backtrack, Backtrack};
pub use cnf::{emit_dimacs, encode_cnf, symmetry_edge, CnfInstance};
pub use external::{decide_external, parse_solver_output, External, SolverAnswer};
pub use heuristic::heuristic_class1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColourError {
    #[error("the graph has a loop, so it has no circular edge-colouring")]
    Loop,
    #[error("colouring has {got} entries but the graph has {want} edges")]
    LengthMismatch { got: usize, want: usize },
    #[error("colour {colour} on edge {edge} is outside 0..{p}")]
    ColourOutOfRange { edge: usize, colour: u32, p: u32 },
    #[error("invalid instance: p = {p}, q = {q}")]
    BadInstance { p: u32, q: u32 },
    #[error("solver protocol error: {0}")]
    Protocol(String),
    #[error("solver reported SAT but the decoded colouring is invalid")]
    Integrity,
    #[error("i/o error: {0}")]
    Io(String),
}

/// Circular distance of `a` and `b` in `Z_p`.
pub fn circular_distance(a: u32, b: u32, p: u32) -> u32 {
    let d = a.abs_diff(b) % p;
    d.min(p - d)
}

/// One colour in `0..p` per edge index, for the `(p, q)` instance.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeColouring {
    pub p: u32,
    pub q: u32,
    pub colours: Vec<u32>,
}

impl EdgeColouring {
    pub fn new(p: u32, q: u32, colours: Vec<u32>) -> Self {
        EdgeColouring { p, q, colours }
    }

    /// Add `shift` to every colour modulo `p`.
    pub fn rotated(&self, shift: u32) -> EdgeColouring {
        let colours = self.colours.iter().map(|&c| (c + shift % self.p) % self.p).collect();
        EdgeColouring { colours, ..self.clone() }
    }

    /// Map every colour `c` to `(p - c) mod p`.
    pub fn reflected(&self) -> EdgeColouring {
        let colours = self.colours.iter().map(|&c| (self.p - c) % self.p).collect();
        EdgeColouring { colours, ..self.clone() }
    }

    /// Render as a witness file: a `p q` header then `edge colour` lines.
    pub fn to_witness(&self) -> String {
        let mut s = format!("{} {}\n", self.p, self.q);
        for (i, c) in self.colours.iter().enumerate() {
            s.push_str(&format!("{i} {c}\n"));
        }
        s
    }

    pub fn from_witness(text: &str) -> Result<EdgeColouring, ColourError> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let bad = |l: &str| ColourError::Protocol(format!("bad witness line {l:?}"));
        let header = lines.next().ok_or_else(|| bad(""))?;
        let nums: Vec<u32> = header.split_whitespace().map(|t| t.parse()).collect::<Result<_, _>>().map_err(|_| bad(header))?;
        let [p, q] = nums[..] else { return Err(bad(header)) };
        let mut entries = Vec::new();
        for line in lines {
            let nums: Vec<usize> = line.split_whitespace().map(|t| t.parse()).collect::<Result<_, _>>().map_err(|_| bad(line))?;
            let [e, c] = nums[..] else { return Err(bad(line)) };
            entries.push((e, c as u32));
        }
        let mut colours = vec![None; entries.len()];
        for (e, c) in entries {
            match colours.get_mut(e) {
                Some(slot @ None) => *slot = Some(c),
                _ => return Err(ColourError::Protocol(format!("edge index {e} missing or repeated"))),
            }
        }
        let colours = colours.into_iter().collect::<Option<Vec<_>>>().ok_or_else(|| bad("gap in edge indices"))?;
        Ok(EdgeColouring { p, q, colours })
    }
}

/// Checks every incident pair of edges for circular distance at least `q`.
pub fn verify_colouring(g: &Multigraph, col: &EdgeColouring) -> Result<bool, ColourError> {
    if g.has_loop() {
        return Err(ColourError::Loop);
    }
    if col.colours.len() != g.size() {
        return Err(ColourError::LengthMismatch { got: col.colours.len(), want: g.size() });
    }
    if col.p == 0 {
        return Err(ColourError::BadInstance { p: col.p, q: col.q });
    }
    for (edge, &colour) in col.colours.iter().enumerate() {
        if colour >= col.p {
            return Err(ColourError::ColourOutOfRange { edge, colour, p: col.p });
        }
    }
    Ok(g.incidence_pairs()
        .into_iter()
        .all(|(i, j)| circular_distance(col.colours[i], col.colours[j], col.p) >= col.q))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Sat,
    Unsat,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Sat => "SAT",
            Verdict::Unsat => "UNSAT",
            Verdict::Unknown => "UNKNOWN",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Effort {
    Nodes(u64),
    Elapsed(Duration),
}

/// Verdict of one `(p, q)` decision. A witness is present iff the verdict
/// is SAT, and it has been re-verified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecisionOutcome {
    pub verdict: Verdict,
    pub witness: Option<EdgeColouring>,
    pub effort: Effort,
}

/// Something that can decide circular `(p, q)`-edge-colourability.
pub trait Decider: Send + Sync {
    fn decide(&self, g: &Multigraph, p: u32, q: u32) -> Result<DecisionOutcome, ColourError>;
}

impl<D: Decider + ?Sized> Decider for &D {
    fn decide(&self, g: &Multigraph, p: u32, q: u32) -> Result<DecisionOutcome, ColourError> {
        (**self).decide(g, p, q)
    }
}

impl<D: Decider + ?Sized> Decider for Box<D> {
    fn decide(&self, g: &Multigraph, p: u32, q: u32) -> Result<DecisionOutcome, ColourError> {
        (**self).decide(g, p, q)
    }
}

/// The external solver when a command is given, otherwise the native
/// backtracker. Budgets of `None` mean unlimited.
pub fn make_decider(solver: Option<&str>, budget_nodes: Option<u64>, budget_secs: Option<u64>) -> Box<dyn Decider> {
    let time = budget_secs.map(Duration::from_secs);
    match solver {
        Some(cmd) => Box::new(External::new(cmd).with_timeout(time)),
        None => Box::new(Backtrack { max_nodes: budget_nodes, max_time: time }),
    }
}

/// Answers that need no search: `Some(Sat)` for graphs without incident
/// edge pairs, `Some(Unsat)` when two incident edges cannot fit on a circle
/// of `p` colours, or when `q * |E|` exceeds `p` times the matching number
/// (each window of `q` consecutive colours is a matching).
pub(crate) fn trivial_verdict(g: &Multigraph, p: u32, q: u32) -> Option<Verdict> {
    let incident = g.max_degree() >= 2;
    if !incident {
        return Some(Verdict::Sat);
    }
    if p < 2 * q {
        return Some(Verdict::Unsat);
    }
    if q as u64 * g.size() as u64 > p as u64 * g.max_matching_size() as u64 {
        return Some(Verdict::Unsat);
    }
    None
}

pub(crate) fn check_instance(g: &Multigraph, p: u32, q: u32) -> Result<(), ColourError> {
    if g.has_loop() {
        return Err(ColourError::Loop);
    }
    if p == 0 || q == 0 {
        return Err(ColourError::BadInstance { p, q });
    }
    Ok(())
}
