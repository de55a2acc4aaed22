//! CNF encoding of circular `(p, q)`-edge-colourability.
//!
//! Variable `x(e, c)` is true when edge `e` may take colour `c`. Clauses:
//! one at-least-one clause per edge, one binary conflict clause per incident
//! edge pair and colour pair at circular distance below `q`, and one unit
//! clause fixing an edge at a max-degree vertex to colour 0. There are no
//! at-most-one clauses: conflicts are binary, so keeping only the lowest
//! true colour of each edge in a model still gives a valid colouring.

use std::fmt::Write;

use super::{check_instance, circular_distance, ColourError};
use crate::graph::Multigraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfInstance {
    pub var_count: u32,
    pub clauses: Vec<Vec<i32>>,
    /// Colours per edge; variable of `(e, c)` is `e * colours + c + 1`.
    pub colours: u32,
    pub edges: usize,
}

impl CnfInstance {
    pub fn var(&self, edge: usize, colour: u32) -> i32 {
        debug_assert!(edge < self.edges && colour < self.colours);
        (edge as u32 * self.colours + colour + 1) as i32
    }

    /// Inverse of [`CnfInstance::var`].
    pub fn edge_colour(&self, var: i32) -> Option<(usize, u32)> {
        let v = var.unsigned_abs();
        if v == 0 || v > self.var_count {
            return None;
        }
        let idx = v - 1;
        Some(((idx / self.colours) as usize, idx % self.colours))
    }
}

/// The edge fixed to colour 0: the first edge at the lowest-index vertex of
/// maximum degree.
pub fn symmetry_edge(g: &Multigraph) -> Option<usize> {
    let degrees = g.degrees();
    let delta = degrees.iter().copied().max()?;
    if delta == 0 {
        return None;
    }
    let v = degrees.iter().position(|&d| d == delta)?;
    g.edges().iter().position(|&(a, b)| a == v || b == v)
}

pub fn encode_cnf(g: &Multigraph, p: u32, q: u32) -> Result<CnfInstance, ColourError> {
    check_instance(g, p, q)?;
    let m = g.size();
    let mut cnf = CnfInstance { var_count: m as u32 * p, clauses: Vec::new(), colours: p, edges: m };
    for e in 0..m {
        cnf.clauses.push((0..p).map(|c| cnf.var(e, c)).collect());
    }
    // Colour pairs in conflict depend only on p and q.
    let mut conflicts = Vec::new();
    for c in 0..p {
        for d in 0..p {
            if circular_distance(c, d, p) < q {
                conflicts.push((c, d));
            }
        }
    }
    for (e, f) in g.incidence_pairs() {
        for &(c, d) in &conflicts {
            cnf.clauses.push(vec![-cnf.var(e, c), -cnf.var(f, d)]);
        }
    }
    if let Some(e0) = symmetry_edge(g) {
        cnf.clauses.push(vec![cnf.var(e0, 0)]);
    }
    Ok(cnf)
}

/// Standard DIMACS CNF text.
pub fn emit_dimacs(cnf: &CnfInstance) -> String {
    let mut out = String::new();
    writeln!(out, "p cnf {} {}", cnf.var_count, cnf.clauses.len()).unwrap();
    for clause in &cnf.clauses {
        for lit in clause {
            write!(out, "{lit} ").unwrap();
        }
        out.push_str("0\n");
    }
    out
}
