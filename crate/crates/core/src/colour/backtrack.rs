//! Native exact decision by backtracking with forward checking.
//!
//! Edges are picked DSATUR-style: smallest remaining colour domain first,
//! then largest line-graph degree, then lowest index. Every assignment
//! prunes the domains of incident edges, and each endpoint is checked for
//! enough room on the colour circle to fit its remaining edges.

use std::time::{Duration, Instant};

use super::{
    check_instance, trivial_verdict, verify_colouring, ColourError, DecisionOutcome, Decider,
    EdgeColouring, Effort, Verdict,
};
use crate::colour::cnf::symmetry_edge;
use crate::graph::Multigraph;

/// Native back end. `max_nodes` caps the number of search-tree nodes and
/// `max_time` the wall-clock time of one decision.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Backtrack {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl Default for Backtrack {
    fn default() -> Self {
        Backtrack { max_nodes: Some(100_000_000), max_time: None }
    }
}

impl Backtrack {
    pub fn unlimited() -> Self {
        Backtrack { max_nodes: None, max_time: None }
    }

    pub fn with_nodes(max_nodes: u64) -> Self {
        Backtrack { max_nodes: Some(max_nodes), max_time: None }
    }
}

impl Decider for Backtrack {
    fn decide(&self, g: &Multigraph, p: u32, q: u32) -> Result<DecisionOutcome, ColourError> {
        search(g, p, q, self.max_nodes, self.max_time.map(|t| Instant::now() + t))
    }
}

struct Bits {
    words: usize,
}

impl Bits {
    fn count(&self, s: &[u64]) -> u32 {
        s.iter().map(|w| w.count_ones()).sum()
    }

    fn first_from(&self, s: &[u64], from: u32) -> Option<u32> {
        let mut w = (from / 64) as usize;
        if w >= self.words {
            return None;
        }
        let mut word = s[w] & (!0u64 << (from % 64));
        loop {
            if word != 0 {
                return Some(w as u32 * 64 + word.trailing_zeros());
            }
            w += 1;
            if w >= self.words {
                return None;
            }
            word = s[w];
        }
    }
}

struct Search<'a> {
    p: u32,
    q: u32,
    bits: Bits,
    ends: &'a [(usize, usize)],
    nbrs: Vec<Vec<usize>>,
    incident: Vec<Vec<usize>>,
    /// forbidden[c] = colours at circular distance < q from c.
    forbidden: Vec<u64>,
    domains: Vec<u64>,
    colour: Vec<Option<u32>>,
    uncoloured_at: Vec<usize>,
    trail: Vec<(usize, usize, u64)>,
    nodes: u64,
    max_nodes: Option<u64>,
    deadline: Option<Instant>,
}

enum Step {
    Found,
    Exhausted,
    OutOfBudget,
}

impl Search<'_> {
    fn dom(&self, e: usize) -> &[u64] {
        &self.domains[e * self.bits.words..(e + 1) * self.bits.words]
    }

    /// Enough room at `v` for its uncoloured edges, given the colours already
    /// used there.
    fn vertex_has_room(&self, v: usize, scratch: &mut Vec<u32>) -> bool {
        let remaining = self.uncoloured_at[v] as u64;
        if remaining == 0 {
            return true;
        }
        scratch.clear();
        scratch.extend(self.incident[v].iter().filter_map(|&e| self.colour[e]));
        if scratch.is_empty() {
            return true;
        }
        scratch.sort_unstable();
        let (p, q) = (self.p as u64, self.q as u64);
        let mut room = 0u64;
        for i in 0..scratch.len() {
            let cur = scratch[i] as u64;
            let next = if i + 1 < scratch.len() { scratch[i + 1] as u64 } else { scratch[0] as u64 + p };
            let gap = next - cur;
            if gap >= 2 * q {
                room += gap / q - 1;
            }
        }
        room >= remaining
    }

    fn assign(&mut self, e: usize, c: u32, scratch: &mut Vec<u32>) -> bool {
        self.colour[e] = Some(c);
        let (u, v) = self.ends[e];
        self.uncoloured_at[u] -= 1;
        self.uncoloured_at[v] -= 1;
        let words = self.bits.words;
        let forb = &self.forbidden[c as usize * words..(c as usize + 1) * words];
        let mut ok = true;
        for &f in &self.nbrs[e] {
            if self.colour[f].is_some() {
                continue;
            }
            let mut empty = true;
            for w in 0..words {
                let old = self.domains[f * words + w];
                let new = old & !forb[w];
                if new != old {
                    self.trail.push((f, w, old));
                    self.domains[f * words + w] = new;
                }
                empty &= new == 0;
            }
            if empty {
                ok = false;
                break;
            }
        }
        ok && self.vertex_has_room(u, scratch) && self.vertex_has_room(v, scratch)
    }

    fn unassign(&mut self, e: usize, mark: usize) {
        while self.trail.len() > mark {
            let (f, w, old) = self.trail.pop().unwrap();
            self.domains[f * self.bits.words + w] = old;
        }
        self.colour[e] = None;
        let (u, v) = self.ends[e];
        self.uncoloured_at[u] += 1;
        self.uncoloured_at[v] += 1;
    }

    fn pick(&self) -> Option<usize> {
        let mut best: Option<(u32, usize, usize)> = None;
        for e in 0..self.ends.len() {
            if self.colour[e].is_some() {
                continue;
            }
            let size = self.bits.count(self.dom(e));
            let key = (size, usize::MAX - self.nbrs[e].len(), e);
            if best.is_none_or(|b| key < b) {
                best = Some(key);
            }
        }
        best.map(|(_, _, e)| e)
    }

    fn run(&mut self, scratch: &mut Vec<u32>) -> Step {
        let Some(e) = self.pick() else {
            return Step::Found;
        };
        let mut from = 0;
        while let Some(c) = self.bits.first_from(self.dom(e), from) {
            from = c + 1;
            self.nodes += 1;
            if self.max_nodes.is_some_and(|m| self.nodes > m) {
                return Step::OutOfBudget;
            }
            if self.nodes.is_multiple_of(4096) && self.deadline.is_some_and(|d| Instant::now() >= d) {
                return Step::OutOfBudget;
            }
            let mark = self.trail.len();
            if self.assign(e, c, scratch) {
                match self.run(scratch) {
                    Step::Exhausted => {}
                    other => return other,
                }
            }
            self.unassign(e, mark);
        }
        Step::Exhausted
    }
}

/// Decide whether `g` has a circular `(p, q)`-edge-colouring.
///
/// With `max_nodes = None` the search is complete. UNSAT is reported only
/// after exhausting the search (or by the edge-counting bound).
pub fn decide_backtrack(
    g: &Multigraph,
    p: u32,
    q: u32,
    max_nodes: Option<u64>,
) -> Result<DecisionOutcome, ColourError> {
    search(g, p, q, max_nodes, None)
}

fn search(
    g: &Multigraph,
    p: u32,
    q: u32,
    max_nodes: Option<u64>,
    deadline: Option<Instant>,
) -> Result<DecisionOutcome, ColourError> {
    check_instance(g, p, q)?;
    let m = g.size();
    match trivial_verdict(g, p, q) {
        Some(Verdict::Sat) => {
            let witness = EdgeColouring::new(p, q, vec![0; m]);
            debug_assert!(verify_colouring(g, &witness)?);
            return Ok(DecisionOutcome { verdict: Verdict::Sat, witness: Some(witness), effort: Effort::Nodes(0) });
        }
        Some(v) => return Ok(DecisionOutcome { verdict: v, witness: None, effort: Effort::Nodes(0) }),
        None => {}
    }

    let words = (p as usize).div_ceil(64);
    let bits = Bits { words };
    let mut forbidden = vec![0u64; p as usize * words];
    for c in 0..p {
        for d in 0..p {
            if super::circular_distance(c, d, p) < q {
                forbidden[c as usize * words + d as usize / 64] |= 1 << (d % 64);
            }
        }
    }
    let mut full = vec![0u64; words];
    for d in 0..p {
        full[d as usize / 64] |= 1 << (d % 64);
    }
    let mut nbrs = vec![Vec::new(); m];
    for (i, j) in g.incidence_pairs() {
        nbrs[i].push(j);
        nbrs[j].push(i);
    }
    let incident = g.incidence_lists();
    let mut search = Search {
        p,
        q,
        bits,
        ends: g.edges(),
        nbrs,
        uncoloured_at: incident.iter().map(Vec::len).collect(),
        incident,
        forbidden,
        domains: full.iter().copied().cycle().take(m * words).collect(),
        colour: vec![None; m],
        trail: Vec::new(),
        nodes: 0,
        max_nodes,
        deadline,
    };
    let mut scratch = Vec::new();
    if deadline.is_some_and(|d| Instant::now() >= d) {
        return Ok(DecisionOutcome { verdict: Verdict::Unknown, witness: None, effort: Effort::Nodes(0) });
    }

    // Rotations preserve validity, so one edge at a max-degree vertex can be
    // fixed to colour 0.
    let step = match symmetry_edge(g) {
        Some(e0) => {
            search.nodes += 1;
            if search.assign(e0, 0, &mut scratch) {
                // Reflection c -> -c keeps e0 at 0, so a second edge at the
                // same vertex can be held to colours c <= p - c.
                let (u, v) = g.edge(e0);
                let twin = search.incident[u].iter().chain(&search.incident[v]).copied().find(|&f| f != e0);
                if let Some(f) = twin {
                    for c in (p / 2 + 1)..p {
                        search.domains[f * words + c as usize / 64] &= !(1 << (c % 64));
                    }
                }
                search.run(&mut scratch)
            } else {
                Step::Exhausted
            }
        }
        None => search.run(&mut scratch),
    };
    let effort = Effort::Nodes(search.nodes);
    Ok(match step {
        Step::Found => {
            let colours = search.colour.iter().map(|c| c.expect("complete assignment")).collect();
            let witness = EdgeColouring::new(p, q, colours);
            if !verify_colouring(g, &witness)? {
                return Err(ColourError::Integrity);
            }
            DecisionOutcome { verdict: Verdict::Sat, witness: Some(witness), effort }
        }
        Step::Exhausted => DecisionOutcome { verdict: Verdict::Unsat, witness: None, effort },
        Step::OutOfBudget => DecisionOutcome { verdict: Verdict::Unknown, witness: None, effort },
    })
}
