//! Exhaustive generation of small connected graphs and multigraphs with a
//! given maximum degree, one per isomorphism class.
//!
//! Multiplicities are assigned to vertex pairs in row-major order. Only
//! labellings with non-increasing degrees are produced (every class has
//! one), which lets each finished row bound the degrees of later vertices.
//! Duplicates are removed by canonical code.

use std::collections::BTreeMap;

use super::{Family, SurveyError};
use crate::codec::canonical_code;
use crate::graph::Multigraph;

/// Largest orders the internal generator accepts.
pub const MAX_SIMPLE_ORDER: usize = 7;
pub const MAX_MULTI_ORDER: usize = 6;

struct Gen<'a> {
    n: usize,
    delta: usize,
    max_mult: usize,
    regular: bool,
    pairs: Vec<(usize, usize)>,
    mult: Vec<usize>,
    deg: Vec<usize>,
    found: &'a mut BTreeMap<String, Multigraph>,
}

impl Gen<'_> {
    /// Called when row `i` is complete: the degree of `i` is final.
    fn row_ok(&self, i: usize) -> bool {
        let d = self.deg[i];
        if d == 0 || (self.regular && d != self.delta) {
            return false;
        }
        if i == 0 && d != self.delta {
            return false;
        }
        if i > 0 && d > self.deg[i - 1] {
            return false;
        }
        // Later vertices may not exceed `d`, and they can still gain at most
        // the capacity of the remaining rows.
        (i + 1..self.n).all(|j| self.deg[j] <= d)
    }

    fn go(&mut self, idx: usize) {
        if idx == self.pairs.len() {
            if self.n == 1 || !self.row_ok(self.n - 1) {
                return;
            }
            let edges: Vec<(usize, usize)> = self
                .pairs
                .iter()
                .zip(&self.mult)
                .flat_map(|(&(u, v), &m)| std::iter::repeat_n((u, v), m))
                .collect();
            let g = Multigraph::new(self.n, edges).expect("valid pairs");
            if !g.is_connected() {
                return;
            }
            let code = canonical_code(&g).expect("order within cap");
            self.found.entry(code).or_insert(g);
            return;
        }
        let (u, v) = self.pairs[idx];
        let cap = if u == 0 { self.delta } else { self.deg[u - 1].min(self.delta) };
        let room = cap.saturating_sub(self.deg[u]).min(cap.saturating_sub(self.deg[v]));
        for m in 0..=room.min(self.max_mult) {
            self.mult[idx] = m;
            self.deg[u] += m;
            self.deg[v] += m;
            let row_done = v == self.n - 1;
            if !row_done || self.row_ok(u) {
                self.go(idx + 1);
            }
            self.deg[u] -= m;
            self.deg[v] -= m;
        }
        self.mult[idx] = 0;
    }
}

/// One connected, loop-free representative per isomorphism class on `n`
/// vertices with maximum degree exactly `delta` (and `delta`-regular when
/// `regular`), sorted by canonical code.
pub fn generate_graphs(family: Family, n: usize, delta: usize, regular: bool) -> Result<Vec<Multigraph>, SurveyError> {
    let cap = match family {
        Family::Simple => MAX_SIMPLE_ORDER,
        Family::Multigraph => MAX_MULTI_ORDER,
    };
    if n > cap {
        return Err(SurveyError::OrderTooLarge { n, cap });
    }
    if n == 0 || delta == 0 {
        return Err(SurveyError::Config("order and max degree must be positive".into()));
    }
    let mut found = BTreeMap::new();
    if n >= 2 {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let mut gen = Gen {
            n,
            delta,
            max_mult: match family {
                Family::Simple => 1,
                Family::Multigraph => delta,
            },
            regular,
            mult: vec![0; pairs.len()],
            pairs,
            deg: vec![0; n],
            found: &mut found,
        };
        gen.go(0);
    }
    Ok(found.into_values().collect())
}
