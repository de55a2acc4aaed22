//! Randomized class-1 heuristic: try to properly colour the edges with
//! exactly `Δ` colours.
//!
//! Each trial colours edges in random order. An edge with a colour free at
//! both ends takes it; otherwise an alternating two-colour chain is flipped
//! to free a colour, and as a last resort a blocking edge is uncoloured and
//! requeued. Success is checked by the verifier; failure proves nothing.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{verify_colouring, EdgeColouring};
use crate::graph::Multigraph;

struct State<'a> {
    ends: &'a [(usize, usize)],
    k: usize,
    colour: Vec<Option<usize>>,
    /// at[v * k + c] = edge at v with colour c
    at: Vec<Option<usize>>,
}

impl State<'_> {
    fn other(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.ends[e];
        if a == v {
            b
        } else {
            a
        }
    }

    fn is_free(&self, v: usize, c: usize) -> bool {
        self.at[v * self.k + c].is_none()
    }

    fn set(&mut self, e: usize, c: usize) {
        let (a, b) = self.ends[e];
        self.colour[e] = Some(c);
        self.at[a * self.k + c] = Some(e);
        self.at[b * self.k + c] = Some(e);
    }

    fn clear(&mut self, e: usize) {
        if let Some(c) = self.colour[e].take() {
            let (a, b) = self.ends[e];
            self.at[a * self.k + c] = None;
            self.at[b * self.k + c] = None;
        }
    }

    /// Edges of the `a`/`b` chain starting at `start` with its `a` edge, and
    /// the vertex where it ends.
    fn chain(&self, start: usize, a: usize, b: usize) -> (Vec<usize>, usize) {
        let mut edges = Vec::new();
        let mut v = start;
        let mut want = a;
        while let Some(e) = self.at[v * self.k + want] {
            if edges.contains(&e) {
                break;
            }
            edges.push(e);
            v = self.other(e, v);
            want = if want == a { b } else { a };
        }
        (edges, v)
    }

    fn flip(&mut self, chain: &[usize], a: usize, b: usize) {
        let old: Vec<usize> = chain.iter().map(|&e| self.colour[e].unwrap()).collect();
        for &e in chain {
            self.clear(e);
        }
        for (&e, &c) in chain.iter().zip(&old) {
            self.set(e, if c == a { b } else { a });
        }
    }
}

fn trial(g: &Multigraph, k: usize, rng: &mut ChaCha8Rng) -> Option<Vec<u32>> {
    let m = g.size();
    let mut st = State { ends: g.edges(), k, colour: vec![None; m], at: vec![None; g.order() * k] };
    let mut queue: Vec<usize> = (0..m).collect();
    queue.shuffle(rng);
    let limit = 30 * m + 200;
    let mut steps = 0;
    while let Some(e) = queue.pop() {
        steps += 1;
        if steps > limit {
            return None;
        }
        let (u, v) = st.ends[e];
        let free_u: Vec<usize> = (0..k).filter(|&c| st.is_free(u, c)).collect();
        let free_v: Vec<usize> = (0..k).filter(|&c| st.is_free(v, c)).collect();
        let common: Vec<usize> = free_u.iter().copied().filter(|c| free_v.contains(c)).collect();
        if let Some(&c) = common.choose(rng) {
            st.set(e, c);
            continue;
        }
        if free_u.is_empty() || free_v.is_empty() {
            return None;
        }
        // Flip an a/b chain at v so that `a` becomes free there.
        let mut options = Vec::new();
        for &a in &free_u {
            for &b in &free_v {
                options.push((a, b));
            }
        }
        options.shuffle(rng);
        let mut done = false;
        for (a, b) in options {
            let (chain, end) = st.chain(v, a, b);
            if end == u {
                continue;
            }
            st.flip(&chain, a, b);
            if st.is_free(u, a) && st.is_free(v, a) {
                st.set(e, a);
                done = true;
                break;
            }
            st.flip(&chain, a, b);
        }
        if done {
            continue;
        }
        // Evict the edge at v holding a colour free at u.
        let a = free_u[rng.gen_range(0..free_u.len())];
        let blocker = st.at[v * k + a].expect("colour not free at v");
        st.clear(blocker);
        st.set(e, a);
        let pos = rng.gen_range(0..=queue.len());
        queue.insert(pos, blocker);
    }
    Some(st.colour.into_iter().map(|c| c.unwrap() as u32).collect())
}

/// Try `trials` randomized attempts at a `(Δ, 1)`-colouring. A returned
/// colouring is verified; `None` proves nothing.
pub fn heuristic_class1(g: &Multigraph, trials: u32, seed: u64) -> Option<EdgeColouring> {
    if g.has_loop() {
        return None;
    }
    let k = g.max_degree();
    if g.size() == 0 {
        return Some(EdgeColouring::new(1, 1, Vec::new()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        if let Some(colours) = trial(g, k, &mut rng) {
            let col = EdgeColouring::new(k as u32, 1, colours);
            if verify_colouring(g, &col).unwrap_or(false) {
                return Some(col);
            }
        }
    }
    None
}
