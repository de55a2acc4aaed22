//! Deliberately naive reference implementations. None of these reuse the
//! library's search code.

use std::collections::{BTreeMap, VecDeque};

use rand::Rng;

use circix_core::{canonical_code, Fraction, Multigraph};

fn circ(a: u32, b: u32, p: u32) -> u32 {
    let d = a.abs_diff(b) % p;
    d.min(p - d)
}

fn share_vertex(a: (usize, usize), b: (usize, usize)) -> bool {
    a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1
}

/// Every pair of edges with a common end is at circular distance `>= q`.
pub fn is_circular_colouring(g: &Multigraph, p: u32, q: u32, colours: &[u32]) -> bool {
    let e = g.edges();
    colours.len() == e.len()
        && colours.iter().all(|&c| c < p)
        && (0..e.len()).all(|i| (0..i).all(|j| !share_vertex(e[i], e[j]) || circ(colours[i], colours[j], p) >= q))
}

/// Try every colour for every edge in index order, rejecting a partial
/// assignment as soon as two coloured edges clash. The first edge is held
/// at colour 0, which loses nothing because rotating a colouring keeps it
/// valid.
pub fn brute_colourable(g: &Multigraph, p: u32, q: u32) -> bool {
    let e = g.edges();
    if e.iter().any(|&(u, v)| u == v) {
        return false;
    }
    if e.is_empty() {
        return true;
    }
    let earlier: Vec<Vec<usize>> = (0..e.len()).map(|i| (0..i).filter(|&j| share_vertex(e[i], e[j])).collect()).collect();
    let mut colours = vec![0u32; e.len()];
    fn go(i: usize, colours: &mut [u32], earlier: &[Vec<usize>], p: u32, q: u32) -> bool {
        if i == colours.len() {
            return true;
        }
        let range = if i == 0 { 0..1 } else { 0..p };
        for c in range {
            if earlier[i].iter().all(|&j| circ(c, colours[j], p) >= q) {
                colours[i] = c;
                if go(i + 1, colours, earlier, p, q) {
                    return true;
                }
            }
        }
        false
    }
    go(0, &mut colours, &earlier, p, q)
}

/// Largest set of pairwise disjoint edges, by exhaustive branching.
pub fn brute_matching(g: &Multigraph) -> usize {
    fn go(edges: &[(usize, usize)], used: &mut Vec<bool>) -> usize {
        let Some((&(u, v), rest)) = edges.split_first() else {
            return 0;
        };
        let skip = go(rest, used);
        if u == v || used[u] || used[v] {
            return skip;
        }
        used[u] = true;
        used[v] = true;
        let take = 1 + go(rest, used);
        used[u] = false;
        used[v] = false;
        skip.max(take)
    }
    let mut edges = g.edges().to_vec();
    edges.dedup();
    go(&edges, &mut vec![false; g.order()])
}

fn connected_without(g: &Multigraph, skip: Option<usize>) -> bool {
    let n = g.order();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(x) = queue.pop_front() {
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            if Some(i) == skip || (u != x && v != x) {
                continue;
            }
            let y = if u == x { v } else { u };
            if !seen[y] {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Connected, and stays connected after deleting any single edge.
pub fn two_edge_connected(g: &Multigraph) -> bool {
    connected_without(g, None) && (0..g.size()).all(|i| connected_without(g, Some(i)))
}

pub fn degree_counts(g: &Multigraph) -> BTreeMap<usize, usize> {
    let mut deg = vec![0; g.order()];
    for &(u, v) in g.edges() {
        deg[u] += 1;
        deg[v] += 1;
    }
    let mut counts = BTreeMap::new();
    for d in deg {
        *counts.entry(d).or_insert(0) += 1;
    }
    counts
}

/// Reduced fractions `p/q` with `q <= qmax` in `(lo, hi]`, ascending.
pub fn fractions_in(lo: u64, hi: u64, qmax: u64) -> Vec<Fraction> {
    let mut out: Vec<Fraction> = (1..=qmax)
        .flat_map(|q| (lo * q + 1..=hi * q).map(move |p| Fraction::new(p, q).unwrap()))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// A random loop-free multigraph on at most `max_n` vertices with at least
/// one edge and maximum degree at most `max_delta`.
pub fn random_multigraph(rng: &mut impl Rng, max_n: usize, max_delta: usize) -> Multigraph {
    loop {
        let n = rng.gen_range(2..=max_n);
        let attempts = rng.gen_range(1..=3 * n);
        let mut deg = vec![0; n];
        let mut edges = Vec::new();
        for _ in 0..attempts {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u == v || deg[u] == max_delta || deg[v] == max_delta {
                continue;
            }
            deg[u] += 1;
            deg[v] += 1;
            edges.push((u.min(v), u.max(v)));
        }
        if !edges.is_empty() {
            return Multigraph::new(n, edges).unwrap();
        }
    }
}

/// Every connected loop-free multigraph with `1..=max_edges` edges, one per
/// isomorphism class. Each connected graph with `m + 1` edges arises from
/// one with `m` edges by adding an edge between old vertices or a pendant
/// edge to a new vertex.
pub fn connected_multigraphs(max_edges: usize) -> Vec<Multigraph> {
    let mut level: BTreeMap<String, Multigraph> = BTreeMap::new();
    let k2 = Multigraph::new(2, [(0, 1)]).unwrap();
    level.insert(canonical_code(&k2).unwrap(), k2);
    let mut all: Vec<Multigraph> = level.values().cloned().collect();
    for _ in 1..max_edges {
        let mut next = BTreeMap::new();
        for g in level.values() {
            let n = g.order();
            let mut extend = |h: Multigraph| {
                next.entry(canonical_code(&h).unwrap()).or_insert(h);
            };
            for u in 0..n {
                for v in u + 1..n {
                    extend(Multigraph::new(n, g.edges().iter().copied().chain([(u, v)])).unwrap());
                }
                extend(Multigraph::new(n + 1, g.edges().iter().copied().chain([(u, n)])).unwrap());
            }
        }
        all.extend(next.values().cloned());
        level = next;
    }
    all
}
