//! Explicit constructions of graph families with large circular chromatic
//! index, and the seed graphs they start from.

mod circulant;
mod seeds;

pub use circulant::{circulant, circulant_nine_halves_colouring, CirculantColouring};
pub use seeds::{seed_catalog, SeedEntry};

use thiserror::Error;

use crate::colour::{circular_distance, verify_colouring, EdgeColouring};
use crate::graph::Multigraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("{0}")]
    Parameter(String),
    #[error("expected exactly two vertices of degree 1, found {found}")]
    Pendants { found: usize },
    #[error("the two pendant vertices are adjacent")]
    AdjacentPendants,
    #[error("the graph is disconnected")]
    Disconnected,
    #[error("edge {edge} ({u}, {v}) is a bridge not incident with a pendant vertex")]
    Bridge { edge: usize, u: usize, v: usize },
    #[error("maximum degree is {found}, expected {expected}")]
    Degree { expected: usize, found: usize },
    #[error("hook vertex {vertex} has degree {degree}, expected 1")]
    Hook { vertex: usize, degree: usize },
    #[error("witness: {0}")]
    Witness(String),
}

/// `K_{d+1}` without the edge `{0, 1}`.
pub fn complete_minus_edge(d: usize) -> Result<Multigraph, ConstructionError> {
    if d < 3 {
        return Err(ConstructionError::Parameter(format!("d = {d} must be at least 3")));
    }
    let k = Multigraph::complete(d + 1);
    let edges = k.edges().iter().copied().filter(|&e| e != (0, 1));
    Ok(Multigraph::new(d + 1, edges).expect("subgraph"))
}

/// One new degree-1 vertex per entry of `vertices`, joined to it.
pub fn attach_pendants(g: &Multigraph, vertices: &[usize]) -> Result<Multigraph, ConstructionError> {
    let n = g.order();
    if let Some(&v) = vertices.iter().find(|&&v| v >= n) {
        return Err(ConstructionError::Parameter(format!("vertex {v} out of range for order {n}")));
    }
    let mut edges = g.edges().to_vec();
    edges.extend(vertices.iter().enumerate().map(|(i, &v)| (v, n + i)));
    Ok(Multigraph::new(n + vertices.len(), edges).expect("valid"))
}

/// The two pendant vertices `u < v` of `h` and their neighbours `a`, `b`.
struct Pendants {
    u: usize,
    v: usize,
    a: usize,
    b: usize,
    /// Edge indices of `u -- a` and `v -- b`.
    eu: usize,
    ev: usize,
}

fn pendants(h: &Multigraph) -> Result<Pendants, ConstructionError> {
    let deg = h.degrees();
    let ones: Vec<usize> = (0..h.order()).filter(|&x| deg[x] == 1).collect();
    let [u, v] = ones[..] else {
        return Err(ConstructionError::Pendants { found: ones.len() });
    };
    if !h.is_connected() {
        return Err(ConstructionError::Disconnected);
    }
    let edge_at = |x: usize| {
        let i = h.edges().iter().position(|&(p, q)| p == x || q == x).expect("degree 1");
        let (p, q) = h.edge(i);
        (i, if p == x { q } else { p })
    };
    let (eu, a) = edge_at(u);
    let (ev, b) = edge_at(v);
    if a == v {
        return Err(ConstructionError::AdjacentPendants);
    }
    Ok(Pendants { u, v, a, b, eu, ev })
}

/// Position of each non-pendant vertex inside a copy.
fn core_index(h: &Multigraph, p: &Pendants) -> Vec<usize> {
    let mut idx = vec![usize::MAX; h.order()];
    let mut next = 0;
    for (x, slot) in idx.iter_mut().enumerate() {
        if x != p.u && x != p.v {
            *slot = next;
            next += 1;
        }
    }
    idx
}

fn core_edges(h: &Multigraph, p: &Pendants) -> Vec<usize> {
    (0..h.size()).filter(|&i| i != p.eu && i != p.ev).collect()
}

/// Ring of `k` copies of a two-pendant graph: the pendant edges at the
/// seam between copies `j` and `j + 1` become a single edge `b_j -- a_{j+1}`.
///
/// Copy `j` occupies vertices `j * (n - 2)..`, keeping the order of the
/// non-pendant vertices. All copies' core edges come first, copy by copy,
/// then the `k` seam edges.
pub fn chain_ring(h: &Multigraph, k: usize) -> Result<Multigraph, ConstructionError> {
    if k < 2 {
        return Err(ConstructionError::Parameter(format!("ring needs at least 2 copies, got {k}")));
    }
    let p = pendants(h)?;
    let idx = core_index(h, &p);
    let c = h.order() - 2;
    let core = core_edges(h, &p);
    let mut edges = Vec::with_capacity(k * (core.len() + 1));
    for j in 0..k {
        for &i in &core {
            let (x, y) = h.edge(i);
            edges.push((j * c + idx[x], j * c + idx[y]));
        }
    }
    for j in 0..k {
        edges.push((j * c + idx[p.b], ((j + 1) % k) * c + idx[p.a]));
    }
    Ok(Multigraph::new(k * c, edges).expect("valid"))
}

fn without_edge(g: &Multigraph, skip: usize) -> Multigraph {
    let edges = g.edges().iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &e)| e);
    Multigraph::new(g.order(), edges).expect("subgraph")
}

/// Ring the seed, then, if the ring is not regular, double it and join
/// deficient twins. A single missing degree becomes a plain edge; a larger
/// deficiency uses one `K_{Δ+1} - e` gadget per missing degree, its two
/// degree-deficient vertices joined to the twins.
///
/// The seed must have maximum degree `delta`, exactly two vertices of
/// degree 1, and no bridges except its two pendant edges. Its circular
/// chromatic index is the caller's responsibility.
pub fn regularize(h: &Multigraph, k: usize, delta: usize) -> Result<Multigraph, ConstructionError> {
    if k < 3 {
        return Err(ConstructionError::Parameter(format!("regularization needs at least 3 copies, got {k}")));
    }
    if h.max_degree() != delta {
        return Err(ConstructionError::Degree { expected: delta, found: h.max_degree() });
    }
    let p = pendants(h)?;
    for i in 0..h.size() {
        if i == p.eu || i == p.ev {
            continue;
        }
        if !without_edge(h, i).is_connected() {
            let (u, v) = h.edge(i);
            return Err(ConstructionError::Bridge { edge: i, u, v });
        }
    }

    let ring = chain_ring(h, k)?;
    let n = ring.order();
    if ring.min_degree() == delta {
        return Ok(ring);
    }
    let mut edges = ring.edges().to_vec();
    edges.extend(ring.edges().iter().map(|&(x, y)| (x + n, y + n)));
    let mut order = 2 * n;
    let deg = ring.degrees();
    for x in 0..n {
        let missing = delta - deg[x];
        if missing == 1 {
            edges.push((x, x + n));
            continue;
        }
        for _ in 0..missing {
            // K_{delta+1} on order..order+delta+1 without its first edge.
            let base = order;
            for s in 0..=delta {
                for t in s + 1..=delta {
                    if (s, t) != (0, 1) {
                        edges.push((base + s, base + t));
                    }
                }
            }
            edges.push((x, base));
            edges.push((base + 1, x + n));
            order += delta + 1;
        }
    }
    Ok(Multigraph::new(order, edges).expect("valid"))
}

/// Give each uncoloured edge, in index order, the lowest colour compatible
/// with its coloured neighbours.
fn extend_greedily(g: &Multigraph, partial: &mut [Option<u32>], p: u32, q: u32) -> Result<(), ConstructionError> {
    let incident = g.incidence_lists();
    for e in 0..g.size() {
        if partial[e].is_some() {
            continue;
        }
        let (u, v) = g.edge(e);
        let taken: Vec<u32> = incident[u]
            .iter()
            .chain(&incident[v])
            .filter(|&&f| f != e)
            .filter_map(|&f| partial[f])
            .collect();
        let c = (0..p)
            .find(|&c| taken.iter().all(|&t| circular_distance(c, t, p) >= q))
            .ok_or_else(|| ConstructionError::Witness(format!("no colour left for edge {e}")))?;
        partial[e] = Some(c);
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Any,
    Even,
}

/// A cycle of length `k` whose vertex `j` is the hook of copy `j` of `h`.
///
/// Copy `j` occupies vertices `j * n..(j + 1) * n`; its hook is the cycle
/// vertex. Copy edges come first, then the cycle edges `j -- j + 1`. With a
/// reference colouring of `h`, every copy receives it rotated so the hook
/// edge has colour 0, and the cycle edges are coloured greedily. The
/// returned witness is always verified.
pub fn cycle_attach(
    h: &Multigraph,
    hook: usize,
    k: usize,
    parity: Parity,
    reference: Option<&EdgeColouring>,
) -> Result<(Multigraph, Option<EdgeColouring>), ConstructionError> {
    if hook >= h.order() || h.degree(hook) != 1 {
        let degree = if hook < h.order() { h.degree(hook) } else { 0 };
        return Err(ConstructionError::Hook { vertex: hook, degree });
    }
    if k < 3 || (parity == Parity::Even && k % 2 == 1) {
        return Err(ConstructionError::Parameter(format!("cycle length {k} not allowed")));
    }
    let n = h.order();
    let mut edges = Vec::with_capacity(k * (h.size() + 1));
    for j in 0..k {
        edges.extend(h.edges().iter().map(|&(x, y)| (j * n + x, j * n + y)));
    }
    for j in 0..k {
        edges.push((j * n + hook, ((j + 1) % k) * n + hook));
    }
    let g = Multigraph::new(k * n, edges).expect("valid");
    let Some(col) = reference else {
        return Ok((g, None));
    };
    if col.colours.len() != h.size() || !verify_colouring(h, col).unwrap_or(false) {
        return Err(ConstructionError::Witness("reference colouring is not valid for the seed".into()));
    }
    let hook_edge = h.edges().iter().position(|&(x, y)| x == hook || y == hook).expect("degree 1");
    let shifted = col.rotated(col.p - col.colours[hook_edge]);
    let mut partial: Vec<Option<u32>> = Vec::with_capacity(g.size());
    for _ in 0..k {
        partial.extend(shifted.colours.iter().map(|&c| Some(c)));
    }
    partial.resize(g.size(), None);
    extend_greedily(&g, &mut partial, col.p, col.q)?;
    let witness = EdgeColouring::new(col.p, col.q, partial.into_iter().map(Option::unwrap).collect());
    if !verify_colouring(&g, &witness).unwrap_or(false) {
        return Err(ConstructionError::Witness("cycle colouring failed verification".into()));
    }
    Ok((g, Some(witness)))
}

/// Colouring of `chain_ring(h, k)` for even `k`: even copies use `col`,
/// odd copies its mirror image `c -> (α + β - c) mod p`, where `α` and `β`
/// are the colours of the two pendant edges. The mirror swaps `α` and `β`,
/// so both copies agree on every seam edge.
pub fn mirror_witness(h: &Multigraph, col: &EdgeColouring, k: usize) -> Result<EdgeColouring, ConstructionError> {
    if k < 2 || k % 2 == 1 {
        return Err(ConstructionError::Parameter(format!("mirror rings need an even number of copies, got {k}")));
    }
    if col.colours.len() != h.size() || !verify_colouring(h, col).unwrap_or(false) {
        return Err(ConstructionError::Witness("base colouring is not valid for the seed".into()));
    }
    let p = pendants(h)?;
    let ring = chain_ring(h, k)?;
    let modulus = col.p;
    let (alpha, beta) = (col.colours[p.eu], col.colours[p.ev]);
    let mirror = |c: u32| (alpha + beta + modulus - c) % modulus;
    let core = core_edges(h, &p);
    let mut colours = Vec::with_capacity(ring.size());
    for j in 0..k {
        colours.extend(core.iter().map(|&i| if j % 2 == 0 { col.colours[i] } else { mirror(col.colours[i]) }));
    }
    for j in 0..k {
        colours.push(if j % 2 == 0 { beta } else { alpha });
    }
    let witness = EdgeColouring::new(col.p, col.q, colours);
    if !verify_colouring(&ring, &witness).unwrap_or(false) {
        return Err(ConstructionError::Witness("mirrored colouring failed verification".into()));
    }
    Ok(witness)
}

/// Reorder edges into codec order, carrying an optional witness along.
pub fn to_codec_order(g: &Multigraph, witness: Option<&EdgeColouring>) -> (Multigraph, Option<EdgeColouring>) {
    let mut idx: Vec<usize> = (0..g.size()).collect();
    idx.sort_by_key(|&i| {
        let (u, v) = g.edge(i);
        (v, u)
    });
    let sorted = Multigraph::new(g.order(), idx.iter().map(|&i| g.edge(i))).expect("same edges");
    let col = witness.map(|w| EdgeColouring::new(w.p, w.q, idx.iter().map(|&i| w.colours[i]).collect()));
    (sorted, col)
}
