//! Multigraph model shared by every other module.
//!
//! A [`Multigraph`] is a vertex count plus an ordered list of unordered
//! vertex pairs. Parallel edges are repeated pairs and `{v, v}` is a loop.
//! The position of an edge in the list is its identity for colourings.

mod connectivity;
mod matching;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

pub use connectivity::Connectivity;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge {index} has endpoint {vertex} but the graph has {n} vertices")]
    EndpointOutOfRange { index: usize, vertex: usize, n: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
}

/// An undirected multigraph with an ordered edge list.
///
/// Endpoints are stored with the smaller index first. Values are immutable
/// once built; constructions produce new graphs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl fmt::Debug for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multigraph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Multigraph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (index, (u, v)) in edges.into_iter().enumerate() {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(GraphError::EndpointOutOfRange { index, vertex, n });
                }
            }
            list.push((u.min(v), u.max(v)));
        }
        Ok(Multigraph { n, edges: list })
    }

    pub fn empty(n: usize) -> Self {
        Multigraph { n, edges: Vec::new() }
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for j in 1..n {
            for i in 0..j {
                edges.push((i, j));
            }
        }
        Multigraph { n, edges }
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 2, "a cycle needs at least two vertices");
        Multigraph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn path(n: usize) -> Self {
        Multigraph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    /// The Petersen graph: outer 5-cycle, inner pentagram, spokes.
    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, 5 + i));
        }
        Multigraph::new(10, edges).unwrap()
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> (usize, usize) {
        self.edges[index]
    }

    pub fn has_loop(&self) -> bool {
        self.edges.iter().any(|&(u, v)| u == v)
    }

    /// No loops and no parallel edges.
    pub fn is_simple(&self) -> bool {
        !self.has_loop() && self.max_multiplicity() <= 1
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| usize::from(a == v) + usize::from(b == v))
            .sum()
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.degrees().into_iter().min().unwrap_or(0)
    }

    /// Number of edges joining `u` and `v`.
    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        let key = (u.min(v), u.max(v));
        self.edges.iter().filter(|&&e| e == key).count()
    }

    /// Largest multiplicity over distinct vertex pairs (loops excluded).
    pub fn max_multiplicity(&self) -> usize {
        let mut counts: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for &e in &self.edges {
            if e.0 != e.1 {
                *counts.entry(e).or_default() += 1;
            }
        }
        counts.into_values().max().unwrap_or(0)
    }

    /// Dense `n x n` multiplicity matrix, row-major.
    pub fn multiplicity_matrix(&self) -> Vec<u32> {
        let n = self.n;
        let mut m = vec![0u32; n * n];
        for &(u, v) in &self.edges {
            m[u * n + v] += 1;
            if u != v {
                m[v * n + u] += 1;
            }
        }
        m
    }

    /// Distinct neighbours of `v`, ascending.
    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| match (a == v, b == v) {
                (true, false) => Some(b),
                (false, true) => Some(a),
                _ => None,
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// For every vertex, the indices of its incident edges in edge order.
    pub fn incidence_lists(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            inc[u].push(i);
            if u != v {
                inc[v].push(i);
            }
        }
        inc
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let degrees = self.degrees();
        let mut counts = BTreeMap::new();
        for &d in &degrees {
            *counts.entry(d).or_insert(0) += 1;
        }
        DegreeProfile {
            delta: degrees.iter().copied().max().unwrap_or(0),
            mu: self.max_multiplicity(),
            regular: counts.len() <= 1,
            counts,
        }
    }

    /// Matching number: the largest set of pairwise non-incident non-loop
    /// edges. Exact (Edmonds) up to 64 vertices; beyond that returns the
    /// trivial bound `n / 2`, which is all the denominator cap needs.
    pub fn max_matching_size(&self) -> usize {
        if self.n > 64 {
            return self.n / 2;
        }
        matching::maximum_matching(self.n, &self.simple_adjacency())
    }

    /// Pairs `(i, j)`, `i < j`, of edges sharing an endpoint. These are the
    /// edges of the line graph; parallel edges are incident.
    pub fn incidence_pairs(&self) -> Vec<(usize, usize)> {
        let mut pairs = Vec::new();
        for j in 0..self.edges.len() {
            let (a, b) = self.edges[j];
            for i in 0..j {
                let (c, d) = self.edges[i];
                if a == c || a == d || b == c || b == d {
                    pairs.push((i, j));
                }
            }
        }
        pairs
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let adj = self.simple_adjacency();
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Vertex and edge connectivity (edge connectivity counts parallel
    /// edges). Both are zero for disconnected graphs.
    pub fn connectivity(&self) -> Connectivity {
        connectivity::connectivity(self)
    }

    pub fn edge_connectivity(&self) -> usize {
        connectivity::edge_connectivity(self)
    }

    pub fn vertex_connectivity(&self) -> usize {
        connectivity::vertex_connectivity(self)
    }

    /// Apply a vertex relabelling: vertex `v` becomes `perm[v]`. Edge order
    /// is preserved.
    pub fn relabel(&self, perm: &[usize]) -> Multigraph {
        assert_eq!(perm.len(), self.n);
        Multigraph {
            n: self.n,
            edges: self
                .edges
                .iter()
                .map(|&(u, v)| {
                    let (a, b) = (perm[u], perm[v]);
                    (a.min(b), a.max(b))
                })
                .collect(),
        }
    }

    /// Same edges, sorted by (larger endpoint, smaller endpoint). This is the
    /// order the graph6 and sparse6 decoders produce.
    pub fn with_sorted_edges(&self) -> Multigraph {
        let mut edges = self.edges.clone();
        edges.sort_unstable_by_key(|&(u, v)| (v, u));
        Multigraph { n: self.n, edges }
    }

    /// True when both graphs have the same vertex count and the same edge
    /// multiset, ignoring edge order.
    pub fn same_edge_multiset(&self, other: &Multigraph) -> bool {
        if self.n != other.n || self.edges.len() != other.edges.len() {
            return false;
        }
        let mut a = self.edges.clone();
        let mut b = other.edges.clone();
        a.sort_unstable();
        b.sort_unstable();
        a == b
    }

    pub(crate) fn simple_adjacency(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|v| self.neighbours(v)).collect()
    }
}

/// Degree facts of a multigraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    /// degree -> number of vertices with that degree
    pub counts: BTreeMap<usize, usize>,
    pub delta: usize,
    pub mu: usize,
    pub regular: bool,
}

impl DegreeProfile {
    pub fn count(&self, degree: usize) -> usize {
        self.counts.get(&degree).copied().unwrap_or(0)
    }
}

impl fmt::Display for DegreeProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (d, c)) in self.counts.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{d}:{c}")?;
        }
        write!(f, "}}")
    }
}
