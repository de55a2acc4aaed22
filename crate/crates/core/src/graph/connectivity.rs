//! Vertex and edge connectivity by unit-capacity max-flow.

use std::collections::VecDeque;

use super::Multigraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Connectivity {
    pub vertex: usize,
    pub edge: usize,
}

/// Residual network with paired forward/backward arcs.
struct FlowNet {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u32>,
}

impl FlowNet {
    fn new(nodes: usize) -> Self {
        FlowNet { head: vec![Vec::new(); nodes], to: Vec::new(), cap: Vec::new() }
    }

    fn add_arc(&mut self, a: usize, b: usize, cap: u32, back: u32) {
        self.head[a].push(self.to.len());
        self.to.push(b);
        self.cap.push(cap);
        self.head[b].push(self.to.len());
        self.to.push(a);
        self.cap.push(back);
    }

    /// Max flow from `s` to `t`, stopping early once `limit` is reached.
    fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let n = self.head.len();
        let mut flow = 0;
        let mut pred = vec![usize::MAX; n];
        while flow < limit {
            pred.iter_mut().for_each(|p| *p = usize::MAX);
            let mut queue = VecDeque::from([s]);
            let mut reached = false;
            while let Some(v) = queue.pop_front() {
                if v == t {
                    reached = true;
                    break;
                }
                for &arc in &self.head[v] {
                    let w = self.to[arc];
                    if self.cap[arc] > 0 && w != s && pred[w] == usize::MAX {
                        pred[w] = arc;
                        queue.push_back(w);
                    }
                }
            }
            if !reached {
                break;
            }
            let mut v = t;
            while v != s {
                let arc = pred[v];
                self.cap[arc] -= 1;
                self.cap[arc ^ 1] += 1;
                v = self.to[arc ^ 1];
            }
            flow += 1;
        }
        flow
    }
}

fn local_edge_connectivity(g: &Multigraph, s: usize, t: usize, limit: usize) -> usize {
    let mut net = FlowNet::new(g.order());
    for &(u, v) in g.edges() {
        if u != v {
            net.add_arc(u, v, 1, 1);
        }
    }
    net.max_flow(s, t, limit)
}

/// Vertex-disjoint s-t paths, via node splitting (v_in = 2v, v_out = 2v+1).
fn local_vertex_connectivity(adj: &[Vec<usize>], s: usize, t: usize, limit: usize) -> usize {
    let n = adj.len();
    let mut net = FlowNet::new(2 * n);
    for v in 0..n {
        let cap = if v == s || v == t { n as u32 } else { 1 };
        net.add_arc(2 * v, 2 * v + 1, cap, 0);
        for &w in &adj[v] {
            net.add_arc(2 * v + 1, 2 * w, 1, 0);
        }
    }
    net.max_flow(2 * s + 1, 2 * t, limit)
}

pub(super) fn edge_connectivity(g: &Multigraph) -> usize {
    if g.order() <= 1 || !g.is_connected() {
        return 0;
    }
    let mut best = g.min_degree();
    for t in 1..g.order() {
        best = best.min(local_edge_connectivity(g, 0, t, best));
    }
    best
}

pub(super) fn vertex_connectivity(g: &Multigraph) -> usize {
    let n = g.order();
    if n <= 1 || !g.is_connected() {
        return 0;
    }
    let adj = g.simple_adjacency();
    let mut best = n - 1;
    // A minimum separator misses one of the first best+1 vertices, so
    // sources beyond that index are redundant.
    let mut i = 0;
    while i <= best && i < n {
        for j in (i + 1)..n {
            if adj[i].binary_search(&j).is_err() {
                best = best.min(local_vertex_connectivity(&adj, i, j, best));
            }
        }
        i += 1;
    }
    best
}

pub(super) fn connectivity(g: &Multigraph) -> Connectivity {
    Connectivity { vertex: vertex_connectivity(g), edge: edge_connectivity(g) }
}
