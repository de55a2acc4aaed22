//! Edmonds' blossom algorithm on the underlying simple graph.

use std::collections::VecDeque;

const NONE: usize = usize::MAX;

struct Blossom<'a> {
    adj: &'a [Vec<usize>],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(n: usize, adj: &'a [Vec<usize>]) -> Self {
        Blossom {
            adj,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut on_path = vec![false; self.mate.len()];
        loop {
            a = self.base[a];
            on_path[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if on_path[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Grow an alternating tree from `root`; returns the free vertex at the
    /// end of an augmenting path, if any.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.mate.len();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &to in &self.adj[v] {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let m = self.mate[to];
                    self.used[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        None
    }
}

pub(crate) fn maximum_matching(n: usize, adj: &[Vec<usize>]) -> usize {
    let mut b = Blossom::new(n, adj);
    // Greedy start.
    for v in 0..n {
        if b.mate[v] == NONE {
            if let Some(&w) = adj[v].iter().find(|&&w| w != v && b.mate[w] == NONE) {
                b.mate[v] = w;
                b.mate[w] = v;
            }
        }
    }
    for v in 0..n {
        if b.mate[v] != NONE {
            continue;
        }
        if let Some(mut u) = b.find_path(v) {
            while u != NONE {
                let pv = b.parent[u];
                let ppv = b.mate[pv];
                b.mate[u] = pv;
                b.mate[pv] = u;
                u = ppv;
            }
        }
    }
    b.mate.iter().filter(|&&m| m != NONE).count() / 2
}

#[cfg(test)]
mod tests {
    use crate::Multigraph;
    use proptest::prelude::*;

    fn brute_force(g: &Multigraph) -> usize {
        let edges: Vec<_> = g.edges().iter().copied().filter(|&(u, v)| u != v).collect();
        fn go(edges: &[(usize, usize)], used: &mut Vec<bool>, i: usize) -> usize {
            if i == edges.len() {
                return 0;
            }
            let skip = go(edges, used, i + 1);
            let (u, v) = edges[i];
            if !used[u] && !used[v] {
                used[u] = true;
                used[v] = true;
                let take = 1 + go(edges, used, i + 1);
                used[u] = false;
                used[v] = false;
                skip.max(take)
            } else {
                skip
            }
        }
        go(&edges, &mut vec![false; g.order()], 0)
    }

    proptest! {
        #[test]
        fn blossom_matches_brute_force(
            n in 1usize..10,
            raw in proptest::collection::vec((0usize..10, 0usize..10), 0..16),
        ) {
            let g = Multigraph::new(n, raw.into_iter().map(|(a, b)| (a % n, b % n))).unwrap();
            let m = g.max_matching_size();
            prop_assert_eq!(m, brute_force(&g));
            prop_assert!(m <= n / 2);
        }
    }
}
