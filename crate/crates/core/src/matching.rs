//! Maximum cardinality matching in general graphs (Edmonds' blossom
//! algorithm, O(V^3)).

use std::collections::{BTreeSet, VecDeque};

use crate::digraph::UGraph;

/// A set of pairwise vertex-disjoint edges, stored as `(u, v)` with `u < v`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Matching {
    pub edges: BTreeSet<(usize, usize)>,
}

impl Matching {
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn is_perfect(&self, vertex_count: usize) -> bool {
        2 * self.edges.len() == vertex_count
    }

    /// Checks disjointness and membership in `g`.
    pub fn is_valid_in(&self, g: &UGraph) -> bool {
        let mut seen = vec![false; g.vertex_count()];
        self.edges.iter().all(|&(u, v)| {
            let ok = g.has_edge(u, v) && !seen[u] && !seen[v];
            seen[u] = true;
            seen[v] = true;
            ok
        })
    }
}

const NONE: usize = usize::MAX;

struct Blossom<'a> {
    g: &'a UGraph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    in_queue: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a UGraph) -> Self {
        let n = g.vertex_count();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            in_queue: vec![false; n],
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
            let m = self.mate[v];
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[m]] = true;
            self.parent[v] = child;
            child = m;
            v = self.parent[m];
        }
    }

    /// BFS for an augmenting path from `root`; returns its free endpoint.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.mate.len();
        self.in_queue.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.queue.push_back(root);
        self.in_queue[root] = true;
        while let Some(v) = self.queue.pop_front() {
            let g = self.g;
            for &to in g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.in_queue[i] {
                                self.in_queue[i] = true;
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
                    self.in_queue[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }
}

/// Maximum cardinality matching of `g`; ties broken by vertex order.
pub fn maximum_matching(g: &UGraph) -> Matching {
    let n = g.vertex_count();
    let mut b = Blossom::new(g);
    // Greedy warm start.
    for u in 0..n {
        if b.mate[u] == NONE {
            if let Some(&v) = g.neighbors(u).iter().find(|&&v| b.mate[v] == NONE) {
                b.mate[u] = v;
                b.mate[v] = u;
            }
        }
    }
    for root in 0..n {
        if b.mate[root] == NONE {
            if let Some(end) = b.find_path(root) {
                b.augment(end);
            }
        }
    }
    let edges = (0..n).filter(|&u| b.mate[u] != NONE && u < b.mate[u]).map(|u| (u, b.mate[u])).collect();
    Matching { edges }
}
