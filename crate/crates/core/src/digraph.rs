//! Simple digraphs: no loops, no parallel arcs, vertices `0..n`.
//!
//! Adjacency is kept in ordered sets so every iteration order in the crate
//! is deterministic.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};

pub type Arc = (usize, usize);

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Digraph {
    out: Vec<BTreeSet<usize>>,
    inc: Vec<BTreeSet<usize>>,
    labels: BTreeMap<usize, String>,
}

impl Digraph {
    pub fn new(vertex_count: usize) -> Self {
        Digraph {
            out: vec![BTreeSet::new(); vertex_count],
            inc: vec![BTreeSet::new(); vertex_count],
            labels: BTreeMap::new(),
        }
    }

    pub fn from_arcs<I: IntoIterator<Item = Arc>>(vertex_count: usize, arcs: I) -> Result<Self> {
        let mut d = Digraph::new(vertex_count);
        for (u, v) in arcs {
            d.add_arc(u, v)?;
        }
        Ok(d)
    }

    /// Bidirected graph over an undirected edge list.
    pub fn symmetric_from_edges<I: IntoIterator<Item = (usize, usize)>>(vertex_count: usize, edges: I) -> Result<Self> {
        let mut d = Digraph::new(vertex_count);
        for (u, v) in edges {
            d.add_arc(u, v)?;
            d.add_arc(v, u)?;
        }
        Ok(d)
    }

    pub fn vertex_count(&self) -> usize {
        self.out.len()
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(BTreeSet::len).sum()
    }

    /// Appends a fresh vertex and returns its index.
    pub fn add_vertex(&mut self) -> usize {
        self.out.push(BTreeSet::new());
        self.inc.push(BTreeSet::new());
        self.out.len() - 1
    }

    pub fn add_labeled_vertex(&mut self, label: impl Into<String>) -> usize {
        let v = self.add_vertex();
        self.labels.insert(v, label.into());
        v
    }

    pub fn add_arc(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::LoopArc(u));
        }
        if !self.out[u].insert(v) {
            return Err(Error::DuplicateArc(u, v));
        }
        self.inc[v].insert(u);
        Ok(())
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, count: self.vertex_count() })
        }
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out.get(u).is_some_and(|s| s.contains(&v))
    }

    /// Whether `u` and `v` are adjacent in the underlying graph.
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.has_arc(u, v) || self.has_arc(v, u)
    }

    /// All arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = Arc> + '_ {
        self.out.iter().enumerate().flat_map(|(u, s)| s.iter().map(move |&v| (u, v)))
    }

    pub fn out_neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.inc[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.inc[v].len()
    }

    /// Neighbours of `v` in the underlying graph, ascending.
    pub fn neighbors(&self, v: usize) -> BTreeSet<usize> {
        self.out[v].union(&self.inc[v]).copied().collect()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.get(&v).map(String::as_str)
    }

    pub fn labels(&self) -> &BTreeMap<usize, String> {
        &self.labels
    }

    pub fn set_label(&mut self, v: usize, label: impl Into<String>) -> Result<()> {
        self.check_vertex(v)?;
        self.labels.insert(v, label.into());
        Ok(())
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().find_map(|(&v, l)| (l == label).then_some(v))
    }

    /// Same vertices, every arc flipped.
    pub fn reverse(&self) -> Digraph {
        Digraph { out: self.inc.clone(), inc: self.out.clone(), labels: self.labels.clone() }
    }

    pub fn symmetric_closure(&self) -> Digraph {
        let mut d = self.clone();
        for (u, v) in self.arcs() {
            d.out[v].insert(u);
            d.inc[u].insert(v);
        }
        d
    }

    /// Subdigraph induced by `verts`, together with the map from new to old
    /// vertex indices. Labels are carried over.
    pub fn induced_with_map(&self, verts: &[usize]) -> Result<(Digraph, Vec<usize>)> {
        for &v in verts {
            self.check_vertex(v)?;
        }
        let keep: Vec<usize> = verts.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
        let mut new_index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in keep.iter().enumerate() {
            new_index[v] = i;
        }
        let mut d = Digraph::new(keep.len());
        for (i, &v) in keep.iter().enumerate() {
            for &w in &self.out[v] {
                if new_index[w] != usize::MAX {
                    d.out[i].insert(new_index[w]);
                    d.inc[new_index[w]].insert(i);
                }
            }
            if let Some(l) = self.labels.get(&v) {
                d.labels.insert(i, l.clone());
            }
        }
        Ok((d, keep))
    }

    pub fn induced(&self, verts: &[usize]) -> Result<Digraph> {
        self.induced_with_map(verts).map(|(d, _)| d)
    }

    /// Copy with the given arcs removed (absent arcs are ignored).
    pub fn without_arcs<'a, I: IntoIterator<Item = &'a Arc>>(&self, arcs: I) -> Digraph {
        let mut d = self.clone();
        for &(u, v) in arcs {
            if u < d.vertex_count() && d.out[u].remove(&v) {
                d.inc[v].remove(&u);
            }
        }
        d
    }

    pub fn underlying_graph(&self) -> UGraph {
        let mut g = UGraph::new(self.vertex_count());
        for (u, v) in self.arcs() {
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        g
    }

    pub fn is_connected(&self) -> bool {
        self.underlying_graph().is_connected()
    }

    pub fn is_strong(&self) -> bool {
        let n = self.vertex_count();
        if n <= 1 {
            return true;
        }
        let forward = reach(n, 0, |v| self.out[v].iter().copied());
        let backward = reach(n, 0, |v| self.inc[v].iter().copied());
        forward.iter().all(|&b| b) && backward.iter().all(|&b| b)
    }

    pub fn is_acyclic(&self) -> bool {
        let n = self.vertex_count();
        let mut indeg: Vec<usize> = (0..n).map(|v| self.in_degree(v)).collect();
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = queue.pop_front() {
            seen += 1;
            for &w in &self.out[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push_back(w);
                }
            }
        }
        seen == n
    }

    pub fn is_semicomplete(&self) -> bool {
        let n = self.vertex_count();
        (0..n).all(|u| (u + 1..n).all(|v| self.adjacent(u, v)))
    }

    pub fn has_two_cycle(&self) -> bool {
        self.arcs().any(|(u, v)| self.has_arc(v, u))
    }

    pub fn is_tournament(&self) -> bool {
        self.is_semicomplete() && !self.has_two_cycle()
    }

    pub fn is_symmetric(&self) -> bool {
        self.arcs().all(|(u, v)| self.has_arc(v, u))
    }

    pub fn is_balanced(&self) -> bool {
        (0..self.vertex_count()).all(|v| self.in_degree(v) == self.out_degree(v))
    }

    pub fn is_eulerian(&self) -> bool {
        self.is_connected() && self.is_balanced()
    }

    pub fn classify(&self) -> ClassReport {
        ClassReport {
            connected: self.is_connected(),
            strong: self.is_strong(),
            acyclic: self.is_acyclic(),
            semicomplete: self.is_semicomplete(),
            tournament: self.is_tournament(),
            symmetric: self.is_symmetric(),
            eulerian: self.is_eulerian(),
        }
    }

    pub fn parse(text: &str) -> Result<Digraph> {
        let mut graph: Option<Digraph> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| Error::Parse { line: line_no, message };
            let mut parts = line.splitn(2, char::is_whitespace);
            let directive = parts.next().unwrap_or_default();
            let rest = parts.next().unwrap_or_default().trim();
            let Some(d) = graph.as_mut() else {
                if directive != "n" {
                    return Err(err("first directive must be `n <count>`".into()));
                }
                let count = parse_fields::<1>(rest).map_err(err)?[0];
                graph = Some(Digraph::new(count));
                continue;
            };
            match directive {
                "n" => return Err(err("repeated `n` directive".into())),
                "a" => {
                    let [u, v] = parse_fields::<2>(rest).map_err(err)?;
                    d.add_arc(u, v).map_err(|e| err(e.to_string()))?;
                }
                "l" => {
                    let mut p = rest.splitn(2, char::is_whitespace);
                    let v = p
                        .next()
                        .and_then(|s| s.parse::<usize>().ok())
                        .ok_or_else(|| err("expected `l <vertex> <tag>`".into()))?;
                    let tag = p.next().map(str::trim).unwrap_or_default();
                    if tag.is_empty() {
                        return Err(err("empty label".into()));
                    }
                    d.set_label(v, tag).map_err(|e| err(e.to_string()))?;
                }
                other => return Err(err(format!("unknown directive `{other}`"))),
            }
        }
        graph.ok_or(Error::Parse { line: text.lines().count().max(1), message: "missing `n <count>` directive".into() })
    }

    /// Text form: `n` line, arcs in lexicographic order, then labels.
    pub fn serialize(&self) -> String {
        let mut s = format!("n {}\n", self.vertex_count());
        for (u, v) in self.arcs() {
            let _ = writeln!(s, "a {u} {v}");
        }
        for (v, l) in &self.labels {
            let _ = writeln!(s, "l {v} {l}");
        }
        s
    }
}

fn parse_fields<const N: usize>(rest: &str) -> std::result::Result<[usize; N], String> {
    let fields: Vec<&str> = rest.split_whitespace().collect();
    if fields.len() != N {
        return Err(format!("expected {N} integer field(s), found {}", fields.len()));
    }
    let mut out = [0usize; N];
    for (slot, f) in out.iter_mut().zip(fields) {
        *slot = f.parse().map_err(|_| format!("`{f}` is not a non-negative integer"))?;
    }
    Ok(out)
}

fn reach<I, F>(n: usize, start: usize, next: F) -> Vec<bool>
where
    I: Iterator<Item = usize>,
    F: Fn(usize) -> I,
{
    let mut seen = vec![false; n];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(v) = stack.pop() {
        for w in next(v) {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub connected: bool,
    pub strong: bool,
    pub acyclic: bool,
    pub semicomplete: bool,
    pub tournament: bool,
    pub symmetric: bool,
    pub eulerian: bool,
}

impl std::fmt::Display for ClassReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "connected={}", self.connected)?;
        writeln!(f, "strong={}", self.strong)?;
        writeln!(f, "acyclic={}", self.acyclic)?;
        writeln!(f, "semicomplete={}", self.semicomplete)?;
        writeln!(f, "tournament={}", self.tournament)?;
        writeln!(f, "symmetric={}", self.symmetric)?;
        write!(f, "eulerian={}", self.eulerian)
    }
}

/// Simple undirected graph.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct UGraph {
    adj: Vec<BTreeSet<usize>>,
}

impl UGraph {
    pub fn new(vertex_count: usize) -> Self {
        UGraph { adj: vec![BTreeSet::new(); vertex_count] }
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(vertex_count: usize, edges: I) -> Result<Self> {
        let mut g = UGraph::new(vertex_count);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.vertex_count();
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, count: n });
            }
        }
        if u == v {
            return Err(Error::LoopArc(u));
        }
        if !self.adj[u].insert(v) {
            return Err(Error::DuplicateArc(u.min(v), u.max(v)));
        }
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u).is_some_and(|s| s.contains(&v))
    }

    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges as `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, s)| s.range(u + 1..).map(move |&v| (u, v)))
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        n == 0 || reach(n, 0, |v| self.adj[v].iter().copied()).iter().all(|&b| b)
    }
}
