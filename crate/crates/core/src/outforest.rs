//! `i`-perfect out-forests.
//!
//! A spanning out-forest `F` of `D` is `i`-perfect when every out-tree of `F`
//! is an induced subdigraph of `D` and exactly `i` vertices have even degree
//! (zero included) in the underlying graph of `F`.
//!
//! Three entry points solve the existence/size questions:
//!
//! * [`max_i_perfect`] and [`decide_i_perfect_min_arcs`] run an exact
//!   backtracking search over vertex-to-class assignments;
//! * [`semicomplete_i_perfect`] is the polynomial matching algorithm for
//!   semicomplete digraphs.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;

use crate::budget::{Budget, Meter};
use crate::digraph::{Arc, Digraph};
use crate::error::{Error, Result};
use crate::matching::maximum_matching;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForestTree {
    pub root: usize,
    /// All vertices of the tree, root included, ascending.
    pub vertices: Vec<usize>,
}

/// A (claimed) spanning out-forest. Nothing is enforced on construction:
/// certificates read from disk may be malformed, and [`verify_out_forest`]
/// reports on every property independently.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct OutForest {
    pub trees: Vec<ForestTree>,
    pub arcs: BTreeSet<Arc>,
}

impl OutForest {
    /// Builds the forest whose trees are the components of `arcs` on
    /// `vertex_count` vertices. Each root is the component's in-degree-0
    /// vertex (the smallest one when the arcs do not form an out-tree).
    pub fn from_arcs(vertex_count: usize, arcs: impl IntoIterator<Item = Arc>) -> Self {
        let arcs: BTreeSet<Arc> = arcs.into_iter().collect();
        let mut uf = UnionFind::new(vertex_count);
        let mut has_parent = vec![false; vertex_count];
        for &(u, v) in &arcs {
            uf.union(u, v);
            has_parent[v] = true;
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in 0..vertex_count {
            groups.entry(uf.find(v)).or_default().push(v);
        }
        let mut trees: Vec<ForestTree> = groups
            .into_values()
            .map(|vertices| {
                let root = vertices.iter().copied().find(|&v| !has_parent[v]).unwrap_or(vertices[0]);
                ForestTree { root, vertices }
            })
            .collect();
        trees.sort_by_key(|t| t.vertices[0]);
        OutForest { trees, arcs }
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn tree_count(&self) -> usize {
        self.trees.len()
    }

    /// Tree index of every vertex (`None` for vertices not covered; the
    /// last tree wins for vertices listed twice).
    pub fn tree_of(&self, vertex_count: usize) -> Vec<Option<usize>> {
        let mut out = vec![None; vertex_count];
        for (t, tree) in self.trees.iter().enumerate() {
            for &v in &tree.vertices {
                if v < vertex_count {
                    out[v] = Some(t);
                }
            }
        }
        out
    }

    pub fn roots(&self) -> Vec<usize> {
        self.trees.iter().map(|t| t.root).collect()
    }

    /// Certificate text: one `t <root> : <vertices>` line per tree, then
    /// one `a <u> <v>` line per arc.
    pub fn to_certificate(&self) -> String {
        let mut s = String::new();
        for t in &self.trees {
            let _ = write!(s, "t {} :", t.root);
            for v in &t.vertices {
                let _ = write!(s, " {v}");
            }
            s.push('\n');
        }
        for (u, v) in &self.arcs {
            let _ = writeln!(s, "a {u} {v}");
        }
        s
    }

    pub fn parse_certificate(text: &str) -> Result<OutForest> {
        let mut forest = OutForest::default();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: &str| Error::Parse { line: idx + 1, message: message.to_string() };
            let num = |s: &str| s.parse::<usize>().map_err(|_| err("expected an integer"));
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens.as_slice() {
                ["t", root, ":", rest @ ..] => {
                    let root = num(root)?;
                    let vertices = rest.iter().map(|s| num(s)).collect::<Result<Vec<_>>>()?;
                    forest.trees.push(ForestTree { root, vertices });
                }
                ["a", u, v] => {
                    if !forest.arcs.insert((num(u)?, num(v)?)) {
                        return Err(err("duplicate arc"));
                    }
                }
                _ => return Err(err("expected `t <root> : <v...>` or `a <u> <v>`")),
            }
        }
        Ok(forest)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ForestReport {
    pub spanning: bool,
    pub trees_induced: bool,
    pub out_tree_valid: bool,
    pub even_degree_count: usize,
    pub arc_count: usize,
}

impl ForestReport {
    pub fn is_i_perfect(&self, i: usize) -> bool {
        self.spanning && self.trees_induced && self.out_tree_valid && self.even_degree_count == i
    }
}

impl std::fmt::Display for ForestReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "spanning={}", self.spanning)?;
        writeln!(f, "trees_induced={}", self.trees_induced)?;
        writeln!(f, "out_tree_valid={}", self.out_tree_valid)?;
        writeln!(f, "even_degree_count={}", self.even_degree_count)?;
        write!(f, "arc_count={}", self.arc_count)
    }
}

/// Full diagnostics for `f` as an out-forest of `d`.
pub fn verify_out_forest(d: &Digraph, f: &OutForest) -> Result<ForestReport> {
    let n = d.vertex_count();
    for t in &f.trees {
        for &v in t.vertices.iter().chain([&t.root]) {
            if v >= n {
                return Err(Error::VertexMismatch(format!("tree vertex {v} not in a digraph on {n} vertices")));
            }
        }
    }
    if let Some(&(u, v)) = f.arcs.iter().find(|&&(u, v)| u >= n || v >= n) {
        return Err(Error::VertexMismatch(format!("arc ({u}, {v}) not in a digraph on {n} vertices")));
    }

    let mut cover = vec![0usize; n];
    for t in &f.trees {
        for &v in &t.vertices {
            cover[v] += 1;
        }
    }
    let spanning = cover.iter().all(|&c| c == 1);

    let tree_of = f.tree_of(n);
    let mut out_tree_valid =
        f.arcs.iter().all(|&(u, v)| d.has_arc(u, v) && tree_of[u].is_some() && tree_of[u] == tree_of[v] && u != v);
    let mut in_deg = vec![0usize; n];
    for &(_, v) in &f.arcs {
        in_deg[v] += 1;
    }
    let mut trees_induced = true;
    for (idx, t) in f.trees.iter().enumerate() {
        let members: BTreeSet<usize> = t.vertices.iter().copied().collect();
        if !members.contains(&t.root) || members.len() != t.vertices.len() {
            out_tree_valid = false;
        }
        let own: BTreeSet<Arc> =
            f.arcs.iter().copied().filter(|&(u, v)| members.contains(&u) && members.contains(&v)).collect();
        if own.len() + 1 != members.len() {
            out_tree_valid = false;
        }
        for &v in &members {
            let want = usize::from(v != t.root);
            if in_deg[v] != want || tree_of[v] != Some(idx) {
                out_tree_valid = false;
            }
        }
        if !is_connected_on(&members, &own) {
            out_tree_valid = false;
        }
        let induced: BTreeSet<Arc> = members
            .iter()
            .flat_map(|&u| d.out_neighbors(u).iter().map(move |&v| (u, v)))
            .filter(|(_, v)| members.contains(v))
            .collect();
        if induced != own {
            trees_induced = false;
        }
    }

    let mut ug_deg = vec![0usize; n];
    for &(u, v) in &f.arcs {
        if u < v || !f.arcs.contains(&(v, u)) {
            ug_deg[u] += 1;
            ug_deg[v] += 1;
        }
    }
    let even_degree_count = ug_deg.iter().filter(|&&k| k % 2 == 0).count();

    Ok(ForestReport { spanning, trees_induced, out_tree_valid, even_degree_count, arc_count: f.arcs.len() })
}

fn is_connected_on(members: &BTreeSet<usize>, arcs: &BTreeSet<Arc>) -> bool {
    let Some(&start) = members.iter().next() else {
        return false;
    };
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(u, v) in arcs {
        adj.entry(u).or_default().push(v);
        adj.entry(v).or_default().push(u);
    }
    let mut seen = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for &w in adj.get(&v).into_iter().flatten() {
            if seen.insert(w) {
                queue.push_back(w);
            }
        }
    }
    seen.len() == members.len()
}

fn check_i(i: usize) -> Result<()> {
    if i <= 1 {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("i must be 0 or 1, got {i}")))
    }
}

/// An `i`-perfect out-forest of maximum arc count, or `None` if there is none.
pub fn max_i_perfect(d: &Digraph, i: usize, budget: Budget) -> Result<Option<OutForest>> {
    check_i(i)?;
    let n = d.vertex_count();
    if n == 0 {
        return Ok((i == 0).then(OutForest::default));
    }
    let mut meter = budget.meter();
    for trees in 1..=n {
        let found = if trees == 1 {
            out_branching_shortcut(d, i)
        } else {
            PartitionSearch::new(d, i, trees, n - trees).run(&mut meter)?
        };
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

/// An `i`-perfect out-forest with at least `min_arcs` arcs, if one exists.
///
/// Such a forest has at most `n - min_arcs` trees, so the search distributes
/// vertices over that many classes.
pub fn decide_i_perfect_min_arcs(d: &Digraph, i: usize, min_arcs: usize, budget: Budget) -> Result<Option<OutForest>> {
    check_i(i)?;
    let n = d.vertex_count();
    if n == 0 {
        return if min_arcs == 0 {
            Ok((i == 0).then(OutForest::default))
        } else {
            Err(Error::InvalidArgument("min_arcs exceeds n - 1".into()))
        };
    }
    if min_arcs > n - 1 {
        return Err(Error::InvalidArgument(format!("min_arcs {min_arcs} exceeds n - 1 = {}", n - 1)));
    }
    if min_arcs == n - 1 {
        return Ok(out_branching_shortcut(d, i));
    }
    PartitionSearch::new(d, i, n - min_arcs, min_arcs).run(&mut budget.meter())
}

/// A forest with `n - 1` arcs is a single induced spanning tree, i.e. `d`
/// itself must be an out-branching with the right parity profile.
fn out_branching_shortcut(d: &Digraph, i: usize) -> Option<OutForest> {
    let n = d.vertex_count();
    if d.arc_count() + 1 != n || !d.is_connected() {
        return None;
    }
    if (0..n).filter(|&v| d.in_degree(v) == 0).count() != 1 || (0..n).any(|v| d.in_degree(v) > 1) {
        return None;
    }
    let even = (0..n).filter(|&v| (d.in_degree(v) + d.out_degree(v)).is_multiple_of(2)).count();
    (even == i).then(|| OutForest::from_arcs(n, d.arcs()))
}

const UNASSIGNED: usize = usize::MAX;

/// Backtracking over assignments of vertices to at most `max_classes`
/// classes. Each class must induce an out-forest (no underlying cycle, no
/// 2-cycle, in-degree at most one); its components are the trees. A vertex
/// whose underlying neighbours are all assigned has final degree, which
/// drives the parity pruning.
struct PartitionSearch<'a> {
    d: &'a Digraph,
    i: usize,
    max_classes: usize,
    min_arcs: usize,
    order: Vec<usize>,
    nbrs: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    open_classes: usize,
    indeg: Vec<usize>,
    deg: Vec<usize>,
    comp: Vec<usize>,
    pending: Vec<usize>,
    even_closed: usize,
    arcs_in: usize,
}

struct Undo {
    relabeled: Vec<(usize, usize)>,
    closed_even: usize,
    opened_class: bool,
}

impl<'a> PartitionSearch<'a> {
    fn new(d: &'a Digraph, i: usize, max_classes: usize, min_arcs: usize) -> Self {
        let n = d.vertex_count();
        let nbrs: Vec<Vec<usize>> = (0..n).map(|v| d.neighbors(v).into_iter().collect()).collect();
        PartitionSearch {
            d,
            i,
            max_classes,
            min_arcs,
            order: bfs_order(&nbrs),
            pending: nbrs.iter().map(Vec::len).collect(),
            nbrs,
            class_of: vec![UNASSIGNED; n],
            open_classes: 0,
            indeg: vec![0; n],
            deg: vec![0; n],
            comp: (0..n).collect(),
            even_closed: 0,
            arcs_in: 0,
        }
    }

    fn run(mut self, meter: &mut Meter) -> Result<Option<OutForest>> {
        if self.search(0, meter)? {
            let n = self.d.vertex_count();
            let arcs: Vec<Arc> = self.d.arcs().filter(|&(u, v)| self.class_of[u] == self.class_of[v]).collect();
            Ok(Some(OutForest::from_arcs(n, arcs)))
        } else {
            Ok(None)
        }
    }

    fn search(&mut self, depth: usize, meter: &mut Meter) -> Result<bool> {
        meter.tick()?;
        if depth == self.order.len() {
            return Ok(self.even_closed == self.i && self.arcs_in >= self.min_arcs);
        }
        let v = self.order[depth];
        let limit = (self.open_classes + 1).min(self.max_classes);
        for c in 0..limit {
            if let Some(undo) = self.assign(v, c) {
                if !self.pruned() && self.search(depth + 1, meter)? {
                    return Ok(true);
                }
                self.unassign(v, undo);
            }
        }
        Ok(false)
    }

    fn assign(&mut self, v: usize, c: usize) -> Option<Undo> {
        let same: Vec<usize> = self.nbrs[v].iter().copied().filter(|&w| self.class_of[w] == c).collect();
        let mut into_v = 0;
        let mut comps = BTreeSet::new();
        for &w in &same {
            let fwd = self.d.has_arc(v, w);
            let back = self.d.has_arc(w, v);
            if fwd && back {
                return None;
            }
            if back {
                into_v += 1;
            }
            if fwd && self.indeg[w] > 0 {
                return None;
            }
            if !comps.insert(self.comp[w]) {
                return None;
            }
        }
        if into_v > 1 {
            return None;
        }

        let opened_class = c == self.open_classes;
        if opened_class {
            self.open_classes += 1;
        }
        self.class_of[v] = c;
        self.indeg[v] = into_v;
        self.deg[v] = same.len();
        self.arcs_in += same.len();
        for &w in &same {
            self.deg[w] += 1;
            if self.d.has_arc(v, w) {
                self.indeg[w] += 1;
            }
        }
        let mut relabeled = Vec::new();
        if !comps.is_empty() {
            let n = self.class_of.len();
            for x in 0..n {
                if self.class_of[x] == c && x != v && comps.contains(&self.comp[x]) {
                    relabeled.push((x, self.comp[x]));
                    self.comp[x] = v;
                }
            }
        }
        self.comp[v] = v;

        let mut closed_even = 0;
        if self.pending[v] == 0 && self.deg[v].is_multiple_of(2) {
            closed_even += 1;
        }
        for idx in 0..self.nbrs[v].len() {
            let w = self.nbrs[v][idx];
            self.pending[w] -= 1;
            if self.pending[w] == 0 && self.class_of[w] != UNASSIGNED && self.deg[w].is_multiple_of(2) {
                closed_even += 1;
            }
        }
        self.even_closed += closed_even;
        Some(Undo { relabeled, closed_even, opened_class })
    }

    fn unassign(&mut self, v: usize, undo: Undo) {
        let c = self.class_of[v];
        self.even_closed -= undo.closed_even;
        for idx in 0..self.nbrs[v].len() {
            let w = self.nbrs[v][idx];
            self.pending[w] += 1;
        }
        for &(x, old) in &undo.relabeled {
            self.comp[x] = old;
        }
        self.comp[v] = v;
        for idx in 0..self.nbrs[v].len() {
            let w = self.nbrs[v][idx];
            if self.class_of[w] == c && w != v {
                self.deg[w] -= 1;
                if self.d.has_arc(v, w) {
                    self.indeg[w] -= 1;
                }
            }
        }
        self.arcs_in -= self.deg[v];
        self.deg[v] = 0;
        self.indeg[v] = 0;
        self.class_of[v] = UNASSIGNED;
        if undo.opened_class {
            self.open_classes -= 1;
        }
    }

    /// Parity and tree-count bounds on the partial assignment.
    fn pruned(&self) -> bool {
        if self.even_closed > self.i {
            return true;
        }
        let n = self.class_of.len();
        // A component none of whose vertices has unassigned neighbours can
        // never merge again; every class with a live component contributes
        // at least one more tree.
        let mut live = vec![false; n];
        let mut seen = vec![false; n];
        for x in 0..n {
            if self.class_of[x] != UNASSIGNED && self.pending[x] > 0 {
                live[self.comp[x]] = true;
            }
        }
        let mut closed_components = 0;
        let mut live_classes = BTreeSet::new();
        for x in 0..n {
            if self.class_of[x] == UNASSIGNED {
                continue;
            }
            let r = self.comp[x];
            if !seen[r] {
                seen[r] = true;
                if live[r] {
                    live_classes.insert(self.class_of[x]);
                } else {
                    closed_components += 1;
                }
            }
        }
        closed_components + live_classes.len() > n - self.min_arcs
    }
}

/// Breadth-first order over the underlying graph, one component at a time.
fn bfs_order(nbrs: &[Vec<usize>]) -> Vec<usize> {
    let n = nbrs.len();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in &nbrs[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

/// Perfect matching of `d` avoiding arcs on 2-cycles, as arcs.
fn two_cycle_free_perfect_matching(d: &Digraph) -> Option<Vec<Arc>> {
    let residual = Digraph::from_arcs(d.vertex_count(), d.arcs().filter(|&(u, v)| !d.has_arc(v, u)))
        .expect("subset of a simple digraph");
    let m = maximum_matching(&residual.underlying_graph());
    if !m.is_perfect(d.vertex_count()) {
        return None;
    }
    Some(m.edges.iter().map(|&(x, y)| if residual.has_arc(x, y) { (x, y) } else { (y, x) }).collect())
}

/// Polynomial algorithm for semicomplete digraphs: every tree of an
/// `i`-perfect out-forest has at most two vertices, so for `i = 0` the
/// forest is a perfect matching on arcs not lying on 2-cycles, and for
/// `i = 1` it is such a matching of `d - u` plus the singleton `u`.
pub fn semicomplete_i_perfect(d: &Digraph, i: usize) -> Result<Option<OutForest>> {
    check_i(i)?;
    if !d.is_semicomplete() {
        return Err(Error::WrongClass("semicomplete"));
    }
    let n = d.vertex_count();
    if i == 0 {
        return Ok(two_cycle_free_perfect_matching(d).map(|arcs| OutForest::from_arcs(n, arcs)));
    }
    for u in 0..n {
        let rest: Vec<usize> = (0..n).filter(|&v| v != u).collect();
        let (sub, map) = d.induced_with_map(&rest)?;
        if let Some(arcs) = two_cycle_free_perfect_matching(&sub) {
            let lifted = arcs.into_iter().map(|(x, y)| (map[x], map[y]));
            return Ok(Some(OutForest::from_arcs(n, lifted)));
        }
    }
    Ok(None)
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}
