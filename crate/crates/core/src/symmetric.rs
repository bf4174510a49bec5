//! Deciding `kappa_S(D) >= l` on symmetric digraphs.
//!
//! The procedure enumerates every labelling of the arcs inside `S` with a
//! cycle index (`0` meaning unused), and for each labelling every `l`-tuple
//! of skeletons (cyclic orders on `S`). A labelling/tuple pair is realized by
//! routing each skeleton arc that is not used directly through a path in
//! `D - A[S]`, with all routes internally private. Both loops are bounded by
//! functions of `k = |S|` and `l` alone.

use std::collections::BTreeSet;
use std::collections::VecDeque;

use crate::budget::{Budget, Meter};
use crate::digraph::{Arc, Digraph};
use crate::error::{Error, Result};
use crate::steiner::{terminal_set, DisjointMode, PackStatus, PackingCertificate, SCycle};

/// A cyclic order on the terminals, smallest terminal first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Skeleton {
    order: Vec<usize>,
}

impl Skeleton {
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn arcs(&self) -> impl Iterator<Item = Arc> + '_ {
        let k = self.order.len();
        (0..k).map(move |i| (self.order[i], self.order[(i + 1) % k]))
    }

    pub fn has_arc(&self, arc: Arc) -> bool {
        self.arcs().any(|a| a == arc)
    }
}

/// All cyclic orders on `s` in canonical rotation: `(k-1)!` of them.
pub fn enumerate_skeletons(s: &[usize]) -> Result<Vec<Skeleton>> {
    let terminals: Vec<usize> = s.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    if terminals.len() < 2 {
        return Err(Error::InvalidArgument("skeletons need at least two terminals".into()));
    }
    let first = terminals[0];
    let mut rest = terminals[1..].to_vec();
    let mut out = Vec::new();
    loop {
        let mut order = vec![first];
        order.extend_from_slice(&rest);
        out.push(Skeleton { order });
        if !next_permutation(&mut rest) {
            break;
        }
    }
    Ok(out)
}

fn next_permutation(v: &mut [usize]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| v[j] > v[i]).expect("pivot has a successor");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Total labelling of the arcs of `D[S]` with classes `0..=l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcPartition {
    pub arcs: Vec<Arc>,
    pub classes: Vec<usize>,
}

impl ArcPartition {
    pub fn class(&self, i: usize) -> impl Iterator<Item = Arc> + '_ {
        self.arcs.iter().zip(&self.classes).filter(move |(_, &c)| c == i).map(|(&a, _)| a)
    }

    pub fn class_of(&self, arc: Arc) -> Option<usize> {
        self.arcs.iter().position(|&a| a == arc).map(|i| self.classes[i])
    }
}

/// Lexicographic stream over all `(l+1)^|arcs|` labellings.
pub struct ArcPartitions {
    arcs: Vec<Arc>,
    classes: Vec<usize>,
    l: usize,
    done: bool,
}

impl Iterator for ArcPartitions {
    type Item = ArcPartition;

    fn next(&mut self) -> Option<ArcPartition> {
        if self.done {
            return None;
        }
        let item = ArcPartition { arcs: self.arcs.clone(), classes: self.classes.clone() };
        self.done = true;
        for c in self.classes.iter_mut().rev() {
            if *c < self.l {
                *c += 1;
                self.done = false;
                break;
            }
            *c = 0;
        }
        Some(item)
    }
}

pub fn enumerate_arc_partitions(arcs: &[Arc], l: usize) -> Result<ArcPartitions> {
    if l == 0 {
        return Err(Error::InvalidArgument("l must be at least 1".into()));
    }
    Ok(ArcPartitions { arcs: arcs.to_vec(), classes: vec![0; arcs.len()], l, done: false })
}

/// Terminal pairs to connect, and vertices no route may pass through.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PathQuery {
    pub pairs: Vec<(usize, usize)>,
    pub forbidden: BTreeSet<usize>,
}

/// Paths `P_i` from `s_i` to `t_i` whose internal vertices avoid the
/// forbidden set, every pair endpoint, and each other.
pub fn disjoint_paths(d: &Digraph, q: &PathQuery, budget: Budget) -> Result<Option<Vec<Vec<usize>>>> {
    let n = d.vertex_count();
    for &(s, t) in &q.pairs {
        d.check_vertex(s)?;
        d.check_vertex(t)?;
    }
    let mut blocked = vec![false; n];
    for &v in &q.forbidden {
        if v < n {
            blocked[v] = true;
        }
    }
    for &(s, t) in &q.pairs {
        blocked[s] = true;
        blocked[t] = true;
    }
    let mut router = Router { d, pairs: &q.pairs, blocked, paths: Vec::new() };
    let mut meter = budget.meter();
    Ok(router.solve(0, &mut meter)?.then_some(router.paths))
}

struct Router<'a> {
    d: &'a Digraph,
    pairs: &'a [(usize, usize)],
    /// Vertices unavailable as internal vertices.
    blocked: Vec<bool>,
    paths: Vec<Vec<usize>>,
}

impl Router<'_> {
    fn solve(&mut self, idx: usize, meter: &mut Meter) -> Result<bool> {
        meter.tick()?;
        let Some(&(s, t)) = self.pairs.get(idx) else {
            return Ok(true);
        };
        if s == t {
            self.paths.push(vec![s]);
            if self.solve(idx + 1, meter)? {
                return Ok(true);
            }
            self.paths.pop();
            return Ok(false);
        }
        // Cheap feasibility check on every remaining pair first.
        if !(idx..self.pairs.len()).all(|j| self.reachable(self.pairs[j].0, self.pairs[j].1)) {
            return Ok(false);
        }
        let mut path = vec![s];
        self.route(&mut path, t, idx, meter)
    }

    /// Extends `path` towards `t` along chordless paths only: a chord would
    /// give a route with a subset of the internal vertices.
    fn route(&mut self, path: &mut Vec<usize>, t: usize, idx: usize, meter: &mut Meter) -> Result<bool> {
        meter.tick()?;
        let v = *path.last().expect("path starts at the source");
        if self.d.has_arc(v, t) {
            path.push(t);
            self.paths.push(path.clone());
            path.pop();
            let ok = self.solve(idx + 1, meter)?;
            if !ok {
                self.paths.pop();
            }
            return Ok(ok);
        }
        let d = self.d;
        for &w in d.out_neighbors(v) {
            if self.blocked[w] {
                continue;
            }
            let head = &path[..path.len() - 1];
            if head.iter().any(|&p| d.has_arc(p, w)) {
                continue;
            }
            self.blocked[w] = true;
            path.push(w);
            let ok = self.reachable(w, t) && self.route(path, t, idx, meter)?;
            path.pop();
            self.blocked[w] = false;
            if ok {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn reachable(&self, s: usize, t: usize) -> bool {
        let n = self.d.vertex_count();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([s]);
        seen[s] = true;
        while let Some(x) = queue.pop_front() {
            for &y in self.d.out_neighbors(x) {
                if y == t {
                    return true;
                }
                if !seen[y] && !self.blocked[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        false
    }
}

/// Tries to build `skels.len()` internally disjoint S-cycles where cycle `i`
/// follows skeleton `skels[i]` and uses exactly the arcs of class `i + 1`
/// inside `S`.
pub fn realize(
    d: &Digraph,
    s: &[usize],
    p: &ArcPartition,
    skels: &[Skeleton],
    budget: Budget,
) -> Result<Option<Vec<SCycle>>> {
    let terminals = terminal_set(d, s)?;
    let l = skels.len();
    for (&arc, &c) in p.arcs.iter().zip(&p.classes) {
        if c > l {
            return Err(Error::InvalidArgument(format!("class {c} exceeds l = {l}")));
        }
        if c >= 1 && !skels[c - 1].has_arc(arc) {
            return Ok(None);
        }
    }

    let mut query = PathQuery { pairs: Vec::new(), forbidden: terminals.iter().copied().collect() };
    for (i, sk) in skels.iter().enumerate() {
        for arc in sk.arcs() {
            if p.class_of(arc) != Some(i + 1) {
                query.pairs.push(arc);
            }
        }
    }
    let inner_s: Vec<Arc> =
        d.arcs().filter(|(u, v)| query.forbidden.contains(u) && query.forbidden.contains(v)).collect();
    let routed = d.without_arcs(&inner_s);
    let Some(paths) = disjoint_paths(&routed, &query, budget)? else {
        return Ok(None);
    };

    let mut paths = paths.into_iter();
    let mut cycles = Vec::with_capacity(l);
    for (i, sk) in skels.iter().enumerate() {
        let mut seq = Vec::new();
        for (u, v) in sk.arcs() {
            seq.push(u);
            if p.class_of((u, v)) != Some(i + 1) {
                let path = paths.next().expect("one path per routed skeleton arc");
                debug_assert_eq!((path[0], path[path.len() - 1]), (u, v));
                seq.extend_from_slice(&path[1..path.len() - 1]);
            }
        }
        cycles.push(SCycle::new(seq));
    }

    for (i, c) in cycles.iter().enumerate() {
        let inside: BTreeSet<Arc> =
            c.arcs().filter(|(u, v)| query.forbidden.contains(u) && query.forbidden.contains(v)).collect();
        let wanted: BTreeSet<Arc> = p.class(i + 1).collect();
        if inside != wanted || !c.is_cycle_of(d) {
            return Err(Error::Invariant(format!("realized cycle {i} does not match its class")));
        }
    }
    if !crate::steiner::check_disjointness(&cycles, &terminals, DisjointMode::Internal)? {
        return Err(Error::Invariant("realized cycles are not internally disjoint".into()));
    }
    Ok(Some(cycles))
}

/// Decides `kappa_S(d) >= l` for symmetric `d`, returning the first family
/// found (partitions outer, skeleton tuples inner, both lexicographic).
pub fn symmetric_kappa_at_least(
    d: &Digraph,
    s: &[usize],
    l: usize,
    budget: Budget,
) -> Result<Option<PackingCertificate>> {
    if !d.is_symmetric() {
        return Err(Error::WrongClass("symmetric"));
    }
    let terminals = terminal_set(d, s)?;
    if l == 0 {
        return Err(Error::InvalidArgument("l must be at least 1".into()));
    }
    let in_s: BTreeSet<usize> = terminals.iter().copied().collect();
    let inner: Vec<Arc> = d.arcs().filter(|(u, v)| in_s.contains(u) && in_s.contains(v)).collect();
    let skeletons = enumerate_skeletons(&terminals)?;

    for p in enumerate_arc_partitions(&inner, l)? {
        budget.check()?;
        // Skeletons admissible for each cycle under this labelling; the
        // tuple loop below visits exactly the lexicographic tuples that
        // pass the class filter.
        let admissible: Vec<Vec<usize>> = (1..=l)
            .map(|c| (0..skeletons.len()).filter(|&j| p.class(c).all(|a| skeletons[j].has_arc(a))).collect())
            .collect();
        if admissible.iter().any(Vec::is_empty) {
            continue;
        }
        let mut pick = vec![0usize; l];
        loop {
            let tuple: Vec<Skeleton> =
                pick.iter().enumerate().map(|(c, &j)| skeletons[admissible[c][j]].clone()).collect();
            if let Some(cycles) = realize(d, &terminals, &p, &tuple, budget)? {
                return Ok(Some(PackingCertificate::new(
                    DisjointMode::Internal,
                    Some(l),
                    PackStatus::TargetReached,
                    cycles,
                )));
            }
            if !advance(&mut pick, &admissible) {
                break;
            }
        }
    }
    Ok(None)
}

fn advance(pick: &mut [usize], lists: &[Vec<usize>]) -> bool {
    for c in (0..pick.len()).rev() {
        if pick[c] + 1 < lists[c].len() {
            pick[c] += 1;
            return true;
        }
        pick[c] = 0;
    }
    false
}

/// `kappa_S(d)` for symmetric `d` by raising `l` until the decision fails.
pub fn symmetric_kappa(d: &Digraph, s: &[usize], budget: Budget) -> Result<PackingCertificate> {
    let terminals = terminal_set(d, s)?;
    let mut best: Vec<SCycle> = Vec::new();
    let ceiling = terminals.iter().map(|&t| d.out_degree(t)).min().unwrap_or(0);
    for l in 1..=ceiling {
        match symmetric_kappa_at_least(d, &terminals, l, budget)? {
            Some(cert) => best = cert.cycles,
            None => break,
        }
    }
    best.sort();
    Ok(PackingCertificate::new(DisjointMode::Internal, None, PackStatus::Complete, best))
}
