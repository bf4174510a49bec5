//! Directed S-cycles and exact computation of the packing numbers
//! `kappa` (internally disjoint) and `lambda` (arc-disjoint).

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::budget::{Budget, Meter};
use crate::digraph::{Arc, Digraph};
use crate::error::{Error, Result};

pub const DEFAULT_CAP: usize = 100_000;

/// A directed cycle stored in canonical rotation (minimum vertex first).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SCycle {
    vertices: Vec<usize>,
}

impl SCycle {
    /// Rotates `vertices` into canonical form. Panics on fewer than two
    /// vertices.
    pub fn new(mut vertices: Vec<usize>) -> Self {
        assert!(vertices.len() >= 2, "a cycle needs at least two vertices");
        let pos = (0..vertices.len()).min_by_key(|&i| vertices[i]).unwrap_or(0);
        vertices.rotate_left(pos);
        SCycle { vertices }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    pub fn arcs(&self) -> impl Iterator<Item = Arc> + '_ {
        let k = self.vertices.len();
        (0..k).map(move |i| (self.vertices[i], self.vertices[(i + 1) % k]))
    }

    pub fn successor(&self, v: usize) -> Option<usize> {
        let i = self.vertices.iter().position(|&x| x == v)?;
        Some(self.vertices[(i + 1) % self.vertices.len()])
    }

    pub fn predecessor(&self, v: usize) -> Option<usize> {
        let k = self.vertices.len();
        let i = self.vertices.iter().position(|&x| x == v)?;
        Some(self.vertices[(i + k - 1) % k])
    }

    /// Whether this is a simple directed cycle of `d`.
    pub fn is_cycle_of(&self, d: &Digraph) -> bool {
        let distinct: BTreeSet<_> = self.vertices.iter().collect();
        distinct.len() == self.vertices.len() && self.arcs().all(|(u, v)| d.has_arc(u, v))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DisjointMode {
    /// Pairwise arc-disjoint with common vertex set exactly `S` (`kappa`).
    Internal,
    /// Pairwise arc-disjoint (`lambda`).
    Arc,
}

impl DisjointMode {
    pub fn name(self) -> &'static str {
        match self {
            DisjointMode::Internal => "internal",
            DisjointMode::Arc => "arc",
        }
    }
}

/// Validated, sorted, deduplicated terminal set.
pub fn terminal_set(d: &Digraph, s: &[usize]) -> Result<Vec<usize>> {
    let set: BTreeSet<usize> = s.iter().copied().collect();
    for &v in &set {
        d.check_vertex(v)?;
    }
    if set.len() < 2 {
        return Err(Error::InvalidArgument("terminal set needs at least two distinct vertices".into()));
    }
    Ok(set.into_iter().collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleEnumeration {
    pub cycles: Vec<SCycle>,
    /// More cycles exist than the cap allowed.
    pub truncated: bool,
}

/// All directed cycles of `d` through every vertex of `s`, canonical and
/// sorted. Stops after `cap` cycles, flagging truncation.
pub fn enumerate_s_cycles(d: &Digraph, s: &[usize], cap: usize) -> Result<CycleEnumeration> {
    enumerate_s_cycles_within(d, s, cap, Budget::unlimited())
}

pub fn enumerate_s_cycles_within(d: &Digraph, s: &[usize], cap: usize, budget: Budget) -> Result<CycleEnumeration> {
    let terminals = terminal_set(d, s)?;
    let mut walk = CycleWalk {
        d,
        start: terminals[0],
        is_terminal: mask(d.vertex_count(), &terminals),
        terminal_count: terminals.len(),
        on_path: vec![false; d.vertex_count()],
        path: vec![terminals[0]],
        found: Vec::new(),
        cap,
        truncated: false,
    };
    walk.on_path[walk.start] = true;
    let mut meter = budget.meter();
    walk.extend(1, &mut meter)?;
    let mut cycles = walk.found;
    cycles.sort();
    Ok(CycleEnumeration { cycles, truncated: walk.truncated })
}

fn mask(n: usize, verts: &[usize]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &v in verts {
        m[v] = true;
    }
    m
}

struct CycleWalk<'a> {
    d: &'a Digraph,
    start: usize,
    is_terminal: Vec<bool>,
    terminal_count: usize,
    on_path: Vec<bool>,
    path: Vec<usize>,
    found: Vec<SCycle>,
    cap: usize,
    truncated: bool,
}

impl CycleWalk<'_> {
    /// Returns `false` once the cap stops the walk.
    fn extend(&mut self, terminals_on_path: usize, meter: &mut Meter) -> Result<bool> {
        meter.tick()?;
        let Some(&v) = self.path.last() else {
            return Ok(true);
        };
        if !self.can_finish(v) {
            return Ok(true);
        }
        let d = self.d;
        for &w in d.out_neighbors(v) {
            if w == self.start {
                if terminals_on_path == self.terminal_count && self.path.len() >= 2 {
                    if self.found.len() == self.cap {
                        self.truncated = true;
                        return Ok(false);
                    }
                    self.found.push(SCycle::new(self.path.clone()));
                }
                continue;
            }
            if self.on_path[w] {
                continue;
            }
            self.on_path[w] = true;
            self.path.push(w);
            let more = terminals_on_path + usize::from(self.is_terminal[w]);
            let keep_going = self.extend(more, meter)?;
            self.path.pop();
            self.on_path[w] = false;
            if !keep_going {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Every terminal still off the path, and the start, must be reachable
    /// from `v` through vertices not yet on the path.
    fn can_finish(&self, v: usize) -> bool {
        let n = self.d.vertex_count();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([v]);
        seen[v] = true;
        let mut back_to_start = false;
        while let Some(x) = queue.pop_front() {
            for &y in self.d.out_neighbors(x) {
                if y == self.start {
                    back_to_start = true;
                }
                if !seen[y] && !self.on_path[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        back_to_start && (0..n).all(|t| !self.is_terminal[t] || self.on_path[t] || seen[t])
    }
}

/// Whether `cycles` are pairwise disjoint in the given sense.
pub fn check_disjointness(cycles: &[SCycle], s: &[usize], mode: DisjointMode) -> Result<bool> {
    let terminals: BTreeSet<usize> = s.iter().copied().collect();
    for c in cycles {
        if let Some(t) = terminals.iter().find(|&&t| !c.contains(t)) {
            return Err(Error::InvalidArgument(format!("cycle {:?} omits terminal {t}", c.vertices())));
        }
    }
    for (i, a) in cycles.iter().enumerate() {
        let arcs_a: BTreeSet<Arc> = a.arcs().collect();
        let verts_a: BTreeSet<usize> = a.vertices().iter().copied().collect();
        for b in &cycles[i + 1..] {
            if b.arcs().any(|e| arcs_a.contains(&e)) {
                return Ok(false);
            }
            if mode == DisjointMode::Internal {
                let common: BTreeSet<usize> = b.vertices().iter().copied().filter(|v| verts_a.contains(v)).collect();
                if common != terminals {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PackStatus {
    /// The search space was exhausted: `value` is the exact maximum.
    Complete,
    /// Stopped as soon as `target` cycles were witnessed.
    TargetReached,
    BudgetExceeded,
    CapExceeded,
}

/// A witnessed packing value.
///
/// `exhaustive` is true when the certificate settles its question: either
/// `value` is the exact maximum, or a `target` was requested and has been
/// witnessed. Otherwise `value` is only a lower bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PackingCertificate {
    pub mode: DisjointMode,
    pub value: usize,
    pub target: Option<usize>,
    pub exhaustive: bool,
    pub status: PackStatus,
    pub cycles: Vec<SCycle>,
}

impl PackingCertificate {
    pub(crate) fn new(mode: DisjointMode, target: Option<usize>, status: PackStatus, cycles: Vec<SCycle>) -> Self {
        PackingCertificate {
            mode,
            value: cycles.len(),
            target,
            exhaustive: matches!(status, PackStatus::Complete | PackStatus::TargetReached),
            status,
            cycles,
        }
    }

    /// `Some(answer)` when the certificate decides `value >= target`.
    pub fn meets_target(&self) -> Option<bool> {
        let t = self.target?;
        if self.value >= t {
            Some(true)
        } else if self.exhaustive {
            Some(false)
        } else {
            None
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("mode {}\nvalue {}\nexhaustive {}\n", self.mode.name(), self.value, self.exhaustive);
        if let Some(t) = self.target {
            let _ = writeln!(s, "target {t}");
        }
        for c in &self.cycles {
            s.push_str("cycle");
            for v in c.vertices() {
                let _ = write!(s, " {v}");
            }
            s.push('\n');
        }
        s
    }
}

/// Maximum family of pairwise compatible S-cycles.
///
/// With `target`, stops as soon as that many cycles are witnessed. Budget
/// or cap exhaustion yields a non-exhaustive certificate carrying the best
/// family found.
pub fn pack_cycles(
    d: &Digraph,
    s: &[usize],
    mode: DisjointMode,
    target: Option<usize>,
    cap: usize,
    budget: Budget,
) -> Result<PackingCertificate> {
    let terminals = terminal_set(d, s)?;
    let enumeration = match enumerate_s_cycles_within(d, &terminals, cap, budget) {
        Ok(e) => e,
        Err(Error::BudgetExceeded) => {
            return Ok(PackingCertificate::new(mode, target, PackStatus::BudgetExceeded, vec![]))
        }
        Err(e) => return Err(e),
    };
    let mut packer = Packer::new(d, &terminals, mode, enumeration.cycles);
    let goal = target.unwrap_or(usize::MAX);
    let outcome = packer.run(goal, &mut budget.meter());
    let best: Vec<SCycle> = packer.best.iter().map(|&i| packer.cycles[i].clone()).collect();
    let status = match outcome {
        _ if best.len() >= goal => PackStatus::TargetReached,
        Err(Error::BudgetExceeded) => PackStatus::BudgetExceeded,
        Err(e) => return Err(e),
        Ok(()) if enumeration.truncated => PackStatus::CapExceeded,
        Ok(()) => PackStatus::Complete,
    };
    let mut best = best;
    best.sort();
    Ok(PackingCertificate::new(mode, target, status, best))
}

/// Branch and bound over the enumerated cycle list. Every cycle leaves each
/// terminal through exactly one out-arc, so the candidates split into
/// groups by that arc; branching picks one member of a group or drops the
/// whole group.
struct Packer {
    cycles: Vec<SCycle>,
    mode: DisjointMode,
    k: usize,
    arcs: Vec<FixedBitSet>,
    internals: Vec<FixedBitSet>,
    /// Per cycle, per terminal: (successor, predecessor).
    ends: Vec<Vec<(usize, usize)>>,
    /// Per cycle: arcs with both ends in `S`.
    direct: Vec<Vec<usize>>,
    best: Vec<usize>,
    chosen: Vec<usize>,
}

impl Packer {
    fn new(d: &Digraph, terminals: &[usize], mode: DisjointMode, mut cycles: Vec<SCycle>) -> Self {
        cycles.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let index: BTreeMap<Arc, usize> = d.arcs().enumerate().map(|(i, a)| (a, i)).collect();
        let is_terminal = mask(d.vertex_count(), terminals);
        let mut arcs = Vec::with_capacity(cycles.len());
        let mut internals = Vec::with_capacity(cycles.len());
        let mut ends = Vec::with_capacity(cycles.len());
        let mut direct = Vec::with_capacity(cycles.len());
        for c in &cycles {
            let mut a = FixedBitSet::with_capacity(index.len());
            let mut dir = Vec::new();
            for e in c.arcs() {
                a.insert(index[&e]);
                if is_terminal[e.0] && is_terminal[e.1] {
                    dir.push(index[&e]);
                }
            }
            let mut iv = FixedBitSet::with_capacity(d.vertex_count());
            for &v in c.vertices() {
                if !is_terminal[v] {
                    iv.insert(v);
                }
            }
            let e: Vec<(usize, usize)> = terminals
                .iter()
                .map(|&t| (c.successor(t).expect("terminal on cycle"), c.predecessor(t).expect("terminal on cycle")))
                .collect();
            arcs.push(a);
            internals.push(iv);
            ends.push(e);
            direct.push(dir);
        }
        Packer { cycles, mode, k: terminals.len(), arcs, internals, ends, direct, best: Vec::new(), chosen: Vec::new() }
    }

    fn compatible(&self, a: usize, b: usize) -> bool {
        self.arcs[a].is_disjoint(&self.arcs[b])
            && (self.mode == DisjointMode::Arc || self.internals[a].is_disjoint(&self.internals[b]))
    }

    fn run(&mut self, goal: usize, meter: &mut Meter) -> Result<()> {
        let all: Vec<usize> = (0..self.cycles.len()).collect();
        self.search(all, goal, meter).map(|_| ())
    }

    /// Groups of `cands` by the (terminal, side) with fewest distinct arcs.
    fn tightest_split(&self, cands: &[usize]) -> (usize, BTreeMap<usize, Vec<usize>>) {
        let mut best: Option<BTreeMap<usize, Vec<usize>>> = None;
        for t in 0..self.k {
            for side in 0..2 {
                let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
                for &c in cands {
                    let (succ, pred) = self.ends[c][t];
                    groups.entry(if side == 0 { succ } else { pred }).or_default().push(c);
                }
                if best.as_ref().is_none_or(|b| groups.len() < b.len()) {
                    best = Some(groups);
                }
            }
        }
        let groups = best.unwrap_or_default();
        (groups.len(), groups)
    }

    fn upper_bound(&self, cands: &[usize], groups: usize) -> usize {
        let mut bound = groups.min(cands.len());
        if self.mode == DisjointMode::Internal {
            // Each cycle has k segments between consecutive terminals; a
            // segment is a direct arc inside S or uses a private internal
            // vertex.
            let mut direct = BTreeSet::new();
            let mut inner = FixedBitSet::with_capacity(self.internals.first().map_or(0, |b| b.len()));
            for &c in cands {
                direct.extend(self.direct[c].iter().copied());
                inner.union_with(&self.internals[c]);
            }
            bound = bound.min((direct.len() + inner.count_ones(..)) / self.k);
        }
        bound
    }

    /// Returns `true` once `goal` cycles are chosen.
    fn search(&mut self, cands: Vec<usize>, goal: usize, meter: &mut Meter) -> Result<bool> {
        meter.tick()?;
        if self.chosen.len() > self.best.len() {
            self.best = self.chosen.clone();
            if self.best.len() >= goal {
                return Ok(true);
            }
        }
        if cands.is_empty() {
            return Ok(false);
        }
        let (count, groups) = self.tightest_split(&cands);
        if self.chosen.len() + self.upper_bound(&cands, count) <= self.best.len() {
            return Ok(false);
        }
        let (_, group) = groups.iter().min_by_key(|(_, g)| g.len()).expect("non-empty candidates");
        let group = group.clone();
        for &c in &group {
            let next: Vec<usize> = cands.iter().copied().filter(|&o| o != c && self.compatible(c, o)).collect();
            self.chosen.push(c);
            let done = self.search(next, goal, meter)?;
            self.chosen.pop();
            if done {
                return Ok(true);
            }
        }
        let rest: Vec<usize> = cands.into_iter().filter(|c| !group.contains(c)).collect();
        self.search(rest, goal, meter)
    }
}

/// Whether some cycle of `d` passes through all of `s`.
pub fn has_s_cycle(d: &Digraph, s: &[usize], budget: Budget) -> Result<bool> {
    Ok(!enumerate_s_cycles_within(d, s, 1, budget)?.cycles.is_empty())
}

/// Whether every `k`-subset of vertices lies on a common cycle. Symmetric
/// inputs go through the partition/skeleton procedure.
pub fn is_k_cyclic(d: &Digraph, k: usize, budget: Budget) -> Result<bool> {
    let n = d.vertex_count();
    if k < 2 || k > n {
        return Err(Error::InvalidArgument(format!("k must satisfy 2 <= k <= n = {n}, got {k}")));
    }
    if !d.is_strong() {
        return Ok(false);
    }
    let symmetric = d.is_symmetric();
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        budget.check()?;
        let ok = if symmetric {
            crate::symmetric::symmetric_kappa_at_least(d, &subset, 1, budget)?.is_some()
        } else {
            has_s_cycle(d, &subset, budget)?
        };
        if !ok {
            return Ok(false);
        }
        if !next_combination(&mut subset, n) {
            return Ok(true);
        }
    }
}

/// Advances a sorted `k`-combination of `0..n` in lexicographic order.
pub fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Digraph {
        let mut e = Vec::new();
        for u in 0..4 {
            for v in u + 1..4 {
                e.push((u, v));
            }
        }
        Digraph::symmetric_from_edges(4, e).unwrap()
    }

    fn c5() -> Digraph {
        Digraph::symmetric_from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap()
    }

    fn triangle() -> Digraph {
        Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    /// Exhaustive subset search over all enumerated cycles.
    fn brute_force(d: &Digraph, s: &[usize], mode: DisjointMode) -> usize {
        let cycles = enumerate_s_cycles(d, s, usize::MAX).unwrap().cycles;
        assert!(cycles.len() < 20);
        let mut best = 0;
        for m in 0u32..(1 << cycles.len()) {
            let pick: Vec<SCycle> = (0..cycles.len()).filter(|i| m >> i & 1 == 1).map(|i| cycles[i].clone()).collect();
            if pick.len() > best && check_disjointness(&pick, s, mode).unwrap() {
                best = pick.len();
            }
        }
        best
    }

    #[test]
    fn canonical_rotation() {
        let c = SCycle::new(vec![3, 1, 2]);
        assert_eq!(c.vertices(), &[1, 2, 3]);
        assert_eq!(c.arcs().collect::<Vec<_>>(), vec![(1, 2), (2, 3), (3, 1)]);
        assert_eq!(c.successor(3), Some(1));
        assert_eq!(c.predecessor(1), Some(3));
    }

    #[test]
    fn enumerate_examples() {
        let t = enumerate_s_cycles(&triangle(), &[0, 1, 2], DEFAULT_CAP).unwrap();
        assert_eq!(t.cycles, vec![SCycle::new(vec![0, 1, 2])]);
        let c = enumerate_s_cycles(&c5(), &[1, 3], DEFAULT_CAP).unwrap();
        assert_eq!(c.cycles, vec![SCycle::new(vec![0, 1, 2, 3, 4]), SCycle::new(vec![0, 4, 3, 2, 1])]);
        let dag = Digraph::from_arcs(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(enumerate_s_cycles(&dag, &[0, 2], DEFAULT_CAP).unwrap().cycles.is_empty());
        assert!(enumerate_s_cycles(&dag, &[0], DEFAULT_CAP).is_err());
    }

    #[test]
    fn enumerate_flags_cap() {
        let e = enumerate_s_cycles(&k4(), &[0, 1], 2).unwrap();
        assert_eq!(e.cycles.len(), 2);
        assert!(e.truncated);
        let all = enumerate_s_cycles(&k4(), &[0, 1], DEFAULT_CAP).unwrap();
        assert!(!all.truncated);
        // 1 two-cycle, 4 triangles through 0,1 (2 thirds x 2 directions),
        // 6 four-cycles containing both.
        assert_eq!(all.cycles.len(), 11);
    }

    #[test]
    fn disjointness_examples() {
        let s = [0, 1];
        let pair = [SCycle::new(vec![0, 1]), SCycle::new(vec![0, 2, 1, 3])];
        assert!(check_disjointness(&pair, &s, DisjointMode::Internal).unwrap());
        let trav = [SCycle::new(vec![0, 1, 2, 3, 4]), SCycle::new(vec![0, 4, 3, 2, 1])];
        assert!(!check_disjointness(&trav, &[1, 3], DisjointMode::Internal).unwrap());
        assert!(check_disjointness(&trav, &[1, 3], DisjointMode::Arc).unwrap());
        assert!(check_disjointness(&pair[..1], &s, DisjointMode::Internal).unwrap());
        assert!(check_disjointness(&[SCycle::new(vec![0, 2])], &s, DisjointMode::Arc).is_err());
    }

    #[test]
    fn pack_k4_and_c5() {
        let b = Budget::unlimited();
        let kappa = pack_cycles(&k4(), &[0, 1], DisjointMode::Internal, None, DEFAULT_CAP, b).unwrap();
        assert_eq!((kappa.value, kappa.exhaustive), (2, true));
        assert_eq!(brute_force(&k4(), &[0, 1], DisjointMode::Internal), 2);
        let lambda = pack_cycles(&k4(), &[0, 1], DisjointMode::Arc, None, DEFAULT_CAP, b).unwrap();
        assert_eq!(lambda.value, 3);
        assert_eq!(brute_force(&k4(), &[0, 1], DisjointMode::Arc), 3);
        assert!(check_disjointness(&lambda.cycles, &[0, 1], DisjointMode::Arc).unwrap());
        let k = pack_cycles(&c5(), &[1, 3], DisjointMode::Internal, None, DEFAULT_CAP, b).unwrap();
        let l = pack_cycles(&c5(), &[1, 3], DisjointMode::Arc, None, DEFAULT_CAP, b).unwrap();
        assert_eq!((k.value, l.value), (1, 2));
    }

    #[test]
    fn pack_with_target_and_cap() {
        let b = Budget::unlimited();
        let c = pack_cycles(&k4(), &[0, 1], DisjointMode::Arc, Some(2), DEFAULT_CAP, b).unwrap();
        assert_eq!(c.status, PackStatus::TargetReached);
        assert_eq!(c.meets_target(), Some(true));
        let c = pack_cycles(&k4(), &[0, 1], DisjointMode::Internal, Some(3), DEFAULT_CAP, b).unwrap();
        assert_eq!(c.meets_target(), Some(false));
        let c = pack_cycles(&k4(), &[0, 1], DisjointMode::Internal, None, 1, b).unwrap();
        assert_eq!(c.status, PackStatus::CapExceeded);
        assert!(!c.exhaustive);
        assert_eq!(c.meets_target(), None);
    }

    #[test]
    fn certificate_text() {
        let c = pack_cycles(&c5(), &[1, 3], DisjointMode::Internal, None, DEFAULT_CAP, Budget::unlimited()).unwrap();
        let text = c.to_text();
        assert!(text.starts_with("mode internal\nvalue 1\nexhaustive true\ncycle 0 "));
        assert!(text.ends_with("cycle 0 1 2 3 4\n") || text.ends_with("cycle 0 4 3 2 1\n"));
    }

    #[test]
    fn k_cyclic_examples() {
        let b = Budget::unlimited();
        assert!(is_k_cyclic(&k4(), 2, b).unwrap());
        assert!(is_k_cyclic(&triangle(), 3, b).unwrap());
        let dag = Digraph::from_arcs(3, [(0, 1), (1, 2)]).unwrap();
        assert!(!is_k_cyclic(&dag, 2, b).unwrap());
        assert!(is_k_cyclic(&triangle(), 1, b).is_err());
        // Every triple of the bidirected 5-cycle lies on a full traversal.
        assert!(is_k_cyclic(&c5(), 3, b).unwrap());
        // Two triangles sharing vertex 0 (bowtie): {1, 3} share no cycle.
        let bow = Digraph::from_arcs(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        assert!(!is_k_cyclic(&bow, 2, b).unwrap());
    }

    #[test]
    fn combinations() {
        let mut c = vec![0, 1];
        let mut count = 1;
        while next_combination(&mut c, 4) {
            count += 1;
        }
        assert_eq!(count, 6);
    }
}
