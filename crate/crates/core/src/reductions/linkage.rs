//! Directed 2-linkage: the exhaustive oracle, the Steiner-cycle gadget
//! built around an Eulerian host, and the vertex-splitting transform that
//! turns internal disjointness into arc disjointness.

use std::collections::{BTreeSet, VecDeque};

use super::GadgetOutput;
use crate::budget::{Budget, Meter};
use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// Label prefix marking vertices that came from the host digraph.
const HOST_PREFIX: &str = "h_";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkageInstance {
    pub digraph: Digraph,
    /// `(s1, t1, s2, t2)`
    pub terminals: [usize; 4],
}

impl LinkageInstance {
    pub fn new(digraph: Digraph, terminals: [usize; 4]) -> Result<Self> {
        for &t in &terminals {
            digraph.check_vertex(t)?;
        }
        let distinct: BTreeSet<usize> = terminals.iter().copied().collect();
        if distinct.len() != 4 {
            return Err(Error::InvalidArgument("linkage terminals must be distinct".into()));
        }
        Ok(LinkageInstance { digraph, terminals })
    }
}

/// Vertex sequences of `P1: s1 -> t1` and `P2: s2 -> t2`.
pub type LinkagePaths = (Vec<usize>, Vec<usize>);

/// Enumerates every simple `s1 -> t1` path avoiding `s2, t2`, and for each
/// asks breadth-first search for an `s2 -> t2` path in what remains.
pub fn oracle_2linkage(l: &LinkageInstance, budget: Budget) -> Result<Option<LinkagePaths>> {
    let d = &l.digraph;
    let [s1, t1, s2, t2] = l.terminals;
    let mut used = vec![false; d.vertex_count()];
    used[s1] = true;
    used[s2] = true;
    used[t2] = true;
    let mut path = vec![s1];
    let mut meter = budget.meter();
    first_path(d, &mut path, &mut used, t1, (s2, t2), &mut meter)
}

fn first_path(
    d: &Digraph,
    path: &mut Vec<usize>,
    used: &mut [bool],
    t1: usize,
    second: (usize, usize),
    meter: &mut Meter,
) -> Result<Option<LinkagePaths>> {
    meter.tick()?;
    let v = *path.last().expect("path is never empty");
    if v == t1 {
        let mut blocked = used.to_vec();
        blocked[second.0] = false;
        blocked[second.1] = false;
        return Ok(bfs_path(d, second.0, second.1, &blocked).map(|p2| (path.clone(), p2)));
    }
    for &w in d.out_neighbors(v) {
        if used[w] {
            continue;
        }
        used[w] = true;
        path.push(w);
        let found = first_path(d, path, used, t1, second, meter)?;
        path.pop();
        used[w] = false;
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

fn bfs_path(d: &Digraph, s: usize, t: usize, blocked: &[bool]) -> Option<Vec<usize>> {
    let n = d.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::from([s]);
    parent[s] = s;
    while let Some(x) = queue.pop_front() {
        if x == t {
            let mut p = vec![t];
            let mut cur = t;
            while cur != s {
                cur = parent[cur];
                p.push(cur);
            }
            p.reverse();
            return Some(p);
        }
        for &y in d.out_neighbors(x) {
            if parent[y] == usize::MAX && !blocked[y] {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}

/// Eulerian digraph `D` on `V(H)`, terminals `x_1..x_k`, `r_1, r_2` (and
/// subdivision vertices when `l >= 2`) such that `k` fixed terminals carry
/// `l` internally disjoint S-cycles exactly when `H` is 2-linked.
///
/// Vertex order: host vertices (labelled `h_<v>`), `x_1..x_k`, `r_1`,
/// `r_2`, then subdivision vertices `z^j_{i,i+1}`.
pub fn build_linkage_kappa_gadget(link: &LinkageInstance, k: usize, l: usize) -> Result<GadgetOutput> {
    let h = &link.digraph;
    if !h.is_eulerian() {
        return Err(Error::WrongClass("Eulerian"));
    }
    if k < 2 || l < 1 {
        return Err(Error::InvalidArgument(format!("need k >= 2 and l >= 1, got k={k}, l={l}")));
    }
    let [s1, t1, s2, t2] = link.terminals;
    let mut d = Digraph::new(0);
    for v in 0..h.vertex_count() {
        d.add_labeled_vertex(format!("{HOST_PREFIX}{v}"));
    }
    for (u, v) in h.arcs() {
        d.add_arc(u, v)?;
    }
    let x: Vec<usize> = (1..=k).map(|i| d.add_labeled_vertex(format!("x_{i}"))).collect();
    let r1 = d.add_labeled_vertex("r_1");
    let r2 = d.add_labeled_vertex("r_2");
    for (a, b) in [(x[k - 2], s1), (t1, x[k - 1]), (x[k - 1], s2), (t2, x[0]), (s1, r1), (r1, t2), (s2, r2), (r2, t1)] {
        d.add_arc(a, b)?;
    }
    if l == 1 {
        for i in 0..k - 2 {
            d.add_arc(x[i], x[i + 1])?;
        }
    } else {
        for i in 0..k {
            let copies = if i + 2 < k { l } else { l - 1 };
            for j in 1..=copies {
                let z = d.add_labeled_vertex(format!("z^{j}_{{{},{}}}", i + 1, i + 2));
                d.add_arc(x[i], z)?;
                d.add_arc(z, x[(i + 1) % k])?;
            }
        }
    }
    if !d.is_eulerian() {
        return Err(Error::Invariant("linkage gadget is not Eulerian".into()));
    }
    if let Some(&bad) = x.iter().find(|&&v| d.out_degree(v) != l) {
        return Err(Error::Invariant(format!("terminal {bad} has out-degree {} instead of {l}", d.out_degree(bad))));
    }
    Ok(GadgetOutput {
        provenance: format!(
            "2-linkage gadget for internally disjoint S-cycles: k={k}, l={l}, host terminals s1={s1} t1={t1} s2={s2} t2={t2}"
        ),
        digraph: d,
        terminal_set: Some(x),
        threshold: Some(l),
    })
}

/// Splits every host vertex `u` into `u^-` (all in-arcs) and `u^+` (all
/// out-arcs) joined by `u^- -> u^+`. Non-host vertices are copied as is.
pub fn split_vertices(g: &GadgetOutput) -> Result<GadgetOutput> {
    let d = &g.digraph;
    let missing: Vec<&str> =
        ["r_1", "r_2", "x_1", "x_2"].into_iter().filter(|l| d.vertex_by_label(l).is_none()).collect();
    if !missing.is_empty() {
        return Err(Error::MissingLabels(missing.join(", ")));
    }
    let Some(terminals) = &g.terminal_set else {
        return Err(Error::MissingLabels("terminal set".into()));
    };
    let is_host = |v: usize| d.label(v).is_some_and(|l| l.starts_with(HOST_PREFIX));
    if !(0..d.vertex_count()).any(is_host) {
        return Err(Error::MissingLabels(format!("no `{HOST_PREFIX}` host vertices")));
    }
    let mut out = Digraph::new(0);
    let mut head = Vec::with_capacity(d.vertex_count());
    let mut tail = Vec::with_capacity(d.vertex_count());
    for v in 0..d.vertex_count() {
        let label = d.label(v).map(str::to_string).unwrap_or_else(|| v.to_string());
        if is_host(v) {
            let minus = out.add_labeled_vertex(format!("{label}^-"));
            let plus = out.add_labeled_vertex(format!("{label}^+"));
            out.add_arc(minus, plus)?;
            head.push(minus);
            tail.push(plus);
        } else {
            let w = match d.label(v) {
                Some(l) => out.add_labeled_vertex(l),
                None => out.add_vertex(),
            };
            head.push(w);
            tail.push(w);
        }
    }
    for (u, v) in d.arcs() {
        out.add_arc(tail[u], head[v])?;
    }
    Ok(GadgetOutput {
        provenance: format!("{}\nvertex split of every host vertex", g.provenance),
        digraph: out,
        terminal_set: Some(terminals.iter().map(|&t| head[t]).collect()),
        threshold: g.threshold,
    })
}
