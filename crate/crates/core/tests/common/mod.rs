//! Brute-force oracles shared by the integration suites. Deliberately naive
//! and independent of the library's search code: they only use the
//! digraph container.

#![allow(dead_code)]

use std::collections::BTreeSet;

use steinerforge::Digraph;

/// Largest arc count found over all arc subsets forming an `i`-perfect
/// out-forest, checked from the definition.
pub fn brute_max_i_perfect(d: &Digraph, i: usize) -> Option<usize> {
    let arcs: Vec<(usize, usize)> = d.arcs().collect();
    assert!(arcs.len() <= 18, "too many arcs for subset enumeration");
    let mut best = None;
    for mask in 0u32..(1u32 << arcs.len()) {
        let chosen: Vec<(usize, usize)> = (0..arcs.len()).filter(|&b| mask >> b & 1 == 1).map(|b| arcs[b]).collect();
        if is_i_perfect(d, &chosen, i) {
            best = best.max(Some(chosen.len()));
        }
    }
    best
}

fn is_i_perfect(d: &Digraph, f: &[(usize, usize)], i: usize) -> bool {
    let n = d.vertex_count();
    let mut comp: Vec<usize> = (0..n).collect();
    fn find(c: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while c[r] != r {
            r = c[r];
        }
        c[x] = r;
        r
    }
    let mut indeg = vec![0usize; n];
    let mut deg = vec![0usize; n];
    for &(u, v) in f {
        indeg[v] += 1;
        deg[u] += 1;
        deg[v] += 1;
        let (a, b) = (find(&mut comp, u), find(&mut comp, v));
        comp[a] = b;
    }
    if indeg.iter().any(|&x| x > 1) {
        return false;
    }
    let roots: Vec<usize> = (0..n).map(|v| find(&mut comp, v)).collect();
    let set: BTreeSet<(usize, usize)> = f.iter().copied().collect();
    // Each component is a tree (|arcs| = |vertices| - 1) and induced.
    let mut size = vec![0usize; n];
    let mut inner = vec![0usize; n];
    for v in 0..n {
        size[roots[v]] += 1;
    }
    for &(u, _) in f {
        inner[roots[u]] += 1;
    }
    if (0..n).any(|r| size[r] > 0 && inner[r] + 1 != size[r]) {
        return false;
    }
    for (u, v) in d.arcs() {
        if roots[u] == roots[v] && !set.contains(&(u, v)) {
            return false;
        }
    }
    (0..n).filter(|&v| deg[v].is_multiple_of(2)).count() == i
}

/// Every simple directed cycle through all of `s`, by plain DFS from each
/// possible minimum vertex. Cycles are returned with the minimum first.
pub fn brute_s_cycles(d: &Digraph, s: &[usize]) -> Vec<Vec<usize>> {
    let n = d.vertex_count();
    let mut out = Vec::new();
    for start in 0..n {
        let mut path = vec![start];
        dfs(d, start, &mut path, &mut out);
    }
    out.retain(|c| s.iter().all(|t| c.contains(t)));
    out.sort();
    out
}

fn dfs(d: &Digraph, start: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let v = *path.last().unwrap();
    for &w in d.out_neighbors(v) {
        if w == start && path.len() >= 2 {
            out.push(path.clone());
        } else if w > start && !path.contains(&w) {
            path.push(w);
            dfs(d, start, path, out);
            path.pop();
        }
    }
}

fn cycle_arcs(c: &[usize]) -> BTreeSet<(usize, usize)> {
    (0..c.len()).map(|i| (c[i], c[(i + 1) % c.len()])).collect()
}

/// Whether two S-cycles may both be packed: arc-disjoint, and for the
/// internal measure sharing no vertex outside `s`.
pub fn compatible(a: &[usize], b: &[usize], s: &[usize], internal: bool) -> bool {
    if !cycle_arcs(a).is_disjoint(&cycle_arcs(b)) {
        return false;
    }
    !internal || a.iter().all(|v| s.contains(v) || !b.contains(v))
}

/// Maximum pairwise compatible family, by include/exclude recursion.
pub fn brute_pack(d: &Digraph, s: &[usize], internal: bool) -> usize {
    let cycles = brute_s_cycles(d, s);
    assert!(cycles.len() <= 400, "too many cycles for the brute-force packer");
    fn go(cycles: &[Vec<usize>], chosen: &mut Vec<usize>, idx: usize, s: &[usize], internal: bool) -> usize {
        if idx == cycles.len() {
            return chosen.len();
        }
        let mut best = go(cycles, chosen, idx + 1, s, internal);
        if chosen.iter().all(|&j| compatible(&cycles[j], &cycles[idx], s, internal)) {
            chosen.push(idx);
            best = best.max(go(cycles, chosen, idx + 1, s, internal));
            chosen.pop();
        }
        best
    }
    go(&cycles, &mut Vec::new(), 0, s, internal)
}

pub fn factorial(k: usize) -> usize {
    (1..=k).product()
}
