//! Seeded random instances for the cross-check suites. Every generator is a
//! pure function of its parameters and the RNG state.

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::digraph::Digraph;
use crate::reductions::{CnfInstance, Literal};

pub type InstanceRng = ChaCha8Rng;

pub fn rng(seed: u64) -> InstanceRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform random tournament: one orientation per pair.
pub fn random_tournament(rng: &mut impl Rng, n: usize) -> Digraph {
    let mut d = Digraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            let (a, b) = if rng.random_bool(0.5) { (u, v) } else { (v, u) };
            d.add_arc(a, b).expect("fresh pair");
        }
    }
    d
}

/// All `2^(n choose 2)` labelled tournaments on `n` vertices.
pub fn all_tournaments(n: usize) -> impl Iterator<Item = Digraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    assert!(pairs.len() < 64, "too many tournaments to enumerate");
    (0u64..1 << pairs.len()).map(move |mask| {
        let mut d = Digraph::new(n);
        for (i, &(u, v)) in pairs.iter().enumerate() {
            let (a, b) = if mask >> i & 1 == 1 { (v, u) } else { (u, v) };
            d.add_arc(a, b).expect("fresh pair");
        }
        d
    })
}

/// Each pair gets one arc (either way) or both, the 2-cycle with
/// probability `two_cycle_p`.
pub fn random_semicomplete(rng: &mut impl Rng, n: usize, two_cycle_p: f64) -> Digraph {
    let mut d = Digraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(two_cycle_p) {
                d.add_arc(u, v).expect("fresh pair");
                d.add_arc(v, u).expect("fresh pair");
            } else if rng.random_bool(0.5) {
                d.add_arc(u, v).expect("fresh pair");
            } else {
                d.add_arc(v, u).expect("fresh pair");
            }
        }
    }
    d
}

/// Connected symmetric digraph: a random spanning tree plus each other
/// edge with probability `p`.
pub fn random_connected_symmetric(rng: &mut impl Rng, n: usize, p: f64) -> Digraph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = std::collections::BTreeSet::new();
    for i in 1..n {
        let j = rng.random_range(0..i);
        let (a, b) = (order[i], order[j]);
        edges.insert((a.min(b), a.max(b)));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.insert((u, v));
            }
        }
    }
    Digraph::symmetric_from_edges(n, edges).expect("edges are distinct")
}

/// Each ordered pair independently with probability `p`.
pub fn random_digraph(rng: &mut impl Rng, n: usize, p: f64) -> Digraph {
    let mut d = Digraph::new(n);
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.random_bool(p) {
                d.add_arc(u, v).expect("fresh pair");
            }
        }
    }
    d
}

/// Superposes random directed cycles until the digraph is connected.
/// A cycle that would repeat an existing arc is discarded, so degrees stay
/// balanced and the result is simple. `n >= 2`.
pub fn random_eulerian(rng: &mut impl Rng, n: usize) -> Digraph {
    assert!(n >= 2, "an Eulerian digraph with arcs needs two vertices");
    let mut d = Digraph::new(n);
    let mut attempts = 0usize;
    while !d.is_connected() || d.arc_count() == 0 {
        attempts += 1;
        if attempts > 10_000 {
            // Restart rather than loop forever on a saturated digraph.
            d = Digraph::new(n);
            attempts = 0;
        }
        add_random_cycle(rng, &mut d);
    }
    // One extra cycle now and then, for denser hosts.
    if rng.random_bool(0.5) {
        add_random_cycle(rng, &mut d);
    }
    debug_assert!(d.is_eulerian());
    d
}

fn add_random_cycle(rng: &mut impl Rng, d: &mut Digraph) {
    let n = d.vertex_count();
    let len = rng.random_range(2..=n);
    let mut verts: Vec<usize> = (0..n).collect();
    verts.shuffle(rng);
    verts.truncate(len);
    let arcs: Vec<(usize, usize)> = (0..len).map(|i| (verts[i], verts[(i + 1) % len])).collect();
    if arcs.iter().all(|&(u, v)| !d.has_arc(u, v)) {
        for (u, v) in arcs {
            d.add_arc(u, v).expect("checked above");
        }
    }
}

/// `m` clauses over three distinct variables each, random polarities.
pub fn random_cnf(rng: &mut impl Rng, variables: usize, m: usize) -> CnfInstance {
    assert!(variables >= 3, "clauses need three distinct variables");
    let mut vars: Vec<usize> = (0..variables).collect();
    let clauses = (0..m)
        .map(|_| {
            vars.shuffle(rng);
            let mut c = [Literal::pos(0); 3];
            for (slot, &v) in c.iter_mut().zip(&vars[..3]) {
                *slot = Literal { var: v, positive: rng.random_bool(0.5) };
            }
            c
        })
        .collect();
    CnfInstance::new(variables, clauses).expect("distinct variables by construction")
}

/// Random instance together with a planted NAE-satisfying assignment.
pub fn random_nae_satisfiable(rng: &mut impl Rng, variables: usize, m: usize) -> (CnfInstance, Vec<bool>) {
    let planted: Vec<bool> = (0..variables).map(|_| rng.random_bool(0.5)).collect();
    let mut vars: Vec<usize> = (0..variables).collect();
    let clauses = (0..m)
        .map(|_| loop {
            vars.shuffle(rng);
            let mut c = [Literal::pos(0); 3];
            for (slot, &v) in c.iter_mut().zip(&vars[..3]) {
                *slot = Literal { var: v, positive: rng.random_bool(0.5) };
            }
            let trues = c.iter().filter(|l| l.value(&planted)).count();
            if trues == 1 || trues == 2 {
                break c;
            }
        })
        .collect();
    let inst = CnfInstance::new(variables, clauses).expect("distinct variables by construction");
    (inst, planted)
}
