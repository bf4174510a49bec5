mod common;

use proptest::prelude::*;
use rand::seq::SliceRandom;

use steinerforge::generate::{self, rng};
use steinerforge::outforest::{max_i_perfect, verify_out_forest};
use steinerforge::reductions::{build_linkage_kappa_gadget, split_vertices, LinkageInstance};
use steinerforge::steiner::{
    check_disjointness, enumerate_s_cycles, is_k_cyclic, pack_cycles, PackStatus, DEFAULT_CAP,
};
use steinerforge::symmetric::{disjoint_paths, PathQuery};
use steinerforge::{Budget, Digraph, DisjointMode, OutForest};

fn digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_n, 0.1f64..0.7, any::<u64>()).prop_map(|(n, p, seed)| generate::random_digraph(&mut rng(seed), n, p))
}

/// A digraph together with a terminal set of size 2 or 3 (capped by n).
fn with_terminals(max_n: usize) -> impl Strategy<Value = (Digraph, Vec<usize>)> {
    (2..=max_n, 0.2f64..0.7, any::<u64>()).prop_map(|(n, p, seed)| {
        let mut r = rng(seed);
        let d = generate::random_digraph(&mut r, n, p);
        let k = if n >= 3 && seed % 2 == 0 { 3 } else { 2 };
        let mut verts: Vec<usize> = (0..n).collect();
        verts.shuffle(&mut r);
        verts.truncate(k);
        verts.sort();
        (d, verts)
    })
}

fn brute_k_cyclic(d: &Digraph, k: usize) -> bool {
    let n = d.vertex_count();
    let mut s: Vec<usize> = (0..k).collect();
    loop {
        if common::brute_s_cycles(d, &s).is_empty() {
            return false;
        }
        // Next k-subset in lexicographic order.
        let mut i = k;
        while i > 0 && s[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return true;
        }
        s[i - 1] += 1;
        for j in i..k {
            s[j] = s[j - 1] + 1;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn exact_forest_search_matches_subset_enumeration(d in digraph(6), i in 0usize..2) {
        prop_assume!(d.arc_count() <= 14);
        let found = max_i_perfect(&d, i, Budget::unlimited()).unwrap();
        let brute = common::brute_max_i_perfect(&d, i);
        prop_assert_eq!(found.as_ref().map(OutForest::arc_count), brute);
        if let Some(f) = found {
            let rep = verify_out_forest(&d, &f).unwrap();
            prop_assert!(rep.is_i_perfect(i));
        }
    }

    #[test]
    fn even_degree_count_has_the_parity_of_n(d in digraph(7), i in 0usize..2) {
        // Odd-degree vertices of a forest come in pairs.
        if (d.vertex_count() + i) % 2 == 1 {
            prop_assert!(max_i_perfect(&d, i, Budget::unlimited()).unwrap().is_none());
        }
    }

    #[test]
    fn enumeration_matches_plain_dfs((d, s) in with_terminals(6)) {
        let lib = enumerate_s_cycles(&d, &s, DEFAULT_CAP).unwrap();
        prop_assert!(!lib.truncated);
        let mut mine: Vec<Vec<usize>> = lib.cycles.iter().map(|c| c.vertices().to_vec()).collect();
        mine.sort();
        prop_assert_eq!(mine, common::brute_s_cycles(&d, &s));
        prop_assert!(lib.cycles.iter().all(|c| c.is_cycle_of(&d)));
    }

    #[test]
    fn packing_matches_brute_force((d, s) in with_terminals(5)) {
        for (mode, internal) in [(DisjointMode::Internal, true), (DisjointMode::Arc, false)] {
            let c = pack_cycles(&d, &s, mode, None, DEFAULT_CAP, Budget::unlimited()).unwrap();
            prop_assert_eq!(c.status, PackStatus::Complete);
            prop_assert_eq!(c.value, common::brute_pack(&d, &s, internal));
            prop_assert_eq!(c.cycles.len(), c.value);
            prop_assert!(check_disjointness(&c.cycles, &s, mode).unwrap());
            prop_assert!(c.cycles.iter().all(|x| x.is_cycle_of(&d) && s.iter().all(|&t| x.contains(t))));
        }
    }

    #[test]
    fn target_queries_agree_with_the_optimum((d, s) in with_terminals(6), target in 0usize..4) {
        let full = pack_cycles(&d, &s, DisjointMode::Arc, None, DEFAULT_CAP, Budget::unlimited()).unwrap();
        let t = pack_cycles(&d, &s, DisjointMode::Arc, Some(target), DEFAULT_CAP, Budget::unlimited()).unwrap();
        prop_assert_eq!(t.meets_target(), Some(full.value >= target));
    }

    #[test]
    fn lambda_is_monotone_under_arc_addition((d, s) in with_terminals(6), u in 0usize..6, v in 0usize..6) {
        let n = d.vertex_count();
        let (u, v) = (u % n, v % n);
        prop_assume!(u != v && !d.has_arc(u, v));
        let before = pack_cycles(&d, &s, DisjointMode::Arc, None, DEFAULT_CAP, Budget::unlimited()).unwrap().value;
        let mut bigger = d.clone();
        bigger.add_arc(u, v).unwrap();
        let after = pack_cycles(&bigger, &s, DisjointMode::Arc, None, DEFAULT_CAP, Budget::unlimited()).unwrap().value;
        prop_assert!(after >= before);
    }

    #[test]
    fn k_cyclic_matches_subset_sweep(d in digraph(6), k in 2usize..4) {
        prop_assume!(k <= d.vertex_count());
        prop_assert_eq!(is_k_cyclic(&d, k, Budget::unlimited()).unwrap(), brute_k_cyclic(&d, k));
    }

    #[test]
    fn class_invariants(d in digraph(8)) {
        let c = d.classify();
        prop_assert!(!c.strong || c.connected);
        prop_assert!(!c.tournament || c.semicomplete);
        prop_assert!(!c.eulerian || c.connected);
        prop_assert_eq!(d.reverse().classify(), c);
        prop_assert_eq!(d.symmetric_closure().underlying_graph(), d.underlying_graph());
        prop_assert_eq!(Digraph::parse(&d.serialize()).unwrap(), d);
    }

    #[test]
    fn disjoint_paths_are_valid(d in digraph(7), seed in any::<u64>()) {
        let n = d.vertex_count();
        prop_assume!(n >= 4);
        let mut verts: Vec<usize> = (0..n).collect();
        verts.shuffle(&mut rng(seed));
        let q = PathQuery {
            pairs: vec![(verts[0], verts[1]), (verts[2], verts[3])],
            forbidden: Default::default(),
        };
        if let Some(paths) = disjoint_paths(&d, &q, Budget::unlimited()).unwrap() {
            let ends: Vec<usize> = verts[..4].to_vec();
            let mut seen = std::collections::BTreeSet::new();
            for (p, &(s, t)) in paths.iter().zip(&q.pairs) {
                prop_assert_eq!((p[0], *p.last().unwrap()), (s, t));
                prop_assert!(p.windows(2).all(|w| d.has_arc(w[0], w[1])));
                for &x in &p[1..p.len() - 1] {
                    prop_assert!(!ends.contains(&x) && seen.insert(x));
                }
            }
        }
    }

    #[test]
    fn linkage_gadget_shape(seed in any::<u64>(), n in 4usize..=6, k in 2usize..=4, l in 1usize..=3) {
        let mut r = rng(seed);
        let h = generate::random_eulerian(&mut r, n);
        let mut verts: Vec<usize> = (0..n).collect();
        verts.shuffle(&mut r);
        let link = LinkageInstance::new(h, [verts[0], verts[1], verts[2], verts[3]]).unwrap();
        let g = build_linkage_kappa_gadget(&link, k, l).unwrap();
        prop_assert!(g.digraph.is_eulerian());
        let terms = g.terminal_set.clone().unwrap();
        prop_assert_eq!(terms.len(), k);
        for &x in &terms {
            prop_assert_eq!(g.digraph.out_degree(x), l);
        }
        let sp = split_vertices(&g).unwrap();
        let h_arcs = link.digraph.arc_count();
        prop_assert_eq!(sp.digraph.vertex_count(), g.digraph.vertex_count() + n);
        prop_assert_eq!(sp.digraph.arc_count(), g.digraph.arc_count() + n);
        prop_assert!(sp.digraph.arc_count() > h_arcs);
    }
}
