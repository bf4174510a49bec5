//! The NAE-3-SAT gadget for two-tree perfect out-forests, its lift to more
//! trees, and the 1-perfect variants.

use std::collections::HashMap;

use super::cnf::CnfInstance;
use super::GadgetOutput;
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::outforest::{verify_out_forest, OutForest};

/// Vertex roles of one variable gadget, in block order.
const ROLES: [&str; 6] = ["x", "z", "y", "x", "z", "y"];
const SIDES: [usize; 6] = [1, 1, 1, 2, 2, 2];

/// The 13 arcs of a variable gadget over block offsets
/// `x1 z1 y1 x2 z2 y2 = 0..6`.
const GADGET_ARCS: [(usize, usize); 13] =
    [(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)];

fn role_label(slot: usize, var: usize) -> String {
    format!("{}^{}_{}", ROLES[slot], var + 1, SIDES[slot])
}

/// Connected acyclic digraph that has a perfect out-forest with
/// `|V| - 2` arcs exactly when the instance is NAE-satisfiable.
pub fn build_nae_gadget(instance: &CnfInstance) -> Result<GadgetOutput> {
    let n = instance.variable_count();
    let mut d = Digraph::new(0);
    // blocks[i][slot] = vertex of role `slot` in gadget i
    let mut blocks: Vec<[usize; 6]> = Vec::with_capacity(n);
    for i in 0..n {
        let mut block = [0usize; 6];
        for (slot, v) in block.iter_mut().enumerate() {
            *v = d.add_labeled_vertex(role_label(slot, i));
        }
        for &(a, b) in &GADGET_ARCS {
            d.add_arc(block[a], block[b])?;
        }
        if let Some(prev) = blocks.last() {
            for &y in &[prev[2], prev[5]] {
                for &x in &[block[0], block[3]] {
                    d.add_arc(y, x)?;
                }
            }
        }
        for (slot, &u) in block.iter().enumerate() {
            let exempt = (i == 0 && (slot == 0 || slot == 3)) || (i + 1 == n && (slot == 2 || slot == 5));
            if !exempt {
                let p = d.add_labeled_vertex(format!("{}'", role_label(slot, i)));
                d.add_arc(u, p)?;
            }
        }
        blocks.push(block);
    }
    for (j, clause) in instance.clauses().iter().enumerate() {
        let c = d.add_labeled_vertex(format!("c_{}", j + 1));
        let c2 = d.add_labeled_vertex(format!("c'_{}", j + 1));
        for lit in clause {
            let y = if lit.positive { blocks[lit.var][5] } else { blocks[lit.var][2] };
            d.add_arc(y, c)?;
            d.add_arc(y, c2)?;
        }
    }
    if !d.is_connected() || !d.is_acyclic() {
        return Err(Error::Invariant("NAE gadget must be connected and acyclic".into()));
    }
    let threshold = d.vertex_count() - 2;
    Ok(GadgetOutput {
        provenance: format!(
            "NAE-3-SAT gadget: {} variable(s), {} clause(s); perfect out-forest with >= {threshold} arcs iff NAE-satisfiable",
            n,
            instance.clauses().len()
        ),
        digraph: d,
        terminal_set: None,
        threshold: Some(threshold),
    })
}

/// Appends `x`, `y` with arcs `x -> y -> u`: one more tree, one more vertex
/// of slack in the arc bound.
pub fn lift_forest_gadget(d: &Digraph, u: usize) -> Result<Digraph> {
    d.check_vertex(u)?;
    if !d.is_connected() || !d.is_acyclic() {
        return Err(Error::WrongClass("connected and acyclic"));
    }
    let mut out = d.clone();
    let x = out.add_vertex();
    let y = out.add_vertex();
    out.add_arc(x, y)?;
    out.add_arc(y, u)?;
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OnePerfectMode {
    /// New vertex `x` with the single arc `x -> target`.
    AddSource(usize),
    /// New vertex `v` with arcs `target -> v` and `v -> target`.
    AddTwoCyclePendant(usize),
}

pub fn to_one_perfect_gadget(d: &Digraph, mode: OnePerfectMode) -> Result<Digraph> {
    let mut out = d.clone();
    match mode {
        OnePerfectMode::AddSource(t) => {
            d.check_vertex(t)?;
            let x = out.add_vertex();
            out.add_arc(x, t)?;
        }
        OnePerfectMode::AddTwoCyclePendant(t) => {
            d.check_vertex(t)?;
            let v = out.add_vertex();
            out.add_arc(t, v)?;
            out.add_arc(v, t)?;
        }
    }
    Ok(out)
}

/// The two-tree perfect out-forest read off an NAE-satisfying assignment:
/// the gadget half named by each variable's value goes to the first tree,
/// pendants follow their neighbour, and each clause vertex joins the tree
/// that sends it exactly one arc.
pub fn forest_from_assignment(instance: &CnfInstance, assignment: &[bool], g: &GadgetOutput) -> Result<OutForest> {
    if !instance.is_nae_satisfied_by(assignment) {
        return Err(Error::NotNaeSatisfying);
    }
    let d = &g.digraph;
    let by_label: HashMap<&str, usize> = d.labels().iter().map(|(&v, l)| (l.as_str(), v)).collect();
    let find = |label: String| by_label.get(label.as_str()).copied().ok_or(Error::MissingLabels(label));
    let n = d.vertex_count();
    let mut side: Vec<Option<usize>> = vec![None; n];
    for (i, &value) in assignment.iter().enumerate() {
        for slot in 0..6 {
            let v = find(role_label(slot, i))?;
            let first_half = slot < 3;
            side[v] = Some(usize::from(first_half != value));
            if let Some(&p) = by_label.get(format!("{}'", role_label(slot, i)).as_str()) {
                side[p] = side[v];
            }
        }
    }
    for j in 0..instance.clauses().len() {
        let mut chosen = [0usize; 2];
        for (k, label) in [format!("c_{}", j + 1), format!("c'_{}", j + 1)].into_iter().enumerate() {
            let c = find(label.clone())?;
            let mut from = [0usize; 2];
            for &p in d.in_neighbors(c) {
                let s = side[p].ok_or_else(|| Error::Invariant(format!("{label} has an unplaced in-neighbour")))?;
                from[s] += 1;
            }
            let t = match from {
                [1, _] => 0,
                [_, 1] => 1,
                _ => return Err(Error::Invariant(format!("{label} receives arcs {from:?} from the two trees"))),
            };
            side[c] = Some(t);
            chosen[k] = t;
        }
        if chosen[0] != chosen[1] {
            return Err(Error::Invariant(format!("c_{0} and c'_{0} would join different trees", j + 1)));
        }
    }
    if let Some(v) = side.iter().position(Option::is_none) {
        return Err(Error::MissingLabels(format!("vertex {v} has no gadget role")));
    }
    let arcs = d.arcs().filter(|&(u, v)| side[u] == side[v]);
    let forest = OutForest::from_arcs(n, arcs);
    let report = verify_out_forest(d, &forest)?;
    if !report.is_i_perfect(0) || report.arc_count + 2 != n {
        return Err(Error::Invariant(format!("constructed forest fails verification:\n{report}")));
    }
    Ok(forest)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budget;
    use crate::outforest::{decide_i_perfect_min_arcs, max_i_perfect};
    use crate::reductions::cnf::Literal;

    fn figure_instance() -> CnfInstance {
        CnfInstance::new(3, vec![[Literal::pos(0), Literal::neg(1), Literal::pos(2)]]).unwrap()
    }

    #[test]
    fn gadget_counts() {
        let g = build_nae_gadget(&figure_instance()).unwrap();
        assert_eq!(g.digraph.vertex_count(), 34);
        assert_eq!(g.threshold, Some(32));
        // 3 * 13 gadget arcs, 2 * 4 chaining arcs, 14 pendants, 6 clause arcs.
        assert_eq!(g.digraph.arc_count(), 39 + 8 + 14 + 6);
        let c = g.digraph.classify();
        assert!(c.connected && c.acyclic);
        let v = |l: &str| g.vertex(l).unwrap();
        assert!(g.digraph.has_arc(v("y^2_1"), v("c_1")));
        assert!(g.digraph.has_arc(v("y^1_2"), v("c'_1")));
        assert!(g.digraph.has_arc(v("x^2_1"), v("x^2_1'")));
        assert!(g.vertex("x^1_1'").is_none());
        assert!(g.vertex("y^3_2'").is_none());
        // Construction order: block, its pendants, next block.
        assert_eq!(v("x^1_1"), 0);
        assert_eq!(v("y^1_2"), 5);
        assert_eq!(v("z^1_1'"), 6);
        assert_eq!(v("x^2_1"), 10);
        assert_eq!(v("c'_1"), 33);
    }

    #[test]
    fn forest_from_figure_assignment() {
        let i = figure_instance();
        let g = build_nae_gadget(&i).unwrap();
        let f = forest_from_assignment(&i, &[true, true, false], &g).unwrap();
        assert_eq!(f.arc_count(), 32);
        let mut roots = f.roots();
        roots.sort_unstable();
        assert_eq!(roots, vec![g.vertex("x^1_1").unwrap(), g.vertex("x^1_2").unwrap()]);
    }

    #[test]
    fn complement_swaps_halves() {
        let i = figure_instance();
        let g = build_nae_gadget(&i).unwrap();
        let n = g.digraph.vertex_count();
        let a = forest_from_assignment(&i, &[true, true, false], &g).unwrap().tree_of(n);
        let b = forest_from_assignment(&i, &[false, false, true], &g).unwrap().tree_of(n);
        // Every vertex changes side, so the vertex partition is the same and
        // only the roles of the two trees are exchanged.
        let x = g.vertex("x^1_1").unwrap();
        for v in 0..n {
            assert_eq!(a[v] == a[x], b[v] == b[x]);
        }
    }

    #[test]
    fn forest_rejects_bad_assignment() {
        let i = figure_instance();
        let g = build_nae_gadget(&i).unwrap();
        // v1 = T, v2 = F, v3 = T makes every literal true.
        assert_eq!(forest_from_assignment(&i, &[true, false, true], &g), Err(Error::NotNaeSatisfying));
    }

    #[test]
    fn lift_examples() {
        let d = Digraph::from_arcs(2, [(0, 1)]).unwrap();
        let l = lift_forest_gadget(&d, 0).unwrap();
        assert_eq!(l.arcs().collect::<Vec<_>>(), vec![(0, 1), (2, 3), (3, 0)]);
        assert!(l.is_acyclic() && l.is_connected());
        let b = Budget::unlimited();
        assert_eq!(max_i_perfect(&d, 0, b).unwrap().unwrap().arc_count(), 1);
        assert_eq!(max_i_perfect(&l, 0, b).unwrap().unwrap().arc_count(), 2);
        let ll = lift_forest_gadget(&l, 1).unwrap();
        assert_eq!(max_i_perfect(&ll, 0, b).unwrap().unwrap().arc_count(), 3);
        assert!(lift_forest_gadget(&d, 2).is_err());
    }

    #[test]
    fn one_perfect_examples() {
        let b = Budget::unlimited();
        let d = Digraph::from_arcs(2, [(0, 1)]).unwrap();
        let g = to_one_perfect_gadget(&d, OnePerfectMode::AddTwoCyclePendant(0)).unwrap();
        assert_eq!(g.vertex_count(), 3);
        let f = max_i_perfect(&g, 1, b).unwrap().unwrap();
        assert_eq!(f.arc_count(), 1);
        assert!(f.arcs.contains(&(0, 1)));

        let c2 = Digraph::from_arcs(2, [(0, 1), (1, 0)]).unwrap();
        assert!(max_i_perfect(&c2, 0, b).unwrap().is_none());
        let g = to_one_perfect_gadget(&c2, OnePerfectMode::AddTwoCyclePendant(0)).unwrap();
        assert!(max_i_perfect(&g, 1, b).unwrap().is_none());

        let src = to_one_perfect_gadget(&d, OnePerfectMode::AddSource(0)).unwrap();
        assert_eq!(src.arcs().collect::<Vec<_>>(), vec![(0, 1), (2, 0)]);
        assert!(to_one_perfect_gadget(&d, OnePerfectMode::AddSource(5)).is_err());
    }

    #[test]
    fn add_source_on_figure_gadget() {
        let i = figure_instance();
        let g = build_nae_gadget(&i).unwrap();
        let x = g.vertex("x^1_1").unwrap();
        let d = to_one_perfect_gadget(&g.digraph, OnePerfectMode::AddSource(x)).unwrap();
        assert_eq!(d.vertex_count(), 35);
        let f = decide_i_perfect_min_arcs(&d, 1, 33, Budget::from_secs(120)).unwrap();
        assert!(f.is_some());
    }
}
