// The NAE-3-SAT gadget: satisfying assignments turn into perfect
// out-forests with |V| - 2 arcs, and unsatisfiable formulas have none.

use steinerforge::outforest::{decide_i_perfect_min_arcs, verify_out_forest};
use steinerforge::reductions::{build_nae_gadget, forest_from_assignment, oracle_nae3sat, CnfInstance};
use steinerforge::Budget;

pub fn run_example() -> steinerforge::Result<()> {
    let sat = CnfInstance::parse_dimacs("p cnf 3 1\n1 -2 3 0\n")?;
    let g = build_nae_gadget(&sat)?;
    let threshold = g.threshold.expect("nae gadgets carry a threshold");
    println!("gadget: {} vertices, {} arcs, threshold {threshold}", g.digraph.vertex_count(), g.digraph.arc_count());

    let assignment = oracle_nae3sat(&sat, Budget::unlimited())?.expect("satisfiable");
    let f = forest_from_assignment(&sat, &assignment, &g)?;
    let report = verify_out_forest(&g.digraph, &f)?;
    assert!(report.is_i_perfect(0) && report.arc_count == threshold);
    println!("assignment {assignment:?} -> roots {:?}", f.roots());

    let unsat = CnfInstance::parse_dimacs("p cnf 3 4\n1 2 3 0\n1 2 -3 0\n1 -2 3 0\n-1 2 3 0\n")?;
    assert!(oracle_nae3sat(&unsat, Budget::unlimited())?.is_none());
    let g = build_nae_gadget(&unsat)?;
    let found = decide_i_perfect_min_arcs(&g.digraph, 0, g.threshold.unwrap(), Budget::from_secs(60))?;
    assert!(found.is_none());
    println!("unsatisfiable formula: no forest with {} arcs", g.threshold.unwrap());
    Ok(())
}

fn main() -> steinerforge::Result<()> {
    run_example()
}
