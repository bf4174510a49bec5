// Wrapping a 2-linkage instance in the Eulerian S-cycle gadget, then
// splitting host vertices to move from kappa to lambda.

use steinerforge::reductions::{build_linkage_kappa_gadget, oracle_2linkage, split_vertices, LinkageInstance};
use steinerforge::steiner::{pack_cycles, DEFAULT_CAP};
use steinerforge::{Budget, Digraph, DisjointMode};

pub fn run_example() -> steinerforge::Result<()> {
    let c4 = Digraph::symmetric_from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])?;
    for terminals in [[0, 1, 2, 3], [0, 2, 1, 3]] {
        let link = LinkageInstance::new(c4.clone(), terminals)?;
        let linked = oracle_2linkage(&link, Budget::unlimited())?.is_some();

        let g = build_linkage_kappa_gadget(&link, 2, 2)?;
        let x = g.terminal_set.clone().unwrap();
        let kappa = pack_cycles(&g.digraph, &x, DisjointMode::Internal, Some(2), DEFAULT_CAP, Budget::unlimited())?;

        let split = split_vertices(&g)?;
        let sx = split.terminal_set.clone().unwrap();
        let lambda = pack_cycles(&split.digraph, &sx, DisjointMode::Arc, Some(2), DEFAULT_CAP, Budget::unlimited())?;

        assert_eq!(kappa.meets_target(), Some(linked));
        assert_eq!(lambda.meets_target(), Some(linked));
        println!(
            "terminals {terminals:?}: linked={linked}, gadget {} vertices, split {} vertices",
            g.digraph.vertex_count(),
            split.digraph.vertex_count()
        );
    }
    Ok(())
}

fn main() -> steinerforge::Result<()> {
    run_example()
}
