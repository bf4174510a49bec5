// Exact S-cycle packing. The values below are the ones the brute-force
// oracle in the test suite establishes for these two digraphs.

use steinerforge::steiner::{check_disjointness, pack_cycles, DEFAULT_CAP};
use steinerforge::{Budget, Digraph, DisjointMode};

pub fn run_example() -> steinerforge::Result<()> {
    let k4 = Digraph::symmetric_from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])?;
    let c5 = Digraph::symmetric_from_edges(5, (0..5).map(|i| (i, (i + 1) % 5)))?;
    for (name, d, s, kappa, lambda) in [("K4", &k4, [0, 1], 2, 3), ("C5", &c5, [0, 2], 1, 2)] {
        let k = pack_cycles(d, &s, DisjointMode::Internal, None, DEFAULT_CAP, Budget::unlimited())?;
        let l = pack_cycles(d, &s, DisjointMode::Arc, None, DEFAULT_CAP, Budget::unlimited())?;
        assert_eq!((k.value, l.value), (kappa, lambda));
        assert!(check_disjointness(&l.cycles, &s, DisjointMode::Arc)?);
        println!("{name}, S={s:?}: kappa={} lambda={}", k.value, l.value);
        print!("{}", l.to_text());
    }

    // Decision form stops at the first family of the requested size.
    let c = pack_cycles(&k4, &[0, 1], DisjointMode::Arc, Some(2), DEFAULT_CAP, Budget::unlimited())?;
    assert_eq!(c.meets_target(), Some(true));
    Ok(())
}

fn main() -> steinerforge::Result<()> {
    run_example()
}
