// Deciding kappa >= l on symmetric digraphs via skeletons and arc
// partitions, checked against the exhaustive packer.

use steinerforge::generate::{random_connected_symmetric, rng};
use steinerforge::steiner::{pack_cycles, DEFAULT_CAP};
use steinerforge::symmetric::{enumerate_skeletons, symmetric_kappa, symmetric_kappa_at_least};
use steinerforge::{Budget, DisjointMode};

pub fn run_example() -> steinerforge::Result<()> {
    for k in 2..=5 {
        let s: Vec<usize> = (0..k).collect();
        println!("k={k}: {} skeletons", enumerate_skeletons(&s)?.len());
    }

    let mut r = rng(4);
    let d = random_connected_symmetric(&mut r, 7, 0.5);
    let s = [0, 3, 5];
    let exact = pack_cycles(&d, &s, DisjointMode::Internal, None, DEFAULT_CAP, Budget::unlimited())?;
    let fast = symmetric_kappa(&d, &s, Budget::unlimited())?;
    assert_eq!(fast.value, exact.value);
    println!("random symmetric n=7, S={s:?}: kappa={}", fast.value);
    let over = symmetric_kappa_at_least(&d, &s, fast.value + 1, Budget::unlimited())?;
    assert!(over.is_none());
    Ok(())
}

fn main() -> steinerforge::Result<()> {
    run_example()
}
