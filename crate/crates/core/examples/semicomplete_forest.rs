// Perfect out-forests in tournaments and semicomplete digraphs: the
// matching-based fast path against the exact search.

use steinerforge::generate::{random_semicomplete, random_tournament, rng};
use steinerforge::outforest::{max_i_perfect, semicomplete_i_perfect, verify_out_forest};
use steinerforge::Budget;

pub fn run_example() -> steinerforge::Result<()> {
    let mut r = rng(1);
    for n in 3..=6 {
        let t = random_tournament(&mut r, n);
        // A tournament has a 0-perfect forest exactly when n is even.
        let i = n % 2;
        let f = semicomplete_i_perfect(&t, i)?.expect("tournaments always have one for this i");
        let report = verify_out_forest(&t, &f)?;
        assert!(report.is_i_perfect(i));
        println!("tournament n={n}: {i}-perfect forest with {} trees", f.tree_count());
        assert!(semicomplete_i_perfect(&t, 1 - i)?.is_none());
    }

    let d = random_semicomplete(&mut r, 7, 0.4);
    for i in 0..2 {
        let fast = semicomplete_i_perfect(&d, i)?;
        let exact = max_i_perfect(&d, i, Budget::unlimited())?;
        assert_eq!(fast.is_some(), exact.is_some());
        println!("semicomplete n=7, i={i}: {}", if fast.is_some() { "present" } else { "absent" });
    }
    Ok(())
}

fn main() -> steinerforge::Result<()> {
    run_example()
}
