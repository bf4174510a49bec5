// Parse a digraph from the text format and report its structural classes.

use steinerforge::Digraph;

pub fn run_example() -> steinerforge::Result<()> {
    let triangle = Digraph::parse("n 3\na 0 1\na 1 2\na 2 0\n")?;
    let c = triangle.classify();
    println!("{c}");
    assert!(c.tournament && c.strong && c.eulerian && !c.symmetric);

    // Reversing arcs keeps every class; the symmetric closure is symmetric.
    assert_eq!(triangle.reverse().classify(), c);
    assert!(triangle.symmetric_closure().is_symmetric());
    Ok(())
}

fn main() -> steinerforge::Result<()> {
    run_example()
}
