//! Multigraded Betti tables of cover ideals, with the graded view and
//! per-degree queries over both coefficient fields.
//!
//! Run with `cargo run --example betti_table`.

use bettisplit::{
    betti_multidegree, betti_table, cover_ideal, FieldSpec, Multidegree, Result, SimpleGraph,
};

fn main() -> Result<()> {
    let g = SimpleGraph::new(5, [(1, 4), (2, 4), (2, 5), (3, 5)])?;
    let j = cover_ideal(&g);
    println!("J(G) = {j}");

    let table = betti_table(&j, FieldSpec::Rationals)?;
    println!("\nmultigraded table (i, multidegree, value):");
    print!("{table}");

    println!("\ngraded view (i, j, value):");
    for (i, total) in table.graded_positions() {
        println!("{i}  {total}  {}", table.graded(i, total));
    }

    // single positions, including a zero one
    let top = Multidegree::new(vec![1, 1, 1, 1, 1]);
    for i in 0..=3 {
        println!("betti({i}, 11111) = {}", betti_multidegree(&j, i, &top, FieldSpec::Rationals));
    }

    // a prime field computes the same numbers here
    let gf = betti_table(&j, FieldSpec::prime(32003)?)?;
    println!("\nsame table over GF(32003)? {}", gf == table);
    Ok(())
}
