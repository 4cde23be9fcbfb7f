//! Two independent Betti computations checked against each other: the
//! per-multidegree simplicial route and the Taylor-complex strands.
//!
//! Run with `cargo run --example taylor_cross_check`.

use bettisplit::{
    betti_table, minimalize, taylor_betti, taylor_table, FieldSpec, Monomial, Multidegree,
    Result,
};

fn main() -> Result<()> {
    // a squarefree ideal with a non-split syzygy pattern
    let n = 5;
    let ideal = minimalize(
        n,
        vec![
            Monomial::from_vars(n, &[1, 2])?,
            Monomial::from_vars(n, &[2, 3])?,
            Monomial::from_vars(n, &[3, 4])?,
            Monomial::from_vars(n, &[4, 5])?,
            Monomial::from_vars(n, &[1, 5])?,
        ],
    )?;
    println!("ideal = {ideal}");

    for field in [FieldSpec::Rationals, FieldSpec::prime(32003)?] {
        let primary = betti_table(&ideal, field)?;
        let oracle = taylor_table(&ideal, field)?;
        println!("\nfield {field}: tables agree? {}", primary == oracle);
        print!("{primary}");
    }

    // the oracle also answers single positions, including general exponents
    let fat = Multidegree::new(vec![2, 1, 1, 0, 0]);
    println!(
        "\nbetti(1, 21100) by oracle = {}",
        taylor_betti(&ideal, 1, &fat, FieldSpec::Rationals)?
    );
    Ok(())
}
