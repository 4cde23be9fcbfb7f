//! Reduced simplicial homology over exact fields, including the two
//! degenerate complexes that bound Betti computations: the void complex
//! (no faces) and the irrelevant complex (only the empty face).
//!
//! Run with `cargo run --example homology`.

use bettisplit::{FieldSpec, Result, SimplicialComplex};

fn show(name: &str, complex: &SimplicialComplex) {
    let dims = complex.reduced_homology_dims(FieldSpec::Rationals);
    let rendered: Vec<String> = dims.iter().map(|(d, v)| format!("H~_{d} = {v}")).collect();
    println!("{name}: {}", if rendered.is_empty() { "all zero (void)".into() } else { rendered.join(", ") });
}

fn main() -> Result<()> {
    show("void complex       ", &SimplicialComplex::void(3));
    show("irrelevant complex ", &SimplicialComplex::irrelevant(3));

    // hollow triangle: one 1-cycle
    let hollow = SimplicialComplex::from_facets(3, [0b011, 0b101, 0b110]);
    show("hollow triangle    ", &hollow);

    // filled triangle: contractible
    show("filled triangle    ", &SimplicialComplex::from_facets(3, [0b111]));

    // boundary of the 3-simplex: a 2-sphere
    let sphere = SimplicialComplex::new(4, (0u32..16).filter(|&f| f != 0b1111))?;
    show("2-sphere           ", &sphere);

    // the complex whose reduced H_1 carries the top Betti number of the
    // 5-vertex bipartite fixture: facets {1,2,3}, {4,5}, {3,4}, {1,5}
    let koszul = SimplicialComplex::from_facets(5, [0b00111, 0b11000, 0b01100, 0b10001]);
    show("fixture top strand ", &koszul);
    Ok(())
}
