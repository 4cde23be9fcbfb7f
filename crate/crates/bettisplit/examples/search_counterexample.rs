//! Exhaustive search for the smallest graph and vertex whose variable
//! partition fails to be a Betti splitting. Only vertices with a
//! non-independent neighbourhood are candidates; the splitting theorem
//! covers the rest.
//!
//! Run with `cargo run --release --example search_counterexample`.

use bettisplit::{counterexample_search, FieldSpec, Result};

fn main() -> Result<()> {
    for max_n in 3..=6 {
        match counterexample_search(max_n, FieldSpec::Rationals)? {
            Some(found) => {
                println!("max_n = {max_n}: found {found}");
                let nv = found.graph.neighbourhood(found.vertex)?;
                println!(
                    "  N({}) = {nv}, independent? {}",
                    found.vertex,
                    found.graph.is_independent(nv)
                );
                break;
            }
            None => println!("max_n = {max_n}: every candidate partition splits"),
        }
    }
    Ok(())
}
