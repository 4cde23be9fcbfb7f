//! Variable partitions of cover ideals and the Betti-splitting predicate,
//! on a graph where every partition splits and on one where it fails.
//!
//! Run with `cargo run --example splitting`.

use bettisplit::{
    cover_ideal, is_betti_splitting, variable_partition, FieldSpec, Result, SimpleGraph,
};

fn main() -> Result<()> {
    let g = SimpleGraph::new(5, [(1, 4), (2, 4), (2, 5), (3, 5)])?;
    let j = cover_ideal(&g);
    println!("bipartite graph {g}");
    println!("J(G) = {j}");
    for v in 1..=g.n() {
        let p = variable_partition(&j, v)?;
        let verdict = is_betti_splitting(&p, FieldSpec::Rationals)?;
        println!(
            "  x{v}-partition: K = {}, L = {} -> {}",
            p.left(),
            p.right(),
            if verdict.pass { "Betti splitting" } else { "NOT a splitting" },
        );
    }

    // vertex 3 of this graph has neighbourhood {4,5}, which contains the
    // edge 4-5; its partition fails
    let bad = SimpleGraph::new(5, [(1, 5), (2, 4), (3, 4), (3, 5), (4, 5)])?;
    let jb = cover_ideal(&bad);
    println!("\nnon-bipartite graph {bad}");
    println!("J(G) = {jb}");
    let p = variable_partition(&jb, 3)?;
    let verdict = is_betti_splitting(&p, FieldSpec::Rationals)?;
    println!("  x3-partition: K = {}, L = {}", p.left(), p.right());
    match verdict.witness {
        Some(w) => println!("  {w}"),
        None => println!("  unexpectedly split"),
    }
    Ok(())
}
