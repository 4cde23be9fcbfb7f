//! Graphs, neighbourhoods, bipartitions, and minimal vertex covers.
//!
//! Run with `cargo run --example minimal_covers`.

use bettisplit::{Result, SimpleGraph, VertexSet};

fn main() -> Result<()> {
    // bipartite graph on 5 vertices with sides {1,2,3} and {4,5}
    let g = SimpleGraph::new(5, [(1, 4), (2, 4), (2, 5), (3, 5)])?;
    println!("graph: {g}");

    for v in 1..=g.n() {
        println!("N({v}) = {}", g.neighbourhood(v)?);
    }

    match g.bipartition() {
        Some((left, right)) => println!("bipartition: {left} | {right}"),
        None => println!("not bipartite"),
    }

    println!("minimal vertex covers:");
    for cover in g.minimal_vertex_covers() {
        println!("  {cover}");
    }

    let independent = VertexSet::from_vertices(&[4, 5]);
    println!("{independent} independent? {}", g.is_independent(independent));

    let deleted = g.delete_vertices(VertexSet::singleton(4));
    println!("after deleting vertex 4: {deleted} (ambient stays {})", deleted.n());
    Ok(())
}
