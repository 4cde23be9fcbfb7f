//! Every ideal the crate attaches to a graph: cover ideal, edge ideal,
//! upper/lower/restricted cover ideals, and the neighbourhood ideal of one
//! side of a bipartite graph.
//!
//! Run with `cargo run --example cover_ideals`.

use bettisplit::{
    associated_ideal, bipartite_from_ideal, cover_ideal, edge_ideal, lower_cover_ideal,
    restricted_cover_ideal, total_upper_cover_ideal, upper_cover_ideal, BipartiteContext,
    Result, Side, SimpleGraph, VertexSet,
};

fn main() -> Result<()> {
    let g = SimpleGraph::new(5, [(1, 4), (2, 4), (2, 5), (3, 5)])?;
    println!("graph: {g}");
    println!("cover ideal J(G)      = {}", cover_ideal(&g));
    println!("edge ideal I(G)       = {}", edge_ideal(&g));

    let v4 = VertexSet::singleton(4);
    println!("covers through 4      = {}", upper_cover_ideal(&g, v4));
    println!("covers missing 4      = {}", lower_cover_ideal(&g, v4)?);
    println!("all covers over {{4}}   = {}", total_upper_cover_ideal(&g, v4));
    println!("covers avoiding 4     = {}", restricted_cover_ideal(&g, v4));

    let ctx = BipartiteContext::from_graph(g)?;
    let m = associated_ideal(&ctx, Side::Right)?;
    println!("neighbourhood ideal M = {m} (side {})", ctx.side(Side::Right));

    // the inverse construction: a bipartite graph whose neighbourhood
    // ideal is any given squarefree ideal
    let compact = m.restrict_ambient(3)?;
    let rebuilt = bipartite_from_ideal(&compact)?;
    println!("incidence graph of M  : {}", rebuilt.graph());
    Ok(())
}
