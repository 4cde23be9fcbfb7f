//! Run every claim verifier on the 5-vertex bipartite fixture and print
//! the reports.
//!
//! Run with `cargo run --example verify_claims`.

use bettisplit::verify::{
    verify_bipartite_all_vertices, verify_leaf_recursion, verify_lower_agreement,
    verify_lower_vanishing, verify_side_splitting, verify_splitting_at_vertex,
    verify_transfer_prefix,
};
use bettisplit::{BipartiteContext, FieldSpec, Result, Side, SimpleGraph, VertexSet};

fn main() -> Result<()> {
    let g = SimpleGraph::new(5, [(1, 4), (2, 4), (2, 5), (3, 5)])?;
    let field = FieldSpec::Rationals;
    let ctx = BipartiteContext::from_graph(g.clone())?;
    let right = VertexSet::from_vertices(&[4, 5]);

    let reports = vec![
        verify_splitting_at_vertex(&g, 4, field)?,
        verify_bipartite_all_vertices(&g, field)?,
        verify_lower_vanishing(&g, right, field)?,
        verify_lower_agreement(&g, right, field)?,
        verify_side_splitting(&ctx, Side::Right, field)?,
        verify_transfer_prefix(&g, 3, field)?,
        verify_leaf_recursion(&g, 1, field)?,
    ];
    for report in reports {
        println!(
            "{:8} {}  ({})",
            report.claim,
            if report.pass { "PASS" } else { "FAIL" },
            report.instance
        );
        for v in report.violations {
            println!("  {} expected {} got {}", v.position, v.expected, v.actual);
        }
    }
    Ok(())
}
