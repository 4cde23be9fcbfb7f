//! Ideals attached to a graph: the cover ideal, the edge ideal, the
//! upper/lower cover ideals of a vertex subset, restricted cover ideals, the
//! neighbourhood ideal of one side of a bipartite graph, and the inverse
//! construction of a bipartite graph from a squarefree ideal.
//!
//! Every ideal lives in the full `n`-variable ring of its graph, even after
//! vertex deletion; compacting variables is a display concern only. The
//! cover ideal of an edgeless graph is the unit ideal (the empty set covers
//! nothing vacuously).

use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, VertexSet};
use crate::monomial::{minimalize, Monomial, MonomialIdeal};

fn ideal_of_covers(g: &SimpleGraph, covers: impl IntoIterator<Item = VertexSet>) -> MonomialIdeal {
    let gens = covers
        .into_iter()
        .map(|c| Monomial::from_support_mask(g.n(), c.0))
        .collect();
    minimalize(g.n(), gens).expect("covers share the graph ambient")
}

/// The cover ideal: generated by `x^A` over the minimal vertex covers `A`.
pub fn cover_ideal(g: &SimpleGraph) -> MonomialIdeal {
    ideal_of_covers(g, g.minimal_vertex_covers())
}

/// The edge ideal: generated by `x_u * x_v` over the edges `{u, v}`.
pub fn edge_ideal(g: &SimpleGraph) -> MonomialIdeal {
    let gens = g
        .edges()
        .iter()
        .map(|&(u, v)| Monomial::from_vars(g.n(), &[u, v]).expect("edge endpoints in range"))
        .collect();
    minimalize(g.n(), gens).expect("edges share the graph ambient")
}

/// Ideal of the minimal vertex covers that contain every vertex of `set`.
pub fn upper_cover_ideal(g: &SimpleGraph, set: VertexSet) -> MonomialIdeal {
    ideal_of_covers(
        g,
        g.minimal_vertex_covers().into_iter().filter(|c| set.is_subset_of(*c)),
    )
}

/// Ideal of the minimal vertex covers that do *not* contain all of `set`.
///
/// `set` must be nonempty: every cover contains the empty set, so the empty
/// case would degenerate to the zero ideal by vacuity and is rejected.
pub fn lower_cover_ideal(g: &SimpleGraph, set: VertexSet) -> Result<MonomialIdeal> {
    if set.is_empty() {
        return Err(Error::EmptySubset { operation: "lower_cover_ideal" });
    }
    Ok(ideal_of_covers(
        g,
        g.minimal_vertex_covers().into_iter().filter(|c| !set.is_subset_of(*c)),
    ))
}

/// Ideal of *all* vertex covers containing `set`, equal to
/// `x^set * J(G \ set)` where the deletion keeps the ambient ring.
pub fn total_upper_cover_ideal(g: &SimpleGraph, set: VertexSet) -> MonomialIdeal {
    let deleted = g.delete_vertices(set);
    cover_ideal(&deleted)
        .scale(&Monomial::from_support_mask(g.n(), set.0))
        .expect("ambient preserved by deletion")
}

/// Ideal of the vertex covers disjoint from `avoid`.
///
/// Minimal covers suffice as generators: any cover avoiding `avoid`
/// contains a minimal cover, which also avoids `avoid`.
pub fn restricted_cover_ideal(g: &SimpleGraph, avoid: VertexSet) -> MonomialIdeal {
    ideal_of_covers(
        g,
        g.minimal_vertex_covers()
            .into_iter()
            .filter(|c| c.intersection(avoid).is_empty()),
    )
}

/// One side of a bipartition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A graph together with a bipartition; every edge crosses the partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteContext {
    graph: SimpleGraph,
    left: VertexSet,
    right: VertexSet,
}

impl BipartiteContext {
    /// Validates that `(left, right)` partitions the vertex set and that
    /// every edge crosses it.
    pub fn new(graph: SimpleGraph, left: VertexSet, right: VertexSet) -> Result<Self> {
        if left.intersection(right) != VertexSet::EMPTY
            || left.union(right) != graph.vertex_set()
        {
            return Err(Error::HypothesisViolation(format!(
                "{left} and {right} do not partition the vertex set of {graph}"
            )));
        }
        for &(u, v) in graph.edges() {
            if left.contains(u) == left.contains(v) {
                return Err(Error::HypothesisViolation(format!(
                    "edge {u}-{v} does not cross the partition ({left}, {right})"
                )));
            }
        }
        Ok(Self { graph, left, right })
    }

    /// Canonical bipartition found by 2-coloring; errors on odd cycles.
    pub fn from_graph(graph: SimpleGraph) -> Result<Self> {
        let (left, right) = graph
            .bipartition()
            .ok_or_else(|| Error::HypothesisViolation(format!("{graph} is not bipartite")))?;
        Ok(Self { graph, left, right })
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn side(&self, side: Side) -> VertexSet {
        match side {
            Side::Left => self.left,
            Side::Right => self.right,
        }
    }
}

/// The neighbourhood ideal of one side of a bipartite graph: generated by
/// `x^{N(u)}` over the vertices `u` of the chosen side, minimalized.
///
/// Errors when the chosen side is empty or has an isolated vertex (whose
/// empty neighbourhood would contribute the unit monomial and collapse the
/// ideal).
pub fn associated_ideal(ctx: &BipartiteContext, side: Side) -> Result<MonomialIdeal> {
    let generating = ctx.side(side);
    if generating.is_empty() {
        return Err(Error::EmptySubset { operation: "associated_ideal" });
    }
    let g = ctx.graph();
    let mut gens = Vec::new();
    for u in generating.iter() {
        let nu = g.neighbourhood(u)?;
        if nu.is_empty() {
            return Err(Error::HypothesisViolation(format!(
                "vertex {u} of the generating side is isolated"
            )));
        }
        gens.push(Monomial::from_support_mask(g.n(), nu.0));
    }
    minimalize(g.n(), gens)
}

/// Bipartite graph realizing a squarefree ideal as a neighbourhood ideal.
///
/// For `M = (x^{A_1}, .., x^{A_l})` over `m` variables, the graph has
/// vertices `{1..m+l}` and edges `{j, m+i}` for `j` in `A_i`; the
/// neighbourhood ideal of the right side `{m+1..m+l}` recovers `M` (up to
/// ambient extension).
pub fn bipartite_from_ideal(m_ideal: &MonomialIdeal) -> Result<BipartiteContext> {
    if !m_ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    if m_ideal.is_zero() {
        return Err(Error::DegenerateIdeal("the zero ideal has no incidence graph".into()));
    }
    if m_ideal.is_unit() {
        return Err(Error::DegenerateIdeal("the unit ideal has no incidence graph".into()));
    }
    let m = m_ideal.ambient();
    let l = m_ideal.num_generators();
    let n = m + l;
    let mut edges = Vec::new();
    for (i, gen) in m_ideal.generators().iter().enumerate() {
        for j in gen.degree().support() {
            edges.push((j, m + i + 1));
        }
    }
    let graph = SimpleGraph::new(n, edges)?;
    let left = VertexSet::full(m);
    let right = VertexSet::full(n).difference(left);
    BipartiteContext::new(graph, left, right)
}
