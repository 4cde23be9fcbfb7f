//! Helpers shared by the integration test suites: independent brute-force
//! oracles and seeded random generators.
#![allow(dead_code)] // each test target uses a different subset

use rand::Rng;

use bettisplit::{minimalize, Monomial, MonomialIdeal, SimpleGraph, VertexSet};

pub fn fixture_path(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

pub fn load_fixture_graph(name: &str) -> SimpleGraph {
    let text = std::fs::read_to_string(fixture_path(name)).expect("fixture exists");
    bettisplit::io::parse_graph(&text).expect("fixture parses")
}

pub fn load_fixture_ideal(name: &str) -> MonomialIdeal {
    let text = std::fs::read_to_string(fixture_path(name)).expect("fixture exists");
    bettisplit::io::parse_ideal(&text).expect("fixture parses")
}

/// All covers by direct edge checking, then inclusion-minimal ones by
/// pairwise comparison. Independent of the library's per-element
/// minimality test.
pub fn brute_force_minimal_covers(g: &SimpleGraph) -> Vec<VertexSet> {
    let covers: Vec<VertexSet> = (0..1u64 << g.n())
        .map(|m| VertexSet(m as u32))
        .filter(|s| {
            g.edges().iter().all(|&(u, v)| s.contains(u) || s.contains(v))
        })
        .collect();
    covers
        .iter()
        .copied()
        .filter(|c| !covers.iter().any(|d| d.0 != c.0 && d.is_subset_of(*c)))
        .collect()
}

/// All covers (not only minimal ones) by direct edge checking.
pub fn brute_force_covers(g: &SimpleGraph) -> Vec<VertexSet> {
    (0..1u64 << g.n())
        .map(|m| VertexSet(m as u32))
        .filter(|s| g.edges().iter().all(|&(u, v)| s.contains(u) || s.contains(v)))
        .collect()
}

pub fn random_graph(rng: &mut impl Rng, max_n: usize) -> SimpleGraph {
    let n = rng.random_range(1..=max_n);
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.random_bool(0.5) {
                edges.push((u, v));
            }
        }
    }
    SimpleGraph::new(n, edges).expect("generated edges are valid")
}

pub fn random_squarefree_ideal(
    rng: &mut impl Rng,
    max_n: usize,
    max_gens: usize,
) -> MonomialIdeal {
    let n = rng.random_range(1..=max_n);
    let count = rng.random_range(1..=max_gens);
    let gens = (0..count)
        .map(|_| Monomial::from_support_mask(n, rng.random_range(1..(1u32 << n))))
        .collect();
    minimalize(n, gens).expect("uniform ambient")
}

/// Nonempty random subset of the vertices of `g`.
pub fn random_nonempty_subset(rng: &mut impl Rng, g: &SimpleGraph) -> VertexSet {
    VertexSet(rng.random_range(1..(1u32 << g.n())))
}
