//! Finite simple graphs on `{1,..,n}` with the cover, neighbourhood and
//! bipartition combinatorics the rest of the crate consumes.
//!
//! Vertex deletion keeps the ambient vertex count: deleted vertices become
//! isolated and edge-free, so every derived ideal lives in one ring.

use std::fmt;

use crate::error::{Error, Result};

/// Set of 1-indexed vertices as a bitmask (bit `i` = vertex `i + 1`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(pub u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_vertices(vertices: &[usize]) -> Self {
        VertexSet(vertices.iter().fold(0, |m, &v| m | (1 << (v - 1))))
    }

    pub fn full(n: usize) -> Self {
        VertexSet(if n == 0 { 0 } else { (1u32 << n) - 1 })
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << (v - 1))
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 >> (v - 1) & 1 == 1
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn insert(self, v: usize) -> VertexSet {
        VertexSet(self.0 | (1 << (v - 1)))
    }

    pub fn remove(self, v: usize) -> VertexSet {
        VertexSet(self.0 & !(1 << (v - 1)))
    }

    /// Ascending 1-indexed vertices.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let v = bits.trailing_zeros() as usize + 1;
            bits &= bits - 1;
            Some(v)
        })
    }

    pub fn vertices(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Simple graph on vertices `1..=n`, edges as normalized unordered pairs.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<VertexSet>,
}

impl SimpleGraph {
    /// Build a graph, normalizing each edge to `u < v`. Loops and duplicate
    /// edges are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 || n > 32 {
            return Err(Error::InvalidEdge { u: 0, v: 0, reason: format!("vertex count {n} outside 1..=32") });
        }
        let mut normalized = Vec::new();
        for (a, b) in edges {
            if a == 0 || a > n {
                return Err(Error::VertexOutOfRange { vertex: a, n });
            }
            if b == 0 || b > n {
                return Err(Error::VertexOutOfRange { vertex: b, n });
            }
            if a == b {
                return Err(Error::InvalidEdge { u: a, v: b, reason: "loop".into() });
            }
            normalized.push((a.min(b), a.max(b)));
        }
        normalized.sort_unstable();
        if normalized.windows(2).any(|w| w[0] == w[1]) {
            let (u, v) = normalized.windows(2).find(|w| w[0] == w[1]).unwrap()[0];
            return Err(Error::InvalidEdge { u, v, reason: "duplicate edge".into() });
        }
        let mut adjacency = vec![VertexSet::EMPTY; n + 1];
        for &(u, v) in &normalized {
            adjacency[u] = adjacency[u].insert(v);
            adjacency[v] = adjacency[v].insert(u);
        }
        Ok(Self { n, edges: normalized, adjacency })
    }

    pub fn edgeless(n: usize) -> Self {
        Self::new(n, []).expect("edgeless graph")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adjacency[u].contains(v)
    }

    pub fn is_isolated(&self, v: usize) -> bool {
        self.adjacency[v].is_empty()
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Neighbour set of `v`.
    pub fn neighbourhood(&self, v: usize) -> Result<VertexSet> {
        if v == 0 || v > self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(self.adjacency[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// True iff no edge has both endpoints in `set`.
    pub fn is_independent(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.adjacency[v].intersection(set).is_empty())
    }

    /// True iff every edge has an endpoint in `set`.
    pub fn is_cover(&self, set: VertexSet) -> bool {
        self.edges.iter().all(|&(u, v)| set.contains(u) || set.contains(v))
    }

    /// True iff `set` is a cover and no proper subset is.
    pub fn is_minimal_cover(&self, set: VertexSet) -> bool {
        self.is_cover(set) && set.iter().all(|v| !self.is_cover(set.remove(v)))
    }

    /// All inclusion-minimal vertex covers, in ascending bitmask order.
    ///
    /// Exhaustive over all `2^n` subsets; exhaustiveness doubles as the
    /// oracle for everything downstream of covers. The edgeless graph has
    /// the empty set as its unique minimal cover.
    pub fn minimal_vertex_covers(&self) -> Vec<VertexSet> {
        let limit = 1u64 << self.n;
        (0..limit)
            .map(|mask| VertexSet(mask as u32))
            .filter(|&s| self.is_minimal_cover(s))
            .collect()
    }

    /// Same graph with every edge meeting `set` removed; the ambient vertex
    /// count stays `n`.
    pub fn delete_vertices(&self, set: VertexSet) -> Self {
        let kept = self
            .edges
            .iter()
            .copied()
            .filter(|&(u, v)| !set.contains(u) && !set.contains(v));
        Self::new(self.n, kept).expect("deletion preserves validity")
    }

    /// BFS 2-coloring per connected component. Isolated vertices land on the
    /// left side; components are oriented so their smallest vertex is left.
    /// Returns `None` when an odd cycle exists.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let mut color = vec![None::<bool>; self.n + 1];
        let mut left = VertexSet::EMPTY;
        let mut right = VertexSet::EMPTY;
        for start in 1..=self.n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for w in self.adjacency[u].iter() {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        for (v, c) in color.iter().enumerate().skip(1) {
            if *c == Some(false) {
                left = left.insert(v);
            } else {
                right = right.insert(v);
            }
        }
        Some((left, right))
    }

    /// Spanning connectivity: every vertex reachable from vertex 1.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = VertexSet::singleton(1);
        let mut stack = vec![1];
        while let Some(u) = stack.pop() {
            for w in self.adjacency[u].iter() {
                if !seen.contains(w) {
                    seen = seen.insert(w);
                    stack.push(w);
                }
            }
        }
        seen == self.vertex_set()
    }
}

impl fmt::Display for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.n)?;
        if self.edges.is_empty() {
            return write!(f, " edgeless");
        }
        write!(f, " edges")?;
        for &(u, v) in &self.edges {
            write!(f, " {u}-{v}")?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Enumeration of small graphs up to isomorphism
// ---------------------------------------------------------------------------

/// Edge bitmask convention used by the enumerators: bit index of pair
/// `(u, w)` with `u < w` groups all pairs by their larger endpoint, so a
/// partial relabeling determines a prefix of the mask.
fn edge_bit(u: usize, w: usize) -> usize {
    debug_assert!(u < w);
    // pairs with larger endpoint w occupy (w-1)(w-2)/2 .. +(w-1)
    (w - 1) * (w - 2) / 2 + (u - 1)
}

fn mask_of_graph(g: &SimpleGraph) -> u32 {
    g.edges().iter().fold(0, |m, &(u, v)| m | (1 << edge_bit(u, v)))
}

/// Canonical representative of the isomorphism class of `g`: two graphs
/// are isomorphic iff their canonical forms are equal.
pub fn canonical_form(g: &SimpleGraph) -> SimpleGraph {
    assert!(g.n() <= 8, "canonical labeling is sized for n <= 8");
    graph_of_mask(g.n(), canonical_mask(g.n(), mask_of_graph(g)))
}

fn graph_of_mask(n: usize, mask: u32) -> SimpleGraph {
    let mut edges = Vec::new();
    for w in 2..=n {
        for u in 1..w {
            if mask >> edge_bit(u, w) & 1 == 1 {
                edges.push((u, w));
            }
        }
    }
    SimpleGraph::new(n, edges).expect("mask encodes a simple graph")
}

/// Least relabeled edge mask over all vertex permutations, where masks are
/// ordered bit-lexicographically (bit 0 most significant). Found by
/// prefix-pruned backtracking; graphs are isomorphic iff their canonical
/// masks agree.
pub fn canonical_mask(n: usize, mask: u32) -> u32 {
    struct Search<'a> {
        n: usize,
        adj: &'a [u32],
        assigned: Vec<usize>, // position -> original vertex
        used: u32,
        best: Option<u32>,
    }

    impl Search<'_> {
        fn run(&mut self, depth: usize, prefix: u32) {
            if depth > self.n {
                let better = match self.best {
                    None => true,
                    Some(b) => prefix.reverse_bits() < b.reverse_bits(),
                };
                if better {
                    self.best = Some(prefix);
                }
                return;
            }
            // bits determined once positions 1..=depth are all placed
            let bits_after = depth * (depth - 1) / 2;
            for orig in 1..=self.n {
                if self.used >> (orig - 1) & 1 == 1 {
                    continue;
                }
                let mut p = prefix;
                for pos in 1..depth {
                    let other = self.assigned[pos];
                    if self.adj[orig] >> (other - 1) & 1 == 1 {
                        p |= 1 << edge_bit(pos, depth);
                    }
                }
                if let Some(b) = self.best {
                    if bits_after > 0 {
                        // prune on the determined prefix, same bit-lex order
                        let keep = 32 - bits_after;
                        let b_prefix = (b.reverse_bits() >> keep) << keep;
                        if p.reverse_bits() > b_prefix {
                            continue;
                        }
                    }
                }
                self.assigned[depth] = orig;
                self.used |= 1 << (orig - 1);
                self.run(depth + 1, p);
                self.used &= !(1 << (orig - 1));
            }
        }
    }

    let adj: Vec<u32> = (0..=n)
        .map(|v| {
            if v == 0 {
                return 0;
            }
            let mut row = 0u32;
            for w in 1..=n {
                if w != v && mask >> edge_bit(v.min(w), v.max(w)) & 1 == 1 {
                    row |= 1 << (w - 1);
                }
            }
            row
        })
        .collect();
    let mut search =
        Search { n, adj: &adj, assigned: vec![0; n + 1], used: 0, best: None };
    search.run(1, 0);
    search.best.expect("at least one labeling")
}

/// Connected graphs on exactly `n` labeled vertices, one canonical
/// representative per isomorphism class, ascending by canonical edge mask.
pub fn connected_graphs_up_to_iso(n: usize) -> Vec<SimpleGraph> {
    assert!((1..=8).contains(&n), "enumeration is sized for n <= 8");
    if n == 1 {
        return vec![SimpleGraph::edgeless(1)];
    }
    use rayon::prelude::*;
    let bits = n * (n - 1) / 2;
    let canon: std::collections::BTreeSet<u32> = (0u64..(1u64 << bits))
        .into_par_iter()
        .filter_map(|mask| {
            let g = graph_of_mask(n, mask as u32);
            g.is_connected().then(|| canonical_mask(n, mask as u32))
        })
        .collect();
    // emit in the same bit-lex order the canonicalization minimizes
    let mut masks: Vec<u32> = canon.into_iter().collect();
    masks.sort_by_key(|m| m.reverse_bits());
    masks.into_iter().map(|m| graph_of_mask(n, m)).collect()
}

/// Connected bipartite graphs on exactly `n` vertices, one representative
/// per isomorphism class, emitted with left side `{1..p}` and right side
/// `{p+1..n}`.
///
/// A connected bipartite graph has a unique bipartition up to swapping the
/// sides, so canonicalizing the biadjacency matrix under row and column
/// permutations (plus transposition when the sides have equal size) is a
/// complete isomorphism invariant.
pub fn connected_bipartite_graphs_up_to_iso(n: usize) -> Vec<SimpleGraph> {
    assert!((1..=8).contains(&n), "enumeration is sized for n <= 8");
    if n == 1 {
        return vec![SimpleGraph::edgeless(1)];
    }
    let mut out = Vec::new();
    for p in 1..=n / 2 {
        let q = n - p;
        let cells = p * q;
        let mut seen = std::collections::BTreeSet::new();
        for mask in 0u64..(1u64 << cells) {
            let g = bipartite_of_mask(p, q, mask as u32);
            if !g.is_connected() {
                continue;
            }
            let canon = canonical_biadjacency(p, q, mask as u32);
            if seen.insert(canon) {
                out.push(bipartite_of_mask(p, q, canon));
            }
        }
    }
    out
}

fn bipartite_of_mask(p: usize, q: usize, mask: u32) -> SimpleGraph {
    let mut edges = Vec::new();
    for i in 0..p {
        for j in 0..q {
            if mask >> (i * q + j) & 1 == 1 {
                edges.push((i + 1, p + j + 1));
            }
        }
    }
    SimpleGraph::new(p + q, edges).expect("biadjacency mask encodes a bipartite graph")
}

fn canonical_biadjacency(p: usize, q: usize, mask: u32) -> u32 {
    let relabel = |mask: u32, rows: &[usize], cols: &[usize]| -> u32 {
        let mut out = 0u32;
        for (i2, &i) in rows.iter().enumerate() {
            for (j2, &j) in cols.iter().enumerate() {
                if mask >> (i * q + j) & 1 == 1 {
                    out |= 1 << (i2 * q + j2);
                }
            }
        }
        out
    };
    let mut best = u32::MAX;
    for rows in permutations(p) {
        for cols in permutations(q) {
            best = best.min(relabel(mask, &rows, &cols));
        }
    }
    if p == q {
        // transposed graph: swap the sides
        let mut t = 0u32;
        for i in 0..p {
            for j in 0..q {
                if mask >> (i * q + j) & 1 == 1 {
                    t |= 1 << (j * p + i);
                }
            }
        }
        for rows in permutations(p) {
            for cols in permutations(q) {
                best = best.min(relabel(t, &rows, &cols));
            }
        }
    }
    best
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..k).collect();
    heap_permute(&mut items, k, &mut out);
    out
}

fn heap_permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(items.clone());
        return;
    }
    for i in 0..k {
        heap_permute(items, k - 1, out);
        if k.is_multiple_of(2) {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}
