//! One named verifier per supported claim, each returning a structured
//! pass/fail report, plus a brute-force search for vertices whose variable
//! partition fails to be a Betti splitting.
//!
//! Verifiers check their hypotheses up front and refuse to run on violating
//! inputs rather than reporting vacuous passes, so a failing search result
//! is meaningful. Before any Betti numbers are computed, each theorem
//! verifier re-derives its intermediate ideals along independent routes and
//! asserts they agree as ideals.

use std::time::Instant;

use rayon::prelude::*;

use crate::betti::betti_table;
use crate::error::{Error, Result};
use crate::graph::{connected_graphs_up_to_iso, SimpleGraph, VertexSet};
use crate::ideals::{
    associated_ideal, cover_ideal, lower_cover_ideal, total_upper_cover_ideal,
    upper_cover_ideal, BipartiteContext, Side,
};
use crate::linalg::FieldSpec;
use crate::monomial::{Monomial, MonomialIdeal, Multidegree};
use crate::split::{
    multigraded_violations, partition_tables, splitting_verdict_from_tables, variable_partition,
    IdealPartition, PartitionTables, SplitWitness,
};

/// A single failed comparison inside a verification run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub position: String,
    pub expected: String,
    pub actual: String,
}

impl Violation {
    fn new(position: impl Into<String>, expected: impl ToString, actual: impl ToString) -> Self {
        Self {
            position: position.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }
}

/// Structured outcome of one verifier run. `pass` holds iff `violations`
/// is empty.
#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub claim: String,
    pub instance: String,
    pub pass: bool,
    pub violations: Vec<Violation>,
    pub wall_ms: f64,
}

impl VerificationReport {
    fn finish(
        claim: &str,
        instance: String,
        violations: Vec<Violation>,
        started: Instant,
    ) -> Self {
        Self {
            claim: claim.to_string(),
            instance,
            pass: violations.is_empty(),
            violations,
            wall_ms: started.elapsed().as_secs_f64() * 1e3,
        }
    }
}

fn digits(a: &Multidegree) -> String {
    a.exponents().iter().map(|e| char::from_digit(e % 10, 10).unwrap()).collect()
}

fn check_ideal_identity(
    violations: &mut Vec<Violation>,
    label: &str,
    expected: &MonomialIdeal,
    actual: &MonomialIdeal,
) {
    if expected != actual {
        violations.push(Violation::new(
            format!("ideal identity: {label}"),
            expected,
            actual,
        ));
    }
}

fn push_splitting_violations(violations: &mut Vec<Violation>, tables: &PartitionTables) {
    let verdict = splitting_verdict_from_tables(tables);
    if let Some(w) = verdict.witness {
        violations.push(Violation::new(
            format!("graded splitting (i={}, j={})", w.i, w.j),
            w.lhs,
            w.rhs,
        ));
    }
    for (i, a, lhs, rhs) in multigraded_violations(tables) {
        violations.push(Violation::new(
            format!("multigraded splitting (i={i}, a={})", digits(&a)),
            lhs,
            rhs,
        ));
    }
}

/// Sum of `x^{base ∪ N(u)} * J(G \ (base ∪ N(u)))` over the vertices `u` of
/// `base`; the closed form both splitting theorems give for `K ∩ L`.
fn deletion_sum_ideal(g: &SimpleGraph, base: VertexSet) -> MonomialIdeal {
    let mut acc = MonomialIdeal::zero(g.n());
    for u in base.iter() {
        let widened = base.union(g.neighbourhood(u).expect("vertex in range"));
        let term = cover_ideal(&g.delete_vertices(widened))
            .scale(&Monomial::from_support_mask(g.n(), widened.0))
            .expect("shared ambient");
        acc = acc.sum(&term).expect("shared ambient");
    }
    acc
}

/// Splitting at a vertex whose neighbourhood is independent (claim
/// `thm3.3`): the variable partition of the cover ideal at `v` is a Betti
/// splitting, and the Betti numbers of `J(G)` follow the three-case
/// multidegree formula.
pub fn verify_splitting_at_vertex(
    g: &SimpleGraph,
    v: usize,
    field: FieldSpec,
) -> Result<VerificationReport> {
    let started = Instant::now();
    let nv = g.neighbourhood(v)?;
    if !g.is_independent(nv) {
        return Err(Error::HypothesisViolation(format!(
            "neighbourhood {nv} of vertex {v} is not independent in {g}"
        )));
    }
    let n = g.n();
    let whole = cover_ideal(g);
    let partition = variable_partition(&whole, v)?;
    let mut violations = Vec::new();

    // Independent routes to the two parts, asserted before Betti numbers:
    // the left part is the ideal of minimal covers through v, equals the
    // lower cover ideal of N(v), equals x_v times the lower cover ideal of
    // N(v) in the deletion; the right part is the upper cover ideal of
    // N(v), equals the ideal of all covers containing N(v).
    check_ideal_identity(
        &mut violations,
        "left part vs covers through v",
        &upper_cover_ideal(g, VertexSet::singleton(v)),
        partition.left(),
    );
    if nv.is_empty() {
        if !partition.left().is_zero() {
            violations.push(Violation::new(
                "left part for an isolated vertex",
                MonomialIdeal::zero(n),
                partition.left(),
            ));
        }
    } else {
        check_ideal_identity(
            &mut violations,
            "left part vs lower cover ideal of N(v)",
            &lower_cover_ideal(g, nv)?,
            partition.left(),
        );
        let deleted = g.delete_vertices(VertexSet::singleton(v));
        let shifted = lower_cover_ideal(&deleted, nv)?
            .scale(&Monomial::variable(n, v)?)
            .expect("shared ambient");
        check_ideal_identity(
            &mut violations,
            "left part vs x_v * lower cover ideal in the deletion",
            &shifted,
            partition.left(),
        );
    }
    check_ideal_identity(
        &mut violations,
        "right part vs upper cover ideal of N(v)",
        &upper_cover_ideal(g, nv),
        partition.right(),
    );
    check_ideal_identity(
        &mut violations,
        "right part vs all covers containing N(v)",
        &total_upper_cover_ideal(g, nv),
        partition.right(),
    );
    let meet = partition.intersection();
    check_ideal_identity(
        &mut violations,
        "intersection vs deletion-sum closed form",
        &deletion_sum_ideal(g, nv),
        &meet,
    );

    let tables = partition_tables(&partition, field)?;
    push_splitting_violations(&mut violations, &tables);

    // Three-case multidegree formula. Case 2 uses x_v * J(G \ v), which is
    // not the left part in general; its table is computed separately.
    let case2_ideal = cover_ideal(&g.delete_vertices(VertexSet::singleton(v)))
        .scale(&Monomial::variable(n, v)?)
        .expect("shared ambient");
    let case2 = betti_table(&case2_ideal, field)?;
    let ev = VertexSet::singleton(v);
    for mask in 0u32..(1 << n) {
        let a = VertexSet(mask);
        let degree = Multidegree::from_support_mask(n, mask);
        for i in 1..=n + 1 {
            let actual = tables.whole.get(i, &degree);
            let (case, expected) = if ev.is_subset_of(a) && nv.is_subset_of(a) {
                (1, tables.meet.get(i - 1, &degree))
            } else if ev.is_subset_of(a) {
                (2, case2.get(i, &degree))
            } else {
                (3, tables.right.get(i, &degree))
            };
            if actual != expected {
                violations.push(Violation::new(
                    format!("case {case} (i={i}, a={})", digits(&degree)),
                    expected,
                    actual,
                ));
            }
        }
    }

    let instance = format!("{g}, v={v}, field={field}");
    Ok(VerificationReport::finish("thm-3.3", instance, violations, started))
}

/// Every variable partition of the cover ideal of a bipartite graph is a
/// Betti splitting (claim `cor1.2`).
pub fn verify_bipartite_all_vertices(
    g: &SimpleGraph,
    field: FieldSpec,
) -> Result<VerificationReport> {
    let started = Instant::now();
    if g.bipartition().is_none() {
        return Err(Error::HypothesisViolation(format!("{g} is not bipartite")));
    }
    let whole = cover_ideal(g);
    let whole_table = betti_table(&whole, field)?;
    let mut violations = Vec::new();
    for v in 1..=g.n() {
        let partition = variable_partition(&whole, v)?;
        let tables = PartitionTables {
            whole: whole_table.clone(),
            left: betti_table(partition.left(), field)?,
            right: betti_table(partition.right(), field)?,
            meet: betti_table(&partition.intersection(), field)?,
        };
        let verdict = splitting_verdict_from_tables(&tables);
        if let Some(w) = verdict.witness {
            violations.push(Violation::new(
                format!("v={v}, graded splitting (i={}, j={})", w.i, w.j),
                w.lhs,
                w.rhs,
            ));
        }
    }
    let instance = format!("{g}, all vertices, field={field}");
    Ok(VerificationReport::finish("cor-1.2", instance, violations, started))
}

/// Vanishing of the lower cover ideal's Betti numbers in degrees dominating
/// an independent set (claim `prop2.2`): for independent `U`, every Betti
/// degree `a >= e_U` of the lower cover ideal vanishes.
pub fn verify_lower_vanishing(
    g: &SimpleGraph,
    set: VertexSet,
    field: FieldSpec,
) -> Result<VerificationReport> {
    let started = Instant::now();
    if !set.is_subset_of(g.vertex_set()) {
        return Err(Error::VertexOutOfRange {
            vertex: set.iter().last().unwrap_or(0),
            n: g.n(),
        });
    }
    if !g.is_independent(set) {
        return Err(Error::HypothesisViolation(format!("{set} is not independent in {g}")));
    }
    let instance = format!("{g}, U={set}, field={field}");
    if set.is_empty() {
        // the lower cover ideal is undefined at the empty set; nothing to
        // check, the claim is vacuous
        return Ok(VerificationReport::finish("prop-2.2", instance, Vec::new(), started));
    }
    let lower = lower_cover_ideal(g, set)?;
    let table = betti_table(&lower, field)?;
    let mut violations = Vec::new();
    for (i, a, v) in table.iter() {
        if set.is_subset_of(VertexSet(a.support_mask())) {
            violations.push(Violation::new(
                format!("vanishing (i={i}, a={})", digits(a)),
                0,
                v,
            ));
        }
    }
    Ok(VerificationReport::finish("prop-2.2", instance, violations, started))
}

/// Agreement of the cover ideal and lower cover ideal Betti numbers in all
/// degrees not dominating `e_U` (claim `lem3.2`).
pub fn verify_lower_agreement(
    g: &SimpleGraph,
    set: VertexSet,
    field: FieldSpec,
) -> Result<VerificationReport> {
    let started = Instant::now();
    if set.is_empty() {
        return Err(Error::EmptySubset { operation: "verify_lower_agreement" });
    }
    if !set.is_subset_of(g.vertex_set()) {
        return Err(Error::VertexOutOfRange {
            vertex: set.iter().last().unwrap_or(0),
            n: g.n(),
        });
    }
    let n = g.n();
    let whole = betti_table(&cover_ideal(g), field)?;
    let lower = betti_table(&lower_cover_ideal(g, set)?, field)?;
    let mut violations = Vec::new();
    for mask in 0u32..(1 << n) {
        if set.is_subset_of(VertexSet(mask)) {
            continue;
        }
        let a = Multidegree::from_support_mask(n, mask);
        for i in 0..=n + 1 {
            let lhs = whole.get(i, &a);
            let rhs = lower.get(i, &a);
            if lhs != rhs {
                violations.push(Violation::new(
                    format!("dimension equality (i={i}, a={})", digits(&a)),
                    lhs,
                    rhs,
                ));
            }
        }
    }
    let instance = format!("{g}, U={set}, field={field}");
    Ok(VerificationReport::finish("lem-3.2", instance, violations, started))
}

/// Side splitting of a bipartite graph (claim `thm3.4`): with `U` one side
/// of the bipartition and no vertex of `U` isolated, the pair
/// `((x^U), J_U(G))` is a Betti splitting of `J(G)`, the upper cover ideal
/// of `U` is exactly `(x^U)`, and the Betti numbers transfer onto the
/// neighbourhood ideal `M` of `U`: `b_{i,a}(J(G)) = b_{i-1,a}(x^U * M)` for
/// `a >= e_U` and `= b_{i,a}(J_U(G))` otherwise.
pub fn verify_side_splitting(
    ctx: &BipartiteContext,
    side: Side,
    field: FieldSpec,
) -> Result<VerificationReport> {
    let started = Instant::now();
    let g = ctx.graph();
    let n = g.n();
    let u_side = ctx.side(side);
    if u_side.is_empty() {
        return Err(Error::EmptySubset { operation: "verify_side_splitting" });
    }
    for u in u_side.iter() {
        if g.is_isolated(u) {
            return Err(Error::HypothesisViolation(format!(
                "vertex {u} of side {u_side} is isolated in {g}"
            )));
        }
    }
    let mut violations = Vec::new();
    let xu = Monomial::from_support_mask(n, u_side.0);
    let principal = MonomialIdeal::principal(xu.clone());

    check_ideal_identity(
        &mut violations,
        "upper cover ideal of the side vs (x^U)",
        &principal,
        &upper_cover_ideal(g, u_side),
    );

    let m_ideal = associated_ideal(ctx, side)?;
    let shifted_m = m_ideal.scale(&xu).expect("shared ambient");
    let lower = lower_cover_ideal(g, u_side)?;
    let meet = principal.intersect(&lower).expect("shared ambient");
    check_ideal_identity(
        &mut violations,
        "intersection vs x^U * neighbourhood ideal",
        &shifted_m,
        &meet,
    );
    check_ideal_identity(
        &mut violations,
        "intersection vs deletion-sum closed form",
        &deletion_sum_ideal(g, u_side),
        &meet,
    );

    let whole = cover_ideal(g);
    let partition = IdealPartition::new(whole, principal, lower)?;
    let tables = partition_tables(&partition, field)?;
    push_splitting_violations(&mut violations, &tables);

    for mask in 0u32..(1 << n) {
        let a = Multidegree::from_support_mask(n, mask);
        for i in 1..=n + 1 {
            let actual = tables.whole.get(i, &a);
            let (label, expected) = if u_side.is_subset_of(VertexSet(mask)) {
                ("transfer a>=e_U", tables.meet.get(i - 1, &a))
            } else {
                ("agreement a!>=e_U", tables.right.get(i, &a))
            };
            if actual != expected {
                violations.push(Violation::new(
                    format!("{label} (i={i}, a={})", digits(&a)),
                    expected,
                    actual,
                ));
            }
        }
    }

    let instance = format!("{g}, U={u_side}, field={field}");
    Ok(VerificationReport::finish("thm-3.4", instance, violations, started))
}

/// Transfer onto a prefix bipartition (claim `thm1.3`): for a bipartite
/// graph with sides `{1..m}` and `{m+1..n}` and no isolated vertices,
/// `b_{i,(a,1,..,1)}(J(G)) = b_{i-1,a}(M)` for every `i >= 1` and every
/// squarefree `a` over the first `m` variables, where `M` is the
/// neighbourhood ideal of the suffix side in the `m`-variable ring.
pub fn verify_transfer_prefix(
    g: &SimpleGraph,
    m: usize,
    field: FieldSpec,
) -> Result<VerificationReport> {
    let started = Instant::now();
    let n = g.n();
    if m == 0 || m >= n {
        return Err(Error::HypothesisViolation(format!(
            "prefix size {m} does not split 1..={n} into two nonempty sides"
        )));
    }
    let left = VertexSet::full(m);
    let right = VertexSet::full(n).difference(left);
    let ctx = BipartiteContext::new(g.clone(), left, right)?;
    for v in 1..=n {
        if g.is_isolated(v) {
            return Err(Error::HypothesisViolation(format!("vertex {v} is isolated in {g}")));
        }
    }
    let m_ideal = associated_ideal(&ctx, Side::Right)?.restrict_ambient(m)?;
    let whole = betti_table(&cover_ideal(g), field)?;
    let m_table = betti_table(&m_ideal, field)?;
    let mut violations = Vec::new();
    for mask in 0u32..(1 << m) {
        let a_small = Multidegree::from_support_mask(m, mask);
        let a_full = Multidegree::from_support_mask(n, mask | (right.0));
        for i in 1..=n + 1 {
            let lhs = whole.get(i, &a_full);
            let rhs = m_table.get(i - 1, &a_small);
            if lhs != rhs {
                violations.push(Violation::new(
                    format!("transfer (i={i}, a={})", digits(&a_small)),
                    rhs,
                    lhs,
                ));
            }
        }
    }
    let instance = format!("{g}, m={m}, field={field}");
    Ok(VerificationReport::finish("thm-1.3", instance, violations, started))
}

/// Graded recursion at a leaf (claim `leaf`): when `N(v) = {u}`, writing
/// `G' = G \ {u,v}`, `G'' = G \ N(u)` and `d = |N(u)|`,
/// `b_{i,j}(J(G)) = b_{i,j-1}(J(G')) + b_{i,j-d}(J(G'')) +
/// b_{i-1,j-d-1}(J(G''))` for all `i >= 1` and all `j`.
pub fn verify_leaf_recursion(
    g: &SimpleGraph,
    v: usize,
    field: FieldSpec,
) -> Result<VerificationReport> {
    let started = Instant::now();
    let nv = g.neighbourhood(v)?;
    if nv.len() != 1 {
        return Err(Error::HypothesisViolation(format!(
            "vertex {v} has neighbourhood {nv}, not a single vertex"
        )));
    }
    let u = nv.iter().next().unwrap();
    let nu = g.neighbourhood(u)?;
    let d = nu.len() as u32;
    let whole = betti_table(&cover_ideal(g), field)?;
    let table_pruned = betti_table(
        &cover_ideal(&g.delete_vertices(VertexSet::from_vertices(&[u, v]))),
        field,
    )?;
    let table_cleared = betti_table(&cover_ideal(&g.delete_vertices(nu)), field)?;

    let n = g.n() as u32;
    let mut violations = Vec::new();
    for i in 1..=g.n() + 1 {
        for j in 0..=2 * n + 2 {
            let lhs = whole.graded(i, j);
            let mut rhs = 0;
            if j >= 1 {
                rhs += table_pruned.graded(i, j - 1);
            }
            if j >= d {
                rhs += table_cleared.graded(i, j - d);
            }
            if j > d {
                rhs += table_cleared.graded(i - 1, j - d - 1);
            }
            if lhs != rhs {
                violations.push(Violation::new(
                    format!("leaf recursion (i={i}, j={j})"),
                    rhs,
                    lhs,
                ));
            }
        }
    }
    let instance = format!("{g}, leaf v={v} (u={u}), field={field}");
    Ok(VerificationReport::finish("leaf", instance, violations, started))
}

/// A pinned splitting failure found by [`counterexample_search`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub graph: SimpleGraph,
    pub vertex: usize,
    pub witness: SplitWitness,
}

impl std::fmt::Display for Counterexample {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}, v={}: {}", self.graph, self.vertex, self.witness)
    }
}

/// Exhaustive search for a connected graph and a vertex `v` with
/// non-independent neighbourhood whose variable partition fails to be a
/// Betti splitting.
///
/// Graphs are enumerated by vertex count, one canonical representative per
/// isomorphism class; within a vertex count all failures are collected in
/// parallel and the one with the least (canonical graph, vertex) position
/// wins, so the result is reproducible. Vertices whose neighbourhood is
/// independent are skipped: the splitting theorem covers them. Returns
/// `None` when no failure exists within the budget.
pub fn counterexample_search(
    max_n: usize,
    field: FieldSpec,
) -> Result<Option<Counterexample>> {
    if max_n > 8 {
        return Err(Error::BudgetExceeded(format!(
            "graph enumeration at n={max_n} exceeds the n<=8 search budget"
        )));
    }
    for n in 1..=max_n {
        let graphs = connected_graphs_up_to_iso(n);
        let candidates: Vec<(usize, &SimpleGraph, usize)> = graphs
            .iter()
            .enumerate()
            .flat_map(|(idx, g)| {
                (1..=n).filter_map(move |v| {
                    let nv = g.neighbourhood(v).expect("vertex in range");
                    (!g.is_independent(nv)).then_some((idx, g, v))
                })
            })
            .collect();
        let mut failures: Vec<(usize, usize, Counterexample)> = candidates
            .into_par_iter()
            .filter_map(|(idx, g, v)| {
                let partition =
                    variable_partition(&cover_ideal(g), v).expect("vertex in range");
                let verdict = crate::split::is_betti_splitting(&partition, field)
                    .expect("search graphs stay inside budgets");
                verdict.witness.map(|witness| {
                    (idx, v, Counterexample { graph: g.clone(), vertex: v, witness })
                })
            })
            .collect();
        failures.sort_by_key(|&(idx, v, _)| (idx, v));
        if let Some((_, _, found)) = failures.into_iter().next() {
            return Ok(Some(found));
        }
    }
    Ok(None)
}

/// Report wrapper around [`counterexample_search`] (claim `search`): the
/// claim that the independence hypothesis is necessary *passes* when a
/// failing pair is found.
pub fn verify_search(max_n: usize, field: FieldSpec) -> Result<VerificationReport> {
    let started = Instant::now();
    let found = counterexample_search(max_n, field)?;
    let instance = format!("connected graphs up to n={max_n}, field={field}");
    let violations = match &found {
        Some(_) => Vec::new(),
        None => vec![Violation::new(
            "search",
            "a non-independent vertex whose partition fails to split",
            format!("none found up to n={max_n}"),
        )],
    };
    let mut report = VerificationReport::finish("search", instance, violations, started);
    if let Some(cx) = found {
        report.instance = format!("{}; found {cx}", report.instance);
    }
    Ok(report)
}
