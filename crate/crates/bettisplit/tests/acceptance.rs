//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line (`cargo test --test acceptance -- --nocapture`). All comparisons
//! are exact; stated runtime budgets are asserted.

mod common;

use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use bettisplit::verify::{
    verify_bipartite_all_vertices, verify_leaf_recursion, verify_lower_agreement,
    verify_lower_vanishing, verify_splitting_at_vertex,
};
use bettisplit::{
    associated_ideal, betti_table, counterexample_search, cover_ideal, is_betti_splitting,
    lower_cover_ideal, minimalize, restricted_cover_ideal, taylor_table,
    total_upper_cover_ideal, upper_cover_ideal, variable_partition, BettiTable,
    BipartiteContext, FieldSpec, Monomial, MonomialIdeal, Multidegree, Side, VertexSet,
};

const BOTH_FIELDS: [FieldSpec; 2] =
    [FieldSpec::Rationals, FieldSpec::Prime(FieldSpec::DEFAULT_PRIME)];

fn finish(name: &str, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    println!("acceptance {name}: PASS ({elapsed:.2?})");
    assert!(
        elapsed <= budget,
        "{name} exceeded its runtime budget: {elapsed:.2?} > {budget:.2?}"
    );
}

fn table_of(positions: &[(usize, &[u32])]) -> BettiTable {
    let mut t = BettiTable::new();
    for (i, exps) in positions {
        t.insert(*i, Multidegree::new(exps.to_vec()), 1);
    }
    t
}

/// Criterion 1: the fixture cover ideal has exactly the nine frozen table
/// entries and its neighbourhood ideal exactly three, over the rationals
/// and over GF(32003).
#[test]
fn criterion_1_fixture_tables_exact() {
    let started = Instant::now();
    let g = common::load_fixture_graph("example_1_4.graph");
    let j = cover_ideal(&g);
    let m = common::load_fixture_ideal("example_1_4_M.ideal");
    let expected_j = table_of(&[
        (0, &[1, 1, 1, 0, 0]),
        (0, &[0, 0, 0, 1, 1]),
        (0, &[1, 1, 0, 0, 1]),
        (0, &[0, 1, 1, 1, 0]),
        (1, &[1, 1, 1, 1, 0]),
        (1, &[1, 1, 1, 0, 1]),
        (1, &[1, 1, 0, 1, 1]),
        (1, &[0, 1, 1, 1, 1]),
        (2, &[1, 1, 1, 1, 1]),
    ]);
    let expected_m = table_of(&[(0, &[1, 1, 0]), (0, &[0, 1, 1]), (1, &[1, 1, 1])]);
    for field in BOTH_FIELDS {
        assert_eq!(betti_table(&j, field).unwrap(), expected_j, "J(G) over {field}");
        assert_eq!(betti_table(&m, field).unwrap(), expected_m, "M over {field}");
    }
    finish("1 fixture tables exact (both fields)", started, Duration::from_secs(1));
}

/// Criterion 2: the three component ideals of the fixture at v=4 have
/// exactly the displayed generators and exactly the displayed tables.
#[test]
fn criterion_2_component_ideals_exact() {
    let started = Instant::now();
    let g = common::load_fixture_graph("example_1_4.graph");
    let j = cover_ideal(&g);
    let p = variable_partition(&j, 4).unwrap();
    let meet = p.intersection();

    assert_eq!(p.left(), &common::load_fixture_ideal("example_1_4_K_v4.ideal"));
    assert_eq!(p.right(), &common::load_fixture_ideal("example_1_4_L_v4.ideal"));
    assert_eq!(meet, common::load_fixture_ideal("example_1_4_KL_v4.ideal"));

    // the two closed forms for the parts
    let xv = Monomial::variable(5, 4).unwrap();
    assert_eq!(
        p.left(),
        &cover_ideal(&g.delete_vertices(VertexSet::singleton(4))).scale(&xv).unwrap()
    );
    let nv = g.neighbourhood(4).unwrap();
    assert_eq!(p.right(), &total_upper_cover_ideal(&g, nv));

    let expected_k = table_of(&[(0, &[0, 0, 0, 1, 1]), (0, &[0, 1, 1, 1, 0]), (1, &[0, 1, 1, 1, 1])]);
    let expected_l = table_of(&[(0, &[1, 1, 1, 0, 0]), (0, &[1, 1, 0, 0, 1]), (1, &[1, 1, 1, 0, 1])]);
    let expected_meet =
        table_of(&[(0, &[1, 1, 1, 1, 0]), (0, &[1, 1, 0, 1, 1]), (1, &[1, 1, 1, 1, 1])]);
    assert_eq!(betti_table(p.left(), FieldSpec::Rationals).unwrap(), expected_k);
    assert_eq!(betti_table(p.right(), FieldSpec::Rationals).unwrap(), expected_l);
    assert_eq!(betti_table(&meet, FieldSpec::Rationals).unwrap(), expected_meet);
    finish("2 component ideals exact", started, Duration::from_secs(1));
}

/// Criterion 3: on the fixture, the table entries of the cover ideal at
/// degrees ending in (1, 1) equal the neighbourhood ideal's entries one
/// index lower, at every position including zeros.
#[test]
fn criterion_3_transfer_exact_on_fixture() {
    let started = Instant::now();
    let g = common::load_fixture_graph("example_1_4.graph");
    let j_table = betti_table(&cover_ideal(&g), FieldSpec::Rationals).unwrap();
    let m = common::load_fixture_ideal("example_1_4_M.ideal");
    let m_table = betti_table(&m, FieldSpec::Rationals).unwrap();
    for mask in 0u32..8 {
        let a3 = Multidegree::from_support_mask(3, mask);
        let a5 = Multidegree::from_support_mask(5, mask | 0b11000);
        for i in 1..=6 {
            assert_eq!(
                j_table.get(i, &a5),
                m_table.get(i - 1, &a3),
                "transfer at i={i}, a={a3:?}"
            );
        }
    }
    let report =
        bettisplit::verify::verify_transfer_prefix(&g, 3, FieldSpec::Rationals).unwrap();
    assert!(report.pass, "{:?}", report.violations);
    finish("3 transfer exact on fixture", started, Duration::from_secs(1));
}

/// Criterion 4: for every connected bipartite graph on up to 7 vertices
/// (exhaustive up to isomorphism) and every vertex, the variable partition
/// of the cover ideal is a Betti splitting.
#[test]
fn criterion_4_bipartite_sweep() {
    let started = Instant::now();
    let mut graphs = 0usize;
    for n in 1..=7 {
        for g in bettisplit::graph::connected_bipartite_graphs_up_to_iso(n) {
            let report = verify_bipartite_all_vertices(&g, FieldSpec::Rationals).unwrap();
            assert!(report.pass, "split failed on {g}: {:?}", report.violations);
            graphs += 1;
        }
    }
    assert_eq!(graphs, 1 + 1 + 1 + 3 + 5 + 17 + 44);
    finish("4 bipartite sweep (72 graphs, every vertex)", started, Duration::from_secs(600));
}

/// Criterion 5: on 200 seeded random graphs with up to 7 vertices, every
/// vertex with independent neighbourhood satisfies the splitting and the
/// piecewise multidegree formula at every position.
#[test]
fn criterion_5_three_case_formula_random() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0005);
    let mut checked_vertices = 0usize;
    for _ in 0..200 {
        let g = common::random_graph(&mut rng, 7);
        for v in 1..=g.n() {
            let nv = g.neighbourhood(v).unwrap();
            if !g.is_independent(nv) {
                continue;
            }
            let report = verify_splitting_at_vertex(&g, v, FieldSpec::Rationals).unwrap();
            assert!(report.pass, "failed on {g}, v={v}: {:?}", report.violations);
            checked_vertices += 1;
        }
    }
    assert!(checked_vertices > 200, "sweep too thin: {checked_vertices} vertices");
    finish("5 three-case formula on 200 random graphs", started, Duration::from_secs(600));
}

/// Criterion 6: the brute-force search finds, within n <= 7, a vertex with
/// non-independent neighbourhood whose partition fails to split, matching
/// the pinned fixture; no such failure exists within n <= 4.
#[test]
fn criterion_6_hypothesis_necessity() {
    let started = Instant::now();
    assert!(counterexample_search(4, FieldSpec::Rationals).unwrap().is_none());
    let found = counterexample_search(7, FieldSpec::Rationals)
        .unwrap()
        .expect("a failing pair exists within the budget");
    let pinned = common::load_fixture_graph("counterexample.graph");
    assert_eq!(found.graph, pinned);
    assert_eq!(found.vertex, 3);
    assert_eq!((found.witness.i, found.witness.j), (1, 5));
    assert_eq!((found.witness.lhs, found.witness.rhs), (0, 1));

    let nv = found.graph.neighbourhood(found.vertex).unwrap();
    assert!(!found.graph.is_independent(nv));
    assert!(found.graph.bipartition().is_none(), "failures cannot be bipartite");

    // reproduce the failure directly from the pinned fixture
    let p = variable_partition(&cover_ideal(&pinned), 3).unwrap();
    let verdict = is_betti_splitting(&p, FieldSpec::Rationals).unwrap();
    assert!(!verdict.pass);
    assert_eq!(verdict.witness.as_ref().map(|w| (w.i, w.j)), Some((1, 5)));
    finish("6 hypothesis necessity via pinned search", started, Duration::from_secs(1800));
}

/// Criterion 7: the simplicial route and the Taylor oracle compute
/// identical tables on 500 seeded random squarefree ideals, over both
/// fields.
#[test]
fn criterion_7_oracle_equivalence() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0007);
    for round in 0..500 {
        let ideal = common::random_squarefree_ideal(&mut rng, 6, 5);
        for field in BOTH_FIELDS {
            let koszul = betti_table(&ideal, field).unwrap();
            let taylor = taylor_table(&ideal, field).unwrap();
            assert_eq!(koszul, taylor, "round {round}, field {field}, ideal {ideal}");
        }
    }
    finish("7 oracle equivalence on 500 random ideals", started, Duration::from_secs(300));
}

/// Criterion 8: the ideal-identity suites, each over at least 100 seeded
/// random instances with zero failures.
#[test]
fn criterion_8_identity_suites() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0008);

    // cover facts: removable vertices and neighbourhood containment
    for _ in 0..120 {
        let g = common::random_graph(&mut rng, 7);
        for cover in common::brute_force_covers(&g) {
            for v in 1..=g.n() {
                let nv = g.neighbourhood(v).unwrap();
                if cover.contains(v) && nv.is_subset_of(cover) {
                    assert!(g.is_cover(cover.remove(v)), "{g}, cover {cover}, v={v}");
                }
            }
        }
        for cover in g.minimal_vertex_covers() {
            for v in 1..=g.n() {
                let nv = g.neighbourhood(v).unwrap();
                assert_eq!(!cover.contains(v), nv.is_subset_of(cover), "{g}, {cover}, v={v}");
            }
        }
    }

    // the four routes to the two parts of the vertex partition
    for _ in 0..120 {
        let g = common::random_graph(&mut rng, 7);
        for v in 1..=g.n() {
            let nv = g.neighbourhood(v).unwrap();
            let through_v = upper_cover_ideal(&g, VertexSet::singleton(v));
            let missing_v = lower_cover_ideal(&g, VertexSet::singleton(v)).unwrap();
            if nv.is_empty() {
                assert!(through_v.is_zero());
            } else {
                assert_eq!(through_v, lower_cover_ideal(&g, nv).unwrap());
                let deleted = g.delete_vertices(VertexSet::singleton(v));
                assert_eq!(
                    through_v,
                    lower_cover_ideal(&deleted, nv)
                        .unwrap()
                        .scale(&Monomial::variable(g.n(), v).unwrap())
                        .unwrap()
                );
            }
            assert_eq!(missing_v, upper_cover_ideal(&g, nv));
            assert_eq!(missing_v, total_upper_cover_ideal(&g, nv));
        }
    }

    // restricted ideals intersect along unions at non-adjacent pairs
    let mut pair_instances = 0usize;
    while pair_instances < 100 {
        let g = common::random_graph(&mut rng, 7);
        for u in 1..=g.n() {
            for v in u + 1..=g.n() {
                if g.has_edge(u, v) {
                    continue;
                }
                let lhs = restricted_cover_ideal(&g, VertexSet::singleton(u))
                    .intersect(&restricted_cover_ideal(&g, VertexSet::singleton(v)))
                    .unwrap();
                assert_eq!(
                    lhs,
                    restricted_cover_ideal(&g, VertexSet::from_vertices(&[u, v])),
                    "{g}, u={u}, v={v}"
                );
                pair_instances += 1;
            }
        }
    }

    // principal-meet-lower: the deletion-sum form and the cover-shift form
    for _ in 0..120 {
        let g = common::random_graph(&mut rng, 7);
        if g.n() < 2 {
            continue;
        }
        let set = common::random_nonempty_subset(&mut rng, &g);
        let principal = MonomialIdeal::principal(Monomial::from_support_mask(g.n(), set.0));
        let lower = lower_cover_ideal(&g, set).unwrap();
        let lhs = principal.intersect(&lower).unwrap();
        assert_eq!(lhs, total_upper_cover_ideal(&g, set).intersect(&lower).unwrap());
        let mut sum = MonomialIdeal::zero(g.n());
        for u in set.iter() {
            let widened = set.union(g.neighbourhood(u).unwrap());
            sum = sum
                .sum(
                    &cover_ideal(&g.delete_vertices(widened))
                        .scale(&Monomial::from_support_mask(g.n(), widened.0))
                        .unwrap(),
                )
                .unwrap();
        }
        assert_eq!(lhs, sum, "{g}, set {set}");
        let shift_gens = common::brute_force_covers(&g)
            .into_iter()
            .filter(|w| !set.is_subset_of(*w))
            .map(|w| Monomial::from_support_mask(g.n(), w.union(set).0))
            .collect();
        assert_eq!(lhs, minimalize(g.n(), shift_gens).unwrap(), "{g}, set {set}");
    }

    // bipartite sides: covers through a side collapse to one generator and
    // meet the rest in the shifted neighbourhood ideal
    let mut bipartite_instances = 0usize;
    while bipartite_instances < 100 {
        let g = common::random_graph(&mut rng, 7);
        let Some((left, right)) = g.bipartition() else { continue };
        for (side_set, side) in [(left, Side::Left), (right, Side::Right)] {
            if side_set.is_empty() || side_set.iter().any(|u| g.is_isolated(u)) {
                continue;
            }
            let ctx = BipartiteContext::new(g.clone(), left, right).unwrap();
            let xu = Monomial::from_support_mask(g.n(), side_set.0);
            assert_eq!(
                upper_cover_ideal(&g, side_set),
                MonomialIdeal::principal(xu.clone()),
                "{g}, side {side_set}"
            );
            let m = associated_ideal(&ctx, side).unwrap();
            let meet = MonomialIdeal::principal(xu.clone())
                .intersect(&lower_cover_ideal(&g, side_set).unwrap())
                .unwrap();
            assert_eq!(meet, m.scale(&xu).unwrap(), "{g}, side {side_set}");
            bipartite_instances += 1;
        }
    }

    // Betti vanishing above independent sets
    let mut vanishing_instances = 0usize;
    while vanishing_instances < 100 {
        let g = common::random_graph(&mut rng, 7);
        if g.n() < 2 {
            continue;
        }
        let set = common::random_nonempty_subset(&mut rng, &g);
        if !g.is_independent(set) {
            continue;
        }
        let report = verify_lower_vanishing(&g, set, FieldSpec::Rationals).unwrap();
        assert!(report.pass, "{g}, set {set}: {:?}", report.violations);
        vanishing_instances += 1;
    }

    // dimension agreement below the set
    let mut agreement_instances = 0usize;
    while agreement_instances < 100 {
        let g = common::random_graph(&mut rng, 7);
        if g.n() < 2 {
            continue;
        }
        let set = common::random_nonempty_subset(&mut rng, &g);
        let report = verify_lower_agreement(&g, set, FieldSpec::Rationals).unwrap();
        assert!(report.pass, "{g}, set {set}: {:?}", report.violations);
        agreement_instances += 1;
    }

    finish("8 identity suites (7 suites, 100+ instances each)", started, Duration::from_secs(600));
}

/// Criterion 9: the leaf recursion holds on the fixture at every leaf and
/// on 100 seeded random graphs with a leaf.
#[test]
fn criterion_9_leaf_recursion() {
    let started = Instant::now();
    let g = common::load_fixture_graph("example_1_4.graph");
    let leaves: Vec<usize> = (1..=g.n()).filter(|&v| g.degree(v) == 1).collect();
    assert_eq!(leaves, vec![1, 3]);
    for v in leaves {
        let report = verify_leaf_recursion(&g, v, FieldSpec::Rationals).unwrap();
        assert!(report.pass, "fixture leaf {v}: {:?}", report.violations);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0009);
    let mut graphs_with_leaf = 0usize;
    while graphs_with_leaf < 100 {
        let g = common::random_graph(&mut rng, 7);
        let leaves: Vec<usize> = (1..=g.n()).filter(|&v| g.degree(v) == 1).collect();
        if leaves.is_empty() {
            continue;
        }
        for v in leaves {
            let report = verify_leaf_recursion(&g, v, FieldSpec::Rationals).unwrap();
            assert!(report.pass, "{g}, leaf {v}: {:?}", report.violations);
        }
        graphs_with_leaf += 1;
    }
    finish("9 leaf recursion (fixture + 100 random graphs)", started, Duration::from_secs(600));
}
