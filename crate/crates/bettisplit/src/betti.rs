//! Multigraded Betti numbers of monomial ideals by two independent methods.
//!
//! The primary route computes, per multidegree `a`, the reduced homology of
//! the upper Koszul complex `K^a(I)` (faces `W ⊆ supp(a)` with
//! `x^a / x^W ∈ I`): the Betti number at homological index `i` and degree
//! `a` is `dim H~_{i-1}(K^a(I))`. The oracle route reads the same numbers
//! off the multidegree strands of the Taylor complex on the generator set.
//! The two are computed from unrelated chain complexes and are cross-checked
//! against each other throughout the test suite.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::linalg::{rank, FieldSpec, SparseMatrix};
use crate::monomial::{Monomial, MonomialIdeal, Multidegree};

/// Hard cap on the ambient size of a full squarefree table sweep (`2^n`
/// multidegree strands).
pub const MAX_TABLE_AMBIENT: usize = 16;

/// Hard cap on the generator count of Taylor-complex computations (`2^r`
/// generator subsets).
pub const MAX_TAYLOR_GENERATORS: usize = 18;

/// Map `(homological index i, multidegree a) -> Betti number`, zeros never
/// stored. Graded Betti numbers are derived sums, never stored separately.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, Multidegree), usize>,
}

impl BettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, i: usize, a: Multidegree, value: usize) {
        if value > 0 {
            self.entries.insert((i, a), value);
        }
    }

    pub fn get(&self, i: usize, a: &Multidegree) -> usize {
        self.entries.get(&(i, a.clone())).copied().unwrap_or(0)
    }

    /// Graded Betti number: sum over multidegrees of total degree `j`.
    pub fn graded(&self, i: usize, j: u32) -> usize {
        self.entries
            .iter()
            .filter(|((idx, a), _)| *idx == i && a.total_degree() == j)
            .map(|(_, v)| v)
            .sum()
    }

    /// Entries in `(i, a)` lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &Multidegree, usize)> {
        self.entries.iter().map(|((i, a), &v)| (*i, a, v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Largest homological index with a nonzero entry.
    pub fn max_index(&self) -> Option<usize> {
        self.entries.keys().map(|(i, _)| *i).max()
    }

    /// Largest total degree with a nonzero entry.
    pub fn max_total_degree(&self) -> Option<u32> {
        self.entries.keys().map(|(_, a)| a.total_degree()).max()
    }

    /// All nonzero graded positions `(i, j)`.
    pub fn graded_positions(&self) -> Vec<(usize, u32)> {
        let mut positions: Vec<(usize, u32)> =
            self.entries.keys().map(|(i, a)| (*i, a.total_degree())).collect();
        positions.sort_unstable();
        positions.dedup();
        positions
    }
}

impl std::fmt::Display for BettiTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, a, v) in self.iter() {
            let digits: String = a.exponents().iter().map(|e| {
                debug_assert!(*e <= 9);
                char::from_digit(*e % 10, 10).unwrap()
            }).collect();
            writeln!(f, "{i}  {digits}  {v}")?;
        }
        Ok(())
    }
}

/// The upper Koszul complex of `ideal` at multidegree `a`: faces are the
/// subsets `W` of `supp(a)` with `x^a / x^W` in the ideal, relabeled onto
/// ground elements `0..|supp(a)|`.
///
/// The complex is void exactly when `x^a` is outside the ideal and
/// irrelevant exactly when `x^a` is a minimal generator.
pub fn upper_koszul_complex(ideal: &MonomialIdeal, a: &Multidegree) -> SimplicialComplex {
    let support = a.support();
    let s = support.len();
    let mut faces = Vec::new();
    for w in 0u32..(1 << s) {
        let mut exps = a.exponents().to_vec();
        for (k, &v) in support.iter().enumerate() {
            if w >> k & 1 == 1 {
                exps[v - 1] -= 1;
            }
        }
        let quotient = Monomial::new(Multidegree::new(exps));
        if ideal.contains(&quotient).expect("ambient matches") {
            faces.push(w);
        }
    }
    SimplicialComplex::new(s, faces).expect("divisibility is inherited by divisors")
}

/// Nonzero Betti numbers of `ideal` in the single multidegree `a`, as
/// `(homological index, value)` pairs.
fn koszul_strand(ideal: &MonomialIdeal, a: &Multidegree, field: FieldSpec) -> Vec<(usize, usize)> {
    let complex = upper_koszul_complex(ideal, a);
    complex
        .reduced_homology_dims(field)
        .into_iter()
        .filter(|&(_, v)| v > 0)
        .map(|(d, v)| ((d + 1) as usize, v))
        .collect()
}

/// The multigraded Betti number of `ideal` at homological index `i` and
/// multidegree `a`, over `field`.
pub fn betti_multidegree(
    ideal: &MonomialIdeal,
    i: usize,
    a: &Multidegree,
    field: FieldSpec,
) -> usize {
    let complex = upper_koszul_complex(ideal, a);
    complex
        .reduced_homology_dims(field)
        .get(&(i as i32 - 1))
        .copied()
        .unwrap_or(0)
}

/// The full multigraded Betti table of `ideal` over `field`.
///
/// Squarefree ideals sweep all squarefree multidegrees inside the ideal
/// through the Koszul route, strand by strand in parallel. Ideals with
/// higher exponents are routed to the Taylor oracle, whose strand support
/// (lcms of generator subsets) is finite for any monomial ideal.
pub fn betti_table(ideal: &MonomialIdeal, field: FieldSpec) -> Result<BettiTable> {
    if !ideal.is_squarefree() {
        return taylor_table(ideal, field);
    }
    let n = ideal.ambient();
    if n > MAX_TABLE_AMBIENT {
        return Err(Error::BudgetExceeded(format!(
            "table sweep needs 2^{n} strands (limit 2^{MAX_TABLE_AMBIENT})"
        )));
    }
    let strands: Vec<((usize, Multidegree), usize)> = (0u32..(1 << n))
        .into_par_iter()
        .flat_map_iter(|mask| {
            let a = Multidegree::from_support_mask(n, mask);
            let inside = ideal
                .contains(&Monomial::new(a.clone()))
                .expect("ambient matches");
            let entries: Vec<((usize, Multidegree), usize)> = if inside {
                koszul_strand(ideal, &a, field)
                    .into_iter()
                    .map(|(i, v)| ((i, a.clone()), v))
                    .collect()
            } else {
                Vec::new()
            };
            entries.into_iter()
        })
        .collect();
    let mut table = BettiTable::new();
    for ((i, a), v) in strands {
        table.insert(i, a, v);
    }
    Ok(table)
}

// ---------------------------------------------------------------------------
// Taylor oracle
// ---------------------------------------------------------------------------

/// Multidegree strand of the Taylor complex on the generators of `ideal`.
///
/// In homological index `i` the basis is the set of generator subsets `S`
/// of size `i + 1` whose lcm is `x^a`; the differential drops one generator
/// with alternating sign, keeping only terms whose lcm is unchanged.
struct TaylorStrand {
    /// subset masks grouped by homological index
    basis: Vec<Vec<u32>>,
}

impl TaylorStrand {
    fn rank_of_boundary(&self, i: usize, field: FieldSpec) -> usize {
        if i == 0 || i >= self.basis.len() {
            return 0;
        }
        let cols = &self.basis[i];
        let rows = &self.basis[i - 1];
        if cols.is_empty() || rows.is_empty() {
            return 0;
        }
        let index: BTreeMap<u32, usize> =
            rows.iter().enumerate().map(|(k, &m)| (m, k)).collect();
        let mut matrix = SparseMatrix::new(rows.len(), cols.len());
        for (col, &subset) in cols.iter().enumerate() {
            let mut sign = 1i64;
            let mut bits = subset;
            while bits != 0 {
                let b = bits & bits.wrapping_neg();
                // dropping this generator keeps the strand only when the
                // smaller subset still has the same lcm
                if let Some(&row) = index.get(&(subset & !b)) {
                    matrix.push(row, col, sign);
                }
                sign = -sign;
                bits &= bits - 1;
            }
        }
        rank(&matrix, field)
    }

    fn homology_dim(&self, i: usize, field: FieldSpec) -> usize {
        let c = self.basis.get(i).map_or(0, Vec::len);
        c - self.rank_of_boundary(i, field) - self.rank_of_boundary(i + 1, field)
    }
}

fn taylor_strand(ideal: &MonomialIdeal, a: &Multidegree) -> TaylorStrand {
    let gens = ideal.generators();
    let r = gens.len();
    let mut basis = vec![Vec::new(); r];
    for subset in 1u32..(1 << r) {
        let lcm = subset_lcm(gens, subset, ideal.ambient());
        if lcm == *a {
            basis[subset.count_ones() as usize - 1].push(subset);
        }
    }
    TaylorStrand { basis }
}

fn subset_lcm(gens: &[Monomial], subset: u32, n: usize) -> Multidegree {
    let mut lcm = Multidegree::zero(n);
    let mut bits = subset;
    while bits != 0 {
        let k = bits.trailing_zeros() as usize;
        lcm = lcm.componentwise_max(gens[k].degree());
        bits &= bits - 1;
    }
    lcm
}

fn check_taylor_budget(ideal: &MonomialIdeal) -> Result<()> {
    let r = ideal.num_generators();
    if r > MAX_TAYLOR_GENERATORS {
        return Err(Error::BudgetExceeded(format!(
            "Taylor complex needs 2^{r} subsets (limit 2^{MAX_TAYLOR_GENERATORS})"
        )));
    }
    Ok(())
}

/// Betti number at `(i, a)` read off the Taylor-complex strand. Independent
/// of the Koszul route; must agree with [`betti_multidegree`] everywhere.
pub fn taylor_betti(
    ideal: &MonomialIdeal,
    i: usize,
    a: &Multidegree,
    field: FieldSpec,
) -> Result<usize> {
    check_taylor_budget(ideal)?;
    Ok(taylor_strand(ideal, a).homology_dim(i, field))
}

/// Full Betti table via the Taylor complex: every candidate multidegree is
/// the lcm of some generator subset.
pub fn taylor_table(ideal: &MonomialIdeal, field: FieldSpec) -> Result<BettiTable> {
    check_taylor_budget(ideal)?;
    let gens = ideal.generators();
    let r = gens.len();
    let n = ideal.ambient();
    let mut degrees: Vec<Multidegree> = (1u32..(1u32 << r))
        .map(|subset| subset_lcm(gens, subset, n))
        .collect();
    degrees.sort();
    degrees.dedup();

    let strands: Vec<((usize, Multidegree), usize)> = degrees
        .into_par_iter()
        .flat_map_iter(|a| {
            let strand = taylor_strand(ideal, &a);
            let entries: Vec<((usize, Multidegree), usize)> = (0..r)
                .filter_map(|i| {
                    let v = strand.homology_dim(i, field);
                    (v > 0).then(|| ((i, a.clone()), v))
                })
                .collect();
            entries.into_iter()
        })
        .collect();
    let mut table = BettiTable::new();
    for ((i, a), v) in strands {
        table.insert(i, a, v);
    }
    Ok(table)
}
