//! Exact rank computation over the rationals and over prime fields.
//!
//! This is the only numerical kernel in the crate. All matrices arise as
//! boundary maps with entries in `{-1, 0, 1}`, stay small at desk scale, and
//! are eliminated densely. No floating point anywhere.

use num::{BigRational, Zero};

use crate::error::{Error, Result};

/// Coefficient field for rank computations.
///
/// The rationals are the correctness default; a prime field is the fast
/// path. Betti numbers of monomial ideals can depend on the characteristic,
/// so the two are never silently interchanged.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    #[default]
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    /// Default prime for the fast path.
    pub const DEFAULT_PRIME: u64 = 32003;

    /// Validated prime-field constructor.
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec::Prime(p))
    }
}

impl std::fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Integer matrix stored as a list of nonzero entries.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize, i64)>,
}

impl SparseMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: Vec::new() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn num_entries(&self) -> usize {
        self.entries.len()
    }

    /// Record a nonzero entry. Zeros are dropped; duplicate positions are
    /// not allowed by the callers (boundary maps are built position by
    /// position).
    pub fn push(&mut self, row: usize, col: usize, value: i64) {
        assert!(row < self.rows && col < self.cols, "entry out of range");
        if value != 0 {
            self.entries.push((row, col, value));
        }
    }

    pub fn transpose(&self) -> Self {
        Self {
            rows: self.cols,
            cols: self.rows,
            entries: self.entries.iter().map(|&(r, c, v)| (c, r, v)).collect(),
        }
    }

    fn dense<T: Clone>(&self, zero: T, mut lift: impl FnMut(i64) -> T) -> Vec<Vec<T>> {
        let mut m = vec![vec![zero; self.cols]; self.rows];
        for &(r, c, v) in &self.entries {
            m[r][c] = lift(v);
        }
        m
    }
}

/// Exact rank of `m` over the field `field`.
///
/// Gaussian elimination with the first nonzero pivot in row-major order;
/// rational pivot rows are normalized before elimination, prime fields use
/// modular inverses.
pub fn rank(m: &SparseMatrix, field: FieldSpec) -> usize {
    if m.rows == 0 || m.cols == 0 || m.entries.is_empty() {
        return 0;
    }
    match field {
        FieldSpec::Rationals => rank_rationals(m),
        FieldSpec::Prime(p) => rank_prime(m, p),
    }
}

fn rank_rationals(m: &SparseMatrix) -> usize {
    let mut a = m.dense(BigRational::zero(), |v| BigRational::from_integer(v.into()));
    let (rows, cols) = (m.rows, m.cols);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        let inv = a[rank][col].clone();
        for x in &mut a[rank][col..] {
            *x /= inv.clone();
        }
        let (top, below) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in below {
            if row[col].is_zero() {
                continue;
            }
            let factor = std::mem::replace(&mut row[col], BigRational::zero());
            for (x, p) in row[col + 1..].iter_mut().zip(&pivot_row[col + 1..]) {
                let delta = &factor * p;
                if !delta.is_zero() {
                    *x -= delta;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

fn rank_prime(m: &SparseMatrix, p: u64) -> usize {
    let lift = |v: i64| -> u64 {
        let r = v.rem_euclid(p as i64) as u64;
        r % p
    };
    let mut a = m.dense(0u64, lift);
    let (rows, cols) = (m.rows, m.cols);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, pivot);
        let inv = mod_inverse(a[rank][col], p);
        for x in &mut a[rank][col..] {
            *x = *x * inv % p;
        }
        let (top, below) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in below {
            let factor = row[col];
            if factor == 0 {
                continue;
            }
            for (x, q) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                let sub = factor * q % p;
                *x = (*x + p - sub) % p;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p, valid since p is prime and a != 0 mod p.
    debug_assert!(!a.is_multiple_of(p));
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}
