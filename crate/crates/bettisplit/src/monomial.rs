//! Exact monomials and monomial ideals with minimal generating sets.
//!
//! A [`Multidegree`] is an exponent vector in `Z^n_{>=0}`; squarefree
//! multidegrees double as subsets of the variable index set `{1,..,n}` via a
//! bitmask view. A [`MonomialIdeal`] stores only its divisibility-minimal
//! generators, sorted lexicographically on exponent vectors, so structural
//! equality is ideal equality.

use std::fmt;

use crate::error::{Error, Result};

/// Exponent vector in `Z^n_{>=0}`. The vector length is the ambient variable
/// count; entries index variables `x1..xn`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multidegree {
    exponents: Vec<u32>,
}

impl Multidegree {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self { exponents }
    }

    /// All-zero vector (degree of the unit monomial).
    pub fn zero(n: usize) -> Self {
        Self { exponents: vec![0; n] }
    }

    /// Standard basis vector for variable `v` (1-indexed).
    pub fn unit_vector(n: usize, v: usize) -> Result<Self> {
        if v == 0 || v > n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        let mut e = vec![0; n];
        e[v - 1] = 1;
        Ok(Self { exponents: e })
    }

    /// Squarefree vector with support exactly the 1-indexed variables in
    /// `mask` (bit `i` stands for variable `i+1`).
    pub fn from_support_mask(n: usize, mask: u32) -> Self {
        let exponents = (0..n).map(|i| (mask >> i) & 1).collect();
        Self { exponents }
    }

    pub fn ambient(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn exponent(&self, v: usize) -> u32 {
        self.exponents[v - 1]
    }

    pub fn total_degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// All entries in `{0,1}`.
    pub fn is_squarefree(&self) -> bool {
        self.exponents.iter().all(|&e| e <= 1)
    }

    /// Bitmask of variables with nonzero exponent (bit `i` = variable `i+1`).
    pub fn support_mask(&self) -> u32 {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0, |m, (i, _)| m | (1 << i))
    }

    /// 1-indexed variables with nonzero exponent.
    pub fn support(&self) -> Vec<usize> {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Componentwise `self >= other`.
    pub fn dominates(&self, other: &Self) -> bool {
        debug_assert_eq!(self.ambient(), other.ambient());
        self.exponents.iter().zip(&other.exponents).all(|(a, b)| a >= b)
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.ambient(), other.ambient());
        Self {
            exponents: self.exponents.iter().zip(&other.exponents).map(|(a, b)| a + b).collect(),
        }
    }

    /// Componentwise difference; `None` when any entry would go negative.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        debug_assert_eq!(self.ambient(), other.ambient());
        let mut exponents = Vec::with_capacity(self.exponents.len());
        for (a, b) in self.exponents.iter().zip(&other.exponents) {
            exponents.push(a.checked_sub(*b)?);
        }
        Some(Self { exponents })
    }

    pub fn componentwise_max(&self, other: &Self) -> Self {
        debug_assert_eq!(self.ambient(), other.ambient());
        Self {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }
}

/// A monomial, identified with its exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    degree: Multidegree,
}

impl Monomial {
    pub fn new(degree: Multidegree) -> Self {
        Self { degree }
    }

    pub fn unit(n: usize) -> Self {
        Self { degree: Multidegree::zero(n) }
    }

    /// The variable `x_v` as a monomial.
    pub fn variable(n: usize, v: usize) -> Result<Self> {
        Ok(Self { degree: Multidegree::unit_vector(n, v)? })
    }

    /// `x^A` for a set of 1-indexed variables given as a bitmask.
    pub fn from_support_mask(n: usize, mask: u32) -> Self {
        Self { degree: Multidegree::from_support_mask(n, mask) }
    }

    /// `x^A` for 1-indexed variables listed in `vars`.
    pub fn from_vars(n: usize, vars: &[usize]) -> Result<Self> {
        let mut e = vec![0u32; n];
        for &v in vars {
            if v == 0 || v > n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            e[v - 1] = 1;
        }
        Ok(Self { degree: Multidegree::new(e) })
    }

    pub fn degree(&self) -> &Multidegree {
        &self.degree
    }

    pub fn ambient(&self) -> usize {
        self.degree.ambient()
    }

    pub fn is_unit(&self) -> bool {
        self.degree.is_zero()
    }

    pub fn total_degree(&self) -> u32 {
        self.degree.total_degree()
    }

    pub fn is_squarefree(&self) -> bool {
        self.degree.is_squarefree()
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.degree.dominates(&self.degree)
    }

    pub fn multiply(&self, other: &Self) -> Self {
        Self { degree: self.degree.add(other.degree()) }
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Self { degree: self.degree.componentwise_max(&other.degree) }
    }

    /// Exact quotient `self / other`; `None` when `other` does not divide.
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        Some(Self { degree: self.degree.checked_sub(&other.degree)? })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.degree.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

/// A monomial ideal in a fixed ambient ring, stored as its antichain of
/// minimal generators in descending lexicographic order on exponent
/// vectors (so `x1`-dominant generators print first).
///
/// The zero ideal has no generators; the unit ideal has the single unit
/// monomial as its generator. These are distinct values.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ambient_n: usize,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    /// The zero ideal `(0)`.
    pub fn zero(n: usize) -> Self {
        Self { ambient_n: n, generators: Vec::new() }
    }

    /// The unit ideal `(1)`.
    pub fn unit(n: usize) -> Self {
        Self { ambient_n: n, generators: vec![Monomial::unit(n)] }
    }

    /// Principal ideal `(m)`.
    pub fn principal(m: Monomial) -> Self {
        let n = m.ambient();
        Self { ambient_n: n, generators: vec![m] }
    }

    pub fn ambient(&self) -> usize {
        self.ambient_n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_unit()
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(Monomial::is_squarefree)
    }

    /// Componentwise max of all generator degrees (zero vector for the zero
    /// ideal). Every nonzero Betti degree of the ideal lies below this.
    pub fn generator_lcm(&self) -> Multidegree {
        self.generators
            .iter()
            .fold(Multidegree::zero(self.ambient_n), |acc, g| acc.componentwise_max(g.degree()))
    }

    /// True iff some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        if m.ambient() != self.ambient_n {
            return Err(Error::AmbientMismatch { left: self.ambient_n, right: m.ambient() });
        }
        Ok(self.generators.iter().any(|g| g.divides(m)))
    }

    /// Ideal sum: minimalized union of the generators.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        if other.ambient_n != self.ambient_n {
            return Err(Error::AmbientMismatch { left: self.ambient_n, right: other.ambient_n });
        }
        let gens: Vec<Monomial> =
            self.generators.iter().chain(&other.generators).cloned().collect();
        minimalize(self.ambient_n, gens)
    }

    /// Ideal intersection via pairwise lcms of the generators.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        if other.ambient_n != self.ambient_n {
            return Err(Error::AmbientMismatch { left: self.ambient_n, right: other.ambient_n });
        }
        let mut gens = Vec::with_capacity(self.generators.len() * other.generators.len());
        for a in &self.generators {
            for b in &other.generators {
                gens.push(a.lcm(b));
            }
        }
        minimalize(self.ambient_n, gens)
    }

    /// Multiply every generator by `m`. Divisibility among the generators is
    /// unchanged, so the result is still an antichain.
    pub fn scale(&self, m: &Monomial) -> Result<Self> {
        if m.ambient() != self.ambient_n {
            return Err(Error::AmbientMismatch { left: self.ambient_n, right: m.ambient() });
        }
        // shifting by a fixed monomial preserves the canonical order
        let generators: Vec<Monomial> = self.generators.iter().map(|g| g.multiply(m)).collect();
        Ok(Self { ambient_n: self.ambient_n, generators })
    }

    /// Reinterpret in a larger ambient ring, padding exponent vectors with
    /// zeros on the right.
    pub fn extend_ambient(&self, n: usize) -> Result<Self> {
        if n < self.ambient_n {
            return Err(Error::AmbientMismatch { left: self.ambient_n, right: n });
        }
        let generators = self
            .generators
            .iter()
            .map(|g| {
                let mut e = g.degree().exponents().to_vec();
                e.resize(n, 0);
                Monomial::new(Multidegree::new(e))
            })
            .collect();
        Ok(Self { ambient_n: n, generators })
    }

    /// Reinterpret in a smaller ambient ring; every generator must be
    /// supported on the first `n` variables.
    pub fn restrict_ambient(&self, n: usize) -> Result<Self> {
        for g in &self.generators {
            if g.degree().exponents()[n..].iter().any(|&e| e > 0) {
                return Err(Error::AmbientMismatch { left: self.ambient_n, right: n });
            }
        }
        let generators = self
            .generators
            .iter()
            .map(|g| Monomial::new(Multidegree::new(g.degree().exponents()[..n].to_vec())))
            .collect();
        Ok(Self { ambient_n: n, generators })
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (k, g) in self.generators.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// Build a [`MonomialIdeal`] from an arbitrary generating set: drops every
/// monomial divisible by another one and sorts the survivors canonically.
pub fn minimalize(ambient_n: usize, gens: Vec<Monomial>) -> Result<MonomialIdeal> {
    for g in &gens {
        if g.ambient() != ambient_n {
            return Err(Error::AmbientMismatch { left: ambient_n, right: g.ambient() });
        }
    }
    let mut sorted = gens;
    sorted.sort_by(|a, b| b.cmp(a));
    sorted.dedup();
    let mut keep = Vec::with_capacity(sorted.len());
    'outer: for (k, g) in sorted.iter().enumerate() {
        for (j, h) in sorted.iter().enumerate() {
            if j != k && h.divides(g) {
                // equal monomials were deduped, so a divisor here is proper
                continue 'outer;
            }
        }
        keep.push(g.clone());
    }
    Ok(MonomialIdeal { ambient_n, generators: keep })
}
