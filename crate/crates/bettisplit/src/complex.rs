//! Simplicial complexes on small ground sets and reduced homology over a
//! field.
//!
//! Faces are bitmasks over ground elements `0..ground`. Two degenerate
//! complexes carry different homology and are kept distinct: the *void*
//! complex has no faces at all, the *irrelevant* complex has exactly the
//! empty face and one-dimensional reduced homology in degree -1.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::linalg::{rank, FieldSpec, SparseMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    ground: usize,
    faces: BTreeSet<u32>,
}

impl SimplicialComplex {
    /// The complex with no faces.
    pub fn void(ground: usize) -> Self {
        Self { ground, faces: BTreeSet::new() }
    }

    /// The complex whose only face is the empty face.
    pub fn irrelevant(ground: usize) -> Self {
        Self { ground, faces: BTreeSet::from([0]) }
    }

    /// Build from an explicit face list, validating downward closure.
    pub fn new(ground: usize, faces: impl IntoIterator<Item = u32>) -> Result<Self> {
        let faces: BTreeSet<u32> = faces.into_iter().collect();
        for &face in &faces {
            debug_assert!(ground >= 32 - face.leading_zeros() as usize);
            let mut bits = face;
            while bits != 0 {
                let b = bits & bits.wrapping_neg();
                if !faces.contains(&(face & !b)) {
                    let verts = (0..ground).filter(|i| face >> i & 1 == 1).collect();
                    return Err(Error::NotDownwardClosed { face: verts });
                }
                bits &= bits - 1;
            }
        }
        Ok(Self { ground, faces })
    }

    /// Build as the downward closure of the given facets.
    pub fn from_facets(ground: usize, facets: impl IntoIterator<Item = u32>) -> Self {
        let mut faces = BTreeSet::new();
        for facet in facets {
            // enumerate all submasks of facet, including the empty face
            let mut sub = facet;
            loop {
                faces.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & facet;
            }
        }
        Self { ground, faces }
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn is_irrelevant(&self) -> bool {
        self.faces.len() == 1 && self.faces.contains(&0)
    }

    pub fn faces(&self) -> impl Iterator<Item = u32> + '_ {
        self.faces.iter().copied()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    /// Dimension of the complex; `None` for the void complex. The irrelevant
    /// complex has dimension -1.
    pub fn dim(&self) -> Option<i32> {
        self.faces.iter().map(|f| f.count_ones() as i32 - 1).max()
    }

    /// Faces of dimension `d` (cardinality `d + 1`), sorted by bitmask.
    fn faces_of_dim(&self, d: i32) -> Vec<u32> {
        let want = (d + 1) as u32;
        self.faces.iter().copied().filter(|f| f.count_ones() == want).collect()
    }

    /// Boundary matrix from `d`-faces to `(d-1)`-faces with the standard
    /// alternating-sign rule on sorted vertex lists.
    fn boundary_matrix(&self, d: i32, lower: &[u32], upper: &[u32]) -> SparseMatrix {
        let _ = d;
        let index: BTreeMap<u32, usize> =
            lower.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let mut m = SparseMatrix::new(lower.len(), upper.len());
        for (j, &face) in upper.iter().enumerate() {
            let mut sign = 1i64;
            let mut bits = face;
            while bits != 0 {
                let b = bits & bits.wrapping_neg();
                let sub = face & !b;
                let i = index[&sub];
                m.push(i, j, sign);
                sign = -sign;
                bits &= bits - 1;
            }
        }
        m
    }

    /// Dimensions of reduced homology over `field`, keyed by degree `i` for
    /// `i` in `-1..=dim`. The void complex yields an empty map; absent keys
    /// mean zero.
    pub fn reduced_homology_dims(&self, field: FieldSpec) -> BTreeMap<i32, usize> {
        let Some(dim) = self.dim() else {
            return BTreeMap::new();
        };
        // faces per dimension, -1..=dim
        let by_dim: Vec<Vec<u32>> = (-1..=dim).map(|d| self.faces_of_dim(d)).collect();
        let idx = |d: i32| (d + 1) as usize;

        // rank of the boundary map leaving dimension d, for d in 0..=dim
        let mut boundary_rank = vec![0usize; (dim + 2) as usize];
        for d in 0..=dim {
            let lower = &by_dim[idx(d - 1)];
            let upper = &by_dim[idx(d)];
            if !lower.is_empty() && !upper.is_empty() {
                let m = self.boundary_matrix(d, lower, upper);
                boundary_rank[idx(d)] = rank(&m, field);
            }
        }

        let mut dims = BTreeMap::new();
        for d in -1..=dim {
            let f = by_dim[idx(d)].len();
            let rank_out = if d >= 0 { boundary_rank[idx(d)] } else { 0 };
            let rank_in = if d < dim { boundary_rank[idx(d + 1)] } else { 0 };
            dims.insert(d, f - rank_out - rank_in);
        }
        dims
    }
}

/// Reduced homology dimension in a single degree.
pub fn reduced_homology_dim(complex: &SimplicialComplex, degree: i32, field: FieldSpec) -> usize {
    complex.reduced_homology_dims(field).get(&degree).copied().unwrap_or(0)
}
