use super::field::Fp;
use super::matrix::Matrix;
use crate::error::{Error, Result};

/// A subspace of `F_p^n`, stored by its reduced row-echelon basis.
///
/// Because the echelon form is canonical, two subspaces are equal exactly
/// when their stored bases agree entrywise, so `PartialEq` is subspace equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Fp, ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zeros(field, 0, ambient), pivots: Vec::new() }
    }

    pub fn full(field: Fp, ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::identity(field, ambient), pivots: (0..ambient).collect() }
    }

    /// Span of the given vectors.
    pub fn from_vectors(field: Fp, ambient: usize, vecs: Vec<Vec<u32>>) -> Self {
        Self::from_matrix(Matrix::from_rows(field, ambient, &vecs))
    }

    /// Row space of `m`.
    pub fn from_matrix(mut m: Matrix) -> Self {
        let ambient = m.cols();
        let pivots = m.rref_in_place();
        Subspace { ambient, basis: m, pivots }
    }

    pub fn field(&self) -> Fp {
        self.basis.field()
    }
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }
    pub fn dim(&self) -> usize {
        self.pivots.len()
    }
    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }
    /// Echelon basis, one vector per row.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }
    pub fn basis_vecs(&self) -> Vec<Vec<u32>> {
        self.basis.row_vecs()
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates outside the pivot set; their unit vectors span a complement.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut is_p = vec![false; self.ambient];
        for &p in &self.pivots {
            is_p[p] = true;
        }
        (0..self.ambient).filter(|&c| !is_p[c]).collect()
    }

    /// Reduces `v` modulo the subspace: the result vanishes on every pivot column.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.ambient);
        let f = self.field();
        let mut out = v.to_vec();
        for (i, &pc) in self.pivots.iter().enumerate() {
            let c = out[pc];
            if c == 0 {
                continue;
            }
            let neg = f.neg(c);
            for (o, &b) in out.iter_mut().zip(self.basis.row(i)) {
                *o = f.mul_add(*o, neg, b);
            }
        }
        out
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Coordinates of `v` with respect to the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[u32]) -> Option<Vec<u32>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&pc| v[pc]).collect())
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: other.ambient });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(Subspace::from_matrix(self.basis.vstack(&other.basis)))
    }

    /// Intersection via the Zassenhaus stacked-basis reduction.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let f = self.field();
        let n = self.ambient;
        let top = self.basis.hstack(&self.basis);
        let bottom = other.basis.hstack(&Matrix::zeros(f, other.dim(), n));
        let (r, piv) = top.vstack(&bottom).rref();
        let mut vecs = Vec::new();
        for (i, &pc) in piv.iter().enumerate() {
            if pc >= n {
                vecs.push(r.row(i)[n..].to_vec());
            }
        }
        Ok(Subspace::from_vectors(f, n, vecs))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && (0..self.dim()).all(|i| other.contains(self.basis.row(i)))
    }
}
