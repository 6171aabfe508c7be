use std::sync::Arc;

use super::GradedAlgebra;
use crate::error::{Error, Result};
use crate::linalg::Subspace;

/// A two-sided ideal, stored as an echelon subspace of the algebra.
#[derive(Clone, Debug)]
pub struct TwoSidedIdeal {
    algebra: Arc<GradedAlgebra>,
    space: Subspace,
}

impl PartialEq for TwoSidedIdeal {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra) && self.space == other.space
    }
}

impl TwoSidedIdeal {
    pub fn zero(a: &Arc<GradedAlgebra>) -> Self {
        TwoSidedIdeal { algebra: a.clone(), space: Subspace::zero(a.field(), a.dim()) }
    }

    pub fn unit(a: &Arc<GradedAlgebra>) -> Self {
        TwoSidedIdeal { algebra: a.clone(), space: Subspace::full(a.field(), a.dim()) }
    }

    /// The two-sided ideal generated by the given elements: `span{b g b'}`.
    pub fn generated_by(a: &Arc<GradedAlgebra>, gens: Vec<Vec<u32>>) -> Self {
        let f = a.field();
        let d = a.dim();
        let mut vecs = Vec::new();
        for g in &gens {
            for l in 0..d {
                let lg = a.multiply_vecs(&a.basis_element(l).0, g);
                if lg.iter().all(|&c| c == 0) {
                    continue;
                }
                for r in 0..d {
                    vecs.push(a.multiply_vecs(&lg, &a.basis_element(r).0));
                }
            }
        }
        TwoSidedIdeal { algebra: a.clone(), space: Subspace::from_vectors(f, d, vecs) }
    }

    /// `I_i = A (1 − e_i) A`.
    pub fn idempotent_ideal(a: &Arc<GradedAlgebra>, i: usize) -> Result<Self> {
        if i >= a.vertex_count() {
            return Err(Error::InvalidVertex { vertex: i + 1, count: a.vertex_count() });
        }
        let mut g = a.unit_element().0;
        g[a.idempotent(i)] = 0;
        Ok(Self::generated_by(a, vec![g]))
    }

    /// `A e A` for `e` the sum of idempotents at `vertices`.
    pub fn vertex_ideal(a: &Arc<GradedAlgebra>, vertices: &[usize]) -> Self {
        let mut g = vec![0; a.dim()];
        for &v in vertices {
            g[a.idempotent(v)] = 1;
        }
        Self::generated_by(a, vec![g])
    }

    /// `I_{i_1} ⋯ I_{i_k}` for a word of 0-based vertices; the empty word gives `A`.
    pub fn for_word(a: &Arc<GradedAlgebra>, word: &[usize]) -> Result<Self> {
        let mut acc = Self::unit(a);
        for &i in word {
            let next = Self::idempotent_ideal(a, i)?;
            acc = acc.product(&next)?;
        }
        Ok(acc)
    }

    pub fn algebra(&self) -> &Arc<GradedAlgebra> {
        &self.algebra
    }
    pub fn space(&self) -> &Subspace {
        &self.space
    }
    pub fn dim(&self) -> usize {
        self.space.dim()
    }
    pub fn contains(&self, v: &[u32]) -> bool {
        self.space.contains(v)
    }

    /// Span of all products of basis elements of `self` and `other`.
    pub fn product(&self, other: &TwoSidedIdeal) -> Result<TwoSidedIdeal> {
        if !Arc::ptr_eq(&self.algebra, &other.algebra) {
            return Err(Error::AlgebraMismatch);
        }
        let a = &self.algebra;
        let d = a.dim();
        let xs = self.space.basis_vecs();
        let ys = other.space.basis_vecs();
        let mut vecs = Vec::with_capacity(xs.len() * ys.len());
        for x in &xs {
            for y in &ys {
                let p = a.multiply_vecs(x, y);
                if p.iter().any(|&c| c != 0) {
                    vecs.push(p);
                }
            }
        }
        Ok(TwoSidedIdeal { algebra: a.clone(), space: Subspace::from_vectors(a.field(), d, vecs) })
    }

    pub fn is_idempotent(&self) -> bool {
        self.product(self).map(|sq| sq.space == self.space).unwrap_or(false)
    }

    /// Checks closure under left and right multiplication by every basis element.
    pub fn is_two_sided(&self) -> bool {
        let a = &self.algebra;
        let d = a.dim();
        self.space.basis_vecs().iter().all(|x| {
            (0..d).all(|b| {
                let e = a.basis_element(b).0;
                self.space.contains(&a.multiply_vecs(&e, x)) && self.space.contains(&a.multiply_vecs(x, &e))
            })
        })
    }

    pub fn basis_vecs(&self) -> Vec<Vec<u32>> {
        self.space.basis_vecs()
    }

    pub fn quotient(&self) -> Result<GradedAlgebra> {
        self.algebra.quotient(&self.space)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::preprojective_of_type;
    use crate::linalg::Fp;
    use crate::quiver::DynkinType;

    fn a(n: usize) -> Arc<GradedAlgebra> {
        Arc::new(preprojective_of_type(DynkinType::a(n), Fp::new(1009).unwrap()).unwrap())
    }

    #[test]
    fn trivial_ideals() {
        let a1 = a(1);
        assert_eq!(TwoSidedIdeal::idempotent_ideal(&a1, 0).unwrap().dim(), 0);
        let a3 = a(3);
        let i = TwoSidedIdeal::idempotent_ideal(&a3, 1).unwrap();
        let unit = TwoSidedIdeal::unit(&a3);
        let zero = TwoSidedIdeal::zero(&a3);
        assert_eq!(i.product(&unit).unwrap(), i);
        assert_eq!(i.product(&zero).unwrap(), zero);
        assert!(i.is_two_sided() && i.is_idempotent());
        assert!(zero.is_idempotent() && unit.is_idempotent());
    }

    #[test]
    fn braid_relation_on_ideals() {
        let a3 = a(3);
        let lhs = TwoSidedIdeal::for_word(&a3, &[0, 1, 0]).unwrap();
        let rhs = TwoSidedIdeal::for_word(&a3, &[1, 0, 1]).unwrap();
        assert_eq!(lhs, rhs);
        let c1 = TwoSidedIdeal::for_word(&a3, &[0, 2]).unwrap();
        let c2 = TwoSidedIdeal::for_word(&a3, &[2, 0]).unwrap();
        assert_eq!(c1, c2);
    }

    #[test]
    fn mismatched_algebras() {
        let x = a(2);
        let y = a(2);
        assert!(matches!(TwoSidedIdeal::unit(&x).product(&TwoSidedIdeal::unit(&y)), Err(Error::AlgebraMismatch)));
    }

    #[test]
    fn quotient_by_a_vertex_ideal_kills_other_vertices() {
        let a3 = a(3);
        for i in 0..3 {
            let q = TwoSidedIdeal::idempotent_ideal(&a3, i).unwrap().quotient().unwrap();
            assert_eq!(q.vertex_labels(), &[i]);
        }
        assert_eq!(TwoSidedIdeal::unit(&a3).quotient().unwrap().dim(), 0);
        assert_eq!(TwoSidedIdeal::zero(&a3).quotient().unwrap().dim(), a3.dim());
    }
}
