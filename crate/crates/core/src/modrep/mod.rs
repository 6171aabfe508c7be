//! Finite-dimensional modules over a [`GradedAlgebra`], given as
//! representations of its quiver: one vector space per vertex and one matrix
//! per arrow.
//!
//! Right modules are handled by the same type with [`Side::Right`]: an arrow
//! `α: s → t` then acts from the vertex-`t` space to the vertex-`s` space.

mod construct;
mod decompose;
mod hom;
mod homological;
mod registry;

use std::fmt::Write as _;
use std::sync::{Arc, OnceLock};

use crate::algebra::{GradedAlgebra, Side};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};

pub use construct::{
    injective, module_of_left_ideal, module_of_quotient, module_of_subspace, projective, regular_module, simple,
};
pub use decompose::{decompose, end_algebra, is_indecomposable, EndAlgebra};
pub use hom::{hom_basis, hom_dim, is_isomorphic, is_isomorphic_indecomposable};
pub use homological::{
    cosyzygy, ext_dim, ext_dim_by_resolution, ext_dim_by_stable_hom, in_gen, in_sub, injective_envelope,
    is_self_injective, is_weakly_symmetric, nakayama, projective_cover, stable_hom_dim, syzygy, tensor_dim, tor_dim,
    trace_in,
};
pub use registry::{IndecId, IndecRegistry, RegistryConfig};

struct RepData {
    algebra: Arc<GradedAlgebra>,
    side: Side,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
    actions: OnceLock<Vec<Matrix>>,
}

/// A module: dimension vector plus one matrix per arrow of the algebra.
#[derive(Clone)]
pub struct Representation {
    inner: Arc<RepData>,
}

impl std::fmt::Debug for Representation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Representation({:?}, dims {:?})", self.inner.side, self.inner.dims)
    }
}

impl Representation {
    /// `maps[a]` is the matrix of arrow `a` (indexing `algebra.arrows()`), of
    /// shape `dims[to] × dims[from]` for `(from, to) = algebra.arrow_ends(side, a)`.
    pub fn new(algebra: Arc<GradedAlgebra>, side: Side, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self> {
        if dims.len() != algebra.vertex_count() {
            return Err(Error::DimensionMismatch { expected: algebra.vertex_count(), found: dims.len() });
        }
        if maps.len() != algebra.arrows().len() {
            return Err(Error::DimensionMismatch { expected: algebra.arrows().len(), found: maps.len() });
        }
        for (a, m) in maps.iter().enumerate() {
            let (from, to) = algebra.arrow_ends(side, a);
            if m.rows() != dims[to] || m.cols() != dims[from] {
                return Err(Error::DimensionMismatch { expected: dims[to] * dims[from], found: m.rows() * m.cols() });
            }
        }
        Ok(Representation { inner: Arc::new(RepData { algebra, side, dims, maps, actions: OnceLock::new() }) })
    }

    pub fn zero(algebra: &Arc<GradedAlgebra>, side: Side) -> Self {
        let n = algebra.vertex_count();
        let maps = (0..algebra.arrows().len()).map(|_| Matrix::zeros(algebra.field(), 0, 0)).collect();
        Representation::new(algebra.clone(), side, vec![0; n], maps).expect("zero module is well-formed")
    }

    pub fn algebra(&self) -> &Arc<GradedAlgebra> {
        &self.inner.algebra
    }
    pub fn side(&self) -> Side {
        self.inner.side
    }
    pub fn dims(&self) -> &[usize] {
        &self.inner.dims
    }
    pub fn dim(&self) -> usize {
        self.inner.dims.iter().sum()
    }
    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }
    pub fn arrow_map(&self, a: usize) -> &Matrix {
        &self.inner.maps[a]
    }
    pub fn arrow_maps(&self) -> &[Matrix] {
        &self.inner.maps
    }

    /// Matrix of every basis element of the algebra acting on the module.
    pub fn actions(&self) -> &[Matrix] {
        self.inner.actions.get_or_init(|| {
            let a = &self.inner.algebra;
            let side = self.inner.side;
            let f = a.field();
            let mut out: Vec<Matrix> = Vec::with_capacity(a.dim());
            let mut order: Vec<usize> = (0..a.dim()).collect();
            order.sort_by_key(|&b| a.basis()[b].degree);
            let mut slots: Vec<Option<Matrix>> = vec![None; a.dim()];
            let arrow_of: std::collections::HashMap<usize, usize> =
                a.arrows().iter().enumerate().map(|(i, ar)| (ar.basis, i)).collect();
            for b in order {
                let (from, to) = a.ends(side, b);
                let m = match a.basis()[b].degree {
                    0 => Matrix::identity(f, self.inner.dims[from]),
                    1 => self.inner.maps[arrow_of[&b]].clone(),
                    _ => {
                        let mut acc = Matrix::zeros(f, self.inner.dims[to], self.inner.dims[from]);
                        for &(ar, lower, c) in a.factorisation(side, b) {
                            let lm = slots[lower].as_ref().expect("lower degree computed first");
                            acc.add_scaled(&self.inner.maps[ar].mul(lm), c);
                        }
                        acc
                    }
                };
                slots[b] = Some(m);
            }
            for s in slots {
                out.push(s.expect("every basis element handled"));
            }
            out
        })
    }

    pub fn action(&self, b: usize) -> &Matrix {
        &self.actions()[b]
    }

    /// Checks `ρ(a)ρ(b) = ρ(ab)` for every arrow `a` and basis element `b`,
    /// which forces every relation of the algebra to hold.
    pub fn is_valid(&self) -> bool {
        let a = &self.inner.algebra;
        let side = self.inner.side;
        let f = a.field();
        let acts = self.actions();
        for (ai, ar) in a.arrows().iter().enumerate() {
            for b in 0..a.dim() {
                let (bf, bt) = a.ends(side, b);
                let (af, at) = a.arrow_ends(side, ai);
                if bt != af {
                    continue;
                }
                let lhs = self.inner.maps[ai].mul(&acts[b]);
                let mut rhs = Matrix::zeros(f, self.inner.dims[at], self.inner.dims[bf]);
                for &(k, c) in a.act(side, ar.basis, b) {
                    rhs.add_scaled(&acts[k as usize], c);
                }
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// Errors unless both modules live over the same algebra on the same side.
    pub fn check_compatible(&self, other: &Representation) -> Result<()> {
        if !Arc::ptr_eq(&self.inner.algebra, &other.inner.algebra) || self.inner.side != other.inner.side {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    pub fn ptr_eq(&self, other: &Representation) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
    }

    pub fn direct_sum(parts: &[Representation]) -> Result<Representation> {
        let first = parts.first().ok_or_else(|| Error::Inconsistency("empty direct sum needs an algebra".into()))?;
        for p in parts {
            first.check_compatible(p)?;
        }
        let a = first.algebra().clone();
        let f = a.field();
        let n = a.vertex_count();
        let dims: Vec<usize> = (0..n).map(|v| parts.iter().map(|p| p.dims()[v]).sum()).collect();
        let maps = (0..a.arrows().len())
            .map(|ai| Matrix::block_diag(f, &parts.iter().map(|p| p.arrow_map(ai).clone()).collect::<Vec<_>>()))
            .collect();
        Representation::new(a, first.side(), dims, maps)
    }

    pub fn direct_power(&self, k: usize) -> Representation {
        if k == 0 {
            return Representation::zero(self.algebra(), self.side());
        }
        Representation::direct_sum(&vec![self.clone(); k]).expect("copies are compatible")
    }

    /// `D = Hom_K(−, K)`: transpose every arrow matrix and switch sides.
    pub fn dual(&self) -> Representation {
        let maps = self.inner.maps.iter().map(|m| m.transpose()).collect();
        Representation::new(self.inner.algebra.clone(), self.inner.side.flip(), self.inner.dims.clone(), maps)
            .expect("transposes have the dual shapes")
    }

    /// Dimension vector followed by the arrow matrices in arrow order.
    pub fn dump(&self) -> String {
        let a = &self.inner.algebra;
        let f = a.field();
        let mut s = String::new();
        writeln!(s, "side {:?}", self.inner.side).unwrap();
        writeln!(s, "dims {}", self.inner.dims.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ")).unwrap();
        for (ai, ar) in a.arrows().iter().enumerate() {
            let m = &self.inner.maps[ai];
            let rows: Vec<String> = (0..m.rows())
                .map(|r| m.row(r).iter().map(|&x| f.lift(x).to_string()).collect::<Vec<_>>().join(" "))
                .collect();
            writeln!(s, "{} {}x{} [{}]", ar.name, m.rows(), m.cols(), rows.join("; ")).unwrap();
        }
        s
    }
}

/// A module homomorphism, one matrix per vertex (`dims_target[v] × dims_source[v]`).
#[derive(Clone, Debug)]
pub struct Morphism {
    source: Representation,
    target: Representation,
    maps: Vec<Matrix>,
}

impl Morphism {
    pub fn new(source: Representation, target: Representation, maps: Vec<Matrix>) -> Result<Self> {
        source.check_compatible(&target)?;
        let n = source.dims().len();
        if maps.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: maps.len() });
        }
        for v in 0..n {
            if maps[v].rows() != target.dims()[v] || maps[v].cols() != source.dims()[v] {
                return Err(Error::DimensionMismatch {
                    expected: target.dims()[v] * source.dims()[v],
                    found: maps[v].rows() * maps[v].cols(),
                });
            }
        }
        Ok(Morphism { source, target, maps })
    }

    pub fn identity(x: &Representation) -> Self {
        let f = x.algebra().field();
        let maps = x.dims().iter().map(|&d| Matrix::identity(f, d)).collect();
        Morphism { source: x.clone(), target: x.clone(), maps }
    }

    pub fn zero(x: &Representation, y: &Representation) -> Result<Self> {
        let f = x.algebra().field();
        let maps = x.dims().iter().zip(y.dims()).map(|(&c, &r)| Matrix::zeros(f, r, c)).collect();
        Morphism::new(x.clone(), y.clone(), maps)
    }

    pub fn source(&self) -> &Representation {
        &self.source
    }
    pub fn target(&self) -> &Representation {
        &self.target
    }
    pub fn map(&self, v: usize) -> &Matrix {
        &self.maps[v]
    }
    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &Morphism) -> Result<Morphism> {
        if !self.target.ptr_eq(&g.source) && self.target.dims() != g.source.dims() {
            return Err(Error::AlgebraMismatch);
        }
        let maps = self.maps.iter().zip(&g.maps).map(|(f, g)| g.mul(f)).collect();
        Morphism::new(self.source.clone(), g.target.clone(), maps)
    }

    /// Commutes with every arrow.
    pub fn is_valid(&self) -> bool {
        let a = self.source.algebra();
        (0..a.arrows().len()).all(|ai| {
            let (from, to) = a.arrow_ends(self.source.side(), ai);
            self.maps[to].mul(self.source.arrow_map(ai)) == self.target.arrow_map(ai).mul(&self.maps[from])
        })
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(|m| m.is_zero())
    }

    pub fn is_isomorphism(&self) -> bool {
        self.maps.iter().all(|m| m.is_square() && m.is_invertible())
    }

    pub fn rank(&self) -> usize {
        self.maps.iter().map(|m| m.rank()).sum()
    }

    /// Entries of all vertex matrices, concatenated row-major.
    pub fn flatten(&self) -> Vec<u32> {
        self.maps.iter().flat_map(|m| m.data().iter().copied()).collect()
    }

    pub fn from_flat(source: &Representation, target: &Representation, v: &[u32]) -> Result<Self> {
        let f = source.algebra().field();
        let mut maps = Vec::new();
        let mut off = 0;
        for (&c, &r) in source.dims().iter().zip(target.dims()) {
            maps.push(Matrix::from_vec(f, r, c, v[off..off + r * c].to_vec()));
            off += r * c;
        }
        Morphism::new(source.clone(), target.clone(), maps)
    }

    /// `D(self): D(target) → D(source)`.
    pub fn dual(&self) -> Morphism {
        Morphism {
            source: self.target.dual(),
            target: self.source.dual(),
            maps: self.maps.iter().map(|m| m.transpose()).collect(),
        }
    }

    pub fn add_scaled(&self, other: &Morphism, c: u32) -> Morphism {
        let maps = self
            .maps
            .iter()
            .zip(&other.maps)
            .map(|(a, b)| {
                let mut m = a.clone();
                m.add_scaled(b, c);
                m
            })
            .collect();
        Morphism { source: self.source.clone(), target: self.target.clone(), maps }
    }
}

/// The submodule with vertex spaces `spaces` (must be closed under the action),
/// together with its inclusion.
pub fn submodule(x: &Representation, spaces: &[Subspace]) -> Result<(Representation, Morphism)> {
    let a = x.algebra();
    let side = x.side();
    let f = a.field();
    let dims: Vec<usize> = spaces.iter().map(|s| s.dim()).collect();
    let mut maps = Vec::with_capacity(a.arrows().len());
    for ai in 0..a.arrows().len() {
        let (from, to) = a.arrow_ends(side, ai);
        let m = x.arrow_map(ai);
        let mut out = Matrix::zeros(f, dims[to], dims[from]);
        for (c, b) in spaces[from].basis_vecs().iter().enumerate() {
            let img = m.mul_vec(b);
            let coords = spaces[to]
                .coordinates(&img)
                .ok_or_else(|| Error::Inconsistency("subspace is not closed under the action".into()))?;
            for (r, &v) in coords.iter().enumerate() {
                out.set(r, c, v);
            }
        }
        maps.push(out);
    }
    let sub = Representation::new(a.clone(), side, dims, maps)?;
    let incl = spaces.iter().map(|s| s.basis().transpose()).collect();
    let incl = Morphism::new(sub.clone(), x.clone(), incl)?;
    Ok((sub, incl))
}

/// `x / U` for a submodule with vertex spaces `spaces`, with the projection.
///
/// The quotient at each vertex is coordinatised by the non-pivot columns of
/// the echelon basis of `U`.
pub fn quotient_module(x: &Representation, spaces: &[Subspace]) -> Result<(Representation, Morphism)> {
    let a = x.algebra();
    let side = x.side();
    let f = a.field();
    let comps: Vec<Vec<usize>> = spaces.iter().map(|s| s.non_pivots()).collect();
    let dims: Vec<usize> = comps.iter().map(|c| c.len()).collect();
    let project = |v: usize, vec: &[u32]| -> Vec<u32> {
        let red = spaces[v].reduce(vec);
        comps[v].iter().map(|&c| red[c]).collect()
    };
    let mut maps = Vec::with_capacity(a.arrows().len());
    for ai in 0..a.arrows().len() {
        let (from, to) = a.arrow_ends(side, ai);
        let m = x.arrow_map(ai);
        let mut out = Matrix::zeros(f, dims[to], dims[from]);
        for (c, &col) in comps[from].iter().enumerate() {
            let img = project(to, &m.col(col));
            for (r, &v) in img.iter().enumerate() {
                out.set(r, c, v);
            }
        }
        maps.push(out);
    }
    let q = Representation::new(a.clone(), side, dims.clone(), maps)?;
    let mut proj = Vec::with_capacity(spaces.len());
    for v in 0..spaces.len() {
        let n = x.dims()[v];
        let mut p = Matrix::zeros(f, dims[v], n);
        for j in 0..n {
            let mut e = vec![0u32; n];
            e[j] = 1;
            for (r, &val) in project(v, &e).iter().enumerate() {
                p.set(r, j, val);
            }
        }
        proj.push(p);
    }
    let proj = Morphism::new(x.clone(), q.clone(), proj)?;
    Ok((q, proj))
}

fn column_space(m: &Matrix) -> Subspace {
    Subspace::from_matrix(m.transpose())
}

pub fn kernel(f: &Morphism) -> Result<(Representation, Morphism)> {
    let spaces: Vec<Subspace> = f.maps().iter().map(|m| m.kernel_basis()).collect();
    submodule(f.source(), &spaces)
}

pub fn image(f: &Morphism) -> Result<(Representation, Morphism)> {
    let spaces: Vec<Subspace> = f.maps().iter().map(column_space).collect();
    submodule(f.target(), &spaces)
}

pub fn cokernel(f: &Morphism) -> Result<(Representation, Morphism)> {
    let spaces: Vec<Subspace> = f.maps().iter().map(column_space).collect();
    quotient_module(f.target(), &spaces)
}

/// Vertex spaces of the radical: sum of the images of all arrows.
pub fn radical_spaces(x: &Representation) -> Vec<Subspace> {
    let a = x.algebra();
    let f = a.field();
    let n = a.vertex_count();
    let mut vecs: Vec<Vec<Vec<u32>>> = vec![Vec::new(); n];
    for ai in 0..a.arrows().len() {
        let (_, to) = a.arrow_ends(x.side(), ai);
        let m = x.arrow_map(ai);
        for c in 0..m.cols() {
            vecs[to].push(m.col(c));
        }
    }
    vecs.into_iter().enumerate().map(|(v, vs)| Subspace::from_vectors(f, x.dims()[v], vs)).collect()
}

/// Vertex spaces of the socle: joint kernel of all arrows.
pub fn socle_spaces(x: &Representation) -> Vec<Subspace> {
    let a = x.algebra();
    let f = a.field();
    (0..a.vertex_count())
        .map(|v| {
            let outgoing: Vec<Matrix> = (0..a.arrows().len())
                .filter(|&ai| a.arrow_ends(x.side(), ai).0 == v)
                .map(|ai| x.arrow_map(ai).clone())
                .collect();
            if outgoing.is_empty() {
                return Subspace::full(f, x.dims()[v]);
            }
            let stacked = outgoing.iter().skip(1).fold(outgoing[0].clone(), |acc, m| acc.vstack(m));
            stacked.kernel_basis()
        })
        .collect()
}

pub fn radical(x: &Representation) -> Result<(Representation, Morphism)> {
    submodule(x, &radical_spaces(x))
}

pub fn top(x: &Representation) -> Result<(Representation, Morphism)> {
    quotient_module(x, &radical_spaces(x))
}

pub fn socle(x: &Representation) -> Result<(Representation, Morphism)> {
    submodule(x, &socle_spaces(x))
}

/// Dimension vector of `top(x)`.
pub fn top_dims(x: &Representation) -> Vec<usize> {
    radical_spaces(x).iter().zip(x.dims()).map(|(s, &d)| d - s.dim()).collect()
}

/// Dimension vector of `soc(x)`.
pub fn socle_dims(x: &Representation) -> Vec<usize> {
    socle_spaces(x).iter().map(|s| s.dim()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::preprojective_of_type;
    use crate::linalg::Fp;
    use crate::quiver::DynkinType;

    fn a3() -> Arc<GradedAlgebra> {
        Arc::new(preprojective_of_type(DynkinType::a(3), Fp::new(1009).unwrap()).unwrap())
    }

    #[test]
    fn projectives_are_valid_with_expected_dims() {
        let a = a3();
        for i in 0..3 {
            let p = projective(&a, Side::Left, i).unwrap();
            assert!(p.is_valid());
            for j in 0..3 {
                assert_eq!(p.dims()[j], a.bigraded_dim(i, j));
            }
            let q = projective(&a, Side::Right, i).unwrap();
            assert!(q.is_valid());
            assert!(q.dual().is_valid());
        }
    }

    #[test]
    fn kernel_image_cokernel_exactness() {
        let a = a3();
        let p2 = projective(&a, Side::Left, 1).unwrap();
        let (rad, incl) = radical(&p2).unwrap();
        assert_eq!(rad.dims(), &[1, 1, 1]);
        assert!(incl.is_valid());
        let (k, _) = kernel(&incl).unwrap();
        assert!(k.is_zero());
        let (c, proj) = cokernel(&incl).unwrap();
        assert_eq!(c.dims(), &[0, 1, 0]);
        assert!(proj.is_valid() && c.is_valid());
        let (im, _) = image(&incl).unwrap();
        assert_eq!(im.dims(), rad.dims());
        let id = Morphism::identity(&p2);
        assert!(kernel(&id).unwrap().0.is_zero());
        let z = Morphism::zero(&rad, &p2).unwrap();
        assert_eq!(cokernel(&z).unwrap().0.dims(), p2.dims());
    }

    #[test]
    fn simple_tops_and_socles() {
        let a = a3();
        for i in 0..3 {
            let s = simple(&a, Side::Left, i).unwrap();
            assert_eq!(top_dims(&s), s.dims());
            assert!(radical(&s).unwrap().0.is_zero());
            let p = projective(&a, Side::Left, i).unwrap();
            assert_eq!(socle_dims(&p).iter().sum::<usize>(), 1);
        }
    }
}
