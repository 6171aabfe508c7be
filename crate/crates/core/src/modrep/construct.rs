use std::sync::Arc;

use super::{quotient_module, submodule, Representation};
use crate::algebra::{GradedAlgebra, Side, TwoSidedIdeal};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};

/// Position of each algebra basis element inside the regular module of a side.
struct Layout {
    vertex: Vec<usize>,
    local: Vec<usize>,
    dims: Vec<usize>,
}

fn layout(a: &GradedAlgebra, side: Side) -> Layout {
    let mut dims = vec![0; a.vertex_count()];
    let mut vertex = Vec::with_capacity(a.dim());
    let mut local = Vec::with_capacity(a.dim());
    for b in 0..a.dim() {
        let v = a.ends(side, b).1;
        vertex.push(v);
        local.push(dims[v]);
        dims[v] += 1;
    }
    Layout { vertex, local, dims }
}

/// The algebra acting on itself from the given side.
pub fn regular_module(a: &Arc<GradedAlgebra>, side: Side) -> Representation {
    let lay = layout(a, side);
    let f = a.field();
    let maps = a
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, ar)| {
            let (from, to) = a.arrow_ends(side, ai);
            let mut m = Matrix::zeros(f, lay.dims[to], lay.dims[from]);
            for b in (0..a.dim()).filter(|&b| lay.vertex[b] == from) {
                for &(k, c) in a.act(side, ar.basis, b) {
                    m.set(lay.local[k as usize], lay.local[b], c);
                }
            }
            m
        })
        .collect();
    Representation::new(a.clone(), side, lay.dims, maps).expect("regular module is well-formed")
}

fn vertex_spaces(a: &GradedAlgebra, side: Side, vecs: &[Vec<u32>]) -> Vec<Subspace> {
    let lay = layout(a, side);
    let f = a.field();
    let mut per: Vec<Vec<Vec<u32>>> = vec![Vec::new(); a.vertex_count()];
    for x in vecs {
        let mut pieces: Vec<Vec<u32>> = lay.dims.iter().map(|&d| vec![0; d]).collect();
        for (b, &c) in x.iter().enumerate() {
            if c != 0 {
                pieces[lay.vertex[b]][lay.local[b]] = c;
            }
        }
        for (v, p) in pieces.into_iter().enumerate() {
            if p.iter().any(|&c| c != 0) {
                per[v].push(p);
            }
        }
    }
    per.into_iter().enumerate().map(|(v, vs)| Subspace::from_vectors(f, lay.dims[v], vs)).collect()
}

/// The submodule of the regular module spanned (vertex by vertex) by the given
/// algebra elements. The span must be closed under the action.
pub fn module_of_subspace(a: &Arc<GradedAlgebra>, side: Side, vecs: &[Vec<u32>]) -> Result<Representation> {
    let reg = regular_module(a, side);
    Ok(submodule(&reg, &vertex_spaces(a, side, vecs))?.0)
}

/// A two-sided ideal viewed as a left module.
pub fn module_of_left_ideal(i: &TwoSidedIdeal) -> Result<Representation> {
    module_of_subspace(i.algebra(), Side::Left, &i.basis_vecs())
}

/// `A / I` as a module on the given side.
pub fn module_of_quotient(i: &TwoSidedIdeal, side: Side) -> Result<Representation> {
    let a = i.algebra();
    let reg = regular_module(a, side);
    Ok(quotient_module(&reg, &vertex_spaces(a, side, &i.basis_vecs()))?.0)
}

fn check_vertex(a: &GradedAlgebra, i: usize) -> Result<()> {
    if i >= a.vertex_count() {
        return Err(Error::InvalidVertex { vertex: i + 1, count: a.vertex_count() });
    }
    Ok(())
}

/// `A e_i` (left) or `e_i A` (right); its vertex-`w` basis is the list of
/// algebra basis elements from `i` to `w` in index order.
pub fn projective(a: &Arc<GradedAlgebra>, side: Side, i: usize) -> Result<Representation> {
    check_vertex(a, i)?;
    let gens: Vec<Vec<u32>> = (0..a.dim()).filter(|&b| a.ends(side, b).0 == i).map(|b| a.basis_element(b).0).collect();
    module_of_subspace(a, side, &gens)
}

/// The injective hull of the simple at `i`: the dual of the projective on the other side.
pub fn injective(a: &Arc<GradedAlgebra>, side: Side, i: usize) -> Result<Representation> {
    Ok(projective(a, side.flip(), i)?.dual())
}

pub fn simple(a: &Arc<GradedAlgebra>, side: Side, i: usize) -> Result<Representation> {
    check_vertex(a, i)?;
    let f = a.field();
    let mut dims = vec![0; a.vertex_count()];
    dims[i] = 1;
    let maps = (0..a.arrows().len())
        .map(|ai| {
            let (from, to) = a.arrow_ends(side, ai);
            Matrix::zeros(f, dims[to], dims[from])
        })
        .collect();
    Representation::new(a.clone(), side, dims, maps)
}
