use super::{decompose, Morphism, Representation};
use crate::error::Result;
use crate::linalg::Matrix;

/// Basis of `Hom(x, y)`: the null space of the arrow commutation system
/// `f_v ρ_x(α) = ρ_y(α) f_u` for every arrow `α: u → v`.
pub fn hom_basis(x: &Representation, y: &Representation) -> Result<Vec<Morphism>> {
    x.check_compatible(y)?;
    let a = x.algebra();
    let f = a.field();
    let (dx, dy) = (x.dims(), y.dims());
    let n = dx.len();
    let mut off = vec![0usize; n + 1];
    for v in 0..n {
        off[v + 1] = off[v] + dx[v] * dy[v];
    }
    let unknowns = off[n];
    if unknowns == 0 {
        return Ok(Vec::new());
    }
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for ai in 0..a.arrows().len() {
        let (u, v) = a.arrow_ends(x.side(), ai);
        let (mx, my) = (x.arrow_map(ai), y.arrow_map(ai));
        for r in 0..dy[v] {
            for c in 0..dx[u] {
                let mut row = vec![0u32; unknowns];
                for k in 0..dx[v] {
                    let e = mx.get(k, c);
                    if e != 0 {
                        let idx = off[v] + r * dx[v] + k;
                        row[idx] = f.add(row[idx], e);
                    }
                }
                for k in 0..dy[u] {
                    let e = my.get(r, k);
                    if e != 0 {
                        let idx = off[u] + k * dx[u] + c;
                        row[idx] = f.sub(row[idx], e);
                    }
                }
                if row.iter().any(|&e| e != 0) {
                    rows.push(row);
                }
            }
        }
    }
    let kernel = Matrix::from_rows(f, unknowns, &rows).kernel_basis();
    kernel.basis_vecs().iter().map(|v| Morphism::from_flat(x, y, v)).collect()
}

pub fn hom_dim(x: &Representation, y: &Representation) -> Result<usize> {
    Ok(hom_basis(x, y)?.len())
}

/// Isomorphism test for indecomposable modules: some basis morphism is invertible.
pub fn is_isomorphic_indecomposable(x: &Representation, y: &Representation) -> Result<bool> {
    x.check_compatible(y)?;
    if x.dims() != y.dims() {
        return Ok(false);
    }
    if x.is_zero() {
        return Ok(true);
    }
    Ok(hom_basis(x, y)?.iter().any(|h| h.is_isomorphism()))
}

/// General isomorphism test: compare the multisets of indecomposable summands.
pub fn is_isomorphic(x: &Representation, y: &Representation) -> Result<bool> {
    x.check_compatible(y)?;
    if x.dims() != y.dims() {
        return Ok(false);
    }
    let mut xs = decompose(x)?;
    let ys = decompose(y)?;
    if xs.len() != ys.len() {
        return Ok(false);
    }
    for yi in &ys {
        let mut found = None;
        for (k, xi) in xs.iter().enumerate() {
            if is_isomorphic_indecomposable(xi, yi)? {
                found = Some(k);
                break;
            }
        }
        match found {
            Some(k) => {
                xs.swap_remove(k);
            }
            None => return Ok(false),
        }
    }
    Ok(true)
}
