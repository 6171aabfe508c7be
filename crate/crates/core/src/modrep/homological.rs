use std::sync::Arc;

use super::{
    cokernel, decompose, hom_basis, hom_dim, is_isomorphic_indecomposable, kernel, projective, radical_spaces,
    socle_dims, submodule, Morphism, Representation,
};
use crate::algebra::{GradedAlgebra, Side};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};

/// Morphism `P_v → x` sending the generator `e_v` to `g ∈ x_v`.
fn from_projective(x: &Representation, p: &Representation, v: usize, g: &[u32]) -> Result<Morphism> {
    let a = x.algebra();
    let side = x.side();
    let f = a.field();
    let mut cols: Vec<Vec<Vec<u32>>> = vec![Vec::new(); a.vertex_count()];
    for b in 0..a.dim() {
        let (from, to) = a.ends(side, b);
        if from == v {
            cols[to].push(x.action(b).mul_vec(g));
        }
    }
    let maps = cols
        .iter()
        .enumerate()
        .map(|(w, cs)| Matrix::from_fn(f, x.dims()[w], cs.len(), |r, c| cs[c][r]))
        .collect();
    Morphism::new(p.clone(), x.clone(), maps)
}

/// Minimal projective cover `P(x) ↠ x`, built from a complement of the radical at each vertex.
pub fn projective_cover(x: &Representation) -> Result<Morphism> {
    let a = x.algebra();
    let f = a.field();
    let mut parts: Vec<Morphism> = Vec::new();
    for (v, rad) in radical_spaces(x).iter().enumerate() {
        if rad.dim() == x.dims()[v] {
            continue;
        }
        let p = projective(a, x.side(), v)?;
        for c in rad.non_pivots() {
            let mut g = vec![0u32; x.dims()[v]];
            g[c] = 1;
            parts.push(from_projective(x, &p, v, &g)?);
        }
    }
    if parts.is_empty() {
        return Morphism::zero(&Representation::zero(a, x.side()), x);
    }
    let sources: Vec<Representation> = parts.iter().map(|m| m.source().clone()).collect();
    let cover = Representation::direct_sum(&sources)?;
    let maps = (0..a.vertex_count())
        .map(|w| {
            parts
                .iter()
                .skip(1)
                .fold(parts[0].map(w).clone(), |acc, m| acc.hstack(m.map(w)))
        })
        .map(|m| if m.rows() == 0 { Matrix::zeros(f, 0, m.cols()) } else { m })
        .collect();
    Morphism::new(cover, x.clone(), maps)
}

/// Minimal injective envelope `x ↪ I(x)`, the dual of the cover of `D x`.
pub fn injective_envelope(x: &Representation) -> Result<Morphism> {
    let cover = projective_cover(&x.dual())?;
    let envelope = cover.source().dual();
    let maps = cover.maps().iter().map(|m| m.transpose()).collect();
    Morphism::new(x.clone(), envelope, maps)
}

fn is_projective_indecomposable(m: &Representation) -> Result<bool> {
    let top: Vec<usize> = radical_spaces(m).iter().zip(m.dims()).map(|(s, &d)| d - s.dim()).collect();
    if top.iter().sum::<usize>() != 1 {
        return Ok(false);
    }
    let v = top.iter().position(|&d| d == 1).expect("simple top");
    Ok(projective(m.algebra(), m.side(), v)?.dims() == m.dims())
}

fn strip(x: Representation, drop: impl Fn(&Representation) -> Result<bool>) -> Result<Representation> {
    if x.is_zero() || is_self_injective(x.algebra()) {
        return Ok(x);
    }
    let mut keep = Vec::new();
    for m in decompose(&x)? {
        if !drop(&m)? {
            keep.push(m);
        }
    }
    if keep.is_empty() {
        return Ok(Representation::zero(x.algebra(), x.side()));
    }
    Representation::direct_sum(&keep)
}

/// `Ω x`: the kernel of the minimal projective cover with projective summands removed.
pub fn syzygy(x: &Representation) -> Result<Representation> {
    let (k, _) = kernel(&projective_cover(x)?)?;
    strip(k, is_projective_indecomposable)
}

/// `Ω⁻¹ x`: the cokernel of the minimal injective envelope with injective summands removed.
pub fn cosyzygy(x: &Representation) -> Result<Representation> {
    let (c, _) = cokernel(&injective_envelope(x)?)?;
    strip(c, |m| is_projective_indecomposable(&m.dual()))
}

/// Coordinates of each morphism in `targets` with respect to `basis` (all in the same hom space).
fn coords_in(basis: &[Morphism], m: &Morphism) -> Result<Vec<u32>> {
    let f = m.source().algebra().field();
    let flat: Vec<Vec<u32>> = basis.iter().map(|b| b.flatten()).collect();
    let n = m.flatten().len();
    let cols = Matrix::from_fn(f, n, basis.len(), |r, c| flat[c][r]);
    cols.solve(&m.flatten())
        .ok_or_else(|| Error::Inconsistency("morphism outside the computed hom space".into()))
}

/// Multiplication by an arrow between projectives on the opposite side:
/// `P_from → P_to`, `b ↦ act(side.flip(), α, b)`.
fn arrow_between_projectives(
    a: &Arc<GradedAlgebra>,
    side: Side,
    ai: usize,
    from: &Representation,
    to: &Representation,
) -> Result<Morphism> {
    let f = a.field();
    let (pf, pt) = a.arrow_ends(side.flip(), ai);
    let local = |p: usize| -> Vec<Option<usize>> {
        let mut seen = vec![0usize; a.vertex_count()];
        (0..a.dim())
            .map(|b| {
                let (s, t) = a.ends(side, b);
                (s == p).then(|| {
                    seen[t] += 1;
                    seen[t] - 1
                })
            })
            .collect()
    };
    let (lf, lt) = (local(pf), local(pt));
    let mut maps: Vec<Matrix> =
        (0..a.vertex_count()).map(|w| Matrix::zeros(f, to.dims()[w], from.dims()[w])).collect();
    let arrow = a.arrows()[ai].basis;
    for b in 0..a.dim() {
        let Some(col) = lf[b] else { continue };
        let w = a.ends(side, b).1;
        for &(k, c) in a.act(side.flip(), arrow, b) {
            let row = lt[k as usize].ok_or_else(|| Error::Inconsistency("product left the projective".into()))?;
            maps[w].set(row, col, c);
        }
    }
    Morphism::new(from.clone(), to.clone(), maps)
}

/// `Hom_A(x, A)` as a module on the opposite side.
fn hom_into_regular(x: &Representation) -> Result<Representation> {
    let a = x.algebra();
    let side = x.side();
    let f = a.field();
    let projs: Vec<Representation> =
        (0..a.vertex_count()).map(|v| projective(a, side, v)).collect::<Result<_>>()?;
    let homs: Vec<Vec<Morphism>> = projs.iter().map(|p| hom_basis(x, p)).collect::<Result<_>>()?;
    let dims: Vec<usize> = homs.iter().map(|h| h.len()).collect();
    let mut maps = Vec::with_capacity(a.arrows().len());
    for ai in 0..a.arrows().len() {
        let (pf, pt) = a.arrow_ends(side.flip(), ai);
        let mult = arrow_between_projectives(a, side, ai, &projs[pf], &projs[pt])?;
        let mut m = Matrix::zeros(f, dims[pt], dims[pf]);
        for (c, phi) in homs[pf].iter().enumerate() {
            let img = phi.then(&mult)?;
            for (r, v) in coords_in(&homs[pt], &img)?.into_iter().enumerate() {
                m.set(r, c, v);
            }
        }
        maps.push(m);
    }
    Representation::new(a.clone(), side.flip(), dims, maps)
}

/// Nakayama functor `ν x = D Hom_A(x, A)`.
pub fn nakayama(x: &Representation) -> Result<Representation> {
    Ok(hom_into_regular(x)?.dual())
}

/// `dim Hom(x, y)` minus the morphisms factoring through a projective.
pub fn stable_hom_dim(x: &Representation, y: &Representation) -> Result<usize> {
    x.check_compatible(y)?;
    let total = hom_dim(x, y)?;
    if total == 0 {
        return Ok(0);
    }
    let cover = projective_cover(y)?;
    let f = x.algebra().field();
    let through: Vec<Vec<u32>> =
        hom_basis(x, cover.source())?.iter().map(|h| h.then(&cover).map(|m| m.flatten())).collect::<Result<_>>()?;
    let n = x.dims().iter().zip(y.dims()).map(|(a, b)| a * b).sum();
    Ok(total - Subspace::from_vectors(f, n, through).dim())
}

/// `Ext¹(z, y)` as the cokernel of restriction `Hom(P(z), y) → Hom(Ω z, y)`.
fn ext1_by_resolution(z: &Representation, y: &Representation) -> Result<usize> {
    let cover = projective_cover(z)?;
    let (omega, incl) = kernel(&cover)?;
    let total = hom_dim(&omega, y)?;
    if total == 0 {
        return Ok(0);
    }
    let f = z.algebra().field();
    let restricted: Vec<Vec<u32>> =
        hom_basis(cover.source(), y)?.iter().map(|h| incl.then(h).map(|m| m.flatten())).collect::<Result<_>>()?;
    let n = omega.dims().iter().zip(y.dims()).map(|(a, b)| a * b).sum();
    Ok(total - Subspace::from_vectors(f, n, restricted).dim())
}

fn syzygy_power(x: &Representation, i: usize) -> Result<Representation> {
    let mut z = x.clone();
    for _ in 0..i {
        z = syzygy(&z)?;
    }
    Ok(z)
}

/// `dim Ext^i(x, y)` from the minimal projective resolution of `x`.
pub fn ext_dim_by_resolution(x: &Representation, y: &Representation, i: usize) -> Result<usize> {
    x.check_compatible(y)?;
    if i == 0 {
        return hom_dim(x, y);
    }
    ext1_by_resolution(&syzygy_power(x, i - 1)?, y)
}

/// `dim Ext^i(x, y)` as `dim Hom_stable(Ω^i x, y)`; requires a self-injective algebra.
pub fn ext_dim_by_stable_hom(x: &Representation, y: &Representation, i: usize) -> Result<usize> {
    x.check_compatible(y)?;
    if i == 0 {
        return hom_dim(x, y);
    }
    if !is_self_injective(x.algebra()) {
        return Err(Error::Unsupported("stable-hom Ext formula needs a self-injective algebra".into()));
    }
    stable_hom_dim(&syzygy_power(x, i)?, y)
}

pub fn ext_dim(x: &Representation, y: &Representation, i: usize) -> Result<usize> {
    if i > 0 && is_self_injective(x.algebra()) {
        ext_dim_by_stable_hom(x, y, i)
    } else {
        ext_dim_by_resolution(x, y, i)
    }
}

fn check_tensor_sides(m: &Representation, n: &Representation) -> Result<()> {
    if !Arc::ptr_eq(m.algebra(), n.algebra()) || m.side() != Side::Right || n.side() != Side::Left {
        return Err(Error::AlgebraMismatch);
    }
    Ok(())
}

/// `dim (m ⊗_A n)` for a right module `m` and a left module `n`.
pub fn tensor_dim(m: &Representation, n: &Representation) -> Result<usize> {
    check_tensor_sides(m, n)?;
    let a = m.algebra();
    let f = a.field();
    let (dm, dn) = (m.dims(), n.dims());
    let nv = dm.len();
    let mut off = vec![0usize; nv + 1];
    for v in 0..nv {
        off[v + 1] = off[v] + dm[v] * dn[v];
    }
    let total = off[nv];
    if total == 0 {
        return Ok(0);
    }
    let mut rows = Vec::new();
    for ai in 0..a.arrows().len() {
        // α: s → t; m·α: M_t → M_s and α·n: N_s → N_t
        let ar = &a.arrows()[ai];
        let (s, t) = (ar.source, ar.target);
        let (rm, rn) = (m.arrow_map(ai), n.arrow_map(ai));
        for i in 0..dm[t] {
            for j in 0..dn[s] {
                let mut row = vec![0u32; total];
                for k in 0..dm[s] {
                    let idx = off[s] + k * dn[s] + j;
                    row[idx] = f.add(row[idx], rm.get(k, i));
                }
                for l in 0..dn[t] {
                    let idx = off[t] + i * dn[t] + l;
                    row[idx] = f.sub(row[idx], rn.get(l, j));
                }
                rows.push(row);
            }
        }
    }
    Ok(total - Matrix::from_rows(f, total, &rows).rank())
}

/// `dim Tor_i(m, n)` for a right module `m` and a left module `n`.
pub fn tor_dim(m: &Representation, n: &Representation, i: usize) -> Result<usize> {
    check_tensor_sides(m, n)?;
    if i == 0 {
        return tensor_dim(m, n);
    }
    let z = syzygy_power(m, i - 1)?;
    let cover = projective_cover(&z)?;
    let (omega, _) = kernel(&cover)?;
    // 0 → Tor_1(z, n) → Ωz ⊗ n → P(z) ⊗ n → z ⊗ n → 0
    let dims = tensor_dim(&omega, n)? + tensor_dim(&z, n)?;
    Ok(dims - tensor_dim(cover.source(), n)?)
}

/// Every indecomposable projective `P_i` has simple socle `S_j` and `P_i ≅ I_j`.
pub fn is_self_injective(a: &Arc<GradedAlgebra>) -> bool {
    *a.cached_self_injective().get_or_init(|| compute_self_injective(a).unwrap_or(false))
}

fn compute_self_injective(a: &Arc<GradedAlgebra>) -> Result<bool> {
    for i in 0..a.vertex_count() {
        let p = projective(a, Side::Left, i)?;
        let soc = socle_dims(&p);
        if soc.iter().sum::<usize>() != 1 {
            return Ok(false);
        }
        let j = soc.iter().position(|&d| d == 1).expect("simple socle");
        let inj = projective(a, Side::Right, j)?.dual();
        if !is_isomorphic_indecomposable(&p, &inj)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `top(P_i) ≅ soc(P_i)` for every vertex.
pub fn is_weakly_symmetric(a: &Arc<GradedAlgebra>) -> Result<bool> {
    for i in 0..a.vertex_count() {
        let p = projective(a, Side::Left, i)?;
        let mut unit = vec![0; a.vertex_count()];
        unit[i] = 1;
        if socle_dims(&p) != unit {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Sum of the images of all morphisms `x → y`, as a submodule of `y`.
pub fn trace_in(x: &Representation, y: &Representation) -> Result<(Representation, Morphism)> {
    let f = y.algebra().field();
    let homs = hom_basis(x, y)?;
    let spaces: Vec<Subspace> = (0..y.dims().len())
        .map(|v| {
            let cols: Vec<Vec<u32>> = homs.iter().flat_map(|h| h.map(v).transpose().row_vecs()).collect();
            Subspace::from_vectors(f, y.dims()[v], cols)
        })
        .collect();
    submodule(y, &spaces)
}

/// `y ∈ gen(x)`: `y` is a quotient of a finite direct sum of copies of `x`.
pub fn in_gen(x: &Representation, y: &Representation) -> Result<bool> {
    Ok(trace_in(x, y)?.0.dim() == y.dim())
}

/// `y ∈ sub(x)`: `y` embeds into a finite direct sum of copies of `x`.
pub fn in_sub(x: &Representation, y: &Representation) -> Result<bool> {
    in_gen(&x.dual(), &y.dual())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{preprojective_of_type, TwoSidedIdeal};
    use crate::linalg::Fp;
    use crate::modrep::{module_of_quotient, regular_module, simple};
    use crate::quiver::DynkinType;

    fn a3() -> Arc<GradedAlgebra> {
        Arc::new(preprojective_of_type(DynkinType::a(3), Fp::new(1009).unwrap()).unwrap())
    }

    #[test]
    fn covers_and_envelopes() {
        let a = a3();
        for i in 0..3 {
            let p = projective(&a, Side::Left, i).unwrap();
            let c = projective_cover(&p).unwrap();
            assert!(c.is_isomorphism() && c.is_valid());
            let s = simple(&a, Side::Left, i).unwrap();
            let c = projective_cover(&s).unwrap();
            assert!(c.is_valid());
            assert_eq!(c.source().dims(), p.dims());
            let e = injective_envelope(&s).unwrap();
            assert!(e.is_valid() && e.target().is_valid());
            assert!(syzygy(&p).unwrap().is_zero());
        }
    }

    #[test]
    fn a3_is_self_injective_not_weakly_symmetric() {
        let a = a3();
        assert!(is_self_injective(&a));
        assert!(!is_weakly_symmetric(&a).unwrap());
    }

    #[test]
    fn nakayama_of_projective_is_injective() {
        let a = a3();
        for i in 0..3 {
            let p = projective(&a, Side::Left, i).unwrap();
            let nu = nakayama(&p).unwrap();
            assert!(nu.is_valid());
            let inj = projective(&a, Side::Right, i).unwrap().dual();
            assert!(is_isomorphic_indecomposable(&nu, &inj).unwrap());
        }
    }

    #[test]
    fn tensor_identities() {
        let a = a3();
        let right = regular_module(&a, Side::Right);
        let s2 = simple(&a, Side::Left, 1).unwrap();
        assert_eq!(tensor_dim(&right, &s2).unwrap(), 1);
        assert_eq!(tor_dim(&right, &s2, 1).unwrap(), 0);
        let i = TwoSidedIdeal::idempotent_ideal(&a, 1).unwrap();
        let m = module_of_quotient(&i, Side::Right).unwrap();
        let n = module_of_quotient(&i, Side::Left).unwrap();
        assert_eq!(tensor_dim(&m, &n).unwrap(), a.dim() - i.dim());
        assert!(tensor_dim(&n, &m).is_err());
    }

    #[test]
    fn gen_and_sub() {
        let a = a3();
        let reg = regular_module(&a, Side::Left);
        let s1 = simple(&a, Side::Left, 0).unwrap();
        let s2 = simple(&a, Side::Left, 1).unwrap();
        assert!(in_gen(&reg, &s2).unwrap());
        assert!(!in_gen(&s1, &s2).unwrap());
        assert!(in_sub(&reg, &s2).unwrap());
    }
}
