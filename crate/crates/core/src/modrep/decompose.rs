use super::{hom_basis, submodule, Morphism, Representation};
use crate::error::{Error, Result};
use crate::linalg::{poly_roots, Matrix, Subspace};

/// `End(x)` with multiplication `b_i * b_j = b_i ∘ b_j` in the hom basis.
pub struct EndAlgebra {
    pub basis: Vec<Morphism>,
    /// `table[i][j]` = coordinates of `b_i ∘ b_j`.
    pub table: Vec<Vec<Vec<u32>>>,
}

impl EndAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Jacobson radical as the kernel of the trace form `(a, b) ↦ tr(L_{ab})`.
    ///
    /// Only valid when the characteristic exceeds the dimension; otherwise a
    /// configuration error is returned.
    pub fn radical(&self) -> Result<Subspace> {
        let d = self.dim();
        let Some(first) = self.basis.first() else {
            return Ok(Subspace::zero(crate::linalg::Fp::new(2)?, 0));
        };
        let f = first.source().algebra().field();
        if (f.p() as usize) <= d {
            return Err(Error::Config(format!(
                "trace-form radical needs a characteristic above dim End = {d}; rerun with a larger --field-char"
            )));
        }
        // tr(L_c) for each basis element c
        let tr: Vec<u32> = (0..d).map(|c| (0..d).fold(0, |acc, k| f.add(acc, self.table[c][k][k]))).collect();
        let gram = Matrix::from_fn(f, d, d, |i, j| {
            self.table[i][j].iter().zip(&tr).fold(0, |acc, (&x, &t)| f.mul_add(acc, x, t))
        });
        Ok(gram.kernel_basis())
    }
}

pub fn end_algebra(x: &Representation) -> Result<EndAlgebra> {
    let basis = hom_basis(x, x)?;
    let f = x.algebra().field();
    let d = basis.len();
    let flat: Vec<Vec<u32>> = basis.iter().map(|b| b.flatten()).collect();
    let n = flat.first().map_or(0, |v| v.len());
    let cols = Matrix::from_fn(f, n, d, |r, c| flat[c][r]);
    let mut table = vec![vec![Vec::new(); d]; d];
    for i in 0..d {
        for j in 0..d {
            let prod = basis[j].then(&basis[i])?;
            table[i][j] = cols
                .solve(&prod.flatten())
                .ok_or_else(|| Error::Inconsistency("endomorphisms not closed under composition".into()))?;
        }
    }
    Ok(EndAlgebra { basis, table })
}

type Endo = Vec<Matrix>;

fn global_char_poly(h: &Endo) -> Vec<u32> {
    let f = h[0].field();
    let mut poly = vec![1u32];
    for m in h {
        if m.rows() == 0 {
            continue;
        }
        let c = m.char_poly();
        let mut out = vec![0u32; poly.len() + c.len() - 1];
        for (i, &a) in poly.iter().enumerate() {
            for (j, &b) in c.iter().enumerate() {
                out[i + j] = f.mul_add(out[i + j], a, b);
            }
        }
        poly = out;
    }
    poly
}

fn shifted(h: &Endo, lambda: u32) -> Endo {
    h.iter()
        .map(|m| {
            let f = m.field();
            let mut g = m.clone();
            for i in 0..g.rows() {
                g.set(i, i, f.sub(g.get(i, i), lambda));
            }
            g
        })
        .collect()
}

fn fitting_power(g: &Endo, n: usize) -> Endo {
    g.iter().map(|m| m.pow(n)).collect()
}

/// Tries to split `x` along the Fitting decomposition of `h − λ` for the roots λ of `h`.
fn try_split(x: &Representation, h: &Endo) -> Result<Option<(Representation, Representation)>> {
    let total = x.dim();
    let f = x.algebra().field();
    for lambda in poly_roots(f, &global_char_poly(h)) {
        let g = fitting_power(&shifted(h, lambda), total);
        let rank: usize = g.iter().map(|m| m.rank()).sum();
        if rank > 0 && rank < total {
            let ker: Vec<Subspace> = g.iter().map(|m| m.kernel_basis()).collect();
            let im: Vec<Subspace> = g.iter().map(|m| Subspace::from_matrix(m.transpose())).collect();
            let (k, _) = submodule(x, &ker)?;
            let (i, _) = submodule(x, &im)?;
            return Ok(Some((k, i)));
        }
    }
    Ok(None)
}

fn compose(a: &Endo, b: &Endo) -> Endo {
    a.iter().zip(b).map(|(x, y)| x.mul(y)).collect()
}

fn add(a: &Endo, b: &Endo) -> Endo {
    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
}

fn flat(e: &Endo) -> Vec<u32> {
    e.iter().flat_map(|m| m.data().iter().copied()).collect()
}

fn unflat(shape: &Endo, v: &[u32]) -> Endo {
    let mut off = 0;
    shape
        .iter()
        .map(|m| {
            let n = m.rows() * m.cols();
            let out = Matrix::from_vec(m.field(), m.rows(), m.cols(), v[off..off + n].to_vec());
            off += n;
            out
        })
        .collect()
}

/// One splitting step. `Ok(None)` certifies that `End(x)` is local with
/// residue field `F_p`, i.e. `x` is absolutely indecomposable.
fn split_once(x: &Representation) -> Result<Option<(Representation, Representation)>> {
    let f = x.algebra().field();
    let n = x.dim();
    let basis: Vec<Endo> = hom_basis(x, x)?.into_iter().map(|m| m.maps().to_vec()).collect();
    let mut rootless = false;
    let mut radical_gens: Vec<Endo> = Vec::new();
    for h in &basis {
        if let Some(s) = try_split(x, h)? {
            return Ok(Some(s));
        }
        let roots = poly_roots(f, &global_char_poly(h));
        match roots.first() {
            // a single eigenvalue: h − λ is nilpotent
            Some(&l) => radical_gens.push(shifted(h, l)),
            None => rootless = true,
        }
    }
    // the (non-unital) algebra generated by the h − λ must be nilpotent for x to be indecomposable
    let shape = basis.first().cloned().unwrap_or_default();
    let ambient = flat(&shape).len();
    let mut layer: Vec<Endo> = radical_gens.clone();
    let mut candidates: Vec<Endo> = Vec::new();
    for _ in 0..=n {
        let span = Subspace::from_vectors(f, ambient, layer.iter().map(flat).collect());
        if span.is_zero() {
            break;
        }
        let members: Vec<Endo> = span.basis_vecs().iter().map(|v| unflat(&shape, v)).collect();
        candidates.extend(members.iter().cloned());
        layer = members.iter().flat_map(|m| radical_gens.iter().map(move |g| compose(m, g))).collect();
    }
    if !layer.is_empty() && layer.iter().any(|m| m.iter().any(|b| !b.is_zero())) {
        // not nilpotent: some element splits x
        for c in &candidates {
            if let Some(s) = try_split(x, c)? {
                return Ok(Some(s));
            }
        }
        for i in 0..basis.len() {
            for j in 0..basis.len() {
                for c in [compose(&basis[i], &basis[j]), add(&basis[i], &basis[j])] {
                    if let Some(s) = try_split(x, &c)? {
                        return Ok(Some(s));
                    }
                }
            }
        }
        return Err(Error::SplitFailure(n));
    }
    if rootless {
        return Err(Error::NotAbsolutelyIndecomposable(f.p()));
    }
    Ok(None)
}

/// Indecomposable summands of `x` (with repetition), each absolutely indecomposable.
pub fn decompose(x: &Representation) -> Result<Vec<Representation>> {
    let mut out = Vec::new();
    let mut stack = vec![x.clone()];
    while let Some(m) = stack.pop() {
        if m.is_zero() {
            continue;
        }
        match split_once(&m)? {
            Some((a, b)) => {
                stack.push(b);
                stack.push(a);
            }
            None => out.push(m),
        }
    }
    Ok(out)
}

pub fn is_indecomposable(x: &Representation) -> Result<bool> {
    Ok(!x.is_zero() && split_once(x)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{preprojective_of_type, Side};
    use crate::linalg::Fp;
    use crate::modrep::{is_isomorphic, projective, simple};
    use crate::quiver::DynkinType;
    use std::sync::Arc;

    #[test]
    fn splits_sums() {
        for p in [2, 3, 1009] {
            let a = Arc::new(preprojective_of_type(DynkinType::a(3), Fp::new(p).unwrap()).unwrap());
            let p1 = projective(&a, Side::Left, 0).unwrap();
            let s1 = simple(&a, Side::Left, 0).unwrap();
            let s2 = simple(&a, Side::Left, 1).unwrap();
            let parts = decompose(&p1.direct_power(2)).unwrap();
            assert_eq!(parts.len(), 2);
            assert!(parts.iter().all(|q| q.dims() == p1.dims()));
            assert_eq!(decompose(&Representation::direct_sum(&[s1.clone(), s2.clone()]).unwrap()).unwrap().len(), 2);
            let x = Representation::direct_sum(&[p1.clone(), s1.clone()]).unwrap();
            let y = Representation::direct_sum(&[s1.clone(), p1.clone()]).unwrap();
            assert!(is_isomorphic(&x, &y).unwrap());
            let reg = crate::modrep::regular_module(&a, Side::Left);
            assert_eq!(decompose(&reg).unwrap().len(), 3);
        }
    }

    #[test]
    fn trace_form_radical_and_guard() {
        let a = Arc::new(preprojective_of_type(DynkinType::a(3), Fp::new(1009).unwrap()).unwrap());
        let p2 = projective(&a, Side::Left, 1).unwrap();
        let e = end_algebra(&p2).unwrap();
        assert_eq!(e.dim(), 2);
        assert_eq!(e.radical().unwrap().dim(), 1);
        let small = Arc::new(preprojective_of_type(DynkinType::a(3), Fp::new(2).unwrap()).unwrap());
        let e2 = end_algebra(&projective(&small, Side::Left, 1).unwrap()).unwrap();
        assert!(matches!(e2.radical(), Err(Error::Config(_))));
    }
}
