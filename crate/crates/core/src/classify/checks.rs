use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use super::{Classifier, Subcat};
use crate::algebra::{Side, TwoSidedIdeal};
use crate::error::{Error, Result};
use crate::linalg::Subspace;
use crate::modrep::{
    cokernel, ext_dim, hom_basis, is_isomorphic, kernel, module_of_quotient, projective_cover, syzygy, IndecRegistry,
    Morphism, Representation,
};

/// Default registry-size cap for [`wide_enumerate_brute`].
pub const DEFAULT_BRUTE_CAP: usize = 16;

/// Largest Hom or Ext space enumerated element by element.
const MAX_ENUMERATION: usize = 1 << 16;

#[derive(Clone, Debug, Serialize)]
pub struct TachikawaRow {
    pub module: String,
    /// Least `d ≤ bound` with `Ext^d(M, M) ≠ 0`.
    pub least_d: Option<usize>,
    /// Least `k ≤ bound` with `Ω^k M ≅ M`.
    pub period: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TachikawaReport {
    pub bound: usize,
    pub rows: Vec<TachikawaRow>,
}

impl TachikawaReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| matches!((r.least_d, r.period), (Some(d), Some(k)) if d <= k))
    }
}

/// For every nonprojective indecomposable `M`, the first nonvanishing
/// `Ext^d(M, M)` and the `Ω`-period of `M`, both searched up to `bound`.
pub fn tachikawa_check(reg: &IndecRegistry, bound: usize) -> Result<TachikawaReport> {
    let ids: Vec<usize> = (0..reg.len()).filter_map(|i| reg.is_projective(i).map(|p| (!p).then_some(i)).transpose()).collect::<Result<_>>()?;
    let rows = ids
        .par_iter()
        .map(|&id| {
            let m = reg.get(id);
            let mut least_d = None;
            for d in 1..=bound {
                if ext_dim(m, m, d)? > 0 {
                    least_d = Some(d);
                    break;
                }
            }
            let mut period = None;
            let mut z = m.clone();
            for k in 1..=bound {
                z = syzygy(&z)?;
                if z.dims() == m.dims() && is_isomorphic(&z, m)? {
                    period = Some(k);
                    break;
                }
            }
            Ok(TachikawaRow { module: reg.name(id).to_string(), least_d, period })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TachikawaReport { bound, rows })
}

#[derive(Clone, Debug, Serialize)]
pub struct StratifyingRow {
    /// 1-based vertices whose idempotents generate the ideal.
    pub vertices: Vec<usize>,
    pub ideal_dim: usize,
    pub stratifying: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct StratifyingReport {
    pub algebra_dim: usize,
    pub rows: Vec<StratifyingRow>,
}

impl StratifyingReport {
    /// Only the zero ideal and `A` itself are stratifying.
    pub fn only_trivial(&self) -> bool {
        self.rows.iter().filter(|r| r.stratifying).all(|r| r.ideal_dim == 0 || r.ideal_dim == self.algebra_dim)
    }
}

/// Tests `AeA` for every vertex subset: stratifying iff `A/AeA` is a projective left module.
pub fn stratifying_scan(reg: &IndecRegistry) -> Result<StratifyingReport> {
    let a = reg.algebra();
    let n = a.vertex_count();
    let mut rows = Vec::with_capacity(1 << n);
    for mask in 0u32..(1 << n) {
        let vertices: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let ideal = TwoSidedIdeal::vertex_ideal(a, &vertices);
        let q = module_of_quotient(&ideal, Side::Left)?;
        let mut stratifying = true;
        if !q.is_zero() {
            for id in reg.summand_ids(&q)? {
                stratifying &= reg.is_projective(id)?;
            }
        }
        rows.push(StratifyingRow { vertices: vertices.iter().map(|v| v + 1).collect(), ideal_dim: ideal.dim(), stratifying });
    }
    Ok(StratifyingReport { algebra_dim: a.dim(), rows })
}

/// All `F_p`-linear combinations of `basis` (as flattened coefficient vectors).
fn coefficient_vectors(p: u32, d: usize) -> Result<Vec<Vec<u32>>> {
    let count = (p as usize).checked_pow(d as u32).filter(|&c| c <= MAX_ENUMERATION);
    let Some(count) = count else {
        return Err(Error::Config(format!("refusing to enumerate {p}^{d} elements")));
    };
    Ok((0..count)
        .map(|mut k| {
            (0..d)
                .map(|_| {
                    let c = (k % p as usize) as u32;
                    k /= p as usize;
                    c
                })
                .collect()
        })
        .collect())
}

fn combine(basis: &[Morphism], coeffs: &[u32], zero: &Morphism) -> Morphism {
    basis.iter().zip(coeffs).fold(zero.clone(), |acc, (h, &c)| if c == 0 { acc } else { acc.add_scaled(h, c) })
}

struct Object {
    mask: u64,
    module: Representation,
    /// `ι: Ωx → P(x)`.
    omega: Morphism,
}

/// Subsets of the registry closed under kernels, cokernels and extensions,
/// tested on objects with at most two indecomposable summands, with every
/// morphism and every extension class enumerated over the (small) ground field.
pub fn wide_enumerate_brute(c: &Classifier, cap: usize) -> Result<Vec<Subcat>> {
    let reg = c.registry();
    let n = reg.len();
    if n > cap || n > 63 {
        return Err(Error::Config(format!("registry has {n} modules, above the brute-force cap {cap}")));
    }
    let f = c.algebra().field();
    if f.p() > 3 {
        return Err(Error::Config(format!("brute-force enumeration needs p <= 3, got {}", f.p())));
    }
    let mut objects = Vec::new();
    for i in 0..n {
        for j in i..=n {
            let module = if j == n {
                reg.get(i).clone()
            } else {
                Representation::direct_sum(&[reg.get(i).clone(), reg.get(j).clone()])?
            };
            let mask = (1u64 << i) | if j == n { 0 } else { 1u64 << j };
            let (_, omega) = kernel(&projective_cover(&module)?)?;
            objects.push(Object { mask, module, omega });
        }
    }
    let mask_of = |x: &Representation| -> Result<u64> {
        if x.is_zero() {
            return Ok(0);
        }
        Ok(reg.summand_ids(x)?.into_iter().fold(0, |m, id| m | 1 << id))
    };
    let pairs: Vec<(usize, usize)> = (0..objects.len()).flat_map(|i| (0..objects.len()).map(move |j| (i, j))).collect();
    let constraints: HashSet<(u64, u64)> = pairs
        .par_iter()
        .map(|&(i, j)| -> Result<HashSet<(u64, u64)>> {
            let (x, y) = (&objects[i], &objects[j]);
            let req = x.mask | y.mask;
            let mut out = HashSet::new();
            // morphisms
            let basis = hom_basis(&x.module, &y.module)?;
            let zero = Morphism::zero(&x.module, &y.module)?;
            for coeffs in coefficient_vectors(f.p(), basis.len())?.iter().skip(1) {
                let h = combine(&basis, coeffs, &zero);
                let res = mask_of(&kernel(&h)?.0)? | mask_of(&cokernel(&h)?.0)?;
                if res & !req != 0 {
                    out.insert((req, res));
                }
            }
            // extensions via Ext¹(x, y) = Hom(Ωx, y) / restrictions of Hom(P(x), y)
            let iota = &x.omega;
            let (omega, cover) = (iota.source(), iota.target());
            if omega.is_zero() {
                return Ok(out);
            }
            let ambient: usize = omega.dims().iter().zip(y.module.dims()).map(|(a, b)| a * b).sum();
            let restricted = hom_basis(cover, &y.module)?
                .iter()
                .map(|g| iota.then(g).map(|m| m.flatten()))
                .collect::<Result<Vec<_>>>()?;
            let mut span = Subspace::from_vectors(f, ambient, restricted);
            let mut reps = Vec::new();
            for h in hom_basis(omega, &y.module)? {
                let grown = Subspace::from_vectors(f, ambient, span.basis_vecs().into_iter().chain([h.flatten()]).collect());
                if grown.dim() > span.dim() {
                    span = grown;
                    reps.push(h);
                }
            }
            let zero = Morphism::zero(omega, &y.module)?;
            let middle_of = |xi: &Morphism| -> Result<Representation> {
                let target = Representation::direct_sum(&[cover.clone(), y.module.clone()])?;
                let maps = (0..omega.dims().len())
                    .map(|v| iota.map(v).vstack(&xi.map(v).scale(f.neg(1))))
                    .collect();
                Ok(cokernel(&Morphism::new(omega.clone(), target, maps)?)?.0)
            };
            for coeffs in coefficient_vectors(f.p(), reps.len())? {
                // one representative per projective point
                if coeffs.iter().find(|&&c| c != 0) != Some(&1) {
                    continue;
                }
                let res = mask_of(&middle_of(&combine(&reps, &coeffs, &zero))?)?;
                if res & !req != 0 {
                    out.insert((req, res));
                }
            }
            Ok(out)
        })
        .try_reduce(HashSet::new, |mut a, b| {
            a.extend(b);
            Ok(a)
        })?;
    let mut accepted = Vec::new();
    for s in 0u64..(1 << n) {
        if constraints.iter().all(|&(req, res)| req & !s != 0 || res & !s == 0) {
            accepted.push(Subcat::new((0..n).filter(|&i| s >> i & 1 == 1).collect()));
        }
    }
    accepted.sort();
    Ok(accepted)
}
