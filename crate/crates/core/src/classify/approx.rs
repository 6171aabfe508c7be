use super::Subcat;
use crate::algebra::{signature_tag, AlgebraSignature};
use crate::error::Result;
use crate::linalg::{poly_roots, Matrix, Subspace};
use crate::modrep::{hom_basis, IndecId, IndecRegistry, Morphism, Representation};

/// Minimal left `add(members)`-approximation `x → T₀`.
///
/// Starts from the universal map into one copy of each member per basis map
/// `x → member` and greedily drops summands while every `Hom(T₀, z) → Hom(x, z)`
/// stays surjective.
pub fn minimal_left_approx(x: &Representation, members: &[Representation]) -> Result<Morphism> {
    let f = x.algebra().field();
    // summands: (member index, map x → member)
    let mut summands: Vec<(usize, Morphism)> = Vec::new();
    for (k, z) in members.iter().enumerate() {
        for h in hom_basis(x, z)? {
            summands.push((k, h));
        }
    }
    // images[z][j]: the vectors g ∘ h_j for g ∈ Hom(member_j, z)
    let mut targets_dim = Vec::with_capacity(members.len());
    let mut images: Vec<Vec<Vec<Vec<u32>>>> = Vec::with_capacity(members.len());
    let mut ambient = Vec::with_capacity(members.len());
    let homs_between: Vec<Vec<Vec<Morphism>>> = members
        .iter()
        .map(|m| members.iter().map(|z| hom_basis(m, z)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    for (zi, z) in members.iter().enumerate() {
        targets_dim.push(crate::modrep::hom_dim(x, z)?);
        ambient.push(x.dims().iter().zip(z.dims()).map(|(a, b)| a * b).sum::<usize>());
        let per: Vec<Vec<Vec<u32>>> = summands
            .iter()
            .map(|(k, h)| homs_between[*k][zi].iter().map(|g| h.then(g).map(|m| m.flatten())).collect::<Result<_>>())
            .collect::<Result<_>>()?;
        images.push(per);
    }
    let approximates = |keep: &[bool]| -> bool {
        (0..members.len()).all(|zi| {
            let vecs: Vec<Vec<u32>> = images[zi]
                .iter()
                .zip(keep)
                .filter(|(_, &k)| k)
                .flat_map(|(v, _)| v.iter().cloned())
                .collect();
            Subspace::from_vectors(f, ambient[zi], vecs).dim() == targets_dim[zi]
        })
    };
    let mut keep = vec![true; summands.len()];
    for j in (0..summands.len()).rev() {
        keep[j] = false;
        if !approximates(&keep) {
            keep[j] = true;
        }
    }
    let chosen: Vec<&(usize, Morphism)> = summands.iter().zip(&keep).filter(|(_, &k)| k).map(|(s, _)| s).collect();
    if chosen.is_empty() {
        return Morphism::zero(x, &Representation::zero(x.algebra(), x.side()));
    }
    let target = Representation::direct_sum(&chosen.iter().map(|(k, _)| members[*k].clone()).collect::<Vec<_>>())?;
    let maps = (0..x.dims().len())
        .map(|v| chosen.iter().skip(1).fold(chosen[0].1.map(v).clone(), |acc, (_, h)| acc.vstack(h.map(v))))
        .collect();
    Morphism::new(x.clone(), target, maps)
}

/// The ring-epimorphism target attached to a wide subcategory.
#[derive(Clone, Debug)]
pub struct EpiTarget {
    /// `C`, the minimal left approximation of the regular module.
    pub module: Representation,
    /// Summands of `C` as `(id, multiplicity)`.
    pub summands: Vec<(IndecId, usize)>,
    /// `dim End(C)`.
    pub end_dim: usize,
    /// Shape of the basic version of `End(C)^op`.
    pub signature: AlgebraSignature,
    pub tag: String,
}

fn nilpotent_part(f: crate::linalg::Fp, basis: &[Morphism]) -> Vec<Vec<u32>> {
    // End of an indecomposable is local: h − λ_h is nilpotent for its unique eigenvalue
    basis
        .iter()
        .map(|h| {
            let g = Matrix::block_diag(f, h.maps());
            let lambda = poly_roots(f, &g.char_poly()).first().copied().unwrap_or(0);
            h.add_scaled(&Morphism::identity(h.source()), f.neg(lambda)).flatten()
        })
        .collect()
}

/// `C`, `End(C)^op` and its Morita tag for the wide subcategory `wide`.
pub fn epi_target(reg: &IndecRegistry, wide: &Subcat) -> Result<EpiTarget> {
    let a = reg.algebra();
    let f = a.field();
    let regular = crate::modrep::regular_module(a, reg.side());
    let members: Vec<Representation> = wide.ids().iter().map(|&i| reg.get(i).clone()).collect();
    let phi = minimal_left_approx(&regular, &members)?;
    let module = phi.target().clone();
    let summands = if module.is_zero() { Vec::new() } else { reg.decompose(&module)? };
    let ids: Vec<IndecId> = summands.iter().map(|&(i, _)| i).collect();
    let n = ids.len();
    let reps: Vec<&Representation> = ids.iter().map(|&i| reg.get(i)).collect();
    // radical maps between the distinct summands
    let mut rad: Vec<Vec<Vec<Morphism>>> = vec![vec![Vec::new(); n]; n];
    let mut cartan = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            let basis = hom_basis(reps[i], reps[j])?;
            cartan[i][j] = basis.len();
            rad[i][j] = if i == j {
                let vecs = nilpotent_part(f, &basis);
                let len = vecs.first().map_or(0, |v| v.len());
                let space = Subspace::from_vectors(f, len, vecs);
                space.basis_vecs().iter().map(|v| Morphism::from_flat(reps[i], reps[j], v)).collect::<Result<_>>()?
            } else {
                basis
            };
        }
    }
    let mut arrows = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            let len: usize = reps[i].dims().iter().zip(reps[j].dims()).map(|(a, b)| a * b).sum();
            let mut sq = Vec::new();
            for k in 0..n {
                for p in &rad[i][k] {
                    for q in &rad[k][j] {
                        sq.push(p.then(q)?.flatten());
                    }
                }
            }
            arrows[i][j] = rad[i][j].len() - Subspace::from_vectors(f, len, sq).dim();
        }
    }
    let end_dim = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| summands[i].1 * summands[j].1 * cartan[i][j]).sum();
    let dim = cartan.iter().flatten().sum();
    let signature = AlgebraSignature { dim, cartan, arrows };
    let tag = signature_tag(&signature, f)?;
    Ok(EpiTarget { module, summands, end_dim, signature, tag })
}

/// Multiset comparison of `×`-separated block tags.
pub fn same_tag(x: &str, y: &str) -> bool {
    let split = |s: &str| {
        let mut v: Vec<String> = s.split('×').map(str::to_string).collect();
        v.sort();
        v
    };
    split(x) == split(y)
}
