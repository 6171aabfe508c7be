//! Construction of preprojective algebras by graded elimination, and of
//! truncated path algebras (self-injective Nakayama algebras among them).

use std::collections::HashMap;
use std::sync::Arc;

use super::{BasisElement, GradedAlgebra, SparseVec};
use crate::error::{Error, Result};
use crate::linalg::{Fp, Matrix};
use crate::quiver::{double_quiver, dynkin_quiver, Quiver, DynkinType};

/// Degree at which construction gives up.
pub const DEFAULT_MAX_DEGREE: usize = 64;

struct Elem {
    word: Vec<usize>,
    source: usize,
    target: usize,
}

/// The preprojective algebra of a Dynkin type in its default orientation.
pub fn preprojective_of_type(ty: DynkinType, field: Fp) -> Result<GradedAlgebra> {
    let mut alg = preprojective_algebra(&dynkin_quiver(ty), field, DEFAULT_MAX_DEGREE)?;
    alg.name = ty.name();
    Ok(alg)
}

/// `K Q̄ / (Σ αα* − α*α)` for a Dynkin quiver `q`, built degree by degree.
///
/// Degree `d` is spanned by `A_{d-1} ⊗ arrows` modulo `A_{d-2} ⊗ R`, where `R`
/// holds the vertex components of the relation. Columns are ordered so that
/// echelon pivots fall on the largest monomials; the surviving (basis)
/// monomials are therefore the lexicographically smallest ones.
pub fn preprojective_algebra(q: &Quiver, field: Fp, max_degree: usize) -> Result<GradedAlgebra> {
    if q.star().is_some() {
        return Err(Error::Unsupported("expected an undoubled quiver".into()));
    }
    if !q.is_dynkin() {
        return Err(Error::Unsupported("preprojective algebra of a non-Dynkin quiver is infinite-dimensional".into()));
    }
    let dq = double_quiver(q)?;
    let n = dq.vertex_count();
    let m = q.arrows().len();
    let arrows = dq.arrows();

    // r_v in traversal notation: Σ_{t(α)=v} [α*, α] − Σ_{s(α)=v} [α, α*]
    let minus_one = field.neg(1);
    let mut relations: Vec<Vec<(usize, usize, u32)>> = vec![Vec::new(); n];
    for a in 0..m {
        let (s, t) = (arrows[a].source, arrows[a].target);
        relations[t].push((a + m, a, 1));
        relations[s].push((a, a + m, minus_one));
    }

    let mut levels: Vec<Vec<Elem>> = vec![(0..n).map(|v| Elem { word: Vec::new(), source: v, target: v }).collect()];
    // ext[d][b][a]: class of (b then a) for b in level d, as a sparse vector over level d+1
    let mut ext: Vec<Vec<Vec<SparseVec>>> = Vec::new();

    loop {
        let d = levels.len();
        if d > max_degree {
            return Err(Error::Unsupported(format!("construction exceeded degree {max_degree}")));
        }
        let prev = &levels[d - 1];
        let mut cands: Vec<(usize, usize)> = Vec::new();
        for (bi, b) in prev.iter().enumerate() {
            for (ai, a) in arrows.iter().enumerate() {
                if a.source == b.target {
                    cands.push((bi, ai));
                }
            }
        }
        let word_of = |&(bi, ai): &(usize, usize)| {
            let mut w = prev[bi].word.clone();
            w.push(ai);
            w
        };
        // descending order: column 0 holds the largest monomial
        cands.sort_by(|x, y| word_of(y).cmp(&word_of(x)));
        let col_of: HashMap<(usize, usize), usize> = cands.iter().enumerate().map(|(c, &k)| (k, c)).collect();

        let mut rows: Vec<Vec<u32>> = Vec::new();
        if d >= 2 {
            let below = &levels[d - 2];
            let ext_below = &ext[d - 2];
            for (ci, c) in below.iter().enumerate() {
                let mut row = vec![0u32; cands.len()];
                for &(x, y, coef) in &relations[c.target] {
                    for &(k, kc) in &ext_below[ci][x] {
                        if let Some(&col) = col_of.get(&(k as usize, y)) {
                            row[col] = field.mul_add(row[col], coef, kc);
                        }
                    }
                }
                if row.iter().any(|&e| e != 0) {
                    rows.push(row);
                }
            }
        }
        let mut mat = Matrix::from_rows(field, cands.len(), &rows);
        let pivots = mat.rref_in_place();
        let mut is_pivot = vec![usize::MAX; cands.len()];
        for (r, &c) in pivots.iter().enumerate() {
            is_pivot[c] = r;
        }
        // surviving monomials in ascending order
        let mut free: Vec<usize> = (0..cands.len()).filter(|&c| is_pivot[c] == usize::MAX).collect();
        free.reverse();
        let mut level_index = vec![usize::MAX; cands.len()];
        for (k, &c) in free.iter().enumerate() {
            level_index[c] = k;
        }
        let mut ext_here: Vec<Vec<SparseVec>> = vec![vec![Vec::new(); arrows.len()]; prev.len()];
        for (c, &(bi, ai)) in cands.iter().enumerate() {
            let nf: SparseVec = if is_pivot[c] == usize::MAX {
                vec![(level_index[c] as u32, 1)]
            } else {
                let row = mat.row(is_pivot[c]);
                let mut v: SparseVec = free
                    .iter()
                    .filter(|&&j| row[j] != 0)
                    .map(|&j| (level_index[j] as u32, field.neg(row[j])))
                    .collect();
                v.sort_unstable();
                v
            };
            ext_here[bi][ai] = nf;
        }
        ext.push(ext_here);
        let new_level: Vec<Elem> = free
            .iter()
            .map(|&c| {
                let (bi, ai) = cands[c];
                Elem { word: word_of(&cands[c]), source: prev[bi].source, target: arrows[ai].target }
            })
            .collect();
        if new_level.is_empty() {
            break;
        }
        levels.push(new_level);
    }

    let names: Vec<String> = arrows.iter().map(|a| a.name.clone()).collect();
    let star = dq.star().map(|s| s.to_vec());
    assemble(format!("preprojective(Q{})", n), field, n, names, &levels, &ext, star)
}

/// Builds the structure constants by extending the right factor arrow by arrow.
fn assemble(
    name: String,
    field: Fp,
    n: usize,
    names: Vec<String>,
    levels: &[Vec<Elem>],
    ext: &[Vec<Vec<SparseVec>>],
    star: Option<Vec<usize>>,
) -> Result<GradedAlgebra> {
    let mut offsets = Vec::with_capacity(levels.len());
    let mut basis = Vec::new();
    for (d, lvl) in levels.iter().enumerate() {
        offsets.push(basis.len());
        for e in lvl {
            basis.push(BasisElement { degree: d, source: e.source, target: e.target, word: e.word.clone() });
        }
    }
    let dim = basis.len();
    let mut table = vec![vec![Vec::new(); dim]; dim];
    for x in 0..dim {
        for y in 0..dim {
            let (bx, by) = (&basis[x], &basis[y]);
            if bx.source != by.target {
                continue;
            }
            let mut level = by.degree;
            let mut cur: SparseVec = vec![((y - offsets[level]) as u32, 1)];
            for &a in &bx.word {
                if level + 1 >= levels.len() {
                    cur.clear();
                    break;
                }
                let mut acc = vec![0u32; levels[level + 1].len()];
                for &(k, c) in &cur {
                    for &(j, cj) in &ext[level][k as usize][a] {
                        acc[j as usize] = field.mul_add(acc[j as usize], c, cj);
                    }
                }
                level += 1;
                cur = acc.iter().enumerate().filter(|(_, &c)| c != 0).map(|(j, &c)| (j as u32, c)).collect();
                if cur.is_empty() {
                    break;
                }
            }
            table[x][y] = cur.into_iter().map(|(j, c)| ((offsets[level] + j as usize) as u32, c)).collect();
        }
    }
    GradedAlgebra::from_parts(name, field, (0..n).collect(), Arc::new(names), basis, table, star)
}

/// `K Q / R^h`: all paths of length `< h`, longer products vanish.
pub fn truncated_path_algebra(q: &Quiver, h: usize, field: Fp) -> Result<GradedAlgebra> {
    if h == 0 {
        return Err(Error::Unsupported("truncation at length 0 gives the zero ring".into()));
    }
    let n = q.vertex_count();
    let arrows = q.arrows();
    let mut levels: Vec<Vec<Elem>> = vec![(0..n).map(|v| Elem { word: Vec::new(), source: v, target: v }).collect()];
    let mut ext: Vec<Vec<Vec<SparseVec>>> = Vec::new();
    for _ in 1..h {
        let prev = levels.last().expect("level 0 exists");
        let mut next: Vec<Elem> = Vec::new();
        for b in prev {
            for (ai, a) in arrows.iter().enumerate() {
                if a.source == b.target {
                    let mut w = b.word.clone();
                    w.push(ai);
                    next.push(Elem { word: w, source: b.source, target: a.target });
                }
            }
        }
        next.sort_by(|x, y| x.word.cmp(&y.word));
        let index: HashMap<Vec<usize>, usize> = next.iter().enumerate().map(|(i, e)| (e.word.clone(), i)).collect();
        let mut e_here = vec![vec![Vec::new(); arrows.len()]; prev.len()];
        for (bi, b) in prev.iter().enumerate() {
            for ai in 0..arrows.len() {
                let mut w = b.word.clone();
                w.push(ai);
                if let Some(&k) = index.get(&w) {
                    e_here[bi][ai] = vec![(k as u32, 1)];
                }
            }
        }
        ext.push(e_here);
        if next.is_empty() {
            break;
        }
        levels.push(next);
    }
    let names = arrows.iter().map(|a| a.name.clone()).collect();
    assemble(format!("KQ/R^{h}"), field, n, names, &levels, &ext, None)
}

/// The self-injective Nakayama algebra on the cyclic quiver `1 → 2 → … → n → 1`
/// truncated at path length `h`.
pub fn nakayama_algebra(n: usize, h: usize, field: Fp) -> Result<GradedAlgebra> {
    if n < 2 {
        return Err(Error::Unsupported(format!("Nakayama algebra needs at least 2 vertices, got {n}")));
    }
    if h == 0 || h % n != 0 {
        return Err(Error::Unsupported(format!("Nakayama algebra needs n | h, got n = {n}, h = {h}")));
    }
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    let q = Quiver::from_edges(n, &edges)?;
    let mut alg = truncated_path_algebra(&q, h, field)?;
    alg.name = format!("Nakayama({n},{h})");
    Ok(alg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::DynkinKind;

    fn k() -> Fp {
        Fp::new(1009).unwrap()
    }

    #[test]
    fn small_dimensions() {
        assert_eq!(preprojective_of_type(DynkinType::a(1), k()).unwrap().dim(), 1);
        let a2 = preprojective_of_type(DynkinType::a(2), k()).unwrap();
        assert_eq!(a2.dim(), 4);
        assert!(a2.check_associative() && a2.check_unital());
        let a3 = preprojective_of_type(DynkinType::a(3), k()).unwrap();
        assert!(a3.check_associative() && a3.check_unital());
        assert!(a3.bigraded_dim(1, 1) > 1);
    }

    #[test]
    fn nakayama_shape() {
        let a = nakayama_algebra(3, 3, k()).unwrap();
        assert_eq!(a.dim(), 9);
        assert!(a.check_associative() && a.check_unital());
        assert!(nakayama_algebra(3, 4, k()).is_err());
        assert!(nakayama_algebra(1, 3, k()).is_err());
    }

    #[test]
    fn rejects_non_dynkin() {
        let q = Quiver::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(matches!(preprojective_algebra(&q, k(), 64), Err(Error::Unsupported(_))));
    }

    #[test]
    fn d4_corners_are_not_one_dimensional() {
        let a = preprojective_of_type(DynkinType::new(DynkinKind::D, 4).unwrap(), k()).unwrap();
        for v in 0..4 {
            assert!(a.bigraded_dim(v, v) >= 2);
        }
    }
}
