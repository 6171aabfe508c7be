use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use super::{preprojective_of_type, GradedAlgebra};
use crate::error::Result;
use crate::linalg::Fp;
use crate::quiver::{DynkinKind, DynkinType};

/// Shape data of a basic algebra used to recognise its Morita class:
/// `cartan[i][j] = dim e_j A e_i` and `arrows[i][j]` = number of arrows `i → j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraSignature {
    pub dim: usize,
    pub cartan: Vec<Vec<usize>>,
    pub arrows: Vec<Vec<usize>>,
}

impl AlgebraSignature {
    pub fn of_algebra(a: &GradedAlgebra) -> Self {
        let n = a.vertex_count();
        let mut cartan = vec![vec![0; n]; n];
        let mut arrows = vec![vec![0; n]; n];
        for b in a.basis() {
            cartan[b.source][b.target] += 1;
            if b.degree == 1 {
                arrows[b.source][b.target] += 1;
            }
        }
        AlgebraSignature { dim: a.dim(), cartan, arrows }
    }

    pub fn vertex_count(&self) -> usize {
        self.cartan.len()
    }

    pub fn restrict(&self, vertices: &[usize]) -> Self {
        let pick = |m: &Vec<Vec<usize>>| -> Vec<Vec<usize>> {
            vertices.iter().map(|&i| vertices.iter().map(|&j| m[i][j]).collect()).collect()
        };
        let cartan = pick(&self.cartan);
        let dim = cartan.iter().flatten().sum();
        AlgebraSignature { dim, cartan, arrows: pick(&self.arrows) }
    }

    /// Connected components of the Cartan graph, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let mut stack = vec![s];
            comp[s] = out.len();
            let mut members = Vec::new();
            while let Some(v) = stack.pop() {
                members.push(v);
                for w in 0..n {
                    if comp[w] == usize::MAX && (self.cartan[v][w] > 0 || self.cartan[w][v] > 0) {
                        comp[w] = out.len();
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Whether some relabelling of vertices carries one signature onto the other.
    pub fn equivalent(&self, other: &AlgebraSignature) -> bool {
        let n = self.vertex_count();
        if n != other.vertex_count() || self.dim != other.dim {
            return false;
        }
        let mut perm = vec![usize::MAX; n];
        let mut used = vec![false; n];
        self.extend_match(other, 0, &mut perm, &mut used)
    }

    fn extend_match(&self, other: &AlgebraSignature, i: usize, perm: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let n = self.vertex_count();
        if i == n {
            return true;
        }
        for j in 0..n {
            if used[j] {
                continue;
            }
            perm[i] = j;
            let ok = (0..=i).all(|k| {
                let pk = perm[k];
                self.cartan[i][k] == other.cartan[j][pk]
                    && self.cartan[k][i] == other.cartan[pk][j]
                    && self.arrows[i][k] == other.arrows[j][pk]
                    && self.arrows[k][i] == other.arrows[pk][j]
            });
            if ok {
                used[j] = true;
                if self.extend_match(other, i + 1, perm, used) {
                    return true;
                }
                used[j] = false;
            }
        }
        false
    }
}

/// A connected block of an algebra.
#[derive(Debug)]
pub struct Block {
    pub algebra: GradedAlgebra,
    /// Original vertex numbers (0-based) of the block.
    pub vertices: Vec<usize>,
    pub tag: String,
}

type RefCache = Mutex<HashMap<(DynkinType, u32), AlgebraSignature>>;

fn reference_signature(ty: DynkinType, field: Fp) -> Result<AlgebraSignature> {
    static CACHE: OnceLock<RefCache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(s) = cache.lock().expect("cache poisoned").get(&(ty, field.p())) {
        return Ok(s.clone());
    }
    let sig = AlgebraSignature::of_algebra(&preprojective_of_type(ty, field)?);
    cache.lock().expect("cache poisoned").insert((ty, field.p()), sig.clone());
    Ok(sig)
}

/// Tag of a connected basic algebra: `K`, a Dynkin name like `A2`, or `unrecognized`.
pub fn connected_tag(sig: &AlgebraSignature, field: Fp) -> Result<String> {
    let n = sig.vertex_count();
    if n == 1 && sig.dim == 1 {
        return Ok("K".into());
    }
    let mut candidates = vec![DynkinType::a(n)];
    if n >= 4 {
        candidates.push(DynkinType::new(DynkinKind::D, n)?);
    }
    if (6..=8).contains(&n) {
        candidates.push(DynkinType::new(DynkinKind::E, n)?);
    }
    for ty in candidates {
        if sig.equivalent(&reference_signature(ty, field)?) {
            return Ok(ty.name());
        }
    }
    Ok("unrecognized".into())
}

/// Morita tag of a basic algebra given by its signature: block tags joined by `×`
/// in vertex order, `0` for the zero algebra.
pub fn signature_tag(sig: &AlgebraSignature, field: Fp) -> Result<String> {
    if sig.vertex_count() == 0 {
        return Ok("0".into());
    }
    let tags: Result<Vec<String>> = sig.components().iter().map(|c| connected_tag(&sig.restrict(c), field)).collect();
    Ok(tags?.join("×"))
}

/// Splits an algebra into its connected blocks.
pub fn block_decompose(a: &GradedAlgebra) -> Result<Vec<Block>> {
    let sig = AlgebraSignature::of_algebra(a);
    let mut out = Vec::new();
    for comp in sig.components() {
        let tag = connected_tag(&sig.restrict(&comp), a.field())?;
        let algebra = a.corner(&comp)?;
        let vertices = comp.iter().map(|&v| a.vertex_labels()[v]).collect();
        out.push(Block { algebra, vertices, tag });
    }
    Ok(out)
}

/// The Morita tag of an algebra given by its quiver presentation (already basic).
pub fn morita_tag(a: &GradedAlgebra) -> Result<String> {
    signature_tag(&AlgebraSignature::of_algebra(a), a.field())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::TwoSidedIdeal;
    use std::sync::Arc;

    #[test]
    fn self_tags() {
        let k = Fp::new(1009).unwrap();
        for n in 1..=4 {
            let a = preprojective_of_type(DynkinType::a(n), k).unwrap();
            let expect = if n == 1 { "K".to_string() } else { format!("A{n}") };
            assert_eq!(morita_tag(&a).unwrap(), expect);
            assert_eq!(block_decompose(&a).unwrap().len(), 1);
        }
    }

    #[test]
    fn quotient_blocks() {
        let k = Fp::new(1009).unwrap();
        let a3 = Arc::new(preprojective_of_type(DynkinType::a(3), k).unwrap());
        // killing vertex 2 leaves two isolated vertices
        let q = TwoSidedIdeal::vertex_ideal(&a3, &[1]).quotient().unwrap();
        assert_eq!(morita_tag(&q).unwrap(), "K×K");
        let q = TwoSidedIdeal::vertex_ideal(&a3, &[2]).quotient().unwrap();
        assert_eq!(morita_tag(&q).unwrap(), "A2");
        let z = TwoSidedIdeal::unit(&a3).quotient().unwrap();
        assert_eq!(morita_tag(&z).unwrap(), "0");
        assert!(block_decompose(&z).unwrap().is_empty());
    }
}
