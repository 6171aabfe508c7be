//! Finite-dimensional graded algebras presented by a monomial basis and
//! structure constants.
//!
//! Conventions: a basis element `x` lives in `e_t A e_s` where `s` is its
//! source and `t` its target. The product `x * y` is composition: first `y`,
//! then `x`, so it is nonzero only when `source(x) == target(y)`. Words list
//! arrows in traversal order (first arrow traversed first).

mod blocks;
mod ideal;
mod preprojective;

use std::fmt::Write as _;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::linalg::{Fp, Matrix, Subspace};

pub use blocks::{block_decompose, connected_tag, morita_tag, signature_tag, AlgebraSignature, Block};
pub use ideal::TwoSidedIdeal;
pub use preprojective::{
    nakayama_algebra, preprojective_algebra, preprojective_of_type, truncated_path_algebra, DEFAULT_MAX_DEGREE,
};

/// Sparse vector over the basis: `(index, coefficient)` pairs with nonzero coefficients.
pub type SparseVec = Vec<(u32, u32)>;

/// Which side a module is on; right modules are left modules over the opposite algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElement {
    pub degree: usize,
    pub source: usize,
    pub target: usize,
    /// Monomial representative, arrow ids (into `word_names`) in traversal order.
    pub word: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraArrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
    /// Index of the arrow among the basis elements.
    pub basis: usize,
}

/// A coefficient vector over the full basis of an algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement(pub Vec<u32>);

/// Graded, vertex-bigraded algebra generated in degrees 0 and 1.
pub struct GradedAlgebra {
    name: String,
    field: Fp,
    vertex_labels: Vec<usize>,
    word_names: Arc<Vec<String>>,
    basis: Vec<BasisElement>,
    arrows: Vec<AlgebraArrow>,
    idempotents: Vec<usize>,
    table: Vec<Vec<SparseVec>>,
    factor_left: Vec<Vec<(usize, usize, u32)>>,
    factor_right: Vec<Vec<(usize, usize, u32)>>,
    star: Option<Vec<usize>>,
    self_injective: OnceLock<bool>,
}

impl std::fmt::Debug for GradedAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GradedAlgebra({}, dim {}, {} vertices, F_{})", self.name, self.dim(), self.vertex_count(), self.field.p())
    }
}

impl GradedAlgebra {
    /// Assembles an algebra from its basis and multiplication table.
    ///
    /// Degree-0 elements must be exactly the vertex idempotents (one per vertex,
    /// in vertex order); degree-1 elements become the arrows. The factorisations
    /// used to evaluate representations are solved for here.
    pub fn from_parts(
        name: impl Into<String>,
        field: Fp,
        vertex_labels: Vec<usize>,
        word_names: Arc<Vec<String>>,
        basis: Vec<BasisElement>,
        table: Vec<Vec<SparseVec>>,
        star: Option<Vec<usize>>,
    ) -> Result<GradedAlgebra> {
        let n = vertex_labels.len();
        let mut idempotents = vec![usize::MAX; n];
        for (i, b) in basis.iter().enumerate() {
            if b.degree == 0 {
                if b.source != b.target || idempotents[b.source] != usize::MAX {
                    return Err(Error::Inconsistency("degree-0 basis is not the vertex idempotents".into()));
                }
                idempotents[b.source] = i;
            }
        }
        if idempotents.iter().any(|&i| i == usize::MAX) {
            return Err(Error::Inconsistency("missing vertex idempotent".into()));
        }
        let arrows: Vec<AlgebraArrow> = basis
            .iter()
            .enumerate()
            .filter(|(_, b)| b.degree == 1)
            .map(|(i, b)| AlgebraArrow { name: word_label(&word_names, &b.word), source: b.source, target: b.target, basis: i })
            .collect();
        let mut alg = GradedAlgebra {
            name: name.into(),
            field,
            vertex_labels,
            word_names,
            basis,
            arrows,
            idempotents,
            table,
            factor_left: Vec::new(),
            factor_right: Vec::new(),
            star,
            self_injective: OnceLock::new(),
        };
        alg.factor_left = alg.factorise(Side::Left)?;
        alg.factor_right = alg.factorise(Side::Right)?;
        Ok(alg)
    }

    /// Writes every basis element of degree >= 2 as a combination of
    /// `arrow * b'` (left) or `b' * arrow` (right) with `b'` one degree lower.
    fn factorise(&self, side: Side) -> Result<Vec<Vec<(usize, usize, u32)>>> {
        let dim = self.dim();
        let mut out = vec![Vec::new(); dim];
        let max_deg = self.basis.iter().map(|b| b.degree).max().unwrap_or(0);
        for d in 2..=max_deg {
            let targets: Vec<usize> = (0..dim).filter(|&i| self.basis[i].degree == d).collect();
            let lower: Vec<usize> = (0..dim).filter(|&i| self.basis[i].degree == d - 1).collect();
            let mut gens = Vec::new();
            for (ai, a) in self.arrows.iter().enumerate() {
                for &b in &lower {
                    let prod = match side {
                        Side::Left => &self.table[a.basis][b],
                        Side::Right => &self.table[b][a.basis],
                    };
                    if !prod.is_empty() {
                        gens.push((ai, b, prod));
                    }
                }
            }
            let pos: std::collections::HashMap<usize, usize> = targets.iter().enumerate().map(|(k, &i)| (i, k)).collect();
            let mut m = Matrix::zeros(self.field, targets.len(), gens.len());
            for (c, (_, _, prod)) in gens.iter().enumerate() {
                for &(idx, coef) in prod.iter() {
                    let Some(&r) = pos.get(&(idx as usize)) else {
                        return Err(Error::Inconsistency("product leaves its degree".into()));
                    };
                    m.set(r, c, coef);
                }
            }
            let sol = m
                .solve_matrix(&Matrix::identity(self.field, targets.len()))
                .ok_or_else(|| Error::Inconsistency(format!("algebra {} is not generated in degree 1", self.name)))?;
            for (k, &t) in targets.iter().enumerate() {
                out[t] = (0..gens.len())
                    .filter(|&c| sol.get(c, k) != 0)
                    .map(|c| (gens[c].0, gens[c].1, sol.get(c, k)))
                    .collect();
            }
        }
        Ok(out)
    }

    pub fn name(&self) -> &str {
        &self.name
    }
    pub fn field(&self) -> Fp {
        self.field
    }
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn vertex_count(&self) -> usize {
        self.vertex_labels.len()
    }
    /// Original (0-based) vertex numbers of the vertices of this algebra.
    pub fn vertex_labels(&self) -> &[usize] {
        &self.vertex_labels
    }
    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }
    pub fn arrows(&self) -> &[AlgebraArrow] {
        &self.arrows
    }
    pub fn idempotent(&self, v: usize) -> usize {
        self.idempotents[v]
    }
    pub fn star(&self) -> Option<&[usize]> {
        self.star.as_deref()
    }
    pub fn word_names(&self) -> &Arc<Vec<String>> {
        &self.word_names
    }
    pub fn max_degree(&self) -> usize {
        self.basis.iter().map(|b| b.degree).max().unwrap_or(0)
    }

    /// Product of two basis elements.
    pub fn product(&self, x: usize, y: usize) -> &SparseVec {
        &self.table[x][y]
    }

    /// Action of basis element `a` on basis element `x` from the given side:
    /// `a * x` for left modules, `x * a` for right modules.
    pub fn act(&self, side: Side, a: usize, x: usize) -> &SparseVec {
        match side {
            Side::Left => &self.table[a][x],
            Side::Right => &self.table[x][a],
        }
    }

    /// `(from, to)` vertices of basis element `b` as an operator on modules of the given side.
    pub fn ends(&self, side: Side, b: usize) -> (usize, usize) {
        let e = &self.basis[b];
        match side {
            Side::Left => (e.source, e.target),
            Side::Right => (e.target, e.source),
        }
    }

    pub fn arrow_ends(&self, side: Side, a: usize) -> (usize, usize) {
        self.ends(side, self.arrows[a].basis)
    }

    pub(crate) fn factorisation(&self, side: Side, b: usize) -> &[(usize, usize, u32)] {
        match side {
            Side::Left => &self.factor_left[b],
            Side::Right => &self.factor_right[b],
        }
    }

    /// `dim e_j A e_i`, i.e. the number of basis elements from `i` to `j`.
    pub fn bigraded_dim(&self, i: usize, j: usize) -> usize {
        self.basis.iter().filter(|b| b.source == i && b.target == j).count()
    }

    pub fn basis_label(&self, b: usize) -> String {
        let e = &self.basis[b];
        if e.degree == 0 {
            format!("e{}", self.vertex_labels[e.source] + 1)
        } else {
            word_label(&self.word_names, &e.word)
        }
    }

    pub fn zero_element(&self) -> AlgebraElement {
        AlgebraElement(vec![0; self.dim()])
    }

    pub fn unit_element(&self) -> AlgebraElement {
        let mut v = vec![0; self.dim()];
        for &i in &self.idempotents {
            v[i] = 1;
        }
        AlgebraElement(v)
    }

    pub fn basis_element(&self, b: usize) -> AlgebraElement {
        let mut v = vec![0; self.dim()];
        v[b] = 1;
        AlgebraElement(v)
    }

    /// Bilinear product of two elements.
    pub fn multiply(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        AlgebraElement(self.multiply_vecs(&x.0, &y.0))
    }

    pub(crate) fn multiply_vecs(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let f = self.field;
        let mut out = vec![0u32; self.dim()];
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let ab = f.mul(a, b);
                for &(k, c) in &self.table[i][j] {
                    out[k as usize] = f.mul_add(out[k as usize], ab, c);
                }
            }
        }
        out
    }

    /// Checks associativity on every triple of basis elements.
    pub fn check_associative(&self) -> bool {
        let d = self.dim();
        for x in 0..d {
            for y in 0..d {
                let xy = sparse_to_dense(&self.table[x][y], d);
                for z in 0..d {
                    let lhs = self.multiply_vecs(&xy, &self.basis_element(z).0);
                    let yz = sparse_to_dense(&self.table[y][z], d);
                    let rhs = self.multiply_vecs(&self.basis_element(x).0, &yz);
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Checks that the sum of the vertex idempotents is a two-sided identity.
    pub fn check_unital(&self) -> bool {
        let one = self.unit_element();
        (0..self.dim()).all(|b| {
            let x = self.basis_element(b);
            self.multiply(&one, &x) == x && self.multiply(&x, &one) == x
        })
    }

    /// Same basis, reversed multiplication.
    pub fn opposite(&self) -> Result<GradedAlgebra> {
        let d = self.dim();
        let basis = self
            .basis
            .iter()
            .map(|b| BasisElement { degree: b.degree, source: b.target, target: b.source, word: b.word.iter().rev().copied().collect() })
            .collect();
        let table = (0..d).map(|x| (0..d).map(|y| self.table[y][x].clone()).collect()).collect();
        let name = match self.name.strip_suffix("^op") {
            Some(base) => base.to_string(),
            None => format!("{}^op", self.name),
        };
        GradedAlgebra::from_parts(name, self.field, self.vertex_labels.clone(), self.word_names.clone(), basis, table, self.star.clone())
    }

    /// The algebra `A / I` with basis the complement of the ideal's echelon pivots.
    pub fn quotient(&self, ideal: &Subspace) -> Result<GradedAlgebra> {
        if ideal.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: ideal.ambient_dim() });
        }
        let keep = ideal.non_pivots();
        self.restricted(&keep, Some(ideal), format!("{}/I", self.name))
    }

    /// The corner algebra `eAe` for `e` the sum of idempotents of `vertices`.
    pub fn corner(&self, vertices: &[usize]) -> Result<GradedAlgebra> {
        let keep: Vec<usize> = (0..self.dim())
            .filter(|&b| vertices.contains(&self.basis[b].source) && vertices.contains(&self.basis[b].target))
            .collect();
        self.restricted(&keep, None, format!("{}[{}]", self.name, vertices.iter().map(|v| (self.vertex_labels[*v] + 1).to_string()).collect::<Vec<_>>().join(",")))
    }

    fn restricted(&self, keep: &[usize], ideal: Option<&Subspace>, name: String) -> Result<GradedAlgebra> {
        let d = self.dim();
        let mut new_index = vec![usize::MAX; d];
        for (k, &b) in keep.iter().enumerate() {
            new_index[b] = k;
        }
        let vertices: Vec<usize> = (0..self.vertex_count()).filter(|&v| new_index[self.idempotents[v]] != usize::MAX).collect();
        let mut vmap = vec![usize::MAX; self.vertex_count()];
        for (k, &v) in vertices.iter().enumerate() {
            vmap[v] = k;
        }
        let basis: Vec<BasisElement> = keep
            .iter()
            .map(|&b| {
                let e = &self.basis[b];
                BasisElement { degree: e.degree, source: vmap[e.source], target: vmap[e.target], word: e.word.clone() }
            })
            .collect();
        if basis.iter().any(|b| b.source == usize::MAX || b.target == usize::MAX) {
            return Err(Error::Inconsistency("surviving basis element at a killed vertex".into()));
        }
        let mut table = vec![vec![Vec::new(); keep.len()]; keep.len()];
        for (i, &x) in keep.iter().enumerate() {
            for (j, &y) in keep.iter().enumerate() {
                let prod = &self.table[x][y];
                if prod.is_empty() {
                    continue;
                }
                let dense = sparse_to_dense(prod, d);
                let reduced = match ideal {
                    Some(s) => s.reduce(&dense),
                    None => dense,
                };
                let mut sv = Vec::new();
                for (k, &c) in reduced.iter().enumerate() {
                    if c != 0 {
                        if new_index[k] == usize::MAX {
                            return Err(Error::Inconsistency("product leaves the retained span".into()));
                        }
                        sv.push((new_index[k] as u32, c));
                    }
                }
                sv.sort_unstable();
                table[i][j] = sv;
            }
        }
        let labels = vertices.iter().map(|&v| self.vertex_labels[v]).collect();
        GradedAlgebra::from_parts(name, self.field, labels, self.word_names.clone(), basis, table, None)
    }

    /// Deterministic text dump: per-degree basis representatives and all
    /// nonzero structure constants.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        let f = self.field;
        writeln!(s, "algebra {}", self.name).unwrap();
        writeln!(s, "field {}", f.p()).unwrap();
        writeln!(s, "vertices {}", self.vertex_labels.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(" ")).unwrap();
        writeln!(s, "dimension {}", self.dim()).unwrap();
        for d in 0..=self.max_degree() {
            let items: Vec<String> = (0..self.dim())
                .filter(|&b| self.basis[b].degree == d)
                .map(|b| {
                    let e = &self.basis[b];
                    format!("{}:{}({}->{})", b, self.basis_label(b), self.vertex_labels[e.source] + 1, self.vertex_labels[e.target] + 1)
                })
                .collect();
            writeln!(s, "degree {} : {}", d, items.join(" ")).unwrap();
        }
        writeln!(s, "products").unwrap();
        for x in 0..self.dim() {
            for y in 0..self.dim() {
                let prod = &self.table[x][y];
                if prod.is_empty() {
                    continue;
                }
                let terms: Vec<String> = prod.iter().map(|&(k, c)| format!("{}*{}", f.lift(c), k)).collect();
                writeln!(s, "{} {} = {}", x, y, terms.join(" + ")).unwrap();
            }
        }
        s
    }

    pub(crate) fn cached_self_injective(&self) -> &OnceLock<bool> {
        &self.self_injective
    }
}

pub(crate) fn sparse_to_dense(v: &SparseVec, n: usize) -> Vec<u32> {
    let mut out = vec![0; n];
    for &(i, c) in v {
        out[i as usize] = c;
    }
    out
}

fn word_label(names: &[String], word: &[usize]) -> String {
    // composition order: last traversed arrow first
    word.iter().rev().map(|&a| names[a].as_str()).collect::<Vec<_>>().join(".")
}

/// `multiply(a, x, y)` as a free function.
pub fn multiply(a: &GradedAlgebra, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
    a.multiply(x, y)
}

/// `opposite_algebra(a)` as a free function.
pub fn opposite_algebra(a: &GradedAlgebra) -> Result<GradedAlgebra> {
    a.opposite()
}

/// `quotient_algebra(a, i)` as a free function.
pub fn quotient_algebra(ideal: &TwoSidedIdeal) -> Result<GradedAlgebra> {
    ideal.algebra().quotient(ideal.space())
}
