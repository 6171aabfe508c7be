//! Weyl groups of simply-laced Dynkin graphs in their reflection representation.
//!
//! Words are 0-based internally; `w = s_{i_1} ⋯ s_{i_p}` is stored as
//! `[i_1, …, i_p]` and acts on the root lattice by the matrix product
//! `S_{i_1} ⋯ S_{i_p}`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::quiver::{DynkinType, Quiver};

/// Default cap on `enumerate_all`.
pub const DEFAULT_ENUMERATION_CAP: usize = 200_000;

/// Square integer matrix, row-major.
pub type IntMatrix = Vec<i32>;

#[derive(Clone, Debug)]
pub struct WeylGroup {
    rank: usize,
    cartan: Vec<Vec<i32>>,
    gens: Vec<IntMatrix>,
    positive_roots: Vec<Vec<i32>>,
}

/// A group element: reflection matrix, shortlex-minimal reduced word, length.
#[derive(Clone, Debug)]
pub struct WeylElement {
    matrix: IntMatrix,
    word: Vec<usize>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}
impl Eq for WeylElement {}
impl std::hash::Hash for WeylElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.matrix.hash(state)
    }
}

impl WeylElement {
    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }
    /// Shortlex-minimal reduced word (0-based generators).
    pub fn word(&self) -> &[usize] {
        &self.word
    }
    pub fn length(&self) -> usize {
        self.word.len()
    }
    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }
    /// `(length, word)` sort key used for every listing.
    pub fn sort_key(&self) -> (usize, Vec<usize>) {
        (self.word.len(), self.word.clone())
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_word(&self.word))
    }
}

/// Comma-separated 1-based word, `e` for the empty word.
pub fn format_word(word: &[usize]) -> String {
    if word.is_empty() {
        return "e".into();
    }
    word.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(",")
}

/// Parses `"3,2,3"` (1-based) into a 0-based word; `""` and `"e"` give the empty word.
pub fn parse_word(s: &str, rank: usize) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() || s == "e" {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            let v: usize = t.trim().parse().map_err(|_| Error::Parse(format!("bad word entry {t:?}")))?;
            if v == 0 || v > rank {
                return Err(Error::InvalidVertex { vertex: v, count: rank });
            }
            Ok(v - 1)
        })
        .collect()
}

fn mat_mul(n: usize, a: &[i32], b: &[i32]) -> IntMatrix {
    let mut out = vec![0; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x == 0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] += x * b[k * n + j];
            }
        }
    }
    out
}

fn mat_vec(n: usize, a: &[i32], v: &[i32]) -> Vec<i32> {
    (0..n).map(|i| (0..n).map(|j| a[i * n + j] * v[j]).sum()).collect()
}

impl WeylGroup {
    /// The Weyl group of the underlying graph of a Dynkin quiver.
    pub fn of_quiver(q: &Quiver) -> Result<Self> {
        if !q.is_dynkin() {
            return Err(Error::Unsupported("Weyl group of a non-Dynkin graph is infinite".into()));
        }
        let n = q.vertex_count();
        let mut cartan = vec![vec![0i32; n]; n];
        for (i, row) in cartan.iter_mut().enumerate() {
            row[i] = 2;
        }
        for a in q.arrows() {
            cartan[a.source][a.target] = -1;
            cartan[a.target][a.source] = -1;
        }
        Ok(Self::from_cartan(cartan))
    }

    pub fn of_type(ty: DynkinType) -> Self {
        let q = crate::quiver::dynkin_quiver(ty);
        Self::of_quiver(&q).expect("Dynkin quiver")
    }

    fn from_cartan(cartan: Vec<Vec<i32>>) -> Self {
        let n = cartan.len();
        // s_i(x) = x - (Σ_j C_ij x_j) e_i
        let gens: Vec<IntMatrix> = (0..n)
            .map(|i| {
                let mut m = vec![0; n * n];
                for r in 0..n {
                    m[r * n + r] = 1;
                }
                for j in 0..n {
                    m[i * n + j] -= cartan[i][j];
                }
                m
            })
            .collect();
        let mut g = WeylGroup { rank: n, cartan, gens, positive_roots: Vec::new() };
        g.positive_roots = g.compute_positive_roots();
        g
    }

    fn compute_positive_roots(&self) -> Vec<Vec<i32>> {
        let n = self.rank;
        let mut seen: HashSet<Vec<i32>> = HashSet::new();
        let mut queue: VecDeque<Vec<i32>> = VecDeque::new();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            seen.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(r) = queue.pop_front() {
            for g in &self.gens {
                let s = mat_vec(n, g, &r);
                if s.iter().all(|&x| x >= 0) && seen.insert(s.clone()) {
                    queue.push_back(s);
                }
            }
        }
        let mut roots: Vec<Vec<i32>> = seen.into_iter().collect();
        roots.sort();
        roots
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }
    pub fn positive_roots(&self) -> &[Vec<i32>] {
        &self.positive_roots
    }

    fn identity_matrix(&self) -> IntMatrix {
        let n = self.rank;
        let mut m = vec![0; n * n];
        for i in 0..n {
            m[i * n + i] = 1;
        }
        m
    }

    /// Number of positive roots sent to negative roots.
    pub fn matrix_length(&self, m: &[i32]) -> usize {
        self.positive_roots.iter().filter(|r| mat_vec(self.rank, m, r).iter().any(|&x| x < 0)).count()
    }

    fn word_matrix(&self, word: &[usize]) -> IntMatrix {
        word.iter().fold(self.identity_matrix(), |acc, &i| mat_mul(self.rank, &acc, &self.gens[i]))
    }

    fn element_from_matrix(&self, matrix: IntMatrix) -> WeylElement {
        let n = self.rank;
        let mut word = Vec::new();
        let mut cur = matrix.clone();
        let mut len = self.matrix_length(&cur);
        while len > 0 {
            // smallest left descent: l(s_i w) < l(w)
            let (i, next) = (0..n)
                .map(|i| (i, mat_mul(n, &self.gens[i], &cur)))
                .find(|(_, m)| self.matrix_length(m) < len)
                .expect("nonidentity element has a left descent");
            word.push(i);
            cur = next;
            len -= 1;
        }
        WeylElement { matrix, word }
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement { matrix: self.identity_matrix(), word: Vec::new() }
    }

    pub fn generator(&self, i: usize) -> Result<WeylElement> {
        self.from_word(&[i])
    }

    pub fn from_word(&self, word: &[usize]) -> Result<WeylElement> {
        if let Some(&bad) = word.iter().find(|&&i| i >= self.rank) {
            return Err(Error::InvalidVertex { vertex: bad + 1, count: self.rank });
        }
        Ok(self.element_from_matrix(self.word_matrix(word)))
    }

    pub fn multiply(&self, x: &WeylElement, y: &WeylElement) -> WeylElement {
        self.element_from_matrix(mat_mul(self.rank, &x.matrix, &y.matrix))
    }

    pub fn inverse(&self, x: &WeylElement) -> WeylElement {
        let rev: Vec<usize> = x.word.iter().rev().copied().collect();
        self.element_from_matrix(self.word_matrix(&rev))
    }

    pub fn length(&self, x: &WeylElement) -> usize {
        x.word.len()
    }

    pub fn is_reduced(&self, word: &[usize]) -> Result<bool> {
        Ok(self.from_word(word)?.length() == word.len())
    }

    /// All elements, sorted by `(length, shortlex word)`.
    pub fn enumerate_all(&self, cap: usize) -> Result<Vec<WeylElement>> {
        let n = self.rank;
        let mut seen: HashSet<IntMatrix> = HashSet::new();
        let mut queue = VecDeque::new();
        let id = self.identity_matrix();
        seen.insert(id.clone());
        queue.push_back(id);
        while let Some(m) = queue.pop_front() {
            for g in &self.gens {
                let next = mat_mul(n, &m, g);
                if !seen.contains(&next) {
                    if seen.len() >= cap {
                        return Err(Error::Unsupported(format!("Weyl group has more than {cap} elements")));
                    }
                    seen.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }
        let mut out: Vec<WeylElement> = seen.into_iter().map(|m| self.element_from_matrix(m)).collect();
        out.sort_by_key(|w| w.sort_key());
        Ok(out)
    }

    pub fn longest_element(&self) -> Result<WeylElement> {
        // w0 sends every positive root to a negative one; build it by descents
        let n = self.rank;
        let mut cur = self.identity_matrix();
        let mut len = 0;
        loop {
            let step = (0..n).map(|i| mat_mul(n, &cur, &self.gens[i])).find(|m| self.matrix_length(m) > len);
            match step {
                Some(m) => {
                    cur = m;
                    len += 1;
                }
                None => break,
            }
        }
        Ok(self.element_from_matrix(cur))
    }

    /// Every reduced word of `w`, in lexicographic order.
    pub fn all_reduced_words(&self, w: &WeylElement) -> Vec<Vec<usize>> {
        let mut memo: HashMap<IntMatrix, Vec<Vec<usize>>> = HashMap::new();
        self.reduced_words_rec(&w.matrix, w.length(), &mut memo)
    }

    fn reduced_words_rec(&self, m: &IntMatrix, len: usize, memo: &mut HashMap<IntMatrix, Vec<Vec<usize>>>) -> Vec<Vec<usize>> {
        if len == 0 {
            return vec![Vec::new()];
        }
        if let Some(v) = memo.get(m) {
            return v.clone();
        }
        let n = self.rank;
        let mut out = Vec::new();
        for i in 0..n {
            let next = mat_mul(n, &self.gens[i], m);
            if self.matrix_length(&next) < len {
                for tail in self.reduced_words_rec(&next, len - 1, memo) {
                    let mut w = vec![i];
                    w.extend(tail);
                    out.push(w);
                }
            }
        }
        memo.insert(m.clone(), out.clone());
        out
    }

    /// Image in `Σ_4` under `s_1 ↦ (34)`, `s_2 ↦ (23)`, `s_3 ↦ (12)`, in cycle
    /// notation. The word is read as a composition of functions, rightmost
    /// letter applied first.
    pub fn sigma4_label(&self, w: &WeylElement) -> Result<String> {
        if !self.is_type_a3() {
            return Err(Error::Unsupported("Σ4 labels are defined for A3 only".into()));
        }
        let gens: [[usize; 4]; 3] = [[0, 1, 3, 2], [0, 2, 1, 3], [1, 0, 2, 3]];
        let mut perm = [0usize, 1, 2, 3];
        for &i in w.word.iter().rev() {
            // perm := g_i ∘ perm
            let g = gens[i];
            perm = [g[perm[0]], g[perm[1]], g[perm[2]], g[perm[3]]];
        }
        Ok(cycle_notation(&perm))
    }

    fn is_type_a3(&self) -> bool {
        self.cartan == vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]
    }
}

/// Cycle notation with 1-based points, each cycle led by its smallest point,
/// fixed points omitted; the identity is `1`.
pub fn cycle_notation(perm: &[usize]) -> String {
    let mut seen = vec![false; perm.len()];
    let mut s = String::new();
    for start in 0..perm.len() {
        if seen[start] || perm[start] == start {
            continue;
        }
        s.push('(');
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            s.push_str(&(x + 1).to_string());
            x = perm[x];
        }
        s.push(')');
    }
    if s.is_empty() {
        "1".into()
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(n: usize) -> WeylGroup {
        WeylGroup::of_type(DynkinType::a(n))
    }

    #[test]
    fn orders() {
        assert_eq!(a(1).enumerate_all(100).unwrap().len(), 2);
        assert_eq!(a(2).enumerate_all(100).unwrap().len(), 6);
        let w3 = a(3).enumerate_all(100).unwrap();
        assert_eq!(w3.len(), 24);
        assert_eq!(w3.last().unwrap().length(), 6);
        assert_eq!(a(4).enumerate_all(1000).unwrap().len(), 120);
        assert!(a(4).enumerate_all(50).is_err());
    }

    #[test]
    fn relations() {
        let g = a(3);
        assert!(g.from_word(&[0, 0]).unwrap().is_identity());
        assert_eq!(g.from_word(&[0, 2]).unwrap(), g.from_word(&[2, 0]).unwrap());
        assert_eq!(g.from_word(&[0, 1, 0]).unwrap(), g.from_word(&[1, 0, 1]).unwrap());
        assert_eq!(g.from_word(&[2, 0]).unwrap().word(), &[0, 2]);
        assert!(!g.is_reduced(&[0, 1, 0, 1]).unwrap());
        assert!(g.from_word(&[3]).is_err());
    }

    #[test]
    fn lengths_match_inversions_and_inverse() {
        let g = a(3);
        for w in g.enumerate_all(100).unwrap() {
            assert_eq!(g.matrix_length(w.matrix()), w.length());
            assert_eq!(g.inverse(&w).length(), w.length());
            assert!(g.is_reduced(w.word()).unwrap());
            assert_eq!(g.from_word(w.word()).unwrap(), w);
        }
    }

    #[test]
    fn longest_and_labels() {
        let g = a(3);
        let w0 = g.longest_element().unwrap();
        assert_eq!(w0.length(), 6);
        assert_eq!(g.sigma4_label(&w0).unwrap(), "(14)(23)");
        assert_eq!(g.sigma4_label(&g.identity()).unwrap(), "1");
        assert_eq!(g.sigma4_label(&g.generator(0).unwrap()).unwrap(), "(34)");
        assert_eq!(g.sigma4_label(&g.from_word(&[2, 1, 2]).unwrap()).unwrap(), "(13)");
        assert!(a(2).sigma4_label(&a(2).identity()).is_err());
        assert_eq!(a(1).longest_element().unwrap().word(), &[0]);
    }

    #[test]
    fn word_syntax() {
        assert_eq!(parse_word("3,2,3", 3).unwrap(), vec![2, 1, 2]);
        assert_eq!(parse_word("", 3).unwrap(), Vec::<usize>::new());
        assert!(parse_word("4", 3).is_err());
        assert!(parse_word("x", 3).is_err());
        assert_eq!(format_word(&[2, 1, 2]), "3,2,3");
        assert_eq!(format_word(&[]), "e");
    }
}
