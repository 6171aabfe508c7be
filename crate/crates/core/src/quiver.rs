//! Quivers, Dynkin diagrams and double quivers.
//!
//! Vertices are 0-based internally; every user-facing string prints them 1-based.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DynkinKind {
    A,
    D,
    E,
}

/// A simply-laced Dynkin diagram `A_n`, `D_n` or `E_6..8`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DynkinType {
    pub kind: DynkinKind,
    pub rank: usize,
}

impl DynkinType {
    pub fn new(kind: DynkinKind, rank: usize) -> Result<Self> {
        let ok = match kind {
            DynkinKind::A => rank >= 1,
            DynkinKind::D => rank >= 4,
            DynkinKind::E => (6..=8).contains(&rank),
        };
        if !ok {
            return Err(Error::InvalidType(format!("{kind:?}{rank}")));
        }
        Ok(DynkinType { kind, rank })
    }

    pub fn a(rank: usize) -> Self {
        Self::new(DynkinKind::A, rank).expect("A_n needs n >= 1")
    }

    /// Edges of the default orientation, as 0-based `(source, target)` pairs.
    ///
    /// `A_n`: 1 -> 2 -> ... -> n. `D_n` and `E_n`: every arrow points toward the
    /// branch vertex (vertex n-2 for `D_n`, vertex 4 in Bourbaki numbering for `E_n`).
    pub fn oriented_edges(self) -> Vec<(usize, usize)> {
        let n = self.rank;
        match self.kind {
            DynkinKind::A => (0..n - 1).map(|i| (i, i + 1)).collect(),
            DynkinKind::D => {
                let branch = n - 3;
                let mut e: Vec<_> = (0..branch).map(|i| (i, i + 1)).collect();
                e.push((n - 2, branch));
                e.push((n - 1, branch));
                e
            }
            DynkinKind::E => {
                // Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4; branch = 4.
                let mut e = vec![(0, 2), (2, 3), (1, 3), (4, 3)];
                for v in 5..n {
                    e.push((v, v - 1));
                }
                e
            }
        }
    }

    pub fn name(self) -> String {
        format!("{self}")
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.kind, self.rank)
    }
}

impl FromStr for DynkinKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(DynkinKind::A),
            "D" | "d" => Ok(DynkinKind::D),
            "E" | "e" => Ok(DynkinKind::E),
            other => Err(Error::InvalidType(other.to_string())),
        }
    }
}

impl FromStr for DynkinType {
    type Err = Error;
    /// Parses strings like `A3`, `D4`, `E6`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.len() < 2 {
            return Err(Error::InvalidType(s.to_string()));
        }
        let kind: DynkinKind = s[..1].parse()?;
        let rank: usize = s[1..].parse().map_err(|_| Error::InvalidType(s.to_string()))?;
        DynkinType::new(kind, rank)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A finite quiver, optionally carrying the star involution of a double quiver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertex_count: usize,
    arrows: Vec<Arrow>,
    star: Option<Vec<usize>>,
}

impl Quiver {
    pub fn new(vertex_count: usize, arrows: Vec<Arrow>) -> Result<Self> {
        for a in &arrows {
            if a.source >= vertex_count || a.target >= vertex_count {
                return Err(Error::InvalidVertex { vertex: a.source.max(a.target) + 1, count: vertex_count });
            }
        }
        Ok(Quiver { vertex_count, arrows, star: None })
    }

    /// Quiver from 0-based edges, arrows named `a1, a2, ...`.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let arrows = edges
            .iter()
            .enumerate()
            .map(|(k, &(s, t))| Arrow { name: format!("a{}", k + 1), source: s, target: t })
            .collect();
        Self::new(vertex_count, arrows)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }
    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }
    pub fn arrow(&self, i: usize) -> &Arrow {
        &self.arrows[i]
    }
    pub fn star(&self) -> Option<&[usize]> {
        self.star.as_deref()
    }

    /// Undirected adjacency (ignoring arrow multiplicity and direction).
    pub fn adjacency(&self) -> Vec<Vec<bool>> {
        let n = self.vertex_count;
        let mut adj = vec![vec![false; n]; n];
        for a in &self.arrows {
            if a.source != a.target {
                adj[a.source][a.target] = true;
                adj[a.target][a.source] = true;
            }
        }
        adj
    }

    /// Whether every connected component of the underlying graph is a
    /// simply-laced Dynkin diagram (no loops, no multiple edges).
    pub fn is_dynkin(&self) -> bool {
        let n = self.vertex_count;
        let mut seen_edges = std::collections::HashSet::new();
        for a in &self.arrows {
            if a.source == a.target {
                return false;
            }
            let key = (a.source.min(a.target), a.source.max(a.target));
            if !seen_edges.insert(key) {
                return false;
            }
        }
        let adj = self.adjacency();
        let mut comp = vec![usize::MAX; n];
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            let mut verts = Vec::new();
            comp[start] = start;
            while let Some(v) = stack.pop() {
                verts.push(v);
                for w in 0..n {
                    if adj[v][w] && comp[w] == usize::MAX {
                        comp[w] = start;
                        stack.push(w);
                    }
                }
            }
            let edges: usize = verts.iter().map(|&v| adj[v].iter().filter(|&&b| b).count()).sum::<usize>() / 2;
            if edges + 1 != verts.len() {
                return false; // not a tree
            }
            let degree = |v: usize| adj[v].iter().filter(|&&b| b).count();
            let branches: Vec<usize> = verts.iter().copied().filter(|&v| degree(v) >= 3).collect();
            if branches.is_empty() {
                continue;
            }
            if branches.len() > 1 || degree(branches[0]) > 3 {
                return false;
            }
            // arm lengths (p, q, r) counted in vertices including the branch point
            let b = branches[0];
            let mut arms = Vec::new();
            for w in (0..n).filter(|&w| adj[b][w]) {
                let (mut prev, mut cur, mut len) = (b, w, 2);
                loop {
                    let next = (0..n).find(|&x| adj[cur][x] && x != prev);
                    match next {
                        Some(x) => {
                            prev = cur;
                            cur = x;
                            len += 1;
                        }
                        None => break,
                    }
                }
                arms.push(len as f64);
            }
            let s: f64 = arms.iter().map(|l| 1.0 / l).sum();
            if s <= 1.0 + 1e-12 {
                return false;
            }
        }
        true
    }
}

/// The Dynkin quiver of the given type in its default orientation.
pub fn dynkin_quiver(ty: DynkinType) -> Quiver {
    Quiver::from_edges(ty.rank, &ty.oriented_edges()).expect("edges are in range")
}

/// Adds a reverse arrow `a*` for every arrow `a` and records the pairing.
pub fn double_quiver(q: &Quiver) -> Result<Quiver> {
    if q.star.is_some() {
        return Err(Error::Unsupported("quiver is already a double quiver".into()));
    }
    let m = q.arrows.len();
    let mut arrows = q.arrows.clone();
    for a in &q.arrows {
        arrows.push(Arrow { name: format!("{}*", a.name), source: a.target, target: a.source });
    }
    let star = (0..2 * m).map(|i| if i < m { i + m } else { i - m }).collect();
    Ok(Quiver { vertex_count: q.vertex_count, arrows, star: Some(star) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a1_has_no_arrows() {
        let q = dynkin_quiver(DynkinType::a(1));
        assert_eq!(q.vertex_count(), 1);
        assert!(q.arrows().is_empty());
        assert_eq!(double_quiver(&q).unwrap().arrows().len(), 0);
    }

    #[test]
    fn a3_orientation() {
        let q = dynkin_quiver(DynkinType::a(3));
        let ends: Vec<_> = q.arrows().iter().map(|a| (a.source, a.target)).collect();
        assert_eq!(ends, vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn d4_points_to_branch() {
        let q = dynkin_quiver(DynkinType::new(DynkinKind::D, 4).unwrap());
        assert_eq!(q.vertex_count(), 4);
        assert_eq!(q.arrows().len(), 3);
        assert!(q.arrows().iter().all(|a| a.target == 1));
    }

    #[test]
    fn e_types_point_to_branch_vertex_four() {
        for r in 6..=8 {
            let q = dynkin_quiver(DynkinType::new(DynkinKind::E, r).unwrap());
            assert_eq!(q.arrows().len(), r - 1);
            assert!(q.is_dynkin());
            let into_branch = q.arrows().iter().filter(|a| a.target == 3).count();
            assert_eq!(into_branch, 3);
        }
    }

    #[test]
    fn double_quiver_pairs() {
        let q = double_quiver(&dynkin_quiver(DynkinType::a(3))).unwrap();
        assert_eq!(q.arrows().len(), 4);
        let star = q.star().unwrap();
        assert_eq!(star, &[2, 3, 0, 1]);
        for (i, a) in q.arrows().iter().enumerate() {
            let b = q.arrow(star[i]);
            assert_eq!((a.source, a.target), (b.target, b.source));
        }
        assert!(double_quiver(&q).is_err());
    }

    #[test]
    fn invalid_types() {
        assert!(DynkinType::new(DynkinKind::A, 0).is_err());
        assert!(DynkinType::new(DynkinKind::D, 3).is_err());
        assert!(DynkinType::new(DynkinKind::E, 9).is_err());
        assert!("X3".parse::<DynkinType>().is_err());
        assert_eq!("D5".parse::<DynkinType>().unwrap().rank, 5);
    }

    #[test]
    fn dynkin_recognition() {
        let affine_a = Quiver::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(!affine_a.is_dynkin());
        let affine_d4 = Quiver::from_edges(5, &[(1, 0), (2, 0), (3, 0), (4, 0)]).unwrap();
        assert!(!affine_d4.is_dynkin());
        let e9ish = Quiver::from_edges(9, &[(0, 2), (2, 3), (1, 3), (4, 3), (5, 4), (6, 5), (7, 6), (8, 7)]).unwrap();
        assert!(!e9ish.is_dynkin());
        assert!(dynkin_quiver(DynkinType::a(5)).is_dynkin());
    }
}
