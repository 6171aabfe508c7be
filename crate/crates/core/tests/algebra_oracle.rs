//! Independent checks of the preprojective construction: a brute-force
//! path-span reduction, random associativity probes, the star anti-automorphism,
//! and basic ideal identities.

use std::sync::Arc;

use preproj::algebra::{preprojective_of_type, AlgebraElement, GradedAlgebra, TwoSidedIdeal};
use preproj::linalg::{Fp, Matrix};
use preproj::quiver::{double_quiver, dynkin_quiver, DynkinKind, DynkinType};

/// `dims[d][s][t]` of `K Q̄ / I` computed straight from the definition: all
/// paths of length `d` modulo the span of `p · r_v · q`.
fn oracle_dims(ty: DynkinType, field: Fp) -> Vec<Vec<Vec<usize>>> {
    let q = double_quiver(&dynkin_quiver(ty)).unwrap();
    let n = q.vertex_count();
    let arrows = q.arrows();
    let m = arrows.len() / 2;
    let paths_of_len = |d: usize| -> Vec<Vec<usize>> {
        let mut cur: Vec<Vec<usize>> = (0..n).map(|v| vec![usize::MAX - v]).collect();
        for _ in 0..d {
            let mut next = Vec::new();
            for p in &cur {
                let end = match p.last() {
                    Some(&x) if x >= usize::MAX - n => usize::MAX - x,
                    Some(&a) => arrows[a].target,
                    None => unreachable!(),
                };
                for (ai, a) in arrows.iter().enumerate() {
                    if a.source == end {
                        let mut w = p.clone();
                        w.push(ai);
                        next.push(w);
                    }
                }
            }
            cur = next;
        }
        cur
    };
    let ends = |p: &Vec<usize>| -> (usize, usize) {
        let s = usize::MAX - p[0];
        let t = if p.len() == 1 { s } else { arrows[*p.last().unwrap()].target };
        (s, t)
    };
    let mut out = Vec::new();
    for d in 0.. {
        let paths = paths_of_len(d);
        let index: std::collections::HashMap<Vec<usize>, usize> =
            paths.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let mut gens: Vec<Vec<u32>> = Vec::new();
        if d >= 2 {
            for k in 0..=d - 2 {
                let prefixes = paths_of_len(k);
                let suffixes = paths_of_len(d - 2 - k);
                for p in &prefixes {
                    let v = ends(p).1;
                    for sfx in suffixes.iter().filter(|s| usize::MAX - s[0] == v) {
                        let mut g = vec![0u32; paths.len()];
                        for a in 0..m {
                            let (s, t) = (arrows[a].source, arrows[a].target);
                            let mut terms = Vec::new();
                            if t == v {
                                terms.push((a + m, a, 1));
                            }
                            if s == v {
                                terms.push((a, a + m, field.neg(1)));
                            }
                            for (x, y, c) in terms {
                                let mut w = p.clone();
                                w.push(x);
                                w.push(y);
                                w.extend_from_slice(&sfx[1..]);
                                let i = index[&w];
                                g[i] = field.add(g[i], c);
                            }
                        }
                        gens.push(g);
                    }
                }
            }
        }
        let mut dims = vec![vec![0usize; n]; n];
        let mut total = 0;
        for s in 0..n {
            for t in 0..n {
                let cols: Vec<usize> = (0..paths.len()).filter(|&i| ends(&paths[i]) == (s, t)).collect();
                if cols.is_empty() {
                    continue;
                }
                let rows: Vec<Vec<u32>> = gens.iter().map(|g| cols.iter().map(|&c| g[c]).collect()).collect();
                let rank = Matrix::from_rows(field, cols.len(), &rows).rank();
                dims[s][t] = cols.len() - rank;
                total += dims[s][t];
            }
        }
        if total == 0 {
            break;
        }
        out.push(dims);
    }
    out
}

fn built_dims(a: &GradedAlgebra) -> Vec<Vec<Vec<usize>>> {
    let n = a.vertex_count();
    let mut out = vec![vec![vec![0; n]; n]; a.max_degree() + 1];
    for b in a.basis() {
        out[b.degree][b.source][b.target] += 1;
    }
    out
}

fn k() -> Fp {
    Fp::new(1009).unwrap()
}

#[test]
fn dimensions_match_path_reduction_oracle() {
    for ty in [DynkinType::a(1), DynkinType::a(2), DynkinType::a(3), DynkinType::a(4), DynkinType::new(DynkinKind::D, 4).unwrap()] {
        let a = preprojective_of_type(ty, k()).unwrap();
        assert_eq!(built_dims(&a), oracle_dims(ty, k()), "{ty}");
    }
}

#[test]
fn oracle_agrees_in_small_characteristic() {
    for p in [2, 3] {
        let f = Fp::new(p).unwrap();
        for ty in [DynkinType::a(2), DynkinType::a(3)] {
            let a = preprojective_of_type(ty, f).unwrap();
            assert_eq!(built_dims(&a), oracle_dims(ty, f), "{ty} p={p}");
        }
    }
}

#[test]
fn associative_and_unital() {
    for n in 1..=4 {
        let a = preprojective_of_type(DynkinType::a(n), k()).unwrap();
        assert!(a.check_unital());
        assert!(a.check_associative(), "A{n}");
    }
    let d4 = preprojective_of_type(DynkinType::new(DynkinKind::D, 4).unwrap(), k()).unwrap();
    assert!(d4.check_unital() && d4.check_associative());
}

#[test]
fn idempotent_products() {
    let a = preprojective_of_type(DynkinType::a(3), k()).unwrap();
    for i in 0..3 {
        for j in 0..3 {
            let ei = a.basis_element(a.idempotent(i));
            let ej = a.basis_element(a.idempotent(j));
            let p = a.multiply(&ei, &ej);
            if i == j {
                assert_eq!(p, ei);
            } else {
                assert_eq!(p, a.zero_element());
            }
        }
    }
}

#[test]
fn random_associativity_probe() {
    use proptest::prelude::*;
    let a = Arc::new(preprojective_of_type(DynkinType::a(3), k()).unwrap());
    let d = a.dim();
    let vec_strategy = proptest::collection::vec(0u32..1009, d);
    proptest!(|(x in vec_strategy.clone(), y in vec_strategy.clone(), z in vec_strategy)| {
        let (x, y, z) = (AlgebraElement(x), AlgebraElement(y), AlgebraElement(z));
        prop_assert_eq!(a.multiply(&a.multiply(&x, &y), &z), a.multiply(&x, &a.multiply(&y, &z)));
    });
}

/// Class of a monomial given in traversal order.
fn word_class(a: &GradedAlgebra, start: usize, word: &[usize]) -> AlgebraElement {
    let mut cur = a.basis_element(a.idempotent(start));
    for &w in word {
        let arrow = a.arrows().iter().find(|ar| a.basis()[ar.basis].word == [w]).expect("arrow");
        cur = a.multiply(&a.basis_element(arrow.basis), &cur);
    }
    cur
}

#[test]
fn star_swap_is_an_anti_automorphism() {
    for ty in [DynkinType::a(2), DynkinType::a(3), DynkinType::new(DynkinKind::D, 4).unwrap()] {
        let a = preprojective_of_type(ty, k()).unwrap();
        let star = a.star().unwrap().to_vec();
        let phi: Vec<AlgebraElement> = a
            .basis()
            .iter()
            .map(|b| {
                let w: Vec<usize> = b.word.iter().rev().map(|&x| star[x]).collect();
                word_class(&a, b.target, &w)
            })
            .collect();
        let rank = Matrix::from_rows(k(), a.dim(), &phi.iter().map(|e| e.0.clone()).collect::<Vec<_>>()).rank();
        assert_eq!(rank, a.dim(), "{ty}: not bijective");
        let apply = |x: &AlgebraElement| -> AlgebraElement {
            let mut out = vec![0u32; a.dim()];
            for (i, &c) in x.0.iter().enumerate() {
                for (o, &p) in out.iter_mut().zip(&phi[i].0) {
                    *o = k().mul_add(*o, c, p);
                }
            }
            AlgebraElement(out)
        };
        for x in 0..a.dim() {
            for y in 0..a.dim() {
                let (bx, by) = (a.basis_element(x), a.basis_element(y));
                assert_eq!(apply(&a.multiply(&bx, &by)), a.multiply(&apply(&by), &apply(&bx)), "{ty}");
            }
        }
        // the opposite algebra has the same shape, and double opposite is the original table
        let op = a.opposite().unwrap();
        assert_eq!(op.dim(), a.dim());
        assert_eq!(op.opposite().unwrap().dump(), a.dump());
    }
}

#[test]
fn d4_has_no_local_rigid_projective() {
    let a = preprojective_of_type(DynkinType::new(DynkinKind::D, 4).unwrap(), k()).unwrap();
    for v in 0..4 {
        assert!(a.bigraded_dim(v, v) >= 2, "vertex {}", v + 1);
    }
}

#[test]
fn ideal_dimensions_complement_quotients() {
    let a = Arc::new(preprojective_of_type(DynkinType::a(3), k()).unwrap());
    for word in [vec![], vec![0], vec![1, 0], vec![2, 1, 0], vec![0, 1, 0, 2, 1, 0]] {
        let i = TwoSidedIdeal::for_word(&a, &word).unwrap();
        assert!(i.is_two_sided());
        assert_eq!(i.dim() + i.quotient().unwrap().dim(), a.dim());
    }
    // longest element kills everything
    assert_eq!(TwoSidedIdeal::for_word(&a, &[0, 1, 0, 2, 1, 0]).unwrap().dim(), 0);
    // A2, vertex 1: the quotient is e1 (A/I1) e1
    let a2 = Arc::new(preprojective_of_type(DynkinType::a(2), k()).unwrap());
    let i1 = TwoSidedIdeal::idempotent_ideal(&a2, 0).unwrap();
    assert_eq!(a2.dim() - i1.dim(), i1.quotient().unwrap().bigraded_dim(0, 0));
}

#[test]
fn dumps_are_deterministic() {
    let x = preprojective_of_type(DynkinType::a(3), k()).unwrap().dump();
    let y = preprojective_of_type(DynkinType::a(3), k()).unwrap().dump();
    assert_eq!(x, y);
}
