use std::sync::Arc;

use preproj::algebra::{nakayama_algebra, Side};
use preproj::classify::{
    minimal_left_approx, stratifying_scan, tachikawa_check, theorem_b_words, wide_enumerate_brute, Classifier,
    ClassificationRecord, Subcat, DEFAULT_BRUTE_CAP,
};
use preproj::linalg::Fp;
use preproj::modrep::{is_isomorphic, projective, regular_module, RegistryConfig};
use preproj::quiver::DynkinType;

fn classifier(rank: usize, p: u32) -> Classifier {
    Classifier::preprojective(DynkinType::a(rank), Fp::new(p).unwrap(), RegistryConfig::default()).unwrap()
}

fn nakayama33(p: u32) -> Classifier {
    let a = Arc::new(nakayama_algebra(3, 3, Fp::new(p).unwrap()).unwrap());
    Classifier::for_algebra(a, RegistryConfig::default()).unwrap()
}

fn set(c: &Classifier, names: &[&str]) -> Subcat {
    Subcat::new(names.iter().map(|n| c.registry().id_by_name(n).unwrap_or_else(|| panic!("{n}"))).collect())
}

fn by_label<'a>(recs: &'a [ClassificationRecord], label: &str) -> &'a ClassificationRecord {
    recs.iter().find(|r| r.label.as_deref() == Some(label)).unwrap()
}

#[test]
fn a3_spot_rows() {
    let c = classifier(3, 1009);
    let recs = c.classify_all().unwrap();
    assert_eq!(recs.len(), 24);
    let r = by_label(&recs, "(12)");
    assert_eq!(r.generators, set(&c, &["P1", "P2", "M21"]));
    assert_eq!(r.wide, set(&c, &["P1", "S1", "W", "M23"]));
    assert_eq!(r.tag, "A2");
    let r = by_label(&recs, "(13)");
    assert_eq!(r.generators, set(&c, &["P1", "M12", "S1"]));
    assert_eq!(r.wide, set(&c, &["P1"]));
    assert_eq!(r.tag, "K");
    assert_eq!(by_label(&recs, "(1342)").wide, set(&c, &["M"]));
    assert_eq!(by_label(&recs, "(14)").wide, set(&c, &["S2"]));
    assert_eq!(by_label(&recs, "1").wide, c.full());
    assert_eq!(by_label(&recs, "1").tag, "A3");
    let top = by_label(&recs, "(14)(23)");
    assert!(top.torsion.is_empty() && top.wide.is_empty());
    assert_eq!(top.tag, "0");
}

/// The labels (123) and (132) distinguish the two composition orders for words.
#[test]
fn sigma4_composition_order() {
    let c = classifier(3, 1009);
    let recs = c.classify_all().unwrap();
    let r = by_label(&recs, "(123)");
    assert_eq!(r.element.word(), &[2, 1]);
    assert_eq!(r.generators, set(&c, &["P1", "M21", "M12"]));
    assert_eq!(r.wide, set(&c, &["P1", "S2"]));
    assert_eq!(r.tag, "K×K");
    let r = by_label(&recs, "(132)");
    assert_eq!(r.wide, set(&c, &["P1", "S3", "M12", "M"]));
}

#[test]
fn records_satisfy_structural_invariants() {
    for rank in [1, 2, 3] {
        let c = classifier(rank, 1009);
        let g = c.group().unwrap();
        let recs = c.classify_all().unwrap();
        assert_eq!(recs.len(), [2, 6, 24][rank - 1]);
        for r in &recs {
            assert!(r.wide.is_subset(&r.torsion));
            assert_eq!(g.multiply(&r.element, &r.v), r.u);
            assert_eq!(r.u.length(), r.element.length() + r.v.length());
            let (tag, idem) = c.quotient_tag(&r.v).unwrap();
            assert!(idem);
            assert!(preproj::classify::same_tag(&tag, &r.tag));
        }
        assert!(c.check_quotient_closed(&recs).unwrap() >= 2);
    }
}

#[test]
fn find_uv_at_the_extremes() {
    let c = classifier(3, 1009);
    let g = c.group().unwrap();
    let w0 = g.longest_element().unwrap();
    let (u, v) = c.find_uv(&g.identity()).unwrap();
    assert_eq!((u, v), (w0.clone(), w0.clone()));
    let (u, v) = c.find_uv(&w0).unwrap();
    assert_eq!(u, w0);
    assert!(v.is_identity());
}

#[test]
fn homological_records_follow_the_closed_form() {
    for (rank, expected) in [(1, 2), (2, 4), (3, 4)] {
        let c = classifier(rank, 1009);
        let recs = c.classify_all().unwrap();
        let hom = c.homological_list(&recs).unwrap();
        assert_eq!(hom.len(), expected, "A{rank}");
    }
    let c = classifier(2, 1009);
    let recs = c.classify_all().unwrap();
    let s1 = recs.iter().find(|r| r.element.word() == [0]).unwrap();
    let s2 = recs.iter().find(|r| r.element.word() == [1]).unwrap();
    assert!(s1.homological && s2.homological);
    assert_eq!(s1.wide, set(&c, &["P2"]));
    assert_eq!(s2.wide, set(&c, &["P1"]));
    assert_eq!(theorem_b_words(2), (vec![1], vec![0]));
}

#[test]
fn homological_test_on_extremes() {
    let c = classifier(3, 1009);
    assert!(c.is_homological(&c.full()).unwrap());
    assert!(c.is_homological(&Subcat::default()).unwrap());
    assert!(!c.is_homological(&set(&c, &["S2"])).unwrap());
}

#[test]
fn smallest_torsion_class() {
    let c = classifier(3, 1009);
    let a = c.algebra().clone();
    let g = c.group().unwrap();
    assert!(c.smallest_torsion_class_containing(&regular_module(&a, Side::Left)).unwrap().is_identity());
    let zero = preproj::modrep::Representation::zero(&a, Side::Left);
    assert_eq!(c.smallest_torsion_class_containing(&zero).unwrap(), g.longest_element().unwrap());
    let p1 = projective(&a, Side::Left, 0).unwrap();
    assert_eq!(c.smallest_torsion_class_containing(&p1).unwrap(), g.from_word(&[2, 1, 2]).unwrap());
}

#[test]
fn approximation_edge_cases() {
    let c = classifier(3, 1009);
    let a = c.algebra().clone();
    let p2 = projective(&a, Side::Left, 1).unwrap();
    let phi = minimal_left_approx(&p2, &[p2.clone(), c.registry().get(c.registry().simple_id(0).unwrap()).clone()]).unwrap();
    assert!(phi.is_isomorphism());
    let phi = minimal_left_approx(&p2, &[]).unwrap();
    assert!(phi.target().is_zero());
    let target = c.epi_target(&set(&c, &["P1"])).unwrap();
    assert_eq!(target.tag, "K");
    assert!(is_isomorphic(&target.module, &projective(&a, Side::Left, 0).unwrap().direct_power(3)).unwrap());
}

#[test]
fn tachikawa_holds_within_the_period() {
    for rank in [2, 3] {
        let c = classifier(rank, 1009);
        let report = tachikawa_check(c.registry(), 6).unwrap();
        assert!(report.passed(), "{report:?}");
    }
    let report = tachikawa_check(nakayama33(1009).registry(), 12).unwrap();
    assert_eq!(report.rows.len(), 6);
    assert!(report.passed(), "{report:?}");
    assert!(tachikawa_check(classifier(1, 1009).registry(), 6).unwrap().rows.is_empty());
}

#[test]
fn stratifying_ideals_are_trivial() {
    for c in [classifier(1, 1009), classifier(3, 1009), nakayama33(1009)] {
        let report = stratifying_scan(c.registry()).unwrap();
        assert!(report.only_trivial(), "{report:?}");
        assert_eq!(report.rows.iter().filter(|r| r.stratifying).count(), 2);
    }
}

#[test]
fn nakayama_homological_wides() {
    let c = nakayama33(2);
    assert_eq!(c.registry().len(), 9);
    let wides = wide_enumerate_brute(&c, DEFAULT_BRUTE_CAP).unwrap();
    assert!(wides.contains(&Subcat::default()) && wides.contains(&c.full()));
    let mut hom: Vec<Subcat> =
        wides.into_iter().filter(|w| !w.is_empty() && c.is_homological(w).unwrap()).collect();
    hom.sort();
    let mut expected = vec![
        set(&c, &["P1"]),
        set(&c, &["P2"]),
        set(&c, &["P3"]),
        set(&c, &["P1", "P2", "S1", "P2/rad2"]),
        set(&c, &["P1", "P3", "S3", "P1/rad2"]),
        set(&c, &["P2", "P3", "S2", "P3/rad2"]),
        c.full(),
    ];
    expected.sort();
    assert_eq!(hom, expected);
}

#[test]
fn brute_force_refuses_large_inputs() {
    assert!(wide_enumerate_brute(&classifier(3, 2), 4).is_err());
    assert!(wide_enumerate_brute(&nakayama33(1009), DEFAULT_BRUTE_CAP).is_err());
}
