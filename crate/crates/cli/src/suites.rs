//! Verification suites. Each returns a report of named checks instead of
//! failing fast, so every assertion is visible in the output.

use std::collections::BTreeSet;
use std::sync::Arc;

use preproj::algebra::{preprojective_of_type, Side, TwoSidedIdeal};
use preproj::classify::{
    records_to_tsv, stratifying_scan, tachikawa_check, wide_enumerate_brute, ClassificationRecord, Classifier, Subcat,
    DEFAULT_BRUTE_CAP,
};
use preproj::linalg::Fp;
use preproj::modrep::{
    cosyzygy, ext_dim, is_isomorphic, is_self_injective, module_of_quotient, nakayama, syzygy, tor_dim, IndecRegistry,
};
use preproj::quiver::{DynkinKind, DynkinType};
use preproj::weyl::{format_word, WeylGroup, DEFAULT_ENUMERATION_CAP};

use crate::{AlgebraSpec, CliError, CliResult, Config};

pub const TABLE44: &str = include_str!("../golden/table44.tsv");
pub const A3_CLASSIFY: &str = include_str!("../golden/a3_classify.tsv");
pub const NAKAYAMA33_WIDES: &str = include_str!("../golden/nakayama33_wides.tsv");
pub const A3_TAU: &str = include_str!("../golden/a3_tau.tsv");

pub const SUITES: [&str; 8] = ["table44", "theoremA", "theoremB", "tachikawa", "stratifying", "nakayama", "cy2", "ideals"];

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), passed, detail: detail.into() });
    }

    /// Records an error from a computation as a failed check.
    pub fn fail_on<T>(&mut self, name: &str, r: Result<T, preproj::Error>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.check(name, false, e.to_string());
                None
            }
        }
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.passed)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out += &format!("{} {}: {}\n", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
        }
        let ok = self.checks.iter().filter(|c| c.passed).count();
        out += &format!("{ok}/{} checks passed\n", self.checks.len());
        out
    }
}

fn golden_lines(src: &str) -> impl Iterator<Item = Vec<&str>> {
    src.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty()).map(|l| l.split('\t').collect())
}

fn name_set(field: &str) -> BTreeSet<String> {
    if field == "0" {
        BTreeSet::new()
    } else {
        field.split(',').map(str::to_string).collect()
    }
}

fn names_of(s: &Subcat, reg: &IndecRegistry) -> BTreeSet<String> {
    s.names(reg).into_iter().collect()
}

/// `mod(A)` means every indecomposable, otherwise a comma list.
fn golden_set(field: &str, reg: &IndecRegistry) -> BTreeSet<String> {
    if field == "mod(A)" {
        reg.names().iter().cloned().collect()
    } else {
        name_set(field)
    }
}

fn type_a(rank: usize) -> DynkinType {
    DynkinType::a(rank)
}

fn preprojective_types(cfg: &Config, default: &[usize]) -> CliResult<Vec<DynkinType>> {
    match cfg.algebra {
        None => Ok(default.iter().map(|&r| type_a(r)).collect()),
        Some(AlgebraSpec::Preprojective(ty)) => Ok(vec![ty]),
        Some(AlgebraSpec::Nakayama { .. }) => Err(CliError::Usage("this suite needs a preprojective algebra".into())),
    }
}

pub fn run_suite(name: &str, cfg: &Config) -> CliResult<Report> {
    match name {
        "table44" => Ok(table44(cfg.field)),
        "theoremA" => {
            let mut r = Report::default();
            for ty in preprojective_types(cfg, &[2, 3])? {
                r.extend(theorem_a(cfg, ty));
            }
            Ok(r)
        }
        "theoremB" => {
            let mut r = Report::default();
            let types = preprojective_types(cfg, &[1, 2, 3])?;
            for &ty in &types {
                if ty.kind == DynkinKind::A {
                    r.extend(theorem_b(cfg, ty));
                } else {
                    r.extend(endomorphism_spot_check(cfg.field, ty));
                }
            }
            if cfg.algebra.is_none() {
                r.extend(endomorphism_spot_check(cfg.field, DynkinType::new(DynkinKind::D, 4)?));
            }
            Ok(r)
        }
        "tachikawa" => {
            let specs = match cfg.algebra {
                Some(s) => vec![s],
                None => vec![
                    AlgebraSpec::Preprojective(type_a(2)),
                    AlgebraSpec::Preprojective(type_a(3)),
                    AlgebraSpec::Nakayama { n: 3, h: 3 },
                ],
            };
            let mut r = Report::default();
            for s in specs {
                r.extend(tachikawa(cfg, s)?);
            }
            Ok(r)
        }
        "stratifying" => {
            let specs = match cfg.algebra {
                Some(s) => vec![s],
                None => vec![
                    AlgebraSpec::Preprojective(type_a(1)),
                    AlgebraSpec::Preprojective(type_a(3)),
                    AlgebraSpec::Nakayama { n: 3, h: 3 },
                ],
            };
            let mut r = Report::default();
            for s in specs {
                r.extend(stratifying(cfg, s)?);
            }
            Ok(r)
        }
        "nakayama" => {
            let (n, h) = match cfg.algebra {
                None => (3, 3),
                Some(AlgebraSpec::Nakayama { n, h }) => (n, h),
                Some(_) => return Err(CliError::Usage("the nakayama suite takes --nakayama N:H".into())),
            };
            Ok(nakayama_wides(cfg, n, h))
        }
        "cy2" => {
            let mut r = Report::default();
            for ty in preprojective_types(cfg, &[2, 3])? {
                r.extend(calabi_yau(cfg, ty));
            }
            Ok(r)
        }
        "ideals" => {
            let mut r = Report::default();
            for ty in preprojective_types(cfg, &[3])? {
                r.extend(ideal_words(cfg.field, ty));
                r.extend(tor_idempotency(cfg.field, ty));
            }
            Ok(r)
        }
        other => Err(CliError::Usage(format!("unknown suite {other:?}; expected one of {}", SUITES.join(", ")))),
    }
}

/// A₃ rows against the transcribed table, plus byte equality with the regression TSV.
pub fn table44(field: Fp) -> Report {
    let mut r = Report::default();
    let cfg = Config { field, algebra: None, registry: Default::default(), ext_bound: None };
    let Some(c) = r.fail_on("A3 registry", Classifier::preprojective(type_a(3), cfg.field, cfg.registry)) else {
        return r;
    };
    let Some(records) = r.fail_on("A3 classification", c.classify_all()) else {
        return r;
    };
    let reg = c.registry();
    r.check("A3 record count", records.len() == 24, format!("{} records", records.len()));
    for row in golden_lines(TABLE44) {
        let [label, torsion, wide, tag] = row[..] else {
            r.check("golden table format", false, format!("{row:?}"));
            continue;
        };
        let Some(rec) = records.iter().find(|x| x.label.as_deref() == Some(label)) else {
            r.check(format!("row {label}"), false, "no record with this label");
            continue;
        };
        let torsion_ok = if torsion == "mod(A)" {
            rec.torsion == c.full()
        } else {
            names_of(&rec.generators, reg) == name_set(torsion)
        };
        let wide_ok = names_of(&rec.wide, reg) == golden_set(wide, reg);
        let tag_ok = rec.tag == tag;
        let row = rec.row(reg);
        r.check(
            format!("row {label}"),
            torsion_ok && wide_ok && tag_ok,
            format!("word {} gen {} wide {} tag {}", row.word, row.generators.join(","), row.wide.join(","), row.tag),
        );
    }
    let tsv = records_to_tsv(&records, reg);
    r.check("A3 table matches regression file byte for byte", tsv == A3_CLASSIFY, format!("{} bytes", tsv.len()));
    r
}

pub fn theorem_a(cfg: &Config, ty: DynkinType) -> Report {
    let mut r = Report::default();
    let name = ty.name();
    let Some(c) = r.fail_on(&format!("{name} registry"), Classifier::preprojective(ty, cfg.field, cfg.registry)) else {
        return r;
    };
    let Some(records) = r.fail_on(&format!("{name} classification"), c.classify_all()) else {
        return r;
    };
    let Ok(g) = c.group() else {
        r.check(format!("{name} Weyl group"), false, "missing");
        return r;
    };
    let distinct: BTreeSet<&Subcat> = records.iter().map(|x| &x.wide).collect();
    r.check(
        format!("{name} wide subcategories pairwise distinct"),
        distinct.len() == records.len() && records.len() == c.elements().len(),
        format!("{} distinct of {} records, |W| = {}", distinct.len(), records.len(), c.elements().len()),
    );
    let mut bad = Vec::new();
    for rec in &records {
        let ok = check_record(&c, g, rec);
        if !ok {
            bad.push(format_word(rec.element.word()));
        }
    }
    r.check(
        format!("{name} l(wv) = l(w) + l(v), I_v idempotent, tag of A/I_v matches, wide in torsion"),
        bad.is_empty(),
        if bad.is_empty() { format!("{} records", records.len()) } else { format!("failing words {}", bad.join(" ")) },
    );
    match c.check_quotient_closed(&records) {
        Ok(n) => r.check(format!("{name} quotient-closed wides have target A/AeA"), true, format!("{n} records")),
        Err(e) => r.check(format!("{name} quotient-closed wides have target A/AeA"), false, e.to_string()),
    }
    r
}

fn check_record(c: &Classifier, g: &WeylGroup, rec: &ClassificationRecord) -> bool {
    let Ok((tag, idempotent)) = c.quotient_tag(&rec.v) else {
        return false;
    };
    let Ok(ideal) = TwoSidedIdeal::for_word(c.algebra(), rec.v.word()) else {
        return false;
    };
    let square_ok = ideal.product(&ideal).map(|sq| sq.dim() == ideal.dim()).unwrap_or(false);
    g.multiply(&rec.element, &rec.v) == rec.u
        && rec.u.length() == rec.element.length() + rec.v.length()
        && idempotent
        && square_ok
        && preproj::classify::same_tag(&tag, &rec.tag)
        && rec.wide.is_subset(&rec.torsion)
}

pub fn theorem_b(cfg: &Config, ty: DynkinType) -> Report {
    let mut r = Report::default();
    let name = ty.name();
    let Some(c) = r.fail_on(&format!("{name} registry"), Classifier::preprojective(ty, cfg.field, cfg.registry)) else {
        return r;
    };
    let Some(records) = r.fail_on(&format!("{name} classification"), c.classify_all()) else {
        return r;
    };
    let Some(list) = r.fail_on(&format!("{name} homological records match the closed-form elements"), c.homological_list(&records))
    else {
        return r;
    };
    let trivial = |x: &&ClassificationRecord| x.wide.is_empty() || x.wide == c.full();
    let nontrivial: Vec<&ClassificationRecord> = list.iter().filter(|x| !trivial(x)).collect();
    let expected = if ty.rank >= 2 { 2 } else { 0 };
    let detail = nontrivial
        .iter()
        .map(|x| format!("{} -> {}", format_word(x.element.word()), x.wide.names(c.registry()).join(",")))
        .collect::<Vec<_>>()
        .join("; ");
    r.check(
        format!("{name} has {expected} nontrivial homological records"),
        nontrivial.len() == expected,
        if detail.is_empty() { "none".to_string() } else { detail },
    );
    r
}

/// Every `e_i A e_i` has dimension at least 2.
pub fn endomorphism_spot_check(field: Fp, ty: DynkinType) -> Report {
    let mut r = Report::default();
    let Some(a) = r.fail_on(&format!("{} algebra", ty.name()), preprojective_of_type(ty, field)) else {
        return r;
    };
    let dims: Vec<usize> = (0..a.vertex_count()).map(|i| a.bigraded_dim(i, i)).collect();
    r.check(
        format!("{}: dim e_i A e_i >= 2 at every vertex", ty.name()),
        dims.iter().all(|&d| d >= 2),
        format!("{dims:?}"),
    );
    r
}

pub fn tachikawa(cfg: &Config, spec: AlgebraSpec) -> CliResult<Report> {
    let mut r = Report::default();
    let a = spec.build(cfg.field)?;
    let bound = cfg.ext_bound.unwrap_or(match spec {
        AlgebraSpec::Nakayama { .. } => 12,
        AlgebraSpec::Preprojective(_) => 6,
    });
    let Some(reg) = r.fail_on(&format!("{} registry", a.name()), IndecRegistry::build(&a, Side::Left, cfg.registry)) else {
        return Ok(r);
    };
    if let Some(report) = r.fail_on(&format!("{} Tachikawa", a.name()), tachikawa_check(&reg, bound)) {
        let detail = report
            .rows
            .iter()
            .map(|x| format!("{}:d={},period={}", x.module, opt(x.least_d), opt(x.period)))
            .collect::<Vec<_>>()
            .join(" ");
        r.check(
            format!("{}: every nonprojective indecomposable has Ext^d(M,M) != 0 within its period (bound {bound})", a.name()),
            report.passed(),
            detail,
        );
    }
    Ok(r)
}

fn opt(x: Option<usize>) -> String {
    x.map_or_else(|| "none".to_string(), |v| v.to_string())
}

pub fn stratifying(cfg: &Config, spec: AlgebraSpec) -> CliResult<Report> {
    let mut r = Report::default();
    let a = spec.build(cfg.field)?;
    let Some(reg) = r.fail_on(&format!("{} registry", a.name()), IndecRegistry::build(&a, Side::Left, cfg.registry)) else {
        return Ok(r);
    };
    if let Some(report) = r.fail_on(&format!("{} stratifying scan", a.name()), stratifying_scan(&reg)) {
        let found: Vec<String> =
            report.rows.iter().filter(|x| x.stratifying).map(|x| format!("{:?}:dim {}", x.vertices, x.ideal_dim)).collect();
        r.check(format!("{}: only 0 and A are stratifying", a.name()), report.only_trivial(), found.join(" "));
    }
    Ok(r)
}

/// Brute-force wide enumeration over `F_2`, filtered by the homological test.
pub fn nakayama_wides(cfg: &Config, n: usize, h: usize) -> Report {
    let mut r = Report::default();
    let field = if cfg.field.p() <= 3 { cfg.field } else { Fp::new(2).expect("2 is prime") };
    let name = format!("Nakayama({n},{h})");
    let Some(a) = r.fail_on(&format!("{name} algebra"), preproj::algebra::nakayama_algebra(n, h, field)) else {
        return r;
    };
    let Some(c) = r.fail_on(&format!("{name} registry"), Classifier::for_algebra(Arc::new(a), cfg.registry)) else {
        return r;
    };
    let reg = c.registry();
    r.check(format!("{name} indecomposable count"), reg.len() == n * h, format!("{} (expected {})", reg.len(), n * h));
    let Some(wides) = r.fail_on(&format!("{name} wide enumeration"), wide_enumerate_brute(&c, DEFAULT_BRUTE_CAP)) else {
        return r;
    };
    let mut homological = Vec::new();
    for w in wides.iter().filter(|w| !w.is_empty()) {
        match c.is_homological(w) {
            Ok(true) => homological.push(names_of(w, reg)),
            Ok(false) => {}
            Err(e) => {
                r.check(format!("{name} homological criteria agree"), false, e.to_string());
                return r;
            }
        }
    }
    let expected = (1usize << n) - 1;
    r.check(
        format!("{name} has 2^n - 1 nonzero homological wides"),
        homological.len() == expected,
        format!("{} of {} wide subcategories (expected {expected})", homological.len(), wides.len()),
    );
    if (n, h) == (3, 3) {
        let found: BTreeSet<BTreeSet<String>> = homological.into_iter().collect();
        let golden: BTreeSet<BTreeSet<String>> = golden_lines(NAKAYAMA33_WIDES).map(|row| golden_set(row[0], reg)).collect();
        r.check(format!("{name} homological wides equal the listed seven"), found == golden, format!("{found:?}"));
    }
    r
}

pub fn calabi_yau(cfg: &Config, ty: DynkinType) -> Report {
    let mut r = Report::default();
    let name = ty.name();
    let Some(a) = r.fail_on(&format!("{name} algebra"), preprojective_of_type(ty, cfg.field)) else {
        return r;
    };
    let a = Arc::new(a);
    let Some(reg) = r.fail_on(&format!("{name} registry"), IndecRegistry::build(&a, Side::Left, cfg.registry)) else {
        return r;
    };
    let nonproj: Vec<usize> = (0..reg.len()).filter(|&i| !reg.is_projective(i).unwrap_or(true)).collect();
    let mut nu_bad = Vec::new();
    let mut omega_bad = Vec::new();
    let mut tau_images = BTreeSet::new();
    for &i in &nonproj {
        let m = reg.get(i);
        let res: Result<(bool, bool, Option<usize>), preproj::Error> = (|| {
            let mut inv = m.clone();
            for _ in 0..3 {
                inv = cosyzygy(&inv)?;
            }
            let nu_ok = is_isomorphic(&nakayama(m)?, &inv)?;
            let mut z = m.clone();
            for _ in 0..6 {
                z = syzygy(&z)?;
            }
            let tau = reg.lookup(&cosyzygy(m)?)?;
            Ok((nu_ok, is_isomorphic(&z, m)?, tau))
        })();
        match res {
            Ok((nu_ok, om_ok, tau)) => {
                if !nu_ok {
                    nu_bad.push(reg.name(i).to_string());
                }
                if !om_ok {
                    omega_bad.push(reg.name(i).to_string());
                }
                if let Some(t) = tau {
                    tau_images.insert((reg.name(i).to_string(), reg.name(t).to_string()));
                }
            }
            Err(e) => {
                r.check(format!("{name} stable computations"), false, e.to_string());
                return r;
            }
        }
    }
    let list = |v: &[String]| if v.is_empty() { format!("{} modules", nonproj.len()) } else { v.join(",") };
    r.check(format!("{name}: nu = Omega^-3 on nonprojective indecomposables"), nu_bad.is_empty(), list(&nu_bad));
    r.check(format!("{name}: Omega^6 = id on nonprojective indecomposables"), omega_bad.is_empty(), list(&omega_bad));
    let targets: BTreeSet<&String> = tau_images.iter().map(|(_, t)| t).collect();
    let mut tau_ok = tau_images.len() == nonproj.len() && targets.len() == nonproj.len();
    if ty == type_a(3) {
        let golden: BTreeSet<(String, String)> =
            golden_lines(A3_TAU).map(|row| (row[0].to_string(), row[1].to_string())).collect();
        tau_ok &= golden == tau_images;
    }
    r.check(
        format!("{name}: Omega^-1 permutes the nonprojective indecomposables as tau"),
        tau_ok,
        tau_images.iter().map(|(x, t)| format!("{x}->{t}")).collect::<Vec<_>>().join(" "),
    );
    let mods = reg.modules();
    let mut asym = Vec::new();
    for (i, x) in mods.iter().enumerate() {
        for (j, y) in mods.iter().enumerate().skip(i + 1) {
            match (ext_dim(x, y, 1), ext_dim(y, x, 1)) {
                (Ok(e), Ok(f)) if e == f => {}
                _ => asym.push(format!("{}/{}", reg.name(i), reg.name(j))),
            }
        }
    }
    r.check(
        format!("{name}: dim Ext^1(M,N) = dim Ext^1(N,M)"),
        asym.is_empty(),
        if asym.is_empty() { format!("{} pairs", mods.len() * (mods.len() - 1) / 2) } else { asym.join(" ") },
    );
    r
}

/// Every reduced word of every element yields the same ideal.
pub fn ideal_words(field: Fp, ty: DynkinType) -> Report {
    let mut r = Report::default();
    let name = ty.name();
    let Some(a) = r.fail_on(&format!("{name} algebra"), preprojective_of_type(ty, field)) else {
        return r;
    };
    let a = Arc::new(a);
    let g = WeylGroup::of_type(ty);
    let Some(elements) = r.fail_on(&format!("{name} Weyl group"), g.enumerate_all(DEFAULT_ENUMERATION_CAP)) else {
        return r;
    };
    let mut words = 0;
    let mut bad = Vec::new();
    for w in &elements {
        let spaces: Result<Vec<_>, _> =
            g.all_reduced_words(w).iter().map(|word| TwoSidedIdeal::for_word(&a, word).map(|i| i.space().clone())).collect();
        match spaces {
            Ok(s) => {
                words += s.len();
                if s.windows(2).any(|p| p[0] != p[1]) {
                    bad.push(format_word(w.word()));
                }
            }
            Err(e) => bad.push(format!("{}({e})", format_word(w.word()))),
        }
    }
    r.check(
        format!("{name}: all reduced words give the same I_w"),
        bad.is_empty(),
        if bad.is_empty() { format!("{} elements, {words} reduced words", elements.len()) } else { bad.join(" ") },
    );
    r
}

/// `dim Tor₁(A/I, A/I) = dim I − dim I²` and `I = I² ⟺ A/I self-injective`, for every `I_v`.
pub fn tor_idempotency(field: Fp, ty: DynkinType) -> Report {
    let mut r = Report::default();
    let name = ty.name();
    let Some(a) = r.fail_on(&format!("{name} algebra"), preprojective_of_type(ty, field)) else {
        return r;
    };
    let a = Arc::new(a);
    let g = WeylGroup::of_type(ty);
    let Some(elements) = r.fail_on(&format!("{name} Weyl group"), g.enumerate_all(DEFAULT_ENUMERATION_CAP)) else {
        return r;
    };
    let mut tor_bad = Vec::new();
    let mut idem_bad = Vec::new();
    let mut idempotent = 0;
    for v in &elements {
        let res: Result<(bool, bool, bool), preproj::Error> = (|| {
            let ideal = TwoSidedIdeal::for_word(&a, v.word())?;
            let sq = ideal.product(&ideal)?;
            let m = module_of_quotient(&ideal, Side::Right)?;
            let n = module_of_quotient(&ideal, Side::Left)?;
            let tor_ok = tor_dim(&m, &n, 1)? == ideal.dim() - sq.dim();
            let idem = ideal.is_idempotent();
            let si = is_self_injective(&Arc::new(ideal.quotient()?));
            Ok((tor_ok, idem, si))
        })();
        let word = format_word(v.word());
        match res {
            Ok((tor_ok, idem, si)) => {
                if !tor_ok {
                    tor_bad.push(word.clone());
                }
                if idem != si {
                    idem_bad.push(word);
                }
                idempotent += usize::from(idem);
            }
            Err(e) => tor_bad.push(format!("{word}({e})")),
        }
    }
    r.check(
        format!("{name}: dim Tor_1(A/I_v, A/I_v) = dim I_v - dim I_v^2"),
        tor_bad.is_empty(),
        if tor_bad.is_empty() { format!("{} elements", elements.len()) } else { tor_bad.join(" ") },
    );
    r.check(
        format!("{name}: I_v idempotent iff A/I_v self-injective"),
        idem_bad.is_empty(),
        if idem_bad.is_empty() { format!("{idempotent} idempotent of {}", elements.len()) } else { idem_bad.join(" ") },
    );
    r
}
