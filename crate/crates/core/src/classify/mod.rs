//! The classification pipeline: torsion classes `gen(I_w)`, their
//! approximation sequences, the wide subcategories and ring-epimorphism
//! targets attached to Weyl group elements, and the homological tests.

mod approx;
mod checks;
mod records;

use std::sync::{Arc, OnceLock};

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{preprojective_of_type, GradedAlgebra, Side, TwoSidedIdeal};
use crate::error::{Error, Result};
use crate::linalg::Fp;
use crate::modrep::{
    cokernel, cosyzygy, hom_dim, in_gen, module_of_left_ideal, regular_module, syzygy, IndecId, IndecRegistry,
    RegistryConfig, Representation,
};
use crate::quiver::{DynkinKind, DynkinType};
use crate::weyl::{WeylElement, WeylGroup, DEFAULT_ENUMERATION_CAP};

pub use approx::{epi_target, minimal_left_approx, same_tag, EpiTarget};
pub use checks::{
    stratifying_scan, tachikawa_check, wide_enumerate_brute, StratifyingReport, StratifyingRow, TachikawaReport,
    TachikawaRow, DEFAULT_BRUTE_CAP,
};
pub use records::{records_to_tsv, ClassificationRecord, RecordRow, TSV_HEADER};

/// A full subcategory `add(⊕ members)`, as a sorted set of registry ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Subcat(Vec<IndecId>);

impl Subcat {
    pub fn new(mut ids: Vec<IndecId>) -> Self {
        ids.sort_unstable();
        ids.dedup();
        Subcat(ids)
    }
    pub fn ids(&self) -> &[IndecId] {
        &self.0
    }
    pub fn len(&self) -> usize {
        self.0.len()
    }
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
    pub fn contains(&self, id: IndecId) -> bool {
        self.0.binary_search(&id).is_ok()
    }
    pub fn is_subset(&self, other: &Subcat) -> bool {
        self.0.iter().all(|&i| other.contains(i))
    }
    pub fn names(&self, reg: &IndecRegistry) -> Vec<String> {
        self.0.iter().map(|&i| reg.name(i).to_string()).collect()
    }
}

/// Torsion class data for one Weyl element.
#[derive(Clone, Debug)]
pub struct TorsionData {
    pub ideal_dim: usize,
    /// Distinct indecomposable summands of `I_w`.
    pub generators: Subcat,
    pub members: Subcat,
}

/// Frozen registry plus the Weyl group data needed by the pipeline.
pub struct Classifier {
    algebra: Arc<GradedAlgebra>,
    ty: Option<DynkinType>,
    registry: IndecRegistry,
    group: Option<WeylGroup>,
    elements: Vec<WeylElement>,
    hom: Vec<Vec<usize>>,
    syzygy_ids: Vec<Vec<IndecId>>,
    cosyzygy_ids: Vec<Vec<IndecId>>,
    torsion: OnceLock<Vec<TorsionData>>,
}

impl std::fmt::Debug for Classifier {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Classifier").field("algebra", &self.algebra.name()).field("registry", &self.registry.len()).finish()
    }
}

impl Classifier {
    /// Preprojective algebra of a Dynkin type with its Weyl group.
    pub fn preprojective(ty: DynkinType, field: Fp, config: RegistryConfig) -> Result<Self> {
        let a = Arc::new(preprojective_of_type(ty, field)?);
        let group = WeylGroup::of_type(ty);
        let elements = group.enumerate_all(DEFAULT_ENUMERATION_CAP)?;
        Self::build(a, Some(ty), Some(group), elements, config)
    }

    /// Any representation-finite algebra; Weyl group operations are unavailable.
    pub fn for_algebra(a: Arc<GradedAlgebra>, config: RegistryConfig) -> Result<Self> {
        Self::build(a, None, None, Vec::new(), config)
    }

    fn build(
        a: Arc<GradedAlgebra>,
        ty: Option<DynkinType>,
        group: Option<WeylGroup>,
        elements: Vec<WeylElement>,
        config: RegistryConfig,
    ) -> Result<Self> {
        let registry = IndecRegistry::build(&a, Side::Left, config)?;
        let mods = registry.modules();
        let hom = mods
            .par_iter()
            .map(|x| mods.iter().map(|y| hom_dim(x, y)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let syzygy_ids = mods.par_iter().map(|x| registry.summand_ids(&syzygy(x)?)).collect::<Result<Vec<_>>>()?;
        let cosyzygy_ids = mods.par_iter().map(|x| registry.summand_ids(&cosyzygy(x)?)).collect::<Result<Vec<_>>>()?;
        Ok(Classifier {
            algebra: a,
            ty,
            registry,
            group,
            elements,
            hom,
            syzygy_ids,
            cosyzygy_ids,
            torsion: OnceLock::new(),
        })
    }

    pub fn algebra(&self) -> &Arc<GradedAlgebra> {
        &self.algebra
    }
    pub fn dynkin_type(&self) -> Option<DynkinType> {
        self.ty
    }
    pub fn registry(&self) -> &IndecRegistry {
        &self.registry
    }
    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }
    pub fn hom_dim(&self, x: IndecId, y: IndecId) -> usize {
        self.hom[x][y]
    }
    pub fn syzygy_ids(&self, x: IndecId) -> &[IndecId] {
        &self.syzygy_ids[x]
    }

    pub fn group(&self) -> Result<&WeylGroup> {
        self.group.as_ref().ok_or_else(|| Error::Unsupported(format!("{} has no Weyl group attached", self.algebra.name())))
    }

    pub fn full(&self) -> Subcat {
        Subcat::new((0..self.registry.len()).collect())
    }

    fn index_of(&self, w: &WeylElement) -> Result<usize> {
        self.elements
            .iter()
            .position(|e| e == w)
            .ok_or_else(|| Error::Inconsistency(format!("element {w} not in the enumerated group")))
    }

    fn compute_torsion(&self, w: &WeylElement) -> Result<TorsionData> {
        let ideal = TwoSidedIdeal::for_word(&self.algebra, w.word())?;
        let module = module_of_left_ideal(&ideal)?;
        if module.is_zero() {
            return Ok(TorsionData { ideal_dim: 0, generators: Subcat::default(), members: Subcat::default() });
        }
        let generators = Subcat::new(self.registry.summand_ids(&module)?);
        let basic = self.sum_of(&generators)?;
        let mut members = Vec::new();
        for (id, y) in self.registry.modules().iter().enumerate() {
            if in_gen(&basic, y)? {
                members.push(id);
            }
        }
        Ok(TorsionData { ideal_dim: ideal.dim(), generators, members: Subcat::new(members) })
    }

    /// Torsion data of every enumerated element, in enumeration order.
    pub fn torsion_all(&self) -> Result<&[TorsionData]> {
        if let Some(t) = self.torsion.get() {
            return Ok(t);
        }
        let computed = self.elements.par_iter().map(|w| self.compute_torsion(w)).collect::<Result<Vec<_>>>()?;
        Ok(self.torsion.get_or_init(|| computed))
    }

    /// `{y : y ∈ gen(I_w)}`.
    pub fn torsion_class(&self, w: &WeylElement) -> Result<Subcat> {
        Ok(self.torsion_all()?[self.index_of(w)?].members.clone())
    }

    /// Direct sum of one copy of each member (zero module for the empty set).
    pub fn sum_of(&self, s: &Subcat) -> Result<Representation> {
        if s.is_empty() {
            return Ok(Representation::zero(&self.algebra, Side::Left));
        }
        Representation::direct_sum(&s.ids().iter().map(|&i| self.registry.get(i).clone()).collect::<Vec<_>>())
    }

    /// Summands of `T₁ = coker(A → T₀)` for the minimal left approximation into `torsion`.
    pub fn approximation_cokernel(&self, torsion: &Subcat) -> Result<Subcat> {
        let members: Vec<Representation> = torsion.ids().iter().map(|&i| self.registry.get(i).clone()).collect();
        let phi = minimal_left_approx(&regular_module(&self.algebra, Side::Left), &members)?;
        let (t1, _) = cokernel(&phi)?;
        if t1.is_zero() {
            return Ok(Subcat::default());
        }
        Ok(Subcat::new(self.registry.summand_ids(&t1)?))
    }

    /// `gen(I_w) ∩ T₁°`.
    pub fn wide_from_weyl(&self, w: &WeylElement) -> Result<Subcat> {
        let torsion = self.torsion_class(w)?;
        let t1 = self.approximation_cokernel(&torsion)?;
        Ok(self.perp(&torsion, &t1))
    }

    fn perp(&self, torsion: &Subcat, t1: &Subcat) -> Subcat {
        Subcat::new(torsion.ids().iter().copied().filter(|&y| t1.ids().iter().all(|&t| self.hom[t][y] == 0)).collect())
    }

    pub fn epi_target(&self, wide: &Subcat) -> Result<EpiTarget> {
        epi_target(&self.registry, wide)
    }

    /// `u` with `gen(T₁) = gen(I_u)` and `v = w⁻¹u`, with the length and idempotency checks.
    pub fn find_uv(&self, w: &WeylElement) -> Result<(WeylElement, WeylElement)> {
        let g = self.group()?;
        let torsion = self.torsion_class(w)?;
        let t1 = self.approximation_cokernel(&torsion)?;
        self.find_uv_from(w, &t1, g)
    }

    fn find_uv_from(&self, w: &WeylElement, t1: &Subcat, g: &WeylGroup) -> Result<(WeylElement, WeylElement)> {
        let gen_t1 = if t1.is_empty() {
            Subcat::default()
        } else {
            let basic = self.sum_of(t1)?;
            let mut ids = Vec::new();
            for (id, y) in self.registry.modules().iter().enumerate() {
                if in_gen(&basic, y)? {
                    ids.push(id);
                }
            }
            Subcat::new(ids)
        };
        let torsions = self.torsion_all()?;
        let matches: Vec<usize> = (0..self.elements.len()).filter(|&k| torsions[k].members == gen_t1).collect();
        let &[k] = matches.as_slice() else {
            return Err(Error::Inconsistency(format!(
                "{} Weyl elements have torsion class gen(T1) for w = {w}",
                matches.len()
            )));
        };
        let u = self.elements[k].clone();
        let v = g.multiply(&g.inverse(w), &u);
        if u.length() != w.length() + v.length() {
            return Err(Error::TheoremViolation(format!("l({u}) != l({w}) + l({v})")));
        }
        Ok((u, v))
    }

    /// Morita tag of `A / I_v` and whether `I_v` is idempotent.
    pub fn quotient_tag(&self, v: &WeylElement) -> Result<(String, bool)> {
        let ideal = TwoSidedIdeal::for_word(&self.algebra, v.word())?;
        let idem = ideal.is_idempotent();
        let q = ideal.quotient()?;
        Ok((crate::algebra::morita_tag(&q)?, idem))
    }

    /// Both homological criteria: the epi target is projective, and the wide
    /// subcategory is closed under `Ω` and `Ω⁻¹`. They must agree.
    pub fn is_homological(&self, wide: &Subcat) -> Result<bool> {
        let target = self.epi_target(wide)?;
        self.is_homological_with(wide, &target)
    }

    fn is_homological_with(&self, wide: &Subcat, target: &EpiTarget) -> Result<bool> {
        let mut projective = true;
        for &(id, _) in &target.summands {
            projective &= self.registry.is_projective(id)?;
        }
        let closed = wide.ids().iter().all(|&y| {
            self.syzygy_ids[y].iter().chain(&self.cosyzygy_ids[y]).all(|&z| wide.contains(z))
        });
        if projective != closed {
            return Err(Error::Inconsistency(format!(
                "homological criteria disagree on {:?}: projective target {projective}, syzygy-closed {closed}",
                wide.names(&self.registry)
            )));
        }
        Ok(projective)
    }

    fn record(&self, k: usize) -> Result<ClassificationRecord> {
        let g = self.group()?;
        let w = &self.elements[k];
        let t = &self.torsion_all()?[k];
        let t1 = self.approximation_cokernel(&t.members)?;
        let wide = self.perp(&t.members, &t1);
        let target = self.epi_target(&wide)?;
        let (u, v) = self.find_uv_from(w, &t1, g)?;
        let (quotient_tag, idempotent) = self.quotient_tag(&v)?;
        if !idempotent {
            return Err(Error::TheoremViolation(format!("I_v is not idempotent for w = {w}, v = {v}")));
        }
        if !same_tag(&quotient_tag, &target.tag) {
            return Err(Error::TheoremViolation(format!(
                "w = {w}: End(C)^op has tag {} but A/I_v has tag {quotient_tag}",
                target.tag
            )));
        }
        let homological = self.is_homological_with(&wide, &target)?;
        let label = g.sigma4_label(w).ok();
        Ok(ClassificationRecord {
            element: w.clone(),
            label,
            ideal_dim: t.ideal_dim,
            generators: t.generators.clone(),
            torsion: t.members.clone(),
            wide,
            u,
            v,
            tag: target.tag,
            quotient_tag,
            homological,
        })
    }

    /// One record per Weyl element, in `(length, shortlex)` order; the wide
    /// subcategories must be pairwise distinct.
    pub fn classify_all(&self) -> Result<Vec<ClassificationRecord>> {
        self.group()?;
        self.torsion_all()?;
        let records = (0..self.elements.len()).into_par_iter().map(|k| self.record(k)).collect::<Result<Vec<_>>>()?;
        let mut wides: Vec<&Subcat> = records.iter().map(|r| &r.wide).collect();
        wides.sort();
        if wides.windows(2).any(|p| p[0] == p[1]) {
            return Err(Error::TheoremViolation("two Weyl elements give the same wide subcategory".into()));
        }
        Ok(records)
    }

    /// The homological records; in type A the two nontrivial ones are checked
    /// against the closed-form Weyl elements and the images `add(P_1)`, `add(P_n)`.
    pub fn homological_list(&self, records: &[ClassificationRecord]) -> Result<Vec<ClassificationRecord>> {
        let g = self.group()?;
        let out: Vec<ClassificationRecord> = records.iter().filter(|r| r.homological).cloned().collect();
        let Some(ty) = self.ty.filter(|t| t.kind == DynkinKind::A) else {
            return Ok(out);
        };
        let n = ty.rank;
        let w0 = g.longest_element()?;
        let nontrivial: Vec<&ClassificationRecord> =
            out.iter().filter(|r| !r.element.is_identity() && r.element != w0).collect();
        let expected: Vec<(WeylElement, Subcat)> = if n < 2 {
            Vec::new()
        } else {
            let (for_p1, for_pn) = theorem_b_words(n);
            vec![
                (g.from_word(&for_p1)?, Subcat::new(vec![self.registry.projective_id(0)?])),
                (g.from_word(&for_pn)?, Subcat::new(vec![self.registry.projective_id(n - 1)?])),
            ]
        };
        let ok = nontrivial.len() == expected.len()
            && expected.iter().all(|(w, wide)| nontrivial.iter().any(|r| &r.element == w && &r.wide == wide));
        if !ok {
            return Err(Error::TheoremViolation(format!(
                "{} nontrivial homological records do not match the predicted elements",
                nontrivial.len()
            )));
        }
        Ok(out)
    }

    /// For every record whose wide subcategory is closed under quotients, the
    /// epi target must match `A/AeA` with `e` summing the vertices whose simple
    /// lies outside it. Returns the number of records checked.
    pub fn check_quotient_closed(&self, records: &[ClassificationRecord]) -> Result<usize> {
        let n = self.algebra.vertex_count();
        let mut checked = 0;
        for r in records {
            let basic = self.sum_of(&r.wide)?;
            let mut closed = true;
            for (id, y) in self.registry.modules().iter().enumerate() {
                if !r.wide.contains(id) && !basic.is_zero() && in_gen(&basic, y)? {
                    closed = false;
                    break;
                }
            }
            if !closed {
                continue;
            }
            let mut outside = Vec::new();
            for i in 0..n {
                if !r.wide.contains(self.registry.simple_id(i)?) {
                    outside.push(i);
                }
            }
            let ideal = TwoSidedIdeal::vertex_ideal(&self.algebra, &outside);
            let tag = crate::algebra::morita_tag(&ideal.quotient()?)?;
            if !same_tag(&tag, &r.tag) {
                return Err(Error::TheoremViolation(format!(
                    "w = {}: quotient-closed wide has tag {} but A/AeA has tag {tag}",
                    r.element, r.tag
                )));
            }
            checked += 1;
        }
        Ok(checked)
    }

    /// The Weyl element whose torsion class is the smallest one containing every summand of `x`.
    pub fn smallest_torsion_class_containing(&self, x: &Representation) -> Result<WeylElement> {
        let need = if x.is_zero() { Subcat::default() } else { Subcat::new(self.registry.summand_ids(x)?) };
        let torsions = self.torsion_all()?;
        let cands: Vec<usize> = (0..self.elements.len()).filter(|&k| need.is_subset(&torsions[k].members)).collect();
        let minimal: Vec<usize> = cands
            .iter()
            .copied()
            .filter(|&k| cands.iter().all(|&j| torsions[k].members.is_subset(&torsions[j].members)))
            .collect();
        match minimal.as_slice() {
            [k] => Ok(self.elements[*k].clone()),
            _ => Err(Error::TheoremViolation(format!("no unique smallest torsion class ({} minima)", minimal.len()))),
        }
    }
}

/// Words (0-based) of `s_n(s_{n-1}s_n)⋯(s_2⋯s_n)` and `s_{n-1}(s_{n-2}s_{n-1})⋯(s_1⋯s_{n-1})`,
/// whose wide subcategories should be `add(P_1)` and `add(P_n)`.
pub fn theorem_b_words(n: usize) -> (Vec<usize>, Vec<usize>) {
    let block = |lo: usize, hi: usize| -> Vec<usize> { (lo..=hi).collect() };
    let mut p1 = Vec::new();
    for k in (1..n).rev() {
        p1.extend(block(k, n - 1));
    }
    let mut pn = Vec::new();
    if n >= 2 {
        for k in (0..n - 1).rev() {
            pn.extend(block(k, n - 2));
        }
    }
    (p1, pn)
}
