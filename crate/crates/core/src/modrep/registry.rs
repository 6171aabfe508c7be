use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use super::{
    cokernel, cosyzygy, decompose, hom_basis, image, injective, is_isomorphic_indecomposable, kernel, nakayama,
    projective, quotient_module, radical, simple, socle, socle_dims, socle_spaces, syzygy, top, top_dims,
    Representation,
};
use crate::algebra::{GradedAlgebra, Side};
use crate::error::{Error, Result};

pub type IndecId = usize;

const A3_NAMES: &str = include_str!("../../data/a3_names.tsv");

#[derive(Clone, Copy, Debug)]
pub struct RegistryConfig {
    /// Abort once more isomorphism classes than this have been found.
    pub max_modules: usize,
    /// Abort on any indecomposable of larger total dimension.
    pub max_dim: usize,
}

impl Default for RegistryConfig {
    fn default() -> Self {
        RegistryConfig { max_modules: 400, max_dim: 200 }
    }
}

/// Canonical representatives of the indecomposable modules on one side,
/// found by closing the simples and projectives under standard constructions.
pub struct IndecRegistry {
    algebra: Arc<GradedAlgebra>,
    side: Side,
    reps: Vec<Representation>,
    names: Vec<String>,
    by_dims: HashMap<Vec<usize>, Vec<IndecId>>,
    config: RegistryConfig,
}

impl std::fmt::Debug for IndecRegistry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IndecRegistry").field("algebra", &self.algebra.name()).field("names", &self.names).finish()
    }
}

impl IndecRegistry {
    pub fn build(a: &Arc<GradedAlgebra>, side: Side, config: RegistryConfig) -> Result<Self> {
        let mut reg = IndecRegistry {
            algebra: a.clone(),
            side,
            reps: Vec::new(),
            names: Vec::new(),
            by_dims: HashMap::new(),
            config,
        };
        let n = a.vertex_count();
        let mut queue: VecDeque<IndecId> = VecDeque::new();
        let mut seeds = Vec::new();
        for i in 0..n {
            seeds.push(projective(a, side, i)?);
        }
        for i in 0..n {
            seeds.push(simple(a, side, i)?);
        }
        for i in 0..n {
            seeds.push(injective(a, side, i)?);
        }
        for s in seeds {
            reg.absorb(&s, &mut queue)?;
        }
        let mut pairs_done = 0usize;
        loop {
            while let Some(id) = queue.pop_front() {
                let x = reg.reps[id].clone();
                let (sq, _) = quotient_module(&x, &socle_spaces(&x))?;
                let derived = [
                    radical(&x)?.0,
                    top(&x)?.0,
                    socle(&x)?.0,
                    sq,
                    syzygy(&x)?,
                    cosyzygy(&x)?,
                    nakayama(&x)?,
                ];
                for d in derived {
                    reg.absorb(&d, &mut queue)?;
                }
            }
            // morphisms between registered modules, in order of discovery
            let len = reg.reps.len();
            if pairs_done == len {
                break;
            }
            for j in 0..len {
                for i in 0..len {
                    if i.max(j) < pairs_done {
                        continue;
                    }
                    let (x, y) = (reg.reps[i].clone(), reg.reps[j].clone());
                    for h in hom_basis(&x, &y)? {
                        if h.is_isomorphism() || h.is_zero() {
                            continue;
                        }
                        for m in [kernel(&h)?.0, cokernel(&h)?.0, image(&h)?.0] {
                            reg.absorb(&m, &mut queue)?;
                        }
                    }
                }
            }
            pairs_done = len;
        }
        reg.assign_names()?;
        Ok(reg)
    }

    fn absorb(&mut self, x: &Representation, queue: &mut VecDeque<IndecId>) -> Result<()> {
        if x.is_zero() {
            return Ok(());
        }
        for m in decompose(x)? {
            if self.lookup(&m)?.is_none() {
                if m.dim() > self.config.max_dim || self.reps.len() >= self.config.max_modules {
                    return Err(Error::RepresentationInfinite(format!(
                        "{}: registry exceeded {} modules or dimension {}",
                        self.algebra.name(),
                        self.config.max_modules,
                        self.config.max_dim
                    )));
                }
                let id = self.reps.len();
                self.by_dims.entry(m.dims().to_vec()).or_default().push(id);
                self.reps.push(m);
                self.names.push(String::new());
                queue.push_back(id);
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &Arc<GradedAlgebra> {
        &self.algebra
    }
    pub fn side(&self) -> Side {
        self.side
    }
    pub fn len(&self) -> usize {
        self.reps.len()
    }
    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }
    pub fn get(&self, id: IndecId) -> &Representation {
        &self.reps[id]
    }
    pub fn modules(&self) -> &[Representation] {
        &self.reps
    }
    pub fn name(&self, id: IndecId) -> &str {
        &self.names[id]
    }
    pub fn names(&self) -> &[String] {
        &self.names
    }
    pub fn id_by_name(&self, name: &str) -> Option<IndecId> {
        self.names.iter().position(|n| n == name)
    }

    /// Id of an indecomposable module, if registered.
    pub fn lookup(&self, x: &Representation) -> Result<Option<IndecId>> {
        let Some(cands) = self.by_dims.get(x.dims()) else {
            return Ok(None);
        };
        for &id in cands {
            if is_isomorphic_indecomposable(&self.reps[id], x)? {
                return Ok(Some(id));
            }
        }
        Ok(None)
    }

    /// Indecomposable summands of `x` as `(id, multiplicity)`, sorted by id.
    pub fn decompose(&self, x: &Representation) -> Result<Vec<(IndecId, usize)>> {
        let mut counts: HashMap<IndecId, usize> = HashMap::new();
        for m in decompose(x)? {
            let id = self.lookup(&m)?.ok_or_else(|| Error::UnknownSummand(m.dims().to_vec()))?;
            *counts.entry(id).or_default() += 1;
        }
        let mut out: Vec<(IndecId, usize)> = counts.into_iter().collect();
        out.sort_unstable();
        Ok(out)
    }

    /// Ids of the summands of `x`, without multiplicity.
    pub fn summand_ids(&self, x: &Representation) -> Result<Vec<IndecId>> {
        Ok(self.decompose(x)?.into_iter().map(|(id, _)| id).collect())
    }

    pub fn projective_id(&self, i: usize) -> Result<IndecId> {
        self.expect_id(&projective(&self.algebra, self.side, i)?)
    }
    pub fn simple_id(&self, i: usize) -> Result<IndecId> {
        self.expect_id(&simple(&self.algebra, self.side, i)?)
    }
    pub fn injective_id(&self, i: usize) -> Result<IndecId> {
        self.expect_id(&injective(&self.algebra, self.side, i)?)
    }

    /// Id of an indecomposable that must already be registered.
    pub fn expect_id(&self, x: &Representation) -> Result<IndecId> {
        self.lookup(x)?.ok_or_else(|| Error::UnknownSummand(x.dims().to_vec()))
    }

    pub fn is_projective(&self, id: IndecId) -> Result<bool> {
        let x = &self.reps[id];
        let t = top_dims(x);
        if t.iter().sum::<usize>() != 1 {
            return Ok(false);
        }
        let v = t.iter().position(|&d| d == 1).expect("simple top");
        Ok(self.projective_id(v)? == id)
    }

    pub fn is_injective(&self, id: IndecId) -> Result<bool> {
        let s = socle_dims(&self.reps[id]);
        if s.iter().sum::<usize>() != 1 {
            return Ok(false);
        }
        let v = s.iter().position(|&d| d == 1).expect("simple socle");
        Ok(self.injective_id(v)? == id)
    }

    fn assign_names(&mut self) -> Result<()> {
        let n = self.algebra.vertex_count();
        let mut names: Vec<String> = vec![String::new(); self.reps.len()];
        for i in 0..n {
            names[self.simple_id(i)?] = format!("S{}", i + 1);
        }
        for i in 0..n {
            names[self.projective_id(i)?] = format!("P{}", i + 1);
        }
        let table = if self.algebra.name() == "A3" && self.side == Side::Left { parse_names(A3_NAMES) } else { Vec::new() };
        let nakayama = self.algebra.name().starts_with("Nakayama(");
        for id in 0..self.reps.len() {
            if !names[id].is_empty() {
                continue;
            }
            let x = &self.reps[id];
            let (t, s) = (top_dims(x), socle_dims(x));
            if let Some(entry) = table.iter().find(|e| e.dims == x.dims() && e.top == t && e.socle == s) {
                names[id] = entry.name.clone();
            } else if nakayama && t.iter().sum::<usize>() == 1 {
                let v = t.iter().position(|&d| d == 1).expect("simple top");
                names[id] = format!("P{}/rad{}", v + 1, x.dim());
            } else {
                names[id] = format!("X{id}");
            }
        }
        self.names = names;
        Ok(())
    }
}

struct NameEntry {
    name: String,
    dims: Vec<usize>,
    top: Vec<usize>,
    socle: Vec<usize>,
}

fn parse_vec(s: &str) -> Vec<usize> {
    s.split(',').map(|x| x.trim().parse().expect("numeric dimension in name table")).collect()
}

fn parse_names(src: &str) -> Vec<NameEntry> {
    src.lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let cols: Vec<&str> = l.split('\t').collect();
            NameEntry { name: cols[0].to_string(), dims: parse_vec(cols[1]), top: parse_vec(cols[2]), socle: parse_vec(cols[3]) }
        })
        .collect()
}
