//! Library side of the `preproj` command: algebra selection, table
//! serialization, ideal reports and the verification suites.

pub mod suites;

use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use preproj::algebra::{nakayama_algebra, preprojective_of_type, GradedAlgebra, Side, TwoSidedIdeal};
use preproj::classify::{records_to_tsv, Classifier, RecordRow};
use preproj::linalg::Fp;
use preproj::modrep::{in_gen, module_of_left_ideal, IndecRegistry, RegistryConfig};
use preproj::quiver::{DynkinKind, DynkinType};
use preproj::weyl::{format_word, parse_word, WeylGroup};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] preproj::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// 1 for failed mathematical checks, 2 for bad input or unsupported algebras.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(preproj::Error::TheoremViolation(_) | preproj::Error::Inconsistency(_)) => 1,
            _ => 2,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraSpec {
    Preprojective(DynkinType),
    Nakayama { n: usize, h: usize },
}

impl AlgebraSpec {
    /// `--type` accepts a kind letter (with `--rank`) or a full name like `A3`.
    pub fn from_flags(ty: Option<&str>, rank: Option<usize>, nakayama: Option<&str>) -> CliResult<Option<Self>> {
        match (ty, nakayama) {
            (Some(_), Some(_)) => Err(CliError::Usage("--type and --nakayama are mutually exclusive".into())),
            (None, Some(s)) => {
                if rank.is_some() {
                    return Err(CliError::Usage("--rank does not apply to --nakayama".into()));
                }
                let (n, h) = s
                    .split_once(':')
                    .and_then(|(n, h)| Some((n.trim().parse().ok()?, h.trim().parse().ok()?)))
                    .ok_or_else(|| CliError::Usage(format!("--nakayama expects N:H, got {s:?}")))?;
                Ok(Some(AlgebraSpec::Nakayama { n, h }))
            }
            (Some(t), None) => {
                let ty: DynkinType = if t.chars().any(|c| c.is_ascii_digit()) {
                    if rank.is_some() {
                        return Err(CliError::Usage("rank given twice".into()));
                    }
                    t.parse()?
                } else {
                    let kind: DynkinKind = t.parse()?;
                    let rank = rank.ok_or_else(|| CliError::Usage("--type needs --rank".into()))?;
                    DynkinType::new(kind, rank)?
                };
                Ok(Some(AlgebraSpec::Preprojective(ty)))
            }
            (None, None) => match rank {
                Some(r) => Ok(Some(AlgebraSpec::Preprojective(DynkinType::new(DynkinKind::A, r)?))),
                None => Ok(None),
            },
        }
    }

    pub fn build(self, field: Fp) -> CliResult<Arc<GradedAlgebra>> {
        Ok(Arc::new(match self {
            AlgebraSpec::Preprojective(ty) => preprojective_of_type(ty, field)?,
            AlgebraSpec::Nakayama { n, h } => nakayama_algebra(n, h, field)?,
        }))
    }
}

impl Default for AlgebraSpec {
    fn default() -> Self {
        AlgebraSpec::Preprojective(DynkinType::a(3))
    }
}

/// Shared configuration for all subcommands.
#[derive(Clone, Copy, Debug)]
pub struct Config {
    pub field: Fp,
    /// `None` when no algebra flag was given.
    pub algebra: Option<AlgebraSpec>,
    pub registry: RegistryConfig,
    pub ext_bound: Option<usize>,
}

impl Config {
    pub fn new(p: u32) -> CliResult<Self> {
        Ok(Config { field: Fp::new(p)?, algebra: None, registry: RegistryConfig::default(), ext_bound: None })
    }
    pub fn with_algebra(mut self, a: AlgebraSpec) -> Self {
        self.algebra = Some(a);
        self
    }
    fn algebra_or_default(&self) -> AlgebraSpec {
        self.algebra.unwrap_or_default()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Tsv,
    Json,
}

#[derive(Serialize)]
struct JsonTable<'a> {
    algebra: &'a str,
    field_char: u32,
    records: &'a [RecordRow],
}

pub fn classifier(cfg: &Config, ty: DynkinType) -> CliResult<Classifier> {
    Ok(Classifier::preprojective(ty, cfg.field, cfg.registry)?)
}

/// The full classification table of a preprojective algebra.
pub fn cmd_classify(cfg: &Config, format: Format) -> CliResult<String> {
    let ty = match cfg.algebra_or_default() {
        AlgebraSpec::Preprojective(ty) => ty,
        AlgebraSpec::Nakayama { .. } => {
            return Err(CliError::Usage("classify supports preprojective algebras only".into()));
        }
    };
    let c = classifier(cfg, ty)?;
    let records = c.classify_all()?;
    match format {
        Format::Tsv => Ok(records_to_tsv(&records, c.registry())),
        Format::Json => {
            let rows: Vec<RecordRow> = records.iter().map(|r| r.row(c.registry())).collect();
            let table = JsonTable { algebra: c.algebra().name(), field_char: cfg.field.p(), records: &rows };
            Ok(serde_json::to_string_pretty(&table)? + "\n")
        }
    }
}

/// Dimension, idempotency and `gen(I_word)` for a word in the simple reflections.
pub fn cmd_ideal(cfg: &Config, word: &str) -> CliResult<String> {
    let spec = cfg.algebra_or_default();
    let AlgebraSpec::Preprojective(ty) = spec else {
        return Err(CliError::Usage("ideal needs a preprojective algebra".into()));
    };
    let a = spec.build(cfg.field)?;
    let word = if word.trim() == "e" { Vec::new() } else { parse_word(word, ty.rank)? };
    let g = WeylGroup::of_type(ty);
    let ideal = TwoSidedIdeal::for_word(&a, &word)?;
    let reg = IndecRegistry::build(&a, Side::Left, cfg.registry)?;
    let module = module_of_left_ideal(&ideal)?;
    let mut members = Vec::new();
    if !module.is_zero() {
        for (id, y) in reg.modules().iter().enumerate() {
            if in_gen(&module, y)? {
                members.push(reg.name(id).to_string());
            }
        }
    }
    let list = |v: &[String]| if v.is_empty() { "0".to_string() } else { v.join(",") };
    let summands: Vec<String> =
        if module.is_zero() { Vec::new() } else { reg.summand_ids(&module)?.iter().map(|&i| reg.name(i).to_string()).collect() };
    let mut out = String::new();
    out += &format!("algebra\t{}\n", a.name());
    out += &format!("word\t{}\n", format_word(&word));
    out += &format!("reduced\t{}\n", g.is_reduced(&word)?);
    out += &format!("dim_ideal\t{}\n", ideal.dim());
    out += &format!("idempotent\t{}\n", ideal.is_idempotent());
    out += &format!("summands\t{}\n", list(&summands));
    out += &format!("gen\t{}\n", list(&members));
    out += &format!("dim_quotient\t{}\n", a.dim() - ideal.dim());
    Ok(out)
}
