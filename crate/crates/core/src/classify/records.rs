use serde::Serialize;

use super::Subcat;
use crate::modrep::IndecRegistry;
use crate::weyl::{format_word, WeylElement};

pub const TSV_HEADER: &str = "#label\tword\ttorsion\twide\tv\ttag\thomological";

#[derive(Clone, Debug)]
pub struct ClassificationRecord {
    pub element: WeylElement,
    /// Σ₄ permutation label (type A₃ only).
    pub label: Option<String>,
    pub ideal_dim: usize,
    /// Distinct summands of `I_w`.
    pub generators: Subcat,
    pub torsion: Subcat,
    pub wide: Subcat,
    pub u: WeylElement,
    pub v: WeylElement,
    /// Tag of `End(C)^op`.
    pub tag: String,
    /// Tag of `A / I_v`.
    pub quotient_tag: String,
    pub homological: bool,
}

/// Name-resolved view of a record, used for TSV and JSON output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecordRow {
    pub label: Option<String>,
    pub word: String,
    pub length: usize,
    pub ideal_dim: usize,
    pub generators: Vec<String>,
    pub torsion: Vec<String>,
    pub wide: Vec<String>,
    pub u: String,
    pub v: String,
    pub tag: String,
    pub homological: bool,
}

fn word_or_e(w: &WeylElement) -> String {
    if w.is_identity() {
        "e".into()
    } else {
        format_word(w.word())
    }
}

fn set_field(names: &[String]) -> String {
    if names.is_empty() {
        "0".into()
    } else {
        names.join(",")
    }
}

impl ClassificationRecord {
    pub fn row(&self, reg: &IndecRegistry) -> RecordRow {
        RecordRow {
            label: self.label.clone(),
            word: word_or_e(&self.element),
            length: self.element.length(),
            ideal_dim: self.ideal_dim,
            generators: self.generators.names(reg),
            torsion: self.torsion.names(reg),
            wide: self.wide.names(reg),
            u: word_or_e(&self.u),
            v: word_or_e(&self.v),
            tag: self.tag.clone(),
            homological: self.homological,
        }
    }
}

impl RecordRow {
    pub fn tsv_line(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.label.as_deref().unwrap_or("-"),
            self.word,
            set_field(&self.torsion),
            set_field(&self.wide),
            self.v,
            self.tag,
            self.homological
        )
    }
}

/// Header plus one line per record, newline-terminated.
pub fn records_to_tsv(records: &[ClassificationRecord], reg: &IndecRegistry) -> String {
    let mut out = String::from(TSV_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&r.row(reg).tsv_line());
        out.push('\n');
    }
    out
}
