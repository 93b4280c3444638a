//! Lexical relations between lemmas and their compilation into T-Box axioms.
//!
//! File format: one relation per line, `left<TAB>kind<TAB>right`, with
//! kind one of `syn`, `ant`, `hypo`, `cohypo`. Lines starting with `#` and
//! blank lines are ignored. Terms are normalized to concept names on load.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::dl::{normalize_concept, ConceptExpr, ConceptName, Gci};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LexKind {
    Synonym,
    Antonym,
    /// `left` is a hyponym of `right`.
    HyponymOf,
    Cohyponym,
}

impl LexKind {
    pub fn token(self) -> &'static str {
        match self {
            LexKind::Synonym => "syn",
            LexKind::Antonym => "ant",
            LexKind::HyponymOf => "hypo",
            LexKind::Cohyponym => "cohypo",
        }
    }
}

impl FromStr for LexKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "syn" => Ok(LexKind::Synonym),
            "ant" => Ok(LexKind::Antonym),
            "hypo" => Ok(LexKind::HyponymOf),
            "cohypo" => Ok(LexKind::Cohyponym),
            other => Err(format!("unknown relation kind `{other}`")),
        }
    }
}

impl fmt::Display for LexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct MalformedRelation {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LexRelation {
    pub left: ConceptName,
    pub kind: LexKind,
    pub right: ConceptName,
}

impl LexRelation {
    /// Normalizes both terms; rejects empty or identical terms.
    pub fn new(left: &str, kind: LexKind, right: &str) -> Result<Self, String> {
        let l = normalize_concept(left);
        let r = normalize_concept(right);
        if l.is_empty() || r.is_empty() {
            return Err("empty term".into());
        }
        if l == r {
            return Err(format!("`{l}` related to itself"));
        }
        Ok(LexRelation {
            left: ConceptName::new(&l),
            kind,
            right: ConceptName::new(&r),
        })
    }

    pub fn gcis(&self) -> Vec<Gci> {
        let l = ConceptExpr::Atomic(self.left.clone());
        let r = ConceptExpr::Atomic(self.right.clone());
        match self.kind {
            LexKind::HyponymOf => vec![Gci::new(l, r)],
            LexKind::Synonym => vec![Gci::new(l.clone(), r.clone()), Gci::new(r, l)],
            LexKind::Antonym | LexKind::Cohyponym => vec![
                Gci::new(l.clone(), ConceptExpr::not(r.clone())),
                Gci::new(r, ConceptExpr::not(l)),
            ],
        }
    }
}

impl fmt::Display for LexRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\t{}\t{}", self.left, self.kind, self.right)
    }
}

pub fn parse_lexicon(src: &str) -> Result<Vec<LexRelation>, MalformedRelation> {
    let mut out = Vec::new();
    for (i, raw) in src.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| MalformedRelation { line: i + 1, message };
        let fields: Vec<&str> = line.split('\t').map(str::trim).collect();
        let [left, kind, right] = fields[..] else {
            return Err(err(format!("expected 3 tab-separated fields, found {}", fields.len())));
        };
        let kind: LexKind = kind.parse().map_err(err)?;
        out.push(LexRelation::new(left, kind, right).map_err(err)?);
    }
    Ok(out)
}

pub fn print_lexicon(relations: &[LexRelation]) -> String {
    relations.iter().map(|r| format!("{r}\n")).collect()
}

pub fn lex_to_tbox<'a>(relations: impl IntoIterator<Item = &'a LexRelation>) -> BTreeSet<Gci> {
    relations.into_iter().flat_map(LexRelation::gcis).collect()
}

/// Axioms for the relations whose two terms both occur in the pair's
/// vocabulary.
pub fn relevant_tbox(
    relations: &[LexRelation],
    vocab_t: &BTreeSet<ConceptName>,
    vocab_h: &BTreeSet<ConceptName>,
) -> BTreeSet<Gci> {
    let known = |c: &ConceptName| vocab_t.contains(c) || vocab_h.contains(c);
    lex_to_tbox(relations.iter().filter(|r| known(&r.left) && known(&r.right)))
}
