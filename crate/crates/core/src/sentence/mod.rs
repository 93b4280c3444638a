//! Controlled English sentences and their event-based A-Boxes.
//!
//! ```text
//! S        := NP VP
//! NP       := Det? Adj* Noun Rel? | ProperName Rel? | Number Noun? Rel?
//! Rel      := "who" VP
//! VP       := Copula Adj+
//!           | Copula Det? Adj* Noun
//!           | Copula Det RelNoun "of" NP
//!           | Verb Adv* NP? (PP | Adv)*
//!           | Aux "not" Verb Adv* NP? (PP | Adv)*
//! PP       := Prep NP+
//! ```
//!
//! Input is case-insensitive; articles, number and tense are dropped.

mod abox;
mod parser;
pub mod words;

use std::fmt;

use thiserror::Error;

use crate::dl::{ConceptName, RoleName};

pub use abox::build_abox;
pub use parser::{parse_controlled, parse_with};
pub use words::{Frame, Vocabulary, WordListError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verb {
    Copula,
    Lemma(ConceptName),
}

impl fmt::Display for Verb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verb::Copula => f.write_str("be"),
            Verb::Lemma(l) => write!(f, "{l}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArgStruct {
    pub head: ConceptName,
    pub adjectives: Vec<ConceptName>,
    /// `who VP` attached to this noun phrase; its subject is this argument.
    pub relative: Option<Box<SentenceStruct>>,
}

impl ArgStruct {
    pub fn new(head: ConceptName) -> Self {
        ArgStruct {
            head,
            adjectives: Vec::new(),
            relative: None,
        }
    }

    /// Head followed by adjectives, relative clause dropped.
    pub fn concepts(&self) -> Vec<ConceptName> {
        std::iter::once(self.head.clone())
            .chain(self.adjectives.iter().cloned())
            .collect()
    }
}

/// `X is the R of Y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub role: RoleName,
    pub target: ArgStruct,
}

/// A prepositional argument bound to a frame role.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Oblique {
    pub role: RoleName,
    pub arg: ArgStruct,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SentenceStruct {
    pub verb: Verb,
    pub negated: bool,
    pub modifiers: Vec<ConceptName>,
    pub subject: ArgStruct,
    pub object: Option<ArgStruct>,
    /// Present exactly for copula sentences.
    pub complement: Option<Vec<ConceptName>>,
    pub relation: Option<Relation>,
    pub obliques: Vec<Oblique>,
    pub frame: Option<Frame>,
}

impl SentenceStruct {
    pub fn is_copula(&self) -> bool {
        self.verb == Verb::Copula
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("word {position}: expected {expected}, found {found}")]
pub struct ParseError {
    /// Zero-based index into the tokenized sentence.
    pub position: usize,
    pub expected: String,
    pub found: String,
}
