//! Word lists for the controlled grammar, plus a small lemmatizer.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::dl::{ConceptName, RoleName};

pub const DEFAULT_WORDS: &str = include_str!("../../data/words.txt");
pub const COMMERCE_FRAMES: &str = include_str!("../../data/commerce_frames.txt");

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("word list line {line}: {message}")]
pub struct WordListError {
    pub line: usize,
    pub message: String,
}

/// Event concept and participant roles shared by a family of verbs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frame {
    pub concept: ConceptName,
    pub subject: RoleName,
    pub object: RoleName,
    pub preps: BTreeMap<String, RoleName>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Vocabulary {
    pub det: BTreeSet<String>,
    pub prep: BTreeSet<String>,
    pub noun: BTreeSet<String>,
    pub propn: BTreeSet<String>,
    pub adj: BTreeSet<String>,
    pub adv: BTreeSet<String>,
    pub verb: BTreeSet<String>,
    pub relnoun: BTreeSet<String>,
    pub commerce: BTreeSet<String>,
    pub frames: BTreeMap<String, Frame>,
}

impl Vocabulary {
    /// The bundled word lists, without frames.
    pub fn standard() -> Self {
        Self::parse(DEFAULT_WORDS).expect("bundled word list is well formed")
    }

    /// The bundled word lists plus the commercial-transaction frames.
    pub fn with_commerce_frames() -> Self {
        let mut v = Self::standard();
        v.extend(Self::parse(COMMERCE_FRAMES).expect("bundled frames are well formed"));
        v
    }

    pub fn parse(src: &str) -> Result<Self, WordListError> {
        let mut v = Vocabulary::default();
        let mut section: Option<String> = None;
        for (i, raw) in src.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| WordListError { line: i + 1, message };
            if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
                section = Some(name.trim().to_string());
                continue;
            }
            let entry = line.split_whitespace().collect::<Vec<_>>().join(" ").to_lowercase();
            let set = match section.as_deref() {
                None => return Err(err("entry before any [section]".into())),
                Some("frame") => {
                    let (verb, frame) = parse_frame(line).map_err(err)?;
                    v.frames.insert(verb, frame);
                    continue;
                }
                Some("det") => &mut v.det,
                Some("prep") => &mut v.prep,
                Some("noun") => &mut v.noun,
                Some("propn") => &mut v.propn,
                Some("adj") => &mut v.adj,
                Some("adv") => &mut v.adv,
                Some("verb") => &mut v.verb,
                Some("relnoun") => &mut v.relnoun,
                Some("commerce") => &mut v.commerce,
                Some(other) => return Err(err(format!("unknown section [{other}]"))),
            };
            if entry.contains(' ') && section.as_deref() != Some("noun") {
                return Err(err(format!("`{entry}`: only nouns may span several words")));
            }
            set.insert(entry);
        }
        Ok(v)
    }

    pub fn extend(&mut self, other: Vocabulary) {
        self.det.extend(other.det);
        self.prep.extend(other.prep);
        self.noun.extend(other.noun);
        self.propn.extend(other.propn);
        self.adj.extend(other.adj);
        self.adv.extend(other.adv);
        self.verb.extend(other.verb);
        self.relnoun.extend(other.relnoun);
        self.commerce.extend(other.commerce);
        self.frames.extend(other.frames);
    }

    pub fn longest_noun(&self) -> usize {
        self.noun
            .iter()
            .map(|n| n.split(' ').count())
            .max()
            .unwrap_or(1)
    }
}

/// `verb CONCEPT subj=Role obj=Role prep=Role ...`
fn parse_frame(line: &str) -> Result<(String, Frame), String> {
    let mut parts = line.split_whitespace();
    let (Some(verb), Some(concept)) = (parts.next(), parts.next()) else {
        return Err("frame needs a verb and an event concept".into());
    };
    let mut subject = None;
    let mut object = None;
    let mut preps = BTreeMap::new();
    for slot in parts {
        let Some((key, role)) = slot.split_once('=') else {
            return Err(format!("`{slot}` is not slot=Role"));
        };
        let role = RoleName::try_new(role).ok_or_else(|| format!("empty role in `{slot}`"))?;
        match key {
            "subj" => subject = Some(role),
            "obj" => object = Some(role),
            prep => {
                preps.insert(prep.to_lowercase(), role);
            }
        }
    }
    let frame = Frame {
        concept: ConceptName::try_new(concept).ok_or("empty event concept")?,
        subject: subject.ok_or("frame without subj=")?,
        object: object.ok_or("frame without obj=")?,
        preps,
    };
    Ok((verb.to_lowercase(), frame))
}

const IRREGULAR: &[(&str, &str)] = &[
    ("ate", "eat"),
    ("bought", "buy"),
    ("came", "come"),
    ("caught", "catch"),
    ("children", "child"),
    ("gave", "give"),
    ("had", "have"),
    ("has", "have"),
    ("made", "make"),
    ("men", "man"),
    ("met", "meet"),
    ("mice", "mouse"),
    ("ran", "run"),
    ("saw", "see"),
    ("slept", "sleep"),
    ("sold", "sell"),
    ("spoke", "speak"),
    ("took", "take"),
    ("went", "go"),
    ("women", "woman"),
];

const SUFFIXES: &[(&str, &str)] = &[
    ("ies", "y"),
    ("ied", "y"),
    ("es", ""),
    ("s", ""),
    ("ed", ""),
    ("d", ""),
];

/// Candidate lemmas of an inflected word, most literal first.
pub fn lemma_candidates(word: &str) -> Vec<String> {
    let mut out = vec![word.to_string()];
    if let Some((_, lemma)) = IRREGULAR.iter().find(|(form, _)| *form == word) {
        out.push(lemma.to_string());
    }
    for (suffix, repl) in SUFFIXES {
        if let Some(stem) = word.strip_suffix(suffix) {
            if !stem.is_empty() {
                out.push(format!("{stem}{repl}"));
            }
        }
    }
    out
}

/// The first lemma of `word` found in `set`.
pub fn lemma_in(set: &BTreeSet<String>, word: &str) -> Option<String> {
    lemma_candidates(word).into_iter().find(|l| set.contains(l))
}
