use crate::dl::{normalize_concept, normalize_role, ConceptName, RoleName};

use super::words::{lemma_candidates, lemma_in, Vocabulary};
use super::{ArgStruct, Oblique, ParseError, Relation, SentenceStruct, Verb};

const COPULA: &[&str] = &["is", "are", "was", "were"];
const AUX: &[&str] = &["does", "did", "do"];

/// Parses with the bundled word lists.
pub fn parse_controlled(text: &str) -> Result<SentenceStruct, ParseError> {
    parse_with(&Vocabulary::standard(), text)
}

pub fn parse_with(vocab: &Vocabulary, text: &str) -> Result<SentenceStruct, ParseError> {
    let mut p = Parser {
        vocab,
        toks: tokenize(text),
        pos: 0,
        longest_noun: vocab.longest_noun(),
    };
    let subject = p.noun_phrase(true)?;
    let s = p.verb_phrase(subject)?;
    if p.pos < p.toks.len() {
        return Err(p.error("end of sentence"));
    }
    Ok(s)
}

fn tokenize(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    for raw in text.split_whitespace() {
        let word = raw
            .replace('\u{2019}', "'")
            .to_lowercase()
            .trim_matches(|c: char| !c.is_alphanumeric() && c != '\'')
            .to_string();
        if word.is_empty() {
            continue;
        }
        match word.strip_suffix("n't") {
            Some("do" | "does" | "did" | "is" | "are" | "was" | "were") => {
                out.push(word[..word.len() - 3].to_string());
                out.push("not".into());
            }
            Some("don") => out.extend(["do".into(), "not".into()]),
            _ => out.push(word),
        }
    }
    out
}

struct Parser<'a> {
    vocab: &'a Vocabulary,
    toks: Vec<String>,
    pos: usize,
    longest_noun: usize,
}

impl Parser<'_> {
    fn peek_at(&self, k: usize) -> Option<&str> {
        self.toks.get(self.pos + k).map(String::as_str)
    }

    fn peek(&self) -> Option<&str> {
        self.peek_at(0)
    }

    fn error(&self, expected: &str) -> ParseError {
        ParseError {
            position: self.pos,
            expected: expected.into(),
            found: match self.peek() {
                Some(w) => format!("`{w}`"),
                None => "end of sentence".into(),
            },
        }
    }

    fn is(&self, set: &std::collections::BTreeSet<String>) -> bool {
        self.peek().is_some_and(|w| set.contains(w))
    }

    fn is_number(&self) -> bool {
        self.peek()
            .and_then(|w| w.chars().next())
            .is_some_and(|c| c.is_ascii_digit())
    }

    /// Longest noun starting here: its lemma and its length in words.
    fn noun_at(&self, offset: usize) -> Option<(String, usize)> {
        let start = self.pos + offset;
        for k in (1..=self.longest_noun).rev() {
            let Some(words) = self.toks.get(start..start + k) else {
                continue;
            };
            let prefix = words[..k - 1].join(" ");
            for last in lemma_candidates(&words[k - 1]) {
                let candidate = if prefix.is_empty() {
                    last
                } else {
                    format!("{prefix} {last}")
                };
                if self.vocab.noun.contains(&candidate) {
                    return Some((candidate, k));
                }
            }
        }
        None
    }

    fn np_starts(&self) -> bool {
        self.is(&self.vocab.det)
            || self.is(&self.vocab.adj)
            || self.is(&self.vocab.propn)
            || self.is_number()
            || self.noun_at(0).is_some()
    }

    fn noun_phrase(&mut self, allow_relative: bool) -> Result<ArgStruct, ParseError> {
        let mut arg = if self.is_number() {
            let number = self.toks[self.pos].clone();
            self.pos += 1;
            // Numerals keep the surface form of their noun: `50 euros`.
            match self.noun_at(0) {
                Some((_, k)) => {
                    let surface = self.toks[self.pos..self.pos + k].join(" ");
                    self.pos += k;
                    ArgStruct::new(concept(&format!("{number} {surface}")))
                }
                None => ArgStruct::new(concept(&number)),
            }
        } else if self.is(&self.vocab.propn) {
            let name = concept(self.peek().unwrap());
            self.pos += 1;
            ArgStruct::new(name)
        } else {
            if self.is(&self.vocab.det) {
                self.pos += 1;
            }
            let adjectives = self.adjectives();
            let (noun, k) = self.noun_at(0).ok_or_else(|| self.error("noun"))?;
            self.pos += k;
            ArgStruct {
                head: concept(&noun),
                adjectives,
                relative: None,
            }
        };
        if allow_relative && self.peek() == Some("who") {
            self.pos += 1;
            let clause = self.verb_phrase(arg.clone())?;
            arg.relative = Some(Box::new(clause));
        }
        Ok(arg)
    }

    fn adjectives(&mut self) -> Vec<ConceptName> {
        let mut out = Vec::new();
        while self.is(&self.vocab.adj) {
            out.push(concept(self.peek().unwrap()));
            self.pos += 1;
        }
        out
    }

    fn verb_phrase(&mut self, subject: ArgStruct) -> Result<SentenceStruct, ParseError> {
        let mut s = SentenceStruct {
            verb: Verb::Copula,
            negated: false,
            modifiers: Vec::new(),
            subject,
            object: None,
            complement: None,
            relation: None,
            obliques: Vec::new(),
            frame: None,
        };
        let Some(word) = self.peek() else {
            return Err(self.error("verb"));
        };
        if COPULA.contains(&word) {
            self.pos += 1;
            self.copula_tail(&mut s)?;
            return Ok(s);
        }
        if AUX.contains(&word) && self.peek_at(1) == Some("not") {
            s.negated = true;
            self.pos += 2;
        }
        let lemma = self
            .peek()
            .and_then(|w| lemma_in(&self.vocab.verb, w))
            .ok_or_else(|| self.error("verb"))?;
        self.pos += 1;
        s.frame = self.vocab.frames.get(&lemma).cloned();
        s.verb = Verb::Lemma(concept(&lemma));
        let commerce = self.vocab.commerce.contains(&lemma);

        let mut seen_pp = false;
        loop {
            if self.is(&self.vocab.adv) {
                s.modifiers.push(concept(self.peek().unwrap()));
                self.pos += 1;
            } else if self.is(&self.vocab.prep) {
                let prep = self.peek().unwrap().to_string();
                self.pos += 1;
                seen_pp = true;
                let first = self.noun_phrase(false)?;
                attach(&mut s, &prep, first, commerce);
                while self.np_starts() {
                    let np = self.noun_phrase(false)?;
                    attach(&mut s, &prep, np, commerce);
                }
            } else if s.object.is_none() && !seen_pp && self.np_starts() {
                s.object = Some(self.noun_phrase(true)?);
            } else {
                break;
            }
        }
        Ok(s)
    }

    fn copula_tail(&mut self, s: &mut SentenceStruct) -> Result<(), ParseError> {
        let had_det = self.is(&self.vocab.det);
        if had_det {
            self.pos += 1;
            let relational = self.is(&self.vocab.relnoun) && self.peek_at(1) == Some("of");
            if relational {
                let role = format!("{}-of", self.peek().unwrap());
                self.pos += 2;
                let target = self.noun_phrase(true)?;
                s.complement = Some(Vec::new());
                s.relation = Some(Relation {
                    role: RoleName::new(&normalize_role(&role)),
                    target,
                });
                return Ok(());
            }
        }
        let mut complement = self.adjectives();
        if let Some((noun, k)) = self.noun_at(0) {
            self.pos += k;
            complement.push(concept(&noun));
        } else if had_det || complement.is_empty() {
            return Err(self.error(if had_det { "noun" } else { "adjective or noun phrase" }));
        }
        s.complement = Some(complement);
        Ok(())
    }
}

/// Frame roles first, then the commerce `for` object, otherwise the noun
/// phrase becomes a modifier of the event.
fn attach(s: &mut SentenceStruct, prep: &str, np: ArgStruct, commerce: bool) {
    if let Some(role) = s.frame.as_ref().and_then(|f| f.preps.get(prep)) {
        s.obliques.push(Oblique {
            role: role.clone(),
            arg: np,
        });
    } else if prep == "for" && commerce && s.object.is_none() {
        s.object = Some(np);
    } else {
        s.modifiers.extend(np.concepts());
    }
}

fn concept(word: &str) -> ConceptName {
    ConceptName::new(&normalize_concept(word))
}
