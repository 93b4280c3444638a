//! Text/hypothesis entailment checks and corpus evaluation.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::dl::{signature, Assertion, ConceptName, Gci, KnowledgeBase, RoleName};
use crate::exec::Exec;
use crate::lexicon::{relevant_tbox, LexRelation};
use crate::saturation::{saturate_with, SaturationError};
use crate::semgraph::{abox_to_graph, Candidates, Matcher, MatchWitness, SemGraph};
use crate::sentence::{build_abox, parse_with, ParseError, Vocabulary};
use crate::tableau::{Reasoner, ReasonerError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Text,
    Hypothesis,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Text => "text",
            Side::Hypothesis => "hypothesis",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RteError {
    #[error("{side} `{sentence}`: {source}")]
    Parse {
        side: Side,
        sentence: String,
        source: ParseError,
    },
    #[error("{side}: knowledge base is inconsistent")]
    InconsistentKb { side: Side },
    #[error(transparent)]
    Reasoner(#[from] ReasonerError),
}

#[derive(Debug, Clone, Default)]
pub struct PipelineConfig {
    pub vocabulary: Vocabulary,
    pub lexicon: Vec<LexRelation>,
    /// Extra axioms, used for a pair when they share a name with it.
    pub axioms: BTreeSet<Gci>,
    pub matcher: Matcher,
    pub exec: Exec,
}

impl PipelineConfig {
    pub fn new(lexicon: Vec<LexRelation>) -> Self {
        PipelineConfig {
            vocabulary: Vocabulary::standard(),
            lexicon,
            ..Default::default()
        }
    }

    fn reasoner(&self) -> &Reasoner {
        &self.matcher.reasoner
    }
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub entailed: bool,
    pub witness: Option<MatchWitness>,
    pub tbox: BTreeSet<Gci>,
    pub text_abox: BTreeSet<Assertion>,
    pub hyp_abox: BTreeSet<Assertion>,
    pub text_graph: SemGraph,
    pub hyp_graph: SemGraph,
    pub candidates: Candidates,
}

/// Axioms reachable from the vocabulary: an axiom is kept when it mentions
/// a kept name, and its names are then kept too.
pub fn relevant_axioms(
    axioms: &BTreeSet<Gci>,
    concepts: &BTreeSet<ConceptName>,
    roles: &BTreeSet<RoleName>,
) -> BTreeSet<Gci> {
    let mut concepts = concepts.clone();
    let mut roles = roles.clone();
    let mut kept = BTreeSet::new();
    loop {
        let before = kept.len();
        for g in axioms {
            if kept.contains(g) {
                continue;
            }
            let sig = signature(&KnowledgeBase::from_parts([g.clone()], []));
            let touches = sig.concepts.iter().any(|c| concepts.contains(c))
                || sig.roles.iter().any(|r| roles.contains(r));
            if touches {
                concepts.extend(sig.concepts);
                roles.extend(sig.roles);
                kept.insert(g.clone());
            }
        }
        if kept.len() == before {
            return kept;
        }
    }
}

fn parse_side(config: &PipelineConfig, side: Side, sentence: &str) -> Result<BTreeSet<Assertion>, RteError> {
    let s = parse_with(&config.vocabulary, sentence).map_err(|source| RteError::Parse {
        side,
        sentence: sentence.to_string(),
        source,
    })?;
    Ok(build_abox(&s))
}

fn saturate_side(
    config: &PipelineConfig,
    side: Side,
    abox: BTreeSet<Assertion>,
    tbox: &BTreeSet<Gci>,
) -> Result<BTreeSet<Assertion>, RteError> {
    let kb = KnowledgeBase {
        tbox: tbox.clone(),
        abox,
    };
    saturate_with(&kb, config.reasoner(), config.exec).map_err(|e| match e {
        SaturationError::InconsistentKb => RteError::InconsistentKb { side },
        SaturationError::Reasoner(r) => RteError::Reasoner(r),
    })
}

/// Does the text entail the hypothesis? Both sentences are turned into
/// A-Boxes, saturated under the pair's background knowledge, and the
/// hypothesis graph is matched into the text graph.
pub fn rte_check(text: &str, hypothesis: &str, config: &PipelineConfig) -> Result<CheckResult, RteError> {
    let t_abox = parse_side(config, Side::Text, text)?;
    let h_abox = parse_side(config, Side::Hypothesis, hypothesis)?;

    let t_sig = signature(&KnowledgeBase::from_parts([], t_abox.iter().cloned()));
    let h_sig = signature(&KnowledgeBase::from_parts([], h_abox.iter().cloned()));
    let mut tbox = relevant_tbox(&config.lexicon, &t_sig.concepts, &h_sig.concepts);
    if !config.axioms.is_empty() {
        let concepts = t_sig.concepts.union(&h_sig.concepts).cloned().collect();
        let roles = t_sig.roles.union(&h_sig.roles).cloned().collect();
        tbox.extend(relevant_axioms(&config.axioms, &concepts, &roles));
    }

    let text_abox = saturate_side(config, Side::Text, t_abox, &tbox)?;
    let hyp_abox = saturate_side(config, Side::Hypothesis, h_abox, &tbox)?;
    let text_graph = abox_to_graph(&text_abox);
    let hyp_graph = abox_to_graph(&hyp_abox);
    let tbox_vec: Vec<Gci> = tbox.iter().cloned().collect();
    let candidates = config.matcher.node_candidates(&text_graph, &hyp_graph, &tbox_vec)?;
    let witness = config.matcher.search(&text_graph, &hyp_graph, &candidates);
    Ok(CheckResult {
        entailed: witness.is_some(),
        witness,
        tbox,
        text_abox,
        hyp_abox,
        text_graph,
        hyp_graph,
        candidates,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusPair {
    pub id: String,
    pub text: String,
    pub hypothesis: String,
    pub gold: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("corpus line {line}: {message}")]
pub struct CorpusError {
    pub line: usize,
    pub message: String,
}

/// `id<TAB>text<TAB>hypothesis<TAB>true|false` per line.
pub fn parse_corpus(src: &str) -> Result<Vec<CorpusPair>, CorpusError> {
    let mut out = Vec::new();
    let mut ids = BTreeSet::new();
    for (i, raw) in src.lines().enumerate() {
        if raw.trim().is_empty() || raw.trim_start().starts_with('#') {
            continue;
        }
        let err = |message: String| CorpusError { line: i + 1, message };
        let fields: Vec<&str> = raw.split('\t').map(str::trim).collect();
        let [id, text, hypothesis, gold] = fields[..] else {
            return Err(err(format!("expected 4 tab-separated fields, found {}", fields.len())));
        };
        let gold = match gold {
            "true" => true,
            "false" => false,
            other => return Err(err(format!("gold label `{other}` is not true or false"))),
        };
        if id.is_empty() {
            return Err(err("empty id".into()));
        }
        if !ids.insert(id.to_string()) {
            return Err(err(format!("duplicate id `{id}`")));
        }
        out.push(CorpusPair {
            id: id.into(),
            text: text.into(),
            hypothesis: hypothesis.into(),
            gold,
        });
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Matrix {
    pub tp: usize,
    pub fp: usize,
    #[serde(rename = "fn")]
    pub fn_: usize,
    pub tn: usize,
}

impl Matrix {
    pub fn record(&mut self, predicted: bool, gold: bool) {
        match (predicted, gold) {
            (true, true) => self.tp += 1,
            (true, false) => self.fp += 1,
            (false, true) => self.fn_ += 1,
            (false, false) => self.tn += 1,
        }
    }

    pub fn total(&self) -> usize {
        self.tp + self.fp + self.fn_ + self.tn
    }

    /// Fraction of correct predictions; `None` without predictions.
    pub fn accuracy(&self) -> Option<f64> {
        let n = self.total();
        (n > 0).then(|| (self.tp + self.tn) as f64 / n as f64)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Skipped {
    pub id: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairResult {
    pub id: String,
    pub predicted: bool,
    pub gold: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct EvalReport {
    pub matrix: Matrix,
    pub skipped: Vec<Skipped>,
    pub pairs: Vec<PairResult>,
}

impl EvalReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_tsv(&self) -> String {
        let mut s = String::from("id\tpredicted\tgold\n");
        for p in &self.pairs {
            s.push_str(&format!("{}\t{}\t{}\n", p.id, p.predicted, p.gold));
        }
        for k in &self.skipped {
            s.push_str(&format!("{}\tskipped\t{}\n", k.id, k.reason));
        }
        let m = &self.matrix;
        s.push_str(&format!("# tp={} fp={} fn={} tn={} skipped={}\n", m.tp, m.fp, m.fn_, m.tn, self.skipped.len()));
        s
    }
}

/// Runs every pair; pairs that fail to parse or give an inconsistent
/// A-Box are reported as skipped. Resource limits abort the evaluation.
pub fn evaluate(corpus: &[CorpusPair], config: &PipelineConfig) -> Result<EvalReport, ReasonerError> {
    let outcomes = config
        .exec
        .map(corpus, |p| rte_check(&p.text, &p.hypothesis, config).map(|r| r.entailed));
    let mut report = EvalReport::default();
    for (pair, outcome) in corpus.iter().zip(outcomes) {
        match outcome {
            Ok(predicted) => {
                report.matrix.record(predicted, pair.gold);
                report.pairs.push(PairResult {
                    id: pair.id.clone(),
                    predicted,
                    gold: pair.gold,
                });
            }
            Err(RteError::Reasoner(e)) => return Err(e),
            Err(e) => report.skipped.push(Skipped {
                id: pair.id.clone(),
                reason: e.to_string(),
            }),
        }
    }
    Ok(report)
}
