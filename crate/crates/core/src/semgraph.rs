//! Semantic graphs of saturated A-Boxes and hypothesis-into-text matching.
//!
//! Matching looks for a total map `f` from hypothesis nodes to text nodes
//! such that each text label is subsumed by the label of the hypothesis
//! node it replaces, and every hypothesis arc `(n1, n2, R)` has a text arc
//! `(f(n1), f(n2), R)`. Nodes with exactly one candidate are fixed first;
//! the rest are resolved by depth-first backtracking in lexicographic
//! order, so the first witness found is deterministic. The map is a
//! homomorphism unless [`Matcher::injective`] is set.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::dl::{Assertion, ConceptExpr, ConceptName, Gci, Individual, RoleName};
use crate::tableau::{Reasoner, ReasonerError};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NodeLabel {
    pub atoms: BTreeSet<ConceptName>,
    pub complexes: BTreeSet<ConceptExpr>,
}

impl NodeLabel {
    /// Conjunction of every member; `Top` when empty.
    pub fn concept(&self) -> ConceptExpr {
        ConceptExpr::and(
            self.atoms
                .iter()
                .cloned()
                .map(ConceptExpr::Atomic)
                .chain(self.complexes.iter().cloned()),
        )
    }

    pub fn is_atomic_only(&self) -> bool {
        self.complexes.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty() && self.complexes.is_empty()
    }

    fn add(&mut self, c: &ConceptExpr) {
        match c {
            ConceptExpr::Top => {}
            ConceptExpr::Atomic(a) => {
                self.atoms.insert(a.clone());
            }
            ConceptExpr::And(ms) => ms.iter().for_each(|m| self.add(m)),
            other => {
                self.complexes.insert(other.clone());
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SemGraph {
    pub nodes: BTreeMap<Individual, NodeLabel>,
    pub edges: BTreeSet<(Individual, Individual, RoleName)>,
}

impl SemGraph {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn has_edge(&self, src: &Individual, tgt: &Individual, role: &RoleName) -> bool {
        // BTreeSet lookup needs an owned key.
        self.edges
            .contains(&(src.clone(), tgt.clone(), role.clone()))
    }

    pub fn add_node(&mut self, ind: Individual) -> &mut NodeLabel {
        self.nodes.entry(ind).or_default()
    }

    pub fn add_edge(&mut self, src: Individual, tgt: Individual, role: RoleName) {
        self.nodes.entry(src.clone()).or_default();
        self.nodes.entry(tgt.clone()).or_default();
        self.edges.insert((src, tgt, role));
    }
}

/// One node per individual, top-level conjunctions split into their
/// members, one edge per role assertion.
pub fn abox_to_graph<'a>(assertions: impl IntoIterator<Item = &'a Assertion>) -> SemGraph {
    let mut g = SemGraph::default();
    for a in assertions {
        match a {
            Assertion::ConceptAssert { ind, concept } => g.add_node(ind.clone()).add(concept),
            Assertion::RoleAssert { src, tgt, role } => {
                g.add_edge(src.clone(), tgt.clone(), role.clone())
            }
        }
    }
    g
}

/// Total map from hypothesis individuals to text individuals.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MatchWitness {
    pub mapping: BTreeMap<Individual, Individual>,
}

impl fmt::Display for MatchWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (h, t) in &self.mapping {
            writeln!(f, "{h} -> {t}")?;
        }
        Ok(())
    }
}

pub type Candidates = BTreeMap<Individual, Vec<Individual>>;

#[derive(Debug, Clone, Copy, Default)]
pub struct Matcher {
    pub reasoner: Reasoner,
    /// Require distinct hypothesis nodes to map to distinct text nodes.
    pub injective: bool,
}

impl Matcher {
    /// Does the text label `t` entail the hypothesis label `h` under `tbox`?
    pub fn label_entails(&self, tbox: &[Gci], t: &NodeLabel, h: &NodeLabel) -> Result<bool, ReasonerError> {
        if h.atoms.is_subset(&t.atoms) && h.complexes.is_subset(&t.complexes) {
            return Ok(true);
        }
        if tbox.is_empty() && h.is_atomic_only() && t.is_atomic_only() {
            return Ok(false);
        }
        self.reasoner.is_subsumed(tbox, &t.concept(), &h.concept())
    }

    pub fn node_candidates(&self, gt: &SemGraph, gh: &SemGraph, tbox: &[Gci]) -> Result<Candidates, ReasonerError> {
        let mut out = Candidates::new();
        for (h, hl) in &gh.nodes {
            let mut cands = Vec::new();
            for (t, tl) in &gt.nodes {
                if self.label_entails(tbox, tl, hl)? {
                    cands.push(t.clone());
                }
            }
            out.insert(h.clone(), cands);
        }
        Ok(out)
    }

    pub fn detect_subgraph(
        &self,
        gt: &SemGraph,
        gh: &SemGraph,
        tbox: &[Gci],
    ) -> Result<Option<MatchWitness>, ReasonerError> {
        let candidates = self.node_candidates(gt, gh, tbox)?;
        Ok(self.search(gt, gh, &candidates))
    }

    /// Backtracking search over precomputed candidates.
    pub fn search(&self, gt: &SemGraph, gh: &SemGraph, candidates: &Candidates) -> Option<MatchWitness> {
        if candidates.values().any(Vec::is_empty) {
            return None;
        }
        let (fixed, open): (Vec<_>, Vec<_>) =
            candidates.iter().partition(|(_, cands)| cands.len() == 1);
        let order: Vec<(&Individual, &Vec<Individual>)> = fixed.into_iter().chain(open).collect();

        let mut state = Search {
            gt,
            gh,
            injective: self.injective,
            order,
            mapping: BTreeMap::new(),
        };
        state.extend(0).then(|| MatchWitness {
            mapping: state
                .mapping
                .into_iter()
                .map(|(h, t)| (h.clone(), t.clone()))
                .collect(),
        })
    }
}

struct Search<'a> {
    gt: &'a SemGraph,
    gh: &'a SemGraph,
    injective: bool,
    order: Vec<(&'a Individual, &'a Vec<Individual>)>,
    mapping: BTreeMap<&'a Individual, &'a Individual>,
}

impl<'a> Search<'a> {
    fn extend(&mut self, depth: usize) -> bool {
        let Some(&(h, cands)) = self.order.get(depth) else {
            return true;
        };
        for t in cands {
            if self.injective && self.mapping.values().any(|u| *u == t) {
                continue;
            }
            self.mapping.insert(h, t);
            if self.arcs_hold(h) && self.extend(depth + 1) {
                return true;
            }
            self.mapping.remove(h);
        }
        false
    }

    /// Every hypothesis arc touching `h` whose other end is already mapped.
    fn arcs_hold(&self, h: &Individual) -> bool {
        self.gh
            .edges
            .iter()
            .filter(|(s, t, _)| s == h || t == h)
            .all(|(s, t, r)| match (self.mapping.get(s), self.mapping.get(t)) {
                (Some(fs), Some(ft)) => self.gt.has_edge(fs, ft, r),
                _ => true,
            })
    }
}

pub fn node_candidates(gt: &SemGraph, gh: &SemGraph, tbox: &[Gci]) -> Result<Candidates, ReasonerError> {
    Matcher::default().node_candidates(gt, gh, tbox)
}

pub fn detect_subgraph(
    gt: &SemGraph,
    gh: &SemGraph,
    tbox: &[Gci],
) -> Result<Option<MatchWitness>, ReasonerError> {
    Matcher::default().detect_subgraph(gt, gh, tbox)
}

/// `name : atom,atom | complex;complex` per node, then `src -role-> tgt`
/// per edge.
impl fmt::Display for SemGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (ind, label) in &self.nodes {
            let atoms: Vec<&str> = label.atoms.iter().map(ConceptName::as_str).collect();
            write!(f, "{ind} : {}", atoms.join(","))?;
            if !label.complexes.is_empty() {
                let complexes: Vec<String> = label.complexes.iter().map(ToString::to_string).collect();
                write!(f, " | {}", complexes.join(";"))?;
            }
            writeln!(f)?;
        }
        for (s, t, r) in &self.edges {
            writeln!(f, "{s} -{r}-> {t}")?;
        }
        Ok(())
    }
}
