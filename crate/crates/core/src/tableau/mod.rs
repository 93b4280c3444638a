//! ALCI consistency by completion-graph tableau.
//!
//! The T-Box is internalized and added to every node. Rules run in a fixed
//! order (conjunction, universal, disjunction, existential), nodes in
//! creation order and disjuncts left to right, so every run is
//! reproducible. Generated nodes are blocked by an earlier unblocked node
//! carrying the identical label; blocking is recomputed before each
//! existential step, so a node can become unblocked again when its label
//! grows through an inverse role.
//!
//! Every concept and edge records the disjunct choices it was derived from.
//! On a clash the search backtracks straight to the latest choice involved
//! in it, so independent disjunctions are not re-explored. This can be
//! switched off for plain chronological backtracking.

mod graph;
mod model;

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::dl::{
    internalize, nnf, Assertion, ConceptExpr, Gci, Individual, KnowledgeBase, RoleExpr,
};

use graph::complement;
pub use graph::{Blocking, CompletionGraph, CompletionNode, DepSet, NodeId, Origin};
pub use model::Model;

pub const DEFAULT_MAX_NODES: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReasonerError {
    #[error("completion graph exceeded {limit} nodes")]
    ResourceLimit { limit: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReasonerConfig {
    /// Hard cap on completion-graph nodes per run.
    pub max_nodes: usize,
    /// Record every rule application.
    pub explain: bool,
    /// Jump back to the latest choice a clash depends on; when off, every
    /// open alternative is tried in turn.
    pub backjump: bool,
}

impl Default for ReasonerConfig {
    fn default() -> Self {
        ReasonerConfig {
            max_nodes: DEFAULT_MAX_NODES,
            explain: false,
            backjump: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rule {
    Init,
    And,
    Or,
    Exists,
    Forall,
    Clash,
    Backtrack,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub rule: Rule,
    pub node: NodeId,
    pub concept: Option<ConceptExpr>,
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rule = match self.rule {
            Rule::Init => "init",
            Rule::And => "and",
            Rule::Or => "or",
            Rule::Exists => "exists",
            Rule::Forall => "forall",
            Rule::Clash => "clash",
            Rule::Backtrack => "backtrack",
        };
        write!(f, "{rule:<9} n{}", self.node)?;
        if let Some(c) = &self.concept {
            write!(f, "  {c}")?;
        }
        Ok(())
    }
}

/// Result of one tableau run: the complete clash-free graph if the input
/// is consistent, and the rule log when tracing is on.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub graph: Option<CompletionGraph>,
    pub trace: Vec<TraceStep>,
}

impl Outcome {
    pub fn is_consistent(&self) -> bool {
        self.graph.is_some()
    }

    pub fn model(&self) -> Option<Model> {
        self.graph.as_ref().map(Model::from_graph)
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Reasoner {
    pub config: ReasonerConfig,
}

struct Run<'a> {
    config: &'a ReasonerConfig,
    tbox_concept: ConceptExpr,
    trace: Vec<TraceStep>,
    branches_opened: usize,
}

struct Pending {
    node: NodeId,
    viable: Vec<ConceptExpr>,
    /// The disjunction's dependencies plus those of every literal that
    /// ruled out a member.
    deps: DepSet,
}

/// An open disjunction: the alternatives not tried yet, and the
/// dependencies collected from the ones that failed.
struct Branch {
    id: usize,
    rest: Vec<CompletionGraph>,
    failed: DepSet,
}

impl Run<'_> {
    fn log(&mut self, rule: Rule, node: NodeId, concept: Option<&ConceptExpr>) {
        if self.config.explain {
            self.trace.push(TraceStep {
                rule,
                node,
                concept: concept.cloned(),
            });
        }
    }

    fn add(&mut self, g: &mut CompletionGraph, rule: Rule, node: NodeId, c: ConceptExpr, deps: DepSet) -> bool {
        if g.nodes[node].label.contains(&c) {
            return false;
        }
        self.log(rule, node, Some(&c));
        let clashed = g.clash;
        g.add_concept(node, c, deps);
        if g.clash && !clashed {
            self.log(Rule::Clash, node, None);
        }
        true
    }

    fn init(&mut self, kb: &KnowledgeBase, extra: &[Assertion]) -> CompletionGraph {
        let mut g = CompletionGraph::default();
        let mut individuals = kb.individuals();
        individuals.extend(extra.iter().flat_map(|a| a.individuals().cloned()));
        for ind in &individuals {
            g.add_node(Origin::Named(ind.clone()), None);
        }
        if individuals.is_empty() {
            g.add_node(Origin::Generated, None);
        }
        let node_of = |ind: &Individual| individuals.iter().position(|i| i == ind).unwrap();
        for a in kb.abox.iter().chain(extra) {
            match a {
                Assertion::ConceptAssert { ind, concept } => {
                    self.add(&mut g, Rule::Init, node_of(ind), nnf(concept), DepSet::new());
                }
                Assertion::RoleAssert { src, tgt, role } => {
                    g.add_edge(node_of(src), node_of(tgt), role.clone(), DepSet::new());
                }
            }
        }
        if self.tbox_concept != ConceptExpr::Top {
            for n in 0..g.nodes.len() {
                self.add(&mut g, Rule::Init, n, self.tbox_concept.clone(), DepSet::new());
            }
        }
        g
    }

    fn apply_and(&mut self, g: &mut CompletionGraph) -> bool {
        let mut changed = false;
        for n in 0..g.nodes.len() {
            let conjuncts: Vec<(ConceptExpr, DepSet)> = g.nodes[n]
                .label
                .iter()
                .filter_map(|c| match c {
                    ConceptExpr::And(ms) => Some(ms.iter().map(|m| (m.clone(), g.deps_of(n, c)))),
                    _ => None,
                })
                .flatten()
                .collect();
            for (c, deps) in conjuncts {
                changed |= self.add(g, Rule::And, n, c, deps);
            }
        }
        changed
    }

    fn apply_forall(&mut self, g: &mut CompletionGraph) -> bool {
        let mut changed = false;
        for n in 0..g.nodes.len() {
            let universals: Vec<(RoleExpr, ConceptExpr, DepSet)> = g.nodes[n]
                .label
                .iter()
                .filter_map(|c| match c {
                    ConceptExpr::Forall(r, f) => Some((r.clone(), (**f).clone(), g.deps_of(n, c))),
                    _ => None,
                })
                .collect();
            for (role, filler, deps) in universals {
                let targets: Vec<(NodeId, DepSet)> = g
                    .neighbors_with_deps(n, &role)
                    .map(|(t, d)| (t, d.union(&deps).copied().collect()))
                    .collect();
                for (t, deps) in targets {
                    changed |= self.add(g, Rule::Forall, t, filler.clone(), deps);
                }
            }
        }
        changed
    }

    /// First disjunction with no member already in its node's label, with
    /// the members that do not clash outright.
    fn pending_or(&self, g: &CompletionGraph) -> Option<Pending> {
        for node in &g.nodes {
            for c in &node.label {
                let ConceptExpr::Or(ms) = c else { continue };
                if ms.iter().any(|m| node.label.contains(m)) {
                    continue;
                }
                let mut deps = g.deps_of(node.id, c);
                let mut viable = Vec::new();
                for m in ms {
                    match clash_partner(&node.label, m) {
                        Some(ConceptExpr::Bottom) => {}
                        Some(p) => deps.extend(g.deps_of(node.id, &p)),
                        None => viable.push(m.clone()),
                    }
                }
                return Some(Pending {
                    node: node.id,
                    viable,
                    deps,
                });
            }
        }
        None
    }

    fn apply_exists(&mut self, g: &mut CompletionGraph) -> Result<bool, ReasonerError> {
        let status = g.update_blocking();
        for (n, s) in status.iter().enumerate() {
            if *s != Blocking::Unblocked {
                continue;
            }
            let unmet = g.nodes[n].label.iter().find_map(|c| match c {
                ConceptExpr::Exists(r, f) => {
                    let met = g.neighbors(n, r).any(|m| g.nodes[m].label.contains(&**f));
                    (!met).then(|| (r.clone(), (**f).clone(), g.deps_of(n, c)))
                }
                _ => None,
            });
            let Some((role, filler, deps)) = unmet else { continue };
            if g.nodes.len() >= self.config.max_nodes {
                return Err(ReasonerError::ResourceLimit {
                    limit: self.config.max_nodes,
                });
            }
            let m = g.add_node(Origin::Generated, Some(n));
            match &role {
                RoleExpr::Atomic(r) => g.add_edge(n, m, r.clone(), deps.clone()),
                RoleExpr::Inverse(r) => g.add_edge(m, n, r.clone(), deps.clone()),
            }
            self.log(
                Rule::Exists,
                n,
                Some(&ConceptExpr::exists(role, filler.clone())),
            );
            self.add(g, Rule::Exists, m, filler, deps);
            if self.tbox_concept != ConceptExpr::Top {
                let t = self.tbox_concept.clone();
                self.add(g, Rule::Exists, m, t, DepSet::new());
            }
            return Ok(true);
        }
        Ok(false)
    }

    /// Expands `g` until it clashes (giving the clash dependencies) or is
    /// complete. A choice among several disjuncts pushes a branch.
    fn expand(
        &mut self,
        g: &mut CompletionGraph,
        branches: &mut Vec<Branch>,
    ) -> Result<Option<DepSet>, ReasonerError> {
        loop {
            if g.clash {
                return Ok(Some(std::mem::take(&mut g.clash_deps)));
            }
            if self.apply_and(g) || self.apply_forall(g) {
                continue;
            }
            if let Some(Pending { node, viable, deps }) = self.pending_or(g) {
                match viable.len() {
                    0 => {
                        g.clash = true;
                        g.clash_deps = deps;
                        self.log(Rule::Clash, node, None);
                    }
                    1 => {
                        let only = viable.into_iter().next().unwrap();
                        self.add(g, Rule::Or, node, only, deps);
                    }
                    _ => {
                        let id = self.branches_opened;
                        self.branches_opened += 1;
                        let mut deps = deps;
                        deps.insert(id);
                        let mut alternatives: Vec<CompletionGraph> = viable[1..]
                            .iter()
                            .map(|d| {
                                let mut alt = g.clone();
                                alt.add_concept(node, d.clone(), deps.clone());
                                alt
                            })
                            .collect();
                        alternatives.reverse();
                        self.add(g, Rule::Or, node, viable[0].clone(), deps);
                        branches.push(Branch {
                            id,
                            rest: alternatives,
                            failed: DepSet::new(),
                        });
                    }
                }
                continue;
            }
            if self.apply_exists(g)? {
                continue;
            }
            return Ok(None);
        }
    }

    /// Depth-first search over disjunct choices. After a clash the search
    /// jumps back to the latest choice the clash depends on; choices in
    /// between cannot avoid it and their other alternatives are skipped.
    fn search(&mut self, start: CompletionGraph) -> Result<Option<CompletionGraph>, ReasonerError> {
        let mut branches: Vec<Branch> = Vec::new();
        let mut g = start;
        loop {
            let Some(mut deps) = self.expand(&mut g, &mut branches)? else {
                g.update_blocking();
                return Ok(Some(g));
            };
            g = loop {
                let Some(b) = branches.last_mut() else {
                    return Ok(None);
                };
                if !deps.remove(&b.id) && self.config.backjump {
                    branches.pop();
                    continue;
                }
                b.failed.extend(deps);
                if let Some(next) = b.rest.pop() {
                    self.log(Rule::Backtrack, 0, None);
                    break next;
                }
                deps = std::mem::take(&mut b.failed);
                branches.pop();
            };
        }
    }
}

/// The label member `c` clashes with: its complement, or `Bottom` itself.
fn clash_partner(label: &BTreeSet<ConceptExpr>, c: &ConceptExpr) -> Option<ConceptExpr> {
    match c {
        ConceptExpr::Bottom => Some(ConceptExpr::Bottom),
        _ => complement(c).filter(|n| label.contains(n)),
    }
}

impl Reasoner {
    pub fn new(config: ReasonerConfig) -> Self {
        Reasoner { config }
    }

    /// Runs the tableau on `kb` extended with `extra` assertions.
    pub fn run(&self, kb: &KnowledgeBase, extra: &[Assertion]) -> Result<Outcome, ReasonerError> {
        let mut run = Run {
            config: &self.config,
            tbox_concept: internalize(&kb.tbox),
            trace: Vec::new(),
            branches_opened: 0,
        };
        let start = run.init(kb, extra);
        let graph = run.search(start)?;
        Ok(Outcome {
            graph,
            trace: run.trace,
        })
    }

    pub fn is_consistent(&self, kb: &KnowledgeBase) -> Result<bool, ReasonerError> {
        Ok(self.run(kb, &[])?.is_consistent())
    }

    /// A finite model of `kb`, read off a complete clash-free graph.
    pub fn model(&self, kb: &KnowledgeBase) -> Result<Option<Model>, ReasonerError> {
        Ok(self.run(kb, &[])?.model())
    }

    /// `kb |= a : c`, i.e. `kb` plus `a : !c` has no model.
    pub fn entails_instance(
        &self,
        kb: &KnowledgeBase,
        a: &Individual,
        c: &ConceptExpr,
    ) -> Result<bool, ReasonerError> {
        let refutation = Assertion::concept(a.clone(), nnf(&ConceptExpr::not(c.clone())));
        Ok(!self.run(kb, &[refutation])?.is_consistent())
    }

    /// `kb |= (a,b) : r`. Without role axioms no role atom between named
    /// individuals is entailed unless asserted, so this is a lookup of the
    /// normalized atom plus the inconsistent case.
    pub fn entails_relation(
        &self,
        kb: &KnowledgeBase,
        a: &Individual,
        b: &Individual,
        r: &RoleExpr,
    ) -> Result<bool, ReasonerError> {
        if relation_asserted(kb, a, b, r) {
            return Ok(true);
        }
        Ok(!self.is_consistent(kb)?)
    }

    /// `c` is subsumed by `d` under `tbox`.
    pub fn is_subsumed<'a>(
        &self,
        tbox: impl IntoIterator<Item = &'a Gci>,
        c: &ConceptExpr,
        d: &ConceptExpr,
    ) -> Result<bool, ReasonerError> {
        let kb = KnowledgeBase::from_parts(
            tbox.into_iter().cloned(),
            [Assertion::concept(
                "x",
                ConceptExpr::and([c.clone(), nnf(&ConceptExpr::not(d.clone()))]),
            )],
        );
        Ok(!self.is_consistent(&kb)?)
    }
}

pub(crate) fn relation_asserted(
    kb: &KnowledgeBase,
    a: &Individual,
    b: &Individual,
    r: &RoleExpr,
) -> bool {
    kb.abox
        .contains(&Assertion::role(a.clone(), b.clone(), r.clone()))
}

pub fn is_consistent(kb: &KnowledgeBase) -> Result<bool, ReasonerError> {
    Reasoner::default().is_consistent(kb)
}

pub fn entails_instance(
    kb: &KnowledgeBase,
    a: &Individual,
    c: &ConceptExpr,
) -> Result<bool, ReasonerError> {
    Reasoner::default().entails_instance(kb, a, c)
}

pub fn entails_relation(
    kb: &KnowledgeBase,
    a: &Individual,
    b: &Individual,
    r: &RoleExpr,
) -> Result<bool, ReasonerError> {
    Reasoner::default().entails_relation(kb, a, b, r)
}

pub fn is_subsumed<'a>(
    tbox: impl IntoIterator<Item = &'a Gci>,
    c: &ConceptExpr,
    d: &ConceptExpr,
) -> Result<bool, ReasonerError> {
    Reasoner::default().is_subsumed(tbox, c, d)
}
