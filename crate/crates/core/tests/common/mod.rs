#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use rte_core::dl::{
    signature, Assertion, ConceptExpr, ConceptName, Gci, Individual, KnowledgeBase, RoleExpr,
    RoleName,
};
use rte_core::semgraph::{NodeLabel, SemGraph};
use rte_core::tableau::Model;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

// ---------------------------------------------------------------------------
// Model checking

pub fn role_pairs(m: &Model, r: &RoleExpr) -> Vec<(usize, usize)> {
    let Some(pairs) = m.roles.get(r.name()) else {
        return Vec::new();
    };
    if r.is_inverse() {
        pairs.iter().map(|&(s, t)| (t, s)).collect()
    } else {
        pairs.iter().copied().collect()
    }
}

pub fn holds(m: &Model, e: usize, c: &ConceptExpr) -> bool {
    match c {
        ConceptExpr::Top => true,
        ConceptExpr::Bottom => false,
        ConceptExpr::Atomic(a) => m.has_concept(e, a),
        ConceptExpr::Not(inner) => !holds(m, e, inner),
        ConceptExpr::And(ms) => ms.iter().all(|x| holds(m, e, x)),
        ConceptExpr::Or(ms) => ms.iter().any(|x| holds(m, e, x)),
        ConceptExpr::Exists(r, f) => role_pairs(m, r)
            .into_iter()
            .any(|(s, t)| s == e && holds(m, t, f)),
        ConceptExpr::Forall(r, f) => role_pairs(m, r)
            .into_iter()
            .all(|(s, t)| s != e || holds(m, t, f)),
    }
}

pub fn satisfies_gci(m: &Model, g: &Gci) -> bool {
    (0..m.domain_size).all(|e| !holds(m, e, &g.lhs) || holds(m, e, &g.rhs))
}

pub fn satisfies_assertion(m: &Model, a: &Assertion) -> bool {
    match a {
        Assertion::ConceptAssert { ind, concept } => match m.individuals.get(ind) {
            Some(&e) => holds(m, e, concept),
            None => false,
        },
        Assertion::RoleAssert { src, tgt, role } => {
            match (m.individuals.get(src), m.individuals.get(tgt)) {
                (Some(&s), Some(&t)) => m.roles.get(role).is_some_and(|p| p.contains(&(s, t))),
                _ => false,
            }
        }
    }
}

pub fn is_model(m: &Model, kb: &KnowledgeBase) -> bool {
    m.domain_size > 0
        && kb.tbox.iter().all(|g| satisfies_gci(m, g))
        && kb.abox.iter().all(|a| satisfies_assertion(m, a))
}

// ---------------------------------------------------------------------------
// Propositional oracle for quantifier-free knowledge bases

fn prop_eval(truth: &BTreeMap<ConceptName, bool>, c: &ConceptExpr) -> bool {
    match c {
        ConceptExpr::Top => true,
        ConceptExpr::Bottom => false,
        ConceptExpr::Atomic(a) => truth[a],
        ConceptExpr::Not(inner) => !prop_eval(truth, inner),
        ConceptExpr::And(ms) => ms.iter().all(|x| prop_eval(truth, x)),
        ConceptExpr::Or(ms) => ms.iter().any(|x| prop_eval(truth, x)),
        ConceptExpr::Exists(..) | ConceptExpr::Forall(..) => {
            panic!("propositional oracle given a quantified concept")
        }
    }
}

fn assignments(names: &[ConceptName]) -> impl Iterator<Item = BTreeMap<ConceptName, bool>> + '_ {
    (0u32..1 << names.len()).map(move |bits| {
        names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), bits >> i & 1 == 1))
            .collect()
    })
}

/// Without quantifiers every element is independent: the knowledge base is
/// consistent iff each individual (or one anonymous element when there are
/// none) has a truth assignment meeting its assertions and every GCI.
pub fn oracle_consistent(kb: &KnowledgeBase) -> bool {
    let names: Vec<ConceptName> = signature(kb).concepts.into_iter().collect();
    let gcis_hold = |t: &BTreeMap<ConceptName, bool>| {
        kb.tbox
            .iter()
            .all(|g| !prop_eval(t, &g.lhs) || prop_eval(t, &g.rhs))
    };
    let individuals = kb.individuals();
    if individuals.is_empty() {
        return assignments(&names).any(|t| gcis_hold(&t));
    }
    individuals.iter().all(|ind| {
        let own: Vec<&ConceptExpr> = kb.concepts_of(ind).collect();
        assignments(&names).any(|t| gcis_hold(&t) && own.iter().all(|c| prop_eval(&t, c)))
    })
}

pub fn oracle_entails(kb: &KnowledgeBase, ind: &Individual, c: &ConceptExpr) -> bool {
    let mut ext = kb.clone();
    ext.assert_concept(ind.clone(), ConceptExpr::not(c.clone()));
    !oracle_consistent(&ext)
}

// ---------------------------------------------------------------------------
// Bounded model enumeration

/// Every interpretation over `domain` elements in which the named
/// individuals are the first elements, restricted to the KB's signature.
/// Calls `visit` on each model of `kb`; stops early when it returns false.
pub fn for_each_model(kb: &KnowledgeBase, domain: usize, mut visit: impl FnMut(&Model) -> bool) {
    let sig = signature(kb);
    let individuals: Vec<Individual> = sig.individuals.iter().cloned().collect();
    assert!(individuals.len() <= domain);
    let concepts: Vec<ConceptName> = sig.concepts.iter().cloned().collect();
    let roles: Vec<RoleName> = sig.roles.iter().cloned().collect();
    let concept_bits = concepts.len() * domain;
    let role_bits = roles.len() * domain * domain;
    let total = concept_bits + role_bits;
    assert!(total <= 24, "bounded enumeration too large: {total} bits");
    for bits in 0u64..1 << total {
        let mut m = Model {
            domain_size: domain,
            individuals: individuals
                .iter()
                .enumerate()
                .map(|(i, ind)| (ind.clone(), i))
                .collect(),
            concepts: BTreeMap::new(),
            roles: BTreeMap::new(),
        };
        for (ci, c) in concepts.iter().enumerate() {
            let set: BTreeSet<usize> = (0..domain)
                .filter(|e| bits >> (ci * domain + e) & 1 == 1)
                .collect();
            m.concepts.insert(c.clone(), set);
        }
        for (ri, r) in roles.iter().enumerate() {
            let base = concept_bits + ri * domain * domain;
            let set: BTreeSet<(usize, usize)> = (0..domain)
                .flat_map(|s| (0..domain).map(move |t| (s, t)))
                .filter(|(s, t)| bits >> (base + s * domain + t) & 1 == 1)
                .collect();
            m.roles.insert(r.clone(), set);
        }
        if is_model(&m, kb) && !visit(&m) {
            return;
        }
    }
}

// ---------------------------------------------------------------------------
// Random knowledge bases

pub fn concept_pool(n: usize) -> Vec<ConceptName> {
    ["A", "B", "C", "D"][..n].iter().map(|s| ConceptName::new(s)).collect()
}

pub fn individual_pool(n: usize) -> Vec<Individual> {
    ["a", "b", "c", "d"][..n].iter().map(|s| Individual::new(s)).collect()
}

pub fn literal(rng: &mut ChaCha8Rng, pool: &[ConceptName]) -> ConceptExpr {
    let a = ConceptExpr::Atomic(pool.choose(rng).unwrap().clone());
    if rng.gen_bool(0.4) {
        ConceptExpr::not(a)
    } else {
        a
    }
}

/// Literal, or a conjunction/disjunction of two or three literals, sometimes
/// under a negation.
pub fn boolean_concept(rng: &mut ChaCha8Rng, pool: &[ConceptName]) -> ConceptExpr {
    match rng.gen_range(0..5) {
        0 | 1 => literal(rng, pool),
        2 => ConceptExpr::and((0..rng.gen_range(2..=3)).map(|_| literal(rng, pool))),
        3 => ConceptExpr::or((0..rng.gen_range(2..=3)).map(|_| literal(rng, pool))),
        _ => ConceptExpr::not(ConceptExpr::and((0..2).map(|_| literal(rng, pool)))),
    }
}

/// Quantifier-free KB: up to 4 individuals, 4 concept names, 4 GCIs over
/// literals.
pub fn random_boolean_kb(seed: u64) -> KnowledgeBase {
    let mut rng = rng(seed);
    let concepts = concept_pool(rng.gen_range(1..=4));
    let individuals = individual_pool(rng.gen_range(0..=4));
    let mut kb = KnowledgeBase::new();
    for _ in 0..rng.gen_range(0..=4) {
        let lhs = if rng.gen_bool(0.7) {
            literal(&mut rng, &concepts)
        } else {
            ConceptExpr::and([literal(&mut rng, &concepts), literal(&mut rng, &concepts)])
        };
        let rhs = if rng.gen_bool(0.7) {
            literal(&mut rng, &concepts)
        } else {
            ConceptExpr::or([literal(&mut rng, &concepts), literal(&mut rng, &concepts)])
        };
        kb.add_gci(lhs, rhs);
    }
    for ind in &individuals {
        for _ in 0..rng.gen_range(0..=2) {
            let c = boolean_concept(&mut rng, &concepts);
            kb.assert_concept(ind.clone(), c);
        }
    }
    if individuals.len() >= 2 {
        for _ in 0..rng.gen_range(0..=2) {
            let a = individuals.choose(&mut rng).unwrap().clone();
            let b = individuals.choose(&mut rng).unwrap().clone();
            kb.assert_role(a, b, RoleExpr::atomic("R"));
        }
    }
    kb
}

fn random_role(rng: &mut ChaCha8Rng) -> RoleExpr {
    if rng.gen_bool(0.3) {
        RoleExpr::inverse_of("R")
    } else {
        RoleExpr::atomic("R")
    }
}

/// Small ALCI KB over two concept names, one role and two individuals, small
/// enough for bounded model enumeration.
pub fn random_alci_kb(seed: u64) -> KnowledgeBase {
    let mut rng = rng(seed);
    let concepts = concept_pool(2);
    let individuals = individual_pool(2);
    let mut kb = KnowledgeBase::new();
    for _ in 0..rng.gen_range(1..=2) {
        let lhs = literal(&mut rng, &concepts);
        let filler = literal(&mut rng, &concepts);
        let r = random_role(&mut rng);
        let (lhs, rhs) = match rng.gen_range(0..4) {
            0 => (lhs, ConceptExpr::exists(r, filler)),
            1 => (lhs, ConceptExpr::forall(r, filler)),
            2 => (ConceptExpr::exists(r, lhs), filler),
            _ => (lhs, filler),
        };
        kb.add_gci(lhs, rhs);
    }
    for ind in &individuals {
        if rng.gen_bool(0.7) {
            let c = literal(&mut rng, &concepts);
            kb.assert_concept(ind.clone(), c);
        }
    }
    for _ in 0..rng.gen_range(0..=2) {
        let a = individuals.choose(&mut rng).unwrap().clone();
        let b = individuals.choose(&mut rng).unwrap().clone();
        kb.assert_role(a, b, RoleExpr::atomic("R"));
    }
    // Keep both individuals in the signature.
    kb.assert_concept(individuals[0].clone(), ConceptExpr::Top);
    kb.assert_concept(individuals[1].clone(), ConceptExpr::Top);
    kb
}

// ---------------------------------------------------------------------------
// Graph matching oracle

/// Atomic inclusions `sub => sup`, closed reflexively and transitively.
#[derive(Debug, Clone, Default)]
pub struct Hierarchy {
    pub up: BTreeMap<ConceptName, BTreeSet<ConceptName>>,
}

impl Hierarchy {
    pub fn from_pairs(pairs: &[(ConceptName, ConceptName)], names: &[ConceptName]) -> Self {
        let mut up: BTreeMap<ConceptName, BTreeSet<ConceptName>> = names
            .iter()
            .map(|n| (n.clone(), [n.clone()].into_iter().collect()))
            .collect();
        loop {
            let mut changed = false;
            for (sub, sup) in pairs {
                let inherited: Vec<ConceptName> = up[sup].iter().cloned().collect();
                let set = up.get_mut(sub).unwrap();
                for s in inherited {
                    changed |= set.insert(s);
                }
            }
            if !changed {
                return Hierarchy { up };
            }
        }
    }

    pub fn gcis(pairs: &[(ConceptName, ConceptName)]) -> Vec<Gci> {
        pairs
            .iter()
            .map(|(a, b)| Gci::new(ConceptExpr::Atomic(a.clone()), ConceptExpr::Atomic(b.clone())))
            .collect()
    }

    /// Every atom of `h` is implied by some atom of `t`.
    pub fn entails(&self, t: &NodeLabel, h: &NodeLabel) -> bool {
        h.atoms
            .iter()
            .all(|need| t.atoms.iter().any(|have| self.up[have].contains(need)))
    }
}

pub fn mapping_is_valid(
    gt: &SemGraph,
    gh: &SemGraph,
    hier: &Hierarchy,
    f: &BTreeMap<Individual, Individual>,
) -> bool {
    mapping_is_valid_by(gt, gh, &|t, h| hier.entails(t, h), f)
}

pub fn mapping_is_valid_by(
    gt: &SemGraph,
    gh: &SemGraph,
    compatible: &dyn Fn(&NodeLabel, &NodeLabel) -> bool,
    f: &BTreeMap<Individual, Individual>,
) -> bool {
    gh.nodes.keys().all(|h| f.contains_key(h))
        && f.iter().all(|(h, t)| {
            gh.nodes.contains_key(h)
                && gt.nodes.contains_key(t)
                && compatible(&gt.nodes[t], &gh.nodes[h])
        })
        && gh
            .edges
            .iter()
            .all(|(s, t, r)| gt.edges.contains(&(f[s].clone(), f[t].clone(), r.clone())))
}

pub fn exhaustive_match(
    gt: &SemGraph,
    gh: &SemGraph,
    hier: &Hierarchy,
) -> Option<BTreeMap<Individual, Individual>> {
    exhaustive_match_by(gt, gh, &|t, h| hier.entails(t, h))
}

/// Enumerates all total maps from hypothesis nodes to text nodes, in
/// odometer order, and returns the first valid one.
pub fn exhaustive_match_by(
    gt: &SemGraph,
    gh: &SemGraph,
    compatible: &dyn Fn(&NodeLabel, &NodeLabel) -> bool,
) -> Option<BTreeMap<Individual, Individual>> {
    let hs: Vec<&Individual> = gh.nodes.keys().collect();
    let ts: Vec<&Individual> = gt.nodes.keys().collect();
    if hs.is_empty() {
        return Some(BTreeMap::new());
    }
    if ts.is_empty() {
        return None;
    }
    let mut digits = vec![0usize; hs.len()];
    loop {
        let f: BTreeMap<Individual, Individual> = hs
            .iter()
            .zip(&digits)
            .map(|(h, &d)| ((*h).clone(), ts[d].clone()))
            .collect();
        if mapping_is_valid_by(gt, gh, compatible, &f) {
            return Some(f);
        }
        let mut i = 0;
        loop {
            if i == digits.len() {
                return None;
            }
            digits[i] += 1;
            if digits[i] < ts.len() {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

pub struct GraphCase {
    pub gt: SemGraph,
    pub gh: SemGraph,
    pub names: Vec<ConceptName>,
    pub inclusions: Vec<(ConceptName, ConceptName)>,
}

fn random_label(rng: &mut ChaCha8Rng, names: &[ConceptName]) -> NodeLabel {
    let k = rng.gen_range(0..=3.min(names.len()));
    NodeLabel {
        atoms: names.choose_multiple(rng, k).cloned().collect(),
        complexes: BTreeSet::new(),
    }
}

/// Text graph of up to 8 nodes and hypothesis graph of up to 6; about half
/// of the hypotheses are images of the text under a random map, with labels
/// generalised along the hierarchy and some arcs dropped, then perturbed.
pub fn random_graph_case(seed: u64) -> GraphCase {
    let mut rng = rng(seed);
    let names = concept_pool(4);
    let roles = [RoleName::new("R"), RoleName::new("S")];
    let mut inclusions = Vec::new();
    if rng.gen_bool(0.5) {
        for _ in 0..rng.gen_range(1..=2) {
            let a = names.choose(&mut rng).unwrap().clone();
            let b = names.choose(&mut rng).unwrap().clone();
            if a != b {
                inclusions.push((a, b));
            }
        }
    }
    let hier = Hierarchy::from_pairs(&inclusions, &names);

    let nt = rng.gen_range(1..=8);
    let mut gt = SemGraph::default();
    let tnodes: Vec<Individual> = (0..nt).map(|i| Individual::new(&format!("t{i}"))).collect();
    for t in &tnodes {
        let label = random_label(&mut rng, &names);
        *gt.add_node(t.clone()) = label;
    }
    for _ in 0..rng.gen_range(0..=nt + 2) {
        let s = tnodes.choose(&mut rng).unwrap().clone();
        let t = tnodes.choose(&mut rng).unwrap().clone();
        gt.add_edge(s, t, roles.choose(&mut rng).unwrap().clone());
    }

    let nh = rng.gen_range(0..=6);
    let hnodes: Vec<Individual> = (0..nh).map(|i| Individual::new(&format!("h{i}"))).collect();
    let mut gh = SemGraph::default();
    if rng.gen_bool(0.5) {
        let image: BTreeMap<&Individual, &Individual> = hnodes
            .iter()
            .map(|h| (h, tnodes.choose(&mut rng).unwrap()))
            .collect();
        for h in &hnodes {
            let tl = &gt.nodes[image[h]];
            let mut atoms = BTreeSet::new();
            for a in &tl.atoms {
                if rng.gen_bool(0.7) {
                    let ups: Vec<&ConceptName> = hier.up[a].iter().collect();
                    atoms.insert((*ups.choose(&mut rng).unwrap()).clone());
                }
            }
            gh.add_node(h.clone()).atoms = atoms;
        }
        for (s, t, r) in &gt.edges {
            for hs in hnodes.iter().filter(|h| image[h] == s) {
                for ht in hnodes.iter().filter(|h| image[h] == t) {
                    if rng.gen_bool(0.6) {
                        gh.add_edge(hs.clone(), ht.clone(), r.clone());
                    }
                }
            }
        }
        if nh > 0 && rng.gen_bool(0.3) {
            let h = hnodes.choose(&mut rng).unwrap().clone();
            let extra = names.choose(&mut rng).unwrap().clone();
            gh.nodes.get_mut(&h).unwrap().atoms.insert(extra);
        }
        if nh > 0 && rng.gen_bool(0.3) {
            let s = hnodes.choose(&mut rng).unwrap().clone();
            let t = hnodes.choose(&mut rng).unwrap().clone();
            gh.add_edge(s, t, roles.choose(&mut rng).unwrap().clone());
        }
    } else {
        for h in &hnodes {
            let label = random_label(&mut rng, &names);
            *gh.add_node(h.clone()) = label;
        }
        if nh > 0 {
            for _ in 0..rng.gen_range(0..=nh) {
                let s = hnodes.choose(&mut rng).unwrap().clone();
                let t = hnodes.choose(&mut rng).unwrap().clone();
                gh.add_edge(s, t, roles.choose(&mut rng).unwrap().clone());
            }
        }
    }
    GraphCase {
        gt,
        gh,
        names,
        inclusions,
    }
}

// ---------------------------------------------------------------------------
// Shared checks

use rte_core::saturation::{saturate, SaturationError};
use rte_core::semgraph::Matcher;
use rte_core::tableau::Reasoner;

/// Saturation of a quantifier-free KB against the truth-table oracle:
/// every added atom is entailed and every entailed atom is present.
pub fn check_boolean_saturation(kb: &KnowledgeBase) -> Result<(), String> {
    let sat = match saturate(kb) {
        Err(SaturationError::InconsistentKb) if !oracle_consistent(kb) => return Ok(()),
        Err(e) => return Err(format!("saturation failed: {e}")),
        Ok(_) if !oracle_consistent(kb) => return Err("inconsistent KB was saturated".into()),
        Ok(s) => s,
    };
    for a in &sat {
        match a {
            Assertion::ConceptAssert { ind, concept } if concept.is_atomic() => {
                if !oracle_entails(kb, ind, concept) {
                    return Err(format!("unsound: {a}"));
                }
            }
            Assertion::RoleAssert { .. } if !kb.abox.contains(a) => {
                return Err(format!("unsound role atom: {a}"));
            }
            _ if !kb.abox.contains(a) => return Err(format!("invented complex assertion: {a}")),
            _ => {}
        }
    }
    let sig = signature(kb);
    for ind in &sig.individuals {
        for c in &sig.concepts {
            let atom = ConceptExpr::Atomic(c.clone());
            if oracle_entails(kb, ind, &atom) && !sat.contains(&Assertion::concept(ind.clone(), atom)) {
                return Err(format!("incomplete: missing {ind} : {c}"));
            }
        }
    }
    if !kb.abox.iter().all(|a| a.is_atomic() || sat.contains(a)) {
        return Err("complex input assertion dropped".into());
    }
    Ok(())
}

/// Saturation of a small ALCI KB. Soundness: every added atom holds in
/// every model with at most three elements. Completeness: for every atom
/// left out, the tableau produces a countermodel that passes the
/// independent model checker.
pub fn check_alci_saturation(kb: &KnowledgeBase) -> Result<(), String> {
    let r = Reasoner::default();
    let sat = match saturate(kb) {
        Err(SaturationError::InconsistentKb) => {
            let mut any = false;
            for d in 2..=3 {
                for_each_model(kb, d, |_| {
                    any = true;
                    false
                });
            }
            return if any { Err("consistent KB rejected".into()) } else { Ok(()) };
        }
        Err(e) => return Err(format!("saturation failed: {e}")),
        Ok(s) => s,
    };
    let added: Vec<&Assertion> = sat
        .iter()
        .filter(|a| a.is_atomic() && !kb.abox.contains(a))
        .collect();
    let mut violation = None;
    for d in 2..=3 {
        for_each_model(kb, d, |m| {
            violation = added.iter().find(|a| !satisfies_assertion(m, a)).map(|a| a.to_string());
            violation.is_none()
        });
        if let Some(v) = violation {
            return Err(format!("unsound: {v} fails in a {d}-element model"));
        }
    }
    let sig = signature(kb);
    for ind in &sig.individuals {
        for c in &sig.concepts {
            let atom = ConceptExpr::Atomic(c.clone());
            if sat.contains(&Assertion::concept(ind.clone(), atom.clone())) {
                continue;
            }
            let refutation = Assertion::concept(ind.clone(), ConceptExpr::not(atom.clone()));
            let m = r
                .run(kb, std::slice::from_ref(&refutation))
                .map_err(|e| e.to_string())?
                .model()
                .ok_or_else(|| format!("incomplete: {ind} : {c} entailed but missing"))?;
            if !is_model(&m, kb) || !satisfies_assertion(&m, &refutation) {
                return Err(format!("countermodel for {ind} : {c} does not check out"));
            }
        }
    }
    Ok(())
}

/// Matcher against exhaustive enumeration on one random case. Returns
/// whether a match exists.
pub fn check_graph_case(case: &GraphCase) -> Result<bool, String> {
    let hier = Hierarchy::from_pairs(&case.inclusions, &case.names);
    let tbox = Hierarchy::gcis(&case.inclusions);
    let expected = exhaustive_match(&case.gt, &case.gh, &hier);
    let got = Matcher::default()
        .detect_subgraph(&case.gt, &case.gh, &tbox)
        .map_err(|e| e.to_string())?;
    match (&got, &expected) {
        (Some(w), Some(_)) => {
            if !mapping_is_valid(&case.gt, &case.gh, &hier, &w.mapping) {
                return Err(format!("witness does not validate: {w}"));
            }
        }
        (None, None) => {}
        (Some(w), None) => return Err(format!("spurious witness: {w}")),
        (None, Some(f)) => return Err(format!("missed mapping: {f:?}")),
    }
    Ok(expected.is_some())
}

use rte_core::dl::text::parse_kb;
use rte_core::lexicon::parse_lexicon;
use rte_core::pipeline::{CheckResult, PipelineConfig};

pub const CORPUS: &str = include_str!("../../data/corpus.tsv");
pub const EXPECTED_REPORT: &str = include_str!("../../data/corpus.expected.json");

/// The configuration the bundled corpus is evaluated with.
pub fn corpus_config() -> PipelineConfig {
    PipelineConfig {
        axioms: parse_kb(include_str!("../../data/axioms.kb")).unwrap().tbox,
        ..PipelineConfig::new(parse_lexicon(include_str!("../../data/lexicon.tsv")).unwrap())
    }
}

/// Re-decides a checked pair by enumerating every map between its two
/// saturated graphs, with label subsumption asked of the reasoner directly.
pub fn oracle_decides(r: &CheckResult) -> bool {
    let reasoner = Reasoner::default();
    let memo = std::cell::RefCell::new(BTreeMap::new());
    let compatible = |t: &NodeLabel, h: &NodeLabel| {
        let key = (t.concept(), h.concept());
        *memo.borrow_mut().entry(key.clone()).or_insert_with(|| {
            reasoner.is_subsumed(&r.tbox, &key.0, &key.1).unwrap()
        })
    };
    exhaustive_match_by(&r.text_graph, &r.hyp_graph, &compatible).is_some()
}
