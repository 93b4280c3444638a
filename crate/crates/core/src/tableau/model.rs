use std::collections::{BTreeMap, BTreeSet};

use super::graph::{Blocking, CompletionGraph, Origin};
use crate::dl::{ConceptName, Individual, RoleName};

/// Finite interpretation over elements `0..domain_size`.
///
/// Built from a complete clash-free completion graph: indirectly blocked
/// nodes are dropped and edges into a directly blocked node are redirected
/// to its blocker.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Model {
    pub domain_size: usize,
    pub individuals: BTreeMap<Individual, usize>,
    pub concepts: BTreeMap<ConceptName, BTreeSet<usize>>,
    pub roles: BTreeMap<RoleName, BTreeSet<(usize, usize)>>,
}

impl Model {
    pub fn from_graph(g: &CompletionGraph) -> Self {
        let mut g = g.clone();
        let status = g.update_blocking();
        let mut element = vec![None; g.nodes.len()];
        let mut domain_size = 0;
        for (n, s) in status.iter().enumerate() {
            if *s == Blocking::Unblocked {
                element[n] = Some(domain_size);
                domain_size += 1;
            }
        }
        for (n, s) in status.iter().enumerate() {
            if let Blocking::Direct(b) = s {
                element[n] = element[*b];
            }
        }

        let mut model = Model {
            domain_size,
            individuals: BTreeMap::new(),
            concepts: BTreeMap::new(),
            roles: BTreeMap::new(),
        };
        for (n, node) in g.nodes.iter().enumerate() {
            if status[n] != Blocking::Unblocked {
                continue;
            }
            let e = element[n].unwrap();
            if let Origin::Named(ind) = &node.origin {
                model.individuals.insert(ind.clone(), e);
            }
            for c in &node.label {
                if let Some(name) = c.as_atomic() {
                    model.concepts.entry(name.clone()).or_default().insert(e);
                }
            }
        }
        for (src, tgt, role) in &g.edges {
            if let (Some(s), Some(t)) = (element[*src], element[*tgt]) {
                // An edge between two blocked nodes has no place in the model.
                if status[*src] != Blocking::Unblocked && status[*tgt] != Blocking::Unblocked {
                    continue;
                }
                model.roles.entry(role.clone()).or_default().insert((s, t));
            }
        }
        model
    }

    pub fn has_concept(&self, e: usize, c: &ConceptName) -> bool {
        self.concepts.get(c).is_some_and(|s| s.contains(&e))
    }
}
