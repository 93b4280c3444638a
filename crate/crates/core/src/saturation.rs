//! A-Box saturation: every entailed atomic concept assertion and role
//! assertion over the knowledge base's own signature.
//!
//! The grid of individuals x concept names (and pairs x role names) is
//! swept cell by cell, one tableau query per cell. Existential successors
//! are not materialized. Non-atomic assertions of the input are kept in
//! the result so that complex labels survive into the semantic graph.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::dl::{signature, Assertion, ConceptExpr, ConceptName, Individual, KnowledgeBase, RoleExpr, RoleName};
use crate::exec::Exec;
use crate::tableau::{relation_asserted, Reasoner, ReasonerError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SaturationError {
    #[error("knowledge base is inconsistent; every assertion is entailed")]
    InconsistentKb,
    #[error(transparent)]
    Reasoner(#[from] ReasonerError),
}

pub fn saturate(kb: &KnowledgeBase) -> Result<BTreeSet<Assertion>, SaturationError> {
    saturate_with(kb, &Reasoner::default(), Exec::default())
}

pub fn saturate_with(
    kb: &KnowledgeBase,
    reasoner: &Reasoner,
    exec: Exec,
) -> Result<BTreeSet<Assertion>, SaturationError> {
    if !reasoner.is_consistent(kb)? {
        return Err(SaturationError::InconsistentKb);
    }
    let sig = signature(kb);

    let concept_cells: Vec<(&Individual, &ConceptName)> = sig
        .individuals
        .iter()
        .flat_map(|i| sig.concepts.iter().map(move |c| (i, c)))
        .collect();
    let found = exec.map(&concept_cells, |&(ind, name)| {
        let assertion = Assertion::concept(ind.clone(), ConceptExpr::Atomic(name.clone()));
        if kb.abox.contains(&assertion) {
            return Ok(Some(assertion));
        }
        let entailed = reasoner.entails_instance(kb, ind, &ConceptExpr::Atomic(name.clone()))?;
        Ok(entailed.then_some(assertion))
    });

    let mut role_cells: Vec<(&Individual, &Individual, &RoleName)> = Vec::new();
    for a in &sig.individuals {
        for b in &sig.individuals {
            role_cells.extend(sig.roles.iter().map(|r| (a, b, r)));
        }
    }
    // The knowledge base is consistent, so a role atom is entailed exactly
    // when it is asserted.
    let roles = exec.map(&role_cells, |&(a, b, r)| {
        let role = RoleExpr::Atomic(r.clone());
        relation_asserted(kb, a, b, &role).then(|| Assertion::role(a.clone(), b.clone(), role))
    });

    let mut out: BTreeSet<Assertion> = kb.abox.iter().filter(|a| !a.is_atomic()).cloned().collect();
    for cell in found {
        out.extend(cell.map_err(SaturationError::Reasoner)?);
    }
    out.extend(roles.into_iter().flatten());
    Ok(out)
}

/// Saturates and returns only the assertions that were not in the input.
pub fn added_assertions(kb: &KnowledgeBase) -> Result<BTreeSet<Assertion>, SaturationError> {
    Ok(saturate(kb)?
        .into_iter()
        .filter(|a| !kb.abox.contains(a))
        .collect())
}
