use std::collections::BTreeSet;

use crate::dl::{Assertion, ConceptExpr, ConceptName, Individual, RoleExpr, RoleName};

use super::{ArgStruct, SentenceStruct};

pub const AGENT: &str = "Agent";
pub const PATIENT: &str = "Patient";

/// Event individuals are `e1, e2, ...`, participants `x1, x2, ...`, both
/// numbered in the order the arguments appear.
pub fn build_abox(s: &SentenceStruct) -> BTreeSet<Assertion> {
    let mut b = Builder::default();
    let subj = b.fresh_x();
    b.sentence(s, subj, true);
    b.out
}

#[derive(Default)]
struct Builder {
    events: usize,
    args: usize,
    out: BTreeSet<Assertion>,
}

fn conj(names: impl IntoIterator<Item = ConceptName>) -> ConceptExpr {
    ConceptExpr::and(names.into_iter().map(ConceptExpr::Atomic))
}

fn label(names: impl IntoIterator<Item = ConceptName>, negated: bool) -> ConceptExpr {
    let c = conj(names);
    if negated {
        ConceptExpr::not(c)
    } else {
        c
    }
}

impl Builder {
    fn fresh_x(&mut self) -> Individual {
        self.args += 1;
        Individual::new(&format!("x{}", self.args))
    }

    fn fresh_e(&mut self) -> Individual {
        self.events += 1;
        Individual::new(&format!("e{}", self.events))
    }

    fn edge(&mut self, src: &Individual, tgt: &Individual, role: RoleName) {
        self.out
            .insert(Assertion::role(src.clone(), tgt.clone(), RoleExpr::Atomic(role)));
    }

    /// Labels `ind` with the argument and expands its relative clause.
    fn argument(&mut self, ind: &Individual, arg: &ArgStruct, negated: bool) {
        self.out
            .insert(Assertion::concept(ind.clone(), label(arg.concepts(), negated)));
        if let Some(clause) = &arg.relative {
            self.sentence(clause, ind.clone(), false);
        }
    }

    /// `own_subject` is false for relative clauses, whose subject is
    /// already labeled by the enclosing noun phrase.
    fn sentence(&mut self, s: &SentenceStruct, subj: Individual, own_subject: bool) {
        if s.is_copula() {
            let complement: Vec<ConceptName> = s.complement.iter().flatten().cloned().collect();
            if own_subject {
                let names = s.subject.concepts().into_iter().chain(complement);
                self.out.insert(Assertion::concept(subj.clone(), conj(names)));
                if let Some(clause) = &s.subject.relative {
                    self.sentence(clause, subj.clone(), false);
                }
            } else if !complement.is_empty() {
                self.out.insert(Assertion::concept(subj.clone(), conj(complement)));
            }
            if let Some(rel) = &s.relation {
                let tgt = self.fresh_x();
                self.edge(&subj, &tgt, rel.role.clone());
                self.argument(&tgt, &rel.target, false);
            }
            return;
        }

        let e = self.fresh_e();
        let head = match (&s.frame, &s.verb) {
            (Some(f), _) => f.concept.clone(),
            (None, super::Verb::Lemma(l)) => l.clone(),
            (None, super::Verb::Copula) => unreachable!("copula handled above"),
        };
        let event = std::iter::once(head).chain(s.modifiers.iter().cloned());
        self.out.insert(Assertion::concept(e.clone(), label(event, s.negated)));

        let (subj_role, obj_role) = match &s.frame {
            Some(f) => (f.subject.clone(), f.object.clone()),
            None => (RoleName::new(AGENT), RoleName::new(PATIENT)),
        };
        self.edge(&e, &subj, subj_role);
        if own_subject {
            self.argument(&subj, &s.subject, false);
        }
        if let Some(obj) = &s.object {
            let x = self.fresh_x();
            self.edge(&e, &x, obj_role);
            self.argument(&x, obj, s.negated);
        }
        for ob in &s.obliques {
            let x = self.fresh_x();
            self.edge(&e, &x, ob.role.clone());
            self.argument(&x, &ob.arg, false);
        }
    }
}
