use std::collections::BTreeSet;
use std::fmt;

use super::{nnf::nnf, ConceptExpr, ConceptName, Individual, RoleExpr, RoleName};

/// General concept inclusion `lhs => rhs`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Gci {
    pub lhs: ConceptExpr,
    pub rhs: ConceptExpr,
}

impl Gci {
    pub fn new(lhs: ConceptExpr, rhs: ConceptExpr) -> Self {
        Gci { lhs, rhs }
    }

    /// `lhs == rhs` as the two inclusions it abbreviates.
    pub fn equivalence(lhs: ConceptExpr, rhs: ConceptExpr) -> [Gci; 2] {
        [Gci::new(lhs.clone(), rhs.clone()), Gci::new(rhs, lhs)]
    }
}

/// A-Box assertion. Role assertions always carry an atomic role; use
/// [`Assertion::role`] to have `(a,b) : R^-` stored as `(b,a) : R`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Assertion {
    ConceptAssert {
        ind: Individual,
        concept: ConceptExpr,
    },
    RoleAssert {
        src: Individual,
        tgt: Individual,
        role: RoleName,
    },
}

impl Assertion {
    pub fn concept(ind: impl Into<Individual>, concept: ConceptExpr) -> Self {
        Assertion::ConceptAssert {
            ind: ind.into(),
            concept,
        }
    }

    pub fn role(src: impl Into<Individual>, tgt: impl Into<Individual>, role: RoleExpr) -> Self {
        let (src, tgt) = (src.into(), tgt.into());
        match role {
            RoleExpr::Atomic(role) => Assertion::RoleAssert { src, tgt, role },
            RoleExpr::Inverse(role) => Assertion::RoleAssert {
                src: tgt,
                tgt: src,
                role,
            },
        }
    }

    pub fn individuals(&self) -> impl Iterator<Item = &Individual> {
        let (first, second) = match self {
            Assertion::ConceptAssert { ind, .. } => (ind, None),
            Assertion::RoleAssert { src, tgt, .. } => (src, Some(tgt)),
        };
        std::iter::once(first).chain(second)
    }

    /// `a : A` for an atomic `A`, or any role assertion.
    pub fn is_atomic(&self) -> bool {
        match self {
            Assertion::ConceptAssert { concept, .. } => concept.is_atomic(),
            Assertion::RoleAssert { .. } => true,
        }
    }
}

#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct KnowledgeBase {
    pub tbox: BTreeSet<Gci>,
    pub abox: BTreeSet<Assertion>,
}

impl KnowledgeBase {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_parts(
        tbox: impl IntoIterator<Item = Gci>,
        abox: impl IntoIterator<Item = Assertion>,
    ) -> Self {
        KnowledgeBase {
            tbox: tbox.into_iter().collect(),
            abox: abox.into_iter().collect(),
        }
    }

    pub fn add_gci(&mut self, lhs: ConceptExpr, rhs: ConceptExpr) -> &mut Self {
        self.tbox.insert(Gci::new(lhs, rhs));
        self
    }

    pub fn add_equivalence(&mut self, lhs: ConceptExpr, rhs: ConceptExpr) -> &mut Self {
        self.tbox.extend(Gci::equivalence(lhs, rhs));
        self
    }

    pub fn assert_concept(&mut self, ind: impl Into<Individual>, c: ConceptExpr) -> &mut Self {
        self.abox.insert(Assertion::concept(ind, c));
        self
    }

    pub fn assert_role(
        &mut self,
        src: impl Into<Individual>,
        tgt: impl Into<Individual>,
        role: RoleExpr,
    ) -> &mut Self {
        self.abox.insert(Assertion::role(src, tgt, role));
        self
    }

    pub fn individuals(&self) -> BTreeSet<Individual> {
        self.abox
            .iter()
            .flat_map(|a| a.individuals().cloned())
            .collect()
    }

    pub fn concepts_of<'a>(&'a self, ind: &'a Individual) -> impl Iterator<Item = &'a ConceptExpr> {
        self.abox.iter().filter_map(move |a| match a {
            Assertion::ConceptAssert { ind: i, concept } if i == ind => Some(concept),
            _ => None,
        })
    }
}

/// Atomic concept names, role names and individuals of a knowledge base,
/// each in lexicographic order.
#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct Signature {
    pub concepts: BTreeSet<ConceptName>,
    pub roles: BTreeSet<RoleName>,
    pub individuals: BTreeSet<Individual>,
}

pub fn signature(kb: &KnowledgeBase) -> Signature {
    let mut sig = Signature::default();
    let visit = |c: &ConceptExpr, sig: &mut Signature| {
        c.for_each_concept_name(&mut |n| {
            sig.concepts.insert(n.clone());
        });
        c.for_each_role_name(&mut |r| {
            sig.roles.insert(r.clone());
        });
    };
    for gci in &kb.tbox {
        visit(&gci.lhs, &mut sig);
        visit(&gci.rhs, &mut sig);
    }
    for a in &kb.abox {
        match a {
            Assertion::ConceptAssert { ind, concept } => {
                sig.individuals.insert(ind.clone());
                visit(concept, &mut sig);
            }
            Assertion::RoleAssert { src, tgt, role } => {
                sig.individuals.insert(src.clone());
                sig.individuals.insert(tgt.clone());
                sig.roles.insert(role.clone());
            }
        }
    }
    sig
}

/// Folds a T-Box into the single concept every domain element must satisfy:
/// the conjunction of `nnf(!lhs | rhs)` over all inclusions.
pub fn internalize<'a>(tbox: impl IntoIterator<Item = &'a Gci>) -> ConceptExpr {
    ConceptExpr::and(tbox.into_iter().map(|gci| {
        nnf(&ConceptExpr::or([
            ConceptExpr::not(gci.lhs.clone()),
            gci.rhs.clone(),
        ]))
    }))
}

impl fmt::Display for Gci {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::print_gci(self))
    }
}

impl fmt::Display for Assertion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::print_assertion(self))
    }
}

impl fmt::Display for KnowledgeBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::print_kb(self))
    }
}
