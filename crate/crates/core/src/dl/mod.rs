//! ALCI syntax: concept and role expressions, individuals, axioms and
//! knowledge bases, plus the syntactic transformations built on them.

mod kb;
mod nnf;
pub mod text;

use std::fmt;
use std::sync::Arc;

pub use kb::{internalize, signature, Assertion, Gci, KnowledgeBase, Signature};
pub use nnf::{is_nnf, nnf};

macro_rules! name_type {
    ($(#[$meta:meta])* $name:ident, $normalize:path) => {
        $(#[$meta])*
        #[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub struct $name(Arc<str>);

        impl $name {
            /// Normalizes `raw` and wraps it. Panics on an empty token.
            pub fn new(raw: &str) -> Self {
                Self::try_new(raw).unwrap_or_else(|| panic!("empty {} token", stringify!($name)))
            }

            pub fn try_new(raw: &str) -> Option<Self> {
                let norm = $normalize(raw.trim());
                if norm.is_empty() {
                    None
                } else {
                    Some(Self(Arc::from(norm)))
                }
            }

            pub fn as_str(&self) -> &str {
                &self.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0)
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}", self.0)
            }
        }

        impl From<&str> for $name {
            fn from(raw: &str) -> Self {
                Self::new(raw)
            }
        }
    };
}

/// Upper-case with underscores: `pet shop` becomes `PET_SHOP`.
pub fn normalize_concept(raw: &str) -> String {
    let mut out = String::with_capacity(raw.len());
    for part in raw.split(|c: char| c.is_whitespace() || c == '-' || c == '_') {
        if part.is_empty() {
            continue;
        }
        if !out.is_empty() {
            out.push('_');
        }
        out.extend(part.chars().flat_map(char::to_uppercase));
    }
    out
}

/// First letter upper-cased, the rest kept: `father-of` becomes `Father-of`.
pub fn normalize_role(raw: &str) -> String {
    let joined = raw.split_whitespace().collect::<Vec<_>>().join("-");
    let mut chars = joined.chars();
    match chars.next() {
        Some(first) => first.to_uppercase().chain(chars).collect(),
        None => String::new(),
    }
}

pub fn normalize_individual(raw: &str) -> String {
    raw.split_whitespace()
        .collect::<Vec<_>>()
        .join("_")
        .to_lowercase()
}

name_type!(
    /// Atomic concept name, e.g. `CAT`.
    ConceptName,
    normalize_concept
);
name_type!(
    /// Atomic role name, e.g. `Agent`.
    RoleName,
    normalize_role
);
name_type!(
    /// Named domain element, e.g. `s1`.
    Individual,
    normalize_individual
);

/// An atomic role or the inverse of one.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum RoleExpr {
    Atomic(RoleName),
    Inverse(RoleName),
}

impl RoleExpr {
    pub fn atomic(name: impl Into<RoleName>) -> Self {
        RoleExpr::Atomic(name.into())
    }

    pub fn inverse_of(name: impl Into<RoleName>) -> Self {
        RoleExpr::Inverse(name.into())
    }

    /// `R` becomes `R^-` and `R^-` becomes `R`; never nests.
    pub fn inverse(&self) -> Self {
        match self {
            RoleExpr::Atomic(r) => RoleExpr::Inverse(r.clone()),
            RoleExpr::Inverse(r) => RoleExpr::Atomic(r.clone()),
        }
    }

    pub fn name(&self) -> &RoleName {
        match self {
            RoleExpr::Atomic(r) | RoleExpr::Inverse(r) => r,
        }
    }

    pub fn is_inverse(&self) -> bool {
        matches!(self, RoleExpr::Inverse(_))
    }
}

/// ALCI concept expression.
///
/// `And`/`Or` hold at least two members, never directly contain a node of
/// the same kind, and never repeat a member. Build them through
/// [`ConceptExpr::and`] and [`ConceptExpr::or`] to keep that shape.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ConceptExpr {
    Top,
    Bottom,
    Atomic(ConceptName),
    Not(Box<ConceptExpr>),
    And(Vec<ConceptExpr>),
    Or(Vec<ConceptExpr>),
    Exists(RoleExpr, Box<ConceptExpr>),
    Forall(RoleExpr, Box<ConceptExpr>),
}

impl ConceptExpr {
    pub fn atomic(name: impl Into<ConceptName>) -> Self {
        ConceptExpr::Atomic(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(inner: ConceptExpr) -> Self {
        ConceptExpr::Not(Box::new(inner))
    }

    pub fn exists(role: RoleExpr, filler: ConceptExpr) -> Self {
        ConceptExpr::Exists(role, Box::new(filler))
    }

    pub fn forall(role: RoleExpr, filler: ConceptExpr) -> Self {
        ConceptExpr::Forall(role, Box::new(filler))
    }

    /// Flattened, duplicate-free conjunction. No members gives `Top`, one
    /// member gives that member back.
    pub fn and<I: IntoIterator<Item = ConceptExpr>>(members: I) -> Self {
        let mut flat = Vec::new();
        for m in members {
            match m {
                ConceptExpr::And(inner) => flat.extend(inner),
                other => flat.push(other),
            }
        }
        match dedup(flat) {
            mut v if v.len() == 1 => v.pop().unwrap(),
            v if v.is_empty() => ConceptExpr::Top,
            v => ConceptExpr::And(v),
        }
    }

    /// Flattened, duplicate-free disjunction. No members gives `Bottom`.
    pub fn or<I: IntoIterator<Item = ConceptExpr>>(members: I) -> Self {
        let mut flat = Vec::new();
        for m in members {
            match m {
                ConceptExpr::Or(inner) => flat.extend(inner),
                other => flat.push(other),
            }
        }
        match dedup(flat) {
            mut v if v.len() == 1 => v.pop().unwrap(),
            v if v.is_empty() => ConceptExpr::Bottom,
            v => ConceptExpr::Or(v),
        }
    }

    pub fn is_atomic(&self) -> bool {
        matches!(self, ConceptExpr::Atomic(_))
    }

    /// `A` or `!A` for an atomic `A`.
    pub fn is_literal(&self) -> bool {
        match self {
            ConceptExpr::Atomic(_) => true,
            ConceptExpr::Not(inner) => inner.is_atomic(),
            _ => false,
        }
    }

    pub fn as_atomic(&self) -> Option<&ConceptName> {
        match self {
            ConceptExpr::Atomic(a) => Some(a),
            _ => None,
        }
    }

    /// True when no quantifier occurs anywhere inside.
    pub fn is_quantifier_free(&self) -> bool {
        match self {
            ConceptExpr::Top | ConceptExpr::Bottom | ConceptExpr::Atomic(_) => true,
            ConceptExpr::Not(c) => c.is_quantifier_free(),
            ConceptExpr::And(ms) | ConceptExpr::Or(ms) => ms.iter().all(Self::is_quantifier_free),
            ConceptExpr::Exists(..) | ConceptExpr::Forall(..) => false,
        }
    }

    /// Calls `f` on every atomic concept name, left to right.
    pub fn for_each_concept_name<'a>(&'a self, f: &mut impl FnMut(&'a ConceptName)) {
        match self {
            ConceptExpr::Top | ConceptExpr::Bottom => {}
            ConceptExpr::Atomic(a) => f(a),
            ConceptExpr::Not(c) => c.for_each_concept_name(f),
            ConceptExpr::And(ms) | ConceptExpr::Or(ms) => {
                ms.iter().for_each(|m| m.for_each_concept_name(f))
            }
            ConceptExpr::Exists(_, c) | ConceptExpr::Forall(_, c) => c.for_each_concept_name(f),
        }
    }

    pub fn for_each_role_name<'a>(&'a self, f: &mut impl FnMut(&'a RoleName)) {
        match self {
            ConceptExpr::Top | ConceptExpr::Bottom | ConceptExpr::Atomic(_) => {}
            ConceptExpr::Not(c) => c.for_each_role_name(f),
            ConceptExpr::And(ms) | ConceptExpr::Or(ms) => {
                ms.iter().for_each(|m| m.for_each_role_name(f))
            }
            ConceptExpr::Exists(r, c) | ConceptExpr::Forall(r, c) => {
                f(r.name());
                c.for_each_role_name(f)
            }
        }
    }
}

fn dedup(members: Vec<ConceptExpr>) -> Vec<ConceptExpr> {
    let mut out: Vec<ConceptExpr> = Vec::with_capacity(members.len());
    for m in members {
        if !out.contains(&m) {
            out.push(m);
        }
    }
    out
}

impl fmt::Display for RoleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::print_role(self))
    }
}

impl fmt::Display for ConceptExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::print_concept(self))
    }
}
