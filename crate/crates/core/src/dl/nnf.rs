use super::ConceptExpr;

/// Negation normal form: negation only in front of atomic concepts.
pub fn nnf(c: &ConceptExpr) -> ConceptExpr {
    push(c, false)
}

fn push(c: &ConceptExpr, negate: bool) -> ConceptExpr {
    use ConceptExpr::*;
    match (c, negate) {
        (Top, false) | (Bottom, true) => Top,
        (Top, true) | (Bottom, false) => Bottom,
        (Atomic(_), false) => c.clone(),
        (Atomic(_), true) => ConceptExpr::not(c.clone()),
        (Not(inner), _) => push(inner, !negate),
        (And(ms), false) => ConceptExpr::and(ms.iter().map(|m| push(m, false))),
        (And(ms), true) => ConceptExpr::or(ms.iter().map(|m| push(m, true))),
        (Or(ms), false) => ConceptExpr::or(ms.iter().map(|m| push(m, false))),
        (Or(ms), true) => ConceptExpr::and(ms.iter().map(|m| push(m, true))),
        (Exists(r, f), false) => ConceptExpr::exists(r.clone(), push(f, false)),
        (Exists(r, f), true) => ConceptExpr::forall(r.clone(), push(f, true)),
        (Forall(r, f), false) => ConceptExpr::forall(r.clone(), push(f, false)),
        (Forall(r, f), true) => ConceptExpr::exists(r.clone(), push(f, true)),
    }
}

pub fn is_nnf(c: &ConceptExpr) -> bool {
    use ConceptExpr::*;
    match c {
        Top | Bottom | Atomic(_) => true,
        Not(inner) => inner.is_atomic(),
        And(ms) | Or(ms) => ms.iter().all(is_nnf),
        Exists(_, f) | Forall(_, f) => is_nnf(f),
    }
}
