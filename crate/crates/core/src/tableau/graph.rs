use std::collections::{BTreeSet, HashMap};

use crate::dl::{ConceptExpr, Individual, RoleExpr, RoleName};

pub type NodeId = usize;

/// Branch points a concept or edge depends on, by branch id.
pub type DepSet = BTreeSet<usize>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Origin {
    Named(Individual),
    /// Created by the existential rule, or the single root used when the
    /// A-Box names no individual.
    Generated,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Blocking {
    Unblocked,
    /// Same label as an earlier unblocked node.
    Direct(NodeId),
    /// Some ancestor is blocked.
    Indirect,
}

#[derive(Clone, Debug)]
pub struct CompletionNode {
    pub id: NodeId,
    /// NNF concepts.
    pub label: BTreeSet<ConceptExpr>,
    pub origin: Origin,
    /// Tree parent of a generated node; `None` for roots.
    pub parent: Option<NodeId>,
    pub blocked_by: Option<NodeId>,
}

#[derive(Clone, Debug, Default)]
pub struct CompletionGraph {
    pub nodes: Vec<CompletionNode>,
    pub edges: BTreeSet<(NodeId, NodeId, RoleName)>,
    pub clash: bool,
    /// Branch points the first clash depends on.
    pub clash_deps: DepSet,
    deps: Vec<HashMap<ConceptExpr, DepSet>>,
    out: Vec<Vec<(RoleName, NodeId, DepSet)>>,
    inc: Vec<Vec<(RoleName, NodeId, DepSet)>>,
}

impl CompletionGraph {
    pub fn add_node(&mut self, origin: Origin, parent: Option<NodeId>) -> NodeId {
        let id = self.nodes.len();
        self.nodes.push(CompletionNode {
            id,
            label: BTreeSet::new(),
            origin,
            parent,
            blocked_by: None,
        });
        self.deps.push(HashMap::new());
        self.out.push(Vec::new());
        self.inc.push(Vec::new());
        id
    }

    /// Adds `c` to the label of `node`; returns whether it was new. Sets the
    /// clash flag on `Bottom` or a complementary literal.
    pub fn add_concept(&mut self, node: NodeId, c: ConceptExpr, deps: DepSet) -> bool {
        if self.nodes[node].label.contains(&c) {
            return false;
        }
        if !self.clash {
            let mut clash_deps = match &c {
                ConceptExpr::Bottom => Some(DepSet::new()),
                _ => complement(&c).and_then(|n| self.deps[node].get(&n).cloned()),
            };
            if let Some(d) = clash_deps.as_mut() {
                d.extend(deps.iter().copied());
                self.clash = true;
                self.clash_deps = clash_deps.unwrap();
            }
        }
        self.nodes[node].label.insert(c.clone());
        self.deps[node].insert(c, deps);
        true
    }

    /// Dependencies of a concept in the label of `node`.
    pub fn deps_of(&self, node: NodeId, c: &ConceptExpr) -> DepSet {
        self.deps[node].get(c).cloned().unwrap_or_default()
    }

    pub fn add_edge(&mut self, src: NodeId, tgt: NodeId, role: RoleName, deps: DepSet) {
        if self.edges.insert((src, tgt, role.clone())) {
            self.out[src].push((role.clone(), tgt, deps.clone()));
            self.inc[tgt].push((role, src, deps));
        }
    }

    /// Nodes reachable from `node` along `role`, inverse roles following
    /// edges backwards.
    pub fn neighbors<'a>(&'a self, node: NodeId, role: &'a RoleExpr) -> impl Iterator<Item = NodeId> + 'a {
        let (list, name) = match role {
            RoleExpr::Atomic(r) => (&self.out[node], r),
            RoleExpr::Inverse(r) => (&self.inc[node], r),
        };
        list.iter().filter(move |(r, _, _)| r == name).map(|(_, n, _)| *n)
    }

    /// Like [`neighbors`](Self::neighbors), with the dependencies of each edge.
    pub fn neighbors_with_deps<'a>(
        &'a self,
        node: NodeId,
        role: &'a RoleExpr,
    ) -> impl Iterator<Item = (NodeId, &'a DepSet)> + 'a {
        let (list, name) = match role {
            RoleExpr::Atomic(r) => (&self.out[node], r),
            RoleExpr::Inverse(r) => (&self.inc[node], r),
        };
        list.iter().filter(move |(r, _, _)| r == name).map(|(_, n, d)| (*n, d))
    }

    pub fn named(&self, ind: &Individual) -> Option<NodeId> {
        self.nodes
            .iter()
            .position(|n| matches!(&n.origin, Origin::Named(i) if i == ind))
    }

    /// Recomputes blocking in creation order and records direct blockers
    /// in `blocked_by`.
    pub fn update_blocking(&mut self) -> Vec<Blocking> {
        let mut status = Vec::with_capacity(self.nodes.len());
        let mut first_with_label: HashMap<&BTreeSet<ConceptExpr>, NodeId> = HashMap::new();
        for node in &self.nodes {
            let s = match node.parent {
                None => Blocking::Unblocked,
                Some(p) if status[p] != Blocking::Unblocked => Blocking::Indirect,
                Some(_) => match first_with_label.get(&node.label) {
                    Some(&b) => Blocking::Direct(b),
                    None => Blocking::Unblocked,
                },
            };
            if s == Blocking::Unblocked {
                first_with_label.entry(&node.label).or_insert(node.id);
            }
            status.push(s);
        }
        for (node, s) in self.nodes.iter_mut().zip(&status) {
            node.blocked_by = match s {
                Blocking::Direct(b) => Some(*b),
                _ => None,
            };
        }
        status
    }
}

/// The literal that clashes with `c`, for literals.
pub fn complement(c: &ConceptExpr) -> Option<ConceptExpr> {
    match c {
        ConceptExpr::Atomic(_) => Some(ConceptExpr::not(c.clone())),
        ConceptExpr::Not(inner) if inner.is_atomic() => Some((**inner).clone()),
        _ => None,
    }
}
