//! Increasing 1,2-tree → Cayley tree, in three steps through a labeled
//! plane forest.

use std::collections::HashMap;

use crate::trees::{Attachment, CayleyTree, IncTreeSeq, Label, LabeledPlaneForest, Node, NodeId};

use super::BijectionError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Replays the construction sequence one vertex at a time, growing the
/// step-one forest. Exposed so that callers can inspect the forest after
/// every rule application.
#[derive(Clone, Debug)]
pub struct ForestBuilder {
    forest: LabeledPlaneForest,
    /// Where each label currently sits; every pair is on exactly one side
    /// of one edge.
    labels: HashMap<(usize, usize), (NodeId, Side)>,
    next_vertex: usize,
}

impl ForestBuilder {
    pub fn new(n: usize) -> Self {
        ForestBuilder {
            forest: LabeledPlaneForest::with_capacity(n, 2 * n),
            labels: HashMap::with_capacity(2 * n),
            next_vertex: 2,
        }
    }

    pub fn forest(&self) -> &LabeledPlaneForest {
        &self.forest
    }

    /// Vertex that the next call to [`push`](Self::push) inserts.
    pub fn next_vertex(&self) -> usize {
        self.next_vertex
    }

    /// Edge (child node) added by the most recent push.
    pub fn last_edge(&self) -> Option<NodeId> {
        self.forest.node_count().checked_sub(1).map(NodeId)
    }

    pub fn push(&mut self, att: Attachment) -> Result<NodeId, BijectionError> {
        let v = self.next_vertex;
        self.next_vertex += 1;
        match att {
            Attachment::Leaf(x) => {
                let root = self.forest.add_root(None);
                let leaf = self.forest.add_node(Node {
                    right: Some(Label::new(x, v)),
                    ..Node::default()
                });
                self.forest.push_front_child(root, leaf);
                self.labels.insert((x, v), (leaf, Side::Right));
                Ok(leaf)
            }
            Attachment::Triangle(x, y) => {
                let &(e, side) = self
                    .labels
                    .get(&(x, y))
                    .ok_or(BijectionError::LabelNotFound(x, y))?;
                let new = self.forest.add_node(Node {
                    left: Some(Label::new(x, v)),
                    right: Some(Label::new(y, v)),
                    ..Node::default()
                });
                match side {
                    // split e: the new lower edge takes over everything below e
                    Side::Left => self.forest.insert_below_adopting(e, new),
                    Side::Right => self.forest.insert_right_sibling_adopting(e, new),
                }
                self.labels.insert((x, v), (new, Side::Left));
                self.labels.insert((y, v), (new, Side::Right));
                Ok(new)
            }
        }
    }

    /// Finishes step one: trees ordered by their minimum label, ties by
    /// creation order.
    pub fn finish(mut self) -> LabeledPlaneForest {
        let forest = &self.forest;
        let mut roots = forest.roots().to_vec();
        roots.sort_by_key(|&r| tree_minimum(forest, r));
        *self.forest.roots_mut() = roots;
        self.forest
    }
}

/// First coordinate of the root edge's right label.
fn tree_minimum(forest: &LabeledPlaneForest, root: NodeId) -> usize {
    forest
        .root_edge(root)
        .and_then(|e| forest.node(e).right)
        .and_then(|l| l.first)
        .unwrap_or(usize::MAX)
}

/// Step one: the plane forest whose edges are labeled by edges of the graph.
pub fn tau_step1(seq: &IncTreeSeq) -> Result<LabeledPlaneForest, BijectionError> {
    let mut builder = ForestBuilder::new(seq.n());
    for &att in seq.attachments() {
        builder.push(att)?;
    }
    Ok(builder.finish())
}

/// Step two: vertex labels from a rightmost-first depth-first search.
pub fn tau_step2(mut forest: LabeledPlaneForest) -> LabeledPlaneForest {
    let roots = forest.roots().to_vec();
    for root in roots {
        let order = forest.rightmost_dfs(root);
        if let Some(re) = forest.root_edge(root) {
            let first = forest.node(re).right.and_then(|l| l.first);
            forest.node_mut(re).vertex = first;
        }
        // e_k is the edge into v_{k+1}
        for k in 0..order.len().saturating_sub(1) {
            let end = forest.end_label(order[k + 1]);
            forest.node_mut(order[k]).vertex = end;
        }
    }
    forest
}

/// Step three: forget planarity and edge labels, merge equal vertex labels.
pub fn tau_step3(forest: &LabeledPlaneForest) -> Result<CayleyTree, BijectionError> {
    let n = forest.vertex_count();
    let mut parent = vec![0usize; n + 1];
    let mut assigned = vec![false; n + 1];
    let label = |id: NodeId| -> Result<usize, BijectionError> {
        match forest.node(id).vertex {
            Some(v) if (1..=n).contains(&v) => Ok(v),
            other => Err(BijectionError::MergeConflict(format!(
                "node {id:?} has vertex label {other:?}"
            ))),
        }
    };
    let mut set = |child: usize, par: usize| -> Result<(), BijectionError> {
        if child == 1 || assigned[child] || child == par {
            return Err(BijectionError::MergeConflict(format!(
                "vertex {child} would receive parent {par} twice or illegally"
            )));
        }
        assigned[child] = true;
        parent[child] = par;
        Ok(())
    };
    for &root in forest.roots() {
        let root_label = label(root)?;
        let re = forest
            .root_edge(root)
            .ok_or_else(|| BijectionError::MergeConflict("tree without edges".into()))?;
        // the root edge hangs the whole tree below its leaf's label
        set(root_label, label(re)?)?;
        for u in forest.rightmost_dfs(root) {
            let pl = label(u)?;
            for c in forest.children(u) {
                if c != re {
                    set(label(c)?, pl)?;
                }
            }
        }
    }
    if (2..=n).any(|v| !assigned[v]) {
        return Err(BijectionError::MergeConflict(
            "some vertex never received a parent".into(),
        ));
    }
    let mut parents = parent;
    parents.remove(0);
    CayleyTree::from_parents(&parents).map_err(|e| BijectionError::MergeConflict(e.to_string()))
}

/// The bijection from increasing 1,2-trees to Cayley trees.
pub fn tau(seq: &IncTreeSeq) -> Result<CayleyTree, BijectionError> {
    let forest = tau_step2(tau_step1(seq)?);
    tau_step3(&forest)
}
