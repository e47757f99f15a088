//! Structural properties of the intermediate forests. Each checker returns
//! a description of the first violation found.

use crate::trees::{ForestIndex, Label, LabeledPlaneForest, NodeId};

pub type CheckResult = Result<(), String>;

/// `(left, right)` labels of one edge.
pub type EdgeLabels = (Option<Label>, Option<Label>);

fn end(forest: &LabeledPlaneForest, id: NodeId) -> Result<usize, String> {
    forest
        .end_label(id)
        .ok_or_else(|| format!("edge {id:?} has no right label"))
}

fn vertex(forest: &LabeledPlaneForest, id: NodeId) -> Result<usize, String> {
    forest
        .node(id)
        .vertex
        .ok_or_else(|| format!("node {id:?} has no vertex label"))
}

/// Left and right labels of an edge share their end label.
pub fn check_label_ends(forest: &LabeledPlaneForest) -> CheckResult {
    for &r in forest.roots() {
        for u in forest.subtree(r).into_iter().skip(1) {
            let n = forest.node(u);
            if let (Some(l), Some(rt)) = (n.left, n.right) {
                if l.end != rt.end {
                    return Err(format!("edge {u:?}: labels {l} and {rt} disagree on end"));
                }
            }
        }
    }
    Ok(())
}

/// The root edge of every tree leads to a leaf, has no left label, and its
/// right label starts with the smallest integer appearing in the tree.
pub fn check_root_edges(forest: &LabeledPlaneForest) -> CheckResult {
    for &r in forest.roots() {
        let re = forest
            .root_edge(r)
            .ok_or_else(|| format!("tree {r:?} has no edge"))?;
        let node = forest.node(re);
        if node.first_child.is_some() {
            return Err(format!("root edge {re:?} does not lead to a leaf"));
        }
        if node.left.is_some() {
            return Err(format!("root edge {re:?} carries a left label"));
        }
        let first = node
            .right
            .and_then(|l| l.first)
            .ok_or_else(|| format!("root edge {re:?} lacks a full right label"))?;
        let smallest = forest
            .subtree(r)
            .into_iter()
            .skip(1)
            .flat_map(|u| {
                let n = forest.node(u);
                [n.left, n.right]
            })
            .flatten()
            .flat_map(|l| l.first.into_iter().chain(std::iter::once(l.end)))
            .min()
            .unwrap_or(first);
        if first != smallest {
            return Err(format!(
                "root edge {re:?} starts with {first}, tree minimum is {smallest}"
            ));
        }
    }
    Ok(())
}

/// The end label of `eddy(e)` is below that of `e`, for every non-root edge.
pub fn check_eddy_below(forest: &LabeledPlaneForest) -> CheckResult {
    let index = forest.index();
    for &r in forest.roots() {
        let re = forest.root_edge(r);
        for u in forest.subtree(r).into_iter().skip(1) {
            if Some(u) == re {
                continue;
            }
            let eddy = forest.eddy(&index, u).map_err(|e| e.to_string())?;
            if end(forest, eddy)? >= end(forest, u)? {
                return Err(format!("eddy of {u:?} does not have a smaller end label"));
            }
        }
    }
    Ok(())
}

/// At every vertex the end labels of child edges increase left to right,
/// and every edge in a subtree right of child edge `uv_i` ends above
/// `end(uv_i)`.
pub fn check_sibling_end_order(forest: &LabeledPlaneForest) -> CheckResult {
    for &r in forest.roots() {
        for u in forest.subtree(r) {
            let kids: Vec<NodeId> = forest.children(u).collect();
            for (i, &vi) in kids.iter().enumerate() {
                let ei = end(forest, vi)?;
                for &vj in &kids[i + 1..] {
                    for w in forest.subtree(vj) {
                        if end(forest, w)? <= ei {
                            return Err(format!(
                                "edge {w:?} right of {vi:?} ends at or below {ei}"
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// Within every tree, each vertex label is larger than the minimum label
/// of each of its child subtrees.
pub fn check_all_twists(forest: &LabeledPlaneForest) -> CheckResult {
    let index = forest.index();
    for &r in forest.roots() {
        for u in forest.subtree(r).into_iter().skip(1) {
            let parent = index.parent[u.0].expect("non-root node has a parent");
            let pl = vertex(forest, parent)?;
            let m = subtree_min_label(forest, u)?;
            if m >= pl {
                return Err(format!("edge into {u:?} is increasing ({pl} < min {m})"));
            }
        }
    }
    Ok(())
}

fn subtree_min_label(forest: &LabeledPlaneForest, id: NodeId) -> Result<usize, String> {
    forest
        .subtree(id)
        .into_iter()
        .map(|u| vertex(forest, u))
        .try_fold(usize::MAX, |m, v| v.map(|v| m.min(v)))
}

/// The minimum vertex label of every subtree sits at its leftmost leaf.
pub fn check_min_at_leftmost_leaf(forest: &LabeledPlaneForest) -> CheckResult {
    for &r in forest.roots() {
        for u in forest.subtree(r) {
            let mut leaf = u;
            while let Some(c) = forest.node(leaf).first_child {
                leaf = c;
            }
            if vertex(forest, leaf)? != subtree_min_label(forest, u)? {
                return Err(format!("minimum of subtree {u:?} is not its leftmost leaf"));
            }
        }
    }
    Ok(())
}

/// Sibling subtrees appear in strictly increasing order of minimum label.
pub fn check_children_sorted_by_min(forest: &LabeledPlaneForest) -> CheckResult {
    for &r in forest.roots() {
        for u in forest.subtree(r) {
            let mins: Vec<usize> = forest
                .children(u)
                .map(|c| subtree_min_label(forest, c))
                .collect::<Result<_, _>>()?;
            if mins.windows(2).any(|w| w[0] >= w[1]) {
                return Err(format!("children of {u:?} not sorted by minimum: {mins:?}"));
            }
        }
    }
    Ok(())
}

/// Snapshot of `eddy(e)`'s labels for every non-root edge, used to check
/// that they never change once `e` exists.
pub fn eddy_labels(forest: &LabeledPlaneForest) -> Vec<(NodeId, Option<EdgeLabels>)> {
    let index = ForestIndex::build(forest);
    let mut out = Vec::new();
    for &r in forest.roots() {
        let re = forest.root_edge(r);
        for u in forest.subtree(r).into_iter().skip(1) {
            if Some(u) == re {
                continue;
            }
            let labels = forest.eddy(&index, u).ok().map(|e| {
                let n = forest.node(e);
                (n.left, n.right)
            });
            out.push((u, labels));
        }
    }
    out
}
