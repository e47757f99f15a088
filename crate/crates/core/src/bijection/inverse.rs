//! Cayley tree → increasing 1,2-tree, reversing the three forward steps.
//! Every step is linear in the number of vertices.

use crate::trees::{Attachment, CayleyTree, IncTreeSeq, Label, LabeledPlaneForest, Node, NodeId};

use super::BijectionError;

const NONE: u32 = u32::MAX;

/// The cut forest of a Cayley tree in compact scratch form: vertex `v` is
/// scratch id `v`, duplicated leaves follow from `n + 1`.
struct CutForest {
    nodes: Vec<CutNode>,
    /// root scratch ids in increasing order of attachment label
    roots: Vec<u32>,
}

#[derive(Clone, Copy)]
struct CutNode {
    vertex: u32,
    first_child: u32,
    next_sibling: u32,
}

impl CutNode {
    fn new(vertex: u32) -> Self {
        CutNode {
            vertex,
            first_child: NONE,
            next_sibling: NONE,
        }
    }
}

impl CutForest {
    fn build(tree: &CayleyTree) -> Self {
        let n = tree.n();
        assert!(2 * n < NONE as usize, "tree too large");
        let mut nodes: Vec<CutNode> = Vec::with_capacity(2 * n);
        nodes.extend((0..=n as u32).map(CutNode::new));
        // (sort key, child, forest parent) for every non-root forest node
        let mut items: Vec<(u32, u32, u32)> = Vec::with_capacity(n);
        let mut tops: Vec<(u32, u32)> = Vec::new();
        for v in 2..=n {
            let p = tree.parent(v).expect("non-root vertex");
            let m = tree.subtree_min(v);
            if p < m {
                let dup = nodes.len() as u32;
                nodes.push(CutNode::new(p as u32));
                items.push((p as u32, dup, v as u32));
                tops.push((p as u32, v as u32));
            } else {
                items.push((m as u32, v as u32, p as u32));
            }
        }
        // counting sort by key, then prepend to each parent in reverse
        let items = bucket_sort(n, items, |it| it.0 as usize);
        for &(_, child, parent) in items.iter().rev() {
            let head = std::mem::replace(&mut nodes[parent as usize].first_child, child);
            nodes[child as usize].next_sibling = head;
        }
        let roots = bucket_sort(n, tops, |t| t.0 as usize)
            .into_iter()
            .map(|t| t.1)
            .collect();
        CutForest { nodes, roots }
    }

    fn node_count(&self) -> usize {
        self.nodes.len() - 2
    }

    /// Visits every node in leftmost preorder, tree by tree, passing
    /// `(vertex, left sibling, parent)`; the last two are preorder
    /// positions.
    fn preorder(&self, mut visit: impl FnMut(u32, Option<usize>, Option<usize>)) {
        let mut stack: Vec<(u32, u32, u32)> = Vec::new();
        let mut next = 0;
        for &root in &self.roots {
            stack.push((root, NONE, NONE));
            let root_pos = next;
            while let Some((s, left, parent)) = stack.pop() {
                let pos = next;
                next += 1;
                let node = self.nodes[s as usize];
                let some = |x: u32| (x != NONE).then_some(x as usize);
                visit(node.vertex, some(left), some(parent));
                if pos != root_pos && node.next_sibling != NONE {
                    stack.push((node.next_sibling, pos as u32, parent));
                }
                if node.first_child != NONE {
                    stack.push((node.first_child, NONE, pos as u32));
                }
            }
        }
    }
}

/// Reversed step three: cut every increasing edge (the upper endpoint is
/// duplicated as a leaf below the lower one), drop the lone vertex 1, and
/// order every child list by subtree minimum. Nodes are stored in
/// leftmost preorder.
pub fn tau_inv_step3(tree: &CayleyTree) -> LabeledPlaneForest {
    let cut = CutForest::build(tree);
    let mut forest = LabeledPlaneForest::with_capacity(tree.n(), cut.node_count());
    let mut roots = Vec::with_capacity(cut.roots.len());
    cut.preorder(|v, left, parent| {
        let id = forest.add_node(Node {
            vertex: Some(v as usize),
            ..Node::default()
        });
        match (left, parent) {
            (Some(l), _) => forest.node_mut(NodeId(l)).next_sibling = Some(id),
            (None, Some(p)) => forest.node_mut(NodeId(p)).first_child = Some(id),
            (None, None) => roots.push(id),
        }
    });
    *forest.roots_mut() = roots;
    forest
}

/// Stable counting sort by `key` (each in `0..=max`).
fn bucket_sort<T: Copy>(max: usize, items: Vec<T>, key: impl Fn(&T) -> usize) -> Vec<T> {
    let mut start = vec![0u32; max + 2];
    for it in &items {
        start[key(it) + 1] += 1;
    }
    for i in 1..start.len() {
        start[i] += start[i - 1];
    }
    let Some(&first) = items.first() else {
        return items;
    };
    let mut out = vec![first; items.len()];
    for it in items {
        let slot = &mut start[key(&it)];
        out[*slot as usize] = it;
        *slot += 1;
    }
    out
}

/// Reversed step two: placeholder labels `(?, label(v_k))` from a
/// rightmost-first search; the root edge, visited last, only gets a
/// right label.
pub fn tau_inv_step2(mut forest: LabeledPlaneForest) -> LabeledPlaneForest {
    let roots = forest.roots().to_vec();
    let mut stack = Vec::new();
    for root in roots {
        let root_edge = forest.root_edge(root);
        let mut prev = forest.node(root).vertex.expect("vertex-labeled forest");
        stack.clear();
        stack.extend(forest.children(root));
        while let Some(u) = stack.pop() {
            stack.extend(forest.children(u));
            let edge = forest.node_mut(u);
            edge.right = Some(Label::placeholder(prev));
            edge.left = (Some(u) != root_edge).then(|| Label::placeholder(prev));
            prev = edge.vertex.expect("vertex-labeled forest");
        }
    }
    forest
}

/// Reversed step one: resolve the placeholders, then read the
/// construction sequence off the labels.
///
/// For an edge `e` with end label `z`, the missing coordinates come from
/// the nearest label `(x, y)` with `y < z` found by walking up the left
/// sides of the leftmost branch above `e`, falling back to the right label
/// of `eddy(e)`. Edges sharing an eddy form one leftmost branch, which the
/// leftmost-first search visits contiguously, so a monotone stack per
/// branch answers all queries in linear time.
pub fn tau_inv_step1(mut forest: LabeledPlaneForest) -> Result<IncTreeSeq, BijectionError> {
    let n = forest.vertex_count();
    let roots = forest.roots().to_vec();
    let mut slots: Vec<Option<Attachment>> = vec![None; n + 1];
    let mut record = |v: usize, att: Attachment| -> Result<(), BijectionError> {
        match slots.get_mut(v) {
            Some(slot @ None) if v >= 2 => {
                *slot = Some(att);
                Ok(())
            }
            _ => Err(BijectionError::UnresolvedPlaceholder),
        }
    };
    // stack of (end label, resolved pair)
    let mut branch: Vec<(usize, (usize, usize))> = Vec::new();
    // (node, its immediate left sibling)
    let mut todo: Vec<(NodeId, Option<NodeId>)> = Vec::new();
    for root in roots {
        let re = forest
            .root_edge(root)
            .ok_or(BijectionError::UnresolvedPlaceholder)?;
        let leaf = forest
            .node(re)
            .vertex
            .ok_or(BijectionError::UnresolvedPlaceholder)?;
        let y = forest
            .node(re)
            .right
            .ok_or(BijectionError::UnresolvedPlaceholder)?
            .end;
        forest.node_mut(re).right = Some(Label::new(leaf, y));
        record(y, Attachment::Leaf(leaf))?;

        todo.clear();
        if let Some(s) = forest.node(re).next_sibling {
            todo.push((s, Some(re)));
        }
        while let Some((e, left_sib)) = todo.pop() {
            let z = forest
                .node(e)
                .right
                .ok_or(BijectionError::UnresolvedPlaceholder)?
                .end;
            if let Some(s) = left_sib {
                // a new leftmost branch starts here; its eddy is the edge into s
                let (x, y) = forest
                    .node(s)
                    .right
                    .and_then(|l| l.pair())
                    .ok_or(BijectionError::UnresolvedPlaceholder)?;
                branch.clear();
                branch.push((y, (x, y)));
            }
            while branch.last().is_some_and(|&(end, _)| end > z) {
                branch.pop();
            }
            let &(_, (x, y)) = branch.last().ok_or(BijectionError::UnresolvedPlaceholder)?;
            if y == z {
                return Err(BijectionError::UnresolvedPlaceholder);
            }
            let node = forest.node_mut(e);
            node.left = Some(Label::new(x, z));
            node.right = Some(Label::new(y, z));
            record(z, Attachment::Triangle(x, y))?;
            branch.push((z, (x, z)));

            let node = forest.node(e);
            if let Some(s) = node.next_sibling {
                todo.push((s, Some(e)));
            }
            if let Some(c) = node.first_child {
                todo.push((c, None));
            }
        }
    }
    let attachments = slots
        .into_iter()
        .skip(2)
        .collect::<Option<Vec<_>>>()
        .ok_or(BijectionError::UnresolvedPlaceholder)?;
    IncTreeSeq::new(attachments).map_err(BijectionError::InvalidResult)
}
/// The inverse bijection from Cayley trees to increasing 1,2-trees.
///
/// Runs the three reversed steps fused over flat preorder arrays. In
/// leftmost preorder the rightmost-first search that assigns end labels
/// is implicit: the node visited just before `u` is its parent when `u`
/// is a last child, and otherwise the leftmost leaf below its right
/// sibling.
pub fn tau_inverse(tree: &CayleyTree) -> Result<IncTreeSeq, BijectionError> {
    let n = tree.n();
    let cut = CutForest::build(tree);
    let len = cut.node_count();
    let mut vertex = Vec::with_capacity(len);
    let mut left = Vec::with_capacity(len);
    let mut parent = Vec::with_capacity(len);
    let mut next = vec![NONE; len];
    cut.preorder(|v, l, p| {
        if let Some(l) = l {
            next[l] = vertex.len() as u32;
        }
        vertex.push(v);
        left.push(l.map_or(NONE, |x| x as u32));
        parent.push(p.map_or(NONE, |x| x as u32));
    });
    drop(cut);

    let mut leftmost_leaf: Vec<u32> = (0..len as u32).collect();
    for i in (0..len.saturating_sub(1)).rev() {
        if parent[i + 1] == i as u32 {
            leftmost_leaf[i] = leftmost_leaf[i + 1];
        }
    }
    let end_label = |i: usize| match next[i] {
        NONE => vertex[parent[i] as usize],
        r => vertex[leftmost_leaf[r as usize] as usize],
    };

    let mut attachments = vec![Attachment::Leaf(0); n.saturating_sub(1)];
    let mut seen = vec![false; n + 1];
    let mut record = |v: u32, att: Attachment| -> Result<(), BijectionError> {
        let v = v as usize;
        if v < 2 || v > n || std::mem::replace(&mut seen[v], true) {
            return Err(BijectionError::UnresolvedPlaceholder);
        }
        attachments[v - 2] = att;
        Ok(())
    };
    // first coordinate of every resolved right label
    let mut right_first = vec![NONE; len];
    // stack of (end label, resolved pair)
    let mut branch: Vec<(u32, (u32, u32))> = Vec::new();
    for i in 0..len {
        if parent[i] == NONE {
            continue;
        }
        let z = end_label(i);
        if parent[i] as usize + 1 == i && parent[parent[i] as usize] == NONE {
            // the root edge
            right_first[i] = vertex[i];
            record(z, Attachment::Leaf(vertex[i] as usize))?;
            continue;
        }
        if left[i] != NONE {
            let s = left[i] as usize;
            let pair = (right_first[s], end_label(s));
            branch.clear();
            branch.push((pair.1, pair));
        }
        while branch.last().is_some_and(|&(end, _)| end > z) {
            branch.pop();
        }
        let &(_, (x, y)) = branch.last().ok_or(BijectionError::UnresolvedPlaceholder)?;
        if y == z {
            return Err(BijectionError::UnresolvedPlaceholder);
        }
        right_first[i] = y;
        record(z, Attachment::Triangle(x as usize, y as usize))?;
        branch.push((z, (x, z)));
    }

    if seen.iter().skip(2).any(|&s| !s) {
        return Err(BijectionError::UnresolvedPlaceholder);
    }
    Ok(IncTreeSeq::from_trusted(attachments))
}
