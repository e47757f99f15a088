//! Ordered forests whose edges carry vertex-pair labels.
//!
//! Nodes live in an arena and are linked first-child / next-sibling, so
//! appending a right sibling that adopts all later siblings, or pushing a
//! node between a vertex and its children, are both constant time. The
//! edge into a node is stored on the node itself, so a non-root [`NodeId`]
//! also names an edge. Parent and left-sibling links are not maintained;
//! [`ForestIndex`] derives them in one pass when needed.

use std::fmt;

use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeId(pub usize);

/// A label `(first, end)` on one side of an edge. `first == None` is the
/// placeholder `(?, end)` used while inverting the bijection.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Label {
    pub first: Option<usize>,
    pub end: usize,
}

impl Label {
    pub fn new(first: usize, end: usize) -> Self {
        Label {
            first: Some(first),
            end,
        }
    }

    pub fn placeholder(end: usize) -> Self {
        Label { first: None, end }
    }

    pub fn pair(&self) -> Option<(usize, usize)> {
        self.first.map(|a| (a, self.end))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.first {
            Some(a) => write!(f, "({a},{})", self.end),
            None => write!(f, "(?,{})", self.end),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Node {
    pub first_child: Option<NodeId>,
    pub next_sibling: Option<NodeId>,
    /// Labels of the edge from the parent into this node.
    pub left: Option<Label>,
    pub right: Option<Label>,
    pub vertex: Option<usize>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ForestError {
    #[error("eddy undefined for node {0:?}: it lies on the leftmost branch of its tree")]
    EddyUndefined(NodeId),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LabeledPlaneForest {
    vertex_count: usize,
    nodes: Vec<Node>,
    roots: Vec<NodeId>,
}

impl LabeledPlaneForest {
    /// An empty forest destined to describe a graph on `vertex_count` vertices.
    pub fn new(vertex_count: usize) -> Self {
        LabeledPlaneForest {
            vertex_count,
            nodes: Vec::new(),
            roots: Vec::new(),
        }
    }

    pub fn with_capacity(vertex_count: usize, nodes: usize) -> Self {
        LabeledPlaneForest {
            vertex_count,
            nodes: Vec::with_capacity(nodes),
            roots: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.nodes.len() - self.roots.len()
    }

    pub fn roots(&self) -> &[NodeId] {
        &self.roots
    }

    pub fn roots_mut(&mut self) -> &mut Vec<NodeId> {
        &mut self.roots
    }

    pub fn node(&self, id: NodeId) -> &Node {
        &self.nodes[id.0]
    }

    pub fn node_mut(&mut self, id: NodeId) -> &mut Node {
        &mut self.nodes[id.0]
    }

    /// Allocates a detached node.
    pub fn add_node(&mut self, node: Node) -> NodeId {
        self.nodes.push(node);
        NodeId(self.nodes.len() - 1)
    }

    /// Allocates a detached node and registers it as a new tree root.
    pub fn add_root(&mut self, vertex: Option<usize>) -> NodeId {
        let id = self.add_node(Node {
            vertex,
            ..Node::default()
        });
        self.roots.push(id);
        id
    }

    /// Inserts `child` as the first child of `parent`.
    pub fn push_front_child(&mut self, parent: NodeId, child: NodeId) {
        let old = self.nodes[parent.0].first_child.replace(child);
        self.nodes[child.0].next_sibling = old;
    }

    /// Inserts `new` as the right sibling of `node`; every sibling that
    /// was right of `node` becomes a child of `new`, in order.
    pub fn insert_right_sibling_adopting(&mut self, node: NodeId, new: NodeId) {
        let adopted = self.nodes[node.0].next_sibling.replace(new);
        let n = &mut self.nodes[new.0];
        n.next_sibling = None;
        n.first_child = adopted;
    }

    /// Pushes `new` between `node` and its children: `new` becomes the
    /// only child of `node` and adopts the former children.
    pub fn insert_below_adopting(&mut self, node: NodeId, new: NodeId) {
        let adopted = self.nodes[node.0].first_child.replace(new);
        let n = &mut self.nodes[new.0];
        n.next_sibling = None;
        n.first_child = adopted;
    }

    pub fn children(&self, id: NodeId) -> Siblings<'_> {
        Siblings {
            forest: self,
            next: self.nodes[id.0].first_child,
        }
    }

    /// The root edge: the leftmost edge at the root.
    pub fn root_edge(&self, root: NodeId) -> Option<NodeId> {
        self.nodes[root.0].first_child
    }

    /// End label of the edge into `id` (second coordinate of its right label).
    pub fn end_label(&self, id: NodeId) -> Option<usize> {
        self.nodes[id.0].right.map(|l| l.end)
    }

    /// Preorder of the tree at `root`, always descending into the
    /// rightmost unvisited child first.
    pub fn rightmost_dfs(&self, root: NodeId) -> Vec<NodeId> {
        let mut order = Vec::new();
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            order.push(u);
            stack.extend(self.children(u));
        }
        order
    }

    /// Preorder of the tree at `root`, leftmost child first.
    pub fn leftmost_dfs(&self, root: NodeId) -> Vec<NodeId> {
        let mut order = Vec::new();
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            order.push(u);
            if u != root {
                if let Some(s) = self.nodes[u.0].next_sibling {
                    stack.push(s);
                }
            }
            if let Some(c) = self.nodes[u.0].first_child {
                stack.push(c);
            }
        }
        order
    }

    /// Nodes of the subtree at `id` (preorder, leftmost first).
    pub fn subtree(&self, id: NodeId) -> Vec<NodeId> {
        let mut out = Vec::new();
        let mut stack = vec![id];
        while let Some(u) = stack.pop() {
            out.push(u);
            let mut c = self.nodes[u.0].first_child;
            let start = stack.len();
            while let Some(x) = c {
                stack.push(x);
                c = self.nodes[x.0].next_sibling;
            }
            stack[start..].reverse();
        }
        out
    }

    pub fn index(&self) -> ForestIndex {
        ForestIndex::build(self)
    }

    /// Edge linking the immediate left sibling of the youngest ascendant
    /// of `v` (inclusive) that has a left sibling, to its parent.
    pub fn eddy(&self, index: &ForestIndex, v: NodeId) -> Result<NodeId, ForestError> {
        let mut a = v;
        loop {
            if let Some(s) = index.left_sibling[a.0] {
                return Ok(s);
            }
            match index.parent[a.0] {
                Some(p) => a = p,
                None => return Err(ForestError::EddyUndefined(v)),
            }
        }
    }

    /// Trees rendered as nested parenthesised strings, sorted, so that two
    /// forests differing only in tree order compare equal.
    pub fn canonical_trees(&self) -> Vec<String> {
        let mut trees: Vec<String> = self.roots.iter().map(|&r| self.render(r)).collect();
        trees.sort();
        trees
    }

    fn render(&self, id: NodeId) -> String {
        let mut s = String::new();
        self.render_into(id, &mut s);
        s
    }

    fn render_into(&self, id: NodeId, s: &mut String) {
        use std::fmt::Write;
        let n = &self.nodes[id.0];
        if let Some(l) = n.left {
            let _ = write!(s, "{l}");
        }
        s.push('|');
        if let Some(r) = n.right {
            let _ = write!(s, "{r}");
        }
        match n.vertex {
            Some(v) => {
                let _ = write!(s, "<{v}>");
            }
            None => s.push_str("<>"),
        }
        s.push('[');
        for c in self.children(id) {
            self.render_into(c, s);
        }
        s.push(']');
    }
}

pub struct Siblings<'a> {
    forest: &'a LabeledPlaneForest,
    next: Option<NodeId>,
}

impl Iterator for Siblings<'_> {
    type Item = NodeId;
    fn next(&mut self) -> Option<NodeId> {
        let cur = self.next?;
        self.next = self.forest.nodes[cur.0].next_sibling;
        Some(cur)
    }
}

/// Parent and immediate-left-sibling links of a forest snapshot.
#[derive(Clone, Debug)]
pub struct ForestIndex {
    pub parent: Vec<Option<NodeId>>,
    pub left_sibling: Vec<Option<NodeId>>,
    pub tree_of: Vec<usize>,
}

impl ForestIndex {
    pub fn build(forest: &LabeledPlaneForest) -> Self {
        let len = forest.nodes.len();
        let mut parent = vec![None; len];
        let mut left_sibling = vec![None; len];
        let mut tree_of = vec![usize::MAX; len];
        for (t, &root) in forest.roots.iter().enumerate() {
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                tree_of[u.0] = t;
                let mut prev = None;
                for c in forest.children(u) {
                    parent[c.0] = Some(u);
                    left_sibling[c.0] = prev;
                    prev = Some(c);
                    stack.push(c);
                }
            }
        }
        ForestIndex {
            parent,
            left_sibling,
            tree_of,
        }
    }
}
