//! Cayley trees rooted at vertex 1, with memoized subtree minima.

use std::fmt;

use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeClass {
    Increasing,
    Twist,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CayleyError {
    #[error("bad label set: vertex {vertex} has parent {parent}")]
    BadLabelSet { vertex: usize, parent: usize },
    #[error("cycle detected through vertex {vertex}")]
    CycleDetected { vertex: usize },
    #[error("vertex 1 is the root and has no parent edge")]
    RootHasNoEdge,
    #[error("edge list does not form a tree on 1..={n}")]
    NotATree { n: usize },
}

/// Checks a parent list where entry `i` is the parent of vertex `i + 1`
/// and the entry for vertex 1 is 0.
pub fn validate_cayley(parents: &[usize]) -> Result<(), CayleyError> {
    let n = parents.len();
    if n == 0 {
        return Err(CayleyError::BadLabelSet {
            vertex: 1,
            parent: 0,
        });
    }
    if parents[0] != 0 {
        return Err(CayleyError::BadLabelSet {
            vertex: 1,
            parent: parents[0],
        });
    }
    for (i, &p) in parents.iter().enumerate().skip(1) {
        if p == 0 || p > n {
            return Err(CayleyError::BadLabelSet {
                vertex: i + 1,
                parent: p,
            });
        }
        if p == i + 1 {
            return Err(CayleyError::CycleDetected { vertex: p });
        }
    }
    // 0 = unseen, 1 = on current walk, 2 = reaches the root
    let mut state = vec![0u8; n + 1];
    state[1] = 2;
    let mut walk = Vec::new();
    for start in 2..=n {
        let mut v = start;
        while state[v] == 0 {
            state[v] = 1;
            walk.push(v);
            v = parents[v - 1];
        }
        if state[v] == 1 {
            return Err(CayleyError::CycleDetected { vertex: v });
        }
        for w in walk.drain(..) {
            state[w] = 2;
        }
    }
    Ok(())
}

/// Children lists in compressed form, each list in increasing label order.
#[derive(Clone, Debug)]
pub struct Children {
    offsets: Vec<usize>,
    items: Vec<usize>,
}

impl Children {
    fn from_parents(parent: &[usize]) -> Self {
        let n = parent.len() - 1;
        let mut offsets = vec![0usize; n + 2];
        for &p in &parent[2..] {
            offsets[p + 1] += 1;
        }
        for i in 1..offsets.len() {
            offsets[i] += offsets[i - 1];
        }
        let mut fill = offsets.clone();
        let mut items = vec![0usize; n.saturating_sub(1)];
        for (v, &p) in parent.iter().enumerate().skip(2) {
            items[fill[p]] = v;
            fill[p] += 1;
        }
        Children { offsets, items }
    }

    pub fn of(&self, v: usize) -> &[usize] {
        &self.items[self.offsets[v]..self.offsets[v + 1]]
    }
}

/// A labeled tree on `{1..n}` rooted at 1.
#[derive(Clone, Debug)]
pub struct CayleyTree {
    /// `parent[v]` for `v` in `2..=n`; slots 0 and 1 hold 0.
    parent: Vec<usize>,
    min: Vec<usize>,
}

impl PartialEq for CayleyTree {
    fn eq(&self, other: &Self) -> bool {
        self.parent == other.parent
    }
}

impl Eq for CayleyTree {}

impl std::hash::Hash for CayleyTree {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.parent.hash(state);
    }
}

impl CayleyTree {
    pub fn singleton() -> Self {
        CayleyTree {
            parent: vec![0, 0],
            min: vec![0, 1],
        }
    }

    /// Builds a tree from a parent list (entry `i` is the parent of
    /// vertex `i + 1`, root encoded as 0).
    pub fn from_parents(parents: &[usize]) -> Result<Self, CayleyError> {
        validate_cayley(parents)?;
        let mut parent = Vec::with_capacity(parents.len() + 1);
        parent.push(0);
        parent.extend_from_slice(parents);
        Ok(Self::from_parent_slots(parent))
    }

    /// `parent` is indexed by vertex, with slots 0 and 1 set to 0, and is
    /// already known to describe a tree.
    pub(crate) fn from_parent_slots(parent: Vec<usize>) -> Self {
        let min = subtree_minima(&parent);
        CayleyTree { parent, min }
    }

    /// Trusted parts: `parent` as in [`from_parent_slots`](Self::from_parent_slots)
    /// and `min` its subtree minima.
    pub(crate) fn from_parts(parent: Vec<usize>, min: Vec<usize>) -> Self {
        CayleyTree { parent, min }
    }

    /// Orients an undirected edge list away from vertex 1.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, CayleyError> {
        if n == 0 || edges.len() + 1 != n {
            return Err(CayleyError::NotATree { n });
        }
        let mut degree = vec![0usize; n + 2];
        for &(a, b) in edges {
            if a == 0 || b == 0 || a > n || b > n || a == b {
                return Err(CayleyError::NotATree { n });
            }
            degree[a + 1] += 1;
            degree[b + 1] += 1;
        }
        for i in 1..degree.len() {
            degree[i] += degree[i - 1];
        }
        let mut fill = degree.clone();
        let mut adj = vec![0usize; 2 * edges.len()];
        for &(a, b) in edges {
            adj[fill[a]] = b;
            fill[a] += 1;
            adj[fill[b]] = a;
            fill[b] += 1;
        }
        let mut parent = vec![0usize; n + 1];
        let mut seen = vec![false; n + 1];
        seen[1] = true;
        let mut stack = vec![1usize];
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &w in &adj[degree[u]..degree[u + 1]] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = u;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        if reached != n {
            return Err(CayleyError::NotATree { n });
        }
        Ok(Self::from_parent_slots(parent))
    }

    pub fn n(&self) -> usize {
        self.parent.len() - 1
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        match self.parent[v] {
            0 => None,
            p => Some(p),
        }
    }

    /// Parent list in document form: entry `i` is the parent of vertex
    /// `i + 1`, 0 for the root.
    pub fn parents(&self) -> &[usize] {
        &self.parent[1..]
    }

    /// Minimum label in the subtree rooted at `v`.
    pub fn subtree_min(&self, v: usize) -> usize {
        self.min[v]
    }

    pub fn children(&self) -> Children {
        Children::from_parents(&self.parent)
    }

    pub fn classify_edge(&self, child: usize) -> Result<EdgeClass, CayleyError> {
        let p = self.parent(child).ok_or(CayleyError::RootHasNoEdge)?;
        Ok(if p < self.min[child] {
            EdgeClass::Increasing
        } else {
            EdgeClass::Twist
        })
    }

    pub fn is_twist(&self, child: usize) -> bool {
        child >= 2 && self.parent[child] > self.min[child]
    }

    pub fn count_twists(&self) -> usize {
        (2..=self.n()).filter(|&v| self.is_twist(v)).count()
    }

    /// Edges as `(parent, child)` pairs ordered by child.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (2..=self.n()).map(move |v| (self.parent[v], v))
    }
}

impl fmt::Display for CayleyTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (p, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}→{p}")?;
        }
        write!(f, "}}")
    }
}

/// One post-order pass over the tree given by `parent` slots.
fn subtree_minima(parent: &[usize]) -> Vec<usize> {
    let n = parent.len() - 1;
    let children = Children::from_parents(parent);
    let mut min: Vec<usize> = (0..=n).collect();
    // preorder, then fold minima upwards in reverse
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![1usize];
    while let Some(u) = stack.pop() {
        order.push(u);
        stack.extend_from_slice(children.of(u));
    }
    for &v in order.iter().rev().take(n - 1) {
        let p = parent[v];
        if min[v] < min[p] {
            min[p] = min[v];
        }
    }
    min
}
