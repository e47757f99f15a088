//! Exhaustive generation of both families by walking their generating
//! trees depth first, applying and reverting one construction step at a
//! time.

use thiserror::Error;

use crate::trees::{Attachment, CayleyTree, IncTreeSeq};

/// Largest size enumerated unless the caller raises the cap.
pub const DEFAULT_CAP: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Inc12,
    Cayley,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Inc12 => "inc12",
            Family::Cayley => "cayley",
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "inc12" => Ok(Family::Inc12),
            "cayley" => Ok(Family::Cayley),
            other => Err(format!(
                "unknown family {other:?} (expected inc12 or cayley)"
            )),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumerationError {
    #[error("size {n} exceeds the enumeration cap {cap}")]
    ResourceBound { n: usize, cap: usize },
    #[error("size must be at least 1")]
    EmptySize,
}

/// One level of a generating tree: a mutable object together with the
/// construction steps that grow it by one vertex.
pub trait GeneratingFamily {
    type Object;
    type Move;

    fn size(&self) -> usize;
    /// Moves leading to the children of the current object, in emission order.
    fn moves(&self) -> Vec<Self::Move>;
    fn apply(&mut self, mv: &Self::Move);
    /// Undoes `mv`, which must be the last applied move.
    fn revert(&mut self, mv: &Self::Move);
    fn snapshot(&self) -> Self::Object;
}

/// Mutable increasing 1,2-tree with its edge list kept in step.
#[derive(Clone, Debug, Default)]
pub struct Inc12State {
    attachments: Vec<Attachment>,
    edges: Vec<(usize, usize)>,
}

impl Inc12State {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_seq(seq: &IncTreeSeq) -> Self {
        Inc12State {
            attachments: seq.attachments().to_vec(),
            edges: seq.edges(),
        }
    }
}

impl GeneratingFamily for Inc12State {
    type Object = IncTreeSeq;
    type Move = Attachment;

    fn size(&self) -> usize {
        self.attachments.len() + 1
    }

    fn moves(&self) -> Vec<Attachment> {
        let n = self.size();
        (1..=n)
            .map(Attachment::Leaf)
            .chain(self.edges.iter().map(|&(x, y)| Attachment::Triangle(x, y)))
            .collect()
    }

    fn apply(&mut self, mv: &Attachment) {
        let v = self.size() + 1;
        match *mv {
            Attachment::Leaf(x) => self.edges.push((x, v)),
            Attachment::Triangle(x, y) => {
                self.edges.push((x, v));
                self.edges.push((y, v));
            }
        }
        self.attachments.push(*mv);
    }

    fn revert(&mut self, mv: &Attachment) {
        let removed = if mv.is_triangle() { 2 } else { 1 };
        self.edges.truncate(self.edges.len() - removed);
        self.attachments.pop();
    }

    fn snapshot(&self) -> IncTreeSeq {
        IncTreeSeq::from_trusted(self.attachments.clone())
    }
}

/// Construction step for Cayley trees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CayleyMove {
    /// Attach the new vertex as a leaf below `k`.
    Leaf(usize),
    /// Put the new vertex in place of `k`, make `k` its child, and keep the
    /// twist subtrees listed in `keep` (the `a` smallest by minimum) under
    /// the new vertex.
    Replace { k: usize, keep: Vec<usize> },
}

/// Mutable Cayley tree as a parent array indexed by vertex.
#[derive(Clone, Debug)]
pub struct CayleyState {
    parent: Vec<usize>,
}

impl Default for CayleyState {
    fn default() -> Self {
        CayleyState { parent: vec![0, 0] }
    }
}

impl CayleyState {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_tree(tree: &CayleyTree) -> Self {
        let mut parent = vec![0];
        parent.extend_from_slice(tree.parents());
        CayleyState { parent }
    }
}

impl GeneratingFamily for CayleyState {
    type Object = CayleyTree;
    type Move = CayleyMove;

    fn size(&self) -> usize {
        self.parent.len() - 1
    }

    fn moves(&self) -> Vec<CayleyMove> {
        let n = self.size();
        let mut moves: Vec<CayleyMove> = (1..=n).map(CayleyMove::Leaf).collect();
        if n < 2 {
            return moves;
        }
        let tree = CayleyTree::from_parent_slots(self.parent.clone());
        let children = tree.children();
        for k in 2..=n {
            let mut twists: Vec<usize> = children
                .of(k)
                .iter()
                .copied()
                .filter(|&c| tree.subtree_min(c) < k)
                .collect();
            twists.sort_by_key(|&c| tree.subtree_min(c));
            for a in 0..=twists.len() {
                moves.push(CayleyMove::Replace {
                    k,
                    keep: twists[..a].to_vec(),
                });
            }
        }
        moves
    }

    fn apply(&mut self, mv: &CayleyMove) {
        let v = self.size() + 1;
        match mv {
            CayleyMove::Leaf(k) => self.parent.push(*k),
            CayleyMove::Replace { k, keep } => {
                self.parent.push(self.parent[*k]);
                self.parent[*k] = v;
                for &c in keep {
                    self.parent[c] = v;
                }
            }
        }
    }

    fn revert(&mut self, mv: &CayleyMove) {
        let v = self.size();
        if let CayleyMove::Replace { k, keep } = mv {
            for &c in keep {
                self.parent[c] = *k;
            }
            self.parent[*k] = self.parent[v];
        }
        self.parent.pop();
    }

    fn snapshot(&self) -> CayleyTree {
        CayleyTree::from_parent_slots(self.parent.clone())
    }
}

/// Materializes the children of `state` in the generating tree.
pub fn successors<F: GeneratingFamily>(state: &mut F) -> Vec<F::Object> {
    state
        .moves()
        .into_iter()
        .map(|mv| {
            state.apply(&mv);
            let obj = state.snapshot();
            state.revert(&mv);
            obj
        })
        .collect()
}

pub fn successors_inc12(seq: &IncTreeSeq) -> Vec<IncTreeSeq> {
    successors(&mut Inc12State::from_seq(seq))
}

pub fn successors_cayley(tree: &CayleyTree) -> Vec<CayleyTree> {
    successors(&mut CayleyState::from_tree(tree))
}

/// Depth-first stream of the objects at depth `target` of a generating tree.
pub struct GeneratingWalk<F: GeneratingFamily> {
    state: F,
    target: usize,
    frames: Vec<(Vec<F::Move>, usize)>,
    applied: Vec<F::Move>,
    started: bool,
}

impl<F: GeneratingFamily> GeneratingWalk<F> {
    pub fn new(root: F, target: usize) -> Self {
        GeneratingWalk {
            state: root,
            target,
            frames: Vec::new(),
            applied: Vec::new(),
            started: false,
        }
    }
}

impl<F: GeneratingFamily> Iterator for GeneratingWalk<F>
where
    F::Move: Clone,
{
    type Item = F::Object;

    fn next(&mut self) -> Option<F::Object> {
        if !self.started {
            self.started = true;
            if self.state.size() == self.target {
                return Some(self.state.snapshot());
            }
            if self.state.size() > self.target {
                return None;
            }
            self.frames.push((self.state.moves(), 0));
        }
        loop {
            let depth = self.frames.len();
            if depth == 0 {
                return None;
            }
            if self.applied.len() == depth {
                let mv = self.applied.pop().expect("applied move");
                self.state.revert(&mv);
            }
            let (moves, idx) = self.frames.last_mut().expect("frame");
            if *idx < moves.len() {
                let mv = moves[*idx].clone();
                *idx += 1;
                self.state.apply(&mv);
                self.applied.push(mv);
                if self.state.size() == self.target {
                    return Some(self.state.snapshot());
                }
                let next = self.state.moves();
                self.frames.push((next, 0));
            } else {
                self.frames.pop();
            }
        }
    }
}

fn check_size(n: usize, cap: usize) -> Result<(), EnumerationError> {
    if n == 0 {
        return Err(EnumerationError::EmptySize);
    }
    if n > cap {
        return Err(EnumerationError::ResourceBound { n, cap });
    }
    Ok(())
}

pub fn enumerate_inc12(
    n: usize,
    cap: usize,
) -> Result<GeneratingWalk<Inc12State>, EnumerationError> {
    check_size(n, cap)?;
    Ok(GeneratingWalk::new(Inc12State::new(), n))
}

pub fn enumerate_cayley(
    n: usize,
    cap: usize,
) -> Result<GeneratingWalk<CayleyState>, EnumerationError> {
    check_size(n, cap)?;
    Ok(GeneratingWalk::new(CayleyState::new(), n))
}

/// Inverse of the replacement move for a tree whose largest vertex is
/// not a leaf: contracts the edge from `n` to the child subtree with the
/// largest minimum.
pub fn cayley_predecessor(tree: &CayleyTree) -> Option<CayleyTree> {
    let n = tree.n();
    if n < 2 {
        return None;
    }
    let children = tree.children();
    let mut parent: Vec<usize> = std::iter::once(0)
        .chain(tree.parents().iter().copied())
        .collect();
    match children
        .of(n)
        .iter()
        .copied()
        .max_by_key(|&c| tree.subtree_min(c))
    {
        None => {}
        Some(k) => {
            parent[k] = parent[n];
            for &c in children.of(n) {
                if c != k {
                    parent[c] = k;
                }
            }
        }
    }
    parent.pop();
    Some(CayleyTree::from_parent_slots(parent))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::Attachment::*;
    use std::collections::HashSet;

    #[test]
    fn inc12_successors() {
        let one = IncTreeSeq::singleton();
        assert_eq!(
            successors_inc12(&one),
            vec![IncTreeSeq::new(vec![Leaf(1)]).unwrap()]
        );
        let two = IncTreeSeq::new(vec![Leaf(1)]).unwrap();
        let got: Vec<_> = successors_inc12(&two)
            .into_iter()
            .map(|s| s.attachments().to_vec())
            .collect();
        assert_eq!(
            got,
            vec![
                vec![Leaf(1), Leaf(1)],
                vec![Leaf(1), Leaf(2)],
                vec![Leaf(1), Triangle(1, 2)]
            ]
        );
        let tri = IncTreeSeq::new(vec![Leaf(1), Triangle(1, 2)]).unwrap();
        assert_eq!(successors_inc12(&tri).len(), tri.n() + tri.edge_count());
    }

    #[test]
    fn cayley_successors() {
        let one = CayleyTree::singleton();
        assert_eq!(
            successors_cayley(&one),
            vec![CayleyTree::from_parents(&[0, 1]).unwrap()]
        );
        let edge = CayleyTree::from_parents(&[0, 1]).unwrap();
        let got: Vec<_> = successors_cayley(&edge)
            .iter()
            .map(|t| t.parents().to_vec())
            .collect();
        assert_eq!(got, vec![vec![0, 1, 1], vec![0, 1, 2], vec![0, 3, 1]]);

        // path 1-3-2: 3 leaf moves, 1 replacement at k=2, 2 at k=3
        let bent = CayleyTree::from_parents(&[0, 3, 1]).unwrap();
        let succ = successors_cayley(&bent);
        assert_eq!(succ.len(), 6);
        let distinct: HashSet<_> = succ.iter().collect();
        assert_eq!(distinct.len(), 6);
        let twists: Vec<_> = succ.iter().map(|t| t.count_twists()).collect();
        assert_eq!(twists, vec![1, 1, 1, 2, 2, 2]);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_cayley(1, DEFAULT_CAP).unwrap().count(), 1);
        assert_eq!(enumerate_inc12(1, DEFAULT_CAP).unwrap().count(), 1);
        assert_eq!(enumerate_inc12(4, DEFAULT_CAP).unwrap().count(), 16);
        assert_eq!(enumerate_cayley(5, DEFAULT_CAP).unwrap().count(), 125);
    }

    #[test]
    fn enumeration_respects_cap() {
        assert_eq!(
            enumerate_inc12(10, DEFAULT_CAP).err(),
            Some(EnumerationError::ResourceBound { n: 10, cap: 9 })
        );
        assert!(enumerate_cayley(0, DEFAULT_CAP).is_err());
    }

    #[test]
    fn grouped_by_statistic() {
        let mut tri = [0usize; 3];
        for s in enumerate_inc12(4, DEFAULT_CAP).unwrap() {
            tri[s.edge_count() - 3] += 1;
        }
        assert_eq!(tri, [6, 7, 3]);
        let mut tw = [0usize; 3];
        for t in enumerate_cayley(4, DEFAULT_CAP).unwrap() {
            tw[t.count_twists()] += 1;
        }
        assert_eq!(tw, [6, 7, 3]);
    }

    #[test]
    fn walk_restores_root_state() {
        let mut walk = enumerate_cayley(4, DEFAULT_CAP).unwrap();
        while walk.next().is_some() {}
        assert_eq!(walk.state.size(), 1);
    }

    #[test]
    fn predecessor_inverts_replacement() {
        for t in enumerate_cayley(6, DEFAULT_CAP).unwrap() {
            let n = t.n();
            let is_leaf = !t.parents().contains(&n);
            let pred = cayley_predecessor(&t).unwrap();
            let succ = successors_cayley(&pred);
            if is_leaf {
                assert_eq!(pred.n(), n - 1);
            }
            assert!(succ.contains(&t), "{t} not a successor of {pred}");
        }
    }
}
