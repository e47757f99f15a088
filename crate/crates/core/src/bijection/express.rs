//! Single-pass variant of the forward map: one vertex-labeled plane tree
//! grown directly, without the intermediate forest and search.

use std::collections::HashMap;

use crate::trees::{Attachment, CayleyTree, IncTreeSeq};

use super::forward::Side;
use super::BijectionError;

#[derive(Clone, Debug)]
struct ExpressNode {
    vertex: usize,
    parent: Option<usize>,
    children: Vec<usize>,
    left: Option<(usize, usize)>,
    right: Option<(usize, usize)>,
}

/// The plane tree built by the express rules. Edge labels sit on the
/// child node of each edge.
#[derive(Clone, Debug)]
pub struct ExpressTree {
    nodes: Vec<ExpressNode>,
    node_of_vertex: Vec<usize>,
    labels: HashMap<(usize, usize), (usize, Side)>,
}

impl ExpressTree {
    fn new(n: usize) -> Self {
        let mut node_of_vertex = vec![usize::MAX; n + 1];
        node_of_vertex[1] = 0;
        ExpressTree {
            nodes: vec![ExpressNode {
                vertex: 1,
                parent: None,
                children: Vec::new(),
                left: None,
                right: None,
            }],
            node_of_vertex,
            labels: HashMap::with_capacity(2 * n),
        }
    }

    fn add(&mut self, vertex: usize, parent: usize) -> usize {
        self.nodes.push(ExpressNode {
            vertex,
            parent: Some(parent),
            children: Vec::new(),
            left: None,
            right: None,
        });
        let id = self.nodes.len() - 1;
        self.node_of_vertex[vertex] = id;
        id
    }

    fn set_labels(
        &mut self,
        id: usize,
        left: Option<(usize, usize)>,
        right: Option<(usize, usize)>,
    ) {
        self.nodes[id].left = left;
        self.nodes[id].right = right;
        if let Some(l) = left {
            self.labels.insert(l, (id, Side::Left));
        }
        if let Some(r) = right {
            self.labels.insert(r, (id, Side::Right));
        }
    }

    fn push(&mut self, v: usize, att: Attachment) -> Result<(), BijectionError> {
        match att {
            Attachment::Leaf(x) => {
                let px = self.node_of_vertex[x];
                let id = self.add(v, px);
                self.nodes[px].children.push(id);
                self.set_labels(id, Some((x, v)), None);
            }
            Attachment::Triangle(x, y) => {
                let &(b, side) = self
                    .labels
                    .get(&(x, y))
                    .ok_or(BijectionError::LabelNotFound(x, y))?;
                let a = self.nodes[b].parent.expect("labeled edge has a parent");
                match side {
                    Side::Left => {
                        // v in the middle of a-b: a-v keeps the old labels,
                        // v-b carries the new ones
                        let m = self.add(v, a);
                        let pos = self.position(a, b);
                        self.nodes[a].children[pos] = m;
                        self.nodes[m].children.push(b);
                        self.nodes[b].parent = Some(m);
                        let (l, r) = (self.nodes[b].left, self.nodes[b].right);
                        self.set_labels(m, l, r);
                        self.set_labels(b, Some((x, v)), Some((y, v)));
                    }
                    Side::Right => {
                        // a is relabeled v; its old label moves to a new right
                        // sibling of b that adopts b's right siblings
                        let old = self.nodes[a].vertex;
                        self.nodes[a].vertex = v;
                        self.node_of_vertex[v] = a;
                        let d = self.add(old, a);
                        let pos = self.position(a, b);
                        let adopted = self.nodes[a].children.split_off(pos + 1);
                        for &c in &adopted {
                            self.nodes[c].parent = Some(d);
                        }
                        self.nodes[d].children = adopted;
                        self.nodes[a].children.push(d);
                        self.set_labels(d, Some((x, v)), Some((y, v)));
                    }
                }
            }
        }
        Ok(())
    }

    fn position(&self, parent: usize, child: usize) -> usize {
        self.nodes[parent]
            .children
            .iter()
            .position(|&c| c == child)
            .expect("child listed under its parent")
    }

    /// Unordered edge set on vertex labels.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.nodes
            .iter()
            .filter_map(|n| n.parent.map(|p| (self.nodes[p].vertex, n.vertex)))
            .collect()
    }
}

pub fn express_tree(seq: &IncTreeSeq) -> Result<ExpressTree, BijectionError> {
    let mut t = ExpressTree::new(seq.n());
    for (i, &att) in seq.attachments().iter().enumerate() {
        t.push(i + 2, att)?;
    }
    Ok(t)
}

/// Same map as [`tau`](super::tau), computed by the express rules.
pub fn tau_express(seq: &IncTreeSeq) -> Result<CayleyTree, BijectionError> {
    let t = express_tree(seq)?;
    CayleyTree::from_edges(seq.n(), &t.edges())
        .map_err(|e| BijectionError::MergeConflict(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::Attachment::*;

    #[test]
    fn express_examples() {
        let one = IncTreeSeq::new(vec![Leaf(1)]).unwrap();
        assert_eq!(tau_express(&one).unwrap().parents(), &[0, 1]);
        let tri = IncTreeSeq::new(vec![Leaf(1), Triangle(1, 2)]).unwrap();
        assert_eq!(tau_express(&tri).unwrap().parents(), &[0, 3, 1]);
        assert_eq!(
            tau_express(&IncTreeSeq::singleton()).unwrap(),
            CayleyTree::singleton()
        );
    }

    #[test]
    fn right_rule_relabels_source() {
        // 2 on 1, then 3 on (1,2): left label -> middle insertion 1-3-2;
        // then 4 on (2,3): right label of edge 3-2 -> 3 becomes 4
        let s = IncTreeSeq::new(vec![Leaf(1), Triangle(1, 2), Triangle(2, 3)]).unwrap();
        let t = express_tree(&s).unwrap();
        let mut e = t.edges();
        e.sort();
        assert_eq!(e, vec![(1, 4), (4, 2), (4, 3)]);
    }
}
