//! Increasing 1,2-trees as construction sequences.

use std::fmt;

use thiserror::Error;

/// How vertex `v` was glued onto the vertices `1..v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Attachment {
    /// Attached as a leaf to vertex `x`.
    Leaf(usize),
    /// Attached to both endpoints of the edge `{x, y}`, with `x < y`.
    Triangle(usize, usize),
}

impl Attachment {
    pub fn is_triangle(&self) -> bool {
        matches!(self, Attachment::Triangle(..))
    }
}

impl fmt::Display for Attachment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Attachment::Leaf(x) => write!(f, "Leaf({x})"),
            Attachment::Triangle(x, y) => write!(f, "Triangle({x},{y})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CliqueReason {
    /// A referenced label is not in `1..v`.
    LabelOutOfRange,
    /// `Triangle(x, y)` with `x >= y`.
    Unordered,
    /// The edge `{x, y}` does not exist yet.
    MissingEdge(usize, usize),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Inc12Error {
    #[error("malformed sequence: {n} vertices need {expected} attachments, got {found}")]
    MalformedSequence {
        n: usize,
        expected: usize,
        found: usize,
    },
    #[error("clique violation at vertex {vertex}: {reason:?}")]
    CliqueViolation { vertex: usize, reason: CliqueReason },
}

/// Checks that `attachments` is a valid construction sequence for an
/// increasing 1,2-tree on `n` vertices. Entry `i` describes vertex `i + 2`.
pub fn validate_inc12(n: usize, attachments: &[Attachment]) -> Result<(), Inc12Error> {
    if n == 0 || attachments.len() + 1 != n {
        return Err(Inc12Error::MalformedSequence {
            n,
            expected: n.saturating_sub(1),
            found: attachments.len(),
        });
    }
    // {x, y} with x < y is an edge iff y's own attachment names x
    let has_edge = |x: usize, y: usize| match attachments[y - 2] {
        Attachment::Leaf(a) => a == x,
        Attachment::Triangle(a, b) => a == x || b == x,
    };
    for (i, att) in attachments.iter().enumerate() {
        let v = i + 2;
        let violation = |reason| Inc12Error::CliqueViolation { vertex: v, reason };
        match *att {
            Attachment::Leaf(x) => {
                if x == 0 || x >= v {
                    return Err(violation(CliqueReason::LabelOutOfRange));
                }
            }
            Attachment::Triangle(x, y) => {
                if x == 0 || y >= v {
                    return Err(violation(CliqueReason::LabelOutOfRange));
                }
                if x >= y {
                    return Err(violation(CliqueReason::Unordered));
                }
                if !has_edge(x, y) {
                    return Err(violation(CliqueReason::MissingEdge(x, y)));
                }
            }
        }
    }
    Ok(())
}

/// An increasing 1,2-tree, stored as the sequence of attachments of
/// vertices `2..=n`. The graph itself is derived on demand.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IncTreeSeq {
    attachments: Vec<Attachment>,
}

impl IncTreeSeq {
    /// The single-vertex tree.
    pub fn singleton() -> Self {
        IncTreeSeq {
            attachments: Vec::new(),
        }
    }

    pub fn new(attachments: Vec<Attachment>) -> Result<Self, Inc12Error> {
        validate_inc12(attachments.len() + 1, &attachments)?;
        Ok(IncTreeSeq { attachments })
    }

    /// Skips validation. Callers must guarantee the clique condition.
    pub(crate) fn from_trusted(attachments: Vec<Attachment>) -> Self {
        debug_assert!(validate_inc12(attachments.len() + 1, &attachments).is_ok());
        IncTreeSeq { attachments }
    }

    /// Recovers the construction sequence of a labeled graph: each vertex
    /// `v >= 2` must have one or two smaller-labeled neighbours.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, Inc12Error> {
        let mut lower: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
        for &(a, b) in edges {
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            if lo == 0 || hi > n || lo == hi {
                return Err(Inc12Error::CliqueViolation {
                    vertex: hi.min(n.max(1)),
                    reason: CliqueReason::LabelOutOfRange,
                });
            }
            lower[hi].push(lo);
        }
        let mut attachments = Vec::with_capacity(n.saturating_sub(1));
        for (v, nb) in lower.iter_mut().enumerate().skip(2) {
            nb.sort_unstable();
            let att = match nb.as_slice() {
                [x] => Attachment::Leaf(*x),
                [x, y] => Attachment::Triangle(*x, *y),
                _ => {
                    return Err(Inc12Error::CliqueViolation {
                        vertex: v,
                        reason: CliqueReason::LabelOutOfRange,
                    })
                }
            };
            attachments.push(att);
        }
        if n >= 1 && !lower[1].is_empty() {
            return Err(Inc12Error::CliqueViolation {
                vertex: 1,
                reason: CliqueReason::LabelOutOfRange,
            });
        }
        Self::new(attachments)
    }

    pub fn n(&self) -> usize {
        self.attachments.len() + 1
    }

    pub fn attachments(&self) -> &[Attachment] {
        &self.attachments
    }

    /// Attachment of vertex `v`, for `v >= 2`.
    pub fn attachment(&self, v: usize) -> Attachment {
        self.attachments[v - 2]
    }

    /// Edges of the induced graph as `(smaller, larger)` pairs, in
    /// insertion order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::with_capacity(2 * self.attachments.len());
        for (i, att) in self.attachments.iter().enumerate() {
            let v = i + 2;
            match *att {
                Attachment::Leaf(x) => edges.push((x, v)),
                Attachment::Triangle(x, y) => {
                    edges.push((x, v));
                    edges.push((y, v));
                }
            }
        }
        edges
    }

    pub fn edge_count(&self) -> usize {
        self.attachments.len() + self.triangle_count()
    }

    pub fn triangle_count(&self) -> usize {
        self.attachments.iter().filter(|a| a.is_triangle()).count()
    }

    pub fn is_all_leaf(&self) -> bool {
        self.triangle_count() == 0
    }
}

impl fmt::Display for IncTreeSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, a) in self.attachments.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "]")
    }
}
