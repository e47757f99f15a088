//! JSON documents and DOT export for single trees.
//!
//! A document is one compact JSON object: `{"family":"cayley","n":3,
//! "payload":[0,3,1]}` lists the parent of each vertex with 0 for the
//! root, and `{"family":"inc12","n":3,"payload":[[1],[1,2]]}` lists the
//! attachment of vertices `2..=n`. An increasing 1,2-tree may also be read
//! from its graph as `"edges":[[1,2],...]` in place of `payload`.

use std::fmt::Write;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::enumeration::Family;
use crate::trees::{Attachment, CayleyError, CayleyTree, Inc12Error, IncTreeSeq};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TreeDocument {
    Cayley(CayleyTree),
    Inc12(IncTreeSeq),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DocError {
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("{0}")]
    UnknownFamily(String),
    #[error("payload has the wrong shape: {0}")]
    PayloadShape(String),
    #[error("document declares n = {n} but the payload describes {found} vertices")]
    SizeMismatch { n: usize, found: usize },
    #[error("exactly one of payload and edges must be given")]
    PayloadChoice,
    #[error("edge lists are only accepted for inc12 documents")]
    EdgesForCayley,
    #[error(transparent)]
    Cayley(#[from] CayleyError),
    #[error(transparent)]
    Inc12(#[from] Inc12Error),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    family: String,
    n: usize,
    #[serde(default)]
    payload: Option<Value>,
    #[serde(default)]
    edges: Option<Vec<(usize, usize)>>,
}

#[derive(Serialize)]
struct OutDocument<'a, P> {
    family: &'a str,
    n: usize,
    payload: P,
}

fn shape<T: serde::de::DeserializeOwned>(v: Value) -> Result<T, DocError> {
    serde_json::from_value(v).map_err(|e| DocError::PayloadShape(e.to_string()))
}

impl TreeDocument {
    pub fn family(&self) -> Family {
        match self {
            TreeDocument::Cayley(_) => Family::Cayley,
            TreeDocument::Inc12(_) => Family::Inc12,
        }
    }

    pub fn n(&self) -> usize {
        match self {
            TreeDocument::Cayley(t) => t.n(),
            TreeDocument::Inc12(s) => s.n(),
        }
    }

    /// Parses and validates one document.
    pub fn parse(text: &str) -> Result<Self, DocError> {
        let raw: RawDocument =
            serde_json::from_str(text).map_err(|e| DocError::Json(e.to_string()))?;
        let family: Family = raw.family.parse().map_err(DocError::UnknownFamily)?;
        let n = raw.n;
        match (family, raw.payload, raw.edges) {
            (Family::Cayley, Some(p), None) => {
                let parents: Vec<usize> = shape(p)?;
                if parents.len() != n {
                    return Err(DocError::SizeMismatch {
                        n,
                        found: parents.len(),
                    });
                }
                Ok(TreeDocument::Cayley(CayleyTree::from_parents(&parents)?))
            }
            (Family::Cayley, _, Some(_)) => Err(DocError::EdgesForCayley),
            (Family::Inc12, Some(p), None) => {
                let raw: Vec<Vec<usize>> = shape(p)?;
                if raw.len() + 1 != n {
                    return Err(DocError::SizeMismatch {
                        n,
                        found: raw.len() + 1,
                    });
                }
                let atts = raw
                    .into_iter()
                    .enumerate()
                    .map(|(i, a)| match a.as_slice() {
                        [x] => Ok(Attachment::Leaf(*x)),
                        [x, y] => Ok(Attachment::Triangle(*x, *y)),
                        _ => Err(DocError::PayloadShape(format!(
                            "attachment of vertex {} has {} entries",
                            i + 2,
                            a.len()
                        ))),
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(TreeDocument::Inc12(IncTreeSeq::new(atts)?))
            }
            (Family::Inc12, None, Some(edges)) => {
                Ok(TreeDocument::Inc12(IncTreeSeq::from_edges(n, &edges)?))
            }
            _ => Err(DocError::PayloadChoice),
        }
    }

    /// Canonical compact JSON, without a trailing newline.
    pub fn to_json(&self) -> String {
        let out = match self {
            TreeDocument::Cayley(t) => serde_json::to_string(&OutDocument {
                family: "cayley",
                n: t.n(),
                payload: t.parents(),
            }),
            TreeDocument::Inc12(s) => {
                let payload: Vec<Vec<usize>> = s
                    .attachments()
                    .iter()
                    .map(|a| match *a {
                        Attachment::Leaf(x) => vec![x],
                        Attachment::Triangle(x, y) => vec![x, y],
                    })
                    .collect();
                serde_json::to_string(&OutDocument {
                    family: "inc12",
                    n: s.n(),
                    payload,
                })
            }
        };
        out.expect("documents always serialize")
    }

    /// DOT digraph. Cayley edges point from parent to child and twists are
    /// dashed; the edges of an increasing 1,2-tree are drawn undirected.
    pub fn to_dot(&self) -> String {
        let mut s = String::new();
        match self {
            TreeDocument::Cayley(t) => {
                s.push_str("digraph cayley {\n");
                for v in 1..=t.n() {
                    let _ = writeln!(s, "  {v};");
                }
                for (p, c) in t.edges() {
                    if t.is_twist(c) {
                        let _ = writeln!(s, "  {p} -> {c} [style=dashed, class=twist];");
                    } else {
                        let _ = writeln!(s, "  {p} -> {c};");
                    }
                }
            }
            TreeDocument::Inc12(seq) => {
                s.push_str("digraph inc12 {\n  edge [dir=none];\n");
                for v in 1..=seq.n() {
                    let _ = writeln!(s, "  {v};");
                }
                for (a, b) in seq.edges() {
                    let _ = writeln!(s, "  {a} -> {b};");
                }
            }
        }
        s.push_str("}\n");
        s
    }
}

impl From<CayleyTree> for TreeDocument {
    fn from(t: CayleyTree) -> Self {
        TreeDocument::Cayley(t)
    }
}

impl From<IncTreeSeq> for TreeDocument {
    fn from(s: IncTreeSeq) -> Self {
        TreeDocument::Inc12(s)
    }
}

/// DOT rendering of a validated document.
pub fn export_dot(doc: &TreeDocument) -> String {
    doc.to_dot()
}
