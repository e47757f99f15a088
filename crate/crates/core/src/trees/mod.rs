//! The two tree families and the plane forest used between them.

mod cayley;
mod forest;
mod inc12;

pub use cayley::{validate_cayley, CayleyError, CayleyTree, Children, EdgeClass};
pub use forest::{ForestError, ForestIndex, Label, LabeledPlaneForest, Node, NodeId, Siblings};
pub use inc12::{validate_inc12, Attachment, CliqueReason, Inc12Error, IncTreeSeq};
