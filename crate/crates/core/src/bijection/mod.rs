//! The twist-preserving bijection between increasing 1,2-trees and
//! Cayley trees.
//!
//! Forward, a construction sequence is replayed into a plane forest whose
//! edges are labeled by graph edges (step one), the forest's vertices are
//! labeled from a rightmost-first search (step two), and equal vertex
//! labels are merged into a Cayley tree (step three). Triangles of the
//! input become twists of the output. The inverse cuts the Cayley tree at
//! its increasing edges and runs the three steps backwards.

pub mod checks;
mod express;
mod forward;
mod inverse;

use thiserror::Error;

use crate::trees::Inc12Error;

pub use express::{express_tree, tau_express, ExpressTree};
pub use forward::{tau, tau_step1, tau_step2, tau_step3, ForestBuilder, Side};
pub use inverse::{tau_inv_step1, tau_inv_step2, tau_inv_step3, tau_inverse};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BijectionError {
    #[error("label ({0},{1}) is carried by no edge")]
    LabelNotFound(usize, usize),
    #[error("merge conflict: {0}")]
    MergeConflict(String),
    #[error("placeholder label could not be resolved")]
    UnresolvedPlaceholder,
    #[error("inverse produced an invalid sequence: {0}")]
    InvalidResult(Inc12Error),
}
