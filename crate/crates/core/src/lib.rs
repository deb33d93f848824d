//! Solvers for MaxMin Independent Set Reconfiguration under the token
//! addition/removal rule.

pub mod baker;
pub mod bounds;
pub mod brute;
pub mod degeneracy;
pub mod exact;
pub mod families;
pub mod format;
pub mod gadgets;
pub mod general;
pub mod oracle;
pub mod error;
pub mod graph;
pub mod traversal;
pub mod treewidth;

pub use error::{Error, Result};
pub use graph::{
    validate_sequence, Graph, Instance, ReconfigSequence, ValidationReport, Vertex, VertexSet,
    Violation, ViolationKind,
};
