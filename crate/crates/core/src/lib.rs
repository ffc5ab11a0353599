//! Evolutionary algorithms with focused jump-and-repair for parameterized
//! graph problems.
//!
//! The search point of [`ea::ea_k_run`] is a pair `(x_S, x_V)`: a candidate
//! solution together with the induced subgraph it has to solve. Feasible points
//! are rewarded by the size of their subgraph, and whenever a mutation produces
//! a point that solves its subgraph but uses too many vertices, a
//! problem-specific jump-and-repair operator ([`repair`]) tries to compress it
//! back under the parameter `k`.
//!
//! Three problems are supported: k-VertexCover, k-FeedbackVertexSet in
//! tournaments and k-OddCycleTransversal.

pub mod ea;
pub mod graph;
pub mod instances;
pub mod io;
pub mod oracle;
pub mod problems;
pub mod repair;
pub mod vertex_set;

#[cfg(test)]
pub(crate) mod testutil;

pub use graph::{GraphError, InducedSubgraph, Tournament, UndirectedGraph};
pub use problems::{InstanceGraph, ProblemInstance, ProblemKind};
pub use vertex_set::{VertexId, VertexSet};
