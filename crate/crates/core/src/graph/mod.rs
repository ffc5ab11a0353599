//! Instance graphs and the combinatorial subroutines the repair operators use.
//!
//! Graphs are immutable after construction. Every query that concerns an
//! induced subgraph takes the vertex subset as a [`VertexSet`] and works on a
//! filtered view of the full adjacency structure; nothing is copied.

mod cut;
mod lcs;
mod tournament;
mod undirected;

pub use cut::{min_vertex_cut, CutTerminals};
pub use lcs::longest_common_subsequence;
pub use tournament::Tournament;
pub use undirected::UndirectedGraph;

use crate::vertex_set::{VertexId, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: VertexId, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(VertexId, VertexId),
    #[error("tournament has no orientation for pair {{{0}, {1}}}")]
    MissingOrientation(VertexId, VertexId),
    #[error("induced subtournament is not transitive")]
    NotTransitive,
    #[error("cut terminal sets overlap at vertex {0}")]
    TerminalOverlap(VertexId),
    #[error("induced subgraph is not bipartite")]
    NotBipartite,
}

/// Graphs whose induced subgraphs can be enumerated edge by edge.
pub trait InducedSubgraph {
    fn vertex_count(&self) -> usize;

    /// Edges of `G[within]` in lexicographic order of their endpoints
    /// `(min, max)`. Tournament arcs are reported with their orientation.
    fn induced_edges<'a>(
        &'a self,
        within: &'a VertexSet,
    ) -> impl Iterator<Item = (VertexId, VertexId)> + 'a;
}

fn check_vertex(v: VertexId, n: usize) -> Result<(), GraphError> {
    if v < n {
        Ok(())
    } else {
        Err(GraphError::VertexOutOfRange { vertex: v, n })
    }
}
