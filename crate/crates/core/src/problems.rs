//! Problem definitions and the two feasibility notions of the search space.
//!
//! A genotype `(x_S, x_V)` is *solution feasible* when `S = x_S ∩ x_V` solves
//! the problem on the induced subgraph `G[x_V]`, and *cardinality feasible*
//! when `|x_S| ≤ k`. All three problems are closed under induced subgraphs.

use std::fmt;
use std::str::FromStr;

use crate::graph::{Tournament, UndirectedGraph};
use crate::vertex_set::{VertexId, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProblemKind {
    VertexCover,
    /// Feedback vertex set in tournaments.
    Fvst,
    /// Odd cycle transversal.
    Oct,
}

impl ProblemKind {
    pub const ALL: [ProblemKind; 3] = [
        ProblemKind::VertexCover,
        ProblemKind::Fvst,
        ProblemKind::Oct,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            ProblemKind::VertexCover => "vc",
            ProblemKind::Fvst => "fvst",
            ProblemKind::Oct => "oct",
        }
    }
}

impl fmt::Display for ProblemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for ProblemKind {
    type Err = ProblemError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "vc" => Ok(ProblemKind::VertexCover),
            "fvst" => Ok(ProblemKind::Fvst),
            "oct" => Ok(ProblemKind::Oct),
            other => Err(ProblemError::UnknownKind(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ProblemError {
    #[error("unknown problem kind {0:?} (expected vc, fvst or oct)")]
    UnknownKind(String),
    #[error("{kind} needs {expected} instance graph")]
    GraphMismatch {
        kind: ProblemKind,
        expected: &'static str,
    },
    #[error("parameter k = {k} exceeds vertex count {n}")]
    ParameterTooLarge { k: usize, n: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InstanceGraph {
    Undirected(UndirectedGraph),
    Tournament(Tournament),
}

impl InstanceGraph {
    pub fn n(&self) -> usize {
        match self {
            InstanceGraph::Undirected(g) => g.n(),
            InstanceGraph::Tournament(t) => t.n(),
        }
    }

    pub fn m(&self) -> usize {
        match self {
            InstanceGraph::Undirected(g) => g.m(),
            InstanceGraph::Tournament(t) => t.m(),
        }
    }
}

/// Why a set fails to solve an induced subgraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    UncoveredEdge(VertexId, VertexId),
    /// `u -> v -> w -> u`
    DirectedTriangle(VertexId, VertexId, VertexId),
    /// Vertices of an odd cycle in cycle order.
    OddCycle(Vec<VertexId>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemInstance {
    kind: ProblemKind,
    graph: InstanceGraph,
    k: usize,
}

impl ProblemInstance {
    pub fn new(kind: ProblemKind, graph: InstanceGraph, k: usize) -> Result<Self, ProblemError> {
        let expected = match kind {
            ProblemKind::Fvst => "a tournament",
            _ => "an undirected",
        };
        let matches = matches!(
            (kind, &graph),
            (ProblemKind::Fvst, InstanceGraph::Tournament(_))
                | (
                    ProblemKind::VertexCover | ProblemKind::Oct,
                    InstanceGraph::Undirected(_)
                )
        );
        if !matches {
            return Err(ProblemError::GraphMismatch { kind, expected });
        }
        if k > graph.n() {
            return Err(ProblemError::ParameterTooLarge { k, n: graph.n() });
        }
        Ok(Self { kind, graph, k })
    }

    pub fn vertex_cover(g: UndirectedGraph, k: usize) -> Result<Self, ProblemError> {
        Self::new(ProblemKind::VertexCover, InstanceGraph::Undirected(g), k)
    }

    pub fn fvst(t: Tournament, k: usize) -> Result<Self, ProblemError> {
        Self::new(ProblemKind::Fvst, InstanceGraph::Tournament(t), k)
    }

    pub fn oct(g: UndirectedGraph, k: usize) -> Result<Self, ProblemError> {
        Self::new(ProblemKind::Oct, InstanceGraph::Undirected(g), k)
    }

    /// Same graph, different parameter.
    pub fn with_k(&self, k: usize) -> Result<Self, ProblemError> {
        Self::new(self.kind, self.graph.clone(), k)
    }

    pub fn kind(&self) -> ProblemKind {
        self.kind
    }

    pub fn graph(&self) -> &InstanceGraph {
        &self.graph
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// The undirected graph of a VC or OCT instance.
    pub fn undirected(&self) -> Option<&UndirectedGraph> {
        match &self.graph {
            InstanceGraph::Undirected(g) => Some(g),
            InstanceGraph::Tournament(_) => None,
        }
    }

    pub fn tournament(&self) -> Option<&Tournament> {
        match &self.graph {
            InstanceGraph::Tournament(t) => Some(t),
            InstanceGraph::Undirected(_) => None,
        }
    }

    /// Whether `x_S ∩ x_V` solves the problem on `G[x_V]`.
    pub fn is_solution_feasible(&self, x_s: &VertexSet, x_v: &VertexSet) -> bool {
        match &self.graph {
            InstanceGraph::Undirected(g) => match self.kind {
                ProblemKind::VertexCover => g.is_vertex_cover(x_s, x_v),
                _ => g.bipartition(&x_v.difference(x_s)).is_some(),
            },
            InstanceGraph::Tournament(t) => t.is_transitive(&x_v.difference(x_s)),
        }
    }

    /// Like [`is_solution_feasible`](Self::is_solution_feasible), surfacing a
    /// concrete obstruction when the check fails.
    pub fn check_solution(&self, x_s: &VertexSet, x_v: &VertexSet) -> Result<(), Violation> {
        let rest = x_v.difference(x_s);
        let violation = match &self.graph {
            InstanceGraph::Undirected(g) => match self.kind {
                ProblemKind::VertexCover => g
                    .uncovered_edge(x_s, x_v)
                    .map(|(u, v)| Violation::UncoveredEdge(u, v)),
                _ => g.odd_cycle(&rest).map(Violation::OddCycle),
            },
            InstanceGraph::Tournament(t) => t
                .directed_triangle(&rest)
                .map(|(u, v, w)| Violation::DirectedTriangle(u, v, w)),
        };
        violation.map_or(Ok(()), Err)
    }

    /// `|x_S| ≤ k`, counting members of `x_S` outside the subgraph as well.
    pub fn is_cardinality_feasible(&self, x_s: &VertexSet) -> bool {
        x_s.len() <= self.k
    }

    /// Whether `s` is a size-≤k solution of the whole graph.
    pub fn verify_final(&self, s: &VertexSet) -> bool {
        self.is_cardinality_feasible(s) && self.is_solution_feasible(s, &VertexSet::full(self.n()))
    }
}
