use std::collections::VecDeque;

use super::{check_vertex, GraphError, InducedSubgraph};
use crate::vertex_set::{VertexId, VertexSet};

/// Simple undirected graph: no self-loops, no parallel edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UndirectedGraph {
    n: usize,
    adj: Vec<VertexSet>,
    /// Sorted `(u, v)` pairs with `u < v`.
    edges: Vec<(VertexId, VertexId)>,
}

impl UndirectedGraph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut adj = vec![VertexSet::empty(n); n];
        let mut list = Vec::new();
        for (u, v) in edges {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !adj[u].insert(v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            adj[v].insert(u);
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        Ok(Self {
            n,
            adj,
            edges: list,
        })
    }

    pub fn edgeless(n: usize) -> Self {
        Self {
            n,
            adj: vec![VertexSet::empty(n); n],
            edges: Vec::new(),
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    #[inline]
    pub fn neighbors(&self, v: VertexId) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    /// Open neighborhood `N(S) ∩ within`.
    pub fn neighborhood(&self, s: &VertexSet, within: &VertexSet) -> VertexSet {
        let mut out = VertexSet::empty(self.n);
        for v in s {
            out.union_with(&self.adj[v]);
        }
        out.intersect_with(within);
        out
    }

    /// First edge of `G[within]` with both endpoints outside `cover`.
    pub fn uncovered_edge(
        &self,
        cover: &VertexSet,
        within: &VertexSet,
    ) -> Option<(VertexId, VertexId)> {
        let free = within.difference(cover);
        for u in &free {
            let hit = self.adj[u]
                .words()
                .iter()
                .zip(free.words())
                .enumerate()
                .find_map(|(i, (a, b))| {
                    let w = a & b;
                    (w != 0).then(|| i * 64 + w.trailing_zeros() as usize)
                });
            if let Some(v) = hit {
                return Some((u.min(v), u.max(v)));
            }
        }
        None
    }

    /// Whether every edge of `G[within]` has an endpoint in `cover`.
    #[inline]
    pub fn is_vertex_cover(&self, cover: &VertexSet, within: &VertexSet) -> bool {
        let (cw, ww) = (cover.words(), within.words());
        for (i, (&c, &w)) in cw.iter().zip(ww).enumerate() {
            let mut free = w & !c;
            while free != 0 {
                let u = i * 64 + free.trailing_zeros() as usize;
                free &= free - 1;
                let clash = self.adj[u]
                    .words()
                    .iter()
                    .zip(cw.iter().zip(ww))
                    .any(|(a, (c, w))| a & w & !c != 0);
                if clash {
                    return false;
                }
            }
        }
        true
    }

    /// Number of edges of `G` with neither endpoint in `cover`.
    pub fn uncovered_edge_count(&self, cover: &VertexSet) -> usize {
        let mut twice = 0;
        let cw = cover.words();
        for (i, &c) in cw.iter().enumerate() {
            let mut free = !c;
            if (i + 1) * 64 > self.n {
                free &= (1u64 << (self.n - i * 64)) - 1;
            }
            while free != 0 {
                let u = i * 64 + free.trailing_zeros() as usize;
                free &= free - 1;
                twice += self.adj[u]
                    .words()
                    .iter()
                    .zip(cw)
                    .map(|(a, c)| (a & !c).count_ones() as usize)
                    .sum::<usize>();
            }
        }
        twice / 2
    }

    /// Proper 2-coloring `(C, D)` of `G[within]`, or `None` if it has an odd
    /// cycle. In each connected component the lowest-index vertex is put in `C`.
    pub fn bipartition(&self, within: &VertexSet) -> Option<(VertexSet, VertexSet)> {
        match self.two_color(within) {
            Coloring::Proper { c, d } => Some((c, d)),
            Coloring::Conflict { .. } => None,
        }
    }

    /// Vertices of an odd cycle in `G[within]`, in cycle order, if one exists.
    pub fn odd_cycle(&self, within: &VertexSet) -> Option<Vec<VertexId>> {
        match self.two_color(within) {
            Coloring::Proper { .. } => None,
            Coloring::Conflict { u, v, parent } => {
                let path_to_root = |mut x: VertexId| {
                    let mut path = vec![x];
                    while parent[x] != x {
                        x = parent[x];
                        path.push(x);
                    }
                    path
                };
                let pu = path_to_root(u);
                let pv = path_to_root(v);
                // Strip the shared suffix down to the lowest common ancestor.
                let mut shared = 0;
                while shared < pu.len().min(pv.len())
                    && pu[pu.len() - 1 - shared] == pv[pv.len() - 1 - shared]
                {
                    shared += 1;
                }
                let mut cycle: Vec<VertexId> = pu[..=pu.len() - shared].to_vec();
                cycle.extend(pv[..pv.len() - shared].iter().rev());
                Some(cycle)
            }
        }
    }

    fn two_color(&self, within: &VertexSet) -> Coloring {
        const UNSEEN: u8 = 2;
        let mut color = vec![UNSEEN; self.n];
        let mut parent: Vec<VertexId> = (0..self.n).collect();
        let mut queue = VecDeque::new();
        for root in within {
            if color[root] != UNSEEN {
                continue;
            }
            color[root] = 0;
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                for v in &self.adj[u] {
                    if !within.contains(v) {
                        continue;
                    }
                    if color[v] == UNSEEN {
                        color[v] = 1 - color[u];
                        parent[v] = u;
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return Coloring::Conflict { u, v, parent };
                    }
                }
            }
        }
        let mut c = VertexSet::empty(self.n);
        let mut d = VertexSet::empty(self.n);
        for v in within {
            if color[v] == 0 {
                c.insert(v);
            } else {
                d.insert(v);
            }
        }
        Coloring::Proper { c, d }
    }
}

enum Coloring {
    Proper {
        c: VertexSet,
        d: VertexSet,
    },
    /// `u` and `v` are adjacent, equally colored, and both in the BFS forest.
    Conflict {
        u: VertexId,
        v: VertexId,
        parent: Vec<VertexId>,
    },
}

impl InducedSubgraph for UndirectedGraph {
    fn vertex_count(&self) -> usize {
        self.n
    }

    fn induced_edges<'a>(
        &'a self,
        within: &'a VertexSet,
    ) -> impl Iterator<Item = (VertexId, VertexId)> + 'a {
        within.iter().flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u && within.contains(v))
                .map(move |v| (u, v))
        })
    }
}
