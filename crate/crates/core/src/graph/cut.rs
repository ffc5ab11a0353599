use std::collections::VecDeque;

use super::{GraphError, UndirectedGraph};
use crate::vertex_set::VertexSet;

const INF: u32 = u32::MAX / 4;

/// Whether terminal vertices themselves may belong to a separator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CutTerminals {
    /// The cut must avoid `X ∪ Y`; adjacent terminals make separation impossible.
    Protected,
    /// Terminals may be cut like any other vertex.
    Removable,
}

/// Minimum vertex set whose removal leaves no path from `x` to `y` in
/// `G[within]`, provided one of size at most `bound` exists.
///
/// Unit-capacity Ford–Fulkerson on the vertex-split network (`v_in -> v_out`
/// carries the vertex). At most `bound + 1` augmenting paths are searched, so
/// the cost is `O(bound · (n + m))`.
pub fn min_vertex_cut(
    g: &UndirectedGraph,
    within: &VertexSet,
    x: &VertexSet,
    y: &VertexSet,
    bound: usize,
    terminals: CutTerminals,
) -> Result<Option<VertexSet>, GraphError> {
    let x = x.intersection(within);
    let y = y.intersection(within);
    if let Some(v) = x.intersection(&y).first() {
        return Err(GraphError::TerminalOverlap(v));
    }
    let n = g.n();
    let mut net = Network::new(2 * n + 2);
    let (source, sink) = (2 * n, 2 * n + 1);
    for v in within {
        let terminal = x.contains(v) || y.contains(v);
        let cap = match terminals {
            CutTerminals::Protected if terminal => INF,
            _ => 1,
        };
        net.add_edge(2 * v, 2 * v + 1, cap);
    }
    for (u, v) in g.edges() {
        if within.contains(*u) && within.contains(*v) {
            net.add_edge(2 * u + 1, 2 * v, INF);
            net.add_edge(2 * v + 1, 2 * u, INF);
        }
    }
    for v in &x {
        net.add_edge(source, 2 * v, INF);
    }
    for v in &y {
        net.add_edge(2 * v + 1, sink, INF);
    }

    let mut flow = 0usize;
    while let Some(pushed) = net.augment(source, sink) {
        if pushed >= INF {
            return Ok(None);
        }
        flow += pushed as usize;
        if flow > bound {
            return Ok(None);
        }
    }

    let reach = net.reachable(source);
    let cut = VertexSet::from_vertices(
        n,
        within.iter().filter(|&v| reach[2 * v] && !reach[2 * v + 1]),
    );
    debug_assert_eq!(cut.len(), flow);
    Ok(Some(cut))
}

struct Arc {
    to: usize,
    residual: u32,
}

struct Network {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
}

impl Network {
    fn new(nodes: usize) -> Self {
        Self {
            arcs: Vec::new(),
            out: vec![Vec::new(); nodes],
        }
    }

    fn add_edge(&mut self, from: usize, to: usize, cap: u32) {
        self.out[from].push(self.arcs.len());
        self.arcs.push(Arc { to, residual: cap });
        self.out[to].push(self.arcs.len());
        self.arcs.push(Arc {
            to: from,
            residual: 0,
        });
    }

    /// Pushes flow along one shortest augmenting path; returns the amount.
    fn augment(&mut self, source: usize, sink: usize) -> Option<u32> {
        let mut via = vec![usize::MAX; self.out.len()];
        let mut queue = VecDeque::from([source]);
        let mut seen = vec![false; self.out.len()];
        seen[source] = true;
        while let Some(u) = queue.pop_front() {
            if u == sink {
                break;
            }
            for &a in &self.out[u] {
                let arc = &self.arcs[a];
                if arc.residual > 0 && !seen[arc.to] {
                    seen[arc.to] = true;
                    via[arc.to] = a;
                    queue.push_back(arc.to);
                }
            }
        }
        if !seen[sink] {
            return None;
        }
        let mut bottleneck = INF;
        let mut v = sink;
        while v != source {
            let a = via[v];
            bottleneck = bottleneck.min(self.arcs[a].residual);
            v = self.arcs[a ^ 1].to;
        }
        let mut v = sink;
        while v != source {
            let a = via[v];
            self.arcs[a].residual -= bottleneck;
            self.arcs[a ^ 1].residual += bottleneck;
            v = self.arcs[a ^ 1].to;
        }
        Some(bottleneck)
    }

    fn reachable(&self, source: usize) -> Vec<bool> {
        let mut seen = vec![false; self.out.len()];
        seen[source] = true;
        let mut stack = vec![source];
        while let Some(u) = stack.pop() {
            for &a in &self.out[u] {
                let arc = &self.arcs[a];
                if arc.residual > 0 && !seen[arc.to] {
                    seen[arc.to] = true;
                    stack.push(arc.to);
                }
            }
        }
        seen
    }
}
