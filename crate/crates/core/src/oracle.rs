//! Exact solvers for small instances, used as ground truth by tests and the
//! harness.

use thiserror::Error;

use crate::graph::{CutTerminals, Tournament, UndirectedGraph};
use crate::problems::{InstanceGraph, ProblemInstance, ProblemKind};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{problem} oracle is limited to {cap} vertices, got {n}")]
    TooLarge {
        problem: &'static str,
        n: usize,
        cap: usize,
    },
}

/// Vertex caps per oracle. Requests above a cap are rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimit {
    pub vertex_cover: usize,
    pub fvst: usize,
    pub oct: usize,
    pub cut: usize,
}

impl Default for OracleLimit {
    fn default() -> Self {
        Self {
            vertex_cover: 30,
            fvst: 16,
            oct: 16,
            cut: 12,
        }
    }
}

fn check_cap(problem: &'static str, n: usize, cap: usize) -> Result<(), OracleError> {
    if n > cap {
        Err(OracleError::TooLarge { problem, n, cap })
    } else {
        Ok(())
    }
}

impl OracleLimit {
    pub fn min_vertex_cover(&self, g: &UndirectedGraph) -> Result<(usize, VertexSet), OracleError> {
        check_cap("vertex cover", g.n(), self.vertex_cover)?;
        let s = cover_search(g, g.n(), false).expect("the full vertex set is a cover");
        Ok((s.len(), s))
    }

    pub fn min_fvst(&self, t: &Tournament) -> Result<(usize, VertexSet), OracleError> {
        check_cap("FVST", t.n(), self.fvst)?;
        let s = smallest_subset(t.n(), |rest| t.is_transitive(rest));
        Ok((s.len(), s))
    }

    pub fn min_oct(&self, g: &UndirectedGraph) -> Result<(usize, VertexSet), OracleError> {
        check_cap("OCT", g.n(), self.oct)?;
        let s = smallest_subset(g.n(), |rest| g.bipartition(rest).is_some());
        Ok((s.len(), s))
    }

    /// Smallest separator of `x` and `y` in `G[within]`, or `None` when no
    /// separator exists (adjacent protected terminals).
    pub fn min_vertex_cut(
        &self,
        g: &UndirectedGraph,
        within: &VertexSet,
        x: &VertexSet,
        y: &VertexSet,
        terminals: CutTerminals,
    ) -> Result<Option<VertexSet>, OracleError> {
        check_cap("vertex cut", g.n(), self.cut)?;
        let n = g.n();
        let x = x.intersection(within);
        let y = y.intersection(within);
        let allowed = match terminals {
            CutTerminals::Protected => within.difference(&x.union(&y)),
            CutTerminals::Removable => within.clone(),
        };
        let forbidden = allowed.complement();
        for size in 0..=allowed.len() {
            let found = subsets_of_size(n, size)
                .map(|mask| VertexSet::from_mask(n, mask))
                .filter(|c| c.is_disjoint(&forbidden))
                .find(|c| separates(g, within, &x, &y, c));
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }

    /// Minimum solution size for any problem instance (the `k` field is ignored).
    pub fn minimum(&self, inst: &ProblemInstance) -> Result<(usize, VertexSet), OracleError> {
        match (inst.kind(), inst.graph()) {
            (ProblemKind::VertexCover, InstanceGraph::Undirected(g)) => self.min_vertex_cover(g),
            (ProblemKind::Oct, InstanceGraph::Undirected(g)) => self.min_oct(g),
            (ProblemKind::Fvst, InstanceGraph::Tournament(t)) => self.min_fvst(t),
            _ => unreachable!("problem instances pair kinds with matching graphs"),
        }
    }
}

pub fn min_vertex_cover_exact(g: &UndirectedGraph) -> Result<(usize, VertexSet), OracleError> {
    OracleLimit::default().min_vertex_cover(g)
}

pub fn min_fvst_exact(t: &Tournament) -> Result<(usize, VertexSet), OracleError> {
    OracleLimit::default().min_fvst(t)
}

pub fn min_oct_exact(g: &UndirectedGraph) -> Result<(usize, VertexSet), OracleError> {
    OracleLimit::default().min_oct(g)
}

pub fn min_vertex_cut_exact(
    g: &UndirectedGraph,
    within: &VertexSet,
    x: &VertexSet,
    y: &VertexSet,
    terminals: CutTerminals,
) -> Result<Option<VertexSet>, OracleError> {
    OracleLimit::default().min_vertex_cut(g, within, x, y, terminals)
}

/// Some vertex cover of size at most `k`, if one exists. No vertex cap: the
/// search tree has at most `2^k` leaves.
pub fn vertex_cover_at_most(g: &UndirectedGraph, k: usize) -> Option<VertexSet> {
    cover_search(g, k, true)
}

/// Minimum vertex cover of a bipartite graph via König's theorem; `None` if
/// `g` is not bipartite. Polynomial, so no vertex cap applies.
pub fn min_vertex_cover_bipartite(g: &UndirectedGraph) -> Option<(usize, VertexSet)> {
    let n = g.n();
    let (left, _) = g.bipartition(&VertexSet::full(n))?;
    let mut mate = vec![usize::MAX; n];

    fn augment(g: &UndirectedGraph, u: usize, seen: &mut [bool], mate: &mut [usize]) -> bool {
        for w in g.neighbors(u) {
            if seen[w] {
                continue;
            }
            seen[w] = true;
            if mate[w] == usize::MAX || augment(g, mate[w], seen, mate) {
                mate[w] = u;
                mate[u] = w;
                return true;
            }
        }
        false
    }

    for u in &left {
        let mut seen = vec![false; n];
        augment(g, u, &mut seen, &mut mate);
    }

    // Alternating reachability from unmatched left vertices.
    let mut reached = VertexSet::empty(n);
    let mut stack: Vec<usize> = left.iter().filter(|&u| mate[u] == usize::MAX).collect();
    for &u in &stack {
        reached.insert(u);
    }
    while let Some(u) = stack.pop() {
        for w in g.neighbors(u) {
            if reached.insert(w) {
                let m = mate[w];
                if m != usize::MAX && reached.insert(m) {
                    stack.push(m);
                }
            }
        }
    }
    let cover = left.difference(&reached).union(&reached.difference(&left));
    debug_assert!(g.is_vertex_cover(&cover, &VertexSet::full(n)));
    Some((cover.len(), cover))
}

/// Branch and bound over covers of size at most `limit`. Branches on a
/// maximum-degree vertex `u`: take `u`, or leave it out and take all of its
/// remaining neighbours. A greedy matching gives the lower bound.
fn cover_search(g: &UndirectedGraph, limit: usize, first: bool) -> Option<VertexSet> {
    struct Search<'a> {
        g: &'a UndirectedGraph,
        first: bool,
        /// Solutions must be strictly smaller than this.
        bound: usize,
        best: Option<VertexSet>,
        chosen: VertexSet,
    }

    impl Search<'_> {
        fn matching_size(&self, active: &VertexSet) -> usize {
            let mut free = active.clone();
            let mut size = 0;
            for v in active {
                if !free.contains(v) {
                    continue;
                }
                free.remove(v);
                if let Some(w) = self.g.neighbors(v).intersection(&free).first() {
                    free.remove(w);
                    size += 1;
                }
            }
            size
        }

        fn run(&mut self, active: VertexSet) {
            if self.first && self.best.is_some() {
                return;
            }
            let used = self.chosen.len();
            let pick = active
                .iter()
                .map(|v| (self.g.neighbors(v).intersection_len(&active), v))
                .max_by_key(|&(d, v)| (d, std::cmp::Reverse(v)));
            let Some((degree, u)) = pick.filter(|&(d, _)| d > 0) else {
                if used < self.bound {
                    self.bound = used;
                    self.best = Some(self.chosen.clone());
                }
                return;
            };
            if used + self.matching_size(&active) >= self.bound {
                return;
            }

            let mut rest = active.clone();
            rest.remove(u);
            self.chosen.insert(u);
            self.run(rest.clone());
            self.chosen.remove(u);

            if used + degree < self.bound {
                let nbrs = self.g.neighbors(u).intersection(&rest);
                self.chosen.union_with(&nbrs);
                rest.difference_with(&nbrs);
                self.run(rest);
                self.chosen.difference_with(&nbrs);
            }
        }
    }

    let n = g.n();
    let mut search = Search {
        g,
        first,
        bound: limit + 1,
        best: None,
        chosen: VertexSet::empty(n),
    };
    search.run(VertexSet::full(n));
    search.best
}

/// Smallest `S` (first in ascending size, then ascending mask order) with
/// `accept(V \ S)`.
fn smallest_subset(n: usize, accept: impl Fn(&VertexSet) -> bool) -> VertexSet {
    assert!(n < 64, "subset enumeration needs n < 64");
    for size in 0..=n {
        for mask in subsets_of_size(n, size) {
            let s = VertexSet::from_mask(n, mask);
            if accept(&s.complement()) {
                return s;
            }
        }
    }
    unreachable!("removing every vertex always leaves a solved instance")
}

/// All `n`-bit masks with `size` bits set, in ascending order.
fn subsets_of_size(n: usize, size: usize) -> impl Iterator<Item = u64> {
    assert!(n < 64);
    let end = 1u64 << n;
    let start = if size == 0 { 0 } else { (1u64 << size) - 1 };
    let mut next = (size <= n).then_some(start);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack: next larger integer with the same popcount.
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let succ = (((r ^ cur) >> 2) / c) | r;
            (succ < end).then_some(succ)
        };
        Some(cur)
    })
}

fn separates(
    g: &UndirectedGraph,
    within: &VertexSet,
    x: &VertexSet,
    y: &VertexSet,
    cut: &VertexSet,
) -> bool {
    let alive = within.difference(cut);
    let mut reach = x.intersection(&alive);
    let mut frontier = reach.clone();
    while !frontier.is_empty() {
        let grown = g.neighborhood(&frontier, &alive);
        frontier = grown.difference(&reach);
        reach.union_with(&frontier);
    }
    reach.is_disjoint(y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::min_vertex_cut;
    use crate::testutil::{gnp, random_subset, random_tournament};

    fn cycle(n: usize, offset: usize) -> Vec<(usize, usize)> {
        (0..n).map(|i| (offset + i, offset + (i + 1) % n)).collect()
    }

    fn brute_min(n: usize, ok: impl Fn(&VertexSet) -> bool) -> usize {
        (0u64..1 << n)
            .rev()
            .map(|mask| VertexSet::from_mask(n, mask))
            .filter(|s| ok(&s.complement()))
            .map(|s| s.len())
            .min()
            .unwrap()
    }

    #[test]
    fn subset_enumeration_counts() {
        for n in 0..10 {
            for size in 0..=n {
                let all: Vec<u64> = subsets_of_size(n, size).collect();
                let want = (0u64..1 << n)
                    .filter(|m| m.count_ones() as usize == size)
                    .count();
                assert_eq!(all.len(), want, "n={n} size={size}");
                assert!(all.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }

    #[test]
    fn vertex_cover_examples() {
        let c5 = UndirectedGraph::new(5, cycle(5, 0)).unwrap();
        assert_eq!(min_vertex_cover_exact(&c5).unwrap().0, 3);
        let k37 =
            UndirectedGraph::new(10, (0..3).flat_map(|a| (3..10).map(move |b| (a, b)))).unwrap();
        let (size, w) = min_vertex_cover_exact(&k37).unwrap();
        assert_eq!(size, 3);
        assert_eq!(w.to_vec(), vec![0, 1, 2]);
        assert_eq!(
            min_vertex_cover_exact(&UndirectedGraph::edgeless(4))
                .unwrap()
                .0,
            0
        );
    }

    #[test]
    fn vertex_cover_matches_enumeration() {
        for seed in 0..150 {
            let n = 4 + (seed as usize % 9);
            let g = gnp(n, 0.2 + 0.05 * (seed % 10) as f64, seed);
            let (size, w) = min_vertex_cover_exact(&g).unwrap();
            assert!(g.is_vertex_cover(&w, &VertexSet::full(n)));
            assert_eq!(w.len(), size);
            let full = VertexSet::full(n);
            let want = (0u64..1 << n)
                .map(|m| VertexSet::from_mask(n, m))
                .filter(|c| g.is_vertex_cover(c, &full))
                .map(|c| c.len())
                .min()
                .unwrap();
            assert_eq!(size, want, "seed {seed}");
            assert!(vertex_cover_at_most(&g, size).is_some());
            if size > 0 {
                assert!(vertex_cover_at_most(&g, size - 1).is_none());
            }
        }
    }

    #[test]
    fn vertex_cover_cap_rejects() {
        let g = UndirectedGraph::edgeless(31);
        assert_eq!(
            min_vertex_cover_exact(&g),
            Err(OracleError::TooLarge {
                problem: "vertex cover",
                n: 31,
                cap: 30
            })
        );
        assert!(vertex_cover_at_most(&g, 0).is_some());
    }

    #[test]
    fn fvst_examples() {
        let t = Tournament::transitive(&[3, 1, 0, 2]).unwrap();
        assert_eq!(min_fvst_exact(&t).unwrap().0, 0);
        let c3 = Tournament::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(min_fvst_exact(&c3).unwrap().0, 1);
        assert!(min_fvst_exact(&random_tournament(17, 0)).is_err());
    }

    #[test]
    fn fvst_matches_double_enumeration() {
        for seed in 0..60 {
            let n = 3 + seed as usize % 6;
            let t = random_tournament(n, seed);
            let (size, w) = min_fvst_exact(&t).unwrap();
            assert!(t.is_transitive(&w.complement()));
            assert_eq!(
                size,
                brute_min(n, |rest| t.directed_triangle(rest).is_none()),
                "seed {seed}"
            );
        }
    }

    #[test]
    fn oct_examples() {
        let c4 = UndirectedGraph::new(4, cycle(4, 0)).unwrap();
        assert_eq!(min_oct_exact(&c4).unwrap().0, 0);
        let c5 = UndirectedGraph::new(5, cycle(5, 0)).unwrap();
        assert_eq!(min_oct_exact(&c5).unwrap().0, 1);
        let mut two = cycle(5, 0);
        two.extend(cycle(5, 5));
        let two = UndirectedGraph::new(10, two).unwrap();
        let (size, w) = min_oct_exact(&two).unwrap();
        assert_eq!(size, 2);
        assert!(two.bipartition(&w.complement()).is_some());
    }

    #[test]
    fn oct_matches_enumeration() {
        for seed in 0..60 {
            let n = 3 + seed as usize % 7;
            let g = gnp(n, 0.45, seed);
            let (size, w) = min_oct_exact(&g).unwrap();
            assert!(g.odd_cycle(&w.complement()).is_none());
            assert_eq!(size, brute_min(n, |rest| g.odd_cycle(rest).is_none()));
        }
    }

    #[test]
    fn cut_oracle_agrees_with_flow() {
        for seed in 0..80 {
            let g = gnp(9, 0.3, seed);
            let within = random_subset(9, 0.9, seed + 10);
            let x = random_subset(9, 0.25, seed + 20).intersection(&within);
            let y = random_subset(9, 0.25, seed + 30)
                .intersection(&within)
                .difference(&x);
            for mode in [CutTerminals::Protected, CutTerminals::Removable] {
                let exact = min_vertex_cut_exact(&g, &within, &x, &y, mode).unwrap();
                let flow = min_vertex_cut(&g, &within, &x, &y, 9, mode).unwrap();
                assert_eq!(
                    exact.map(|c| c.len()),
                    flow.map(|c| c.len()),
                    "seed {seed} {mode:?}"
                );
            }
        }
        let g = UndirectedGraph::edgeless(13);
        let all = VertexSet::full(13);
        assert!(min_vertex_cut_exact(&g, &all, &all, &all, CutTerminals::Removable).is_err());
    }
}
