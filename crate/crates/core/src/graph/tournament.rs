use super::{check_vertex, GraphError, InducedSubgraph};
use crate::vertex_set::{VertexId, VertexSet};

/// A complete graph with every edge oriented.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tournament {
    n: usize,
    out: Vec<VertexSet>,
    inn: Vec<VertexSet>,
}

impl Tournament {
    /// Builds a tournament from its arcs `u -> v`. Every unordered pair must
    /// appear exactly once.
    pub fn new<I>(n: usize, arcs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut out = vec![VertexSet::empty(n); n];
        let mut inn = vec![VertexSet::empty(n); n];
        for (u, v) in arcs {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if out[u].contains(v) || out[v].contains(u) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            out[u].insert(v);
            inn[v].insert(u);
        }
        for u in 0..n {
            for v in u + 1..n {
                if !out[u].contains(v) && !out[v].contains(u) {
                    return Err(GraphError::MissingOrientation(u, v));
                }
            }
        }
        Ok(Self { n, out, inn })
    }

    /// Transitive tournament in which `order[i] -> order[j]` for all `i < j`.
    pub fn transitive(order: &[VertexId]) -> Result<Self, GraphError> {
        let n = order.len();
        let arcs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (order[i], order[j])));
        Self::new(n, arcs)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of arcs, `n(n-1)/2`.
    pub fn m(&self) -> usize {
        self.n * self.n.saturating_sub(1) / 2
    }

    /// Whether the arc is oriented `u -> v`.
    #[inline]
    pub fn beats(&self, u: VertexId, v: VertexId) -> bool {
        self.out[u].contains(v)
    }

    pub fn out_neighbors(&self, v: VertexId) -> &VertexSet {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: VertexId) -> &VertexSet {
        &self.inn[v]
    }

    /// All arcs in lexicographic order of their endpoint pair.
    pub fn arcs(&self) -> Vec<(VertexId, VertexId)> {
        let all = VertexSet::full(self.n);
        self.induced_edges(&all).collect()
    }

    /// Whether `T[within]` contains no directed triangle.
    ///
    /// A tournament is transitive exactly when its score sequence (in-degrees
    /// inside the subtournament) is a permutation of `0..len`.
    pub fn is_transitive(&self, within: &VertexSet) -> bool {
        let size = within.len();
        let mut seen = vec![false; size];
        for v in within {
            let score = self.inn[v].intersection_len(within);
            if seen[score] {
                return false;
            }
            seen[score] = true;
        }
        true
    }

    /// The lexicographically first directed triangle `u -> v -> w -> u` of
    /// `T[within]` with `u` its smallest vertex.
    pub fn directed_triangle(&self, within: &VertexSet) -> Option<(VertexId, VertexId, VertexId)> {
        for u in within {
            for v in &self.out[u] {
                if !within.contains(v) {
                    continue;
                }
                let closing = self.out[v].intersection(&self.inn[u]).intersection(within);
                if let Some(w) = closing.first() {
                    let (a, b, c) = rotate_min(u, v, w);
                    return Some((a, b, c));
                }
            }
        }
        None
    }

    /// The unique sequence over `within \ feedback` in which every arc points
    /// forward. Fails if the remaining subtournament is not transitive.
    pub fn sort(
        &self,
        within: &VertexSet,
        feedback: &VertexSet,
    ) -> Result<Vec<VertexId>, GraphError> {
        let rest = within.difference(feedback);
        let mut slots: Vec<Option<VertexId>> = vec![None; rest.len()];
        for v in &rest {
            let score = self.inn[v].intersection_len(&rest);
            match &mut slots[score] {
                slot @ None => *slot = Some(v),
                Some(_) => return Err(GraphError::NotTransitive),
            }
        }
        Ok(slots
            .into_iter()
            .map(|s| s.expect("scores are a permutation"))
            .collect())
    }

    /// Lowest `v ∈ within \ (r ∪ excluded)` lying on a directed triangle with
    /// two vertices of `r`.
    pub fn find_rr_triangle(
        &self,
        within: &VertexSet,
        r: &VertexSet,
        excluded: &VertexSet,
    ) -> Option<VertexId> {
        let r = r.intersection(within);
        let candidates = within.difference(&r).difference(excluded);
        candidates.iter().find(|&v| {
            // Need u -> v -> w -> u with u, w in r.
            let preds = self.inn[v].intersection(&r);
            if preds.is_empty() {
                return false;
            }
            self.out[v]
                .intersection(&r)
                .iter()
                .any(|w| !self.out[w].is_disjoint(&preds))
        })
    }
}

fn rotate_min(u: VertexId, v: VertexId, w: VertexId) -> (VertexId, VertexId, VertexId) {
    if u <= v && u <= w {
        (u, v, w)
    } else if v <= w {
        (v, w, u)
    } else {
        (w, u, v)
    }
}

impl InducedSubgraph for Tournament {
    fn vertex_count(&self) -> usize {
        self.n
    }

    fn induced_edges<'a>(
        &'a self,
        within: &'a VertexSet,
    ) -> impl Iterator<Item = (VertexId, VertexId)> + 'a {
        within.iter().flat_map(move |u| {
            within.iter().filter(move |&v| v > u).map(move |v| {
                if self.beats(u, v) {
                    (u, v)
                } else {
                    (v, u)
                }
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{random_permutation, random_subset, random_tournament};

    fn three_cycle() -> Tournament {
        Tournament::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    fn has_triangle_brute(t: &Tournament, within: &VertexSet) -> bool {
        let vs = within.to_vec();
        for &a in &vs {
            for &b in &vs {
                for &c in &vs {
                    if t.beats(a, b) && t.beats(b, c) && t.beats(c, a) {
                        return true;
                    }
                }
            }
        }
        false
    }

    fn transitive_brute(t: &Tournament, within: &VertexSet) -> bool {
        let vs = within.to_vec();
        vs.iter().all(|&a| {
            vs.iter().all(|&b| {
                vs.iter()
                    .all(|&c| !(t.beats(a, b) && t.beats(b, c)) || t.beats(a, c))
            })
        })
    }

    #[test]
    fn rejects_incomplete_or_doubled_orientations() {
        assert_eq!(
            Tournament::new(3, [(0, 1), (1, 2)]),
            Err(GraphError::MissingOrientation(0, 2))
        );
        assert_eq!(
            Tournament::new(2, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
    }

    #[test]
    fn transitive_eight_vertex_tournament() {
        let t = Tournament::transitive(&(0..8).collect::<Vec<_>>()).unwrap();
        assert!(t.is_transitive(&VertexSet::full(8)));
        assert_eq!(t.m(), 28);
        assert!(!three_cycle().is_transitive(&VertexSet::full(3)));
    }

    #[test]
    fn transitivity_matches_triple_enumeration() {
        for n in 1..=8 {
            for seed in 0..40 {
                let t = random_tournament(n, seed * 31 + n as u64);
                let within = random_subset(n, 0.8, seed);
                let fast = t.is_transitive(&within);
                assert_eq!(fast, transitive_brute(&t, &within));
                assert_eq!(fast, !has_triangle_brute(&t, &within));
                assert_eq!(fast, t.directed_triangle(&within).is_none());
            }
        }
    }

    #[test]
    fn transitivity_iff_no_rr_triangle_on_full_r() {
        // With r = V' the candidate set is empty, so probe with r = V' \ {v}.
        for seed in 0..100 {
            let t = random_tournament(7, seed);
            let within = random_subset(7, 0.9, seed + 1);
            let via_rr = within.iter().all(|v| {
                let mut r = within.clone();
                r.remove(v);
                t.find_rr_triangle(&within, &r, &VertexSet::empty(7))
                    .is_none()
            });
            assert_eq!(t.is_transitive(&within), via_rr);
        }
    }

    #[test]
    fn sort_small_cases() {
        let t = Tournament::new(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
        let all = VertexSet::full(3);
        assert_eq!(t.sort(&all, &VertexSet::empty(3)).unwrap(), vec![0, 1, 2]);
        let single = VertexSet::from_vertices(3, [2]);
        assert_eq!(t.sort(&single, &VertexSet::empty(3)).unwrap(), vec![2]);
        assert_eq!(
            three_cycle().sort(&all, &VertexSet::empty(3)),
            Err(GraphError::NotTransitive)
        );
        let fb = VertexSet::from_vertices(3, [1]);
        assert_eq!(three_cycle().sort(&all, &fb).unwrap(), vec![2, 0]);
    }

    #[test]
    fn sort_recovers_generating_permutation() {
        for n in 1..=10 {
            for seed in 0..20 {
                let order = random_permutation(n, seed);
                let t = Tournament::transitive(&order).unwrap();
                let sorted = t.sort(&VertexSet::full(n), &VertexSet::empty(n)).unwrap();
                assert_eq!(sorted, order);
                for i in 0..n {
                    for j in i + 1..n {
                        assert!(t.beats(sorted[i], sorted[j]));
                    }
                }
            }
        }
    }

    #[test]
    fn rr_triangle_small_cases() {
        // 0 -> 1 -> 2 -> 0, R = {0, 2}
        let t = three_cycle();
        let all = VertexSet::full(3);
        let r = VertexSet::from_vertices(3, [0, 2]);
        assert_eq!(t.find_rr_triangle(&all, &r, &VertexSet::empty(3)), Some(1));
        let excl = VertexSet::from_vertices(3, [1]);
        assert_eq!(t.find_rr_triangle(&all, &r, &excl), None);

        let tr = Tournament::transitive(&[3, 1, 0, 4, 2]).unwrap();
        let all5 = VertexSet::full(5);
        let r5 = VertexSet::from_vertices(5, [0, 1, 2]);
        assert_eq!(tr.find_rr_triangle(&all5, &r5, &VertexSet::empty(5)), None);
    }

    #[test]
    fn rr_triangle_matches_enumeration() {
        for n in 3..=9 {
            for seed in 0..30 {
                let t = random_tournament(n, seed + 1000 * n as u64);
                let within = random_subset(n, 0.85, seed);
                let r = random_subset(n, 0.4, seed + 7).intersection(&within);
                let excluded = random_subset(n, 0.2, seed + 9).difference(&r);
                let brute = within
                    .iter()
                    .filter(|v| !r.contains(*v) && !excluded.contains(*v))
                    .find(|&v| {
                        r.iter().any(|u| {
                            r.iter()
                                .any(|w| t.beats(u, v) && t.beats(v, w) && t.beats(w, u))
                        })
                    });
                assert_eq!(t.find_rr_triangle(&within, &r, &excluded), brute);
            }
        }
    }

    #[test]
    fn induced_arcs_keep_orientation() {
        let t = three_cycle();
        let all = VertexSet::full(3);
        assert_eq!(
            t.induced_edges(&all).collect::<Vec<_>>(),
            vec![(0, 1), (2, 0), (1, 2)]
        );
    }
}
