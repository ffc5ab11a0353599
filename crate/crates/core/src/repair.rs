//! Focused jump-and-repair operators.
//!
//! Each operator receives a point `(x_S, x_V)` that solves `G[x_V]` but may
//! hold more than `k` vertices. The *jump* keeps a random subset `S' ⊆ x_S`;
//! if `S'` still solves `G[x_V]` it is returned as is, otherwise a
//! problem-specific *repair* extends `S'` (never by vertices of `R = x_S \ S'`)
//! until it solves `G[x_V]` again. The returned set always solves `G[x_V]`.
//!
//! The random choices of every operator (which members are kept, plus the
//! order guess for FVST or the side guess for OCT) are separated from the
//! deterministic repair, so callers can enumerate choices exhaustively; see
//! [`compress`].

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{
    longest_common_subsequence, min_vertex_cut, CutTerminals, GraphError, Tournament,
    UndirectedGraph,
};
use crate::problems::{InstanceGraph, ProblemInstance};
use crate::vertex_set::{VertexId, VertexSet};

/// Retention probability for the VC and FVST jumps.
pub const KEEP_PROBABILITY: f64 = 0.5;
/// Retention probability for the OCT jump.
pub const OCT_KEEP_PROBABILITY: f64 = 1.0 / 3.0;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JumpOutcome {
    pub new_x_s: VertexSet,
    /// Whether `S'` alone failed and the repair branch ran.
    pub repaired: bool,
    /// The subset `S'` kept by the jump.
    pub jump_kept: VertexSet,
}

/// Dispatches to the operator matching the instance's problem kind.
pub fn jump_and_repair<R: Rng + ?Sized>(
    inst: &ProblemInstance,
    x_s: &VertexSet,
    x_v: &VertexSet,
    rng: &mut R,
) -> JumpOutcome {
    match (inst.kind(), inst.graph()) {
        (crate::ProblemKind::VertexCover, InstanceGraph::Undirected(g)) => {
            jump_and_repair_vc(g, x_s, x_v, rng)
        }
        (crate::ProblemKind::Oct, InstanceGraph::Undirected(g)) => {
            jump_and_repair_oct(g, inst.k(), x_s, x_v, rng)
        }
        (_, InstanceGraph::Tournament(t)) => jump_and_repair_fvst(t, x_s, x_v, rng),
        _ => unreachable!("instance kind and graph are validated at construction"),
    }
}

fn jump<R: Rng + ?Sized>(x_s: &VertexSet, keep: f64, rng: &mut R) -> VertexSet {
    VertexSet::from_vertices(x_s.universe(), x_s.iter().filter(|_| rng.random_bool(keep)))
}

pub fn jump_and_repair_vc<R: Rng + ?Sized>(
    g: &UndirectedGraph,
    x_s: &VertexSet,
    x_v: &VertexSet,
    rng: &mut R,
) -> JumpOutcome {
    let kept = jump(x_s, KEEP_PROBABILITY, rng);
    let (new_x_s, repaired) = repair_vc(g, x_s, &kept, x_v);
    JumpOutcome {
        new_x_s,
        repaired,
        jump_kept: kept,
    }
}

/// VC repair for a fixed jump: every uncovered edge of `G[x_V]` is covered by
/// adding the neighborhoods `N(v) ∩ x_V` of all dropped vertices `v`.
pub fn repair_vc(
    g: &UndirectedGraph,
    x_s: &VertexSet,
    kept: &VertexSet,
    x_v: &VertexSet,
) -> (VertexSet, bool) {
    if g.is_vertex_cover(kept, x_v) {
        return (kept.clone(), false);
    }
    let dropped = x_s.difference(kept);
    let mut out = g.neighborhood(&dropped, x_v);
    out.union_with(kept);
    (out, true)
}

pub fn jump_and_repair_fvst<R: Rng + ?Sized>(
    t: &Tournament,
    x_s: &VertexSet,
    x_v: &VertexSet,
    rng: &mut R,
) -> JumpOutcome {
    let kept = jump(x_s, KEEP_PROBABILITY, rng);
    if t.is_transitive(&x_v.difference(&kept)) {
        return JumpOutcome {
            new_x_s: kept.clone(),
            repaired: false,
            jump_kept: kept,
        };
    }
    // The order guess is only needed once the jump has broken transitivity.
    let mut order = x_s.difference(&kept).intersection(x_v).to_vec();
    order.shuffle(rng);
    let (new_x_s, repaired) = repair_fvst(t, x_s, &kept, x_v, &order);
    JumpOutcome {
        new_x_s,
        repaired,
        jump_kept: kept,
    }
}

/// FVST repair for a fixed jump `kept` and order guess `order` (a permutation
/// of the dropped vertices inside `x_V`).
///
/// Vertices outside `x_S` that close a directed triangle with two dropped
/// vertices are forced into the solution. The rest of `G[x_V]` is then sorted
/// twice, once topologically and once by the first dropped vertex (in guess
/// order) each vertex beats; everything off a longest common subsequence of
/// the two orders joins the solution. A wrong guess can leave a cycle through
/// the dropped vertices, in which case the parent set `x_S` is returned.
pub fn repair_fvst(
    t: &Tournament,
    x_s: &VertexSet,
    kept: &VertexSet,
    x_v: &VertexSet,
    order: &[VertexId],
) -> (VertexSet, bool) {
    let n = t.n();
    if t.is_transitive(&x_v.difference(kept)) {
        return (kept.clone(), false);
    }
    let dropped = VertexSet::from_vertices(n, order.iter().copied());

    let mut forced = VertexSet::empty(n);
    let mut excluded = x_s.clone();
    while let Some(v) = t.find_rr_triangle(x_v, &dropped, &excluded) {
        forced.insert(v);
        excluded.insert(v);
    }

    let base = x_s.union(&forced);
    let sigma = match t.sort(x_v, &base) {
        Ok(sigma) => sigma,
        // Parent was not a feedback vertex set of G[x_V].
        Err(_) => return (x_s.clone(), true),
    };
    let label = |v: VertexId| {
        order
            .iter()
            .position(|&r| t.beats(v, r))
            .map_or(order.len() + 1, |i| i + 1)
    };
    let mut by_label = sigma.clone();
    by_label.sort_by_key(|&v| label(v));
    let common = longest_common_subsequence(&sigma, &by_label, n);

    let mut out = kept.union(&forced);
    for &v in &sigma {
        if !common.contains(v) {
            out.insert(v);
        }
    }
    if t.is_transitive(&x_v.difference(&out)) {
        (out, true)
    } else {
        (x_s.clone(), true)
    }
}

pub fn jump_and_repair_oct<R: Rng + ?Sized>(
    g: &UndirectedGraph,
    k: usize,
    x_s: &VertexSet,
    x_v: &VertexSet,
    rng: &mut R,
) -> JumpOutcome {
    let kept = jump(x_s, OCT_KEEP_PROBABILITY, rng);
    if g.bipartition(&x_v.difference(&kept)).is_some() {
        return JumpOutcome {
            new_x_s: kept.clone(),
            repaired: false,
            jump_kept: kept,
        };
    }
    let dropped = x_s.difference(&kept);
    let side_a = VertexSet::from_vertices(g.n(), dropped.iter().filter(|_| rng.random_bool(0.5)));
    let (new_x_s, repaired) = repair_oct(g, k, x_s, &kept, x_v, &side_a);
    JumpOutcome {
        new_x_s,
        repaired,
        jump_kept: kept,
    }
}

/// OCT repair for a fixed jump `kept` and side guess: dropped vertices in
/// `side_a` form `A`, the remaining dropped vertices form `B`.
///
/// Returns `kept ∪ T` for a minimum separator `T` of size at most `k`, or the
/// parent `x_S` when no such separator exists or the guess was inconsistent.
pub fn repair_oct(
    g: &UndirectedGraph,
    k: usize,
    x_s: &VertexSet,
    kept: &VertexSet,
    x_v: &VertexSet,
    side_a: &VertexSet,
) -> (VertexSet, bool) {
    if g.bipartition(&x_v.difference(kept)).is_some() {
        return (kept.clone(), false);
    }
    let dropped = x_s.difference(kept);
    let a = dropped.intersection(side_a);
    let b = dropped.difference(side_a);
    match oct_cut_repair(g, x_v, x_s, &dropped, &a, &b, k) {
        Ok(Some(cut)) => {
            let out = kept.union(&cut);
            if g.bipartition(&x_v.difference(&out)).is_some() {
                (out, true)
            } else {
                (x_s.clone(), true)
            }
        }
        Ok(None) | Err(_) => (x_s.clone(), true),
    }
}

/// Separator that repairs the odd cycles exposed by returning `r = a ⊎ b`
/// from `s` to the graph `G[x_V]`.
///
/// With `(C, D)` the 2-coloring of `G[x_V \ s]`, finds a minimum vertex set of
/// `G[x_V \ s]` separating `(C ∩ N(A)) ∪ (D ∩ N(B))` from
/// `(C ∩ N(B)) ∪ (D ∩ N(A))`. A vertex in both terminal sets lies on an odd
/// cycle by itself and is always part of the result. Terminals may be cut.
pub fn oct_cut_repair(
    g: &UndirectedGraph,
    x_v: &VertexSet,
    s: &VertexSet,
    r: &VertexSet,
    a: &VertexSet,
    b: &VertexSet,
    bound: usize,
) -> Result<Option<VertexSet>, GraphError> {
    debug_assert!(a.is_disjoint(b) && a.union(b) == *r && r.is_subset(s));
    let rest = x_v.difference(s);
    let (c, d) = g.bipartition(&rest).ok_or(GraphError::NotBipartite)?;
    let near_a = g.neighborhood(&a.intersection(x_v), &rest);
    let near_b = g.neighborhood(&b.intersection(x_v), &rest);
    let mut x = c.intersection(&near_a).union(&d.intersection(&near_b));
    let mut y = c.intersection(&near_b).union(&d.intersection(&near_a));
    let forced = x.intersection(&y);
    if forced.len() > bound {
        return Ok(None);
    }
    x.difference_with(&forced);
    y.difference_with(&forced);
    let cut = min_vertex_cut(
        g,
        &rest.difference(&forced),
        &x,
        &y,
        bound - forced.len(),
        CutTerminals::Removable,
    )?;
    Ok(cut.map(|c| c.union(&forced)))
}

/// Result of exhaustively trying every jump choice on one parent set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Compression {
    /// First choice (in enumeration order) whose result has at most `k`
    /// vertices and solves `G[x_V]`.
    pub solution: Option<VertexSet>,
    /// Number of repair evaluations performed.
    pub evaluations: u64,
}

/// Enumerates all random choices of the instance's jump-and-repair operator on
/// parent `x_s` over `G[x_v]` and returns the first size-`≤ k` solution.
///
/// Keep-sets are visited in ascending bitmask order over the members of
/// `x_s`; for each, FVST then tries every order of the dropped vertices
/// (lexicographic) and OCT every side assignment (ascending bitmask).
pub fn compress(inst: &ProblemInstance, x_s: &VertexSet, x_v: &VertexSet) -> Compression {
    let members = x_s.to_vec();
    assert!(members.len() < 32, "compression enumerates 2^|x_S| subsets");
    let n = inst.n();
    let k = inst.k();
    let mut evaluations = 0u64;
    let accept = |s: &VertexSet| s.len() <= k && inst.is_solution_feasible(s, x_v);
    for mask in 0u32..1 << members.len() {
        let pick = |bits: u32, from: &[VertexId]| {
            VertexSet::from_vertices(
                n,
                from.iter()
                    .enumerate()
                    .filter(|(i, _)| bits >> i & 1 == 1)
                    .map(|(_, &v)| v),
            )
        };
        let kept = pick(mask, &members);
        let dropped: Vec<VertexId> = members
            .iter()
            .copied()
            .filter(|v| !kept.contains(*v))
            .collect();
        let found = match inst.graph() {
            InstanceGraph::Undirected(g) if inst.kind() == crate::ProblemKind::VertexCover => {
                evaluations += 1;
                Some(repair_vc(g, x_s, &kept, x_v).0).filter(&accept)
            }
            InstanceGraph::Undirected(g) => (0u32..1 << dropped.len()).find_map(|side| {
                evaluations += 1;
                let side_a = pick(side, &dropped);
                Some(repair_oct(g, k, x_s, &kept, x_v, &side_a).0).filter(&accept)
            }),
            InstanceGraph::Tournament(t) => {
                let mut order: Vec<VertexId> = dropped
                    .iter()
                    .copied()
                    .filter(|&v| x_v.contains(v))
                    .collect();
                let mut found = None;
                loop {
                    evaluations += 1;
                    let candidate = repair_fvst(t, x_s, &kept, x_v, &order).0;
                    if accept(&candidate) {
                        found = Some(candidate);
                        break;
                    }
                    if !next_permutation(&mut order) {
                        break;
                    }
                }
                found
            }
        };
        if found.is_some() {
            return Compression {
                solution: found,
                evaluations,
            };
        }
    }
    Compression {
        solution: None,
        evaluations,
    }
}

/// Advances to the next lexicographic permutation; false once wrapped.
fn next_permutation(v: &mut [VertexId]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        v.reverse();
        return false;
    };
    let j = (i..v.len())
        .rev()
        .find(|&j| v[j] > v[i - 1])
        .expect("pivot has a successor");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
