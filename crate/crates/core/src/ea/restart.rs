use rand::Rng;

use super::{ea_k_run_with, rng_from_seed, RunOptions};
use crate::problems::{InstanceGraph, ProblemInstance, ProblemKind};
use crate::vertex_set::VertexSet;

/// Per-`k` budget constant of the restart loop, `13·e²`.
pub const BUDGET_CONSTANT: f64 = 13.0 * std::f64::consts::E * std::f64::consts::E;
/// The smaller constant `13·e` used in the run-time bound's derivation.
pub const PROOF_BUDGET_CONSTANT: f64 = 13.0 * std::f64::consts::E;

/// `⌈c · h(k) · n² · ln n⌉`, at least 1, where `h(k)` is `2^k` for vertex
/// cover, `2^k·k!` for FVST and `3^k` for OCT.
pub fn restart_budget(kind: ProblemKind, k: usize, n: usize, constant: f64) -> u64 {
    let factor = match kind {
        ProblemKind::VertexCover => 2f64.powi(k as i32),
        ProblemKind::Fvst => 2f64.powi(k as i32) * (1..=k).map(|i| i as f64).product::<f64>(),
        ProblemKind::Oct => 3f64.powi(k as i32),
    };
    let n = n as f64;
    let budget = (constant * factor * n * n * n.ln()).ceil();
    if budget.is_finite() && budget < u64::MAX as f64 {
        (budget as u64).max(1)
    } else {
        u64::MAX
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestartResult {
    pub k_found: usize,
    pub total_evaluations: u64,
    pub solution: VertexSet,
    /// Iterations used by each `EA_k` run, indexed from `k = 1`.
    pub per_k_iterations: Vec<u64>,
}

/// Runs `EA_k` for `k = 1, 2, …` with the per-`k` budget and returns the
/// first success. Every instance has a solution of size `n`, so this always
/// terminates; the search at `k = n` succeeds on its own budget or, failing
/// that, the full vertex set is reported.
pub fn restart_run(
    kind: ProblemKind,
    graph: &InstanceGraph,
    seed: u64,
    constant: f64,
) -> RestartResult {
    let mut rng = rng_from_seed(seed);
    restart_run_with(kind, graph, &mut rng, constant)
}

fn restart_run_with<R: Rng + ?Sized>(
    kind: ProblemKind,
    graph: &InstanceGraph,
    rng: &mut R,
    constant: f64,
) -> RestartResult {
    let n = graph.n();
    let mut total = 0u64;
    let mut per_k = Vec::new();
    let full = VertexSet::full(n);
    for k in 1..=n.max(1) {
        let inst = ProblemInstance::new(kind, graph.clone(), k.min(n)).expect("kind matches graph");
        let opts = RunOptions::with_budget(restart_budget(kind, k, n, constant));
        let res = ea_k_run_with(&inst, rng, &opts, |_| {});
        total += res.iterations;
        per_k.push(res.iterations);
        if res.success {
            return RestartResult {
                k_found: k,
                total_evaluations: total,
                solution: res.final_point.x_s,
                per_k_iterations: per_k,
            };
        }
        // A run at k = n only fails by budget; the full set is a solution.
        if k >= n {
            break;
        }
    }
    RestartResult {
        k_found: n,
        total_evaluations: total,
        solution: full,
        per_k_iterations: per_k,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::UndirectedGraph;

    #[test]
    fn budget_formula() {
        let b = restart_budget(ProblemKind::VertexCover, 3, 20, BUDGET_CONSTANT);
        let want = (BUDGET_CONSTANT * 8.0 * 400.0 * 20f64.ln()).ceil() as u64;
        assert_eq!(b, want);
        assert_eq!(
            restart_budget(ProblemKind::Fvst, 3, 20, BUDGET_CONSTANT),
            (BUDGET_CONSTANT * 48.0 * 400.0 * 20f64.ln()).ceil() as u64
        );
        assert_eq!(
            restart_budget(ProblemKind::Oct, 2, 20, BUDGET_CONSTANT),
            (BUDGET_CONSTANT * 9.0 * 400.0 * 20f64.ln()).ceil() as u64
        );
        assert_eq!(
            restart_budget(ProblemKind::VertexCover, 1, 1, BUDGET_CONSTANT),
            1
        );
    }

    #[test]
    fn star_and_triangle() {
        let star = UndirectedGraph::new(6, (1..6).map(|v| (0, v))).unwrap();
        let tri = UndirectedGraph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        for seed in 0..5 {
            let r = restart_run(
                ProblemKind::VertexCover,
                &InstanceGraph::Undirected(star.clone()),
                seed,
                BUDGET_CONSTANT,
            );
            assert_eq!(r.k_found, 1);
            assert_eq!(r.solution.to_vec(), vec![0]);
            assert_eq!(r.total_evaluations, r.per_k_iterations.iter().sum::<u64>());
            let r = restart_run(
                ProblemKind::VertexCover,
                &InstanceGraph::Undirected(tri.clone()),
                seed,
                BUDGET_CONSTANT,
            );
            assert_eq!(r.k_found, 2);
            assert_eq!(r.per_k_iterations.len(), 2);
        }
    }
}
