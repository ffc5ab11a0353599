use rand::Rng;

use super::{rng_from_seed, BitMutation, Genotype, RunOptions, RunResult};
use crate::graph::UndirectedGraph;
use crate::problems::ProblemInstance;
use crate::repair::compress;
use crate::vertex_set::VertexSet;

/// Penalty fitness of the standard `(1+1)` EA, to be minimized:
/// `|x| + n · (uncovered edges)`.
pub fn fitness_g(g: &UndirectedGraph, x: &VertexSet) -> u64 {
    (x.len() + g.n() * g.uncovered_edge_count(x)) as u64
}

/// Standard `(1+1)` EA on vertex cover with penalty fitness `g`, flip rate
/// `1/n` and acceptance on `g(y) ≤ g(x)`. Succeeds once the current point is a
/// cover with at most `target` vertices.
pub fn standard_ea_run(
    g: &UndirectedGraph,
    seed: u64,
    opts: &RunOptions,
    target: usize,
) -> RunResult {
    let mut rng = rng_from_seed(seed);
    let mut result = standard_ea_run_with(g, &mut rng, opts, target);
    result.seed = seed;
    result
}

pub fn standard_ea_run_with<R: Rng + ?Sized>(
    g: &UndirectedGraph,
    rng: &mut R,
    opts: &RunOptions,
    target: usize,
) -> RunResult {
    let n = g.n();
    let mut x = VertexSet::empty(n);
    for v in 0..n {
        if rng.random_bool(0.5) {
            x.insert(v);
        }
    }
    let solved = |x: &VertexSet, gx: u64| gx as usize <= target && g.uncovered_edge_count(x) == 0;
    let mut gx = fitness_g(g, &x);
    let mut trace = Vec::new();
    if opts.trace {
        trace.push((0, -(gx as i64)));
    }
    let mutation = BitMutation::new(n, 1.0 / n.max(1) as f64);
    let mut y = x.clone();
    let mut iterations = 0u64;
    while !solved(&x, gx) && iterations < opts.budget {
        iterations += 1;
        y.clone_from(&x);
        if mutation.sample(rng, |v| y.toggle(v)) == 0 {
            continue;
        }
        let gy = fitness_g(g, &y);
        if gy <= gx {
            if opts.trace && gy < gx {
                trace.push((iterations, -(gy as i64)));
            }
            std::mem::swap(&mut x, &mut y);
            gx = gy;
        }
    }
    RunResult {
        success: solved(&x, gx),
        iterations,
        budget: opts.budget,
        final_point: Genotype {
            x_s: x,
            x_v: VertexSet::full(n),
        },
        seed: 0,
        trace,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompressionRun {
    pub solution: Option<VertexSet>,
    /// Repair evaluations summed over all compression steps.
    pub evaluations: u64,
}

/// Deterministic iterative compression: vertices are added in ascending
/// order and every size-`k+1` solution is compressed by exhaustive search
/// over the jump-and-repair choices.
pub fn iterative_compression(inst: &ProblemInstance) -> Option<VertexSet> {
    iterative_compression_counted(inst).solution
}

pub fn iterative_compression_counted(inst: &ProblemInstance) -> CompressionRun {
    let n = inst.n();
    let k = inst.k();
    let mut x_v = VertexSet::empty(n);
    let mut s = VertexSet::empty(n);
    let mut evaluations = 0;
    for v in 0..n {
        x_v.insert(v);
        s.insert(v);
        if s.len() > k {
            let step = compress(inst, &s, &x_v);
            evaluations += step.evaluations;
            match step.solution {
                Some(smaller) => s = smaller,
                None => {
                    return CompressionRun {
                        solution: None,
                        evaluations,
                    }
                }
            }
        }
    }
    debug_assert!(inst.verify_final(&s));
    CompressionRun {
        solution: Some(s),
        evaluations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Tournament;
    use crate::testutil::{gnp, random_tournament};

    fn triangle() -> UndirectedGraph {
        UndirectedGraph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn penalty_fitness_examples() {
        let g = triangle();
        assert_eq!(fitness_g(&g, &VertexSet::full(3)), 3);
        assert_eq!(fitness_g(&g, &VertexSet::empty(3)), 9);
        assert_eq!(fitness_g(&g, &VertexSet::from_vertices(3, [0, 1])), 2);
    }

    #[test]
    fn standard_ea_small_cases() {
        let k2 = UndirectedGraph::new(2, [(0, 1)]).unwrap();
        for seed in 0..10 {
            let r = standard_ea_run(&k2, seed, &RunOptions::with_budget(10_000), 1);
            assert!(r.success);
            assert!(r.final_point.x_s.len() == 1);
            let e = standard_ea_run(
                &UndirectedGraph::edgeless(10),
                seed,
                &RunOptions::with_budget(100_000),
                0,
            );
            assert!(e.success && e.final_point.x_s.is_empty());
        }
    }

    #[test]
    fn standard_ea_respects_budget() {
        let g = gnp(30, 0.3, 4);
        let r = standard_ea_run(&g, 1, &RunOptions::with_budget(50), 0);
        assert!(!r.success);
        assert_eq!(r.iterations, 50);
    }

    #[test]
    fn compression_on_triangle() {
        let two = ProblemInstance::vertex_cover(triangle(), 2).unwrap();
        let s = iterative_compression(&two).expect("triangle has a 2-cover");
        assert!(two.verify_final(&s));
        let one = two.with_k(1).unwrap();
        assert_eq!(iterative_compression(&one), None);
    }

    #[test]
    fn compression_fvst_and_oct_basics() {
        let cyc = Tournament::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(iterative_compression(&ProblemInstance::fvst(cyc.clone(), 1).unwrap()).is_some());
        assert!(iterative_compression(&ProblemInstance::fvst(cyc, 0).unwrap()).is_none());
        let c5 = UndirectedGraph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert!(iterative_compression(&ProblemInstance::oct(c5.clone(), 1).unwrap()).is_some());
        assert!(iterative_compression(&ProblemInstance::oct(c5, 0).unwrap()).is_none());
    }

    #[test]
    fn compression_agrees_with_oracle() {
        use crate::oracle::OracleLimit;
        use crate::testutil::rng;
        use rand::Rng;
        let oracle = OracleLimit::default();
        let mut r = rng(77);
        for trial in 0..200u64 {
            let n = r.random_range(3..=10);
            let k = r.random_range(0..=4usize.min(n));
            let inst = match trial % 3 {
                0 => ProblemInstance::vertex_cover(gnp(n, 0.3, trial), k),
                1 => ProblemInstance::fvst(random_tournament(n, trial), k),
                _ => ProblemInstance::oct(gnp(n, 0.4, trial), k),
            }
            .unwrap();
            let (opt, _) = oracle.minimum(&inst).unwrap();
            let got = iterative_compression(&inst);
            assert_eq!(got.is_some(), opt <= k, "trial {trial}");
            if let Some(s) = got {
                assert!(inst.verify_final(&s));
            }
        }
    }

    #[test]
    fn compression_results_verify() {
        for seed in 0..20 {
            let t = random_tournament(8, seed);
            let inst = ProblemInstance::fvst(t, 3).unwrap();
            if let Some(s) = iterative_compression(&inst) {
                assert!(inst.verify_final(&s));
            }
            let g = gnp(9, 0.35, seed);
            let inst = ProblemInstance::oct(g, 2).unwrap();
            if let Some(s) = iterative_compression(&inst) {
                assert!(inst.verify_final(&s));
            }
        }
    }
}
