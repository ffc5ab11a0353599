use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::mpsc;
use std::thread;

use eajr::ea::{
    ea_k_run, iterative_compression_counted, restart_budget, restart_run, standard_ea_run,
    RunOptions,
};
use eajr::instances::GeneratedInstance;
use eajr::oracle::{vertex_cover_at_most, OracleLimit};
use eajr::ProblemKind;

use crate::config::{Algorithm, Budget, Cell, ExperimentConfig};
use crate::HarnessError;

/// Outcome of one run. Capped runs carry `iterations = budget` and
/// `success = false`.
#[derive(Clone, Debug, PartialEq)]
pub struct RunRecord {
    pub cell: usize,
    pub instance: usize,
    pub replica: usize,
    pub n: usize,
    pub k: usize,
    pub p: Option<f64>,
    pub eps: Option<f64>,
    pub seed: u64,
    pub iterations: u64,
    pub budget: u64,
    pub success: bool,
    /// Parameter reported by the restart framework.
    pub k_found: Option<usize>,
    /// Exact optimum when known or computable.
    pub optimum: Option<usize>,
}

/// Splitmix64 finalizer.
fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Per-run seed as a pure function of the master seed and the run's indices.
pub fn derive_seed(master: u64, cell: u64, instance: u64, replica: u64) -> u64 {
    const GOLDEN: u64 = 0x9e37_79b9_7f4a_7c15;
    let mut h = mix(master.wrapping_add(GOLDEN));
    for x in [cell, instance, replica] {
        h = mix(h ^ x.wrapping_add(GOLDEN).wrapping_mul(0xff51_afd7_ed55_8ccd));
    }
    h
}

/// Exact optimum of a generated instance: the recorded value, a descending
/// bounded search below the planted size for vertex cover, or the oracle
/// within its caps.
pub fn exact_optimum(gen: &GeneratedInstance) -> Option<usize> {
    if let Some(k) = gen.known_optimum {
        return Some(k);
    }
    let inst = &gen.instance;
    match (inst.kind(), inst.undirected(), &gen.planted_solution) {
        (ProblemKind::VertexCover, Some(g), Some(planted)) => {
            let mut best = planted.len();
            while best > 0 && vertex_cover_at_most(g, best - 1).is_some() {
                best -= 1;
            }
            Some(best)
        }
        _ => OracleLimit::default().minimum(inst).ok().map(|(k, _)| k),
    }
}

struct Job<'a> {
    cell: &'a Cell,
    instance: usize,
    replica: usize,
    gen: &'a GeneratedInstance,
    optimum: Option<usize>,
}

fn cap_or(budget: Budget, formula: impl FnOnce() -> u64) -> u64 {
    match budget {
        Budget::Fixed(b) => b,
        Budget::Formula => formula(),
    }
}

fn execute(cfg: &ExperimentConfig, job: &Job<'_>) -> RunRecord {
    let inst = &job.gen.instance;
    let n = inst.n();
    let seed = derive_seed(
        cfg.seed,
        job.cell.index as u64,
        job.instance as u64,
        job.replica as u64,
    );
    let kind = inst.kind();
    let c = cfg.budget_constant;
    let mut record = RunRecord {
        cell: job.cell.index,
        instance: job.instance,
        replica: job.replica,
        n,
        k: inst.k(),
        p: job.cell.p,
        eps: job.cell.eps,
        seed,
        iterations: 0,
        budget: 0,
        success: false,
        k_found: None,
        optimum: job.optimum,
    };
    match cfg.algorithm {
        Algorithm::EaK => {
            let budget = cap_or(cfg.budget, || restart_budget(kind, inst.k(), n, c));
            let res = ea_k_run(inst, seed, &RunOptions::with_budget(budget));
            debug_assert!(!res.success || inst.verify_final(&res.final_point.x_s));
            record.iterations = res.iterations;
            record.budget = budget;
            record.success = res.success;
        }
        Algorithm::StandardEa => {
            let target = job.optimum.unwrap_or(inst.k());
            let g = inst.undirected().expect("validated as vertex cover");
            let budget = cap_or(cfg.budget, || restart_budget(kind, target, n, c));
            let res = standard_ea_run(g, seed, &RunOptions::with_budget(budget), target);
            record.iterations = res.iterations;
            record.budget = budget;
            record.success = res.success;
        }
        Algorithm::IterCompression => {
            let budget = cap_or(cfg.budget, || restart_budget(kind, inst.k(), n, c));
            let res = iterative_compression_counted(inst);
            if res.evaluations > budget {
                record.iterations = budget;
            } else {
                record.iterations = res.evaluations;
                record.success = res.solution.is_some();
            }
            record.budget = budget;
        }
        Algorithm::Restart => {
            let budget = (1..=n.max(1))
                .map(|k| restart_budget(kind, k, n, c))
                .fold(0u64, u64::saturating_add);
            let res = restart_run(kind, inst.graph(), seed, c);
            record.iterations = res.total_evaluations;
            record.budget = budget;
            record.k_found = Some(res.k_found);
            record.success = job.optimum.is_none_or(|opt| opt == res.k_found);
        }
    }
    record
}

/// Runs every (cell, instance, replica) combination and returns the records
/// in that order, independent of the worker count.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<Vec<RunRecord>, HarnessError> {
    cfg.validate()?;
    if cfg.algorithm == Algorithm::Restart && cfg.budget != Budget::Formula {
        return Err(HarnessError::Config(
            "the restart framework uses the formula budget".into(),
        ));
    }
    let cells = cfg.cells();
    let mut generated = Vec::new();
    for cell in &cells {
        for i in 0..cfg.instances_per_cell() {
            let gen = cell.generate(cfg, i)?;
            let optimum = match cfg.algorithm {
                Algorithm::StandardEa | Algorithm::Restart => exact_optimum(&gen),
                _ => gen.known_optimum,
            };
            generated.push((cell, i, gen, optimum));
        }
    }
    let jobs: Vec<Job<'_>> = generated
        .iter()
        .flat_map(|(cell, i, gen, optimum)| {
            (0..cfg.replicas).map(move |replica| Job {
                cell,
                instance: *i,
                replica,
                gen,
                optimum: *optimum,
            })
        })
        .collect();

    let next = AtomicUsize::new(0);
    let mut slots: Vec<Option<RunRecord>> = vec![None; jobs.len()];
    let (tx, rx) = mpsc::channel();
    thread::scope(|scope| {
        for _ in 0..cfg.workers.min(jobs.len().max(1)) {
            let tx = tx.clone();
            let (jobs, next) = (&jobs, &next);
            scope.spawn(move || loop {
                let idx = next.fetch_add(1, Ordering::Relaxed);
                let Some(job) = jobs.get(idx) else { break };
                if tx.send((idx, execute(cfg, job))).is_err() {
                    break;
                }
            });
        }
        drop(tx);
        for (idx, record) in rx {
            slots[idx] = Some(record);
        }
    });
    Ok(slots
        .into_iter()
        .map(|r| r.expect("every job reports"))
        .collect())
}
