//! The `(1+1)` EA over expanded genotypes (`EA_k`), its restart framework,
//! and the two baselines: the standard `(1+1)` EA with penalty fitness and
//! deterministic iterative compression.

mod baseline;
mod restart;

pub use baseline::{
    fitness_g, iterative_compression, iterative_compression_counted, standard_ea_run,
    standard_ea_run_with, CompressionRun,
};
pub use restart::{
    restart_budget, restart_run, RestartResult, BUDGET_CONSTANT, PROOF_BUDGET_CONSTANT,
};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Geometric};

use crate::problems::ProblemInstance;
use crate::repair::jump_and_repair;
use crate::vertex_set::VertexSet;

/// Random number generator used by every run; reproducible across platforms.
pub type EaRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> EaRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Search point `(x_S, x_V)`, the `2n`-bit string of the expanded search space.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Genotype {
    pub x_s: VertexSet,
    pub x_v: VertexSet,
}

impl Genotype {
    pub fn empty(n: usize) -> Self {
        Self {
            x_s: VertexSet::empty(n),
            x_v: VertexSet::empty(n),
        }
    }

    pub fn uniform<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let mut x = Self::empty(n);
        for v in 0..n {
            if rng.random_bool(0.5) {
                x.x_s.insert(v);
            }
        }
        for v in 0..n {
            if rng.random_bool(0.5) {
                x.x_v.insert(v);
            }
        }
        x
    }

    pub fn n(&self) -> usize {
        self.x_s.universe()
    }
}

/// Value of `f_k`: `|x_V|` for feasible points, `-(|x_S| + |x_V|)` otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fitness(pub i64);

impl Fitness {
    pub fn is_feasible(self) -> bool {
        self.0 >= 0
    }
}

pub fn fitness_fk(inst: &ProblemInstance, x: &Genotype) -> Fitness {
    let feasible =
        inst.is_cardinality_feasible(&x.x_s) && inst.is_solution_feasible(&x.x_s, &x.x_v);
    fitness_from_parts(feasible, x)
}

#[inline]
fn fitness_from_parts(feasible: bool, x: &Genotype) -> Fitness {
    if feasible {
        Fitness(x.x_v.len() as i64)
    } else {
        Fitness(-((x.x_s.len() + x.x_v.len()) as i64))
    }
}

/// Standard bit mutation over `bits` positions with a fixed flip rate.
///
/// Flip positions are drawn by geometric skipping, which samples the same
/// distribution as one Bernoulli trial per bit.
pub(crate) struct BitMutation {
    bits: usize,
    skip: Option<Geometric>,
}

impl BitMutation {
    pub(crate) fn new(bits: usize, rate: f64) -> Self {
        Self {
            bits,
            skip: (bits > 0).then(|| Geometric::new(rate).expect("rate in (0, 1]")),
        }
    }

    /// Calls `flip` for each flipped position in ascending order; returns the
    /// number of flips.
    #[inline]
    pub(crate) fn sample<R: Rng + ?Sized>(
        &self,
        rng: &mut R,
        mut flip: impl FnMut(usize),
    ) -> usize {
        let Some(skip) = &self.skip else { return 0 };
        let mut flips = 0;
        let mut pos = skip.sample(rng);
        while pos < self.bits as u64 {
            flip(pos as usize);
            flips += 1;
            pos += 1 + skip.sample(rng);
        }
        flips
    }
}

/// Offspring of `x` with each of the `2n` bits flipped independently with
/// probability `1/(2n)`.
pub fn mutate<R: Rng + ?Sized>(x: &Genotype, rng: &mut R) -> Genotype {
    let n = x.n();
    let mut y = x.clone();
    if n > 0 {
        BitMutation::new(2 * n, 1.0 / (2 * n) as f64).sample(rng, |bit| flip_bit(&mut y, bit));
    }
    y
}

#[inline]
fn flip_bit(x: &mut Genotype, bit: usize) {
    let n = x.n();
    if bit < n {
        x.x_s.toggle(bit);
    } else {
        x.x_v.toggle(bit - n);
    }
}

#[derive(Clone, Debug)]
pub struct RunOptions {
    /// Maximum number of generations (offspring evaluations).
    pub budget: u64,
    /// Record `(iteration, fitness)` at every strict improvement.
    pub trace: bool,
}

impl RunOptions {
    pub fn with_budget(budget: u64) -> Self {
        Self {
            budget,
            trace: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunResult {
    pub success: bool,
    /// Generations consumed; never exceeds `budget`.
    pub iterations: u64,
    pub budget: u64,
    pub final_point: Genotype,
    pub seed: u64,
    /// `(iteration, fitness)` at the initial point and every strict improvement.
    pub trace: Vec<(u64, i64)>,
}

/// What happened in one generation; handed to run observers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenerationEvent {
    pub iteration: u64,
    pub parent_fitness: Fitness,
    /// Fitness of the mutated offspring before any repair.
    pub offspring_fitness: Fitness,
    pub offspring_solution_feasible: bool,
    pub offspring_cardinality_feasible: bool,
    /// Fitness of the jump-and-repair result, when the operator was invoked.
    pub repaired_fitness: Option<Fitness>,
    /// Fitness of the candidate that competed with the parent.
    pub candidate_fitness: Fitness,
    pub accepted: bool,
}

/// Runs `EA_k` on `inst` from a fresh generator seeded with `seed`.
pub fn ea_k_run(inst: &ProblemInstance, seed: u64, opts: &RunOptions) -> RunResult {
    let mut rng = rng_from_seed(seed);
    let mut result = ea_k_run_with(inst, &mut rng, opts, |_| {});
    result.seed = seed;
    result
}

/// `EA_k` driven by a caller-owned generator, reporting every generation to
/// `observe`. The returned `seed` field is 0.
pub fn ea_k_run_with<R: Rng + ?Sized>(
    inst: &ProblemInstance,
    rng: &mut R,
    opts: &RunOptions,
    mut observe: impl FnMut(&GenerationEvent),
) -> RunResult {
    let n = inst.n();
    let target = n as i64;
    let mut x = Genotype::uniform(n, rng);
    let mut fx = fitness_fk(inst, &x);
    let mut trace = Vec::new();
    if opts.trace {
        trace.push((0, fx.0));
    }
    let mutation = BitMutation::new(2 * n, 1.0 / (2 * n).max(1) as f64);
    let mut y = x.clone();
    let mut iterations = 0u64;

    while fx.0 < target && iterations < opts.budget {
        iterations += 1;
        y.clone_from(&x);
        let flips = mutation.sample(rng, |bit| flip_bit(&mut y, bit));
        if flips == 0 {
            // Identical offspring: equal fitness, accepted, nothing changes.
            observe(&GenerationEvent {
                iteration: iterations,
                parent_fitness: fx,
                offspring_fitness: fx,
                offspring_solution_feasible: fx.is_feasible()
                    || inst.is_solution_feasible(&x.x_s, &x.x_v),
                offspring_cardinality_feasible: inst.is_cardinality_feasible(&x.x_s),
                repaired_fitness: None,
                candidate_fitness: fx,
                accepted: true,
            });
            continue;
        }

        let solution_ok = inst.is_solution_feasible(&y.x_s, &y.x_v);
        let cardinality_ok = inst.is_cardinality_feasible(&y.x_s);
        let fy = fitness_from_parts(solution_ok && cardinality_ok, &y);
        let mut candidate = fy;
        let mut repaired_fitness = None;
        if solution_ok && !cardinality_ok {
            let jumped = jump_and_repair(inst, &y.x_s, &y.x_v, rng);
            let repaired = Genotype {
                x_s: jumped.new_x_s,
                x_v: y.x_v.clone(),
            };
            let fr = fitness_fk(inst, &repaired);
            repaired_fitness = Some(fr);
            // Ties go to the repaired point.
            if fr >= fy {
                y = repaired;
                candidate = fr;
            }
        }
        let accepted = candidate >= fx;
        observe(&GenerationEvent {
            iteration: iterations,
            parent_fitness: fx,
            offspring_fitness: fy,
            offspring_solution_feasible: solution_ok,
            offspring_cardinality_feasible: cardinality_ok,
            repaired_fitness,
            candidate_fitness: candidate,
            accepted,
        });
        if accepted {
            if opts.trace && candidate > fx {
                trace.push((iterations, candidate.0));
            }
            std::mem::swap(&mut x, &mut y);
            fx = candidate;
        }
    }

    RunResult {
        success: fx.0 == target,
        iterations,
        budget: opts.budget,
        final_point: x,
        seed: 0,
        trace,
    }
}
