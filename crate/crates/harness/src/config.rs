use std::fmt;
use std::str::FromStr;

use eajr::ea::BUDGET_CONSTANT;
use eajr::instances::{
    gen_biclique, gen_clique_anticlique, gen_oliveto_he_yao, gen_papadimitriou_steiglitz,
    gen_planted, GeneratedInstance, InstanceError,
};
use eajr::ProblemKind;

use crate::HarnessError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    EaK,
    StandardEa,
    IterCompression,
    Restart,
}

impl Algorithm {
    pub fn tag(self) -> &'static str {
        match self {
            Algorithm::EaK => "ea-k",
            Algorithm::StandardEa => "standard-ea",
            Algorithm::IterCompression => "iter-compression",
            Algorithm::Restart => "restart",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Algorithm {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "ea-k" | "eak" => Algorithm::EaK,
            "standard-ea" | "one-plus-one" => Algorithm::StandardEa,
            "iter-compression" | "ic" => Algorithm::IterCompression,
            "restart" => Algorithm::Restart,
            other => return Err(HarnessError::Config(format!("unknown algorithm `{other}`"))),
        })
    }
}

/// Instance family of an experiment.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InstanceClass {
    /// Random planted solution; for FVST and OCT the planted tournament and
    /// bipartite generators.
    Planted,
    CliqueAnticlique,
    Biclique,
    PapadimitriouSteiglitz,
    /// Chain of bipartite blocks; the `n` grid lists block counts.
    OlivetoHeYao,
}

impl InstanceClass {
    pub fn tag(self) -> &'static str {
        match self {
            InstanceClass::Planted => "planted",
            InstanceClass::CliqueAnticlique => "clique-anticlique",
            InstanceClass::Biclique => "biclique",
            InstanceClass::PapadimitriouSteiglitz => "ps",
            InstanceClass::OlivetoHeYao => "ohy",
        }
    }

    /// Whether instances depend on a seed (so several per cell make sense).
    pub fn is_random(self) -> bool {
        self == InstanceClass::Planted
    }
}

impl fmt::Display for InstanceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for InstanceClass {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "planted" | "random-planted" => InstanceClass::Planted,
            "clique-anticlique" => InstanceClass::CliqueAnticlique,
            "biclique" => InstanceClass::Biclique,
            "ps" | "papadimitriou-steiglitz" => InstanceClass::PapadimitriouSteiglitz,
            "ohy" | "oliveto-he-yao" => InstanceClass::OlivetoHeYao,
            other => {
                return Err(HarnessError::Config(format!(
                    "unknown instance class `{other}`"
                )))
            }
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Budget {
    Fixed(u64),
    /// `⌈c · h(k) · n² ln n⌉` with the problem's `h(k)`.
    Formula,
}

impl FromStr for Budget {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "formula" || s == "restart" {
            return Ok(Budget::Formula);
        }
        let value: f64 = s
            .parse()
            .map_err(|_| HarnessError::Config(format!("invalid budget `{s}`")))?;
        if !(value >= 1.0 && value.fract() == 0.0 && value < u64::MAX as f64) {
            return Err(HarnessError::Config(format!(
                "budget must be a positive integer, got `{s}`"
            )));
        }
        Ok(Budget::Fixed(value as u64))
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Grid {
    pub n: Vec<usize>,
    pub k: Vec<usize>,
    pub p: Vec<f64>,
    pub eps: Vec<f64>,
    pub l: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentConfig {
    pub algorithm: Algorithm,
    pub problem: ProblemKind,
    pub class: InstanceClass,
    pub grid: Grid,
    pub replicas: usize,
    /// Instances per cell; only random classes use more than one.
    pub instances: usize,
    pub budget: Budget,
    pub budget_constant: f64,
    pub seed: u64,
    pub workers: usize,
    /// Also write the per-run `runs.dat` file.
    pub raw: bool,
}

impl ExperimentConfig {
    pub fn new(
        algorithm: Algorithm,
        problem: ProblemKind,
        class: InstanceClass,
        grid: Grid,
    ) -> Self {
        Self {
            algorithm,
            problem,
            class,
            grid,
            replicas: 1,
            instances: 1,
            budget: Budget::Formula,
            budget_constant: BUDGET_CONSTANT,
            seed: 0,
            workers: 1,
            raw: true,
        }
    }

    pub fn validate(&self) -> Result<(), HarnessError> {
        let bad = |m: &str| Err(HarnessError::Config(m.to_string()));
        if self.replicas == 0 {
            return bad("replicas must be at least 1");
        }
        if self.instances == 0 {
            return bad("instances must be at least 1");
        }
        if self.workers == 0 {
            return bad("workers must be at least 1");
        }
        if self.budget_constant.is_nan() || self.budget_constant <= 0.0 {
            return bad("budget constant must be positive");
        }
        if self.class != InstanceClass::Planted && self.problem != ProblemKind::VertexCover {
            return bad("only the planted class has FVST and OCT generators");
        }
        if matches!(self.algorithm, Algorithm::StandardEa)
            && self.problem != ProblemKind::VertexCover
        {
            return bad("the standard (1+1) EA is defined for vertex cover only");
        }
        let g = &self.grid;
        let needs: &[(&str, bool)] = match self.class {
            InstanceClass::Planted if self.problem == ProblemKind::VertexCover => &[
                ("n", g.n.is_empty()),
                ("k", g.k.is_empty()),
                ("p", g.p.is_empty()),
            ],
            InstanceClass::Planted | InstanceClass::CliqueAnticlique | InstanceClass::Biclique => {
                &[("n", g.n.is_empty()), ("k", g.k.is_empty())]
            }
            InstanceClass::PapadimitriouSteiglitz => &[("l", g.l.is_empty())],
            InstanceClass::OlivetoHeYao => &[("n", g.n.is_empty()), ("eps", g.eps.is_empty())],
        };
        if let Some((name, _)) = needs.iter().find(|(_, empty)| *empty) {
            return Err(HarnessError::Config(format!(
                "the {} class needs a non-empty --{name} grid",
                self.class
            )));
        }
        // Generate every instance once so argument errors surface before any run.
        for cell in self.cells() {
            for i in 0..self.instances_per_cell() {
                cell.generate(self, i)?;
            }
        }
        Ok(())
    }

    pub fn instances_per_cell(&self) -> usize {
        if self.class.is_random() {
            self.instances
        } else {
            1
        }
    }

    /// Grid cells in a fixed order (p outermost, then k, then n).
    pub fn cells(&self) -> Vec<Cell> {
        let g = &self.grid;
        let mut cells = Vec::new();
        let mut push = |n, k, p, eps, l| {
            cells.push(Cell {
                index: cells.len(),
                n,
                k,
                p,
                eps,
                l,
            })
        };
        match self.class {
            InstanceClass::Planted if self.problem == ProblemKind::VertexCover => {
                for &p in &g.p {
                    for &k in &g.k {
                        for &n in &g.n {
                            push(n, k, Some(p), None, None);
                        }
                    }
                }
            }
            InstanceClass::Planted | InstanceClass::CliqueAnticlique | InstanceClass::Biclique => {
                for &k in &g.k {
                    for &n in &g.n {
                        push(n, k, None, None, None);
                    }
                }
            }
            InstanceClass::PapadimitriouSteiglitz => {
                for &l in &g.l {
                    push(3 * l + 4, l + 2, None, None, Some(l));
                }
            }
            InstanceClass::OlivetoHeYao => {
                for &eps in &g.eps {
                    for &blocks in &g.n {
                        push(blocks, 0, None, Some(eps), None);
                    }
                }
            }
        }
        cells
    }
}

/// One grid point. For the OHY class `n` is the block count and `k` is
/// filled in from the generated instance.
#[derive(Clone, Debug, PartialEq)]
pub struct Cell {
    pub index: usize,
    pub n: usize,
    pub k: usize,
    pub p: Option<f64>,
    pub eps: Option<f64>,
    pub l: Option<usize>,
}

impl Cell {
    pub fn generate(
        &self,
        cfg: &ExperimentConfig,
        instance: usize,
    ) -> Result<GeneratedInstance, InstanceError> {
        let seed = crate::derive_seed(cfg.seed, self.index as u64, instance as u64, u64::MAX);
        match cfg.class {
            InstanceClass::Planted => {
                gen_planted(cfg.problem, self.n, self.k, self.p.unwrap_or(0.5), seed)
            }
            InstanceClass::CliqueAnticlique => gen_clique_anticlique(self.n, self.k),
            InstanceClass::Biclique => gen_biclique(self.n, self.k),
            InstanceClass::PapadimitriouSteiglitz => {
                gen_papadimitriou_steiglitz(self.l.unwrap_or(1))
            }
            InstanceClass::OlivetoHeYao => gen_oliveto_he_yao(self.n, self.eps.unwrap_or(0.25)),
        }
    }
}
