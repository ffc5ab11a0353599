use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use eajr::ea::BUDGET_CONSTANT;
use eajr::instances::GeneratedInstance;
use eajr::oracle::{vertex_cover_at_most, OracleLimit};
use eajr::{ProblemKind, VertexSet};
use eajr_harness::output::{ensure_dir, format_ecdfs, format_summaries, parse_runs, write_file};
use eajr_harness::{
    run_to_dir, Algorithm, Budget, ExperimentConfig, Grid, HarnessError, InstanceClass,
};

#[derive(Parser)]
#[command(
    name = "eajr",
    version,
    about = "Evolutionary algorithms with jump-and-repair: experiments and tools"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write generated instances to graph files.
    Generate(GenerateArgs),
    /// Run a replicated experiment and write summary, ECDF and run tables.
    Run(RunArgs),
    /// Recompute summary tables from a runs.dat file.
    Summarize(TableArgs),
    /// Recompute ECDF tables from a runs.dat file.
    Ecdf(TableArgs),
    /// Solve an instance file exactly.
    Oracle(FileArgs),
    /// Check a solution (default: the planted one) against an instance file.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct InstanceArgs {
    #[arg(long, default_value = "vc")]
    problem: ProblemKind,
    /// planted, clique-anticlique, biclique, ps or ohy
    #[arg(long, default_value = "planted")]
    class: InstanceClass,
    /// Vertex counts (block counts for ohy)
    #[arg(long, value_delimiter = ',')]
    n: Vec<usize>,
    #[arg(long, value_delimiter = ',')]
    k: Vec<usize>,
    #[arg(long, value_delimiter = ',')]
    p: Vec<f64>,
    #[arg(long, value_delimiter = ',')]
    eps: Vec<f64>,
    #[arg(long, value_delimiter = ',')]
    l: Vec<usize>,
    /// Instances per grid cell (random classes only)
    #[arg(long, default_value_t = 1)]
    instances: usize,
    /// Master seed; the EAJR_SEED environment variable takes precedence
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "out")]
    out: PathBuf,
}

#[derive(Args)]
struct GenerateArgs {
    #[command(flatten)]
    instance: InstanceArgs,
}

#[derive(Args)]
struct RunArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    /// ea-k, standard-ea, iter-compression or restart
    #[arg(long, default_value = "ea-k")]
    algo: Algorithm,
    #[arg(long, default_value_t = 1)]
    replicas: usize,
    /// Iteration cap per run, or `formula` for the parameter-dependent budget
    #[arg(long, default_value = "formula")]
    budget: Budget,
    /// Leading constant of the formula budget
    #[arg(long, default_value_t = BUDGET_CONSTANT)]
    budget_constant: f64,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Skip the per-run runs.dat table
    #[arg(long)]
    no_raw: bool,
}

#[derive(Args)]
struct TableArgs {
    /// runs.dat written by `eajr run`
    #[arg(long)]
    input: PathBuf,
    #[arg(long, default_value = "out")]
    out: PathBuf,
}

#[derive(Args)]
struct FileArgs {
    #[arg(long)]
    input: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    input: PathBuf,
    /// Comma-separated vertex ids; defaults to the planted solution
    #[arg(long, value_delimiter = ',')]
    solution: Option<Vec<usize>>,
}

fn master_seed(flag: u64) -> Result<u64, HarnessError> {
    match std::env::var("EAJR_SEED") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| HarnessError::Config(format!("EAJR_SEED is not a 64-bit integer: `{s}`"))),
        Err(_) => Ok(flag),
    }
}

fn config(args: &InstanceArgs, algo: Algorithm) -> Result<ExperimentConfig, HarnessError> {
    let grid = Grid {
        n: args.n.clone(),
        k: args.k.clone(),
        p: args.p.clone(),
        eps: args.eps.clone(),
        l: args.l.clone(),
    };
    let mut cfg = ExperimentConfig::new(algo, args.problem, args.class, grid);
    cfg.instances = args.instances;
    cfg.seed = master_seed(args.seed)?;
    Ok(cfg)
}

fn read(path: &Path) -> Result<String, HarnessError> {
    fs::read_to_string(path).map_err(|source| HarnessError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn load_instance(path: &Path) -> Result<GeneratedInstance, HarnessError> {
    GeneratedInstance::from_file_str(&read(path)?).map_err(|e| HarnessError::Parse {
        path: path.to_path_buf(),
        message: e.to_string(),
    })
}

fn generate(args: &GenerateArgs) -> Result<(), HarnessError> {
    let cfg = config(&args.instance, Algorithm::EaK)?;
    cfg.validate()?;
    ensure_dir(&args.instance.out)?;
    for cell in cfg.cells() {
        for i in 0..cfg.instances_per_cell() {
            let gen = cell.generate(&cfg, i)?;
            let mut name = format!(
                "{}_{}_n{}_k{}",
                cfg.problem,
                cfg.class,
                gen.instance.n(),
                gen.instance.k()
            );
            if let Some(p) = cell.p {
                name.push_str(&format!("_p{p}"));
            }
            if let Some(eps) = cell.eps {
                name.push_str(&format!("_eps{eps}"));
            }
            let path = args.instance.out.join(format!("{name}_i{i}.graph"));
            write_file(&path, &gen.to_file_string())?;
            println!("{}", path.display());
        }
    }
    Ok(())
}

fn run(args: &RunArgs) -> Result<(), HarnessError> {
    let mut cfg = config(&args.instance, args.algo)?;
    cfg.replicas = args.replicas;
    cfg.budget = args.budget;
    cfg.budget_constant = args.budget_constant;
    cfg.workers = args.workers;
    cfg.raw = !args.no_raw;
    let (records, paths) = run_to_dir(&cfg, &args.instance.out)?;
    let failures = records.iter().filter(|r| !r.success).count();
    eprintln!("{} runs, {} failures", records.len(), failures);
    for p in paths {
        println!("{}", p.display());
    }
    Ok(())
}

fn tables(args: &TableArgs, ecdf: bool) -> Result<(), HarnessError> {
    let text = read(&args.input)?;
    let (class, records) = parse_runs(&text).map_err(|message| HarnessError::Parse {
        path: args.input.clone(),
        message,
    })?;
    let class = class.unwrap_or(InstanceClass::Planted);
    let header: String = text
        .lines()
        .take_while(|l| l.starts_with("# ") && l.contains('='))
        .map(|l| format!("{l}\n"))
        .collect();
    let files = if ecdf {
        format_ecdfs(&header, class, &records)
    } else {
        format_summaries(&header, class, &records)
    };
    ensure_dir(&args.out)?;
    for (name, contents) in files {
        let path = args.out.join(name);
        write_file(&path, &contents)?;
        println!("{}", path.display());
    }
    Ok(())
}

fn oracle(args: &FileArgs) -> Result<(), HarnessError> {
    let gen = load_instance(&args.input)?;
    let inst = &gen.instance;
    let large_cover =
        inst.kind() == ProblemKind::VertexCover && inst.n() > OracleLimit::default().vertex_cover;
    let (size, witness) = match inst.undirected() {
        // Above the oracle cap, search downward from the planted size.
        Some(g) if large_cover => {
            let opt = eajr_harness::exact_optimum(&gen).ok_or_else(|| {
                HarnessError::Config(
                    "instance exceeds the oracle cap and has no planted solution".into(),
                )
            })?;
            (
                opt,
                vertex_cover_at_most(g, opt).expect("optimum is attained"),
            )
        }
        _ => OracleLimit::default()
            .minimum(inst)
            .map_err(|e| HarnessError::Config(e.to_string()))?,
    };
    println!("minimum {size}");
    println!("witness {}", ids(&witness));
    Ok(())
}

fn ids(s: &VertexSet) -> String {
    s.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn verify(args: &VerifyArgs) -> Result<bool, HarnessError> {
    let gen = load_instance(&args.input)?;
    let n = gen.instance.n();
    let s = match &args.solution {
        Some(list) => {
            if let Some(&v) = list.iter().find(|&&v| v >= n) {
                return Err(HarnessError::Config(format!(
                    "vertex {v} out of range for n = {n}"
                )));
            }
            VertexSet::from_vertices(n, list.iter().copied())
        }
        None => gen.planted_solution.clone().ok_or_else(|| {
            HarnessError::Config("file has no planted solution; pass --solution".into())
        })?,
    };
    let within_k = gen.instance.is_cardinality_feasible(&s);
    match gen.instance.check_solution(&s, &VertexSet::full(n)) {
        Ok(()) if within_k => {
            println!("ok: {} vertices, k = {}", s.len(), gen.instance.k());
            Ok(true)
        }
        Ok(()) => {
            println!("too large: {} vertices, k = {}", s.len(), gen.instance.k());
            Ok(false)
        }
        Err(violation) => {
            println!("infeasible: {violation:?}");
            Ok(false)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Generate(a) => generate(a).map(|_| true),
        Command::Run(a) => run(a).map(|_| true),
        Command::Summarize(a) => tables(a, false).map(|_| true),
        Command::Ecdf(a) => tables(a, true).map(|_| true),
        Command::Oracle(a) => oracle(a).map(|_| true),
        Command::Verify(a) => verify(a),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
