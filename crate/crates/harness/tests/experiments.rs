use std::fs;

use eajr::ProblemKind;
use eajr_harness::output::{format_runs, parse_runs};
use eajr_harness::{
    derive_seed, ecdf, run_experiment, run_to_dir, summarize, Algorithm, Budget, ExperimentConfig,
    Grid, HarnessError, InstanceClass,
};

fn planted_grid() -> Grid {
    Grid {
        n: vec![20, 30],
        k: vec![3, 4],
        p: vec![0.5],
        ..Grid::default()
    }
}

fn planted_config() -> ExperimentConfig {
    let mut cfg = ExperimentConfig::new(
        Algorithm::EaK,
        ProblemKind::VertexCover,
        InstanceClass::Planted,
        planted_grid(),
    );
    cfg.instances = 2;
    cfg.replicas = 5;
    cfg.seed = 42;
    cfg
}

#[test]
fn single_cell_single_replica() {
    let grid = Grid {
        n: vec![12],
        k: vec![3],
        p: vec![0.5],
        ..Grid::default()
    };
    let cfg = ExperimentConfig::new(
        Algorithm::EaK,
        ProblemKind::VertexCover,
        InstanceClass::Planted,
        grid,
    );
    let records = run_experiment(&cfg).unwrap();
    assert_eq!(records.len(), 1);
    assert!(records[0].success);
}

#[test]
fn grid_arithmetic_and_budgets() {
    let records = run_experiment(&planted_config()).unwrap();
    assert_eq!(records.len(), 2 * 2 * 2 * 5);
    assert!(records.iter().all(|r| r.iterations <= r.budget));
    for row in summarize(&records) {
        assert_eq!(row.runs, 10);
        assert!(row.min <= row.mean && row.mean <= row.max);
    }
    let curve = ecdf(&records);
    assert!(curve.windows(2).all(|w| w[0].freq <= w[1].freq));
}

#[test]
fn seeds_are_pure_and_distinct() {
    assert_eq!(derive_seed(1, 2, 3, 4), derive_seed(1, 2, 3, 4));
    let mut seen = std::collections::HashSet::new();
    for cell in 0..10 {
        for inst in 0..10 {
            for rep in 0..10 {
                assert!(seen.insert(derive_seed(7, cell, inst, rep)));
            }
        }
    }
    let records = run_experiment(&planted_config()).unwrap();
    let mut seeds: Vec<u64> = records.iter().map(|r| r.seed).collect();
    seeds.sort_unstable();
    seeds.dedup();
    assert_eq!(seeds.len(), records.len());
}

#[test]
fn output_is_independent_of_worker_count() {
    let tmp = tempfile::tempdir().unwrap();
    let mut cfg = planted_config();
    let mut contents = Vec::new();
    for workers in [1, 2, 8] {
        cfg.workers = workers;
        let dir = tmp.path().join(format!("w{workers}"));
        let (_, paths) = run_to_dir(&cfg, &dir).unwrap();
        let files: Vec<_> = paths
            .iter()
            .map(|p| (p.file_name().unwrap().to_owned(), fs::read(p).unwrap()))
            .collect();
        contents.push(files);
    }
    assert_eq!(contents[0], contents[1]);
    assert_eq!(contents[0], contents[2]);
    let names: Vec<String> = contents[0]
        .iter()
        .map(|(n, _)| n.to_string_lossy().into_owned())
        .collect();
    assert!(names.contains(&"summary_k3_p0.5.dat".to_string()));
    assert!(names.contains(&"ecdf_k4_p0.5_n30.dat".to_string()));
    assert!(names.contains(&"runs.dat".to_string()));
}

#[test]
fn summary_file_layout() {
    let tmp = tempfile::tempdir().unwrap();
    run_to_dir(&planted_config(), tmp.path()).unwrap();
    let text = fs::read_to_string(tmp.path().join("summary_k3_p0.5.dat")).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[0].starts_with("# algorithm=ea-k problem=vc class=planted seed=42"));
    assert_eq!(lines[1], "# n k mean sd norm_mean norm_sd runs failures");
    assert_eq!(lines.len(), 4);
    let cols: Vec<&str> = lines[2].split_whitespace().collect();
    assert_eq!(cols.len(), 8);
    assert_eq!(cols[0], "20");
    let mean: f64 = cols[2].parse().unwrap();
    let norm: f64 = cols[4].parse().unwrap();
    assert!((norm - mean / (400.0 * 20f64.ln())).abs() < 1e-5);
}

#[test]
fn runs_table_round_trips() {
    let cfg = planted_config();
    let records = run_experiment(&cfg).unwrap();
    let text = format_runs("# class=planted\n", &records);
    let (class, back) = parse_runs(&text).unwrap();
    assert_eq!(class, Some(InstanceClass::Planted));
    assert_eq!(back, records);
    assert!(parse_runs("1 2 3\n").is_err());
}

#[test]
fn all_algorithms_run_on_small_grids() {
    for algo in [
        Algorithm::StandardEa,
        Algorithm::IterCompression,
        Algorithm::Restart,
    ] {
        let grid = Grid {
            n: vec![10],
            k: vec![2],
            p: vec![0.5],
            ..Grid::default()
        };
        let mut cfg =
            ExperimentConfig::new(algo, ProblemKind::VertexCover, InstanceClass::Planted, grid);
        cfg.replicas = 3;
        let records = run_experiment(&cfg).unwrap();
        assert_eq!(records.len(), 3);
        assert!(records.iter().all(|r| r.success), "{algo}");
        if algo == Algorithm::Restart {
            assert!(records.iter().all(|r| r.k_found == r.optimum));
        }
    }
    for kind in [ProblemKind::Fvst, ProblemKind::Oct] {
        let grid = Grid {
            n: vec![9],
            k: vec![2],
            ..Grid::default()
        };
        let mut cfg = ExperimentConfig::new(Algorithm::EaK, kind, InstanceClass::Planted, grid);
        cfg.replicas = 2;
        assert!(run_experiment(&cfg).unwrap().iter().all(|r| r.success));
    }
    let grid = Grid {
        n: vec![5],
        eps: vec![0.1],
        ..Grid::default()
    };
    let cfg = ExperimentConfig::new(
        Algorithm::EaK,
        ProblemKind::VertexCover,
        InstanceClass::OlivetoHeYao,
        grid,
    );
    let records = run_experiment(&cfg).unwrap();
    assert_eq!((records[0].n, records[0].k), (25, 5));
}

#[test]
fn invalid_configs_are_rejected() {
    let mut cfg = planted_config();
    cfg.replicas = 0;
    assert!(matches!(run_experiment(&cfg), Err(HarnessError::Config(_))));
    let mut cfg = planted_config();
    cfg.grid.p.clear();
    assert!(matches!(run_experiment(&cfg), Err(HarnessError::Config(_))));
    let mut cfg = planted_config();
    cfg.grid.k = vec![40];
    assert!(matches!(
        run_experiment(&cfg),
        Err(HarnessError::Instance(_))
    ));
    let cfg = ExperimentConfig::new(
        Algorithm::StandardEa,
        ProblemKind::Oct,
        InstanceClass::Planted,
        planted_grid(),
    );
    assert!(run_experiment(&cfg).is_err());
    let mut cfg = planted_config();
    cfg.algorithm = Algorithm::Restart;
    cfg.budget = Budget::Fixed(10);
    assert!(run_experiment(&cfg).is_err());
    assert!("0".parse::<Budget>().is_err());
    assert!("1.5".parse::<Budget>().is_err());
    assert_eq!("1e6".parse::<Budget>().unwrap(), Budget::Fixed(1_000_000));
}
