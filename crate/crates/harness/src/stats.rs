use crate::run::RunRecord;

/// Mean and spread of one grid cell. Capped runs enter with their budget.
#[derive(Clone, Debug, PartialEq)]
pub struct SummaryRow {
    pub n: usize,
    pub k: usize,
    pub p: Option<f64>,
    pub eps: Option<f64>,
    pub mean: f64,
    /// Sample standard deviation (0 for a single run).
    pub sd: f64,
    pub min: f64,
    pub max: f64,
    pub runs: usize,
    pub failures: usize,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EcdfRow {
    pub runtime: u64,
    pub freq: f64,
}

pub fn mean_sd(values: &[f64]) -> (f64, f64) {
    if values.is_empty() {
        return (f64::NAN, f64::NAN);
    }
    let mean = values.iter().sum::<f64>() / values.len() as f64;
    if values.len() < 2 {
        return (mean, 0.0);
    }
    let ss: f64 = values.iter().map(|v| (v - mean) * (v - mean)).sum();
    (mean, (ss / (values.len() - 1) as f64).sqrt())
}

/// One row per cell, in order of first appearance.
pub fn summarize(records: &[RunRecord]) -> Vec<SummaryRow> {
    let mut cells: Vec<usize> = Vec::new();
    for r in records {
        if !cells.contains(&r.cell) {
            cells.push(r.cell);
        }
    }
    cells
        .into_iter()
        .map(|cell| {
            let group: Vec<&RunRecord> = records.iter().filter(|r| r.cell == cell).collect();
            let values: Vec<f64> = group.iter().map(|r| r.iterations as f64).collect();
            let (mean, sd) = mean_sd(&values);
            let first = group[0];
            SummaryRow {
                n: first.n,
                k: first.k,
                p: first.p,
                eps: first.eps,
                mean,
                sd,
                min: values.iter().copied().fold(f64::INFINITY, f64::min),
                max: values.iter().copied().fold(f64::NEG_INFINITY, f64::max),
                runs: group.len(),
                failures: group.iter().filter(|r| !r.success).count(),
            }
        })
        .collect()
}

/// `n² ln n`; 1 when that is zero.
pub fn normalizer(n: usize) -> f64 {
    let n = n as f64;
    let d = n * n * n.ln();
    if d > 0.0 {
        d
    } else {
        1.0
    }
}

/// Divides every statistic of each row by `n² ln n`.
pub fn normalize(rows: &[SummaryRow]) -> Vec<SummaryRow> {
    rows.iter()
        .map(|r| {
            let d = normalizer(r.n);
            SummaryRow {
                mean: r.mean / d,
                sd: r.sd / d,
                min: r.min / d,
                max: r.max / d,
                ..r.clone()
            }
        })
        .collect()
}

/// Fraction of runs solved by each distinct successful runtime.
pub fn ecdf(records: &[RunRecord]) -> Vec<EcdfRow> {
    let mut times: Vec<u64> = records
        .iter()
        .filter(|r| r.success)
        .map(|r| r.iterations)
        .collect();
    times.sort_unstable();
    times.dedup();
    ecdf_at(records, &times)
}

/// Fraction of runs solved within each checkpoint.
pub fn ecdf_at(records: &[RunRecord], checkpoints: &[u64]) -> Vec<EcdfRow> {
    let total = records.len().max(1) as f64;
    let mut solved: Vec<u64> = records
        .iter()
        .filter(|r| r.success)
        .map(|r| r.iterations)
        .collect();
    solved.sort_unstable();
    checkpoints
        .iter()
        .map(|&t| EcdfRow {
            runtime: t,
            freq: solved.partition_point(|&s| s <= t) as f64 / total,
        })
        .collect()
}
