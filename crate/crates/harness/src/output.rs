use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use crate::config::{ExperimentConfig, InstanceClass};
use crate::run::RunRecord;
use crate::stats::{ecdf, normalize, summarize};
use crate::HarnessError;

const RUN_COLUMNS: &str =
    "cell instance replica n k p eps seed iterations budget success k_found optimum";

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |v| v.to_string())
}

/// File-name slice a record belongs to; one summary file per slice.
pub fn slice_label(class: InstanceClass, r: &RunRecord) -> String {
    match class {
        InstanceClass::PapadimitriouSteiglitz => "ps".to_string(),
        InstanceClass::OlivetoHeYao => format!("eps{}", opt(r.eps)),
        _ => match r.p {
            Some(p) => format!("k{}_p{}", r.k, p),
            None => format!("k{}", r.k),
        },
    }
}

fn provenance(cfg: &ExperimentConfig) -> String {
    format!(
        "# algorithm={} problem={} class={} seed={} replicas={} instances={}\n",
        cfg.algorithm,
        cfg.problem,
        cfg.class,
        cfg.seed,
        cfg.replicas,
        cfg.instances_per_cell()
    )
}

pub fn format_runs(header: &str, records: &[RunRecord]) -> String {
    let mut out = String::from(header);
    let _ = writeln!(out, "# {RUN_COLUMNS}");
    for r in records {
        let _ = writeln!(
            out,
            "{} {} {} {} {} {} {} {} {} {} {} {} {}",
            r.cell,
            r.instance,
            r.replica,
            r.n,
            r.k,
            opt(r.p),
            opt(r.eps),
            r.seed,
            r.iterations,
            r.budget,
            r.success as u8,
            opt(r.k_found),
            opt(r.optimum)
        );
    }
    out
}

/// Parses a `runs.dat` file; returns the instance class from its header
/// (when present) and the records.
pub fn parse_runs(text: &str) -> Result<(Option<InstanceClass>, Vec<RunRecord>), String> {
    let mut class = None;
    let mut records = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        if let Some(comment) = line.strip_prefix('#') {
            for field in comment.split_whitespace() {
                if let Some(c) = field.strip_prefix("class=") {
                    class = Some(c.parse().map_err(|e| format!("line {line_no}: {e}"))?);
                }
            }
            continue;
        }
        if line.trim().is_empty() {
            continue;
        }
        let f: Vec<&str> = line.split_whitespace().collect();
        if f.len() != 13 {
            return Err(format!(
                "line {line_no}: expected 13 columns, found {}",
                f.len()
            ));
        }
        let err = |col: &str| format!("line {line_no}: invalid {col}");
        fn num<T: std::str::FromStr>(s: &str, e: String) -> Result<T, String> {
            s.parse().map_err(|_| e)
        }
        fn maybe<T: std::str::FromStr>(s: &str, e: String) -> Result<Option<T>, String> {
            if s == "-" {
                Ok(None)
            } else {
                s.parse().map(Some).map_err(|_| e)
            }
        }
        records.push(RunRecord {
            cell: num(f[0], err("cell"))?,
            instance: num(f[1], err("instance"))?,
            replica: num(f[2], err("replica"))?,
            n: num(f[3], err("n"))?,
            k: num(f[4], err("k"))?,
            p: maybe(f[5], err("p"))?,
            eps: maybe(f[6], err("eps"))?,
            seed: num(f[7], err("seed"))?,
            iterations: num(f[8], err("iterations"))?,
            budget: num(f[9], err("budget"))?,
            success: match f[10] {
                "1" => true,
                "0" => false,
                _ => return Err(err("success flag")),
            },
            k_found: maybe(f[11], err("k_found"))?,
            optimum: maybe(f[12], err("optimum"))?,
        });
    }
    Ok((class, records))
}

/// Summary tables keyed by slice label, in order of first appearance.
pub fn format_summaries(
    header: &str,
    class: InstanceClass,
    records: &[RunRecord],
) -> Vec<(String, String)> {
    let mut labels: Vec<String> = Vec::new();
    for r in records {
        let l = slice_label(class, r);
        if !labels.contains(&l) {
            labels.push(l);
        }
    }
    labels
        .into_iter()
        .map(|label| {
            let slice: Vec<RunRecord> = records
                .iter()
                .filter(|r| slice_label(class, r) == label)
                .cloned()
                .collect();
            let rows = summarize(&slice);
            let norm = normalize(&rows);
            let mut out = String::from(header);
            out.push_str("# n k mean sd norm_mean norm_sd runs failures\n");
            for (r, nr) in rows.iter().zip(&norm) {
                let _ = writeln!(
                    out,
                    "{} {} {:.6} {:.6} {:.6} {:.6} {} {}",
                    r.n, r.k, r.mean, r.sd, nr.mean, nr.sd, r.runs, r.failures
                );
            }
            (format!("summary_{label}.dat"), out)
        })
        .collect()
}

/// One ECDF table per cell, named by slice and vertex count.
pub fn format_ecdfs(
    header: &str,
    class: InstanceClass,
    records: &[RunRecord],
) -> Vec<(String, String)> {
    let mut cells: Vec<usize> = Vec::new();
    for r in records {
        if !cells.contains(&r.cell) {
            cells.push(r.cell);
        }
    }
    cells
        .into_iter()
        .map(|cell| {
            let group: Vec<RunRecord> =
                records.iter().filter(|r| r.cell == cell).cloned().collect();
            let first = &group[0];
            let mut out = String::from(header);
            out.push_str("# runtime freq\n");
            for row in ecdf(&group) {
                let _ = writeln!(out, "{} {:.6}", row.runtime, row.freq);
            }
            (
                format!("ecdf_{}_n{}.dat", slice_label(class, first), first.n),
                out,
            )
        })
        .collect()
}

pub fn write_file(path: &Path, contents: &str) -> Result<(), HarnessError> {
    fs::write(path, contents).map_err(|source| HarnessError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn ensure_dir(dir: &Path) -> Result<(), HarnessError> {
    fs::create_dir_all(dir).map_err(|source| HarnessError::Io {
        path: dir.to_path_buf(),
        source,
    })
}

/// Writes summaries, ECDFs and (if configured) the raw run table to `dir`;
/// returns the paths written, sorted.
pub fn write_outputs(
    cfg: &ExperimentConfig,
    records: &[RunRecord],
    dir: &Path,
) -> Result<Vec<PathBuf>, HarnessError> {
    ensure_dir(dir)?;
    let header = provenance(cfg);
    let mut files = format_summaries(&header, cfg.class, records);
    files.extend(format_ecdfs(&header, cfg.class, records));
    if cfg.raw {
        files.push(("runs.dat".to_string(), format_runs(&header, records)));
    }
    let mut paths = Vec::new();
    for (name, contents) in files {
        let path = dir.join(name);
        write_file(&path, &contents)?;
        paths.push(path);
    }
    paths.sort();
    Ok(paths)
}
