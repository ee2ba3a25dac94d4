//! Batch computation over a directory of diagram files.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use bmq_core::paths::{Budget, PathSemantics};
use rayon::prelude::*;
use serde::Serialize;

use crate::cache::{cache_key, Cache};
use crate::formats::{load_diagram, DataVector};
use crate::report::{compute, latex_polynomial, Report};

#[derive(Clone, Debug, Serialize)]
pub struct Row {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<Report>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip)]
    pub cached: bool,
    #[serde(skip)]
    pub over_budget: bool,
}

/// `*.pdk` files of `dir`, sorted by name.
pub fn diagram_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .with_context(|| format!("reading {}", dir.display()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "pdk"))
        .collect();
    files.sort();
    if files.is_empty() {
        bail!("{} holds no .pdk files", dir.display());
    }
    Ok(files)
}

pub fn row_name(path: &Path) -> String {
    path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default()
}

fn one(path: &Path, v: &DataVector, sem: PathSemantics, budget: Budget, cache: Option<&Cache>) -> Row {
    let mut row = Row { name: row_name(path), report: None, error: None, cached: false, over_budget: false };
    let d = match load_diagram(path) {
        Ok(d) => d,
        Err(e) => {
            row.error = Some(format!("{e:#}"));
            return row;
        }
    };
    let key = cache.map(|_| cache_key(&d, v, sem));
    if let (Some(c), Some(k)) = (cache, &key) {
        if let Some(r) = c.get(k) {
            row.report = Some(r);
            row.cached = true;
            return row;
        }
    }
    match compute(&d, v, sem, budget) {
        Ok(r) => {
            if let (Some(c), Some(k)) = (cache, &key) {
                if let Err(e) = c.put(k, &r) {
                    row.error = Some(format!("cache write failed: {e:#}"));
                }
            }
            row.report = Some(r);
        }
        Err(e) => {
            row.over_budget = e.is_budget();
            row.error = Some(e.to_string());
        }
    }
    row
}

/// Rows in file order. Errors stay in their row; the batch always completes.
pub fn tabulate(
    files: &[PathBuf],
    v: &DataVector,
    sem: PathSemantics,
    budget: Budget,
    cache: Option<&Cache>,
    jobs: Option<usize>,
) -> Result<Vec<Row>> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        builder = builder.num_threads(j);
    }
    let pool = builder.build()?;
    Ok(pool.install(|| files.par_iter().map(|f| one(f, v, sem, budget, cache)).collect()))
}

pub fn render_text(rows: &[Row]) -> String {
    let width = rows.iter().map(|r| r.name.len()).max().unwrap_or(0);
    let mut out = String::new();
    for r in rows {
        match (&r.report, &r.error) {
            (Some(rep), _) => out.push_str(&format!("{:width$}  {:>5}  {}\n", r.name, rep.counting, rep.polynomial)),
            (None, Some(e)) => out.push_str(&format!("{:width$}  error  {e}\n", r.name)),
            (None, None) => {}
        }
    }
    out
}

pub fn render_latex(rows: &[Row]) -> String {
    let mut out = String::from("\\begin{tabular}{|c|c|}\n\\hline\n$L$ & $\\Phi$ \\\\ \\hline\n");
    for r in rows {
        let cell = match &r.report {
            Some(rep) => format!("${}$", latex_polynomial(&rep.polynomial)),
            None => "error".into(),
        };
        out.push_str(&format!("{} & {} \\\\\n", r.name, cell));
    }
    out.push_str("\\hline\n\\end{tabular}\n");
    out
}
