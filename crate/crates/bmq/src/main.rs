use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Result};
use bmq::cache::Cache;
use bmq::formats::{biquandle_from, load_biquandle, load_diagram, read_json, BiquandleFile, DataVector, ModuleFile};
use bmq::fuzz::{fuzz, FuzzConfig};
use bmq::report::{compute, latex_polynomial, polynomial_terms, ComputeError, QuiverJson};
use bmq::tabulate::{diagram_files, render_latex, render_text, row_name, tabulate};
use bmq_core::bead::{build_bead_system, solve_system};
use bmq_core::biquandle::enumerate_endomorphisms;
use bmq_core::coloring::enumerate_colorings;
use bmq_core::module::{check_module, search_modules, Coefficient};
use bmq_core::paths::{natural_path_polynomial, Budget, PathError, PathSemantics};
use bmq_core::quiver::build_quiver;
use bmq_core::ring::Zm;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Parser)]
#[command(name = "bmq", version, about = "Biquandle module quivers and natural path polynomials")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Worker threads for batch runs (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[arg(long, global = true, env = "BMQ_CACHE_DIR", default_value = ".bmq-cache")]
    cache_dir: PathBuf,
    /// Maximum number of partial paths a path search may visit.
    #[arg(long, global = true, default_value_t = Budget::default().0)]
    budget: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the biquandle axioms for a table file.
    CheckBiquandle { file: PathBuf },
    /// Check the module conditions of a coefficient file over a biquandle.
    CheckModule {
        module: PathBuf,
        #[arg(long)]
        biquandle: PathBuf,
    },
    /// List every endomorphism of a biquandle.
    Endos { biquandle: PathBuf },
    /// Find modules over Z_m, smallest first.
    SearchModules {
        biquandle: PathBuf,
        #[arg(long, short)]
        modulus: u32,
        #[arg(long, default_value_t = 10)]
        limit: usize,
    },
    /// List the colorings of a diagram.
    Colorings {
        diagram: PathBuf,
        #[arg(long)]
        biquandle: PathBuf,
    },
    /// Bead module of every coloring.
    Beads {
        diagram: PathBuf,
        #[arg(long)]
        vector: PathBuf,
        /// Print each linear system as well.
        #[arg(long)]
        dump_matrix: bool,
    },
    /// The decorated coloring quiver.
    Quiver {
        diagram: PathBuf,
        #[arg(long)]
        vector: PathBuf,
        /// Emit Graphviz instead of JSON.
        #[arg(long)]
        graphviz: bool,
    },
    /// The natural path polynomial.
    Invariant {
        diagram: PathBuf,
        #[arg(long)]
        vector: PathBuf,
        /// Override the path semantics, e.g. `arrow-simple/non-extendable/path-constant`.
        #[arg(long)]
        semantics: Option<PathSemantics>,
    },
    /// Counting invariant, ranks, quiver and polynomial in one report.
    Compute {
        diagram: PathBuf,
        #[arg(long)]
        vector: PathBuf,
        #[arg(long)]
        semantics: Option<PathSemantics>,
    },
    /// Polynomials for every `.pdk` file of a directory.
    Tabulate {
        dir: PathBuf,
        #[arg(long)]
        vector: PathBuf,
        #[arg(long)]
        semantics: Option<PathSemantics>,
        /// Recompute everything and leave the cache untouched.
        #[arg(long)]
        no_cache: bool,
    },
    /// Apply random move sequences and compare invariants.
    Fuzz {
        diagram: PathBuf,
        #[arg(long)]
        vector: PathBuf,
        /// Edits per sequence.
        #[arg(long, default_value_t = 3)]
        moves: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Where reproducer files go.
        #[arg(long, default_value = "fuzz-failures")]
        out: PathBuf,
    },
}

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("JSON values serialize"));
}

fn load_vector(path: &Path) -> Result<DataVector> {
    let v = DataVector::load(path)?;
    if !v.module.ring().is_field() {
        eprintln!(
            "warning: Z_{} is not a field; rank counts free Z_m summands and other summands are listed separately",
            v.module.ring().modulus()
        );
    }
    Ok(v)
}

fn run(cli: Cli) -> Result<ExitCode> {
    let budget = Budget(cli.budget);
    let fmt = cli.format;
    match cli.command {
        Command::CheckBiquandle { file } => {
            let f: BiquandleFile = read_json(&file)?;
            let report = bmq_core::biquandle::check_biquandle(&f.under, &f.over)?;
            let lines: Vec<String> = report.iter().map(ToString::to_string).collect();
            if fmt == Format::Json {
                print_json(&json!({ "ok": lines.is_empty(), "violations": lines }));
            } else if lines.is_empty() {
                println!("ok");
            } else {
                lines.iter().for_each(|l| println!("{l}"));
            }
            return Ok(if lines.is_empty() { ExitCode::SUCCESS } else { ExitCode::from(1) });
        }
        Command::CheckModule { module, biquandle } => {
            let bq = load_biquandle(&biquandle)?;
            let f: ModuleFile = read_json(&module)?;
            let report = check_module(&bq, Zm::new(f.m)?, &f.t, &f.s, &f.r)?;
            let lines: Vec<String> = report.iter().map(ToString::to_string).collect();
            if fmt == Format::Json {
                print_json(&json!({ "ok": lines.is_empty(), "violations": lines }));
            } else if lines.is_empty() {
                println!("ok");
            } else {
                lines.iter().for_each(|l| println!("{l}"));
            }
            return Ok(if lines.is_empty() { ExitCode::SUCCESS } else { ExitCode::from(1) });
        }
        Command::Endos { biquandle } => {
            let bq = load_biquandle(&biquandle)?;
            let maps: Vec<Vec<u32>> = enumerate_endomorphisms(&bq).iter().map(|e| e.one_based()).collect();
            if fmt == Format::Json {
                print_json(&json!(maps));
            } else {
                maps.iter().for_each(|m| println!("{m:?}"));
            }
        }
        Command::SearchModules { biquandle, modulus, limit } => {
            let f: BiquandleFile = read_json(&biquandle)?;
            let bq = biquandle_from(&f)?;
            let found = search_modules(&bq, Zm::new(modulus)?, limit);
            let files: Vec<ModuleFile> = found
                .iter()
                .map(|m| ModuleFile {
                    m: modulus,
                    t: m.rows(Coefficient::T),
                    s: m.rows(Coefficient::S),
                    r: m.rows(Coefficient::R),
                    note: None,
                })
                .collect();
            if fmt == Format::Json {
                println!("{}", serde_json::to_string_pretty(&files)?);
            } else {
                for f in &files {
                    println!("t={:?} s={:?} r={:?}", f.t, f.s, f.r);
                }
            }
        }
        Command::Colorings { diagram, biquandle } => {
            let d = load_diagram(&diagram)?;
            let bq = load_biquandle(&biquandle)?;
            let cs: Vec<Vec<u32>> =
                enumerate_colorings(&d, &bq).iter().map(|c| c.colors.iter().map(|&x| x as u32 + 1).collect()).collect();
            if fmt == Format::Json {
                print_json(&json!({ "count": cs.len(), "colorings": cs }));
            } else {
                println!("{} colorings", cs.len());
                cs.iter().for_each(|c| println!("{c:?}"));
            }
        }
        Command::Beads { diagram, vector, dump_matrix } => {
            let d = load_diagram(&diagram)?;
            let v = load_vector(&vector)?;
            let mut rows = Vec::new();
            for c in enumerate_colorings(&d, v.biquandle()) {
                let sys = build_bead_system(&d, &c, &v.module)?;
                let sol = solve_system(&sys);
                let colors: Vec<u32> = c.colors.iter().map(|&x| x as u32 + 1).collect();
                let mut entry = json!({ "colors": colors, "rank": sol.rank(), "factors": sol.invariant_factors });
                if dump_matrix {
                    entry["matrix"] = json!(sys.rows);
                }
                rows.push(entry);
            }
            if fmt == Format::Json {
                print_json(&json!(rows));
            } else {
                for r in &rows {
                    println!("{} rank {} factors {}", r["colors"], r["rank"], r["factors"]);
                    if let Some(m) = r.get("matrix").and_then(|m| m.as_array()) {
                        m.iter().for_each(|row| println!("  {row}"));
                    }
                }
            }
        }
        Command::Quiver { diagram, vector, graphviz } => {
            let d = load_diagram(&diagram)?;
            let v = load_vector(&vector)?;
            let q = QuiverJson::from_rep(&build_quiver(&d, &v.module, &v.endos)?);
            if graphviz {
                print!("{}", q.graphviz());
            } else {
                println!("{}", serde_json::to_string_pretty(&q)?);
            }
        }
        Command::Invariant { diagram, vector, semantics } => {
            let d = load_diagram(&diagram)?;
            let v = load_vector(&vector)?;
            let sem = semantics.unwrap_or_default();
            let q = build_quiver(&d, &v.module, &v.endos)?;
            let p = natural_path_polynomial(&q, sem, budget)?;
            match fmt {
                Format::Text => println!("{p}"),
                Format::Latex => println!("${}$", latex_polynomial(&p.to_string())),
                Format::Json => print_json(&json!({
                    "polynomial": p.to_string(),
                    "terms": polynomial_terms(&p),
                    "semantics": sem.to_string(),
                })),
            }
        }
        Command::Compute { diagram, vector, semantics } => {
            let d = load_diagram(&diagram)?;
            let v = load_vector(&vector)?;
            let r = compute(&d, &v, semantics.unwrap_or_default(), budget)?;
            match fmt {
                Format::Json => println!("{}", serde_json::to_string_pretty(&r)?),
                Format::Latex => println!("{} & ${}$ \\\\", row_name(&diagram), latex_polynomial(&r.polynomial)),
                Format::Text => {
                    println!("counting invariant: {}", r.counting);
                    println!("ranks: {:?}", r.ranks);
                    println!("arrows: {}", r.quiver.arrows.len());
                    println!("semantics: {}", r.semantics);
                    println!("polynomial: {}", r.polynomial);
                }
            }
        }
        Command::Tabulate { dir, vector, semantics, no_cache } => {
            let v = load_vector(&vector)?;
            let files = diagram_files(&dir)?;
            let cache = if no_cache { None } else { Some(Cache::new(&cli.cache_dir)?) };
            let rows = tabulate(&files, &v, semantics.unwrap_or_default(), budget, cache.as_ref(), cli.jobs)?;
            match fmt {
                Format::Text => print!("{}", render_text(&rows)),
                Format::Latex => print!("{}", render_latex(&rows)),
                Format::Json => println!("{}", serde_json::to_string_pretty(&rows)?),
            }
            if rows.iter().any(|r| r.over_budget) {
                return Ok(ExitCode::from(2));
            }
            if rows.iter().any(|r| r.error.is_some()) {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Fuzz { diagram, vector, moves, seed, trials, out } => {
            let d = load_diagram(&diagram)?;
            let v = load_vector(&vector)?;
            let cfg = FuzzConfig { moves, trials, seed };
            let failures = fuzz(&d, &v, PathSemantics::default(), budget, &cfg)?;
            for f in &failures {
                let path = f.write_to(&out, &row_name(&diagram))?;
                eprintln!("trial {}: invariants changed, reproducer at {}", f.trial, path.display());
            }
            if fmt == Format::Json {
                print_json(&json!({ "trials": trials, "moves": moves, "seed": seed, "failures": failures.len() }));
            } else {
                println!("{} trials of {} moves, {} failures", trials, moves, failures.len());
            }
            if !failures.is_empty() {
                bail!("{} of {} trials changed an invariant", failures.len(), trials);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn is_budget(e: &anyhow::Error) -> bool {
    e.chain().any(|c| {
        c.downcast_ref::<ComputeError>().is_some_and(ComputeError::is_budget)
            || matches!(c.downcast_ref::<PathError>(), Some(PathError::Budget { .. }))
    })
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            if is_budget(&e) {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
