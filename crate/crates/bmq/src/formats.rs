//! JSON data files and diagram files.
//!
//! Tables are 1-based row lists, matching the printed form of the tables.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use bmq_core::biquandle::{enumerate_endomorphisms, is_homomorphism, Biquandle, BiquandleMap};
use bmq_core::codec::parse_diagram;
use bmq_core::diagram::Diagram;
use bmq_core::module::BiquandleModule;
use bmq_core::paths::{Maximality, PathSemantics, RankVertex, Repetition};
use bmq_core::ring::Zm;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BiquandleFile {
    pub n: usize,
    pub under: Vec<Vec<u32>>,
    pub over: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ModuleFile {
    pub m: u32,
    pub t: Vec<Vec<u32>>,
    pub s: Vec<Vec<u32>>,
    pub r: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Paths are relative to the vector file. `endos` is `"all"` or a file
/// holding a list of 1-based image arrays.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VectorFile {
    pub biquandle: String,
    pub module: String,
    #[serde(default = "all_endos")]
    pub endos: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

fn all_endos() -> String {
    "all".into()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SemanticsFile {
    pub repetition: String,
    pub maximality: String,
    pub rank_vertex: String,
}

impl SemanticsFile {
    pub fn semantics(&self) -> Result<PathSemantics> {
        Ok(PathSemantics {
            repetition: Repetition::parse(&self.repetition).context("unknown repetition")?,
            maximality: Maximality::parse(&self.maximality).context("unknown maximality")?,
            rank_vertex: RankVertex::parse(&self.rank_vertex).context("unknown rank vertex")?,
        })
    }
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

pub fn load_diagram(path: &Path) -> Result<Diagram> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_diagram(&text).with_context(|| format!("parsing {}", path.display()))
}

pub fn biquandle_from(file: &BiquandleFile) -> Result<Biquandle> {
    if file.under.len() != file.n || file.over.len() != file.n {
        bail!("tables do not have n = {} rows", file.n);
    }
    Ok(Biquandle::from_rows(&file.under, &file.over)?)
}

pub fn load_biquandle(path: &Path) -> Result<Biquandle> {
    let file: BiquandleFile = read_json(path)?;
    biquandle_from(&file).with_context(|| format!("checking {}", path.display()))
}

pub fn module_from(bq: Biquandle, file: &ModuleFile) -> Result<BiquandleModule> {
    let ring = Zm::new(file.m)?;
    Ok(BiquandleModule::new(bq, ring, &file.t, &file.s, &file.r)?)
}

pub fn load_endos(path: &Path, bq: &Biquandle) -> Result<Vec<BiquandleMap>> {
    let lists: Vec<Vec<u32>> = read_json(path)?;
    let mut out = Vec::with_capacity(lists.len());
    for (i, image) in lists.iter().enumerate() {
        if image.len() != bq.n() || image.iter().any(|&v| v == 0 || v as usize > bq.n()) {
            bail!("{}: map #{} is not a map of {{1..{}}}", path.display(), i + 1, bq.n());
        }
        let map = BiquandleMap::from_one_based(image);
        if !is_homomorphism(bq, bq, &map.image) {
            bail!("{}: map #{} {:?} is not an endomorphism", path.display(), i + 1, image);
        }
        out.push(map);
    }
    Ok(out)
}

/// A biquandle, a module over it and the endomorphisms that label arrows.
#[derive(Clone, Debug)]
pub struct DataVector {
    pub module: BiquandleModule,
    pub endos: Vec<BiquandleMap>,
}

impl DataVector {
    pub fn biquandle(&self) -> &Biquandle {
        self.module.biquandle()
    }

    pub fn load(path: &Path) -> Result<DataVector> {
        let file: VectorFile = read_json(path)?;
        let base = path.parent().map(Path::to_path_buf).unwrap_or_default();
        let resolve = |p: &str| -> PathBuf { base.join(p) };
        let bq = load_biquandle(&resolve(&file.biquandle))?;
        let mpath = resolve(&file.module);
        let mfile: ModuleFile = read_json(&mpath)?;
        let module = module_from(bq, &mfile).with_context(|| format!("checking {}", mpath.display()))?;
        let endos = if file.endos == "all" {
            enumerate_endomorphisms(module.biquandle())
        } else {
            load_endos(&resolve(&file.endos), module.biquandle())?
        };
        Ok(DataVector { module, endos })
    }

    /// Stable text fed to the cache key.
    pub fn fingerprint(&self) -> String {
        let bq = self.biquandle();
        let endos: Vec<Vec<u32>> = self.endos.iter().map(|e| e.one_based()).collect();
        serde_json::json!({
            "under": bq.under_rows(),
            "over": bq.over_rows(),
            "m": self.module.ring().modulus(),
            "t": self.module.rows(bmq_core::module::Coefficient::T),
            "s": self.module.rows(bmq_core::module::Coefficient::S),
            "r": self.module.rows(bmq_core::module::Coefficient::R),
            "endos": endos,
        })
        .to_string()
    }
}
