//! The full computation for one diagram and its serialized forms.

use std::fmt::Write as _;

use bmq_core::diagram::Diagram;
use bmq_core::paths::{natural_path_polynomial, Budget, PathError, PathPolynomial, PathSemantics};
use bmq_core::quiver::{build_quiver, QuiverError, QuiverRep};
use serde::{Deserialize, Serialize};

use crate::formats::DataVector;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexJson {
    /// 1-based colors of the semiarcs.
    pub colors: Vec<u32>,
    pub rank: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub factors: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowJson {
    pub src: usize,
    pub endo: usize,
    pub dst: usize,
    pub weight: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverJson {
    pub endos: Vec<Vec<u32>>,
    pub vertices: Vec<VertexJson>,
    pub arrows: Vec<ArrowJson>,
}

impl QuiverJson {
    pub fn from_rep(q: &QuiverRep) -> Self {
        QuiverJson {
            endos: q.endos.iter().map(|e| e.one_based()).collect(),
            vertices: q
                .vertices
                .iter()
                .map(|v| VertexJson {
                    colors: v.coloring.colors.iter().map(|&c| c as u32 + 1).collect(),
                    rank: v.rank(),
                    factors: v.module.invariant_factors.clone(),
                })
                .collect(),
            arrows: q
                .arrows
                .iter()
                .map(|a| ArrowJson { src: a.src, endo: a.endo, dst: a.dst, weight: a.weight.to_string() })
                .collect(),
        }
    }

    /// Graphviz digraph; Zero arrows are dashed.
    pub fn graphviz(&self) -> String {
        let mut out = String::from("digraph quiver {\n");
        for (i, v) in self.vertices.iter().enumerate() {
            let colors: Vec<String> = v.colors.iter().map(u32::to_string).collect();
            let _ = writeln!(out, "  v{i} [label=\"{}\\nrank {}\"];", colors.join(","), v.rank);
        }
        for a in &self.arrows {
            let style = if a.weight == "zero" { ", style=dashed" } else { "" };
            let _ = writeln!(out, "  v{} -> v{} [label=\"{}\"{style}];", a.src, a.dst, a.endo + 1);
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub counting: usize,
    pub ranks: Vec<usize>,
    pub polynomial: String,
    /// `[x-exponent, y-exponent, coefficient]`
    pub terms: Vec<[u64; 3]>,
    pub semantics: String,
    pub quiver: QuiverJson,
}

#[derive(Debug)]
pub enum ComputeError {
    Quiver(QuiverError),
    Path(PathError),
}

impl std::fmt::Display for ComputeError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ComputeError::Quiver(e) => e.fmt(f),
            ComputeError::Path(e) => e.fmt(f),
        }
    }
}

impl std::error::Error for ComputeError {}

impl ComputeError {
    pub fn is_budget(&self) -> bool {
        matches!(self, ComputeError::Path(PathError::Budget { .. }))
    }
}

pub fn polynomial_terms(p: &PathPolynomial) -> Vec<[u64; 3]> {
    p.terms().map(|(a, b, c)| [a as u64, b as u64, c]).collect()
}

pub fn compute(d: &Diagram, v: &DataVector, sem: PathSemantics, budget: Budget) -> Result<Report, ComputeError> {
    let q = build_quiver(d, &v.module, &v.endos).map_err(ComputeError::Quiver)?;
    let poly = natural_path_polynomial(&q, sem, budget).map_err(ComputeError::Path)?;
    Ok(Report {
        counting: q.vertices.len(),
        ranks: q.vertices.iter().map(|x| x.rank()).collect(),
        polynomial: poly.to_string(),
        terms: polynomial_terms(&poly),
        semantics: sem.to_string(),
        quiver: QuiverJson::from_rep(&q),
    })
}

/// `4x^2y^{10}` style: braces only where an exponent has several digits.
pub fn latex_polynomial(p: &str) -> String {
    let mut out = String::new();
    let mut chars = p.chars().peekable();
    while let Some(c) = chars.next() {
        out.push(c);
        if c == '^' {
            let mut digits = String::new();
            while let Some(d) = chars.peek().copied().filter(char::is_ascii_digit) {
                digits.push(d);
                chars.next();
            }
            if digits.len() > 1 {
                let _ = write!(out, "{{{digits}}}");
            } else {
                out.push_str(&digits);
            }
        }
    }
    out
}
