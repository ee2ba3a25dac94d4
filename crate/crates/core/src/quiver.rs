//! The coloring quiver of a diagram, weighted by a biquandle module.

use alloc::vec::Vec;
use core::fmt;

use crate::bead::{build_bead_system, solve_system};
use crate::biquandle::{image_closure, is_homomorphism, BiquandleMap};
use crate::coloring::{enumerate_colorings, Coloring};
use crate::diagram::Diagram;
use crate::linalg::SolutionModule;
use crate::module::BiquandleModule;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Weight {
    Identity,
    Zero,
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Weight::Identity => "identity",
            Weight::Zero => "zero",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub src: usize,
    pub endo: usize,
    pub dst: usize,
    pub weight: Weight,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub coloring: Coloring,
    pub module: SolutionModule,
}

impl Vertex {
    pub fn rank(&self) -> usize {
        self.module.rank()
    }
}

/// Vertices in homset order; arrows grouped by source, then by endomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverRep {
    pub vertices: Vec<Vertex>,
    pub arrows: Vec<Arrow>,
    pub endos: Vec<BiquandleMap>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuiverError {
    /// `endos[index]` is not an endomorphism of the module's biquandle.
    NotEndomorphism { index: usize },
}

impl fmt::Display for QuiverError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuiverError::NotEndomorphism { index } => {
                write!(f, "map #{} is not an endomorphism of the biquandle", index + 1)
            }
        }
    }
}

impl core::error::Error for QuiverError {}

pub fn apply_endomorphism(c: &Coloring, sigma: &BiquandleMap) -> Coloring {
    Coloring { colors: c.colors.iter().map(|&x| sigma.apply(x)).collect() }
}

/// Build the decorated quiver for `d` with arrows from `endos`.
pub fn build_quiver(d: &Diagram, m: &BiquandleModule, endos: &[BiquandleMap]) -> Result<QuiverRep, QuiverError> {
    let x = m.biquandle();
    for (index, e) in endos.iter().enumerate() {
        if e.image.len() != x.n() || !is_homomorphism(x, x, &e.image) {
            return Err(QuiverError::NotEndomorphism { index });
        }
    }
    let colorings = enumerate_colorings(d, x);
    let mut vertices = Vec::with_capacity(colorings.len());
    for c in &colorings {
        let sys = build_bead_system(d, c, m).expect("enumerated colorings fit the module");
        vertices.push(Vertex { coloring: c.clone(), module: solve_system(&sys) });
    }
    let mut arrows = Vec::with_capacity(colorings.len() * endos.len());
    for (src, c) in colorings.iter().enumerate() {
        let image = image_closure(x, &c.colors);
        for (endo, sigma) in endos.iter().enumerate() {
            let target = apply_endomorphism(c, sigma);
            let dst = colorings.binary_search(&target).expect("homset is closed under endomorphisms");
            let same = image
                .iter()
                .all(|&a| image.iter().all(|&b| m.same_coefficients((a, b), (sigma.apply(a), sigma.apply(b)))));
            let weight = if same { Weight::Identity } else { Weight::Zero };
            arrows.push(Arrow { src, endo, dst, weight });
        }
    }
    Ok(QuiverRep { vertices, arrows, endos: endos.to_vec() })
}
