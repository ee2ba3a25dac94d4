//! Bead colorings: the linear system attached to one coloring.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::coloring::Coloring;
use crate::diagram::{Diagram, Label, Node};
use crate::linalg::{solution_module, SolutionModule};
use crate::module::BiquandleModule;
use crate::ring::Zm;

/// Rows over `Z_m`, one column per semiarc.
///
/// Row order follows the nodes: a crossing gives its `c` row then its `d`
/// row, a marked vertex three rows, a virtual node two.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BeadSystem {
    pub rows: Vec<Vec<u32>>,
    pub vars: usize,
    pub ring: Zm,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BeadError {
    /// The coloring does not fit the diagram or the module's biquandle.
    Mismatch,
}

impl fmt::Display for BeadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "coloring does not match the diagram or the module's biquandle")
    }
}

impl core::error::Error for BeadError {}

pub fn build_bead_system(d: &Diagram, c: &Coloring, m: &BiquandleModule) -> Result<BeadSystem, BeadError> {
    let n = m.biquandle().n();
    if c.colors.len() != d.semiarc_count() || c.colors.iter().any(|&v| v >= n) {
        return Err(BeadError::Mismatch);
    }
    let ring = m.ring();
    let vars = d.semiarc_count();
    let mut rows = Vec::new();
    let mut row = |terms: &[(Label, u32)]| {
        let mut r = vec![0u32; vars];
        for &(label, coef) in terms {
            let slot = &mut r[label as usize - 1];
            *slot = ring.add(*slot, coef);
        }
        rows.push(r);
    };
    let neg = |v| ring.neg(v);
    for node in d.nodes() {
        match *node {
            Node::Crossing(k) => {
                let (x, y) = (c.of(k.a), c.of(k.b));
                row(&[(k.c, 1), (k.a, neg(m.t(x, y))), (k.b, neg(m.s(x, y)))]);
                row(&[(k.d, 1), (k.b, neg(m.r(x, y)))]);
            }
            Node::Marked(v) => {
                for other in [v.b, v.c, v.d] {
                    row(&[(v.a, 1), (other, neg(1))]);
                }
            }
            Node::Virtual(v) => {
                row(&[(v.a, 1), (v.c, neg(1))]);
                row(&[(v.b, 1), (v.d, neg(1))]);
            }
            Node::Loop(_) => {}
        }
    }
    Ok(BeadSystem { rows, vars, ring })
}

pub fn solve_system(sys: &BeadSystem) -> SolutionModule {
    solution_module(&sys.rows, sys.vars, sys.ring)
}

/// Rank of the bead module at one coloring.
pub fn bead_rank(d: &Diagram, c: &Coloring, m: &BiquandleModule) -> Result<usize, BeadError> {
    Ok(solve_system(&build_bead_system(d, c, m)?).rank())
}
