//! Finite biquandles given by operation tables.
//!
//! Elements are `0..n` internally; tables and reports are 1-based at the
//! boundary (`from_rows`, `Display`).

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::table::{DimensionError, Square};

pub type Elem = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Op {
    Under,
    Over,
}

/// One failed instance of a biquandle axiom, with 0-based witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomViolation {
    /// `x ⊳̲ x ≠ x ⊳̄ x`.
    Diagonal { x: Elem },
    /// Column `y` of the table is not a permutation of the elements.
    NotPermutation { op: Op, y: Elem },
    /// `S(x1,y1) = S(x2,y2)` for distinct pairs.
    NotBijective { first: (Elem, Elem), second: (Elem, Elem) },
    /// Exchange law 1, 2 or 3 fails at `(x, y, z)`.
    Exchange { law: u8, x: Elem, y: Elem, z: Elem },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            AxiomViolation::Diagonal { x } => write!(f, "diagonal fails at x={}", x + 1),
            AxiomViolation::NotPermutation { op, y } => {
                let name = if op == Op::Under { "under" } else { "over" };
                write!(f, "{name} column {} is not a permutation", y + 1)
            }
            AxiomViolation::NotBijective { first, second } => write!(
                f,
                "S is not bijective: ({},{}) and ({},{}) collide",
                first.0 + 1,
                first.1 + 1,
                second.0 + 1,
                second.1 + 1
            ),
            AxiomViolation::Exchange { law, x, y, z } => {
                write!(f, "exchange law {law} fails at ({},{},{})", x + 1, y + 1, z + 1)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TableError {
    Dimension(DimensionError),
    /// A 1-based entry outside `1..=n`.
    Entry {
        row: usize,
        column: usize,
        value: u32,
    },
}

impl fmt::Display for TableError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableError::Dimension(e) => e.fmt(f),
            TableError::Entry { row, column, value } => {
                write!(f, "entry {value} at ({row},{column}) is out of range")
            }
        }
    }
}

impl core::error::Error for TableError {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BiquandleError {
    Table(TableError),
    Axioms(Vec<AxiomViolation>),
}

impl fmt::Display for BiquandleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BiquandleError::Table(e) => e.fmt(f),
            BiquandleError::Axioms(v) => {
                write!(f, "not a biquandle ({} violations", v.len())?;
                if let Some(first) = v.first() {
                    write!(f, ", first: {first}")?;
                }
                write!(f, ")")
            }
        }
    }
}

impl core::error::Error for BiquandleError {}

/// Operation tables for `x ⊳̲ y` and `x ⊳̄ y`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Biquandle {
    under: Square,
    over: Square,
}

fn zero_based(rows: &[Vec<u32>], n: Option<usize>) -> Result<Square, TableError> {
    let sq = Square::from_rows(rows, n).map_err(TableError::Dimension)?;
    let n = sq.n() as u32;
    for (i, row) in rows.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            if v == 0 || v > n {
                return Err(TableError::Entry { row: i + 1, column: j + 1, value: v });
            }
        }
    }
    Ok(sq.map(|v| v - 1))
}

/// Axiom report for 1-based tables; empty iff they form a biquandle.
pub fn check_biquandle(under: &[Vec<u32>], over: &[Vec<u32>]) -> Result<Vec<AxiomViolation>, TableError> {
    let u = zero_based(under, None)?;
    let o = zero_based(over, Some(u.n()))?;
    Ok(Biquandle { under: u, over: o }.violations())
}

impl Biquandle {
    /// Build from 1-based tables, rejecting anything that fails an axiom.
    pub fn from_rows(under: &[Vec<u32>], over: &[Vec<u32>]) -> Result<Self, BiquandleError> {
        let u = zero_based(under, None).map_err(BiquandleError::Table)?;
        let o = zero_based(over, Some(u.n())).map_err(BiquandleError::Table)?;
        let b = Biquandle { under: u, over: o };
        let report = b.violations();
        if report.is_empty() {
            Ok(b)
        } else {
            Err(BiquandleError::Axioms(report))
        }
    }

    pub fn n(&self) -> usize {
        self.under.n()
    }

    /// `x ⊳̲ y`.
    #[inline]
    pub fn under(&self, x: Elem, y: Elem) -> Elem {
        self.under.get(x, y) as Elem
    }

    /// `x ⊳̄ y`.
    #[inline]
    pub fn over(&self, x: Elem, y: Elem) -> Elem {
        self.over.get(x, y) as Elem
    }

    /// `S(x, y) = (y ⊳̄ x, x ⊳̲ y)`.
    #[inline]
    pub fn s_map(&self, x: Elem, y: Elem) -> (Elem, Elem) {
        (self.over(y, x), self.under(x, y))
    }

    /// 1-based rows of the under table.
    pub fn under_rows(&self) -> Vec<Vec<u32>> {
        self.under.map(|v| v + 1).rows()
    }

    /// 1-based rows of the over table.
    pub fn over_rows(&self) -> Vec<Vec<u32>> {
        self.over.map(|v| v + 1).rows()
    }

    pub fn violations(&self) -> Vec<AxiomViolation> {
        let n = self.n();
        let (u, o) = (|x, y| self.under(x, y), |x, y| self.over(x, y));
        let mut report = Vec::new();
        for x in 0..n {
            if u(x, x) != o(x, x) {
                report.push(AxiomViolation::Diagonal { x });
            }
        }
        for (op, f) in [(Op::Under, &u as &dyn Fn(Elem, Elem) -> Elem), (Op::Over, &o)] {
            for y in 0..n {
                let mut seen = vec![false; n];
                for x in 0..n {
                    seen[f(x, y)] = true;
                }
                if seen.iter().any(|s| !s) {
                    report.push(AxiomViolation::NotPermutation { op, y });
                }
            }
        }
        let mut preimage: Vec<Option<(Elem, Elem)>> = vec![None; n * n];
        for x in 0..n {
            for y in 0..n {
                let (p, q) = self.s_map(x, y);
                match preimage[p * n + q] {
                    Some(first) => report.push(AxiomViolation::NotBijective { first, second: (x, y) }),
                    None => preimage[p * n + q] = Some((x, y)),
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let laws = [
                        u(u(x, y), u(z, y)) == u(u(x, z), o(y, z)),
                        o(u(x, y), u(z, y)) == u(o(x, z), o(y, z)),
                        o(o(x, y), o(z, y)) == o(o(x, z), u(y, z)),
                    ];
                    for (i, ok) in laws.iter().enumerate() {
                        if !ok {
                            report.push(AxiomViolation::Exchange { law: i as u8 + 1, x, y, z });
                        }
                    }
                }
            }
        }
        report
    }

    /// Restriction to a subset closed under both operations.
    pub fn restrict(&self, subset: &[Elem]) -> Option<Biquandle> {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &x) in subset.iter().enumerate() {
            index[x] = i;
        }
        let k = subset.len();
        let mut u = Square::filled(k, 0);
        let mut o = Square::filled(k, 0);
        for (i, &x) in subset.iter().enumerate() {
            for (j, &y) in subset.iter().enumerate() {
                let (a, b) = (index[self.under(x, y)], index[self.over(x, y)]);
                if a == usize::MAX || b == usize::MAX {
                    return None;
                }
                u.set(i, j, a as u32);
                o.set(i, j, b as u32);
            }
        }
        Some(Biquandle { under: u, over: o })
    }
}

/// A map between biquandles stored as its image array.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BiquandleMap {
    pub image: Vec<Elem>,
}

impl BiquandleMap {
    pub fn identity(n: usize) -> Self {
        BiquandleMap { image: (0..n).collect() }
    }

    /// From a 1-based image array.
    pub fn from_one_based(image: &[u32]) -> Self {
        BiquandleMap { image: image.iter().map(|&v| v as Elem - 1).collect() }
    }

    pub fn one_based(&self) -> Vec<u32> {
        self.image.iter().map(|&v| v as u32 + 1).collect()
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.image[x]
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn after(&self, first: &BiquandleMap) -> BiquandleMap {
        BiquandleMap { image: first.image.iter().map(|&x| self.image[x]).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x)
    }
}

/// Both homomorphism equations hold for every pair.
pub fn is_homomorphism(source: &Biquandle, target: &Biquandle, f: &[Elem]) -> bool {
    let n = source.n();
    if f.len() != n || f.iter().any(|&v| v >= target.n()) {
        return false;
    }
    (0..n).all(|x| {
        (0..n).all(|y| {
            f[source.under(x, y)] == target.under(f[x], f[y]) && f[source.over(x, y)] == target.over(f[x], f[y])
        })
    })
}

/// Every endomorphism, in lexicographic order of image arrays.
///
/// Images are assigned in element order; a pair is checked as soon as both
/// arguments and both products have images.
pub fn enumerate_endomorphisms(x: &Biquandle) -> Vec<BiquandleMap> {
    let n = x.n();
    let mut out = Vec::new();
    let mut image = vec![usize::MAX; n];
    extend_endo(x, 0, &mut image, &mut out);
    out
}

/// Checks every equation that became decidable when element `k` got its image.
fn consistent_at(x: &Biquandle, image: &[Elem], k: Elem) -> bool {
    for a in 0..=k {
        for b in 0..=k {
            let (u, o) = (x.under(a, b), x.over(a, b));
            let fresh = a == k || b == k || u == k || o == k;
            if !fresh {
                continue;
            }
            if u <= k && image[u] != x.under(image[a], image[b]) {
                return false;
            }
            if o <= k && image[o] != x.over(image[a], image[b]) {
                return false;
            }
        }
    }
    true
}

fn extend_endo(x: &Biquandle, k: Elem, image: &mut Vec<Elem>, out: &mut Vec<BiquandleMap>) {
    let n = x.n();
    if k == n {
        out.push(BiquandleMap { image: image.clone() });
        return;
    }
    for v in 0..n {
        image[k] = v;
        if consistent_at(x, image, k) {
            extend_endo(x, k + 1, image, out);
        }
    }
    image[k] = usize::MAX;
}

/// Smallest superset of `seed` closed under `⊳̲` and `⊳̄`, sorted.
///
/// Closing under the forward operations suffices: on a finite invariant set
/// the inverse operations are restrictions of permutations.
pub fn image_closure(x: &Biquandle, seed: &[Elem]) -> Vec<Elem> {
    let n = x.n();
    let mut inside = vec![false; n];
    let mut members: Vec<Elem> = Vec::new();
    for &s in seed {
        if !inside[s] {
            inside[s] = true;
            members.push(s);
        }
    }
    let mut i = 0;
    while i < members.len() {
        let a = members[i];
        let mut j = 0;
        while j <= i {
            let b = members[j];
            for p in [x.under(a, b), x.over(a, b), x.under(b, a), x.over(b, a)] {
                if !inside[p] {
                    inside[p] = true;
                    members.push(p);
                }
            }
            j += 1;
        }
        i += 1;
    }
    members.sort_unstable();
    members
}
