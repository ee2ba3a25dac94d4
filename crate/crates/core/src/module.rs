//! Biquandle modules: coefficient tables `t, s, r` over `Z_m`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::biquandle::{Biquandle, Elem};
use crate::ring::Zm;
use crate::table::{DimensionError, Square};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Coefficient {
    T,
    S,
    R,
}

/// One failed module condition, with 0-based witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleViolation {
    /// An entry not in `0..m`.
    Entry { table: Coefficient, x: Elem, y: Elem },
    /// `t[x][x] + s[x][x] ≠ r[x][x]`.
    Diagonal { x: Elem },
    /// `t[x][y]` or `r[x][y]` is not a unit.
    NotUnit { table: Coefficient, x: Elem, y: Elem },
    /// Equation 1 to 6 fails at `(x, y, z)`.
    Equation { index: u8, x: Elem, y: Elem, z: Elem },
}

impl fmt::Display for ModuleViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ModuleViolation::Entry { table, x, y } => {
                write!(f, "{table:?} entry at ({},{}) is not a residue", x + 1, y + 1)
            }
            ModuleViolation::Diagonal { x } => write!(f, "diagonal t+s=r fails at x={}", x + 1),
            ModuleViolation::NotUnit { table, x, y } => {
                write!(f, "{table:?} entry at ({},{}) is not a unit", x + 1, y + 1)
            }
            ModuleViolation::Equation { index, x, y, z } => {
                write!(f, "equation {index} fails at ({},{},{})", x + 1, y + 1, z + 1)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleError {
    Dimension(DimensionError),
    Axioms(Vec<ModuleViolation>),
}

impl fmt::Display for ModuleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleError::Dimension(e) => e.fmt(f),
            ModuleError::Axioms(v) => {
                write!(f, "not a biquandle module ({} violations", v.len())?;
                if let Some(first) = v.first() {
                    write!(f, ", first: {first}")?;
                }
                write!(f, ")")
            }
        }
    }
}

impl core::error::Error for ModuleError {}

/// Equation `index` (1..=6) at `(x, y, z)`, reading coefficients through `get`.
fn equation(
    bq: &Biquandle,
    ring: &Zm,
    index: u8,
    (x, y, z): (Elem, Elem, Elem),
    get: &mut impl FnMut(Coefficient, Elem, Elem) -> u32,
) -> bool {
    use Coefficient::{R, S, T};
    let u = |a, b| bq.under(a, b);
    let o = |a, b| bq.over(a, b);
    let mut g = |c, a, b| get(c, a, b);
    let mul = |a, b| ring.mul(a, b);
    match index {
        1 => mul(g(R, o(y, x), o(z, x)), g(R, x, z)) == mul(g(R, u(x, y), o(z, y)), g(R, y, z)),
        2 => mul(g(R, u(x, z), u(y, z)), g(T, y, z)) == mul(g(T, o(y, x), o(z, x)), g(R, x, y)),
        3 => mul(g(R, u(x, z), u(y, z)), g(S, y, z)) == mul(g(S, o(y, x), o(z, x)), g(R, x, z)),
        4 => mul(g(T, u(x, z), u(y, z)), g(T, x, z)) == mul(g(T, u(x, y), o(z, y)), g(T, x, y)),
        5 => mul(g(S, u(x, z), u(y, z)), g(T, y, z)) == mul(g(T, u(x, y), o(z, y)), g(S, x, y)),
        _ => {
            let lhs = ring.add(mul(g(T, u(x, z), u(y, z)), g(S, x, z)), mul(g(S, u(x, z), u(y, z)), g(S, y, z)));
            lhs == mul(g(S, u(x, y), o(z, y)), g(R, y, z))
        }
    }
}

/// Report for tables of residues; empty iff `(t, s, r)` is an `X`-module.
pub fn check_module(
    bq: &Biquandle,
    ring: Zm,
    t: &[Vec<u32>],
    s: &[Vec<u32>],
    r: &[Vec<u32>],
) -> Result<Vec<ModuleViolation>, DimensionError> {
    let n = bq.n();
    let tables = [Square::from_rows(t, Some(n))?, Square::from_rows(s, Some(n))?, Square::from_rows(r, Some(n))?];
    Ok(violations(bq, ring, &tables))
}

fn violations(bq: &Biquandle, ring: Zm, tables: &[Square; 3]) -> Vec<ModuleViolation> {
    use Coefficient::{R, S, T};
    let n = bq.n();
    let m = ring.modulus();
    let mut report = Vec::new();
    for (table, sq) in [T, S, R].into_iter().zip(tables) {
        for x in 0..n {
            for y in 0..n {
                if sq.get(x, y) >= m {
                    report.push(ModuleViolation::Entry { table, x, y });
                }
            }
        }
    }
    if !report.is_empty() {
        return report;
    }
    let [t, s, r] = tables;
    for x in 0..n {
        if ring.add(t.get(x, x), s.get(x, x)) != r.get(x, x) {
            report.push(ModuleViolation::Diagonal { x });
        }
    }
    for (table, sq) in [(T, t), (R, r)] {
        for x in 0..n {
            for y in 0..n {
                if !ring.is_unit(sq.get(x, y)) {
                    report.push(ModuleViolation::NotUnit { table, x, y });
                }
            }
        }
    }
    let mut get = |c: Coefficient, a: Elem, b: Elem| tables[c as usize].get(a, b);
    for index in 1..=6u8 {
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if !equation(bq, &ring, index, (x, y, z), &mut get) {
                        report.push(ModuleViolation::Equation { index, x, y, z });
                    }
                }
            }
        }
    }
    report
}

/// A biquandle together with a valid module structure over `Z_m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BiquandleModule {
    bq: Biquandle,
    ring: Zm,
    tables: [Square; 3],
}

impl BiquandleModule {
    pub fn new(bq: Biquandle, ring: Zm, t: &[Vec<u32>], s: &[Vec<u32>], r: &[Vec<u32>]) -> Result<Self, ModuleError> {
        let n = bq.n();
        let sq = |rows| Square::from_rows(rows, Some(n)).map_err(ModuleError::Dimension);
        let tables = [sq(t)?, sq(s)?, sq(r)?];
        let report = violations(&bq, ring, &tables);
        if !report.is_empty() {
            return Err(ModuleError::Axioms(report));
        }
        Ok(BiquandleModule { bq, ring, tables })
    }

    pub fn biquandle(&self) -> &Biquandle {
        &self.bq
    }

    pub fn ring(&self) -> Zm {
        self.ring
    }

    #[inline]
    pub fn t(&self, x: Elem, y: Elem) -> u32 {
        self.tables[0].get(x, y)
    }

    #[inline]
    pub fn s(&self, x: Elem, y: Elem) -> u32 {
        self.tables[1].get(x, y)
    }

    #[inline]
    pub fn r(&self, x: Elem, y: Elem) -> u32 {
        self.tables[2].get(x, y)
    }

    pub fn rows(&self, c: Coefficient) -> Vec<Vec<u32>> {
        self.tables[c as usize].rows()
    }

    /// `t`, `s` and `r` agree at `(x, y)` and `(x', y')`.
    pub fn same_coefficients(&self, (x, y): (Elem, Elem), (p, q): (Elem, Elem)) -> bool {
        self.tables.iter().all(|sq| sq.get(x, y) == sq.get(p, q))
    }
}

/// Cell `k` of the search order: all of `t`, then `s`, then `r`, row-major.
fn cell_of(n: usize, k: usize) -> (Coefficient, Elem, Elem) {
    let table = [Coefficient::T, Coefficient::S, Coefficient::R][k / (n * n)];
    let rest = k % (n * n);
    (table, rest / n, rest % n)
}

fn index_of(n: usize, c: Coefficient, x: Elem, y: Elem) -> usize {
    c as usize * n * n + x * n + y
}

enum Check {
    Diagonal(Elem),
    Equation(u8, Elem, Elem, Elem),
}

/// Up to `limit` modules in lexicographic order of the concatenated
/// `t, s, r` entries. `fixed` may pin cells (same order, length `3n²`).
pub fn search_modules_with(
    bq: &Biquandle,
    ring: Zm,
    limit: usize,
    fixed: Option<&[Option<u32>]>,
) -> Vec<BiquandleModule> {
    let n = bq.n();
    let cells = 3 * n * n;
    let mut checks: Vec<Vec<Check>> = (0..cells).map(|_| Vec::new()).collect();
    for x in 0..n {
        checks[index_of(n, Coefficient::R, x, x)].push(Check::Diagonal(x));
    }
    for index in 1..=6u8 {
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let mut ready = 0;
                    let mut record = |c, a, b| {
                        ready = ready.max(index_of(n, c, a, b));
                        0
                    };
                    equation(bq, &ring, index, (x, y, z), &mut record);
                    checks[ready].push(Check::Equation(index, x, y, z));
                }
            }
        }
    }
    let m = ring.modulus();
    let units: Vec<u32> = (0..m).filter(|&v| ring.is_unit(v)).collect();
    let all: Vec<u32> = (0..m).collect();
    let domains: Vec<Vec<u32>> = (0..cells)
        .map(|k| {
            if let Some(v) = fixed.and_then(|f| f.get(k).copied().flatten()) {
                return vec![v];
            }
            match cell_of(n, k).0 {
                Coefficient::S => all.clone(),
                _ => units.clone(),
            }
        })
        .collect();
    let mut search = Search { bq, ring, n, checks, domains, values: vec![0; cells], limit, out: Vec::new() };
    if limit > 0 {
        search.descend(0);
    }
    search.out
}

/// Up to `limit` modules in lexicographic order.
pub fn search_modules(bq: &Biquandle, ring: Zm, limit: usize) -> Vec<BiquandleModule> {
    search_modules_with(bq, ring, limit, None)
}

struct Search<'a> {
    bq: &'a Biquandle,
    ring: Zm,
    n: usize,
    checks: Vec<Vec<Check>>,
    domains: Vec<Vec<u32>>,
    values: Vec<u32>,
    limit: usize,
    out: Vec<BiquandleModule>,
}

impl Search<'_> {
    fn ok_at(&self, k: usize) -> bool {
        let n = self.n;
        let values = &self.values;
        let mut get = |c, a, b| values[index_of(n, c, a, b)];
        self.checks[k].iter().all(|check| match *check {
            Check::Diagonal(x) => {
                let (t, s, r) = (get(Coefficient::T, x, x), get(Coefficient::S, x, x), get(Coefficient::R, x, x));
                self.ring.add(t, s) == r
            }
            Check::Equation(i, x, y, z) => equation(self.bq, &self.ring, i, (x, y, z), &mut get),
        })
    }

    fn descend(&mut self, k: usize) -> bool {
        if k == self.values.len() {
            let n = self.n;
            let table = |i: usize| {
                Square::from_rows(
                    &self.values[i * n * n..(i + 1) * n * n].chunks(n.max(1)).map(|r| r.to_vec()).collect::<Vec<_>>(),
                    Some(n),
                )
                .expect("search tables are square")
            };
            let tables = [table(0), table(1), table(2)];
            self.out.push(BiquandleModule { bq: self.bq.clone(), ring: self.ring, tables });
            return self.out.len() >= self.limit;
        }
        for i in 0..self.domains[k].len() {
            self.values[k] = self.domains[k][i];
            if self.ok_at(k) && self.descend(k + 1) {
                return true;
            }
        }
        false
    }
}
