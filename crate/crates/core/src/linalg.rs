//! Exact linear algebra over `Z_m`.

use alloc::vec::Vec;

use num_integer::Integer;

use crate::ring::Zm;

/// Reduced row echelon form over a prime field; returns the pivot columns.
/// Pivots are the first nonzero entry found scanning down each column.
pub fn rref_mod_p(rows: &mut [Vec<u32>], ring: Zm) -> Vec<usize> {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..cols {
        let Some(found) = (top..rows.len()).find(|&i| rows[i][col] != 0) else { continue };
        rows.swap(top, found);
        let inv = ring.inv(rows[top][col]).expect("nonzero entries of a field are units");
        for v in rows[top].iter_mut() {
            *v = ring.mul(*v, inv);
        }
        for i in 0..rows.len() {
            let f = rows[i][col];
            if i == top || f == 0 {
                continue;
            }
            let pivot = rows[top].clone();
            for (v, &p) in rows[i].iter_mut().zip(&pivot) {
                *v = ring.sub(*v, ring.mul(f, p));
            }
        }
        pivots.push(col);
        top += 1;
        if top == rows.len() {
            break;
        }
    }
    pivots
}

/// Rank over a prime field.
pub fn rank_mod_p(rows: &[Vec<u32>], ring: Zm) -> usize {
    let mut work = rows.to_vec();
    rref_mod_p(&mut work, ring).len()
}

/// Diagonal of a Smith-style diagonalization over the integers with every
/// entry kept mod `m`. The operations are unimodular over `Z`, hence
/// invertible mod `m`, so the kernel of the diagonal matrix is isomorphic to
/// the kernel of the input. Entries need not divide one another.
pub fn smith_diagonal_mod(rows: &[Vec<u32>], ring: Zm) -> Vec<u32> {
    let m = ring.modulus() as i64;
    let mut a: Vec<Vec<i64>> = rows.iter().map(|r| r.iter().map(|&v| v as i64 % m).collect()).collect();
    let nrows = a.len();
    let ncols = a.first().map_or(0, |r| r.len());
    let mut diag = Vec::new();
    for k in 0..nrows.min(ncols) {
        let Some((pi, pj)) = (k..nrows).flat_map(|i| (k..ncols).map(move |j| (i, j))).find(|&(i, j)| a[i][j] != 0)
        else {
            break;
        };
        a.swap(k, pi);
        for row in a.iter_mut() {
            row.swap(k, pj);
        }
        loop {
            let mut dirty = false;
            for i in k + 1..nrows {
                if a[i][k] != 0 {
                    combine_rows(&mut a, k, i, m);
                    dirty = true;
                }
            }
            for j in k + 1..ncols {
                if a[k][j] != 0 {
                    combine_cols(&mut a, k, j, m);
                    dirty = true;
                }
            }
            if !dirty {
                break;
            }
        }
        diag.push(a[k][k] as u32);
    }
    diag
}

/// Replace rows `k, i` by a unimodular combination putting `gcd` at `(k,k)`
/// and zero at `(i,k)`. A pivot that already divides only subtracts, which
/// leaves row `k` alone and so guarantees termination.
fn combine_rows(a: &mut [Vec<i64>], k: usize, i: usize, m: i64) {
    let (p, q) = (a[k][k], a[i][k]);
    if q % p == 0 {
        let f = q / p;
        for j in 0..a[k].len() {
            a[i][j] = (a[i][j] - f * a[k][j]).rem_euclid(m);
        }
        return;
    }
    let e = p.extended_gcd(&q);
    let (pg, qg) = (p / e.gcd, q / e.gcd);
    for j in 0..a[k].len() {
        let (x, y) = (a[k][j], a[i][j]);
        a[k][j] = (e.x * x + e.y * y).rem_euclid(m);
        a[i][j] = (-qg * x + pg * y).rem_euclid(m);
    }
}

fn combine_cols(a: &mut [Vec<i64>], k: usize, j: usize, m: i64) {
    let (p, q) = (a[k][k], a[k][j]);
    if q % p == 0 {
        let f = q / p;
        for row in a.iter_mut() {
            row[j] = (row[j] - f * row[k]).rem_euclid(m);
        }
        return;
    }
    let e = p.extended_gcd(&q);
    let (pg, qg) = (p / e.gcd, q / e.gcd);
    for row in a.iter_mut() {
        let (x, y) = (row[k], row[j]);
        row[k] = (e.x * x + e.y * y).rem_euclid(m);
        row[j] = (-qg * x + pg * y).rem_euclid(m);
    }
}

/// The solution module of a homogeneous system over `Z_m`, as
/// `Z_m^free_rank ⊕ Z_{f1} ⊕ … ` in invariant-factor form, so each proper
/// factor divides the next and `Z_2 ⊕ Z_3` over `Z_6` counts as free.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SolutionModule {
    pub modulus: u32,
    pub free_rank: usize,
    pub invariant_factors: Vec<u32>,
}

impl SolutionModule {
    /// The exponent used for `x` in the path polynomial.
    pub fn rank(&self) -> usize {
        self.free_rank
    }

    /// Number of solutions, or `None` on overflow.
    pub fn order(&self) -> Option<u128> {
        let mut total: u128 = 1;
        for _ in 0..self.free_rank {
            total = total.checked_mul(self.modulus as u128)?;
        }
        for &f in &self.invariant_factors {
            total = total.checked_mul(f as u128)?;
        }
        Some(total)
    }
}

/// Solve `rows · v = 0` over `Z_m` with `vars` unknowns.
///
/// Prime moduli use Gaussian elimination; other moduli use
/// [`smith_diagonal_mod`].
pub fn solution_module(rows: &[Vec<u32>], vars: usize, ring: Zm) -> SolutionModule {
    let m = ring.modulus();
    if ring.is_field() {
        return SolutionModule { modulus: m, free_rank: vars - rank_mod_p(rows, ring), invariant_factors: Vec::new() };
    }
    let diag = smith_diagonal_mod(rows, ring);
    // every zero column and every diagonal entry d contributes Z_gcd(d, m)
    let mut orders = alloc::vec![m; vars - diag.len()];
    orders.extend(diag.iter().map(|d| d.gcd(&m)).filter(|&g| g > 1));
    let factors = invariant_factors(&orders);
    let free_rank = factors.iter().filter(|&&f| f == m).count();
    let proper = factors.into_iter().filter(|&f| f != m).collect();
    SolutionModule { modulus: m, free_rank, invariant_factors: proper }
}

/// Canonical invariant factors of `⊕ Z_{g}`: each divides the next.
fn invariant_factors(orders: &[u32]) -> Vec<u32> {
    let mut by_prime: Vec<(u32, Vec<u32>)> = Vec::new();
    for &g in orders {
        let mut rest = g;
        let mut p = 2;
        while rest > 1 {
            if p * p > rest {
                p = rest;
            }
            if rest % p == 0 {
                let mut power = 1;
                while rest % p == 0 {
                    rest /= p;
                    power *= p;
                }
                match by_prime.iter_mut().find(|(q, _)| *q == p) {
                    Some((_, v)) => v.push(power),
                    None => by_prime.push((p, alloc::vec![power])),
                }
            }
            p += 1;
        }
    }
    let len = by_prime.iter().map(|(_, v)| v.len()).max().unwrap_or(0);
    for (_, v) in by_prime.iter_mut() {
        v.sort_unstable_by(|a, b| b.cmp(a));
    }
    let mut out: Vec<u32> =
        (0..len).map(|i| by_prime.iter().map(|(_, v)| v.get(i).copied().unwrap_or(1)).product()).collect();
    out.sort_unstable();
    out
}
