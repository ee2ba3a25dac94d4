use alloc::vec::Vec;
use core::fmt;

/// A dense `n × n` table indexed from 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Square {
    n: usize,
    cells: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionError {
    pub expected: usize,
    pub row: Option<usize>,
    pub found: usize,
}

impl fmt::Display for DimensionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.row {
            None => write!(f, "dimension mismatch: expected {} rows, found {}", self.expected, self.found),
            Some(r) => {
                write!(f, "dimension mismatch: row {} has {} entries, expected {}", r + 1, self.found, self.expected)
            }
        }
    }
}

impl core::error::Error for DimensionError {}

impl Square {
    pub fn filled(n: usize, value: u32) -> Self {
        Square { n, cells: alloc::vec![value; n * n] }
    }

    /// Rows of length `n`; the row count must equal `n` (or `expected` when given).
    pub fn from_rows(rows: &[Vec<u32>], expected: Option<usize>) -> Result<Self, DimensionError> {
        let n = expected.unwrap_or(rows.len());
        if rows.len() != n {
            return Err(DimensionError { expected: n, row: None, found: rows.len() });
        }
        let mut cells = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(DimensionError { expected: n, row: Some(i), found: row.len() });
            }
            cells.extend_from_slice(row);
        }
        Ok(Square { n, cells })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> u32 {
        self.cells[x * self.n + y]
    }

    #[inline]
    pub fn set(&mut self, x: usize, y: usize, v: u32) {
        self.cells[x * self.n + y] = v;
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.cells.chunks(self.n.max(1)).map(|r| r.to_vec()).collect()
    }

    pub fn cells(&self) -> &[u32] {
        &self.cells
    }

    pub fn map(&self, f: impl Fn(u32) -> u32) -> Square {
        Square { n: self.n, cells: self.cells.iter().map(|&v| f(v)).collect() }
    }
}
