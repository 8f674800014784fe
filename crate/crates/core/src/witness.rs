//! Extreme-witness outputs shared by the matrix and convolution engines.

/// Which extreme witness to report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Extreme {
    Min,
    Max,
}

/// Per-cell witness of a Boolean matrix product; `None` where the product bit is 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MatWitnesses {
    n: usize,
    cells: Vec<Option<usize>>,
}

impl MatWitnesses {
    pub(crate) fn new(n: usize) -> Self {
        MatWitnesses { n, cells: vec![None; n * n] }
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, k: usize) {
        self.cells[i * self.n + j] = Some(k);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Option<usize> {
        self.cells[i * self.n + j]
    }

    pub fn cells(&self) -> &[Option<usize>] {
        &self.cells
    }
}

/// Per-position witness of a Boolean convolution of length `2n - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConvWitnesses {
    positions: Vec<Option<usize>>,
}

impl ConvWitnesses {
    pub(crate) fn new(len: usize) -> Self {
        ConvWitnesses { positions: vec![None; len] }
    }

    pub(crate) fn set(&mut self, k: usize, l: usize) {
        self.positions[k] = Some(l);
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn get(&self, k: usize) -> Option<usize> {
        self.positions[k]
    }

    pub fn positions(&self) -> &[Option<usize>] {
        &self.positions
    }
}
