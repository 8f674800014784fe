//! Integer inputs, the tropical output value, and overflow-checked sums.
//!
//! Inputs are bounded by [`ENTRY_BOUND`] in absolute value and dimensions by
//! [`MAX_DIMENSION`], so every `x + 2kM` shift the hardness transforms apply
//! stays far inside `i64`. All indices in this crate are 0-based.

use std::fmt;

use crate::error::{Error, Result};

/// Largest admissible absolute value of an input entry.
pub const ENTRY_BOUND: i64 = (1 << 31) - 1;

/// Largest admissible matrix dimension or vector length.
pub const MAX_DIMENSION: usize = 1 << 20;

/// Exact sum, or [`Error::Overflow`] instead of wrapping.
pub fn checked_add(x: i64, y: i64) -> Result<i64> {
    x.checked_add(y).ok_or(Error::Overflow { x, y })
}

pub(crate) fn checked_mul(x: i64, y: i64) -> Result<i64> {
    x.checked_mul(y).ok_or(Error::Overflow { x, y })
}

fn check_entries(values: &[i64]) -> Result<()> {
    match values.iter().position(|v| v.abs() > ENTRY_BOUND) {
        Some(position) => Err(Error::EntryOutOfBounds { value: values[position], position, bound: ENTRY_BOUND }),
        None => Ok(()),
    }
}

fn check_dimension(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    if n > MAX_DIMENSION {
        return Err(Error::DimensionTooLarge { n, max: MAX_DIMENSION });
    }
    Ok(())
}

/// An element of `Z ∪ {+∞}` ordered so that every finite value is below
/// [`Tropical::Infinity`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tropical {
    Finite(i64),
    Infinity,
}

impl Tropical {
    pub fn finite(self) -> Option<i64> {
        match self {
            Tropical::Finite(v) => Some(v),
            Tropical::Infinity => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Tropical::Finite(_))
    }

    /// Replaces `self` with `candidate` when it is smaller. Returns whether it changed.
    pub fn relax(&mut self, candidate: i64) -> bool {
        let candidate = Tropical::Finite(candidate);
        if candidate < *self {
            *self = candidate;
            true
        } else {
            false
        }
    }
}

impl From<i64> for Tropical {
    fn from(v: i64) -> Self {
        Tropical::Finite(v)
    }
}

impl fmt::Display for Tropical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tropical::Finite(v) => write!(f, "{v}"),
            Tropical::Infinity => f.write_str("inf"),
        }
    }
}

/// Dense integer vector `(a_0, ..., a_{n-1})`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntVector {
    coords: Vec<i64>,
}

impl IntVector {
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        check_dimension(coords.len())?;
        check_entries(&coords)?;
        Ok(IntVector { coords })
    }

    /// Shifted vectors may leave the input bound; arithmetic on them stays checked.
    pub(crate) fn from_unbounded(coords: Vec<i64>) -> Self {
        debug_assert!(!coords.is_empty());
        IntVector { coords }
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.coords
    }

    pub fn get(&self, i: usize) -> i64 {
        self.coords[i]
    }

    pub fn max_abs(&self) -> i64 {
        self.coords.iter().map(|v| v.abs()).max().unwrap_or(0)
    }

    pub fn into_inner(self) -> Vec<i64> {
        self.coords
    }
}

impl AsRef<[i64]> for IntVector {
    fn as_ref(&self) -> &[i64] {
        &self.coords
    }
}

/// Dense square integer matrix stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn new(n: usize, data: Vec<i64>) -> Result<Self> {
        check_dimension(n)?;
        if data.len() != n * n {
            return Err(Error::ShapeMismatch { expected: n * n, found: data.len() });
        }
        check_entries(&data)?;
        Ok(IntMatrix { n, data })
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::ShapeMismatch { expected: n, found: row.len() });
            }
            data.extend_from_slice(row);
        }
        IntMatrix::new(n, data)
    }

    pub(crate) fn from_unbounded(n: usize, data: Vec<i64>) -> Self {
        debug_assert_eq!(data.len(), n * n);
        IntMatrix { n, data }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.n).map(|k| self.get(k, j)).collect()
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i64]> {
        self.data.chunks_exact(self.n)
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.data
    }

    pub fn transpose(&self) -> IntMatrix {
        let n = self.n;
        let data = (0..n * n).map(|idx| self.get(idx % n, idx / n)).collect();
        IntMatrix { n, data }
    }

    pub fn max_abs(&self) -> i64 {
        self.data.iter().map(|v| v.abs()).max().unwrap_or(0)
    }
}

/// Square matrix over `Z ∪ {+∞}`; the output of every matrix product here.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MinPlusMatrix {
    n: usize,
    values: Vec<Tropical>,
}

impl MinPlusMatrix {
    pub fn infinity(n: usize) -> Self {
        MinPlusMatrix { n, values: vec![Tropical::Infinity; n * n] }
    }

    pub fn from_values(n: usize, values: Vec<Tropical>) -> Result<Self> {
        if values.len() != n * n {
            return Err(Error::ShapeMismatch { expected: n * n, found: values.len() });
        }
        Ok(MinPlusMatrix { n, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Tropical {
        self.values[i * self.n + j]
    }

    pub fn relax(&mut self, i: usize, j: usize, candidate: i64) -> bool {
        self.values[i * self.n + j].relax(candidate)
    }

    pub fn values(&self) -> &[Tropical] {
        &self.values
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Tropical]> {
        self.values.chunks_exact(self.n)
    }

    pub fn transpose(&self) -> MinPlusMatrix {
        let n = self.n;
        let values = (0..n * n).map(|idx| self.get(idx % n, idx / n)).collect();
        MinPlusMatrix { n, values }
    }

    /// Entry-wise minimum with `other`.
    pub fn merge_min(&mut self, other: &MinPlusMatrix) {
        for (mine, theirs) in self.values.iter_mut().zip(&other.values) {
            *mine = (*mine).min(*theirs);
        }
    }

    /// The first entry (row-major) where `self` and `other` differ.
    pub fn first_difference(&self, other: &MinPlusMatrix) -> Option<(usize, usize)> {
        if self.n != other.n {
            return Some((0, 0));
        }
        self.values.iter().zip(&other.values).position(|(x, y)| x != y).map(|idx| (idx / self.n, idx % self.n))
    }
}

/// Vector over `Z ∪ {+∞}`; the output of every convolution here.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MinPlusVector {
    values: Vec<Tropical>,
}

impl MinPlusVector {
    pub fn infinity(len: usize) -> Self {
        MinPlusVector { values: vec![Tropical::Infinity; len] }
    }

    pub fn from_values(values: Vec<Tropical>) -> Self {
        MinPlusVector { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, k: usize) -> Tropical {
        self.values[k]
    }

    pub fn relax(&mut self, k: usize, candidate: i64) -> bool {
        self.values[k].relax(candidate)
    }

    pub fn values(&self) -> &[Tropical] {
        &self.values
    }

    pub fn merge_min(&mut self, other: &MinPlusVector) {
        for (mine, theirs) in self.values.iter_mut().zip(&other.values) {
            *mine = (*mine).min(*theirs);
        }
    }

    pub fn first_difference(&self, other: &MinPlusVector) -> Option<usize> {
        if self.len() != other.len() {
            return Some(self.len().min(other.len()));
        }
        self.values.iter().zip(&other.values).position(|(x, y)| x != y)
    }
}
