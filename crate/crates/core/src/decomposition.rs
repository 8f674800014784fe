//! Partitions of a host sequence's positions into tagged monotone parts.

use std::fmt;

use crate::bits::BoolVector;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonotoneTag {
    NonDecreasing,
    NonIncreasing,
    /// All values equal; satisfies both orders.
    Uniform,
}

impl MonotoneTag {
    /// Whether `prev` followed by `next` respects this order.
    pub fn admits(self, prev: i64, next: i64) -> bool {
        match self {
            MonotoneTag::NonDecreasing => prev <= next,
            MonotoneTag::NonIncreasing => prev >= next,
            MonotoneTag::Uniform => prev == next,
        }
    }

    /// A part tagged `self` may be used where a part tagged `expected` is required.
    pub fn is_admissible_as(self, expected: MonotoneTag) -> bool {
        self == expected || self == MonotoneTag::Uniform
    }

    pub fn reversed(self) -> MonotoneTag {
        match self {
            MonotoneTag::NonDecreasing => MonotoneTag::NonIncreasing,
            MonotoneTag::NonIncreasing => MonotoneTag::NonDecreasing,
            MonotoneTag::Uniform => MonotoneTag::Uniform,
        }
    }

    /// Whether `values` in order satisfy the tag.
    pub fn holds_for(self, values: impl IntoIterator<Item = i64>) -> bool {
        let mut it = values.into_iter();
        let Some(mut prev) = it.next() else {
            return true;
        };
        for next in it {
            if !self.admits(prev, next) {
                return false;
            }
            prev = next;
        }
        true
    }
}

impl fmt::Display for MonotoneTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MonotoneTag::NonDecreasing => "non-decreasing",
            MonotoneTag::NonIncreasing => "non-increasing",
            MonotoneTag::Uniform => "uniform",
        })
    }
}

/// Positions of a host sequence, strictly increasing, with the order their values obey.
/// May be empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subsequence {
    pub indices: Vec<usize>,
    pub tag: MonotoneTag,
}

impl Subsequence {
    pub fn new(indices: Vec<usize>, tag: MonotoneTag) -> Self {
        Subsequence { indices, tag }
    }

    pub fn empty() -> Self {
        Subsequence { indices: Vec::new(), tag: MonotoneTag::Uniform }
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn values<'a>(&'a self, host: &'a [i64]) -> impl Iterator<Item = i64> + 'a {
        self.indices.iter().map(move |&i| host[i])
    }

    /// Characteristic vector over a host of length `n`.
    pub fn char_vector(&self, n: usize) -> Result<BoolVector> {
        if let Some(&index) = self.indices.iter().find(|&&i| i >= n) {
            return Err(Error::IndexOutOfRange { part: 0, index, len: n });
        }
        Ok(BoolVector::from_indices(n, &self.indices))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Decomposition {
    pub host_len: usize,
    pub parts: Vec<Subsequence>,
}

impl Decomposition {
    pub fn new(host_len: usize, parts: Vec<Subsequence>) -> Self {
        Decomposition { host_len, parts }
    }

    pub fn parts_count(&self) -> usize {
        self.parts.len()
    }

    /// Appends empty parts until there are `count` of them.
    pub fn pad_to(&mut self, count: usize) {
        while self.parts.len() < count {
            self.parts.push(Subsequence::empty());
        }
    }

    pub fn validate(&self, host: &[i64]) -> Result<()> {
        validate_decomposition(self, host)
    }

    /// The part covering each position. Assumes the decomposition is valid.
    pub fn owners(&self) -> Vec<usize> {
        let mut owner = vec![usize::MAX; self.host_len];
        for (p, part) in self.parts.iter().enumerate() {
            for &i in &part.indices {
                owner[i] = p;
            }
        }
        owner
    }
}

/// Checks that `d` partitions `0..host.len()` and every part obeys its tag.
///
/// Parts are examined in order and, within a part, positions in order; the
/// first violation found is reported. Coverage gaps are reported last.
pub fn validate_decomposition(d: &Decomposition, host: &[i64]) -> Result<()> {
    let n = host.len();
    if d.host_len != n {
        return Err(Error::LengthMismatch { left: d.host_len, right: n });
    }
    let mut covered = vec![false; n];
    for (p, part) in d.parts.iter().enumerate() {
        let mut prev: Option<usize> = None;
        for &index in &part.indices {
            if index >= n {
                return Err(Error::IndexOutOfRange { part: p, index, len: n });
            }
            if prev.is_some_and(|q| index <= q) {
                return Err(Error::UnsortedIndices { part: p, index });
            }
            if covered[index] {
                return Err(Error::Overlap { part: p, index });
            }
            covered[index] = true;
            if let Some(q) = prev {
                if !part.tag.admits(host[q], host[index]) {
                    return Err(Error::OrderViolation { part: p, index, tag: part.tag });
                }
            }
            prev = Some(index);
        }
    }
    match covered.iter().position(|&c| !c) {
        Some(index) => Err(Error::CoverageGap { index }),
        None => Ok(()),
    }
}
