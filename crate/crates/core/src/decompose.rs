//! Building decompositions of a sequence.
//!
//! The single-direction decompositions are exact: a patience-style greedy
//! yields the minimum number of non-decreasing (non-increasing) parts, and a
//! strictly decreasing (increasing) subsequence of the same length is
//! returned as a certificate of optimality. The mixed decomposition starts
//! from the better of the two and merges parts whose union is still monotone;
//! it carries no approximation guarantee.

use std::collections::HashMap;
use std::fmt;

use crate::bits::BoolVector;
use crate::decomposition::{Decomposition, MonotoneTag, Subsequence};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    NonDecreasing,
    NonIncreasing,
    Greedy,
    Uniform,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::NonDecreasing => "nondec",
            Mode::NonIncreasing => "noninc",
            Mode::Greedy => "greedy",
            Mode::Uniform => "uniform",
        })
    }
}

/// Direction shared by all parts, or `Mixed`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PartsDirection {
    All(MonotoneTag),
    Mixed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionStats {
    pub parts_count: usize,
    pub direction: PartsDirection,
    /// Length of a strictly monotone subsequence (opposite to the parts' order)
    /// proving no smaller decomposition exists. Present for the exact modes only.
    pub lower_bound_certificate: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposed {
    pub decomposition: Decomposition,
    pub stats: DecompositionStats,
    /// Positions of the certifying subsequence, ascending. Empty for inexact modes.
    pub certificate: Vec<usize>,
}

fn direction_of(d: &Decomposition) -> PartsDirection {
    let mut tags = d.parts.iter().filter(|p| !p.is_empty()).map(|p| p.tag);
    let Some(first) = tags.next() else {
        return PartsDirection::All(MonotoneTag::Uniform);
    };
    if tags.all(|t| t == first) {
        PartsDirection::All(first)
    } else {
        PartsDirection::Mixed
    }
}

fn require_nonempty(s: &[i64]) -> Result<()> {
    if s.is_empty() {
        Err(Error::EmptyInput)
    } else {
        Ok(())
    }
}

/// Patience greedy for non-decreasing parts. Part tails stay strictly decreasing
/// by part number, so the first part whose tail is `<= x` is also the one with
/// the largest eligible tail.
fn patience(values: impl ExactSizeIterator<Item = i64>) -> (Vec<Vec<usize>>, Vec<usize>) {
    let mut parts: Vec<Vec<usize>> = Vec::new();
    let mut tails: Vec<i64> = Vec::new();
    let mut pred: Vec<Option<usize>> = Vec::with_capacity(values.len());
    for (i, x) in values.enumerate() {
        let p = tails.partition_point(|&t| t > x);
        pred.push(if p > 0 { parts[p - 1].last().copied() } else { None });
        if p == parts.len() {
            parts.push(vec![i]);
            tails.push(x);
        } else {
            parts[p].push(i);
            tails[p] = x;
        }
    }
    let mut certificate = Vec::with_capacity(parts.len());
    let mut cursor = parts.last().and_then(|p| p.last().copied());
    while let Some(i) = cursor {
        certificate.push(i);
        cursor = pred[i];
    }
    certificate.reverse();
    (parts, certificate)
}

fn exact(s: &[i64], tag: MonotoneTag) -> Result<Decomposed> {
    require_nonempty(s)?;
    let (parts, certificate) = match tag {
        MonotoneTag::NonIncreasing => patience(s.iter().map(|&v| -v)),
        _ => patience(s.iter().copied()),
    };
    let decomposition =
        Decomposition::new(s.len(), parts.into_iter().map(|indices| Subsequence::new(indices, tag)).collect());
    let stats = DecompositionStats {
        parts_count: decomposition.parts_count(),
        direction: PartsDirection::All(tag),
        lower_bound_certificate: Some(certificate.len()),
    };
    Ok(Decomposed { decomposition, stats, certificate })
}

/// Minimum decomposition into non-decreasing parts.
pub fn decompose_nondecreasing(s: &[i64]) -> Result<Decomposed> {
    exact(s, MonotoneTag::NonDecreasing)
}

/// Minimum decomposition into non-increasing parts.
pub fn decompose_nonincreasing(s: &[i64]) -> Result<Decomposed> {
    exact(s, MonotoneTag::NonIncreasing)
}

fn classify(values: &[i64]) -> Option<MonotoneTag> {
    let nd = MonotoneTag::NonDecreasing.holds_for(values.iter().copied());
    let ni = MonotoneTag::NonIncreasing.holds_for(values.iter().copied());
    match (nd, ni) {
        (true, true) => Some(MonotoneTag::Uniform),
        (true, false) => Some(MonotoneTag::NonDecreasing),
        (false, true) => Some(MonotoneTag::NonIncreasing),
        (false, false) => None,
    }
}

fn merge_sorted(x: &[usize], y: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() && j < y.len() {
        if x[i] < y[j] {
            out.push(x[i]);
            i += 1;
        } else {
            out.push(y[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&x[i..]);
    out.extend_from_slice(&y[j..]);
    out
}

/// Mixed decomposition with no more parts than either exact one.
///
/// A single pass suffices for the merges: if `p ∪ q` is not monotone, neither
/// is `p ∪ q'` for any `q' ⊇ q`.
pub fn decompose_monotone_greedy(s: &[i64]) -> Result<Decomposed> {
    let nd = decompose_nondecreasing(s)?;
    let ni = decompose_nonincreasing(s)?;
    let base = if ni.stats.parts_count < nd.stats.parts_count { ni } else { nd };
    let mut parts = base.decomposition.parts;
    let mut p = 0;
    while p < parts.len() {
        let mut q = p + 1;
        while q < parts.len() {
            let merged = merge_sorted(&parts[p].indices, &parts[q].indices);
            let values: Vec<i64> = merged.iter().map(|&i| s[i]).collect();
            if let Some(tag) = classify(&values) {
                parts[p] = Subsequence::new(merged, tag);
                parts.remove(q);
            } else {
                q += 1;
            }
        }
        p += 1;
    }
    let decomposition = Decomposition::new(s.len(), parts);
    let stats = DecompositionStats {
        parts_count: decomposition.parts_count(),
        direction: direction_of(&decomposition),
        lower_bound_certificate: None,
    };
    Ok(Decomposed { decomposition, stats, certificate: Vec::new() })
}

/// One uniform part per distinct value, parts ordered by first occurrence.
pub fn decompose_uniform(s: &[i64]) -> Result<Decomposed> {
    require_nonempty(s)?;
    let mut slot: HashMap<i64, usize> = HashMap::new();
    let mut parts: Vec<Subsequence> = Vec::new();
    for (i, &v) in s.iter().enumerate() {
        let p = *slot.entry(v).or_insert_with(|| {
            parts.push(Subsequence::new(Vec::new(), MonotoneTag::Uniform));
            parts.len() - 1
        });
        parts[p].indices.push(i);
    }
    let decomposition = Decomposition::new(s.len(), parts);
    let stats = DecompositionStats {
        parts_count: decomposition.parts_count(),
        direction: PartsDirection::All(MonotoneTag::Uniform),
        lower_bound_certificate: None,
    };
    Ok(Decomposed { decomposition, stats, certificate: Vec::new() })
}

pub fn decompose(s: &[i64], mode: Mode) -> Result<Decomposed> {
    match mode {
        Mode::NonDecreasing => decompose_nondecreasing(s),
        Mode::NonIncreasing => decompose_nonincreasing(s),
        Mode::Greedy => decompose_monotone_greedy(s),
        Mode::Uniform => decompose_uniform(s),
    }
}

pub fn char_vector(part: &Subsequence, n: usize) -> Result<BoolVector> {
    part.char_vector(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::validate_decomposition;

    fn index_sets(d: &Decomposed) -> Vec<Vec<usize>> {
        d.decomposition.parts.iter().map(|p| p.indices.clone()).collect()
    }

    #[test]
    fn nondecreasing_examples() {
        let d = decompose_nondecreasing(&[1, 7, 3, 9, 8, 4]).unwrap();
        assert_eq!(d.stats.parts_count, 3);
        assert_eq!(index_sets(&d), vec![vec![0, 1, 3], vec![2, 4], vec![5]]);
        assert_eq!(d.stats.lower_bound_certificate, Some(3));

        let sorted = decompose_nondecreasing(&[1, 2, 3]).unwrap();
        assert_eq!(index_sets(&sorted), vec![vec![0, 1, 2]]);

        let falling = decompose_nondecreasing(&[9, 8, 7, 6]).unwrap();
        assert_eq!(index_sets(&falling), vec![vec![0], vec![1], vec![2], vec![3]]);
        assert_eq!(falling.certificate, vec![0, 1, 2, 3]);
    }

    #[test]
    fn nonincreasing_examples() {
        // Strictly increasing 7, 11, 12 forces three parts.
        let d = decompose_nonincreasing(&[13, 7, 11, 5, 10, 12]).unwrap();
        assert_eq!(d.stats.parts_count, 3);
        validate_decomposition(&d.decomposition, &[13, 7, 11, 5, 10, 12]).unwrap();

        assert_eq!(decompose_nonincreasing(&[5, 5, 5]).unwrap().stats.parts_count, 1);
        assert_eq!(decompose_nonincreasing(&[1, 2, 3]).unwrap().stats.parts_count, 3);
    }

    #[test]
    fn certificate_is_strictly_opposite() {
        let s = [4, 1, 3, 3, 2, 5, 0, 2];
        let d = decompose_nondecreasing(&s).unwrap();
        assert_eq!(d.certificate.len(), d.stats.parts_count);
        assert!(d.certificate.windows(2).all(|w| w[0] < w[1] && s[w[0]] > s[w[1]]));
        let d = decompose_nonincreasing(&s).unwrap();
        assert_eq!(d.certificate.len(), d.stats.parts_count);
        assert!(d.certificate.windows(2).all(|w| w[0] < w[1] && s[w[0]] < s[w[1]]));
    }

    #[test]
    fn greedy_examples() {
        let s = [1, 2, 3, 3, 2, 1];
        let d = decompose_monotone_greedy(&s).unwrap();
        assert!(d.stats.parts_count <= 2);
        validate_decomposition(&d.decomposition, &s).unwrap();

        assert_eq!(decompose_monotone_greedy(&[7]).unwrap().stats.parts_count, 1);
        let d = decompose_monotone_greedy(&[1, 3, 2, 4]).unwrap();
        assert!(d.stats.parts_count <= 2);
        validate_decomposition(&d.decomposition, &[1, 3, 2, 4]).unwrap();
    }

    #[test]
    fn uniform_examples() {
        let d = decompose_uniform(&[5, 11, 2, 7, 13, 10]).unwrap();
        assert_eq!(d.stats.parts_count, 6);
        assert!(d.decomposition.parts.iter().all(|p| p.len() == 1));
        assert_eq!(index_sets(&decompose_uniform(&[4, 4, 4, 4]).unwrap()), vec![vec![0, 1, 2, 3]]);
        assert_eq!(index_sets(&decompose_uniform(&[1, 2, 1, 2]).unwrap()), vec![vec![0, 2], vec![1, 3]]);
        assert_eq!(decompose_uniform(&[5, 5]).unwrap().stats.parts_count, 1);
    }

    #[test]
    fn char_vectors() {
        let p = Subsequence::new(vec![0, 2, 5], MonotoneTag::NonDecreasing);
        assert_eq!(char_vector(&p, 6).unwrap().to_bools(), [true, false, true, false, false, true]);
        let p = Subsequence::new(vec![1, 4], MonotoneTag::NonDecreasing);
        assert_eq!(char_vector(&p, 6).unwrap().to_bools(), [false, true, false, false, true, false]);
        assert_eq!(char_vector(&Subsequence::empty(), 4).unwrap().to_bools(), [false; 4]);
        assert!(matches!(char_vector(&p, 3), Err(Error::IndexOutOfRange { index: 4, .. })));
    }

    #[test]
    fn empty_input_is_rejected() {
        for mode in [Mode::NonDecreasing, Mode::NonIncreasing, Mode::Greedy, Mode::Uniform] {
            assert_eq!(decompose(&[], mode), Err(Error::EmptyInput));
        }
    }
}
