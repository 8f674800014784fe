//! (min,+) convolution of two integer vectors,
//! `c_k = min { a_l + b_{k-l} : max(k-n+1, 0) <= l <= min(k, n-1) }`,
//! for vectors with opposite-direction monotone decompositions or with one
//! vector taking few distinct values.

use crate::bits::BoolVector;
use crate::decomposition::{validate_decomposition, Decomposition, MonotoneTag};
use crate::error::{Error, Line, Result};
use crate::fastconv::{bool_convolution, ceil_sqrt, conv_extreme_witness, ConvWitnessParams};
use crate::int::{checked_add, checked_mul, IntVector, MinPlusVector};
use crate::product::{Counters, Product};
use crate::witness::{ConvWitnesses, Extreme};

fn check_same_len(a: &IntVector, b: &IntVector) -> Result<usize> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch { left: a.len(), right: b.len() });
    }
    Ok(a.len())
}

/// Quadratic definition; the oracle for everything else.
pub fn conv_naive(a: &IntVector, b: &IntVector) -> Result<MinPlusVector> {
    let n = check_same_len(a, b)?;
    let mut c = MinPlusVector::infinity(2 * n - 1);
    for (l, &x) in a.as_slice().iter().enumerate() {
        for (m, &y) in b.as_slice().iter().enumerate() {
            c.relax(l + m, checked_add(x, y)?);
        }
    }
    Ok(c)
}

/// Which vector carries the non-decreasing parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// Parts of `a` non-decreasing, parts of `b` non-increasing.
    AscendingA,
    /// Parts of `a` non-increasing, parts of `b` non-decreasing.
    DescendingA,
}

impl Orientation {
    fn a_tag(self) -> MonotoneTag {
        match self {
            Orientation::AscendingA => MonotoneTag::NonDecreasing,
            Orientation::DescendingA => MonotoneTag::NonIncreasing,
        }
    }

    /// Non-decreasing `a` parts want the smallest `l`, non-increasing ones the largest.
    fn extreme(self) -> Extreme {
        match self {
            Orientation::AscendingA => Extreme::Min,
            Orientation::DescendingA => Extreme::Max,
        }
    }
}

fn infer_orientation(dec_a: &Decomposition, dec_b: &Decomposition) -> Result<Orientation> {
    let first_directed = |d: &Decomposition| {
        d.parts.iter().filter(|p| !p.is_empty()).map(|p| p.tag).find(|&t| t != MonotoneTag::Uniform)
    };
    let orientation = match (first_directed(dec_a), first_directed(dec_b)) {
        (Some(MonotoneTag::NonIncreasing), _) | (None, Some(MonotoneTag::NonDecreasing)) => Orientation::DescendingA,
        _ => Orientation::AscendingA,
    };
    let check = |d: &Decomposition, expected: MonotoneTag| -> Result<()> {
        for (p, part) in d.parts.iter().enumerate() {
            if !part.is_empty() && !part.tag.is_admissible_as(expected) {
                return Err(Error::DirectionViolation { line: Line::Vector, part: p, found: part.tag, expected });
            }
        }
        Ok(())
    };
    check(dec_a, orientation.a_tag())?;
    check(dec_b, orientation.a_tag().reversed())?;
    Ok(orientation)
}

/// Progress report handed to observers after each pair of parts is applied.
#[derive(Debug)]
pub struct PartStep<'a> {
    pub a_part: usize,
    pub b_part: usize,
    pub witnesses: &'a ConvWitnesses,
    pub current: &'a MinPlusVector,
}

/// Convolution for decompositions of `a` and `b` into parts of opposite
/// directions (either way round).
///
/// Performs exactly `m_a · m_b` extreme-witness convolutions.
pub fn conv_decomposed(
    a: &IntVector,
    dec_a: &Decomposition,
    b: &IntVector,
    dec_b: &Decomposition,
    params: ConvWitnessParams,
) -> Result<Product<MinPlusVector>> {
    conv_decomposed_impl(a, dec_a, b, dec_b, params, None)
}

/// [`conv_decomposed`], reporting witnesses and the partial output after each pair.
pub fn conv_decomposed_observed(
    a: &IntVector,
    dec_a: &Decomposition,
    b: &IntVector,
    dec_b: &Decomposition,
    params: ConvWitnessParams,
    mut observer: impl FnMut(PartStep<'_>),
) -> Result<Product<MinPlusVector>> {
    conv_decomposed_impl(a, dec_a, b, dec_b, params, Some(&mut observer))
}

fn conv_decomposed_impl(
    a: &IntVector,
    dec_a: &Decomposition,
    b: &IntVector,
    dec_b: &Decomposition,
    params: ConvWitnessParams,
    mut observer: Option<&mut dyn FnMut(PartStep<'_>)>,
) -> Result<Product<MinPlusVector>> {
    let n = check_same_len(a, b)?;
    validate_decomposition(dec_a, a.as_slice()).map_err(|e| e.in_line(Line::Vector))?;
    validate_decomposition(dec_b, b.as_slice()).map_err(|e| e.in_line(Line::Vector))?;
    let kind = infer_orientation(dec_a, dec_b)?.extreme();

    let a_chars: Vec<BoolVector> = dec_a.parts.iter().map(|p| BoolVector::from_indices(n, &p.indices)).collect();
    let b_chars: Vec<BoolVector> = dec_b.parts.iter().map(|p| BoolVector::from_indices(n, &p.indices)).collect();
    let counters = Counters::default();
    let mut c = MinPlusVector::infinity(2 * n - 1);
    for (i, pa) in a_chars.iter().enumerate() {
        for (j, pb) in b_chars.iter().enumerate() {
            counters.witness();
            let w = conv_extreme_witness(pa, pb, kind, params)?;
            for (k, l) in w.positions().iter().enumerate() {
                if let Some(l) = *l {
                    c.relax(k, checked_add(a.get(l), b.get(k - l))?);
                }
            }
            if let Some(observer) = observer.as_deref_mut() {
                observer(PartStep { a_part: i, b_part: j, witnesses: &w, current: &c });
            }
        }
    }
    Ok(Product { values: c, counts: counters.snapshot() })
}

/// Positions of `a` sorted by value (stable), cut into consecutive groups of
/// at most `ell`. No element of a group exceeds an element of a later group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPartition {
    ell: usize,
    groups: Vec<Vec<usize>>,
}

impl GroupPartition {
    pub fn new(a: &IntVector, ell: usize) -> Result<Self> {
        let n = a.len();
        if ell == 0 || ell > n {
            return Err(Error::InvalidParameter { name: "ell", value: ell, reason: "must lie in 1..=n" });
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| a.get(i));
        let groups = order.chunks(ell).map(<[usize]>::to_vec).collect();
        Ok(GroupPartition { ell, groups })
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn group_count(&self) -> usize {
        self.groups.len()
    }

    /// Members of each group in ascending value order, ties by position.
    pub fn groups(&self) -> &[Vec<usize>] {
        &self.groups
    }

    /// Whether every element of each group is `<=` every element of the next.
    pub fn is_ordered(&self, a: &IntVector) -> bool {
        self.groups.windows(2).all(|w| {
            let hi = w[0].iter().map(|&i| a.get(i)).max();
            let lo = w[1].iter().map(|&i| a.get(i)).min();
            hi <= lo
        })
    }
}

/// `⌈√n⌉`, the group size that balances convolutions against scans.
pub fn default_ell(n: usize) -> usize {
    ceil_sqrt(n).max(1)
}

/// Convolution when every part of `dec_b` is constant-valued (`h` parts).
///
/// For each part `b^j` and group `g^i` of `a`, a Boolean convolution of their
/// characteristic vectors shows which `k` the group can reach; the first such
/// group holds the smallest feasible `a_q`, found by scanning it in value
/// order. Performs exactly `h · ⌈n/ell⌉` Boolean convolutions.
pub fn conv_few_values(
    a: &IntVector,
    b: &IntVector,
    dec_b: &Decomposition,
    ell: usize,
) -> Result<Product<MinPlusVector>> {
    let n = check_same_len(a, b)?;
    validate_decomposition(dec_b, b.as_slice()).map_err(|e| e.in_line(Line::Vector))?;
    for (p, part) in dec_b.parts.iter().enumerate() {
        if !MonotoneTag::Uniform.holds_for(part.values(b.as_slice())) {
            return Err(Error::UniformViolation { line: Line::Vector, part: p });
        }
    }
    let partition = GroupPartition::new(a, ell)?;
    let group_chars: Vec<BoolVector> = partition.groups.iter().map(|g| BoolVector::from_indices(n, g)).collect();

    let counters = Counters::default();
    let out_len = 2 * n - 1;
    let mut c = MinPlusVector::infinity(out_len);
    for part in &dec_b.parts {
        let b_char = BoolVector::from_indices(n, &part.indices);
        let mut first_group: Vec<Option<usize>> = vec![None; out_len];
        for (i, g) in group_chars.iter().enumerate() {
            counters.bool_convolution();
            let d = bool_convolution(g, &b_char)?;
            for k in d.ones() {
                first_group[k].get_or_insert(i);
            }
        }
        for (k, group) in first_group.iter().enumerate() {
            let Some(i) = *group else { continue };
            let mate = partition.groups[i].iter().copied().find(|&q| q <= k && k - q < n && b_char.get(k - q));
            if let Some(q) = mate {
                c.relax(k, checked_add(a.get(q), b.get(k - q))?);
            }
        }
    }
    Ok(Product { values: c, counts: counters.snapshot() })
}

/// [`conv_few_values`] with the roles swapped: `a` takes few values. The
/// convolution is symmetric in its arguments.
pub fn conv_few_values_in_a(
    a: &IntVector,
    dec_a: &Decomposition,
    b: &IntVector,
    ell: usize,
) -> Result<Product<MinPlusVector>> {
    conv_few_values(b, a, dec_a, ell)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VectorShift {
    ToNonDecreasing,
    ToNonIncreasing,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftedVectors {
    pub a: IntVector,
    pub b: IntVector,
    /// Largest absolute coordinate of the inputs.
    pub m: i64,
}

impl ShiftedVectors {
    /// The per-position offset `±2kM` relating the two convolutions.
    pub fn offset(&self, k: usize, shift: VectorShift) -> Result<i64> {
        let sign = match shift {
            VectorShift::ToNonDecreasing => 1,
            VectorShift::ToNonIncreasing => -1,
        };
        checked_mul(sign * 2 * k as i64, self.m)
    }
}

/// `a'_i = a_i ± 2iM`, `b'_i = b_i ± 2iM`; both results are monotone in the
/// chosen direction and `c'_k = c_k ± 2kM`.
pub fn shift_transform_vectors(a: &IntVector, b: &IntVector, shift: VectorShift) -> Result<ShiftedVectors> {
    check_same_len(a, b)?;
    let m = a.max_abs().max(b.max_abs());
    let sign = match shift {
        VectorShift::ToNonDecreasing => 1,
        VectorShift::ToNonIncreasing => -1,
    };
    let apply = |v: &IntVector| -> Result<Vec<i64>> {
        v.as_slice().iter().enumerate().map(|(i, &x)| checked_add(x, checked_mul(sign * 2 * i as i64, m)?)).collect()
    };
    Ok(ShiftedVectors { a: IntVector::from_unbounded(apply(a)?), b: IntVector::from_unbounded(apply(b)?), m })
}
