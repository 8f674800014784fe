//! (min,+) matrix products driven by monotone decompositions of the rows of
//! the left factor and the columns of the right factor.
//!
//! Each row `i` of `A` is split into parts `a^o_i` and each column `j` of `B`
//! into parts `b^r_j`. Collecting the `o`-th part of every row gives a
//! Boolean matrix `A^o` (and likewise `B^r`), and within one pair of parts the
//! minimal sum `a_{i,k} + b_{k,j}` sits at an extreme index `k`: the smallest
//! one when both parts are non-decreasing, the largest one when both are
//! non-increasing. So one extreme-witness Boolean product per pair `(o, r)`
//! suffices to relax every entry of the output.

use rayon::prelude::*;

use crate::bits::{BoolMatrix, BoolVector};
use crate::decompose::{decompose, Mode};
use crate::decomposition::{validate_decomposition, Decomposition, MonotoneTag, Subsequence};
use crate::error::{Error, Line, Result};
use crate::int::{checked_add, checked_mul, IntMatrix, MinPlusMatrix};
use crate::product::{Counters, Product};
use crate::witmat::{bool_matmul, mat_extreme_witness, MatWitnessParams};
use crate::witness::{Extreme, MatWitnesses};

/// The common order of all parts handed to [`minplus_decomposed`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    NonDecreasing,
    NonIncreasing,
}

impl Direction {
    pub fn tag(self) -> MonotoneTag {
        match self {
            Direction::NonDecreasing => MonotoneTag::NonDecreasing,
            Direction::NonIncreasing => MonotoneTag::NonIncreasing,
        }
    }

    fn extreme(self) -> Extreme {
        match self {
            Direction::NonDecreasing => Extreme::Min,
            Direction::NonIncreasing => Extreme::Max,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    Rows,
    Columns,
}

impl Axis {
    fn name(self) -> &'static str {
        match self {
            Axis::Rows => "rows",
            Axis::Columns => "columns",
        }
    }

    fn line(self, index: usize) -> Line {
        match self {
            Axis::Rows => Line::Row(index),
            Axis::Columns => Line::Column(index),
        }
    }
}

/// One validated decomposition per row (or column) of a matrix, padded with
/// empty parts so every line has the same number of parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixDecompositionSet {
    axis: Axis,
    lines: Vec<Decomposition>,
    parts: usize,
}

impl MatrixDecompositionSet {
    pub fn new(matrix: &IntMatrix, axis: Axis, mut lines: Vec<Decomposition>) -> Result<Self> {
        let n = matrix.n();
        if lines.len() != n {
            return Err(Error::DecompositionCount { expected: n, found: lines.len() });
        }
        for (idx, d) in lines.iter().enumerate() {
            let host = match axis {
                Axis::Rows => matrix.row(idx).to_vec(),
                Axis::Columns => matrix.column(idx),
            };
            validate_decomposition(d, &host).map_err(|e| e.in_line(axis.line(idx)))?;
        }
        let parts = lines.iter().map(Decomposition::parts_count).max().unwrap_or(0).max(1);
        for d in &mut lines {
            d.pad_to(parts);
        }
        Ok(MatrixDecompositionSet { axis, lines, parts })
    }

    pub fn rows(a: &IntMatrix, lines: Vec<Decomposition>) -> Result<Self> {
        MatrixDecompositionSet::new(a, Axis::Rows, lines)
    }

    pub fn columns(b: &IntMatrix, lines: Vec<Decomposition>) -> Result<Self> {
        MatrixDecompositionSet::new(b, Axis::Columns, lines)
    }

    /// Decomposes every line of `matrix` along `axis` with `mode`.
    pub fn decompose(matrix: &IntMatrix, axis: Axis, mode: Mode) -> Result<Self> {
        let lines = (0..matrix.n())
            .map(|idx| {
                let host = match axis {
                    Axis::Rows => matrix.row(idx).to_vec(),
                    Axis::Columns => matrix.column(idx),
                };
                decompose(&host, mode).map(|d| d.decomposition)
            })
            .collect::<Result<Vec<_>>>()?;
        MatrixDecompositionSet::new(matrix, axis, lines)
    }

    pub fn axis(&self) -> Axis {
        self.axis
    }

    pub fn parts_per_line(&self) -> usize {
        self.parts
    }

    pub fn line(&self, idx: usize) -> &Decomposition {
        &self.lines[idx]
    }

    pub fn lines(&self) -> &[Decomposition] {
        &self.lines
    }

    pub fn into_lines(self) -> Vec<Decomposition> {
        self.lines
    }

    /// Pads every line to at least `parts` parts.
    pub fn pad_to(&mut self, parts: usize) {
        if parts > self.parts {
            for d in &mut self.lines {
                d.pad_to(parts);
            }
            self.parts = parts;
        }
    }

    /// The same lines, read as lines of the transposed matrix.
    pub fn transposed(&self) -> MatrixDecompositionSet {
        let axis = match self.axis {
            Axis::Rows => Axis::Columns,
            Axis::Columns => Axis::Rows,
        };
        MatrixDecompositionSet { axis, lines: self.lines.clone(), parts: self.parts }
    }

    /// Boolean matrix whose line `idx` is the characteristic vector of part
    /// `slot` of line `idx`, laid out as rows or columns following the axis.
    pub fn slot_matrix(&self, slot: usize) -> BoolMatrix {
        let n = self.lines.len();
        let vectors: Vec<BoolVector> =
            self.lines.iter().map(|d| BoolVector::from_indices(n, &d.parts[slot].indices)).collect();
        match self.axis {
            Axis::Rows => BoolMatrix::from_rows(&vectors),
            Axis::Columns => BoolMatrix::from_columns(&vectors),
        }
    }

    fn expect(&self, axis: Axis, n: usize) -> Result<()> {
        if self.axis != axis {
            return Err(Error::AxisMismatch { expected: axis.name(), found: self.axis.name() });
        }
        if self.lines.len() != n {
            return Err(Error::DimensionMismatch { left: self.lines.len(), right: n });
        }
        Ok(())
    }

    fn require_tag(&self, expected: MonotoneTag) -> Result<()> {
        for (idx, d) in self.lines.iter().enumerate() {
            for (p, part) in d.parts.iter().enumerate() {
                if !part.is_empty() && !part.tag.is_admissible_as(expected) {
                    return Err(Error::DirectionViolation {
                        line: self.axis.line(idx),
                        part: p,
                        found: part.tag,
                        expected,
                    });
                }
            }
        }
        Ok(())
    }

    /// Every part must be constant-valued, whatever its tag.
    fn require_uniform(&self, matrix: &IntMatrix) -> Result<()> {
        for (idx, d) in self.lines.iter().enumerate() {
            for (p, part) in d.parts.iter().enumerate() {
                let value = |k: usize| match self.axis {
                    Axis::Rows => matrix.get(idx, k),
                    Axis::Columns => matrix.get(k, idx),
                };
                if !MonotoneTag::Uniform.holds_for(part.indices.iter().map(|&k| value(k))) {
                    return Err(Error::UniformViolation { line: self.axis.line(idx), part: p });
                }
            }
        }
        Ok(())
    }
}

fn check_same_n(a: &IntMatrix, b: &IntMatrix) -> Result<usize> {
    if a.n() != b.n() {
        return Err(Error::DimensionMismatch { left: a.n(), right: b.n() });
    }
    Ok(a.n())
}

/// Textbook `O(n^3)` product; the oracle for everything else.
pub fn minplus_naive(a: &IntMatrix, b: &IntMatrix) -> Result<MinPlusMatrix> {
    let n = check_same_n(a, b)?;
    let mut c = MinPlusMatrix::infinity(n);
    for i in 0..n {
        let row = a.row(i);
        for j in 0..n {
            for (k, &x) in row.iter().enumerate() {
                c.relax(i, j, checked_add(x, b.get(k, j))?);
            }
        }
    }
    Ok(c)
}

/// Progress report handed to observers after each pair of parts is applied.
#[derive(Debug)]
pub struct PairStep<'a> {
    pub a_slot: usize,
    pub b_slot: usize,
    /// The extreme-witness arrays computed for this pair (minimum first when both are needed).
    pub witnesses: &'a [MatWitnesses],
    pub current: &'a MinPlusMatrix,
}

fn relax_with(
    a: &IntMatrix,
    b: &IntMatrix,
    witnesses: &MatWitnesses,
    target: &mut MinPlusMatrix,
    mut admit: impl FnMut(usize) -> bool,
) -> Result<()> {
    let n = a.n();
    for i in 0..n {
        if !admit(i) {
            continue;
        }
        for j in 0..n {
            if let Some(k) = witnesses.get(i, j) {
                target.relax(i, j, checked_add(a.get(i, k), b.get(k, j))?);
            }
        }
    }
    Ok(())
}

fn all_pairs(m_a: usize, m_b: usize) -> Vec<(usize, usize)> {
    (0..m_a).flat_map(|o| (0..m_b).map(move |r| (o, r))).collect()
}

/// Runs `step` for every pair, in parallel with partial results merged by
/// entry-wise minimum, or sequentially when an observer is attached.
fn fold_pairs<F>(
    n: usize,
    pairs: &[(usize, usize)],
    step: F,
    observer: Option<&mut dyn FnMut(PairStep<'_>)>,
) -> Result<MinPlusMatrix>
where
    F: Fn(usize, usize, &mut MinPlusMatrix) -> Result<Vec<MatWitnesses>> + Sync,
{
    match observer {
        Some(observer) => {
            let mut c = MinPlusMatrix::infinity(n);
            for &(o, r) in pairs {
                let witnesses = step(o, r, &mut c)?;
                observer(PairStep { a_slot: o, b_slot: r, witnesses: &witnesses, current: &c });
            }
            Ok(c)
        }
        None => pairs
            .par_iter()
            .try_fold(
                || MinPlusMatrix::infinity(n),
                |mut acc, &(o, r)| {
                    step(o, r, &mut acc)?;
                    Ok(acc)
                },
            )
            .try_reduce(
                || MinPlusMatrix::infinity(n),
                |mut x, y| {
                    x.merge_min(&y);
                    Ok(x)
                },
            ),
    }
}

/// Product for decompositions whose parts all share `direction`
/// (uniform and empty parts are accepted under either).
///
/// Performs exactly `m_a · m_b` extreme-witness products.
pub fn minplus_decomposed(
    a: &IntMatrix,
    dec_a: &MatrixDecompositionSet,
    b: &IntMatrix,
    dec_b: &MatrixDecompositionSet,
    direction: Direction,
    params: MatWitnessParams,
) -> Result<Product<MinPlusMatrix>> {
    decomposed_impl(a, dec_a, b, dec_b, direction, params, None)
}

/// [`minplus_decomposed`] run sequentially, reporting the partial output after each pair.
pub fn minplus_decomposed_observed(
    a: &IntMatrix,
    dec_a: &MatrixDecompositionSet,
    b: &IntMatrix,
    dec_b: &MatrixDecompositionSet,
    direction: Direction,
    params: MatWitnessParams,
    mut observer: impl FnMut(PairStep<'_>),
) -> Result<Product<MinPlusMatrix>> {
    decomposed_impl(a, dec_a, b, dec_b, direction, params, Some(&mut observer))
}

fn decomposed_impl(
    a: &IntMatrix,
    dec_a: &MatrixDecompositionSet,
    b: &IntMatrix,
    dec_b: &MatrixDecompositionSet,
    direction: Direction,
    params: MatWitnessParams,
    observer: Option<&mut dyn FnMut(PairStep<'_>)>,
) -> Result<Product<MinPlusMatrix>> {
    let n = check_same_n(a, b)?;
    dec_a.expect(Axis::Rows, n)?;
    dec_b.expect(Axis::Columns, n)?;
    dec_a.require_tag(direction.tag())?;
    dec_b.require_tag(direction.tag())?;

    let a_slots: Vec<BoolMatrix> = (0..dec_a.parts).map(|o| dec_a.slot_matrix(o)).collect();
    let b_slots: Vec<BoolMatrix> = (0..dec_b.parts).map(|r| dec_b.slot_matrix(r)).collect();
    let counters = Counters::default();
    let kind = direction.extreme();

    let values = fold_pairs(
        n,
        &all_pairs(dec_a.parts, dec_b.parts),
        |o, r, c| {
            counters.witness();
            let w = mat_extreme_witness(&a_slots[o], &b_slots[r], kind, params)?;
            relax_with(a, b, &w, c, |_| true)?;
            Ok(vec![w])
        },
        observer,
    )?;
    Ok(Product { values, counts: counters.snapshot() })
}

/// Product when rows of `A` have mixed monotone parts and every column part
/// of `B` is constant-valued.
///
/// Each pair of slots gets both a minimum and a maximum witness product; row
/// `i` takes the maximum witness when its part in the slot is non-increasing
/// and the minimum witness otherwise.
pub fn minplus_mixed_uniform(
    a: &IntMatrix,
    dec_a: &MatrixDecompositionSet,
    b: &IntMatrix,
    dec_b: &MatrixDecompositionSet,
    params: MatWitnessParams,
) -> Result<Product<MinPlusMatrix>> {
    mixed_uniform_impl(a, dec_a, b, dec_b, params, None)
}

pub fn minplus_mixed_uniform_observed(
    a: &IntMatrix,
    dec_a: &MatrixDecompositionSet,
    b: &IntMatrix,
    dec_b: &MatrixDecompositionSet,
    params: MatWitnessParams,
    mut observer: impl FnMut(PairStep<'_>),
) -> Result<Product<MinPlusMatrix>> {
    mixed_uniform_impl(a, dec_a, b, dec_b, params, Some(&mut observer))
}

fn mixed_uniform_impl(
    a: &IntMatrix,
    dec_a: &MatrixDecompositionSet,
    b: &IntMatrix,
    dec_b: &MatrixDecompositionSet,
    params: MatWitnessParams,
    observer: Option<&mut dyn FnMut(PairStep<'_>)>,
) -> Result<Product<MinPlusMatrix>> {
    let n = check_same_n(a, b)?;
    dec_a.expect(Axis::Rows, n)?;
    dec_b.expect(Axis::Columns, n)?;
    dec_b.require_uniform(b)?;

    let a_slots: Vec<BoolMatrix> = (0..dec_a.parts).map(|o| dec_a.slot_matrix(o)).collect();
    let b_slots: Vec<BoolMatrix> = (0..dec_b.parts).map(|r| dec_b.slot_matrix(r)).collect();
    let counters = Counters::default();

    let values = fold_pairs(
        n,
        &all_pairs(dec_a.parts, dec_b.parts),
        |o, r, c| {
            counters.witness();
            let min_w = mat_extreme_witness(&a_slots[o], &b_slots[r], Extreme::Min, params)?;
            counters.witness();
            let max_w = mat_extreme_witness(&a_slots[o], &b_slots[r], Extreme::Max, params)?;
            let falling = |i: usize| dec_a.lines[i].parts[o].tag == MonotoneTag::NonIncreasing;
            relax_with(a, b, &min_w, c, |i| !falling(i))?;
            relax_with(a, b, &max_w, c, falling)?;
            Ok(vec![min_w, max_w])
        },
        observer,
    )?;
    Ok(Product { values, counts: counters.snapshot() })
}

/// The mirrored case: constant-valued row parts of `A`, mixed monotone column
/// parts of `B`, computed as `(B^t A^t)^t`.
pub fn minplus_uniform_mixed(
    a: &IntMatrix,
    dec_a: &MatrixDecompositionSet,
    b: &IntMatrix,
    dec_b: &MatrixDecompositionSet,
    params: MatWitnessParams,
) -> Result<Product<MinPlusMatrix>> {
    let n = check_same_n(a, b)?;
    dec_a.expect(Axis::Rows, n)?;
    dec_b.expect(Axis::Columns, n)?;
    let product =
        minplus_mixed_uniform(&b.transpose(), &dec_b.transposed(), &a.transpose(), &dec_a.transposed(), params)?;
    Ok(Product { values: product.values.transpose(), counts: product.counts })
}

/// Product when every row part of `A` and every column part of `B` is
/// constant-valued: one Boolean product per pair of value classes, exactly
/// `c_a · c_b` in total.
pub fn minplus_few_values_product(
    a: &IntMatrix,
    dec_a: &MatrixDecompositionSet,
    b: &IntMatrix,
    dec_b: &MatrixDecompositionSet,
) -> Result<Product<MinPlusMatrix>> {
    let n = check_same_n(a, b)?;
    dec_a.expect(Axis::Rows, n)?;
    dec_b.expect(Axis::Columns, n)?;
    dec_a.require_uniform(a)?;
    dec_b.require_uniform(b)?;

    let class_value = |part: &Subsequence, value: &dyn Fn(usize) -> i64| part.indices.first().map(|&k| value(k));
    let row_values: Vec<Vec<Option<i64>>> = dec_a
        .lines
        .iter()
        .enumerate()
        .map(|(i, d)| d.parts.iter().map(|p| class_value(p, &|k| a.get(i, k))).collect())
        .collect();
    let col_values: Vec<Vec<Option<i64>>> = dec_b
        .lines
        .iter()
        .enumerate()
        .map(|(j, d)| d.parts.iter().map(|p| class_value(p, &|k| b.get(k, j))).collect())
        .collect();

    let a_slots: Vec<BoolMatrix> = (0..dec_a.parts).map(|o| dec_a.slot_matrix(o)).collect();
    let b_slots: Vec<BoolMatrix> = (0..dec_b.parts).map(|r| dec_b.slot_matrix(r)).collect();
    let counters = Counters::default();

    let values = fold_pairs(
        n,
        &all_pairs(dec_a.parts, dec_b.parts),
        |o, r, c| {
            counters.bool_product();
            let d = bool_matmul(&a_slots[o], &b_slots[r])?;
            for (i, classes) in row_values.iter().enumerate() {
                for j in d.row_ones(i) {
                    let (Some(u), Some(v)) = (classes[o], col_values[j][r]) else {
                        unreachable!("a Boolean product hit implies both parts are non-empty");
                    };
                    c.relax(i, j, checked_add(u, v)?);
                }
            }
            Ok(Vec::new())
        },
        None,
    )?;
    Ok(Product { values, counts: counters.snapshot() })
}

/// Which monotone shape [`shift_transform_matrices`] produces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MatrixShift {
    /// Rows of `A'` non-decreasing, columns of `B'` non-increasing.
    RowsUpColumnsDown,
    /// Rows of `A'` non-increasing, columns of `B'` non-decreasing.
    RowsDownColumnsUp,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftedMatrices {
    pub a: IntMatrix,
    pub b: IntMatrix,
    /// Largest absolute entry of the inputs.
    pub m: i64,
}

/// `a'_{i,k} = a_{i,k} ± 2kM`, `b'_{k,j} = b_{k,j} ∓ 2kM` with `k` counted from 1;
/// the shifts cancel in every sum, so the (min,+) product is unchanged.
pub fn shift_transform_matrices(a: &IntMatrix, b: &IntMatrix, shape: MatrixShift) -> Result<ShiftedMatrices> {
    let n = check_same_n(a, b)?;
    let m = a.max_abs().max(b.max_abs());
    let sign = match shape {
        MatrixShift::RowsUpColumnsDown => 1,
        MatrixShift::RowsDownColumnsUp => -1,
    };
    let offset = |k: usize| -> Result<i64> { checked_mul(sign * 2 * (k as i64 + 1), m) };
    let mut a_data = Vec::with_capacity(n * n);
    let mut b_data = Vec::with_capacity(n * n);
    for i in 0..n {
        for k in 0..n {
            a_data.push(checked_add(a.get(i, k), offset(k)?)?);
        }
    }
    for k in 0..n {
        let shift = offset(k)?;
        for j in 0..n {
            b_data.push(checked_add(b.get(k, j), -shift)?);
        }
    }
    Ok(ShiftedMatrices { a: IntMatrix::from_unbounded(n, a_data), b: IntMatrix::from_unbounded(n, b_data), m })
}
