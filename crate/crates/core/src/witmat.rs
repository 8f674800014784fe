//! Boolean matrix product over word-packed rows, and extreme witnesses for it
//! by blocking the inner index.

use rayon::prelude::*;

use crate::bits::{iter_ones, BoolMatrix};
use crate::error::{Error, Result};
use crate::fastconv::ceil_sqrt;
use crate::witness::{Extreme, MatWitnesses};

fn check_dims(p: &BoolMatrix, q: &BoolMatrix) -> Result<()> {
    if p.n() != q.n() {
        return Err(Error::DimensionMismatch { left: p.n(), right: q.n() });
    }
    Ok(())
}

/// `d_{i,j} = ∨_k p_{i,k} ∧ q_{k,j}`: row `i` of the result is the OR of the
/// rows of `q` selected by row `i` of `p`.
pub fn bool_matmul(p: &BoolMatrix, q: &BoolMatrix) -> Result<BoolMatrix> {
    check_dims(p, q)?;
    let n = p.n();
    let mut out = BoolMatrix::zeros(n);
    for i in 0..n {
        let row = out.row_words_mut(i);
        for k in p.row_ones(i) {
            for (acc, w) in row.iter_mut().zip(q.row_words(k)) {
                *acc |= w;
            }
        }
    }
    Ok(out)
}

/// Width of the inner-index blocks of [`mat_extreme_witness`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatWitnessParams {
    block_size: usize,
}

impl MatWitnessParams {
    pub fn new(block_size: usize, n: usize) -> Result<Self> {
        if block_size == 0 || block_size > n {
            return Err(Error::InvalidParameter { name: "block size", value: block_size, reason: "must lie in 1..=n" });
        }
        Ok(MatWitnessParams { block_size })
    }

    /// `⌈√n⌉`.
    pub fn default_for(n: usize) -> Self {
        MatWitnessParams { block_size: ceil_sqrt(n).max(1) }
    }

    pub fn block_size(&self) -> usize {
        self.block_size
    }
}

/// Least (`Min`) or greatest (`Max`) `k` with `p_{i,k} ∧ q_{k,j}` for every cell.
///
/// The inner range is cut into blocks of `block_size`. Blocks are visited
/// ascending for `Min` and descending for `Max`; the block-restricted product
/// tells each still-open cell whether this block serves it, and a served cell
/// is resolved by scanning just that block. Rows are independent and are
/// processed in parallel.
pub fn mat_extreme_witness(
    p: &BoolMatrix,
    q: &BoolMatrix,
    kind: Extreme,
    params: MatWitnessParams,
) -> Result<MatWitnesses> {
    check_dims(p, q)?;
    let n = p.n();
    let r = params.block_size;
    if r == 0 || r > n.max(1) {
        return Err(Error::InvalidParameter { name: "block size", value: r, reason: "must lie in 1..=n" });
    }
    let mut starts: Vec<usize> = (0..n).step_by(r).collect();
    if kind == Extreme::Max {
        starts.reverse();
    }
    let stride = p.stride();

    let rows: Vec<Vec<(usize, usize)>> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut found = Vec::new();
            let mut done = vec![0u64; stride];
            let mut block_row = vec![0u64; stride];
            for &start in &starts {
                let end = (start + r).min(n);
                block_row.iter_mut().for_each(|w| *w = 0);
                let mut any = false;
                for k in start..end {
                    if p.get(i, k) {
                        any = true;
                        for (acc, w) in block_row.iter_mut().zip(q.row_words(k)) {
                            *acc |= w;
                        }
                    }
                }
                if !any {
                    continue;
                }
                for (acc, d) in block_row.iter_mut().zip(&done) {
                    *acc &= !d;
                }
                for j in iter_ones(&block_row) {
                    let serves = |k: usize| p.get(i, k) && q.get(k, j);
                    let k = match kind {
                        Extreme::Min => (start..end).find(|&k| serves(k)),
                        Extreme::Max => (start..end).rev().find(|&k| serves(k)),
                    }
                    .expect("a serving block always contains a witness");
                    found.push((j, k));
                }
                for (d, acc) in done.iter_mut().zip(&block_row) {
                    *d |= acc;
                }
            }
            found
        })
        .collect();

    let mut witnesses = MatWitnesses::new(n);
    for (i, row) in rows.into_iter().enumerate() {
        for (j, k) in row {
            witnesses.set(i, j, k);
        }
    }
    Ok(witnesses)
}
