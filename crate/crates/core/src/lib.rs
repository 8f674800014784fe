//! (min,+) matrix products and (min,+) convolutions for integer inputs that
//! split into few monotone subsequences.
//!
//! The (min,+) product of `n × n` matrices, `c_{i,j} = min_k a_{i,k} + b_{k,j}`,
//! and the (min,+) convolution of length-`n` vectors are computed here by
//! reduction to extreme-witness problems for Boolean matrix products and
//! Boolean convolutions, one per pair of monotone parts:
//!
//! * [`minplus_decomposed`]: rows of `A` and columns of `B` split into
//!   parts that are all non-decreasing (or all non-increasing).
//! * [`minplus_mixed_uniform`] / [`minplus_uniform_mixed`]: one side has
//!   mixed monotone parts, the other takes few values per line.
//! * [`minplus_few_values_product`]: both sides take few values per line.
//! * [`conv_decomposed`]: `a` and `b` split into parts of opposite direction.
//! * [`conv_few_values`]: one vector takes few values.
//!
//! Each has a brute-force counterpart ([`minplus_naive`], [`conv_naive`])
//! that the test suites compare against, and reports how many subroutine
//! calls it made. The `±2kM` shifts in [`shift_transform_matrices`] and
//! [`shift_transform_vectors`] map arbitrary inputs to monotone ones without
//! changing the answer, which is why no algorithm covers those shapes.
//!
//! Everything is 0-based: row, column, witness and vector indices alike.

pub mod bits;
pub mod decompose;
pub mod decomposition;
pub mod error;
pub mod fastconv;
pub mod generate;
pub mod int;
pub mod minplus_conv;
pub mod minplus_matrix;
mod product;
pub mod witmat;
pub mod witness;

pub use bits::{BoolMatrix, BoolVector};
pub use decompose::{
    char_vector, decompose, decompose_monotone_greedy, decompose_nondecreasing, decompose_nonincreasing,
    decompose_uniform, Decomposed, DecompositionStats, Mode, PartsDirection,
};
pub use decomposition::{validate_decomposition, Decomposition, MonotoneTag, Subsequence};
pub use error::{Error, Line, Result};
pub use fastconv::{bool_convolution, conv_extreme_witness, int_convolution, ConvWitnessParams};
pub use int::{checked_add, IntMatrix, IntVector, MinPlusMatrix, MinPlusVector, Tropical, ENTRY_BOUND, MAX_DIMENSION};
pub use minplus_conv::{
    conv_decomposed, conv_decomposed_observed, conv_few_values, conv_few_values_in_a, conv_naive, default_ell,
    shift_transform_vectors, GroupPartition, Orientation, PartStep, ShiftedVectors, VectorShift,
};
pub use minplus_matrix::{
    minplus_decomposed, minplus_decomposed_observed, minplus_few_values_product, minplus_mixed_uniform,
    minplus_mixed_uniform_observed, minplus_naive, minplus_uniform_mixed, shift_transform_matrices, Axis, Direction,
    MatrixDecompositionSet, MatrixShift, PairStep, ShiftedMatrices,
};
pub use product::{CallCounts, Product};
pub use witmat::{bool_matmul, mat_extreme_witness, MatWitnessParams};
pub use witness::{ConvWitnesses, Extreme, MatWitnesses};
