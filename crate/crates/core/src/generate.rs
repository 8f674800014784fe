//! Seeded instance generators for tests and benchmarks.
//!
//! Structure is planted: a line of length `n` gets `m` parts by assigning
//! every position to a uniformly random part, then each part receives a
//! sorted run of random values (ascending or descending) scattered over its
//! positions. The planted decomposition is returned with the values, padded
//! with empty parts to exactly `m`. All randomness comes from a ChaCha8
//! stream seeded with the caller's seed, so instances are reproducible.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::decompose::decompose_uniform;
use crate::decomposition::{Decomposition, MonotoneTag, Subsequence};
use crate::error::Result;
use crate::int::{IntMatrix, IntVector};

/// Magnitude of generated values unless stated otherwise.
pub const DEFAULT_RANGE: i64 = 1000;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Direction of each planted part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PartTags {
    All(MonotoneTag),
    /// Each part independently non-decreasing or non-increasing.
    Mixed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Planted {
    pub values: Vec<i64>,
    pub decomposition: Decomposition,
}

pub fn planted_sequence(rng: &mut impl Rng, n: usize, parts: usize, tags: PartTags, range: i64) -> Planted {
    let parts = parts.max(1);
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); parts];
    for i in 0..n {
        members[rng.gen_range(0..parts)].push(i);
    }
    let mut values = vec![0i64; n];
    let mut subsequences = Vec::with_capacity(parts);
    for indices in members {
        let tag = match tags {
            PartTags::All(tag) => tag,
            PartTags::Mixed if rng.gen_bool(0.5) => MonotoneTag::NonDecreasing,
            PartTags::Mixed => MonotoneTag::NonIncreasing,
        };
        let mut run: Vec<i64> = (0..indices.len()).map(|_| rng.gen_range(-range..=range)).collect();
        match tag {
            MonotoneTag::NonIncreasing => run.sort_unstable_by(|x, y| y.cmp(x)),
            MonotoneTag::Uniform => {
                let v = run.first().copied().unwrap_or(0);
                run.iter_mut().for_each(|x| *x = v);
            }
            MonotoneTag::NonDecreasing => run.sort_unstable(),
        }
        for (&i, &x) in indices.iter().zip(&run) {
            values[i] = x;
        }
        subsequences.push(Subsequence::new(indices, tag));
    }
    Planted { values, decomposition: Decomposition::new(n, subsequences) }
}

/// At most `h` distinct values drawn from `-range..=range`.
pub fn few_values_sequence(rng: &mut impl Rng, n: usize, h: usize, range: i64) -> Vec<i64> {
    let palette = distinct_values(rng, h.max(1), range);
    (0..n).map(|_| *palette.choose(rng).expect("palette is non-empty")).collect()
}

fn distinct_values(rng: &mut impl Rng, h: usize, range: i64) -> Vec<i64> {
    let span = (2 * range + 1) as usize;
    let h = h.min(span);
    let mut picked = Vec::with_capacity(h);
    while picked.len() < h {
        let v = rng.gen_range(-range..=range);
        if !picked.contains(&v) {
            picked.push(v);
        }
    }
    picked
}

pub fn random_sequence(rng: &mut impl Rng, n: usize, range: i64) -> Vec<i64> {
    (0..n).map(|_| rng.gen_range(-range..=range)).collect()
}

/// Uniform decomposition padded to exactly `h` parts.
fn uniform_padded(values: &[i64], h: usize) -> Result<Decomposition> {
    let mut d = decompose_uniform(values)?.decomposition;
    d.pad_to(h);
    Ok(d)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixInstance {
    pub a: IntMatrix,
    pub b: IntMatrix,
    /// One decomposition per row of `a`.
    pub dec_a: Option<Vec<Decomposition>>,
    /// One decomposition per column of `b`.
    pub dec_b: Option<Vec<Decomposition>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorInstance {
    pub a: IntVector,
    pub b: IntVector,
    pub dec_a: Option<Decomposition>,
    pub dec_b: Option<Decomposition>,
}

fn columns_to_matrix(n: usize, columns: &[Vec<i64>]) -> Result<IntMatrix> {
    IntMatrix::new(n, (0..n * n).map(|idx| columns[idx % n][idx / n]).collect())
}

fn planted_lines(rng: &mut impl Rng, n: usize, parts: usize, tags: PartTags) -> (Vec<Vec<i64>>, Vec<Decomposition>) {
    (0..n)
        .map(|_| {
            let p = planted_sequence(rng, n, parts, tags, DEFAULT_RANGE);
            (p.values, p.decomposition)
        })
        .unzip()
}

/// Rows of `A` with `m_a` parts and columns of `B` with `m_b` parts, all tagged `tag`.
pub fn monotone_matrices(seed: u64, n: usize, m_a: usize, m_b: usize, tag: MonotoneTag) -> Result<MatrixInstance> {
    let mut rng = seeded_rng(seed);
    let (rows, dec_a) = planted_lines(&mut rng, n, m_a, PartTags::All(tag));
    let (cols, dec_b) = planted_lines(&mut rng, n, m_b, PartTags::All(tag));
    Ok(MatrixInstance {
        a: IntMatrix::from_rows(&rows)?,
        b: columns_to_matrix(n, &cols)?,
        dec_a: Some(dec_a),
        dec_b: Some(dec_b),
    })
}

/// Rows of `A` with `m` mixed-direction parts; columns of `B` with at most `c`
/// distinct values, decomposed into exactly `c` uniform parts.
pub fn mixed_uniform_matrices(seed: u64, n: usize, m: usize, c: usize) -> Result<MatrixInstance> {
    let mut rng = seeded_rng(seed);
    let (rows, dec_a) = planted_lines(&mut rng, n, m, PartTags::Mixed);
    let cols: Vec<Vec<i64>> = (0..n).map(|_| few_values_sequence(&mut rng, n, c, DEFAULT_RANGE)).collect();
    let dec_b = cols.iter().map(|col| uniform_padded(col, c)).collect::<Result<Vec<_>>>()?;
    Ok(MatrixInstance {
        a: IntMatrix::from_rows(&rows)?,
        b: columns_to_matrix(n, &cols)?,
        dec_a: Some(dec_a),
        dec_b: Some(dec_b),
    })
}

/// Rows of `A` with at most `c_a` values, columns of `B` with at most `c_b`.
pub fn few_values_matrices(seed: u64, n: usize, c_a: usize, c_b: usize) -> Result<MatrixInstance> {
    let mut rng = seeded_rng(seed);
    let rows: Vec<Vec<i64>> = (0..n).map(|_| few_values_sequence(&mut rng, n, c_a, DEFAULT_RANGE)).collect();
    let cols: Vec<Vec<i64>> = (0..n).map(|_| few_values_sequence(&mut rng, n, c_b, DEFAULT_RANGE)).collect();
    let dec_a = rows.iter().map(|r| uniform_padded(r, c_a)).collect::<Result<Vec<_>>>()?;
    let dec_b = cols.iter().map(|col| uniform_padded(col, c_b)).collect::<Result<Vec<_>>>()?;
    Ok(MatrixInstance {
        a: IntMatrix::from_rows(&rows)?,
        b: columns_to_matrix(n, &cols)?,
        dec_a: Some(dec_a),
        dec_b: Some(dec_b),
    })
}

pub fn random_matrices(seed: u64, n: usize, range: i64) -> Result<MatrixInstance> {
    let mut rng = seeded_rng(seed);
    let a = IntMatrix::new(n, random_sequence(&mut rng, n * n, range))?;
    let b = IntMatrix::new(n, random_sequence(&mut rng, n * n, range))?;
    Ok(MatrixInstance { a, b, dec_a: None, dec_b: None })
}

/// `a` with `m_a` parts tagged `a_tag`, `b` with `m_b` parts of the opposite direction.
pub fn opposite_vectors(seed: u64, n: usize, m_a: usize, m_b: usize, a_tag: MonotoneTag) -> Result<VectorInstance> {
    let mut rng = seeded_rng(seed);
    let pa = planted_sequence(&mut rng, n, m_a, PartTags::All(a_tag), DEFAULT_RANGE);
    let pb = planted_sequence(&mut rng, n, m_b, PartTags::All(a_tag.reversed()), DEFAULT_RANGE);
    Ok(VectorInstance {
        a: IntVector::new(pa.values)?,
        b: IntVector::new(pb.values)?,
        dec_a: Some(pa.decomposition),
        dec_b: Some(pb.decomposition),
    })
}

/// Arbitrary `a`; `b` with at most `h` values, decomposed into exactly `h` uniform parts.
pub fn few_values_vectors(seed: u64, n: usize, h: usize) -> Result<VectorInstance> {
    let mut rng = seeded_rng(seed);
    let a = random_sequence(&mut rng, n, DEFAULT_RANGE);
    let b = few_values_sequence(&mut rng, n, h, DEFAULT_RANGE);
    let dec_b = uniform_padded(&b, h)?;
    Ok(VectorInstance { a: IntVector::new(a)?, b: IntVector::new(b)?, dec_a: None, dec_b: Some(dec_b) })
}

pub fn random_vectors(seed: u64, n: usize, range: i64) -> Result<VectorInstance> {
    let mut rng = seeded_rng(seed);
    let a = IntVector::new(random_sequence(&mut rng, n, range))?;
    let b = IntVector::new(random_sequence(&mut rng, n, range))?;
    Ok(VectorInstance { a, b, dec_a: None, dec_b: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::validate_decomposition;

    #[test]
    fn planted_decompositions_are_valid_and_sized() {
        let mut rng = seeded_rng(3);
        for tags in
            [PartTags::All(MonotoneTag::NonDecreasing), PartTags::All(MonotoneTag::NonIncreasing), PartTags::Mixed]
        {
            for n in [1, 2, 17, 64] {
                let p = planted_sequence(&mut rng, n, 4, tags, 50);
                assert_eq!(p.decomposition.parts_count(), 4);
                validate_decomposition(&p.decomposition, &p.values).unwrap();
            }
        }
    }

    #[test]
    fn generators_are_deterministic() {
        assert_eq!(
            monotone_matrices(9, 8, 2, 3, MonotoneTag::NonIncreasing).unwrap(),
            monotone_matrices(9, 8, 2, 3, MonotoneTag::NonIncreasing).unwrap()
        );
        assert_ne!(random_vectors(1, 8, 10).unwrap(), random_vectors(2, 8, 10).unwrap());
    }

    #[test]
    fn few_values_respect_the_budget() {
        let inst = few_values_vectors(5, 40, 3).unwrap();
        let dec_b = inst.dec_b.unwrap();
        assert_eq!(dec_b.parts_count(), 3);
        validate_decomposition(&dec_b, inst.b.as_slice()).unwrap();
        let inst = few_values_matrices(5, 10, 2, 4).unwrap();
        for (i, d) in inst.dec_a.unwrap().iter().enumerate() {
            assert_eq!(d.parts_count(), 2);
            validate_decomposition(d, inst.a.row(i)).unwrap();
        }
        for (j, d) in inst.dec_b.unwrap().iter().enumerate() {
            assert_eq!(d.parts_count(), 4);
            validate_decomposition(d, &inst.b.column(j)).unwrap();
        }
    }
}
