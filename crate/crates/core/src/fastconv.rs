//! Exact integer convolution by number-theoretic transform, Boolean
//! convolution on top of it, and blocked extreme witnesses for Boolean
//! convolution.

use crate::bits::BoolVector;
use crate::error::{Error, Result};
use crate::witness::{ConvWitnesses, Extreme};

mod ntt {
    pub const MOD: u64 = 998_244_353;
    const GENERATOR: u64 = 3;
    /// `MOD - 1 = 119 * 2^23`.
    pub const MAX_LOG_LEN: u32 = 23;

    pub fn pow_mod(mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1;
        base %= MOD;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % MOD;
            }
            base = base * base % MOD;
            exp >>= 1;
        }
        acc
    }

    /// In-place transform; `a.len()` must be a power of two no larger than `2^23`.
    pub fn transform(a: &mut [u64], inverse: bool) {
        let n = a.len();
        debug_assert!(n.is_power_of_two() && n.trailing_zeros() <= MAX_LOG_LEN);
        let mut j = 0;
        for i in 1..n {
            let mut bit = n >> 1;
            while j & bit != 0 {
                j ^= bit;
                bit >>= 1;
            }
            j ^= bit;
            if i < j {
                a.swap(i, j);
            }
        }
        let mut twiddles = Vec::with_capacity(n / 2);
        let mut len = 2;
        while len <= n {
            let mut w = pow_mod(GENERATOR, (MOD - 1) / len as u64);
            if inverse {
                w = pow_mod(w, MOD - 2);
            }
            let half = len / 2;
            twiddles.clear();
            let mut t = 1;
            for _ in 0..half {
                twiddles.push(t);
                t = t * w % MOD;
            }
            for block in a.chunks_exact_mut(len) {
                let (lo, hi) = block.split_at_mut(half);
                for ((u, v), &tw) in lo.iter_mut().zip(hi.iter_mut()).zip(&twiddles) {
                    let x = *u;
                    let y = *v * tw % MOD;
                    *u = if x + y >= MOD { x + y - MOD } else { x + y };
                    *v = if x >= y { x - y } else { x + MOD - y };
                }
            }
            len <<= 1;
        }
        if inverse {
            let scale = pow_mod(n as u64, MOD - 2);
            for x in a.iter_mut() {
                *x = *x * scale % MOD;
            }
        }
    }
}

/// `c_i = Σ_l p_l · q_{i-l}` for `i = 0..2n-1`, exact.
///
/// Every true coefficient must stay below the transform modulus; inputs whose
/// worst case `n · max(p) · max(q)` could reach it are rejected.
pub fn int_convolution(p: &[u64], q: &[u64]) -> Result<Vec<u64>> {
    if p.len() != q.len() {
        return Err(Error::LengthMismatch { left: p.len(), right: q.len() });
    }
    if p.is_empty() {
        return Err(Error::EmptyInput);
    }
    let n = p.len();
    let max_p = p.iter().copied().max().unwrap_or(0) as u128;
    let max_q = q.iter().copied().max().unwrap_or(0) as u128;
    let bound = max_p * max_q * n as u128;
    if bound >= ntt::MOD as u128 {
        return Err(Error::PrecisionWindowExceeded { bound, window: ntt::MOD });
    }
    let out_len = 2 * n - 1;
    let size = out_len.next_power_of_two();
    if size.trailing_zeros() > ntt::MAX_LOG_LEN {
        return Err(Error::InvalidParameter { name: "length", value: n, reason: "too long for the transform" });
    }
    let mut fp = vec![0u64; size];
    let mut fq = vec![0u64; size];
    fp[..n].copy_from_slice(p);
    fq[..n].copy_from_slice(q);
    ntt::transform(&mut fp, false);
    ntt::transform(&mut fq, false);
    for (x, y) in fp.iter_mut().zip(&fq) {
        *x = *x * y % ntt::MOD;
    }
    ntt::transform(&mut fp, true);
    fp.truncate(out_len);
    Ok(fp)
}

/// Bit `k` is set iff some `l` has `p_l ∧ q_{k-l}`.
pub fn bool_convolution(p: &BoolVector, q: &BoolVector) -> Result<BoolVector> {
    if p.len() != q.len() {
        return Err(Error::LengthMismatch { left: p.len(), right: q.len() });
    }
    let counts = int_convolution(&p.to_counts(), &q.to_counts())?;
    let mut out = BoolVector::zeros(counts.len());
    for (k, &c) in counts.iter().enumerate() {
        if c > 0 {
            out.set(k, true);
        }
    }
    Ok(out)
}

/// Block size for [`conv_extreme_witness`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConvWitnessParams {
    block_size: usize,
}

impl ConvWitnessParams {
    pub fn new(block_size: usize, n: usize) -> Result<Self> {
        if block_size == 0 || block_size > n {
            return Err(Error::InvalidParameter { name: "block size", value: block_size, reason: "must lie in 1..=n" });
        }
        Ok(ConvWitnessParams { block_size })
    }

    /// `⌈√n⌉`.
    pub fn default_for(n: usize) -> Self {
        ConvWitnessParams { block_size: ceil_sqrt(n).max(1) }
    }

    pub fn block_size(&self) -> usize {
        self.block_size
    }
}

pub(crate) fn ceil_sqrt(n: usize) -> usize {
    let mut r = (n as f64).sqrt() as usize;
    while r * r < n {
        r += 1;
    }
    while r > 0 && (r - 1) * (r - 1) >= n {
        r -= 1;
    }
    r
}

/// Least (`Min`) or greatest (`Max`) `l` with `p_l ∧ q_{k-l}` for every `k` in
/// `0..2n-1`.
///
/// The positions of `p` are cut into contiguous blocks of `block_size`; each
/// block is convolved with `q` to learn which `k` it serves, the first (last)
/// serving block is picked per `k`, and only that block is scanned.
pub fn conv_extreme_witness(
    p: &BoolVector,
    q: &BoolVector,
    kind: Extreme,
    params: ConvWitnessParams,
) -> Result<ConvWitnesses> {
    let n = p.len();
    if q.len() != n {
        return Err(Error::LengthMismatch { left: n, right: q.len() });
    }
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    let s = params.block_size;
    if s > n {
        return Err(Error::InvalidParameter { name: "block size", value: s, reason: "must lie in 1..=n" });
    }
    let out_len = 2 * n - 1;
    let q_counts = q.to_counts();
    let block_starts: Vec<usize> = (0..n).step_by(s).collect();
    let ordered: Box<dyn Iterator<Item = &usize>> = match kind {
        Extreme::Min => Box::new(block_starts.iter()),
        Extreme::Max => Box::new(block_starts.iter().rev()),
    };

    let mut serving: Vec<Option<usize>> = vec![None; out_len];
    let mut unresolved = out_len;
    for &start in ordered {
        if unresolved == 0 {
            break;
        }
        let end = (start + s).min(n);
        if !(start..end).any(|l| p.get(l)) {
            continue;
        }
        let mut slice = vec![0u64; n];
        for (l, slot) in slice.iter_mut().enumerate().take(end).skip(start) {
            *slot = u64::from(p.get(l));
        }
        let counts = int_convolution(&slice, &q_counts)?;
        for (k, &c) in counts.iter().enumerate() {
            if c > 0 && serving[k].is_none() {
                serving[k] = Some(start);
                unresolved -= 1;
            }
        }
    }

    let mut witnesses = ConvWitnesses::new(out_len);
    for (k, start) in serving.iter().enumerate() {
        let Some(start) = *start else { continue };
        let end = (start + s).min(n);
        let is_witness = |l: usize| l <= k && k - l < n && p.get(l) && q.get(k - l);
        let found = match kind {
            Extreme::Min => (start..end).find(|&l| is_witness(l)),
            Extreme::Max => (start..end).rev().find(|&l| is_witness(l)),
        };
        let l = found.expect("a serving block always contains a witness");
        witnesses.set(k, l);
    }
    Ok(witnesses)
}
