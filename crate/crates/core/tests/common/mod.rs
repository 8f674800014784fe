//! Brute-force references shared by the integration suites. Nothing here
//! calls into the library's algorithms; inputs arrive as plain vectors.
#![allow(dead_code)]

use monotone_minplus::{BoolMatrix, BoolVector, IntMatrix, MinPlusMatrix, MinPlusVector};

pub fn rows_of(m: &IntMatrix) -> Vec<Vec<i64>> {
    m.rows().map(<[i64]>::to_vec).collect()
}

pub fn bools_of(m: &BoolMatrix) -> Vec<Vec<bool>> {
    (0..m.n()).map(|i| (0..m.n()).map(|j| m.get(i, j)).collect()).collect()
}

pub fn finite_rows(c: &MinPlusMatrix) -> Vec<Vec<Option<i64>>> {
    c.rows().map(|r| r.iter().map(|t| t.finite()).collect()).collect()
}

pub fn finite_coords(c: &MinPlusVector) -> Vec<Option<i64>> {
    c.values().iter().map(|t| t.finite()).collect()
}

pub fn minplus(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<Option<i64>>> {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] + b[k][j]).min()).collect()).collect()
}

pub fn conv(a: &[i64], b: &[i64]) -> Vec<Option<i64>> {
    let n = a.len();
    let mut c = vec![None; 2 * n - 1];
    for i in 0..n {
        for j in 0..n {
            let s = a[i] + b[j];
            let slot: &mut Option<i64> = &mut c[i + j];
            *slot = Some(slot.map_or(s, |t| t.min(s)));
        }
    }
    c
}

pub fn schoolbook(p: &[u64], q: &[u64]) -> Vec<u64> {
    let mut r = vec![0u64; p.len() + q.len() - 1];
    for (i, &x) in p.iter().enumerate() {
        for (j, &y) in q.iter().enumerate() {
            r[i + j] += x * y;
        }
    }
    r
}

pub fn bool_product(p: &[Vec<bool>], q: &[Vec<bool>]) -> Vec<Vec<bool>> {
    let n = p.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).any(|k| p[i][k] && q[k][j])).collect()).collect()
}

/// Smallest (`want_max == false`) or largest `k` with `p[i][k] && q[k][j]`.
pub fn mat_witnesses(p: &[Vec<bool>], q: &[Vec<bool>], want_max: bool) -> Vec<Vec<Option<usize>>> {
    let n = p.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut hits = (0..n).filter(|&k| p[i][k] && q[k][j]);
                    if want_max {
                        hits.next_back()
                    } else {
                        hits.next()
                    }
                })
                .collect()
        })
        .collect()
}

pub fn conv_witnesses(p: &[bool], q: &[bool], want_max: bool) -> Vec<Option<usize>> {
    let n = p.len();
    (0..2 * n - 1)
        .map(|k| {
            let mut hits = (0..n).filter(|&l| l <= k && k - l < n && p[l] && q[k - l]);
            if want_max {
                hits.next_back()
            } else {
                hits.next()
            }
        })
        .collect()
}

/// Quadratic longest strictly decreasing subsequence.
pub fn longest_strictly_decreasing(s: &[i64]) -> usize {
    let mut best = vec![1usize; s.len()];
    for i in 0..s.len() {
        for j in 0..i {
            if s[j] > s[i] {
                best[i] = best[i].max(best[j] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

pub fn longest_strictly_increasing(s: &[i64]) -> usize {
    let negated: Vec<i64> = s.iter().map(|x| -x).collect();
    longest_strictly_decreasing(&negated)
}

/// Exhaustive minimum number of non-decreasing parts, trying every
/// assignment of each element to a fresh or already-open part. Parts are
/// remembered only by their last value, so equal assignments collapse.
pub fn min_nondecreasing_parts_brute(s: &[i64]) -> usize {
    let mut states: Vec<Vec<i64>> = vec![Vec::new()];
    for &x in s {
        let mut next = Vec::new();
        for tails in &states {
            let mut fresh = tails.clone();
            fresh.push(x);
            next.push(fresh);
            for t in 0..tails.len() {
                if tails[t] <= x {
                    let mut extended = tails.clone();
                    extended[t] = x;
                    next.push(extended);
                }
            }
        }
        for tails in &mut next {
            tails.sort_unstable();
        }
        next.sort();
        next.dedup();
        states = next;
    }
    states.iter().map(Vec::len).min().unwrap_or(0)
}

/// Tails of open parts over a small alphabet `1..=4`, stored as four 4-bit
/// counters. Used by the exhaustive sweep, where the state sets are passed
/// down a trie of prefixes.
///
/// A state is dropped when another one dominates it: no more parts, and its
/// parts can be matched into the other's so that each tail is at least as
/// easy to extend. The dominating state can then copy every future move.
#[derive(Clone, Default)]
pub struct TailSets {
    pub states: Vec<u16>,
}

impl TailSets {
    pub fn root() -> Self {
        TailSets { states: vec![0] }
    }

    fn count(state: u16, v: i64) -> u16 {
        (state >> (4 * (v - 1))) & 0xF
    }

    fn bump(state: u16, v: i64, delta: i32) -> u16 {
        (state as i32 + delta * (1 << (4 * (v - 1)))) as u16
    }

    /// Extends every state by `x`, either opening a part or extending one.
    /// `ascending` selects non-decreasing parts (a low tail is easiest to
    /// extend) or non-increasing ones (a high tail is).
    pub fn push(&self, x: i64, ascending: bool) -> TailSets {
        let fits = |t: i64, x: i64| if ascending { t <= x } else { t >= x };
        let mut next = Vec::with_capacity(self.states.len() * 3);
        for &st in &self.states {
            next.push(Self::bump(st, x, 1));
            for t in 1..=4 {
                if Self::count(st, t) > 0 && fits(t, x) {
                    next.push(Self::bump(Self::bump(st, t, -1), x, 1));
                }
            }
        }
        next.sort_unstable();
        next.dedup();
        let order: [i64; 4] = if ascending { [1, 2, 3, 4] } else { [4, 3, 2, 1] };
        // profile[r]: parts whose tail is among the `r + 1` easiest values.
        let profile = |st: u16| -> [usize; 4] {
            let mut acc = 0;
            order.map(|v| {
                acc += Self::count(st, v) as usize;
                acc
            })
        };
        let profiles: Vec<[usize; 4]> = next.iter().map(|&st| profile(st)).collect();
        let dominates = |x: &[usize; 4], y: &[usize; 4]| x[3] <= y[3] && (0..3).all(|r| y[r].min(x[3]) <= x[r]);
        let kept = (0..next.len())
            .filter(|&i| {
                // Distinct states never dominate each other both ways.
                !(0..next.len()).any(|j| j != i && dominates(&profiles[j], &profiles[i]))
            })
            .map(|i| next[i])
            .collect();
        TailSets { states: kept }
    }

    pub fn min_parts(&self) -> usize {
        self.states.iter().map(|&st| (1..=4).map(|v| Self::count(st, v) as usize).sum::<usize>()).min().unwrap_or(0)
    }
}

pub fn bool_matrix(rows: &[Vec<bool>]) -> BoolMatrix {
    BoolMatrix::from_rows(&rows.iter().map(|r| BoolVector::from_bools(r)).collect::<Vec<_>>())
}

/// `⌈√n⌉` computed with floats; fine for the small sizes in tests.
pub fn sqrt_ceil(n: usize) -> usize {
    ((n as f64).sqrt().ceil() as usize).max(1)
}
