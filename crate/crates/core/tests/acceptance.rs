//! Acceptance gate. Runs every criterion and prints one PASS/FAIL line per
//! criterion; exits non-zero if any fails.

mod common;

use std::time::{Duration, Instant};

use monotone_minplus::generate::{
    few_values_matrices, few_values_vectors, mixed_uniform_matrices, monotone_matrices, opposite_vectors,
    random_matrices, random_vectors, seeded_rng, MatrixInstance,
};
use monotone_minplus::*;
use rand::Rng;

use common::*;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: monotone_minplus::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn part(indices: &[usize], tag: MonotoneTag) -> Subsequence {
    Subsequence::new(indices.to_vec(), tag)
}

fn run(id: usize, name: &str, limit: Option<Duration>, check: impl FnOnce() -> Check) -> bool {
    let start = Instant::now();
    let mut outcome = check();
    let elapsed = start.elapsed();
    if let (Ok(_), Some(limit)) = (&outcome, limit) {
        if elapsed >= limit {
            outcome = Err(format!("took {elapsed:.2?}, limit {limit:?}"));
        }
    }
    let (status, detail) = match &outcome {
        Ok(d) => ("PASS", d.as_str()),
        Err(d) => ("FAIL", d.as_str()),
    };
    println!("{status} criterion {id}: {name} [{elapsed:.2?}] {detail}");
    outcome.is_ok()
}

fn example_1() -> Check {
    let nd = MonotoneTag::NonDecreasing;
    let rows = vec![
        vec![3, 1, 4, 1, 5, 9],
        vec![2, 6, 5, 3, 5, 8],
        vec![0, 0, 0, 0, 0, 0],
        vec![1, 7, 3, 9, 8, 4],
        vec![8, 4, 6, 2, 6, 4],
        vec![10, 10, 10, 1, 1, 1],
    ];
    let columns = vec![
        vec![1, 2, 3, 4, 5, 6],
        vec![4, 1, 5, 2, 6, 3],
        vec![0, 0, 0, 0, 0, 0],
        vec![7, 3, 8, 4, 9, 5],
        vec![5, 11, 2, 7, 13, 10],
        vec![-3, 5, -2, 6, -1, 7],
    ];
    let a = lib(IntMatrix::from_rows(&rows))?;
    let b = lib(IntMatrix::from_rows(&columns))?.transpose();

    let row_parts = |i: usize| -> Result<Decomposition, String> {
        if i == 3 {
            return Ok(Decomposition::new(6, vec![part(&[0, 2, 5], nd), part(&[1, 4], nd), part(&[3], nd)]));
        }
        let d = lib(decompose_nondecreasing(a.row(i)))?.decomposition;
        ensure(d.parts_count() <= 3, || format!("row {i} needs {} parts", d.parts_count()))?;
        Ok(d)
    };
    let column_parts = |j: usize| -> Result<Decomposition, String> {
        if j == 4 {
            return Ok(Decomposition::new(6, vec![part(&[0, 1, 4], nd), part(&[2, 3, 5], nd)]));
        }
        let d = lib(decompose_nondecreasing(&b.column(j)))?.decomposition;
        ensure(d.parts_count() <= 2, || format!("column {j} needs {} parts", d.parts_count()))?;
        Ok(d)
    };
    let dec_a = lib(MatrixDecompositionSet::rows(&a, (0..6).map(row_parts).collect::<Result<_, _>>()?))?;
    let dec_b = lib(MatrixDecompositionSet::columns(&b, (0..6).map(column_parts).collect::<Result<_, _>>()?))?;

    let mut seen = Vec::new();
    let product = lib(minplus_decomposed_observed(
        &a,
        &dec_a,
        &b,
        &dec_b,
        Direction::NonDecreasing,
        MatWitnessParams::default_for(6),
        |step| seen.push(((step.a_slot, step.b_slot), step.witnesses[0].get(3, 4))),
    ))?;
    seen.sort();
    // 0-based slots and witnesses of the listed 1-based ones: 1, 3, 2, 4.
    let expected = vec![
        ((0, 0), Some(0)),
        ((0, 1), Some(2)),
        ((1, 0), Some(1)),
        ((1, 1), None),
        ((2, 0), None),
        ((2, 1), Some(3)),
    ];
    ensure(seen == expected, || format!("witnesses at (4,5): {seen:?}"))?;
    let c = product.values.get(3, 4);
    ensure(c == Tropical::Finite(5), || format!("c(4,5) = {c}"))?;
    ensure(finite_rows(&product.values) == minplus(&rows_of(&a), &rows_of(&b)), || "full product differs".into())?;
    Ok("c(4,5) = 5, witnesses 1,3,2,4".into())
}

fn example_2() -> Check {
    let (nd, ni) = (MonotoneTag::NonDecreasing, MonotoneTag::NonIncreasing);
    let a = lib(IntVector::new(vec![1, 7, 3, 9, 8, 4]))?;
    let b = lib(IntVector::new(vec![13, 7, 11, 5, 10, 12]))?;
    let dec_a = Decomposition::new(6, vec![part(&[0, 2, 5], nd), part(&[1, 4], nd), part(&[3], nd)]);

    // With b_5 = 12 the second listed part (7, 5, 12) is not non-increasing.
    let listed = Decomposition::new(6, vec![part(&[0, 2, 4], ni), part(&[1, 3, 5], ni)]);
    ensure(validate_decomposition(&listed, b.as_slice()).is_err(), || "listed 2-part split accepted".into())?;
    let exact = lib(decompose_nonincreasing(b.as_slice()))?.stats.parts_count;
    ensure(exact == 3, || format!("exact non-increasing count {exact}"))?;

    let expected = vec![
        ((0, 0), Some(0)),
        ((0, 1), None),
        ((0, 2), None),
        ((1, 0), Some(4)),
        ((1, 1), Some(1)),
        ((1, 2), None),
        ((2, 0), None),
        ((2, 1), Some(3)),
        ((2, 2), None),
    ];
    let dec_b = Decomposition::new(6, vec![part(&[0, 2, 4], ni), part(&[1, 3], ni), part(&[5], ni)]);
    let mut seen = Vec::new();
    let product = lib(conv_decomposed_observed(&a, &dec_a, &b, &dec_b, ConvWitnessParams::default_for(6), |step| {
        seen.push(((step.a_part, step.b_part), step.witnesses.get(4)))
    }))?;
    ensure(seen == expected, || format!("witnesses at k=4: {seen:?}"))?;
    ensure(product.values.get(4) == Tropical::Finite(11), || format!("c_4 = {}", product.values.get(4)))?;
    ensure(finite_coords(&product.values) == conv(a.as_slice(), b.as_slice()), || "convolution differs".into())?;

    // The listed split is valid verbatim once b_5 = 2.
    let b2 = lib(IntVector::new(vec![13, 7, 11, 5, 10, 2]))?;
    let mut seen2 = Vec::new();
    let product2 =
        lib(conv_decomposed_observed(&a, &dec_a, &b2, &listed, ConvWitnessParams::default_for(6), |step| {
            if let Some(w) = step.witnesses.get(4) {
                seen2.push(((step.a_part, step.b_part), w));
            }
        }))?;
    ensure(seen2 == vec![((0, 0), 0), ((1, 0), 4), ((1, 1), 1), ((2, 1), 3)], || format!("b_5 = 2: {seen2:?}"))?;
    ensure(product2.values.get(4) == Tropical::Finite(11), || "b_5 = 2: c_4 differs".into())?;
    Ok("c_4 = 11, witnesses 0,4,1,3".into())
}

fn matrix_sets(inst: &MatrixInstance) -> Result<(MatrixDecompositionSet, MatrixDecompositionSet), String> {
    let dec_a = inst.dec_a.clone().ok_or("instance without row decompositions")?;
    let dec_b = inst.dec_b.clone().ok_or("instance without column decompositions")?;
    Ok((lib(MatrixDecompositionSet::rows(&inst.a, dec_a))?, lib(MatrixDecompositionSet::columns(&inst.b, dec_b))?))
}

fn oracle_suites() -> Check {
    let mut cases = 0usize;
    for n in [8usize, 16, 32, 64] {
        let params = MatWitnessParams::default_for(n);
        for seed in 0..100u64 {
            let small = 1 + (seed % 3) as usize;
            let other = 1 + ((seed / 3) % 3) as usize;
            let fail = |algo: &str| format!("{algo} differs at n = {n}, seed {seed}");

            let tag = if seed % 2 == 0 { MonotoneTag::NonDecreasing } else { MonotoneTag::NonIncreasing };
            let direction = if seed % 2 == 0 { Direction::NonDecreasing } else { Direction::NonIncreasing };
            let inst = lib(monotone_matrices(seed, n, small, other, tag))?;
            let (da, db) = matrix_sets(&inst)?;
            let got = lib(minplus_decomposed(&inst.a, &da, &inst.b, &db, direction, params))?;
            let want = minplus(&rows_of(&inst.a), &rows_of(&inst.b));
            ensure(finite_rows(&got.values) == want, || fail("fig1"))?;

            let inst = lib(mixed_uniform_matrices(seed, n, small, other))?;
            let (da, db) = matrix_sets(&inst)?;
            let got = lib(minplus_mixed_uniform(&inst.a, &da, &inst.b, &db, params))?;
            let want = minplus(&rows_of(&inst.a), &rows_of(&inst.b));
            ensure(finite_rows(&got.values) == want, || fail("fig2"))?;
            // Mirrored roles: A := B^t, B := A^t.
            let (ta, tb) = (inst.b.transpose(), inst.a.transpose());
            let got = lib(minplus_uniform_mixed(&ta, &db.transposed(), &tb, &da.transposed(), params))?;
            ensure(finite_rows(&got.values) == minplus(&rows_of(&ta), &rows_of(&tb)), || fail("fig2 mirrored"))?;

            let inst = lib(few_values_matrices(seed, n, small, other))?;
            let (da, db) = matrix_sets(&inst)?;
            let got = lib(minplus_few_values_product(&inst.a, &da, &inst.b, &db))?;
            let want = minplus(&rows_of(&inst.a), &rows_of(&inst.b));
            ensure(finite_rows(&got.values) == want, || fail("few-values product"))?;

            let inst = lib(opposite_vectors(seed, n, small, other, tag))?;
            let (da, db) = (inst.dec_a.clone().unwrap(), inst.dec_b.clone().unwrap());
            let got = lib(conv_decomposed(&inst.a, &da, &inst.b, &db, ConvWitnessParams::default_for(n)))?;
            ensure(finite_coords(&got.values) == conv(inst.a.as_slice(), inst.b.as_slice()), || fail("fig3"))?;

            let inst = lib(few_values_vectors(seed, n, small + other))?;
            let ell = [1, default_ell(n), n][(seed % 3) as usize];
            let got = lib(conv_few_values(&inst.a, &inst.b, inst.dec_b.as_ref().unwrap(), ell))?;
            ensure(finite_coords(&got.values) == conv(inst.a.as_slice(), inst.b.as_slice()), || fail("fig4"))?;
            cases += 5;
        }
    }
    Ok(format!("{cases} instances equal the oracles"))
}

fn random_bools(rng: &mut impl Rng, len: usize, density: f64) -> Vec<bool> {
    (0..len).map(|_| rng.gen_bool(density)).collect()
}

fn witness_suites() -> Check {
    let mut rng = seeded_rng(4);
    let mut checks = 0usize;
    for n in 1..=64usize {
        for density in [0.05, 0.3, 0.8] {
            let p: Vec<Vec<bool>> = (0..n).map(|_| random_bools(&mut rng, n, density)).collect();
            let q: Vec<Vec<bool>> = (0..n).map(|_| random_bools(&mut rng, n, density)).collect();
            let (pm, qm) = (bool_matrix(&p), bool_matrix(&q));
            for (kind, want_max) in [(Extreme::Min, false), (Extreme::Max, true)] {
                let want: Vec<Option<usize>> = mat_witnesses(&p, &q, want_max).concat();
                for s in [1, sqrt_ceil(n), n] {
                    let got = lib(mat_extreme_witness(&pm, &qm, kind, lib(MatWitnessParams::new(s, n))?))?;
                    ensure(got.cells() == want.as_slice(), || format!("matrix n = {n}, s = {s}, {kind:?}"))?;
                    checks += 1;
                }
            }
        }
    }
    for n in 1..=128usize {
        for density in [0.05, 0.3, 0.8] {
            let p = random_bools(&mut rng, n, density);
            let q = random_bools(&mut rng, n, density);
            let (pv, qv) = (BoolVector::from_bools(&p), BoolVector::from_bools(&q));
            for (kind, want_max) in [(Extreme::Min, false), (Extreme::Max, true)] {
                let want = conv_witnesses(&p, &q, want_max);
                for s in [1, sqrt_ceil(n), n] {
                    let got = lib(conv_extreme_witness(&pv, &qv, kind, lib(ConvWitnessParams::new(s, n))?))?;
                    ensure(got.positions() == want.as_slice(), || format!("vector n = {n}, s = {s}, {kind:?}"))?;
                    checks += 1;
                }
            }
        }
    }
    Ok(format!("{checks} witness arrays equal brute force for every block size"))
}

fn shift_identities() -> Check {
    let mut rng = seeded_rng(5);
    for seed in 0..100u64 {
        let n = rng.gen_range(1..=12);
        let inst = lib(random_matrices(seed, n, 1000))?;
        let want = minplus(&rows_of(&inst.a), &rows_of(&inst.b));
        for shape in [MatrixShift::RowsUpColumnsDown, MatrixShift::RowsDownColumnsUp] {
            let s = lib(shift_transform_matrices(&inst.a, &inst.b, shape))?;
            let (row_tag, col_tag) = match shape {
                MatrixShift::RowsUpColumnsDown => (MonotoneTag::NonDecreasing, MonotoneTag::NonIncreasing),
                MatrixShift::RowsDownColumnsUp => (MonotoneTag::NonIncreasing, MonotoneTag::NonDecreasing),
            };
            let rows_ok = (0..n).all(|i| row_tag.holds_for(s.a.row(i).iter().copied()));
            let cols_ok = (0..n).all(|j| col_tag.holds_for(s.b.column(j)));
            ensure(rows_ok && cols_ok, || format!("seed {seed} {shape:?}: outputs not monotone"))?;
            ensure(minplus(&rows_of(&s.a), &rows_of(&s.b)) == want, || format!("seed {seed} {shape:?}: product"))?;
            ensure(finite_rows(&lib(minplus_naive(&s.a, &s.b))?) == want, || {
                format!("seed {seed} {shape:?}: library product")
            })?;
        }

        let n = rng.gen_range(1..=64);
        let inst = lib(random_vectors(seed, n, 1000))?;
        let want = conv(inst.a.as_slice(), inst.b.as_slice());
        for (shift, tag) in [
            (VectorShift::ToNonDecreasing, MonotoneTag::NonDecreasing),
            (VectorShift::ToNonIncreasing, MonotoneTag::NonIncreasing),
        ] {
            let s = lib(shift_transform_vectors(&inst.a, &inst.b, shift))?;
            let monotone =
                tag.holds_for(s.a.as_slice().iter().copied()) && tag.holds_for(s.b.as_slice().iter().copied());
            ensure(monotone, || format!("seed {seed} {shift:?}: outputs not monotone"))?;
            let got = conv(s.a.as_slice(), s.b.as_slice());
            for k in 0..2 * n - 1 {
                let expected = want[k].unwrap() + lib(s.offset(k, shift))?;
                ensure(got[k] == Some(expected), || format!("seed {seed} {shift:?}: c'_{k}"))?;
            }
        }
    }
    Ok("100 matrix pairs and 100 vector pairs, both shift directions".into())
}

fn call_accounting() -> Check {
    for (seed, n, m_a, m_b) in [(1u64, 256usize, 2usize, 2usize), (2, 32, 3, 1), (3, 20, 4, 3), (4, 1, 1, 1)] {
        let inst = lib(monotone_matrices(seed, n, m_a, m_b, MonotoneTag::NonDecreasing))?;
        let (da, db) = matrix_sets(&inst)?;
        let got = lib(minplus_decomposed(
            &inst.a,
            &da,
            &inst.b,
            &db,
            Direction::NonDecreasing,
            MatWitnessParams::default_for(n),
        ))?;
        ensure(got.counts.witness_calls == m_a * m_b, || format!("fig1 n = {n}: {:?}", got.counts))?;

        let inst = lib(opposite_vectors(seed, n, m_a, m_b, MonotoneTag::NonIncreasing))?;
        let got = lib(conv_decomposed(
            &inst.a,
            inst.dec_a.as_ref().unwrap(),
            &inst.b,
            inst.dec_b.as_ref().unwrap(),
            ConvWitnessParams::default_for(n),
        ))?;
        ensure(got.counts.witness_calls == m_a * m_b, || format!("fig3 n = {n}: {:?}", got.counts))?;
    }
    for (seed, n, c_a, c_b) in [(1u64, 64usize, 2usize, 3usize), (2, 16, 1, 4), (3, 8, 3, 3)] {
        let inst = lib(few_values_matrices(seed, n, c_a, c_b))?;
        let (da, db) = matrix_sets(&inst)?;
        let got = lib(minplus_few_values_product(&inst.a, &da, &inst.b, &db))?;
        ensure(got.counts.bool_products == c_a * c_b, || format!("few-values n = {n}: {:?}", got.counts))?;
    }
    for (seed, n, h, ell) in [(1u64, 256usize, 3usize, 16usize), (2, 100, 2, 7), (3, 50, 4, 50), (4, 9, 1, 1)] {
        let inst = lib(few_values_vectors(seed, n, h))?;
        let got = lib(conv_few_values(&inst.a, &inst.b, inst.dec_b.as_ref().unwrap(), ell))?;
        let want = h * n.div_ceil(ell);
        ensure(got.counts.bool_convolutions == want, || format!("fig4 n = {n}, ell = {ell}: {:?}", got.counts))?;
    }
    Ok("m_a*m_b witness calls, c_a*c_b products, h*ceil(n/ell) convolutions".into())
}

struct Sweep {
    prefix: Vec<i64>,
    checked: usize,
    failure: Option<String>,
}

impl Sweep {
    fn visit(&mut self, nd: &TailSets, ni: &TailSets, depth: usize) {
        if self.failure.is_some() {
            return;
        }
        if !self.prefix.is_empty() {
            self.checked += 1;
            let wanted = (nd.min_parts(), ni.min_parts());
            let got = (
                decompose_nondecreasing(&self.prefix).map(|d| d.stats.parts_count),
                decompose_nonincreasing(&self.prefix).map(|d| d.stats.parts_count),
            );
            if got != (Ok(wanted.0), Ok(wanted.1)) {
                self.failure = Some(format!("{:?}: library {got:?}, brute force {wanted:?}", self.prefix));
                return;
            }
        }
        if depth == 0 {
            return;
        }
        for x in 1..=4 {
            let nd_next = nd.push(x, true);
            let ni_next = ni.push(x, false);
            self.prefix.push(x);
            self.visit(&nd_next, &ni_next, depth - 1);
            self.prefix.pop();
        }
    }
}

fn decomposition_exactness() -> Check {
    let mut sweep = Sweep { prefix: Vec::new(), checked: 0, failure: None };
    sweep.visit(&TailSets::root(), &TailSets::root(), 12);
    if let Some(f) = sweep.failure {
        return Err(f);
    }
    let mut rng = seeded_rng(7);
    for trial in 0..1000 {
        let range = [3, 50, 1_000_000][trial % 3];
        let s: Vec<i64> = (0..200).map(|_| rng.gen_range(-range..=range)).collect();
        let nd = lib(decompose_nondecreasing(&s))?;
        let ni = lib(decompose_nonincreasing(&s))?;
        ensure(nd.stats.parts_count == longest_strictly_decreasing(&s), || format!("trial {trial}: non-decreasing"))?;
        ensure(ni.stats.parts_count == longest_strictly_increasing(&s), || format!("trial {trial}: non-increasing"))?;
        lib(nd.decomposition.validate(&s))?;
        lib(ni.decomposition.validate(&s))?;
    }
    Ok(format!("{} exhaustive vectors and 1000 random length-200 vectors", sweep.checked))
}

fn main() {
    let results = [
        run(1, "example 1 golden (fig1)", Some(Duration::from_secs(1)), example_1),
        run(2, "example 2 golden (fig3)", Some(Duration::from_secs(1)), example_2),
        run(3, "oracle equivalence suites", Some(Duration::from_secs(60)), oracle_suites),
        run(4, "witness engine suites", None, witness_suites),
        run(5, "shift transform identities", None, shift_identities),
        run(6, "call accounting", None, call_accounting),
        run(7, "decomposition exactness", None, decomposition_exactness),
    ];
    let passed = results.iter().filter(|&&ok| ok).count();
    println!("{passed}/{} criteria passed", results.len());
    if passed != results.len() {
        std::process::exit(1);
    }
}
