use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use monotone_minplus::generate::{
    few_values_matrices, few_values_vectors, mixed_uniform_matrices, monotone_matrices, opposite_vectors,
    random_matrices, random_vectors, MatrixInstance, VectorInstance, DEFAULT_RANGE,
};
use monotone_minplus::{
    conv_decomposed, conv_few_values, conv_few_values_in_a, conv_naive, decompose, decompose_uniform, default_ell,
    minplus_decomposed, minplus_few_values_product, minplus_mixed_uniform, minplus_naive, minplus_uniform_mixed, Axis,
    CallCounts, ConvWitnessParams, Decomposition, Direction, Error as CoreError, IntMatrix, IntVector,
    MatWitnessParams, MatrixDecompositionSet, Mode, MonotoneTag, PartsDirection, Product,
};
use serde::Serialize;

use crate::error::{CliError, CliResult};
use crate::format::{parse, serialize, serialize_output, Document, Fields, Instance, Output};

#[derive(Debug, Parser)]
#[command(name = "minplus", version, about = "(min,+) products and convolutions of monotone-decomposable inputs")]
pub struct Cli {
    /// Worker threads for the parallel loops (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Seed for generated instances.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Output file, written atomically (default: stdout).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Attach monotone decompositions to an instance file.
    Decompose(DecomposeArgs),
    /// Run one algorithm and write the instance with its output.
    Compute(ComputeArgs),
    /// Compare an algorithm (or a result file) against the naive oracle.
    Verify(VerifyArgs),
    /// Time algorithms on a generated instance and report call counts.
    Bench(BenchArgs),
    /// Write a generated instance.
    Gen(GenArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Nondec,
    Noninc,
    Greedy,
    Uniform,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Nondec => Mode::NonDecreasing,
            ModeArg::Noninc => Mode::NonIncreasing,
            ModeArg::Greedy => Mode::Greedy,
            ModeArg::Uniform => Mode::Uniform,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    A,
    B,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Naive,
    Fig1,
    Fig2,
    Fig3,
    Fig4,
    Fewvalues,
}

impl Algo {
    pub fn name(self) -> &'static str {
        match self {
            Algo::Naive => "naive",
            Algo::Fig1 => "fig1",
            Algo::Fig2 => "fig2",
            Algo::Fig3 => "fig3",
            Algo::Fig4 => "fig4",
            Algo::Fewvalues => "fewvalues",
        }
    }

    fn default_generator(self) -> Generator {
        match self {
            Algo::Naive => Generator::RandomMatrix,
            Algo::Fig1 => Generator::Monotone,
            Algo::Fig2 => Generator::Mixed,
            Algo::Fewvalues => Generator::Fewvalues,
            Algo::Fig3 => Generator::Opposite,
            Algo::Fig4 => Generator::FewvaluesVector,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DirectionArg {
    Nondec,
    Noninc,
}

impl DirectionArg {
    fn direction(self) -> Direction {
        match self {
            DirectionArg::Nondec => Direction::NonDecreasing,
            DirectionArg::Noninc => Direction::NonIncreasing,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Generator {
    /// Matrices whose rows / columns have m_a / m_b parts sharing --direction.
    Monotone,
    /// Rows with m_a mixed parts, columns with at most m_b values.
    Mixed,
    /// Rows with at most m_a values, columns with at most m_b values.
    Fewvalues,
    RandomMatrix,
    /// Vectors with m_a / m_b parts of opposite directions (a follows --direction).
    Opposite,
    /// Arbitrary a, b with at most h values.
    FewvaluesVector,
    RandomVector,
}

impl Generator {
    fn name(self) -> &'static str {
        match self {
            Generator::Monotone => "monotone",
            Generator::Mixed => "mixed",
            Generator::Fewvalues => "fewvalues",
            Generator::RandomMatrix => "random-matrix",
            Generator::Opposite => "opposite",
            Generator::FewvaluesVector => "fewvalues-vector",
            Generator::RandomVector => "random-vector",
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct AlgoParams {
    /// Part direction for fig1 (default: inferred from the decompositions).
    #[arg(long, value_enum)]
    pub direction: Option<DirectionArg>,
    /// Block size of the extreme-witness routines (default: ceil(sqrt n)).
    #[arg(long)]
    pub block_size: Option<usize>,
    /// Group size for fig4 (default: ceil(sqrt n)).
    #[arg(long)]
    pub ell: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct GenParams {
    #[arg(long, value_enum)]
    pub generator: Option<Generator>,
    #[arg(long, default_value_t = 32)]
    pub n: usize,
    /// Parts (or value budget) per line of A / vector a.
    #[arg(long, default_value_t = 2)]
    pub m_a: usize,
    /// Parts (or value budget) per line of B / vector b.
    #[arg(long, default_value_t = 2)]
    pub m_b: usize,
    /// Value budget of b for the fewvalues-vector generator.
    #[arg(long, default_value_t = 3)]
    pub h: usize,
}

#[derive(Debug, Args)]
pub struct DecomposeArgs {
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = ModeArg::Nondec)]
    pub mode: ModeArg,
    /// Which side to decompose: rows of A / vector a, columns of B / vector b, or both.
    #[arg(long, value_enum, default_value_t = Target::Both)]
    pub target: Target,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    pub input: PathBuf,
    #[arg(long, value_enum)]
    pub algo: Algo,
    #[command(flatten)]
    pub params: AlgoParams,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Instance to run --algo on. Omit to run --trials generated instances.
    pub input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Algo::Naive)]
    pub algo: Algo,
    /// Result file whose output section is checked against the oracle.
    #[arg(long, conflicts_with = "input")]
    pub result: Option<PathBuf>,
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    #[command(flatten)]
    pub params: AlgoParams,
    #[command(flatten)]
    pub gen: GenParams,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Comma-separated algorithms.
    #[arg(long, value_enum, value_delimiter = ',', default_value = "naive")]
    pub algo: Vec<Algo>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    pub format: ReportFormat,
    #[command(flatten)]
    pub params: AlgoParams,
    #[command(flatten)]
    pub gen: GenParams,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, value_enum, default_value_t = DirectionArg::Nondec)]
    pub direction: DirectionArg,
    #[command(flatten)]
    pub gen: GenParams,
}

pub fn run(cli: Cli) -> CliResult<()> {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| CliError::Validation(format!("--threads: {e}")))?;
    }
    let out = cli.out.as_deref();
    match cli.command {
        Command::Decompose(args) => cmd_decompose(&args, out),
        Command::Compute(args) => cmd_compute(&args, out),
        Command::Verify(args) => cmd_verify(&args, cli.seed, out),
        Command::Bench(args) => cmd_bench(&args, cli.seed, out),
        Command::Gen(args) => {
            let doc = generate(&args.gen, args.gen.generator.unwrap_or(Generator::Monotone), args.direction, cli.seed)?;
            emit(&serialize(&doc), out)
        }
    }
}

fn read_doc(path: &Path) -> CliResult<Document> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
    parse(&text)
}

/// Writes to `out` through a temporary file in the same directory, or to stdout.
pub fn emit(text: &str, out: Option<&Path>) -> CliResult<()> {
    fn io(path: &Path) -> impl Fn(std::io::Error) -> CliError + '_ {
        move |source| CliError::Io { path: path.to_path_buf(), source }
    }
    let Some(path) = out else {
        return std::io::stdout().write_all(text.as_bytes()).map_err(io(Path::new("<stdout>")));
    };
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io(dir))?;
    tmp.write_all(text.as_bytes()).map_err(io(path))?;
    tmp.persist(path).map_err(|e| io(path)(e.error))?;
    Ok(())
}

fn direction_name(d: PartsDirection) -> String {
    match d {
        PartsDirection::All(tag) => tag.to_string(),
        PartsDirection::Mixed => "mixed".into(),
    }
}

fn decompose_lines(
    lines: impl Iterator<Item = Vec<i64>>,
    mode: Mode,
    label: &str,
    stats: &mut Fields,
) -> CliResult<Vec<Decomposition>> {
    let mut decs = Vec::new();
    let (mut max_parts, mut total, mut bound) = (0, 0, None::<usize>);
    for line in lines {
        let d = decompose(&line, mode)?;
        max_parts = max_parts.max(d.stats.parts_count);
        total += d.stats.parts_count;
        if let Some(b) = d.stats.lower_bound_certificate {
            bound = Some(bound.unwrap_or(0).max(b));
        }
        decs.push(d.decomposition);
    }
    stats.push((format!("{label}.mode"), mode.to_string()));
    stats.push((format!("{label}.max-parts"), max_parts.to_string()));
    stats.push((format!("{label}.total-parts"), total.to_string()));
    if let Some(b) = bound {
        stats.push((format!("{label}.lower-bound"), b.to_string()));
    }
    eprintln!("{label}: at most {max_parts} parts per line ({mode})");
    Ok(decs)
}

fn cmd_decompose(args: &DecomposeArgs, out: Option<&Path>) -> CliResult<()> {
    let mut doc = read_doc(&args.input)?;
    let mode = Mode::from(args.mode);
    let (do_a, do_b) = (args.target != Target::B, args.target != Target::A);
    let mut stats = Fields::new();
    match &mut doc.instance {
        Instance::Matrix { a, b, dec_a, dec_b } => {
            if do_a {
                *dec_a = Some(decompose_lines(a.rows().map(<[i64]>::to_vec), mode, "A", &mut stats)?);
            }
            if do_b {
                *dec_b = Some(decompose_lines((0..b.n()).map(|j| b.column(j)), mode, "B", &mut stats)?);
            }
        }
        Instance::Vector { a, b, dec_a, dec_b } => {
            for (wanted, label, v, slot) in [(do_a, "a", &*a, dec_a), (do_b, "b", &*b, dec_b)] {
                if !wanted {
                    continue;
                }
                let d = decompose(v.as_slice(), mode)?;
                stats.push((format!("{label}.mode"), mode.to_string()));
                stats.push((format!("{label}.parts"), d.stats.parts_count.to_string()));
                stats.push((format!("{label}.direction"), direction_name(d.stats.direction)));
                if let Some(bound) = d.stats.lower_bound_certificate {
                    stats.push((format!("{label}.lower-bound"), bound.to_string()));
                }
                eprintln!("{label}: {} parts ({mode})", d.stats.parts_count);
                *slot = Some(d.decomposition);
            }
        }
    }
    doc.stats = stats;
    emit(&serialize(&doc), out)
}

pub struct Computed {
    pub output: Output,
    pub counts: CallCounts,
    /// Resolved parameters, for the provenance block.
    pub params: Fields,
}

fn need<'a, T>(dec: &'a Option<T>, algo: Algo, section: &str) -> CliResult<&'a T> {
    dec.as_ref()
        .ok_or_else(|| CliError::Validation(format!("{} needs a [decomposition {section}] section", algo.name())))
}

fn wrong_kind(algo: Algo, kind: &str) -> CliError {
    CliError::Validation(format!("{} does not apply to {kind} instances", algo.name()))
}

fn inferred_direction(sets: [&MatrixDecompositionSet; 2]) -> Direction {
    let rising = sets.iter().all(|s| {
        s.lines()
            .iter()
            .all(|d| d.parts.iter().all(|p| p.is_empty() || p.tag.is_admissible_as(MonotoneTag::NonDecreasing)))
    });
    if rising {
        Direction::NonDecreasing
    } else {
        Direction::NonIncreasing
    }
}

fn uniform_sets(a: &IntMatrix, b: &IntMatrix) -> CliResult<(MatrixDecompositionSet, MatrixDecompositionSet)> {
    Ok((
        MatrixDecompositionSet::decompose(a, Axis::Rows, Mode::Uniform)?,
        MatrixDecompositionSet::decompose(b, Axis::Columns, Mode::Uniform)?,
    ))
}

pub fn compute(instance: &Instance, algo: Algo, p: &AlgoParams) -> CliResult<Computed> {
    let n = instance.n();
    let mut params = Fields::new();
    let mat_params = |params: &mut Fields| -> CliResult<MatWitnessParams> {
        let w = match p.block_size {
            Some(s) => MatWitnessParams::new(s, n)?,
            None => MatWitnessParams::default_for(n),
        };
        params.push(("block-size".into(), w.block_size().to_string()));
        Ok(w)
    };
    let matrix = |prod: Product<_>| (Output::Matrix(prod.values), prod.counts);
    let vector = |prod: Product<_>| (Output::Vector(prod.values), prod.counts);

    let (output, counts) = match instance {
        Instance::Matrix { a, b, dec_a, dec_b } => {
            let sets = || -> CliResult<(MatrixDecompositionSet, MatrixDecompositionSet)> {
                let da = MatrixDecompositionSet::rows(a, need(dec_a, algo, "A")?.clone())?;
                let db = MatrixDecompositionSet::columns(b, need(dec_b, algo, "B")?.clone())?;
                Ok((da, db))
            };
            match algo {
                Algo::Naive => (Output::Matrix(minplus_naive(a, b)?), CallCounts::default()),
                Algo::Fig1 => {
                    let (da, db) = sets()?;
                    let direction = p.direction.map(DirectionArg::direction).unwrap_or(inferred_direction([&da, &db]));
                    params.push(("direction".into(), direction.tag().to_string()));
                    let w = mat_params(&mut params)?;
                    matrix(minplus_decomposed(a, &da, b, &db, direction, w)?)
                }
                Algo::Fig2 => {
                    let (da, db) = sets()?;
                    let w = mat_params(&mut params)?;
                    match minplus_mixed_uniform(a, &da, b, &db, w) {
                        Err(CoreError::UniformViolation { .. }) => {
                            params.push(("uniform-side".into(), "A".into()));
                            matrix(minplus_uniform_mixed(a, &da, b, &db, w)?)
                        }
                        other => {
                            params.push(("uniform-side".into(), "B".into()));
                            matrix(other?)
                        }
                    }
                }
                Algo::Fewvalues => {
                    let (da, db) = match (dec_a, dec_b) {
                        (Some(_), Some(_)) => sets()?,
                        _ => uniform_sets(a, b)?,
                    };
                    params.push(("c_a".into(), da.parts_per_line().to_string()));
                    params.push(("c_b".into(), db.parts_per_line().to_string()));
                    matrix(minplus_few_values_product(a, &da, b, &db)?)
                }
                Algo::Fig3 | Algo::Fig4 => return Err(wrong_kind(algo, "matrix")),
            }
        }
        Instance::Vector { a, b, dec_a, dec_b } => match algo {
            Algo::Naive => (Output::Vector(conv_naive(a, b)?), CallCounts::default()),
            Algo::Fig3 => {
                let w = match p.block_size {
                    Some(s) => ConvWitnessParams::new(s, n)?,
                    None => ConvWitnessParams::default_for(n),
                };
                params.push(("block-size".into(), w.block_size().to_string()));
                vector(conv_decomposed(a, need(dec_a, algo, "a")?, b, need(dec_b, algo, "b")?, w)?)
            }
            Algo::Fig4 => {
                let ell = p.ell.unwrap_or_else(|| default_ell(n));
                params.push(("ell".into(), ell.to_string()));
                let product = match (dec_a, dec_b) {
                    (_, Some(db)) => conv_few_values(a, b, db, ell)?,
                    (Some(da), None) => conv_few_values_in_a(a, da, b, ell)?,
                    (None, None) => conv_few_values(a, b, &uniform_of(b)?, ell)?,
                };
                vector(product)
            }
            Algo::Fig1 | Algo::Fig2 | Algo::Fewvalues => return Err(wrong_kind(algo, "vector")),
        },
    };
    Ok(Computed { output, counts, params })
}

fn uniform_of(v: &IntVector) -> CliResult<Decomposition> {
    Ok(decompose_uniform(v.as_slice())?.decomposition)
}

fn provenance(algo: Algo, c: &Computed) -> Fields {
    let mut f = vec![("algo".to_string(), algo.name().to_string())];
    f.extend(c.params.iter().cloned());
    f.push(("witness-calls".into(), c.counts.witness_calls.to_string()));
    f.push(("bool-products".into(), c.counts.bool_products.to_string()));
    f.push(("bool-convolutions".into(), c.counts.bool_convolutions.to_string()));
    f
}

fn cmd_compute(args: &ComputeArgs, out: Option<&Path>) -> CliResult<()> {
    let mut doc = read_doc(&args.input)?;
    let computed = compute(&doc.instance, args.algo, &args.params)?;
    doc.provenance = provenance(args.algo, &computed);
    doc.output = Some(computed.output);
    emit(&serialize(&doc), out)
}

/// First coordinate where `got` and `want` disagree, in the document's index base.
pub fn first_mismatch(got: &Output, want: &Output, base: usize) -> Option<String> {
    match (got, want) {
        (Output::Matrix(g), Output::Matrix(w)) if g.n() == w.n() => g.first_difference(w).map(|(i, j)| {
            format!("mismatch at ({}, {}): got {}, naive gives {}", i + base, j + base, g.get(i, j), w.get(i, j))
        }),
        (Output::Vector(g), Output::Vector(w)) if g.len() == w.len() => {
            g.first_difference(w).map(|k| format!("mismatch at k = {k}: got {}, naive gives {}", g.get(k), w.get(k)))
        }
        _ => Some("output shape does not match the instance".into()),
    }
}

fn oracle(instance: &Instance) -> CliResult<Output> {
    Ok(match instance {
        Instance::Matrix { a, b, .. } => Output::Matrix(minplus_naive(a, b)?),
        Instance::Vector { a, b, .. } => Output::Vector(conv_naive(a, b)?),
    })
}

fn cmd_verify(args: &VerifyArgs, seed: u64, out: Option<&Path>) -> CliResult<()> {
    let report = if let Some(path) = &args.result {
        let doc = read_doc(path)?;
        let got =
            doc.output.as_ref().ok_or_else(|| CliError::Validation("result file has no output section".into()))?;
        if let Some(m) = first_mismatch(got, &oracle(&doc.instance)?, doc.index_base) {
            return Err(CliError::Mismatch(m));
        }
        "all equal\n".to_string()
    } else if let Some(path) = &args.input {
        let doc = read_doc(path)?;
        let got = compute(&doc.instance, args.algo, &args.params)?.output;
        if let Some(m) = first_mismatch(&got, &oracle(&doc.instance)?, doc.index_base) {
            return Err(CliError::Mismatch(format!("{}: {m}", args.algo.name())));
        }
        "all equal\n".to_string()
    } else {
        let generator = args.gen.generator.unwrap_or(args.algo.default_generator());
        let direction = args.params.direction.unwrap_or(DirectionArg::Nondec);
        for t in 0..args.trials as u64 {
            let doc = generate(&args.gen, generator, direction, seed + t)?;
            let got = compute(&doc.instance, args.algo, &args.params)?.output;
            if let Some(m) = first_mismatch(&got, &oracle(&doc.instance)?, doc.index_base) {
                return Err(CliError::Mismatch(format!("{} seed {}: {m}", args.algo.name(), seed + t)));
            }
        }
        format!("all equal ({} trials, {}, n = {})\n", args.trials, generator.name(), args.gen.n)
    };
    emit(&report, out)
}

pub fn generate(g: &GenParams, generator: Generator, direction: DirectionArg, seed: u64) -> CliResult<Document> {
    let (n, m_a, m_b) = (g.n, g.m_a, g.m_b);
    if n == 0 {
        return Err(CliError::Validation("--n must be positive".into()));
    }
    let tag = direction.direction().tag();
    let matrix = |inst: MatrixInstance| Instance::Matrix { a: inst.a, b: inst.b, dec_a: inst.dec_a, dec_b: inst.dec_b };
    let vector = |inst: VectorInstance| Instance::Vector { a: inst.a, b: inst.b, dec_a: inst.dec_a, dec_b: inst.dec_b };
    let mut meta: Fields = vec![("generator".into(), generator.name().into()), ("seed".into(), seed.to_string())];
    let instance = match generator {
        Generator::Monotone => {
            meta.push(("direction".into(), tag.to_string()));
            meta.extend([("m_a".into(), m_a.to_string()), ("m_b".into(), m_b.to_string())]);
            matrix(monotone_matrices(seed, n, m_a, m_b, tag)?)
        }
        Generator::Mixed => {
            meta.extend([("m_a".into(), m_a.to_string()), ("m_b".into(), m_b.to_string())]);
            matrix(mixed_uniform_matrices(seed, n, m_a, m_b)?)
        }
        Generator::Fewvalues => {
            meta.extend([("m_a".into(), m_a.to_string()), ("m_b".into(), m_b.to_string())]);
            matrix(few_values_matrices(seed, n, m_a, m_b)?)
        }
        Generator::RandomMatrix => matrix(random_matrices(seed, n, DEFAULT_RANGE)?),
        Generator::Opposite => {
            meta.push(("direction".into(), tag.to_string()));
            meta.extend([("m_a".into(), m_a.to_string()), ("m_b".into(), m_b.to_string())]);
            vector(opposite_vectors(seed, n, m_a, m_b, tag)?)
        }
        Generator::FewvaluesVector => {
            meta.push(("h".into(), g.h.to_string()));
            vector(few_values_vectors(seed, n, g.h)?)
        }
        Generator::RandomVector => vector(random_vectors(seed, n, DEFAULT_RANGE)?),
    };
    let mut doc = Document::new(instance);
    doc.meta = meta;
    Ok(doc)
}

#[derive(Debug, Serialize)]
pub struct BenchRow {
    pub algo: &'static str,
    pub wall_ms: f64,
    pub witness_calls: usize,
    pub bool_products: usize,
    pub bool_convolutions: usize,
    pub matches_naive: bool,
}

#[derive(Debug, Serialize)]
pub struct BenchReport {
    pub generator: &'static str,
    pub n: usize,
    pub seed: u64,
    pub meta: Vec<(String, String)>,
    pub rows: Vec<BenchRow>,
}

pub fn bench(args: &BenchArgs, seed: u64) -> CliResult<BenchReport> {
    let generator = args.gen.generator.unwrap_or_else(|| {
        args.algo.iter().find(|&&a| a != Algo::Naive).map_or(Generator::RandomMatrix, |a| a.default_generator())
    });
    let direction = args.params.direction.unwrap_or(DirectionArg::Nondec);
    let doc = generate(&args.gen, generator, direction, seed)?;
    let reference = oracle(&doc.instance)?;
    let mut rows = Vec::new();
    for &algo in &args.algo {
        let start = Instant::now();
        let c = compute(&doc.instance, algo, &args.params)?;
        let wall_ms = start.elapsed().as_secs_f64() * 1e3;
        rows.push(BenchRow {
            algo: algo.name(),
            wall_ms,
            witness_calls: c.counts.witness_calls,
            bool_products: c.counts.bool_products,
            bool_convolutions: c.counts.bool_convolutions,
            matches_naive: serialize_output(&c.output) == serialize_output(&reference),
        });
    }
    Ok(BenchReport { generator: generator.name(), n: args.gen.n, seed, meta: doc.meta, rows })
}

pub fn render_table(r: &BenchReport) -> String {
    let meta: Vec<String> = r.meta.iter().map(|(k, v)| format!("{k}={v}")).collect();
    let mut s = format!("# n={} {}\n", r.n, meta.join(" "));
    s += &format!(
        "{:<10} {:>12} {:>14} {:>14} {:>18} {:>8}\n",
        "algo", "wall_ms", "witness_calls", "bool_products", "bool_convolutions", "matches"
    );
    for row in &r.rows {
        s += &format!(
            "{:<10} {:>12.3} {:>14} {:>14} {:>18} {:>8}\n",
            row.algo, row.wall_ms, row.witness_calls, row.bool_products, row.bool_convolutions, row.matches_naive
        );
    }
    s
}

fn cmd_bench(args: &BenchArgs, seed: u64, out: Option<&Path>) -> CliResult<()> {
    let report = bench(args, seed)?;
    let text = match args.format {
        ReportFormat::Text => render_table(&report),
        ReportFormat::Json => {
            serde_json::to_string_pretty(&report).map_err(|e| CliError::Validation(e.to_string()))? + "\n"
        }
    };
    emit(&text, out)
}
