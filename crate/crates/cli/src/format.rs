//! The line-oriented text format shared by instance and result files.
//!
//! ```text
//! format minplus/1
//! kind matrix
//! n 3
//! index-base 1
//!
//! [meta]
//! seed 7
//!
//! [A]
//! 1 2 3
//! ...
//! [B]
//! ...
//!
//! [decomposition A]
//! 1: nd 1 3 | ni 2
//! ...
//!
//! [provenance]
//! algo fig1
//!
//! [C]
//! ...
//! ```
//!
//! The four header fields are required. `kind` is `matrix` or `vector`;
//! vectors use sections `[a]`, `[b]`, `[decomposition a]`, `[decomposition b]`
//! and `[c]`, each decomposition or vector on a single line. `[meta]`,
//! `[stats]` and `[provenance]` hold key/value lines. `[C]`/`[c]` hold an
//! output, with `inf` for +infinity. A matrix decomposition section has one
//! `<row>:` line per row of `A` (per column of `B`), in any order.
//!
//! Parts are written as a tag (`nd`, `ni`, `u`) followed by ascending
//! indices, separated by `|`. Row, column and position numbers follow the
//! header's `index-base`; everything in memory is 0-based. Blank lines and
//! lines starting with `#` are ignored. Key/value values are kept verbatim
//! after the first run of whitespace.

use std::fmt::Write as _;

use monotone_minplus::{
    validate_decomposition, Decomposition, IntMatrix, IntVector, MinPlusMatrix, MinPlusVector, MonotoneTag,
    Subsequence, Tropical,
};

use crate::error::{CliError, CliResult};

pub const FORMAT_VERSION: &str = "minplus/1";

pub type Fields = Vec<(String, String)>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Matrix {
        a: IntMatrix,
        b: IntMatrix,
        /// One per row of `a`.
        dec_a: Option<Vec<Decomposition>>,
        /// One per column of `b`.
        dec_b: Option<Vec<Decomposition>>,
    },
    Vector {
        a: IntVector,
        b: IntVector,
        dec_a: Option<Decomposition>,
        dec_b: Option<Decomposition>,
    },
}

impl Instance {
    pub fn kind(&self) -> &'static str {
        match self {
            Instance::Matrix { .. } => "matrix",
            Instance::Vector { .. } => "vector",
        }
    }

    pub fn n(&self) -> usize {
        match self {
            Instance::Matrix { a, .. } => a.n(),
            Instance::Vector { a, .. } => a.len(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Output {
    Matrix(MinPlusMatrix),
    Vector(MinPlusVector),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub index_base: usize,
    pub instance: Instance,
    pub meta: Fields,
    pub stats: Fields,
    pub provenance: Fields,
    pub output: Option<Output>,
}

impl Document {
    /// A document with the conventional index base for its kind.
    pub fn new(instance: Instance) -> Self {
        let index_base = match instance {
            Instance::Matrix { .. } => 1,
            Instance::Vector { .. } => 0,
        };
        Document { index_base, instance, meta: Vec::new(), stats: Vec::new(), provenance: Vec::new(), output: None }
    }

    pub fn meta_value(&self, key: &str) -> Option<&str> {
        self.meta.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }
}

fn tag_token(tag: MonotoneTag) -> &'static str {
    match tag {
        MonotoneTag::NonDecreasing => "nd",
        MonotoneTag::NonIncreasing => "ni",
        MonotoneTag::Uniform => "u",
    }
}

fn write_fields(out: &mut String, name: &str, fields: &Fields) {
    if fields.is_empty() {
        return;
    }
    let _ = writeln!(out, "\n[{name}]");
    for (k, v) in fields {
        if v.is_empty() {
            let _ = writeln!(out, "{k}");
        } else {
            let _ = writeln!(out, "{k} {v}");
        }
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn parts_line(d: &Decomposition, base: usize) -> String {
    d.parts
        .iter()
        .map(|p| {
            let mut s = tag_token(p.tag).to_string();
            for &i in &p.indices {
                let _ = write!(s, " {}", i + base);
            }
            s
        })
        .collect::<Vec<_>>()
        .join(" | ")
}

pub fn serialize(doc: &Document) -> String {
    let base = doc.index_base;
    let mut out = String::new();
    let _ = writeln!(out, "format {FORMAT_VERSION}");
    let _ = writeln!(out, "kind {}", doc.instance.kind());
    let _ = writeln!(out, "n {}", doc.instance.n());
    let _ = writeln!(out, "index-base {base}");
    write_fields(&mut out, "meta", &doc.meta);
    match &doc.instance {
        Instance::Matrix { a, b, dec_a, dec_b } => {
            for (name, m) in [("A", a), ("B", b)] {
                let _ = writeln!(out, "\n[{name}]");
                for row in m.rows() {
                    let _ = writeln!(out, "{}", join(row));
                }
            }
            for (name, dec) in [("A", dec_a), ("B", dec_b)] {
                if let Some(lines) = dec {
                    let _ = writeln!(out, "\n[decomposition {name}]");
                    for (idx, d) in lines.iter().enumerate() {
                        let _ = writeln!(out, "{}: {}", idx + base, parts_line(d, base));
                    }
                }
            }
        }
        Instance::Vector { a, b, dec_a, dec_b } => {
            for (name, v) in [("a", a), ("b", b)] {
                let _ = writeln!(out, "\n[{name}]\n{}", join(v.as_slice()));
            }
            for (name, dec) in [("a", dec_a), ("b", dec_b)] {
                if let Some(d) = dec {
                    let _ = writeln!(out, "\n[decomposition {name}]\n{}", parts_line(d, base));
                }
            }
        }
    }
    write_fields(&mut out, "stats", &doc.stats);
    write_fields(&mut out, "provenance", &doc.provenance);
    match &doc.output {
        Some(Output::Matrix(c)) => {
            let _ = writeln!(out, "\n[C]");
            for row in c.rows() {
                let _ = writeln!(out, "{}", join(row));
            }
        }
        Some(Output::Vector(c)) => {
            let _ = writeln!(out, "\n[c]\n{}", join(c.values()));
        }
        None => {}
    }
    out
}

/// The value section alone, as [`serialize`] writes it.
pub fn serialize_output(output: &Output) -> String {
    match output {
        Output::Matrix(c) => c.rows().map(|r| join(r) + "\n").collect(),
        Output::Vector(c) => join(c.values()) + "\n",
    }
}

struct Section {
    name: String,
    line: usize,
    body: Vec<(usize, String)>,
}

fn split_key(line: &str) -> (&str, &str) {
    match line.split_once(char::is_whitespace) {
        Some((k, v)) => (k, v.trim_start()),
        None => (line, ""),
    }
}

fn int_token(tok: &str, line: usize, what: &str) -> CliResult<i64> {
    tok.parse().map_err(|_| CliError::parse(line, format!("invalid integer `{tok}` in {what}")))
}

fn index_token(tok: &str, line: usize, base: usize, what: &str) -> CliResult<usize> {
    let v: usize = tok.parse().map_err(|_| CliError::parse(line, format!("invalid index `{tok}` in {what}")))?;
    v.checked_sub(base).ok_or_else(|| CliError::parse(line, format!("index {v} below index-base {base} in {what}")))
}

fn tropical_token(tok: &str, line: usize, what: &str) -> CliResult<Tropical> {
    if tok == "inf" {
        Ok(Tropical::Infinity)
    } else {
        int_token(tok, line, what).map(Tropical::Finite)
    }
}

fn row_of<T>(
    line: usize,
    text: &str,
    len: usize,
    what: &str,
    parse: impl Fn(&str, usize, &str) -> CliResult<T>,
) -> CliResult<Vec<T>> {
    let row = text.split_whitespace().map(|t| parse(t, line, what)).collect::<CliResult<Vec<T>>>()?;
    if row.len() != len {
        return Err(CliError::parse(line, format!("{what} expects {len} entries, found {}", row.len())));
    }
    Ok(row)
}

fn grid<T>(
    s: &Section,
    rows: usize,
    cols: usize,
    parse: impl Fn(&str, usize, &str) -> CliResult<T> + Copy,
) -> CliResult<Vec<T>> {
    let what = format!("[{}]", s.name);
    if s.body.len() != rows {
        return Err(CliError::parse(s.line, format!("{what} expects {rows} lines, found {}", s.body.len())));
    }
    let mut data = Vec::with_capacity(rows * cols);
    for (line, text) in &s.body {
        data.extend(row_of(*line, text, cols, &what, parse)?);
    }
    Ok(data)
}

fn parse_parts(text: &str, line: usize, n: usize, base: usize, what: &str) -> CliResult<Decomposition> {
    let mut parts = Vec::new();
    for chunk in text.split('|') {
        let mut tokens = chunk.split_whitespace();
        let tag = match tokens.next() {
            Some("nd") => MonotoneTag::NonDecreasing,
            Some("ni") => MonotoneTag::NonIncreasing,
            Some("u") => MonotoneTag::Uniform,
            Some(t) => return Err(CliError::parse(line, format!("unknown part tag `{t}` in {what}"))),
            None => return Err(CliError::parse(line, format!("empty part in {what}"))),
        };
        let indices = tokens.map(|t| index_token(t, line, base, what)).collect::<CliResult<Vec<_>>>()?;
        parts.push(Subsequence::new(indices, tag));
    }
    Ok(Decomposition::new(n, parts))
}

fn check(d: &Decomposition, host: &[i64], line: usize, what: &str) -> CliResult<()> {
    validate_decomposition(d, host).map_err(|e| CliError::Validation(format!("line {line}: {what}: {e}")))
}

fn fields(s: &Section) -> Fields {
    s.body.iter().map(|(_, t)| split_key(t)).map(|(k, v)| (k.to_string(), v.to_string())).collect()
}

pub fn parse(text: &str) -> CliResult<Document> {
    let mut header: Vec<(usize, String, String)> = Vec::new();
    let mut sections: Vec<Section> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let t = raw.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        if let Some(name) = t.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            let name = name.trim().to_string();
            if sections.iter().any(|s| s.name == name) {
                return Err(CliError::parse(line, format!("duplicate section [{name}]")));
            }
            sections.push(Section { name, line, body: Vec::new() });
        } else if let Some(s) = sections.last_mut() {
            s.body.push((line, t.to_string()));
        } else {
            let (k, v) = split_key(t);
            header.push((line, k.to_string(), v.to_string()));
        }
    }

    let head = |key: &str| -> CliResult<(usize, &str)> {
        header
            .iter()
            .find(|(_, k, _)| k == key)
            .map(|(l, _, v)| (*l, v.as_str()))
            .ok_or_else(|| CliError::parse(1, format!("missing header field `{key}`")))
    };
    if let Some((line, k, _)) =
        header.iter().find(|(_, k, _)| !matches!(k.as_str(), "format" | "kind" | "n" | "index-base"))
    {
        return Err(CliError::parse(*line, format!("unknown header field `{k}`")));
    }
    let (line, version) = head("format")?;
    if version != FORMAT_VERSION {
        return Err(CliError::parse(line, format!("unsupported format `{version}`, expected `{FORMAT_VERSION}`")));
    }
    let (kind_line, kind) = head("kind")?;
    let (line, n) = head("n")?;
    let n: usize = n.parse().map_err(|_| CliError::parse(line, format!("invalid n `{n}`")))?;
    if n == 0 {
        return Err(CliError::parse(line, "n must be positive"));
    }
    let (line, base) = head("index-base")?;
    let base: usize = match base {
        "0" => 0,
        "1" => 1,
        _ => return Err(CliError::parse(line, format!("index-base must be 0 or 1, found `{base}`"))),
    };

    let allowed: &[&str] = match kind {
        "matrix" => &["meta", "stats", "provenance", "A", "B", "decomposition A", "decomposition B", "C"],
        "vector" => &["meta", "stats", "provenance", "a", "b", "decomposition a", "decomposition b", "c"],
        _ => return Err(CliError::parse(kind_line, format!("kind must be matrix or vector, found `{kind}`"))),
    };
    if let Some(s) = sections.iter().find(|s| !allowed.contains(&s.name.as_str())) {
        return Err(CliError::parse(s.line, format!("unexpected section [{}] in a {kind} file", s.name)));
    }
    let section = |name: &str| sections.iter().find(|s| s.name == name);
    let required = |name: &str| section(name).ok_or_else(|| CliError::parse(1, format!("missing section [{name}]")));

    let (instance, output) = if kind == "matrix" {
        let load = |name: &str| -> CliResult<IntMatrix> {
            let s = required(name)?;
            let data = grid(s, n, n, int_token)?;
            IntMatrix::new(n, data).map_err(|e| CliError::Validation(format!("line {}: [{name}]: {e}", s.line)))
        };
        let (a, b) = (load("A")?, load("B")?);
        let decs = |name: &str,
                    host: &dyn Fn(usize) -> Vec<i64>,
                    axis: &str|
         -> CliResult<Option<Vec<Decomposition>>> {
            let Some(s) = section(&format!("decomposition {name}")) else { return Ok(None) };
            let what = format!("[{}]", s.name);
            let mut lines: Vec<Option<Decomposition>> = vec![None; n];
            for (line, text) in &s.body {
                let (label, rest) = text
                    .split_once(':')
                    .ok_or_else(|| CliError::parse(*line, format!("{what} lines start with `<{axis}>:`")))?;
                let idx = index_token(label.trim(), *line, base, &what)?;
                if idx >= n {
                    return Err(CliError::parse(*line, format!("{axis} {} out of range in {what}", idx + base)));
                }
                if lines[idx].is_some() {
                    return Err(CliError::parse(*line, format!("{axis} {} listed twice in {what}", idx + base)));
                }
                let d = parse_parts(rest, *line, n, base, &what)?;
                check(&d, &host(idx), *line, &format!("{what} {axis} {}", idx + base))?;
                lines[idx] = Some(d);
            }
            lines
                .into_iter()
                .enumerate()
                .map(|(idx, d)| d.ok_or_else(|| CliError::parse(s.line, format!("{what} lacks {axis} {}", idx + base))))
                .collect::<CliResult<Vec<_>>>()
                .map(Some)
        };
        let dec_a = decs("A", &|i| a.row(i).to_vec(), "row")?;
        let dec_b = decs("B", &|j| b.column(j), "column")?;
        let output = match section("C") {
            Some(s) => Some(Output::Matrix(MinPlusMatrix::from_values(n, grid(s, n, n, tropical_token)?)?)),
            None => None,
        };
        (Instance::Matrix { a, b, dec_a, dec_b }, output)
    } else {
        let load = |name: &str| -> CliResult<IntVector> {
            let s = required(name)?;
            let data = grid(s, 1, n, int_token)?;
            IntVector::new(data).map_err(|e| CliError::Validation(format!("line {}: [{name}]: {e}", s.line)))
        };
        let (a, b) = (load("a")?, load("b")?);
        let dec = |name: &str, host: &IntVector| -> CliResult<Option<Decomposition>> {
            let Some(s) = section(&format!("decomposition {name}")) else { return Ok(None) };
            let what = format!("[{}]", s.name);
            let [(line, text)] = s.body.as_slice() else {
                return Err(CliError::parse(s.line, format!("{what} expects exactly one line")));
            };
            let d = parse_parts(text, *line, n, base, &what)?;
            check(&d, host.as_slice(), *line, &what)?;
            Ok(Some(d))
        };
        let dec_a = dec("a", &a)?;
        let dec_b = dec("b", &b)?;
        let output = match section("c") {
            Some(s) => Some(Output::Vector(MinPlusVector::from_values(grid(s, 1, 2 * n - 1, tropical_token)?))),
            None => None,
        };
        (Instance::Vector { a, b, dec_a, dec_b }, output)
    };

    let kv = |name: &str| section(name).map(fields).unwrap_or_default();
    Ok(Document {
        index_base: base,
        instance,
        meta: kv("meta"),
        stats: kv("stats"),
        provenance: kv("provenance"),
        output,
    })
}
