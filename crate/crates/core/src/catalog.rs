//! Expected-value manifests and the harness that checks them.
//!
//! One entry per line, `|`-separated:
//!
//! ```text
//! name | source | n | valency | diameter | dimension | table | budget-seconds
//! ```
//!
//! `source` is a constructor expression (see [`crate::expr`]), `g6:<token>`,
//! `file:<relative path>#sha256=<hex>`, or `-` for entries without a graph.
//! `dimension` is an integer, an integer with a trailing `?` (upper bound
//! only), or `unknown` (entry is listed but skipped). Blank lines and lines
//! starting with `#` are ignored. graph6 tokens may themselves contain `|`,
//! so the source is everything between the first field and the last six.

use std::collections::HashSet;
use std::fmt;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::expr::{Expr, ExprError};
use crate::graph::{distance_matrix, parse_graph6, Graph};
use crate::metricdim::{metric_dimension, DimError, SearchOptions};
use crate::parallel;

#[derive(Debug, Error)]
pub enum ManifestError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("line {line}: duplicate entry `{name}`")]
    Duplicate { line: usize, name: String },
    #[error("line {line}: unknown constructor `{name}`")]
    UnknownConstructor { line: usize, name: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Expr(Expr),
    Graph6(String),
    File { path: PathBuf, sha256: String },
    None,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expected {
    Exact(usize),
    AtMost(usize),
    Unknown,
}

impl fmt::Display for Expected {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expected::Exact(d) => write!(f, "{d}"),
            Expected::AtMost(d) => write!(f, "<={d}"),
            Expected::Unknown => write!(f, "unknown"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CatalogEntry {
    pub name: String,
    pub source: Source,
    pub n: usize,
    pub valency: usize,
    pub diameter: usize,
    pub dimension: Expected,
    pub table: String,
    pub budget: Duration,
    /// 1-based line in the manifest.
    pub line: usize,
}

impl CatalogEntry {
    /// Builds the graph without checking any parameters.
    pub fn build(&self) -> Result<Graph, String> {
        match &self.source {
            Source::Expr(e) => e.build().map_err(|e| e.to_string()),
            Source::Graph6(t) => parse_graph6(t).map_err(|e| e.to_string()),
            Source::File { path, sha256 } => {
                let bytes = std::fs::read(path).map_err(|e| format!("{}: {e}", path.display()))?;
                let digest: String = Sha256::digest(&bytes).iter().map(|b| format!("{b:02x}")).collect();
                if !digest.eq_ignore_ascii_case(sha256) {
                    return Err(format!("{}: checksum {digest} does not match {sha256}", path.display()));
                }
                let text = String::from_utf8(bytes).map_err(|_| format!("{}: not UTF-8", path.display()))?;
                parse_graph6(text.trim()).map_err(|e| e.to_string())
            }
            Source::None => Err("entry has no source".into()),
        }
    }
}

/// Reads a manifest; `file:` paths are resolved against its directory.
pub fn load_manifest(path: impl AsRef<Path>) -> Result<Vec<CatalogEntry>, ManifestError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| ManifestError::Io { path: path.to_path_buf(), source })?;
    parse_manifest(&text, path.parent().unwrap_or(Path::new(".")))
}

pub fn parse_manifest(text: &str, base: &Path) -> Result<Vec<CatalogEntry>, ManifestError> {
    let mut entries = Vec::new();
    let mut seen = HashSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let entry = parse_line(trimmed, line, base)?;
        if !seen.insert(entry.name.clone()) {
            return Err(ManifestError::Duplicate { line, name: entry.name });
        }
        entries.push(entry);
    }
    Ok(entries)
}

fn parse_line(text: &str, line: usize, base: &Path) -> Result<CatalogEntry, ManifestError> {
    let err = |msg: String| ManifestError::Parse { line, msg };
    let fields: Vec<&str> = text.split('|').collect();
    if fields.len() < 8 {
        return Err(err(format!("expected 8 fields, found {}", fields.len())));
    }
    let (head, tail) = fields.split_at(fields.len() - 6);
    let name = head[0].trim();
    if name.is_empty() {
        return Err(err("empty name".into()));
    }
    let source = parse_source(head[1..].join("|").trim(), line, base)?;
    let int = |field: &str, what: &str| -> Result<usize, ManifestError> {
        field.trim().parse().map_err(|_| err(format!("{what} `{}` is not a non-negative integer", field.trim())))
    };
    let n = int(tail[0], "n")?;
    let valency = int(tail[1], "valency")?;
    let diameter = int(tail[2], "diameter")?;
    if n < 2 {
        return Err(err(format!("n must be at least 2, got {n}")));
    }
    let dim = tail[3].trim();
    let dimension = if dim.eq_ignore_ascii_case("unknown") {
        Expected::Unknown
    } else if let Some(bound) = dim.strip_suffix('?') {
        Expected::AtMost(int(bound, "dimension")?)
    } else {
        Expected::Exact(int(dim, "dimension")?)
    };
    if matches!(dimension, Expected::Exact(0) | Expected::AtMost(0)) {
        return Err(err("dimension must be at least 1".into()));
    }
    if source == Source::None && dimension != Expected::Unknown {
        return Err(err("only `unknown` entries may omit the source".into()));
    }
    let budget: f64 = tail[5].trim().parse().map_err(|_| err(format!("budget `{}` is not a number", tail[5].trim())))?;
    if !budget.is_finite() || budget < 0.0 {
        return Err(err(format!("budget must be a non-negative number of seconds, got {budget}")));
    }
    Ok(CatalogEntry {
        name: name.to_string(),
        source,
        n,
        valency,
        diameter,
        dimension,
        table: tail[4].trim().to_string(),
        budget: Duration::from_secs_f64(budget),
        line,
    })
}

fn parse_source(text: &str, line: usize, base: &Path) -> Result<Source, ManifestError> {
    let err = |msg: String| ManifestError::Parse { line, msg };
    if text == "-" {
        return Ok(Source::None);
    }
    if let Some(token) = text.strip_prefix("g6:") {
        if token.is_empty() {
            return Err(err("empty graph6 token".into()));
        }
        return Ok(Source::Graph6(token.to_string()));
    }
    if let Some(rest) = text.strip_prefix("file:") {
        let (rel, sum) = rest.split_once("#sha256=").ok_or_else(|| err("file source needs `#sha256=<hex>`".into()))?;
        if sum.len() != 64 || !sum.bytes().all(|b| b.is_ascii_hexdigit()) {
            return Err(err(format!("malformed sha256 `{sum}`")));
        }
        return Ok(Source::File { path: base.join(rel), sha256: sum.to_ascii_lowercase() });
    }
    match text.parse::<Expr>() {
        Ok(e) => Ok(Source::Expr(e)),
        Err(ExprError::Unknown(name)) => Err(ManifestError::UnknownConstructor { line, name }),
        Err(e) => Err(err(e.to_string())),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    N,
    Valency,
    Diameter,
    Dimension,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Check::N => "n",
            Check::Valency => "valency",
            Check::Diameter => "diameter",
            Check::Dimension => "dimension",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Match { dimension: usize },
    BoundConsistent { dimension: usize },
    /// `found` is `None` for an irregular graph (valency) or a disconnected one (diameter).
    Mismatch { check: Check, found: Option<usize>, expected: usize },
    Timeout { lower: usize, upper: usize },
    BuildError(String),
    Skipped,
}

impl Outcome {
    pub fn status(&self) -> &'static str {
        match self {
            Outcome::Match { .. } => "match",
            Outcome::BoundConsistent { .. } => "bound-consistent",
            Outcome::Mismatch { .. } => "mismatch",
            Outcome::Timeout { .. } => "timeout",
            Outcome::BuildError(_) => "build-error",
            Outcome::Skipped => "skipped",
        }
    }

    fn is_failure(&self) -> bool {
        matches!(self, Outcome::Mismatch { .. } | Outcome::BuildError(_))
    }
}

#[derive(Clone, Debug)]
pub struct Record {
    pub name: String,
    pub table: String,
    pub expected: Expected,
    pub outcome: Outcome,
    pub witness: Option<Vec<u32>>,
    pub elapsed: Duration,
}

impl Record {
    pub fn found_text(&self) -> String {
        match &self.outcome {
            Outcome::Match { dimension } | Outcome::BoundConsistent { dimension } => dimension.to_string(),
            Outcome::Mismatch { check: Check::Dimension, found: Some(d), .. } => d.to_string(),
            Outcome::Mismatch { check: Check::Valency, found: None, .. } => "valency=irregular".into(),
            Outcome::Mismatch { check: Check::Diameter, found: None, .. } => "diameter=disconnected".into(),
            Outcome::Mismatch { check, found, .. } => format!("{check}={}", found.unwrap_or(0)),
            Outcome::Timeout { lower, upper } => format!("[{lower},{upper}]"),
            Outcome::BuildError(_) | Outcome::Skipped => "-".into(),
        }
    }

    pub fn expected_text(&self) -> String {
        match &self.outcome {
            Outcome::Mismatch { check, expected, .. } if *check != Check::Dimension => format!("{check}={expected}"),
            _ => self.expected.to_string(),
        }
    }

    /// `name\tstatus\tfound\texpected\tseconds`
    pub fn tsv(&self) -> String {
        format!("{}\t{}\t{}\t{}\t{:.3}", self.name, self.outcome.status(), self.found_text(), self.expected_text(), self.elapsed.as_secs_f64())
    }
}

#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    /// Search settings; its `budget` is replaced by the entry's own.
    pub search: SearchOptions,
    /// Replaces every entry's budget when set.
    pub budget: Option<Duration>,
}

/// Builds the graph, checks `n`, valency and diameter, then searches.
pub fn verify_entry(e: &CatalogEntry, opts: &VerifyOptions) -> Record {
    let start = Instant::now();
    let (outcome, witness) = verify_inner(e, opts);
    Record {
        name: e.name.clone(),
        table: e.table.clone(),
        expected: e.dimension,
        outcome,
        witness,
        elapsed: start.elapsed(),
    }
}

fn verify_inner(e: &CatalogEntry, opts: &VerifyOptions) -> (Outcome, Option<Vec<u32>>) {
    if e.dimension == Expected::Unknown {
        return (Outcome::Skipped, None);
    }
    let g = match e.build() {
        Ok(g) => g,
        Err(msg) => return (Outcome::BuildError(msg), None),
    };
    let mismatch = |check, found, expected| (Outcome::Mismatch { check, found, expected }, None);
    if g.n() != e.n {
        return mismatch(Check::N, Some(g.n()), e.n);
    }
    if g.valency() != Some(e.valency) {
        return mismatch(Check::Valency, g.valency(), e.valency);
    }
    let dm = distance_matrix(&g);
    let diameter = dm.is_connected().then(|| dm.diameter());
    if diameter != Some(e.diameter) {
        return mismatch(Check::Diameter, diameter, e.diameter);
    }
    let search = SearchOptions { budget: Some(opts.budget.unwrap_or(e.budget)), ..opts.search.clone() };
    match metric_dimension(&g, &search) {
        Ok(r) => {
            let outcome = match e.dimension {
                Expected::Exact(d) if d == r.dimension => Outcome::Match { dimension: d },
                Expected::AtMost(b) if r.dimension <= b => Outcome::BoundConsistent { dimension: r.dimension },
                Expected::Exact(d) | Expected::AtMost(d) => Outcome::Mismatch { check: Check::Dimension, found: Some(r.dimension), expected: d },
                Expected::Unknown => Outcome::Skipped,
            };
            (outcome, Some(r.witness))
        }
        Err(DimError::Budget(p)) => (Outcome::Timeout { lower: p.lower, upper: p.upper }, None),
        Err(other) => (Outcome::BuildError(other.to_string()), None),
    }
}

#[derive(Clone, Debug)]
pub struct Summary {
    /// One record per entry, in manifest order.
    pub records: Vec<Record>,
    pub elapsed: Duration,
}

/// Verifies every entry, in parallel, capped by `opts.search.threads`.
pub fn run_suite(entries: &[CatalogEntry], opts: &VerifyOptions) -> Summary {
    let start = Instant::now();
    let inner = VerifyOptions { search: SearchOptions { threads: None, ..opts.search.clone() }, budget: opts.budget };
    let records = parallel::with_threads(opts.search.threads, || parallel::map(entries, |e| verify_entry(e, &inner)));
    Summary { records, elapsed: start.elapsed() }
}

impl Summary {
    pub fn count(&self, status: &str) -> usize {
        self.records.iter().filter(|r| r.outcome.status() == status).count()
    }

    /// 0 when nothing failed or timed out, 1 on any mismatch or build error,
    /// 3 when the only problems are timeouts.
    pub fn exit_code(&self) -> i32 {
        if self.records.iter().any(|r| r.outcome.is_failure()) {
            1
        } else if self.count("timeout") > 0 {
            3
        } else {
            0
        }
    }

    pub fn tsv(&self) -> String {
        self.records.iter().map(|r| r.tsv() + "\n").collect()
    }

    pub fn table(&self) -> String {
        let header = ["name", "table", "status", "found", "expected", "seconds"];
        let rows: Vec<[String; 6]> = self
            .records
            .iter()
            .map(|r| {
                [
                    r.name.clone(),
                    r.table.clone(),
                    r.outcome.status().to_string(),
                    r.found_text(),
                    r.expected_text(),
                    format!("{:.3}", r.elapsed.as_secs_f64()),
                ]
            })
            .collect();
        let mut width = header.map(str::len);
        for row in &rows {
            for (w, cell) in width.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let mut out = String::new();
        let mut push = |cells: &[&str]| {
            let line: Vec<String> = cells.iter().zip(width).map(|(c, w)| format!("{c:<w$}")).collect();
            let _ = writeln!(out, "{}", line.join("  ").trim_end());
        };
        push(&header);
        for row in &rows {
            push(&row.each_ref().map(String::as_str));
        }
        let _ = writeln!(
            out,
            "{} entries: {} match, {} bound-consistent, {} mismatch, {} timeout, {} build-error, {} skipped ({:.1}s)",
            self.records.len(),
            self.count("match"),
            self.count("bound-consistent"),
            self.count("mismatch"),
            self.count("timeout"),
            self.count("build-error"),
            self.count("skipped"),
            self.elapsed.as_secs_f64()
        );
        out
    }
}
