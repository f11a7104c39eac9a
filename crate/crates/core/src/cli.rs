//! Command implementations behind the `flagschur` binary. Each command
//! returns its rendered output and exit code so it can be tested without a
//! subprocess.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::character::{character_via_reduced_words, schubert_divided_difference, Method, RecursionEngine};
use crate::diagram::{rothe_diagram, Diagram};
use crate::error::{Error, Result};
use crate::operators::{evaluate_all_ones, RankSequence};
use crate::oracle::{FlagBound, Oracle, OracleConfig};
use crate::perm::Permutation;
use crate::verify::{sweep, sweep_rothe, BoxSpec, Outcome, SweepReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

/// A parsed diagram, remembering the permutation when it came from one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramSpec {
    pub diagram: Diagram,
    pub permutation: Option<Permutation>,
}

impl FromStr for DiagramSpec {
    type Err = Error;

    /// Accepts a column list (`2,3;2,3,5;3`, empty string for `∅`), a grid of
    /// `.`/`#` with row 1 first (rows separated by newlines or `/`),
    /// `rothe:<permutation>`, or `repeat:<m>x<spec>` where the inner spec may
    /// be parenthesized.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(perm) = s.strip_prefix("rothe:") {
            let w: Permutation = perm.parse()?;
            return Ok(DiagramSpec {
                diagram: rothe_diagram(&w),
                permutation: Some(w),
            });
        }
        if let Some(rest) = s.strip_prefix("repeat:") {
            let (m, inner) = rest
                .split_once('x')
                .ok_or_else(|| Error::Parse(format!("expected repeat:<m>x<spec>, got {s:?}")))?;
            let m: usize = m
                .trim()
                .parse()
                .ok()
                .filter(|&m| m >= 1)
                .ok_or_else(|| Error::Parse(format!("bad repeat count {m:?}")))?;
            let inner = inner.trim();
            let inner = inner
                .strip_prefix('(')
                .and_then(|t| t.strip_suffix(')'))
                .unwrap_or(inner);
            let base: DiagramSpec = inner.parse()?;
            return Ok(DiagramSpec {
                diagram: base.diagram.repeat_columns(m),
                permutation: None,
            });
        }
        let diagram = if s.contains(['.', '#']) {
            parse_grid(s)?
        } else {
            parse_column_list(s)?
        };
        Ok(DiagramSpec {
            diagram,
            permutation: None,
        })
    }
}

pub fn parse_column_list(s: &str) -> Result<Diagram> {
    let mut columns = Vec::new();
    for part in s.split(';') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let rows = part
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad row index {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        columns.push(rows);
    }
    Diagram::new(columns)
}

pub fn parse_grid(s: &str) -> Result<Diagram> {
    let mut boxes = Vec::new();
    for (i, line) in s.split(['\n', '/']).enumerate() {
        for (j, ch) in line.trim_end_matches('\r').chars().enumerate() {
            match ch {
                '#' => boxes.push((i + 1, j + 1)),
                '.' => {}
                c => return Err(Error::Parse(format!("unexpected grid character {c:?}"))),
            }
        }
    }
    Diagram::from_boxes(boxes)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum MethodChoice {
    Recursion,
    Redwords,
    Dd,
    Oracle,
    #[default]
    Auto,
}

impl FromStr for MethodChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "recursion" => MethodChoice::Recursion,
            "redwords" => MethodChoice::Redwords,
            "dd" => MethodChoice::Dd,
            "oracle" => MethodChoice::Oracle,
            "auto" => MethodChoice::Auto,
            _ => return Err(Error::Parse(format!("unknown method {s:?}"))),
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Text,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            _ => Err(Error::Parse(format!("unknown format {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct JobConfig {
    pub method: MethodChoice,
    pub nvars: Option<usize>,
    pub rank_sequence: Option<RankSequence>,
    pub format: Format,
    pub oracle: OracleConfig,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CmdOutput {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl CmdOutput {
    fn ok(stdout: String) -> Self {
        CmdOutput {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::TooLarge(_) | Error::CapExceeded { .. } => EXIT_CAP,
        Error::Internal(_) => EXIT_VERIFY_FAILED,
        _ => EXIT_USAGE,
    }
}

impl From<Error> for CmdOutput {
    fn from(e: Error) -> Self {
        CmdOutput {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: exit_code(&e),
        }
    }
}

fn run(f: impl FnOnce() -> Result<String>) -> CmdOutput {
    match f() {
        Ok(s) => CmdOutput::ok(s),
        Err(e) => e.into(),
    }
}

fn number(n: &BigInt) -> Value {
    match i64::try_from(n) {
        Ok(v) => json!(v),
        Err(_) => json!(n.to_string()),
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json");
    s.push('\n');
    s
}

/// `char`: compute a character.
pub fn cmd_char(spec: &DiagramSpec, cfg: &JobConfig) -> CmdOutput {
    run(|| {
        let d = &spec.diagram;
        let mut engine = RecursionEngine::new();
        let class = engine.classifier().classify(d);
        if cfg.rank_sequence.is_some() && cfg.method != MethodChoice::Oracle {
            return Err(Error::Parse("--rank-sequence requires --method oracle".into()));
        }
        let method = match cfg.method {
            MethodChoice::Recursion => Method::Recursion,
            MethodChoice::Redwords => Method::ReducedWords,
            MethodChoice::Dd => Method::DividedDifference,
            MethodChoice::Oracle => Method::Oracle,
            MethodChoice::Auto if class.translucent => Method::Recursion,
            MethodChoice::Auto => Method::Oracle,
        };
        let fb = match &cfg.rank_sequence {
            Some(rs) => FlagBound::partial(rs),
            None => FlagBound::standard(d.max_row()),
        };
        let character = match method {
            Method::Recursion => engine.character(d)?,
            Method::ReducedWords => character_via_reduced_words(d)?.character,
            Method::DividedDifference => {
                let w = spec
                    .permutation
                    .as_ref()
                    .ok_or_else(|| Error::Parse("--method dd needs a permutation (--rothe)".into()))?;
                schubert_divided_difference(w)
            }
            Method::Oracle => Oracle::new(cfg.oracle.clone()).character(d, &fb)?,
        };
        let needed = character.nvars().max(match &cfg.rank_sequence {
            Some(rs) => rs.total(),
            None => d.max_row(),
        });
        let nvars = match cfg.nvars {
            Some(n) if n < character.nvars() => {
                return Err(Error::Parse(format!(
                    "--nvars {n} is smaller than the {} variables in use",
                    character.nvars()
                )))
            }
            Some(n) => n,
            None => needed,
        };
        let dimension = evaluate_all_ones(&character);
        Ok(match cfg.format {
            Format::Json => pretty(&json!({
                "diagram": d.to_vecs(),
                "method": method.to_string(),
                "character": character.to_json_padded(nvars),
                "dimension": number(&dimension),
                "clear": class.clear,
                "transparent": class.transparent,
                "translucent": class.translucent,
            })),
            Format::Text => {
                let mut s = String::new();
                writeln!(s, "diagram: {d}").unwrap();
                writeln!(s, "method: {method}").unwrap();
                writeln!(s, "character: {character}").unwrap();
                writeln!(s, "dimension: {dimension}").unwrap();
                writeln!(s, "clear: {}", class.clear).unwrap();
                writeln!(s, "transparent: {}", class.transparent).unwrap();
                writeln!(s, "translucent: {}", class.translucent).unwrap();
                s
            }
        })
    })
}

/// `classify`: classification, fullness per row, and descents.
pub fn cmd_classify(spec: &DiagramSpec, format: Format) -> CmdOutput {
    let d = &spec.diagram;
    let class = d.classify();
    let rows: Vec<usize> = (1..=d.max_row()).collect();
    let full: Vec<usize> = rows.iter().copied().filter(|&k| d.is_k_full(k)).collect();
    let descents = d.descents();
    let stdout = match format {
        Format::Json => pretty(&json!({
            "diagram": d.to_vecs(),
            "clear": class.clear,
            "transparent": class.transparent,
            "translucent": class.translucent,
            "full": full,
            "descents": descents.iter().map(|w| json!({
                "k": w.k,
                "column": d.columns()[w.column_index].rows(),
                "border_cell": [w.border_cell.0, w.border_cell.1],
            })).collect::<Vec<_>>(),
        })),
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "diagram: {d}").unwrap();
            s.push_str(&d.to_grid());
            for &k in &rows {
                let state = if d.is_k_full(k) {
                    "full".to_string()
                } else if let Some(w) = descents.iter().find(|w| w.k == k) {
                    format!("descent, border cell ({}, {})", w.border_cell.0, w.border_cell.1)
                } else {
                    "neither".to_string()
                };
                writeln!(s, "k={k}: {state}").unwrap();
            }
            let set: Vec<String> = descents.iter().map(|w| w.k.to_string()).collect();
            writeln!(s, "descents: {{{}}}", set.join(",")).unwrap();
            writeln!(s, "clear: {}", class.clear).unwrap();
            writeln!(s, "transparent: {}", class.transparent).unwrap();
            writeln!(s, "translucent: {}", class.translucent).unwrap();
            s
        }
    };
    CmdOutput::ok(stdout)
}

fn word_text(w: &[usize]) -> String {
    let parts: Vec<String> = w.iter().map(|i| i.to_string()).collect();
    format!("({})", parts.join(","))
}

/// `reduced-words`: every reduced word of a transparent diagram.
pub fn cmd_reduced_words(spec: &DiagramSpec, cap: Option<usize>, format: Format) -> CmdOutput {
    run(|| {
        let d = &spec.diagram;
        if !d.classify().transparent {
            return Err(Error::NotTransparent);
        }
        let words = d.reduced_words(cap)?;
        Ok(match format {
            Format::Json => pretty(&json!({ "words": words, "count": words.len() })),
            Format::Text => {
                let mut s = String::new();
                for w in &words {
                    writeln!(s, "{}", word_text(w)).unwrap();
                }
                writeln!(s, "count: {}", words.len()).unwrap();
                s
            }
        })
    })
}

/// `rothe`: the Rothe diagram of a permutation.
pub fn cmd_rothe(w: &Permutation, format: Format) -> CmdOutput {
    let d = rothe_diagram(w);
    let stdout = match format {
        Format::Json => pretty(&json!({
            "permutation": w.word(),
            "diagram": d.to_vecs(),
            "descents": w.descents(),
        })),
        Format::Text => format!("permutation: {w}\ndiagram: {d}\n{}", d.to_grid()),
    };
    CmdOutput::ok(stdout)
}

/// `verify`: sweep a box and report every mismatch with a command that
/// reproduces it.
pub fn cmd_verify(spec: &BoxSpec, only_rothe: bool, cfg: &JobConfig) -> CmdOutput {
    let oracle = Oracle::new(cfg.oracle.clone());
    let report = if only_rothe {
        sweep_rothe(spec.rows, &oracle)
    } else {
        sweep(spec, &oracle)
    };
    let stdout = render_report(&report, cfg.format);
    CmdOutput {
        stdout,
        stderr: String::new(),
        code: if report.is_success() {
            EXIT_OK
        } else {
            EXIT_VERIFY_FAILED
        },
    }
}

fn reproduce(r: &crate::verify::DiagramReport) -> String {
    match &r.permutation {
        Some(w) => format!("flagschur char --rothe {w} --method oracle"),
        None => format!("flagschur char --diagram \"{}\" --method oracle", r.diagram),
    }
}

pub fn render_report(report: &SweepReport, format: Format) -> String {
    let n = report.diagrams.len();
    let count = |f: fn(&crate::diagram::Classification) -> bool| {
        report.diagrams.iter().filter(|d| f(&d.classification)).count()
    };
    let mut problems = Vec::new();
    for d in &report.diagrams {
        for r in &d.results {
            let (kind, msg) = match &r.outcome {
                Outcome::Fail(m) => ("FAIL", m),
                Outcome::Skipped(m) => ("SKIP", m),
                _ => continue,
            };
            let at = r.k.map(|k| format!(" at k={k}")).unwrap_or_default();
            problems.push((kind, format!("{}{at} on {}: {msg}", r.check, d.diagram), reproduce(d)));
        }
    }
    match format {
        Format::Json => pretty(&json!({
            "diagrams": n,
            "clear": count(|c| c.clear),
            "transparent": count(|c| c.transparent),
            "translucent": count(|c| c.translucent),
            "passed": report.passed(),
            "expected_negatives": report.expected_negatives(),
            "skipped": report.skipped(),
            "failures": report.failures(),
            "problems": problems.iter().map(|(k, m, r)| json!({"kind": k, "message": m, "reproduce": r})).collect::<Vec<_>>(),
        })),
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "diagrams: {n}").unwrap();
            writeln!(
                s,
                "clear: {}, transparent: {}, translucent: {}",
                count(|c| c.clear),
                count(|c| c.transparent),
                count(|c| c.translucent)
            )
            .unwrap();
            writeln!(s, "checks passed: {}", report.passed()).unwrap();
            writeln!(
                s,
                "expected negatives (divided-difference law off Rothe diagrams): {}",
                report.expected_negatives()
            )
            .unwrap();
            writeln!(s, "skipped: {}", report.skipped()).unwrap();
            writeln!(s, "failures: {}", report.failures()).unwrap();
            for (kind, msg, cmd) in &problems {
                writeln!(s, "{kind} {msg}\n  reproduce: {cmd}").unwrap();
            }
            s
        }
    }
}

/// Parses `RxC` into `(rows, cols)`.
pub fn parse_box(s: &str) -> Result<(usize, usize)> {
    let (r, c) = s
        .split_once(['x', 'X'])
        .ok_or_else(|| Error::Parse(format!("expected RxC, got {s:?}")))?;
    let parse = |t: &str| {
        t.trim()
            .parse::<usize>()
            .ok()
            .filter(|&v| (1..=8).contains(&v))
            .ok_or_else(|| Error::Parse(format!("box side {t:?} must be between 1 and 8")))
    };
    Ok((parse(r)?, parse(c)?))
}

pub fn parse_rank_sequence(s: &str) -> Result<RankSequence> {
    let ranks = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad rank {t:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    RankSequence::new(ranks)
}
