//! Sweep harness: enumerate diagrams in a box and cross-check every method
//! and law that applies to each.

use std::fmt;

use rayon::prelude::*;

use crate::character::{
    character_via_reduced_words, divided_difference_law_holds, schubert_divided_difference, schubert_nst,
    trimming_law_holds, verify_recursion_identity, RecursionEngine,
};
use crate::diagram::{rothe_diagram, Classification, Column, Diagram};
use crate::error::{Error, Result};
use crate::operators::bergeron_sottile;
use crate::oracle::{FlagBound, Oracle};
use crate::perm::Permutation;
use crate::poly::Polynomial;

/// Which diagrams a sweep visits: multisets of nonempty columns drawn from
/// the subsets of `{1..rows}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoxSpec {
    pub rows: usize,
    /// Bound on the total number of columns, counted with multiplicity.
    pub max_columns: Option<usize>,
    /// Bound on the number of distinct columns.
    pub max_distinct: Option<usize>,
    pub max_multiplicity: usize,
}

impl BoxSpec {
    /// Diagrams fitting in a `rows × cols` rectangle.
    pub fn rectangle(rows: usize, cols: usize, max_multiplicity: usize) -> Self {
        BoxSpec {
            rows,
            max_columns: Some(cols),
            max_distinct: None,
            max_multiplicity,
        }
    }
}

/// All diagrams allowed by `spec`, including the empty one, in a fixed order.
pub fn enumerate_box_diagrams(spec: &BoxSpec) -> Vec<Diagram> {
    assert!(spec.rows < usize::BITS as usize, "box too tall");
    let columns: Vec<Column> = (1u64..1 << spec.rows)
        .map(|mask| Column::from_rows((1..=spec.rows).filter(|r| mask >> (r - 1) & 1 == 1)).unwrap())
        .collect();
    let mut out = Vec::new();
    let mut chosen: Vec<(usize, usize)> = Vec::new();
    fn go(
        spec: &BoxSpec,
        columns: &[Column],
        start: usize,
        total: usize,
        chosen: &mut Vec<(usize, usize)>,
        out: &mut Vec<Diagram>,
    ) {
        out.push(Diagram::from_columns(
            chosen
                .iter()
                .flat_map(|&(c, m)| std::iter::repeat_n(columns[c].clone(), m)),
        ));
        if spec.max_distinct.is_some_and(|d| chosen.len() >= d) {
            return;
        }
        for c in start..columns.len() {
            for m in 1..=spec.max_multiplicity {
                if spec.max_columns.is_some_and(|mc| total + m > mc) {
                    break;
                }
                chosen.push((c, m));
                go(spec, columns, c + 1, total + m, chosen, out);
                chosen.pop();
            }
        }
    }
    go(spec, &columns, 0, 0, &mut chosen, &mut out);
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Check {
    RecursionVsOracle,
    ReducedWordsVsOracle,
    RecursionIdentity,
    TrimmingLaw,
    KernelFull,
    KernelDescent,
    DividedDifferenceLaw,
    SchubertMethods,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Check::RecursionVsOracle => "recursion = oracle",
            Check::ReducedWordsVsOracle => "reduced words = oracle",
            Check::RecursionIdentity => "recursion identity",
            Check::TrimmingLaw => "trimming law",
            Check::KernelFull => "kernel vanishes when k-full",
            Check::KernelDescent => "kernel at a descent",
            Check::DividedDifferenceLaw => "divided-difference law",
            Check::SchubertMethods => "schubert methods agree",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// A law that is known to fail off Rothe diagrams did fail.
    ExpectedNegative,
    Fail(String),
    Skipped(String),
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub check: Check,
    pub k: Option<usize>,
    pub outcome: Outcome,
}

#[derive(Clone, Debug)]
pub struct DiagramReport {
    pub diagram: Diagram,
    pub permutation: Option<Permutation>,
    pub classification: Classification,
    pub results: Vec<CheckResult>,
}

#[derive(Clone, Debug, Default)]
pub struct SweepReport {
    pub diagrams: Vec<DiagramReport>,
}

impl SweepReport {
    fn count(&self, pred: impl Fn(&Outcome) -> bool) -> usize {
        self.diagrams
            .iter()
            .flat_map(|d| &d.results)
            .filter(|r| pred(&r.outcome))
            .count()
    }

    pub fn passed(&self) -> usize {
        self.count(|o| *o == Outcome::Pass)
    }

    pub fn expected_negatives(&self) -> usize {
        self.count(|o| *o == Outcome::ExpectedNegative)
    }

    pub fn failures(&self) -> usize {
        self.count(|o| matches!(o, Outcome::Fail(_)))
    }

    pub fn skipped(&self) -> usize {
        self.count(|o| matches!(o, Outcome::Skipped(_)))
    }

    pub fn is_success(&self) -> bool {
        self.failures() == 0
    }
}

fn outcome(r: Result<bool>, detail: impl FnOnce() -> String) -> Outcome {
    match r {
        Ok(true) => Outcome::Pass,
        Ok(false) => Outcome::Fail(detail()),
        Err(Error::TooLarge(msg)) => Outcome::Skipped(msg),
        Err(e) => Outcome::Fail(e.to_string()),
    }
}

/// Runs every applicable check on one diagram, with oracle characters for
/// the standard flag on `rows` rows.
pub fn check_diagram(d: &Diagram, rows: usize, oracle: &Oracle) -> DiagramReport {
    let mut engine = RecursionEngine::new();
    let class = engine.classifier().classify(d);
    let base = FlagBound::standard(rows.max(d.max_row()));
    let char_of = |e: &Diagram| oracle.character_standard(e);
    let mut results = Vec::new();
    let mut push = |check, k, outcome| results.push(CheckResult { check, k, outcome });

    let own = match oracle.character_standard(d) {
        Ok(f) => f,
        Err(e) => {
            let o = match e {
                Error::TooLarge(msg) => Outcome::Skipped(msg),
                e => Outcome::Fail(e.to_string()),
            };
            push(Check::RecursionVsOracle, None, o);
            return DiagramReport {
                diagram: d.clone(),
                permutation: None,
                classification: class,
                results,
            };
        }
    };

    if class.translucent {
        let r = engine.character(d).map(|f| f == own);
        push(
            Check::RecursionVsOracle,
            None,
            outcome(r, || "characters differ".into()),
        );
    }
    if class.transparent {
        let r = character_via_reduced_words(d).map(|f| f.character == own);
        push(
            Check::ReducedWordsVsOracle,
            None,
            outcome(r, || "characters differ".into()),
        );
    }
    if class.clear {
        let r = verify_recursion_identity(d, char_of);
        push(Check::RecursionIdentity, None, outcome(r, || "identity fails".into()));
    }
    for k in 1..=base.nrows() {
        match trimming_law_holds(d, k, char_of) {
            Ok(None) => {}
            r => {
                let r = r.map(|o| o.unwrap_or(true));
                push(Check::TrimmingLaw, Some(k), outcome(r, || format!("T_{k} law fails")));
            }
        }
        if d.is_k_full(k) {
            let r = oracle.kernel_character(d, k, &base).map(|f| f.is_zero());
            push(
                Check::KernelFull,
                Some(k),
                outcome(r, || format!("nonzero kernel at {k}")),
            );
        } else if d.descent_at(k).is_some() {
            let r = (|| {
                let kernel = oracle.kernel_character(d, k, &base)?;
                let child = char_of(&d.apply_s_k(k)?)?;
                Ok(kernel == &Polynomial::var(k) * &bergeron_sottile(&child, k + 1))
            })();
            push(
                Check::KernelDescent,
                Some(k),
                outcome(r, || format!("kernel at descent {k} differs")),
            );
        }
        let r = divided_difference_law_holds(d, k, char_of);
        let o = match outcome(r, String::new) {
            Outcome::Fail(msg) if msg.is_empty() => Outcome::ExpectedNegative,
            o => o,
        };
        push(Check::DividedDifferenceLaw, Some(k), o);
    }
    DiagramReport {
        diagram: d.clone(),
        permutation: None,
        classification: class,
        results,
    }
}

/// Sweep over every diagram allowed by `spec`.
pub fn sweep(spec: &BoxSpec, oracle: &Oracle) -> SweepReport {
    let diagrams = enumerate_box_diagrams(spec);
    let reports = diagrams
        .par_iter()
        .map(|d| check_diagram(d, spec.rows, oracle))
        .collect();
    SweepReport { diagrams: reports }
}

/// Rothe diagrams of all `w ∈ S_n`: recursion, reduced words, divided
/// differences, the increasing recursion and the oracle must agree, and the
/// divided-difference law must hold.
pub fn sweep_rothe(n: usize, oracle: &Oracle) -> SweepReport {
    let perms = Permutation::all(n);
    let reports = perms
        .par_iter()
        .map(|w| {
            let d = rothe_diagram(w);
            let mut engine = RecursionEngine::new();
            let class = engine.classifier().classify(&d);
            let mut results = Vec::new();
            let dd = schubert_divided_difference(w);
            let agree = (|| {
                let rec = engine.character(&d)?;
                let words = character_via_reduced_words(&d)?.character;
                let orc = oracle.character_standard(&d)?;
                Ok(rec == dd && words == dd && orc == dd && schubert_nst(w) == dd)
            })();
            results.push(CheckResult {
                check: Check::SchubertMethods,
                k: None,
                outcome: outcome(agree, || "methods disagree".into()),
            });
            for k in 1..n {
                let r = divided_difference_law_holds(&d, k, |e| oracle.character_standard(e));
                results.push(CheckResult {
                    check: Check::DividedDifferenceLaw,
                    k: Some(k),
                    outcome: outcome(r, || format!("∂_{k} law fails on a Rothe diagram")),
                });
            }
            DiagramReport {
                diagram: d,
                permutation: Some(w.clone()),
                classification: class,
                results,
            }
        })
        .collect();
    SweepReport { diagrams: reports }
}
