//! Box diagrams and their combinatorics: Rothe diagrams, `k`-fullness,
//! descents, the `s_k` operation, the clear/transparent/translucent
//! classification, and reduced words.
//!
//! A diagram is a multiset of columns, each column a strictly increasing set
//! of row indices. Column order and empty columns carry no meaning, so every
//! [`Diagram`] is kept in canonical form: empty columns dropped and the
//! remaining columns sorted lexicographically.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A strictly increasing set of row indices, all `>= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Column(Vec<usize>);

impl Column {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        let increasing = rows.windows(2).all(|p| p[0] < p[1]);
        if !increasing || rows.first() == Some(&0) {
            return Err(Error::InvalidColumn(rows));
        }
        Ok(Column(rows))
    }

    /// Builds a column from any collection of rows, sorting and deduplicating.
    pub fn from_rows<I: IntoIterator<Item = usize>>(rows: I) -> Result<Self> {
        let mut rows: Vec<usize> = rows.into_iter().collect();
        rows.sort_unstable();
        rows.dedup();
        Column::new(rows)
    }

    pub fn rows(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, row: usize) -> bool {
        self.0.binary_search(&row).is_ok()
    }

    pub fn max_row(&self) -> Option<usize> {
        self.0.last().copied()
    }

    /// Either `k` is absent, or both `k` and `k+1` are present.
    pub fn is_k_full(&self, k: usize) -> bool {
        !self.contains(k) || self.contains(k + 1)
    }

    /// `self ∩ {1, ..., bound} ⊆ other`.
    fn truncation_contained_in(&self, bound: usize, other: &Column) -> bool {
        self.0.iter().take_while(|&&r| r <= bound).all(|&r| other.contains(r))
    }

    fn swap_rows(&self, k: usize) -> Column {
        let mut rows: Vec<usize> = self
            .0
            .iter()
            .map(|&r| {
                if r == k {
                    k + 1
                } else if r == k + 1 {
                    k
                } else {
                    r
                }
            })
            .collect();
        rows.sort_unstable();
        Column(rows)
    }

    fn without(&self, row: usize) -> Column {
        Column(self.0.iter().copied().filter(|&r| r != row).collect())
    }
}

impl TryFrom<Vec<usize>> for Column {
    type Error = Error;

    fn try_from(rows: Vec<usize>) -> Result<Self> {
        Column::new(rows)
    }
}

impl From<Column> for Vec<usize> {
    fn from(c: Column) -> Vec<usize> {
        c.0
    }
}

/// A diagram in canonical form.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    columns: Vec<Column>,
}

/// A descent of a diagram at row `k`, with its witnessing column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentWitness {
    pub k: usize,
    /// Zero-based index of the witnessing column in canonical order.
    pub column_index: usize,
    /// The border cell in matrix coordinates `(row, column)`, one-based.
    pub border_cell: (usize, usize),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub clear: bool,
    pub transparent: bool,
    pub translucent: bool,
}

impl Diagram {
    pub fn empty() -> Self {
        Diagram::default()
    }

    pub fn from_columns<I: IntoIterator<Item = Column>>(columns: I) -> Self {
        let mut columns: Vec<Column> = columns.into_iter().filter(|c| !c.is_empty()).collect();
        columns.sort();
        Diagram { columns }
    }

    /// Builds a diagram from raw row lists, validating each column.
    pub fn new<I, C>(columns: I) -> Result<Self>
    where
        I: IntoIterator<Item = C>,
        C: Into<Vec<usize>>,
    {
        let columns = columns
            .into_iter()
            .map(|c| Column::new(c.into()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Diagram::from_columns(columns))
    }

    /// Builds a diagram from a set of boxes `(row, column)`.
    pub fn from_boxes<I: IntoIterator<Item = (usize, usize)>>(boxes: I) -> Result<Self> {
        let mut by_col: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for (i, j) in boxes {
            if i == 0 || j == 0 {
                return Err(Error::InvalidColumn(vec![i]));
            }
            by_col.entry(j).or_default().push(i);
        }
        let columns = by_col
            .into_values()
            .map(Column::from_rows)
            .collect::<Result<Vec<_>>>()?;
        Ok(Diagram::from_columns(columns))
    }

    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    pub fn num_columns(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    /// Number of boxes `|D|`.
    pub fn size(&self) -> usize {
        self.columns.iter().map(Column::len).sum()
    }

    /// Largest occupied row, or 0 for the empty diagram.
    pub fn max_row(&self) -> usize {
        self.columns.iter().filter_map(Column::max_row).max().unwrap_or(0)
    }

    /// Boxes `(row, column)` with columns numbered from 1 in canonical order.
    pub fn boxes(&self) -> Vec<(usize, usize)> {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(j, c)| c.rows().iter().map(move |&i| (i, j + 1)))
            .collect()
    }

    pub fn to_vecs(&self) -> Vec<Vec<usize>> {
        self.columns.iter().map(|c| c.rows().to_vec()).collect()
    }

    pub fn is_k_full(&self, k: usize) -> bool {
        self.columns.iter().all(|c| c.is_k_full(k))
    }

    /// The descent at `k`, if any.
    ///
    /// A column `c` with `max(c) = k` witnesses the descent when every other
    /// column is `k`-full or has `c' ∩ {1..k+1} ⊆ c`. This is the column
    /// order-free form of "`k`-full columns to the left, contained columns to
    /// the right".
    pub fn descent_at(&self, k: usize) -> Option<DescentWitness> {
        if k == 0 {
            return None;
        }
        self.columns
            .iter()
            .enumerate()
            .filter(|(_, c)| c.max_row() == Some(k))
            .find(|&(j, c)| {
                self.columns
                    .iter()
                    .enumerate()
                    .all(|(j2, other)| j2 == j || other.is_k_full(k) || other.truncation_contained_in(k + 1, c))
            })
            .map(|(j, _)| DescentWitness {
                k,
                column_index: j,
                border_cell: (k, j + 1),
            })
    }

    /// All descents, in increasing order of `k`.
    pub fn descents(&self) -> Vec<DescentWitness> {
        (1..=self.max_row()).filter_map(|k| self.descent_at(k)).collect()
    }

    pub fn descent_set(&self) -> Vec<usize> {
        self.descents().into_iter().map(|d| d.k).collect()
    }

    /// `s_k D`: delete the border cell of the descent at `k`, then swap rows
    /// `k` and `k+1`.
    pub fn apply_s_k(&self, k: usize) -> Result<Diagram> {
        let witness = self.descent_at(k).ok_or(Error::NotADescent { k })?;
        let columns = self.columns.iter().enumerate().map(|(j, c)| {
            let c = if j == witness.column_index {
                c.without(k)
            } else {
                c.clone()
            };
            c.swap_rows(k)
        });
        Ok(Diagram::from_columns(columns))
    }

    /// Whether every `k` is either full or a descent. Rows past the last
    /// occupied row are vacuously full.
    pub fn is_clear(&self) -> bool {
        (1..=self.max_row()).all(|k| self.is_k_full(k) || self.descent_at(k).is_some())
    }

    pub fn classify(&self) -> Classification {
        Classifier::default().classify(self)
    }

    /// `m·D`: every column repeated `m` times.
    pub fn repeat_columns(&self, m: usize) -> Diagram {
        Diagram::from_columns(self.columns.iter().flat_map(|c| std::iter::repeat_n(c.clone(), m)))
    }

    /// Grid rendering: row 1 first, `#` for a box and `.` otherwise.
    pub fn to_grid(&self) -> String {
        let rows = self.max_row();
        let mut out = String::new();
        for i in 1..=rows {
            for c in &self.columns {
                out.push(if c.contains(i) { '#' } else { '.' });
            }
            out.push('\n');
        }
        out
    }

    /// Reduced words `(i_1, ..., i_l)`, `l = |D|`, with `s_{i_1} ⋯ s_{i_l} D = ∅`.
    /// The last letter is applied to `D` first. Words are returned sorted.
    ///
    /// Fails with [`Error::CapExceeded`] if there are more than `cap` words.
    pub fn reduced_words(&self, cap: Option<usize>) -> Result<Vec<Vec<usize>>> {
        let mut counter = WordCounter::default();
        let count = counter.count(self);
        if let Some(cap) = cap {
            if count > BigUint::from(cap) {
                return Err(Error::CapExceeded { cap });
            }
        }
        let mut out = Vec::new();
        let mut suffix = Vec::new();
        collect_words(self, &mut counter, &mut suffix, &mut out);
        out.sort();
        Ok(out)
    }

    /// Number of reduced words, without enumerating them.
    pub fn count_reduced_words(&self) -> BigUint {
        WordCounter::default().count(self)
    }
}

fn collect_words(d: &Diagram, counter: &mut WordCounter, suffix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if d.is_empty() {
        out.push(suffix.iter().rev().copied().collect());
        return;
    }
    for k in d.descent_set() {
        let next = d.apply_s_k(k).expect("descent");
        if counter.count(&next).is_zero() {
            continue;
        }
        suffix.push(k);
        collect_words(&next, counter, suffix, out);
        suffix.pop();
    }
}

#[derive(Default)]
struct WordCounter {
    memo: HashMap<Diagram, BigUint>,
}

impl WordCounter {
    fn count(&mut self, d: &Diagram) -> BigUint {
        if d.is_empty() {
            return BigUint::one();
        }
        if let Some(c) = self.memo.get(d) {
            return c.clone();
        }
        let mut total = BigUint::zero();
        for k in d.descent_set() {
            let next = d.apply_s_k(k).expect("descent");
            total += self.count(&next);
        }
        self.memo.insert(d.clone(), total.clone());
        total
    }
}

/// Memoized classification. The cache is keyed on canonical diagrams and is
/// owned by the caller, so sharing across threads needs one classifier each.
#[derive(Default)]
pub struct Classifier {
    memo: HashMap<Diagram, Classification>,
}

impl Classifier {
    pub fn classify(&mut self, d: &Diagram) -> Classification {
        if let Some(c) = self.memo.get(d) {
            return *c;
        }
        let clear = d.is_clear();
        let mut transparent = d.is_empty();
        let mut translucent = d.num_columns() <= 1;
        if clear && !(transparent && translucent) {
            let children: Vec<Classification> = d
                .descent_set()
                .into_iter()
                .map(|k| {
                    let next = d.apply_s_k(k).expect("descent");
                    self.classify(&next)
                })
                .collect();
            if !transparent {
                transparent = children.iter().all(|c| c.transparent);
            }
            if !translucent {
                translucent = children.iter().all(|c| c.translucent);
            }
        }
        let c = Classification {
            clear,
            transparent,
            translucent,
        };
        self.memo.insert(d.clone(), c);
        c
    }
}

/// The Rothe diagram `D(w) = {(i, j) : j < w(i), i < w⁻¹(j)}`.
pub fn rothe_diagram(w: &Permutation) -> Diagram {
    let inv = w.inverse();
    let n = w.len();
    let boxes = (1..=n).flat_map(|i| {
        let inv = &inv;
        (1..w.apply(i)).filter(move |&j| i < inv.apply(j)).map(move |j| (i, j))
    });
    Diagram::from_boxes(boxes).expect("rothe boxes are positive")
}

impl fmt::Display for Diagram {
    /// Column-list form, e.g. `2,3;2,3,5;3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols: Vec<String> = self
            .columns
            .iter()
            .map(|c| c.rows().iter().map(|r| r.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", cols.join(";"))
    }
}
