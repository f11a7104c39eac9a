use crate::diagram::{Column, Diagram};
use crate::error::{Error, Result};

use super::flag::FlagBound;

/// Entries of a column-strict filling, one strictly increasing list per
/// column of the diagram in canonical order.
pub type Filling = Vec<Vec<usize>>;

/// All strictly increasing `b` with `b_i <= bound(a_i)`, in lexicographic order.
pub fn column_fillings(a: &[usize], fb: &FlagBound) -> Vec<Vec<usize>> {
    fn go(a: &[usize], fb: &FlagBound, lower: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let Some((&row, rest)) = a.split_first() else {
            out.push(cur.clone());
            return;
        };
        for b in lower..=fb.bound(row) {
            cur.push(b);
            go(rest, fb, b + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(a, fb, 1, &mut Vec::new(), &mut out);
    out
}

/// Number of fillings, computed without enumerating them. Saturates at
/// `u128::MAX`.
pub fn count_fillings(d: &Diagram, fb: &FlagBound) -> u128 {
    d.columns()
        .iter()
        .map(|c| column_fillings(c.rows(), fb).len() as u128)
        .fold(1u128, |acc, n| acc.saturating_mul(n))
}

/// Flagged column-strict fillings of `d`: the Cartesian product of the
/// per-column choices, in lexicographic order.
pub fn enumerate_fillings(d: &Diagram, fb: &FlagBound, cap: Option<usize>) -> Result<Vec<Filling>> {
    fb.check_fits(d)?;
    let per_column: Vec<Vec<Vec<usize>>> = d
        .columns()
        .iter()
        .map(|c: &Column| column_fillings(c.rows(), fb))
        .collect();
    let total = per_column
        .iter()
        .fold(1u128, |acc, v| acc.saturating_mul(v.len() as u128));
    if let Some(cap) = cap {
        if total > cap as u128 {
            return Err(Error::TooLarge(format!("{total} fillings exceed the cap of {cap}")));
        }
    }
    let mut out: Vec<Filling> = vec![Vec::new()];
    for choices in &per_column {
        let mut next = Vec::with_capacity(out.len() * choices.len());
        for prefix in &out {
            for b in choices {
                let mut f = prefix.clone();
                f.push(b.clone());
                next.push(f);
            }
        }
        out = next;
    }
    Ok(out)
}
