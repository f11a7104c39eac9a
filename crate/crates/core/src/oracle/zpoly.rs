use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::fmt;

use smallvec::SmallVec;

use crate::diagram::Diagram;
use crate::error::{Error, Result};

use super::filling::Filling;
use super::flag::FlagBound;

const COLS: u16 = 64;

/// Sorted multiset of variables `z_{ij}`, each encoded as `i * 64 + j`.
pub type ZMonomial = SmallVec<[u16; 16]>;

pub fn var_id(i: usize, j: usize) -> u16 {
    assert!(j < COLS as usize && i < 1024, "z_{{{i},{j}}} out of range");
    (i as u16) * COLS + j as u16
}

/// `(i, j)` of an encoded variable.
pub fn var_index(id: u16) -> (usize, usize) {
    ((id / COLS) as usize, (id % COLS) as usize)
}

/// Sparse polynomial in the matrix entries `z_{ij}`.
///
/// Coefficients are `i64`. A coefficient of a product of minors is bounded by
/// the number of raw product terms, which the caller caps well below the
/// overflow threshold; arithmetic is checked anyway.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ZPolynomial {
    terms: HashMap<ZMonomial, i64>,
}

impl ZPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        let mut p = Self::zero();
        p.add_term(ZMonomial::new(), 1);
        p
    }

    pub fn var(i: usize, j: usize) -> Self {
        let mut p = Self::zero();
        p.add_term(SmallVec::from_slice(&[var_id(i, j)]), 1);
        p
    }

    /// Builds a polynomial from `(coefficient, [(i, j), ...])` pairs.
    pub fn from_terms<I, V>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, V)>,
        V: IntoIterator<Item = (usize, usize)>,
    {
        let mut p = Self::zero();
        for (c, vars) in terms {
            let mut m: ZMonomial = vars.into_iter().map(|(i, j)| var_id(i, j)).collect();
            m.sort_unstable();
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: ZMonomial, c: i64) {
        if c == 0 {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let v = e.get().checked_add(c).expect("z-coefficient overflow");
                if v == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ZMonomial, &i64)> {
        self.terms.iter()
    }

    pub fn add_scaled(&mut self, other: &ZPolynomial, c: i64) {
        for (m, v) in &other.terms {
            self.add_term(m.clone(), v.checked_mul(c).expect("z-coefficient overflow"));
        }
    }

    pub fn mul(&self, other: &ZPolynomial) -> ZPolynomial {
        let mut out = ZPolynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(merge(m1, m2), c1.checked_mul(*c2).expect("z-coefficient overflow"));
            }
        }
        out
    }
}

fn merge(a: &ZMonomial, b: &ZMonomial) -> ZMonomial {
    let mut out = ZMonomial::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] <= b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

impl fmt::Display for ZPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort();
        for (n, (m, c)) in terms.into_iter().enumerate() {
            if n > 0 {
                f.write_str(if *c < 0 { " - " } else { " + " })?;
            } else if *c < 0 {
                f.write_str("-")?;
            }
            let vars: Vec<String> = m
                .iter()
                .map(|&id| {
                    let (i, j) = var_index(id);
                    format!("z{i}_{j}")
                })
                .collect();
            match (c.unsigned_abs(), vars.is_empty()) {
                (a, true) => write!(f, "{a}")?,
                (1, false) => write!(f, "{}", vars.join("*"))?,
                (a, false) => write!(f, "{a}*{}", vars.join("*"))?,
            }
        }
        Ok(())
    }
}

/// Leibniz terms of the minor on `rows × cols`, skipping entries `z_{ij}`
/// with `j > bound(i)`. Both index lists must be strictly increasing.
pub fn minor(rows: &[usize], cols: &[usize], fb: &FlagBound) -> ZPolynomial {
    assert_eq!(rows.len(), cols.len(), "minor must be square");
    fn go(
        rows: &[usize],
        cols: &[usize],
        fb: &FlagBound,
        used: &mut Vec<bool>,
        cur: &mut ZMonomial,
        sign: i64,
        out: &mut ZPolynomial,
    ) {
        let t = cur.len();
        if t == rows.len() {
            let mut m = cur.clone();
            m.sort_unstable();
            out.add_term(m, sign);
            return;
        }
        let i = rows[t];
        for (s, &j) in cols.iter().enumerate() {
            if used[s] || j > fb.bound(i) {
                continue;
            }
            // columns already taken to the right of s are inversions
            let flips = used[s + 1..].iter().filter(|&&u| u).count();
            let sign = if flips % 2 == 0 { sign } else { -sign };
            used[s] = true;
            cur.push(var_id(i, j));
            go(rows, cols, fb, used, cur, sign, out);
            cur.pop();
            used[s] = false;
        }
    }
    let mut out = ZPolynomial::zero();
    go(
        rows,
        cols,
        fb,
        &mut vec![false; cols.len()],
        &mut ZMonomial::new(),
        1,
        &mut out,
    );
    out
}

/// `Δ_τ`, the product over columns of the minors with rows `a^{(j)}` and
/// columns `b^{(j)}` in the zero-patterned matrix.
///
/// Fails with `TooLarge` when the product of the minors' term counts exceeds
/// `cap_terms`.
pub fn expand_delta(d: &Diagram, tau: &Filling, fb: &FlagBound, cap_terms: Option<usize>) -> Result<ZPolynomial> {
    if tau.len() != d.num_columns() {
        return Err(Error::Internal("filling does not match the diagram".into()));
    }
    let minors: Vec<ZPolynomial> = d
        .columns()
        .iter()
        .zip(tau)
        .map(|(a, b)| minor(a.rows(), b, fb))
        .collect();
    if minors.iter().any(ZPolynomial::is_zero) {
        return Ok(ZPolynomial::zero());
    }
    let raw = minors
        .iter()
        .fold(1u128, |acc, m| acc.saturating_mul(m.num_terms() as u128));
    if let Some(cap) = cap_terms {
        if raw > cap as u128 {
            return Err(Error::TooLarge(format!(
                "expansion of {raw} terms exceeds the cap of {cap}"
            )));
        }
    }
    let mut out = ZPolynomial::one();
    for m in &minors {
        out = out.mul(m);
    }
    Ok(out)
}
