//! Operators on polynomials: Bergeron–Sottile `R_k`, `zeta = 1/(1 - R_1)`,
//! divided differences `∂_k`, trimming `T_k`, and the partial-flag `R^d_k`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{Exponent, Polynomial};

/// `R_k`: `x_i ↦ x_i` for `i < k`, `x_k ↦ 0`, `x_i ↦ x_{i-1}` for `i > k`.
pub fn bergeron_sottile(f: &Polynomial, k: usize) -> Polynomial {
    assert!(k >= 1, "R_k needs k >= 1");
    f.substitute_vars(|i| match i.cmp(&k) {
        std::cmp::Ordering::Less => Some(i),
        std::cmp::Ordering::Equal => None,
        std::cmp::Ordering::Greater => Some(i - 1),
    })
}

/// `f + R_1 f + R_1² f + ...`, stopping at the first zero summand.
///
/// A monomial of positive degree dies after at most `nvars` applications of
/// `R_1`; constants never do, so they are rejected.
pub fn zeta(f: &Polynomial) -> Result<Polynomial> {
    if !f.constant_term().is_zero() {
        return Err(Error::NonzeroConstantTerm);
    }
    let mut total = Polynomial::zero();
    let mut summand = f.clone();
    while !summand.is_zero() {
        total = &total + &summand;
        summand = bergeron_sottile(&summand, 1);
    }
    Ok(total)
}

/// Swaps `x_k` and `x_{k+1}`.
pub fn swap_variables(f: &Polynomial, k: usize) -> Polynomial {
    f.substitute_vars(|i| {
        Some(if i == k {
            k + 1
        } else if i == k + 1 {
            k
        } else {
            i
        })
    })
}

fn power_of(e: &[u32], k: usize) -> u32 {
    e.get(k - 1).copied().unwrap_or(0)
}

fn with_power(e: &[u32], k: usize, p: u32) -> Exponent {
    let mut out = e.to_vec();
    if out.len() < k {
        out.resize(k, 0);
    }
    out[k - 1] = p;
    out
}

/// Exact quotient of `g` by `x_k - x_{k+1}`, by synthetic division in `x_k`.
/// Fails if the remainder is nonzero.
fn div_by_difference(g: &Polynomial, k: usize) -> Result<Polynomial> {
    if g.is_zero() {
        return Ok(Polynomial::zero());
    }
    // coefficients of g as a polynomial in x_k
    let top = g.terms().map(|(e, _)| power_of(e, k)).max().unwrap_or(0) as usize;
    let mut coeffs = vec![Polynomial::zero(); top + 1];
    for (e, c) in g.terms() {
        let a = power_of(e, k) as usize;
        coeffs[a].add_term(with_power(e, k, 0), c.clone());
    }
    let y = Polynomial::var(k + 1);
    // q_{a-1} = c_a + y q_a, from the top down; remainder c_0 + y q_0
    let mut quotient = Polynomial::zero();
    let mut q = Polynomial::zero();
    for a in (1..=top).rev() {
        q = &coeffs[a] + &(&y * &q);
        let shifted = q.map_monomials(|e| Some(with_power(e, k, power_of(e, k) + a as u32 - 1)));
        quotient = &quotient + &shifted;
    }
    let remainder = &coeffs[0] + &(&y * &q);
    if !remainder.is_zero() {
        return Err(Error::Internal(format!(
            "division by x{k} - x{} left remainder {remainder}",
            k + 1
        )));
    }
    Ok(quotient)
}

/// `∂_k f = (f - s_k f) / (x_k - x_{k+1})`.
pub fn divided_difference(f: &Polynomial, k: usize) -> Result<Polynomial> {
    assert!(k >= 1, "∂_k needs k >= 1");
    let numerator = f - &swap_variables(f, k);
    div_by_difference(&numerator, k)
}

/// Exact quotient by the variable `x_k`.
fn div_by_var(g: &Polynomial, k: usize) -> Result<Polynomial> {
    let mut out = Polynomial::zero();
    for (e, c) in g.terms() {
        let p = power_of(e, k);
        if p == 0 {
            return Err(Error::Internal(format!("term of {g} not divisible by x{k}")));
        }
        out.add_term(with_power(e, k, p - 1), c.clone());
    }
    Ok(out)
}

/// `T_k f = (R_{k+1} f - R_k f) / x_k`.
pub fn trimming(f: &Polynomial, k: usize) -> Result<Polynomial> {
    assert!(k >= 1, "T_k needs k >= 1");
    let diff = &bergeron_sottile(f, k + 1) - &bergeron_sottile(f, k);
    div_by_var(&diff, k)
}

/// Value of a polynomial at `x = (1, 1, ...)`; for a character this is the
/// dimension of the module.
pub fn evaluate_all_ones(f: &Polynomial) -> BigInt {
    f.coefficient_sum()
}

/// Ranks `d_1 < d_2 < ... < d_n` of a partial flag, with `d_0 = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RankSequence {
    ranks: Vec<usize>,
}

impl RankSequence {
    pub fn new(ranks: Vec<usize>) -> Result<Self> {
        let ok = ranks.first().is_none_or(|&d| d >= 1) && ranks.windows(2).all(|p| p[0] < p[1]);
        if !ok || ranks.is_empty() {
            return Err(Error::InvalidRankSequence(ranks));
        }
        Ok(RankSequence { ranks })
    }

    /// `d_i = i` for `i = 1..=n`.
    pub fn complete(n: usize) -> Self {
        RankSequence {
            ranks: (1..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// `d_i`, with `d_0 = 0`. Panics past `d_n`.
    pub fn d(&self, i: usize) -> usize {
        if i == 0 {
            0
        } else {
            self.ranks[i - 1]
        }
    }

    /// `d_i` with `d_i = ∞` (`None`) for `i > n`.
    fn d_or_infinite(&self, i: usize) -> Option<usize> {
        if i <= self.ranks.len() {
            Some(self.d(i))
        } else {
            None
        }
    }

    /// Block size `c_i = d_i - d_{i-1}`.
    pub fn c(&self, i: usize) -> usize {
        self.d(i) - self.d(i - 1)
    }

    /// Total rank `d_n`.
    pub fn total(&self) -> usize {
        *self.ranks.last().unwrap()
    }
}

/// `R^d_k` as a substitution: `x_i ↦ x_i` for `i < d_k`, `0` for
/// `d_k <= i < d_{k+1}`, and `x_{i - c_{k+1}}` for `i >= d_{k+1}`.
/// Indices past `d_n` are treated as infinite.
pub fn bergeron_sottile_partial(f: &Polynomial, k: usize, d: &RankSequence) -> Polynomial {
    assert!(k >= 1, "R^d_k needs k >= 1");
    let lo = d.d_or_infinite(k);
    let hi = d.d_or_infinite(k + 1);
    f.substitute_vars(|i| {
        if lo.is_none_or(|lo| i < lo) {
            Some(i)
        } else if hi.is_none_or(|hi| i < hi) {
            None
        } else {
            Some(i - d.c(k + 1))
        }
    })
}
