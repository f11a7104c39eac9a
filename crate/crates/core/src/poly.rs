//! Sparse multivariate polynomials over the integers.
//!
//! Terms are stored as a map from exponent vectors to nonzero
//! arbitrary-precision coefficients. Exponent vectors are positional
//! (`exp[i]` is the power of `x_{i+1}`) with trailing zeros trimmed, so two
//! equal polynomials always have identical term maps.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

pub type Exponent = Vec<u32>;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Exponent, BigInt>,
}

fn trim(mut exp: Exponent) -> Exponent {
    while exp.last() == Some(&0) {
        exp.pop();
    }
    exp
}

/// Graded order: higher total degree first, then lexicographically larger
/// exponent vectors first.
pub fn graded_lex_desc(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    db.cmp(&da).then_with(|| {
        let n = a.len().max(b.len());
        for i in 0..n {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            if x != y {
                return y.cmp(&x);
            }
        }
        Ordering::Equal
    })
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(BigInt::one())
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> Self {
        Polynomial::monomial(Vec::new(), c)
    }

    /// The variable `x_i`, `i >= 1`.
    pub fn var(i: usize) -> Self {
        assert!(i >= 1, "variables are indexed from 1");
        let mut exp = vec![0; i];
        exp[i - 1] = 1;
        Polynomial::monomial(exp, 1)
    }

    pub fn monomial<C: Into<BigInt>>(exp: Exponent, coeff: C) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(exp, coeff.into());
        p
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponent, C)>,
        C: Into<BigInt>,
    {
        let mut p = Polynomial::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// Adds `coeff * x^exp` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, exp: Exponent, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let exp = trim(exp);
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
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

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exp: &[u32]) -> BigInt {
        self.terms.get(&trim(exp.to_vec())).cloned().unwrap_or_default()
    }

    /// Smallest `n` such that the support lies in `x_1..x_n`.
    pub fn nvars(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coefficient(&[])
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous_of_degree(&self, d: u32) -> bool {
        self.terms.keys().all(|e| e.iter().sum::<u32>() == d)
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Value at `x_1 = x_2 = ... = 1`.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn scale<C: Into<BigInt>>(&self, c: C) -> Polynomial {
        let c = c.into();
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * &c)).collect(),
        }
    }

    /// Applies a map on monomials termwise and merges the results. The map
    /// returns `None` to kill a term.
    pub fn map_monomials<F>(&self, mut f: F) -> Polynomial
    where
        F: FnMut(&[u32]) -> Option<Exponent>,
    {
        let mut out = Polynomial::zero();
        for (e, c) in &self.terms {
            if let Some(e2) = f(e) {
                out.add_term(e2, c.clone());
            }
        }
        out
    }

    /// Substitution where each `x_i` goes to some `x_j` or to 0.
    /// `sigma(i)` returns the target index (1-based) or `None` for 0.
    pub fn substitute_vars<F>(&self, sigma: F) -> Polynomial
    where
        F: Fn(usize) -> Option<usize>,
    {
        self.map_monomials(|e| {
            let mut out: Exponent = Vec::new();
            for (i, &p) in e.iter().enumerate() {
                if p == 0 {
                    continue;
                }
                let j = sigma(i + 1)?;
                if out.len() < j {
                    out.resize(j, 0);
                }
                out[j - 1] += p;
            }
            Some(out)
        })
    }

    /// Terms in canonical output order.
    pub fn sorted_terms(&self) -> Vec<(&Exponent, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| graded_lex_desc(a.0, b.0));
        v
    }

    /// JSON form `[{"exp":[2,1,0],"coeff":1}, ...]` with exponent vectors
    /// padded to `max(nvars, self.nvars())`.
    pub fn to_json_padded(&self, nvars: usize) -> Value {
        let n = nvars.max(self.nvars());
        let terms: Vec<Value> = self
            .sorted_terms()
            .into_iter()
            .map(|(e, c)| {
                let mut exp = e.clone();
                exp.resize(n, 0);
                let coeff = match c.to_i64() {
                    Some(v) => json!(v),
                    None => json!(c.to_string()),
                };
                json!({ "exp": exp, "coeff": coeff })
            })
            .collect();
        Value::Array(terms)
    }

    pub fn to_json(&self) -> Value {
        self.to_json_padded(0)
    }

    pub fn from_json(v: &Value) -> Result<Polynomial> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Parse("polynomial JSON must be an array".into()))?;
        let mut p = Polynomial::zero();
        for t in arr {
            let exp = t
                .get("exp")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Parse("term without \"exp\"".into()))?
                .iter()
                .map(|x| {
                    x.as_u64()
                        .and_then(|x| u32::try_from(x).ok())
                        .ok_or_else(|| Error::Parse(format!("bad exponent {x}")))
                })
                .collect::<Result<Exponent>>()?;
            let coeff = match t.get("coeff") {
                Some(Value::Number(n)) => n
                    .as_i64()
                    .map(BigInt::from)
                    .ok_or_else(|| Error::Parse(format!("bad coefficient {n}")))?,
                Some(Value::String(s)) => s
                    .parse::<BigInt>()
                    .map_err(|_| Error::Parse(format!("bad coefficient {s:?}")))?,
                _ => return Err(Error::Parse("term without \"coeff\"".into())),
            };
            p.add_term(exp, coeff);
        }
        Ok(p)
    }
}

fn fmt_monomial(e: &[u32]) -> String {
    let factors: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &p)| p > 0)
        .map(|(i, &p)| {
            if p == 1 {
                format!("x{}", i + 1)
            } else {
                format!("x{}^{}", i + 1, p)
            }
        })
        .collect();
    factors.join("*")
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let mag = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono = fmt_monomial(e);
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    /// Parses the text form produced by `Display`, e.g. `x1^2*x2 - 2*x3 + 1`.
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut p = Polynomial::zero();
        let mut rest = s.as_str();
        while !rest.is_empty() {
            let (negative, body) = match rest.as_bytes()[0] {
                b'-' => (true, &rest[1..]),
                b'+' => (false, &rest[1..]),
                _ => (false, rest),
            };
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let term = &body[..end];
            rest = &body[end..];
            if term.is_empty() {
                return Err(Error::Parse(format!("empty term in {s:?}")));
            }
            let mut coeff = BigInt::one();
            let mut exp: Exponent = Vec::new();
            for factor in term.split('*') {
                if let Some(var) = factor.strip_prefix('x') {
                    let (idx, pow) = match var.split_once('^') {
                        Some((i, p)) => (i, p),
                        None => (var, "1"),
                    };
                    let idx: usize = idx
                        .parse()
                        .ok()
                        .filter(|&i| i >= 1)
                        .ok_or_else(|| Error::Parse(format!("bad variable {factor:?}")))?;
                    let pow: u32 = pow.parse().map_err(|_| Error::Parse(format!("bad power {factor:?}")))?;
                    if exp.len() < idx {
                        exp.resize(idx, 0);
                    }
                    exp[idx - 1] += pow;
                } else {
                    let c: BigInt = factor
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad coefficient {factor:?}")))?;
                    coeff *= c;
                }
            }
            if negative {
                coeff = -coeff;
            }
            p.add_term(exp, coeff);
        }
        Ok(p)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.scale(-1)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let n = e1.len().max(e2.len());
                let e: Exponent = (0..n)
                    .map(|i| e1.get(i).copied().unwrap_or(0) + e2.get(i).copied().unwrap_or(0))
                    .collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;

            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        iter.fold(Polynomial::zero(), |acc, p| &acc + &p)
    }
}
