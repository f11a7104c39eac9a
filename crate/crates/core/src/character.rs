//! Characters of flagged Schur modules by the descent recursion, by reduced
//! words, and Schubert polynomials by divided differences.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagram::{Classifier, Diagram};
use crate::error::{Error, Result};
use crate::operators::{bergeron_sottile, divided_difference, trimming, zeta};
use crate::perm::Permutation;
use crate::poly::Polynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Recursion,
    #[serde(rename = "redwords")]
    ReducedWords,
    #[serde(rename = "dd")]
    DividedDifference,
    Oracle,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Recursion => "recursion",
            Method::ReducedWords => "redwords",
            Method::DividedDifference => "dd",
            Method::Oracle => "oracle",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterResult {
    pub character: Polynomial,
    pub method: Method,
    pub diagram: Diagram,
}

/// `Σ x_{b_1} ⋯ x_{b_r}` over strictly increasing `b` with `b_i <= a_i`.
pub fn single_column_character(a: &[usize]) -> Polynomial {
    fn go(a: &[usize], lower: usize, exp: &mut Vec<u32>, out: &mut Polynomial) {
        let Some((&top, rest)) = a.split_first() else {
            out.add_term(exp.clone(), 1.into());
            return;
        };
        for b in lower..=top {
            if exp.len() < b {
                exp.resize(b, 0);
            }
            exp[b - 1] += 1;
            go(rest, b + 1, exp, out);
            exp[b - 1] -= 1;
        }
    }
    let mut out = Polynomial::zero();
    go(a, 1, &mut Vec::new(), &mut out);
    out
}

/// `x_k · R_{k+1}(f)`.
fn descent_term(f: &Polynomial, k: usize) -> Polynomial {
    &Polynomial::var(k) * &bergeron_sottile(f, k + 1)
}

/// Memoized evaluator for the descent recursion. Not shared across threads;
/// make one per worker.
#[derive(Default)]
pub struct RecursionEngine {
    classifier: Classifier,
    memo: HashMap<Diagram, Polynomial>,
}

impl RecursionEngine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn classifier(&mut self) -> &mut Classifier {
        &mut self.classifier
    }

    /// `𝔖_D = zeta(Σ_{k ∈ Des(D)} x_k R_{k+1} 𝔖_{s_k D})`, with single columns
    /// as base cases. Requires `D` translucent.
    pub fn character(&mut self, d: &Diagram) -> Result<Polynomial> {
        if !self.classifier.classify(d).translucent {
            return Err(Error::NotTranslucent);
        }
        Ok(self.eval(d))
    }

    fn eval(&mut self, d: &Diagram) -> Polynomial {
        match d.columns() {
            [] => return Polynomial::one(),
            [c] => return single_column_character(c.rows()),
            _ => {}
        }
        if let Some(f) = self.memo.get(d) {
            return f.clone();
        }
        let mut sum = Polynomial::zero();
        for k in d.descent_set() {
            let child = d.apply_s_k(k).expect("descent");
            sum = &sum + &descent_term(&self.eval(&child), k);
        }
        let f = zeta(&sum).expect("descent terms have no constant part");
        self.memo.insert(d.clone(), f.clone());
        f
    }
}

pub fn character_recursive(d: &Diagram) -> Result<CharacterResult> {
    let character = RecursionEngine::new().character(d)?;
    Ok(CharacterResult {
        character,
        method: Method::Recursion,
        diagram: d.clone(),
    })
}

/// Sum over reduced words `(i_1, ..., i_l)` of
/// `Z x_{i_l} R_{i_l+1} ⋯ Z x_{i_1} R_{i_1+1} (1)`. Requires `D` transparent.
pub fn character_via_reduced_words(d: &Diagram) -> Result<CharacterResult> {
    if !d.classify().transparent {
        return Err(Error::NotTransparent);
    }
    let words = d.reduced_words(None)?;
    // words are sorted, so consecutive ones share prefixes; stack[j] holds the
    // value after the first j letters
    let mut stack = vec![Polynomial::one()];
    let mut prev: &[usize] = &[];
    let mut character = Polynomial::zero();
    for w in &words {
        let common = prev.iter().zip(w).take_while(|(a, b)| a == b).count();
        stack.truncate(common + 1);
        for &i in &w[common..] {
            let top = stack.last().unwrap();
            stack.push(zeta(&descent_term(top, i))?);
        }
        character = &character + stack.last().unwrap();
        prev = w;
    }
    Ok(CharacterResult {
        character,
        method: Method::ReducedWords,
        diagram: d.clone(),
    })
}

/// `x_1^{n-1} x_2^{n-2} ⋯ x_{n-1}`.
pub fn staircase(n: usize) -> Polynomial {
    let exp: Vec<u32> = (1..n).map(|i| (n - i) as u32).collect();
    Polynomial::monomial(exp, 1)
}

/// Ascents `k_1, k_2, ...` with `w s_{k_1} s_{k_2} ⋯ = w_0`, always taking the
/// smallest available ascent.
pub fn path_to_longest(w: &Permutation) -> Vec<usize> {
    let mut v = w.clone();
    let mut path = Vec::new();
    while let Some(k) = (1..v.len()).find(|&k| v.apply(k) < v.apply(k + 1)) {
        path.push(k);
        v = v.mul_simple(k);
    }
    path
}

/// `𝔖_w` from the staircase, applying `∂` along the reverse of an ascent path
/// from `w` to the longest element. Fails if `path` is not such a path.
pub fn schubert_along_path(w: &Permutation, path: &[usize]) -> Result<Polynomial> {
    let n = w.len();
    let mut v = w.clone();
    for &k in path {
        if k == 0 || k >= n || v.apply(k) > v.apply(k + 1) {
            return Err(Error::Internal(format!("{path:?} is not an ascent path from {w}")));
        }
        v = v.mul_simple(k);
    }
    if v != Permutation::longest(n) {
        return Err(Error::Internal(format!("{path:?} does not reach the longest element")));
    }
    let mut f = staircase(n);
    for &k in path.iter().rev() {
        f = divided_difference(&f, k)?;
    }
    Ok(f)
}

pub fn schubert_divided_difference(w: &Permutation) -> Polynomial {
    schubert_along_path(w, &path_to_longest(w)).expect("smallest-ascent path is valid")
}

/// `𝔖_w = zeta(Σ_{k ∈ Des(w)} x_k R_{k+1} 𝔖_{w s_k})`, `𝔖_id = 1`.
pub fn schubert_nst(w: &Permutation) -> Polynomial {
    fn go(w: &Permutation, memo: &mut HashMap<Permutation, Polynomial>) -> Polynomial {
        if w.is_identity() {
            return Polynomial::one();
        }
        if let Some(f) = memo.get(w) {
            return f.clone();
        }
        let mut sum = Polynomial::zero();
        for k in w.descents() {
            sum = &sum + &descent_term(&go(&w.mul_simple(k), memo), k);
        }
        let f = zeta(&sum).expect("no constant term");
        memo.insert(w.clone(), f.clone());
        f
    }
    go(w, &mut HashMap::new())
}

/// Checks `𝔖_D = R_1 𝔖_D + Σ_{k ∈ Des(D)} x_k R_{k+1} 𝔖_{s_k D}` with
/// characters supplied by `char_of`. Requires `D` clear.
pub fn verify_recursion_identity<F>(d: &Diagram, mut char_of: F) -> Result<bool>
where
    F: FnMut(&Diagram) -> Result<Polynomial>,
{
    if !d.is_clear() {
        return Err(Error::NotClear);
    }
    let lhs = char_of(d)?;
    let mut rhs = bergeron_sottile(&lhs, 1);
    for k in d.descent_set() {
        let child = char_of(&d.apply_s_k(k)?)?;
        rhs = &rhs + &descent_term(&child, k);
    }
    Ok(lhs == rhs)
}

/// Trimming law at `k`: `T_k 𝔖_D = R_{k+1} 𝔖_{s_k D}` at a descent and
/// `T_k 𝔖_D = 0` when `D` is `k`-full. Returns `None` when neither applies.
pub fn trimming_law_holds<F>(d: &Diagram, k: usize, mut char_of: F) -> Result<Option<bool>>
where
    F: FnMut(&Diagram) -> Result<Polynomial>,
{
    if d.descent_at(k).is_some() {
        let lhs = trimming(&char_of(d)?, k)?;
        let child = char_of(&d.apply_s_k(k)?)?;
        Ok(Some(lhs == bergeron_sottile(&child, k + 1)))
    } else if d.is_k_full(k) {
        Ok(Some(trimming(&char_of(d)?, k)?.is_zero()))
    } else {
        Ok(None)
    }
}

/// Divided-difference law at `k`: `∂_k 𝔖_D = 𝔖_{s_k D}` at a descent and `0`
/// otherwise. Holds for Rothe diagrams; can fail for other diagrams.
pub fn divided_difference_law_holds<F>(d: &Diagram, k: usize, mut char_of: F) -> Result<bool>
where
    F: FnMut(&Diagram) -> Result<Polynomial>,
{
    let lhs = divided_difference(&char_of(d)?, k)?;
    if d.descent_at(k).is_some() {
        Ok(lhs == char_of(&d.apply_s_k(k)?)?)
    } else {
        Ok(lhs.is_zero())
    }
}
