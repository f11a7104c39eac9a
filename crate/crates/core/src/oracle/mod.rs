//! Brute-force characters: span the products of minors `Δ_τ` over flagged
//! fillings inside the polynomial ring in the `z_{ij}`, and take exact ranks
//! weight by weight.

mod filling;
mod flag;
mod rank;
mod zpoly;

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use rayon::prelude::*;

use crate::character::{CharacterResult, Method};
use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::operators::RankSequence;
use crate::poly::{Exponent, Polynomial};

pub use filling::{column_fillings, count_fillings, enumerate_fillings, Filling};
pub use flag::FlagBound;
pub use rank::{rank_bareiss, rank_certified, rank_projected_mod_p, SparseRow};
pub use zpoly::{expand_delta, minor, var_id, var_index, ZMonomial, ZPolynomial};

pub const DEFAULT_CAP_FILLINGS: usize = 20_000;
pub const DEFAULT_CAP_TERMS: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// Maximum number of fillings per diagram.
    pub cap_fillings: Option<usize>,
    /// Maximum number of raw terms when expanding one `Δ_τ`.
    pub cap_terms: Option<usize>,
    /// Seed for the random projection in the rank computation. Any seed gives
    /// the exact rank.
    pub seed: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            cap_fillings: Some(DEFAULT_CAP_FILLINGS),
            cap_terms: Some(DEFAULT_CAP_TERMS),
            seed: 0x5eed,
        }
    }
}

/// Exponent vector of the weight of a filling: one `x_b` per entry `b`.
pub fn filling_weight(tau: &Filling) -> Exponent {
    let mut exp = Vec::new();
    for &b in tau.iter().flatten() {
        if exp.len() < b {
            exp.resize(b, 0);
        }
        exp[b - 1] += 1;
    }
    exp
}

fn monomial_weight(m: &ZMonomial) -> Exponent {
    let mut exp = Vec::new();
    for &id in m {
        let (_, j) = var_index(id);
        if exp.len() < j {
            exp.resize(j, 0);
        }
        exp[j - 1] += 1;
    }
    exp
}

/// Character oracle with a shared, thread-safe cache.
#[derive(Default)]
pub struct Oracle {
    config: OracleConfig,
    cache: Mutex<HashMap<(Diagram, FlagBound), Polynomial>>,
}

impl Oracle {
    pub fn new(config: OracleConfig) -> Self {
        Oracle {
            config,
            cache: Mutex::default(),
        }
    }

    pub fn config(&self) -> &OracleConfig {
        &self.config
    }

    /// Character of `E^D` for the flag `fb`.
    pub fn character(&self, d: &Diagram, fb: &FlagBound) -> Result<Polynomial> {
        let key = (d.clone(), fb.clone());
        if let Some(f) = self.cache.lock().unwrap().get(&key) {
            return Ok(f.clone());
        }
        let f = self.compute(d, fb)?;
        self.cache.lock().unwrap().insert(key, f.clone());
        Ok(f)
    }

    /// Character for the standard flag on `max_row(D)` rows.
    pub fn character_standard(&self, d: &Diagram) -> Result<Polynomial> {
        self.character(d, &FlagBound::standard(d.max_row()))
    }

    pub fn character_result(&self, d: &Diagram, fb: &FlagBound) -> Result<CharacterResult> {
        Ok(CharacterResult {
            character: self.character(d, fb)?,
            method: Method::Oracle,
            diagram: d.clone(),
        })
    }

    fn compute(&self, d: &Diagram, fb: &FlagBound) -> Result<Polynomial> {
        let fillings = enumerate_fillings(d, fb, self.config.cap_fillings)?;
        let mut classes: BTreeMap<Exponent, Vec<Filling>> = BTreeMap::new();
        for tau in fillings {
            classes.entry(filling_weight(&tau)).or_default().push(tau);
        }
        let ranks: Vec<(Exponent, usize)> = classes
            .into_par_iter()
            .map(|(weight, taus)| {
                let r = self.class_rank(d, fb, &weight, &taus)?;
                Ok((weight, r))
            })
            .collect::<Result<_>>()?;
        let mut out = Polynomial::zero();
        for (weight, r) in ranks {
            if r > 0 {
                out.add_term(weight, r.into());
            }
        }
        Ok(out)
    }

    /// Rank of the span of `Δ_τ` over one weight class.
    fn class_rank(&self, d: &Diagram, fb: &FlagBound, weight: &Exponent, taus: &[Filling]) -> Result<usize> {
        let mut index: HashMap<ZMonomial, usize> = HashMap::new();
        let mut rows: Vec<SparseRow> = Vec::with_capacity(taus.len());
        for tau in taus {
            let delta = expand_delta(d, tau, fb, self.config.cap_terms)?;
            let mut row = SparseRow::with_capacity(delta.num_terms());
            for (m, &c) in delta.terms() {
                debug_assert_eq!(&monomial_weight(m), weight, "Δ_τ is not a weight vector");
                let next = index.len();
                row.push((*index.entry(m.clone()).or_insert(next), c));
            }
            rows.push(row);
        }
        Ok(rank_certified(&rows, index.len(), self.config.seed))
    }

    /// Character of `ker(R_{k+1} E^D → R_k E^D)` for the flags obtained from
    /// `base` by twisting. Its coefficients must be nonnegative.
    pub fn kernel_character(&self, d: &Diagram, k: usize, base: &FlagBound) -> Result<Polynomial> {
        base.check_fits(d)?;
        let upper = self.character(d, &base.twisted(k + 1))?;
        let lower = self.character(d, &base.twisted(k))?;
        let kernel = &upper - &lower;
        if !kernel.has_nonnegative_coefficients() {
            return Err(Error::Internal(format!(
                "kernel character of {d} at {k} has a negative coefficient: {kernel}"
            )));
        }
        Ok(kernel)
    }
}

/// Whether `Σ sign · Δ_τ` vanishes. Fillings may list entries in any order;
/// a minor then carries the sign of the column permutation.
pub fn check_exchange_identity(terms: &[(i64, Diagram, Filling)], fb: &FlagBound) -> Result<bool> {
    let mut sum = ZPolynomial::zero();
    for (sign, d, tau) in terms {
        fb.check_fits(d)?;
        let lengths_match =
            d.columns().len() == tau.len() && d.columns().iter().zip(tau).all(|(a, b)| a.len() == b.len());
        if !lengths_match {
            return Err(Error::Internal(format!("filling {tau:?} does not match {d}")));
        }
        sum.add_scaled(&expand_delta(d, tau, fb, None)?, *sign);
    }
    Ok(sum.is_zero())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KernelCaseKind {
    /// `k ∉ a`: the projection is an isomorphism.
    Iso,
    /// `{k, k+1} ⊆ a`: the kernel is built on `∧² K_k`.
    Wedge2,
    /// `a ∩ {k, k+1} = {k}`: the kernel is built on `K_k`.
    Linear,
}

/// Single-column kernel data for a partial flag.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KernelCase {
    pub kind: KernelCaseKind,
    /// `C(c_k, 2) · dim R^d_{k+1} E^{a'}` or `c_k · dim R^d_{k+1} E^{a'}` as the
    /// tensor-product description predicts.
    pub predicted_dimension: u128,
    /// Number of `b ≤_{k+1} a` with `d_{k-1} < b_i <= d_k` where `a_i = k`.
    pub generator_count: u128,
}

/// Classifies the kernel of `R^d_{k+1} E^a → R^d_k E^a` for a single column.
pub fn partial_flag_kernel_case(a: &[usize], k: usize, d: &RankSequence) -> Result<KernelCase> {
    if let Some(&row) = a.iter().max() {
        if row > d.len() {
            return Err(Error::DoesNotFit { row, nrows: d.len() });
        }
    }
    if a.windows(2).any(|p| p[0] >= p[1]) || a.contains(&0) {
        return Err(Error::InvalidColumn(a.to_vec()));
    }
    let upper = FlagBound::partial_twisted(d, k + 1);
    let dim_upper = |rows: &[usize]| column_fillings(rows, &upper).len() as u128;
    let without = |drop: &[usize]| -> Vec<usize> { a.iter().copied().filter(|r| !drop.contains(r)).collect() };
    let (kind, predicted_dimension) = if !a.contains(&k) {
        (KernelCaseKind::Iso, 0)
    } else if a.contains(&(k + 1)) {
        let c = d.c(k) as u128;
        (
            KernelCaseKind::Wedge2,
            c * c.saturating_sub(1) / 2 * dim_upper(&without(&[k, k + 1])),
        )
    } else {
        (KernelCaseKind::Linear, d.c(k) as u128 * dim_upper(&without(&[k])))
    };
    let generator_count = match a.iter().position(|&r| r == k) {
        None => 0,
        Some(i) => column_fillings(a, &upper)
            .iter()
            .filter(|b| b[i] > d.d(k - 1) && b[i] <= d.d(k))
            .count() as u128,
    };
    Ok(KernelCase {
        kind,
        predicted_dimension,
        generator_count,
    })
}
