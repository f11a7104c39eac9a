use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::operators::RankSequence;

/// Largest column index allowed in each row of the matrix `Z`: the entry
/// `z_{ij}` exists only for `j <= bound(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FlagBound {
    bounds: Vec<usize>,
}

impl FlagBound {
    /// `bounds[i - 1] = bound(i)`; must be weakly increasing.
    pub fn from_bounds(bounds: Vec<usize>) -> Result<Self> {
        if bounds.windows(2).any(|p| p[0] > p[1]) {
            return Err(Error::Parse(format!(
                "flag bounds must be weakly increasing: {bounds:?}"
            )));
        }
        Ok(FlagBound { bounds })
    }

    /// `bound(i) = i`.
    pub fn standard(n: usize) -> Self {
        FlagBound {
            bounds: (1..=n).collect(),
        }
    }

    /// `R_k` applied to the standard flag: `bound(i) = i` for `i < k`, `i - 1`
    /// for `i >= k`.
    pub fn r_k(n: usize, k: usize) -> Self {
        FlagBound::standard(n).twisted(k)
    }

    /// `bound(i) = d_i`.
    pub fn partial(d: &RankSequence) -> Self {
        FlagBound {
            bounds: d.ranks().to_vec(),
        }
    }

    /// `bound(i) = d_i` for `i < k`, `d_{i-1}` for `i >= k`.
    pub fn partial_twisted(d: &RankSequence, k: usize) -> Self {
        FlagBound::partial(d).twisted(k)
    }

    /// `bound(i) = n` for all rows.
    pub fn unflagged(n: usize) -> Self {
        FlagBound { bounds: vec![n; n] }
    }

    /// The flag `E_i` for `i < k`, `E_{i-1}` for `i >= k`, with `E_0 = 0`.
    pub fn twisted(&self, k: usize) -> Self {
        let bounds = (1..=self.nrows())
            .map(|i| if i < k { self.bound(i) } else { self.bound(i - 1) })
            .collect();
        FlagBound { bounds }
    }

    pub fn nrows(&self) -> usize {
        self.bounds.len()
    }

    /// `bound(i)` for `1 <= i <= nrows`, and `bound(0) = 0`.
    pub fn bound(&self, i: usize) -> usize {
        if i == 0 {
            0
        } else {
            self.bounds[i - 1]
        }
    }

    pub fn bounds(&self) -> &[usize] {
        &self.bounds
    }

    /// Number of variables `x_1, ..., x_m` the characters live in.
    pub fn ncols(&self) -> usize {
        self.bounds.last().copied().unwrap_or(0)
    }

    pub fn check_fits(&self, d: &Diagram) -> Result<()> {
        let row = d.max_row();
        if row > self.nrows() {
            return Err(Error::DoesNotFit {
                row,
                nrows: self.nrows(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for FlagBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.bounds)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twists() {
        assert_eq!(FlagBound::r_k(5, 3).bounds(), &[1, 2, 2, 3, 4]);
        assert_eq!(FlagBound::r_k(3, 4), FlagBound::standard(3));
        let d = RankSequence::new(vec![1, 2, 5, 6, 7]).unwrap();
        assert_eq!(FlagBound::partial_twisted(&d, 3).bounds(), &[1, 2, 2, 5, 6]);
        assert_eq!(FlagBound::partial_twisted(&d, 1).bounds(), &[0, 1, 2, 5, 6]);
    }

    #[test]
    fn bounds_must_increase() {
        assert!(FlagBound::from_bounds(vec![2, 1]).is_err());
        assert!(FlagBound::from_bounds(vec![0, 1, 1]).is_ok());
    }
}
