//! Exact rank of integer matrices given as sparse rows.
//!
//! [`rank_certified`] projects to a small matrix modulo a Mersenne prime,
//! which can only underestimate the rank, then certifies the estimate by
//! lifting a kernel basis to the rationals and checking it exactly. When the
//! certificate fails it falls back to [`rank_bareiss`].

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A sparse row: `(column, value)` pairs with distinct columns.
pub type SparseRow = Vec<(usize, i64)>;

const P: u64 = (1 << 61) - 1;

fn reduce(v: i64) -> u64 {
    v.rem_euclid(P as i64) as u64
}

fn mul(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn add(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= P {
        s - P
    } else {
        s
    }
}

fn sub(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + P - b
    }
}

fn inv(a: u64) -> u64 {
    // Fermat: a^(p-2)
    let mut result = 1u64;
    let mut base = a;
    let mut e = P - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = mul(result, base);
        }
        base = mul(base, base);
        e >>= 1;
    }
    result
}

/// Rank by fraction-free (Bareiss) elimination over the integers.
pub fn rank_bareiss(rows: &[SparseRow], ncols: usize) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            let mut dense = vec![BigInt::zero(); ncols];
            for &(c, v) in r {
                dense[c] += v;
            }
            dense
        })
        .collect();
    let nrows = m.len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(piv) = (rank..nrows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        let (top, rest) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in rest.iter_mut() {
            let factor = row[col].clone();
            for j in col + 1..ncols {
                let v = &pivot_row[col] * &row[j] - &factor * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Row-reduces `m` in place modulo `P` and returns the pivot columns.
fn rref_mod_p(m: &mut [Vec<u64>], ncols: usize) -> Vec<usize> {
    let nrows = m.len();
    let mut pivots = Vec::new();
    for col in 0..ncols {
        let r = pivots.len();
        if r == nrows {
            break;
        }
        let Some(piv) = (r..nrows).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(r, piv);
        let scale = inv(m[r][col]);
        for v in m[r].iter_mut() {
            *v = mul(*v, scale);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[col] == 0 {
                continue;
            }
            let f = row[col];
            for j in col..ncols {
                row[j] = sub(row[j], mul(f, pivot_row[j]));
            }
        }
        pivots.push(col);
    }
    pivots
}

/// Smallest-height fraction `n / d` congruent to `a` modulo `P`, if one with
/// `|n|, d <= sqrt(P / 2)` exists.
fn rational_reconstruct(a: u64) -> Option<(i128, i128)> {
    let bound = ((P / 2) as f64).sqrt() as i128;
    let (mut r0, mut r1) = (P as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 > bound {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if t1 == 0 || t1.abs() > bound {
        return None;
    }
    let (n, d) = if t1 < 0 { (-r1, -t1) } else { (r1, t1) };
    if n.gcd(&d) != 1 {
        return None;
    }
    Some((n, d))
}

/// Integer vector proportional to a mod-`P` vector, via rational
/// reconstruction of each entry.
fn lift(v: &[u64]) -> Option<Vec<BigInt>> {
    let fracs: Vec<(i128, i128)> = v.iter().map(|&a| rational_reconstruct(a)).collect::<Option<_>>()?;
    let lcm = fracs
        .iter()
        .fold(BigInt::one(), |acc, (_, d)| acc.lcm(&BigInt::from(*d)));
    Some(
        fracs
            .iter()
            .map(|(n, d)| BigInt::from(*n) * (&lcm / BigInt::from(*d)))
            .collect(),
    )
}

fn is_left_kernel_vector(v: &[BigInt], rows: &[SparseRow]) -> bool {
    let mut acc: HashMap<usize, BigInt> = HashMap::new();
    for (coef, row) in v.iter().zip(rows) {
        if coef.is_zero() {
            continue;
        }
        for &(c, x) in row {
            *acc.entry(c).or_default() += coef * x;
        }
    }
    acc.values().all(Zero::is_zero)
}

/// Rank modulo `P` of `A·R` for a seeded random `R`. Never exceeds the
/// rational rank of `A`.
pub fn rank_projected_mod_p(rows: &[SparseRow], ncols: usize, seed: u64) -> usize {
    let b = project(rows, ncols, seed);
    let mut bt = transpose(&b, rows.len());
    rref_mod_p(&mut bt, rows.len()).len()
}

fn project(rows: &[SparseRow], ncols: usize, seed: u64) -> Vec<Vec<u64>> {
    let width = rows.len().min(ncols);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let r: Vec<Vec<u64>> = (0..ncols)
        .map(|_| (0..width).map(|_| rng.gen_range(0..P)).collect())
        .collect();
    rows.iter()
        .map(|row| {
            let mut out = vec![0u64; width];
            for &(c, v) in row {
                let v = reduce(v);
                for (o, &x) in out.iter_mut().zip(&r[c]) {
                    *o = add(*o, mul(v, x));
                }
            }
            out
        })
        .collect()
}

fn transpose(b: &[Vec<u64>], nrows: usize) -> Vec<Vec<u64>> {
    let width = b.first().map_or(0, Vec::len);
    (0..width).map(|t| (0..nrows).map(|i| b[i][t]).collect()).collect()
}

/// Exact rank over the rationals.
pub fn rank_certified(rows: &[SparseRow], ncols: usize, seed: u64) -> usize {
    let nrows = rows.len();
    let nonzero: Vec<&SparseRow> = rows.iter().filter(|r| r.iter().any(|&(_, v)| v != 0)).collect();
    if nonzero.len() <= 1 {
        return nonzero.len();
    }
    let b = project(rows, ncols, seed);
    // left kernel of B is the null space of B^T
    let mut bt = transpose(&b, nrows);
    let pivots = rref_mod_p(&mut bt, nrows);
    let rank = pivots.len();
    if rank == nrows {
        return rank;
    }
    let free: Vec<usize> = (0..nrows).filter(|c| !pivots.contains(c)).collect();
    for &f in &free {
        let mut v = vec![0u64; nrows];
        v[f] = 1;
        for (t, &pc) in pivots.iter().enumerate() {
            v[pc] = sub(0, bt[t][f]);
        }
        let certified = lift(&v).is_some_and(|w| is_left_kernel_vector(&w, rows));
        if !certified {
            return rank_bareiss(rows, ncols);
        }
    }
    rank
}
