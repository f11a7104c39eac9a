//! Reference implementations that share no code with the library's
//! algorithms, used as independent oracles.
#![allow(dead_code)]

use std::collections::BTreeMap;

use flagschur::diagram::Diagram;
use flagschur::perm::Permutation;
use flagschur::poly::Polynomial;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

pub fn poly(s: &str) -> Polynomial {
    s.parse().unwrap()
}

pub fn diagram(cols: &[&[usize]]) -> Diagram {
    Diagram::new(cols.iter().map(|c| c.to_vec())).unwrap()
}

/// Schur polynomial `s_λ(x_1..x_n)` as a sum over semistandard tableaux.
pub fn schur_ssyt(shape: &[usize], n: usize) -> Polynomial {
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&l| vec![0; l]).collect();
    let mut out = Polynomial::zero();
    fn fill(idx: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<usize>>, n: usize, out: &mut Polynomial) {
        if idx == cells.len() {
            let mut exp = vec![0u32; n];
            for v in grid.iter().flatten() {
                exp[v - 1] += 1;
            }
            out.add_term(exp, BigInt::from(1));
            return;
        }
        let (r, c) = cells[idx];
        let left = if c > 0 { grid[r][c - 1] } else { 1 };
        let above = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        for v in left.max(above)..=n {
            grid[r][c] = v;
            fill(idx + 1, cells, grid, n, out);
        }
        grid[r][c] = 0;
    }
    fill(0, &cells, &mut grid, n, &mut out);
    out
}

/// Conjugate of a partition: the column lengths of its Young diagram.
pub fn conjugate(shape: &[usize]) -> Vec<usize> {
    let width = shape.first().copied().unwrap_or(0);
    (0..width).map(|c| shape.iter().filter(|&&l| l > c).count()).collect()
}

/// Words `(i_1, ..., i_l)` with `s_{i_1} ⋯ s_{i_l} = w`, `l = ℓ(w)`, found by
/// trying every word of that length.
pub fn permutation_reduced_words(w: &Permutation) -> Vec<Vec<usize>> {
    let n = w.len();
    let len = w.length();
    let mut out = Vec::new();
    if n < 2 {
        if len == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let total = (n - 1).pow(len as u32);
    for code in 0..total {
        let mut word = Vec::with_capacity(len);
        let mut c = code;
        for _ in 0..len {
            word.push(c % (n - 1) + 1);
            c /= n - 1;
        }
        word.reverse();
        let mut v: Vec<usize> = (1..=n).collect();
        for &i in &word {
            v.swap(i - 1, i);
        }
        if v == w.word() {
            out.push(word);
        }
    }
    out.sort();
    out
}

/// Rank by Gaussian elimination over the rationals.
pub fn rational_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| BigRational::from_integer(v.into())).collect())
        .collect();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for i in 0..m.len() {
            if i != rank && !m[i][col].is_zero() {
                let f = &m[i][col] / &m[rank][col];
                let pivot = m[rank].clone();
                for (x, p) in m[i].iter_mut().zip(&pivot).skip(col) {
                    *x -= &f * p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Random polynomials in `x_1..x_max_var` with small coefficients.
pub fn arb_poly(max_var: usize, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0u32..4, max_var), -5i64..=5), 0..=max_terms).prop_map(|terms| {
        let mut p = Polynomial::zero();
        for (exp, c) in terms {
            p.add_term(exp, c.into());
        }
        p
    })
}

/// Partitions with at most `rows` parts, each at most `cols`.
pub fn partitions_in_box(rows: usize, cols: usize) -> Vec<Vec<usize>> {
    fn go(rows: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        if cur.len() == rows {
            return;
        }
        for part in 1..=max {
            cur.push(part);
            go(rows, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(rows, cols, &mut Vec::new(), &mut out);
    out
}

/// Histogram of a word multiset, for comparing term multisets.
pub fn histogram<T: Ord + Clone>(items: &[T]) -> BTreeMap<T, usize> {
    let mut m = BTreeMap::new();
    for it in items {
        *m.entry(it.clone()).or_insert(0) += 1;
    }
    m
}
