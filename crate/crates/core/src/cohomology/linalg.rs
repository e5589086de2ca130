//! Exact Gauss-Jordan elimination over the rationals.

use itertools::Itertools;
use num_traits::{One, Zero};

use crate::series::Rational;

/// One solution of `matrix · x = rhs` with all free variables set to zero, or `None`
/// when the system is inconsistent.
pub(crate) fn solve(matrix: &[Vec<Rational>], rhs: &[Rational], cols: usize) -> Option<Vec<Rational>> {
    let rows = matrix.len();
    let mut aug: Vec<Vec<Rational>> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !aug[i][c].is_zero()) else {
            continue;
        };
        aug.swap(r, p);
        let inv = Rational::one() / &aug[r][c];
        for v in aug[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = aug[r].clone();
        for (i, row) in aug.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (v, p) in row[c..=cols].iter_mut().zip(&pivot_row[c..=cols]) {
                    *v -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if aug[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = aug[i][cols].clone();
    }
    Some(x)
}

/// A solution of `matrix · x = rhs` with the fewest nonzero entries; ties are broken by
/// the lexicographically first support in column order.
pub(crate) fn solve_min_support(
    matrix: &[Vec<Rational>],
    rhs: &[Rational],
    cols: usize,
) -> Option<Vec<Rational>> {
    let full = solve(matrix, rhs, cols)?;
    if rhs.iter().all(Zero::is_zero) {
        return Some(vec![Rational::zero(); cols]);
    }
    for size in 1..cols {
        for support in (0..cols).combinations(size) {
            let sub: Vec<Vec<Rational>> = matrix
                .iter()
                .map(|row| support.iter().map(|&c| row[c].clone()).collect())
                .collect();
            if let Some(y) = solve(&sub, rhs, size) {
                let mut x = vec![Rational::zero(); cols];
                for (&c, v) in support.iter().zip(y) {
                    x[c] = v;
                }
                return Some(x);
            }
        }
    }
    Some(full)
}
