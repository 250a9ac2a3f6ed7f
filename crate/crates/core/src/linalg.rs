//! Exact linear algebra on tiny dense matrices.
//!
//! Everything here runs over [`Rat`] and is sized for the ambient
//! dimensions of this crate (2, 3, and one 6-dimensional pairing table),
//! so plain Gaussian elimination without pivot-growth tricks is plenty.

use num::{One, Zero};

use crate::ratio::Rat;

/// Reduced row echelon form, in place. Returns the pivot columns.
pub fn rref(m: &mut [Vec<Rat>]) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    let sub = &f * p;
                    *x = &*x - &sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

/// Rank of a matrix given by rows.
pub fn rank(rows: &[Vec<Rat>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Determinant of a square matrix.
pub fn det(m: &[Vec<Rat>]) -> Rat {
    let n = m.len();
    let mut a = m.to_vec();
    let mut sign = Rat::one();
    let mut prod = Rat::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Rat::zero();
        };
        if p != c {
            a.swap(c, p);
            sign = -sign;
        }
        prod *= a[c][c].clone();
        let inv = a[c][c].recip();
        let pivot_row = a[c].clone();
        for row in a.iter_mut().skip(c + 1) {
            if row[c].is_zero() {
                continue;
            }
            let f = &row[c] * &inv;
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                let sub = &f * p;
                *x = &*x - &sub;
            }
        }
    }
    sign * prod
}

/// Solves `A x = b` where `A` is given by its columns (all of equal
/// length) and the columns are linearly independent. Returns `None` if
/// the system is inconsistent. Panics if the columns are dependent (the
/// callers pre-filter by rank).
pub fn solve_independent(cols: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let m = b.len();
    let n = cols.len();
    debug_assert!(cols.iter().all(|c| c.len() == m));
    // Augmented row-major system [A | b].
    let mut aug: Vec<Vec<Rat>> = (0..m)
        .map(|i| {
            let mut row: Vec<Rat> = cols.iter().map(|c| c[i].clone()).collect();
            row.push(b[i].clone());
            row
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.contains(&n) {
        return None; // pivot in the constant column: inconsistent
    }
    assert_eq!(pivots.len(), n, "solve_independent: dependent columns");
    let mut x = vec![Rat::zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r][n].clone();
    }
    Some(x)
}
