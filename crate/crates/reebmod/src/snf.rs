//! Smith normal form over the integers.
//!
//! The pivot rule is fixed (smallest absolute nonzero entry, row-major
//! tie-break) so the decomposition is reproducible run to run.

use crate::matrix::IntMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// `U * A * V = D` with `U`, `V` unimodular and `D` diagonal whose nonzero
/// entries are positive and divisibility-chained.
#[derive(Clone, Debug)]
pub struct SnfResult {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub rank: usize,
    pub invariant_factors: Vec<BigInt>,
}

/// Smallest-|entry| pivot in the trailing submatrix starting at `(t, t)`,
/// scanning row-major so ties resolve deterministically.
fn find_pivot(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    let mut best_abs = BigInt::zero();
    for i in t..d.rows() {
        for j in t..d.cols() {
            let e = &d[(i, j)];
            if e.is_zero() {
                continue;
            }
            let a = e.abs();
            if best.is_none() || a < best_abs {
                best = Some((i, j));
                best_abs = a;
            }
        }
    }
    best
}

pub fn smith_normal_form(a: &IntMatrix) -> SnfResult {
    let (rows, cols) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let steps = rows.min(cols);

    let mut t = 0;
    while t < steps {
        if find_pivot(&d, t).is_none() {
            break;
        }
        loop {
            let (pi, pj) = find_pivot(&d, t).expect("pivot vanished");
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);
            if d[(t, t)].is_negative() {
                d.negate_row(t);
                u.negate_row(t);
            }

            let pivot = d[(t, t)].clone();

            // Clear the pivot column; euclidean quotients leave remainders
            // strictly smaller than the pivot.
            let mut reduced = false;
            for i in t + 1..rows {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = -d[(i, t)].div_floor(&pivot);
                d.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                if !d[(i, t)].is_zero() {
                    reduced = true;
                }
            }
            if reduced {
                continue; // a smaller entry appeared below; re-pivot
            }

            let mut col_reduced = false;
            for j in t + 1..cols {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = -d[(t, j)].div_floor(&pivot);
                d.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                if !d[(t, j)].is_zero() {
                    col_reduced = true;
                }
            }
            if col_reduced {
                continue;
            }

            // Pivot clears its row and column. Enforce divisibility into the
            // remaining block: drag a non-divisible entry onto row t.
            let offender = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !(&d[(i, j)] % &pivot).is_zero());
            match offender {
                Some((i, _)) => {
                    let one = BigInt::from(1);
                    d.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        t += 1;
    }

    let rank = t;
    let invariant_factors = (0..rank).map(|i| d[(i, i)].clone()).collect();
    SnfResult {
        u,
        d,
        v,
        rank,
        invariant_factors,
    }
}
