//! Integer row lattices: Hermite normal form, left kernels, membership and
//! coordinates. A lattice is always the row span of some `IntMatrix`.

use crate::matrix::IntMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Row-style Hermite normal form. Returns `(H, U)` with `U * A = H`, `U`
/// unimodular, `H` in row echelon form with positive pivots and the entries
/// above each pivot reduced into `[0, pivot)`. Zero rows sink to the bottom.
pub fn hermite_normal_form(a: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut h = a.clone();
    let mut u = IntMatrix::identity(a.rows());
    let mut r = 0;
    for c in 0..h.cols() {
        if r == h.rows() {
            break;
        }
        loop {
            // smallest |entry| below the water line in this column
            let pivot_row = (r..h.rows())
                .filter(|&i| !h[(i, c)].is_zero())
                .min_by_key(|&i| h[(i, c)].abs());
            let Some(p) = pivot_row else { break };
            h.swap_rows(r, p);
            u.swap_rows(r, p);
            if h[(r, c)].is_negative() {
                h.negate_row(r);
                u.negate_row(r);
            }
            let pivot = h[(r, c)].clone();
            let mut dirty = false;
            for i in r + 1..h.rows() {
                if h[(i, c)].is_zero() {
                    continue;
                }
                let q = -h[(i, c)].div_floor(&pivot);
                h.add_row_multiple(i, r, &q);
                u.add_row_multiple(i, r, &q);
                if !h[(i, c)].is_zero() {
                    dirty = true;
                }
            }
            if !dirty {
                // reduce the entries above the pivot into [0, pivot)
                for i in 0..r {
                    let q = -h[(i, c)].div_floor(&pivot);
                    h.add_row_multiple(i, r, &q);
                    u.add_row_multiple(i, r, &q);
                }
                r += 1;
                break;
            }
        }
    }
    (h, u)
}

/// Pivot columns of an HNF matrix, one per nonzero row, strictly increasing.
pub fn hnf_pivots(h: &IntMatrix) -> Vec<usize> {
    let mut pivots = Vec::new();
    for i in 0..h.rows() {
        match (0..h.cols()).find(|&j| !h[(i, j)].is_zero()) {
            Some(j) => pivots.push(j),
            None => break,
        }
    }
    pivots
}

/// Canonical basis of the row lattice of `a`: HNF with zero rows dropped.
pub fn lattice_basis(a: &IntMatrix) -> IntMatrix {
    let (h, _) = hermite_normal_form(a);
    let pivots = hnf_pivots(&h);
    let rows: Vec<Vec<BigInt>> = (0..pivots.len()).map(|i| h.row_vec(i)).collect();
    IntMatrix::from_row_vectors(a.cols(), &rows)
}

/// Basis of `{ x : x * a = 0 }` as rows, HNF-canonicalized.
pub fn left_kernel(a: &IntMatrix) -> IntMatrix {
    let (h, u) = hermite_normal_form(a);
    let rank = hnf_pivots(&h).len();
    let rows: Vec<Vec<BigInt>> = (rank..a.rows()).map(|i| u.row_vec(i)).collect();
    lattice_basis(&IntMatrix::from_row_vectors(a.rows(), &rows))
}

/// Basis of `{ x : a * x = 0 }` (column vectors returned as rows).
pub fn right_kernel(a: &IntMatrix) -> IntMatrix {
    left_kernel(&a.transpose())
}

/// Canonical representative of `x` modulo the row lattice of `basis`
/// (which must already be in HNF). Two vectors reduce to the same thing
/// exactly when their difference lies in the lattice.
pub fn reduce_mod_lattice(basis: &IntMatrix, pivots: &[usize], x: &[BigInt]) -> Vec<BigInt> {
    assert_eq!(basis.cols(), x.len(), "vector/lattice dimension mismatch");
    let mut out = x.to_vec();
    for (i, &c) in pivots.iter().enumerate() {
        let pivot = &basis[(i, c)];
        let q = out[c].div_floor(pivot);
        if q.is_zero() {
            continue;
        }
        for j in 0..basis.cols() {
            let sub = &q * &basis[(i, j)];
            out[j] -= sub;
        }
    }
    out
}

/// Coordinates `alpha` with `alpha * basis_rows = target`, or `None` when the
/// target is outside the row lattice. `basis` is any generating matrix.
pub fn coordinates_in_row_lattice(basis: &IntMatrix, target: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(basis.cols(), target.len(), "vector/lattice dimension mismatch");
    let (h, u) = hermite_normal_form(basis);
    let pivots = hnf_pivots(&h);
    let mut rem = target.to_vec();
    let mut hcoords = vec![BigInt::zero(); basis.rows()];
    for (i, &c) in pivots.iter().enumerate() {
        let pivot = &h[(i, c)];
        let (q, r) = rem[c].div_rem(pivot);
        if !r.is_zero() {
            return None;
        }
        if q.is_zero() {
            continue;
        }
        for j in 0..h.cols() {
            let sub = &q * &h[(i, j)];
            rem[j] -= sub;
        }
        hcoords[i] = q;
    }
    if rem.iter().any(|e| !e.is_zero()) {
        return None;
    }
    Some(u.vec_mul(&hcoords))
}

/// Whether `x` lies in the row lattice of `basis` (any generating matrix).
pub fn contains(basis: &IntMatrix, x: &[BigInt]) -> bool {
    coordinates_in_row_lattice(basis, x).is_some()
}

/// Basis of `{ x : a * x ∈ row-lattice(allowed) }`, the preimage of a column
/// lattice. `allowed` rows live in `Z^rows(a)`; the result rows live in
/// `Z^cols(a)`. Computed by projecting the kernel of the stacked system
/// `a * x - allowed^T * y = 0`.
pub fn preimage_lattice(a: &IntMatrix, allowed: &IntMatrix) -> IntMatrix {
    assert_eq!(a.rows(), allowed.cols(), "ambient dimension mismatch");
    let n = a.cols();
    let k = allowed.rows();
    // stacked: rows = a.rows(), cols = n + k
    let mut stacked = IntMatrix::zero(a.rows(), n + k);
    for i in 0..a.rows() {
        for j in 0..n {
            stacked[(i, j)] = a[(i, j)].clone();
        }
        for j in 0..k {
            stacked[(i, n + j)] = -allowed[(j, i)].clone();
        }
    }
    let ker = right_kernel(&stacked);
    let rows: Vec<Vec<BigInt>> = (0..ker.rows())
        .map(|i| ker.row(i)[..n].to_vec())
        .collect();
    lattice_basis(&IntMatrix::from_row_vectors(n, &rows))
}
