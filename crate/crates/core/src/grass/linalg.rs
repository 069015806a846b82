//! Exact integer linear algebra for the quotient-ring oracle.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type IntMatrix = Vec<Vec<BigInt>>;

/// Diagonalization `U · A · V = D` by unimodular row and column operations.
///
/// Only the column side is recorded: `V` and its inverse. With `rank` nonzero
/// diagonal entries the row space of `A` is spanned by
/// `d_i · (row i of V^{-1})`, `i < rank`.
pub struct Diagonalization {
    pub diagonal: Vec<BigInt>,
    pub rank: usize,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
}

impl Diagonalization {
    /// Invariant factors of `Z^cols / rowspace(A)` that are not units.
    pub fn torsion(&self) -> Vec<BigInt> {
        invariant_factors(&self.diagonal[..self.rank])
            .into_iter()
            .filter(|d| !d.is_one())
            .collect()
    }
}

/// Diagonalizes `rows` (each of length `cols`).
pub fn diagonalize(mut a: IntMatrix, cols: usize) -> Diagonalization {
    let nrows = a.len();
    let mut v = identity(cols);
    let mut v_inv = identity(cols);
    let mut t = 0;
    while t < nrows.min(cols) {
        let Some((pi, pj)) = smallest_entry(&a, t, t) else {
            break;
        };
        a.swap(t, pi);
        swap_cols(&mut a, &mut v, &mut v_inv, t, pj);
        loop {
            let mut clean = true;
            for i in t + 1..nrows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                let (head, tail) = a.split_at_mut(i);
                for (x, p) in tail[0].iter_mut().zip(&head[t]).skip(t) {
                    *x -= &q * p;
                }
                if !a[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                add_col_multiple(&mut a, &mut v, &mut v_inv, j, t, &(-q));
                if !a[t][j].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
            // Move the smallest remaining entry of row/column t to the pivot.
            let mut best: Option<(usize, usize)> = None;
            let mut consider = |i: usize, j: usize, a: &IntMatrix| {
                if a[i][j].is_zero() {
                    return;
                }
                match best {
                    Some((bi, bj)) if a[bi][bj].abs() <= a[i][j].abs() => {}
                    _ => best = Some((i, j)),
                }
            };
            consider(t, t, &a);
            for i in t + 1..nrows {
                consider(i, t, &a);
            }
            for j in t + 1..cols {
                consider(t, j, &a);
            }
            let (bi, bj) = best.expect("pivot row/column cannot be all zero");
            a.swap(t, bi);
            swap_cols(&mut a, &mut v, &mut v_inv, t, bj);
        }
        t += 1;
    }
    let diagonal = (0..t).map(|i| a[i][i].abs()).collect();
    Diagonalization {
        diagonal,
        rank: t,
        v,
        v_inv,
    }
}

fn smallest_entry(a: &IntMatrix, r0: usize, c0: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(r0) {
        for (j, x) in row.iter().enumerate().skip(c0) {
            if x.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if a[bi][bj].abs() <= x.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

fn swap_cols(a: &mut IntMatrix, v: &mut IntMatrix, v_inv: &mut IntMatrix, i: usize, j: usize) {
    if i == j {
        return;
    }
    for row in a.iter_mut().chain(v.iter_mut()) {
        row.swap(i, j);
    }
    v_inv.swap(i, j);
}

// col_j += q col_t on A and V; the inverse picks up row_t -= q row_j.
fn add_col_multiple(a: &mut IntMatrix, v: &mut IntMatrix, v_inv: &mut IntMatrix, j: usize, t: usize, q: &BigInt) {
    for row in a.iter_mut().chain(v.iter_mut()) {
        let delta = q * &row[t];
        row[j] += delta;
    }
    let (row_t, row_j) = if t < j {
        let (lo, hi) = v_inv.split_at_mut(j);
        (&mut lo[t], &hi[0])
    } else {
        let (lo, hi) = v_inv.split_at_mut(t);
        (&mut hi[0], &lo[j])
    };
    for (x, y) in row_t.iter_mut().zip(row_j) {
        *x -= q * y;
    }
}

fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect()
}

/// Normalizes a diagonal to invariant factors `d_1 | d_2 | ...` (zeros dropped).
pub fn invariant_factors(diagonal: &[BigInt]) -> Vec<BigInt> {
    let mut d: Vec<BigInt> = diagonal.iter().filter(|x| !x.is_zero()).map(|x| x.abs()).collect();
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let g = d[i].gcd(&d[j]);
            let l = d[i].lcm(&d[j]);
            d[i] = g;
            d[j] = l;
        }
    }
    d
}

/// `v · M` for a row vector `v`.
pub fn row_times(v: &[BigInt], m: &IntMatrix) -> Vec<BigInt> {
    let cols = m.first().map_or(0, Vec::len);
    let mut out = vec![BigInt::zero(); cols];
    for (x, row) in v.iter().zip(m) {
        if x.is_zero() {
            continue;
        }
        for (o, y) in out.iter_mut().zip(row) {
            *o += x * y;
        }
    }
    out
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn determinant(m: &IntMatrix) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}
