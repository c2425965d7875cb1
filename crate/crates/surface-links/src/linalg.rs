//! Exact integer linear algebra for small symmetric forms.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Determinant by fraction-free Bareiss elimination.
pub fn det(mat: &[Vec<BigInt>]) -> BigInt {
    let n = mat.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = mat.to_vec();
    let mut sign = 1i8;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        let pivot_row = a[k].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &pivot_row[k] - &a[i][k] * &pivot_row[j]) / &prev;
            }
        }
        prev = pivot_row[k].clone();
    }
    let d = std::mem::take(&mut a[n - 1][n - 1]);
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Inertia of a symmetric bilinear form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Inertia {
    pub pos: usize,
    pub neg: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.pos as i64 - self.neg as i64
    }

    pub fn rank(&self) -> usize {
        self.pos + self.neg
    }
}

/// Inertia by congruence (symmetric Schur complements) over the rationals.
pub fn inertia(mat: &[Vec<BigInt>]) -> Inertia {
    let n = mat.len();
    let mut a: Vec<Vec<BigRational>> = mat
        .iter()
        .map(|row| row.iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect();
    debug_assert!(a.iter().all(|r| r.len() == n));
    debug_assert!((0..n).all(|i| (0..n).all(|j| a[i][j] == a[j][i])));
    let mut out = Inertia { pos: 0, neg: 0, zero: 0 };
    let mut k = 0;
    while k < n {
        if a[k][k].is_zero() {
            if let Some(i) = (k + 1..n).find(|&i| !a[i][i].is_zero()) {
                swap_sym(&mut a, k, i);
            } else if let Some((i, j)) = (k..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !a[i][j].is_zero())
            {
                // diagonal vanishes on the active block: mix basis vector j
                // into i, making a[i][i] = 2 a[i][j] nonzero
                add_sym(&mut a, i, j);
                if i != k {
                    swap_sym(&mut a, k, i);
                }
            } else {
                out.zero += n - k;
                break;
            }
        }
        let piv = a[k][k].clone();
        if piv.is_positive() {
            out.pos += 1;
        } else {
            out.neg += 1;
        }
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &piv;
            for j in k + 1..n {
                let t = &f * &a[k][j];
                a[i][j] -= t;
            }
            a[i][k] = BigRational::zero();
        }
        for j in k + 1..n {
            a[k][j] = BigRational::zero();
        }
        k += 1;
    }
    out
}

fn swap_sym(a: &mut [Vec<BigRational>], i: usize, j: usize) {
    a.swap(i, j);
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}

fn add_sym(a: &mut Vec<Vec<BigRational>>, i: usize, j: usize) {
    let row_j = a[j].clone();
    for (x, y) in a[i].iter_mut().zip(&row_j) {
        *x += y;
    }
    for row in a.iter_mut() {
        let t = row[j].clone();
        row[i] += t;
    }
}

/// Parse a square integer matrix from nested arrays.
pub fn int_matrix(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
    rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}
