//! Integer linear algebra via column echelon (Hermite) form.
//!
//! Everything runs on `BigInt` so intermediate growth never wraps.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// `a * u = h` with `u` unimodular and `h` in lower column echelon form.
#[derive(Debug, Clone)]
pub struct ColumnEchelon {
    pub h: Vec<Vec<BigInt>>,
    pub u: Vec<Vec<BigInt>>,
    /// (row, column) of each pivot, columns are 0, 1, 2, ... in order.
    pub pivots: Vec<(usize, usize)>,
}

fn col_combine(
    m: &mut [Vec<BigInt>],
    k: usize,
    j: usize,
    (x, y, c, d): (&BigInt, &BigInt, &BigInt, &BigInt),
) {
    // col_k <- x col_k + y col_j ; col_j <- c col_k + d col_j
    for row in m.iter_mut() {
        let ck = row[k].clone();
        let cj = row[j].clone();
        row[k] = x * &ck + y * &cj;
        row[j] = c * &ck + d * &cj;
    }
}

pub fn column_echelon(a: &[Vec<i64>]) -> ColumnEchelon {
    let m = a.len();
    let n = if m == 0 { 0 } else { a[0].len() };
    let mut h: Vec<Vec<BigInt>> = a
        .iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let mut u: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect();
    let mut pivots = Vec::new();
    let mut k = 0;
    for r in 0..m {
        if k == n {
            break;
        }
        for j in k + 1..n {
            if h[r][j].is_zero() {
                continue;
            }
            if h[r][k].is_zero() {
                for row in h.iter_mut().chain(u.iter_mut()) {
                    row.swap(k, j);
                }
                continue;
            }
            let a0 = h[r][k].clone();
            let b0 = h[r][j].clone();
            let e = a0.extended_gcd(&b0);
            let g = e.gcd;
            let (x, y) = (e.x, e.y);
            let c = -(&b0 / &g);
            let d = &a0 / &g;
            col_combine(&mut h, k, j, (&x, &y, &c, &d));
            col_combine(&mut u, k, j, (&x, &y, &c, &d));
        }
        if h[r][k].is_zero() {
            continue;
        }
        if h[r][k].is_negative() {
            for row in h.iter_mut().chain(u.iter_mut()) {
                row[k] = -row[k].clone();
            }
        }
        pivots.push((r, k));
        k += 1;
    }
    ColumnEchelon { h, u, pivots }
}

/// An integer solution of `a x = b`, if one exists.
pub fn solve(a: &[Vec<i64>], b: &[i64]) -> Option<Vec<BigInt>> {
    let m = a.len();
    assert_eq!(m, b.len(), "right-hand side length");
    let n = if m == 0 { 0 } else { a[0].len() };
    let ce = column_echelon(a);
    let mut y = vec![BigInt::zero(); n];
    let mut next = 0;
    for r in 0..m {
        let k = if next < ce.pivots.len() && ce.pivots[next].0 == r {
            Some(ce.pivots[next].1)
        } else {
            None
        };
        let upto = k.unwrap_or(next);
        let mut s = BigInt::zero();
        for (j, yj) in y.iter().enumerate().take(upto) {
            s += &ce.h[r][j] * yj;
        }
        let rhs = BigInt::from(b[r]) - s;
        match k {
            Some(k) => {
                let (q, rem) = rhs.div_rem(&ce.h[r][k]);
                if !rem.is_zero() {
                    return None;
                }
                y[k] = q;
                next += 1;
            }
            None => {
                if !rhs.is_zero() {
                    return None;
                }
            }
        }
    }
    let x = (0..n)
        .map(|i| {
            ce.u[i]
                .iter()
                .zip(&y)
                .fold(BigInt::zero(), |acc, (uij, yj)| acc + uij * yj)
        })
        .collect();
    Some(x)
}

/// Like [`solve`] but narrowed to `i64`; `None` also when a coordinate overflows.
pub fn solve_i64(a: &[Vec<i64>], b: &[i64]) -> Option<Vec<i64>> {
    solve(a, b)?.iter().map(|v| v.to_i64()).collect()
}

/// A full-rank sublattice of Z^n with a lower triangular basis, used for
/// canonical coset representatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareLattice {
    basis: Vec<Vec<i128>>,
}

impl SquareLattice {
    /// Columns of `a` generate the lattice; `a` must be square and nonsingular.
    pub fn from_generators(a: &[Vec<i64>]) -> Option<SquareLattice> {
        let n = a.len();
        let ce = column_echelon(a);
        if ce.pivots.len() != n || ce.pivots.iter().any(|&(r, c)| r != c) {
            return None;
        }
        let basis = ce
            .h
            .iter()
            .map(|row| row.iter().map(|v| v.to_i128()).collect::<Option<Vec<_>>>())
            .collect::<Option<Vec<_>>>()?;
        Some(SquareLattice { basis })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Diagonal of the echelon basis; `[0, h_ii)` boxes are coset representatives.
    pub fn diagonal(&self) -> Vec<i128> {
        (0..self.dim()).map(|i| self.basis[i][i]).collect()
    }

    /// Index of the lattice in Z^n.
    pub fn index(&self) -> i128 {
        (0..self.dim()).map(|i| self.basis[i][i]).product()
    }

    /// The unique representative of `x + L` with `0 <= x_i < h_ii`.
    pub fn reduce(&self, x: &[i64]) -> Vec<i64> {
        let n = self.dim();
        let mut v: Vec<i128> = x.iter().map(|&t| t as i128).collect();
        for i in 0..n {
            let q = v[i].div_euclid(self.basis[i][i]);
            if q != 0 {
                for (r, vr) in v.iter_mut().enumerate().skip(i) {
                    *vr -= q * self.basis[r][i];
                }
            }
        }
        v.into_iter().map(|t| t as i64).collect()
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        self.reduce(x).iter().all(|&t| t == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solves_small_system() {
        let a = vec![vec![2, 3], vec![4, 9]];
        let x = solve_i64(&a, &[5, 13]).unwrap();
        assert_eq!(x, vec![1, 1]);
        assert!(solve(&a, &[1, 0]).is_none());
    }

    #[test]
    fn rank_deficient_consistency() {
        let a = vec![vec![1, 2], vec![2, 4]];
        assert!(solve(&a, &[3, 6]).is_some());
        assert!(solve(&a, &[3, 7]).is_none());
    }

    #[test]
    fn lattice_reduction_is_canonical() {
        let a = vec![vec![-1, 7], vec![7, -1]];
        let l = SquareLattice::from_generators(&a).unwrap();
        assert_eq!(l.index(), 48);
        let x = l.reduce(&[5, 9]);
        let y = l.reduce(&[5 - 1 + 7, 9 + 7 - 1]);
        assert_eq!(x, y);
        assert!(l.contains(&[6, 6]));
        assert!(!l.contains(&[1, 0]));
    }
}
