//! Cyclic Jacobi eigensolver for small dense symmetric matrices.

use crate::error::{Error, Result};

pub const MAX_SWEEPS: usize = 50;

/// Eigen-decomposition of a symmetric matrix.
pub struct SymmetricEigen {
    /// Eigenvalues in no particular order.
    pub values: Vec<f64>,
    /// `vectors[i]` is the unit eigenvector for `values[i]`.
    pub vectors: Vec<Vec<f64>>,
    pub sweeps: usize,
}

fn off_diagonal_norm(a: &[Vec<f64>]) -> f64 {
    let n = a.len();
    let mut sum = 0.0;
    for (i, row) in a.iter().enumerate() {
        for (j, &v) in row.iter().enumerate().take(n) {
            if i != j {
                sum += v * v;
            }
        }
    }
    sum.sqrt()
}

/// Diagonalizes the symmetric matrix `a` (row-major, consumed) by cyclic
/// row-by-row Jacobi rotations until the off-diagonal Frobenius norm drops to
/// `rel_tol * ||a||_F`.
pub fn jacobi_eigen(mut a: Vec<Vec<f64>>, rel_tol: f64) -> Result<SymmetricEigen> {
    let n = a.len();
    debug_assert!(a.iter().all(|row| row.len() == n));
    let norm = a.iter().flatten().map(|v| v * v).sum::<f64>().sqrt();
    let target = rel_tol * norm;
    let mut v: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();

    let mut sweeps = 0;
    while off_diagonal_norm(&a) > target {
        if sweeps == MAX_SWEEPS {
            return Err(Error::ConvergenceFailure { sweeps });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for row in a.iter_mut() {
                    let (akp, akq) = (row[p], row[q]);
                    row[p] = c * akp - s * akq;
                    row[q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                a[p][q] = 0.0;
                a[q][p] = 0.0;
                for row in v.iter_mut() {
                    let (vkp, vkq) = (row[p], row[q]);
                    row[p] = c * vkp - s * vkq;
                    row[q] = s * vkp + c * vkq;
                }
            }
        }
    }

    let values = (0..n).map(|i| a[i][i]).collect();
    let vectors = (0..n).map(|j| (0..n).map(|i| v[i][j]).collect()).collect();
    Ok(SymmetricEigen {
        values,
        vectors,
        sweeps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn residual(a: &[Vec<f64>], value: f64, vec: &[f64]) -> f64 {
        a.iter()
            .enumerate()
            .map(|(i, row)| {
                let av: f64 = row.iter().zip(vec).map(|(x, y)| x * y).sum();
                (av - value * vec[i]).abs()
            })
            .fold(0.0, f64::max)
    }

    #[test]
    fn two_by_two() {
        let a = vec![vec![2.0, 1.0], vec![1.0, 2.0]];
        let mut e = jacobi_eigen(a, 1e-12).unwrap();
        e.values.sort_by(f64::total_cmp);
        assert!((e.values[0] - 1.0).abs() < 1e-14);
        assert!((e.values[1] - 3.0).abs() < 1e-14);
    }

    #[test]
    fn eigenpairs_have_small_residual() {
        let n = 9;
        let a: Vec<Vec<f64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| ((i * 7 + j * 7 + i * j) % 11) as f64 - 5.0)
                    .collect()
            })
            .collect();
        let e = jacobi_eigen(a.clone(), 1e-12).unwrap();
        for (val, vec) in e.values.iter().zip(&e.vectors) {
            assert!(residual(&a, *val, vec) < 1e-10);
            let norm: f64 = vec.iter().map(|x| x * x).sum();
            assert!((norm - 1.0).abs() < 1e-12);
        }
        let trace: f64 = (0..n).map(|i| a[i][i]).sum();
        assert!((e.values.iter().sum::<f64>() - trace).abs() < 1e-10);
    }

    #[test]
    fn diagonal_needs_no_sweeps() {
        let a = vec![vec![4.0, 0.0], vec![0.0, -1.0]];
        let e = jacobi_eigen(a, 1e-12).unwrap();
        assert_eq!(e.sweeps, 0);
        assert_eq!(e.values, vec![4.0, -1.0]);
    }
}
