//! Cyclic Jacobi eigensolver for small dense symmetric matrices.

use crate::error::{Error, Result};

/// Largest dimension accepted by [`jacobi_eigen`].
pub const MAX_DIMENSION: usize = 256;

const MAX_SWEEPS: usize = 100;

/// Eigen-decomposition of a real symmetric matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricEigen {
    /// Ascending.
    pub values: Vec<f64>,
    /// `vectors[k]` is the unit eigenvector for `values[k]`.
    pub vectors: Vec<Vec<f64>>,
    pub sweeps: usize,
}

/// Frobenius norm of a dense matrix.
pub fn frobenius_norm(a: &[Vec<f64>]) -> f64 {
    a.iter().flatten().map(|x| x * x).sum::<f64>().sqrt()
}

fn off_norm(a: &[Vec<f64>]) -> f64 {
    let mut sum = 0.0;
    for (i, row) in a.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if i != j {
                sum += x * x;
            }
        }
    }
    sum.sqrt()
}

fn check_symmetric(a: &[Vec<f64>]) -> Result<f64> {
    let n = a.len();
    if n > MAX_DIMENSION {
        return Err(Error::Argument(format!("matrix dimension {n} exceeds {MAX_DIMENSION}")));
    }
    if a.iter().any(|row| row.len() != n) {
        return Err(Error::Argument("matrix is not square".into()));
    }
    if a.iter().flatten().any(|x| !x.is_finite()) {
        return Err(Error::Argument("matrix has non-finite entries".into()));
    }
    let norm = frobenius_norm(a);
    for i in 0..n {
        for j in 0..i {
            if (a[i][j] - a[j][i]).abs() > 1e-12 * norm {
                return Err(Error::Argument(format!(
                    "matrix is not symmetric: |a[{i}][{j}] - a[{j}][{i}]| = {:e}",
                    (a[i][j] - a[j][i]).abs()
                )));
            }
        }
    }
    Ok(norm)
}

/// Eigenvalues and eigenvectors by cyclic Jacobi rotations, iterated until the
/// off-diagonal Frobenius norm is below 1e-13·‖A‖_F.
pub fn jacobi_eigen(matrix: &[Vec<f64>]) -> Result<SymmetricEigen> {
    let norm = check_symmetric(matrix)?;
    let n = matrix.len();
    // work on the symmetrized copy so tiny input asymmetry cannot bias the result
    let mut a: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| 0.5 * (matrix[i][j] + matrix[j][i])).collect())
        .collect();
    let mut v: Vec<Vec<f64>> = (0..n).map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect()).collect();
    let target = 1e-13 * norm;

    let mut sweeps = 0;
    while off_norm(&a) > target {
        if sweeps == MAX_SWEEPS {
            return Err(Error::Argument(format!("Jacobi iteration did not converge in {MAX_SWEEPS} sweeps")));
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
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for row in v.iter_mut() {
                    let (vp, vq) = (row[p], row[q]);
                    row[p] = c * vp - s * vq;
                    row[q] = s * vp + c * vq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i][i].total_cmp(&a[j][j]));
    Ok(SymmetricEigen {
        values: order.iter().map(|&k| a[k][k]).collect(),
        vectors: order.iter().map(|&k| v.iter().map(|row| row[k]).collect()).collect(),
        sweeps,
    })
}

/// Ascending eigenvalues of a symmetric matrix.
pub fn jacobi_eigenvalues(matrix: &[Vec<f64>]) -> Result<Vec<f64>> {
    Ok(jacobi_eigen(matrix)?.values)
}
