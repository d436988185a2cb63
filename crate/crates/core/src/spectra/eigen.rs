//! Cyclic Jacobi eigensolver for small dense symmetric matrices.

use crate::error::{input, Result};

const SYMMETRY_TOL: f64 = 1e-12;
const MAX_SWEEPS: usize = 100;

fn check_square(a: &[f64], n: usize) -> Result<()> {
    if a.len() != n * n {
        return input(format!("matrix has {} entries, expected {n}x{n}", a.len()));
    }
    for i in 0..n {
        for j in i + 1..n {
            if (a[i * n + j] - a[j * n + i]).abs() > SYMMETRY_TOL {
                return input(format!("matrix is not symmetric at ({i}, {j})"));
            }
        }
    }
    Ok(())
}

/// Eigenvalues of the symmetric `n x n` row-major matrix `a`, descending.
pub fn eig_sym(a: &[f64], n: usize) -> Result<Vec<f64>> {
    check_square(a, n)?;
    let mut m = a.to_vec();
    jacobi(&mut m, n, None);
    let mut vals: Vec<f64> = (0..n).map(|i| m[i * n + i]).collect();
    vals.sort_by(|x, y| y.total_cmp(x));
    Ok(vals)
}

/// Eigenvalues (descending) and matching unit eigenvectors, stored as the
/// columns of a row-major `n x n` matrix.
pub fn eig_sym_vectors(a: &[f64], n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    check_square(a, n)?;
    let mut m = a.to_vec();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    jacobi(&mut m, n, Some(&mut v));
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[j * n + j].total_cmp(&m[i * n + i]));
    let vals = order.iter().map(|&i| m[i * n + i]).collect();
    let mut vecs = vec![0.0; n * n];
    for (col, &src) in order.iter().enumerate() {
        for r in 0..n {
            vecs[r * n + col] = v[r * n + src];
        }
    }
    Ok((vals, vecs))
}

fn off_norm(m: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += m[i * n + j] * m[i * n + j];
            }
        }
    }
    s.sqrt()
}

fn jacobi(m: &mut [f64], n: usize, mut vecs: Option<&mut [f64]>) {
    let scale = m.iter().map(|x| x * x).sum::<f64>().sqrt().max(1.0);
    for _ in 0..MAX_SWEEPS {
        if off_norm(m, n) <= 1e-12 * scale {
            return;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[p * n + q];
                if apq.abs() < 1e-300 {
                    continue;
                }
                let app = m[p * n + p];
                let aqq = m[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = m[k * n + p];
                    let akq = m[k * n + q];
                    m[k * n + p] = c * akp - s * akq;
                    m[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = m[p * n + k];
                    let aqk = m[q * n + k];
                    m[p * n + k] = c * apk - s * aqk;
                    m[q * n + k] = s * apk + c * aqk;
                }
                m[p * n + q] = 0.0;
                m[q * n + p] = 0.0;
                if let Some(v) = vecs.as_deref_mut() {
                    for k in 0..n {
                        let vkp = v[k * n + p];
                        let vkq = v[k * n + q];
                        v[k * n + p] = c * vkp - s * vkq;
                        v[k * n + q] = s * vkp + c * vkq;
                    }
                }
            }
        }
    }
}
