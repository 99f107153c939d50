//! Cyclic Jacobi eigenvalue iteration for dense symmetric matrices.

use num_traits::Float;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug)]
pub struct JacobiOptions<T> {
    /// Stop once the off-diagonal Frobenius norm drops below
    /// `rel_tol * ‖M‖_F`.
    pub rel_tol: T,
    pub max_sweeps: usize,
}

impl<T: Float> Default for JacobiOptions<T> {
    fn default() -> Self {
        let spec = T::from(1e-12).unwrap_or_else(T::epsilon);
        Self {
            rel_tol: spec.max(T::epsilon() * T::from(16.0).unwrap_or_else(T::one)),
            max_sweeps: 100,
        }
    }
}

/// All eigenvalues of a symmetric matrix, ascending.
pub fn eig_symmetric<T: Float + Scalar>(m: &Matrix<T>) -> Result<Vec<T>> {
    eig_symmetric_with(m, JacobiOptions::default())
}

pub fn eig_symmetric_with<T: Float + Scalar>(m: &Matrix<T>, opts: JacobiOptions<T>) -> Result<Vec<T>> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = m.rows();
    let mut a: Vec<T> = m.iter().copied().collect();
    let norm = a.iter().fold(T::zero(), |s, &v| s + v * v).sqrt();
    let threshold = opts.rel_tol * norm;
    let two = T::one() + T::one();

    let off_norm = |a: &[T]| -> T {
        let mut s = T::zero();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s = s + a[i * n + j] * a[i * n + j];
                }
            }
        }
        s.sqrt()
    };

    let mut sweeps = 0;
    while off_norm(&a) >= threshold && norm > T::zero() {
        if sweeps == opts.max_sweeps {
            return Err(Error::NoConvergence { sweeps });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == T::zero() {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (two * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + T::one()).sqrt());
                let c = T::one() / (t * t + T::one()).sqrt();
                let s = t * c;
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    let new_kp = c * akp - s * akq;
                    let new_kq = s * akp + c * akq;
                    a[k * n + p] = new_kp;
                    a[p * n + k] = new_kp;
                    a[k * n + q] = new_kq;
                    a[q * n + k] = new_kq;
                }
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = T::zero();
                a[q * n + p] = T::zero();
            }
        }
    }
    let mut eig: Vec<T> = (0..n).map(|i| a[i * n + i]).collect();
    eig.sort_by(|x, y| x.partial_cmp(y).unwrap_or(std::cmp::Ordering::Equal));
    Ok(eig)
}
