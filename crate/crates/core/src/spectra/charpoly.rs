//! Exact characteristic polynomials by Berkowitz's division-free algorithm.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::polynomial::Polynomial;
use crate::scalar::Scalar;
use crate::spectra::Spectrum;
use crate::IntMatrix;

/// Default dimension cap for [`char_poly_exact`].
pub const DEFAULT_CHARPOLY_CAP: usize = 64;

/// `det(xI - M)` over any commutative ring. Uses only ring operations.
pub fn char_poly<T: Scalar>(m: &Matrix<T>) -> Result<Polynomial<T>> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    // coefficients, highest degree first
    let mut v: Vec<T> = vec![T::one()];
    for k in 0..n {
        // leading (k+1)x(k+1) block = [[B, c], [r, m_kk]] with B of size k
        let mut q = Vec::with_capacity(k + 2);
        q.push(T::one());
        q.push(T::zero() - m[(k, k)].clone());
        let mut w: Vec<T> = (0..k).map(|i| m[(i, k)].clone()).collect();
        for step in 0..k {
            let dot = (0..k).fold(T::zero(), |s, j| s + m[(k, j)].clone() * w[j].clone());
            q.push(T::zero() - dot);
            if step + 1 < k {
                w = (0..k)
                    .map(|i| (0..k).fold(T::zero(), |s, j| s + m[(i, j)].clone() * w[j].clone()))
                    .collect();
            }
        }
        let mut next = vec![T::zero(); k + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for (j, vj) in v.iter().enumerate().take(i + 1) {
                *slot = slot.clone() + q[i - j].clone() * vj.clone();
            }
        }
        v = next;
    }
    v.reverse();
    Ok(Polynomial::new(v))
}

/// Integer characteristic polynomial of an integer matrix, refusing
/// dimensions above `cap`.
pub fn char_poly_exact(m: &IntMatrix, cap: usize) -> Result<Polynomial<BigInt>> {
    if m.rows() > cap {
        return Err(Error::CapExceeded { n: m.rows(), cap });
    }
    char_poly(&m.map(|&v| BigInt::from(v)))
}

/// Checks that the real roots of `p`, with multiplicities, are exactly the
/// grouped numeric eigenvalues in `numeric` up to `tol`.
///
/// Each square-free factor `f_i` of `p` (roots of multiplicity `i`) is
/// evaluated exactly at `λ ± tol` for every numeric group `λ`; a sign change
/// pins one simple root of `f_i` inside the window. The check passes when
/// every group finds a factor whose index equals the group multiplicity and
/// the root count adds up to the degree.
pub fn roots_match_numeric(p: &Polynomial<BigInt>, numeric: &Spectrum<f64>, tol: f64) -> bool {
    let Some(deg) = p.degree() else {
        return false;
    };
    if numeric.total_multiplicity() != deg {
        return false;
    }
    let parts = p.to_rational().square_free_decomposition();
    let distinct: usize = parts.iter().map(|f| f.degree().unwrap_or(0)).sum();
    if distinct != numeric.entries().len() {
        return false;
    }
    let exact = |x: f64| BigRational::from_float(x).unwrap_or_else(BigRational::zero);
    let sign = |f: &Polynomial<BigRational>, x: &BigRational| f.eval(x).signum();
    numeric.entries().iter().all(|&(value, mult)| {
        let lo = exact(value - tol);
        let hi = exact(value + tol);
        let hits: Vec<usize> = parts
            .iter()
            .enumerate()
            .filter(|(_, f)| {
                let (a, b) = (sign(f, &lo), sign(f, &hi));
                a.is_zero() || b.is_zero() || a != b
            })
            .map(|(i, _)| i + 1)
            .collect();
        hits == [mult]
    })
}

/// Checks that every real root of `p` lies in some numeric group window
/// `[λ - tol, λ + tol]`: the number of windows where the square-free part of
/// `p` changes sign must equal its degree.
pub fn roots_contained_in(p: &Polynomial<BigRational>, numeric: &Spectrum<f64>, tol: f64) -> bool {
    let s = p
        .square_free_decomposition()
        .iter()
        .fold(Polynomial::constant(BigRational::one()), |acc, f| &acc * f);
    let Some(deg) = s.degree() else {
        return false;
    };
    let exact = |x: f64| BigRational::from_float(x).unwrap_or_else(BigRational::zero);
    let found = numeric
        .entries()
        .iter()
        .filter(|&&(value, _)| {
            let a = s.eval(&exact(value - tol)).signum();
            let b = s.eval(&exact(value + tol)).signum();
            a.is_zero() || b.is_zero() || a != b
        })
        .count();
    found == deg
}

/// Expands `Π factor^power` over the integers.
pub fn expand_factored(factors: &[(Polynomial<BigInt>, u32)]) -> Polynomial<BigInt> {
    factors
        .iter()
        .fold(Polynomial::constant(BigInt::one()), |acc, (f, e)| &acc * &f.pow(*e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::group_spectrum;

    #[test]
    fn swap_matrix_gives_x2_minus_1() {
        let m = IntMatrix::from_rows(vec![vec![0, 1], vec![1, 0]]);
        let p = char_poly_exact(&m, DEFAULT_CHARPOLY_CAP).unwrap();
        assert_eq!(p, Polynomial::from_ints(&[-1, 0, 1]));
    }

    #[test]
    fn triangular_matrix_roots_on_diagonal() {
        let m = IntMatrix::from_rows(vec![vec![2, 7, 1], vec![0, 3, 5], vec![0, 0, -1]]);
        let p = char_poly_exact(&m, 8).unwrap();
        let expected = expand_factored(&[
            (Polynomial::from_ints(&[-2, 1]), 1),
            (Polynomial::from_ints(&[-3, 1]), 1),
            (Polynomial::from_ints(&[1, 1]), 1),
        ]);
        assert_eq!(p, expected);
    }

    #[test]
    fn cap_is_enforced() {
        let m = IntMatrix::identity(5);
        assert!(matches!(char_poly_exact(&m, 4), Err(Error::CapExceeded { n: 5, cap: 4 })));
        assert_eq!(
            char_poly_exact(&m, 5).unwrap(),
            Polynomial::from_ints(&[-1, 1]).pow(5)
        );
    }

    #[test]
    fn generic_over_rationals() {
        let m = Matrix::from_rows(vec![
            vec![BigRational::new(1.into(), 2.into()), BigRational::zero()],
            vec![BigRational::zero(), BigRational::new(3.into(), 1.into())],
        ]);
        let p = char_poly(&m).unwrap();
        assert_eq!(p.coeff(0), BigRational::new(3.into(), 2.into()));
    }

    #[test]
    fn root_matching_respects_multiplicity() {
        // (x - 1)^2 (x + 2)
        let p = expand_factored(&[
            (Polynomial::from_ints(&[-1, 1]), 2),
            (Polynomial::from_ints(&[2, 1]), 1),
        ]);
        let good = group_spectrum(&[-2.0, 1.0, 1.0 + 1e-10], 1e-7);
        assert!(roots_match_numeric(&p, &good, 1e-6));
        let wrong_mult = group_spectrum(&[-2.0, -2.0, 1.0], 1e-7);
        assert!(!roots_match_numeric(&p, &wrong_mult, 1e-6));
        let wrong_value = group_spectrum(&[-2.0, 1.1, 1.1], 1e-7);
        assert!(!roots_match_numeric(&p, &wrong_value, 1e-6));
    }
}
