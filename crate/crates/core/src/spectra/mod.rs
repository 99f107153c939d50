//! Numeric and exact spectra, and comparisons between them.

mod charpoly;
mod jacobi;

pub use charpoly::{
    char_poly, char_poly_exact, expand_factored, roots_contained_in, roots_match_numeric,
    DEFAULT_CHARPOLY_CAP,
};
pub use jacobi::{eig_symmetric, eig_symmetric_with, JacobiOptions};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Float, One, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::surd::ExactSpectrum;
use crate::{IntMatrix, RatMatrix, RationalPolynomial};

/// Default relative gap used to merge numerically equal eigenvalues.
pub const DEFAULT_GROUP_TOL: f64 = 1e-7;

/// Default absolute tolerance for exact-vs-numeric comparisons.
pub const DEFAULT_MATCH_TOL: f64 = 1e-6;

/// Grouped eigenvalues `(value, multiplicity)`, strictly decreasing in value.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Spectrum<T = f64> {
    entries: Vec<(T, usize)>,
}

impl<T: Float> Spectrum<T> {
    pub fn entries(&self) -> &[(T, usize)] {
        &self.entries
    }

    pub fn total_multiplicity(&self) -> usize {
        self.entries.iter().map(|e| e.1).sum()
    }

    pub fn distinct_count(&self) -> usize {
        self.entries.len()
    }

    pub fn largest(&self) -> Option<T> {
        self.entries.first().map(|e| e.0)
    }

    /// Values repeated by multiplicity, descending.
    pub fn expanded(&self) -> Vec<T> {
        self.entries
            .iter()
            .flat_map(|&(v, m)| std::iter::repeat(v).take(m))
            .collect()
    }
}

/// Clusters sorted values whose consecutive gap is at most
/// `tol * max(1, |value|)`. Each group reports its mean.
pub fn group_spectrum<T: Float>(sorted: &[T], tol: T) -> Spectrum<T> {
    let mut groups: Vec<Vec<T>> = Vec::new();
    for &v in sorted {
        match groups.last_mut() {
            Some(g) if (v - *g.last().unwrap_or(&v)).abs() <= tol * v.abs().max(T::one()) => {
                g.push(v)
            }
            _ => groups.push(vec![v]),
        }
    }
    let mut entries: Vec<(T, usize)> = groups
        .into_iter()
        .map(|g| {
            let n = T::from(g.len()).unwrap_or_else(T::one);
            let mean = g.iter().fold(T::zero(), |s, &x| s + x) / n;
            (mean, g.len())
        })
        .collect();
    entries.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap_or(std::cmp::Ordering::Equal));
    Spectrum { entries }
}

/// Grouped eigenvalues of an integer symmetric matrix.
pub fn numeric_spectrum(m: &IntMatrix) -> Result<Spectrum<f64>> {
    let eig = eig_symmetric(&m.to_f64())?;
    Ok(group_spectrum(&eig, DEFAULT_GROUP_TOL))
}

/// `true` iff the multisets pair up value-by-value within `tol`.
///
/// Sorting both sides and pairing in order minimises the largest pairwise
/// gap, so this is exact for the bottleneck matching problem on the line.
pub fn spectrum_matches(numeric: &Spectrum<f64>, exact: &ExactSpectrum, tol: f64) -> bool {
    if numeric.total_multiplicity() != exact.total_multiplicity() {
        return false;
    }
    let left = numeric.expanded();
    let mut right = exact.expanded_f64();
    right.sort_by(|a, b| b.partial_cmp(a).unwrap_or(std::cmp::Ordering::Equal));
    left.iter().zip(&right).all(|(a, b)| (a - b).abs() <= tol)
}

/// `true` iff two numeric spectra pair up value-by-value within `tol`.
pub fn spectra_close(a: &Spectrum<f64>, b: &Spectrum<f64>, tol: f64) -> bool {
    a.total_multiplicity() == b.total_multiplicity()
        && a.expanded()
            .iter()
            .zip(b.expanded().iter())
            .all(|(x, y)| (x - y).abs() <= tol)
}

/// `(L·p(A), L)` with `L` the least common denominator of `p`'s
/// coefficients, evaluated by Horner's rule in `i128`.
pub fn eval_poly_matrix_scaled(p: &RationalPolynomial, a: &IntMatrix) -> Result<(Matrix<i128>, i128)> {
    let lcm = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let too_big = || Error::Formula(format!("coefficients of {p} do not fit in i128"));
    let ints = p
        .coeffs()
        .iter()
        .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer().to_i128().ok_or_else(too_big))
        .collect::<Result<Vec<i128>>>()?;
    let scaled = crate::Polynomial::new(ints).eval_matrix(&a.map(|&v| i128::from(v)));
    Ok((scaled, lcm.to_i128().ok_or_else(too_big)?))
}

/// Exact `p(A)` over the rationals.
pub fn eval_poly_matrix(p: &RationalPolynomial, a: &IntMatrix) -> Result<RatMatrix> {
    let (scaled, lcm) = eval_poly_matrix_scaled(p, a)?;
    let den = BigInt::from(lcm);
    Ok(scaled.map(|&v| BigRational::new(BigInt::from(v), den.clone())))
}

/// `true` iff `p(A) == M` entrywise, exactly.
pub fn poly_matrix_equals(p: &RationalPolynomial, a: &IntMatrix, m: &IntMatrix) -> Result<bool> {
    let (scaled, lcm) = eval_poly_matrix_scaled(p, a)?;
    Ok(scaled == m.map(|&v| i128::from(v) * lcm))
}
