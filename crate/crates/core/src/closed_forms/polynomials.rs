//! Shell matrices `A_i` and the distance matrix `D` of a minimal cage as
//! polynomials in the adjacency matrix `A`.

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::cages::moore_exists;
use crate::closed_forms::coefficients::coefficient_table;
use crate::error::{Error, Result};
use crate::regularity::IntersectionArray;
use crate::scalar::{rat, ratio};
use crate::RationalPolynomial;

/// `A_i = poly(A)`; `divisor` is the `c` pulled out of the closed form
/// (`k` for `i = d` with `g` even, else 1) and is already applied to `poly`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShellPolynomial {
    pub i: usize,
    pub divisor: i64,
    pub poly: RationalPolynomial,
}

/// `D = p(A)` for a minimal `(k,g)`-cage.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistancePolynomial {
    pub k: u64,
    pub g: u64,
    pub p: RationalPolynomial,
}

pub(crate) fn ensure_formula_ok(k: u64, g: u64) -> Result<()> {
    let verdict = moore_exists(k, g);
    if verdict.formula_ok() {
        Ok(())
    } else {
        Err(Error::NotMoore {
            k,
            g,
            reason: verdict.reason,
        })
    }
}

/// Closed form: the coefficient of `A^{i-2j}` is `(-1)^j (k-1)^{j-1} a_i^j`
/// (1 for `j = 0`), all over `c`.
pub fn shell_polynomials_closed(k: u64, g: u64) -> Result<Vec<ShellPolynomial>> {
    ensure_formula_ok(k, g)?;
    let d = (g / 2) as usize;
    let table = coefficient_table(k as i64, d)?;
    let km1 = rat(k as i64 - 1);
    (0..=d)
        .map(|i| {
            let mut coeffs = vec![BigRational::zero(); i + 1];
            coeffs[i] = BigRational::one();
            for j in 1..=i / 2 {
                let sign = if j % 2 == 0 { rat(1) } else { rat(-1) };
                coeffs[i - 2 * j] = sign * num_traits::pow(km1.clone(), j - 1) * rat(table.a(i, j));
            }
            let divisor = if i == d && g % 2 == 0 { k as i64 } else { 1 };
            let poly = RationalPolynomial::new(coeffs).scale(&ratio(1, divisor));
            Ok(ShellPolynomial { i, divisor, poly })
        })
        .collect()
}

/// Three-term recurrence `A·A_i = c_{i+1}A_{i+1} + a_i A_i + b_{i-1}A_{i-1}`
/// run on any intersection array.
pub fn shell_polynomials_recurrence(array: &IntersectionArray) -> Result<Vec<RationalPolynomial>> {
    let d = array.diameter();
    let x = RationalPolynomial::x();
    let mut out = vec![RationalPolynomial::constant(BigRational::one()), x.clone()];
    for i in 1..d {
        let a_i = array
            .a_at(i)
            .ok_or_else(|| Error::Formula(format!("a_{i} is negative in {array}")))?;
        let next = &(&(&x * &out[i]) - &out[i].scale(&rat(a_i as i64)))
            - &out[i - 1].scale(&rat(array.b_at(i - 1) as i64));
        out.push(next.scale(&ratio(1, array.c_at(i + 1) as i64)));
    }
    out.truncate(d + 1);
    Ok(out)
}

/// Shell polynomials by the closed form, cross-checked against the
/// recurrence on the Moore intersection array.
pub fn shell_polynomials(k: u64, g: u64) -> Result<Vec<ShellPolynomial>> {
    let closed = shell_polynomials_closed(k, g)?;
    let rec = shell_polynomials_recurrence(&IntersectionArray::moore(k, g))?;
    for (c, r) in closed.iter().zip(&rec) {
        if &c.poly != r {
            return Err(Error::Formula(format!(
                "A_{} closed form {} disagrees with recurrence {}",
                c.i, c.poly, r
            )));
        }
    }
    Ok(closed)
}

/// `p(x) = Σ i·A_i(x)`, expanded from the shell polynomials.
pub fn distance_polynomial(k: u64, g: u64) -> Result<DistancePolynomial> {
    let p = shell_polynomials(k, g)?
        .iter()
        .fold(RationalPolynomial::zero(), |acc, s| &acc + &s.poly.scale(&rat(s.i as i64)));
    Ok(DistancePolynomial { k, g, p })
}

/// Upper limit of the inner sum in the printed even-`g` distance polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SumBound {
    Floor,
    Ceil,
}

/// The printed even-`g` double sum, transcribed literally with the chosen
/// inner upper limit `⌊(d-i-1)/2⌋` or `⌈(d-i-1)/2⌉`.
pub fn printed_even_polynomial(k: u64, g: u64, bound: SumBound) -> Result<RationalPolynomial> {
    if g % 2 != 0 {
        return Err(Error::Formula("the printed double sum is for even g".into()));
    }
    let d = (g / 2) as usize;
    let table = coefficient_table(k as i64, d)?;
    let km1 = rat(k as i64 - 1);
    let pw = |e: usize| num_traits::pow(km1.clone(), e);
    let sign = |j: usize| if j % 2 == 0 { rat(1) } else { rat(-1) };
    let mut coeffs = vec![BigRational::zero(); d + 1];
    for (i, slot) in coeffs.iter_mut().enumerate().take(d) {
        let mut c = rat(i as i64);
        if d - i >= 3 {
            let upper = match bound {
                SumBound::Floor => (d - i - 1) / 2,
                SumBound::Ceil => (d - i - 1).div_ceil(2),
            };
            for j in 1..=upper {
                c += sign(j) * rat((i + 2 * j) as i64) * pw(j - 1) * rat(table.a(i + 2 * j, j));
            }
        }
        *slot = c;
    }
    let scale = ratio(d as i64, k as i64);
    coeffs[d] += &scale;
    for i in 1..=d / 2 {
        coeffs[d - 2 * i] += &scale * sign(i) * pw(i - 1) * rat(table.a(d, i));
    }
    Ok(RationalPolynomial::new(coeffs))
}

/// Which printed upper limit reproduces the expanded polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundDiagnostic {
    pub k: u64,
    pub g: u64,
    pub floor_matches: bool,
    pub ceil_matches: bool,
}

pub fn printed_bound_diagnostic(k: u64, g: u64) -> Result<BoundDiagnostic> {
    let derived = distance_polynomial(k, g)?.p;
    Ok(BoundDiagnostic {
        k,
        g,
        floor_matches: printed_even_polynomial(k, g, SumBound::Floor)? == derived,
        ceil_matches: printed_even_polynomial(k, g, SumBound::Ceil)? == derived,
    })
}

/// The explicitly printed `D = p(A)` for `g ∈ {3, 5, 6, 8, 12}`.
pub fn printed_distance_polynomial(k: u64, g: u64) -> Option<RationalPolynomial> {
    let k = k as i64;
    let r = rat;
    let over_k = |n: i64| ratio(n, k);
    let coeffs = match g {
        3 => vec![r(0), r(1)],
        5 => vec![r(-2 * k), r(1), r(2)],
        6 => vec![r(-2 * k), -over_k(5 * k - 3), r(2), over_k(3)],
        8 => vec![r(2 * k - 4), r(-(6 * k - 4)), over_k(8 - 10 * k), r(3), over_k(4)],
        12 => vec![
            r(-(2 * k * k - 6 * k + 6)),
            r(15 * k * k - 26 * k + 9),
            over_k(24 * k * k - 44 * k + 18),
            r(-(20 * k - 18)),
            over_k(24 - 26 * k),
            r(5),
            over_k(6),
        ],
        _ => return None,
    };
    Some(RationalPolynomial::new(coeffs))
}
