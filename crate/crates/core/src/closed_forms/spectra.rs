//! Spectral radius and full adjacency/distance spectra of minimal cages.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::cages::moore_bound;
use crate::closed_forms::polynomials::{distance_polynomial, ensure_formula_ok};
use crate::error::{Error, Result};
use crate::scalar::{rat, ratio};
use crate::surd::{ExactSpectrum, QuadSurd};

fn big(v: i64) -> BigRational {
    rat(v)
}

fn pow(base: i64, e: u64) -> BigRational {
    num_traits::pow(big(base), e as usize)
}

/// Exact multiplicity; errors unless the value is a nonnegative integer.
fn multiplicity(value: &QuadSurd, what: &str) -> Result<usize> {
    value
        .to_integer()
        .and_then(|m| usize::try_from(m).ok())
        .ok_or_else(|| Error::Formula(format!("multiplicity of {what} is {value}, not an integer")))
}

fn n0(k: u64, g: u64) -> Result<BigRational> {
    let n = moore_bound(k, g);
    if n == u128::MAX {
        return Err(Error::Formula(format!("Moore bound for ({k},{g}) overflows")));
    }
    Ok(BigRational::from_integer(BigInt::from(n)))
}

/// Closed form for the distance spectral radius, `k ≥ 3`:
/// `k(1-(k-1)^d)/(2-k)² - 2d(k-1)^d/(2-k)` for even `g`, with `dk` in place
/// of `2d` for odd `g`.
pub fn dr_radius(k: u64, g: u64) -> Result<BigInt> {
    if k < 3 {
        return Err(Error::Formula(format!("the radius formula needs k >= 3, got {k}")));
    }
    ensure_formula_ok(k, g)?;
    let d = g / 2;
    let ki = k as i64;
    let hd = pow(ki - 1, d);
    let two_minus_k = big(2 - ki);
    let first = big(ki) * (BigRational::one() - &hd) / (&two_minus_k * &two_minus_k);
    let factor = if g % 2 == 0 { big(2 * d as i64) } else { big(d as i64 * ki) };
    let value = first - factor * hd / two_minus_k;
    if !value.is_integer() {
        return Err(Error::Formula(format!("radius {value} is not an integer")));
    }
    Ok(value.to_integer())
}

/// `±√(c·(k-1))` pieces of `2√(k-1)·cos(πj/d)` for `d ∈ {2,3,4,6}`:
/// returns `4cos²(πj/d)` and the sign of the cosine.
fn four_cos_squared(j: u64, d: u64) -> Option<(i64, i64)> {
    let (num, den) = {
        let gcd = num_integer::gcd(j, d);
        (j / gcd, d / gcd)
    };
    let sign = match (2 * num).cmp(&den) {
        std::cmp::Ordering::Less => 1,
        std::cmp::Ordering::Equal => 0,
        std::cmp::Ordering::Greater => -1,
    };
    let c = match den {
        2 => 0,
        3 => 1,
        4 => 2,
        6 => 3,
        _ => return None,
    };
    Some((c, sign))
}

/// Adjacency spectrum of a minimal `(k,g)`-cage.
///
/// Even `g = 2d`: `±k` once each and `2√(k-1)cos(πj/d)` with multiplicity
/// `(nk/g)(4(k-1) - λ²)/(k² - λ²)`. `g = 3`: `{k, -1^k}`. `g = 5`: the roots
/// `(-1 ± √(4k-3))/2` of `x² + x - (k-1)` with the odd-girth multiplicity
/// formula. Cycles of other lengths are not surd-expressible and are
/// rejected.
pub fn cage_adjacency_spectrum(k: u64, g: u64) -> Result<ExactSpectrum> {
    ensure_formula_ok(k, g)?;
    let d = g / 2;
    let n = n0(k, g)?;
    let kr = big(k as i64);
    let h = big(k as i64 - 1);
    let mut items = vec![(QuadSurd::int(k as i64), 1)];
    if g == 3 {
        items.push((QuadSurd::int(-1), k as usize));
    } else if g % 2 == 0 {
        items.push((QuadSurd::int(-(k as i64)), 1));
        for j in 1..d {
            let (c, sign) = four_cos_squared(j, d).ok_or_else(|| {
                Error::Formula(format!("2cos(π·{j}/{d}) is not a quadratic surd"))
            })?;
            let lambda_sq = &h * big(c);
            let lambda = QuadSurd::sqrt(&lambda_sq)?.scale(&big(sign));
            let m = &n * &kr / big(g as i64) * (big(4) * &h - &lambda_sq) / (&kr * &kr - &lambda_sq);
            items.push((lambda.clone(), multiplicity(&QuadSurd::rational(m), &lambda.to_string())?));
        }
    } else if g == 5 {
        let f = &kr + big(k as i64 - 2) / big(g as i64);
        let scale = &n * &kr / big(g as i64);
        let root = QuadSurd::sqrt(&big(4 * k as i64 - 3))?.scale(&ratio(1, 2));
        let half = QuadSurd::rational(ratio(-1, 2));
        for lambda in [half.checked_add(&root)?, half.checked_sub(&root)?] {
            let lambda_sq = lambda.checked_mul(&lambda)?;
            let num = QuadSurd::rational(big(4) * &h).checked_sub(&lambda_sq)?.scale(&scale);
            let den = QuadSurd::rational(kr.clone())
                .checked_sub(&lambda)?
                .checked_mul(&QuadSurd::rational(f.clone()).checked_add(&lambda)?)?;
            let m = multiplicity(&num.checked_div(&den)?, &lambda.to_string())?;
            items.push((lambda, m));
        }
    } else {
        return Err(Error::Formula(format!(
            "odd girth {g} spectrum is not a quadratic surd"
        )));
    }
    let spec = ExactSpectrum::new(items);
    check_total(&spec, k, g)?;
    Ok(spec)
}

fn check_total(spec: &ExactSpectrum, k: u64, g: u64) -> Result<()> {
    let n = moore_bound(k, g);
    if spec.total_multiplicity() as u128 != n {
        return Err(Error::Formula(format!(
            "({k},{g}) spectrum has total multiplicity {}, expected {n}",
            spec.total_multiplicity()
        )));
    }
    Ok(())
}

/// Distance spectrum as `{p(λ)^(m_λ)}` over the adjacency spectrum.
/// Where a printed explicit form exists it must agree exactly.
pub fn cage_distance_spectrum(k: u64, g: u64) -> Result<ExactSpectrum> {
    let p = distance_polynomial(k, g)?.p;
    let adj = cage_adjacency_spectrum(k, g)?;
    let spec = ExactSpectrum::new(adj.entries().iter().map(|e| (e.value.eval(&p), e.multiplicity)));
    if let Some(printed) = printed_distance_spectrum(k, g) {
        let printed = printed?;
        if printed != spec {
            return Err(Error::Formula(format!(
                "({k},{g}) printed spectrum {printed} disagrees with p(λ) spectrum {spec}"
            )));
        }
    }
    if let Some(known) = known_distance_spectrum(k, g) {
        if known != spec {
            return Err(Error::Formula(format!(
                "({k},{g}) known spectrum {known} disagrees with p(λ) spectrum {spec}"
            )));
        }
    }
    Ok(spec)
}

/// Distinct eigenvalue count.
pub fn distinct_count(spec: &ExactSpectrum) -> usize {
    spec.distinct_count()
}

/// Distance spectra of `K_{k+1}` (`g = 3`) and `K_{k,k}` (`g = 4`), which are
/// standard results independent of the shell-polynomial machinery.
pub fn known_distance_spectrum(k: u64, g: u64) -> Option<ExactSpectrum> {
    let ki = k as i64;
    match g {
        3 => Some(ExactSpectrum::new([(QuadSurd::int(ki), 1), (QuadSurd::int(-1), k as usize)])),
        4 => Some(ExactSpectrum::new([
            (QuadSurd::int(3 * ki - 2), 1),
            (QuadSurd::int(ki - 2), 1),
            (QuadSurd::int(-2), 2 * k as usize - 2),
        ])),
        _ => None,
    }
}

/// Transcription of the printed explicit distance spectra: the three listed
/// `(k,5)` cases and the general `(k,6)`, `(k,8)`, `(k,12)` forms (`k ≥ 3`).
pub fn printed_distance_spectrum(k: u64, g: u64) -> Option<Result<ExactSpectrum>> {
    let ki = k as i64;
    let int = QuadSurd::int;
    let build = |items: Vec<(QuadSurd, BigRational)>| -> Result<ExactSpectrum> {
        let items = items
            .into_iter()
            .map(|(v, m)| {
                let what = v.to_string();
                Ok((v, multiplicity(&QuadSurd::rational(m), &what)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ExactSpectrum::new(items))
    };
    let one = BigRational::one();
    // a + s·b·√r
    let surd = |a: i64, b: i64, r: i64| QuadSurd::new(big(a), big(b), r as u64);
    if k < 3 {
        return None;
    }
    let n = n0(k, g).ok()?;
    let kr = big(ki);
    let h = big(ki - 1);
    let spec = match g {
        5 => match k {
            3 => build(vec![(int(15), one.clone()), (int(-3), big(5)), (int(0), big(4))]),
            7 => build(vec![(int(91), one.clone()), (int(-4), big(28)), (int(1), big(21))]),
            57 => build(vec![(int(6441), one.clone()), (int(-9), big(1729)), (int(6), big(1520))]),
            _ => return None,
        },
        6 => {
            let m = &n * &kr * &h / (big(2) * big(ki * ki - ki + 1));
            build(vec![
                (int(5 * ki * ki - 7 * ki + 3), one.clone()),
                (int(-ki * ki + 3 * ki - 3), one.clone()),
                (surd(-2, -2, ki - 1), m.clone()),
                (surd(-2, 2, ki - 1), m),
            ])
        }
        8 => {
            let m0 = &n * &h / (big(2) * &kr);
            let m = &n * &kr * &h / (big(4) * big(ki * ki - 2 * ki + 2));
            build(vec![
                (int(7 * ki.pow(3) - 16 * ki * ki + 14 * ki - 4), one.clone()),
                (int(ki.pow(3) - 4 * ki * ki + 6 * ki - 4), one.clone()),
                (int(2 * ki - 4), m0),
                (surd(-2 * ki, -2, 2 * (ki - 1)), m.clone()),
                (surd(-2 * ki, 2, 2 * (ki - 1)), m),
            ])
        }
        12 => {
            let m0 = &n * &h / (big(3) * &kr);
            let m1 = &n * &kr * &h / (big(4) * big(ki * ki - ki + 1));
            let m3 = &n * &kr * &h / (big(12) * big(ki * ki - 3 * ki + 3));
            let k2 = ki - 2;
            build(vec![
                (
                    int(11 * ki.pow(5) - 46 * ki.pow(4) + 81 * ki.pow(3) - 72 * ki * ki + 33 * ki - 6),
                    one.clone(),
                ),
                (
                    int(ki.pow(5) - 6 * ki.pow(4) + 15 * ki.pow(3) - 20 * ki * ki + 15 * ki - 6),
                    one.clone(),
                ),
                (int(-2 * ki * ki + 6 * ki - 6), m0),
                (surd(2 * k2 * ki, 2 * k2, ki - 1), m1.clone()),
                (surd(2 * k2 * ki, -2 * k2, ki - 1), m1),
                (surd(-2 * ki * ki, -2 * ki, 3 * (ki - 1)), m3.clone()),
                (surd(-2 * ki * ki, 2 * ki, 3 * (ki - 1)), m3),
            ])
        }
        _ => return None,
    };
    Some(spec)
}

/// `Σ m·λ` is zero for every distance spectrum.
pub fn trace_is_zero(spec: &ExactSpectrum) -> bool {
    spec.trace_is_zero()
}
