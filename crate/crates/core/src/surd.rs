//! Exact quadratic surds `a + b·√r` and multisets of them.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polynomial::Polynomial;
use crate::scalar::rat;

/// `a + b·√r` with `r` square-free and `r > 1`, or `r == 0` and `b == 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadSurd {
    a: BigRational,
    b: BigRational,
    r: u64,
}

/// Splits `n` into `(m, r)` with `n = m²·r` and `r` square-free.
pub fn square_free_split(mut n: u64) -> (u64, u64) {
    if n == 0 {
        return (0, 0);
    }
    let mut m = 1u64;
    let mut r = 1u64;
    let mut p = 2u64;
    while p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        m *= p.pow(e / 2);
        if e % 2 == 1 {
            r *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    r *= n;
    (m, r)
}

impl QuadSurd {
    /// Builds and canonicalises `a + b·√r` for any nonnegative `r`.
    pub fn new(a: BigRational, b: BigRational, r: u64) -> Self {
        let (m, sf) = square_free_split(r);
        let b = b * rat(m as i64);
        if b.is_zero() || sf == 0 {
            return Self::rational(a);
        }
        if sf == 1 {
            return Self::rational(a + b);
        }
        Self { a, b, r: sf }
    }

    pub fn rational(a: BigRational) -> Self {
        Self {
            a,
            b: BigRational::zero(),
            r: 0,
        }
    }

    pub fn int(v: i64) -> Self {
        Self::rational(rat(v))
    }

    /// `√q` for a nonnegative rational `q`.
    pub fn sqrt(q: &BigRational) -> Result<Self> {
        if q.is_negative() {
            return Err(Error::Surd(format!("square root of negative value {q}")));
        }
        // √(n/d) = √(n·d)/d
        let prod = q.numer() * q.denom();
        let prod = prod
            .to_u64()
            .ok_or_else(|| Error::Surd(format!("radicand {prod} exceeds u64")))?;
        Ok(Self::new(
            BigRational::zero(),
            BigRational::new(BigInt::one(), q.denom().clone()),
            prod,
        ))
    }

    pub fn a(&self) -> &BigRational {
        &self.a
    }

    pub fn b(&self) -> &BigRational {
        &self.b
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn is_rational(&self) -> bool {
        self.r == 0
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        if self.r == 0 {
            return a;
        }
        a + self.b.to_f64().unwrap_or(f64::NAN) * (self.r as f64).sqrt()
    }

    /// `a - b·√r`.
    pub fn conjugate(&self) -> Self {
        Self {
            a: self.a.clone(),
            b: -self.b.clone(),
            r: self.r,
        }
    }

    fn common_radicand(&self, other: &Self) -> Result<u64> {
        match (self.r, other.r) {
            (0, r) | (r, 0) => Ok(r),
            (r, s) if r == s => Ok(r),
            (r, s) => Err(Error::Surd(format!("mixed radicands √{r} and √{s}"))),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let r = self.common_radicand(other)?;
        Ok(Self::new(&self.a + &other.a, &self.b + &other.b, r))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        let r = self.common_radicand(other)?;
        Ok(Self::new(&self.a - &other.a, &self.b - &other.b, r))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let r = self.common_radicand(other)?;
        let rr = rat(r as i64);
        let a = &self.a * &other.a + &self.b * &other.b * rr;
        let b = &self.a * &other.b + &self.b * &other.a;
        Ok(Self::new(a, b, r))
    }

    /// Squared norm `a² - b²r` (product with the conjugate).
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.b * &self.b * rat(self.r as i64)
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        let norm = other.norm();
        if norm.is_zero() {
            return Err(Error::Surd("division by zero".into()));
        }
        let num = self.checked_mul(&other.conjugate())?;
        Ok(Self::new(num.a / &norm, num.b / &norm, num.r))
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        Self::new(&self.a * s, &self.b * s, self.r)
    }

    /// Horner evaluation of a rational polynomial at this surd.
    pub fn eval(&self, p: &Polynomial<BigRational>) -> Self {
        let mut acc = Self::int(0);
        for c in p.coeffs().iter().rev() {
            acc = acc
                .checked_mul(self)
                .expect("single radicand")
                .checked_add(&Self::rational(c.clone()))
                .expect("single radicand");
        }
        acc
    }

    /// The integer value, if this surd is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        (self.r == 0 && self.a.is_integer()).then(|| self.a.to_integer())
    }

    pub fn to_json(&self) -> Result<SurdJson> {
        let f = |q: &BigRational| -> Result<[i64; 2]> {
            match (q.numer().to_i64(), q.denom().to_i64()) {
                (Some(n), Some(d)) => Ok([n, d]),
                _ => Err(Error::Surd(format!("{q} does not fit in i64"))),
            }
        };
        Ok(SurdJson {
            a: f(&self.a)?,
            b: f(&self.b)?,
            r: self.r,
            mult: 1,
        })
    }
}

impl fmt::Display for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.r == 0 {
            return write!(f, "{}", self.a);
        }
        let mag = self.b.abs();
        let coeff = if mag.is_one() { String::new() } else { mag.to_string() };
        if self.a.is_zero() {
            let sign = if self.b.is_negative() { "-" } else { "" };
            write!(f, "{sign}{coeff}√{}", self.r)
        } else {
            let sign = if self.b.is_negative() { '-' } else { '+' };
            write!(f, "{} {sign} {coeff}√{}", self.a, self.r)
        }
    }
}

impl fmt::Debug for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Lossless wire form: `{"a":[num,den],"b":[num,den],"r":int,"mult":int}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurdJson {
    pub a: [i64; 2],
    pub b: [i64; 2],
    pub r: u64,
    pub mult: usize,
}

impl SurdJson {
    pub fn to_surd(&self) -> Result<QuadSurd> {
        if self.a[1] == 0 || self.b[1] == 0 {
            return Err(Error::Surd("zero denominator".into()));
        }
        let q = |p: [i64; 2]| BigRational::new(BigInt::from(p[0]), BigInt::from(p[1]));
        Ok(QuadSurd::new(q(self.a), q(self.b), self.r))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactEigenvalue {
    pub value: QuadSurd,
    pub multiplicity: usize,
}

/// A multiset of exact eigenvalues, merged and sorted in descending order.
/// Entries with multiplicity zero are dropped.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ExactSpectrum {
    entries: Vec<ExactEigenvalue>,
}

impl ExactSpectrum {
    pub fn new(items: impl IntoIterator<Item = (QuadSurd, usize)>) -> Self {
        let mut entries: Vec<ExactEigenvalue> = Vec::new();
        for (value, multiplicity) in items {
            if multiplicity == 0 {
                continue;
            }
            match entries.iter_mut().find(|e| e.value == value) {
                Some(e) => e.multiplicity += multiplicity,
                None => entries.push(ExactEigenvalue { value, multiplicity }),
            }
        }
        entries.sort_by(|x, y| {
            y.value
                .to_f64()
                .partial_cmp(&x.value.to_f64())
                .unwrap_or(Ordering::Equal)
        });
        Self { entries }
    }

    pub fn entries(&self) -> &[ExactEigenvalue] {
        &self.entries
    }

    pub fn total_multiplicity(&self) -> usize {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }

    pub fn distinct_count(&self) -> usize {
        self.entries.len()
    }

    pub fn largest(&self) -> Option<&QuadSurd> {
        self.entries.first().map(|e| &e.value)
    }

    /// Exact trace, grouped by radicand (`0` holds the rational part).
    /// Distinct square-free radicands are linearly independent over the
    /// rationals, so the trace is zero iff every group is zero.
    pub fn trace(&self) -> BTreeMap<u64, BigRational> {
        let mut out: BTreeMap<u64, BigRational> = BTreeMap::new();
        for e in &self.entries {
            let m = rat(e.multiplicity as i64);
            *out.entry(0).or_insert_with(BigRational::zero) += e.value.a() * &m;
            if e.value.r() != 0 {
                *out.entry(e.value.r()).or_insert_with(BigRational::zero) += e.value.b() * &m;
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    pub fn trace_is_zero(&self) -> bool {
        self.trace().is_empty()
    }

    /// Values expanded by multiplicity, descending.
    pub fn expanded_f64(&self) -> Vec<f64> {
        self.entries
            .iter()
            .flat_map(|e| std::iter::repeat(e.value.to_f64()).take(e.multiplicity))
            .collect()
    }

    pub fn to_json(&self) -> Result<Vec<SurdJson>> {
        self.entries
            .iter()
            .map(|e| {
                let mut j = e.value.to_json()?;
                j.mult = e.multiplicity;
                Ok(j)
            })
            .collect()
    }

    /// `Π (x - λ)^m` over the rationals. Irrational values must come in
    /// conjugate pairs of equal multiplicity.
    pub fn char_poly(&self) -> Result<Polynomial<BigRational>> {
        let mut out = Polynomial::constant(BigRational::one());
        for e in &self.entries {
            let v = &e.value;
            let factor = if v.is_rational() {
                Polynomial::linear(v.a().clone())
            } else if v.b().is_positive() {
                let conj = v.conjugate();
                let paired = self
                    .entries
                    .iter()
                    .any(|o| o.value == conj && o.multiplicity == e.multiplicity);
                if !paired {
                    return Err(Error::Surd(format!("{v} has no matching conjugate")));
                }
                // x² - 2a·x + (a² - b²r)
                Polynomial::new(vec![v.norm(), -(v.a() * rat(2)), BigRational::one()])
            } else {
                continue;
            };
            out = &out * &factor.pow(e.multiplicity as u32);
        }
        Ok(out)
    }

    pub fn from_json(items: &[SurdJson]) -> Result<Self> {
        let items: Result<Vec<_>> = items.iter().map(|j| Ok((j.to_surd()?, j.mult))).collect();
        Ok(Self::new(items?))
    }
}

impl fmt::Display for ExactSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if e.multiplicity == 1 {
                write!(f, "{}", e.value)?;
            } else {
                write!(f, "({})^{}", e.value, e.multiplicity)?;
            }
        }
        write!(f, "}}")
    }
}

/// Integer square root when `n` is a perfect square.
pub fn exact_isqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let s = n.sqrt();
    (&s * &s == *n).then_some(s)
}

/// `num / den` when the division is exact.
pub fn exact_div(num: &BigInt, den: &BigInt) -> Option<BigInt> {
    let (q, r) = num.div_rem(den);
    r.is_zero().then_some(q)
}
