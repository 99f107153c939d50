//! Scalar abstraction shared by the dense matrix and polynomial code.
//!
//! Integer matrices (`i64`, `BigInt`), exact rationals (`BigRational`) and
//! floats (`f64`, `f32`) all go through the same generic routines; only the
//! eigensolver needs the stronger [`num_traits::Float`] bound.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, ToPrimitive};

/// A commutative ring element usable as a matrix or polynomial entry.
pub trait Scalar: Num + Clone + Debug + FromPrimitive {
    /// Lossy conversion used when handing exact values to the numeric path.
    fn to_f64_lossy(&self) -> f64;

    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("every scalar type in this crate represents i64")
    }
}

impl Scalar for i64 {
    fn to_f64_lossy(&self) -> f64 {
        *self as f64
    }
}

impl Scalar for i128 {
    fn to_f64_lossy(&self) -> f64 {
        *self as f64
    }
}

impl Scalar for f64 {
    fn to_f64_lossy(&self) -> f64 {
        *self
    }
}

impl Scalar for f32 {
    fn to_f64_lossy(&self) -> f64 {
        f64::from(*self)
    }
}

impl Scalar for BigInt {
    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for BigRational {
    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

/// Shorthand for an integer-valued rational.
pub fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// `num / den` as a reduced rational.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}
