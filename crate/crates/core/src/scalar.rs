//! Scalar types usable by the generic numeric code.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Signed, ToPrimitive, Zero};

/// A number type that supports field arithmetic and ordering.
///
/// Implemented for [`BigRational`] (exact) and for `f32`/`f64`, which are used
/// as independent floating cross-checks of exact results.
pub trait Scalar: Num + Signed + PartialOrd + Clone + Debug + FromPrimitive {
    /// `true` when arithmetic never rounds.
    const EXACT: bool;

    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("every scalar type represents small integers")
    }

    /// The value as an integer, if it is one exactly.
    fn to_exact_i64(&self) -> Option<i64>;

    fn approx_f64(&self) -> f64;
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn to_exact_i64(&self) -> Option<i64> {
        if self.denom().is_one() {
            self.numer().to_i64()
        } else {
            None
        }
    }

    fn approx_f64(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn to_exact_i64(&self) -> Option<i64> {
        if self.fract() == 0.0 && self.abs() < 9.0e15 {
            Some(*self as i64)
        } else {
            None
        }
    }

    fn approx_f64(&self) -> f64 {
        *self
    }
}

impl Scalar for f32 {
    const EXACT: bool = false;

    fn to_exact_i64(&self) -> Option<i64> {
        if self.fract() == 0.0 && self.abs() < 1.6e7 {
            Some(*self as i64)
        } else {
            None
        }
    }

    fn approx_f64(&self) -> f64 {
        f64::from(*self)
    }
}

/// `n!` as a big integer.
pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

#[cfg(test)]
pub(crate) fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub(crate) fn is_integral(q: &BigRational) -> bool {
    q.denom().is_one() || q.is_zero()
}
