//! Verlinde numbers for `Sp_4` at level 2 on a genus-2 curve, and the
//! eigenspace dimensions of `|2nΘ|` under the Serre involution.
//!
//! At level `k = 2` the dual Coxeter shift gives `k + 3 = 5`. The integrable
//! weights correspond to pairs `(s, t)` with `s, t ≥ 1`, `s + t ≤ 4`, and
//! each contributes the Weyl denominator
//!
//! ```text
//! S(s,t) = 2^4 sin(π(s+t)/5) sin(πt/5) sin(πs/10) sin(π(s+2t)/10)
//! ```
//!
//! The two long-root factors use denominator 5 and the two short-root factors
//! denominator 10. The genus-2 value is `p(2) = 2^2 5^2 Σ S(s,t)^{-2}`.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::cyclotomic::{cyclo_sin, ArithError, CyclotomicElement};
use crate::scalar::is_integral;
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerlindeError {
    #[error("({0}, {1}) is not an admissible level-2 pair")]
    InvalidPair(u32, u32),
    #[error("theta eigendimensions need n >= 1 and g >= 2, got n = {n}, g = {g}")]
    InvalidInput { n: u32, g: u32 },
    #[error("value overflows 64 bits")]
    Overflow,
    #[error("2n^g - 2^(g-1) is negative for n = {n}, g = {g}")]
    NegativeDimension { n: u32, g: u32 },
    #[error(transparent)]
    Arith(#[from] ArithError),
}

impl VerlindeError {
    pub fn code(&self) -> &'static str {
        match self {
            VerlindeError::InvalidPair(..) => "INVALID_PAIR",
            VerlindeError::InvalidInput { .. } => "INVALID_INPUT",
            VerlindeError::Overflow => "OVERFLOW",
            VerlindeError::NegativeDimension { .. } => "NEGATIVE_DIMENSION",
            VerlindeError::Arith(e) => e.code(),
        }
    }
}

/// Level of the Verlinde data implemented here.
pub const LEVEL: u32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VerlindePair {
    s: u32,
    t: u32,
}

impl VerlindePair {
    pub fn new(s: u32, t: u32) -> Result<Self, VerlindeError> {
        if s >= 1 && t >= 1 && s + t <= LEVEL + 2 {
            Ok(VerlindePair { s, t })
        } else {
            Err(VerlindeError::InvalidPair(s, t))
        }
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn t(&self) -> u32 {
        self.t
    }
}

/// The six admissible pairs, ordered by `(s, t)`.
pub fn admissible_pairs() -> Vec<VerlindePair> {
    let bound = LEVEL + 2;
    (1..bound)
        .flat_map(|s| (1..=bound - s).map(move |t| VerlindePair { s, t }))
        .collect()
}

pub fn s_factor(pair: VerlindePair) -> CyclotomicElement {
    let (s, t) = (pair.s as i64, pair.t as i64);
    let factors = [
        cyclo_sin(s + t, 5),
        cyclo_sin(t, 5),
        cyclo_sin(s, 10),
        cyclo_sin(s + 2 * t, 10),
    ];
    let sixteen =
        CyclotomicElement::from_rational(factors[0].modulus(), Rational::from_integer(16.into()));
    factors.iter().fold(sixteen, |acc, f| &acc * f)
}

/// `Σ S(s,t)^{-2}` over the admissible pairs, summed in the cyclotomic field.
pub fn inverse_square_sum() -> Result<CyclotomicElement, VerlindeError> {
    let mut total: Option<CyclotomicElement> = None;
    for pair in admissible_pairs() {
        let term = s_factor(pair).pow(-2)?;
        total = Some(match total {
            None => term,
            Some(acc) => &acc + &term,
        });
    }
    Ok(total.expect("there are admissible pairs"))
}

/// `p(2) = 100 Σ S(s,t)^{-2}`, asserted to be an integer.
pub fn verlinde_p2() -> Result<i64, VerlindeError> {
    let sum = inverse_square_sum()?.to_rational()?;
    let value = sum * Rational::from_integer(BigInt::from(100));
    if !is_integral(&value) {
        return Err(ArithError::NotInteger(value.to_string()).into());
    }
    value.to_integer().to_i64().ok_or(VerlindeError::Overflow)
}

/// `S(s,t)` in double precision, straight from `f64::sin`.
pub fn s_factor_f64(pair: VerlindePair) -> f64 {
    use std::f64::consts::PI;
    let (s, t) = (f64::from(pair.s), f64::from(pair.t));
    16.0 * (PI * (s + t) / 5.0).sin()
        * (PI * t / 5.0).sin()
        * (PI * s / 10.0).sin()
        * (PI * (s + 2.0 * t) / 10.0).sin()
}

/// `100 Σ S^{-2}` in double precision.
pub fn verlinde_p2_f64() -> f64 {
    100.0
        * admissible_pairs()
            .into_iter()
            .map(|p| s_factor_f64(p).powi(-2))
            .sum::<f64>()
}

/// `χ(M, Ξ^0)`.
pub const P0: i64 = 1;
/// `χ(M, Ξ^1)`.
pub const P1: i64 = 10;

/// `(p(0), p(1), p(2))`; the first two are fixed constants, the third is
/// computed.
pub fn hilbert_values() -> Result<(i64, i64, i64), VerlindeError> {
    Ok((P0, P1, verlinde_p2()?))
}

/// `(2n^g + 2^{g-1}, 2n^g - 2^{g-1})`: the even and odd parts of
/// `H^0(J^{g-1}, 2nΘ)`. The expression is returned as written for every
/// `g`; it agrees with `h^0(2nΘ) = (2n)^g` only at `g = 2`.
pub fn theta_eigendims(n: u32, g: u32) -> Result<(u64, u64), VerlindeError> {
    if n < 1 || g < 2 {
        return Err(VerlindeError::InvalidInput { n, g });
    }
    let base = (n as u64)
        .checked_pow(g)
        .and_then(|v| v.checked_mul(2))
        .ok_or(VerlindeError::Overflow)?;
    let shift = 1u64.checked_shl(g - 1).ok_or(VerlindeError::Overflow)?;
    let plus = base.checked_add(shift).ok_or(VerlindeError::Overflow)?;
    let minus = base
        .checked_sub(shift)
        .ok_or(VerlindeError::NegativeDimension { n, g })?;
    Ok((plus, minus))
}
