//! Exact arithmetic in cyclotomic fields `Q(ζ_N)`.
//!
//! Elements are stored in the power basis `1, ζ, …, ζ^{φ(N)-1}` modulo the
//! cyclotomic polynomial `Φ_N`, so equal elements have equal coefficient
//! vectors. Operands with different moduli are embedded into `Q(ζ_lcm)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::field::RationalField;
use crate::poly::Poly;
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is not rational: {0}")]
    NotRational(String),
    #[error("value is not an integer: {0}")]
    NotInteger(String),
}

impl ArithError {
    pub fn code(&self) -> &'static str {
        match self {
            ArithError::DivisionByZero => "DIVISION_BY_ZERO",
            ArithError::NotRational(_) => "NOT_RATIONAL",
            ArithError::NotInteger(_) => "NOT_INTEGER",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycloOp {
    Add,
    Sub,
    Mul,
    Div,
}

fn mobius(mut n: u32) -> i32 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

pub fn euler_phi(n: u32) -> u32 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u32
}

/// `Φ_n(x) = ∏_{d | n} (x^d - 1)^{μ(n/d)}`.
pub fn cyclotomic_polynomial(n: u32) -> Poly<RationalField> {
    assert!(n >= 1, "cyclotomic modulus must be positive");
    let q = RationalField;
    let mut num = Poly::one(q);
    let mut den = Poly::one(q);
    for d in (1..=n).filter(|d| n.is_multiple_of(*d)) {
        let mut coeffs = vec![0i64; d as usize + 1];
        coeffs[0] = -1;
        coeffs[d as usize] = 1;
        let factor = Poly::from_i64s(q, &coeffs);
        match mobius(n / d) {
            1 => num = &num * &factor,
            -1 => den = &den * &factor,
            _ => {}
        }
    }
    num.exact_div(&den)
}

#[derive(Clone, Debug)]
pub struct CyclotomicElement {
    modulus: u32,
    coeffs: Vec<Rational>,
    phi: Arc<Poly<RationalField>>,
}

impl CyclotomicElement {
    fn from_poly(modulus: u32, phi: Arc<Poly<RationalField>>, p: &Poly<RationalField>) -> Self {
        let reduced = p.rem(&phi);
        let dim = phi.degree().expect("cyclotomic polynomial is nonconstant");
        let coeffs = (0..dim).map(|i| reduced.coeff(i)).collect();
        CyclotomicElement {
            modulus,
            coeffs,
            phi,
        }
    }

    fn as_poly(&self) -> Poly<RationalField> {
        Poly::from_coeffs(RationalField, self.coeffs.clone())
    }

    pub fn from_rational(modulus: u32, q: Rational) -> Self {
        let phi = Arc::new(cyclotomic_polynomial(modulus));
        Self::from_poly(modulus, phi, &Poly::constant(RationalField, q))
    }

    pub fn zero(modulus: u32) -> Self {
        Self::from_rational(modulus, Rational::zero())
    }

    pub fn one(modulus: u32) -> Self {
        Self::from_rational(modulus, Rational::one())
    }

    /// `ζ_N^k` for any integer `k`.
    pub fn root_of_unity(modulus: u32, k: i64) -> Self {
        let phi = Arc::new(cyclotomic_polynomial(modulus));
        let e = k.rem_euclid(modulus as i64) as usize;
        Self::from_poly(
            modulus,
            phi,
            &Poly::monomial(RationalField, Rational::one(), e),
        )
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Power-basis coordinates; the length is always `φ(N)`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Re-express in `Q(ζ_target)`; `target` must be a multiple of the modulus.
    pub fn embed(&self, target: u32) -> Self {
        assert!(
            target.is_multiple_of(self.modulus),
            "Q(zeta_{}) does not embed in Q(zeta_{})",
            self.modulus,
            target
        );
        if target == self.modulus {
            return self.clone();
        }
        let step = (target / self.modulus) as usize;
        let mut lifted = vec![Rational::zero(); (self.coeffs.len().max(1) - 1) * step + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            lifted[j * step] = c.clone();
        }
        let phi = Arc::new(cyclotomic_polynomial(target));
        Self::from_poly(target, phi, &Poly::from_coeffs(RationalField, lifted))
    }

    fn aligned(a: &Self, b: &Self) -> (Self, Self) {
        if a.modulus == b.modulus {
            (a.clone(), b.clone())
        } else {
            let l = a.modulus.lcm(&b.modulus);
            (a.embed(l), b.embed(l))
        }
    }

    fn combine(
        &self,
        other: &Self,
        op: impl Fn(&Poly<RationalField>, &Poly<RationalField>) -> Poly<RationalField>,
    ) -> Self {
        let (a, b) = Self::aligned(self, other);
        let p = op(&a.as_poly(), &b.as_poly());
        Self::from_poly(a.modulus, a.phi.clone(), &p)
    }

    pub fn inv(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        // Φ_N is irreducible, so any nonzero element is coprime to it.
        let (g, s, _) = Poly::xgcd(&self.as_poly(), &self.phi);
        debug_assert!(g.is_one());
        Ok(Self::from_poly(self.modulus, self.phi.clone(), &s))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ArithError> {
        let (a, b) = Self::aligned(self, other);
        Ok(&a * &b.inv()?)
    }

    pub fn pow(&self, e: i32) -> Result<Self, ArithError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::from_poly(self.modulus, self.phi.clone(), &Poly::one(RationalField));
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// The rational value, if every non-constant coordinate vanishes.
    pub fn to_rational(&self) -> Result<Rational, ArithError> {
        if self.coeffs.iter().skip(1).all(Zero::is_zero) {
            Ok(self.coeffs.first().cloned().unwrap_or_else(Rational::zero))
        } else {
            Err(ArithError::NotRational(self.to_string()))
        }
    }

    /// Real and imaginary parts under `ζ_N ↦ exp(2πi/N)`, evaluated in
    /// 256-bit fixed point and rounded once to `f64`.
    pub fn to_complex_f64(&self) -> (f64, f64) {
        approx::evaluate(self.modulus, &self.coeffs)
    }

    pub fn to_f64(&self) -> f64 {
        self.to_complex_f64().0
    }
}

impl PartialEq for CyclotomicElement {
    fn eq(&self, other: &Self) -> bool {
        if self.modulus == other.modulus {
            self.coeffs == other.coeffs
        } else {
            let (a, b) = Self::aligned(self, other);
            a.coeffs == b.coeffs
        }
    }
}

impl Eq for CyclotomicElement {}

impl fmt::Display for CyclotomicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_poly().format_with("z"))
    }
}

impl Add for &CyclotomicElement {
    type Output = CyclotomicElement;

    fn add(self, rhs: &CyclotomicElement) -> CyclotomicElement {
        self.combine(rhs, |a, b| a + b)
    }
}

impl Sub for &CyclotomicElement {
    type Output = CyclotomicElement;

    fn sub(self, rhs: &CyclotomicElement) -> CyclotomicElement {
        self.combine(rhs, |a, b| a - b)
    }
}

impl Mul for &CyclotomicElement {
    type Output = CyclotomicElement;

    fn mul(self, rhs: &CyclotomicElement) -> CyclotomicElement {
        self.combine(rhs, |a, b| a * b)
    }
}

impl Neg for &CyclotomicElement {
    type Output = CyclotomicElement;

    fn neg(self) -> CyclotomicElement {
        CyclotomicElement {
            modulus: self.modulus,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            phi: self.phi.clone(),
        }
    }
}

pub fn cyclo_arith(
    a: &CyclotomicElement,
    b: &CyclotomicElement,
    op: CycloOp,
) -> Result<CyclotomicElement, ArithError> {
    match op {
        CycloOp::Add => Ok(a + b),
        CycloOp::Sub => Ok(a - b),
        CycloOp::Mul => Ok(a * b),
        CycloOp::Div => a.checked_div(b),
    }
}

pub fn cyclo_to_rational(a: &CyclotomicElement) -> Result<Rational, ArithError> {
    a.to_rational()
}

/// Exact `sin(kπ/m)` in `Q(ζ_N)`, `N = lcm(2m, 4)`.
///
/// With `ζ` a primitive `2m`-th root of unity and `i = ζ_N^{N/4}`,
/// `sin(kπ/m) = (ζ^k - ζ^{-k}) / (2i) = (ζ^k - ζ^{-k}) · ζ_N^{3N/4} / 2`.
pub fn cyclo_sin(k: i64, m: u32) -> CyclotomicElement {
    assert!(m >= 1, "sine denominator must be positive");
    let n = (2 * m).lcm(&4);
    let step = (n / (2 * m)) as i64;
    let quarter = (n / 4) as i64;
    let e = k * step;
    let n_i = n as i64;
    let phi = Arc::new(cyclotomic_polynomial(n));
    let q = RationalField;
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let pos = (e + 3 * quarter).rem_euclid(n_i) as usize;
    let neg = (-e + 3 * quarter).rem_euclid(n_i) as usize;
    let p = &Poly::monomial(q, half.clone(), pos) - &Poly::monomial(q, half, neg);
    CyclotomicElement::from_poly(n, phi, &p)
}

mod approx {
    //! Fixed-point evaluation of power-basis elements.

    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::{One, ToPrimitive, Zero};

    use crate::Rational;

    const BITS: u32 = 256;

    fn unit() -> BigInt {
        BigInt::one() << BITS
    }

    /// `atan(1/k)` by its alternating series.
    fn atan_inv(k: u64) -> BigInt {
        let k = BigInt::from(k);
        let k2 = &k * &k;
        let mut power = unit() / &k;
        let mut sum = BigInt::zero();
        let mut n = 0u64;
        while !power.is_zero() {
            let term = &power / BigInt::from(2 * n + 1);
            if n.is_multiple_of(2) {
                sum += term;
            } else {
                sum -= term;
            }
            power /= &k2;
            n += 1;
        }
        sum
    }

    fn pi() -> BigInt {
        atan_inv(5) * 16 - atan_inv(239) * 4
    }

    /// Taylor series for `(cos θ, sin θ)` with `|θ| ≤ π`.
    fn cos_sin(theta: &BigInt) -> (BigInt, BigInt) {
        let one = unit();
        let mut cos = BigInt::zero();
        let mut sin = BigInt::zero();
        let mut term = one.clone();
        let mut n = 0u64;
        while !term.is_zero() {
            match n % 4 {
                0 => cos += &term,
                1 => sin += &term,
                2 => cos -= &term,
                _ => sin -= &term,
            }
            n += 1;
            term = (term * theta) / &one / BigInt::from(n);
        }
        (cos, sin)
    }

    pub(super) fn evaluate(modulus: u32, coeffs: &[Rational]) -> (f64, f64) {
        let pi = pi();
        let n = modulus as i64;
        let mut re = BigInt::zero();
        let mut im = BigInt::zero();
        for (j, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            // Angle 2πj/N folded into (-π, π].
            let j = j as i64;
            let folded = if 2 * j > n { j - n } else { j };
            let theta = &pi * BigInt::from(2 * folded) / BigInt::from(n);
            let (cos, sin) = cos_sin(&theta);
            re += cos * c.numer() / c.denom();
            im += sin * c.numer() / c.denom();
        }
        let to_f64 = |v: BigInt| BigRational::new(v, unit()).to_f64().unwrap_or(f64::NAN);
        (to_f64(re), to_f64(im))
    }
}
