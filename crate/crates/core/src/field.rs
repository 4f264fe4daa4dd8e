//! Base fields for curve arithmetic.
//!
//! A [`Field`] is a context object: prime fields carry their modulus at run
//! time, so elements are plain values and every operation goes through the
//! field.

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::poly::Poly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("characteristic 2 is not supported")]
    EvenCharacteristic,
    #[error("{0} is not prime")]
    NotPrime(u64),
}

pub trait Field: Clone + Debug + PartialEq + Send + Sync {
    type Elem: Clone + Debug + PartialEq + Eq + Hash + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    // Conversions need the field value: F_p carries its modulus at runtime.
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, n: i64) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_rational(&self, q: &BigRational) -> Option<Self::Elem>;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    /// 0 for the rationals.
    fn characteristic(&self) -> u64;

    /// Number of elements, `None` when infinite.
    fn order(&self) -> Option<u64>;

    /// All elements in a fixed order; `None` when infinite.
    fn elements(&self) -> Option<Vec<Self::Elem>>;

    /// A square root, if one exists in the field.
    fn sqrt(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// The distinct roots of `f` lying in the field, in ascending order.
    fn roots(&self, f: &Poly<Self>) -> Vec<Self::Elem>;

    /// Canonical textual form: lowest terms for rationals, least nonnegative
    /// residue for prime fields.
    fn format(&self, a: &Self::Elem) -> String;

    /// `true` if the canonical form of `a` starts with a minus sign.
    fn is_negative(&self, _a: &Self::Elem) -> bool {
        false
    }

    fn describe(&self) -> String;
}

/// The field of rational numbers.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct RationalField;

impl Field for RationalField {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_rational(&self, q: &BigRational) -> Option<BigRational> {
        Some(q.clone())
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn order(&self) -> Option<u64> {
        None
    }

    fn elements(&self) -> Option<Vec<BigRational>> {
        None
    }

    fn sqrt(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_negative() {
            return None;
        }
        let n = exact_isqrt(a.numer())?;
        let d = exact_isqrt(a.denom())?;
        Some(BigRational::new(n, d))
    }

    fn roots(&self, f: &Poly<Self>) -> Vec<BigRational> {
        rational_roots(f)
    }

    fn format(&self, a: &BigRational) -> String {
        a.to_string()
    }

    fn is_negative(&self, a: &BigRational) -> bool {
        a.is_negative()
    }

    fn describe(&self) -> String {
        "Q".to_string()
    }
}

fn exact_isqrt(n: &BigInt) -> Option<BigInt> {
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Rational root test on the primitive integer multiple of `f`.
fn rational_roots(f: &Poly<RationalField>) -> Vec<BigRational> {
    if f.degree().is_none() {
        return Vec::new();
    }
    let mut g = f.clone();
    let mut roots = Vec::new();
    // Strip the factor x^k first so the constant term is nonzero.
    if g.coeff(0).is_zero() {
        roots.push(BigRational::zero());
        while g.degree().is_some_and(|d| d > 0) && g.coeff(0).is_zero() {
            g = g.shift_down(1);
        }
    }
    if g.degree() == Some(0) {
        return roots;
    }
    let lcm = g
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = g
        .coeffs()
        .iter()
        .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let lead = ints.last().expect("nonzero polynomial");
    let constant = &ints[0];
    for p in positive_divisors(constant) {
        for q in positive_divisors(lead) {
            if p.gcd(&q) != BigInt::one() {
                continue;
            }
            for sign in [Sign::Plus, Sign::Minus] {
                let candidate =
                    BigRational::new(BigInt::from_biguint(sign, p.magnitude().clone()), q.clone());
                if g.eval(&candidate).is_zero() && !roots.contains(&candidate) {
                    roots.push(candidate);
                }
            }
        }
    }
    roots.sort();
    roots
}

/// The prime field of `p` elements, `p` an odd prime below 2^63.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if p == 2 {
            return Err(FieldError::EvenCharacteristic);
        }
        if p >= 1 << 63 || !primal_check::miller_rabin(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn reduce(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    pub fn pow(&self, base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        let mut b = base % self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            b = self.mul(&b, &b);
            exp >>= 1;
        }
        acc
    }

    fn is_square(&self, a: u64) -> bool {
        a == 0 || self.pow(a, (self.p - 1) / 2) == 1
    }

    /// Tonelli–Shanks.
    fn tonelli_shanks(&self, a: u64) -> Option<u64> {
        let p = self.p;
        if a == 0 {
            return Some(0);
        }
        if !self.is_square(a) {
            return None;
        }
        let mut q = p - 1;
        let mut s = 0u32;
        while q.is_multiple_of(2) {
            q /= 2;
            s += 1;
        }
        let z = (2..p).find(|&z| !self.is_square(z))?;
        let mut m = s;
        let mut c = self.pow(z, q);
        let mut t = self.pow(a, q);
        let mut r = self.pow(a, q.div_ceil(2));
        while t != 1 {
            let mut i = 0u32;
            let mut t2 = t;
            while t2 != 1 {
                t2 = self.mul(&t2, &t2);
                i += 1;
            }
            let b = self.pow(c, 1u64 << (m - i - 1));
            m = i;
            c = self.mul(&b, &b);
            t = self.mul(&t, &c);
            r = self.mul(&r, &b);
        }
        Some(r.min(p - r))
    }

    /// Distinct roots by equal-degree splitting of gcd(f, x^p - x).
    fn split_roots(&self, f: &Poly<Self>) -> Vec<u64> {
        let Some(deg) = f.degree() else {
            return Vec::new();
        };
        if deg == 0 {
            return Vec::new();
        }
        let x = Poly::monomial(*self, self.one(), 1);
        let xp = x.pow_mod(self.p, f);
        let g = Poly::gcd(f, &(&xp - &x));
        let mut roots = Vec::new();
        self.split_linear_product(g, &mut roots);
        roots.sort_unstable();
        roots
    }

    fn split_linear_product(&self, g: Poly<Self>, out: &mut Vec<u64>) {
        match g.degree() {
            None | Some(0) => {}
            Some(1) => {
                let g = g.monic();
                out.push(self.neg(&g.coeff(0)));
            }
            Some(d) => {
                // Deterministic shifts keep the output reproducible.
                for delta in 0..self.p {
                    let shifted = Poly::from_coeffs(*self, vec![delta, 1]);
                    let h = shifted.pow_mod((self.p - 1) / 2, &g);
                    let h = &h - &Poly::constant(*self, 1);
                    let factor = Poly::gcd(&g, &h);
                    let fd = factor.degree().unwrap_or(0);
                    if fd > 0 && fd < d {
                        let (rest, _) = g.div_rem(&factor);
                        self.split_linear_product(factor, out);
                        self.split_linear_product(rest, out);
                        return;
                    }
                }
                unreachable!("a product of distinct linear factors always splits");
            }
        }
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn from_i64(&self, n: i64) -> u64 {
        self.reduce(n)
    }

    fn from_rational(&self, q: &BigRational) -> Option<u64> {
        let p = BigInt::from(self.p);
        let num = q.numer().mod_floor(&p).to_u64()?;
        let den = q.denom().mod_floor(&p).to_u64()?;
        let inv = self.inv(&den)?;
        Some(self.mul(&num, &inv))
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.p as u128) as u64
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + self.p as u128 - *b as u128) % self.p as u128) as u64
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn inv(&self, a: &u64) -> Option<u64> {
        (!(*a).is_multiple_of(self.p)).then(|| self.pow(*a, self.p - 2))
    }

    fn characteristic(&self) -> u64 {
        self.p
    }

    fn order(&self) -> Option<u64> {
        Some(self.p)
    }

    fn elements(&self) -> Option<Vec<u64>> {
        Some((0..self.p).collect())
    }

    fn sqrt(&self, a: &u64) -> Option<u64> {
        self.tonelli_shanks(*a)
    }

    fn roots(&self, f: &Poly<Self>) -> Vec<u64> {
        self.split_roots(f)
    }

    fn format(&self, a: &u64) -> String {
        a.to_string()
    }

    fn describe(&self) -> String {
        format!("Fp:{}", self.p)
    }
}
