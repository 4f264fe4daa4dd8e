//! Dense univariate polynomials over a [`Field`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::field::Field;

/// Coefficients are stored low degree first with no trailing zeros, so the
/// zero polynomial has an empty coefficient vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> Poly<F> {
    pub fn from_coeffs(field: F, coeffs: Vec<F::Elem>) -> Self {
        let mut p = Poly { field, coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(field: F, coeffs: &[i64]) -> Self {
        let coeffs = coeffs.iter().map(|&c| field.from_i64(c)).collect();
        Self::from_coeffs(field, coeffs)
    }

    pub fn zero(field: F) -> Self {
        Poly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: F) -> Self {
        let one = field.one();
        Self::from_coeffs(field, vec![one])
    }

    pub fn constant(field: F, c: F::Elem) -> Self {
        Self::from_coeffs(field, vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(field: F, c: F::Elem, k: usize) -> Self {
        let mut coeffs = vec![field.zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(field, coeffs)
    }

    /// `x - a`.
    pub fn linear_root(field: F, a: &F::Elem) -> Self {
        let c0 = field.neg(a);
        let c1 = field.one();
        Self::from_coeffs(field, vec![c0, c1])
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| self.field.is_zero(c)) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> F::Elem {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the convention deg 0 = -1, handy for size comparisons.
    pub fn deg_i(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == self.field.one()
    }

    pub fn leading(&self) -> Option<&F::Elem> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| *c == self.field.one())
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let coeffs = self.coeffs.iter().map(|a| self.field.mul(a, c)).collect();
        Self::from_coeffs(self.field.clone(), coeffs)
    }

    /// Divide by the leading coefficient; the zero polynomial is returned as is.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lc) => {
                let inv = self.field.inv(lc).expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
        }
    }

    /// Divide by `x^k`, dropping the low coefficients.
    pub fn shift_down(&self, k: usize) -> Self {
        let coeffs = self.coeffs.iter().skip(k).cloned().collect();
        Self::from_coeffs(self.field.clone(), coeffs)
    }

    pub fn eval(&self, x: &F::Elem) -> F::Elem {
        self.coeffs.iter().rev().fold(self.field.zero(), |acc, c| {
            self.field.add(&self.field.mul(&acc, x), c)
        })
    }

    /// `self(other(x))`.
    pub fn compose(&self, other: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(self.field.clone()), |acc, c| {
                &(&acc * other) + &Poly::constant(self.field.clone(), c.clone())
            })
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| self.field.mul(c, &self.field.from_i64(i as i64)))
            .collect();
        Self::from_coeffs(self.field.clone(), coeffs)
    }

    /// Euclidean division. Panics on division by the zero polynomial.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let f = &self.field;
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = f
            .inv(divisor.leading().expect("nonzero"))
            .expect("leading coefficient is nonzero");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(f.clone()), self.clone());
        }
        let mut quot = vec![f.zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = f.mul(&rem[i], &lead_inv);
            if f.is_zero(&c) {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                let k = i - dd + j;
                rem[k] = f.sub(&rem[k], &f.mul(&c, dc));
            }
            quot[i - dd] = c;
        }
        rem.truncate(dd);
        (
            Self::from_coeffs(f.clone(), quot),
            Self::from_coeffs(f.clone(), rem),
        )
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(a: &Self, b: &Self) -> Self {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        while !r1.is_zero() {
            let r = r0.rem(&r1);
            r0 = r1;
            r1 = r;
        }
        r0.monic()
    }

    /// Returns `(g, s, t)` with `g = s*a + t*b` and `g` the monic gcd.
    pub fn xgcd(a: &Self, b: &Self) -> (Self, Self, Self) {
        let field = a.field.clone();
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Poly::one(field.clone()), Poly::zero(field.clone()));
        let (mut t0, mut t1) = (Poly::zero(field.clone()), Poly::one(field.clone()));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.leading() {
            None => (r0, s0, t0),
            Some(lc) => {
                let inv = field.inv(lc).expect("nonzero");
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
        }
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, mut e: u64, modulus: &Self) -> Self {
        let mut acc = Poly::one(self.field.clone()).rem(modulus);
        let mut base = self.rem(modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = (&acc * &base).rem(modulus);
            }
            base = (&base * &base).rem(modulus);
            e >>= 1;
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Poly::one(self.field.clone()), |acc, _| &acc * self)
    }

    /// Canonical text in the variable `var`, highest degree first, e.g.
    /// `x^2 - 1/2*x + 3`.
    pub fn format_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let f = &self.field;
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if f.is_zero(c) {
                continue;
            }
            let negative = f.is_negative(c);
            let magnitude = if negative { f.neg(c) } else { c.clone() };
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let is_unit = magnitude == f.one();
            match i {
                0 => out.push_str(&f.format(&magnitude)),
                _ => {
                    if !is_unit {
                        out.push_str(&f.format(&magnitude));
                        out.push('*');
                    }
                    out.push_str(var);
                    if i > 1 {
                        out.push('^');
                        out.push_str(&i.to_string());
                    }
                }
            }
        }
        out
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with("x"))
    }
}

impl<'a, F: Field> Add<&'a Poly<F>> for &'a Poly<F> {
    type Output = Poly<F>;

    fn add(self, rhs: &'a Poly<F>) -> Poly<F> {
        let f = &self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| f.add(&self.coeff(i), &rhs.coeff(i)))
            .collect();
        Poly::from_coeffs(f.clone(), coeffs)
    }
}

impl<'a, F: Field> Sub<&'a Poly<F>> for &'a Poly<F> {
    type Output = Poly<F>;

    fn sub(self, rhs: &'a Poly<F>) -> Poly<F> {
        let f = &self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| f.sub(&self.coeff(i), &rhs.coeff(i)))
            .collect();
        Poly::from_coeffs(f.clone(), coeffs)
    }
}

impl<'a, F: Field> Mul<&'a Poly<F>> for &'a Poly<F> {
    type Output = Poly<F>;

    fn mul(self, rhs: &'a Poly<F>) -> Poly<F> {
        let f = &self.field;
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(f.clone());
        }
        let mut coeffs = vec![f.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = f.add(&coeffs[i + j], &f.mul(a, b));
            }
        }
        Poly::from_coeffs(f.clone(), coeffs)
    }
}

impl<F: Field> Neg for &Poly<F> {
    type Output = Poly<F>;

    fn neg(self) -> Poly<F> {
        let coeffs = self.coeffs.iter().map(|c| self.field.neg(c)).collect();
        Poly::from_coeffs(self.field.clone(), coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, RationalField};
    use crate::scalar::rat;

    fn q(c: &[i64]) -> Poly<RationalField> {
        Poly::from_i64s(RationalField, c)
    }

    #[test]
    fn trailing_zeros_are_dropped() {
        assert_eq!(q(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(q(&[0, 0]).is_zero());
        assert_eq!(q(&[]).degree(), None);
    }

    #[test]
    fn division_identity() {
        let a = q(&[5, -3, 0, 2, 1]);
        let b = q(&[1, 0, 3]);
        let (quo, rem) = a.div_rem(&b);
        assert_eq!(&(&quo * &b) + &rem, a);
        assert!(rem.deg_i() < b.deg_i());
    }

    #[test]
    fn xgcd_bezout() {
        let a = &q(&[-1, 1]) * &q(&[2, 0, 1]);
        let b = &q(&[-1, 1]) * &q(&[3, 1]);
        let (g, s, t) = Poly::xgcd(&a, &b);
        assert_eq!(g, q(&[-1, 1]));
        assert_eq!(&(&s * &a) + &(&t * &b), g);
    }

    #[test]
    fn formatting_is_canonical() {
        let p = Poly::from_coeffs(RationalField, vec![rat(3, 1), rat(-1, 2), rat(1, 1)]);
        assert_eq!(p.to_string(), "x^2 - 1/2*x + 3");
        assert_eq!(q(&[0, -1]).to_string(), "-x");
        assert_eq!(q(&[]).to_string(), "0");
        let f13 = PrimeField::new(13).unwrap();
        assert_eq!(Poly::from_i64s(f13, &[-1, 0, 1]).to_string(), "x^2 + 12");
    }

    #[test]
    fn compose_reflects() {
        // p(x) = x^2 + x, p(-6 - x) = x^2 + 11x + 30
        let p = q(&[0, 1, 1]);
        assert_eq!(p.compose(&q(&[-6, -1])), q(&[30, 11, 1]));
    }

    #[test]
    fn derivative_and_pow_mod() {
        let f13 = PrimeField::new(13).unwrap();
        let x = Poly::from_i64s(f13, &[0, 1]);
        let m = Poly::from_i64s(f13, &[-1, 0, 0, 0, 0, 1]);
        // x^13 mod (x^5 - 1) = x^3
        assert_eq!(x.pow_mod(13, &m), Poly::from_i64s(f13, &[0, 0, 0, 1]));
        assert_eq!(m.derivative(), Poly::from_i64s(f13, &[0, 0, 0, 0, 5]));
    }
}
