use std::fmt;

use crate::field::Field;
use crate::poly::Poly;

use super::curve::{CurvePoint, HyperellipticCurve};
use super::CurveError;

/// A reduced pair `(u, v)`: `u` monic with `deg u ≤ 2`, `deg v < deg u`,
/// and `u | v^2 - f`. Represents `div(u, v) - deg(u)[∞]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MumfordDivisor<F: Field> {
    u: Poly<F>,
    v: Poly<F>,
}

impl<F: Field> MumfordDivisor<F> {
    pub fn identity(field: F) -> Self {
        MumfordDivisor {
            u: Poly::one(field.clone()),
            v: Poly::zero(field),
        }
    }

    pub fn u(&self) -> &Poly<F> {
        &self.u
    }

    pub fn v(&self) -> &Poly<F> {
        &self.v
    }

    pub fn is_identity(&self) -> bool {
        self.u.is_one()
    }

    /// Number of affine points in the support, with multiplicity.
    pub fn weight(&self) -> usize {
        self.u.degree().unwrap_or(0)
    }
}

impl<F: Field> fmt::Display for MumfordDivisor<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "u={}; v={}", self.u, self.v)
    }
}

impl<F: Field> HyperellipticCurve<F> {
    /// Validate a pair and return it as a reduced divisor.
    pub fn mumford(&self, u: Poly<F>, v: Poly<F>) -> Result<MumfordDivisor<F>, CurveError> {
        let du = u
            .degree()
            .ok_or_else(|| CurveError::InvalidMumford("u = 0".into()))?;
        if du > 2 || !u.is_monic() {
            return Err(CurveError::InvalidMumford(format!(
                "u = {u} must be monic of degree at most 2"
            )));
        }
        if v.deg_i() >= du as isize {
            return Err(CurveError::InvalidMumford(format!(
                "deg v must be below deg u, got v = {v}"
            )));
        }
        if !(&(&v * &v) - self.f()).rem(&u).is_zero() {
            return Err(CurveError::InvalidMumford(format!(
                "u = {u} does not divide v^2 - f"
            )));
        }
        Ok(MumfordDivisor { u, v })
    }

    pub fn identity(&self) -> MumfordDivisor<F> {
        MumfordDivisor::identity(self.field().clone())
    }

    /// `[P] - [∞]`.
    pub fn point_divisor(&self, p: &CurvePoint<F>) -> Result<MumfordDivisor<F>, CurveError> {
        self.check_point(p)?;
        Ok(match p {
            CurvePoint::Infinity => self.identity(),
            CurvePoint::Affine { x, y } => MumfordDivisor {
                u: Poly::linear_root(self.field().clone(), x),
                v: Poly::constant(self.field().clone(), y.clone()),
            },
        })
    }

    /// `(u, -v mod u)`.
    pub fn negate(&self, a: &MumfordDivisor<F>) -> MumfordDivisor<F> {
        MumfordDivisor {
            u: a.u.clone(),
            v: (-&a.v).rem(&a.u),
        }
    }

    /// Cantor's composition followed by reduction.
    pub fn cantor_add(&self, a: &MumfordDivisor<F>, b: &MumfordDivisor<F>) -> MumfordDivisor<F> {
        let f = self.f();
        let (d1, e1, e2) = Poly::xgcd(&a.u, &b.u);
        let (d, c1, c2) = Poly::xgcd(&d1, &(&a.v + &b.v));
        let s1 = &c1 * &e1;
        let s2 = &c1 * &e2;
        let s3 = c2;
        let mut u = (&a.u * &b.u).exact_div(&(&d * &d));
        let numer =
            &(&(&(&s1 * &a.u) * &b.v) + &(&(&s2 * &b.u) * &a.v)) + &(&s3 * &(&(&a.v * &b.v) + f));
        let mut v = numer.exact_div(&d).rem(&u);
        while u.deg_i() > 2 {
            let next = (f - &(&v * &v)).exact_div(&u);
            v = (-&v).rem(&next);
            u = next;
        }
        let u = u.monic();
        let v = v.rem(&u);
        MumfordDivisor { u, v }
    }

    pub fn double(&self, a: &MumfordDivisor<F>) -> MumfordDivisor<F> {
        self.cantor_add(a, a)
    }

    pub fn sub(&self, a: &MumfordDivisor<F>, b: &MumfordDivisor<F>) -> MumfordDivisor<F> {
        self.cantor_add(a, &self.negate(b))
    }

    /// `n · a` by double-and-add.
    pub fn scalar_mul(&self, a: &MumfordDivisor<F>, n: i64) -> MumfordDivisor<F> {
        let base = if n < 0 { self.negate(a) } else { a.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = self.identity();
        let mut pow = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.cantor_add(&acc, &pow);
            }
            k >>= 1;
            if k > 0 {
                pow = self.double(&pow);
            }
        }
        acc
    }

    /// The affine points of the support, when they are defined over the base
    /// field; `∞` never appears here.
    pub fn support(&self, a: &MumfordDivisor<F>) -> Result<Vec<CurvePoint<F>>, CurveError> {
        let k = self.field();
        let roots = k.roots(&a.u);
        let mut out = Vec::new();
        for x in &roots {
            let point = CurvePoint::Affine {
                x: x.clone(),
                y: a.v.eval(x),
            };
            out.push(point);
        }
        match (a.weight(), roots.len()) {
            (w, n) if w == n => Ok(out),
            (2, 1) => {
                // u = (x - r)^2
                let p = out[0].clone();
                Ok(vec![p.clone(), p])
            }
            _ => Err(CurveError::IrrationalPoints(a.to_string())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn curve() -> HyperellipticCurve<PrimeField> {
        HyperellipticCurve::from_lower(PrimeField::new(13).unwrap(), &[0, -1, 0, 0, 0]).unwrap()
    }

    #[test]
    fn identity_and_inverse() {
        let c = curve();
        let pts = c.points().unwrap();
        for p in &pts {
            for q in &pts {
                let a = c.cantor_add(&c.point_divisor(p).unwrap(), &c.point_divisor(q).unwrap());
                c.mumford(a.u().clone(), a.v().clone()).unwrap();
                assert_eq!(c.cantor_add(&a, &c.identity()), a);
                assert!(c.cantor_add(&a, &c.negate(&a)).is_identity());
            }
        }
    }

    #[test]
    fn point_plus_conjugate_is_trivial() {
        let c = curve();
        for p in c.points().unwrap() {
            let a = c.point_divisor(&p).unwrap();
            let b = c.point_divisor(&c.involution(&p)).unwrap();
            assert!(c.cantor_add(&a, &b).is_identity());
        }
    }

    #[test]
    fn scalar_mul_matches_repeated_addition() {
        let c = curve();
        let p = c.points().unwrap()[3].clone();
        let a = c.point_divisor(&p).unwrap();
        let mut acc = c.identity();
        for n in 0..20 {
            assert_eq!(c.scalar_mul(&a, n), acc);
            assert_eq!(c.scalar_mul(&a, -n), c.negate(&acc));
            acc = c.cantor_add(&acc, &a);
        }
    }

    #[test]
    fn invalid_pairs_rejected() {
        let c = curve();
        let k = *c.field();
        let bad = c.mumford(Poly::from_i64s(k, &[2, 1]), Poly::from_i64s(k, &[1]));
        assert!(matches!(bad, Err(CurveError::InvalidMumford(_))));
    }

    #[test]
    fn support_of_weierstrass_sum() {
        let c = curve();
        let w = c.weierstrass_points().unwrap();
        let a = c.cantor_add(
            &c.point_divisor(&w[0]).unwrap(),
            &c.point_divisor(&w[1]).unwrap(),
        );
        let mut s = c.support(&a).unwrap();
        s.sort_by_key(|p| format!("{p:?}"));
        assert_eq!(s.len(), 2);
        assert!(s.iter().all(|p| c.is_weierstrass(p)));
    }
}
