use std::fmt;

use crate::field::Field;
use crate::poly::Poly;

use super::curve::{CurvePoint, HyperellipticCurve};
use super::mumford::MumfordDivisor;
use super::CurveError;

/// Largest field order accepted by [`HyperellipticCurve::enumerate_pic`].
pub const MAX_ENUMERATION_ORDER: u64 = 37;

/// A divisor class `base + degree·[∞]`, where `base` has degree 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PicClass<F: Field> {
    base: MumfordDivisor<F>,
    degree: i64,
}

impl<F: Field> PicClass<F> {
    pub fn new(base: MumfordDivisor<F>, degree: i64) -> Self {
        PicClass { base, degree }
    }

    pub fn base(&self) -> &MumfordDivisor<F> {
        &self.base
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }
}

impl<F: Field> fmt::Display for PicClass<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}; deg={}", self.base, self.degree)
    }
}

/// A finite formal sum `Σ n_P [P]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalDivisor<F: Field> {
    terms: Vec<(CurvePoint<F>, i64)>,
}

impl<F: Field> FormalDivisor<F> {
    pub fn new(terms: Vec<(CurvePoint<F>, i64)>) -> Self {
        FormalDivisor { terms }
    }

    pub fn point(p: CurvePoint<F>) -> Self {
        FormalDivisor {
            terms: vec![(p, 1)],
        }
    }

    pub fn terms(&self) -> &[(CurvePoint<F>, i64)] {
        &self.terms
    }

    pub fn degree(&self) -> i64 {
        self.terms.iter().map(|(_, n)| n).sum()
    }

    /// Multiplicities summed per point, zeros dropped, in first-seen order.
    pub fn collected(&self) -> Vec<(CurvePoint<F>, i64)> {
        let mut out: Vec<(CurvePoint<F>, i64)> = Vec::new();
        for (p, n) in &self.terms {
            match out.iter_mut().find(|(q, _)| q == p) {
                Some(entry) => entry.1 += n,
                None => out.push((p.clone(), *n)),
            }
        }
        out.retain(|(_, n)| *n != 0);
        out
    }
}

/// Dimensions in the pencil-trick argument for `μ: H^0(K(x)) ⊗ H^0(2K(x)) → H^0(3K(2x))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PencilChain {
    pub h0_k_x: u64,
    pub h0_2k_x: u64,
    pub h0_3k_2x: u64,
    /// `h^0` of the difference `(2K + x) - (K + x) = K`.
    pub kernel: u64,
    pub image: u64,
    pub cokernel: u64,
}

impl<F: Field> HyperellipticCurve<F> {
    pub fn zero_class(&self) -> PicClass<F> {
        PicClass::new(self.identity(), 0)
    }

    /// `K = 2[∞]`.
    pub fn canonical_class(&self) -> PicClass<F> {
        PicClass::new(self.identity(), 2)
    }

    /// `[P]` as a degree-1 class.
    pub fn point_class(&self, p: &CurvePoint<F>) -> Result<PicClass<F>, CurveError> {
        Ok(PicClass::new(self.point_divisor(p)?, 1))
    }

    /// `d[∞]`.
    pub fn infinity_multiple(&self, d: i64) -> PicClass<F> {
        PicClass::new(self.identity(), d)
    }

    pub fn add_classes(&self, a: &PicClass<F>, b: &PicClass<F>) -> PicClass<F> {
        PicClass::new(self.cantor_add(&a.base, &b.base), a.degree + b.degree)
    }

    pub fn neg_class(&self, a: &PicClass<F>) -> PicClass<F> {
        PicClass::new(self.negate(&a.base), -a.degree)
    }

    pub fn sub_classes(&self, a: &PicClass<F>, b: &PicClass<F>) -> PicClass<F> {
        self.add_classes(a, &self.neg_class(b))
    }

    pub fn scale_class(&self, a: &PicClass<F>, n: i64) -> PicClass<F> {
        PicClass::new(self.scalar_mul(&a.base, n), a.degree * n)
    }

    /// Canonical form of a formal sum of points.
    pub fn reduce_class(&self, d: &FormalDivisor<F>) -> Result<PicClass<F>, CurveError> {
        let mut base = self.identity();
        for (p, n) in d.terms() {
            let pd = self.point_divisor(p)?;
            base = self.cantor_add(&base, &self.scalar_mul(&pd, *n));
        }
        Ok(PicClass::new(base, d.degree()))
    }

    /// `h^0` of a line bundle in the class, by Riemann–Roch on genus 2 and
    /// Jacobi inversion.
    pub fn h0(&self, c: &PicClass<F>) -> u64 {
        let trivial = c.base.is_identity();
        match c.degree {
            d if d < 0 => 0,
            0 => u64::from(trivial),
            // base + (1 - k)[∞] is effective iff k ≤ 1
            1 => u64::from(c.base.weight() <= 1),
            2 => {
                if trivial {
                    2
                } else {
                    1
                }
            }
            d => (d - 1) as u64,
        }
    }

    pub fn is_effective(&self, c: &PicClass<F>) -> bool {
        self.h0(c) > 0
    }

    /// `L ↦ K - L` on degree-1 classes.
    pub fn serre_involution(&self, l: &PicClass<F>) -> Result<PicClass<F>, CurveError> {
        if l.degree != 1 {
            return Err(CurveError::WrongDegree {
                expected: 1,
                got: l.degree,
            });
        }
        Ok(self.sub_classes(&self.canonical_class(), l))
    }

    fn require_degree(c: &PicClass<F>, expected: i64) -> Result<(), CurveError> {
        if c.degree == expected {
            Ok(())
        } else {
            Err(CurveError::WrongDegree {
                expected,
                got: c.degree,
            })
        }
    }

    /// The unique points `q1, q2` with `q1 + q2 ∈ |K + 2M|`.
    pub fn km2_points(
        &self,
        m: &PicClass<F>,
    ) -> Result<(CurvePoint<F>, CurvePoint<F>), CurveError> {
        Self::require_degree(m, 0)?;
        let two_m = self.double(&m.base);
        match two_m.weight() {
            0 => Err(CurveError::OrderTwo),
            1 => {
                let mut s = self.support(&two_m)?;
                Ok((s.remove(0), CurvePoint::Infinity))
            }
            _ => {
                let s = self.support(&two_m)?;
                Ok((s[0].clone(), s[1].clone()))
            }
        }
    }

    /// `{M + [ιq1], M + [ιq2]}`: the two points of `Θ ∩ (Θ + M)` in `Pic^1`.
    pub fn theta_translate_intersection(
        &self,
        m: &PicClass<F>,
    ) -> Result<(PicClass<F>, PicClass<F>), CurveError> {
        let (q1, q2) = self.km2_points(m)?;
        let l1 = self.add_classes(m, &self.point_class(&self.involution(&q1))?);
        let l2 = self.add_classes(m, &self.point_class(&self.involution(&q2))?);
        Ok((l1, l2))
    }

    /// `h^0(L + M) ≥ 1` and `h^0(K - L + M) ≥ 1`.
    pub fn theta_membership(&self, l: &PicClass<F>, m: &PicClass<F>) -> Result<bool, CurveError> {
        let dual = self.serre_involution(l)?;
        Ok(self.is_effective(&self.add_classes(l, m))
            && self.is_effective(&self.add_classes(&dual, m)))
    }

    /// All sixteen classes `Σ_{i∈S} ([w_i] - [∞])` for `S ⊆ {1,2,3,4}`, with
    /// `S` running through bitmasks in increasing order.
    pub fn two_torsion(&self) -> Result<Vec<PicClass<F>>, CurveError> {
        let gens = self.two_torsion_generators()?;
        let mut out = Vec::with_capacity(16);
        for mask in 0u32..16 {
            let mut base = self.identity();
            for (i, g) in gens.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    base = self.cantor_add(&base, g);
                }
            }
            out.push(PicClass::new(base, 0));
        }
        Ok(out)
    }

    /// `[w_i] - [∞]` for the first four finite Weierstrass points.
    pub fn two_torsion_generators(&self) -> Result<Vec<MumfordDivisor<F>>, CurveError> {
        let w = self.weierstrass_points()?;
        w.iter().take(4).map(|p| self.point_divisor(p)).collect()
    }

    /// The divisor `w + p + ιp` in `|K + [w]|`, checked against that class.
    pub fn kx_w_pencil_member(
        &self,
        w: &CurvePoint<F>,
        p: &CurvePoint<F>,
    ) -> Result<FormalDivisor<F>, CurveError> {
        if !self.is_weierstrass(w) {
            return Err(CurveError::NotWeierstrass(w.format(self.field())));
        }
        self.check_point(p)?;
        let d = FormalDivisor::new(vec![
            (w.clone(), 1),
            (p.clone(), 1),
            (self.involution(p), 1),
        ]);
        let expected = self.add_classes(&self.canonical_class(), &self.point_class(w)?);
        let got = self.reduce_class(&d)?;
        assert_eq!(got, expected, "w + p + ιp lies in |K + w|");
        Ok(d)
    }

    pub fn pencil_trick_chain(&self, x: &CurvePoint<F>) -> Result<PencilChain, CurveError> {
        let px = self.point_class(x)?;
        let k = self.canonical_class();
        let k_x = self.add_classes(&k, &px);
        let two_k_x = self.add_classes(&self.scale_class(&k, 2), &px);
        let three_k_2x = self.add_classes(&self.scale_class(&k, 3), &self.scale_class(&px, 2));
        let h0_k_x = self.h0(&k_x);
        let h0_2k_x = self.h0(&two_k_x);
        let h0_3k_2x = self.h0(&three_k_2x);
        let kernel = self.h0(&self.sub_classes(&two_k_x, &k_x));
        let image = h0_k_x * h0_2k_x - kernel;
        Ok(PencilChain {
            h0_k_x,
            h0_2k_x,
            h0_3k_2x,
            kernel,
            image,
            cokernel: h0_3k_2x - image,
        })
    }

    /// Every reduced degree-0 divisor over a finite field of order at most
    /// [`MAX_ENUMERATION_ORDER`].
    pub fn enumerate_mumford(&self) -> Result<Vec<MumfordDivisor<F>>, CurveError> {
        let k = self.field();
        let order = k.order().ok_or(CurveError::NotFinite)?;
        if order > MAX_ENUMERATION_ORDER {
            return Err(CurveError::FieldTooLarge {
                order,
                max: MAX_ENUMERATION_ORDER,
            });
        }
        let elements = k.elements().ok_or(CurveError::NotFinite)?;
        let squares = |a: &F::Elem| -> Vec<F::Elem> {
            elements
                .iter()
                .filter(|y| k.mul(y, y) == *a)
                .cloned()
                .collect()
        };
        let poly = |c: Vec<F::Elem>| Poly::from_coeffs(k.clone(), c);
        let mut out = vec![self.identity()];
        for a in &elements {
            let u = Poly::linear_root(k.clone(), a);
            for b in squares(&self.f().eval(a)) {
                out.push(self.mumford(u.clone(), poly(vec![b]))?);
            }
        }
        // u = x^2 + u1 x + u0, v = v1 x + v0. Reducing v^2 - f modulo u gives
        //   2 v1 v0 - u1 v1^2 = r1,   v0^2 - u0 v1^2 = r0,
        // where f ≡ r1 x + r0.
        let two_inv = k.inv(&k.from_i64(2)).expect("odd characteristic");
        for u1 in &elements {
            for u0 in &elements {
                let u = poly(vec![u0.clone(), u1.clone(), k.one()]);
                let r = self.f().rem(&u);
                let (r0, r1) = (r.coeff(0), r.coeff(1));
                for v1 in &elements {
                    let v1sq = k.mul(v1, v1);
                    let candidates = if k.is_zero(v1) {
                        if k.is_zero(&r1) {
                            squares(&r0)
                        } else {
                            vec![]
                        }
                    } else {
                        let num = k.add(&r1, &k.mul(u1, &v1sq));
                        let v0 = k.mul(&num, &k.mul(&two_inv, &k.inv(v1).expect("nonzero")));
                        let lhs = k.sub(&k.mul(&v0, &v0), &k.mul(u0, &v1sq));
                        if lhs == r0 {
                            vec![v0]
                        } else {
                            vec![]
                        }
                    };
                    for v0 in candidates {
                        out.push(self.mumford(u.clone(), poly(vec![v0, v1.clone()]))?);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Every class of degree `d`.
    pub fn enumerate_pic(&self, d: i64) -> Result<Vec<PicClass<F>>, CurveError> {
        Ok(self
            .enumerate_mumford()?
            .into_iter()
            .map(|m| PicClass::new(m, d))
            .collect())
    }
}
