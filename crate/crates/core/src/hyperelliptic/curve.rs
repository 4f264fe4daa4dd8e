use std::fmt;

use crate::field::Field;
use crate::poly::Poly;

use super::CurveError;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CurvePoint<F: Field> {
    Infinity,
    Affine { x: F::Elem, y: F::Elem },
}

impl<F: Field> CurvePoint<F> {
    pub fn is_infinity(&self) -> bool {
        matches!(self, CurvePoint::Infinity)
    }

    pub fn format(&self, field: &F) -> String {
        match self {
            CurvePoint::Infinity => "inf".to_string(),
            CurvePoint::Affine { x, y } => format!("({}, {})", field.format(x), field.format(y)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HyperellipticCurve<F: Field> {
    field: F,
    f: Poly<F>,
}

impl<F: Field> HyperellipticCurve<F> {
    /// `coeffs` are `c0, …, c5`, low degree first; `c5` must be 1.
    pub fn new(field: F, coeffs: Vec<F::Elem>) -> Result<Self, CurveError> {
        if field.characteristic() == 2 {
            return Err(CurveError::EvenCharacteristic);
        }
        let f = Poly::from_coeffs(field.clone(), coeffs);
        if f.degree() != Some(5) || !f.is_monic() {
            return Err(CurveError::NotMonic);
        }
        if Poly::gcd(&f, &f.derivative()).degree() != Some(0) {
            return Err(CurveError::NotSquarefree);
        }
        Ok(HyperellipticCurve { field, f })
    }

    /// `y^2 = x^5 + c4 x^4 + … + c0`.
    pub fn from_lower(field: F, lower: &[i64; 5]) -> Result<Self, CurveError> {
        let mut coeffs: Vec<F::Elem> = lower.iter().map(|&c| field.from_i64(c)).collect();
        coeffs.push(field.one());
        Self::new(field, coeffs)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn f(&self) -> &Poly<F> {
        &self.f
    }

    pub fn genus(&self) -> u32 {
        2
    }

    pub fn contains(&self, p: &CurvePoint<F>) -> bool {
        match p {
            CurvePoint::Infinity => true,
            CurvePoint::Affine { x, y } => {
                let k = &self.field;
                k.mul(y, y) == self.f.eval(x)
            }
        }
    }

    pub fn check_point(&self, p: &CurvePoint<F>) -> Result<(), CurveError> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(CurveError::NotOnCurve(p.format(&self.field)))
        }
    }

    /// `(x, y) ↦ (x, -y)`.
    pub fn involution(&self, p: &CurvePoint<F>) -> CurvePoint<F> {
        match p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { x, y } => CurvePoint::Affine {
                x: x.clone(),
                y: self.field.neg(y),
            },
        }
    }

    pub fn is_weierstrass(&self, p: &CurvePoint<F>) -> bool {
        self.contains(p) && self.involution(p) == *p
    }

    /// The five affine roots of `f` in ascending order, then `∞`.
    pub fn weierstrass_points(&self) -> Result<Vec<CurvePoint<F>>, CurveError> {
        let roots = self.field.roots(&self.f);
        if roots.len() != 5 {
            return Err(CurveError::DoesNotSplit(self.field.describe()));
        }
        let mut points: Vec<CurvePoint<F>> = roots
            .into_iter()
            .map(|x| CurvePoint::Affine {
                x,
                y: self.field.zero(),
            })
            .collect();
        points.push(CurvePoint::Infinity);
        Ok(points)
    }

    /// All points over a finite base field: `∞` first, then affine points
    /// by `x`, with `y` in field order.
    pub fn points(&self) -> Result<Vec<CurvePoint<F>>, CurveError> {
        let elements = self.field.elements().ok_or(CurveError::NotFinite)?;
        let mut out = vec![CurvePoint::Infinity];
        for x in &elements {
            let fx = self.f.eval(x);
            for y in &elements {
                if self.field.mul(y, y) == fx {
                    out.push(CurvePoint::Affine {
                        x: x.clone(),
                        y: y.clone(),
                    });
                }
            }
        }
        Ok(out)
    }

    /// Affine points with a given `x`-coordinate.
    pub fn points_over(&self, x: &F::Elem) -> Vec<CurvePoint<F>> {
        let fx = self.f.eval(x);
        match self.field.sqrt(&fx) {
            None => vec![],
            Some(y) if self.field.is_zero(&y) => vec![CurvePoint::Affine { x: x.clone(), y }],
            Some(y) => {
                let minus = self.field.neg(&y);
                vec![
                    CurvePoint::Affine { x: x.clone(), y },
                    CurvePoint::Affine {
                        x: x.clone(),
                        y: minus,
                    },
                ]
            }
        }
    }
}

impl<F: Field> fmt::Display for HyperellipticCurve<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y^2 = {} over {}", self.f, self.field.describe())
    }
}
