#![allow(dead_code)]

pub mod oracle;

use theta_lab::{CurveFp, CurvePoint, MumfordDivisor, PicClassFp, PrimeField};

use oracle::{Ideal, Oracle};

pub const F13_LOWER: [i64; 5] = [0, -1, 0, 0, 0];
/// `y^2 = x^5 + x + 1` over `F_13`: unlike `x^5 - x`, where every `2M ≠ 0`
/// has the form `2[q] - 2[∞]`, most translates meet `Θ` in two distinct points.
pub const F13_GENERIC_LOWER: [i64; 5] = [1, 1, 0, 0, 0];
pub const F5_LOWER: [i64; 5] = [1, 1, 0, 0, 0];

pub fn curve(p: u64, lower: [i64; 5]) -> CurveFp {
    CurveFp::from_lower(PrimeField::new(p).unwrap(), &lower).unwrap()
}

pub fn f13() -> (CurveFp, Oracle) {
    (curve(13, F13_LOWER), Oracle::new(13, F13_LOWER))
}

pub fn f13_generic() -> (CurveFp, Oracle) {
    (
        curve(13, F13_GENERIC_LOWER),
        Oracle::new(13, F13_GENERIC_LOWER),
    )
}

pub fn f5() -> (CurveFp, Oracle) {
    (curve(5, F5_LOWER), Oracle::new(5, F5_LOWER))
}

pub fn ideal_of(o: &Oracle, m: &MumfordDivisor<PrimeField>) -> Ideal {
    o.ideal_uv(&m.u().coeffs().to_vec(), &m.v().coeffs().to_vec())
}

/// Ideal of the affine part of a point; `∞` gives the unit ideal.
pub fn point_ideal(o: &Oracle, p: &CurvePoint<PrimeField>) -> Ideal {
    match p {
        CurvePoint::Infinity => o.unit_ideal(),
        CurvePoint::Affine { x, y } => o.point_ideal(*x, *y),
    }
}

/// `h^0` of a class computed by the oracle.
pub fn oracle_h0(o: &Oracle, c: &PicClassFp) -> usize {
    let i = ideal_of(o, c.base());
    let k = c.base().weight() as i64;
    o.h0(&i, c.degree() - k)
}
