//! Genus-2 curves `y^2 = f(x)` with `f` monic of degree 5, and their
//! Jacobians.
//!
//! With a quintic model the single point at infinity is a Weierstrass point
//! and the canonical class is `2[∞]`. A degree-`d` class is stored as a
//! reduced Mumford pair `(u, v)` for a degree-0 class plus the integer `d`:
//! the class is `div(u, v) + (d - deg u)[∞]`.

mod curve;
mod mumford;
mod pic;
mod text;

use thiserror::Error;

use crate::field::FieldError;

pub use curve::{CurvePoint, HyperellipticCurve};
pub use mumford::MumfordDivisor;
pub use pic::{FormalDivisor, PencilChain, PicClass, MAX_ENUMERATION_ORDER};
pub use text::{parse_class, parse_poly, AnyCurve};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("f has a repeated factor")]
    NotSquarefree,
    #[error("characteristic 2 is not supported")]
    EvenCharacteristic,
    #[error("f must be monic of degree 5")]
    NotMonic,
    #[error("point {0} does not lie on the curve")]
    NotOnCurve(String),
    #[error("invalid Mumford pair: {0}")]
    InvalidMumford(String),
    #[error("f does not split into linear factors over {0}")]
    DoesNotSplit(String),
    #[error("expected a class of degree {expected}, got degree {got}")]
    WrongDegree { expected: i64, got: i64 },
    #[error("2M = 0, so K + 2M = K moves in a pencil")]
    OrderTwo,
    #[error("the points of the divisor {0} are not defined over the base field")]
    IrrationalPoints(String),
    #[error("{0} is not a Weierstrass point")]
    NotWeierstrass(String),
    #[error("enumeration needs a field with at most {max} elements, got {order}")]
    FieldTooLarge { order: u64, max: u64 },
    #[error("enumeration needs a finite base field")]
    NotFinite,
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}

impl CurveError {
    pub fn code(&self) -> &'static str {
        match self {
            CurveError::NotSquarefree => "NOT_SQUAREFREE",
            CurveError::EvenCharacteristic => "EVEN_CHARACTERISTIC",
            CurveError::NotMonic => "NOT_MONIC",
            CurveError::NotOnCurve(_) => "NOT_ON_CURVE",
            CurveError::InvalidMumford(_) => "INVALID_MUMFORD",
            CurveError::DoesNotSplit(_) => "DOES_NOT_SPLIT",
            CurveError::WrongDegree { .. } => "WRONG_DEGREE",
            CurveError::OrderTwo => "ORDER_TWO",
            CurveError::IrrationalPoints(_) => "IRRATIONAL_POINTS",
            CurveError::NotWeierstrass(_) => "NOT_WEIERSTRASS",
            CurveError::FieldTooLarge { .. } => "FIELD_TOO_LARGE",
            CurveError::NotFinite => "NOT_FINITE",
            CurveError::Parse(_) => "PARSE",
            CurveError::Field(FieldError::EvenCharacteristic) => "EVEN_CHARACTERISTIC",
            CurveError::Field(FieldError::NotPrime(_)) => "NOT_PRIME",
        }
    }
}
