//! Exact computer algebra for the rank-4 symplectic theta-divisor computations
//! on a genus-2 curve.
//!
//! The crate is organised bottom-up:
//!
//! * [`scalar`], [`field`], [`poly`] and [`linalg`] provide the arithmetic
//!   substrate. Numeric algorithms are generic over a [`Scalar`] (exact
//!   rationals, or `f32`/`f64` for floating cross-checks); curve arithmetic is
//!   generic over a [`Field`] context so that prime fields with a run-time
//!   modulus work alongside the rationals.
//! * [`cyclotomic`] implements exact arithmetic in cyclotomic fields, which is
//!   where the trigonometric Verlinde sums live.
//! * [`verlinde`], [`hilbert`], [`lefschetz`], [`bundle`] and
//!   [`hyperelliptic`] carry the actual computations.

pub mod bundle;
pub mod cyclotomic;
pub mod field;
pub mod hilbert;
pub mod hyperelliptic;
pub mod lefschetz;
pub mod linalg;
pub mod poly;
pub mod scalar;
pub mod verlinde;

pub use bundle::{BundleError, BundleSymbol, RaynaudInvariants};
pub use cyclotomic::{cyclo_sin, ArithError, CyclotomicElement};
pub use field::{Field, FieldError, PrimeField, RationalField};
pub use hilbert::{canonical_power, fit_hilbert, FitError, HilbertFit};
pub use hyperelliptic::{
    AnyCurve, CurveError, CurvePoint, FormalDivisor, HyperellipticCurve, MumfordDivisor, PicClass,
};
pub use lefschetz::{
    hom_ow_scenario, lefschetz_number, split_eigendims, EigenSplit, FixedPointDatum,
    LefschetzError, LefschetzScenario, ScenarioKind,
};
pub use poly::Poly;
pub use scalar::Scalar;
pub use verlinde::{theta_eigendims, verlinde_p2, VerlindeError, VerlindePair};

/// Exact rational numbers.
pub type Rational = num_rational::BigRational;

/// Genus-2 curve over the rationals.
pub type CurveQ = HyperellipticCurve<RationalField>;
/// Genus-2 curve over a prime field.
pub type CurveFp = HyperellipticCurve<PrimeField>;
/// Divisor class on a curve over a prime field.
pub type PicClassFp = PicClass<PrimeField>;
/// Divisor class on a curve over the rationals.
pub type PicClassQ = PicClass<RationalField>;

/// Lefschetz data with exact rational traces.
pub type ScenarioQ = LefschetzScenario<Rational>;
/// Lefschetz data with double-precision traces.
pub type ScenarioF64 = LefschetzScenario<f64>;
