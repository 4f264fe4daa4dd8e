//! Reconstruction of the Hilbert polynomial of the theta line bundle `Ξ` on
//! the ten-dimensional moduli space `M_2`.
//!
//! Serre duality with canonical bundle `Ξ^{-6}` makes `p(n) = p(-6-n)`, and
//! `p` vanishes at `-1, …, -5`. Writing `M = (n+3)^2`, the remaining quartic
//! factor is `(M - A)(M - B)` with `A = (α+3)^2`, `B = (β+3)^2`, so
//!
//! ```text
//! p(n) = γ (n+1)(n+2)(n+3)^2(n+4)(n+5) (M^2 - σ M + π),   σ = A + B, π = AB.
//! ```
//!
//! The unknowns `(γ, γσ, γπ)` enter linearly, so three values of `p` fix
//! them. The leading coefficient `γ` equals `c_1(Ξ)^{10} / 10!`.

use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::field::RationalField;
use crate::linalg;
use crate::poly::Poly;
use crate::scalar::{factorial, is_integral, Scalar};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FitError {
    #[error("the linear system for (gamma, gamma*sigma, gamma*pi) is singular")]
    SingularSystem,
    #[error("10! * gamma = {0} is not an integer")]
    NonIntegralChern(String),
}

impl FitError {
    pub fn code(&self) -> &'static str {
        match self {
            FitError::SingularSystem => "SINGULAR_SYSTEM",
            FitError::NonIntegralChern(_) => "NON_INTEGRAL_CHERN",
        }
    }
}

/// Dimension of `M_2`, hence the degree of `p`.
pub const MODULI_DIMENSION: u32 = 10;

/// Dynkin index of the adjoint representation of a group of type `C_2`.
pub const ADJOINT_DYNKIN_INDEX: i64 = 6;

/// The power of `Ξ` giving the canonical bundle of `M_2`.
pub fn canonical_power() -> i64 {
    -ADJOINT_DYNKIN_INDEX
}

/// Points at which the three input values are taken.
pub const SAMPLE_POINTS: [i64; 3] = [0, 1, 2];

fn vanishing_factor(n: i64) -> i64 {
    (n + 1) * (n + 2) * (n + 3) * (n + 3) * (n + 4) * (n + 5)
}

/// Solve for `(γ, γσ, γπ)` over any scalar type. Exact for rationals; the
/// floating instantiation serves as an independent numeric check.
pub fn solve_fit_system<T: Scalar>(values: [T; 3]) -> Result<[T; 3], FitError> {
    let rows = SAMPLE_POINTS
        .iter()
        .map(|&n| {
            let c = T::from_int(vanishing_factor(n));
            let m = T::from_int((n + 3) * (n + 3));
            vec![c.clone() * m.clone() * m.clone(), -(c.clone() * m), c]
        })
        .collect();
    let x = linalg::solve(rows, values.to_vec()).ok_or(FitError::SingularSystem)?;
    Ok([x[0].clone(), x[1].clone(), x[2].clone()])
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertFit {
    pub gamma: Rational,
    /// `A + B`.
    pub sigma: Rational,
    /// `A · B`.
    pub pi: Rational,
    /// `10! · γ`, the top self-intersection of `c_1(Ξ)`.
    pub chern_degree: i64,
}

pub fn fit_hilbert(p0: i64, p1: i64, p2: i64) -> Result<HilbertFit, FitError> {
    let values = [p0, p1, p2].map(Rational::from_int);
    let [gamma, gamma_sigma, gamma_pi] = solve_fit_system(values)?;
    if gamma.is_zero() {
        // σ and π are undetermined when the leading coefficient vanishes.
        return Err(FitError::SingularSystem);
    }
    let chern = &gamma * Rational::from_integer(factorial(MODULI_DIMENSION));
    if !is_integral(&chern) {
        return Err(FitError::NonIntegralChern(chern.to_string()));
    }
    let chern_degree = chern
        .to_integer()
        .to_i64()
        .ok_or_else(|| FitError::NonIntegralChern(chern.to_string()))?;
    Ok(HilbertFit {
        sigma: &gamma_sigma / &gamma,
        pi: &gamma_pi / &gamma,
        gamma,
        chern_degree,
    })
}

impl HilbertFit {
    pub fn evaluate(&self, n: i64) -> Rational {
        let c = Rational::from_int(vanishing_factor(n));
        let m = Rational::from_int((n + 3) * (n + 3));
        let quartic = &m * &m - &self.sigma * &m + &self.pi;
        &self.gamma * c * quartic
    }

    /// The expanded degree-10 polynomial.
    pub fn polynomial(&self) -> Poly<RationalField> {
        let q = RationalField;
        let lin = |a: i64| Poly::from_i64s(q, &[a, 1]);
        let shifted = lin(3);
        let m = &shifted * &shifted;
        let quartic = &(&(&m * &m) - &m.scale(&self.sigma)) + &Poly::constant(q, self.pi.clone());
        let roots = [1, 2, 3, 3, 4, 5]
            .into_iter()
            .fold(Poly::one(q), |acc, a| &acc * &lin(a));
        (&roots * &quartic).scale(&self.gamma)
    }

    /// Centre `c` of the reflection symmetry `p(c + t) = p(c - t)`, read off
    /// from the two top coefficients and confirmed on all coefficients.
    pub fn symmetry_center(&self) -> Option<Rational> {
        let p = self.polynomial();
        let d = p.degree()?;
        if d == 0 {
            return None;
        }
        let lead = p.coeff(d);
        let next = p.coeff(d - 1);
        let center = -next / (lead * Rational::from_int(d as i64));
        // p(2c - x) == p(x)
        let reflect = Poly::from_coeffs(
            RationalField,
            vec![&center * Rational::from_int(2), Rational::from_int(-1)],
        );
        (p.compose(&reflect) == p).then_some(center)
    }

    /// Leading coefficient of the expanded polynomial.
    pub fn leading_coefficient(&self) -> Rational {
        let p = self.polynomial();
        p.degree()
            .map(|d| p.coeff(d))
            .unwrap_or_else(Rational::zero)
    }
}

/// Base-point count `c_1(Ξ)^{10}` from the three Hilbert values.
pub fn base_point_count(p0: i64, p1: i64, p2: i64) -> Result<i64, FitError> {
    fit_hilbert(p0, p1, p2).map(|fit| fit.chern_degree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn fit() -> HilbertFit {
        fit_hilbert(1, 10, 58).unwrap()
    }

    #[test]
    fn gamma_and_chern_degree() {
        let fit = fit();
        assert_eq!(fit.gamma, rat(1, 604_800));
        assert_eq!(fit.gamma * Rational::from_integer(factorial(10)), rat(6, 1));
        assert_eq!(fit.chern_degree, 6);
    }

    #[test]
    fn sigma_pi_values() {
        // Frozen from an independent symbolic solve of the same system.
        let fit = fit();
        assert_eq!(fit.sigma, rat(-35, 1));
        assert_eq!(fit.pi, rat(1284, 1));
    }

    #[test]
    fn evaluations() {
        let fit = fit();
        assert_eq!(fit.evaluate(0), rat(1, 1));
        assert_eq!(fit.evaluate(-3), rat(0, 1));
        assert_eq!(fit.evaluate(-4), rat(0, 1));
        assert_eq!(fit.evaluate(7), fit.evaluate(-13));
    }

    #[test]
    fn expanded_polynomial_matches_evaluation() {
        let fit = fit();
        let p = fit.polynomial();
        assert_eq!(p.degree(), Some(10));
        for n in -10..=10 {
            assert_eq!(p.eval(&Rational::from_int(n)), fit.evaluate(n));
        }
    }

    #[test]
    fn symmetry_center_is_half_canonical_power() {
        let fit = fit();
        assert_eq!(fit.symmetry_center(), Some(rat(-3, 1)));
        assert_eq!(canonical_power(), -6);
        assert_eq!(fit.leading_coefficient(), fit.gamma);
    }

    #[test]
    fn chern_degree_is_integral_linear_form() {
        // 10! gamma = 90 p0 - 20 p1 + 2 p2 on integer inputs.
        for (p0, p1, p2) in [
            (1, 10, 58),
            (1, 10, 59),
            (2, 10, 58),
            (1, 11, 58),
            (0, 0, 1),
        ] {
            let fit = fit_hilbert(p0, p1, p2).unwrap();
            assert_eq!(fit.chern_degree, 90 * p0 - 20 * p1 + 2 * p2);
        }
    }

    #[test]
    fn zero_values_are_degenerate() {
        assert_eq!(fit_hilbert(0, 0, 0), Err(FitError::SingularSystem));
    }

    #[test]
    fn float_solve_agrees() {
        let [g, _, _] = solve_fit_system([1.0f64, 10.0, 58.0]).unwrap();
        assert!((g * 3_628_800.0 - 6.0).abs() < 1e-9);
    }
}
