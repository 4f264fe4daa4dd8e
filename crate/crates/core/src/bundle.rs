//! Rank/degree bookkeeping for vector bundles on a curve of genus `g`.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::scalar::factorial;
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BundleError {
    #[error("rank must be at least 1, got {0}")]
    InvalidRank(i64),
    #[error("genus must be at least 2, got {0}")]
    InvalidGenus(i64),
    #[error("bundles live on curves of different genus ({0} and {1})")]
    GenusMismatch(i64, i64),
    #[error("wedge^2 of a line bundle is zero")]
    ZeroRank,
    #[error("Raynaud invariants are only implemented for g = 2, got {0}")]
    UnsupportedGenus(i64),
    #[error("value overflows 64 bits")]
    Overflow,
}

impl BundleError {
    pub fn code(&self) -> &'static str {
        match self {
            BundleError::InvalidRank(_) => "INVALID_RANK",
            BundleError::InvalidGenus(_) => "INVALID_GENUS",
            BundleError::GenusMismatch(..) => "GENUS_MISMATCH",
            BundleError::ZeroRank => "ZERO_RANK",
            BundleError::UnsupportedGenus(_) => "UNSUPPORTED_GENUS",
            BundleError::Overflow => "OVERFLOW",
        }
    }
}

pub const DEFAULT_GENUS: i64 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BundleSymbol {
    rank: i64,
    degree: i64,
    genus: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinaryOp {
    Tensor,
    Hom,
}

impl BundleSymbol {
    pub fn new(rank: i64, degree: i64, genus: i64) -> Result<Self, BundleError> {
        if rank < 1 {
            return Err(BundleError::InvalidRank(rank));
        }
        if genus < 2 {
            return Err(BundleError::InvalidGenus(genus));
        }
        Ok(BundleSymbol {
            rank,
            degree,
            genus,
        })
    }

    /// A symbol on a genus-2 curve.
    pub fn genus_two(rank: i64, degree: i64) -> Result<Self, BundleError> {
        Self::new(rank, degree, DEFAULT_GENUS)
    }

    pub fn trivial_line(genus: i64) -> Result<Self, BundleError> {
        Self::new(1, 0, genus)
    }

    pub fn rank(&self) -> i64 {
        self.rank
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn genus(&self) -> i64 {
        self.genus
    }

    /// Riemann–Roch: `d + r(1 - g)`.
    pub fn chi(&self) -> i64 {
        self.degree + self.rank * (1 - self.genus)
    }

    pub fn slope(&self) -> Rational {
        Rational::new(BigInt::from(self.degree), BigInt::from(self.rank))
    }

    fn with(&self, rank: i64, degree: i64) -> Self {
        BundleSymbol {
            rank,
            degree,
            genus: self.genus,
        }
    }

    pub fn combine(&self, other: &BundleSymbol, op: BinaryOp) -> Result<Self, BundleError> {
        if self.genus != other.genus {
            return Err(BundleError::GenusMismatch(self.genus, other.genus));
        }
        let rank = self
            .rank
            .checked_mul(other.rank)
            .ok_or(BundleError::Overflow)?;
        let a = self
            .rank
            .checked_mul(other.degree)
            .ok_or(BundleError::Overflow)?;
        let b = other
            .rank
            .checked_mul(self.degree)
            .ok_or(BundleError::Overflow)?;
        let degree = match op {
            BinaryOp::Tensor => a.checked_add(b),
            BinaryOp::Hom => a.checked_sub(b),
        }
        .ok_or(BundleError::Overflow)?;
        Ok(self.with(rank, degree))
    }

    pub fn tensor(&self, other: &BundleSymbol) -> Result<Self, BundleError> {
        self.combine(other, BinaryOp::Tensor)
    }

    /// `Hom(self, other) = self^* ⊗ other`.
    pub fn hom(&self, other: &BundleSymbol) -> Result<Self, BundleError> {
        self.combine(other, BinaryOp::Hom)
    }

    pub fn dual(&self) -> Self {
        self.with(self.rank, -self.degree)
    }

    pub fn det(&self) -> Self {
        self.with(1, self.degree)
    }

    /// Tensor with a line bundle of degree `l`.
    pub fn twist(&self, l: i64) -> Self {
        self.with(self.rank, self.degree + self.rank * l)
    }

    pub fn sym2(&self) -> Self {
        let r = self.rank;
        self.with(r * (r + 1) / 2, self.degree * (r + 1))
    }

    pub fn wedge2(&self) -> Result<Self, BundleError> {
        let r = self.rank;
        if r < 2 {
            return Err(BundleError::ZeroRank);
        }
        Ok(self.with(r * (r - 1) / 2, self.degree * (r - 1)))
    }
}

impl fmt::Display for BundleSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(rank {}, degree {}, g {})",
            self.rank, self.degree, self.genus
        )
    }
}

/// Whether a subbundle of this slope is compatible with stability of the
/// ambient bundle, i.e. `μ(sub) < μ(ambient)`.
pub fn stability_allows(sub: &BundleSymbol, ambient: &BundleSymbol) -> bool {
    sub.slope() < ambient.slope()
}

/// `n(2n+1)(g-1)`, the dimension of the moduli of rank-`2n` symplectic bundles.
pub fn moduli_dim(n: i64, g: i64) -> Result<i64, BundleError> {
    if n < 1 {
        return Err(BundleError::InvalidRank(n));
    }
    if g < 2 {
        return Err(BundleError::InvalidGenus(g));
    }
    n.checked_mul(2 * n + 1)
        .and_then(|v| v.checked_mul(g - 1))
        .ok_or(BundleError::Overflow)
}

/// `(kΘ)^g = k^g · g!` on a principally polarized abelian variety of dimension `g`.
pub fn theta_self_intersection(k: i64, g: u32) -> Result<i64, BundleError> {
    let kg = k.checked_pow(g).ok_or(BundleError::Overflow)?;
    let gf: i64 = factorial(g).try_into().map_err(|_| BundleError::Overflow)?;
    kg.checked_mul(gf).ok_or(BundleError::Overflow)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RaynaudInvariants {
    pub mukai_rank: i64,
    pub duplication_degree: i64,
    pub theta_self_int_2theta: i64,
    pub pullback_degree_on_y: i64,
    pub slope_ec: Rational,
}

/// Invariants of the rank-4 bundle on a genus-2 Jacobian and its restriction
/// to the Abel–Jacobi curve.
pub fn raynaud_invariants(g: i64) -> Result<RaynaudInvariants, BundleError> {
    if g != 2 {
        return Err(BundleError::UnsupportedGenus(g));
    }
    let gu = g as u32;
    let theta2 = theta_self_intersection(2, gu)?;
    let mukai_rank = theta2 / g;
    // Multiplication by 2 on J has degree 2^{2g}.
    let duplication_degree = 1i64 << (2 * g);
    // 2Θ restricted to the Abel–Jacobi curve has degree 2g.
    let pullback_degree_on_y = duplication_degree * 2 * g;
    let slope_ec = Rational::new(
        BigInt::from(pullback_degree_on_y),
        BigInt::from(duplication_degree * mukai_rank),
    );
    Ok(RaynaudInvariants {
        mukai_rank,
        duplication_degree,
        theta_self_int_2theta: theta2,
        pullback_degree_on_y,
        slope_ec,
    })
}
