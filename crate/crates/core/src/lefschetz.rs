//! Holomorphic Lefschetz numbers of an involution with isolated fixed points,
//! and the resulting split of `H^1` into `±1` eigenspaces.
//!
//! For an involution `γ` with fixed points `p`, the alternating trace
//! `Σ_j (-1)^j tr(γ | H^j)` equals `Σ_p tr(γ | V_p) / det(I - dγ_p)`. For the
//! hyperelliptic involution the local model is `z ↦ -z`, so every
//! denominator is `2`.
//!
//! Eigen-sign bookkeeping: with `h^j_±` the dimensions of the eigenspaces,
//! the alternating sum is `(h^0_+ - h^0_-) - (h^1_+ - h^1_-)`.

use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LefschetzError {
    #[error("det(I - dγ) vanishes at a fixed point")]
    ZeroDeterminant,
    #[error("h0_plus = {h0_plus} exceeds h0_total = {h0_total}")]
    InvalidScenario { h0_plus: u64, h0_total: u64 },
    #[error("no nonnegative integer eigenspace split: {0}")]
    Infeasible(String),
}

impl LefschetzError {
    pub fn code(&self) -> &'static str {
        match self {
            LefschetzError::ZeroDeterminant => "ZERO_DETERMINANT",
            LefschetzError::InvalidScenario { .. } => "INVALID_SCENARIO",
            LefschetzError::Infeasible(_) => "INFEASIBLE",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FixedPointDatum<T> {
    trace: T,
    jacobian_det: T,
}

impl<T: Scalar> FixedPointDatum<T> {
    pub fn new(trace: T, jacobian_det: T) -> Result<Self, LefschetzError> {
        if jacobian_det.is_zero() {
            return Err(LefschetzError::ZeroDeterminant);
        }
        Ok(FixedPointDatum {
            trace,
            jacobian_det,
        })
    }

    /// A fixed point of an involution acting as `z ↦ -z`, so `det = 1 - (-1) = 2`.
    pub fn involution(trace: T) -> Self {
        FixedPointDatum {
            trace,
            jacobian_det: T::from_int(2),
        }
    }

    pub fn trace(&self) -> &T {
        &self.trace
    }

    pub fn jacobian_det(&self) -> &T {
        &self.jacobian_det
    }

    pub fn local_term(&self) -> T {
        self.trace.clone() / self.jacobian_det.clone()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LefschetzScenario<T> {
    fixed_points: Vec<FixedPointDatum<T>>,
    h0_total: u64,
    h1_total: u64,
    h0_plus: u64,
}

impl<T: Scalar> LefschetzScenario<T> {
    pub fn new(
        fixed_points: Vec<FixedPointDatum<T>>,
        h0_total: u64,
        h1_total: u64,
        h0_plus: u64,
    ) -> Result<Self, LefschetzError> {
        if h0_plus > h0_total {
            return Err(LefschetzError::InvalidScenario { h0_plus, h0_total });
        }
        Ok(LefschetzScenario {
            fixed_points,
            h0_total,
            h1_total,
            h0_plus,
        })
    }

    /// Involution scenario from a list of integer traces, all with `det = 2`.
    pub fn from_traces(
        traces: &[i64],
        h0_total: u64,
        h1_total: u64,
        h0_plus: u64,
    ) -> Result<Self, LefschetzError> {
        let points = traces
            .iter()
            .map(|&t| FixedPointDatum::involution(T::from_int(t)))
            .collect();
        Self::new(points, h0_total, h1_total, h0_plus)
    }

    pub fn fixed_points(&self) -> &[FixedPointDatum<T>] {
        &self.fixed_points
    }

    pub fn h0_total(&self) -> u64 {
        self.h0_total
    }

    pub fn h1_total(&self) -> u64 {
        self.h1_total
    }

    pub fn h0_plus(&self) -> u64 {
        self.h0_plus
    }

    /// The same scenario with every trace negated.
    pub fn negated(&self) -> Self {
        let fixed_points = self
            .fixed_points
            .iter()
            .map(|p| FixedPointDatum {
                trace: -p.trace.clone(),
                jacobian_det: p.jacobian_det.clone(),
            })
            .collect();
        LefschetzScenario {
            fixed_points,
            ..self.clone()
        }
    }
}

pub fn lefschetz_number<T: Scalar>(s: &LefschetzScenario<T>) -> T {
    s.fixed_points
        .iter()
        .fold(T::zero(), |acc, p| acc + p.local_term())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EigenSplit {
    pub plus: u64,
    pub minus: u64,
}

/// Solve `(h0+ - h0-) - (h1+ - h1-) = L` and `h1+ + h1- = h1` for the `H^1`
/// eigenspace dimensions.
pub fn split_eigendims<T: Scalar>(s: &LefschetzScenario<T>) -> Result<EigenSplit, LefschetzError> {
    let l = lefschetz_number(s);
    let l = l.to_exact_i64().ok_or_else(|| {
        LefschetzError::Infeasible(format!("Lefschetz number {l:?} is not an integer"))
    })?;
    let h0_minus = (s.h0_total - s.h0_plus) as i128;
    // h1+ - h1- = (h0+ - h0-) - L
    let diff = s.h0_plus as i128 - h0_minus - l as i128;
    let h1 = s.h1_total as i128;
    let twice_plus = h1 + diff;
    if twice_plus.rem_euclid(2) != 0 {
        return Err(LefschetzError::Infeasible(format!(
            "h1 = {h1} and h1+ - h1- = {diff} have different parity"
        )));
    }
    let plus = twice_plus / 2;
    if plus < 0 || plus > h1 {
        return Err(LefschetzError::Infeasible(format!(
            "h1+ - h1- = {diff} is out of range for h1 = {h1}"
        )));
    }
    Ok(EigenSplit {
        plus: plus as u64,
        minus: (h1 - plus) as u64,
    })
}

/// Fibre actions at fixed points, as diagonal matrices with entries `±1`.
///
/// Traces of the pinned scenarios are derived from these by the usual
/// multilinear rules: eigenvalues of `Sym^2` are the pairwise products
/// `a_i a_j (i ≤ j)`, and those of `Hom(A, B)` are `a_i^{-1} b_j`.
pub mod linearization {
    /// Eigenvalues of the action on one fibre.
    #[derive(Debug, Clone, PartialEq, Eq)]
    pub struct FibreAction(pub Vec<i64>);

    impl FibreAction {
        pub fn trace(&self) -> i64 {
            self.0.iter().sum()
        }

        pub fn dual(&self) -> FibreAction {
            // Eigenvalues are ±1, so inversion is the identity.
            FibreAction(self.0.clone())
        }

        pub fn tensor(&self, other: &FibreAction) -> FibreAction {
            FibreAction(
                self.0
                    .iter()
                    .flat_map(|a| other.0.iter().map(move |b| a * b))
                    .collect(),
            )
        }

        pub fn hom(&self, target: &FibreAction) -> FibreAction {
            self.dual().tensor(target)
        }

        pub fn sym2(&self) -> FibreAction {
            let e = &self.0;
            FibreAction(
                (0..e.len())
                    .flat_map(|i| (i..e.len()).map(move |j| e[i] * e[j]))
                    .collect(),
            )
        }
    }

    /// A bundle's action at the six Weierstrass points: five points `p ≠ w`
    /// followed by the distinguished point `w`.
    #[derive(Debug, Clone, PartialEq, Eq)]
    pub struct WeierstrassAction {
        pub others: FibreAction,
        pub at_w: FibreAction,
    }

    impl WeierstrassAction {
        pub fn traces(&self) -> Vec<i64> {
            let mut t = vec![self.others.trace(); 5];
            t.push(self.at_w.trace());
            t
        }

        fn map(&self, f: impl Fn(&FibreAction) -> FibreAction) -> Self {
            WeierstrassAction {
                others: f(&self.others),
                at_w: f(&self.at_w),
            }
        }

        pub fn sym2(&self) -> Self {
            self.map(FibreAction::sym2)
        }

        pub fn hom(&self, target: &WeierstrassAction) -> Self {
            WeierstrassAction {
                others: self.others.hom(&target.others),
                at_w: self.at_w.hom(&target.at_w),
            }
        }
    }

    /// First candidate action on the rank-2 bundle: `diag(-1,-1)` away from
    /// `w`, `diag(1,-1)` at `w`.
    pub fn rank_two_first() -> WeierstrassAction {
        WeierstrassAction {
            others: FibreAction(vec![-1, -1]),
            at_w: FibreAction(vec![1, -1]),
        }
    }

    /// Second candidate: `diag(-1,1)` away from `w`, the identity at `w`.
    pub fn rank_two_second() -> WeierstrassAction {
        WeierstrassAction {
            others: FibreAction(vec![-1, 1]),
            at_w: FibreAction(vec![1, 1]),
        }
    }

    /// `O(-w)`: `-1` away from `w`, `+1` at `w`.
    pub fn line_minus_w() -> WeierstrassAction {
        WeierstrassAction {
            others: FibreAction(vec![-1]),
            at_w: FibreAction(vec![1]),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScenarioKind {
    /// `Sym^2 E` with the feasible linearization.
    Sym2,
    /// `Sym^2 E` with the other candidate linearization.
    Sym2Rejected,
    /// `Hom(E_f, E_e)`.
    HomEe,
    /// `Hom(O(-w), E_e)`.
    HomOw,
}

impl ScenarioKind {
    pub const ALL: [ScenarioKind; 4] = [
        ScenarioKind::Sym2,
        ScenarioKind::Sym2Rejected,
        ScenarioKind::HomEe,
        ScenarioKind::HomOw,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ScenarioKind::Sym2 => "sym2",
            ScenarioKind::Sym2Rejected => "sym2-rejected",
            ScenarioKind::HomEe => "hom-ee",
            ScenarioKind::HomOw => "hom-ow",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == name)
    }

    /// Pinned traces at the five points `p ≠ w` followed by `w`.
    pub fn traces(self) -> [i64; 6] {
        match self {
            ScenarioKind::Sym2 => [1, 1, 1, 1, 1, 3],
            ScenarioKind::Sym2Rejected => [3, 3, 3, 3, 3, 1],
            ScenarioKind::HomEe => [0, 0, 0, 0, 0, 4],
            ScenarioKind::HomOw => [0, 0, 0, 0, 0, 2],
        }
    }

    /// `(h0_total, h1_total, h0_plus)`.
    pub fn cohomology(self) -> (u64, u64, u64) {
        match self {
            ScenarioKind::Sym2 | ScenarioKind::Sym2Rejected => (0, 6, 0),
            ScenarioKind::HomEe => (0, 4, 0),
            ScenarioKind::HomOw => (1, 2, 1),
        }
    }

    pub fn scenario<T: Scalar>(self) -> LefschetzScenario<T> {
        let (h0, h1, h0_plus) = self.cohomology();
        LefschetzScenario::from_traces(&self.traces(), h0, h1, h0_plus)
            .expect("pinned scenarios are valid")
    }

    /// The traces recomputed from the fibre actions.
    pub fn derived_traces(self) -> Vec<i64> {
        use linearization::*;
        match self {
            ScenarioKind::Sym2 => rank_two_second().sym2().traces(),
            ScenarioKind::Sym2Rejected => rank_two_first().sym2().traces(),
            ScenarioKind::HomEe => rank_two_second().hom(&rank_two_second()).traces(),
            ScenarioKind::HomOw => line_minus_w().hom(&rank_two_second()).traces(),
        }
    }
}

pub fn hom_ow_scenario<T: Scalar>() -> LefschetzScenario<T> {
    ScenarioKind::HomOw.scenario()
}

/// Try each candidate trace table in turn and return the first feasible split.
pub fn select_feasible<T: Scalar>(
    candidates: &[LefschetzScenario<T>],
) -> Result<(usize, EigenSplit), LefschetzError> {
    let mut last = LefschetzError::Infeasible("no candidates".into());
    for (i, s) in candidates.iter().enumerate() {
        match split_eigendims(s) {
            Ok(split) => return Ok((i, split)),
            Err(e) => last = e,
        }
    }
    Err(last)
}
