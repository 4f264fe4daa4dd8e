//! The reproduction report: every pinned constant recomputed and compared
//! with its reference value.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use theta_lab::bundle::{self, BundleSymbol};
use theta_lab::hilbert;
use theta_lab::lefschetz::{split_eigendims, ScenarioKind};
use theta_lab::verlinde;
use theta_lab::{CurveFp, PrimeField, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Match,
    Mismatch,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub label: String,
    pub computed: String,
    pub reference_value: String,
    pub location: String,
    pub status: Status,
}

/// One expected value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReferenceEntry {
    pub label: String,
    pub value: String,
    pub location: String,
}

const REFERENCE: &[(&str, &str, &str)] = &[
    ("p(0)", "1", "Hilbert function of Xi, n = 0"),
    ("p(1)", "10", "Hilbert function of Xi, n = 1"),
    ("p(2)", "58", "Verlinde sum, level 2, genus 2"),
    (
        "gamma",
        "1/604800",
        "leading coefficient of the Hilbert polynomial",
    ),
    ("base point count", "6", "c_1(Xi)^10 = 10! gamma"),
    (
        "canonical power",
        "-6",
        "K = Xi^-6 from the adjoint Dynkin index",
    ),
    (
        "|4Theta|_+ dimension",
        "10",
        "even part of H^0(J^1, 4Theta)",
    ),
    ("|4Theta|_- dimension", "6", "odd part of H^0(J^1, 4Theta)"),
    (
        "Lefschetz Sym^2 E",
        "(1, 5)",
        "h^1(Sym^2 E)_+, h^1(Sym^2 E)_-",
    ),
    (
        "Lefschetz Sym^2 E, first linearization",
        "infeasible",
        "rejected trace table",
    ),
    (
        "Lefschetz Hom(E_f, E_e)",
        "(1, 3)",
        "h^1(Hom(E_f, E_e))_+, _-",
    ),
    (
        "Lefschetz Hom(O(-w), E_e)",
        "(1, 1)",
        "h^1(Hom(O(-w), E_e))_+, _-",
    ),
    (
        "moduli dimension",
        "10",
        "dim M_2 = n(2n+1)(g-1), n = 2, g = 2",
    ),
    (
        "Mukai rank",
        "4",
        "rank of the Raynaud bundle, (2Theta)^2/2",
    ),
    (
        "duplication degree",
        "16",
        "degree of multiplication by 2 on J",
    ),
    ("(2Theta)^2", "8", "self-intersection on the Jacobian"),
    ("pullback degree on Y", "64", "16 (2Theta . X)"),
    ("slope of E_c", "1", "64 / 16 / 4"),
    ("chi(W tensor K)", "4", "Riemann-Roch, rank 4, degree 8"),
    ("mu(F)", "5/3", "slope of the rank-3 extension bundle"),
    (
        "|J[2]|",
        "16",
        "two-torsion of the Jacobian, y^2 = x^5 - x over F_13",
    ),
    (
        "Theta^2",
        "2",
        "Theta . (Theta + M) for generic M, y^2 = x^5 + x + 1 over F_13",
    ),
];

/// The built-in reference table.
pub fn reference_table() -> Vec<ReferenceEntry> {
    REFERENCE
        .iter()
        .map(|&(label, value, location)| ReferenceEntry {
            label: label.to_string(),
            value: value.to_string(),
            location: location.to_string(),
        })
        .collect()
}

fn pair(plus: u64, minus: u64) -> String {
    format!("({plus}, {minus})")
}

fn err_text(code: &str) -> String {
    format!("error {code}")
}

fn lefschetz_row(kind: ScenarioKind) -> String {
    match split_eigendims(&kind.scenario::<Rational>()) {
        Ok(s) => pair(s.plus, s.minus),
        Err(e) if e.code() == "INFEASIBLE" => "infeasible".to_string(),
        Err(e) => err_text(e.code()),
    }
}

fn reference_curve() -> CurveFp {
    let k = PrimeField::new(13).expect("13 is prime");
    CurveFp::from_lower(k, &[0, -1, 0, 0, 0]).expect("x^5 - x is squarefree mod 13")
}

/// `y^2 = x^5 + x + 1` over `F_13`. On the `x^5 - x` curve every translate
/// with `2M ≠ 0` is tangent to `Θ`, so it cannot exhibit two distinct points.
fn generic_curve() -> CurveFp {
    let k = PrimeField::new(13).expect("13 is prime");
    CurveFp::from_lower(k, &[1, 1, 0, 0, 0]).expect("x^5 + x + 1 is squarefree mod 13")
}

/// `|Θ ∩ (Θ + M)|` counted over all of `Pic^1`, for the first degree-0 class
/// `M` (in enumeration order) whose two intersection points are distinct and
/// rational.
fn theta_square() -> Result<usize, String> {
    let c = generic_curve();
    let classes = c.enumerate_pic(0).map_err(|e| err_text(e.code()))?;
    let m = classes
        .iter()
        .find(|m| matches!(c.km2_points(m), Ok((q1, q2)) if q1 != q2))
        .ok_or("no generic translate")?;
    let mut count = 0;
    for l in c.enumerate_pic(1).map_err(|e| err_text(e.code()))? {
        if c.theta_membership(&l, m).map_err(|e| err_text(e.code()))? {
            count += 1;
        }
    }
    Ok(count)
}

/// Every computed value, keyed by label, in report order.
pub fn computed_values() -> Vec<(String, String)> {
    let mut out: Vec<(String, String)> = Vec::new();
    let mut push = |label: &str, value: String| out.push((label.to_string(), value));

    match verlinde::hilbert_values() {
        Ok((p0, p1, p2)) => {
            push("p(0)", p0.to_string());
            push("p(1)", p1.to_string());
            push("p(2)", p2.to_string());
            match hilbert::fit_hilbert(p0, p1, p2) {
                Ok(fit) => {
                    push("gamma", fit.gamma.to_string());
                    push("base point count", fit.chern_degree.to_string());
                }
                Err(e) => {
                    push("gamma", err_text(e.code()));
                    push("base point count", err_text(e.code()));
                }
            }
        }
        Err(e) => {
            for label in ["p(0)", "p(1)", "p(2)", "gamma", "base point count"] {
                push(label, err_text(e.code()));
            }
        }
    }
    push("canonical power", hilbert::canonical_power().to_string());
    match verlinde::theta_eigendims(2, 2) {
        Ok((plus, minus)) => {
            push("|4Theta|_+ dimension", plus.to_string());
            push("|4Theta|_- dimension", minus.to_string());
        }
        Err(e) => {
            push("|4Theta|_+ dimension", err_text(e.code()));
            push("|4Theta|_- dimension", err_text(e.code()));
        }
    }
    push("Lefschetz Sym^2 E", lefschetz_row(ScenarioKind::Sym2));
    push(
        "Lefschetz Sym^2 E, first linearization",
        lefschetz_row(ScenarioKind::Sym2Rejected),
    );
    push(
        "Lefschetz Hom(E_f, E_e)",
        lefschetz_row(ScenarioKind::HomEe),
    );
    push(
        "Lefschetz Hom(O(-w), E_e)",
        lefschetz_row(ScenarioKind::HomOw),
    );
    push(
        "moduli dimension",
        bundle::moduli_dim(2, 2).map_or_else(|e| err_text(e.code()), |v| v.to_string()),
    );
    match bundle::raynaud_invariants(2) {
        Ok(r) => {
            push("Mukai rank", r.mukai_rank.to_string());
            push("duplication degree", r.duplication_degree.to_string());
            push("(2Theta)^2", r.theta_self_int_2theta.to_string());
            push("pullback degree on Y", r.pullback_degree_on_y.to_string());
            push("slope of E_c", r.slope_ec.to_string());
        }
        Err(e) => {
            for label in [
                "Mukai rank",
                "duplication degree",
                "(2Theta)^2",
                "pullback degree on Y",
                "slope of E_c",
            ] {
                push(label, err_text(e.code()));
            }
        }
    }
    push(
        "chi(W tensor K)",
        BundleSymbol::genus_two(4, 8).map_or_else(|e| err_text(e.code()), |b| b.chi().to_string()),
    );
    push(
        "mu(F)",
        BundleSymbol::genus_two(3, 5)
            .map_or_else(|e| err_text(e.code()), |b| b.slope().to_string()),
    );
    push(
        "|J[2]|",
        reference_curve()
            .two_torsion()
            .map_or_else(|e| err_text(e.code()), |t| t.len().to_string()),
    );
    push(
        "Theta^2",
        theta_square().map_or_else(|e| e, |n| n.to_string()),
    );
    out
}

/// Exact rationals are compared by value; anything else by its text with
/// whitespace removed.
pub fn canonicalize(s: &str) -> String {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    match compact.parse::<Rational>() {
        Ok(q) => q.to_string(),
        Err(_) => compact.to_lowercase(),
    }
}

pub fn build_report(reference: &[ReferenceEntry]) -> Vec<ReportRow> {
    let computed = computed_values();
    reference
        .iter()
        .map(|entry| {
            let value = computed
                .iter()
                .find(|(label, _)| *label == entry.label)
                .map(|(_, v)| v.clone())
                .unwrap_or_else(|| "unknown label".to_string());
            let status = if canonicalize(&value) == canonicalize(&entry.value) {
                Status::Match
            } else {
                Status::Mismatch
            };
            ReportRow {
                label: entry.label.clone(),
                computed: value,
                reference_value: entry.value.clone(),
                location: entry.location.clone(),
                status,
            }
        })
        .collect()
}

pub fn all_match(rows: &[ReportRow]) -> bool {
    rows.iter().all(|r| r.status == Status::Match)
}

pub fn render_text(rows: &[ReportRow]) -> String {
    let width = |f: fn(&ReportRow) -> &str, title: &str| {
        rows.iter()
            .map(|r| f(r).chars().count())
            .max()
            .unwrap_or(0)
            .max(title.len())
    };
    let wl = width(|r| &r.label, "label");
    let wc = width(|r| &r.computed, "computed");
    let wr = width(|r| &r.reference_value, "reference");
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<wl$}  {:<wc$}  {:<wr$}  {:<8}  location",
        "label", "computed", "reference", "status"
    );
    for r in rows {
        let status = match r.status {
            Status::Match => "match",
            Status::Mismatch => "MISMATCH",
        };
        let _ = writeln!(
            out,
            "{:<wl$}  {:<wc$}  {:<wr$}  {:<8}  {}",
            r.label, r.computed, r.reference_value, status, r.location
        );
    }
    let matched = rows.iter().filter(|r| r.status == Status::Match).count();
    let _ = writeln!(out, "{matched}/{} rows match", rows.len());
    out
}

pub fn render_json(rows: &[ReportRow]) -> String {
    serde_json::to_string_pretty(rows).expect("report rows serialize")
}

pub fn parse_json(s: &str) -> Result<Vec<ReportRow>, serde_json::Error> {
    serde_json::from_str(s)
}
