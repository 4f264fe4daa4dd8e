//! Text formats.
//!
//! Curves: `field=Q|Fp:<p>; f=c0,c1,c2,c3,c4`, the integer coefficients of
//! `f` below the implied `x^5`. Classes: `u=<poly>; v=<poly>[; deg=<d>]` with
//! polynomials in `x`, e.g. `u=x^2 + 3*x - 1/2; v=2*x + 1`.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::field::{Field, PrimeField, RationalField};
use crate::poly::Poly;

use super::curve::HyperellipticCurve;
use super::pic::PicClass;
use super::CurveError;

/// A curve over either kind of base field, as chosen at run time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyCurve {
    Rational(HyperellipticCurve<RationalField>),
    Prime(HyperellipticCurve<PrimeField>),
}

impl FromStr for AnyCurve {
    type Err = CurveError;

    fn from_str(s: &str) -> Result<Self, CurveError> {
        let fields = key_values(s)?;
        let mut field = None;
        let mut coeffs = None;
        for (k, v) in fields {
            match k {
                "field" => field = Some(v),
                "f" => coeffs = Some(v),
                other => return Err(CurveError::Parse(format!("unknown key `{other}`"))),
            }
        }
        let field = field.ok_or_else(|| CurveError::Parse("missing `field=`".into()))?;
        let coeffs = coeffs.ok_or_else(|| CurveError::Parse("missing `f=`".into()))?;
        let lower: Vec<i64> = coeffs
            .split(',')
            .map(|c| {
                c.trim()
                    .parse::<i64>()
                    .map_err(|_| CurveError::Parse(format!("bad coefficient `{}`", c.trim())))
            })
            .collect::<Result<_, _>>()?;
        let lower: [i64; 5] = lower.try_into().map_err(|v: Vec<i64>| {
            CurveError::Parse(format!("expected 5 coefficients, got {}", v.len()))
        })?;
        if field == "Q" {
            return Ok(AnyCurve::Rational(HyperellipticCurve::from_lower(
                RationalField,
                &lower,
            )?));
        }
        let p = field
            .strip_prefix("Fp:")
            .and_then(|p| p.trim().parse::<u64>().ok())
            .ok_or_else(|| CurveError::Parse(format!("bad field `{field}`")))?;
        let k = PrimeField::new(p)?;
        Ok(AnyCurve::Prime(HyperellipticCurve::from_lower(k, &lower)?))
    }
}

fn key_values(s: &str) -> Result<Vec<(&str, &str)>, CurveError> {
    s.split(';')
        .map(str::trim)
        .filter(|part| !part.is_empty())
        .map(|part| {
            part.split_once('=')
                .map(|(k, v)| (k.trim(), v.trim()))
                .ok_or_else(|| CurveError::Parse(format!("expected key=value, got `{part}`")))
        })
        .collect()
}

fn parse_coefficient<F: Field>(field: &F, s: &str) -> Result<F::Elem, CurveError> {
    let bad = || CurveError::Parse(format!("bad coefficient `{s}`"));
    let q = match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d == BigInt::from(0) {
                return Err(bad());
            }
            BigRational::new(n, d)
        }
        None => BigRational::from_integer(BigInt::from_str(s.trim()).map_err(|_| bad())?),
    };
    field.from_rational(&q).ok_or_else(bad)
}

/// Parse a polynomial in `x` such as `x^2 - 3*x + 1/2`.
pub fn parse_poly<F: Field>(field: &F, s: &str) -> Result<Poly<F>, CurveError> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(CurveError::Parse("empty polynomial".into()));
    }
    let mut terms = Vec::new();
    let mut start = 0;
    for (i, ch) in compact.char_indices() {
        if (ch == '+' || ch == '-') && i > 0 && !compact[..i].ends_with('^') {
            terms.push(&compact[start..i]);
            start = i;
        }
    }
    terms.push(&compact[start..]);
    let mut coeffs: Vec<F::Elem> = Vec::new();
    for term in terms {
        let (negative, body) = match term.as_bytes().first() {
            Some(b'-') => (true, &term[1..]),
            Some(b'+') => (false, &term[1..]),
            _ => (false, term),
        };
        if body.is_empty() {
            return Err(CurveError::Parse(format!("dangling sign in `{s}`")));
        }
        let (coef, power) = match body.find('x') {
            None => (parse_coefficient(field, body)?, 0usize),
            Some(pos) => {
                let c = match body[..pos].strip_suffix('*') {
                    Some(c) => parse_coefficient(field, c)?,
                    None if pos == 0 => field.one(),
                    None => return Err(CurveError::Parse(format!("bad term `{body}`"))),
                };
                let rest = &body[pos + 1..];
                let power = match rest.strip_prefix('^') {
                    Some(e) => e
                        .parse::<usize>()
                        .map_err(|_| CurveError::Parse(format!("bad exponent in `{body}`")))?,
                    None if rest.is_empty() => 1,
                    None => return Err(CurveError::Parse(format!("bad term `{body}`"))),
                };
                (c, power)
            }
        };
        if power > 64 {
            return Err(CurveError::Parse(format!("exponent too large in `{body}`")));
        }
        if coeffs.len() <= power {
            coeffs.resize(power + 1, field.zero());
        }
        let coef = if negative { field.neg(&coef) } else { coef };
        coeffs[power] = field.add(&coeffs[power], &coef);
    }
    Ok(Poly::from_coeffs(field.clone(), coeffs))
}

/// Parse `u=<poly>; v=<poly>[; deg=<d>]`; the degree defaults to 0.
pub fn parse_class<F: Field>(
    curve: &HyperellipticCurve<F>,
    s: &str,
) -> Result<PicClass<F>, CurveError> {
    let mut u = None;
    let mut v = None;
    let mut degree = 0i64;
    for (k, val) in key_values(s)? {
        match k {
            "u" => u = Some(parse_poly(curve.field(), val)?),
            "v" => v = Some(parse_poly(curve.field(), val)?),
            "deg" => {
                degree = val
                    .parse()
                    .map_err(|_| CurveError::Parse(format!("bad degree `{val}`")))?
            }
            other => return Err(CurveError::Parse(format!("unknown key `{other}`"))),
        }
    }
    let u = u.ok_or_else(|| CurveError::Parse("missing `u=`".into()))?;
    let v = v.ok_or_else(|| CurveError::Parse("missing `v=`".into()))?;
    Ok(PicClass::new(curve.mumford(u, v)?, degree))
}
