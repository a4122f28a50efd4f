//! Code specification files.
//!
//! A spec file is a JSON object selecting a construction (`"p1"` or
//! `"elliptic"`), its base field and the divisor data:
//!
//! ```json
//! { "construction": "p1", "field": {"p": 3, "m": 1},
//!   "family": {"a": 1, "b": 2, "n": 2}, "r": 1, "s": 1 }
//! ```
//!
//! P¹ codes give either `points` (a list of rational functions) or `family`
//! (`α_i = a^{i-1} z + b^{i-1}`). Elliptic codes give `curve`, `points` as
//! `{x, y}` objects, `r` and optionally `gamma`. An optional `expected` block
//! records reference values to compare against, and `options` tunes the report.

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::elliptic::{EllipticPoint, EllipticSpec, Monomial, WeierstrassCurve};
use crate::error::Error;
use crate::field::{Field, FieldRef, FieldSpec};
use crate::matrix::{FqMatrix, RatMatrix};
use crate::p1::{standard_points, P1Spec};
use crate::ratfn::RatFn;
use crate::serial::{RawElement, RawRatFn};
use crate::statespace::Realization;

/// Failure while reading or validating a spec file.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid key `{key}`: {msg}")]
    Key { key: String, msg: String },
    #[error("validation failed: {0}")]
    Math(#[from] Error),
}

impl SpecError {
    /// Process exit code: 2 for parse and key errors, 3 for mathematical
    /// validation failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            SpecError::Parse(_) | SpecError::Key { .. } => 2,
            SpecError::Math(_) => 3,
        }
    }

    fn key(key: impl Into<String>, msg: impl Into<String>) -> Self {
        SpecError::Key { key: key.into(), msg: msg.into() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConstructionKind {
    P1,
    Elliptic,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Family {
    pub a: RawElement,
    pub b: RawElement,
    pub n: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawCurve {
    pub a1: RawRatFn,
    pub a2: RawRatFn,
    pub a3: RawRatFn,
    pub a4: RawRatFn,
    pub a6: RawRatFn,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawPoint {
    pub x: RawRatFn,
    pub y: RawRatFn,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
pub struct Options {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub deg_bound_oracle: Option<usize>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub emit_realization: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawRealization {
    #[serde(rename = "A")]
    pub a: Vec<Vec<RawElement>>,
    #[serde(rename = "B")]
    pub b: Vec<Vec<RawElement>>,
    #[serde(rename = "C")]
    pub c: Vec<Vec<RawElement>>,
    #[serde(rename = "D")]
    pub d: Vec<Vec<RawElement>>,
}

/// Reference values to compare the computed code against. Mismatches
/// become report diagnostics, never errors.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<u64>,
    /// Maximum distance for the parameters (Singleton bound).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<Vec<Vec<RawRatFn>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dual: Option<Vec<Vec<RawRatFn>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub realization: Option<RawRealization>,
}

/// On-disk code specification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeSpecFile {
    pub construction: ConstructionKind,
    pub field: FieldSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub curve: Option<RawCurve>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<Family>,
    pub r: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<Vec<[u32; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub options: Option<Options>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Expected>,
}

/// A validated construction.
#[derive(Debug, Clone)]
#[allow(clippy::large_enum_variant)]
pub enum Code {
    P1(P1Spec),
    Elliptic(EllipticSpec),
}

impl Code {
    pub fn field(&self) -> FieldRef {
        match self {
            Code::P1(s) => s.field(),
            Code::Elliptic(s) => s.field(),
        }
    }

    pub fn generator(&self) -> RatMatrix {
        match self {
            Code::P1(s) => s.generator(),
            Code::Elliptic(s) => s.generator(),
        }
    }
}

fn decode_rat(raw: &RawRatFn, f: FieldRef, key: &str) -> Result<RatFn, SpecError> {
    raw.decode(f).map_err(|m| SpecError::key(key, m))
}

pub fn decode_rat_matrix(rows: &[Vec<RawRatFn>], f: FieldRef, key: &str) -> Result<RatMatrix, SpecError> {
    let cols = rows.first().map_or(0, Vec::len);
    let decoded = rows
        .iter()
        .enumerate()
        .map(|(i, row)| row.iter().enumerate().map(|(j, e)| decode_rat(e, f, &format!("{key}[{i}][{j}]"))).collect())
        .collect::<Result<Vec<Vec<RatFn>>, _>>()?;
    RatMatrix::from_rows(f, cols, decoded).map_err(|e| SpecError::key(key, e.to_string()))
}

fn decode_fq_matrix(
    rows: &[Vec<RawElement>],
    f: FieldRef,
    key: &str,
    shape: (usize, usize),
) -> Result<FqMatrix, SpecError> {
    let decoded = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, e)| e.decode(f).map_err(|m| SpecError::key(format!("{key}[{i}][{j}]"), m)))
                .collect()
        })
        .collect::<Result<Vec<_>, _>>()?;
    FqMatrix::from_rows(f, shape.0, shape.1, decoded).map_err(|e| SpecError::key(key, e.to_string()))
}

impl RawRealization {
    /// Decodes against a code of length `n` and dimension `k`; `δ` is taken
    /// from the size of `A`.
    pub fn decode(&self, f: FieldRef, k: usize, n: usize) -> Result<Realization, SpecError> {
        let delta = self.a.len();
        let a = decode_fq_matrix(&self.a, f, "expected.realization.A", (delta, delta))?;
        let b = decode_fq_matrix(&self.b, f, "expected.realization.B", (k, delta))?;
        let c = decode_fq_matrix(&self.c, f, "expected.realization.C", (delta, n))?;
        let d = decode_fq_matrix(&self.d, f, "expected.realization.D", (k, n))?;
        Realization::new(a, b, c, d).map_err(|e| SpecError::key("expected.realization", e.to_string()))
    }

    pub fn from_realization(r: &Realization) -> Self {
        let raw = |m: &FqMatrix| -> Vec<Vec<RawElement>> {
            (0..m.rows()).map(|i| m.row_elements(i).into_iter().map(RawElement::from_element).collect()).collect()
        };
        RawRealization { a: raw(&r.a), b: raw(&r.b), c: raw(&r.c), d: raw(&r.d) }
    }
}

impl CodeSpecFile {
    pub fn from_json(text: &str) -> Result<Self, SpecError> {
        let spec: CodeSpecFile = serde_json::from_str(text).map_err(|e| SpecError::Parse(e.to_string()))?;
        spec.check_keys()?;
        Ok(spec)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spec serializes")
    }

    /// Exactly one construction block: keys of the other construction are rejected.
    fn check_keys(&self) -> Result<(), SpecError> {
        match self.construction {
            ConstructionKind::P1 => {
                if self.curve.is_some() {
                    return Err(SpecError::key("curve", "not valid for construction \"p1\""));
                }
                if self.gamma.is_some() {
                    return Err(SpecError::key("gamma", "not valid for construction \"p1\""));
                }
                if self.s.is_none() {
                    return Err(SpecError::key("s", "required for construction \"p1\""));
                }
                match (&self.points, &self.family) {
                    (Some(_), Some(_)) => Err(SpecError::key("family", "give either `points` or `family`, not both")),
                    (None, None) => Err(SpecError::key("points", "one of `points` or `family` is required")),
                    _ => Ok(()),
                }
            }
            ConstructionKind::Elliptic => {
                if self.family.is_some() {
                    return Err(SpecError::key("family", "not valid for construction \"elliptic\""));
                }
                if self.s.is_some() {
                    return Err(SpecError::key("s", "not valid for construction \"elliptic\""));
                }
                if self.curve.is_none() {
                    return Err(SpecError::key("curve", "required for construction \"elliptic\""));
                }
                if self.points.is_none() {
                    return Err(SpecError::key("points", "required for construction \"elliptic\""));
                }
                Ok(())
            }
        }
    }

    pub fn options(&self) -> Options {
        self.options.clone().unwrap_or_default()
    }

    pub fn field_ref(&self) -> Result<FieldRef, SpecError> {
        Ok(Field::get(&self.field)?)
    }

    /// Decodes all elements and runs the mathematical validation.
    pub fn build(&self) -> Result<Code, SpecError> {
        self.check_keys()?;
        let f = self.field_ref()?;
        match self.construction {
            ConstructionKind::P1 => {
                let alphas = match (&self.points, &self.family) {
                    (Some(points), _) => {
                        let raw: Vec<RawRatFn> = serde_json::from_value(points.clone())
                            .map_err(|e| SpecError::key("points", e.to_string()))?;
                        raw.iter()
                            .enumerate()
                            .map(|(i, r)| decode_rat(r, f, &format!("points[{i}]")))
                            .collect::<Result<Vec<_>, _>>()?
                    }
                    (None, Some(fam)) => {
                        let a = fam.a.decode(f).map_err(|m| SpecError::key("family.a", m))?;
                        let b = fam.b.decode(f).map_err(|m| SpecError::key("family.b", m))?;
                        standard_points(a, b, fam.n)?
                    }
                    (None, None) => unreachable!("checked by check_keys"),
                };
                let s = self.s.expect("checked by check_keys");
                if self.r < 0 {
                    return Err(SpecError::key("r", "must be nonnegative"));
                }
                if s < 0 {
                    return Err(SpecError::key("s", "must be nonnegative"));
                }
                Ok(Code::P1(P1Spec::new(f, alphas, self.r as usize, s as usize)?))
            }
            ConstructionKind::Elliptic => {
                let c = self.curve.as_ref().expect("checked by check_keys");
                let curve = WeierstrassCurve::new(
                    decode_rat(&c.a1, f, "curve.a1")?,
                    decode_rat(&c.a2, f, "curve.a2")?,
                    decode_rat(&c.a3, f, "curve.a3")?,
                    decode_rat(&c.a4, f, "curve.a4")?,
                    decode_rat(&c.a6, f, "curve.a6")?,
                )?;
                let raw: Vec<RawPoint> = serde_json::from_value(self.points.clone().expect("checked by check_keys"))
                    .map_err(|e| SpecError::key("points", e.to_string()))?;
                let points = raw
                    .iter()
                    .enumerate()
                    .map(|(i, p)| {
                        Ok(EllipticPoint {
                            x: decode_rat(&p.x, f, &format!("points[{i}].x"))?,
                            y: decode_rat(&p.y, f, &format!("points[{i}].y"))?,
                        })
                    })
                    .collect::<Result<Vec<_>, SpecError>>()?;
                let gamma: Option<Vec<Monomial>> =
                    self.gamma.as_ref().map(|g| g.iter().map(|&[i, j]| (i, j)).collect());
                Ok(Code::Elliptic(EllipticSpec::new(curve, points, self.r, gamma)?))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const F3: &str = r#"{"construction": "p1", "field": {"p": 3, "m": 1},
        "family": {"a": 1, "b": 2, "n": 2}, "r": 1, "s": 1}"#;

    #[test]
    fn parses_family_spec() {
        let spec = CodeSpecFile::from_json(F3).unwrap();
        let Code::P1(p1) = spec.build().unwrap() else { panic!("expected p1") };
        assert_eq!(p1.n(), 2);
        assert_eq!(p1.k(), 1);
    }

    #[test]
    fn unknown_key_names_the_key() {
        let text = F3.replace("\"r\": 1", "\"rr\": 1");
        let err = CodeSpecFile::from_json(&text).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("rr"), "{err}");
    }

    #[test]
    fn wrong_construction_key() {
        let text = F3.replace("\"s\": 1", "\"s\": 1, \"gamma\": [[0, 0]]");
        let err = CodeSpecFile::from_json(&text).unwrap_err();
        assert_eq!(err, SpecError::key("gamma", "not valid for construction \"p1\""));
    }

    #[test]
    fn element_out_of_range_is_a_key_error() {
        let text = F3.replace("\"b\": 2", "\"b\": 7");
        let err = CodeSpecFile::from_json(&text).unwrap().build().unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("family.b"), "{err}");
    }

    #[test]
    fn duplicate_points_are_math_errors() {
        let text = r#"{"construction": "p1", "field": {"p": 3, "m": 1},
            "points": [[1, 1], [1, 1]], "r": 1, "s": 1}"#;
        let err = CodeSpecFile::from_json(text).unwrap().build().unwrap_err();
        assert_eq!(err.exit_code(), 3);
        assert!(matches!(err, SpecError::Math(Error::DuplicatePoints(_))));
    }

    #[test]
    fn nonprime_field_is_math_error() {
        let text = F3.replace("\"p\": 3", "\"p\": 4");
        let err = CodeSpecFile::from_json(&text).unwrap().build().unwrap_err();
        assert_eq!(err, SpecError::Math(Error::NonPrimeCharacteristic(4)));
    }
}
