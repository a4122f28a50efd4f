//! JSON encodings of field elements, polynomials, rational functions and
//! matrices.
//!
//! A field element is a single integer over a prime field and a list of `m`
//! integers (ascending powers of `α`) over an extension. A polynomial is the
//! list of its coefficients, ascending by power of `z`. A rational function
//! is `{"num": …, "den": …}`; on input a bare polynomial is also accepted.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::field::{FieldElement, FieldRef};
use crate::matrix::{FqMatrix, PolyMatrix, RatMatrix};
use crate::poly::Poly;
use crate::ratfn::RatFn;

pub fn element_to_json(e: FieldElement) -> Value {
    if e.field().degree() == 1 {
        json!(e.value())
    } else {
        json!(e.coeffs())
    }
}

pub fn poly_to_json(p: &Poly) -> Value {
    Value::Array((0..p.raw().len()).map(|i| element_to_json(p.coeff(i))).collect())
}

pub fn ratfn_to_json(r: &RatFn) -> Value {
    json!({ "num": poly_to_json(r.num()), "den": poly_to_json(r.den()) })
}

pub fn rat_matrix_to_json(m: &RatMatrix) -> Value {
    Value::Array((0..m.rows()).map(|i| Value::Array(m.row(i).iter().map(ratfn_to_json).collect())).collect())
}

pub fn poly_matrix_to_json(m: &PolyMatrix) -> Value {
    Value::Array((0..m.rows()).map(|i| Value::Array(m.row(i).iter().map(poly_to_json).collect())).collect())
}

pub fn fq_matrix_to_json(m: &FqMatrix) -> Value {
    Value::Array(
        (0..m.rows()).map(|i| Value::Array(m.row_elements(i).into_iter().map(element_to_json).collect())).collect(),
    )
}

/// Human-readable rendering of each entry, e.g. `"αz+α²"`.
pub fn rat_matrix_display(m: &RatMatrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(ToString::to_string).collect()).collect()
}

pub fn poly_matrix_display(m: &PolyMatrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(ToString::to_string).collect()).collect()
}

/// A field element as written in a spec file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RawElement {
    Int(u64),
    Coeffs(Vec<u64>),
}

pub type RawPoly = Vec<RawElement>;

/// A rational function as written in a spec file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RawRatFn {
    Poly(RawPoly),
    Frac { num: RawPoly, den: RawPoly },
}

impl RawElement {
    pub fn from_element(e: FieldElement) -> Self {
        if e.field().degree() == 1 {
            RawElement::Int(e.value() as u64)
        } else {
            RawElement::Coeffs(e.coeffs().into_iter().map(u64::from).collect())
        }
    }

    pub fn decode(&self, f: FieldRef) -> Result<FieldElement, String> {
        let p = f.characteristic() as u64;
        match self {
            RawElement::Int(v) if f.degree() == 1 => {
                if *v >= p {
                    return Err(format!("{v} is not reduced mod {p}"));
                }
                Ok(f.from_int(*v as i64))
            }
            RawElement::Int(v) => {
                Err(format!("extension field element must be a list of {} coefficients, got {v}", f.degree()))
            }
            RawElement::Coeffs(c) => {
                let c: Vec<u32> = c
                    .iter()
                    .map(|&x| if x < p { Ok(x as u32) } else { Err(format!("coefficient {x} is not reduced mod {p}")) })
                    .collect::<Result<_, _>>()?;
                f.element(&c).map_err(|e| e.to_string())
            }
        }
    }
}

pub fn raw_poly(p: &Poly) -> RawPoly {
    (0..p.raw().len()).map(|i| RawElement::from_element(p.coeff(i))).collect()
}

pub fn decode_poly(raw: &RawPoly, f: FieldRef) -> Result<Poly, String> {
    let coeffs = raw.iter().map(|e| e.decode(f)).collect::<Result<Vec<_>, _>>()?;
    Poly::new(f, &coeffs).map_err(|e| e.to_string())
}

impl RawRatFn {
    pub fn from_ratfn(r: &RatFn) -> Self {
        if r.is_poly() {
            RawRatFn::Poly(raw_poly(r.num()))
        } else {
            RawRatFn::Frac { num: raw_poly(r.num()), den: raw_poly(r.den()) }
        }
    }

    pub fn decode(&self, f: FieldRef) -> Result<RatFn, String> {
        match self {
            RawRatFn::Poly(p) => Ok(RatFn::from_poly(decode_poly(p, f)?)),
            RawRatFn::Frac { num, den } => {
                RatFn::new(decode_poly(num, f)?, decode_poly(den, f)?).map_err(|e| e.to_string())
            }
        }
    }
}
