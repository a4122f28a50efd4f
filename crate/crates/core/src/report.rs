//! Report assembly: spec → matrices → normalized encoder → parameters.

use serde_json::{json, Map, Value};

use crate::conv::{analyze, check_dual, free_distance_oracle, Analysis};
use crate::error::Error;
use crate::matrix::RatMatrix;
use crate::serial::{
    fq_matrix_to_json, poly_matrix_display, poly_matrix_to_json, rat_matrix_display, rat_matrix_to_json,
};
use crate::spec_file::{decode_rat_matrix, Code, CodeSpecFile, SpecError};
use crate::statespace::{realize, verify, Realization};

const REALIZATION_CHECK_DEGREE: usize = 3;

/// Everything computed for one spec.
#[derive(Debug, Clone)]
pub struct Report {
    pub spec: CodeSpecFile,
    pub code: Code,
    pub generator: RatMatrix,
    /// `None` for elliptic codes and for an empty dual.
    pub dual: Option<RatMatrix>,
    pub analysis: Analysis,
    pub realization: Option<Realization>,
    pub oracle: Option<(usize, u64)>,
    pub diagnostics: Vec<String>,
}

fn tuple(vals: &[(&str, Option<String>)]) -> (String, String) {
    let present: Vec<_> = vals.iter().filter(|(_, v)| v.is_some()).collect();
    let names = present.iter().map(|(n, _)| *n).collect::<Vec<_>>().join(",");
    let values = present.iter().map(|(_, v)| v.clone().unwrap()).collect::<Vec<_>>().join(",");
    (names, values)
}

fn differing_entries(a: &RatMatrix, b: &RatMatrix) -> Vec<String> {
    let mut out = Vec::new();
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            if a.get(i, j) != b.get(i, j) {
                out.push(format!("({},{})", i + 1, j + 1));
            }
        }
    }
    out
}

fn shape(m: &RatMatrix) -> String {
    format!("{}×{}", m.rows(), m.cols())
}

impl Report {
    /// Runs the full pipeline. `realize` forces a state-space realization
    /// in addition to `options.emitRealization`.
    pub fn build(spec: &CodeSpecFile, realize_flag: bool) -> Result<Report, SpecError> {
        let code = spec.build()?;
        let f = code.field();
        let generator = code.generator();
        let mut diagnostics = Vec::new();
        let dual = match &code {
            Code::P1(p) => match p.dual() {
                Ok(h) => Some(h),
                Err(Error::EmptyDual) => {
                    diagnostics.push("dual code is zero: n − r + s − 1 = 0".to_string());
                    None
                }
                Err(e) => return Err(e.into()),
            },
            Code::Elliptic(_) => None,
        };
        let analysis = analyze(&generator)?;
        let rep = &analysis.report;

        if rep.input_was_catastrophic {
            diagnostics.push(format!(
                "input encoder catastrophic: maximal minors have gcd {}; replaced by a basic encoder",
                analysis.minor_gcd
            ));
        } else if !analysis.minor_gcd.is_one() {
            diagnostics.push(format!(
                "input encoder not basic: maximal minors have gcd {}; replaced by a basic encoder",
                analysis.minor_gcd
            ));
        }
        if !rep.is_mds {
            diagnostics.push(format!(
                "max distance for parameters is {}; dFree = {} does not attain it",
                rep.singleton_bound, rep.d_free
            ));
        }

        let options = spec.options();
        let realization = (realize_flag || options.emit_realization).then(|| realize(analysis.encoder.matrix()));
        let oracle = match options.deg_bound_oracle {
            Some(b) => {
                let d = free_distance_oracle(analysis.encoder.matrix(), b)?;
                if d != rep.d_free {
                    diagnostics
                        .push(format!("oracle mismatch: degBound {b} gives {d}, state search gives {}", rep.d_free));
                }
                Some((b, d))
            }
            None => None,
        };

        if let Some(exp) = &spec.expected {
            let (names, want) = tuple(&[
                ("n", exp.n.map(|v| v.to_string())),
                ("k", exp.k.map(|v| v.to_string())),
                ("δ", exp.delta.map(|v| v.to_string())),
                ("d", exp.d.map(|v| v.to_string())),
            ]);
            let (_, got) = tuple(&[
                ("n", exp.n.map(|_| rep.n.to_string())),
                ("k", exp.k.map(|_| rep.k.to_string())),
                ("δ", exp.delta.map(|_| rep.delta.to_string())),
                ("d", exp.d.map(|_| rep.d_free.to_string())),
            ]);
            if want != got {
                diagnostics.push(format!(
                    "expected-parameter mismatch: expected ({names}) = ({want}), computed ({got}); generator matrix is {}",
                    shape(&generator)
                ));
            }
            if let Some(b) = exp.bound.filter(|&b| b != rep.singleton_bound) {
                diagnostics.push(format!("expected bound {b}, computed {}", rep.singleton_bound));
            }
            if let Some(g) = &exp.generator {
                let g = decode_rat_matrix(g, f, "expected.generator")?;
                if g.shape() != generator.shape() {
                    diagnostics.push(format!(
                        "expected generator is {}, computed generator is {}",
                        shape(&g),
                        shape(&generator)
                    ));
                } else if g != generator {
                    diagnostics.push(format!(
                        "expected generator differs from computed generator at {}",
                        differing_entries(&g, &generator).join(", ")
                    ));
                }
            }
            if let Some(h_exp) = &exp.dual {
                let h_exp = decode_rat_matrix(h_exp, f, "expected.dual")?;
                match &dual {
                    Some(h) if h_exp == *h => {}
                    Some(h) => {
                        let annihilates = h_exp.cols() == generator.cols() && check_dual(&generator, &h_exp)?;
                        let entries = if h.shape() == h_exp.shape() {
                            format!("at {}", differing_entries(&h_exp, h).join(", "))
                        } else {
                            format!("in shape ({} vs {})", shape(&h_exp), shape(h))
                        };
                        diagnostics.push(format!(
                            "expected dual differs from computed dual {entries}; expected H·Gᵀ = 0: {annihilates}; computed dual is reported"
                        ));
                    }
                    None => diagnostics.push("expected dual given but no dual is computed".to_string()),
                }
            }
            if let Some(r) = &exp.realization {
                let r = r.decode(f, generator.rows(), generator.cols())?;
                let ok = match crate::matrix::PolyMatrix::from_rat(&generator) {
                    Some(g) => verify(&r, &g, REALIZATION_CHECK_DEGREE)?,
                    None => verify(&r, analysis.cleared.matrix(), REALIZATION_CHECK_DEGREE)?,
                };
                if !ok {
                    diagnostics.push("expected realization does not reproduce u·G".to_string());
                }
            }
        }

        Ok(Report { spec: spec.clone(), code, generator, dual, analysis, realization, oracle, diagnostics })
    }

    pub fn to_json(&self) -> Value {
        let rep = &self.analysis.report;
        let enc = &self.analysis.encoder;
        let mut out = Map::new();
        out.insert("spec".into(), serde_json::to_value(&self.spec).expect("spec serializes"));
        out.insert(
            "generator".into(),
            json!({
                "entries": rat_matrix_to_json(&self.generator),
                "display": rat_matrix_display(&self.generator),
            }),
        );
        if let Code::P1(_) = self.code {
            out.insert(
                "dual".into(),
                match &self.dual {
                    Some(h) => json!({ "entries": rat_matrix_to_json(h), "display": rat_matrix_display(h) }),
                    None => Value::Null,
                },
            );
        }
        out.insert(
            "code".into(),
            json!({
                "n": rep.n,
                "k": rep.k,
                "delta": rep.delta,
                "dFree": rep.d_free,
                "singletonBound": rep.singleton_bound,
                "isMds": rep.is_mds,
                "inputWasCatastrophic": rep.input_was_catastrophic,
                "minorGcd": self.analysis.minor_gcd.to_string(),
                "encoder": {
                    "rowDegrees": enc.row_degrees(),
                    "entries": poly_matrix_to_json(enc.matrix()),
                    "display": poly_matrix_display(enc.matrix()),
                },
            }),
        );
        if let Some(r) = &self.realization {
            out.insert(
                "realization".into(),
                json!({
                    "n": r.n(),
                    "k": r.k(),
                    "delta": r.delta(),
                    "A": fq_matrix_to_json(&r.a),
                    "B": fq_matrix_to_json(&r.b),
                    "C": fq_matrix_to_json(&r.c),
                    "D": fq_matrix_to_json(&r.d),
                }),
            );
        }
        if let Some((b, d)) = self.oracle {
            out.insert("oracle".into(), json!({ "degBound": b, "dFree": d }));
        }
        out.insert("diagnostics".into(), json!(self.diagnostics));
        Value::Object(out)
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("report serializes");
        s.push('\n');
        s
    }
}

/// A named structural check and its outcome. Informational checks do not
/// affect the verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub required: bool,
}

fn check(name: impl Into<String>, passed: bool) -> Check {
    Check { name: name.into(), passed, required: true }
}

fn info(name: impl Into<String>, passed: bool) -> Check {
    Check { name: name.into(), passed, required: false }
}

/// `dim(C ∩ C⊥) = k − rank(G·Gᵀ)` for a full-rank generator `G`.
pub fn hull_dimension(g: &RatMatrix) -> Result<usize, Error> {
    Ok(g.rows() - g.mul(&g.transpose())?.rank())
}

/// Rank and duality checks for a spec.
pub fn verify_checks(spec: &CodeSpecFile) -> Result<Vec<Check>, SpecError> {
    let code = spec.build()?;
    let g = code.generator();
    let mut checks = Vec::new();
    match &code {
        Code::P1(p) => {
            checks.push(check(format!("rank(G) = k = {}", p.k()), g.rank() == p.k()));
            match p.dual() {
                Ok(h) => {
                    checks.push(check(format!("rank(H) = n − k = {}", p.dual_dim()), h.rank() == p.dual_dim()));
                    checks.push(check("H·Gᵀ = 0", check_dual(&g, &h)?));
                    let hull = hull_dimension(&g)?;
                    checks.push(info(
                        format!("rank([G; H]) = n − dim(C ∩ C⊥) = {} − {hull}", p.n()),
                        g.vstack(&h)?.rank() == p.n() - hull,
                    ));
                }
                Err(Error::EmptyDual) => checks.push(check(format!("k = n = {}", p.n()), p.k() == p.n())),
                Err(e) => return Err(e.into()),
            }
        }
        Code::Elliptic(e) => {
            checks.push(check("curve is smooth", e.curve().discriminant().is_ok()));
            checks.push(check("points lie on the curve", e.points().iter().all(|pt| e.curve().contains(pt))));
            checks.push(check(format!("rank(G) = |Γ| = {}", e.gamma().len()), g.rank() == e.gamma().len()));
        }
    }
    Ok(checks)
}

/// Free distance, and the oracle value when `deg_bound` is given.
pub fn free_distance_of(spec: &CodeSpecFile, deg_bound: Option<usize>) -> Result<(u64, Option<u64>), SpecError> {
    let code = spec.build()?;
    let a = analyze(&code.generator())?;
    let oracle = deg_bound.map(|b| free_distance_oracle(a.encoder.matrix(), b)).transpose()?;
    Ok((a.report.d_free, oracle))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::fixture;

    #[test]
    fn f3_report() {
        let r = Report::build(&fixture("p1-f3").unwrap().spec, false).unwrap();
        let v = r.to_json();
        assert_eq!(v["code"]["dFree"], 4);
        assert_eq!(v["dual"]["display"], json!([["2/(z+1)", "1/(z+2)"]]));
        assert!(r.diagnostics.is_empty(), "{:?}", r.diagnostics);
        assert!(v.get("realization").is_some());
    }

    #[test]
    fn f5_k2_mismatch_diagnostic() {
        let r = Report::build(&fixture("p1-f5-k2").unwrap().spec, false).unwrap();
        assert!(
            r.diagnostics.iter().any(|d| d.contains("(2,1,3,8)") && d.contains("(4,2,3,8)") && d.contains("2×4")),
            "{:?}",
            r.diagnostics
        );
    }

    #[test]
    fn verify_f4() {
        let checks = verify_checks(&fixture("p1-f4-k2").unwrap().spec).unwrap();
        assert!(checks.iter().all(|c| c.passed), "{checks:?}");
        assert!(checks[3].name.ends_with("3 − 1"), "{}", checks[3].name);
    }
}
