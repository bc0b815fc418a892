//! One handler per subcommand. Each returns the payload of a [`RunReport`].

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use superkit::autmat::{check_relations, conj_rep, reconstruct_t, ConjRep, ConjRepJson};
use superkit::linebundle::{normalize_cocycle, overlap_signature, Cocycle};
use superkit::projective::{act, normalize_point, p12_witness, ProjPoint, ProjectiveSpace};
use superkit::superalg::parse;
use superkit::supergroups::{factor_c, form_image, is_c, is_spo, spo_component, Component};
use superkit::supermatrix::{Convention, MatrixJson};
use superkit::susy::is_susy_preserving;
use superkit::{Error, Result, RingSignature, SuperMatrix, SuperPoly};

use crate::input::RingOptions;

/// Machine-readable outcome of one command.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunReport {
    pub command: String,
    pub passed: bool,
    pub result: Value,
    pub counterexample: Option<Value>,
    pub timing_ms: u64,
}

/// A command's verdict before timing is attached.
pub struct Outcome {
    pub passed: bool,
    pub result: Value,
    pub counterexample: Option<Value>,
}

impl Outcome {
    pub fn pass(result: Value) -> Self {
        Outcome {
            passed: true,
            result,
            counterexample: None,
        }
    }

    pub fn check(passed: bool, result: Value, counterexample: impl FnOnce() -> Result<Value>) -> Result<Self> {
        let counterexample = if passed { None } else { Some(counterexample()?) };
        Ok(Outcome {
            passed,
            result,
            counterexample,
        })
    }
}

fn read_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Input(format!("invalid JSON: {e}")))
}

fn read_matrix(text: &str, opts: &RingOptions) -> Result<SuperMatrix> {
    let json: MatrixJson = read_json(text)?;
    let sig = opts.infer_ring(json.expressions())?;
    SuperMatrix::from_json(&json, &sig)
}

fn matrix_value(m: &SuperMatrix) -> Value {
    serde_json::to_value(m.to_json()).expect("matrix JSON")
}

fn expr(p: &SuperPoly) -> Value {
    Value::String(p.to_string())
}

pub fn ber(input: &str, opts: &RingOptions) -> Result<Outcome> {
    let g = read_matrix(input, opts)?;
    Ok(Outcome::pass(json!({ "ber": expr(&g.berezinian()?) })))
}

pub fn gl_check(input: &str, opts: &RingOptions) -> Result<Outcome> {
    let g = read_matrix(input, opts)?;
    let invertible = g.is_even() && g.is_invertible();
    let (a, d) = g.block_determinants()?;
    let result = json!({
        "invertible": invertible,
        "block_determinants": [expr(&a), expr(&d)],
    });
    Outcome::check(invertible, result, || Ok(json!({ "body": matrix_value(&g.body()) })))
}

fn require_21(g: &SuperMatrix) -> Result<()> {
    if g.m() == 2 && g.n() == 1 {
        Ok(())
    } else {
        Err(Error::DimensionMismatch(format!("expected a 2|1 matrix, got {}|{}", g.m(), g.n())))
    }
}

pub fn spo_check(input: &str, opts: &RingOptions) -> Result<Outcome> {
    let g = read_matrix(input, opts)?;
    require_21(&g)?;
    let member = is_spo(&g)?;
    let component = if member {
        Value::String(
            match spo_component(&g)? {
                Component::Identity => "identity",
                Component::Other => "other",
            }
            .into(),
        )
    } else {
        Value::Null
    };
    let result = json!({ "spo": member, "component": component });
    Outcome::check(member, result, || {
        Ok(json!({ "form_image": matrix_value(&form_image(&g, Convention::Standard)?) }))
    })
}

pub fn c_check(input: &str, opts: &RingOptions) -> Result<Outcome> {
    let g = read_matrix(input, opts)?;
    require_21(&g)?;
    let (member, z) = is_c(&g)?;
    let result = json!({ "in_c": member, "ber_squared": expr(&z) });
    Outcome::check(member, result, || {
        Ok(json!({ "form_image": matrix_value(&form_image(&g, Convention::Standard)?) }))
    })
}

pub fn sc_factor(input: &str, opts: &RingOptions) -> Result<Outcome> {
    let g = read_matrix(input, opts)?;
    require_21(&g)?;
    let (member, _) = is_c(&g)?;
    if !member {
        return Outcome::check(false, json!({ "in_c": false }), || {
            Ok(json!({ "form_image": matrix_value(&form_image(&g, Convention::Standard)?) }))
        });
    }
    let f = factor_c(&g)?;
    Ok(Outcome::pass(json!({
        "scalar": expr(&f.scalar),
        "special": matrix_value(&f.special),
    })))
}

pub fn susy_check(input: &str, opts: &RingOptions) -> Result<Outcome> {
    let g = read_matrix(input, opts)?;
    let v = is_susy_preserving(&g)?;
    let result = json!({
        "preserving": v.preserving,
        "t": v.t.as_ref().map(expr),
        "sc_representative": v.sc_representative.as_ref().map(matrix_value),
    });
    Outcome::check(v.preserving, result, || {
        let [a0, a1, b] = v.pullback.coeffs();
        Ok(json!({
            "pullback": { "dz0": expr(a0), "dz1": expr(a1), "dzeta": expr(b) },
            "pullback_matrix": matrix_value(&v.pullback.matrix(g.signature())?),
        }))
    })
}

pub fn aut_rep(input: &str, opts: &RingOptions) -> Result<Outcome> {
    let t = read_matrix(input, opts)?;
    let r = conj_rep(&t)?;
    let relations = check_relations(&r)?;
    let mut result = serde_json::to_value(r.to_json()).expect("rep JSON");
    result["relations_hold"] = Value::Bool(relations);
    Outcome::check(relations, result, || Ok(json!({ "relations_hold": false })))
}

pub fn aut_reconstruct(input: &str, opts: &RingOptions) -> Result<Outcome> {
    let json: ConjRepJson = read_json(input)?;
    let sig = opts.infer_ring(json.psi.expressions())?;
    let r = ConjRep::from_json(&json, &sig)?;
    if !check_relations(&r)? {
        return Outcome::check(false, json!({ "relations_hold": false }), || {
            Ok(json!({ "psi": serde_json::to_value(&json.psi).expect("matrix JSON") }))
        });
    }
    let t = reconstruct_t(&r)?;
    Ok(Outcome::pass(json!({ "relations_hold": true, "t": matrix_value(&t) })))
}

fn chart_coordinates(space: &ProjectiveSpace, chart: usize) -> Vec<&str> {
    (0..=space.m())
        .filter(|&k| k != chart)
        .map(|k| space.even_name(chart, k))
        .chain((0..space.n()).map(|l| space.odd_name(chart, l)))
        .collect()
}

pub fn chart_change(m: usize, n: usize, from: usize, to: usize, opts: &RingOptions) -> Result<Outcome> {
    let space = ProjectiveSpace::new(m, n, opts.field, 0)?;
    let phi = space.chart_change(from, to)?;
    let images: Vec<Value> = chart_coordinates(&space, to)
        .into_iter()
        .map(|name| Ok(json!([name, expr(phi.image_of(name)?)])))
        .collect::<Result<_>>()?;
    Ok(Outcome::pass(json!({ "from": from, "to": to, "images": images })))
}

pub fn chart_cocycle(m: usize, n: usize, opts: &RingOptions) -> Result<Outcome> {
    let space = ProjectiveSpace::new(m, n, opts.field, 0)?;
    let mut checked = 0usize;
    for i in 0..=m {
        for j in (0..=m).filter(|&j| j != i) {
            for k in (0..=m).filter(|&k| k != j) {
                let w: BTreeSet<usize> = [i, j, k].into_iter().collect();
                let lhs = space
                    .chart_change_on(i, j, &w)?
                    .compose(&space.chart_change_on(j, k, &w)?)?;
                let holds = if i == k {
                    lhs.is_identity()
                } else {
                    lhs == space.chart_change_on(i, k, &w)?
                };
                if !holds {
                    return Outcome::check(false, json!({ "triples_checked": checked }), || {
                        Ok(json!({ "triple": [i, j, k] }))
                    });
                }
                checked += 1;
            }
        }
    }
    Ok(Outcome::pass(json!({ "triples_checked": checked })))
}

#[derive(Deserialize)]
struct PointActInput {
    matrix: MatrixJson,
    point: Vec<String>,
}

pub fn point_act(input: &str, opts: &RingOptions) -> Result<Outcome> {
    let data: PointActInput = read_json(input)?;
    let sig = opts.infer_ring(
        data.matrix
            .expressions()
            .chain(data.point.iter().map(String::as_str)),
    )?;
    let t = SuperMatrix::from_json(&data.matrix, &sig)?;
    if t.m() == 0 {
        return Err(Error::DimensionMismatch("matrix has no even part".into()));
    }
    let coords = data
        .point
        .iter()
        .map(|s| parse(s, &sig))
        .collect::<Result<Vec<_>>>()?;
    let p = ProjPoint::new(t.m() - 1, t.n(), coords)?;
    let q = act(&t, &p)?;
    let normalized: Vec<Value> = q
        .charts()
        .into_iter()
        .map(|i| {
            let c: Vec<Value> = normalize_point(&q, i)?.iter().map(expr).collect();
            Ok(json!({ "chart": i, "coordinates": c }))
        })
        .collect::<Result<_>>()?;
    Ok(Outcome::pass(json!({
        "image": q.coords().iter().map(expr).collect::<Vec<_>>(),
        "charts": q.charts(),
        "normalized": normalized,
    })))
}

fn overlap_ring(opts: &RingOptions) -> Result<Arc<RingSignature>> {
    Ok(opts.capped(overlap_signature(opts.field, opts.q)?))
}

pub fn cocycle_normalize(input: &str, opts: &RingOptions) -> Result<Outcome> {
    let sig = overlap_ring(opts)?;
    let g = parse(input.trim(), &sig)?;
    let t = normalize_cocycle(&Cocycle::new(g)?)?;
    Ok(Outcome::pass(json!({
        "n": t.n,
        "h0": expr(&t.h0),
        "h1": expr(&t.h1),
    })))
}

pub fn p12() -> Result<Outcome> {
    let (_, report) = p12_witness()?;
    let passed = report.well_defined && report.invertible && report.coefficient_is_unit;
    let result = serde_json::to_value(&report).expect("report JSON");
    Outcome::check(passed, result.clone(), || Ok(result))
}
