//! The acceptance suite: seeded, exact checks of the library's main claims.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use serde::Serialize;
use serde_json::Value;
use superkit::autmat::{check_relations, conj_rep, reconstruct_t, scalar_ratio};
use superkit::linebundle::{normalize_cocycle, overlap_signature, random_cocycle, Cocycle};
use superkit::projective::{p12_witness, ProjectiveSpace};
use superkit::sampling::{random_even_unit, random_gl, sample_rng};
use superkit::supergroups::{expand_c_equations, factor_c, is_c, is_sc, reference_c_equations, sample_sc};
use superkit::supermatrix::Convention;
use superkit::susy::{
    chart_even_partial, chart_generator, euler_field, homogeneous_signature, is_susy_preserving, pair,
    restrict_to_chart, s_form, super_bracket, transformed_distribution_factor, z_hat_0, z_hat_1,
};
use superkit::{Error, FieldSpec, Result, RingSignature, SuperMatrix, SuperPoly};

pub const GOLDEN_P12: &str = include_str!("../tests/golden/p12_witness.json");

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Criterion {
    CEquations,
    BerMultiplicativity,
    AutRelations,
    MoritaRoundTrip,
    ChartCocycle,
    LineBundle,
    SusyAnchors,
    MainTheorem,
    P12Obstruction,
    CliDeterminism,
}

impl Criterion {
    pub const ALL: [Criterion; 10] = [
        Criterion::CEquations,
        Criterion::BerMultiplicativity,
        Criterion::AutRelations,
        Criterion::MoritaRoundTrip,
        Criterion::ChartCocycle,
        Criterion::LineBundle,
        Criterion::SusyAnchors,
        Criterion::MainTheorem,
        Criterion::P12Obstruction,
        Criterion::CliDeterminism,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Criterion::CEquations => "c-equations",
            Criterion::BerMultiplicativity => "ber-multiplicativity",
            Criterion::AutRelations => "aut-relations",
            Criterion::MoritaRoundTrip => "morita-round-trip",
            Criterion::ChartCocycle => "chart-cocycle",
            Criterion::LineBundle => "line-bundle",
            Criterion::SusyAnchors => "susy-anchors",
            Criterion::MainTheorem => "main-theorem",
            Criterion::P12Obstruction => "p12-obstruction",
            Criterion::CliDeterminism => "cli-determinism",
        }
    }

    /// Wall-clock budget, where one is pinned.
    pub fn limit(self) -> Option<Duration> {
        let secs = match self {
            Criterion::CEquations => 5,
            Criterion::BerMultiplicativity => 30,
            Criterion::AutRelations => 60,
            Criterion::ChartCocycle => 10,
            Criterion::LineBundle => 60,
            Criterion::MainTheorem => 120,
            _ => return None,
        };
        Some(Duration::from_secs(secs))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CriterionReport {
    pub criterion: &'static str,
    pub passed: bool,
    pub checked: u64,
    pub detail: String,
    pub timing_ms: u64,
}

/// Sample count for a criterion pinned at `base` when run with `samples`
/// (100 reproduces the pinned counts).
pub fn scaled(base: u64, samples: u64) -> u64 {
    (base * samples / 100).max(1)
}

fn stream(seed: u64, salt: u64) -> u64 {
    seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

/// `Ok(checked)` when every case holds, otherwise the first failure.
type Check = std::result::Result<u64, String>;

fn fail<T>(what: impl Into<String>) -> std::result::Result<T, String> {
    Err(what.into())
}

fn lift<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn lam(q: usize) -> std::result::Result<std::sync::Arc<RingSignature>, String> {
    lift(RingSignature::grassmann(FieldSpec::Rationals, q))
}

fn c_equations() -> Check {
    let got = lift(expand_c_equations(Convention::Standard))?;
    let sig = got.first().map(|p| p.signature().clone()).ok_or("no equations")?;
    let want = lift(reference_c_equations(&sig))?;
    if got.len() != 4 {
        return fail(format!("{} equations", got.len()));
    }
    let as_set = |v: &[SuperPoly]| v.iter().map(ToString::to_string).collect::<BTreeSet<_>>();
    if as_set(&got) != as_set(&want) {
        return fail("expanded equations differ from the reference list");
    }
    match expand_c_equations(Convention::Flipped) {
        Err(Error::ConventionMismatch) => Ok(5),
        other => fail(format!("flipped convention gave {other:?}")),
    }
}

fn ber_multiplicativity(seed: u64, samples: u64) -> Check {
    let sig = lam(3)?;
    let count = scaled(100, samples);
    for i in 0..count {
        let mut rng = sample_rng(stream(seed, 2), i);
        let x = lift(random_gl(2, 1, &sig, &mut rng))?;
        let y = lift(random_gl(2, 1, &sig, &mut rng))?;
        let lhs = lift(x.matmul(&y).and_then(|xy| xy.berezinian()))?;
        let rhs = lift(x.berezinian().and_then(|a| a.mul(&y.berezinian()?)))?;
        if lhs != rhs {
            return fail(format!("sample {i}: Ber(XY) = {lhs}, Ber(X)Ber(Y) = {rhs}"));
        }
    }
    Ok(count)
}

fn aut_samples(seed: u64, samples: u64) -> std::result::Result<Vec<SuperMatrix>, String> {
    let mut out = Vec::new();
    for (m, n, q, base, salt) in [(2, 1, 3, 50, 3), (1, 1, 2, 20, 4)] {
        let sig = lam(q)?;
        for i in 0..scaled(base, samples) {
            out.push(lift(random_gl(m, n, &sig, &mut sample_rng(stream(seed, salt), i)))?);
        }
    }
    Ok(out)
}

fn aut_relations(seed: u64, samples: u64) -> Check {
    let ts = aut_samples(seed, samples)?;
    for (i, t) in ts.iter().enumerate() {
        if !lift(conj_rep(t).and_then(|r| check_relations(&r)))? {
            return fail(format!("relations fail for sample {i}: {t}"));
        }
    }
    Ok(ts.len() as u64)
}

fn morita_round_trip(seed: u64, samples: u64) -> Check {
    let ts = aut_samples(seed, samples)?;
    for (i, t) in ts.iter().enumerate() {
        let back = lift(conj_rep(t).and_then(|r| reconstruct_t(&r)))?;
        match lift(scalar_ratio(&back, t))? {
            Some(c) if c.is_even() && c.is_unit() => {}
            _ => return fail(format!("sample {i}: {back} is not a unit multiple of {t}")),
        }
    }
    Ok(ts.len() as u64)
}

fn chart_cocycle() -> Check {
    let mut checked = 0;
    for m in [2, 3] {
        let space = lift(ProjectiveSpace::new(m, 1, FieldSpec::Rationals, 0))?;
        for i in 0..=m {
            for j in (0..=m).filter(|&j| j != i) {
                for k in (0..=m).filter(|&k| k != j) {
                    let w: BTreeSet<usize> = [i, j, k].into_iter().collect();
                    let holds = lift((|| {
                        let lhs = space
                            .chart_change_on(i, j, &w)?
                            .compose(&space.chart_change_on(j, k, &w)?)?;
                        Ok(if i == k {
                            lhs.is_identity()
                        } else {
                            lhs == space.chart_change_on(i, k, &w)?
                        })
                    })())?;
                    if !holds {
                        return fail(format!("P^{m}|1: triple ({i},{j},{k})"));
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(checked)
}

fn line_bundle(seed: u64, samples: u64) -> Check {
    let sig = lift(overlap_signature(FieldSpec::Rationals, 3))?;
    let count = scaled(100, samples);
    for i in 0..count {
        let n = (i % 7) as i32 - 3;
        let g = lift(random_cocycle(&sig, n, &mut sample_rng(stream(seed, 6), i)))?;
        let t = lift(Cocycle::new(g.clone()).and_then(|c| normalize_cocycle(&c)))?;
        let xn = lift(SuperPoly::gen(&sig, "x").and_then(|x| x.pow(n as i64)))?;
        let lhs = lift(t.h0.mul(&g).and_then(|a| a.mul(&t.h1.invert()?)))?;
        if t.n != n || lhs != xn {
            return fail(format!("cocycle {g}: degree {} (want {n}), h0·g·h1⁻¹ = {lhs}", t.n));
        }
    }
    Ok(count)
}

fn susy_anchors() -> Check {
    let base = lam(3)?;
    let sig = lift(homogeneous_signature(&base))?;
    let s = lift(s_form(&sig))?;
    for (name, v) in [
        ("E", euler_field(&sig)),
        ("Ẑ1", z_hat_1(&sig)),
        ("Ẑ0", z_hat_0(&sig)),
    ] {
        let value = lift(v.and_then(|v| pair(&s, &v)))?;
        if !value.is_zero() {
            return fail(format!("s({name}) = {value}"));
        }
    }
    let z1 = lift(z_hat_1(&sig).and_then(|v| restrict_to_chart(&v, 1)))?;
    if z1 != lift(chart_generator(&base, 1))? {
        return fail("j(Ẑ1) is not ∂η + η∂w");
    }
    let sq = lift(super_bracket(&z1, &z1))?;
    let two = SuperPoly::from_i64(z1.derivation().signature(), 2);
    if sq != lift(chart_even_partial(&base, 1).and_then(|d| d.scale(&two)))? {
        return fail("[Z1, Z1] is not 2∂w");
    }
    Ok(5)
}

fn main_theorem(seed: u64, samples: u64) -> Check {
    let sig = lam(3)?;
    let count = scaled(100, samples);
    let mut checked = 0;
    // forward
    for i in 0..count {
        let g = lift(sample_sc(3, stream(seed, 8).wrapping_add(i)))?;
        let v = lift(is_susy_preserving(&g))?;
        if !v.preserving || !v.t.as_ref().is_some_and(SuperPoly::is_one) {
            return fail(format!("SC sample {i} is not SUSY-preserving with t = 1"));
        }
        if lift(transformed_distribution_factor(&g))?.is_none() {
            return fail(format!("SC sample {i} moves the distribution"));
        }
        checked += 1;
    }
    // converse: bodies outside C
    let mut found = 0;
    let mut index = 0;
    while found < count {
        let g = lift(random_gl(2, 1, &sig, &mut sample_rng(stream(seed, 9), index)))?;
        index += 1;
        if lift(is_c(&g.body()))?.0 {
            continue;
        }
        if lift(is_susy_preserving(&g))?.preserving {
            return fail(format!("GL sample {g} with body outside C preserves s"));
        }
        found += 1;
        checked += 1;
    }
    // lift invariance
    for i in 0..scaled(20, samples) {
        let mut rng = sample_rng(stream(seed, 10), i);
        let c = lift(random_even_unit(&sig, &mut rng))?;
        let members = [
            lift(sample_sc(3, stream(seed, 11).wrapping_add(i)))?,
            lift(random_gl(2, 1, &sig, &mut rng))?,
        ];
        for g in members {
            let a = lift(is_susy_preserving(&g))?.preserving;
            let b = lift(g.scale(&c).and_then(|cg| is_susy_preserving(&cg)))?.preserving;
            if a != b {
                return fail(format!("scaling {g} by {c} changes the verdict"));
            }
            checked += 1;
        }
    }
    // the other component of SpO
    let flip = lift(SuperMatrix::diag_i64(2, 1, &sig, &[1, 1, -1]))?;
    let v = lift(is_susy_preserving(&flip))?;
    let special = lift(factor_c(&flip))?.special;
    if !v.preserving || !lift(is_sc(&special))? {
        return fail("diag(1,1,-1) is not handled");
    }
    Ok(checked + 1)
}

fn p12_obstruction() -> Check {
    let (_, report) = lift(p12_witness())?;
    if !(report.well_defined && report.invertible && report.coefficient_is_unit) {
        return fail(format!("{report:?}"));
    }
    let got = serde_json::to_value(&report).map_err(|e| e.to_string())?;
    let want: Value = serde_json::from_str(GOLDEN_P12).map_err(|e| e.to_string())?;
    if got != want {
        return fail("report differs from the golden file");
    }
    Ok(4)
}

/// Runs one criterion. Determinism is checked by running the other nine
/// twice and comparing their reports with timings removed.
pub fn run_criterion(c: Criterion, seed: u64, samples: u64) -> CriterionReport {
    let start = Instant::now();
    let outcome = match c {
        Criterion::CEquations => c_equations(),
        Criterion::BerMultiplicativity => ber_multiplicativity(seed, samples),
        Criterion::AutRelations => aut_relations(seed, samples),
        Criterion::MoritaRoundTrip => morita_round_trip(seed, samples),
        Criterion::ChartCocycle => chart_cocycle(),
        Criterion::LineBundle => line_bundle(seed, samples),
        Criterion::SusyAnchors => susy_anchors(),
        Criterion::MainTheorem => main_theorem(seed, samples),
        Criterion::P12Obstruction => p12_obstruction(),
        Criterion::CliDeterminism => determinism(seed, samples),
    };
    let elapsed = start.elapsed();
    let timing_ms = elapsed.as_millis() as u64;
    let (mut passed, checked, mut detail) = match outcome {
        Ok(n) => (true, n, String::new()),
        Err(e) => (false, 0, e),
    };
    if let Some(limit) = c.limit() {
        if passed && elapsed > limit {
            passed = false;
            detail = format!("exceeded the {}s budget", limit.as_secs());
        }
    }
    CriterionReport {
        criterion: c.name(),
        passed,
        checked,
        detail,
        timing_ms,
    }
}

fn determinism(seed: u64, samples: u64) -> Check {
    let once = || {
        Criterion::ALL[..9]
            .iter()
            .map(|&c| {
                let mut r = run_criterion(c, seed, samples);
                r.timing_ms = 0;
                // a budget overrun is a timing artifact, not a result
                if r.detail.starts_with("exceeded") {
                    r.passed = true;
                    r.detail.clear();
                }
                r
            })
            .collect::<Vec<_>>()
    };
    if once() == once() {
        Ok(9)
    } else {
        fail("two runs with the same seed differ")
    }
}

pub fn run_all(seed: u64, samples: u64) -> Vec<CriterionReport> {
    Criterion::ALL
        .iter()
        .map(|&c| run_criterion(c, seed, samples))
        .collect()
}

/// Removes every `timing_ms` field, for comparing reports across runs.
pub fn strip_timing(v: &mut Value) {
    match v {
        Value::Object(map) => {
            map.remove("timing_ms");
            map.values_mut().for_each(strip_timing);
        }
        Value::Array(items) => items.iter_mut().for_each(strip_timing),
        _ => {}
    }
}
