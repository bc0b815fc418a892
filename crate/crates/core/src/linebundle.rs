//! Two-chart line bundles on `P^{1|1}` over `Λ_q`.
//!
//! On the overlap `U_0 ∩ U_1` functions live in `Λ_q[ξ][x, x⁻¹]`, where `x`
//! and `ξ` are the coordinates of `U_0` and `U_1` has coordinates `1/x` and
//! `ξ/x`. A transition function `g` is normalized to `x^n` by units `h0`
//! regular on `U_0` and `h1` regular on `U_1`: `h0 · g · h1⁻¹ = x^n`.

use std::sync::Arc;

use rand::Rng;

use crate::error::{Error, Result};
use crate::sampling::{random_grassmann, SampleRng};
use crate::superalg::{
    exp_nilpotent, log_one_plus, FieldSpec, GenRef, Monomial, RingSignature, SuperPoly,
};

/// Ring of the overlap: laurent `x`, odd `xi`, base generators `t1..tq`.
pub fn overlap_signature(field: FieldSpec, q: usize) -> Result<Arc<RingSignature>> {
    let mut b = RingSignature::builder(field).laurent("x").odd("xi");
    for i in 1..=q {
        b = b.odd(format!("t{i}"));
    }
    b.build()
}

#[derive(Clone, Copy)]
struct Coords {
    x: usize,
    xi: usize,
}

fn coords(sig: &RingSignature) -> Result<Coords> {
    match (sig.lookup("x"), sig.lookup("xi")) {
        (Some(GenRef::Even(x)), Some(GenRef::Odd(xi))) if sig.is_laurent(x) => Ok(Coords { x, xi }),
        _ => Err(Error::Input(
            "cocycle ring needs a laurent even `x` and an odd `xi`".into(),
        )),
    }
}

fn x_exponent(m: &Monomial, c: Coords) -> i32 {
    m.even_exponents()[c.x]
}

fn has_xi(m: &Monomial, c: Coords) -> bool {
    m.odd_mask() & (1 << c.xi) != 0
}

/// Regular on `U_0`: no negative powers of `x`.
pub fn is_regular_u0(p: &SuperPoly) -> Result<bool> {
    let c = coords(p.signature())?;
    Ok(p.terms().all(|(m, _)| x_exponent(m, c) >= 0))
}

/// Regular on `U_1`: a polynomial in `1/x` and `ξ/x`.
pub fn is_regular_u1(p: &SuperPoly) -> Result<bool> {
    let c = coords(p.signature())?;
    Ok(p.terms().all(|(m, _)| {
        let e = x_exponent(m, c);
        if has_xi(m, c) {
            e <= -1
        } else {
            e <= 0
        }
    }))
}

/// An even invertible transition function on the overlap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle {
    g: SuperPoly,
    degree: i32,
}

impl Cocycle {
    pub fn new(g: SuperPoly) -> Result<Self> {
        let degree = degree(&g)?;
        Ok(Cocycle { g, degree })
    }

    pub fn g(&self) -> &SuperPoly {
        &self.g
    }

    pub fn degree(&self) -> i32 {
        self.degree
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trivialization {
    pub h0: SuperPoly,
    pub h1: SuperPoly,
    pub n: i32,
}

/// The exponent `n` with `body(g) = c·xⁿ`.
pub fn degree(g: &SuperPoly) -> Result<i32> {
    let c = coords(g.signature())?;
    if !g.is_even() {
        return Err(Error::NotUnit(format!("{g} is not even")));
    }
    let body = g.body();
    let mut it = body.terms();
    match (it.next(), it.next()) {
        (Some((m, _)), None)
            if m
                .even_exponents()
                .iter()
                .enumerate()
                .all(|(i, &e)| i == c.x || e == 0) =>
        {
            Ok(x_exponent(m, c))
        }
        _ => Err(Error::NotUnit(format!("body of {g} is {body}"))),
    }
}

/// Finds `(h0, h1, n)` with `h0 · g · h1⁻¹ = xⁿ`, `h0` regular on `U_0`
/// and `h1` regular on `U_1`.
pub fn normalize_cocycle(cocycle: &Cocycle) -> Result<Trivialization> {
    let g = &cocycle.g;
    let sig = g.signature();
    let c = coords(sig)?;
    let field = sig.field();
    let p = field.characteristic();
    if p != 0 && sig.num_odd() as u64 > p {
        return Err(Error::FieldTooSmall {
            p,
            needed: sig.num_odd(),
        });
    }
    let n = cocycle.degree;
    let body = g.body();
    let (_, lead) = body.terms().next().expect("degree checked the body");
    let cst = SuperPoly::constant(sig, lead.clone());
    let xn = SuperPoly::gen(sig, "x")?.pow(n as i64)?;
    let nu = cst.mul(&xn)?.invert()?.mul(g)?.sub(&SuperPoly::one(sig))?;
    let l = log_one_plus(&nu)?;
    let l_plus = l.filter_terms(|m| x_exponent(m, c) >= 1);
    let l_minus = l.filter_terms(|m| x_exponent(m, c) <= 0);
    let h0p = exp_nilpotent(&l_plus.neg())?;
    let h1p = cst.mul(&exp_nilpotent(&l_minus)?)?;
    // the x⁰ part a0 + α0·ξ of h1' is not regular on U_1 when α0 ≠ 0
    let u = h1p.filter_terms(|m| x_exponent(m, c) == 0);
    let (h0, h1) = if u.terms().any(|(m, _)| has_xi(m, c)) {
        let uinv = u.invert()?;
        (uinv.mul(&h0p)?, uinv.mul(&h1p)?)
    } else {
        (h0p, h1p)
    };
    if !is_regular_u0(&h0)? {
        return Err(Error::RegularityFailure(format!("h0 = {h0} on U_0")));
    }
    if !is_regular_u1(&h1)? {
        return Err(Error::RegularityFailure(format!("h1 = {h1} on U_1")));
    }
    if h0.mul(g)?.mul(&h1.invert()?)? != xn {
        return Err(Error::Inconsistent("normalization identity fails".into()));
    }
    Ok(Trivialization { h0, h1, n })
}

fn x_power(sig: &Arc<RingSignature>, e: i32) -> Result<SuperPoly> {
    SuperPoly::gen(sig, "x")?.pow(e as i64)
}

/// Random even unit regular on `U_0` (`chart = 0`) or `U_1` (`chart = 1`)
/// with a nonzero constant body and nilpotent corrections in `x^{±k}` and `ξ`.
pub fn random_regular_unit(
    sig: &Arc<RingSignature>,
    chart: usize,
    rng: &mut SampleRng,
) -> Result<SuperPoly> {
    let sign = if chart == 0 { 1 } else { -1 };
    let mut c = rng.gen_range(1..=3i64);
    if rng.gen_bool(0.5) {
        c = -c;
    }
    let xi = SuperPoly::gen(sig, "xi")?;
    let mut acc = SuperPoly::from_i64(sig, c);
    for k in 0..=2 {
        let even_part = random_grassmann(sig, rng, &[2])?
            .filter_terms(|m| m.odd_mask() & (1 << coords(sig).map(|c| c.xi).unwrap_or(0)) == 0);
        acc = acc.add(&even_part.mul(&x_power(sig, sign * k)?)?)?;
        // ξ·x^k is regular on U_0 for k ≥ 0; ξ·x^{-k} on U_1 for k ≥ 1
        if chart == 0 || k >= 1 {
            let odd_part = random_grassmann(sig, rng, &[1, 3])?
                .filter_terms(|m| m.odd_mask() & (1 << coords(sig).map(|c| c.xi).unwrap_or(0)) == 0);
            acc = acc.add(&xi.mul(&odd_part)?.mul(&x_power(sig, sign * k)?)?)?;
        }
    }
    Ok(acc)
}

/// `h0⁻¹ · xⁿ · h1` for random regular units.
pub fn random_cocycle(sig: &Arc<RingSignature>, n: i32, rng: &mut SampleRng) -> Result<SuperPoly> {
    let h0 = random_regular_unit(sig, 0, rng)?;
    let h1 = random_regular_unit(sig, 1, rng)?;
    h0.invert()?.mul(&x_power(sig, n)?)?.mul(&h1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::sample_rng;
    use crate::superalg::parse;

    fn ring() -> Arc<RingSignature> {
        overlap_signature(FieldSpec::Rationals, 3).unwrap()
    }

    fn check(g: &SuperPoly) -> Trivialization {
        let t = normalize_cocycle(&Cocycle::new(g.clone()).unwrap()).unwrap();
        let xn = x_power(g.signature(), t.n).unwrap();
        assert_eq!(t.h0.mul(g).unwrap().mul(&t.h1.invert().unwrap()).unwrap(), xn);
        assert!(is_regular_u0(&t.h0).unwrap());
        assert!(is_regular_u1(&t.h1).unwrap());
        t
    }

    #[test]
    fn degree_examples() {
        let s = ring();
        assert_eq!(degree(&parse("x^2", &s).unwrap()).unwrap(), 2);
        assert_eq!(degree(&parse("3", &s).unwrap()).unwrap(), 0);
        assert_eq!(degree(&parse("x + t1*t2", &s).unwrap()).unwrap(), 1);
        assert!(matches!(
            degree(&parse("x + 1", &s).unwrap()),
            Err(Error::NotUnit(_))
        ));
    }

    #[test]
    fn pure_power_is_already_normal() {
        let s = ring();
        let t = check(&parse("x^3", &s).unwrap());
        assert!(t.h0.is_one() && t.h1.is_one());
        assert_eq!(t.n, 3);
    }

    #[test]
    fn constant_nilpotent_goes_to_u1() {
        let s = ring();
        let t = check(&parse("1 + t1*t2", &s).unwrap());
        assert!(t.h0.is_one());
        assert_eq!(t.h1, parse("1 + t1*t2", &s).unwrap());
    }

    #[test]
    fn odd_term_below_x0_needs_no_correction() {
        let s = ring();
        // x·(1 + ξ·θ1·x⁻¹): the ξ term sits at x⁻¹, already regular on U_1
        let t = check(&parse("x + xi*t1", &s).unwrap());
        assert_eq!(t.n, 1);
        assert!(t.h0.is_one());
        assert_eq!(t.h1, parse("1 + x^-1*xi*t1", &s).unwrap());
    }

    #[test]
    fn odd_correction_path() {
        let s = ring();
        // x·(1 + ξ·θ1) leaves ξ·θ1 at x⁰, which is not regular on U_1
        let g = parse("x + x*xi*t1", &s).unwrap();
        let t = check(&g);
        assert_eq!(t.n, 1);
        assert_eq!(t.h0, parse("1 - xi*t1", &s).unwrap());
        assert!(t.h1.is_one());
    }

    #[test]
    fn random_cocycles_normalize() {
        let s = ring();
        for i in 0..10 {
            let mut rng = sample_rng(5, i);
            let n = (i as i32 % 7) - 3;
            let g = random_cocycle(&s, n, &mut rng).unwrap();
            assert_eq!(check(&g).n, n);
        }
    }

    #[test]
    fn small_prime_rejected() {
        let s = overlap_signature(FieldSpec::prime(3).unwrap(), 3).unwrap();
        let g = parse("x", &s).unwrap();
        assert!(matches!(
            normalize_cocycle(&Cocycle::new(g).unwrap()),
            Err(Error::FieldTooSmall { p: 3, .. })
        ));
    }
}
