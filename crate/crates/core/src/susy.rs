//! The SUSY structure on `P^{1|1}` over a base `Λ_q`.
//!
//! Homogeneous coordinates are `z0, z1` (even) and `zeta` (odd). A one-form
//! is written with right coefficients, `ω = dz0·a0 + dz1·a1 + dζ·b`, and a
//! vector field with left coefficients, `V = c0·∂z0 + c1·∂z1 + e·∂ζ`. The
//! pairing is `ω(V) = c0·a0 + c1·a1 + e·b`. In this notation the form
//! `s = z1 dz0 − z0 dz1 − ζ dζ` is `dzᵀ·H·z`.
//!
//! Chart 1 has coordinates `w = z0/z1`, `eta = ζ/z1`; chart 0 has
//! `u = z1/z0`, `xi = ζ/z0`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::superalg::{AlgebraMorphism, Derivation, Monomial, Parity, RingSignature, SuperPoly};
use crate::supergroups::{factor_c, is_c};
use crate::supermatrix::SuperMatrix;

const ZETA: usize = 0;

/// `Λ[z0, z1, zeta]` over the generators of `base`.
pub fn homogeneous_signature(base: &RingSignature) -> Result<Arc<RingSignature>> {
    RingSignature::builder(base.field())
        .even("z0")
        .even("z1")
        .odd("zeta")
        .max_terms(base.max_terms())
        .include(base)
        .build()
}

/// Coordinate ring of chart 0 (`u`, `xi`) or chart 1 (`w`, `eta`).
pub fn chart_signature(base: &RingSignature, chart: usize) -> Result<Arc<RingSignature>> {
    let (even, odd) = chart_names(chart)?;
    RingSignature::builder(base.field())
        .even(even)
        .odd(odd)
        .max_terms(base.max_terms())
        .include(base)
        .build()
}

fn chart_names(chart: usize) -> Result<(&'static str, &'static str)> {
    match chart {
        0 => Ok(("u", "xi")),
        1 => Ok(("w", "eta")),
        _ => Err(Error::IndexOutOfRange(format!("chart {chart} of P^{{1|1}}"))),
    }
}

fn require_homogeneous(sig: &RingSignature) -> Result<()> {
    let ok = sig.num_even() >= 2
        && sig.num_odd() >= 1
        && sig.name(crate::superalg::GenRef::Even(0)) == "z0"
        && sig.name(crate::superalg::GenRef::Even(1)) == "z1"
        && sig.name(crate::superalg::GenRef::Odd(ZETA)) == "zeta";
    if ok {
        Ok(())
    } else {
        Err(Error::Input(
            "expected a ring built by homogeneous_signature".into(),
        ))
    }
}

fn z_degree(m: &Monomial) -> i32 {
    let e = m.even_exponents();
    e[0] + e[1] + (m.odd_mask() & 1) as i32
}

fn is_linear(p: &SuperPoly) -> bool {
    p.terms().all(|(m, _)| z_degree(m) == 1)
}

fn check_coeffs(sig: &Arc<RingSignature>, coeffs: &[SuperPoly; 3], parities: [Parity; 3]) -> Result<()> {
    require_homogeneous(sig)?;
    for (c, p) in coeffs.iter().zip(parities) {
        if **c.signature() != **sig {
            return Err(Error::SignatureMismatch);
        }
        if !is_linear(c) {
            return Err(Error::Input(format!("{c} is not linear in z0, z1, zeta")));
        }
        if !c.has_parity(p) {
            return Err(Error::ParityMisuse(format!("coefficient {c} should be {p:?}")));
        }
    }
    Ok(())
}

const INDEX_PARITY: [Parity; 3] = [Parity::Even, Parity::Even, Parity::Odd];

/// `dz0·a0 + dz1·a1 + dζ·b`, an even section of `O(1) ⊗ Ω`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearOneForm {
    sig: Arc<RingSignature>,
    coeffs: [SuperPoly; 3],
}

impl LinearOneForm {
    pub fn new(sig: &Arc<RingSignature>, coeffs: [SuperPoly; 3]) -> Result<Self> {
        check_coeffs(sig, &coeffs, INDEX_PARITY)?;
        Ok(LinearOneForm {
            sig: sig.clone(),
            coeffs,
        })
    }

    pub fn signature(&self) -> &Arc<RingSignature> {
        &self.sig
    }

    pub fn coeffs(&self) -> &[SuperPoly; 3] {
        &self.coeffs
    }

    /// `ω·t` for an even constant `t`.
    pub fn scale(&self, t: &SuperPoly) -> Result<Self> {
        let coeffs = [
            self.coeffs[0].mul(t)?,
            self.coeffs[1].mul(t)?,
            self.coeffs[2].mul(t)?,
        ];
        Self::new(&self.sig, coeffs)
    }

    /// The matrix `K` with `ω = dzᵀ·K·z`, over the base ring.
    pub fn matrix(&self, base: &Arc<RingSignature>) -> Result<SuperMatrix> {
        let mut k = SuperMatrix::zero(2, 1, base);
        for (a, c) in self.coeffs.iter().enumerate() {
            for (m, v) in c.terms() {
                let e = m.even_exponents();
                let (b, rest_mask) = if e[0] == 1 {
                    (0, m.odd_mask())
                } else if e[1] == 1 {
                    (1, m.odd_mask())
                } else {
                    (2, m.odd_mask() & !1)
                };
                let rest = Monomial::new(e[2..].to_vec(), rest_mask >> 1);
                // ζ·θ_I = (−1)^{|I|} θ_I·ζ
                let sign_odd = b == 2 && (rest.odd_degree() % 2 == 1);
                let mut entry = SuperPoly::from_terms(base, [(rest, v.clone())])?;
                if sign_odd {
                    entry = entry.neg();
                }
                let cur = k.get(a, b).add(&entry)?;
                k.set(a, b, cur)?;
            }
        }
        Ok(k)
    }
}

/// `c0·∂z0 + c1·∂z1 + e·∂ζ` of a fixed parity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearVectorField {
    sig: Arc<RingSignature>,
    parity: Parity,
    coeffs: [SuperPoly; 3],
}

impl LinearVectorField {
    pub fn new(sig: &Arc<RingSignature>, parity: Parity, coeffs: [SuperPoly; 3]) -> Result<Self> {
        check_coeffs(sig, &coeffs, INDEX_PARITY.map(|p| p.add(parity)))?;
        Ok(LinearVectorField {
            sig: sig.clone(),
            parity,
            coeffs,
        })
    }

    pub fn signature(&self) -> &Arc<RingSignature> {
        &self.sig
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn coeffs(&self) -> &[SuperPoly; 3] {
        &self.coeffs
    }

    /// The derivation of `target` (same generators, possibly localized)
    /// that sends `z0, z1, zeta` to the coefficients and the base to zero.
    pub fn to_derivation(&self, target: &Arc<RingSignature>) -> Result<Derivation> {
        let named = [
            ("z0", self.coeffs[0].embed(target)?),
            ("z1", self.coeffs[1].embed(target)?),
            ("zeta", self.coeffs[2].embed(target)?),
        ];
        Derivation::from_names(target, self.parity, &named)
    }
}

/// A derivation of a chart ring, tagged with its chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartDerivation {
    chart: usize,
    derivation: Derivation,
}

impl ChartDerivation {
    pub fn new(chart: usize, derivation: Derivation) -> Result<Self> {
        let (even, odd) = chart_names(chart)?;
        let sig = derivation.signature();
        if sig.lookup(even).is_none() || sig.lookup(odd).is_none() {
            return Err(Error::Input(format!(
                "chart {chart} derivations act on `{even}` and `{odd}`"
            )));
        }
        Ok(ChartDerivation { chart, derivation })
    }

    pub fn chart(&self) -> usize {
        self.chart
    }

    pub fn derivation(&self) -> &Derivation {
        &self.derivation
    }

    pub fn parity(&self) -> Parity {
        self.derivation.parity()
    }

    /// Image of the even chart coordinate (`w` or `u`).
    pub fn even_image(&self) -> &SuperPoly {
        let (even, _) = chart_names(self.chart).expect("checked on construction");
        self.derivation.image_of(even).expect("checked on construction")
    }

    /// Image of the odd chart coordinate (`eta` or `xi`).
    pub fn odd_image(&self) -> &SuperPoly {
        let (_, odd) = chart_names(self.chart).expect("checked on construction");
        self.derivation.image_of(odd).expect("checked on construction")
    }

    pub fn is_zero(&self) -> bool {
        self.derivation.is_zero()
    }

    pub fn scale(&self, f: &SuperPoly) -> Result<Self> {
        Self::new(self.chart, self.derivation.scale(f)?)
    }
}

fn gen(sig: &Arc<RingSignature>, name: &str) -> SuperPoly {
    SuperPoly::gen(sig, name).expect("generator of a signature built here")
}

/// `s = z1 dz0 − z0 dz1 − ζ dζ`.
pub fn s_form(sig: &Arc<RingSignature>) -> Result<LinearOneForm> {
    require_homogeneous(sig)?;
    LinearOneForm::new(
        sig,
        [gen(sig, "z1"), gen(sig, "z0").neg(), gen(sig, "zeta").neg()],
    )
}

/// `dzᵀ·K·z` for an even 2|1 matrix `K` over the base of `sig`.
pub fn form_from_matrix(sig: &Arc<RingSignature>, k: &SuperMatrix) -> Result<LinearOneForm> {
    require_homogeneous(sig)?;
    if k.m() != 2 || k.n() != 1 {
        return Err(Error::DimensionMismatch(format!("{}|{} form", k.m(), k.n())));
    }
    let z = [gen(sig, "z0"), gen(sig, "z1"), gen(sig, "zeta")];
    let mut coeffs = [SuperPoly::zero(sig), SuperPoly::zero(sig), SuperPoly::zero(sig)];
    for (a, slot) in coeffs.iter_mut().enumerate() {
        for (b, zb) in z.iter().enumerate() {
            *slot = slot.add(&k.get(a, b).embed(sig)?.mul(zb)?)?;
        }
    }
    LinearOneForm::new(sig, coeffs)
}

/// `ω(V) = c0·a0 + c1·a1 + e·b`, a section of `O(2)`.
pub fn pair(omega: &LinearOneForm, v: &LinearVectorField) -> Result<SuperPoly> {
    if *omega.sig != *v.sig {
        return Err(Error::SignatureMismatch);
    }
    let mut acc = SuperPoly::zero(&omega.sig);
    for (c, a) in v.coeffs.iter().zip(&omega.coeffs) {
        acc = acc.add(&c.mul(a)?)?;
    }
    Ok(acc)
}

/// `E = z0 ∂z0 + z1 ∂z1 + ζ ∂ζ`.
pub fn euler_field(sig: &Arc<RingSignature>) -> Result<LinearVectorField> {
    require_homogeneous(sig)?;
    LinearVectorField::new(
        sig,
        Parity::Even,
        [gen(sig, "z0"), gen(sig, "z1"), gen(sig, "zeta")],
    )
}

/// `Ẑ1 = ζ ∂z0 + z1 ∂ζ`.
pub fn z_hat_1(sig: &Arc<RingSignature>) -> Result<LinearVectorField> {
    require_homogeneous(sig)?;
    LinearVectorField::new(
        sig,
        Parity::Odd,
        [gen(sig, "zeta"), SuperPoly::zero(sig), gen(sig, "z1")],
    )
}

/// `Ẑ0 = −ζ ∂z1 + z0 ∂ζ`.
pub fn z_hat_0(sig: &Arc<RingSignature>) -> Result<LinearVectorField> {
    require_homogeneous(sig)?;
    LinearVectorField::new(
        sig,
        Parity::Odd,
        [SuperPoly::zero(sig), gen(sig, "zeta").neg(), gen(sig, "z0")],
    )
}

/// The SUSY generator of a chart: `∂η + η∂w` on chart 1, `∂ξ − ξ∂u` on chart 0.
pub fn chart_generator(base: &RingSignature, chart: usize) -> Result<ChartDerivation> {
    let sig = chart_signature(base, chart)?;
    let (even, odd) = chart_names(chart)?;
    let theta = gen(&sig, odd);
    let even_image = if chart == 1 { theta } else { theta.neg() };
    let d = Derivation::from_names(
        &sig,
        Parity::Odd,
        &[(odd, SuperPoly::one(&sig)), (even, even_image)],
    )?;
    ChartDerivation::new(chart, d)
}

/// The coordinate derivation `∂w` (chart 1) or `∂u` (chart 0).
pub fn chart_even_partial(base: &RingSignature, chart: usize) -> Result<ChartDerivation> {
    let sig = chart_signature(base, chart)?;
    let (even, _) = chart_names(chart)?;
    let d = Derivation::from_names(&sig, Parity::Even, &[(even, SuperPoly::one(&sig))])?;
    ChartDerivation::new(chart, d)
}

/// Rewrites a degree-zero element of the localized homogeneous ring in
/// chart coordinates.
fn dehomogenize(p: &SuperPoly, chart: usize, target: &Arc<RingSignature>) -> Result<SuperPoly> {
    let mut terms = Vec::with_capacity(p.num_terms());
    for (m, c) in p.terms() {
        if z_degree(m) != 0 {
            return Err(Error::Inconsistent(format!(
                "{p} is not invariant under scaling"
            )));
        }
        let e = m.even_exponents();
        // z0^a z1^b ζ^c ↦ w^a η^c (chart 1) or u^b ξ^c (chart 0)
        let k = if chart == 1 { e[0] } else { e[1] };
        if k < 0 {
            return Err(Error::Inconsistent(format!("{p} has a pole on chart {chart}")));
        }
        let mut exps = Vec::with_capacity(e.len() - 1);
        exps.push(k);
        exps.extend_from_slice(&e[2..]);
        terms.push((Monomial::new(exps, m.odd_mask()), c.clone()));
    }
    SuperPoly::from_terms(target, terms)
}

/// The chart-level action `j(V)`: `V` applied to the `k^×`-invariant
/// coordinate functions of the chart.
pub fn restrict_to_chart(v: &LinearVectorField, chart: usize) -> Result<ChartDerivation> {
    let (_, _) = chart_names(chart)?;
    let sig = &v.sig;
    let (num, den) = if chart == 1 { ("z0", "z1") } else { ("z1", "z0") };
    let local = sig.with_laurent(&[den])?;
    let d = v.to_derivation(&local)?;
    let den_inv = gen(&local, den).pow(-1)?;
    let even_coord = gen(&local, num).mul(&den_inv)?;
    let odd_coord = gen(&local, "zeta").mul(&den_inv)?;
    let target = chart_signature(&*base_of(sig)?, chart)?;
    let even_img = dehomogenize(&d.apply(&even_coord)?, chart, &target)?;
    let odd_img = dehomogenize(&d.apply(&odd_coord)?, chart, &target)?;
    let (even, odd) = chart_names(chart)?;
    let cd = Derivation::from_names(&target, v.parity, &[(even, even_img), (odd, odd_img)])?;
    ChartDerivation::new(chart, cd)
}

/// The base ring: the homogeneous ring without `z0, z1, zeta`.
fn base_of(sig: &RingSignature) -> Result<Arc<RingSignature>> {
    let mut b = RingSignature::builder(sig.field()).max_terms(sig.max_terms());
    for g in &sig.even_generators()[2..] {
        b = if g.laurent {
            b.laurent(g.name.clone())
        } else {
            b.even(g.name.clone())
        };
    }
    for g in &sig.odd_generators()[1..] {
        b = b.odd(g.clone());
    }
    b.build()
}

/// `[D1, D2] = D1 D2 − (−1)^{|D1||D2|} D2 D1`.
pub fn super_bracket(d1: &ChartDerivation, d2: &ChartDerivation) -> Result<ChartDerivation> {
    if d1.chart != d2.chart {
        return Err(Error::ChartMismatch(d1.chart, d2.chart));
    }
    ChartDerivation::new(d1.chart, d1.derivation.bracket(&d2.derivation)?)
}

/// Whether the odd field `D` spans a SUSY structure on its chart: `D` must
/// be nowhere vanishing and `D² = a·∂ + b·D` with `a` a unit.
pub fn frobenius_check(d: &ChartDerivation) -> Result<bool> {
    if !d.parity().is_odd() {
        return Err(Error::NotOdd);
    }
    let alpha = d.even_image();
    let beta = d.odd_image();
    if !beta.is_unit() {
        return Ok(false);
    }
    let sq = super_bracket(d, d)?;
    let half = SuperPoly::from_i64(alpha.signature(), 2).invert()?;
    let sq_even = half.mul(sq.even_image())?;
    let sq_odd = half.mul(sq.odd_image())?;
    let b = sq_odd.mul(&beta.invert()?)?;
    let a = sq_even.sub(&b.mul(alpha)?)?;
    Ok(a.is_unit())
}

fn require_gl21(g: &SuperMatrix) -> Result<()> {
    if g.m() != 2 || g.n() != 1 {
        return Err(Error::DimensionMismatch(format!("{}|{} matrix", g.m(), g.n())));
    }
    if !g.is_even() {
        return Err(Error::ParityMisuse("supermatrix is not even".into()));
    }
    if !g.is_invertible() {
        return Err(Error::NotInvertible(format!("{g}")));
    }
    Ok(())
}

/// The algebra automorphism `F*` of the homogeneous ring with `z ↦ ĝ·z`.
pub fn linear_substitution(sig: &Arc<RingSignature>, g: &SuperMatrix) -> Result<AlgebraMorphism> {
    require_homogeneous(sig)?;
    let z = [gen(sig, "z0"), gen(sig, "z1"), gen(sig, "zeta")];
    let mut named = Vec::with_capacity(3);
    for (a, name) in ["z0", "z1", "zeta"].into_iter().enumerate() {
        let mut img = SuperPoly::zero(sig);
        for (b, zb) in z.iter().enumerate() {
            img = img.add(&g.get(a, b).embed(sig)?.mul(zb)?)?;
        }
        named.push((name, img));
    }
    AlgebraMorphism::from_names(sig, sig, &named)
}

/// `F*ω` for `z ↦ ĝz`, `dz ↦ ĝ·dz`. The `dz_b` coefficient is
/// `Σ_a (−1)^{|ĝ_ab| p(b)} ĝ_ab F*(ω_a)`.
pub fn pullback(omega: &LinearOneForm, g: &SuperMatrix) -> Result<LinearOneForm> {
    require_gl21(g)?;
    let sig = &omega.sig;
    let f = linear_substitution(sig, g)?;
    let moved = omega
        .coeffs
        .iter()
        .map(|c| f.apply(c))
        .collect::<Result<Vec<_>>>()?;
    let mut coeffs = [SuperPoly::zero(sig), SuperPoly::zero(sig), SuperPoly::zero(sig)];
    for (b, slot) in coeffs.iter_mut().enumerate() {
        for (a, fa) in moved.iter().enumerate() {
            let mut term = g.get(a, b).embed(sig)?.mul(fa)?;
            if g.position_parity(a, b).is_odd() && INDEX_PARITY[b].is_odd() {
                term = term.neg();
            }
            *slot = slot.add(&term)?;
        }
    }
    LinearOneForm::new(sig, coeffs)
}

pub fn pullback_s(g: &SuperMatrix) -> Result<LinearOneForm> {
    let sig = homogeneous_signature(g.signature())?;
    pullback(&s_form(&sig)?, g)
}

/// `F_*V = (F*)⁻¹ ∘ V ∘ F*` for `z ↦ ĝz`.
pub fn pushforward(v: &LinearVectorField, g: &SuperMatrix) -> Result<LinearVectorField> {
    require_gl21(g)?;
    let sig = &v.sig;
    let f = linear_substitution(sig, g)?;
    let f_inv = linear_substitution(sig, &g.minverse()?)?;
    let d = v.to_derivation(sig)?;
    let mut coeffs = [SuperPoly::zero(sig), SuperPoly::zero(sig), SuperPoly::zero(sig)];
    for (slot, name) in coeffs.iter_mut().zip(["z0", "z1", "zeta"]) {
        *slot = f_inv.apply(&d.apply(&f.apply(&gen(sig, name))?)?)?;
    }
    LinearVectorField::new(sig, v.parity, coeffs)
}

/// Outcome of [`is_susy_preserving`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SusyVerdict {
    pub preserving: bool,
    /// The factor in `F*s = t·s`; equals `Ber(ĝ)²`.
    pub t: Option<SuperPoly>,
    /// `Ber(ĝ)⁻¹·ĝ`, the representative of the class in `SC`.
    pub sc_representative: Option<SuperMatrix>,
    pub pullback: LinearOneForm,
}

/// The even constant `t` with `ω = t·s`, if there is one.
pub fn proportionality_to_s(omega: &LinearOneForm) -> Result<Option<SuperPoly>> {
    let sig = &omega.sig;
    let base = base_of(sig)?;
    // the z1-coefficient of the dz0-component of t·s is t
    let mut t_terms = Vec::new();
    for (m, c) in omega.coeffs[0].terms() {
        let e = m.even_exponents();
        if e[0] == 0 && e[1] == 1 && m.odd_mask() & 1 == 0 {
            t_terms.push((Monomial::new(e[2..].to_vec(), m.odd_mask() >> 1), c.clone()));
        }
    }
    let t = SuperPoly::from_terms(&base, t_terms)?;
    if !t.is_even() || !t.is_unit() {
        return Ok(None);
    }
    let s = s_form(sig)?;
    if s.scale(&t.embed(sig)?)? == *omega {
        Ok(Some(t))
    } else {
        Ok(None)
    }
}

/// Whether the projective transformation lifted by `ĝ` preserves the SUSY
/// structure, decided from `F*s` and cross-checked against membership in
/// `C` with `t = Ber(ĝ)²`.
pub fn is_susy_preserving(g: &SuperMatrix) -> Result<SusyVerdict> {
    require_gl21(g)?;
    let pb = pullback_s(g)?;
    let t = proportionality_to_s(&pb)?;
    let (in_c, ber2) = is_c(g)?;
    if t.is_some() != in_c {
        return Err(Error::Inconsistent(format!(
            "pullback of s and membership in C disagree for {g}"
        )));
    }
    if let Some(t) = &t {
        if *t != ber2 {
            return Err(Error::Inconsistent(format!("t = {t} but Ber² = {ber2}")));
        }
    }
    let sc_representative = if in_c {
        Some(factor_c(g)?.special)
    } else {
        None
    };
    Ok(SusyVerdict {
        preserving: in_c,
        t,
        sc_representative,
        pullback: pb,
    })
}

/// The function `h` with `j(F_*Ẑ1) = h·Z1` on chart 1, when the transformed
/// field lies in `ker(s)` and its restriction is proportional to `Z1`.
pub fn transformed_distribution_factor(g: &SuperMatrix) -> Result<Option<SuperPoly>> {
    let sig = homogeneous_signature(g.signature())?;
    let v = pushforward(&z_hat_1(&sig)?, g)?;
    if !pair(&s_form(&sig)?, &v)?.is_zero() {
        return Ok(None);
    }
    let d = restrict_to_chart(&v, 1)?;
    let h = d.odd_image().clone();
    let eta = gen(d.derivation.signature(), "eta");
    if !h.is_even() || h.body().is_zero() || *d.even_image() != h.mul(&eta)? {
        return Ok(None);
    }
    Ok(Some(h))
}
