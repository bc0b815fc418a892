//! Charts of projective superspace `P^{m|n}` over a Grassmann base `Λ_q`,
//! points in homogeneous coordinates, and the action of `GL_{m+1|n}`.
//!
//! Chart `U_i` has even coordinates `x_k^i = z_k/z_i` (`k ≠ i`) and odd
//! coordinates `ξ_l^i = ζ_l/z_i`, named `x{k}_{i}` and `xi{l}_{i}` unless
//! custom names are supplied. A chart ring "on `W`" has `x_k^i` inverted for
//! every `k ∈ W`, which realizes the overlap `U_i ∩ ⋂_{k∈W} U_k`.

use std::collections::BTreeSet;
use std::sync::Arc;

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::sampling::{random_even_nilpotent, random_odd, SampleRng};
use crate::superalg::{AlgebraMorphism, FieldSpec, Monomial, Parity, RingSignature, SuperPoly};
use crate::supermatrix::SuperMatrix;

/// `P^{m|n}` over `Λ_q` with chart naming.
#[derive(Clone, Debug)]
pub struct ProjectiveSpace {
    m: usize,
    n: usize,
    base: Arc<RingSignature>,
    /// Per chart: even names indexed by `k` (the entry for `k = i` unused)
    /// and odd names.
    names: Vec<(Vec<String>, Vec<String>)>,
}

impl ProjectiveSpace {
    pub fn new(m: usize, n: usize, field: FieldSpec, q: usize) -> Result<Self> {
        let names = (0..=m)
            .map(|i| {
                (
                    (0..=m).map(|k| format!("x{k}_{i}")).collect(),
                    (1..=n).map(|l| format!("xi{l}_{i}")).collect(),
                )
            })
            .collect();
        Ok(ProjectiveSpace {
            m,
            n,
            base: RingSignature::grassmann(field, q)?,
            names,
        })
    }

    /// Custom coordinate names; `even[i]` lists chart `i`'s even names in
    /// increasing `k` with `k = i` omitted.
    pub fn with_names(
        m: usize,
        n: usize,
        field: FieldSpec,
        q: usize,
        even: &[&[&str]],
        odd: &[&[&str]],
    ) -> Result<Self> {
        if even.len() != m + 1 || odd.len() != m + 1 {
            return Err(Error::DimensionMismatch("one name list per chart".into()));
        }
        let mut names = Vec::new();
        for i in 0..=m {
            if even[i].len() != m || odd[i].len() != n {
                return Err(Error::DimensionMismatch(format!("names for chart {i}")));
            }
            let mut ev: Vec<String> = even[i].iter().map(|s| s.to_string()).collect();
            ev.insert(i, String::new());
            names.push((ev, odd[i].iter().map(|s| s.to_string()).collect()));
        }
        Ok(ProjectiveSpace {
            m,
            n,
            base: RingSignature::grassmann(field, q)?,
            names,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn base(&self) -> &Arc<RingSignature> {
        &self.base
    }

    fn check_chart(&self, i: usize) -> Result<()> {
        if i > self.m {
            return Err(Error::IndexOutOfRange(format!(
                "chart {i} of P^{{{}|{}}}",
                self.m, self.n
            )));
        }
        Ok(())
    }

    pub fn even_name(&self, chart: usize, k: usize) -> &str {
        &self.names[chart].0[k]
    }

    pub fn odd_name(&self, chart: usize, l: usize) -> &str {
        &self.names[chart].1[l]
    }

    /// Coordinate ring of chart `i` with `x_k^i` inverted for `k ∈ w`.
    pub fn chart_ring(&self, i: usize, w: &BTreeSet<usize>) -> Result<Arc<RingSignature>> {
        self.check_chart(i)?;
        let mut b = RingSignature::builder(self.base.field());
        for k in (0..=self.m).filter(|&k| k != i) {
            let name = self.even_name(i, k);
            b = if w.contains(&k) { b.laurent(name) } else { b.even(name) };
        }
        for l in 0..self.n {
            b = b.odd(self.odd_name(i, l));
        }
        b.include(&self.base).max_terms(self.base.max_terms()).build()
    }

    /// `φ_ij : O(U_j)[W⁻¹] → O(U_i)[W⁻¹]` for `i, j ∈ w`:
    /// `x_k^j ↦ x_k^i/x_j^i`, `x_i^j ↦ 1/x_j^i`, `ξ_l^j ↦ ξ_l^i/x_j^i`.
    pub fn chart_change_on(&self, i: usize, j: usize, w: &BTreeSet<usize>) -> Result<AlgebraMorphism> {
        self.check_chart(i)?;
        self.check_chart(j)?;
        if i == j {
            return Err(Error::IndexOutOfRange(format!("chart change from {i} to itself")));
        }
        if !w.contains(&i) || !w.contains(&j) {
            return Err(Error::IndexOutOfRange("overlap must contain both charts".into()));
        }
        let source = self.chart_ring(j, w)?;
        let target = self.chart_ring(i, w)?;
        let denom_inv = SuperPoly::gen(&target, self.even_name(i, j))?.invert()?;
        let mut images: Vec<(&str, SuperPoly)> = Vec::new();
        for k in (0..=self.m).filter(|&k| k != j) {
            let img = if k == i {
                denom_inv.clone()
            } else {
                SuperPoly::gen(&target, self.even_name(i, k))?.mul(&denom_inv)?
            };
            images.push((self.even_name(j, k), img));
        }
        for l in 0..self.n {
            let img = SuperPoly::gen(&target, self.odd_name(i, l))?.mul(&denom_inv)?;
            images.push((self.odd_name(j, l), img));
        }
        AlgebraMorphism::from_names(&source, &target, &images)
    }

    /// `φ_ij` on the pairwise overlap.
    pub fn chart_change(&self, i: usize, j: usize) -> Result<AlgebraMorphism> {
        self.chart_change_on(i, j, &[i, j].into_iter().collect())
    }

    /// Homogeneous coordinates `(z_0, …, z_m, ζ_1, …, ζ_n)` expressed in
    /// chart `i` of ring `ring` (so `z_i = 1`).
    fn homogeneous_in_chart(&self, i: usize, ring: &Arc<RingSignature>) -> Result<Vec<SuperPoly>> {
        let mut z = Vec::with_capacity(self.m + 1 + self.n);
        for k in 0..=self.m {
            z.push(if k == i {
                SuperPoly::one(ring)
            } else {
                SuperPoly::gen(ring, self.even_name(i, k))?
            });
        }
        for l in 0..self.n {
            z.push(SuperPoly::gen(ring, self.odd_name(i, l))?);
        }
        Ok(z)
    }

    fn check_matrix(&self, t: &SuperMatrix) -> Result<()> {
        if t.m() != self.m + 1 || t.n() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "a {}|{} matrix does not act on P^{{{}|{}}}",
                t.m(),
                t.n(),
                self.m,
                self.n
            )));
        }
        if *t.signature() != self.base {
            return Err(Error::SignatureMismatch);
        }
        if !t.is_invertible() {
            return Err(Error::NotInvertible(format!("{t}")));
        }
        Ok(())
    }

    /// The chart automorphism induced by `T` on `U_i ∩ ⋂_{k∈w} U_k`:
    /// `x_k^i ↦ (Tz)_k / (Tz)_i`, `ξ_l^i ↦ (Tζ)_l / (Tz)_i` with `z_i = 1`.
    /// The target ring additionally inverts the coordinates appearing in the
    /// body of the denominator, which must be a monomial.
    pub fn induced_chart_map_on(
        &self,
        t: &SuperMatrix,
        i: usize,
        w: &BTreeSet<usize>,
    ) -> Result<AlgebraMorphism> {
        self.check_matrix(t)?;
        self.check_chart(i)?;
        let source = self.chart_ring(i, w)?;
        let probe = source.with_laurent(
            &(0..=self.m)
                .filter(|&k| k != i)
                .map(|k| self.even_name(i, k))
                .collect::<Vec<_>>(),
        )?;
        let tz_probe = self.image_coordinates(t, i, &probe)?;
        let body = tz_probe[i].body();
        if body.num_terms() != 1 {
            return Err(Error::NotInvertible(format!(
                "denominator {} has body {body}, not a monomial",
                tz_probe[i]
            )));
        }
        let (mono, _) = body.terms().next().expect("one term");
        let mut target_w = w.clone();
        for (pos, &e) in mono.even_exponents().iter().enumerate() {
            if e != 0 {
                let name = &probe.even_generators()[pos].name;
                let k = (0..=self.m)
                    .find(|&k| k != i && self.even_name(i, k) == name)
                    .ok_or_else(|| Error::Inconsistent(format!("stray generator {name}")))?;
                target_w.insert(k);
            }
        }
        let target = self.chart_ring(i, &target_w)?;
        let tz = self.image_coordinates(t, i, &target)?;
        let dinv = tz[i].invert()?;
        let mut images: Vec<(&str, SuperPoly)> = Vec::new();
        for k in (0..=self.m).filter(|&k| k != i) {
            images.push((self.even_name(i, k), tz[k].mul(&dinv)?));
        }
        for l in 0..self.n {
            images.push((self.odd_name(i, l), tz[self.m + 1 + l].mul(&dinv)?));
        }
        AlgebraMorphism::from_names(&source, &target, &images)
    }

    pub fn induced_chart_map(&self, t: &SuperMatrix, i: usize) -> Result<AlgebraMorphism> {
        self.induced_chart_map_on(t, i, &BTreeSet::new())
    }

    /// `T·z` for the chart-`i` homogeneous coordinates over `ring`.
    fn image_coordinates(
        &self,
        t: &SuperMatrix,
        i: usize,
        ring: &Arc<RingSignature>,
    ) -> Result<Vec<SuperPoly>> {
        let z = self.homogeneous_in_chart(i, ring)?;
        let tr = t.embed(ring)?;
        tr.apply_to(&z)
    }

    /// Morphism from a chart ring to the base evaluating the coordinates at
    /// `normalize_point(p, i)`.
    pub fn evaluation(&self, ring: &Arc<RingSignature>, p: &ProjPoint, i: usize) -> Result<AlgebraMorphism> {
        let coords = normalize_point(p, i)?;
        let mut images: Vec<(&str, SuperPoly)> = Vec::new();
        let mut it = coords.into_iter();
        for k in (0..=self.m).filter(|&k| k != i) {
            images.push((self.even_name(i, k), it.next().expect("coordinate")));
        }
        for l in 0..self.n {
            images.push((self.odd_name(i, l), it.next().expect("coordinate")));
        }
        AlgebraMorphism::from_names(ring, &self.base, &images)
    }

    pub fn point(&self, coords: Vec<SuperPoly>) -> Result<ProjPoint> {
        ProjPoint::new(self.m, self.n, coords)
    }
}

/// A point of `P^{m|n}(Λ_q)`: a free line spanned by an even vector with at
/// least one even coordinate of invertible body.
#[derive(Clone, Debug)]
pub struct ProjPoint {
    m: usize,
    n: usize,
    coords: Vec<SuperPoly>,
}

impl ProjPoint {
    pub fn new(m: usize, n: usize, coords: Vec<SuperPoly>) -> Result<Self> {
        if coords.len() != m + 1 + n {
            return Err(Error::DimensionMismatch(format!(
                "{} coordinates for P^{{{m}|{n}}}",
                coords.len()
            )));
        }
        let sig = coords[0].signature().clone();
        if sig.num_even() != 0 {
            return Err(Error::Input("point coordinates must be constants of Λ_q".into()));
        }
        for (k, c) in coords.iter().enumerate() {
            if **c.signature() != *sig {
                return Err(Error::SignatureMismatch);
            }
            let want = Parity::from_bit(k > m);
            if !c.has_parity(want) {
                return Err(Error::ParityMisuse(format!("coordinate {k} = {c}")));
            }
        }
        if !coords[..=m].iter().any(SuperPoly::is_unit) {
            return Err(Error::Input(
                "no even coordinate has invertible body".into(),
            ));
        }
        Ok(ProjPoint { m, n, coords })
    }

    pub fn coords(&self) -> &[SuperPoly] {
        &self.coords
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Charts containing the point.
    pub fn charts(&self) -> Vec<usize> {
        (0..=self.m).filter(|&k| self.coords[k].is_unit()).collect()
    }

    pub fn scale(&self, u: &SuperPoly) -> Result<ProjPoint> {
        let coords = self.coords.iter().map(|c| u.mul(c)).collect::<Result<_>>()?;
        ProjPoint::new(self.m, self.n, coords)
    }
}

impl PartialEq for ProjPoint {
    /// Equal iff `p' = u·p` for an even unit `u`, found as the ratio at the
    /// first coordinate of `p` with invertible body.
    fn eq(&self, other: &Self) -> bool {
        if self.m != other.m || self.n != other.n {
            return false;
        }
        let Some(k) = (0..=self.m).find(|&k| self.coords[k].is_unit()) else {
            return false;
        };
        let ratio = self.coords[k]
            .invert()
            .and_then(|inv| other.coords[k].mul(&inv));
        match ratio {
            Ok(u) if u.is_even() && u.is_unit() => self
                .coords
                .iter()
                .zip(&other.coords)
                .all(|(a, b)| u.mul(a).map(|ua| ua == *b).unwrap_or(false)),
            _ => false,
        }
    }
}

/// Affine coordinates `(z_k/z_i for k ≠ i; ζ_l/z_i)` in chart `i`.
pub fn normalize_point(p: &ProjPoint, i: usize) -> Result<Vec<SuperPoly>> {
    if i > p.m {
        return Err(Error::IndexOutOfRange(format!("chart {i}")));
    }
    if !p.coords[i].is_unit() {
        return Err(Error::ChartMiss(i));
    }
    let inv = p.coords[i].invert()?;
    p.coords
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != i)
        .map(|(_, c)| c.mul(&inv))
        .collect()
}

/// `z ↦ T z`.
pub fn act(t: &SuperMatrix, p: &ProjPoint) -> Result<ProjPoint> {
    if t.m() != p.m + 1 || t.n() != p.n {
        return Err(Error::DimensionMismatch("matrix and point sizes differ".into()));
    }
    if !t.is_invertible() {
        return Err(Error::NotInvertible(format!("{t}")));
    }
    ProjPoint::new(p.m, p.n, t.apply_to(&p.coords)?)
}

/// Random point whose even coordinates have integer bodies, not all zero.
pub fn random_point(
    m: usize,
    n: usize,
    base: &Arc<RingSignature>,
    rng: &mut SampleRng,
) -> Result<ProjPoint> {
    let lead = rng.gen_range(0..=m);
    let mut coords = Vec::with_capacity(m + 1 + n);
    for k in 0..=m {
        let mut b = rng.gen_range(-2..=2i64);
        if k == lead && b == 0 {
            b = 1;
        }
        coords.push(SuperPoly::from_i64(base, b).add(&random_even_nilpotent(base, rng)?)?);
    }
    for _ in 0..n {
        coords.push(random_odd(base, rng)?);
    }
    ProjPoint::new(m, n, coords)
}

/// Structured outcome of the `P^{1|2}` automorphism check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct P12Report {
    pub chart0: Vec<(String, String)>,
    pub chart1: Vec<(String, String)>,
    pub chart0_inverse: Vec<(String, String)>,
    pub chart1_inverse: Vec<(String, String)>,
    pub invertible: bool,
    pub well_defined: bool,
    pub mu1mu2_coefficient: String,
    pub coefficient_is_unit: bool,
    pub in_pgl_image: bool,
}

fn describe(f: &AlgebraMorphism) -> Vec<(String, String)> {
    f.source()
        .generators()
        .zip(f.images())
        .map(|(g, img)| (f.source().name(g).to_string(), img.to_string()))
        .collect()
}

/// `P^{1|2}` with charts `U_0 = (u, mu1, mu2)` and `U_1 = (v, nu1, nu2)`.
pub fn p12_space() -> Result<ProjectiveSpace> {
    ProjectiveSpace::with_names(
        1,
        2,
        FieldSpec::Rationals,
        0,
        &[&["u"], &["v"]],
        &[&["mu1", "mu2"], &["nu1", "nu2"]],
    )
}

/// The automorphism `(u, μ1, μ2) ↦ (u + μ1μ2, μ1, μ2)` on `U_0`,
/// `(v, ν1, ν2) ↦ (v − ν1ν2, ν1, ν2)` on `U_1`.
pub fn p12_witness() -> Result<((AlgebraMorphism, AlgebraMorphism), P12Report)> {
    let ps = p12_space()?;
    let w: BTreeSet<usize> = [0, 1].into_iter().collect();
    let r0 = ps.chart_ring(0, &w)?;
    let r1 = ps.chart_ring(1, &w)?;
    let e0 = |s: &str| crate::superalg::parse(s, &r0);
    let e1 = |s: &str| crate::superalg::parse(s, &r1);
    let f0 = AlgebraMorphism::from_names(&r0, &r0, &[("u", e0("u + mu1*mu2")?)])?;
    let f1 = AlgebraMorphism::from_names(&r1, &r1, &[("v", e1("v - nu1*nu2")?)])?;
    let g0 = AlgebraMorphism::from_names(&r0, &r0, &[("u", e0("u - mu1*mu2")?)])?;
    let g1 = AlgebraMorphism::from_names(&r1, &r1, &[("v", e1("v + nu1*nu2")?)])?;
    let invertible = f0.compose(&g0)?.is_identity()
        && g0.compose(&f0)?.is_identity()
        && f1.compose(&g1)?.is_identity()
        && g1.compose(&f1)?.is_identity();
    let phi01 = ps.chart_change(0, 1)?;
    let well_defined = f0.compose(&phi01)? == phi01.compose(&f1)?;
    let u_img = f0.image_of("u")?;
    let mono = Monomial::new(vec![0], 0b11);
    let coeff = u_img.coefficient(&mono);
    let coeff_poly = SuperPoly::constant(&r0, coeff);
    let coefficient_is_unit = coeff_poly.is_unit();
    let report = P12Report {
        chart0: describe(&f0),
        chart1: describe(&f1),
        chart0_inverse: describe(&g0),
        chart1_inverse: describe(&g1),
        invertible,
        well_defined,
        mu1mu2_coefficient: coeff_poly.to_string(),
        coefficient_is_unit,
        in_pgl_image: !coefficient_is_unit,
    };
    Ok(((f0, f1), report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::{random_even_unit, sample_rng};
    use crate::superalg::parse;

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    #[test]
    fn chart_change_formulas() {
        let ps = ProjectiveSpace::new(1, 1, FieldSpec::Rationals, 0).unwrap();
        let phi = ps.chart_change(0, 1).unwrap();
        let r0 = phi.target();
        assert_eq!(*phi.image_of("x0_1").unwrap(), parse("x1_0^-1", r0).unwrap());
        assert_eq!(
            *phi.image_of("xi1_1").unwrap(),
            parse("x1_0^-1*xi1_0", r0).unwrap()
        );
        let back = ps.chart_change(1, 0).unwrap();
        assert!(phi.compose(&back).unwrap().is_identity());
        assert!(back.compose(&phi).unwrap().is_identity());
    }

    #[test]
    fn triple_overlap_cocycle() {
        let ps = ProjectiveSpace::new(2, 1, FieldSpec::Rationals, 0).unwrap();
        let w = set(&[0, 1, 2]);
        let direct = ps.chart_change_on(0, 2, &w).unwrap();
        let via = ps
            .chart_change_on(0, 1, &w)
            .unwrap()
            .compose(&ps.chart_change_on(1, 2, &w).unwrap())
            .unwrap();
        assert_eq!(direct, via);
    }

    #[test]
    fn chart_change_errors() {
        let ps = ProjectiveSpace::new(1, 1, FieldSpec::Rationals, 0).unwrap();
        assert!(matches!(ps.chart_change(0, 0), Err(Error::IndexOutOfRange(_))));
        assert!(matches!(ps.chart_change(0, 3), Err(Error::IndexOutOfRange(_))));
    }

    #[test]
    fn normalize_examples() {
        let ps = ProjectiveSpace::new(1, 1, FieldSpec::Rationals, 2).unwrap();
        let b = ps.base().clone();
        let e = |s: &str| parse(s, &b).unwrap();
        let p = ps.point(vec![e("1"), e("5"), e("t1")]).unwrap();
        assert_eq!(normalize_point(&p, 0).unwrap(), vec![e("5"), e("t1")]);
        let q = ps.point(vec![e("2"), e("10"), e("2*t1")]).unwrap();
        assert_eq!(normalize_point(&q, 0).unwrap(), vec![e("5"), e("t1")]);
        assert_eq!(p, q);
        let r = ps.point(vec![e("t1*t2"), e("1"), e("t1")]).unwrap();
        assert_eq!(normalize_point(&r, 0).unwrap_err(), Error::ChartMiss(0));
    }

    #[test]
    fn action_examples() {
        let ps = ProjectiveSpace::new(1, 1, FieldSpec::Rationals, 2).unwrap();
        let b = ps.base().clone();
        let e = |s: &str| parse(s, &b).unwrap();
        let p = ps.point(vec![e("1"), e("5"), e("t1")]).unwrap();
        assert_eq!(act(&SuperMatrix::identity(2, 1, &b), &p).unwrap(), p);
        let two = SuperMatrix::scalar(2, 1, &e("2"));
        assert_eq!(act(&two, &p).unwrap(), p);
        let swap = SuperMatrix::new(
            2,
            1,
            &b,
            vec![
                vec![e("0"), e("1"), e("0")],
                vec![e("1"), e("0"), e("0")],
                vec![e("0"), e("0"), e("1")],
            ],
        )
        .unwrap();
        let moved = act(&swap, &p).unwrap();
        assert_eq!(moved, ps.point(vec![e("5"), e("1"), e("t1")]).unwrap());
        assert_eq!(
            normalize_point(&moved, 0).unwrap(),
            vec![e("1/5"), e("1/5*t1")]
        );
    }

    #[test]
    fn induced_map_examples() {
        let ps = ProjectiveSpace::new(1, 1, FieldSpec::Rationals, 1).unwrap();
        let b = ps.base().clone();
        let id = SuperMatrix::identity(2, 1, &b);
        assert!(ps.induced_chart_map(&id, 1).unwrap().is_identity());
        let t = SuperMatrix::diag_i64(2, 1, &b, &[3, 1, 1]).unwrap();
        let f = ps.induced_chart_map(&t, 1).unwrap();
        assert_eq!(
            *f.image_of("x0_1").unwrap(),
            parse("3*x0_1", f.target()).unwrap()
        );
        assert_eq!(
            *f.image_of("xi1_1").unwrap(),
            parse("xi1_1", f.target()).unwrap()
        );
    }

    #[test]
    fn induced_map_with_monomial_denominator() {
        let ps = ProjectiveSpace::new(1, 1, FieldSpec::Rationals, 0).unwrap();
        let b = ps.base().clone();
        let swap = SuperMatrix::new(
            2,
            1,
            &b,
            vec![
                vec![SuperPoly::zero(&b), SuperPoly::one(&b), SuperPoly::zero(&b)],
                vec![SuperPoly::one(&b), SuperPoly::zero(&b), SuperPoly::zero(&b)],
                vec![SuperPoly::zero(&b), SuperPoly::zero(&b), SuperPoly::one(&b)],
            ],
        )
        .unwrap();
        let f = ps.induced_chart_map(&swap, 0).unwrap();
        assert_eq!(
            *f.image_of("x1_0").unwrap(),
            parse("x1_0^-1", f.target()).unwrap()
        );
    }

    #[test]
    fn pgl_scalars_act_trivially() {
        let ps = ProjectiveSpace::new(2, 1, FieldSpec::Rationals, 3).unwrap();
        let b = ps.base().clone();
        for i in 0..5 {
            let mut rng = sample_rng(21, i);
            let p = random_point(2, 1, &b, &mut rng).unwrap();
            let t = crate::sampling::random_gl(3, 1, &b, &mut rng).unwrap();
            let c = random_even_unit(&b, &mut rng).unwrap();
            let ct = t.scale(&c).unwrap();
            assert_eq!(act(&ct, &p).unwrap(), act(&t, &p).unwrap());
        }
    }

    #[test]
    fn p12_report() {
        let (_, report) = p12_witness().unwrap();
        assert!(report.invertible);
        assert!(report.well_defined);
        assert_eq!(report.mu1mu2_coefficient, "1");
        assert!(report.coefficient_is_unit);
        assert!(!report.in_pgl_image);
    }
}
