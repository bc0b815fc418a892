//! Membership tests, factorizations and samplers for the 2|1 supergroups
//! `GL`, `C` (form preserved up to a scalar), `SC` (`C` with Ber = 1) and
//! `SpO` (form preserved exactly), all relative to [`h_form`].

use std::collections::BTreeSet;
use std::sync::Arc;

use rand::Rng;

use crate::error::{Error, Result};
use crate::sampling::{random_gl, random_odd, sample_rng, SampleRng};
use crate::superalg::{parse, Coeff, FieldSpec, GenRef, RingSignature, SuperPoly};
use crate::supermatrix::{h_form, Convention, SuperMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupTag {
    GL,
    C,
    SC,
    SpO,
    SpO0,
}

/// `B = scalar · special` with `special ∈ SC`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CFactorization {
    pub scalar: SuperPoly,
    pub special: SuperMatrix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Component {
    Identity,
    Other,
}

fn require_21(b: &SuperMatrix) -> Result<()> {
    if b.m() != 2 || b.n() != 1 {
        return Err(Error::DimensionMismatch(format!(
            "expected a 2|1 supermatrix, got {}|{}",
            b.m(),
            b.n()
        )));
    }
    if !b.is_even() {
        return Err(Error::ParityMisuse("supermatrix is not even".into()));
    }
    Ok(())
}

/// `Bˢᵗ H B` under the given supertranspose convention.
pub fn form_image(b: &SuperMatrix, conv: Convention) -> Result<SuperMatrix> {
    require_21(b)?;
    let h = h_form(b.signature());
    b.supertranspose_with(conv)?.matmul(&h)?.matmul(b)
}

pub fn is_spo(b: &SuperMatrix) -> Result<bool> {
    Ok(form_image(b, Convention::Standard)? == h_form(b.signature()))
}

/// Returns whether `Bˢᵗ H B = z H` together with `z = Ber(B)²`.
pub fn is_c(b: &SuperMatrix) -> Result<(bool, SuperPoly)> {
    require_21(b)?;
    if !b.is_invertible() {
        return Err(Error::NotInvertible(format!("{b}")));
    }
    let ber = b.berezinian()?;
    let z = ber.mul(&ber)?;
    let expected = h_form(b.signature()).scale(&z)?;
    Ok((form_image(b, Convention::Standard)? == expected, z))
}

pub fn is_sc(b: &SuperMatrix) -> Result<bool> {
    let (in_c, _) = is_c(b)?;
    Ok(in_c && b.berezinian()?.is_one())
}

pub fn is_member(tag: GroupTag, b: &SuperMatrix) -> Result<bool> {
    match tag {
        GroupTag::GL => {
            require_21(b)?;
            Ok(b.is_invertible())
        }
        GroupTag::C => Ok(is_c(b)?.0),
        GroupTag::SC => is_sc(b),
        GroupTag::SpO => is_spo(b),
        GroupTag::SpO0 => Ok(is_spo(b)? && b.berezinian()?.is_one()),
    }
}

/// Splits `B ∈ C` as `Ber(B) · (Ber(B)⁻¹ B)`; in size 2|1 the second factor
/// has Berezinian one.
pub fn factor_c(b: &SuperMatrix) -> Result<CFactorization> {
    let (in_c, _) = is_c(b)?;
    if !in_c {
        return Err(Error::MembershipError(format!("{b} is not in C")));
    }
    let scalar = b.berezinian()?;
    let special = b.scale(&scalar.invert()?)?;
    if !is_sc(&special)? {
        return Err(Error::Inconsistent(format!(
            "special factor {special} is not in SC"
        )));
    }
    Ok(CFactorization { scalar, special })
}

/// Component of `SpO` containing `B`: the identity component is `Ber = 1`.
pub fn spo_component(b: &SuperMatrix) -> Result<Component> {
    if !is_spo(b)? {
        return Err(Error::MembershipError(format!("{b} is not in SpO")));
    }
    let ber = b.berezinian()?;
    if ber.is_one() {
        Ok(Component::Identity)
    } else if ber == SuperPoly::from_i64(b.signature(), -1) {
        Ok(Component::Other)
    } else {
        Err(Error::Inconsistent(format!("SpO element with Ber = {ber}")))
    }
}

/// `diag(A, 1)` for a 2×2 block `A` of even entries.
pub fn embed_sl2(a: [[SuperPoly; 2]; 2]) -> Result<SuperMatrix> {
    let sig = a[0][0].signature().clone();
    let zero = SuperPoly::zero(&sig);
    let one = SuperPoly::one(&sig);
    let [[a00, a01], [a10, a11]] = a;
    SuperMatrix::new(
        2,
        1,
        &sig,
        vec![
            vec![a00, a01, zero.clone()],
            vec![a10, a11, zero.clone()],
            vec![zero.clone(), zero, one],
        ],
    )
}

/// Random word of length at most six in the generators
/// `[[1,±1],[0,1]]` and `[[1,0],[±1,1]]` of `SL₂`.
pub fn random_sl2_word(sig: &Arc<RingSignature>, rng: &mut SampleRng) -> Result<SuperMatrix> {
    let len = rng.gen_range(0..=6);
    let mut acc = SuperMatrix::identity(2, 1, sig);
    for _ in 0..len {
        let s = if rng.gen_bool(0.5) { 1 } else { -1 };
        let (b, c) = if rng.gen_bool(0.5) { (s, 0) } else { (0, s) };
        let g = embed_sl2([
            [SuperPoly::one(sig), SuperPoly::from_i64(sig, b)],
            [SuperPoly::from_i64(sig, c), SuperPoly::one(sig)],
        ])?;
        acc = acc.matmul(&g)?;
    }
    Ok(acc)
}

/// The odd Lie algebra element `[[0,0,x1],[0,0,x2],[x2,−x1,0]]`, which
/// satisfies `Nˢᵗ H + H N = 0` and has supertrace zero.
pub fn odd_lie_element(x1: &SuperPoly, x2: &SuperPoly) -> Result<SuperMatrix> {
    let sig = x1.signature();
    let z = SuperPoly::zero(sig);
    SuperMatrix::new(
        2,
        1,
        sig,
        vec![
            vec![z.clone(), z.clone(), x1.clone()],
            vec![z.clone(), z.clone(), x2.clone()],
            vec![x2.clone(), x1.neg(), z],
        ],
    )
}

/// `exp(N)` for a supermatrix whose entries are all nilpotent.
pub fn matrix_exp_nilpotent(n: &SuperMatrix) -> Result<SuperMatrix> {
    let field = n.signature().field();
    let mut sum = SuperMatrix::identity(n.m(), n.n(), n.signature());
    let mut term = sum.clone();
    let mut k = 1usize;
    loop {
        term = term.matmul(n)?;
        if term.is_zero() {
            return Ok(sum);
        }
        let inv_k = SuperPoly::constant(n.signature(), field.reciprocal_of(k)?);
        term = term.scale(&inv_k)?;
        sum = sum.add(&term)?;
        k += 1;
        if k > 4 * n.signature().num_odd() + 4 {
            return Err(Error::Input("matrix is not nilpotent".into()));
        }
    }
}

/// Draws an element of `SC` as `diag(A,1)·exp(N)` from an explicit stream.
pub fn sample_sc_with(sig: &Arc<RingSignature>, rng: &mut SampleRng) -> Result<SuperMatrix> {
    let word = random_sl2_word(sig, rng)?;
    let x1 = random_odd(sig, rng)?;
    let x2 = random_odd(sig, rng)?;
    let out = word.matmul(&matrix_exp_nilpotent(&odd_lie_element(&x1, &x2)?)?)?;
    if !is_sc(&out)? {
        return Err(Error::Inconsistent(format!("sampled {out} is not in SC")));
    }
    Ok(out)
}

/// Seeded element of `SC_{2|1}(Λ_q(ℚ))`.
pub fn sample_sc(q: usize, seed: u64) -> Result<SuperMatrix> {
    if q < 2 {
        return Err(Error::Input("sample_sc needs at least two odd generators".into()));
    }
    let sig = RingSignature::grassmann(FieldSpec::Rationals, q)?;
    sample_sc_with(&sig, &mut sample_rng(seed, 0))
}

/// Seeded element of `GL_{2|1}(Λ_q(ℚ))`.
pub fn sample_gl(q: usize, seed: u64) -> Result<SuperMatrix> {
    let sig = RingSignature::grassmann(FieldSpec::Rationals, q)?;
    random_gl(2, 1, &sig, &mut sample_rng(seed, 0))
}

/// Ring of the generic 2|1 matrix: even `a, b, c, d` and laurent `e`, odd
/// `alpha, beta, gamma, delta`.
pub fn generic_signature() -> Result<Arc<RingSignature>> {
    RingSignature::builder(FieldSpec::Rationals)
        .even("a")
        .even("b")
        .even("c")
        .even("d")
        .laurent("e")
        .odd("alpha")
        .odd("beta")
        .odd("gamma")
        .odd("delta")
        .build()
}

/// `[[a, b, alpha], [c, d, beta], [gamma, delta, e]]`.
pub fn generic_matrix(sig: &Arc<RingSignature>) -> Result<SuperMatrix> {
    let g = |s: &str| SuperPoly::gen(sig, s);
    SuperMatrix::new(
        2,
        1,
        sig,
        vec![
            vec![g("a")?, g("b")?, g("alpha")?],
            vec![g("c")?, g("d")?, g("beta")?],
            vec![g("gamma")?, g("delta")?, g("e")?],
        ],
    )
}

/// Multiplies by the power of `e` that makes the lowest `e`-exponent zero,
/// then scales so the leading coefficient is one.
fn clear_and_normalize(p: &SuperPoly) -> Result<SuperPoly> {
    let sig = p.signature();
    let Some(GenRef::Even(ie)) = sig.lookup("e") else {
        return Err(Error::UnknownGenerator("e".into()));
    };
    let Some(min) = p.terms().map(|(m, _)| m.even_exponents()[ie]).min() else {
        return Ok(p.clone());
    };
    let cleared = SuperPoly::gen(sig, "e")?.pow(-(min as i64))?.mul(p)?;
    let lead = cleared
        .terms()
        .next_back()
        .map(|(_, c)| c.clone())
        .unwrap_or_else(|| Coeff::from_integer(1.into()));
    let inv = sig
        .field()
        .inv(&lead)
        .ok_or_else(|| Error::Inconsistent("zero leading coefficient".into()))?;
    Ok(cleared.scale(&inv))
}

/// The defining equations of `C_{2|1}` as stated in the literature,
/// `LHS − RHS` with `Ber(B)²` expanded, cleared and normalized.
pub fn reference_c_equations(sig: &Arc<RingSignature>) -> Result<Vec<SuperPoly>> {
    let ber = generic_matrix(sig)?.berezinian()?;
    let z = ber.mul(&ber)?;
    let lhs = [
        "e^2 + 2*alpha*beta",
        "a*d - b*c - gamma*delta",
        "a*beta - c*alpha - e*gamma",
        "b*beta - d*alpha - e*delta",
    ];
    let rhs = [z.clone(), z, SuperPoly::zero(sig), SuperPoly::zero(sig)];
    lhs.iter()
        .zip(&rhs)
        .map(|(l, r)| clear_and_normalize(&parse(l, sig)?.sub(r)?))
        .collect()
}

/// Expands `Bˢᵗ H B − Ber(B)² H` for the generic matrix, clears the
/// `e`-denominators entrywise and returns the distinct nonzero entries.
/// Fails with [`Error::ConventionMismatch`] unless they coincide with
/// [`reference_c_equations`].
pub fn expand_c_equations(conv: Convention) -> Result<Vec<SuperPoly>> {
    let sig = generic_signature()?;
    let b = generic_matrix(&sig)?;
    let ber = b.berezinian()?;
    let z = ber.mul(&ber)?;
    let diff = form_image(&b, conv)?.sub(&h_form(&sig).scale(&z)?)?;
    let mut found: Vec<SuperPoly> = Vec::new();
    for entry in diff.entries() {
        if entry.is_zero() {
            continue;
        }
        let p = clear_and_normalize(entry)?;
        if !found.contains(&p) {
            found.push(p);
        }
    }
    let reference = reference_c_equations(&sig)?;
    let as_set = |v: &[SuperPoly]| v.iter().map(|p| p.to_string()).collect::<BTreeSet<_>>();
    if as_set(&found) != as_set(&reference) {
        return Err(Error::ConventionMismatch);
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superalg::AlgebraMorphism;

    fn lam(q: usize) -> Arc<RingSignature> {
        RingSignature::grassmann(FieldSpec::Rationals, q).unwrap()
    }

    fn diag(s: &Arc<RingSignature>, d: &[i64]) -> SuperMatrix {
        SuperMatrix::diag_i64(2, 1, s, d).unwrap()
    }

    fn shear(s: &Arc<RingSignature>) -> SuperMatrix {
        let mut x = SuperMatrix::identity(2, 1, s);
        x.set(0, 1, SuperPoly::one(s)).unwrap();
        x
    }

    #[test]
    fn spo_examples() {
        let s = lam(2);
        assert!(is_spo(&SuperMatrix::identity(2, 1, &s)).unwrap());
        assert!(is_spo(&shear(&s)).unwrap());
        assert!(!is_spo(&diag(&s, &[1, 2, 1])).unwrap());
    }

    #[test]
    fn c_examples() {
        let s = RingSignature::builder(FieldSpec::Rationals)
            .laurent("a")
            .odd("t1")
            .build()
            .unwrap();
        let a = SuperPoly::gen(&s, "a").unwrap();
        let (ok, z) = is_c(&SuperMatrix::scalar(2, 1, &a)).unwrap();
        assert!(ok);
        assert_eq!(z, a.mul(&a).unwrap());
        let (ok, z) = is_c(&shear(&s)).unwrap();
        assert!(ok && z.is_one());
        let (ok, z) = is_c(&diag(&s, &[1, 2, 1])).unwrap();
        assert!(!ok);
        assert_eq!(z, SuperPoly::from_i64(&s, 4));
    }

    #[test]
    fn sc_examples() {
        let s = lam(2);
        assert!(is_sc(&SuperMatrix::identity(2, 1, &s)).unwrap());
        assert!(is_sc(&diag(&s, &[-1, -1, 1])).unwrap());
        assert!(is_spo(&diag(&s, &[1, 1, -1])).unwrap());
        assert!(!is_sc(&diag(&s, &[1, 1, -1])).unwrap());
    }

    #[test]
    fn factor_examples() {
        let s = lam(2);
        let f = factor_c(&diag(&s, &[3, 3, 3])).unwrap();
        assert_eq!(f.scalar, SuperPoly::from_i64(&s, 3));
        assert!(f.special.is_identity());
        let f = factor_c(&diag(&s, &[1, 1, -1])).unwrap();
        assert_eq!(f.scalar, SuperPoly::from_i64(&s, -1));
        assert_eq!(f.special, diag(&s, &[-1, -1, 1]));
        let g = sample_sc(3, 5).unwrap();
        let f = factor_c(&g).unwrap();
        assert!(f.scalar.is_one());
        assert!(matches!(
            factor_c(&diag(&s, &[1, 2, 1])),
            Err(Error::MembershipError(_))
        ));
    }

    #[test]
    fn component_examples() {
        let s = lam(2);
        let id = SuperMatrix::identity(2, 1, &s);
        assert_eq!(spo_component(&id).unwrap(), Component::Identity);
        assert_eq!(spo_component(&id.neg()).unwrap(), Component::Other);
        assert_eq!(
            spo_component(&diag(&s, &[-1, -1, 1])).unwrap(),
            Component::Identity
        );
    }

    #[test]
    fn sampler_outputs() {
        let s = lam(3);
        let mut rng = sample_rng(11, 0);
        let w = random_sl2_word(&s, &mut rng).unwrap();
        assert!(is_sc(&w).unwrap());
        let zero = SuperPoly::zero(&s);
        let n = odd_lie_element(&zero, &zero).unwrap();
        assert!(matrix_exp_nilpotent(&n).unwrap().is_identity());
        for seed in 0..10 {
            assert!(is_sc(&sample_sc(3, seed).unwrap()).unwrap());
        }
    }

    #[test]
    fn odd_lie_element_is_infinitesimally_symplectic() {
        let s = lam(2);
        let x1 = SuperPoly::gen(&s, "t1").unwrap();
        let x2 = SuperPoly::gen(&s, "t2").unwrap();
        let n = odd_lie_element(&x1, &x2).unwrap();
        let h = h_form(&s);
        let lhs = n
            .supertranspose()
            .unwrap()
            .matmul(&h)
            .unwrap()
            .add(&h.matmul(&n).unwrap())
            .unwrap();
        assert!(lhs.is_zero());
        assert!(n.supertrace().unwrap().is_zero());
    }

    #[test]
    fn c_equations_fix_the_convention() {
        let eqs = expand_c_equations(Convention::Standard).unwrap();
        assert_eq!(eqs.len(), 4);
        assert_eq!(
            expand_c_equations(Convention::Flipped).unwrap_err(),
            Error::ConventionMismatch
        );
    }

    #[test]
    fn c_equations_vanish_exactly_on_c() {
        let g = generic_signature().unwrap();
        let eqs = expand_c_equations(Convention::Standard).unwrap();
        let target = lam(1);
        let at = |vals: [i64; 5]| {
            let names = ["a", "b", "c", "d", "e"];
            let images: Vec<(&str, SuperPoly)> = names
                .iter()
                .zip(vals)
                .map(|(n, v)| (*n, SuperPoly::from_i64(&target, v)))
                .chain(
                    ["alpha", "beta", "gamma", "delta"]
                        .iter()
                        .map(|n| (*n, SuperPoly::zero(&target))),
                )
                .collect();
            AlgebraMorphism::from_names(&g, &target, &images).unwrap()
        };
        let spo = at([2, 1, 1, 1, 1]);
        assert!(eqs.iter().all(|p| spo.apply(p).unwrap().is_zero()));
        let bad = at([1, 0, 0, 2, 1]);
        assert!(eqs.iter().any(|p| !bad.apply(p).unwrap().is_zero()));
    }
}
