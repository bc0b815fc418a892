use std::sync::Arc;

use super::field::Coeff;
use super::poly::{Monomial, SuperPoly};
use super::signature::{GenRef, Parity, RingSignature};
use crate::error::{Error, Result};

/// A homogeneous superderivation, determined by the images of the
/// generators; the graded Leibniz rule extends it to the whole ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    sig: Arc<RingSignature>,
    parity: Parity,
    images: Vec<SuperPoly>,
}

impl Derivation {
    pub fn new(sig: &Arc<RingSignature>, parity: Parity, images: Vec<SuperPoly>) -> Result<Self> {
        if images.len() != sig.num_generators() {
            return Err(Error::DimensionMismatch(format!(
                "{} images for {} generators",
                images.len(),
                sig.num_generators()
            )));
        }
        for (g, img) in sig.generators().zip(&images) {
            if **img.signature() != **sig {
                return Err(Error::SignatureMismatch);
            }
            let gp = match g {
                GenRef::Even(_) => Parity::Even,
                GenRef::Odd(_) => Parity::Odd,
            };
            if !img.has_parity(gp.add(parity)) {
                return Err(Error::ParityMisuse(format!(
                    "D({}) = {img} has the wrong parity",
                    sig.name(g)
                )));
            }
        }
        Ok(Derivation {
            sig: sig.clone(),
            parity,
            images,
        })
    }

    /// Derivation with the listed generator images; all others map to zero.
    pub fn from_names(
        sig: &Arc<RingSignature>,
        parity: Parity,
        named: &[(&str, SuperPoly)],
    ) -> Result<Self> {
        for (name, _) in named {
            if sig.lookup(name).is_none() {
                return Err(Error::UnknownGenerator(name.to_string()));
            }
        }
        let images = sig
            .generators()
            .map(|g| {
                named
                    .iter()
                    .find(|(n, _)| *n == sig.name(g))
                    .map(|(_, p)| p.clone())
                    .unwrap_or_else(|| SuperPoly::zero(sig))
            })
            .collect();
        Self::new(sig, parity, images)
    }

    pub fn zero(sig: &Arc<RingSignature>, parity: Parity) -> Self {
        Derivation {
            sig: sig.clone(),
            parity,
            images: vec![SuperPoly::zero(sig); sig.num_generators()],
        }
    }

    pub fn signature(&self) -> &Arc<RingSignature> {
        &self.sig
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn images(&self) -> &[SuperPoly] {
        &self.images
    }

    pub fn image_of(&self, name: &str) -> Result<&SuperPoly> {
        match self.sig.lookup(name) {
            Some(GenRef::Even(i)) => Ok(&self.images[i]),
            Some(GenRef::Odd(i)) => Ok(&self.images[self.sig.num_even() + i]),
            None => Err(Error::UnknownGenerator(name.to_string())),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(SuperPoly::is_zero)
    }

    /// Applies the derivation:
    /// `D(x^E θ_{i1}..θ_{ik}) = D(x^E) θ.. + x^E Σ_r (±) θ_{i1}..D(θ_{ir})..θ_{ik}`
    /// with sign `(-1)^{|D|(r-1)}`.
    pub fn apply(&self, p: &SuperPoly) -> Result<SuperPoly> {
        if **p.signature() != *self.sig {
            return Err(Error::SignatureMismatch);
        }
        let sig = &self.sig;
        let ne = sig.num_even();
        let odd_sign = self.parity.is_odd();
        let mut acc = SuperPoly::zero(sig);
        for (m, c) in p.terms() {
            let odd_word: Vec<usize> = m.odd_indices().collect();
            let even_mono = |exps: Vec<i32>| {
                SuperPoly::from_terms(sig, [(Monomial::new(exps, 0), c.clone())])
            };
            let theta = |mask: u64| -> Result<SuperPoly> {
                SuperPoly::from_terms(
                    sig,
                    [(Monomial::new(vec![0; ne], mask), Coeff::from_integer(1.into()))],
                )
            };
            let full_odd = theta(m.odd_mask())?;
            for (i, &e) in m.even_exponents().iter().enumerate() {
                if e == 0 || self.images[i].is_zero() {
                    continue;
                }
                let mut exps = m.even_exponents().to_vec();
                exps[i] -= 1;
                let head = even_mono(exps)?.scale(&Coeff::from_integer(e.into()));
                acc = acc.add(&head.mul(&self.images[i])?.mul(&full_odd)?)?;
            }
            let even_part = even_mono(m.even_exponents().to_vec())?;
            for (r, &j) in odd_word.iter().enumerate() {
                let img = &self.images[ne + j];
                if img.is_zero() {
                    continue;
                }
                let before: u64 = odd_word[..r].iter().map(|&k| 1u64 << k).sum();
                let after: u64 = odd_word[r + 1..].iter().map(|&k| 1u64 << k).sum();
                let mut piece = even_part
                    .mul(&theta(before)?)?
                    .mul(img)?
                    .mul(&theta(after)?)?;
                if odd_sign && r % 2 == 1 {
                    piece = piece.neg();
                }
                acc = acc.add(&piece)?;
            }
        }
        Ok(acc)
    }

    /// Supercommutator `[D1, D2] = D1 D2 - (-1)^{|D1||D2|} D2 D1`.
    pub fn bracket(&self, other: &Derivation) -> Result<Derivation> {
        if *self.sig != *other.sig {
            return Err(Error::SignatureMismatch);
        }
        let both_odd = self.parity.is_odd() && other.parity.is_odd();
        let images = self
            .images
            .iter()
            .zip(&other.images)
            .map(|(d1g, d2g)| {
                let a = self.apply(d2g)?;
                let b = other.apply(d1g)?;
                if both_odd {
                    a.add(&b)
                } else {
                    a.sub(&b)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Derivation::new(&self.sig, self.parity.add(other.parity), images)
    }

    pub fn add(&self, other: &Derivation) -> Result<Derivation> {
        if *self.sig != *other.sig || self.parity != other.parity {
            return Err(Error::SignatureMismatch);
        }
        let images = self
            .images
            .iter()
            .zip(&other.images)
            .map(|(a, b)| a.add(b))
            .collect::<Result<Vec<_>>>()?;
        Derivation::new(&self.sig, self.parity, images)
    }

    /// Left multiplication by a ring element `f`, giving `f·D`.
    pub fn scale(&self, f: &SuperPoly) -> Result<Derivation> {
        let fp = f
            .parity()
            .ok_or_else(|| Error::ParityMisuse(format!("{f} is not homogeneous")))?;
        let images = self
            .images
            .iter()
            .map(|img| f.mul(img))
            .collect::<Result<Vec<_>>>()?;
        Derivation::new(&self.sig, self.parity.add(fp), images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superalg::expr::parse;
    use crate::superalg::field::FieldSpec;

    fn ring() -> Arc<RingSignature> {
        RingSignature::builder(FieldSpec::Rationals)
            .laurent("w")
            .odd("eta")
            .odd("t1")
            .build()
            .unwrap()
    }

    #[test]
    fn odd_derivation_leibniz_sign() {
        let s = ring();
        // D = d/d eta, odd
        let d = Derivation::from_names(&s, Parity::Odd, &[("eta", SuperPoly::one(&s))]).unwrap();
        // D(t1 * eta) = -t1 * D(eta) = -t1
        let p = parse("t1*eta", &s).unwrap();
        assert_eq!(d.apply(&p).unwrap(), parse("-t1", &s).unwrap());
        // D(eta * t1) = t1
        assert_eq!(d.apply(&p.neg()).unwrap(), parse("t1", &s).unwrap());
    }

    #[test]
    fn laurent_power_rule() {
        let s = ring();
        let d = Derivation::from_names(&s, Parity::Even, &[("w", SuperPoly::one(&s))]).unwrap();
        let p = parse("w^-2 + 3*w^2*eta", &s).unwrap();
        assert_eq!(
            d.apply(&p).unwrap(),
            parse("-2*w^-3 + 6*w*eta", &s).unwrap()
        );
    }

    #[test]
    fn bracket_of_odd_field_with_itself() {
        let s = ring();
        let z = Derivation::from_names(
            &s,
            Parity::Odd,
            &[("eta", SuperPoly::one(&s)), ("w", parse("eta", &s).unwrap())],
        )
        .unwrap();
        let dw = Derivation::from_names(&s, Parity::Even, &[("w", SuperPoly::one(&s))]).unwrap();
        let two_dw = dw.scale(&SuperPoly::from_i64(&s, 2)).unwrap();
        assert_eq!(z.bracket(&z).unwrap(), two_dw);
        assert!(dw.bracket(&dw).unwrap().is_zero());
    }
}
