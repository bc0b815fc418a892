use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::sync::Arc;

use super::poly::SuperPoly;
use super::signature::{GenRef, Parity, RingSignature};
use crate::error::{Error, Result};

/// A parity-preserving ring homomorphism given by the images of the
/// source generators (even generators first, then odd ones).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraMorphism {
    source: Arc<RingSignature>,
    target: Arc<RingSignature>,
    images: Vec<SuperPoly>,
}

impl AlgebraMorphism {
    pub fn new(
        source: &Arc<RingSignature>,
        target: &Arc<RingSignature>,
        images: Vec<SuperPoly>,
    ) -> Result<Self> {
        if source.field() != target.field() {
            return Err(Error::SignatureMismatch);
        }
        if images.len() != source.num_generators() {
            return Err(Error::DimensionMismatch(format!(
                "{} images for {} generators",
                images.len(),
                source.num_generators()
            )));
        }
        for (g, img) in source.generators().zip(&images) {
            if **img.signature() != **target {
                return Err(Error::SignatureMismatch);
            }
            let parity = match g {
                GenRef::Even(_) => Parity::Even,
                GenRef::Odd(_) => Parity::Odd,
            };
            if !img.has_parity(parity) {
                return Err(Error::ParityMisuse(format!(
                    "image of `{}` is not {:?}",
                    source.name(g),
                    parity
                )));
            }
            if let GenRef::Even(i) = g {
                if source.is_laurent(i) && !img.is_unit() {
                    return Err(Error::NotInvertible(format!(
                        "image {img} of laurent generator `{}`",
                        source.name(g)
                    )));
                }
            }
        }
        Ok(AlgebraMorphism {
            source: source.clone(),
            target: target.clone(),
            images,
        })
    }

    /// Builds a morphism from named images; generators not listed map to the
    /// target generator of the same name.
    pub fn from_names(
        source: &Arc<RingSignature>,
        target: &Arc<RingSignature>,
        named: &[(&str, SuperPoly)],
    ) -> Result<Self> {
        for (name, _) in named {
            if source.lookup(name).is_none() {
                return Err(Error::UnknownGenerator(name.to_string()));
            }
        }
        let images = source
            .generators()
            .map(|g| {
                let name = source.name(g);
                match named.iter().find(|(n, _)| *n == name) {
                    Some((_, img)) => Ok(img.clone()),
                    None => SuperPoly::gen(target, name),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(source, target, images)
    }

    pub fn identity(sig: &Arc<RingSignature>) -> Self {
        AlgebraMorphism {
            source: sig.clone(),
            target: sig.clone(),
            images: sig
                .generators()
                .map(|g| SuperPoly::generator(sig, g))
                .collect(),
        }
    }

    pub fn source(&self) -> &Arc<RingSignature> {
        &self.source
    }

    pub fn target(&self) -> &Arc<RingSignature> {
        &self.target
    }

    pub fn images(&self) -> &[SuperPoly] {
        &self.images
    }

    pub fn image_of(&self, name: &str) -> Result<&SuperPoly> {
        let g = self
            .source
            .lookup(name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
        Ok(&self.images[self.index(g)])
    }

    fn index(&self, g: GenRef) -> usize {
        match g {
            GenRef::Even(i) => i,
            GenRef::Odd(i) => self.source.num_even() + i,
        }
    }

    /// Substitutes the images into `p`; negative powers go through inversion.
    pub fn apply(&self, p: &SuperPoly) -> Result<SuperPoly> {
        if **p.signature() != *self.source {
            return Err(Error::SignatureMismatch);
        }
        let ne = self.source.num_even();
        let mut powers: HashMap<(usize, i32), SuperPoly> = HashMap::new();
        let mut acc = SuperPoly::zero(&self.target);
        for (m, c) in p.terms() {
            let mut term = SuperPoly::constant(&self.target, c.clone());
            for (i, &e) in m.even_exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = match powers.entry((i, e)) {
                    Entry::Occupied(o) => o.into_mut(),
                    Entry::Vacant(v) => v.insert(self.images[i].pow(e as i64)?),
                };
                term = term.mul(pw)?;
            }
            for j in m.odd_indices() {
                term = term.mul(&self.images[ne + j])?;
            }
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &AlgebraMorphism) -> Result<AlgebraMorphism> {
        if *other.target != *self.source {
            return Err(Error::SignatureMismatch);
        }
        let images = other
            .images
            .iter()
            .map(|img| self.apply(img))
            .collect::<Result<Vec<_>>>()?;
        AlgebraMorphism::new(&other.source, &self.target, images)
    }

    pub fn is_identity(&self) -> bool {
        *self.source == *self.target && *self == AlgebraMorphism::identity(&self.source)
    }
}

pub fn apply_morphism(f: &AlgebraMorphism, p: &SuperPoly) -> Result<SuperPoly> {
    f.apply(p)
}

pub fn compose_morphisms(f: &AlgebraMorphism, g: &AlgebraMorphism) -> Result<AlgebraMorphism> {
    f.compose(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superalg::expr::parse;
    use crate::superalg::field::FieldSpec;

    fn ring() -> Arc<RingSignature> {
        RingSignature::builder(FieldSpec::Rationals)
            .laurent("x")
            .even("y")
            .odd("t1")
            .odd("t2")
            .build()
            .unwrap()
    }

    #[test]
    fn identity_fixes_elements() {
        let s = ring();
        let p = parse("3*x^-2*t1 + y*t1*t2 - 7", &s).unwrap();
        assert_eq!(AlgebraMorphism::identity(&s).apply(&p).unwrap(), p);
    }

    #[test]
    fn construction_checks_parity_and_units() {
        let s = ring();
        let bad_parity = AlgebraMorphism::from_names(&s, &s, &[("t1", parse("y", &s).unwrap())]);
        assert!(matches!(bad_parity, Err(Error::ParityMisuse(_))));
        let not_unit = AlgebraMorphism::from_names(&s, &s, &[("x", parse("x + 1", &s).unwrap())]);
        assert!(matches!(not_unit, Err(Error::NotInvertible(_))));
    }

    #[test]
    fn swapping_odd_generators_flips_sign() {
        let s = ring();
        let f = AlgebraMorphism::from_names(
            &s,
            &s,
            &[
                ("t1", parse("t2", &s).unwrap()),
                ("t2", parse("t1", &s).unwrap()),
            ],
        )
        .unwrap();
        let p = parse("t1*t2", &s).unwrap();
        assert_eq!(f.apply(&p).unwrap(), p.neg());
        assert!(f.compose(&f).unwrap().is_identity());
    }

    #[test]
    fn compose_with_identity() {
        let s = ring();
        let f = AlgebraMorphism::from_names(
            &s,
            &s,
            &[("x", parse("2*x + t1*t2", &s).unwrap())],
        )
        .unwrap();
        let id = AlgebraMorphism::identity(&s);
        assert_eq!(id.compose(&f).unwrap(), f);
        assert_eq!(f.compose(&id).unwrap(), f);
    }

    #[test]
    fn negative_powers_use_inverse_images() {
        let s = ring();
        let f = AlgebraMorphism::from_names(
            &s,
            &s,
            &[("x", parse("x + x^2*t1*t2", &s).unwrap())],
        )
        .unwrap();
        let p = parse("x^-1", &s).unwrap();
        assert_eq!(f.apply(&p).unwrap(), parse("x^-1 - t1*t2", &s).unwrap());
    }
}
