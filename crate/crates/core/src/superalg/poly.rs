use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use super::field::{Coeff, FieldSpec};
use super::signature::{GenRef, Parity, RingSignature};
use crate::error::{Error, Result};

/// A monomial `x^e * theta_{i1} ... theta_{ik}` with the odd word kept
/// strictly increasing (bit `i` set means `odd[i]` is a factor).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    even: Vec<i32>,
    odd: u64,
}

impl Monomial {
    pub fn one(num_even: usize) -> Self {
        Monomial {
            even: vec![0; num_even],
            odd: 0,
        }
    }

    pub fn new(even: Vec<i32>, odd: u64) -> Self {
        Monomial { even, odd }
    }

    pub fn even_exponents(&self) -> &[i32] {
        &self.even
    }

    pub fn odd_mask(&self) -> u64 {
        self.odd
    }

    pub fn odd_degree(&self) -> u32 {
        self.odd.count_ones()
    }

    pub fn parity(&self) -> Parity {
        Parity::from_bit(self.odd.count_ones() % 2 == 1)
    }

    pub fn is_constant(&self) -> bool {
        self.odd == 0 && self.even.iter().all(|&e| e == 0)
    }

    pub fn odd_indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..64).filter(move |i| self.odd & (1u64 << i) != 0)
    }

    /// Product of two monomials: `None` when an odd factor repeats,
    /// otherwise the product and whether the reordering sign is negative.
    pub fn mul(&self, other: &Monomial) -> Option<(Monomial, bool)> {
        if self.odd & other.odd != 0 {
            return None;
        }
        let even = self
            .even
            .iter()
            .zip(&other.even)
            .map(|(a, b)| a + b)
            .collect();
        Some((
            Monomial {
                even,
                odd: self.odd | other.odd,
            },
            reorder_is_negative(self.odd, other.odd),
        ))
    }
}

/// Whether merging the sorted odd words `a` then `b` into one sorted word
/// takes an odd number of transpositions.
pub(crate) fn reorder_is_negative(a: u64, b: u64) -> bool {
    let mut swaps = 0u32;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        rest &= rest - 1;
        let above = if j >= 63 { 0 } else { a >> (j + 1) };
        swaps += above.count_ones();
    }
    swaps % 2 == 1
}

/// One term of an unnormalized element, with generators given by name.
#[derive(Clone, Debug)]
pub struct RawTerm {
    pub even: Vec<(String, i32)>,
    pub odd: Vec<String>,
    pub coeff: Coeff,
}

/// An exact element of a finitely generated supercommutative ring, kept in
/// canonical form: no zero coefficients, odd words sorted, like terms merged.
#[derive(Clone, Debug)]
pub struct SuperPoly {
    sig: Arc<RingSignature>,
    terms: BTreeMap<Monomial, Coeff>,
}

impl PartialEq for SuperPoly {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.sig, &other.sig) || *self.sig == *other.sig)
            && self.terms == other.terms
    }
}

impl Eq for SuperPoly {}

impl SuperPoly {
    pub fn zero(sig: &Arc<RingSignature>) -> Self {
        SuperPoly {
            sig: sig.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(sig: &Arc<RingSignature>) -> Self {
        Self::constant(sig, Coeff::one())
    }

    pub fn constant(sig: &Arc<RingSignature>, c: Coeff) -> Self {
        let c = sig.field().reduce(c);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(sig.num_even()), c);
        }
        SuperPoly {
            sig: sig.clone(),
            terms,
        }
    }

    pub fn from_i64(sig: &Arc<RingSignature>, v: i64) -> Self {
        Self::constant(sig, Coeff::from_integer(v.into()))
    }

    pub fn generator(sig: &Arc<RingSignature>, g: GenRef) -> Self {
        let mut m = Monomial::one(sig.num_even());
        match g {
            GenRef::Even(i) => m.even[i] = 1,
            GenRef::Odd(i) => m.odd = 1u64 << i,
        }
        let mut terms = BTreeMap::new();
        terms.insert(m, Coeff::one());
        SuperPoly {
            sig: sig.clone(),
            terms,
        }
    }

    pub fn gen(sig: &Arc<RingSignature>, name: &str) -> Result<Self> {
        let g = sig
            .lookup(name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
        Ok(Self::generator(sig, g))
    }

    /// Builds the canonical form of a sum of named terms.
    pub fn normalize(sig: &Arc<RingSignature>, raw: &[RawTerm]) -> Result<Self> {
        let mut out = Vec::with_capacity(raw.len());
        for t in raw {
            let mut m = Monomial::one(sig.num_even());
            for (name, e) in &t.even {
                match sig.lookup(name) {
                    Some(GenRef::Even(i)) => {
                        if *e < 0 && !sig.is_laurent(i) {
                            return Err(Error::NegativeExponent(name.clone()));
                        }
                        m.even[i] += e;
                    }
                    Some(GenRef::Odd(_)) => {
                        return Err(Error::ParityMisuse(format!(
                            "`{name}` is odd but listed among even factors"
                        )))
                    }
                    None => return Err(Error::UnknownGenerator(name.clone())),
                }
            }
            let mut word = Vec::with_capacity(t.odd.len());
            for name in &t.odd {
                match sig.lookup(name) {
                    Some(GenRef::Odd(i)) => word.push(i),
                    Some(GenRef::Even(_)) => {
                        return Err(Error::ParityMisuse(format!(
                            "`{name}` is even but listed in the odd word"
                        )))
                    }
                    None => return Err(Error::UnknownGenerator(name.clone())),
                }
            }
            let Some((mask, negative)) = sort_odd_word(&word) else {
                continue;
            };
            m.odd = mask;
            let c = sig.field().try_reduce(t.coeff.clone())?;
            out.push((m, if negative { -c } else { c }));
        }
        Self::from_terms(sig, out)
    }

    /// Canonical form from index-based terms (odd words already encoded as
    /// bitmasks). Exponents are validated against the laurent flags.
    pub fn from_terms(
        sig: &Arc<RingSignature>,
        terms: impl IntoIterator<Item = (Monomial, Coeff)>,
    ) -> Result<Self> {
        let mut acc: BTreeMap<Monomial, Coeff> = BTreeMap::new();
        for (m, c) in terms {
            if m.even.len() != sig.num_even() {
                return Err(Error::SignatureMismatch);
            }
            if sig.num_odd() < 64 && m.odd >> sig.num_odd() != 0 {
                return Err(Error::SignatureMismatch);
            }
            for (i, &e) in m.even.iter().enumerate() {
                if e < 0 && !sig.is_laurent(i) {
                    return Err(Error::NegativeExponent(
                        sig.even_generators()[i].name.clone(),
                    ));
                }
            }
            *acc.entry(m).or_insert_with(Coeff::zero) += c;
        }
        Self::finish(sig, acc)
    }

    fn finish(sig: &Arc<RingSignature>, acc: BTreeMap<Monomial, Coeff>) -> Result<Self> {
        let field = sig.field();
        let terms: BTreeMap<Monomial, Coeff> = acc
            .into_iter()
            .filter_map(|(m, c)| {
                let c = match field {
                    FieldSpec::Rationals => c,
                    FieldSpec::Prime(_) => field.reduce(c),
                };
                (!c.is_zero()).then_some((m, c))
            })
            .collect();
        if terms.len() > sig.max_terms() {
            return Err(Error::TooLarge {
                terms: terms.len(),
                limit: sig.max_terms(),
            });
        }
        Ok(SuperPoly {
            sig: sig.clone(),
            terms,
        })
    }

    pub fn signature(&self) -> &Arc<RingSignature> {
        &self.sig
    }

    pub fn field(&self) -> FieldSpec {
        self.sig.field()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Coeff)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(m, c)| m.is_constant() && c.is_one())
    }

    pub fn coefficient(&self, m: &Monomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn constant_term(&self) -> Coeff {
        self.coefficient(&Monomial::one(self.sig.num_even()))
    }

    /// `Some(parity)` for homogeneous elements (zero counts as even).
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys().map(Monomial::parity);
        match it.next() {
            None => Some(Parity::Even),
            Some(p) => it.all(|q| q == p).then_some(p),
        }
    }

    /// True when every term has parity `p`; zero has every parity.
    pub fn has_parity(&self, p: Parity) -> bool {
        self.terms.keys().all(|m| m.parity() == p)
    }

    pub fn is_even(&self) -> bool {
        self.has_parity(Parity::Even)
    }

    pub fn is_odd(&self) -> bool {
        self.has_parity(Parity::Odd)
    }

    pub fn filter_terms(&self, keep: impl Fn(&Monomial) -> bool) -> SuperPoly {
        SuperPoly {
            sig: self.sig.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn parity_part(&self, p: Parity) -> SuperPoly {
        self.filter_terms(|m| m.parity() == p)
    }

    /// The grading automorphism: negates the odd part.
    pub fn grade_involution(&self) -> SuperPoly {
        let field = self.field();
        SuperPoly {
            sig: self.sig.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let c = if m.parity().is_odd() {
                        field.neg(c)
                    } else {
                        c.clone()
                    };
                    (m.clone(), c)
                })
                .collect(),
        }
    }

    /// Image under killing every odd generator.
    pub fn body(&self) -> SuperPoly {
        self.filter_terms(|m| m.odd == 0)
    }

    pub fn soul(&self) -> SuperPoly {
        self.filter_terms(|m| m.odd != 0)
    }

    fn same_ring(&self, other: &SuperPoly) -> Result<()> {
        if Arc::ptr_eq(&self.sig, &other.sig) || *self.sig == *other.sig {
            Ok(())
        } else {
            Err(Error::SignatureMismatch)
        }
    }

    pub fn add(&self, other: &SuperPoly) -> Result<SuperPoly> {
        self.same_ring(other)?;
        let mut acc = self.terms.clone();
        for (m, c) in &other.terms {
            *acc.entry(m.clone()).or_insert_with(Coeff::zero) += c;
        }
        Self::finish(&self.sig, acc)
    }

    pub fn sub(&self, other: &SuperPoly) -> Result<SuperPoly> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> SuperPoly {
        let field = self.field();
        SuperPoly {
            sig: self.sig.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), field.neg(c)))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> SuperPoly {
        let field = self.field();
        let c = field.reduce(c.clone());
        if c.is_zero() {
            return SuperPoly::zero(&self.sig);
        }
        SuperPoly {
            sig: self.sig.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, d)| (m.clone(), field.mul(d, &c)))
                .collect(),
        }
    }

    /// Supercommutative product.
    pub fn mul(&self, other: &SuperPoly) -> Result<SuperPoly> {
        self.same_ring(other)?;
        let mut acc: BTreeMap<Monomial, Coeff> = BTreeMap::new();
        let soft_cap = self.sig.max_terms().saturating_mul(4);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let Some((m, negative)) = ma.mul(mb) else {
                    continue;
                };
                let prod = ca * cb;
                let slot = acc.entry(m).or_insert_with(Coeff::zero);
                if negative {
                    *slot -= prod;
                } else {
                    *slot += prod;
                }
            }
            if acc.len() > soft_cap {
                return Err(Error::TooLarge {
                    terms: acc.len(),
                    limit: self.sig.max_terms(),
                });
            }
        }
        Self::finish(&self.sig, acc)
    }

    /// Whether the body is a nonzero scalar times a monomial in laurent
    /// generators, i.e. a unit of the even Laurent subring.
    pub fn is_unit(&self) -> bool {
        self.unit_body().is_some()
    }

    fn unit_body(&self) -> Option<(Monomial, Coeff)> {
        let mut bodies = self.terms.iter().filter(|(m, _)| m.odd == 0);
        let (m, c) = bodies.next()?;
        if bodies.next().is_some() {
            return None;
        }
        let laurent_only = m
            .even
            .iter()
            .enumerate()
            .all(|(i, &e)| e == 0 || self.sig.is_laurent(i));
        laurent_only.then(|| (m.clone(), c.clone()))
    }

    /// Two-sided inverse via a terminating Neumann series around the body.
    pub fn invert(&self) -> Result<SuperPoly> {
        let (m, c) = self
            .unit_body()
            .ok_or_else(|| Error::NotInvertible(format!("body of {self} is not a unit")))?;
        let field = self.field();
        let cinv = field
            .inv(&c)
            .ok_or_else(|| Error::NotInvertible("zero body".into()))?;
        let inv_mono = Monomial {
            even: m.even.iter().map(|e| -e).collect(),
            odd: 0,
        };
        let body_inv = SuperPoly::from_terms(&self.sig, [(inv_mono, cinv)])?;
        // nu = body^{-1} (p - body) is nilpotent: every term carries an odd factor
        let nu = body_inv.mul(&self.soul())?;
        let minus_nu = nu.neg();
        let mut sum = SuperPoly::one(&self.sig);
        let mut power = SuperPoly::one(&self.sig);
        loop {
            power = power.mul(&minus_nu)?;
            if power.is_zero() {
                break;
            }
            sum = sum.add(&power)?;
        }
        body_inv.mul(&sum)
    }

    /// Integer power; negative exponents go through [`SuperPoly::invert`].
    pub fn pow(&self, k: i64) -> Result<SuperPoly> {
        let base = if k < 0 { self.invert()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = SuperPoly::one(&self.sig);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq)?;
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq)?;
            }
        }
        Ok(acc)
    }

    /// Re-expresses this element over `target`, matching generators by name.
    pub fn embed(&self, target: &Arc<RingSignature>) -> Result<SuperPoly> {
        if Arc::ptr_eq(&self.sig, target) || *self.sig == **target {
            return Ok(SuperPoly {
                sig: target.clone(),
                terms: self.terms.clone(),
            });
        }
        if self.sig.field() != target.field() {
            return Err(Error::SignatureMismatch);
        }
        let even_map = self
            .sig
            .even_generators()
            .iter()
            .map(|g| match target.lookup(&g.name) {
                Some(GenRef::Even(i)) => Ok(i),
                _ => Err(Error::UnknownGenerator(g.name.clone())),
            })
            .collect::<Result<Vec<_>>>()?;
        let odd_map = self
            .sig
            .odd_generators()
            .iter()
            .map(|g| match target.lookup(g) {
                Some(GenRef::Odd(i)) => Ok(i),
                _ => Err(Error::UnknownGenerator(g.clone())),
            })
            .collect::<Result<Vec<_>>>()?;
        let mut out = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut even = vec![0; target.num_even()];
            for (i, &e) in m.even.iter().enumerate() {
                if e != 0 {
                    even[even_map[i]] = e;
                }
            }
            let word: Vec<usize> = m.odd_indices().map(|i| odd_map[i]).collect();
            let (mask, negative) = sort_odd_word(&word).expect("distinct odd generators");
            let c = if negative { -c.clone() } else { c.clone() };
            out.push((Monomial { even, odd: mask }, c));
        }
        SuperPoly::from_terms(target, out)
    }
}

/// Sorts an odd word; `None` if a generator repeats, else the bitmask and
/// whether the permutation is odd.
pub(crate) fn sort_odd_word(word: &[usize]) -> Option<(u64, bool)> {
    let mut mask = 0u64;
    let mut inversions = 0usize;
    for (k, &i) in word.iter().enumerate() {
        if mask & (1u64 << i) != 0 {
            return None;
        }
        mask |= 1u64 << i;
        inversions += word[..k].iter().filter(|&&j| j > i).count();
    }
    Some((mask, inversions % 2 == 1))
}

impl fmt::Display for SuperPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::expr::format(self))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<&SuperPoly> for &SuperPoly {
            type Output = SuperPoly;
            fn $method(self, rhs: &SuperPoly) -> SuperPoly {
                SuperPoly::$method(self, rhs).unwrap_or_else(|e| panic!("{}", e))
            }
        }
    };
}

// Reference-only operator forms; they panic on signature mismatch or term
// overflow, library code uses the fallible methods.
forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for &SuperPoly {
    type Output = SuperPoly;
    fn neg(self) -> SuperPoly {
        SuperPoly::neg(self)
    }
}

impl Neg for SuperPoly {
    type Output = SuperPoly;
    fn neg(self) -> SuperPoly {
        SuperPoly::neg(&self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superalg::field::FieldSpec;

    fn ring() -> Arc<RingSignature> {
        RingSignature::builder(FieldSpec::Rationals)
            .laurent("x")
            .even("y")
            .odd("t1")
            .odd("t2")
            .odd("t3")
            .build()
            .unwrap()
    }

    fn raw(even: &[(&str, i32)], odd: &[&str], c: i64) -> RawTerm {
        RawTerm {
            even: even.iter().map(|(n, e)| (n.to_string(), *e)).collect(),
            odd: odd.iter().map(|s| s.to_string()).collect(),
            coeff: Coeff::from_integer(c.into()),
        }
    }

    #[test]
    fn normalize_anticommutes() {
        let s = ring();
        let p = SuperPoly::normalize(&s, &[raw(&[], &["t2", "t1"], 1)]).unwrap();
        let q = SuperPoly::normalize(&s, &[raw(&[], &["t1", "t2"], -1)]).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn normalize_drops_odd_squares() {
        let s = ring();
        let p = SuperPoly::normalize(&s, &[raw(&[], &["t1", "t1"], 1)]).unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn normalize_merges_central_even() {
        let s = ring();
        let p = SuperPoly::normalize(
            &s,
            &[raw(&[("x", 1)], &["t1"], 1), raw(&[("x", 1)], &["t1"], 1)],
        )
        .unwrap();
        let x = SuperPoly::gen(&s, "x").unwrap();
        let t1 = SuperPoly::gen(&s, "t1").unwrap();
        assert_eq!(p, (&x * &t1).scale(&Coeff::from_integer(2.into())));
        assert_eq!(&x * &t1, &t1 * &x);
    }

    #[test]
    fn normalize_errors() {
        let s = ring();
        assert_eq!(
            SuperPoly::normalize(&s, &[raw(&[("q", 1)], &[], 1)]).unwrap_err(),
            Error::UnknownGenerator("q".into())
        );
        assert_eq!(
            SuperPoly::normalize(&s, &[raw(&[("y", -1)], &[], 1)]).unwrap_err(),
            Error::NegativeExponent("y".into())
        );
    }

    #[test]
    fn reorder_sign_matches_bubble_sort() {
        // t3 * (t1 t2) = t1 t2 t3 (two transpositions)
        assert!(!reorder_is_negative(0b100, 0b011));
        // t2 * t1 = - t1 t2
        assert!(reorder_is_negative(0b10, 0b01));
        assert_eq!(sort_odd_word(&[2, 0, 1]), Some((0b111, false)));
        assert_eq!(sort_odd_word(&[1, 0]), Some((0b11, true)));
    }

    #[test]
    fn mul_examples() {
        let s = ring();
        let one = SuperPoly::one(&s);
        let t1 = SuperPoly::gen(&s, "t1").unwrap();
        let t2 = SuperPoly::gen(&s, "t2").unwrap();
        let x = SuperPoly::gen(&s, "x").unwrap();
        assert_eq!(&(&one + &t1) * &(&one - &t1), one);
        assert_eq!(&t1 * &t2, -(&t2 * &t1));
        let t12 = &t1 * &t2;
        assert_eq!(&(&x + &t12) * &(&x - &t12), &x * &x);
    }

    #[test]
    fn body_examples() {
        let s = ring();
        let t1 = SuperPoly::gen(&s, "t1").unwrap();
        let t2 = SuperPoly::gen(&s, "t2").unwrap();
        let x = SuperPoly::gen(&s, "x").unwrap();
        let three = SuperPoly::from_i64(&s, 3);
        let p = &(&three + &t1) + &(&(&x * &t1) * &t2);
        assert_eq!(p.body(), three);
        assert!((&t1 * &t2).body().is_zero());
        let xinv = x.invert().unwrap();
        assert_eq!((&xinv + &(&t1 * &t2)).body(), xinv);
    }

    #[test]
    fn invert_examples() {
        let s = ring();
        let t12 = &SuperPoly::gen(&s, "t1").unwrap() * &SuperPoly::gen(&s, "t2").unwrap();
        let x = SuperPoly::gen(&s, "x").unwrap();
        let one = SuperPoly::one(&s);
        let two = SuperPoly::from_i64(&s, 2);
        assert_eq!(
            two.invert().unwrap(),
            SuperPoly::constant(&s, Coeff::new(1.into(), 2.into()))
        );
        assert_eq!((&one + &t12).invert().unwrap(), &one - &t12);
        let xinv = x.invert().unwrap();
        let p = &x * &(&one + &(&xinv * &t12));
        let expected = &xinv - &(&(&xinv * &xinv) * &t12);
        assert_eq!(p.invert().unwrap(), expected);
        assert_eq!(&p * &expected, one);
    }

    #[test]
    fn invert_rejects_non_units() {
        let s = ring();
        let y = SuperPoly::gen(&s, "y").unwrap();
        let t1 = SuperPoly::gen(&s, "t1").unwrap();
        assert!(matches!(y.invert(), Err(Error::NotInvertible(_))));
        assert!(matches!(t1.invert(), Err(Error::NotInvertible(_))));
        let x = SuperPoly::gen(&s, "x").unwrap();
        let one = SuperPoly::one(&s);
        assert!((&x + &one).invert().is_err());
    }

    #[test]
    fn term_cap_enforced() {
        let s = ring().with_max_terms(3);
        let x = SuperPoly::gen(&s, "x").unwrap();
        let y = SuperPoly::gen(&s, "y").unwrap();
        let p = &x + &y;
        let err = p.pow(3).unwrap_err();
        assert!(matches!(err, Error::TooLarge { limit: 3, .. }));
    }

    #[test]
    fn embed_reorders_odd_generators() {
        let small = RingSignature::builder(FieldSpec::Rationals)
            .odd("b")
            .odd("a")
            .build()
            .unwrap();
        let big = RingSignature::builder(FieldSpec::Rationals)
            .odd("a")
            .odd("b")
            .build()
            .unwrap();
        let ba = &SuperPoly::gen(&small, "b").unwrap() * &SuperPoly::gen(&small, "a").unwrap();
        let ab = &SuperPoly::gen(&big, "a").unwrap() * &SuperPoly::gen(&big, "b").unwrap();
        assert_eq!(ba.embed(&big).unwrap(), -ab);
    }
}
