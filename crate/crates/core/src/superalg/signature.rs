use std::collections::HashSet;
use std::sync::Arc;

use super::field::FieldSpec;
use crate::error::{Error, Result};

/// Default cap on the number of terms any single element may hold.
pub const DEFAULT_MAX_TERMS: usize = 200_000;

/// Maximum number of odd generators; odd words are stored as bitmasks.
pub const MAX_ODD_GENERATORS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(odd: bool) -> Self {
        if odd {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn bit(self) -> u32 {
        self as u32
    }

    pub fn add(self, other: Parity) -> Parity {
        Parity::from_bit(self.is_odd() != other.is_odd())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EvenGenerator {
    pub name: String,
    pub laurent: bool,
}

/// Ordered generator list of a finitely generated supercommutative ring.
/// The order is the canonical-form authority: monomials are compared
/// lexicographically along it.
#[derive(Debug, Clone)]
pub struct RingSignature {
    field: FieldSpec,
    even: Vec<EvenGenerator>,
    odd: Vec<String>,
    max_terms: usize,
}

impl PartialEq for RingSignature {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.even == other.even && self.odd == other.odd
    }
}

impl Eq for RingSignature {}

/// Reference to a generator by position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GenRef {
    Even(usize),
    Odd(usize),
}

impl RingSignature {
    pub fn builder(field: FieldSpec) -> SignatureBuilder {
        SignatureBuilder {
            field,
            even: Vec::new(),
            odd: Vec::new(),
            max_terms: DEFAULT_MAX_TERMS,
        }
    }

    /// The Grassmann algebra on `t1, ..., tq`.
    pub fn grassmann(field: FieldSpec, q: usize) -> Result<Arc<Self>> {
        let mut b = Self::builder(field);
        for i in 1..=q {
            b = b.odd(format!("t{i}"));
        }
        b.build()
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn even_generators(&self) -> &[EvenGenerator] {
        &self.even
    }

    pub fn odd_generators(&self) -> &[String] {
        &self.odd
    }

    pub fn num_even(&self) -> usize {
        self.even.len()
    }

    pub fn num_odd(&self) -> usize {
        self.odd.len()
    }

    pub fn num_generators(&self) -> usize {
        self.even.len() + self.odd.len()
    }

    pub fn max_terms(&self) -> usize {
        self.max_terms
    }

    pub fn is_laurent(&self, even_index: usize) -> bool {
        self.even[even_index].laurent
    }

    pub fn lookup(&self, name: &str) -> Option<GenRef> {
        if let Some(i) = self.even.iter().position(|g| g.name == name) {
            return Some(GenRef::Even(i));
        }
        self.odd.iter().position(|g| g == name).map(GenRef::Odd)
    }

    pub fn name(&self, g: GenRef) -> &str {
        match g {
            GenRef::Even(i) => &self.even[i].name,
            GenRef::Odd(i) => &self.odd[i],
        }
    }

    /// Generators in canonical order: even ones first, then odd ones.
    pub fn generators(&self) -> impl Iterator<Item = GenRef> + '_ {
        (0..self.even.len())
            .map(GenRef::Even)
            .chain((0..self.odd.len()).map(GenRef::Odd))
    }

    /// Returns a copy with a different term cap. The cap does not take part
    /// in signature equality.
    pub fn with_max_terms(&self, max_terms: usize) -> Arc<Self> {
        let mut s = self.clone();
        s.max_terms = max_terms;
        Arc::new(s)
    }

    /// Rebuilds this signature with additional laurent flags.
    pub fn with_laurent(&self, names: &[&str]) -> Result<Arc<Self>> {
        let mut s = self.clone();
        for n in names {
            match s.even.iter_mut().find(|g| g.name == *n) {
                Some(g) => g.laurent = true,
                None => return Err(Error::UnknownGenerator(n.to_string())),
            }
        }
        Ok(Arc::new(s))
    }

    /// Builder pre-filled with this signature's generators.
    pub fn extend(&self) -> SignatureBuilder {
        SignatureBuilder {
            field: self.field,
            even: self.even.clone(),
            odd: self.odd.clone(),
            max_terms: self.max_terms,
        }
    }
}

pub struct SignatureBuilder {
    field: FieldSpec,
    even: Vec<EvenGenerator>,
    odd: Vec<String>,
    max_terms: usize,
}

impl SignatureBuilder {
    pub fn even(mut self, name: impl Into<String>) -> Self {
        self.even.push(EvenGenerator {
            name: name.into(),
            laurent: false,
        });
        self
    }

    pub fn laurent(mut self, name: impl Into<String>) -> Self {
        self.even.push(EvenGenerator {
            name: name.into(),
            laurent: true,
        });
        self
    }

    pub fn odd(mut self, name: impl Into<String>) -> Self {
        self.odd.push(name.into());
        self
    }

    pub fn max_terms(mut self, max_terms: usize) -> Self {
        self.max_terms = max_terms;
        self
    }

    /// Appends the generators of `other` that are not already present.
    pub fn include(mut self, other: &RingSignature) -> Self {
        for g in &other.even {
            if !self.even.iter().any(|e| e.name == g.name) {
                self.even.push(g.clone());
            }
        }
        for g in &other.odd {
            if !self.odd.contains(g) {
                self.odd.push(g.clone());
            }
        }
        self
    }

    pub fn build(self) -> Result<Arc<RingSignature>> {
        if let FieldSpec::Prime(p) = self.field {
            FieldSpec::prime(p)?;
        }
        let mut seen = HashSet::new();
        for name in self.even.iter().map(|g| &g.name).chain(self.odd.iter()) {
            if name.is_empty() || !is_identifier(name) {
                return Err(Error::Input(format!("invalid generator name `{name}`")));
            }
            if !seen.insert(name.clone()) {
                return Err(Error::DuplicateGenerator(name.clone()));
            }
        }
        if self.odd.len() > MAX_ODD_GENERATORS {
            return Err(Error::Input(format!(
                "at most {MAX_ODD_GENERATORS} odd generators are supported"
            )));
        }
        Ok(Arc::new(RingSignature {
            field: self.field,
            even: self.even,
            odd: self.odd,
            max_terms: self.max_terms,
        }))
    }
}

fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
