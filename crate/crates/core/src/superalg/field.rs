use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact coefficient type. Over a prime field the value is kept as an
/// integer in `[0, p)`.
pub type Coeff = BigRational;

/// The ground field of a ring: the rationals or a prime field of odd
/// characteristic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if p < 3 || !is_prime(p) {
            return Err(Error::InvalidField(format!(
                "{p} is not an odd prime (characteristic 2 is excluded)"
            )));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    /// Maps an arbitrary rational into canonical form for this field.
    ///
    /// Panics if a rational with denominator divisible by `p` is reduced
    /// into `F_p`; callers validate such inputs with [`FieldSpec::try_reduce`].
    pub fn reduce(&self, c: Coeff) -> Coeff {
        self.try_reduce(c)
            .expect("denominator divisible by the characteristic")
    }

    pub fn try_reduce(&self, c: Coeff) -> Result<Coeff> {
        match self {
            FieldSpec::Rationals => Ok(c),
            FieldSpec::Prime(p) => {
                let p = BigInt::from(*p);
                let num = c.numer().mod_floor(&p);
                let den = c.denom().mod_floor(&p);
                if den.is_zero() {
                    return Err(Error::NotInvertible(format!(
                        "denominator {} vanishes mod {}",
                        c.denom(),
                        p
                    )));
                }
                let inv = mod_inverse(&den, &p);
                Ok(Coeff::from_integer((num * inv).mod_floor(&p)))
            }
        }
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.reduce(a + b)
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.reduce(a * b)
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        self.reduce(-a.clone())
    }

    pub fn inv(&self, a: &Coeff) -> Option<Coeff> {
        if a.is_zero() {
            return None;
        }
        match self {
            FieldSpec::Rationals => Some(a.recip()),
            FieldSpec::Prime(_) => self.try_reduce(a.recip()).ok(),
        }
    }

    pub fn from_i64(&self, v: i64) -> Coeff {
        self.reduce(Coeff::from_integer(BigInt::from(v)))
    }

    /// Returns `1/k` for small positive integers, as needed by the
    /// exponential and logarithm series.
    pub fn reciprocal_of(&self, k: usize) -> Result<Coeff> {
        let c = self.from_i64(k as i64);
        self.inv(&c).ok_or(Error::FieldTooSmall {
            p: self.characteristic(),
            needed: k,
        })
    }

    /// Prints a coefficient so that `parse` reads back the same value.
    pub fn format_coeff(&self, c: &Coeff) -> String {
        if c.is_integer() {
            c.numer().to_string()
        } else {
            format!("{}/{}", c.numer(), c.denom())
        }
    }

    /// Whether a (canonical) coefficient should be printed with a leading minus.
    pub fn is_negative(&self, c: &Coeff) -> bool {
        matches!(self, FieldSpec::Rationals) && c.is_negative()
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

fn mod_inverse(a: &BigInt, p: &BigInt) -> BigInt {
    let e = a.extended_gcd(p);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(p)
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Small-integer view of a coefficient, used by formatting of exponents
/// and by tests.
pub fn coeff_to_i64(c: &Coeff) -> Option<i64> {
    if c.is_integer() {
        c.numer().to_i64()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_even_and_composite_characteristic() {
        assert!(FieldSpec::prime(2).is_err());
        assert!(FieldSpec::prime(9).is_err());
        assert!(FieldSpec::prime(7).is_ok());
    }

    #[test]
    fn prime_field_reduction() {
        let f = FieldSpec::prime(7).unwrap();
        let half = Coeff::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(f.reduce(half), Coeff::from_integer(BigInt::from(4)));
        assert_eq!(f.from_i64(-1), Coeff::from_integer(BigInt::from(6)));
        assert!(f.try_reduce(Coeff::new(1.into(), 7.into())).is_err());
        assert!(f.reciprocal_of(7).is_err());
    }
}
