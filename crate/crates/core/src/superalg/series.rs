//! Terminating power series of nilpotent even elements.

use super::poly::SuperPoly;
use crate::error::{Error, Result};

/// Rejects non-nilpotent input and fields whose characteristic does not
/// exceed the longest possible series.
fn require_nilpotent(p: &SuperPoly) -> Result<()> {
    if p.terms().any(|(m, _)| m.odd_mask() == 0) {
        return Err(Error::Input(format!("{p} is not nilpotent")));
    }
    let field = p.field();
    if field.characteristic() != 0 {
        // an even nilpotent has at least two odd factors per term
        let longest = (p.signature().num_odd() / 2).max(1);
        if longest as u64 >= field.characteristic() {
            return Err(Error::FieldTooSmall {
                p: field.characteristic(),
                needed: longest,
            });
        }
    }
    Ok(())
}

/// `exp(p) = Σ p^k / k!` for `p` whose terms all carry odd factors.
pub fn exp_nilpotent(p: &SuperPoly) -> Result<SuperPoly> {
    require_nilpotent(p)?;
    let field = p.field();
    let mut sum = SuperPoly::one(p.signature());
    let mut term = SuperPoly::one(p.signature());
    let mut k = 1usize;
    loop {
        term = term.mul(p)?;
        if term.is_zero() {
            return Ok(sum);
        }
        term = term.scale(&field.reciprocal_of(k)?);
        sum = sum.add(&term)?;
        k += 1;
    }
}

/// `log(1 + p) = Σ (-1)^{k+1} p^k / k` for nilpotent `p`.
pub fn log_one_plus(p: &SuperPoly) -> Result<SuperPoly> {
    require_nilpotent(p)?;
    let field = p.field();
    let mut sum = SuperPoly::zero(p.signature());
    let mut power = SuperPoly::one(p.signature());
    let mut k = 1usize;
    loop {
        power = power.mul(p)?;
        if power.is_zero() {
            return Ok(sum);
        }
        let term = power.scale(&field.reciprocal_of(k)?);
        sum = if k % 2 == 1 { sum.add(&term)? } else { sum.sub(&term)? };
        k += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superalg::expr::parse;
    use crate::superalg::field::FieldSpec;
    use crate::superalg::signature::RingSignature;

    #[test]
    fn exp_log_inverse() {
        let s = RingSignature::builder(FieldSpec::Rationals)
            .laurent("x")
            .odd("t1")
            .odd("t2")
            .odd("t3")
            .odd("t4")
            .build()
            .unwrap();
        let nu = parse("x*t1*t2 + 2*t3*t4 - x^-1*t1*t4", &s).unwrap();
        let l = log_one_plus(&nu).unwrap();
        let back = exp_nilpotent(&l).unwrap();
        assert_eq!(back, &SuperPoly::one(&s) + &nu);
    }

    #[test]
    fn rejects_non_nilpotent() {
        let s = RingSignature::grassmann(FieldSpec::Rationals, 2).unwrap();
        assert!(exp_nilpotent(&SuperPoly::one(&s)).is_err());
    }

    #[test]
    fn small_characteristic_detected() {
        let s = RingSignature::grassmann(FieldSpec::prime(3).unwrap(), 6).unwrap();
        let nu = parse("t1*t2 + t3*t4 + t5*t6", &s).unwrap();
        assert!(matches!(
            exp_nilpotent(&nu),
            Err(Error::FieldTooSmall { p: 3, .. })
        ));
    }
}
