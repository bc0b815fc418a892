//! Rings and values read from user input.

use std::sync::Arc;

use superkit::superalg::scan_identifiers;
use superkit::{Error, FieldSpec, Result, RingSignature};

pub const MAX_TERMS_VAR: &str = "SUPERKIT_MAX_TERMS";

/// Name stems that denote odd generators: `t1`, `zeta`, `mu2`, `alpha`, ...
const ODD_STEMS: &[&str] = &[
    "t", "theta", "zeta", "xi", "eta", "mu", "nu", "alpha", "beta", "gamma", "delta",
];

pub fn parse_field(text: &str) -> std::result::Result<FieldSpec, String> {
    match text.to_ascii_lowercase().as_str() {
        "rational" | "rationals" | "q" => Ok(FieldSpec::Rationals),
        other => {
            let p: u64 = other
                .parse()
                .map_err(|_| format!("expected `rational` or a prime, got `{text}`"))?;
            FieldSpec::prime(p).map_err(|e| e.to_string())
        }
    }
}

/// The term cap from `SUPERKIT_MAX_TERMS`, if set.
pub fn max_terms_from_env() -> Result<Option<usize>> {
    match std::env::var(MAX_TERMS_VAR) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n > 0)
            .map(Some)
            .ok_or_else(|| Error::Input(format!("{MAX_TERMS_VAR} must be a positive integer, got `{v}`"))),
        Err(_) => Ok(None),
    }
}

/// Field, Grassmann rank and term cap shared by every command.
#[derive(Clone, Copy, Debug)]
pub struct RingOptions {
    pub field: FieldSpec,
    pub q: usize,
    pub max_terms: Option<usize>,
}

impl RingOptions {
    pub fn capped(&self, sig: Arc<RingSignature>) -> Arc<RingSignature> {
        match self.max_terms {
            Some(n) => sig.with_max_terms(n),
            None => sig,
        }
    }

    /// `Λ_q` with generators `t1..tq`.
    pub fn base_ring(&self) -> Result<Arc<RingSignature>> {
        Ok(self.capped(RingSignature::grassmann(self.field, self.q)?))
    }

    /// `Λ_q` extended by every other identifier in `texts`. Odd stems give
    /// odd generators; an even generator raised to a negative power is
    /// made laurent.
    pub fn infer_ring<'a>(&self, texts: impl IntoIterator<Item = &'a str>) -> Result<Arc<RingSignature>> {
        let base = RingSignature::grassmann(self.field, self.q)?;
        let mut found: Vec<(String, bool)> = Vec::new();
        for text in texts {
            for (name, negative) in scan_identifiers(text)? {
                match found.iter_mut().find(|(n, _)| *n == name) {
                    Some(entry) => entry.1 |= negative,
                    None => found.push((name, negative)),
                }
            }
        }
        let mut b = base.extend();
        for (name, negative) in found {
            if base.lookup(&name).is_some() {
                continue;
            }
            b = if is_odd_name(&name) {
                b.odd(name)
            } else if negative {
                b.laurent(name)
            } else {
                b.even(name)
            };
        }
        Ok(self.capped(b.build()?))
    }
}

pub fn is_odd_name(name: &str) -> bool {
    let stem = name.trim_end_matches(|c: char| c.is_ascii_digit() || c == '_');
    ODD_STEMS.contains(&stem)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_stems() {
        assert!(is_odd_name("t1"));
        assert!(is_odd_name("mu2"));
        assert!(is_odd_name("zeta"));
        assert!(is_odd_name("xi0_1"));
        assert!(!is_odd_name("x0_1"));
        assert!(!is_odd_name("w"));
        assert!(!is_odd_name("tau"));
    }

    #[test]
    fn field_flag() {
        assert_eq!(parse_field("rational").unwrap(), FieldSpec::Rationals);
        assert_eq!(parse_field("7").unwrap(), FieldSpec::prime(7).unwrap());
        assert!(parse_field("4").is_err());
        assert!(parse_field("2").is_err());
        assert!(parse_field("reals").is_err());
    }

    #[test]
    fn inferred_ring() {
        let opts = RingOptions {
            field: FieldSpec::Rationals,
            q: 2,
            max_terms: None,
        };
        let sig = opts.infer_ring(["a*t1 + e^-1", "alpha*beta"]).unwrap();
        assert_eq!(sig.odd_generators(), ["t1", "t2", "alpha", "beta"]);
        let names: Vec<_> = sig.even_generators().iter().map(|g| (g.name.as_str(), g.laurent)).collect();
        assert_eq!(names, [("a", false), ("e", true)]);
    }
}
