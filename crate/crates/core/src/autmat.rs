//! The conjugation representation `GL_{m|n} → Aut(M_{m|n})` and the
//! reconstruction of a conjugating matrix from an automorphism.
//!
//! `M_{m|n}` is free on the matrix units `e_ij`, ordered with the even
//! units (`p(i) = p(j)`) first and lexicographically within each group.
//! Coordinates are right coordinates: the `(k,l)` coordinate of a matrix
//! `Y` is `Y_kl` with its odd part negated when `l` is odd, so that the
//! coordinate matrix of a composite is the product of coordinate matrices.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::superalg::{Parity, RingSignature, SuperPoly};
use crate::supermatrix::{MatrixJson, SuperMatrix};

/// An endomorphism `ψ` of `M_{m|n}` as a supermatrix of size
/// `(m²+n²)|(2mn)`; column `(i,j)` holds the coordinates of `ψ(e_ij)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjRep {
    m: usize,
    n: usize,
    psi: SuperMatrix,
}

/// Matrix units of `M_{m|n}` in basis order.
pub fn basis_order(m: usize, n: usize) -> Vec<(usize, usize)> {
    let s = m + n;
    let odd = |i: usize| i >= m;
    let all = (0..s).flat_map(|i| (0..s).map(move |j| (i, j)));
    let even: Vec<_> = all.clone().filter(|&(i, j)| odd(i) == odd(j)).collect();
    let rest: Vec<_> = all.filter(|&(i, j)| odd(i) != odd(j)).collect();
    even.into_iter().chain(rest).collect()
}

fn index_parity(m: usize, i: usize) -> Parity {
    Parity::from_bit(i >= m)
}

/// The coordinate change between entries and right coordinates; it is an
/// involution.
fn adjust(y: &SuperPoly, col_parity: Parity) -> SuperPoly {
    if col_parity.is_odd() {
        y.grade_involution()
    } else {
        y.clone()
    }
}

impl ConjRep {
    pub fn new(m: usize, n: usize, psi: SuperMatrix) -> Result<Self> {
        if psi.m() != m * m + n * n || psi.n() != 2 * m * n {
            return Err(Error::DimensionMismatch(format!(
                "representation of size {}|{} for M_{{{m}|{n}}}",
                psi.m(),
                psi.n()
            )));
        }
        if !psi.is_even() {
            return Err(Error::ParityMisuse(
                "coordinate parities do not match the basis".into(),
            ));
        }
        Ok(ConjRep { m, n, psi })
    }

    pub fn identity(m: usize, n: usize, sig: &Arc<RingSignature>) -> Self {
        ConjRep {
            m,
            n,
            psi: SuperMatrix::identity(m * m + n * n, 2 * m * n, sig),
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn psi(&self) -> &SuperMatrix {
        &self.psi
    }

    /// Coordinate of `e_kl` in `ψ(e_ij)`.
    pub fn coordinate(&self, ij: (usize, usize), kl: (usize, usize)) -> &SuperPoly {
        let order = basis_order(self.m, self.n);
        let col = order.iter().position(|&p| p == ij).expect("index in range");
        let row = order.iter().position(|&p| p == kl).expect("index in range");
        self.psi.get(row, col)
    }

    /// The matrix `ψ(e_ij)` in `M_{m|n}`.
    pub fn image(&self, i: usize, j: usize) -> Result<SuperMatrix> {
        let (m, n) = (self.m, self.n);
        let order = basis_order(m, n);
        let col = order
            .iter()
            .position(|&p| p == (i, j))
            .ok_or_else(|| Error::IndexOutOfRange(format!("e_({i},{j})")))?;
        let mut out = SuperMatrix::zero(m, n, self.psi.signature());
        for (row, &(k, l)) in order.iter().enumerate() {
            out.set(k, l, adjust(self.psi.get(row, col), index_parity(m, l)))?;
        }
        Ok(out)
    }

    /// Composition `self ∘ other`.
    pub fn compose(&self, other: &ConjRep) -> Result<ConjRep> {
        if (self.m, self.n) != (other.m, other.n) {
            return Err(Error::DimensionMismatch("different matrix algebras".into()));
        }
        Ok(ConjRep {
            m: self.m,
            n: self.n,
            psi: self.psi.matmul(&other.psi)?,
        })
    }

    pub fn is_identity(&self) -> bool {
        self.psi.is_identity()
    }

    pub fn to_json(&self) -> ConjRepJson {
        ConjRepJson {
            m: self.m,
            n: self.n,
            psi: self.psi.to_json(),
        }
    }

    pub fn from_json(json: &ConjRepJson, sig: &Arc<RingSignature>) -> Result<ConjRep> {
        ConjRep::new(json.m, json.n, SuperMatrix::from_json(&json.psi, sig)?)
    }
}

/// Wire form `{"m":2,"n":1,"psi":{"m":5,"n":4,"entries":[...]}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjRepJson {
    pub m: usize,
    pub n: usize,
    pub psi: MatrixJson,
}

/// Coordinates of `X ↦ T X T⁻¹`.
pub fn conj_rep(t: &SuperMatrix) -> Result<ConjRep> {
    let (m, n) = (t.m(), t.n());
    let tinv = t.minverse()?;
    let sig = t.signature();
    let order = basis_order(m, n);
    let mut psi = SuperMatrix::zero(m * m + n * n, 2 * m * n, sig);
    for (col, &(i, j)) in order.iter().enumerate() {
        // (T e_ij T⁻¹)_kl = T_ki (T⁻¹)_jl
        for (row, &(k, l)) in order.iter().enumerate() {
            let v = t.get(k, i).mul(tinv.get(j, l))?;
            psi.set(row, col, adjust(&v, index_parity(m, l)))?;
        }
    }
    ConjRep::new(m, n, psi)
}

/// Checks `Σ_i ψ(e_ii) = I` and `ψ(e_ij) ψ(e_kl) = δ_jk ψ(e_il)`.
pub fn check_relations(r: &ConjRep) -> Result<bool> {
    let (m, n) = (r.m, r.n);
    let s = m + n;
    let sig = r.psi.signature();
    let mut images = Vec::with_capacity(s * s);
    for i in 0..s {
        for j in 0..s {
            images.push(r.image(i, j)?);
        }
    }
    let img = |i: usize, j: usize| &images[i * s + j];
    let mut trace = SuperMatrix::zero(m, n, sig);
    for i in 0..s {
        trace = trace.add(img(i, i))?;
    }
    if !trace.is_identity() {
        return Ok(false);
    }
    for i in 0..s {
        for j in 0..s {
            for k in 0..s {
                for l in 0..s {
                    let prod = img(i, j).matmul(img(k, l))?;
                    let ok = if j == k {
                        prod == *img(i, l)
                    } else {
                        prod.is_zero()
                    };
                    if !ok {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Recovers `T` with `conj_rep(T) = r`, normalized so that its first entry
/// with invertible body (row-major) equals one.
pub fn reconstruct_t(r: &ConjRep) -> Result<SuperMatrix> {
    if !check_relations(r)? {
        return Err(Error::NotAutomorphism(
            "the matrix-unit relations fail".into(),
        ));
    }
    let (m, n) = (r.m, r.n);
    let s = m + n;
    let sig = r.psi.signature();
    let p1 = r.image(0, 0)?;
    let col = (0..s)
        .find(|&c| (0..s).any(|k| !p1.get(k, c).body().is_zero()))
        .ok_or(Error::DegenerateIdempotent)?;
    let t1: Vec<SuperPoly> = (0..s).map(|k| p1.get(k, col).clone()).collect();
    let mut t = SuperMatrix::zero(m, n, sig);
    for i in 0..s {
        let ti = if i == 0 {
            t1.clone()
        } else {
            r.image(i, 0)?.apply_to(&t1)?
        };
        for (k, v) in ti.into_iter().enumerate() {
            t.set(k, i, v)?;
        }
    }
    let pivot = t
        .entries()
        .iter()
        .find(|x| x.is_unit())
        .cloned()
        .ok_or(Error::DegenerateIdempotent)?;
    let t = t.scale(&pivot.invert()?)?;
    if !t.is_invertible() {
        return Err(Error::DegenerateIdempotent);
    }
    if conj_rep(&t)? != *r {
        return Err(Error::Inconsistent(
            "reconstructed matrix does not reproduce the representation".into(),
        ));
    }
    Ok(t)
}

/// Returns `c` when `T' T⁻¹ = c·I` with `c` of invertible body.
pub fn scalar_ratio(t_prime: &SuperMatrix, t: &SuperMatrix) -> Result<Option<SuperPoly>> {
    let ratio = t_prime.matmul(&t.minverse()?)?;
    Ok(ratio.as_scalar().filter(SuperPoly::is_unit))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::{random_gl, sample_rng};
    use crate::superalg::FieldSpec;

    fn lam(q: usize) -> Arc<RingSignature> {
        RingSignature::grassmann(FieldSpec::Rationals, q).unwrap()
    }

    #[test]
    fn basis_order_puts_even_units_first() {
        let b = basis_order(2, 1);
        assert_eq!(b.len(), 9);
        assert_eq!(&b[..5], &[(0, 0), (0, 1), (1, 0), (1, 1), (2, 2)]);
        assert_eq!(&b[5..], &[(0, 2), (1, 2), (2, 0), (2, 1)]);
    }

    #[test]
    fn identity_examples() {
        let s = lam(2);
        let r = conj_rep(&SuperMatrix::identity(2, 1, &s)).unwrap();
        assert!(r.is_identity());
        assert_eq!((r.psi().m(), r.psi().n()), (5, 4));
        assert!(check_relations(&r).unwrap());
        assert!(reconstruct_t(&r).unwrap().is_identity());
    }

    #[test]
    fn diagonal_conjugation() {
        let s = lam(2);
        let t = SuperMatrix::diag_i64(2, 1, &s, &[2, 1, 1]).unwrap();
        let r = conj_rep(&t).unwrap();
        let e01 = SuperMatrix::elementary(2, 1, &s, 0, 1).unwrap();
        assert_eq!(
            r.image(0, 1).unwrap(),
            e01.scale(&SuperPoly::from_i64(&s, 2)).unwrap()
        );
        let three = SuperMatrix::scalar(2, 1, &SuperPoly::from_i64(&s, 3));
        let t3 = three.matmul(&t).unwrap();
        assert_eq!(conj_rep(&t3).unwrap(), r);
    }

    #[test]
    fn zero_rep_fails_relations() {
        let s = lam(1);
        let r = ConjRep::new(2, 1, SuperMatrix::zero(5, 4, &s)).unwrap();
        assert!(!check_relations(&r).unwrap());
        assert!(matches!(reconstruct_t(&r), Err(Error::NotAutomorphism(_))));
    }

    #[test]
    fn homomorphism_and_round_trip() {
        let s = lam(3);
        for i in 0..5 {
            let mut rng = sample_rng(3, i);
            let t1 = random_gl(2, 1, &s, &mut rng).unwrap();
            let t2 = random_gl(2, 1, &s, &mut rng).unwrap();
            let r1 = conj_rep(&t1).unwrap();
            let r12 = conj_rep(&t1.matmul(&t2).unwrap()).unwrap();
            assert_eq!(r12, r1.compose(&conj_rep(&t2).unwrap()).unwrap());
            assert!(check_relations(&r1).unwrap());
            let back = reconstruct_t(&r1).unwrap();
            assert!(scalar_ratio(&back, &t1).unwrap().is_some());
        }
    }

    #[test]
    fn reconstruct_diagonal() {
        let s = lam(2);
        let t = SuperMatrix::diag_i64(2, 1, &s, &[1, 2, 3]).unwrap();
        let r = conj_rep(&t).unwrap();
        assert_eq!(conj_rep(&reconstruct_t(&r).unwrap()).unwrap(), r);
    }

    #[test]
    fn json_round_trip() {
        let s = lam(2);
        let t = random_gl(1, 1, &s, &mut sample_rng(9, 0)).unwrap();
        let r = conj_rep(&t).unwrap();
        let text = serde_json::to_string(&r.to_json()).unwrap();
        let back: ConjRepJson = serde_json::from_str(&text).unwrap();
        assert_eq!(ConjRep::from_json(&back, &s).unwrap(), r);
    }
}
