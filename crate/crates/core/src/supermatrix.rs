//! Block supermatrices over a supercommutative ring.
//!
//! A [`SuperMatrix`] of size `m|n` is a square `(m+n)×(m+n)` array whose
//! first `m` rows and columns form the even range. Group elements are even:
//! the diagonal blocks carry even entries, the off-diagonal blocks odd ones.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::superalg::{parse, AlgebraMorphism, Parity, RingSignature, SuperPoly};

/// Sign convention for the supertranspose of an even supermatrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convention {
    /// `A ↦ Aᵀ, B ↦ Cᵀ, C ↦ −Bᵀ, D ↦ Dᵀ`
    Standard,
    /// `A ↦ Aᵀ, B ↦ −Cᵀ, C ↦ Bᵀ, D ↦ Dᵀ`
    Flipped,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperMatrix {
    m: usize,
    n: usize,
    sig: Arc<RingSignature>,
    entries: Vec<SuperPoly>,
}

/// Dense rectangular block used internally; no parity bookkeeping.
#[derive(Clone, Debug)]
struct Dense {
    rows: usize,
    cols: usize,
    e: Vec<SuperPoly>,
}

impl Dense {
    fn zero(sig: &Arc<RingSignature>, rows: usize, cols: usize) -> Self {
        Dense {
            rows,
            cols,
            e: vec![SuperPoly::zero(sig); rows * cols],
        }
    }

    fn at(&self, i: usize, j: usize) -> &SuperPoly {
        &self.e[i * self.cols + j]
    }

    fn mul(&self, other: &Dense, sig: &Arc<RingSignature>) -> Result<Dense> {
        let mut out = Dense::zero(sig, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    out.e[idx] = out.e[idx].add(&a.mul(b)?)?;
                }
            }
        }
        Ok(out)
    }

    fn sub(&self, other: &Dense) -> Result<Dense> {
        let e = self
            .e
            .iter()
            .zip(&other.e)
            .map(|(a, b)| a.sub(b))
            .collect::<Result<_>>()?;
        Ok(Dense { e, ..*self })
    }

    fn add(&self, other: &Dense) -> Result<Dense> {
        let e = self
            .e
            .iter()
            .zip(&other.e)
            .map(|(a, b)| a.add(b))
            .collect::<Result<_>>()?;
        Ok(Dense { e, ..*self })
    }

    fn neg(&self) -> Dense {
        Dense {
            e: self.e.iter().map(SuperPoly::neg).collect(),
            ..*self
        }
    }

    /// Determinant of a square block with pairwise commuting entries, by
    /// dynamic programming over the set of used columns.
    fn det(&self, sig: &Arc<RingSignature>) -> Result<SuperPoly> {
        let k = self.rows;
        if k == 0 {
            return Ok(SuperPoly::one(sig));
        }
        let mut f: Vec<Option<SuperPoly>> = vec![None; 1 << k];
        f[0] = Some(SuperPoly::one(sig));
        for mask in 0usize..(1 << k) {
            let Some(acc) = f[mask].take() else { continue };
            let row = mask.count_ones() as usize;
            if row == k {
                f[mask] = Some(acc);
                continue;
            }
            for c in 0..k {
                if mask & (1 << c) != 0 || self.at(row, c).is_zero() {
                    continue;
                }
                let larger = (mask >> (c + 1)).count_ones();
                let mut term = acc.mul(self.at(row, c))?;
                if larger % 2 == 1 {
                    term = term.neg();
                }
                let next = mask | (1 << c);
                f[next] = Some(match f[next].take() {
                    Some(v) => v.add(&term)?,
                    None => term,
                });
            }
        }
        Ok(f[(1 << k) - 1].take().unwrap_or_else(|| SuperPoly::zero(sig)))
    }

    fn minor(&self, skip_row: usize, skip_col: usize) -> Dense {
        let mut e = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for i in (0..self.rows).filter(|&i| i != skip_row) {
            for j in (0..self.cols).filter(|&j| j != skip_col) {
                e.push(self.at(i, j).clone());
            }
        }
        Dense {
            rows: self.rows - 1,
            cols: self.cols - 1,
            e,
        }
    }

    /// Inverse of a commuting square block as adjugate over determinant.
    fn inverse(&self, sig: &Arc<RingSignature>, what: &str) -> Result<Dense> {
        let k = self.rows;
        let det = self.det(sig)?;
        if !det.is_unit() {
            return Err(Error::NotInvertible(format!(
                "{what} block has determinant {det}"
            )));
        }
        let dinv = det.invert()?;
        if k == 1 {
            return Ok(Dense {
                rows: 1,
                cols: 1,
                e: vec![dinv],
            });
        }
        let mut out = Dense::zero(sig, k, k);
        for i in 0..k {
            for j in 0..k {
                let cof = self.minor(j, i).det(sig)?;
                let cof = if (i + j) % 2 == 1 { cof.neg() } else { cof };
                out.e[i * k + j] = dinv.mul(&cof)?;
            }
        }
        Ok(out)
    }
}

impl SuperMatrix {
    /// Builds a matrix from rows; all entries must share `sig`.
    pub fn new(
        m: usize,
        n: usize,
        sig: &Arc<RingSignature>,
        rows: Vec<Vec<SuperPoly>>,
    ) -> Result<Self> {
        let size = m + n;
        if rows.len() != size || rows.iter().any(|r| r.len() != size) {
            return Err(Error::DimensionMismatch(format!(
                "expected a {size}×{size} array for size {m}|{n}"
            )));
        }
        let entries: Vec<SuperPoly> = rows.into_iter().flatten().collect();
        if entries.iter().any(|e| **e.signature() != **sig) {
            return Err(Error::SignatureMismatch);
        }
        Ok(SuperMatrix {
            m,
            n,
            sig: sig.clone(),
            entries,
        })
    }

    pub fn zero(m: usize, n: usize, sig: &Arc<RingSignature>) -> Self {
        SuperMatrix {
            m,
            n,
            sig: sig.clone(),
            entries: vec![SuperPoly::zero(sig); (m + n) * (m + n)],
        }
    }

    pub fn identity(m: usize, n: usize, sig: &Arc<RingSignature>) -> Self {
        Self::scalar(m, n, &SuperPoly::one(sig))
    }

    /// `c·I` for an even ring element `c`.
    pub fn scalar(m: usize, n: usize, c: &SuperPoly) -> Self {
        let sig = c.signature();
        let mut out = Self::zero(m, n, sig);
        for i in 0..m + n {
            out.entries[i * (m + n) + i] = c.clone();
        }
        out
    }

    /// Diagonal matrix with the given (even) diagonal entries.
    pub fn diag(m: usize, n: usize, d: &[SuperPoly]) -> Result<Self> {
        if d.len() != m + n || d.is_empty() {
            return Err(Error::DimensionMismatch(format!(
                "{} diagonal entries for size {m}|{n}",
                d.len()
            )));
        }
        let sig = d[0].signature();
        let mut out = Self::zero(m, n, sig);
        for (i, x) in d.iter().enumerate() {
            if **x.signature() != **sig {
                return Err(Error::SignatureMismatch);
            }
            out.entries[i * (m + n) + i] = x.clone();
        }
        Ok(out)
    }

    /// Diagonal matrix with small integer entries.
    pub fn diag_i64(m: usize, n: usize, sig: &Arc<RingSignature>, d: &[i64]) -> Result<Self> {
        let d: Vec<SuperPoly> = d.iter().map(|&v| SuperPoly::from_i64(sig, v)).collect();
        Self::diag(m, n, &d)
    }

    /// Matrix unit `e_ij` (zero-based indices).
    pub fn elementary(m: usize, n: usize, sig: &Arc<RingSignature>, i: usize, j: usize) -> Result<Self> {
        let size = m + n;
        if i >= size || j >= size {
            return Err(Error::IndexOutOfRange(format!(
                "e_({i},{j}) in size {m}|{n}"
            )));
        }
        let mut out = Self::zero(m, n, sig);
        out.entries[i * size + j] = SuperPoly::one(sig);
        Ok(out)
    }

    /// Builds a matrix from a closure over positions.
    pub fn from_fn(
        m: usize,
        n: usize,
        sig: &Arc<RingSignature>,
        mut f: impl FnMut(usize, usize) -> Result<SuperPoly>,
    ) -> Result<Self> {
        let size = m + n;
        let mut entries = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                let v = f(i, j)?;
                if **v.signature() != **sig {
                    return Err(Error::SignatureMismatch);
                }
                entries.push(v);
            }
        }
        Ok(SuperMatrix {
            m,
            n,
            sig: sig.clone(),
            entries,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.m + self.n
    }

    pub fn signature(&self) -> &Arc<RingSignature> {
        &self.sig
    }

    pub fn get(&self, i: usize, j: usize) -> &SuperPoly {
        &self.entries[i * self.size() + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: SuperPoly) -> Result<()> {
        if **v.signature() != *self.sig {
            return Err(Error::SignatureMismatch);
        }
        let size = self.size();
        self.entries[i * size + j] = v;
        Ok(())
    }

    pub fn entries(&self) -> &[SuperPoly] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<SuperPoly>> {
        self.entries.chunks(self.size()).map(<[_]>::to_vec).collect()
    }

    /// Parity of position `i` in the `m|n` grading.
    pub fn index_parity(&self, i: usize) -> Parity {
        Parity::from_bit(i >= self.m)
    }

    /// Parity of the matrix unit at `(i, j)`.
    pub fn position_parity(&self, i: usize, j: usize) -> Parity {
        self.index_parity(i).add(self.index_parity(j))
    }

    pub fn is_even(&self) -> bool {
        let size = self.size();
        (0..size).all(|i| (0..size).all(|j| self.get(i, j).has_parity(self.position_parity(i, j))))
    }

    fn require_even(&self) -> Result<()> {
        if self.is_even() {
            Ok(())
        } else {
            Err(Error::ParityMisuse("supermatrix is not even".into()))
        }
    }

    fn check_compatible(&self, other: &SuperMatrix) -> Result<()> {
        if self.m != other.m || self.n != other.n {
            return Err(Error::DimensionMismatch(format!(
                "{}|{} vs {}|{}",
                self.m, self.n, other.m, other.n
            )));
        }
        if *self.sig != *other.sig {
            return Err(Error::SignatureMismatch);
        }
        Ok(())
    }

    fn block(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Dense {
        let mut e = Vec::with_capacity(rows.len() * cols.len());
        for i in rows.clone() {
            for j in cols.clone() {
                e.push(self.get(i, j).clone());
            }
        }
        Dense {
            rows: rows.len(),
            cols: cols.len(),
            e,
        }
    }

    fn blocks(&self) -> (Dense, Dense, Dense, Dense) {
        let (m, s) = (self.m, self.size());
        (
            self.block(0..m, 0..m),
            self.block(0..m, m..s),
            self.block(m..s, 0..m),
            self.block(m..s, m..s),
        )
    }

    fn from_blocks(m: usize, n: usize, sig: &Arc<RingSignature>, blocks: [&Dense; 4]) -> Self {
        let mut out = Self::zero(m, n, sig);
        let s = m + n;
        let offsets = [(0, 0), (0, m), (m, 0), (m, m)];
        for (b, (r0, c0)) in blocks.iter().zip(offsets) {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.entries[(r0 + i) * s + c0 + j] = b.at(i, j).clone();
                }
            }
        }
        out
    }

    pub fn matmul(&self, other: &SuperMatrix) -> Result<SuperMatrix> {
        self.check_compatible(other)?;
        let s = self.size();
        let a = Dense {
            rows: s,
            cols: s,
            e: self.entries.clone(),
        };
        let b = Dense {
            rows: s,
            cols: s,
            e: other.entries.clone(),
        };
        Ok(SuperMatrix {
            m: self.m,
            n: self.n,
            sig: self.sig.clone(),
            entries: a.mul(&b, &self.sig)?.e,
        })
    }

    pub fn add(&self, other: &SuperMatrix) -> Result<SuperMatrix> {
        self.check_compatible(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.add(b))
            .collect::<Result<_>>()?;
        Ok(SuperMatrix { entries, ..self.clone() })
    }

    pub fn sub(&self, other: &SuperMatrix) -> Result<SuperMatrix> {
        self.check_compatible(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.sub(b))
            .collect::<Result<_>>()?;
        Ok(SuperMatrix { entries, ..self.clone() })
    }

    /// Left multiplication of every entry by `c`.
    pub fn scale(&self, c: &SuperPoly) -> Result<SuperMatrix> {
        let entries = self
            .entries
            .iter()
            .map(|x| c.mul(x))
            .collect::<Result<_>>()?;
        Ok(SuperMatrix { entries, ..self.clone() })
    }

    pub fn neg(&self) -> SuperMatrix {
        SuperMatrix {
            entries: self.entries.iter().map(SuperPoly::neg).collect(),
            ..self.clone()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(SuperPoly::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.m, self.n, &self.sig)
    }

    /// Returns `c` when the matrix equals `c·I`.
    pub fn as_scalar(&self) -> Option<SuperPoly> {
        let c = self.get(0, 0).clone();
        (*self == Self::scalar(self.m, self.n, &c)).then_some(c)
    }

    /// Entrywise body (all odd generators set to zero).
    pub fn body(&self) -> SuperMatrix {
        SuperMatrix {
            entries: self.entries.iter().map(SuperPoly::body).collect(),
            ..self.clone()
        }
    }

    /// Applies a ring morphism entrywise.
    pub fn map_entries(&self, f: &AlgebraMorphism) -> Result<SuperMatrix> {
        if *f.source() != self.sig {
            return Err(Error::SignatureMismatch);
        }
        let entries = self
            .entries
            .iter()
            .map(|x| f.apply(x))
            .collect::<Result<_>>()?;
        Ok(SuperMatrix {
            m: self.m,
            n: self.n,
            sig: f.target().clone(),
            entries,
        })
    }

    /// Re-expresses the entries over a signature containing all generators.
    pub fn embed(&self, target: &Arc<RingSignature>) -> Result<SuperMatrix> {
        let entries = self
            .entries
            .iter()
            .map(|x| x.embed(target))
            .collect::<Result<_>>()?;
        Ok(SuperMatrix {
            m: self.m,
            n: self.n,
            sig: target.clone(),
            entries,
        })
    }

    pub fn supertranspose(&self) -> Result<SuperMatrix> {
        self.supertranspose_with(Convention::Standard)
    }

    pub fn supertranspose_with(&self, conv: Convention) -> Result<SuperMatrix> {
        self.require_even()?;
        let s = self.size();
        let mut out = Self::zero(self.m, self.n, &self.sig);
        for i in 0..s {
            for j in 0..s {
                let v = self.get(j, i);
                let odd_row = i >= self.m;
                let odd_col = j >= self.m;
                // new (i,j) comes from old (j,i); the lower-left block of the
                // result is built from the old upper-right block B
                let negate = match conv {
                    Convention::Standard => odd_row && !odd_col,
                    Convention::Flipped => !odd_row && odd_col,
                };
                out.entries[i * s + j] = if negate { v.neg() } else { v.clone() };
            }
        }
        Ok(out)
    }

    /// `tr(A) − tr(D)`.
    pub fn supertrace(&self) -> Result<SuperPoly> {
        let mut acc = SuperPoly::zero(&self.sig);
        for i in 0..self.size() {
            acc = if i < self.m {
                acc.add(self.get(i, i))?
            } else {
                acc.sub(self.get(i, i))?
            };
        }
        Ok(acc)
    }

    /// Determinants of the diagonal blocks.
    pub fn block_determinants(&self) -> Result<(SuperPoly, SuperPoly)> {
        let (a, _, _, d) = self.blocks();
        Ok((a.det(&self.sig)?, d.det(&self.sig)?))
    }

    pub fn is_invertible(&self) -> bool {
        if !self.is_even() {
            return false;
        }
        match self.block_determinants() {
            Ok((da, dd)) => da.is_unit() && dd.is_unit(),
            Err(_) => false,
        }
    }

    /// Superdeterminant. Uses the `D` block formula when `det(D)` is a unit,
    /// otherwise `det(A)·det(D − C A⁻¹ B)⁻¹`.
    pub fn berezinian(&self) -> Result<SuperPoly> {
        self.require_even()?;
        let sig = &self.sig;
        let (a, b, c, d) = self.blocks();
        let det_d = d.det(sig)?;
        if det_d.is_unit() {
            let dinv = d.inverse(sig, "D")?;
            let schur = a.sub(&b.mul(&dinv, sig)?.mul(&c, sig)?)?;
            return schur.det(sig)?.mul(&det_d.invert()?);
        }
        let det_a = a.det(sig)?;
        if det_a.is_unit() {
            let ainv = a.inverse(sig, "A")?;
            let schur = d.sub(&c.mul(&ainv, sig)?.mul(&b, sig)?)?;
            let sd = schur.det(sig)?;
            if !sd.is_unit() {
                return Err(Error::NotInvertible(format!(
                    "Schur complement of A has determinant {sd}"
                )));
            }
            return det_a.mul(&sd.invert()?);
        }
        Err(Error::NotInvertible(format!(
            "neither det(A) = {det_a} nor det(D) = {det_d} is a unit"
        )))
    }

    /// The `A`-block Berezinian formula, exposed for cross-checking.
    pub fn berezinian_via_a(&self) -> Result<SuperPoly> {
        self.require_even()?;
        let sig = &self.sig;
        let (a, b, c, d) = self.blocks();
        let ainv = a.inverse(sig, "A")?;
        let schur = d.sub(&c.mul(&ainv, sig)?.mul(&b, sig)?)?;
        let sd = schur.det(sig)?;
        if !sd.is_unit() {
            return Err(Error::NotInvertible(format!(
                "Schur complement of A has determinant {sd}"
            )));
        }
        a.det(sig)?.mul(&sd.invert()?)
    }

    /// Two-sided inverse by block elimination around `A`.
    pub fn minverse(&self) -> Result<SuperMatrix> {
        self.require_even()?;
        let sig = &self.sig;
        let (a, b, c, d) = self.blocks();
        let ainv = a.inverse(sig, "A")?;
        let ainv_b = ainv.mul(&b, sig)?;
        let c_ainv = c.mul(&ainv, sig)?;
        let schur = d.sub(&c.mul(&ainv_b, sig)?)?;
        let sinv = schur.inverse(sig, "D")?;
        let top_right = ainv_b.mul(&sinv, sig)?.neg();
        let bottom_left = sinv.mul(&c_ainv, sig)?.neg();
        let top_left = ainv.add(&ainv_b.mul(&sinv, sig)?.mul(&c_ainv, sig)?)?;
        Ok(Self::from_blocks(
            self.m,
            self.n,
            sig,
            [&top_left, &top_right, &bottom_left, &sinv],
        ))
    }

    /// Applies the matrix to a column vector.
    pub fn apply_to(&self, v: &[SuperPoly]) -> Result<Vec<SuperPoly>> {
        if v.len() != self.size() {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} for a {}-square matrix",
                v.len(),
                self.size()
            )));
        }
        let col = Dense {
            rows: v.len(),
            cols: 1,
            e: v.to_vec(),
        };
        let s = self.size();
        let me = Dense {
            rows: s,
            cols: s,
            e: self.entries.clone(),
        };
        Ok(me.mul(&col, &self.sig)?.e)
    }

    pub fn to_json(&self) -> MatrixJson {
        MatrixJson {
            m: self.m,
            n: self.n,
            entries: self
                .rows()
                .iter()
                .map(|r| r.iter().map(|x| x.to_string()).collect())
                .collect(),
        }
    }

    /// Reads the JSON encoding, parsing entries over `sig` and checking each
    /// entry's parity against its block position.
    pub fn from_json(json: &MatrixJson, sig: &Arc<RingSignature>) -> Result<SuperMatrix> {
        let rows = json
            .entries
            .iter()
            .map(|r| r.iter().map(|t| parse(t, sig)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let out = SuperMatrix::new(json.m, json.n, sig, rows)?;
        let s = out.size();
        for i in 0..s {
            for j in 0..s {
                let want = out.position_parity(i, j);
                if !out.get(i, j).has_parity(want) {
                    return Err(Error::ParityMisuse(format!(
                        "entry ({i},{j}) = {} should be {:?}",
                        out.get(i, j),
                        want
                    )));
                }
            }
        }
        Ok(out)
    }

    pub fn from_json_str(text: &str, sig: &Arc<RingSignature>) -> Result<SuperMatrix> {
        let json: MatrixJson =
            serde_json::from_str(text).map_err(|e| Error::Input(e.to_string()))?;
        Self::from_json(&json, sig)
    }
}

/// Wire form `{"m":2,"n":1,"entries":[["1","0","t1"],...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub m: usize,
    pub n: usize,
    pub entries: Vec<Vec<String>>,
}

impl MatrixJson {
    /// All expression strings, row by row.
    pub fn expressions(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().flatten().map(String::as_str)
    }
}

impl fmt::Display for SuperMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// The form `H = [[0,1,0],[−1,0,0],[0,0,−1]]` of size 2|1.
pub fn h_form(sig: &Arc<RingSignature>) -> SuperMatrix {
    let mut h = SuperMatrix::zero(2, 1, sig);
    h.entries[1] = SuperPoly::one(sig);
    h.entries[3] = SuperPoly::from_i64(sig, -1);
    h.entries[8] = SuperPoly::from_i64(sig, -1);
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superalg::FieldSpec;

    fn lam(q: usize) -> Arc<RingSignature> {
        RingSignature::grassmann(FieldSpec::Rationals, q).unwrap()
    }

    fn p(s: &Arc<RingSignature>, t: &str) -> SuperPoly {
        parse(t, s).unwrap()
    }

    #[test]
    fn elementary_products() {
        let s = lam(2);
        let e = |i, j| SuperMatrix::elementary(2, 1, &s, i, j).unwrap();
        assert_eq!(e(0, 1).matmul(&e(1, 2)).unwrap(), e(0, 2));
        assert!(e(0, 1).matmul(&e(0, 2)).unwrap().is_zero());
        let x = SuperMatrix::diag_i64(2, 1, &s, &[2, 3, 5]).unwrap();
        assert_eq!(SuperMatrix::identity(2, 1, &s).matmul(&x).unwrap(), x);
    }

    #[test]
    fn supertranspose_basics() {
        let s = lam(2);
        let id = SuperMatrix::identity(2, 1, &s);
        assert_eq!(id.supertranspose().unwrap(), id);
        // H has no odd blocks, so its supertranspose is the plain transpose
        let h = h_form(&s);
        let ht = SuperMatrix::from_fn(2, 1, &s, |i, j| Ok(h.get(j, i).clone())).unwrap();
        assert_eq!(h.supertranspose().unwrap(), ht);
        assert_ne!(ht, h);
        let mut x = SuperMatrix::identity(2, 1, &s);
        x.set(0, 2, p(&s, "t1")).unwrap();
        x.set(2, 1, p(&s, "t2")).unwrap();
        let st = x.supertranspose().unwrap();
        assert_eq!(*st.get(2, 0), p(&s, "-t1"));
        assert_eq!(*st.get(1, 2), p(&s, "t2"));
        let flipped = x.supertranspose_with(Convention::Flipped).unwrap();
        assert_eq!(*flipped.get(2, 0), p(&s, "t1"));
        assert_eq!(*flipped.get(1, 2), p(&s, "-t2"));
    }

    #[test]
    fn supertrace_examples() {
        let s = lam(1);
        assert_eq!(
            SuperMatrix::identity(2, 1, &s).supertrace().unwrap(),
            SuperPoly::from_i64(&s, 1)
        );
        let e = |i| SuperMatrix::elementary(2, 1, &s, i, i).unwrap();
        assert_eq!(e(0).supertrace().unwrap(), SuperPoly::from_i64(&s, 1));
        assert_eq!(e(2).supertrace().unwrap(), SuperPoly::from_i64(&s, -1));
    }

    #[test]
    fn berezinian_examples() {
        let s = RingSignature::builder(FieldSpec::Rationals)
            .laurent("a")
            .odd("t1")
            .build()
            .unwrap();
        assert!(SuperMatrix::identity(2, 1, &s).berezinian().unwrap().is_one());
        let a = p(&s, "a");
        assert_eq!(SuperMatrix::scalar(2, 1, &a).berezinian().unwrap(), a);
        let mut x = SuperMatrix::identity(2, 1, &s);
        x.set(0, 1, SuperPoly::one(&s)).unwrap();
        assert!(x.berezinian().unwrap().is_one());
    }

    #[test]
    fn berezinian_formulas_agree() {
        let s = lam(3);
        let x = SuperMatrix::new(
            2,
            1,
            &s,
            vec![
                vec![p(&s, "2 + t1*t2"), p(&s, "1"), p(&s, "t3")],
                vec![p(&s, "1"), p(&s, "1 - t2*t3"), p(&s, "t1 + t2")],
                vec![p(&s, "t2"), p(&s, "t1*t2*t3"), p(&s, "3 + t1*t3")],
            ],
        )
        .unwrap();
        assert_eq!(x.berezinian().unwrap(), x.berezinian_via_a().unwrap());
    }

    #[test]
    fn inverse_examples() {
        let s = lam(2);
        let id = SuperMatrix::identity(2, 1, &s);
        assert_eq!(id.minverse().unwrap(), id);
        let d = SuperMatrix::diag_i64(2, 1, &s, &[2, 3, 5]).unwrap();
        let q = |a: i64, b: i64| SuperPoly::constant(&s, num_rational::BigRational::new(a.into(), b.into()));
        assert_eq!(
            d.minverse().unwrap(),
            SuperMatrix::diag(2, 1, &[q(1, 2), q(1, 3), q(1, 5)]).unwrap()
        );
        let mut x = id.clone();
        x.set(0, 2, p(&s, "t1")).unwrap();
        let mut y = id.clone();
        y.set(0, 2, p(&s, "-t1")).unwrap();
        assert_eq!(x.minverse().unwrap(), y);
        assert!(x.is_invertible());
        assert!(!SuperMatrix::elementary(2, 1, &s, 0, 0).unwrap().is_invertible());
        assert!(id.is_invertible());
    }

    #[test]
    fn json_round_trip_and_parity_check() {
        let s = lam(2);
        let mut x = SuperMatrix::identity(2, 1, &s);
        x.set(1, 2, p(&s, "t1 - 2*t2")).unwrap();
        x.set(0, 0, p(&s, "3/2 + t1*t2")).unwrap();
        let json = serde_json::to_string(&x.to_json()).unwrap();
        assert_eq!(SuperMatrix::from_json_str(&json, &s).unwrap(), x);
        let bad = r#"{"m":2,"n":1,"entries":[["1","0","1"],["0","1","0"],["0","0","1"]]}"#;
        assert!(matches!(
            SuperMatrix::from_json_str(bad, &s),
            Err(Error::ParityMisuse(_))
        ));
    }
}
