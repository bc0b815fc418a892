//! Deterministic random elements for property runs. Every sample is drawn
//! from its own ChaCha stream keyed by `(seed, index)`, so samples can be
//! generated in any order or in parallel.

use std::sync::Arc;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::superalg::{Coeff, Monomial, RingSignature, SuperPoly};
use crate::supermatrix::SuperMatrix;

pub type SampleRng = ChaCha8Rng;

pub fn sample_rng(seed: u64, index: u64) -> SampleRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn small_coeff(rng: &mut SampleRng, lo: i64, hi: i64) -> Coeff {
    Coeff::from_integer(rng.gen_range(lo..=hi).into())
}

/// Sum of odd-generator monomials of the given degrees, with coefficients
/// drawn uniformly from `{−2, …, 2}`.
pub fn random_grassmann(
    sig: &Arc<RingSignature>,
    rng: &mut SampleRng,
    degrees: &[u32],
) -> Result<SuperPoly> {
    let q = sig.num_odd();
    let ne = sig.num_even();
    let mut terms = Vec::new();
    for mask in 1u64..(1u64 << q) {
        if degrees.contains(&mask.count_ones()) {
            terms.push((Monomial::new(vec![0; ne], mask), small_coeff(rng, -2, 2)));
        }
    }
    SuperPoly::from_terms(sig, terms)
}

/// Odd element of degree 1 and 3 in the odd generators.
pub fn random_odd(sig: &Arc<RingSignature>, rng: &mut SampleRng) -> Result<SuperPoly> {
    random_grassmann(sig, rng, &[1, 3])
}

/// Even nilpotent element of degree 2 in the odd generators.
pub fn random_even_nilpotent(sig: &Arc<RingSignature>, rng: &mut SampleRng) -> Result<SuperPoly> {
    random_grassmann(sig, rng, &[2])
}

/// Nonzero constant in `{±1, ±2, ±3}` plus an even nilpotent.
pub fn random_even_unit(sig: &Arc<RingSignature>, rng: &mut SampleRng) -> Result<SuperPoly> {
    let mut c = rng.gen_range(1..=3i64);
    if rng.gen_bool(0.5) {
        c = -c;
    }
    SuperPoly::from_i64(sig, c).add(&random_even_nilpotent(sig, rng)?)
}

/// Integer matrix of determinant ±1 or ±2 built from elementary moves.
fn integer_body(k: usize, rng: &mut SampleRng) -> Vec<i64> {
    let mut a = vec![0i64; k * k];
    for i in 0..k {
        a[i * k + i] = if rng.gen_bool(0.5) { 1 } else { -1 };
    }
    if k > 0 {
        let i = rng.gen_range(0..k);
        a[i * k + i] *= rng.gen_range(1..=2);
    }
    for _ in 0..2 * k {
        if k < 2 {
            break;
        }
        let r = rng.gen_range(0..k);
        let s = rng.gen_range(0..k);
        if r == s {
            continue;
        }
        let f = rng.gen_range(-1..=1i64);
        for c in 0..k {
            a[r * k + c] += f * a[s * k + c];
        }
    }
    a
}

/// Invertible even supermatrix of size `m|n`: an integer body of unit
/// determinant perturbed by even nilpotents, with random odd blocks.
pub fn random_gl(
    m: usize,
    n: usize,
    sig: &Arc<RingSignature>,
    rng: &mut SampleRng,
) -> Result<SuperMatrix> {
    let a = integer_body(m, rng);
    let d = integer_body(n, rng);
    let mut out = SuperMatrix::zero(m, n, sig);
    for i in 0..m + n {
        for j in 0..m + n {
            let v = match (i < m, j < m) {
                (true, true) => SuperPoly::from_i64(sig, a[i * m + j])
                    .add(&random_even_nilpotent(sig, rng)?)?,
                (false, false) => SuperPoly::from_i64(sig, d[(i - m) * n + j - m])
                    .add(&random_even_nilpotent(sig, rng)?)?,
                _ => random_odd(sig, rng)?,
            };
            out.set(i, j, v)?;
        }
    }
    Ok(out)
}
