use std::sync::Arc;

use superkit::linebundle::{
    degree, is_regular_u0, is_regular_u1, normalize_cocycle, overlap_signature, random_cocycle,
    random_regular_unit, Cocycle,
};
use superkit::sampling::sample_rng;
use superkit::{FieldSpec, RingSignature, SuperPoly};

fn ring() -> Arc<RingSignature> {
    overlap_signature(FieldSpec::Rationals, 3).unwrap()
}

fn x_pow(sig: &Arc<RingSignature>, n: i32) -> SuperPoly {
    SuperPoly::gen(sig, "x").unwrap().pow(n as i64).unwrap()
}

#[test]
fn synthetic_cocycles_normalize() {
    let sig = ring();
    for i in 0..100 {
        let n = (i % 7) as i32 - 3;
        let g = random_cocycle(&sig, n, &mut sample_rng(20, i)).unwrap();
        let t = normalize_cocycle(&Cocycle::new(g.clone()).unwrap()).unwrap();
        assert_eq!(t.n, n);
        assert!(is_regular_u0(&t.h0).unwrap());
        assert!(is_regular_u1(&t.h1).unwrap());
        let lhs = t.h0.mul(&g).unwrap().mul(&t.h1.invert().unwrap()).unwrap();
        assert_eq!(lhs, x_pow(&sig, n));
    }
}

#[test]
fn degree_is_additive() {
    let sig = ring();
    for i in 0..30 {
        let mut rng = sample_rng(21, i);
        let (a, b) = ((i % 5) as i32 - 2, (i % 3) as i32 - 1);
        let g = random_cocycle(&sig, a, &mut rng).unwrap();
        let h = random_cocycle(&sig, b, &mut rng).unwrap();
        assert_eq!(degree(&g.mul(&h).unwrap()).unwrap(), a + b);
    }
}

#[test]
fn degree_is_coboundary_invariant() {
    let sig = ring();
    for i in 0..30 {
        let mut rng = sample_rng(22, i);
        let n = (i % 7) as i32 - 3;
        let g = random_cocycle(&sig, n, &mut rng).unwrap();
        let h0 = random_regular_unit(&sig, 0, &mut rng).unwrap();
        let h1 = random_regular_unit(&sig, 1, &mut rng).unwrap();
        let moved = h0.mul(&g).unwrap().mul(&h1.invert().unwrap()).unwrap();
        assert_eq!(degree(&moved).unwrap(), degree(&g).unwrap());
    }
}

#[test]
fn prime_field_with_enough_room() {
    let sig = overlap_signature(FieldSpec::prime(7).unwrap(), 3).unwrap();
    for i in 0..20 {
        let n = (i % 5) as i32 - 2;
        let g = random_cocycle(&sig, n, &mut sample_rng(23, i)).unwrap();
        let t = normalize_cocycle(&Cocycle::new(g).unwrap()).unwrap();
        assert_eq!(t.n, n);
    }
}
