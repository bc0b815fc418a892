use superkit::sampling::{random_even_unit, random_gl, sample_rng};
use superkit::supergroups::{is_c, sample_sc};
use superkit::susy::{is_susy_preserving, transformed_distribution_factor};
use superkit::{FieldSpec, RingSignature};

#[test]
fn sc_samples_are_susy_preserving() {
    for i in 0..100 {
        let g = sample_sc(3, i).unwrap();
        let v = is_susy_preserving(&g).unwrap();
        assert!(v.preserving);
        assert!(v.t.unwrap().is_one());
        let h = transformed_distribution_factor(&g).unwrap().expect("distribution preserved");
        assert!(h.is_even() && !h.body().is_zero());
    }
}

#[test]
fn verdict_agrees_with_c_membership() {
    let sig = RingSignature::grassmann(FieldSpec::Rationals, 3).unwrap();
    let mut non_members = 0;
    for i in 0..100 {
        let g = random_gl(2, 1, &sig, &mut sample_rng(30, i)).unwrap();
        let v = is_susy_preserving(&g).unwrap();
        let (in_c, z) = is_c(&g).unwrap();
        assert_eq!(v.preserving, in_c);
        if in_c {
            assert_eq!(v.t.unwrap(), z);
        } else {
            non_members += 1;
            assert!(transformed_distribution_factor(&g).unwrap().is_none());
        }
    }
    assert!(non_members > 50);
}

#[test]
fn lift_invariance() {
    let sig = RingSignature::grassmann(FieldSpec::Rationals, 3).unwrap();
    for i in 0..20 {
        let mut rng = sample_rng(31, i);
        let c = random_even_unit(&sig, &mut rng).unwrap();
        for g in [sample_sc(3, 500 + i).unwrap(), random_gl(2, 1, &sig, &mut rng).unwrap()] {
            let a = is_susy_preserving(&g).unwrap().preserving;
            let b = is_susy_preserving(&g.scale(&c).unwrap()).unwrap().preserving;
            assert_eq!(a, b);
        }
    }
}
