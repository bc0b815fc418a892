use std::collections::BTreeSet;

use superkit::projective::{act, normalize_point, random_point, ProjectiveSpace};
use superkit::sampling::{random_even_unit, random_gl, sample_rng};
use superkit::{AlgebraMorphism, FieldSpec};

#[test]
fn chart_changes_satisfy_the_cocycle_condition() {
    for m in 1..=3 {
        for n in 0..=2 {
            let space = ProjectiveSpace::new(m, n, FieldSpec::Rationals, 0).unwrap();
            for i in 0..=m {
                for j in 0..=m {
                    for k in 0..=m {
                        if i == j || j == k {
                            continue;
                        }
                        let w: BTreeSet<usize> = [i, j, k].into_iter().collect();
                        let ij = space.chart_change_on(i, j, &w).unwrap();
                        let jk = space.chart_change_on(j, k, &w).unwrap();
                        let ik = if i == k {
                            AlgebraMorphism::identity(&space.chart_ring(i, &w).unwrap())
                        } else {
                            space.chart_change_on(i, k, &w).unwrap()
                        };
                        assert_eq!(ij.compose(&jk).unwrap(), ik, "P^{m}|{n}, ({i},{j},{k})");
                    }
                }
            }
        }
    }
}

#[test]
fn action_matches_induced_chart_maps() {
    let space = ProjectiveSpace::new(2, 1, FieldSpec::Rationals, 3).unwrap();
    let base = space.base().clone();
    let mut checked = 0;
    for s in 0..50 {
        let mut rng = sample_rng(13, s);
        let t = random_gl(3, 1, &base, &mut rng).unwrap();
        let p = random_point(2, 1, &base, &mut rng).unwrap();
        let q = act(&t, &p).unwrap();
        for i in p.charts() {
            if !q.charts().contains(&i) {
                continue;
            }
            let Ok(phi) = space.induced_chart_map(&t, i) else {
                continue;
            };
            let ev = space.evaluation(phi.target(), &p, i).unwrap();
            let expected = normalize_point(&q, i).unwrap();
            let names = (0..=2)
                .filter(|&k| k != i)
                .map(|k| space.even_name(i, k))
                .chain([space.odd_name(i, 0)]);
            let got: Vec<_> = names
                .map(|name| ev.apply(phi.image_of(name).unwrap()).unwrap())
                .collect();
            assert_eq!(got, expected);
            checked += 1;
        }
    }
    assert!(checked >= 20, "only {checked} comparisons were defined");
}

#[test]
fn scalars_act_trivially() {
    let space = ProjectiveSpace::new(2, 2, FieldSpec::Rationals, 3).unwrap();
    let base = space.base().clone();
    for s in 0..30 {
        let mut rng = sample_rng(14, s);
        let t = random_gl(3, 2, &base, &mut rng).unwrap();
        let c = random_even_unit(&base, &mut rng).unwrap();
        let p = random_point(2, 2, &base, &mut rng).unwrap();
        assert_eq!(act(&t.scale(&c).unwrap(), &p).unwrap(), act(&t, &p).unwrap());
    }
}

#[test]
fn sampled_points_lie_in_a_chart() {
    let space = ProjectiveSpace::new(3, 1, FieldSpec::Rationals, 3).unwrap();
    for s in 0..100 {
        let p = random_point(3, 1, space.base(), &mut sample_rng(15, s)).unwrap();
        assert!(!p.charts().is_empty());
    }
}
