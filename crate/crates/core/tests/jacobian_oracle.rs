mod support;

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use theta_lab::{CurveError, CurvePoint, FormalDivisor, PrimeField};

use support::oracle::Ideal;
use support::{f13, f13_generic, f5, ideal_of, oracle_h0, point_ideal};

#[test]
fn oracle_point_counts() {
    let (_, o) = f13();
    assert_eq!(o.point_counts().0, 14);
    assert_eq!(o.jacobian_order(), 144);
    let (_, o) = f5();
    assert_eq!(o.point_counts().0, 6);
    assert_eq!(o.jacobian_order(), 36);
}

#[test]
fn enumeration_size_matches_point_counts() {
    for (c, o) in [f13(), f5()] {
        let all = c.enumerate_mumford().unwrap();
        assert_eq!(all.len() as u64, o.jacobian_order());
        assert_eq!(c.enumerate_pic(1).unwrap().len(), all.len());
        assert_eq!(c.enumerate_pic(-3).unwrap().len(), all.len());
    }
}

#[test]
fn enumerated_classes_are_pairwise_inequivalent() {
    let (c, o) = f5();
    let all = c.enumerate_mumford().unwrap();
    let ideals: Vec<Ideal> = all.iter().map(|m| ideal_of(&o, m)).collect();
    for (i, a) in ideals.iter().enumerate() {
        for (j, b) in ideals.iter().enumerate() {
            assert_eq!(o.same_class(a, b), i == j, "{} vs {}", all[i], all[j]);
        }
    }
}

#[test]
fn cantor_add_matches_oracle() {
    for (c, o) in [f13(), f5()] {
        let all = c.enumerate_mumford().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..60 {
            let a = all.choose(&mut rng).unwrap();
            let b = all.choose(&mut rng).unwrap();
            let s = c.cantor_add(a, b);
            let lhs = o.mul(&ideal_of(&o, a), &ideal_of(&o, b));
            assert!(o.same_class(&lhs, &ideal_of(&o, &s)), "{a} + {b} = {s}");
            // A wrong sum must be rejected.
            let wrong = c.cantor_add(&s, &c.point_divisor(&c.points().unwrap()[1]).unwrap());
            assert!(!o.same_class(&lhs, &ideal_of(&o, &wrong)));
        }
    }
}

#[test]
fn full_addition_table_over_f5() {
    let (c, o) = f5();
    let all = c.enumerate_mumford().unwrap();
    let index: std::collections::HashMap<_, _> = all
        .iter()
        .enumerate()
        .map(|(i, m)| (m.clone(), i))
        .collect();
    for a in &all {
        for b in &all {
            let s = c.cantor_add(a, b);
            assert!(index.contains_key(&s));
        }
        let lhs = o.mul(&ideal_of(&o, a), &ideal_of(&o, a));
        assert!(o.same_class(&lhs, &ideal_of(&o, &c.double(a))));
    }
}

fn formal_ideal(o: &support::oracle::Oracle, d: &FormalDivisor<PrimeField>) -> Ideal {
    // Negative multiplicities contribute conjugate ideals.
    let mut acc = o.unit_ideal();
    for (p, n) in d.terms() {
        let i = point_ideal(o, p);
        let i = if *n < 0 { o.conj(&i) } else { i };
        for _ in 0..n.unsigned_abs() {
            acc = o.mul(&acc, &i);
        }
    }
    acc
}

#[test]
fn reduce_class_matches_oracle_equivalence() {
    let (c, o) = f13();
    let pts = c.points().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let random_sum = |rng: &mut ChaCha8Rng| {
        let mut terms: Vec<(CurvePoint<PrimeField>, i64)> = (0..3)
            .map(|_| (pts.choose(rng).unwrap().clone(), rng.gen_range(-2..=2)))
            .collect();
        let deg: i64 = terms.iter().map(|t| t.1).sum();
        terms.push((CurvePoint::Infinity, -deg));
        FormalDivisor::new(terms)
    };
    let mut equal_seen = 0;
    for _ in 0..150 {
        let d1 = random_sum(&mut rng);
        // Every other pair is forced equivalent by adding a principal divisor.
        let d2 = if rng.gen_bool(0.5) {
            random_sum(&mut rng)
        } else {
            let p = pts.choose(&mut rng).unwrap().clone();
            let mut t = d1.terms().to_vec();
            t.push((p.clone(), 1));
            t.push((c.involution(&p), 1));
            t.push((CurvePoint::Infinity, -2));
            FormalDivisor::new(t)
        };
        let c1 = c.reduce_class(&d1).unwrap();
        let c2 = c.reduce_class(&d2).unwrap();
        assert_eq!(c1.degree(), 0);
        let same = o.same_class(&formal_ideal(&o, &d1), &formal_ideal(&o, &d2));
        assert_eq!(c1 == c2, same);
        equal_seen += usize::from(same);
        // Reducing the support of a reduced representative is idempotent.
        if let Ok(support) = c.support(c1.base()) {
            let mut t: Vec<_> = support.into_iter().map(|p| (p, 1)).collect();
            t.push((CurvePoint::Infinity, -(c1.base().weight() as i64)));
            assert_eq!(c.reduce_class(&FormalDivisor::new(t)).unwrap(), c1);
        }
    }
    assert!(equal_seen > 30);
}

#[test]
fn h0_matches_oracle_for_all_small_degrees() {
    let (c, o) = f13();
    for d in -1..=4 {
        for class in c.enumerate_pic(d).unwrap() {
            assert_eq!(c.h0(&class) as usize, oracle_h0(&o, &class), "{class}");
        }
    }
}

#[test]
fn km2_points_match_pair_search() {
    let (c, o) = f13();
    let pts = c.points().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let all = c.enumerate_pic(0).unwrap();
    let mut rational = 0;
    for _ in 0..40 {
        let m = all.choose(&mut rng).unwrap();
        let im = ideal_of(&o, m.base());
        let target = o.mul(&im, &im);
        let mut found = HashSet::new();
        for (i, q1) in pts.iter().enumerate() {
            for q2 in &pts[i..] {
                let pair = o.mul(&point_ideal(&o, q1), &point_ideal(&o, q2));
                if o.same_class(&pair, &target) {
                    found.insert((q1.clone(), q2.clone()));
                }
            }
        }
        match c.km2_points(m) {
            Ok((q1, q2)) => {
                rational += 1;
                assert_eq!(found.len(), 1, "{m}");
                let (a, b) = found.into_iter().next().unwrap();
                assert!((a == q1 && b == q2) || (a == q2 && b == q1));
            }
            Err(CurveError::OrderTwo) => {
                // Every fibre {q, ιq} of x lies in |K|.
                let w = pts.iter().filter(|p| c.is_weierstrass(p)).count();
                assert_eq!(found.len(), w + (pts.len() - w) / 2);
            }
            Err(CurveError::IrrationalPoints(_)) => assert!(found.is_empty()),
            Err(e) => panic!("unexpected {e}"),
        }
    }
    assert!(rational > 10);
}

#[test]
fn theta_intersection_matches_enumeration() {
    for (c, o) in [f13(), f13_generic()] {
        let pic1 = c.enumerate_pic(1).unwrap();
        let k = c.canonical_class();
        let (mut distinct, mut tangent, mut irrational) = (0, 0, 0);
        for m in c.enumerate_pic(0).unwrap() {
            let found: HashSet<_> = pic1
                .iter()
                .filter(|l| {
                    oracle_h0(&o, &c.add_classes(l, &m)) >= 1
                        && oracle_h0(&o, &c.add_classes(&c.sub_classes(&k, l), &m)) >= 1
                })
                .cloned()
                .collect();
            match c.theta_translate_intersection(&m) {
                Ok((l1, l2)) => {
                    assert_eq!(c.serre_involution(&l1).unwrap(), l2);
                    let expected: HashSet<_> = [l1.clone(), l2.clone()].into_iter().collect();
                    assert_eq!(found, expected, "{m}");
                    if l1 == l2 {
                        tangent += 1;
                    } else {
                        distinct += 1;
                    }
                }
                // Conjugate points over F_169 give no rational intersection.
                Err(CurveError::IrrationalPoints(_)) => {
                    assert!(found.is_empty());
                    irrational += 1;
                }
                // M = -M, so the two translates coincide.
                Err(CurveError::OrderTwo) => assert!(c.add_classes(&m, &m).base().is_identity()),
                Err(e) => panic!("unexpected {e}"),
            }
        }
        assert!(distinct + tangent + irrational > 100);
    }
    // Every translate of the x^5 - x curve is tangent; the generic curve is not.
    let (c, _) = f13();
    assert!(c
        .enumerate_pic(0)
        .unwrap()
        .iter()
        .filter_map(|m| c.theta_translate_intersection(m).ok())
        .all(|(a, b)| a == b));
    let (c, _) = f13_generic();
    assert!(c
        .enumerate_pic(0)
        .unwrap()
        .iter()
        .filter_map(|m| c.theta_translate_intersection(m).ok())
        .any(|(a, b)| a != b));
}
