mod common;

use common::*;
use cylindre::roots::{isolate_dense, SturmSequence};
use cylindre::*;
use proptest::prelude::*;
use std::cmp::Ordering;

fn x() -> Vars {
    vars_from(&["x"])
}

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn isolation_finds_rational_roots(
        roots in prop::collection::btree_set((-30i64..=30, 1i64..=5), 0..=4),
        b in -6i64..=6,
        c in 1i64..=20,
    ) {
        let mut values: Vec<Rational> = roots.iter().map(|(n, d)| r(*n, *d)).collect();
        values.sort();
        values.dedup();
        let v = x();
        // x^2 + b x + (b^2 + c) has negative discriminant
        let mut f = poly(&v, &[(vec![2], 1), (vec![1], b), (vec![0], b * b + c)]);
        for q in &values {
            let lin = &Polynomial::variable(&v, 0) - &Polynomial::constant(&v, q.clone());
            f = &f * &lin;
        }
        let found = isolate_real_roots(&f).unwrap();
        prop_assert_eq!(found.len(), values.len());
        for (a, q) in found.iter().zip(&values) {
            prop_assert!(a.lo() <= q && q <= a.hi());
            prop_assert_eq!(a.cmp_rational(q), Ordering::Equal);
        }
    }

    #[test]
    fn sturm_count_matches(coeffs in prop::collection::vec(-20i64..=20, 2..=9)) {
        let d = DensePoly::from_ints(&coeffs);
        prop_assume!(d.deg() >= 1);
        let d = d.square_free();
        let s = SturmSequence::new(&d);
        let found = isolate_dense(&d);
        prop_assert_eq!(found.len(), s.count_all());
        for w in found.windows(2) {
            prop_assert_eq!(w[0].cmp_exact(&w[1]), Ordering::Less);
        }
        for c in &found {
            let iv = c.interval();
            if iv.lo != iv.hi {
                prop_assert_eq!(s.count(&iv.lo, &iv.hi), 1);
                prop_assert_eq!(s.variations_at(&iv.lo) - s.variations_at(&iv.hi), 1);
            } else {
                prop_assert_eq!(d.sign_at(&iv.lo), Sign::Zero);
            }
        }
    }

    #[test]
    fn refinement_keeps_root(coeffs in prop::collection::vec(-20i64..=20, 3..=7), k in 1u32..=30) {
        let d = DensePoly::from_ints(&coeffs);
        prop_assume!(d.deg() >= 1);
        let width = r(1, 1 << k.min(30));
        for c in isolate_dense(&d) {
            if let Coord::Algebraic(a) = c {
                let b = a.refine(&width);
                prop_assert!(b.width() <= width);
                prop_assert!(a.lo() <= b.lo() && b.hi() <= a.hi());
                let (sl, sh) = (b.defining().sign_at(b.lo()), b.defining().sign_at(b.hi()));
                prop_assert!(sl != sh && sl != Sign::Zero && sh != Sign::Zero);
                prop_assert_eq!(SturmSequence::new(b.defining()).count(b.lo(), b.hi()), 1);
            }
        }
    }
}

fn algebraic_points() -> Vec<SamplePoint> {
    let v = x();
    let sqrt = |k: i64| {
        isolate_real_roots(&poly(&v, &[(vec![2], 1), (vec![0], -k)]))
            .unwrap()
            .into_iter()
            .map(Coord::Algebraic)
            .collect::<Vec<_>>()
    };
    let cube = isolate_real_roots(&poly(&v, &[(vec![3], 1), (vec![1], -1), (vec![0], -1)]))
        .unwrap()
        .into_iter()
        .map(Coord::Algebraic)
        .collect::<Vec<_>>();
    let mut out = Vec::new();
    let firsts: Vec<Coord> = sqrt(2).into_iter().chain(cube).chain([Coord::Rational(r(1, 3))]).collect();
    let seconds: Vec<Coord> = sqrt(3).into_iter().chain(sqrt(2)).chain([Coord::Rational(r(-2, 1))]).collect();
    for a in &firsts {
        for b in &seconds {
            out.push(SamplePoint::new(vec![a.clone(), b.clone()]));
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn sign_at_is_multiplicative(p in arb_poly(2, 3, 5, 4), q in arb_poly(2, 3, 5, 4)) {
        let pq = &p * &q;
        let p2 = &p * &p;
        for s in algebraic_points() {
            let a = sign_at(&p, &s).unwrap();
            let b = sign_at(&q, &s).unwrap();
            prop_assert_eq!(sign_at(&pq, &s).unwrap(), a.mul(b));
            prop_assert!(sign_at(&p2, &s).unwrap() != Sign::Negative);
            // cross-check against a floating evaluation when it is decisive
            let f = s.to_f64();
            let approx: f64 = p.terms().map(|(e, c)| {
                rational::to_f64(c) * f[0].powi(e[0] as i32) * f[1].powi(e[1] as i32)
            }).sum();
            if approx.abs() > 1e-6 {
                prop_assert_eq!(a, if approx > 0.0 { Sign::Positive } else { Sign::Negative });
            }
        }
    }
}

#[test]
fn sign_at_detects_exact_zeros() {
    let v = vars_from(&["x", "y"]);
    let pts = algebraic_points();
    // x^2 - 2 vanishes at the first two points' x, y^2 - 3 at the first y's
    let p = poly(&v, &[(vec![2, 0], 1), (vec![0, 0], -2)]);
    let q = poly(&v, &[(vec![0, 2], 1), (vec![0, 0], -3)]);
    let sum = poly(&v, &[(vec![2, 0], 1), (vec![0, 2], 1), (vec![0, 0], -5)]);
    assert_eq!(sign_at(&p, &pts[0]).unwrap(), Sign::Zero);
    assert_eq!(sign_at(&q, &pts[0]).unwrap(), Sign::Zero);
    assert_eq!(sign_at(&sum, &pts[0]).unwrap(), Sign::Zero);
    // x*y - sqrt(6) sign: x = -sqrt2, y = -sqrt3 gives +sqrt6
    let xy6 = poly(&v, &[(vec![2, 2], 1), (vec![0, 0], -6)]);
    assert_eq!(sign_at(&xy6, &pts[0]).unwrap(), Sign::Zero);
}
