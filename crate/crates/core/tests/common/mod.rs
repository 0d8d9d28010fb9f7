#![allow(dead_code)]

use cylindre::*;
use proptest::prelude::*;

pub fn poly(vars: &Vars, terms: &[(Vec<u32>, i64)]) -> Polynomial {
    Polynomial::from_terms(
        vars,
        terms.iter().map(|(e, c)| (e.clone(), Rational::from_integer((*c).into()))),
    )
}

pub fn var_names(n: usize) -> Vars {
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    vars_from(&names)
}

/// Random terms with total degree at most `deg` and coefficients in `-h..=h`.
pub fn arb_terms(n: usize, deg: u32, h: i64, max_terms: usize) -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
    prop::collection::vec(
        (prop::collection::vec(0..=deg, n), -h..=h),
        0..=max_terms,
    )
    .prop_map(move |ts| {
        ts.into_iter()
            .filter(|(e, _)| e.iter().sum::<u32>() <= deg)
            .collect()
    })
}

pub fn arb_poly(n: usize, deg: u32, h: i64, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    arb_terms(n, deg, h, max_terms).prop_map(move |t| poly(&var_names(n), &t))
}

pub fn arb_rational(h: i64, den: i64) -> impl Strategy<Value = Rational> {
    (-h..=h, 1..=den).prop_map(|(a, b)| Rational::new(a.into(), b.into()))
}
