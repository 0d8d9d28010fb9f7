//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! A [`Polynomial`] carries its ordered variable list. Terms live in a
//! `BTreeMap` keyed by exponent vectors (lexicographic order), zero
//! coefficients are never stored, so structural equality is polynomial
//! equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::dense::DensePoly;
use crate::error::{Error, Result};
use crate::rational::{format_rational, gcd_of_numerators, lcm_of_denominators, Rational};

/// Ordered variable names shared between polynomials.
pub type Vars = Arc<[String]>;

pub type Exponents = Vec<u32>;

pub fn vars_from<S: AsRef<str>>(names: &[S]) -> Vars {
    names.iter().map(|s| s.as_ref().to_string()).collect::<Vec<_>>().into()
}

/// Checks that names are non-empty identifiers and pairwise distinct.
pub fn validate_vars(vars: &Vars) -> Result<()> {
    for (i, v) in vars.iter().enumerate() {
        let ok = v
            .chars()
            .next()
            .map(|c| c.is_ascii_alphabetic() || c == '_')
            .unwrap_or(false)
            && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !ok {
            return Err(Error::InvalidArgument(format!("bad variable name '{v}'")));
        }
        if vars[..i].contains(v) {
            return Err(Error::DuplicateVariable(v.clone()));
        }
    }
    Ok(())
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    vars: Vars,
    terms: BTreeMap<Exponents, Rational>,
}

impl Polynomial {
    pub fn zero(vars: &Vars) -> Self {
        Polynomial {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &Vars, c: Rational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    pub fn one(vars: &Vars) -> Self {
        Self::constant(vars, Rational::one())
    }

    /// The polynomial `x_i`.
    pub fn variable(vars: &Vars, i: usize) -> Self {
        assert!(i < vars.len(), "variable index out of range");
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        Self::monomial(vars, e, Rational::one())
    }

    pub fn var_named(vars: &Vars, name: &str) -> Result<Self> {
        let i = index_of(vars, name)?;
        Ok(Self::variable(vars, i))
    }

    pub fn monomial(vars: &Vars, exps: Exponents, c: Rational) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector length");
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn from_terms(vars: &Vars, terms: impl IntoIterator<Item = (Exponents, Rational)>) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        index_of(&self.vars, name)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponents, &Rational)> + '_ {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&k| k == 0))
    }

    /// `Some(c)` when the polynomial is the constant `c` (including zero).
    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_zero() {
            Some(Rational::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn coefficient(&self, e: &[u32]) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|e| e[i]).max().unwrap_or(0)
    }

    pub fn depends_on(&self, i: usize) -> bool {
        self.terms.keys().any(|e| e[i] > 0)
    }

    pub fn used_vars(&self) -> Vec<usize> {
        (0..self.nvars()).filter(|&i| self.depends_on(i)).collect()
    }

    /// Highest variable index the polynomial depends on.
    pub fn level(&self) -> Option<usize> {
        (0..self.nvars()).rev().find(|&i| self.depends_on(i))
    }

    /// Lexicographically largest term.
    pub fn leading_term(&self) -> Option<(&Exponents, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one(&self.vars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    fn check_same_vars(&self, other: &Self) {
        if !Arc::ptr_eq(&self.vars, &other.vars) && self.vars != other.vars {
            panic!(
                "polynomials over different variable lists: [{}] vs [{}]",
                self.vars.join(","),
                other.vars.join(",")
            );
        }
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.nvars(),
                got: point.len(),
            });
        }
        let powers = power_table(point, |i| self.degree_in(i));
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    t *= &powers[i][k as usize];
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Substitutes `x_i := value`; the variable list is unchanged.
    pub fn substitute_value(&self, i: usize, value: &Rational) -> Self {
        let d = self.degree_in(i) as usize;
        let mut pw = Vec::with_capacity(d + 1);
        pw.push(Rational::one());
        for k in 1..=d {
            let next = &pw[k - 1] * value;
            pw.push(next);
        }
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let k = e2[i] as usize;
            e2[i] = 0;
            out.add_term(e2, c * &pw[k]);
        }
        out
    }

    /// Substitutes `x_i := q` where `q` is over the same variable list.
    pub fn substitute(&self, i: usize, q: &Polynomial) -> Self {
        self.check_same_vars(q);
        let coeffs = self.coefficients_in_place(i);
        // Horner in q
        let mut acc = Self::zero(&self.vars);
        for c in coeffs.iter().rev() {
            acc = &(&acc * q) + c;
        }
        acc
    }

    /// Replaces every variable `x_i` by `subs[i]`; all substitutes share one
    /// target variable list.
    pub fn compose(&self, subs: &[Polynomial]) -> Result<Self> {
        if subs.len() != self.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.nvars(),
                got: subs.len(),
            });
        }
        let Some(first) = subs.first() else {
            return Ok(self.clone());
        };
        let target = first.vars.clone();
        for s in subs {
            if s.vars != target {
                return Err(Error::VariableMismatch(target.join(","), s.vars.join(",")));
            }
        }
        let mut powers: Vec<Vec<Polynomial>> = Vec::with_capacity(subs.len());
        for (i, s) in subs.iter().enumerate() {
            let d = self.degree_in(i) as usize;
            let mut pw = vec![Polynomial::one(&target)];
            for k in 1..=d {
                let next = &pw[k - 1] * s;
                pw.push(next);
            }
            powers.push(pw);
        }
        let mut out = Polynomial::zero(&target);
        for (e, c) in &self.terms {
            let mut t = Polynomial::constant(&target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    t = &t * &powers[i][k as usize];
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }

    pub fn derivative(&self, name: &str) -> Result<Self> {
        let i = self.var_index(name)?;
        Ok(self.derivative_at(i))
    }

    /// Formal partial derivative with respect to `x_i`.
    pub fn derivative_at(&self, i: usize) -> Self {
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            let k = e2[i];
            e2[i] -= 1;
            out.add_term(e2, c * Rational::from_integer(BigInt::from(k)));
        }
        out
    }

    /// Re-expresses the polynomial over another variable list, matching by
    /// name. Fails if a variable in use is missing from `vars`.
    pub fn with_vars(&self, vars: &Vars) -> Result<Self> {
        let mut map = Vec::with_capacity(self.nvars());
        for (i, v) in self.vars.iter().enumerate() {
            match vars.iter().position(|w| w == v) {
                Some(j) => map.push(Some(j)),
                None if self.depends_on(i) => return Err(Error::UnknownVariable(v.clone())),
                None => map.push(None),
            }
        }
        let mut out = Self::zero(vars);
        for (e, c) in &self.terms {
            let mut e2 = vec![0; vars.len()];
            for (i, &k) in e.iter().enumerate() {
                if let Some(j) = map[i] {
                    e2[j] = k;
                }
            }
            out.add_term(e2, c.clone());
        }
        Ok(out)
    }

    /// Keeps only the first `k` variables. Panics if a dropped variable is used.
    pub fn truncate_vars(&self, k: usize) -> Self {
        let vars: Vars = self.vars[..k].to_vec().into();
        self.with_vars(&vars)
            .expect("truncate_vars: polynomial uses a dropped variable")
    }

    /// Coefficients with respect to `x_i`, each over the variable list with
    /// `x_i` removed. Index `j` holds the coefficient of `x_i^j`.
    pub fn coefficients_in(&self, i: usize) -> Vec<Polynomial> {
        let rest: Vars = self
            .vars
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, v)| v.clone())
            .collect::<Vec<_>>()
            .into();
        let d = self.degree_in(i) as usize;
        let mut out = vec![Polynomial::zero(&rest); if self.is_zero() { 0 } else { d + 1 }];
        for (e, c) in &self.terms {
            let k = e[i] as usize;
            let mut e2 = e.clone();
            e2.remove(i);
            out[k].add_term(e2, c.clone());
        }
        out
    }

    /// Coefficients with respect to `x_i`, kept over the full variable list.
    pub fn coefficients_in_place(&self, i: usize) -> Vec<Polynomial> {
        let d = self.degree_in(i) as usize;
        let mut out = vec![Polynomial::zero(&self.vars); if self.is_zero() { 0 } else { d + 1 }];
        for (e, c) in &self.terms {
            let k = e[i] as usize;
            let mut e2 = e.clone();
            e2[i] = 0;
            out[k].add_term(e2, c.clone());
        }
        out
    }

    /// Inverse of [`Polynomial::coefficients_in`].
    pub fn from_coefficients(vars: &Vars, i: usize, coeffs: &[Polynomial]) -> Self {
        let mut out = Self::zero(vars);
        for (k, c) in coeffs.iter().enumerate() {
            assert_eq!(c.nvars() + 1, vars.len(), "coefficient variable count");
            for (e, v) in &c.terms {
                let mut e2 = e.clone();
                e2.insert(i, k as u32);
                out.add_term(e2, v.clone());
            }
        }
        out
    }

    /// Multiplies by `x_i^k`.
    pub fn shift(&self, i: usize, k: u32) -> Self {
        Polynomial {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e2 = e.clone();
                    e2[i] += k;
                    (e2, c.clone())
                })
                .collect(),
        }
    }

    /// Exact division, `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        self.check_same_vars(d);
        if d.is_zero() {
            return None;
        }
        if let Some(c) = d.as_constant() {
            return Some(self.scale(&c.recip()));
        }
        let (lead_e, lead_c) = d.leading_term().map(|(e, c)| (e.clone(), c.clone()))?;
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(&self.vars);
        while let Some((e, c)) = rem.leading_term() {
            if !e.iter().zip(&lead_e).all(|(a, b)| a >= b) {
                return None;
            }
            let qe: Exponents = e.iter().zip(&lead_e).map(|(a, b)| a - b).collect();
            let qc = c / &lead_c;
            for (de, dc) in &d.terms {
                let te: Exponents = de.iter().zip(&qe).map(|(a, b)| a + b).collect();
                rem.add_term(te, -(dc * &qc));
            }
            quot.add_term(qe, qc);
        }
        Some(quot)
    }

    /// Writes `self = c * pp` where `pp` has coprime integer coefficients and
    /// a positive lexicographically-leading coefficient. Zero maps to `(0, 0)`.
    pub fn primitive_part(&self) -> (Rational, Polynomial) {
        if self.is_zero() {
            return (Rational::zero(), self.clone());
        }
        let l = lcm_of_denominators(self.terms.values());
        let scaled: Vec<Rational> = self
            .terms
            .values()
            .map(|c| c * Rational::from_integer(l.clone()))
            .collect();
        let g = gcd_of_numerators(scaled.iter());
        let mut content = Rational::new(g, l);
        if self.leading_term().map(|(_, c)| c.is_negative()).unwrap_or(false) {
            content = -content;
        }
        (content.clone(), self.scale(&content.recip()))
    }

    /// Primitive part only; see [`Polynomial::primitive_part`].
    pub fn normalized(&self) -> Polynomial {
        self.primitive_part().1
    }

    /// Dense univariate form in `x_i` when no other variable occurs.
    pub fn to_dense(&self, i: usize) -> Option<DensePoly> {
        if (0..self.nvars()).any(|j| j != i && self.depends_on(j)) {
            return None;
        }
        let d = self.degree_in(i) as usize;
        let mut coeffs = vec![Rational::zero(); d + 1];
        for (e, c) in &self.terms {
            coeffs[e[i] as usize] = c.clone();
        }
        Some(DensePoly::new(coeffs))
    }

    pub fn from_dense(vars: &Vars, i: usize, p: &DensePoly) -> Self {
        let mut out = Self::zero(vars);
        for (k, c) in p.coeffs().iter().enumerate() {
            let mut e = vec![0; vars.len()];
            e[i] = k as u32;
            out.add_term(e, c.clone());
        }
        out
    }

    /// Homogeneous part of total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Polynomial {
        Polynomial {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() == d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Largest absolute coefficient value.
    pub fn height(&self) -> Rational {
        self.terms
            .values()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(Rational::zero)
    }

    pub fn display_terms(&self) -> Vec<(Exponents, Rational)> {
        let mut v: Vec<(Exponents, Rational)> =
            self.terms.iter().map(|(e, c)| (e.clone(), c.clone())).collect();
        v.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        v
    }
}

pub(crate) fn index_of(vars: &Vars, name: &str) -> Result<usize> {
    vars.iter()
        .position(|v| v == name)
        .ok_or_else(|| Error::UnknownVariable(name.to_string()))
}

fn power_table(point: &[Rational], degree: impl Fn(usize) -> u32) -> Vec<Vec<Rational>> {
    point
        .iter()
        .enumerate()
        .map(|(i, x)| {
            let d = degree(i) as usize;
            let mut pw = Vec::with_capacity(d + 1);
            pw.push(Rational::one());
            for k in 1..=d {
                let next = &pw[k - 1] * x;
                pw.push(next);
            }
            pw
        })
        .collect()
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.display_terms().iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        self.vars[i].clone()
                    } else {
                        format!("{}^{}", self.vars[i], k)
                    }
                })
                .collect();
            if mono.is_empty() {
                write!(f, "{}", format_rational(&a))?;
            } else if a.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", format_rational(&a), mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]({})", self.vars.join(","), self)
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        self.check_same_vars(rhs);
        let (big, small) = if self.terms.len() >= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = big.clone();
        for (e, c) in &small.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        self.check_same_vars(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        self.check_same_vars(rhs);
        let mut out = Polynomial::zero(&self.vars);
        if self.is_zero() || rhs.is_zero() {
            return out;
        }
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Exponents = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &'a Polynomial) -> Polynomial {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<Polynomial> for &'a Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Read-only view of a polynomial as a univariate polynomial in one main
/// variable, with coefficients over the remaining variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnivariateView {
    base: Polynomial,
    main: usize,
    coefficients: Vec<Polynomial>,
}

impl UnivariateView {
    pub fn new(base: &Polynomial, main: &str) -> Result<Self> {
        let i = base.var_index(main)?;
        Ok(Self::at(base, i))
    }

    pub fn at(base: &Polynomial, main: usize) -> Self {
        UnivariateView {
            base: base.clone(),
            main,
            coefficients: base.coefficients_in(main),
        }
    }

    pub fn base(&self) -> &Polynomial {
        &self.base
    }

    pub fn main_variable(&self) -> &str {
        &self.base.vars()[self.main]
    }

    pub fn main_index(&self) -> usize {
        self.main
    }

    pub fn coefficients(&self) -> &[Polynomial] {
        &self.coefficients
    }

    /// Degree in the main variable, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<&Polynomial> {
        self.coefficients.last()
    }

    pub fn reassemble(&self) -> Polynomial {
        Polynomial::from_coefficients(self.base.vars(), self.main, &self.coefficients)
    }
}
