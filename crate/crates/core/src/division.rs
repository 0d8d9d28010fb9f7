//! Division by the generic monic polynomial `x_n^p + t_1 x_n^(p-1) + ... + t_p`,
//! root modulus bounds, and preparation / division against a polynomial with
//! a nonconstant leading coefficient.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::newton_symmetrize_into;
use crate::error::{Error, Result};
use crate::poly::{Polynomial, Vars};
use crate::rational::{exact_root, Rational};

/// `g = quotient * P + sum_j remainder[j-1] * x_n^(p-j)` with
/// `P = x_n^p + sum_j t_j x_n^(p-j)`. All polynomials live over the input
/// variables followed by `t1..tp`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericDivision {
    pub vars: Vars,
    pub main: usize,
    pub p: usize,
    pub quotient: Polynomial,
    pub remainder: Vec<Polynomial>,
}

impl GenericDivision {
    /// Index of `t_j` (1-based `j`) in [`GenericDivision::vars`].
    pub fn t_index(&self, j: usize) -> usize {
        self.vars.len() - self.p + j - 1
    }

    /// The generic monic polynomial `P`.
    pub fn generic_polynomial(&self) -> Polynomial {
        generic_polynomial(&self.vars, self.main, self.p)
    }

    /// The remainder as one polynomial `sum_j h_j x_n^(p-j)`.
    pub fn remainder_polynomial(&self) -> Polynomial {
        let mut r = Polynomial::zero(&self.vars);
        for (j, h) in self.remainder.iter().enumerate() {
            r = &r + &h.shift(self.main, (self.p - j - 1) as u32);
        }
        r
    }

    /// `quotient * P + remainder`.
    pub fn reassemble(&self) -> Polynomial {
        &(&self.quotient * &self.generic_polynomial()) + &self.remainder_polynomial()
    }
}

fn generic_polynomial(vars: &Vars, main: usize, p: usize) -> Polynomial {
    let t0 = vars.len() - p;
    let mut out = Polynomial::one(vars).shift(main, p as u32);
    for j in 1..=p {
        out = &out + &Polynomial::variable(vars, t0 + j - 1).shift(main, (p - j) as u32);
    }
    out
}

fn extend_vars(base: &Vars, extra: &[String]) -> Result<Vars> {
    let mut v: Vec<String> = base.to_vec();
    for name in extra {
        if v.contains(name) {
            return Err(Error::DuplicateVariable(name.clone()));
        }
        v.push(name.clone());
    }
    Ok(v.into())
}

fn t_names(p: usize) -> Vec<String> {
    (1..=p).map(|j| format!("t{j}")).collect()
}

/// Long division by the generic monic polynomial in the last variable.
pub fn generic_divide(g: &Polynomial, p: usize) -> Result<GenericDivision> {
    if g.nvars() == 0 {
        return Err(Error::EmptyInput);
    }
    generic_divide_in(g, p, g.nvars() - 1)
}

/// [`generic_divide`] with an explicit main variable.
pub fn generic_divide_in(g: &Polynomial, p: usize, main: usize) -> Result<GenericDivision> {
    if p == 0 {
        return Err(Error::ZeroDegree);
    }
    let vars = extend_vars(g.vars(), &t_names(p))?;
    let big_p = generic_polynomial(&vars, main, p);
    let mut rem = g.with_vars(&vars)?;
    let mut quot = Polynomial::zero(&vars);
    loop {
        let d = rem.degree_in(main) as usize;
        if rem.is_zero() || d < p {
            break;
        }
        let lead = rem.coefficients_in_place(main).pop().expect("nonzero");
        let term = lead.shift(main, (d - p) as u32);
        rem = &rem - &(&term * &big_p);
        quot = &quot + &term;
    }
    let coeffs = rem.coefficients_in_place(main);
    let remainder = (1..=p)
        .map(|j| {
            coeffs
                .get(p - j)
                .cloned()
                .unwrap_or_else(|| Polynomial::zero(&vars))
        })
        .collect();
    Ok(GenericDivision {
        vars,
        main,
        p,
        quotient: quot,
        remainder,
    })
}

/// The same division built from the roots of `P`: divide increments by
/// `x_n - v_j` for `j = 1..p`, then rewrite the symmetric results in the
/// elementary symmetric functions and substitute `e_j = (-1)^j t_j`.
pub fn generic_divide_via_roots(g: &Polynomial, p: usize) -> Result<GenericDivision> {
    if g.nvars() == 0 {
        return Err(Error::EmptyInput);
    }
    if p == 0 {
        return Err(Error::ZeroDegree);
    }
    let main = g.nvars() - 1;
    let n = g.nvars();
    let out_vars = extend_vars(g.vars(), &t_names(p))?;
    let v_names: Vec<String> = (1..=p).map(|j| format!("__root{j}")).collect();
    let vvars = extend_vars(g.vars(), &v_names)?;
    let xn = Polynomial::variable(&vvars, main);

    let mut cur = g.with_vars(&vvars)?;
    let mut remainder = Polynomial::zero(&vvars);
    let mut prefix = Polynomial::one(&vvars);
    for j in 0..p {
        let vj = Polynomial::variable(&vvars, n + j);
        let at_root = cur.substitute(main, &vj);
        let linear = &xn - &vj;
        cur = (&cur - &at_root)
            .div_exact(&linear)
            .ok_or_else(|| Error::Internal("increment not divisible by x_n - v".into()))?;
        remainder = &remainder + &(&at_root * &prefix);
        prefix = &prefix * &linear;
    }

    let sym: Vec<usize> = (n..n + p).collect();
    let names = t_names(p);
    let to_t = |f: &Polynomial| -> Result<Polynomial> {
        // symmetric in the roots; the result uses e_j named t_j
        let e_form = newton_symmetrize_into(f, &sym, &names)?.with_vars(&out_vars)?;
        let subs: Vec<Polynomial> = (0..out_vars.len())
            .map(|i| {
                let x = Polynomial::variable(&out_vars, i);
                if i >= n && (i - n + 1) % 2 == 1 {
                    -x
                } else {
                    x
                }
            })
            .collect();
        e_form.compose(&subs)
    };
    let quotient = to_t(&cur)?;
    let coeffs = remainder.coefficients_in_place(main);
    let mut hs = Vec::with_capacity(p);
    for j in 1..=p {
        let c = coeffs
            .get(p - j)
            .cloned()
            .unwrap_or_else(|| Polynomial::zero(&vvars));
        hs.push(to_t(&c)?);
    }
    Ok(GenericDivision {
        vars: out_vars,
        main,
        p,
        quotient,
        remainder: hs,
    })
}

/// Rational upper bound for `2 * max_j |v_j|^(1/j)`, which bounds the moduli
/// of all complex roots of `x^p + sum_j v_j x^(p-j)`.
pub fn root_bound(v: &[Rational]) -> Rational {
    let mut best = Rational::zero();
    for (j, c) in v.iter().enumerate() {
        let r = root_upper(&c.abs(), (j + 1) as u32);
        if r > best {
            best = r;
        }
    }
    best * Rational::from_integer(BigInt::from(2))
}

/// Upper approximation of `a^(1/k)` within relative precision `2^-20`.
fn root_upper(a: &Rational, k: u32) -> Rational {
    if a.is_zero() || k == 1 {
        return a.clone();
    }
    if let Some(r) = exact_root(a, k) {
        return r;
    }
    let one = Rational::one();
    let mut lo = Rational::zero();
    let mut hi = if a > &one { a.clone() } else { one };
    let eps = Rational::new(BigInt::one(), BigInt::one() << 20);
    while &hi - &lo > &hi * &eps {
        let mid = (&lo + &hi) / Rational::from_integer(BigInt::from(2));
        if num_traits::pow(mid.clone(), k as usize) >= *a {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

/// `numerator / guard^power`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    pub numerator: Polynomial,
    pub power: u32,
}

impl RationalFunction {
    pub fn polynomial(p: Polynomial) -> Self {
        RationalFunction {
            numerator: p,
            power: 0,
        }
    }

    /// Cancels factors of the guard; folds constant guards into the numerator.
    pub fn normalize(mut self, guard: &Polynomial) -> Self {
        if let Some(c) = guard.as_constant() {
            let d = num_traits::pow(c, self.power as usize);
            self.numerator = self.numerator.scale(&d.recip());
            self.power = 0;
            return self;
        }
        while self.power > 0 {
            match self.numerator.div_exact(guard) {
                Some(q) => {
                    self.numerator = q;
                    self.power -= 1;
                }
                None => break,
            }
        }
        if self.numerator.is_zero() {
            self.power = 0;
        }
        self
    }

    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        (self.power == 0).then_some(&self.numerator)
    }

    /// Numerator after scaling to the common denominator `guard^k`.
    pub fn cleared(&self, guard: &Polynomial, k: u32) -> Polynomial {
        assert!(k >= self.power, "denominator power too small");
        &self.numerator * &guard.pow(k - self.power)
    }

    pub fn evaluate(&self, guard: &Polynomial, point: &[Rational]) -> Result<Option<Rational>> {
        let d = guard.evaluate(point)?;
        if d.is_zero() && self.power > 0 {
            return Ok(None);
        }
        let n = self.numerator.evaluate(point)?;
        Ok(Some(n / num_traits::pow(d, self.power as usize)))
    }
}

/// `g = unit * (x_n^p + sum_j r_j x_n^(p-j))` on the region `guard != 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prepared {
    pub base: Polynomial,
    pub main: usize,
    pub degree: usize,
    pub guard: Polynomial,
    pub unit: RationalFunction,
    pub monic: Vec<RationalFunction>,
}

impl Prepared {
    /// `guard^k * monic` for the smallest `k` clearing every denominator,
    /// together with that `k`.
    pub fn cleared_monic(&self) -> (u32, Polynomial) {
        let k = self.monic.iter().map(|r| r.power).max().unwrap_or(0);
        let mut out = self.guard.pow(k).shift(self.main, self.degree as u32);
        for (j, r) in self.monic.iter().enumerate() {
            let c = r.cleared(&self.guard, k);
            out = &out + &c.shift(self.main, (self.degree - j - 1) as u32);
        }
        (k, out)
    }
}

/// Divides `g` by its leading coefficient in `main`.
pub fn prepare(g: &Polynomial, main: &str) -> Result<Prepared> {
    let i = g.var_index(main)?;
    let p = g.degree_in(i) as usize;
    if g.is_zero() || p == 0 {
        return Err(Error::ConstantInMainVariable(main.to_string()));
    }
    let coeffs = g.coefficients_in_place(i);
    let guard = coeffs[p].clone();
    let monic = (1..=p)
        .map(|j| {
            RationalFunction {
                numerator: coeffs[p - j].clone(),
                power: 1,
            }
            .normalize(&guard)
        })
        .collect();
    Ok(Prepared {
        base: g.clone(),
        main: i,
        degree: p,
        unit: RationalFunction::polynomial(guard.clone()),
        guard,
        monic,
    })
}

/// `f = quotient * g + sum_j remainder[j-1] * x_n^(p-j)` where `guard != 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeierstrassDivision {
    pub quotient: RationalFunction,
    pub remainder: Vec<RationalFunction>,
}

impl WeierstrassDivision {
    /// Checks `guard^k f = (guard^k q) g + sum_j (guard^k r_j) x_n^(p-j)` exactly
    /// for the smallest `k` clearing all denominators.
    pub fn identity_holds(&self, f: &Polynomial, w: &Prepared) -> bool {
        let k = std::iter::once(self.quotient.power)
            .chain(self.remainder.iter().map(|r| r.power))
            .max()
            .unwrap_or(0);
        let lhs = &f.clone() * &w.guard.pow(k);
        let mut rhs = &self.quotient.cleared(&w.guard, k) * &w.base;
        for (j, r) in self.remainder.iter().enumerate() {
            rhs = &rhs + &r.cleared(&w.guard, k).shift(w.main, (w.degree - j - 1) as u32);
        }
        lhs == rhs
    }
}

/// Division by a prepared polynomial: the generic division of `f` with the
/// monic coefficients substituted for `t_1..t_p`.
pub fn weierstrass_divide(f: &Polynomial, w: &Prepared) -> Result<WeierstrassDivision> {
    if w.guard.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.vars() != w.base.vars() {
        return Err(Error::VariableMismatch(
            f.vars().join(","),
            w.base.vars().join(","),
        ));
    }
    let gd = generic_divide_in(f, w.degree, w.main)?;
    let k = w.monic.iter().map(|r| r.power).max().unwrap_or(0);
    let ext = gd.vars.clone();
    let nt = f.nvars();
    // t_j = n_j / guard^k with n_j = numerator_j * guard^(k - power_j)
    let nums: Vec<Polynomial> = w
        .monic
        .iter()
        .map(|r| r.cleared(&w.guard, k))
        .collect();
    let specialize = |a: &Polynomial| -> Result<RationalFunction> {
        let tdeg = |e: &[u32]| -> u32 { e[nt..].iter().sum() };
        let top = a.terms().map(|(e, _)| tdeg(e)).max().unwrap_or(0);
        let mut num = Polynomial::zero(f.vars());
        for (e, c) in a.terms() {
            let mut base_e = e.clone();
            base_e.truncate(nt);
            let mut term = Polynomial::monomial(f.vars(), base_e, c.clone());
            for (j, &aj) in e[nt..].iter().enumerate() {
                if aj > 0 {
                    term = &term * &nums[j].pow(aj);
                }
            }
            term = &term * &w.guard.pow(k * (top - tdeg(e)));
            num = &num + &term;
        }
        Ok(RationalFunction {
            numerator: num,
            power: k * top,
        }
        .normalize(&w.guard))
    };
    debug_assert_eq!(ext.len(), nt + w.degree);
    let q = specialize(&gd.quotient)?;
    // g = guard * monic, so q_g = Q / guard
    let quotient = RationalFunction {
        numerator: q.numerator,
        power: q.power + 1,
    }
    .normalize(&w.guard);
    let remainder = gd
        .remainder
        .iter()
        .map(specialize)
        .collect::<Result<Vec<_>>>()?;
    Ok(WeierstrassDivision {
        quotient,
        remainder,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::vars_from;
    use crate::rational::{int, ratio};

    fn parse_simple(vars: &Vars, terms: &[(&[u32], i64)]) -> Polynomial {
        Polynomial::from_terms(vars, terms.iter().map(|(e, c)| (e.to_vec(), int(*c))))
    }

    #[test]
    fn generic_division_examples() {
        let v = vars_from(&["x1", "xn"]);
        let xn = Polynomial::variable(&v, 1);
        let d = generic_divide(&xn, 1).unwrap();
        assert_eq!(d.quotient.to_string(), "1");
        assert_eq!(d.remainder[0].to_string(), "-t1");
        let d = generic_divide(&(&xn * &xn), 1).unwrap();
        assert_eq!(d.quotient.to_string(), "xn - t1");
        assert_eq!(d.remainder[0].to_string(), "t1^2");
        let x1c = parse_simple(&v, &[(&[3, 0], 1)]);
        let d = generic_divide(&x1c, 2).unwrap();
        assert!(d.quotient.is_zero());
        assert!(d.remainder[0].is_zero());
        assert_eq!(d.remainder[1].to_string(), "x1^3");
        assert_eq!(generic_divide(&xn, 0), Err(Error::ZeroDegree));
    }

    #[test]
    fn root_construction_matches() {
        let v = vars_from(&["x1", "xn"]);
        let xn = Polynomial::variable(&v, 1);
        for g in [
            &xn * &xn,
            xn.clone(),
            Polynomial::constant(&v, int(7)),
            parse_simple(&v, &[(&[1, 3], 2), (&[2, 1], -1), (&[0, 2], 5)]),
        ] {
            for p in 1..=3 {
                let a = generic_divide(&g, p).unwrap();
                let b = generic_divide_via_roots(&g, p).unwrap();
                assert_eq!(a, b, "g = {g}, p = {p}");
                assert_eq!(a.reassemble(), g.with_vars(&a.vars).unwrap());
            }
        }
        let d = generic_divide(&xn, 2).unwrap();
        assert_eq!(d.remainder[0].to_string(), "1");
        assert!(d.remainder[1].is_zero());
    }

    #[test]
    fn variable_clash() {
        let v = vars_from(&["t1", "xn"]);
        let xn = Polynomial::variable(&v, 1);
        assert!(matches!(generic_divide(&xn, 1), Err(Error::DuplicateVariable(_))));
    }

    #[test]
    fn root_bound_examples() {
        assert_eq!(root_bound(&[int(0), int(0)]), int(0));
        assert_eq!(root_bound(&[int(0), int(-1)]), int(2));
        assert_eq!(root_bound(&[int(-3), int(2)]), int(6));
        let b = root_bound(&[int(0), int(2)]);
        let sqrt2x2 = 2.0 * 2f64.sqrt();
        assert!(crate::rational::to_f64(&b) >= sqrt2x2);
        assert!(crate::rational::to_f64(&b) <= sqrt2x2 * (1.0 + 1e-5));
        assert_eq!(root_bound(&[ratio(-1, 4), ratio(1, 4)]), int(1));
    }

    #[test]
    fn prepare_examples() {
        let v = vars_from(&["x1", "xn"]);
        let g = parse_simple(&v, &[(&[0, 2], 2), (&[1, 1], 1)]);
        let w = prepare(&g, "xn").unwrap();
        assert_eq!(w.guard.to_string(), "2");
        assert_eq!(w.monic[0].numerator.to_string(), "1/2*x1");
        assert_eq!(w.monic[0].power, 0);
        let g = parse_simple(&v, &[(&[1, 1], 1), (&[0, 0], 1)]);
        let w = prepare(&g, "xn").unwrap();
        assert_eq!(w.guard.to_string(), "x1");
        assert_eq!(w.monic[0].numerator.to_string(), "1");
        assert_eq!(w.monic[0].power, 1);
        let g = parse_simple(&v, &[(&[0, 2], 1), (&[1, 0], 1)]);
        let w = prepare(&g, "xn").unwrap();
        assert_eq!(w.unit.numerator.to_string(), "1");
        assert_eq!(w.cleared_monic(), (0, g.clone()));
        let c = Polynomial::constant(&v, int(3));
        assert!(matches!(prepare(&c, "xn"), Err(Error::ConstantInMainVariable(_))));
    }

    #[test]
    fn weierstrass_examples() {
        let v = vars_from(&["x1", "xn"]);
        let f = parse_simple(&v, &[(&[0, 2], 1)]);
        let g = parse_simple(&v, &[(&[0, 2], 1), (&[1, 0], 1)]);
        let w = prepare(&g, "xn").unwrap();
        let d = weierstrass_divide(&f, &w).unwrap();
        assert_eq!(d.quotient.numerator.to_string(), "1");
        assert!(d.remainder[0].numerator.is_zero());
        assert_eq!(d.remainder[1].numerator.to_string(), "-x1");

        let f = parse_simple(&v, &[(&[0, 3], 1)]);
        let g = parse_simple(&v, &[(&[0, 1], 1), (&[1, 0], -1)]);
        let w = prepare(&g, "xn").unwrap();
        let d = weierstrass_divide(&f, &w).unwrap();
        assert_eq!(d.quotient.numerator.to_string(), "x1^2 + x1*xn + xn^2");
        assert_eq!(d.remainder[0].numerator.to_string(), "x1^3");

        // non-monic: f = xn^2, g = x1*xn + 1
        let g = parse_simple(&v, &[(&[1, 1], 1), (&[0, 0], 1)]);
        let w = prepare(&g, "xn").unwrap();
        let f = parse_simple(&v, &[(&[0, 2], 1)]);
        let d = weierstrass_divide(&f, &w).unwrap();
        assert!(d.identity_holds(&f, &w));
        assert_eq!(d.remainder[0].numerator.to_string(), "1");
        assert_eq!(d.remainder[0].power, 2);
    }
}
