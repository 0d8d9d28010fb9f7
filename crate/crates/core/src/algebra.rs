//! Initial forms, regularizing shears, elementary symmetric functions and
//! the sum-of-squares reduction of an equation system.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{index_of, Exponents, Polynomial, Vars};
use crate::rational::Rational;

/// Order (lowest total degree present) and the homogeneous part of that degree.
pub fn initial_form(f: &Polynomial) -> Result<(u32, Polynomial)> {
    let order = f
        .terms()
        .map(|(e, _)| e.iter().sum::<u32>())
        .min()
        .ok_or(Error::ZeroPolynomial)?;
    Ok((order, f.homogeneous_part(order)))
}

/// The linear change of coordinates
/// `(x_1, ..., x_n) -> (x_1 + nu_1 x_n, ..., x_{n-1} + nu_{n-1} x_n, x_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Shear {
    pub nu: Vec<i64>,
}

impl Shear {
    pub fn identity(n: usize) -> Self {
        Shear {
            nu: vec![0; n.saturating_sub(1)],
        }
    }

    pub fn inverse(&self) -> Self {
        Shear {
            nu: self.nu.iter().map(|v| -v).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.nu.iter().all(|&v| v == 0)
    }
}

/// Integer enumeration order used by the shear search: 0, 1, -1, 2, -2, ...
fn key_value(k: usize) -> i64 {
    if k == 0 {
        0
    } else if k % 2 == 1 {
        k.div_ceil(2) as i64
    } else {
        -((k / 2) as i64)
    }
}

/// Finds `nu` with `P(nu, 1) != 0`, where `P` is the product of the initial
/// forms of `gs`. Candidates are visited by max-norm, then lexicographically
/// in the order 0, 1, -1, 2, -2, ..., so the answer is reproducible.
pub fn find_shear(gs: &[Polynomial]) -> Result<Shear> {
    let first = gs.first().ok_or(Error::EmptyInput)?;
    let vars = first.vars().clone();
    let n = vars.len();
    if n == 0 {
        return Err(Error::InvalidArgument("shear needs at least one variable".into()));
    }
    let mut forms = Vec::with_capacity(gs.len());
    for g in gs {
        if g.vars() != &vars {
            return Err(Error::VariableMismatch(vars.join(","), g.vars().join(",")));
        }
        forms.push(initial_form(g)?.1);
    }
    let m = n - 1;
    let admissible = |nu: &[i64]| {
        let mut point: Vec<Rational> = nu.iter().map(|&v| Rational::from_integer(v.into())).collect();
        point.push(Rational::one());
        forms
            .iter()
            .all(|f| !f.evaluate(&point).expect("dimension checked").is_zero())
    };
    if m == 0 {
        return if admissible(&[]) {
            Ok(Shear { nu: vec![] })
        } else {
            Err(Error::Internal("initial form vanishes at 1".into()))
        };
    }
    for norm in 0usize.. {
        let kmax = 2 * norm;
        let mut keys = vec![0usize; m];
        'tuples: loop {
            let nu: Vec<i64> = keys.iter().map(|&k| key_value(k)).collect();
            let max_abs = nu.iter().map(|v| v.unsigned_abs() as usize).max().unwrap_or(0);
            if max_abs == norm && admissible(&nu) {
                return Ok(Shear { nu });
            }
            // odometer increment, last position fastest
            let mut pos = m;
            while pos > 0 {
                pos -= 1;
                if keys[pos] < kmax {
                    keys[pos] += 1;
                    for k in keys.iter_mut().skip(pos + 1) {
                        *k = 0;
                    }
                    continue 'tuples;
                }
            }
            break;
        }
    }
    unreachable!("a nonzero homogeneous polynomial is nonzero at some integer point")
}

/// Returns `g o sigma` for the shear `s`.
pub fn apply_shear(g: &Polynomial, s: &Shear) -> Result<Polynomial> {
    let vars = g.vars().clone();
    let n = vars.len();
    if s.nu.len() + 1 != n {
        return Err(Error::DimensionMismatch {
            expected: n.saturating_sub(1),
            got: s.nu.len(),
        });
    }
    let last = Polynomial::variable(&vars, n - 1);
    let subs: Vec<Polynomial> = (0..n)
        .map(|i| {
            let xi = Polynomial::variable(&vars, i);
            if i + 1 < n && s.nu[i] != 0 {
                &xi + &last.scale(&Rational::from_integer(s.nu[i].into()))
            } else {
                xi
            }
        })
        .collect();
    g.compose(&subs)
}

/// Signed elementary symmetric functions: `w` with
/// `x^p + sum_j w_j x^(p-j) = prod_i (x - v_i)`.
pub fn sigma_embed(v: &[Rational]) -> Vec<Rational> {
    // coefficients of prod (x - v_i), highest degree first
    let mut c = vec![Rational::one()];
    for r in v {
        let mut next = vec![Rational::zero(); c.len() + 1];
        for (j, a) in c.iter().enumerate() {
            next[j] += a;
            next[j + 1] -= a * r;
        }
        c = next;
    }
    c.into_iter().skip(1).collect()
}

/// `e_1, ..., e_p` in the variables `sym` (indices into `vars`).
pub fn elementary_symmetric(vars: &Vars, sym: &[usize]) -> Vec<Polynomial> {
    let p = sym.len();
    // e[l] built incrementally: e_l(v1..vk) = e_l(v1..v_{k-1}) + v_k e_{l-1}(v1..v_{k-1})
    let mut e = vec![Polynomial::one(vars)];
    e.extend((1..=p).map(|_| Polynomial::zero(vars)));
    for &vi in sym {
        let x = Polynomial::variable(vars, vi);
        for l in (1..=p).rev() {
            let add = &x * &e[l - 1];
            e[l] = &e[l] + &add;
        }
    }
    e.into_iter().skip(1).collect()
}

/// Rewrites a polynomial symmetric in the variables `symmetric` as a
/// polynomial in `e1, ..., ep`, which are appended after the remaining
/// variables.
pub fn newton_symmetrize(f: &Polynomial, symmetric: &[&str]) -> Result<Polynomial> {
    let sym = symmetric
        .iter()
        .map(|s| index_of(f.vars(), s))
        .collect::<Result<Vec<_>>>()?;
    let names: Vec<String> = (1..=sym.len()).map(|l| format!("e{l}")).collect();
    newton_symmetrize_into(f, &sym, &names)
}

/// Lexicographic reduction with caller-chosen output names.
pub fn newton_symmetrize_into(f: &Polynomial, sym: &[usize], out_names: &[String]) -> Result<Polynomial> {
    let vars = f.vars().clone();
    let p = sym.len();
    if out_names.len() != p {
        return Err(Error::DimensionMismatch {
            expected: p,
            got: out_names.len(),
        });
    }
    for w in sym.windows(2) {
        if w[0] == w[1] {
            return Err(Error::DuplicateVariable(vars[w[0]].clone()));
        }
    }
    check_symmetric(f, sym)?;

    let rest: Vec<usize> = (0..vars.len()).filter(|i| !sym.contains(i)).collect();
    let mut out_vars: Vec<String> = rest.iter().map(|&i| vars[i].clone()).collect();
    for name in out_names {
        if out_vars.contains(name) {
            return Err(Error::DuplicateVariable(name.clone()));
        }
        out_vars.push(name.clone());
    }
    let out_vars: Vars = out_vars.into();

    let es = elementary_symmetric(&vars, sym);
    let mut cache: HashMap<(usize, u32), Polynomial> = HashMap::new();
    let mut epow = |l: usize, k: u32| -> Polynomial {
        cache
            .entry((l, k))
            .or_insert_with(|| es[l].pow(k))
            .clone()
    };

    let mut work = f.clone();
    let mut result = Polynomial::zero(&out_vars);
    while !work.is_zero() {
        // leading exponent pattern in the symmetric variables
        let lead: Vec<u32> = work
            .terms()
            .map(|(e, _)| sym.iter().map(|&i| e[i]).collect::<Vec<u32>>())
            .max()
            .expect("nonzero");
        if lead.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotSymmetric);
        }
        // coefficient (over the remaining variables) of that pattern
        let coeff_terms: Vec<(Exponents, Rational)> = work
            .terms()
            .filter(|(e, _)| sym.iter().zip(&lead).all(|(&i, &k)| e[i] == k))
            .map(|(e, c)| {
                let mut e2 = e.clone();
                for &i in sym {
                    e2[i] = 0;
                }
                (e2, c.clone())
            })
            .collect();
        let coeff = Polynomial::from_terms(&vars, coeff_terms.iter().cloned());

        let mut sub = coeff;
        let mut out_e = vec![0u32; out_vars.len()];
        for l in 0..p {
            let k = lead[l] - if l + 1 < p { lead[l + 1] } else { 0 };
            if k > 0 {
                sub = &sub * &epow(l, k);
            }
            out_e[rest.len() + l] = k;
        }
        work = &work - &sub;

        for (e, c) in coeff_terms {
            let mut oe = out_e.clone();
            for (slot, &i) in rest.iter().enumerate() {
                oe[slot] = e[i];
            }
            result = &result + &Polynomial::monomial(&out_vars, oe, c);
        }
    }
    Ok(result)
}

fn check_symmetric(f: &Polynomial, sym: &[usize]) -> Result<()> {
    for w in sym.windows(2) {
        let swapped = Polynomial::from_terms(
            f.vars(),
            f.terms().map(|(e, c)| {
                let mut e2 = e.clone();
                e2.swap(w[0], w[1]);
                (e2, c.clone())
            }),
        );
        if &swapped != f {
            return Err(Error::NotSymmetric);
        }
    }
    Ok(())
}

/// `sum_i f_i^2`: one equation with the same real zero set as the system.
pub fn single_equation(fs: &[Polynomial]) -> Result<Polynomial> {
    let first = fs.first().ok_or(Error::EmptyInput)?;
    let mut h = Polynomial::zero(first.vars());
    for f in fs {
        if f.vars() != first.vars() {
            return Err(Error::VariableMismatch(
                first.vars().join(","),
                f.vars().join(","),
            ));
        }
        h = &h + &(f * f);
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::vars_from;
    use crate::rational::int as rat;

    fn vars2() -> Vars {
        vars_from(&["x1", "x2"])
    }

    #[test]
    fn initial_form_examples() {
        let v = vars2();
        let x1 = Polynomial::variable(&v, 0);
        let x2 = Polynomial::variable(&v, 1);
        let f = &(&x2 * &x2) + &x1.pow(3);
        assert_eq!(initial_form(&f).unwrap(), (2, &x2 * &x2));
        assert_eq!(
            initial_form(&Polynomial::constant(&v, rat(5))).unwrap(),
            (0, Polynomial::constant(&v, rat(5)))
        );
        let g = &(&x1 * &x2) + &x1.pow(3);
        assert_eq!(initial_form(&g).unwrap(), (2, &x1 * &x2));
        assert_eq!(initial_form(&Polynomial::zero(&v)), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn shear_search_order() {
        let keys: Vec<i64> = (0..5).map(key_value).collect();
        assert_eq!(keys, vec![0, 1, -1, 2, -2]);
        let v = vars2();
        let x1 = Polynomial::variable(&v, 0);
        let x2 = Polynomial::variable(&v, 1);
        assert_eq!(find_shear(&[x2.clone()]).unwrap().nu, vec![0]);
        // P(nu, 1) = nu: 0 fails, 1 is the next candidate
        assert_eq!(find_shear(&[&x1 * &x2]).unwrap().nu, vec![1]);
        let d = &(&x1 * &x1) - &(&x2 * &x2);
        assert_eq!(find_shear(&[d]).unwrap().nu, vec![0]);
        assert_eq!(find_shear(&[]), Err(Error::EmptyInput));
    }

    #[test]
    fn shear_search_three_variables() {
        let v = vars_from(&["a", "b", "c"]);
        let a = Polynomial::variable(&v, 0);
        let b = Polynomial::variable(&v, 1);
        // P(nu1, nu2, 1) = nu1 * nu2: needs both nonzero; norm-1 lex order gives (1, 1)
        assert_eq!(find_shear(&[&a * &b]).unwrap().nu, vec![1, 1]);
        // a - b: (0,0) vanishes, (0,1) works
        assert_eq!(find_shear(&[&a - &b]).unwrap().nu, vec![0, 1]);
    }

    #[test]
    fn apply_shear_examples() {
        let v = vars2();
        let x1 = Polynomial::variable(&v, 0);
        let x2 = Polynomial::variable(&v, 1);
        let s = Shear { nu: vec![1] };
        assert_eq!(apply_shear(&x1, &s).unwrap(), &x1 + &x2);
        let g = apply_shear(&(&x1 * &x2), &s).unwrap();
        assert_eq!(g, &(&x1 * &x2) + &(&x2 * &x2));
        assert_eq!(g.substitute_value(0, &rat(0)), &x2 * &x2);
        assert_eq!(apply_shear(&x2, &Shear { nu: vec![7] }).unwrap(), x2);
        let back = apply_shear(&g, &s.inverse()).unwrap();
        assert_eq!(back, &x1 * &x2);
    }

    #[test]
    fn sigma_embed_examples() {
        assert_eq!(sigma_embed(&[rat(5)]), vec![rat(-5)]);
        assert_eq!(sigma_embed(&[rat(1), rat(2)]), vec![rat(-3), rat(2)]);
        let r = rat(3);
        assert_eq!(
            sigma_embed(&[r.clone(), r.clone(), r.clone()]),
            vec![rat(-9), rat(27), rat(-27)]
        );
        assert!(sigma_embed(&[]).is_empty());
    }

    #[test]
    fn newton_examples() {
        let v = vars_from(&["v1", "v2"]);
        let a = Polynomial::variable(&v, 0);
        let b = Polynomial::variable(&v, 1);
        let g = newton_symmetrize(&(&a + &b), &["v1", "v2"]).unwrap();
        assert_eq!(g.to_string(), "e1");
        let sq = &(&a * &a) + &(&b * &b);
        assert_eq!(
            newton_symmetrize(&sq, &["v1", "v2"]).unwrap().to_string(),
            "e1^2 - 2*e2"
        );
        let f = &(&(&a * &a) * &b) + &(&(&a * &b) * &b);
        assert_eq!(
            newton_symmetrize(&f, &["v1", "v2"]).unwrap().to_string(),
            "e1*e2"
        );
        assert_eq!(
            newton_symmetrize(&(&a * &a), &["v1", "v2"]),
            Err(Error::NotSymmetric)
        );
    }

    #[test]
    fn newton_keeps_other_variables() {
        let v = vars_from(&["x", "v1", "v2"]);
        let x = Polynomial::variable(&v, 0);
        let a = Polynomial::variable(&v, 1);
        let b = Polynomial::variable(&v, 2);
        let f = &(&x * &(&a + &b)) + &(&a * &b);
        let g = newton_symmetrize(&f, &["v1", "v2"]).unwrap();
        assert_eq!(g.vars().join(","), "x,e1,e2");
        assert_eq!(g.to_string(), "x*e1 + e2");
    }

    #[test]
    fn single_equation_examples() {
        let v = vars_from(&["x", "y"]);
        let x = Polynomial::variable(&v, 0);
        let y = Polynomial::variable(&v, 1);
        assert_eq!(single_equation(&[x.clone()]).unwrap(), &x * &x);
        assert_eq!(
            single_equation(&[x.clone(), y.clone()]).unwrap().to_string(),
            "x^2 + y^2"
        );
        let one = Polynomial::one(&v);
        let h = single_equation(&[&x - &one, &x + &one]).unwrap();
        assert_eq!(h.to_string(), "2*x^2 + 2");
    }
}
