//! Resultants and principal subresultant coefficients of multivariate
//! polynomials, computed as fraction-free (Bareiss) determinants.

use crate::dense::DensePoly;
use crate::poly::{Polynomial, Vars};
use crate::rational::Rational;
use num_traits::Zero;

/// Determinant of a square matrix of polynomials over one variable list.
pub fn determinant(mut m: Vec<Vec<Polynomial>>, vars: &Vars) -> Polynomial {
    let n = m.len();
    if n == 0 {
        return Polynomial::one(vars);
    }
    let mut negate = false;
    let mut prev = Polynomial::one(vars);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return Polynomial::zero(vars),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = t
                    .div_exact(&prev)
                    .expect("Bareiss step divides exactly");
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Principal subresultant coefficients `psc_j(f, g)` for
/// `0 <= j < min(deg f, deg g)` with respect to `x_main`.
/// `f` and `g` must have positive degree in `x_main`.
pub fn principal_subresultant_coefficients(
    f: &Polynomial,
    g: &Polynomial,
    main: usize,
) -> Vec<Polynomial> {
    let vars = f.vars().clone();
    let fc = f.coefficients_in_place(main);
    let gc = g.coefficients_in_place(main);
    let (m, n) = (fc.len() - 1, gc.len() - 1);
    (0..m.min(n))
        .map(|j| psc_from_coeffs(&fc, &gc, j, &vars))
        .collect()
}

/// `psc_j` from coefficient lists (ascending), all over `vars`.
fn psc_from_coeffs(fc: &[Polynomial], gc: &[Polynomial], j: usize, vars: &Vars) -> Polynomial {
    let m = fc.len() - 1;
    let n = gc.len() - 1;
    let size = m + n - 2 * j;
    // rows: x^(n-j-1) f, ..., f, x^(m-j-1) g, ..., g
    // columns: coefficients of x^(m+n-j-1) down to x^(j+1), then x^j
    let col_power = |c: usize| -> usize {
        if c + 1 < size {
            m + n - j - 1 - c
        } else {
            j
        }
    };
    let mut rows = Vec::with_capacity(size);
    for shift in (0..n - j).rev() {
        rows.push(
            (0..size)
                .map(|c| coeff_at(fc, col_power(c) as isize - shift as isize, vars))
                .collect::<Vec<_>>(),
        );
    }
    for shift in (0..m - j).rev() {
        rows.push(
            (0..size)
                .map(|c| coeff_at(gc, col_power(c) as isize - shift as isize, vars))
                .collect::<Vec<_>>(),
        );
    }
    determinant(rows, vars)
}

fn coeff_at(c: &[Polynomial], k: isize, vars: &Vars) -> Polynomial {
    if k < 0 || k as usize >= c.len() {
        Polynomial::zero(vars)
    } else {
        c[k as usize].clone()
    }
}

/// Sylvester resultant of `f` and `g` in `x_main` (both of positive degree).
pub fn resultant(f: &Polynomial, g: &Polynomial, main: usize) -> Polynomial {
    let vars = f.vars().clone();
    let fc = f.coefficients_in_place(main);
    let gc = g.coefficients_in_place(main);
    if fc.len() < 2 || gc.len() < 2 {
        // a constant argument: res = c^deg(other)
        let (c, other) = if fc.len() < 2 { (f, &gc) } else { (g, &fc) };
        return c.pow(other.len().saturating_sub(1) as u32);
    }
    psc_from_coeffs(&fc, &gc, 0, &vars)
}

/// `prod_{d(a) = 0} t(..., a, ...)` up to a nonzero constant: the norm of
/// `t` with respect to the univariate rational polynomial `d` in `x_main`,
/// computed as the determinant of multiplication by `t` modulo `d`.
/// The result no longer depends on `x_main`.
pub fn norm_over(d: &DensePoly, t: &Polynomial, main: usize) -> Polynomial {
    let vars = t.vars().clone();
    let k = d.deg();
    if k == 0 {
        return Polynomial::one(&vars);
    }
    let monic = d.monic();
    // x^k = -sum_{i<k} c_i x^i
    let reduce = |coeffs: Vec<Polynomial>| -> Vec<Polynomial> {
        let mut c = coeffs;
        while c.len() > k {
            let top = c.pop().expect("len > k");
            if top.is_zero() {
                continue;
            }
            let base = c.len() - k;
            for i in 0..k {
                let mc = monic.coeff(i);
                if !mc.is_zero() {
                    c[base + i] = &c[base + i] - &top.scale(&mc);
                }
            }
        }
        c.resize(k, Polynomial::zero(&vars));
        c
    };
    let t_red = reduce(t.coefficients_in_place(main));
    // column j holds t * x^j mod d
    let mut cols = Vec::with_capacity(k);
    let mut cur = t_red;
    for _ in 0..k {
        cols.push(cur.clone());
        let mut shifted = vec![Polynomial::zero(&vars)];
        shifted.extend(cur.into_iter());
        cur = reduce(shifted);
    }
    let matrix: Vec<Vec<Polynomial>> = (0..k)
        .map(|r| (0..k).map(|c| cols[c][r].clone()).collect())
        .collect();
    determinant(matrix, &vars)
}

/// Resultant of two dense univariate polynomials (as a rational).
pub fn dense_resultant(a: &DensePoly, b: &DensePoly) -> Rational {
    if a.is_zero() || b.is_zero() {
        return Rational::zero();
    }
    let vars: Vars = vec!["x".to_string()].into();
    let pa = Polynomial::from_dense(&vars, 0, a);
    let pb = Polynomial::from_dense(&vars, 0, b);
    resultant(&pa, &pb, 0)
        .as_constant()
        .expect("univariate resultant is constant")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::vars_from;
    use crate::rational::int;

    #[test]
    fn discriminant_of_circle() {
        let v = vars_from(&["x", "y"]);
        let x = Polynomial::variable(&v, 0);
        let y = Polynomial::variable(&v, 1);
        let f = &(&(&x * &x) + &(&y * &y)) - &Polynomial::one(&v);
        let fy = f.derivative_at(1);
        let r = resultant(&f, &fy, 1);
        // res_y(y^2 + x^2 - 1, 2y) = 4(x^2 - 1)
        assert_eq!(r.to_string(), "4*x^2 - 4");
        let psc = principal_subresultant_coefficients(&f, &fy, 1);
        assert_eq!(psc.len(), 1);
        assert_eq!(psc[0], r);
    }

    #[test]
    fn resultant_of_lines() {
        let v = vars_from(&["x", "y"]);
        let x = Polynomial::variable(&v, 0);
        let y = Polynomial::variable(&v, 1);
        let r = resultant(&(&y - &x), &(&y + &x), 1);
        assert_eq!(r.normalized().to_string(), "x");
    }

    #[test]
    fn subresultant_of_common_factor() {
        // f = (y - 1)(y - x), g = (y - 1)(y + 1): psc_0 = 0, psc_1 != 0
        let v = vars_from(&["x", "y"]);
        let x = Polynomial::variable(&v, 0);
        let y = Polynomial::variable(&v, 1);
        let one = Polynomial::one(&v);
        let f = &(&y - &one) * &(&y - &x);
        let g = &(&y - &one) * &(&y + &one);
        let psc = principal_subresultant_coefficients(&f, &g, 1);
        assert!(psc[0].is_zero());
        assert!(!psc[1].is_zero());
    }

    #[test]
    fn norm_matches_product_of_conjugates() {
        // d = x^2 - 2, t = y - x: norm = (y - sqrt2)(y + sqrt2) = y^2 - 2
        let v = vars_from(&["x", "y"]);
        let x = Polynomial::variable(&v, 0);
        let y = Polynomial::variable(&v, 1);
        let d = DensePoly::from_ints(&[-2, 0, 1]);
        let n = norm_over(&d, &(&y - &x), 0);
        assert_eq!(n.to_string(), "y^2 - 2");
        assert_eq!(
            dense_resultant(&DensePoly::from_ints(&[-1, 1]), &DensePoly::from_ints(&[-4, 0, 1])),
            int(-3)
        );
    }
}
