//! Closed intervals for range enclosure of polynomials: exact rational
//! intervals for sign decisions and outward-rounded `f64` intervals for the
//! rasterizing oracle.

use num_traits::{One, Signed, Zero};

use crate::poly::Polynomial;
use crate::rational::{to_f64_interval, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl RatInterval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        debug_assert!(lo <= hi);
        RatInterval { lo, hi }
    }

    pub fn point(v: Rational) -> Self {
        RatInterval {
            lo: v.clone(),
            hi: v,
        }
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn add(&self, o: &Self) -> Self {
        RatInterval {
            lo: &self.lo + &o.lo,
            hi: &self.hi + &o.hi,
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let c = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let lo = c.iter().min().cloned().expect("nonempty");
        let hi = c.iter().max().cloned().expect("nonempty");
        RatInterval { lo, hi }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let a = &self.lo * c;
        let b = &self.hi * c;
        if a <= b {
            RatInterval { lo: a, hi: b }
        } else {
            RatInterval { lo: b, hi: a }
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        if k == 0 {
            return Self::point(Rational::one());
        }
        let a = num_traits::pow(self.lo.clone(), k as usize);
        let b = num_traits::pow(self.hi.clone(), k as usize);
        if k % 2 == 1 {
            RatInterval { lo: a, hi: b }
        } else if self.lo.is_negative() && self.hi.is_positive() {
            RatInterval {
                lo: Rational::zero(),
                hi: a.max(b),
            }
        } else if a <= b {
            RatInterval { lo: a, hi: b }
        } else {
            RatInterval { lo: b, hi: a }
        }
    }
}

/// Range enclosure of `p` over a box (one interval per variable).
pub fn eval_rat_interval(p: &Polynomial, bx: &[RatInterval]) -> RatInterval {
    assert_eq!(bx.len(), p.nvars());
    let powers: Vec<Vec<RatInterval>> = bx
        .iter()
        .enumerate()
        .map(|(i, iv)| (0..=p.degree_in(i)).map(|k| iv.pow(k)).collect())
        .collect();
    let mut acc = RatInterval::point(Rational::zero());
    for (e, c) in p.terms() {
        let mut t = RatInterval::point(c.clone());
        for (i, &k) in e.iter().enumerate() {
            if k > 0 {
                t = t.mul(&powers[i][k as usize]);
            }
        }
        acc = acc.add(&t);
    }
    acc
}

/// `f64` interval with outward rounding after every operation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FInterval {
    pub lo: f64,
    pub hi: f64,
}

impl FInterval {
    pub fn new(lo: f64, hi: f64) -> Self {
        FInterval { lo, hi }
    }

    pub fn point(v: f64) -> Self {
        FInterval { lo: v, hi: v }
    }

    pub fn from_rational(r: &Rational) -> Self {
        let (lo, hi) = to_f64_interval(r);
        FInterval { lo, hi }
    }

    pub fn add(self, o: Self) -> Self {
        FInterval {
            lo: (self.lo + o.lo).next_down(),
            hi: (self.hi + o.hi).next_up(),
        }
    }

    pub fn mul(self, o: Self) -> Self {
        let c = [
            self.lo * o.lo,
            self.lo * o.hi,
            self.hi * o.lo,
            self.hi * o.hi,
        ];
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for v in c {
            // 0 * inf
            let v = if v.is_nan() { 0.0 } else { v };
            lo = lo.min(v);
            hi = hi.max(v);
        }
        FInterval {
            lo: lo.next_down(),
            hi: hi.next_up(),
        }
    }

    pub fn pow(self, k: u32) -> Self {
        let mut r = FInterval::point(1.0);
        if k == 0 {
            return r;
        }
        if k % 2 == 0 && self.lo < 0.0 && self.hi > 0.0 {
            let m = self.lo.abs().max(self.hi);
            let mut up = 1.0f64;
            for _ in 0..k {
                up = (up * m).next_up();
            }
            return FInterval { lo: 0.0, hi: up };
        }
        for _ in 0..k {
            r = r.mul(self);
        }
        if k % 2 == 0 {
            r.lo = r.lo.max(0.0);
        }
        r
    }

    pub fn contains_zero(&self) -> bool {
        self.lo <= 0.0 && self.hi >= 0.0
    }
}

/// Polynomial prepared for fast `f64` interval evaluation.
#[derive(Clone, Debug)]
pub struct FloatPoly {
    terms: Vec<(Vec<u32>, FInterval)>,
    degrees: Vec<u32>,
    exactly_zero: bool,
}

impl FloatPoly {
    pub fn new(p: &Polynomial) -> Self {
        FloatPoly {
            terms: p
                .terms()
                .map(|(e, c)| (e.clone(), FInterval::from_rational(c)))
                .collect(),
            degrees: (0..p.nvars()).map(|i| p.degree_in(i)).collect(),
            exactly_zero: p.is_zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.exactly_zero
    }

    pub fn eval(&self, bx: &[FInterval]) -> FInterval {
        let powers: Vec<Vec<FInterval>> = bx
            .iter()
            .zip(&self.degrees)
            .map(|(iv, &d)| (0..=d).map(|k| iv.pow(k)).collect())
            .collect();
        let mut acc = FInterval::point(0.0);
        for (e, c) in &self.terms {
            let mut t = *c;
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    t = t.mul(powers[i][k as usize]);
                }
            }
            acc = acc.add(t);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::vars_from;
    use crate::rational::{int, ratio};

    #[test]
    fn even_power_straddling_zero() {
        let iv = RatInterval::new(int(-1), int(2));
        assert_eq!(iv.pow(2), RatInterval::new(int(0), int(4)));
        assert_eq!(iv.pow(3), RatInterval::new(int(-1), int(8)));
        let f = FInterval::new(-1.0, 2.0).pow(2);
        assert!(f.lo <= 0.0 && f.hi >= 4.0);
    }

    #[test]
    fn polynomial_enclosure_contains_values() {
        let v = vars_from(&["x", "y"]);
        let x = Polynomial::variable(&v, 0);
        let y = Polynomial::variable(&v, 1);
        let p = &(&x * &y) - &Polynomial::one(&v);
        let bx = [
            RatInterval::new(ratio(1, 2), int(1)),
            RatInterval::new(int(1), int(3)),
        ];
        let r = eval_rat_interval(&p, &bx);
        assert_eq!(r, RatInterval::new(ratio(-1, 2), int(2)));
        let fp = FloatPoly::new(&p);
        let fr = fp.eval(&[FInterval::new(0.5, 1.0), FInterval::new(1.0, 3.0)]);
        assert!(fr.lo <= -0.5 && fr.hi >= 2.0);
    }
}
