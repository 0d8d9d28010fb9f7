//! Certified real root isolation with Sturm sequences, real algebraic
//! numbers given by an isolating interval, and exact sign evaluation of
//! polynomials at points with algebraic coordinates.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::dense::{sign_int_poly, DensePoly};
use crate::division::root_bound;
use crate::error::{Error, Result};
use crate::interval::{eval_rat_interval, RatInterval};
use crate::poly::{Polynomial, Vars};
use crate::rational::{ceil, floor, midpoint, power_of_two_above, Rational, Sign};
use crate::resultant::norm_over;

/// Sturm sequence of a square-free polynomial, stored with integer
/// coefficients (positive rescaling keeps every sign).
#[derive(Clone, Debug)]
pub struct SturmSequence {
    seq: Vec<Vec<BigInt>>,
}

impl SturmSequence {
    pub fn new(p: &DensePoly) -> Self {
        let mut polys = vec![p.clone(), p.derivative()];
        loop {
            let n = polys.len();
            if polys[n - 1].is_zero() {
                polys.pop();
                break;
            }
            let r = polys[n - 2].rem(&polys[n - 1]).neg();
            if r.is_zero() {
                break;
            }
            polys.push(r);
        }
        let seq = polys
            .iter()
            .map(|q| {
                // positive scaling only
                let c = q.integer_coeffs();
                let g = c.iter().fold(BigInt::zero(), |acc, v| num_integer::Integer::gcd(&acc, v));
                if g.is_zero() {
                    c
                } else {
                    c.into_iter().map(|v| v / &g).collect()
                }
            })
            .collect();
        SturmSequence { seq }
    }

    fn variations(signs: impl Iterator<Item = Sign>) -> usize {
        let mut count = 0;
        let mut last = Sign::Zero;
        for s in signs {
            if s == Sign::Zero {
                continue;
            }
            if last != Sign::Zero && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    pub fn variations_at(&self, x: &Rational) -> usize {
        Self::variations(self.seq.iter().map(|c| sign_int_poly(c, x)))
    }

    pub fn variations_at_infinity(&self, positive: bool) -> usize {
        Self::variations(self.seq.iter().map(|c| {
            let lc = Sign::of_int(c.last().expect("nonzero"));
            if positive || (c.len() - 1) % 2 == 0 {
                lc
            } else {
                lc.negate()
            }
        }))
    }

    /// Number of distinct real roots in `(a, b]`.
    pub fn count(&self, a: &Rational, b: &Rational) -> usize {
        self.variations_at(a).saturating_sub(self.variations_at(b))
    }

    pub fn count_all(&self) -> usize {
        self.variations_at_infinity(false)
            .saturating_sub(self.variations_at_infinity(true))
    }
}

/// A real algebraic number: the unique root of a square-free polynomial in
/// an interval. Either `lo == hi` (the root itself) or `lo < hi` with the
/// defining polynomial taking opposite nonzero signs at the endpoints.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AlgebraicNumber {
    defining: DensePoly,
    lo: Rational,
    hi: Rational,
}

impl AlgebraicNumber {
    /// Builds from an isolating interval; checks the endpoint sign condition.
    pub fn new(defining: DensePoly, lo: Rational, hi: Rational) -> Result<Self> {
        if lo > hi || defining.deg() == 0 {
            return Err(Error::InvalidArgument("bad isolating interval".into()));
        }
        let defining = defining.square_free();
        if lo == hi {
            if defining.sign_at(&lo) != Sign::Zero {
                return Err(Error::InvalidArgument("point interval is not a root".into()));
            }
        } else {
            let (a, b) = (defining.sign_at(&lo), defining.sign_at(&hi));
            if a == Sign::Zero || b == Sign::Zero || a == b {
                return Err(Error::InvalidArgument(
                    "interval endpoints must bracket a sign change".into(),
                ));
            }
            if SturmSequence::new(&defining).count(&lo, &hi) != 1 {
                return Err(Error::InvalidArgument("interval does not isolate one root".into()));
            }
        }
        Ok(AlgebraicNumber { defining, lo, hi })
    }

    pub(crate) fn from_parts(defining: DensePoly, lo: Rational, hi: Rational) -> Self {
        debug_assert!(lo <= hi);
        AlgebraicNumber { defining, lo, hi }
    }

    pub fn rational(r: Rational) -> Self {
        AlgebraicNumber {
            defining: DensePoly::linear_root(&r),
            lo: r.clone(),
            hi: r,
        }
    }

    pub fn defining(&self) -> &DensePoly {
        &self.defining
    }

    pub fn defining_polynomial(&self, var: &str) -> Polynomial {
        let vars: Vars = vec![var.to_string()].into();
        Polynomial::from_dense(&vars, 0, &self.defining)
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    /// The exact value when the interval has collapsed to the root.
    pub fn exact(&self) -> Option<&Rational> {
        (self.lo == self.hi).then_some(&self.lo)
    }

    fn lo_sign(&self) -> Sign {
        self.defining.sign_at(&self.lo)
    }

    /// One bisection step.
    pub fn bisect(&self) -> AlgebraicNumber {
        if self.lo == self.hi {
            return self.clone();
        }
        let m = midpoint(&self.lo, &self.hi);
        let s = self.defining.sign_at(&m);
        let (lo, hi) = if s == Sign::Zero {
            (m.clone(), m)
        } else if s == self.lo_sign() {
            (m, self.hi.clone())
        } else {
            (self.lo.clone(), m)
        };
        AlgebraicNumber {
            defining: self.defining.clone(),
            lo,
            hi,
        }
    }

    /// Same root, interval width at most `width`.
    pub fn refine(&self, width: &Rational) -> AlgebraicNumber {
        assert!(width.is_positive(), "refine width must be positive");
        let mut a = self.clone();
        while &a.width() > width {
            a = a.bisect();
        }
        a
    }

    /// Exact comparison with a rational.
    pub fn cmp_rational(&self, q: &Rational) -> Ordering {
        if let Some(v) = self.exact() {
            return v.cmp(q);
        }
        if q <= &self.lo {
            return Ordering::Greater;
        }
        if q >= &self.hi {
            return Ordering::Less;
        }
        let s = self.defining.sign_at(q);
        if s == Sign::Zero {
            Ordering::Equal
        } else if s == self.lo_sign() {
            // root lies to the right of q
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    /// Whether the root is a root of `g`, where `g` divides the defining
    /// polynomial.
    pub fn is_root_of_divisor(&self, g: &DensePoly) -> bool {
        if g.deg() == 0 {
            return false;
        }
        if let Some(v) = self.exact() {
            return g.sign_at(v) == Sign::Zero;
        }
        let a = g.sign_at(&self.lo);
        let b = g.sign_at(&self.hi);
        a != Sign::Zero && b != Sign::Zero && a != b
    }

    /// Exact comparison of two algebraic numbers.
    pub fn cmp_algebraic(&self, other: &AlgebraicNumber) -> Ordering {
        if let Some(v) = self.exact() {
            return other.cmp_rational(v).reverse();
        }
        if let Some(v) = other.exact() {
            return self.cmp_rational(v);
        }
        let g = self.defining.gcd(&other.defining);
        if self.is_root_of_divisor(&g) && other.is_root_of_divisor(&g) {
            // self is a root of other's polynomial: equal iff it lies in other's interval
            let lo_ord = self.cmp_rational(&other.lo);
            let hi_ord = self.cmp_rational(&other.hi);
            if lo_ord == Ordering::Greater && hi_ord == Ordering::Less {
                return Ordering::Equal;
            }
        }
        let mut a = self.clone();
        let mut b = other.clone();
        loop {
            if a.hi < b.lo {
                return Ordering::Less;
            }
            if b.hi < a.lo {
                return Ordering::Greater;
            }
            if let Some(v) = a.exact() {
                return b.cmp_rational(v).reverse();
            }
            if let Some(v) = b.exact() {
                return a.cmp_rational(v);
            }
            a = a.bisect();
            b = b.bisect();
        }
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.refine(&Rational::new(BigInt::one(), BigInt::from(1u64 << 53)));
        crate::rational::to_f64(&midpoint(&a.lo, &a.hi))
    }
}

impl fmt::Debug for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alg({}, [{}, {}])", self.defining, self.lo, self.hi)
    }
}

/// One coordinate of a sample point.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Coord {
    Rational(Rational),
    Algebraic(AlgebraicNumber),
}

impl Coord {
    pub fn is_rational(&self) -> bool {
        matches!(self, Coord::Rational(_))
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Coord::Rational(r) => Some(r),
            Coord::Algebraic(a) => a.exact(),
        }
    }

    pub fn interval(&self) -> RatInterval {
        match self {
            Coord::Rational(r) => RatInterval::point(r.clone()),
            Coord::Algebraic(a) => RatInterval::new(a.lo.clone(), a.hi.clone()),
        }
    }

    pub fn cmp_rational(&self, q: &Rational) -> Ordering {
        match self {
            Coord::Rational(r) => r.cmp(q),
            Coord::Algebraic(a) => a.cmp_rational(q),
        }
    }

    pub fn cmp_exact(&self, other: &Coord) -> Ordering {
        match (self, other) {
            (Coord::Rational(a), Coord::Rational(b)) => a.cmp(b),
            (Coord::Rational(a), Coord::Algebraic(b)) => b.cmp_rational(a).reverse(),
            (Coord::Algebraic(a), Coord::Rational(b)) => a.cmp_rational(b),
            (Coord::Algebraic(a), Coord::Algebraic(b)) => a.cmp_algebraic(b),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Coord::Rational(r) => crate::rational::to_f64(r),
            Coord::Algebraic(a) => a.to_f64(),
        }
    }

    /// A rational approximation: the value itself or the interval midpoint.
    pub fn approx_rational(&self) -> Rational {
        match self {
            Coord::Rational(r) => r.clone(),
            Coord::Algebraic(a) => midpoint(&a.lo, &a.hi),
        }
    }

    fn refined(&self, width: &Rational) -> Coord {
        match self {
            Coord::Rational(_) => self.clone(),
            Coord::Algebraic(a) => Coord::Algebraic(a.refine(width)),
        }
    }

    fn bisected(&self) -> Coord {
        match self {
            Coord::Rational(_) => self.clone(),
            Coord::Algebraic(a) => {
                let b = a.bisect();
                match b.exact() {
                    Some(v) => Coord::Rational(v.clone()),
                    None => Coord::Algebraic(b),
                }
            }
        }
    }
}

impl fmt::Debug for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coord::Rational(r) => write!(f, "{r}"),
            Coord::Algebraic(a) => write!(f, "{a:?}"),
        }
    }
}

/// A point whose coordinates are rational or real algebraic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SamplePoint {
    pub coords: Vec<Coord>,
}

impl SamplePoint {
    pub fn new(coords: Vec<Coord>) -> Self {
        SamplePoint { coords }
    }

    pub fn rational(coords: &[Rational]) -> Self {
        SamplePoint {
            coords: coords.iter().cloned().map(Coord::Rational).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn prefix(&self, k: usize) -> SamplePoint {
        SamplePoint {
            coords: self.coords[..k].to_vec(),
        }
    }

    pub fn push(&self, c: Coord) -> SamplePoint {
        let mut coords = self.coords.clone();
        coords.push(c);
        SamplePoint { coords }
    }

    pub fn is_rational(&self) -> bool {
        self.coords.iter().all(Coord::is_rational)
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coords.iter().map(Coord::to_f64).collect()
    }
}

/// Removes repeated factors: `f / gcd(f, f')`.
pub fn square_free(f: &Polynomial) -> Result<Polynomial> {
    let (i, d) = univariate_parts(f)?;
    Ok(Polynomial::from_dense(f.vars(), i, &d.square_free()))
}

fn univariate_parts(f: &Polynomial) -> Result<(usize, DensePoly)> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let used = f.used_vars();
    if used.len() > 1 {
        return Err(Error::InvalidArgument(format!(
            "expected a univariate polynomial, got {f}"
        )));
    }
    let i = used.first().copied().unwrap_or(0);
    Ok((i, f.to_dense(i).expect("univariate")))
}

/// Isolates the distinct real roots of a univariate polynomial, ascending.
pub fn isolate_real_roots(f: &Polynomial) -> Result<Vec<AlgebraicNumber>> {
    let (_, d) = univariate_parts(f)?;
    Ok(isolate_dense(&d)
        .into_iter()
        .map(|c| match c {
            Coord::Rational(r) => AlgebraicNumber::rational(r),
            Coord::Algebraic(a) => a,
        })
        .collect())
}

/// Real roots of a dense polynomial in ascending order. Rational roots are
/// detected exactly and returned as [`Coord::Rational`]; the remaining roots
/// carry the defining polynomial with the rational roots divided out.
pub fn isolate_dense(p: &DensePoly) -> Vec<Coord> {
    if p.is_zero() {
        return Vec::new();
    }
    let sf = p.square_free();
    if sf.deg() == 0 {
        return Vec::new();
    }
    let sturm = SturmSequence::new(&sf);
    let lc = sf.lc();
    let monic: Vec<Rational> = (1..=sf.deg())
        .map(|j| sf.coeff(sf.deg() - j) / &lc)
        .collect();
    let bound = power_of_two_above(&(root_bound(&monic) + Rational::one()));
    let mut found: Vec<(Rational, Rational)> = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((a, b)) = stack.pop() {
        let n = sturm.count(&a, &b);
        if n == 0 {
            continue;
        }
        if n == 1 {
            found.push((a, b));
            continue;
        }
        let m = midpoint(&a, &b);
        // right half pushed first so the left half is processed first
        stack.push((m.clone(), b));
        stack.push((a, m));
    }
    // each (a, b] holds one root; make endpoints non-roots or collapse
    let mut isolated: Vec<(Rational, Rational)> = Vec::with_capacity(found.len());
    for (mut a, mut b) in found {
        loop {
            if sf.sign_at(&b) == Sign::Zero {
                a = b.clone();
                break;
            }
            if sf.sign_at(&a) != Sign::Zero {
                break;
            }
            let m = midpoint(&a, &b);
            if sturm.count(&m, &b) == 1 {
                a = m;
            } else {
                b = m;
            }
        }
        isolated.push((a, b));
    }
    // exact detection of rational roots: a root p/q of the primitive integer
    // polynomial has q dividing the leading coefficient
    let ints = sf.integer_coeffs();
    let lead = Rational::from_integer(ints.last().expect("nonzero").abs());
    let mut coords: Vec<Option<Rational>> = Vec::with_capacity(isolated.len());
    for (a, b) in isolated.iter_mut() {
        if a == b {
            coords.push(Some(a.clone()));
            continue;
        }
        let target = lead.recip();
        let lo_sign = sf.sign_at(a);
        while &*b - &*a >= target {
            let m = midpoint(a, b);
            let s = sf.sign_at(&m);
            if s == Sign::Zero {
                *a = m.clone();
                *b = m;
                break;
            } else if s == lo_sign {
                *a = m;
            } else {
                *b = m;
            }
        }
        if a == b {
            coords.push(Some(a.clone()));
            continue;
        }
        let k_lo = ceil(&(&*a * &lead));
        let k_hi = floor(&(&*b * &lead));
        let mut hit = None;
        let mut k = k_lo;
        while k <= k_hi {
            let cand = Rational::from_integer(k.clone()) / &lead;
            if sf.sign_at(&cand) == Sign::Zero {
                hit = Some(cand);
                break;
            }
            k += 1;
        }
        coords.push(hit);
    }
    let mut reduced = sf.clone();
    for r in coords.iter().flatten() {
        reduced = reduced
            .div_exact(&DensePoly::linear_root(r))
            .expect("rational root divides");
    }
    let reduced = reduced.primitive();
    isolated
        .into_iter()
        .zip(coords)
        .map(|((a, b), exact)| match exact {
            Some(r) => Coord::Rational(r),
            None => Coord::Algebraic(AlgebraicNumber::from_parts(reduced.clone(), a, b)),
        })
        .collect()
}

/// Exact sign of `p` at a sample point. `p` may use fewer variables than the
/// point has coordinates; its variables are matched to the leading ones.
pub fn sign_at(p: &Polynomial, s: &SamplePoint) -> Result<Sign> {
    if p.nvars() > s.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.nvars(),
            got: s.dim(),
        });
    }
    let mut q = p.clone();
    for (i, c) in s.coords.iter().take(p.nvars()).enumerate() {
        if let Some(r) = c.as_rational() {
            if q.depends_on(i) {
                q = q.substitute_value(i, r);
            }
        }
    }
    let used = q.used_vars();
    match used.len() {
        0 => Ok(Sign::of(&q.as_constant().expect("constant"))),
        1 => {
            let i = used[0];
            let d = q.to_dense(i).expect("univariate");
            match &s.coords[i] {
                Coord::Algebraic(a) => Ok(sign_univariate(&d, a)),
                Coord::Rational(r) => Ok(d.sign_at(r)),
            }
        }
        _ => Ok(sign_multivariate(&q, &used, &s.coords[..p.nvars()])),
    }
}

/// Sign of `f(a)` for an algebraic `a`.
pub fn sign_univariate(f: &DensePoly, a: &AlgebraicNumber) -> Sign {
    if let Some(v) = a.exact() {
        return f.sign_at(v);
    }
    let r = f.rem(&a.defining);
    if r.is_zero() {
        return Sign::Zero;
    }
    let g = a.defining.gcd(&r);
    if a.is_root_of_divisor(&g) {
        return Sign::Zero;
    }
    // r(a) != 0: shrink until r has no root in the interval
    let sturm = SturmSequence::new(&r.square_free());
    let mut cur = a.clone();
    loop {
        if let Some(v) = cur.exact() {
            return r.sign_at(v);
        }
        let slo = r.sign_at(&cur.lo);
        if slo != Sign::Zero && sturm.count(&cur.lo, &cur.hi) == 0 {
            return slo;
        }
        cur = cur.bisect();
    }
}

fn sign_multivariate(q: &Polynomial, used: &[usize], coords: &[Coord]) -> Sign {
    let mut pts: Vec<Coord> = coords.to_vec();
    let enclosure = |pts: &[Coord]| {
        let bx: Vec<RatInterval> = pts.iter().map(Coord::interval).collect();
        eval_rat_interval(q, &bx)
    };
    let decided = |iv: &RatInterval| -> Option<Sign> {
        if iv.lo.is_positive() {
            Some(Sign::Positive)
        } else if iv.hi.is_negative() {
            Some(Sign::Negative)
        } else if iv.lo.is_zero() && iv.hi.is_zero() {
            Some(Sign::Zero)
        } else {
            None
        }
    };
    for _ in 0..12 {
        let iv = enclosure(&pts);
        if let Some(s) = decided(&iv) {
            return s;
        }
        for &i in used {
            pts[i] = pts[i].bisected();
        }
    }
    // certified zero test: every value q(conjugates) is a root of R(z)
    let mut names: Vec<String> = q.vars().to_vec();
    names.push("__value".into());
    let zvars: Vars = names.into();
    let z = zvars.len() - 1;
    let mut t = &Polynomial::variable(&zvars, z) - &q.with_vars(&zvars).expect("superset");
    for &i in used {
        t = match &pts[i] {
            Coord::Algebraic(a) => norm_over(&a.defining, &t, i),
            Coord::Rational(r) => t.substitute_value(i, r),
        };
    }
    let r = t.to_dense(z).expect("only the value variable remains");
    let low = lowest_nonzero_root_modulus(&r);
    loop {
        let iv = enclosure(&pts);
        if let Some(s) = decided(&iv) {
            return s;
        }
        if let Some(l) = &low {
            if iv.lo > -l.clone() && &iv.hi < l {
                return Sign::Zero;
            }
        }
        for &i in used {
            pts[i] = pts[i].bisected();
        }
    }
}

/// `Some(L)` such that every nonzero root of `r` has modulus > L, or `None`
/// when 0 is not a root (then no zero test is needed).
fn lowest_nonzero_root_modulus(r: &DensePoly) -> Option<Rational> {
    let c = r.coeffs();
    let m = c.iter().position(|v| !v.is_zero())?;
    if m == 0 {
        return None;
    }
    let tail = &c[m..];
    let a0 = tail[0].abs();
    let max = tail[1..]
        .iter()
        .map(|v| v.abs())
        .max()
        .unwrap_or_else(Rational::zero);
    Some(&a0 / (&a0 + max) / Rational::from_integer(BigInt::from(2)))
}

/// Refines a coordinate to the given width (no-op for rationals).
pub fn refine_coord(c: &Coord, width: &Rational) -> Coord {
    c.refined(width)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::vars_from;
    use crate::rational::{int, ratio};

    fn x_poly(coeffs: &[i64]) -> Polynomial {
        let v = vars_from(&["x"]);
        Polynomial::from_dense(&v, 0, &DensePoly::from_ints(coeffs))
    }

    #[test]
    fn square_free_examples() {
        assert_eq!(square_free(&x_poly(&[1, -2, 1])).unwrap(), x_poly(&[-1, 1]));
        assert_eq!(square_free(&x_poly(&[-1, 0, 1])).unwrap(), x_poly(&[-1, 0, 1]));
        assert_eq!(square_free(&x_poly(&[0, 0, 0, 1])).unwrap(), x_poly(&[0, 1]));
        assert_eq!(
            square_free(&Polynomial::zero(&vars_from(&["x"]))),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn isolation_examples() {
        assert!(isolate_real_roots(&x_poly(&[1, 0, 1])).unwrap().is_empty());
        let r = isolate_real_roots(&x_poly(&[-2, 0, 1])).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r[0].lo() >= &int(-2) && r[0].hi() <= &int(-1));
        assert!(r[1].lo() >= &int(1) && r[1].hi() <= &int(2));
        // x(x-1)(x-3) = x^3 - 4x^2 + 3x
        let r = isolate_real_roots(&x_poly(&[0, 3, -4, 1])).unwrap();
        let exact: Vec<_> = r.iter().map(|a| a.exact().cloned()).collect();
        assert_eq!(exact, vec![Some(int(0)), Some(int(1)), Some(int(3))]);
        assert_eq!(
            isolate_real_roots(&Polynomial::zero(&vars_from(&["x"]))),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn rational_roots_with_denominators() {
        // (2x - 1)(3x + 2)(x^2 - 3)
        let p = DensePoly::from_ints(&[-1, 2])
            .mul(&DensePoly::from_ints(&[2, 3]))
            .mul(&DensePoly::from_ints(&[-3, 0, 1]));
        let c = isolate_dense(&p);
        assert_eq!(c.len(), 4);
        assert_eq!(c[1], Coord::Rational(ratio(-2, 3)));
        assert_eq!(c[2], Coord::Rational(ratio(1, 2)));
        match &c[0] {
            Coord::Algebraic(a) => assert_eq!(a.defining(), &DensePoly::from_ints(&[-3, 0, 1])),
            other => panic!("expected algebraic, got {other:?}"),
        }
    }

    #[test]
    fn refine_examples() {
        let sqrt2 = AlgebraicNumber::new(DensePoly::from_ints(&[-2, 0, 1]), int(1), int(2)).unwrap();
        let r = sqrt2.refine(&ratio(1, 8));
        assert!(r.width() <= ratio(1, 8));
        assert_eq!((r.lo().clone(), r.hi().clone()), (ratio(11, 8), ratio(3, 2)));
        assert_eq!(r.refine(&int(1)), r);
        let half = AlgebraicNumber::new(DensePoly::new(vec![ratio(-1, 2), int(1)]), int(0), int(1)).unwrap();
        let h = half.refine(&ratio(1, 4));
        assert_eq!(h.exact(), Some(&ratio(1, 2)));
    }

    #[test]
    fn sign_at_examples() {
        let sqrt2 = AlgebraicNumber::new(DensePoly::from_ints(&[-2, 0, 1]), int(1), int(2)).unwrap();
        let s = SamplePoint::new(vec![Coord::Algebraic(sqrt2)]);
        assert_eq!(sign_at(&x_poly(&[-2, 0, 1]), &s).unwrap(), Sign::Zero);
        assert_eq!(sign_at(&x_poly(&[0, 1]), &s).unwrap(), Sign::Positive);
        assert_eq!(sign_at(&x_poly(&[-2, 1]), &s).unwrap(), Sign::Negative);
    }

    #[test]
    fn sign_at_two_algebraic_coordinates() {
        let sqrt2 = AlgebraicNumber::new(DensePoly::from_ints(&[-2, 0, 1]), int(1), int(2)).unwrap();
        let sqrt3 = AlgebraicNumber::new(DensePoly::from_ints(&[-3, 0, 1]), int(1), int(2)).unwrap();
        let s = SamplePoint::new(vec![Coord::Algebraic(sqrt2.clone()), Coord::Algebraic(sqrt2)]);
        let v = vars_from(&["x", "y"]);
        let x = Polynomial::variable(&v, 0);
        let y = Polynomial::variable(&v, 1);
        assert_eq!(sign_at(&(&x - &y), &s).unwrap(), Sign::Zero);
        assert_eq!(sign_at(&(&(&x * &y) - &Polynomial::constant(&v, int(2))), &s).unwrap(), Sign::Zero);
        let t = SamplePoint::new(vec![
            s.coords[0].clone(),
            Coord::Algebraic(sqrt3),
        ]);
        assert_eq!(sign_at(&(&x - &y), &t).unwrap(), Sign::Negative);
        // x*y - sqrt6 ... (xy)^2 - 6 = 0
        let xy = &x * &y;
        assert_eq!(sign_at(&(&(&xy * &xy) - &Polynomial::constant(&v, int(6))), &t).unwrap(), Sign::Zero);
    }

    #[test]
    fn comparisons() {
        let sqrt2 = AlgebraicNumber::new(DensePoly::from_ints(&[-2, 0, 1]), int(1), int(2)).unwrap();
        let other = AlgebraicNumber::new(
            DensePoly::from_ints(&[-2, 0, 1]).mul(&DensePoly::from_ints(&[-3, 1])),
            ratio(5, 4),
            ratio(3, 2),
        )
        .unwrap();
        assert_eq!(sqrt2.cmp_algebraic(&other), Ordering::Equal);
        let sqrt3 = AlgebraicNumber::new(DensePoly::from_ints(&[-3, 0, 1]), int(1), int(2)).unwrap();
        assert_eq!(sqrt2.cmp_algebraic(&sqrt3), Ordering::Less);
        assert_eq!(sqrt2.cmp_rational(&ratio(7, 5)), Ordering::Greater);
        assert_eq!(sqrt2.cmp_rational(&ratio(3, 2)), Ordering::Less);
    }

    #[test]
    fn sturm_counts() {
        let p = DensePoly::from_ints(&[0, 3, -4, 1]);
        let s = SturmSequence::new(&p);
        assert_eq!(s.count_all(), 3);
        assert_eq!(s.count(&ratio(-1, 2), &ratio(3, 2)), 2);
    }
}
