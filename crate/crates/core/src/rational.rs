//! Exact rational scalars and the small set of helpers the rest of the crate
//! needs on top of [`num_rational::BigRational`].

use std::cmp::Ordering;

use num_bigint::{BigInt, Sign as BigSign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Sign of an exact quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(r: &Rational) -> Sign {
        if r.is_zero() {
            Sign::Zero
        } else if r.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn of_int(r: &BigInt) -> Sign {
        match r.sign() {
            BigSign::Minus => Sign::Negative,
            BigSign::NoSign => Sign::Zero,
            BigSign::Plus => Sign::Positive,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn from_i8(v: i8) -> Sign {
        match v.cmp(&0) {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }

    pub fn from_ordering(o: Ordering) -> Sign {
        match o {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }

    pub fn negate(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }

    pub fn mul(self, other: Sign) -> Sign {
        Sign::from_i8(self.as_i8() * other.as_i8())
    }
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn two() -> Rational {
    int(2)
}

pub fn midpoint(a: &Rational, b: &Rational) -> Rational {
    (a + b) / two()
}

pub fn floor(r: &Rational) -> BigInt {
    r.floor().to_integer()
}

pub fn ceil(r: &Rational) -> BigInt {
    r.ceil().to_integer()
}

/// Parses `"n"`, `"-n"` or `"n/d"`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    let bad = || Error::Parse(format!("invalid rational literal '{t}'"));
    match t.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in '{t}'")));
            }
            Ok(Rational::new(n, d))
        }
        None => {
            if let Some((ip, fp)) = t.split_once('.') {
                // decimal literal, read exactly
                let neg = ip.trim_start().starts_with('-');
                let digits = format!("{}{}", ip.trim_start_matches(['-', '+']), fp);
                if fp.is_empty() || !fp.chars().all(|c| c.is_ascii_digit()) {
                    return Err(bad());
                }
                let n: BigInt = digits.parse().map_err(|_| bad())?;
                let d = num_traits::pow(BigInt::from(10), fp.len());
                let r = Rational::new(n, d);
                return Ok(if neg { -r } else { r });
            }
            let n: BigInt = t.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(n))
        }
    }
}

/// Canonical text form: `"n"` for integers, `"n/d"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        if r.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Interval `[lo, hi]` of f64 values guaranteed to contain `r`.
pub fn to_f64_interval(r: &Rational) -> (f64, f64) {
    let v = to_f64(r);
    if !v.is_finite() {
        return (f64::NEG_INFINITY.min(v), f64::INFINITY.max(v));
    }
    match Rational::from_float(v).map(|e| e.cmp(r)) {
        Some(Ordering::Equal) => (v, v),
        _ => (v.next_down(), v.next_up()),
    }
}

/// The rational with the smallest denominator (then smallest numerator in
/// absolute value) lying strictly between `lo` and `hi`.
pub fn simplest_between(lo: &Rational, hi: &Rational) -> Rational {
    assert!(lo < hi, "simplest_between needs lo < hi");
    if lo.is_negative() && hi.is_positive() {
        return Rational::zero();
    }
    if !lo.is_negative() {
        simplest_between_positive(lo, hi)
    } else {
        -simplest_between_positive(&-hi, &-lo)
    }
}

// Stern-Brocot style search on the open interval (lo, hi) with 0 <= lo.
fn simplest_between_positive(lo: &Rational, hi: &Rational) -> Rational {
    let fl = lo.floor();
    let candidate = &fl + Rational::one();
    if &candidate < hi {
        return candidate;
    }
    // lo and hi share the integer part (or hi is exactly fl + 1)
    let frac_lo = lo - &fl;
    let frac_hi = hi - &fl;
    if frac_lo.is_zero() {
        // interval (fl, fl + frac_hi): pick 1/k with 1/k < frac_hi
        let k = (frac_hi.recip()).floor() + Rational::one();
        return fl + k.recip();
    }
    // recurse on reciprocals: (1/frac_hi, 1/frac_lo)
    let inner = simplest_between_positive(&frac_hi.recip(), &frac_lo.recip());
    fl + inner.recip()
}

/// Exact `k`-th root of a non-negative rational if it exists.
pub fn exact_root(r: &Rational, k: u32) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().nth_root(k);
    let d = r.denom().nth_root(k);
    let cand = Rational::new(n, d);
    if num_traits::pow(cand.clone(), k as usize) == *r {
        Some(cand)
    } else {
        None
    }
}

/// Smallest power of two that is >= |r| (at least 1).
pub fn power_of_two_above(r: &Rational) -> Rational {
    let mut p = Rational::one();
    let a = r.abs();
    while p < a {
        p *= two();
    }
    p
}

pub fn lcm_of_denominators<'a>(it: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    it.into_iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

pub fn gcd_of_numerators<'a>(it: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    it.into_iter()
        .fold(BigInt::zero(), |acc, r| acc.gcd(r.numer()))
}
