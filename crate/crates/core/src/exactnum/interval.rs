//! Closed intervals with exact rational endpoints.
//!
//! The arithmetic here is exact; callers that chain many operations round
//! the endpoints outward with [`Interval::round_outward`] to keep the
//! rationals small.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use super::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

impl Interval {
    /// Panics if `lo > hi`.
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "interval with lo > hi");
        Interval { lo, hi }
    }

    pub fn try_new(lo: Rational, hi: Rational) -> Option<Self> {
        (lo <= hi).then_some(Interval { lo, hi })
    }

    pub fn point(x: Rational) -> Self {
        Interval {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::point(Rational::from_integer(n.into()))
    }

    /// Hull of two values given in either order.
    pub fn hull(a: Rational, b: Rational) -> Self {
        if a <= b {
            Interval { lo: a, hi: b }
        } else {
            Interval { lo: b, hi: a }
        }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn into_bounds(self) -> (Rational, Rational) {
        (self.lo, self.hi)
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn is_subset_of(&self, other: &Interval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    pub fn intersects(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// Certified sign: `Some` only when every point of the interval has the
    /// same sign (a zero-width interval at 0 gives `Equal`).
    pub fn sign(&self) -> Option<Ordering> {
        if self.lo.is_positive() {
            Some(Ordering::Greater)
        } else if self.hi.is_negative() {
            Some(Ordering::Less)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    /// Every point is strictly greater than `x`.
    pub fn strictly_above(&self, x: &Rational) -> bool {
        &self.lo > x
    }

    /// Every point is strictly smaller than `x`.
    pub fn strictly_below(&self, x: &Rational) -> bool {
        &self.hi < x
    }

    pub fn abs(&self) -> Interval {
        if !self.lo.is_negative() {
            self.clone()
        } else if !self.hi.is_positive() {
            -self
        } else {
            let m = if -&self.lo > self.hi {
                -&self.lo
            } else {
                self.hi.clone()
            };
            Interval {
                lo: Rational::zero(),
                hi: m,
            }
        }
    }

    pub fn square(&self) -> Interval {
        let a = self.abs();
        Interval {
            lo: &a.lo * &a.lo,
            hi: &a.hi * &a.hi,
        }
    }

    /// `None` when the interval contains zero.
    pub fn recip(&self) -> Option<Interval> {
        if self.contains_zero() {
            return None;
        }
        Some(Interval {
            lo: self.hi.recip(),
            hi: self.lo.recip(),
        })
    }

    pub fn checked_div(&self, rhs: &Interval) -> Option<Interval> {
        Some(self * &rhs.recip()?)
    }

    pub fn scale(&self, k: &Rational) -> Interval {
        Interval::hull(&self.lo * k, &self.hi * k)
    }

    /// Enclosure of `sqrt` over the interval, with endpoints on the dyadic
    /// grid of spacing `2^-bits`. `None` when the interval reaches below 0.
    pub fn sqrt(&self, bits: u32) -> Option<Interval> {
        if self.lo.is_negative() {
            return None;
        }
        Some(Interval {
            lo: sqrt_floor(&self.lo, bits),
            hi: sqrt_ceil(&self.hi, bits),
        })
    }

    /// Rounds `lo` down and `hi` up onto the dyadic grid `2^-bits`.
    pub fn round_outward(&self, bits: u32) -> Interval {
        Interval {
            lo: floor_dyadic(&self.lo, bits),
            hi: ceil_dyadic(&self.hi, bits),
        }
    }

    pub fn to_f64_bounds(&self) -> (f64, f64) {
        (
            self.lo.to_f64().unwrap_or(f64::NAN),
            self.hi.to_f64().unwrap_or(f64::NAN),
        )
    }

    pub fn midpoint_f64(&self) -> f64 {
        self.midpoint().to_f64().unwrap_or(f64::NAN)
    }

    /// `[lo, hi]` as decimals with `digits` fractional digits, rounded
    /// outward so the printed interval still encloses this one.
    pub fn to_decimal_string(&self, digits: usize) -> String {
        format!(
            "[{}, {}]",
            decimal_floor(&self.lo, digits),
            decimal_ceil(&self.hi, digits)
        )
    }
}

fn pow2(bits: u32) -> BigInt {
    BigInt::one() << bits as usize
}

pub(crate) fn floor_dyadic(x: &Rational, bits: u32) -> Rational {
    if x.denom().is_one() {
        return x.clone();
    }
    let scale = pow2(bits);
    let n = (x.numer() * &scale).div_floor(x.denom());
    Rational::new(n, scale)
}

pub(crate) fn ceil_dyadic(x: &Rational, bits: u32) -> Rational {
    if x.denom().is_one() {
        return x.clone();
    }
    let scale = pow2(bits);
    let n = (x.numer() * &scale).div_ceil(x.denom());
    Rational::new(n, scale)
}

/// Largest multiple of `2^-bits` not above `sqrt(x)`, for `x >= 0`.
fn sqrt_floor(x: &Rational, bits: u32) -> Rational {
    // floor(x * 4^bits) <= x * 4^bits, so its integer sqrt is a lower bound
    let scaled = (x.numer() << (2 * bits as usize)).div_floor(x.denom());
    Rational::new(scaled.sqrt(), pow2(bits))
}

fn sqrt_ceil(x: &Rational, bits: u32) -> Rational {
    let scaled = (x.numer() << (2 * bits as usize)).div_ceil(x.denom());
    let mut s = scaled.sqrt();
    if &s * &s < scaled {
        s += 1;
    }
    Rational::new(s, pow2(bits))
}

fn decimal_parts(x: &Rational, digits: usize, ceil: bool) -> String {
    let scale = BigInt::from(10).pow(digits as u32);
    let scaled = x.numer() * &scale;
    let n = if ceil {
        scaled.div_ceil(x.denom())
    } else {
        scaled.div_floor(x.denom())
    };
    let neg = n.is_negative();
    let digits_str = n.abs().to_string();
    let body = if digits == 0 {
        digits_str
    } else {
        let padded = format!("{:0>width$}", digits_str, width = digits + 1);
        let (int, frac) = padded.split_at(padded.len() - digits);
        format!("{int}.{frac}")
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

/// `x` rounded down to `digits` decimals.
pub fn decimal_floor(x: &Rational, digits: usize) -> String {
    decimal_parts(x, digits, false)
}

/// `x` rounded up to `digits` decimals.
pub fn decimal_ceil(x: &Rational, digits: usize) -> String {
    decimal_parts(x, digits, true)
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal_string(f.precision().unwrap_or(12)))
    }
}

impl Serialize for Interval {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        // exact endpoints as "p/q" strings
        [self.lo.to_string(), self.hi.to_string()].serialize(s)
    }
}

impl Neg for &Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval {
            lo: -&self.hi,
            hi: -&self.lo,
        }
    }
}

impl Neg for Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        -&self
    }
}

impl Add for &Interval {
    type Output = Interval;
    fn add(self, rhs: &Interval) -> Interval {
        Interval {
            lo: &self.lo + &rhs.lo,
            hi: &self.hi + &rhs.hi,
        }
    }
}

impl Sub for &Interval {
    type Output = Interval;
    fn sub(self, rhs: &Interval) -> Interval {
        Interval {
            lo: &self.lo - &rhs.hi,
            hi: &self.hi - &rhs.lo,
        }
    }
}

impl Mul for &Interval {
    type Output = Interval;
    fn mul(self, rhs: &Interval) -> Interval {
        let products = [
            &self.lo * &rhs.lo,
            &self.lo * &rhs.hi,
            &self.hi * &rhs.lo,
            &self.hi * &rhs.hi,
        ];
        let mut lo = products[0].clone();
        let mut hi = products[0].clone();
        for p in &products[1..] {
            if p < &lo {
                lo = p.clone();
            }
            if p > &hi {
                hi = p.clone();
            }
        }
        Interval { lo, hi }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Interval {
            type Output = Interval;
            fn $m(self, rhs: Interval) -> Interval {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn iv(a: (i64, i64), b: (i64, i64)) -> Interval {
        Interval::new(r(a.0, a.1), r(b.0, b.1))
    }

    #[test]
    #[should_panic]
    fn rejects_inverted_bounds() {
        Interval::new(r(1, 1), r(0, 1));
    }

    #[test]
    fn mul_sign_cases() {
        let a = iv((-1, 1), (2, 1));
        let b = iv((-3, 1), (1, 1));
        assert_eq!(&a * &b, iv((-6, 1), (3, 1)));
    }

    #[test]
    fn recip_refuses_zero() {
        assert!(iv((-1, 1), (1, 1)).recip().is_none());
        assert_eq!(iv((2, 1), (4, 1)).recip().unwrap(), iv((1, 4), (1, 2)));
    }

    #[test]
    fn sqrt_of_perfect_squares_is_exact() {
        let s = iv((4, 1), (9, 1)).sqrt(20).unwrap();
        assert_eq!(s, iv((2, 1), (3, 1)));
    }

    #[test]
    fn sqrt_encloses() {
        let s = Interval::from_int(2).sqrt(40).unwrap();
        let lo2 = s.lo() * s.lo();
        let hi2 = s.hi() * s.hi();
        assert!(lo2 <= r(2, 1) && hi2 >= r(2, 1));
        assert!(s.width() <= Rational::new(1.into(), pow2(39)));
        assert!(Interval::new(r(-1, 10), r(1, 1)).sqrt(10).is_none());
    }

    #[test]
    fn rounding_is_outward() {
        let x = Interval::point(r(1, 3));
        let y = x.round_outward(16);
        assert!(x.is_subset_of(&y));
        assert!(y.width() <= Rational::new(1.into(), pow2(16)));
        let neg = Interval::point(r(-1, 3)).round_outward(16);
        assert!(neg.contains(&r(-1, 3)));
    }

    #[test]
    fn decimal_strings_round_outward() {
        let x = Interval::new(r(-1, 3), r(2, 3));
        assert_eq!(x.to_decimal_string(4), "[-0.3334, 0.6667]");
        assert_eq!(decimal_floor(&r(1, 8), 2), "0.12");
        assert_eq!(decimal_ceil(&r(1, 8), 2), "0.13");
        assert_eq!(decimal_floor(&r(5, 1), 0), "5");
    }

    #[test]
    fn certified_sign() {
        assert_eq!(iv((1, 10), (1, 1)).sign(), Some(Ordering::Greater));
        assert_eq!(Interval::from_int(0).sign(), Some(Ordering::Equal));
        assert_eq!(iv((-1, 10), (1, 1)).sign(), None);
    }

    #[test]
    fn abs_and_square_straddling() {
        let x = iv((-3, 1), (2, 1));
        assert_eq!(x.abs(), iv((0, 1), (3, 1)));
        assert_eq!(x.square(), iv((0, 1), (9, 1)));
    }
}
