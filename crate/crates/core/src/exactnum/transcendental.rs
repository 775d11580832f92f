//! Rational enclosures of pi, arctangent and arccosine.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Interval, Rational};

/// pi truncated to 64 decimals; the true value lies in `[PI_64, PI_64 + 1e-64]`.
const PI_64: &str = "31415926535897932384626433832795028841971693993751058209749445923";
const PI_64_DECIMALS: u32 = 64;
/// 10^-64 < 2^-212, so the stored constant serves requests up to this many bits.
const PI_STORED_BITS: u32 = 210;
/// Covers the rounding error of a few thousand series terms.
const SERIES_GUARD_BITS: u32 = 16;

fn stored_pi() -> &'static Interval {
    static PI: OnceLock<Interval> = OnceLock::new();
    PI.get_or_init(|| {
        let scale = BigInt::from(10).pow(PI_64_DECIMALS);
        let digits: BigInt = PI_64.parse().expect("pi digits");
        Interval::new(
            Rational::new(digits.clone(), scale.clone()),
            Rational::new(digits + 1, scale),
        )
    })
}

/// Enclosure of pi no wider than about `2^-bits`.
pub fn pi_interval(bits: u32) -> Interval {
    if bits <= PI_STORED_BITS {
        stored_pi().round_outward(bits + 2)
    } else {
        machin_pi(bits)
    }
}

/// `pi = 16 atan(1/5) - 4 atan(1/239)`, each arctangent enclosed by two
/// consecutive partial sums of its alternating series.
pub fn machin_pi(bits: u32) -> Interval {
    let a = atan_inverse_integer(5, bits + 8);
    let b = atan_inverse_integer(239, bits + 8);
    let sixteen = Rational::from_integer(16.into());
    let four = Rational::from_integer(4.into());
    (&a.scale(&sixteen) - &b.scale(&four)).round_outward(bits + 2)
}

/// `atan(1/n)` for an integer `n >= 2`.
fn atan_inverse_integer(n: i64, bits: u32) -> Interval {
    let x = Rational::new(1.into(), n.into());
    alternating_atan(&x, bits)
}

/// Taylor series of `atan(x)` for `|x| < 1`. The tail of an alternating
/// series with shrinking terms is bounded by its first term; powers and
/// partial sums are rounded outward onto a dyadic grid to keep the
/// rationals small.
fn alternating_atan(x: &Rational, bits: u32) -> Interval {
    if x.is_zero() {
        return Interval::point(Rational::zero());
    }
    let work = bits + SERIES_GUARD_BITS;
    let tol = Rational::new(BigInt::one(), BigInt::one() << bits as usize);
    let x2 = Interval::point(x * x).round_outward(work);
    let mut power = Interval::point(x.clone()).round_outward(work);
    let mut sum = Interval::point(Rational::zero());
    let mut k: i64 = 0;
    loop {
        let term = power
            .scale(&Rational::new(1.into(), (2 * k + 1).into()))
            .round_outward(work);
        let bound = term.abs().hi().clone();
        if bound <= tol && k > 0 {
            let tail = Interval::new(-bound.clone(), bound);
            return (&sum + &tail).round_outward(work);
        }
        sum = if k % 2 == 0 { &sum + &term } else { &sum - &term };
        power = (&power * &x2).round_outward(work);
        k += 1;
    }
}

/// Enclosure of `atan(t)` for a rational point.
fn atan_point(t: &Rational, bits: u32) -> Interval {
    if t.is_negative() {
        return -atan_point(&-t, bits);
    }
    let one = Rational::one();
    if t > &one {
        // atan(t) = pi/2 - atan(1/t)
        let half_pi = pi_interval(bits + 4).scale(&Rational::new(1.into(), 2.into()));
        return (&half_pi - &atan_point(&t.recip(), bits + 2)).round_outward(bits + 4);
    }
    if t > &Rational::new(1.into(), 4.into()) {
        // half-angle: atan(t) = 2 atan(t / (1 + sqrt(1 + t^2)))
        let inner = Interval::point(&one + t * t)
            .sqrt(bits + 8)
            .expect("positive radicand");
        let denom = &Interval::point(one) + &inner;
        let u = Interval::point(t.clone())
            .checked_div(&denom)
            .expect("denominator above 1")
            .round_outward(bits + 8);
        let half = atan_monotone(&u, bits + 2);
        return half.scale(&Rational::from_integer(2.into())).round_outward(bits + 4);
    }
    alternating_atan(t, bits + 4).round_outward(bits + 4)
}

/// Enclosure of `atan` over an interval, using monotonicity.
pub fn atan_interval(x: &Interval, bits: u32) -> Interval {
    atan_monotone(x, bits)
}

fn atan_monotone(x: &Interval, bits: u32) -> Interval {
    let lo = atan_point(x.lo(), bits);
    if x.is_point() {
        return lo;
    }
    // atan' <= 1: a narrow input costs one series instead of two
    if x.width() <= Rational::new(BigInt::one(), BigInt::one() << bits as usize) {
        return Interval::new(lo.lo().clone(), lo.hi() + x.width());
    }
    let hi = atan_point(x.hi(), bits);
    Interval::new(lo.lo().clone(), hi.hi().clone())
}

/// Enclosure of `acos` over an interval; the input is clamped to `[-1, 1]`,
/// so callers must know the true argument lies there.
pub fn acos_interval(x: &Interval, bits: u32) -> Interval {
    let one = Rational::one();
    let clamp = |v: &Rational| -> Rational {
        if v > &one {
            one.clone()
        } else if v < &-&one {
            -&one
        } else {
            v.clone()
        }
    };
    let lo = clamp(x.lo());
    let hi = clamp(x.hi());
    // acos is decreasing
    let upper = acos_point(&lo, bits);
    let lower = if lo == hi { upper.clone() } else { acos_point(&hi, bits) };
    Interval::new(lower.lo().clone(), upper.hi().clone())
}

/// `acos(x) = 2 atan(sqrt((1 - x) / (1 + x)))` for `x` in `(-1, 1]`.
fn acos_point(x: &Rational, bits: u32) -> Interval {
    let one = Rational::one();
    if x == &-&one {
        return pi_interval(bits);
    }
    let ratio = (&one - x) / (&one + x);
    let t = Interval::point(ratio).sqrt(bits + 8).expect("nonnegative");
    atan_monotone(&t, bits + 2)
        .scale(&Rational::from_integer(2.into()))
        .round_outward(bits + 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny(bits: u32) -> Rational {
        Rational::new(1.into(), BigInt::one() << bits as usize)
    }

    #[test]
    fn machin_agrees_with_stored_digits() {
        let stored = stored_pi();
        let m = machin_pi(200);
        assert!(m.intersects(stored));
        assert!(m.width() < tiny(190));
    }

    #[test]
    fn pi_beyond_stored_precision() {
        let p = pi_interval(400);
        assert!(p.width() < tiny(390));
        assert!(p.intersects(stored_pi()));
    }

    #[test]
    fn atan_one_is_quarter_pi() {
        let a = atan_point(&Rational::one(), 80);
        let quarter = pi_interval(90).scale(&Rational::new(1.into(), 4.into()));
        assert!(a.intersects(&quarter));
        assert!(a.width() < tiny(70));
    }

    #[test]
    fn acos_special_values() {
        let half = Interval::point(Rational::new(1.into(), 2.into()));
        let third_pi = pi_interval(90).scale(&Rational::new(1.into(), 3.into()));
        let a = acos_interval(&half, 80);
        assert!(a.intersects(&third_pi));
        assert!(a.width() < tiny(70));
        let z = acos_interval(&Interval::point(Rational::one()), 40);
        assert!(z.contains(&Rational::zero()));
        let m = acos_interval(&Interval::point(-Rational::one()), 40);
        assert!(m.intersects(&pi_interval(40)));
    }

    #[test]
    fn atan_large_and_negative() {
        let v = atan_point(&Rational::from_integer(1000.into()), 60);
        let f = 1000f64.atan();
        let (lo, hi) = v.to_f64_bounds();
        assert!(lo <= f + 1e-15 && f - 1e-15 <= hi);
        let n = atan_point(&Rational::new((-3).into(), 7.into()), 60);
        let (lo, hi) = n.to_f64_bounds();
        let f = (-3f64 / 7.0).atan();
        assert!(lo <= f + 1e-15 && f - 1e-15 <= hi);
    }
}
