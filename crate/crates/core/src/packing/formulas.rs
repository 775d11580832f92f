//! Closed-form geometry: inner Soddy circle, density of a triangle of
//! mutually tangent discs, and the disc-removal margin.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::Error;
use crate::exactnum::{acos_interval, width_bits, Expr, Interval, Rational};

/// Extra bits on top of the requested width, and the refinement ceiling.
const GUARD_BITS: u32 = 32;
const MAX_BITS: u32 = 4096;

fn require_positive(xs: &[&Interval]) -> Result<(), Error> {
    if xs.iter().all(|x| x.lo().is_positive()) {
        Ok(())
    } else {
        Err(Error::NonPositiveInterval)
    }
}

/// Repeats `f` at growing precision until its result is at most `width`
/// wide; wide inputs may make that impossible, in which case the last
/// enclosure is returned.
fn tighten(width: &Rational, f: impl Fn(u32) -> Interval) -> Interval {
    let mut bits = width_bits(width) + GUARD_BITS;
    loop {
        let iv = f(bits);
        if &iv.width() <= width || bits >= MAX_BITS {
            return iv;
        }
        bits = (bits * 2).min(MAX_BITS);
    }
}

fn int(n: i64) -> Interval {
    Interval::from_int(n)
}

fn div(a: &Interval, b: &Interval) -> Interval {
    a.checked_div(b).expect("denominator certified positive")
}

/// Radius of the circle inscribed between three mutually tangent discs:
/// `k4 = k1 + k2 + k3 + 2 sqrt(k1 k2 + k2 k3 + k3 k1)` with `ki = 1 / ri`.
pub fn descartes_inner(
    r1: &Interval,
    r2: &Interval,
    r3: &Interval,
    width: &Rational,
) -> Result<Interval, Error> {
    require_positive(&[r1, r2, r3])?;
    let one = int(1);
    Ok(tighten(width, |bits| {
        let k1 = div(&one, r1).round_outward(bits);
        let k2 = div(&one, r2).round_outward(bits);
        let k3 = div(&one, r3).round_outward(bits);
        let pairs = &(&(&k1 * &k2) + &(&k2 * &k3)) + &(&k3 * &k1);
        let root = pairs.sqrt(bits).expect("positive curvatures");
        let k4 = &(&(&k1 + &k2) + &k3) + &(&int(2) * &root);
        div(&one, &k4).round_outward(bits)
    }))
}

/// [`descartes_inner`] as an expression over the three radii.
pub fn descartes_inner_expr(r1: &Expr, r2: &Expr, r3: &Expr) -> Expr {
    let one = Expr::int(1);
    let k1 = &one / r1;
    let k2 = &one / r2;
    let k3 = &one / r3;
    let pairs = &k1 * &k2 + &k2 * &k3 + &k3 * &k1;
    one / (k1 + k2 + k3 + Expr::int(2) * pairs.sqrt())
}

/// Fraction of the triangle joining the centers of three mutually tangent
/// discs (radii `a`, `b`, `c`) that the discs cover.
///
/// The triangle has sides `a+b`, `b+c`, `c+a`; sectors use law-of-cosines
/// angles and the area is Heron's `sqrt((a+b+c) a b c)`. Inputs are sorted
/// first so every permutation gives the identical interval.
pub fn triangle_density(
    a: &Interval,
    b: &Interval,
    c: &Interval,
    width: &Rational,
) -> Result<Interval, Error> {
    require_positive(&[a, b, c])?;
    let mut r = [a.clone(), b.clone(), c.clone()];
    r.sort_by(|x, y| x.lo().cmp(y.lo()).then_with(|| x.hi().cmp(y.hi())));
    let [a, b, c] = r;
    Ok(tighten(width, |bits| {
        // angle at the center of the disc with radius `x`, between the sides
        // towards the discs with radii `y` and `z`
        let angle = |x: &Interval, y: &Interval, z: &Interval| {
            let xy = x + y;
            let xz = x + z;
            let yz = y + z;
            let num = &(&xy.square() + &xz.square()) - &yz.square();
            let den = &int(2) * &(&xy * &xz);
            acos_interval(&div(&num, &den).round_outward(bits + 8), bits + 4)
        };
        let sectors = &(&(&angle(&a, &b, &c) * &a.square()) + &(&angle(&b, &c, &a) * &b.square()))
            + &(&angle(&c, &a, &b) * &c.square());
        let s = &(&a + &b) + &c;
        let area = (&(&(&s * &a) * &b) * &c)
            .sqrt(bits + 4)
            .expect("positive radii");
        // sectors hold angle * r^2, twice each sector area
        div(&sectors, &(&int(2) * &area)).round_outward(bits)
    }))
}

/// How much of a disc class may be removed while the density stays above a
/// floor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Margin {
    /// Certified positive fraction, clamped to `[0, 1]`.
    Positive(Interval),
    /// The two densities are exactly equal.
    Zero,
    /// The difference could not be signed; the clamped enclosure is kept.
    Inconclusive(Interval),
}

/// `(d_high - d_low) / contribution`, clamped to `[0, 1]`.
pub fn removal_margin(
    d_high: &Interval,
    d_low: &Interval,
    contribution: &Interval,
) -> Result<Margin, Error> {
    require_positive(&[contribution])?;
    let diff = d_high - d_low;
    if diff.is_point() && diff.lo().is_zero() {
        return Ok(Margin::Zero);
    }
    if diff.hi().is_negative() || (diff.hi().is_zero() && diff.lo().is_negative()) {
        return Err(Error::NoMargin);
    }
    let clamp = |v: &Rational| -> Rational {
        if v.is_negative() {
            Rational::zero()
        } else if v > &Rational::one() {
            Rational::one()
        } else {
            v.clone()
        }
    };
    let raw = div(&diff, contribution);
    let eps = Interval::new(clamp(raw.lo()), clamp(raw.hi()));
    if diff.lo().is_positive() {
        Ok(Margin::Positive(eps))
    } else {
        Ok(Margin::Inconclusive(eps))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::parse_rational;

    fn q(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    fn pt(s: &str) -> Interval {
        Interval::point(q(s))
    }

    #[test]
    fn descartes_unit_triple() {
        let w = q("1e-20");
        let r = descartes_inner(&pt("1"), &pt("1"), &pt("1"), &w).unwrap();
        // 1 / (3 + 2 sqrt 3) = 0.15470053837925152901...
        assert!(r.is_subset_of(&Interval::new(q("0.154700538379251529"), q("0.154700538379251530"))));
        assert!(r.width() <= w);
    }

    #[test]
    fn descartes_scales() {
        let w = q("1e-25");
        let one = descartes_inner(&pt("1"), &pt("1"), &pt("1"), &w).unwrap();
        let two = descartes_inner(&pt("2"), &pt("2"), &pt("2"), &w).unwrap();
        assert!(two.intersects(&one.scale(&q("2"))));
    }

    #[test]
    fn descartes_rejects_nonpositive() {
        assert_eq!(
            descartes_inner(&pt("0"), &pt("1"), &pt("1"), &q("0.1")),
            Err(Error::NonPositiveInterval)
        );
    }

    #[test]
    fn triangle_unit_is_hexagonal_density() {
        let w = q("1e-15");
        let d = triangle_density(&pt("1"), &pt("1"), &pt("1"), &w).unwrap();
        assert!(d.is_subset_of(&Interval::new(q("0.906899682117108"), q("0.906899682117110"))));
        assert!(d.width() <= w);
    }

    #[test]
    fn triangle_is_symmetric_and_scale_free() {
        let w = q("1e-18");
        let (a, b, c) = (pt("1"), pt("0.7"), pt("0.4"));
        let d = triangle_density(&a, &b, &c, &w).unwrap();
        assert_eq!(d, triangle_density(&c, &a, &b, &w).unwrap());
        assert_eq!(d, triangle_density(&b, &c, &a, &w).unwrap());
        let t = q("3/2");
        let ds = triangle_density(&a.scale(&t), &b.scale(&t), &c.scale(&t), &w).unwrap();
        assert!(d.intersects(&ds));
    }

    #[test]
    fn margin_linear() {
        let m = removal_margin(&pt("0.9106"), &pt("0.9104"), &pt("0.2")).unwrap();
        assert_eq!(m, Margin::Positive(pt("0.001")));
        assert_eq!(removal_margin(&pt("0.9"), &pt("0.9"), &pt("0.2")).unwrap(), Margin::Zero);
        assert_eq!(
            removal_margin(&pt("0.9"), &pt("0.91"), &pt("0.2")),
            Err(Error::NoMargin)
        );
        let wide = Interval::new(q("0.90"), q("0.92"));
        assert!(matches!(
            removal_margin(&wide, &pt("0.91"), &pt("0.2")).unwrap(),
            Margin::Inconclusive(_)
        ));
        // clamped at 1
        assert_eq!(
            removal_margin(&pt("0.9"), &pt("0.1"), &pt("0.2")).unwrap(),
            Margin::Positive(pt("1"))
        );
    }
}
