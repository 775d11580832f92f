use std::cmp::Ordering;
use std::fmt;

use num_traits::Zero;

use super::poly::SturmSequence;
use super::{Error, IntegerPolynomial, Interval, Rational};

/// A real root of an integer polynomial, pinned down by an isolating
/// interval.
///
/// `poly` is kept square-free, so the root is simple: either the interval is
/// a single rational point that is an exact root, or `poly` takes nonzero
/// values of opposite sign at the two endpoints and has no other root in
/// between.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraicNumber {
    name: String,
    poly: IntegerPolynomial,
    isol: Interval,
}

impl AlgebraicNumber {
    /// An algebraic number that happens to be rational.
    pub fn rational(name: impl Into<String>, x: Rational) -> Self {
        let poly = IntegerPolynomial::new(vec![-x.numer().clone(), x.denom().clone()])
            .expect("degree one");
        AlgebraicNumber {
            name: name.into(),
            poly,
            isol: Interval::point(x),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn poly(&self) -> &IntegerPolynomial {
        &self.poly
    }

    pub fn interval(&self) -> &Interval {
        &self.isol
    }

    pub fn is_rational(&self) -> bool {
        self.isol.is_point()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Bisects until the isolating interval is at most `width` wide. The
    /// result is always a subset of `self.interval()`.
    pub fn refine(&self, width: &Rational) -> AlgebraicNumber {
        let mut lo = self.isol.lo().clone();
        let mut hi = self.isol.hi().clone();
        if lo == hi {
            return self.clone();
        }
        let sign_lo = self.poly.sign_at(&lo);
        while &(&hi - &lo) > width {
            let mid = (&lo + &hi) / Rational::from_integer(2.into());
            match self.poly.sign_at(&mid) {
                Ordering::Equal => {
                    lo = mid.clone();
                    hi = mid;
                    break;
                }
                s if s == sign_lo => lo = mid,
                _ => hi = mid,
            }
        }
        AlgebraicNumber {
            name: self.name.clone(),
            poly: self.poly.clone(),
            isol: Interval::new(lo, hi),
        }
    }

    /// Bisects `bits` more times (or until exact).
    pub fn bisect_times(&self, bits: u32) -> AlgebraicNumber {
        let target = self.isol.width() / Rational::from_integer(num_bigint::BigInt::from(1) << bits as usize);
        self.refine(&target)
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} = root of [{}] in {}",
            self.name,
            self.poly,
            self.isol.to_decimal_string(f.precision().unwrap_or(12))
        )
    }
}

/// Isolates every distinct real root of `p` in the closed `bracket`.
///
/// Returned intervals are disjoint, sorted, and lie inside the bracket.
/// Roots are named `root0`, `root1`, ... in increasing order.
pub fn isolate_roots(
    p: &IntegerPolynomial,
    bracket: &Interval,
) -> Result<Vec<AlgebraicNumber>, Error> {
    let seq = SturmSequence::new(p)?;
    let base = seq.base().clone();
    let mut found: Vec<Interval> = Vec::new();

    if base.sign_at(bracket.lo()).is_eq() {
        found.push(Interval::point(bracket.lo().clone()));
    }
    // Work stack of half-open intervals (lo, hi], processed left to right.
    let mut stack = vec![(bracket.lo().clone(), bracket.hi().clone())];
    let mut isolated: Vec<(Rational, Rational)> = Vec::new();
    while let Some((lo, hi)) = stack.pop() {
        match seq.count(&lo, &hi) {
            0 => {}
            1 => isolated.push((lo, hi)),
            _ => {
                let mid = (&lo + &hi) / Rational::from_integer(2.into());
                stack.push((mid.clone(), hi));
                stack.push((lo, mid));
            }
        }
    }
    for (lo, hi) in isolated {
        found.push(normalize(&seq, &base, lo, hi));
    }
    found.sort_by(|a, b| a.lo().cmp(b.lo()));
    let mut roots: Vec<AlgebraicNumber> = found
        .into_iter()
        .enumerate()
        .map(|(i, isol)| AlgebraicNumber {
            name: format!("root{i}"),
            poly: base.clone(),
            isol,
        })
        .collect();
    // neighbours may share a (non-root) bisection point; pull them apart
    for i in 1..roots.len() {
        while roots[i - 1].isol.hi() >= roots[i].isol.lo() {
            roots[i - 1] = roots[i - 1].bisect_times(1);
            roots[i] = roots[i].bisect_times(1);
        }
    }
    Ok(roots)
}

/// Turns a half-open `(lo, hi]` holding exactly one root into a closed
/// interval with a strict sign change, or a point if the root is rational
/// and lands on a bisection point.
fn normalize(
    seq: &SturmSequence,
    base: &IntegerPolynomial,
    mut lo: Rational,
    mut hi: Rational,
) -> Interval {
    if base.sign_at(&hi).is_eq() {
        return Interval::point(hi);
    }
    // lo may itself be a (different) root already reported separately
    while base.sign_at(&lo).is_eq() {
        let mid = (&lo + &hi) / Rational::from_integer(2.into());
        if base.sign_at(&mid).is_eq() {
            if seq.count(&lo, &mid) == 1 {
                return Interval::point(mid);
            }
            lo = mid;
        } else if seq.count(&lo, &mid) == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    debug_assert!(!(&hi - &lo).is_zero());
    Interval::new(lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::sturm_count;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn sqrt2() -> AlgebraicNumber {
        let p = IntegerPolynomial::from_i64s(&[-2, 0, 1]).unwrap();
        isolate_roots(&p, &Interval::new(r(0, 1), r(2, 1)))
            .unwrap()
            .remove(0)
    }

    #[test]
    fn isolates_sqrt2() {
        let p = IntegerPolynomial::from_i64s(&[-2, 0, 1]).unwrap();
        let roots = isolate_roots(&p, &Interval::new(r(0, 1), r(2, 1))).unwrap();
        assert_eq!(roots.len(), 1);
        let fine = roots[0].refine(&r(1, 100_000));
        assert!(fine.interval().is_subset_of(&Interval::new(r(14142, 10000), r(14143, 10000))));
    }

    #[test]
    fn finds_both_signs() {
        let p = IntegerPolynomial::from_i64s(&[-2, 0, 1]).unwrap();
        let roots = isolate_roots(&p, &Interval::new(r(-2, 1), r(2, 1))).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots[0].interval().hi() < roots[1].interval().lo());
    }

    #[test]
    fn rational_roots_on_bisection_points() {
        // x (x - 1) (x + 1): roots hit the bracket end and the midpoint
        let p = IntegerPolynomial::from_i64s(&[0, -1, 0, 1]).unwrap();
        let roots = isolate_roots(&p, &Interval::new(r(-1, 1), r(1, 1))).unwrap();
        assert_eq!(roots.len(), 3);
        assert!(roots.iter().all(AlgebraicNumber::is_rational));
        assert_eq!(roots[0].interval().lo(), &r(-1, 1));
        assert_eq!(roots[1].interval().lo(), &r(0, 1));
        assert_eq!(roots[2].interval().lo(), &r(1, 1));
    }

    #[test]
    fn root_adjacent_to_rational_root() {
        // (x - 1)(2x - 3): roots 1 and 3/2 inside [1, 2]
        let p = IntegerPolynomial::from_i64s(&[3, -5, 2]).unwrap();
        let roots = isolate_roots(&p, &Interval::new(r(1, 1), r(2, 1))).unwrap();
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[1].interval(), &Interval::point(r(3, 2)));
    }

    #[test]
    fn degenerate_bracket_is_empty_not_error() {
        let p = IntegerPolynomial::from_i64s(&[-2, 0, 1]).unwrap();
        let roots = isolate_roots(&p, &Interval::point(r(1, 1))).unwrap();
        assert!(roots.is_empty());
    }

    #[test]
    fn isolating_interval_has_single_root() {
        let p = IntegerPolynomial::from_i64s(&[1, -7, 0, 3, 1]).unwrap();
        let b = p.root_bound().unwrap();
        for a in isolate_roots(&p, &Interval::new(-b.clone(), b)).unwrap() {
            if a.is_rational() {
                continue;
            }
            assert_eq!(sturm_count(&p, a.interval()).unwrap(), 1);
            let slo = p.sign_at(a.interval().lo());
            let shi = p.sign_at(a.interval().hi());
            assert!(slo.is_ne() && shi.is_ne() && slo != shi);
        }
    }

    #[test]
    fn refine_to_width() {
        let w = Rational::new(1.into(), num_bigint::BigInt::from(10).pow(12));
        let a = sqrt2().refine(&w);
        assert!(a.interval().width() <= w);
        // sqrt(2) = 1.41421356237309...
        let x = r(1_414_213_562_372, 1_000_000_000_000);
        let y = r(1_414_213_562_374, 1_000_000_000_000);
        assert!(a.interval().is_subset_of(&Interval::new(x, y)));
    }

    #[test]
    fn refine_twice_is_nested() {
        let w = r(1, 1 << 20);
        let once = sqrt2().refine(&w);
        let twice = once.refine(&w);
        assert!(twice.interval().is_subset_of(once.interval()));
    }

    #[test]
    fn rational_constructor() {
        let a = AlgebraicNumber::rational("h", r(3, 4));
        assert!(a.is_rational());
        assert!(a.poly().sign_at(&r(3, 4)).is_eq());
    }
}
