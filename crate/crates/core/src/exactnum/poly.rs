//! Integer polynomials, square-free reduction and Sturm sequences.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Error, Interval, Rational};

/// Largest degree accepted by [`IntegerPolynomial::new`].
pub const DEFAULT_DEGREE_CAP: usize = 64;

/// Polynomial with arbitrary-precision integer coefficients, stored in
/// ascending order (`coeffs[i]` multiplies `x^i`). Trailing zeros are trimmed,
/// so the zero polynomial has no coefficients at all.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntegerPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntegerPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Result<Self, Error> {
        Self::with_degree_cap(coeffs, DEFAULT_DEGREE_CAP)
    }

    pub fn with_degree_cap(mut coeffs: Vec<BigInt>, cap: usize) -> Result<Self, Error> {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.len() > cap + 1 {
            return Err(Error::DegreeTooLarge {
                degree: coeffs.len() - 1,
                cap,
            });
        }
        Ok(IntegerPolynomial { coeffs })
    }

    pub fn from_i64s(coeffs: &[i64]) -> Result<Self, Error> {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn from_trimmed(coeffs: Vec<BigInt>) -> Self {
        debug_assert!(coeffs.last().is_none_or(|c| !c.is_zero()));
        IntegerPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn derivative(&self) -> IntegerPolynomial {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect::<Vec<_>>();
        let mut p = IntegerPolynomial { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    /// Sign of `p(x)`, computed on the cleared-denominator integer
    /// `p(a/b) * b^deg` so no rational normalisation happens.
    pub fn sign_at(&self, x: &Rational) -> Ordering {
        let Some(deg) = self.degree() else {
            return Ordering::Equal;
        };
        let num = x.numer();
        let den = x.denom();
        // Horner over the homogenised form: acc = acc * num + c_i * den^(deg - i)
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        let mut den_pows = Vec::with_capacity(deg + 1);
        for _ in 0..=deg {
            den_pows.push(den_pow.clone());
            den_pow *= den;
        }
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            acc = acc * num + c * &den_pows[deg - i];
        }
        // den > 0 for a normalised BigRational, so the sign is preserved.
        acc.sign_cmp_zero()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rational::from_integer(c.clone());
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> IntegerPolynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        if self.leading().is_some_and(Signed::is_negative) {
            g = -g;
        }
        IntegerPolynomial::from_trimmed(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// `p / gcd(p, p')`, primitive with positive leading coefficient. Has the
    /// same distinct real roots as `p`, all simple.
    pub fn square_free_part(&self) -> Result<IntegerPolynomial, Error> {
        if self.is_zero() {
            return Err(Error::DegeneratePolynomial);
        }
        let p = to_rational(self);
        let dp = to_rational(&self.derivative());
        if dp.is_empty() {
            return Ok(self.primitive());
        }
        let g = rational_gcd(p.clone(), dp);
        let (quot, rem) = rational_div_rem(&p, &g);
        debug_assert!(rem.is_empty());
        Ok(to_primitive_integer(&quot).primitive())
    }

    /// Cauchy bound: every real root lies in `[-B, B]`.
    pub fn root_bound(&self) -> Option<Rational> {
        let lead = self.leading()?.abs();
        let max = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero);
        Some(Rational::one() + Rational::new(max, lead))
    }
}

trait SignCmpZero {
    fn sign_cmp_zero(&self) -> Ordering;
}

impl SignCmpZero for BigInt {
    fn sign_cmp_zero(&self) -> Ordering {
        if self.is_positive() {
            Ordering::Greater
        } else if self.is_negative() {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    }
}

impl fmt::Display for IntegerPolynomial {
    /// Comma-separated ascending coefficients, the same form [`FromStr`] reads.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for IntegerPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let coeffs = s
            .split(',')
            .map(|t| {
                let t = t.trim();
                t.parse::<BigInt>()
                    .map_err(|_| Error::MalformedPolynomial(format!("bad coefficient '{t}'")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        IntegerPolynomial::new(coeffs)
    }
}

type RatPoly = Vec<BigRational>;

fn to_rational(p: &IntegerPolynomial) -> RatPoly {
    p.coeffs.iter().cloned().map(BigRational::from_integer).collect()
}

fn trim_rat(p: &mut RatPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn rational_div_rem(a: &RatPoly, b: &RatPoly) -> (RatPoly, RatPoly) {
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut rem = a.clone();
    trim_rat(&mut rem);
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let lead = b.last().unwrap();
    let mut quot = vec![BigRational::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() && !rem.is_empty() {
        let shift = rem.len() - b.len();
        let factor = rem.last().unwrap() / lead;
        for (i, c) in b.iter().enumerate() {
            rem[shift + i] -= &factor * c;
        }
        quot[shift] = factor;
        // the leading term cancels exactly
        rem.pop();
        trim_rat(&mut rem);
    }
    trim_rat(&mut quot);
    (quot, rem)
}

fn rational_gcd(mut a: RatPoly, mut b: RatPoly) -> RatPoly {
    trim_rat(&mut a);
    trim_rat(&mut b);
    while !b.is_empty() {
        let (_, r) = rational_div_rem(&a, &b);
        a = b;
        b = to_rational(&to_primitive_integer(&r));
    }
    a
}

/// Scales by a positive rational so the result has coprime integer
/// coefficients. Signs are preserved, which Sturm sequences depend on.
fn to_primitive_integer(p: &RatPoly) -> IntegerPolynomial {
    let mut lcm = BigInt::one();
    for c in p {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let mut g = BigInt::zero();
    for c in &ints {
        g = g.gcd(c);
    }
    if g.is_zero() {
        return IntegerPolynomial { coeffs: Vec::new() };
    }
    let mut out = IntegerPolynomial {
        coeffs: ints.into_iter().map(|c| c / &g).collect(),
    };
    out.trim();
    out
}

/// Sturm sequence of a square-free polynomial.
#[derive(Clone, Debug)]
pub struct SturmSequence {
    seq: Vec<IntegerPolynomial>,
}

impl SturmSequence {
    /// Builds the sequence of the square-free part of `p`.
    pub fn new(p: &IntegerPolynomial) -> Result<Self, Error> {
        let p0 = p.square_free_part()?;
        let mut seq = vec![p0.clone()];
        let mut prev = to_rational(&p0);
        let mut cur = to_rational(&p0.derivative());
        while !cur.is_empty() {
            seq.push(to_primitive_integer(&cur));
            let (_, r) = rational_div_rem(&prev, &cur);
            let neg: RatPoly = r.into_iter().map(|c| -c).collect();
            prev = cur;
            cur = to_rational(&to_primitive_integer(&neg));
        }
        Ok(SturmSequence { seq })
    }

    /// The square-free polynomial the sequence was built from.
    pub fn base(&self) -> &IntegerPolynomial {
        &self.seq[0]
    }

    pub fn variations(&self, x: &Rational) -> usize {
        let mut last = Ordering::Equal;
        let mut count = 0;
        for p in &self.seq {
            let s = p.sign_at(x);
            if s == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Distinct real roots in the half-open interval `(lo, hi]`.
    pub fn count(&self, lo: &Rational, hi: &Rational) -> usize {
        if lo >= hi {
            return 0;
        }
        self.variations(lo).saturating_sub(self.variations(hi))
    }
}

/// Number of distinct real roots of `p` in `(iv.lo, iv.hi]`.
pub fn sturm_count(p: &IntegerPolynomial, iv: &Interval) -> Result<usize, Error> {
    let seq = SturmSequence::new(p)?;
    Ok(seq.count(iv.lo(), iv.hi()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn iv(a: i64, b: i64) -> Interval {
        Interval::new(rat(a, 1), rat(b, 1))
    }

    #[test]
    fn trims_trailing_zeros() {
        let p = IntegerPolynomial::from_i64s(&[1, 2, 0, 0]).unwrap();
        assert_eq!(p.degree(), Some(1));
        assert!(IntegerPolynomial::from_i64s(&[0, 0]).unwrap().is_zero());
    }

    #[test]
    fn degree_cap() {
        let mut c = vec![0i64; 66];
        c[65] = 1;
        assert!(matches!(
            IntegerPolynomial::from_i64s(&c),
            Err(Error::DegreeTooLarge { degree: 65, .. })
        ));
    }

    #[test]
    fn parse_and_print() {
        let p: IntegerPolynomial = "144,-1056, 2680,-2680,665,436,-242,12,9".parse().unwrap();
        assert_eq!(p.degree(), Some(8));
        assert_eq!(p.to_string(), "144,-1056,2680,-2680,665,436,-242,12,9");
        assert!("1,x".parse::<IntegerPolynomial>().is_err());
    }

    #[test]
    fn sign_at_matches_eval() {
        let p = IntegerPolynomial::from_i64s(&[-2, 0, 1]).unwrap();
        for (n, d) in [(3, 2), (-3, 2), (1, 1), (7, 5), (0, 1)] {
            let x = rat(n, d);
            let v = p.eval(&x);
            assert_eq!(p.sign_at(&x), v.cmp(&Rational::zero()));
        }
    }

    #[test]
    fn square_free_part_removes_multiplicity() {
        // (x - 1)^2 (x + 2) = x^3 - 3x + 2
        let p = IntegerPolynomial::from_i64s(&[2, -3, 0, 1]).unwrap();
        let sf = p.square_free_part().unwrap();
        // (x - 1)(x + 2) = x^2 + x - 2
        assert_eq!(sf, IntegerPolynomial::from_i64s(&[-2, 1, 1]).unwrap());
    }

    #[test]
    fn sturm_sqrt2() {
        let p = IntegerPolynomial::from_i64s(&[-2, 0, 1]).unwrap();
        assert_eq!(sturm_count(&p, &iv(0, 2)).unwrap(), 1);
        assert_eq!(sturm_count(&p, &iv(-2, 2)).unwrap(), 2);
        assert_eq!(sturm_count(&p, &iv(2, 3)).unwrap(), 0);
    }

    #[test]
    fn sturm_half_open_endpoints() {
        // roots at 1 and 2
        let p = IntegerPolynomial::from_i64s(&[2, -3, 1]).unwrap();
        assert_eq!(sturm_count(&p, &iv(1, 2)).unwrap(), 1);
        assert_eq!(sturm_count(&p, &iv(0, 1)).unwrap(), 1);
        assert_eq!(sturm_count(&p, &iv(0, 2)).unwrap(), 2);
    }

    #[test]
    fn sturm_zero_polynomial_is_an_error() {
        let p = IntegerPolynomial::from_i64s(&[]).unwrap();
        assert!(matches!(sturm_count(&p, &iv(0, 1)), Err(Error::DegeneratePolynomial)));
    }

    #[test]
    fn sturm_counts_repeated_roots_once() {
        // (x - 1)^3
        let p = IntegerPolynomial::from_i64s(&[-1, 3, -3, 1]).unwrap();
        assert_eq!(sturm_count(&p, &iv(0, 2)).unwrap(), 1);
    }

    #[test]
    fn root_bound_contains_roots() {
        let p = IntegerPolynomial::from_i64s(&[-6, 1, 1]).unwrap(); // roots 2, -3
        let b = p.root_bound().unwrap();
        assert!(b >= rat(3, 1));
    }
}
