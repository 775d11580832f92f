//! Exact real-arithmetic kernel: integer polynomials and their real roots,
//! rational intervals, and expressions evaluated to certified enclosures.

mod algebraic;
mod expr;
mod interval;
mod poly;
mod transcendental;

pub use algebraic::{isolate_roots, AlgebraicNumber};
pub use expr::{
    certify_compare, certify_sign, depth_schedule, eval, Bindings, Direction, Evaluation,
    Evaluator, Expr, LevelError, Node, SignCertificate, Status, Verdict, DEFAULT_MAX_DEPTH,
};
pub use interval::{decimal_ceil, decimal_floor, Interval};
pub use poly::{sturm_count, IntegerPolynomial, SturmSequence, DEFAULT_DEGREE_CAP};
pub use transcendental::{acos_interval, atan_interval, machin_pi, pi_interval};

pub(crate) use expr::width_bits;

use num_bigint::BigInt;
use thiserror::Error;

pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degenerate polynomial")]
    DegeneratePolynomial,
    #[error("polynomial degree {degree} exceeds cap {cap}")]
    DegreeTooLarge { degree: usize, cap: usize },
    #[error("malformed polynomial: {0}")]
    MalformedPolynomial(String),
    #[error("unbound variable '{0}'")]
    UnboundVariable(String),
    #[error("negative radicand")]
    NegativeRadicand,
    #[error("radicand sign undetermined at maximum depth")]
    IndeterminateRadicand,
    #[error("division by zero")]
    DivisionByZero,
    #[error("possible division by zero")]
    PossibleDivisionByZero,
}

/// Parses `123`, `-4/7` or a decimal such as `0.7` / `1e-12` into an exact
/// rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d == BigInt::from(0) {
            return None;
        }
        return Some(Rational::new(n, d));
    }
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (neg, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => (true, m),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits: BigInt = format!("{int}{frac}").parse().ok()?;
    let scale = exp - frac.len() as i32;
    let ten = BigInt::from(10);
    let mut x = if scale >= 0 {
        Rational::from_integer(digits * ten.pow(scale as u32))
    } else {
        Rational::new(digits, ten.pow((-scale) as u32))
    };
    if neg {
        x = -x;
    }
    Some(x)
}
