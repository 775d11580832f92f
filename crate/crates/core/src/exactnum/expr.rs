//! Arithmetic expressions over rationals, named algebraic numbers and
//! square roots, evaluated to certified enclosures by adaptive refinement.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::transcendental::pi_interval;
use super::{AlgebraicNumber, Error, Interval, Rational};

/// Default number of bisections a binding may receive before a comparison is
/// declared inconclusive.
pub const DEFAULT_MAX_DEPTH: u32 = 256;

/// Extra bits carried by intermediate rounding beyond the binding depth.
const GUARD_BITS: u32 = 32;

/// First refinement depth tried; later levels double it.
const START_DEPTH: u32 = 24;

pub type Bindings = BTreeMap<String, AlgebraicNumber>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Node {
    Const(Rational),
    Var(String),
    Pi,
    Neg(Expr),
    Add(Expr, Expr),
    Sub(Expr, Expr),
    Mul(Expr, Expr),
    Div(Expr, Expr),
    Sqrt(Expr),
}

/// Shared, immutable expression tree. Cloning is cheap and subtrees may be
/// shared between many expressions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expr(Arc<Node>);

impl Expr {
    pub fn node(&self) -> &Node {
        &self.0
    }

    pub fn constant(x: Rational) -> Expr {
        Expr(Arc::new(Node::Const(x)))
    }

    pub fn int(n: i64) -> Expr {
        Expr::constant(Rational::from_integer(n.into()))
    }

    pub fn ratio(n: i64, d: i64) -> Expr {
        Expr::constant(Rational::new(n.into(), d.into()))
    }

    pub fn var(name: impl Into<String>) -> Expr {
        Expr(Arc::new(Node::Var(name.into())))
    }

    pub fn pi() -> Expr {
        Expr(Arc::new(Node::Pi))
    }

    pub fn sqrt(&self) -> Expr {
        Expr(Arc::new(Node::Sqrt(self.clone())))
    }

    pub fn square(&self) -> Expr {
        self * self
    }

    pub fn as_const(&self) -> Option<&Rational> {
        match self.node() {
            Node::Const(c) => Some(c),
            _ => None,
        }
    }

    fn key(&self) -> usize {
        Arc::as_ptr(&self.0) as usize
    }

    /// Names of the variables the expression refers to.
    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self.node() {
            Node::Const(_) | Node::Pi => {}
            Node::Var(v) => {
                out.insert(v.clone());
            }
            Node::Neg(a) | Node::Sqrt(a) => a.collect_vars(out),
            Node::Add(a, b) | Node::Sub(a, b) | Node::Mul(a, b) | Node::Div(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    /// Replaces variables for which `f` returns a value. Unchanged subtrees
    /// are shared with the original.
    pub fn substitute(&self, f: &impl Fn(&str) -> Option<Expr>) -> Expr {
        let same = |a: &Expr, b: &Expr| Arc::ptr_eq(&a.0, &b.0);
        let unary = |a: &Expr, mk: fn(Expr) -> Node| {
            let a2 = a.substitute(f);
            if same(a, &a2) {
                self.clone()
            } else {
                Expr(Arc::new(mk(a2)))
            }
        };
        let binary = |a: &Expr, b: &Expr, mk: fn(Expr, Expr) -> Node| {
            let (a2, b2) = (a.substitute(f), b.substitute(f));
            if same(a, &a2) && same(b, &b2) {
                self.clone()
            } else {
                Expr(Arc::new(mk(a2, b2)))
            }
        };
        match self.node() {
            Node::Const(_) | Node::Pi => self.clone(),
            Node::Var(v) => f(v).unwrap_or_else(|| self.clone()),
            Node::Neg(a) => unary(a, Node::Neg),
            Node::Sqrt(a) => unary(a, Node::Sqrt),
            Node::Add(a, b) => binary(a, b, Node::Add),
            Node::Sub(a, b) => binary(a, b, Node::Sub),
            Node::Mul(a, b) => binary(a, b, Node::Mul),
            Node::Div(a, b) => binary(a, b, Node::Div),
        }
    }

    /// Exact value of a sqrt-free, pi-free expression at rational values.
    /// `None` on division by zero or an unbound name.
    pub fn eval_rational(&self, values: &BTreeMap<String, Rational>) -> Option<Rational> {
        Some(match self.node() {
            Node::Const(c) => c.clone(),
            Node::Var(v) => values.get(v)?.clone(),
            Node::Pi | Node::Sqrt(_) => return None,
            Node::Neg(a) => -a.eval_rational(values)?,
            Node::Add(a, b) => a.eval_rational(values)? + b.eval_rational(values)?,
            Node::Sub(a, b) => a.eval_rational(values)? - b.eval_rational(values)?,
            Node::Mul(a, b) => a.eval_rational(values)? * b.eval_rational(values)?,
            Node::Div(a, b) => {
                let d = b.eval_rational(values)?;
                if d.is_zero() {
                    return None;
                }
                a.eval_rational(values)? / d
            }
        })
    }

    /// Floating-point value, with bindings at their interval midpoints. For
    /// plotting and numeric estimates only.
    pub fn eval_f64(&self, bindings: &Bindings) -> f64 {
        use num_traits::ToPrimitive;
        match self.node() {
            Node::Const(c) => c.to_f64().unwrap_or(f64::NAN),
            Node::Var(v) => bindings
                .get(v)
                .map_or(f64::NAN, |a| a.interval().midpoint_f64()),
            Node::Pi => std::f64::consts::PI,
            Node::Neg(a) => -a.eval_f64(bindings),
            Node::Add(a, b) => a.eval_f64(bindings) + b.eval_f64(bindings),
            Node::Sub(a, b) => a.eval_f64(bindings) - b.eval_f64(bindings),
            Node::Mul(a, b) => a.eval_f64(bindings) * b.eval_f64(bindings),
            Node::Div(a, b) => a.eval_f64(bindings) / b.eval_f64(bindings),
            Node::Sqrt(a) => a.eval_f64(bindings).sqrt(),
        }
    }

    fn precedence(&self) -> u8 {
        match self.node() {
            Node::Add(..) | Node::Sub(..) => 1,
            Node::Mul(..) | Node::Div(..) => 2,
            Node::Neg(_) => 3,
            _ => 4,
        }
    }
}

impl From<Rational> for Expr {
    fn from(x: Rational) -> Expr {
        Expr::constant(x)
    }
}

impl fmt::Display for Expr {
    /// Compact infix form without spaces. Non-integer and negative constants
    /// are parenthesised so the text parses back to the same tree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn wrap(f: &mut fmt::Formatter<'_>, e: &Expr, paren: bool) -> fmt::Result {
            if paren {
                write!(f, "({e})")
            } else {
                write!(f, "{e}")
            }
        }
        match self.node() {
            Node::Const(c) => {
                if c.is_integer() && !c.is_negative() {
                    write!(f, "{c}")
                } else {
                    write!(f, "({c})")
                }
            }
            Node::Var(v) => write!(f, "{v}"),
            Node::Pi => write!(f, "pi"),
            Node::Sqrt(a) => write!(f, "sqrt({a})"),
            Node::Neg(a) => {
                write!(f, "-")?;
                wrap(f, a, a.precedence() < 3)
            }
            Node::Add(a, b) | Node::Sub(a, b) | Node::Mul(a, b) | Node::Div(a, b) => {
                let (op, level) = match self.node() {
                    Node::Add(..) => ('+', 1),
                    Node::Sub(..) => ('-', 1),
                    Node::Mul(..) => ('*', 2),
                    _ => ('/', 2),
                };
                wrap(f, a, a.precedence() < level)?;
                write!(f, "{op}")?;
                wrap(f, b, b.precedence() <= level)
            }
        }
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $variant:ident) => {
        impl $tr for &Expr {
            type Output = Expr;
            fn $m(self, rhs: &Expr) -> Expr {
                Expr(Arc::new(Node::$variant(self.clone(), rhs.clone())))
            }
        }
        impl $tr for Expr {
            type Output = Expr;
            fn $m(self, rhs: Expr) -> Expr {
                Expr(Arc::new(Node::$variant(self, rhs)))
            }
        }
        impl $tr<&Expr> for Expr {
            type Output = Expr;
            fn $m(self, rhs: &Expr) -> Expr {
                Expr(Arc::new(Node::$variant(self, rhs.clone())))
            }
        }
        impl $tr<Expr> for &Expr {
            type Output = Expr;
            fn $m(self, rhs: Expr) -> Expr {
                Expr(Arc::new(Node::$variant(self.clone(), rhs)))
            }
        }
    };
}

binop!(Add, add, Add);
binop!(Sub, sub, Sub);
binop!(Mul, mul, Mul);
binop!(Div, div, Div);

impl Neg for &Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        Expr(Arc::new(Node::Neg(self.clone())))
    }
}

impl Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        Expr(Arc::new(Node::Neg(self)))
    }
}

/// Failure at a single refinement level.
#[derive(Debug)]
pub enum LevelError {
    /// Cannot be fixed by refining further.
    Hard(Error),
    /// Might resolve at a deeper level; reported as-is at the last one.
    Unresolved(Error),
}

/// Evaluates expressions at increasing refinement depths, keeping the
/// refined bindings between calls.
pub struct Evaluator<'a> {
    bindings: &'a Bindings,
    refined: HashMap<String, AlgebraicNumber>,
    /// Enclosures by node and depth. Each entry holds its node, so the
    /// address in the key cannot be reused while the entry exists.
    memo: HashMap<(usize, u32), (Expr, Interval)>,
}

impl<'a> Evaluator<'a> {
    pub fn new(bindings: &'a Bindings) -> Self {
        Evaluator {
            bindings,
            refined: HashMap::new(),
            memo: HashMap::new(),
        }
    }

    fn binding_at(&mut self, name: &str, depth: u32) -> Result<Interval, LevelError> {
        let base = self
            .bindings
            .get(name)
            .ok_or_else(|| LevelError::Hard(Error::UnboundVariable(name.to_string())))?;
        let target = Rational::new(BigInt::one(), BigInt::one() << depth as usize);
        let current = self.refined.entry(name.to_string()).or_insert_with(|| base.clone());
        if current.interval().width() > target {
            *current = current.refine(&target);
        }
        Ok(current.interval().clone())
    }

    /// Enclosure with every binding refined to width `2^-depth`.
    pub fn enclose(&mut self, e: &Expr, depth: u32) -> Result<Interval, LevelError> {
        self.enclose_memo(e, depth, depth + GUARD_BITS)
    }

    fn enclose_memo(&mut self, e: &Expr, depth: u32, bits: u32) -> Result<Interval, LevelError> {
        if let Some((_, hit)) = self.memo.get(&(e.key(), depth)) {
            return Ok(hit.clone());
        }
        let out = match e.node() {
            Node::Const(c) => Interval::point(c.clone()),
            Node::Var(v) => self.binding_at(v, depth)?,
            Node::Pi => pi_interval(bits),
            Node::Neg(a) => -self.enclose_memo(a, depth, bits)?,
            Node::Add(a, b) => {
                let x = self.enclose_memo(a, depth, bits)?;
                let y = self.enclose_memo(b, depth, bits)?;
                (&x + &y).round_outward(bits)
            }
            Node::Sub(a, b) => {
                let x = self.enclose_memo(a, depth, bits)?;
                let y = self.enclose_memo(b, depth, bits)?;
                (&x - &y).round_outward(bits)
            }
            Node::Mul(a, b) => {
                let x = self.enclose_memo(a, depth, bits)?;
                let y = if a == b {
                    None
                } else {
                    Some(self.enclose_memo(b, depth, bits)?)
                };
                match y {
                    // x * x is a square: never negative
                    None => x.square().round_outward(bits),
                    Some(y) => (&x * &y).round_outward(bits),
                }
            }
            Node::Div(a, b) => {
                let x = self.enclose_memo(a, depth, bits)?;
                let y = self.enclose_memo(b, depth, bits)?;
                match x.checked_div(&y) {
                    Some(q) => q.round_outward(bits),
                    None if y.is_point() => return Err(LevelError::Hard(Error::DivisionByZero)),
                    None => return Err(LevelError::Unresolved(Error::PossibleDivisionByZero)),
                }
            }
            Node::Sqrt(a) => {
                let x = self.enclose_memo(a, depth, bits)?;
                if x.hi().is_negative() {
                    return Err(LevelError::Hard(Error::NegativeRadicand));
                }
                match x.sqrt(bits) {
                    Some(s) => s,
                    None => return Err(LevelError::Unresolved(Error::IndeterminateRadicand)),
                }
            }
        };
        self.memo.insert((e.key(), depth), (e.clone(), out.clone()));
        Ok(out)
    }
}

/// Refinement depths tried in order, ending exactly at `max_depth`.
pub fn depth_schedule(max_depth: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = START_DEPTH.min(max_depth);
    loop {
        out.push(d);
        if d >= max_depth {
            break;
        }
        d = (d * 2).min(max_depth);
    }
    out
}

/// Result of [`eval`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evaluation {
    pub interval: Interval,
    pub depth: u32,
    /// Whether the requested width was reached before `max_depth`.
    pub converged: bool,
}

/// Encloses the exact value of `e` in an interval of width at most `width`,
/// refining the bindings as needed up to `max_depth` bisections.
pub fn eval(
    e: &Expr,
    bindings: &Bindings,
    width: &Rational,
    max_depth: u32,
) -> Result<Evaluation, Error> {
    Evaluator::new(bindings).eval(e, width, max_depth)
}

impl Evaluator<'_> {
    /// See [`eval`]; reuses the refinement already done by this evaluator.
    pub fn eval(&mut self, e: &Expr, width: &Rational, max_depth: u32) -> Result<Evaluation, Error> {
        let schedule = depth_schedule(max_depth);
        let last = *schedule.last().expect("nonempty schedule");
        // the rounding grid has to be finer than the requested width
        let min_depth = width_bits(width).saturating_sub(GUARD_BITS / 2).min(last);
        for depth in schedule.into_iter().filter(|&d| d >= min_depth || d == last) {
            match self.enclose(e, depth) {
                Ok(iv) => {
                    if &iv.width() <= width {
                        return Ok(Evaluation {
                            interval: iv,
                            depth,
                            converged: true,
                        });
                    }
                    if depth == last {
                        return Ok(Evaluation {
                            interval: iv,
                            depth,
                            converged: false,
                        });
                    }
                }
                Err(LevelError::Hard(err)) => return Err(err),
                Err(LevelError::Unresolved(err)) => {
                    if depth == last {
                        return Err(err);
                    }
                }
            }
        }
        unreachable!("schedule always ends at max_depth")
    }

    /// See [`certify_sign`].
    pub fn certify_sign(&mut self, e: &Expr, max_depth: u32) -> Result<SignCertificate, Error> {
        let schedule = depth_schedule(max_depth);
        let last = *schedule.last().expect("nonempty schedule");
        for depth in schedule {
            match self.enclose(e, depth) {
                Ok(iv) => {
                    let sign = iv.sign();
                    if sign.is_some() || depth == last {
                        return Ok(SignCertificate {
                            sign,
                            enclosure: iv,
                            depth,
                        });
                    }
                }
                Err(LevelError::Hard(err)) => return Err(err),
                Err(LevelError::Unresolved(err)) => {
                    if depth == last {
                        return Err(err);
                    }
                }
            }
        }
        unreachable!("schedule always ends at max_depth")
    }
}

/// Smallest `k` with `2^-k <= width` (0 for widths of at least 1).
pub(crate) fn width_bits(width: &Rational) -> u32 {
    if width >= &Rational::one() || !width.is_positive() {
        return if width.is_positive() { 0 } else { 1024 };
    }
    let mut k = 0;
    let mut w = Rational::one();
    while &w > width {
        w /= Rational::from_integer(2.into());
        k += 1;
    }
    k
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    Proved,
    Disproved,
    Inconclusive,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Proved => "Proved",
            Status::Disproved => "Disproved",
            Status::Inconclusive => "Inconclusive",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Direction {
    Above,
    Below,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    pub enclosure: Interval,
    pub depth: u32,
}

/// Decides `e > threshold` (Above) or `e < threshold` (Below). Equality can
/// never be certified, so an exact hit on the threshold ends Inconclusive.
pub fn certify_compare(
    e: &Expr,
    threshold: &Rational,
    direction: Direction,
    bindings: &Bindings,
    max_depth: u32,
) -> Result<Verdict, Error> {
    let cert = certify_sign(&(e - Expr::constant(threshold.clone())), bindings, max_depth)?;
    let shift = Interval::point(threshold.clone());
    let enclosure = &cert.enclosure + &shift;
    let status = match (cert.sign, direction) {
        (Some(Ordering::Greater), Direction::Above) | (Some(Ordering::Less), Direction::Below) => {
            Status::Proved
        }
        (Some(Ordering::Greater), Direction::Below) | (Some(Ordering::Less), Direction::Above) => {
            Status::Disproved
        }
        _ => Status::Inconclusive,
    };
    Ok(Verdict {
        status,
        enclosure,
        depth: cert.depth,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignCertificate {
    /// `Some(Equal)` only when the enclosure collapsed to exactly 0.
    pub sign: Option<Ordering>,
    pub enclosure: Interval,
    pub depth: u32,
}

/// Refines until the sign of `e` is certified or `max_depth` is spent.
pub fn certify_sign(e: &Expr, bindings: &Bindings, max_depth: u32) -> Result<SignCertificate, Error> {
    Evaluator::new(bindings).certify_sign(e, max_depth)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{isolate_roots, IntegerPolynomial};

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn interval_binding(name: &str, lo: Rational, hi: Rational) -> Bindings {
        // x - m with a wide isolating interval; refinement happens by sign,
        // so use a linear polynomial whose root is the midpoint
        let mid = (&lo + &hi) / r(2, 1);
        let p = IntegerPolynomial::new(vec![-mid.numer().clone(), mid.denom().clone()]).unwrap();
        let a = isolate_roots(&p, &Interval::new(lo, hi)).unwrap().remove(0);
        Bindings::from([(name.to_string(), a.with_name(name))])
    }

    fn sqrt_of(n: i64) -> Expr {
        Expr::int(n).sqrt()
    }

    #[test]
    fn schedule_ends_at_max() {
        assert_eq!(depth_schedule(256), vec![24, 48, 96, 192, 256]);
        assert_eq!(depth_schedule(10), vec![10]);
        assert_eq!(depth_schedule(24), vec![24]);
    }

    #[test]
    fn monotone_arithmetic() {
        // 2q + 1 with q in [0.63, 0.64]: sound at any depth
        let b = interval_binding("q", r(63, 100), r(64, 100));
        let e = Expr::int(2) * Expr::var("q") + Expr::int(1);
        let mut ev = Evaluator::new(&b);
        let coarse = ev.enclose(&e, 1).unwrap();
        assert!(coarse.contains(&r(226, 100)) && coarse.contains(&r(228, 100)));
        let iv = eval(&e, &b, &r(1, 1_000_000), DEFAULT_MAX_DEPTH).unwrap().interval;
        assert!(iv.is_subset_of(&Interval::new(r(226, 100), r(228, 100))));
    }

    #[test]
    fn sqrt_of_four_to_nine() {
        let e = Expr::var("x").sqrt();
        // x = 4 as the positive root of x^2 - 16
        let p = IntegerPolynomial::from_i64s(&[-16, 0, 1]).unwrap();
        let a = isolate_roots(&p, &Interval::new(r(0, 1), r(9, 1))).unwrap().remove(0);
        let b = Bindings::from([("x".to_string(), a)]);
        let v = eval(&e, &b, &r(1, 1000), DEFAULT_MAX_DEPTH).unwrap();
        assert!(v.interval.contains(&r(2, 1)));
        assert_eq!(
            Interval::new(r(4, 1), r(9, 1)).sqrt(30).unwrap(),
            Interval::new(r(2, 1), r(3, 1))
        );
    }

    #[test]
    fn eval_reaches_width() {
        let w = r(1, 1_000_000_000_000);
        let v = eval(&sqrt_of(2), &Bindings::new(), &w, DEFAULT_MAX_DEPTH).unwrap();
        assert!(v.converged);
        assert!(v.interval.width() <= w);
        let (lo, hi) = v.interval.to_f64_bounds();
        assert!(lo <= 2f64.sqrt() + 1e-15 && 2f64.sqrt() - 1e-15 <= hi);
    }

    #[test]
    fn negative_radicand() {
        let e = (Expr::int(1) - Expr::int(3)).sqrt();
        assert!(matches!(
            eval(&e, &Bindings::new(), &r(1, 10), 64),
            Err(Error::NegativeRadicand)
        ));
    }

    #[test]
    fn exact_zero_radicand_is_fine() {
        let e = (Expr::int(3) - Expr::int(3)).sqrt();
        let v = eval(&e, &Bindings::new(), &r(1, 10), 64).unwrap();
        assert_eq!(v.interval, Interval::from_int(0));
    }

    #[test]
    fn indeterminate_radicand() {
        // sqrt(2)^2 - 2 is exactly zero but never certified nonnegative
        let s = sqrt_of(2);
        let e = (&s * &sqrt_of(2) - Expr::int(2)).sqrt();
        assert!(matches!(
            eval(&e, &Bindings::new(), &r(1, 10), 64),
            Err(Error::IndeterminateRadicand)
        ));
    }

    #[test]
    fn division_by_zero() {
        let e = Expr::int(1) / (Expr::int(2) - Expr::int(2));
        assert!(matches!(
            eval(&e, &Bindings::new(), &r(1, 10), 64),
            Err(Error::DivisionByZero)
        ));
        let near = Expr::int(1) / (sqrt_of(2) * sqrt_of(2) - Expr::int(2));
        assert!(matches!(
            eval(&near, &Bindings::new(), &r(1, 10), 64),
            Err(Error::PossibleDivisionByZero)
        ));
    }

    #[test]
    fn unbound_variable() {
        assert!(matches!(
            eval(&Expr::var("zz"), &Bindings::new(), &r(1, 10), 64),
            Err(Error::UnboundVariable(_))
        ));
    }

    #[test]
    fn compare_trichotomy_examples() {
        let v = certify_compare(&sqrt_of(2), &r(141, 100), Direction::Above, &Bindings::new(), 256)
            .unwrap();
        assert_eq!(v.status, Status::Proved);
        let v = certify_compare(&sqrt_of(2), &r(141, 100), Direction::Below, &Bindings::new(), 256)
            .unwrap();
        assert_eq!(v.status, Status::Disproved);
        let v = certify_compare(&sqrt_of(4), &r(2, 1), Direction::Above, &Bindings::new(), 256)
            .unwrap();
        assert_eq!(v.status, Status::Inconclusive);
    }

    #[test]
    fn equality_through_refinement_is_inconclusive() {
        let s = sqrt_of(2);
        let e = &s * &sqrt_of(2);
        let v = certify_compare(&e, &r(2, 1), Direction::Above, &Bindings::new(), 96).unwrap();
        assert_eq!(v.status, Status::Inconclusive);
        assert_eq!(v.depth, 96);
    }

    #[test]
    fn display_round_trip_shapes() {
        let q = Expr::var("q");
        let e = (&q - (Expr::int(1) - &q)) / (Expr::int(2) * &q) + -(&q + Expr::ratio(1, 3));
        assert_eq!(e.to_string(), "(q-(1-q))/(2*q)+-(q+(1/3))");
        assert_eq!(Expr::ratio(-2, 1).to_string(), "(-2)");
    }

    #[test]
    fn substitute_and_free_vars() {
        let e = Expr::var("a") * Expr::var("b");
        let s = e.substitute(&|n| (n == "a").then(|| Expr::var("c").sqrt()));
        assert_eq!(
            s.free_vars().into_iter().collect::<Vec<_>>(),
            vec!["b".to_string(), "c".to_string()]
        );
    }

    #[test]
    fn exact_rational_evaluation() {
        let e = (Expr::var("x") + Expr::int(1)) / Expr::var("y");
        let vals = BTreeMap::from([("x".to_string(), r(1, 2)), ("y".to_string(), r(3, 1))]);
        assert_eq!(e.eval_rational(&vals), Some(r(1, 2)));
        let zero = BTreeMap::from([("x".to_string(), r(1, 2)), ("y".to_string(), r(0, 1))]);
        assert_eq!(e.eval_rational(&zero), None);
    }

    #[test]
    fn width_bits_examples() {
        assert_eq!(width_bits(&r(1, 1)), 0);
        assert_eq!(width_bits(&r(1, 2)), 1);
        assert_eq!(width_bits(&r(1, 3)), 2);
        assert_eq!(width_bits(&r(1, 1024)), 10);
    }
}
