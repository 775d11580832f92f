//! Periodic disc packings: lattice, discs with expression-valued centers,
//! pairwise gaps, overlap checking and density.

mod formulas;
mod tangency;

pub use formulas::{
    descartes_inner, descartes_inner_expr, removal_margin, triangle_density, Margin,
};
pub use tangency::{complete_tangencies, Side, SolveRule};

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::exactnum::{
    self, Bindings, Evaluator, Expr, Interval, Rational, Status, DEFAULT_MAX_DEPTH,
};

pub type DiscId = u32;

/// Width `2^-FLOAT_BITS` to which bindings are refined on construction.
const FLOAT_BITS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Kernel(#[from] exactnum::Error),
    #[error("self gap: disc {0} against itself with zero offset")]
    SelfGap(DiscId),
    #[error("unknown disc {0}")]
    UnknownDisc(DiscId),
    #[error("duplicate disc id {0}")]
    DuplicateDisc(DiscId),
    #[error("unknown radius class '{0}'")]
    UnknownRadius(String),
    #[error("duplicate radius class '{0}'")]
    DuplicateRadius(String),
    #[error("unbound name '{0}'")]
    UnboundName(String),
    #[error("radius class '{0}' is not certified positive")]
    NonPositiveRadius(String),
    #[error("degenerate lattice")]
    DegenerateLattice,
    #[error("inconsistent tangency for disc {0}")]
    InconsistentTangency(DiscId),
    #[error("tangency for disc {0} could not be certified at maximum depth")]
    IndeterminateTangency(DiscId),
    #[error("ambiguous side rule for disc {0}")]
    AmbiguousSide(DiscId),
    #[error("no margin: the high density is certified below the floor")]
    NoMargin,
    #[error("nonpositive probe or radius interval")]
    NonPositiveInterval,
}

/// Integer lattice offset `(m, n)`, standing for the translate by
/// `m * t1 + n * t2`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Offset {
    pub m: i64,
    pub n: i64,
}

impl Offset {
    pub const ZERO: Offset = Offset { m: 0, n: 0 };

    pub fn new(m: i64, n: i64) -> Self {
        Offset { m, n }
    }

    pub fn is_zero(&self) -> bool {
        self.m == 0 && self.n == 0
    }
}

impl std::ops::Neg for Offset {
    type Output = Offset;
    fn neg(self) -> Offset {
        Offset::new(-self.m, -self.n)
    }
}

impl std::ops::Add for Offset {
    type Output = Offset;
    fn add(self, o: Offset) -> Offset {
        Offset::new(self.m + o.m, self.n + o.n)
    }
}

impl std::ops::Sub for Offset {
    type Output = Offset;
    fn sub(self, o: Offset) -> Offset {
        Offset::new(self.m - o.m, self.n - o.n)
    }
}

impl fmt::Display for Offset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.m, self.n)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Point {
    pub x: Expr,
    pub y: Expr,
}

impl Point {
    pub fn new(x: Expr, y: Expr) -> Self {
        Point { x, y }
    }

    pub fn map(&self, f: impl Fn(&Expr) -> Expr) -> Point {
        Point {
            x: f(&self.x),
            y: f(&self.y),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadiusClass {
    pub name: String,
    pub value: Expr,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Disc {
    pub id: DiscId,
    pub center: Point,
    /// Name of a [`RadiusClass`] of the packing.
    pub radius: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    pub t1: Point,
    pub t2: Point,
}

/// Tangency between disc `a` and the translate of disc `b` by `offset`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Contact {
    pub a: DiscId,
    pub b: DiscId,
    pub offset: Offset,
}

impl Contact {
    pub fn new(a: DiscId, b: DiscId, offset: Offset) -> Self {
        Contact { a, b, offset }
    }

    pub fn reversed(&self) -> Contact {
        Contact::new(self.b, self.a, -self.offset)
    }

    /// The same contact seen from either end, in a fixed orientation.
    pub fn canonical(&self) -> Contact {
        let r = self.reversed();
        if (r.a, r.b, r.offset) < (self.a, self.b, self.offset) {
            r
        } else {
            *self
        }
    }
}

impl fmt::Display for Contact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}{}", self.a, self.b, self.offset)
    }
}

/// Tolerances shared by the geometric checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckConfig {
    /// Maximum width of a gap enclosure accepted as a tangency.
    pub tol: Rational,
    pub max_depth: u32,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            tol: Rational::new(BigInt::one(), BigInt::from(10).pow(9)),
            max_depth: DEFAULT_MAX_DEPTH,
        }
    }
}

/// A packing description that has not been validated yet, e.g. one still
/// waiting for [`complete_tangencies`].
#[derive(Clone, Debug, Default)]
pub struct PackingParts {
    pub lattice: Option<Lattice>,
    pub radii: Vec<RadiusClass>,
    pub discs: Vec<Disc>,
    pub bindings: Bindings,
    pub contacts: Vec<Contact>,
}

/// Lattice-periodic packing: the discs of one fundamental domain and the
/// translation lattice that repeats them.
#[derive(Clone, Debug)]
pub struct PeriodicPacking {
    lattice: Lattice,
    radii: Vec<RadiusClass>,
    discs: Vec<Disc>,
    bindings: Bindings,
    contacts: Vec<Contact>,
    /// `|det(t1, t2)|` with the sign resolved at construction.
    cell_area: Expr,
}

impl PeriodicPacking {
    /// Validates structure: unique ids and radius names, every name bound,
    /// positive radii, contacts between existing discs, and a lattice whose
    /// determinant is certified nonzero.
    pub fn new(parts: PackingParts, max_depth: u32) -> Result<Self, Error> {
        let PackingParts {
            lattice,
            radii,
            discs,
            bindings,
            contacts,
        } = parts;
        let lattice = lattice.ok_or(Error::DegenerateLattice)?;
        // float proposals (plotting, sorting, hole estimates) read binding
        // midpoints, so make those accurate up front
        let fine = Rational::new(BigInt::one(), BigInt::one() << FLOAT_BITS);
        let bindings: Bindings = bindings
            .into_iter()
            .map(|(k, a)| {
                let a = a.refine(&fine);
                (k, a)
            })
            .collect();
        let mut names = HashSet::new();
        for rc in &radii {
            if !names.insert(rc.name.as_str()) {
                return Err(Error::DuplicateRadius(rc.name.clone()));
            }
        }
        let mut ids = HashSet::new();
        for d in &discs {
            if !ids.insert(d.id) {
                return Err(Error::DuplicateDisc(d.id));
            }
            if !names.contains(d.radius.as_str()) {
                return Err(Error::UnknownRadius(d.radius.clone()));
            }
        }
        let mut seen = BTreeSet::new();
        let mut dedup = Vec::new();
        for c in contacts {
            for id in [c.a, c.b] {
                if !ids.contains(&id) {
                    return Err(Error::UnknownDisc(id));
                }
            }
            if c.a == c.b && c.offset.is_zero() {
                return Err(Error::SelfGap(c.a));
            }
            if seen.insert(c.canonical()) {
                dedup.push(c);
            }
        }
        let check_bound = |e: &Expr| -> Result<(), Error> {
            match e.free_vars().into_iter().find(|v| !bindings.contains_key(v)) {
                Some(v) => Err(Error::UnboundName(v)),
                None => Ok(()),
            }
        };
        for e in [&lattice.t1.x, &lattice.t1.y, &lattice.t2.x, &lattice.t2.y] {
            check_bound(e)?;
        }
        for d in &discs {
            check_bound(&d.center.x)?;
            check_bound(&d.center.y)?;
        }
        let mut ev = Evaluator::new(&bindings);
        for rc in &radii {
            check_bound(&rc.value)?;
            let cert = ev.certify_sign(&rc.value, max_depth)?;
            if cert.sign != Some(Ordering::Greater) {
                return Err(Error::NonPositiveRadius(rc.name.clone()));
            }
        }
        let det = &lattice.t1.x * &lattice.t2.y - &lattice.t1.y * &lattice.t2.x;
        let cell_area = match ev.certify_sign(&det, max_depth)?.sign {
            Some(Ordering::Greater) => det,
            Some(Ordering::Less) => -det,
            _ => return Err(Error::DegenerateLattice),
        };
        drop(ev);
        Ok(PeriodicPacking {
            lattice,
            radii,
            discs,
            bindings,
            contacts: dedup,
            cell_area,
        })
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn radii(&self) -> &[RadiusClass] {
        &self.radii
    }

    pub fn discs(&self) -> &[Disc] {
        &self.discs
    }

    pub fn bindings(&self) -> &Bindings {
        &self.bindings
    }

    /// Declared contacts, one per unordered pair.
    pub fn contacts(&self) -> &[Contact] {
        &self.contacts
    }

    pub fn cell_area_expr(&self) -> &Expr {
        &self.cell_area
    }

    /// The unvalidated pieces, e.g. to add a disc and validate again.
    pub fn to_parts(&self) -> PackingParts {
        PackingParts {
            lattice: Some(self.lattice.clone()),
            radii: self.radii.clone(),
            discs: self.discs.clone(),
            bindings: self.bindings.clone(),
            contacts: self.contacts.clone(),
        }
    }

    /// Smallest radius class in use by some disc (compared numerically; the
    /// choice only selects a probe, it certifies nothing).
    pub fn smallest_radius_class(&self) -> Option<&RadiusClass> {
        let used: HashSet<&str> = self.discs.iter().map(|d| d.radius.as_str()).collect();
        self.radii.iter().filter(|r| used.contains(r.name.as_str())).min_by(|a, b| {
            let (x, y) = (a.value.eval_f64(&self.bindings), b.value.eval_f64(&self.bindings));
            x.total_cmp(&y)
        })
    }

    pub fn disc(&self, id: DiscId) -> Result<&Disc, Error> {
        self.discs
            .iter()
            .find(|d| d.id == id)
            .ok_or(Error::UnknownDisc(id))
    }

    pub fn radius_class(&self, name: &str) -> Result<&RadiusClass, Error> {
        self.radii
            .iter()
            .find(|r| r.name == name)
            .ok_or_else(|| Error::UnknownRadius(name.to_string()))
    }

    pub fn radius_of(&self, id: DiscId) -> Result<&Expr, Error> {
        let d = self.disc(id)?;
        Ok(&self.radius_class(&d.radius)?.value)
    }

    /// Lattice vector `m * t1 + n * t2`, `None` for the zero offset.
    pub fn lattice_vector(&self, o: Offset) -> Option<Point> {
        lattice_vector(&self.lattice, o)
    }

    /// Center of the translate of disc `id` by `o`.
    pub fn center(&self, id: DiscId, o: Offset) -> Result<Point, Error> {
        Ok(translate(&self.disc(id)?.center, &self.lattice, o))
    }

    /// `dist(a, b + o) - (r_a + r_b)`.
    pub fn gap_expr(&self, a: DiscId, b: DiscId, o: Offset) -> Result<Expr, Error> {
        let (d2, rsum) = self.pair_terms(a, b, o)?;
        Ok(d2.sqrt() - rsum)
    }

    /// `dist(a, b + o)^2 - (r_a + r_b)^2`, with the same sign as the gap.
    pub fn gap_sign_expr(&self, a: DiscId, b: DiscId, o: Offset) -> Result<Expr, Error> {
        let (d2, rsum) = self.pair_terms(a, b, o)?;
        Ok(d2 - rsum.square())
    }

    fn pair_terms(&self, a: DiscId, b: DiscId, o: Offset) -> Result<(Expr, Expr), Error> {
        if a == b && o.is_zero() {
            return Err(Error::SelfGap(a));
        }
        let ca = self.center(a, Offset::ZERO)?;
        let cb = self.center(b, o)?;
        let dx = &cb.x - &ca.x;
        let dy = &cb.y - &ca.y;
        let d2 = dx.square() + dy.square();
        let rsum = self.radius_of(a)? + self.radius_of(b)?;
        Ok((d2, rsum))
    }

    /// Sound enclosure of the gap between disc `a` and the translate of `b`,
    /// no wider than `width` unless `max_depth` runs out first.
    pub fn gap(
        &self,
        a: DiscId,
        b: DiscId,
        o: Offset,
        width: &Rational,
        max_depth: u32,
    ) -> Result<Interval, Error> {
        let e = self.gap_expr(a, b, o)?;
        Ok(exactnum::eval(&e, &self.bindings, width, max_depth)?.interval)
    }

    /// Lattice offsets that can bring two discs of the domain into contact:
    /// every `(m, n)` whose translation is not certified longer than the
    /// diameter of the center set plus twice the largest radius.
    pub fn candidate_offsets(&self) -> Result<Vec<Offset>, Error> {
        const DEPTH: u32 = 32;
        let mut ev = Evaluator::new(&self.bindings);
        let mut enc = |e: &Expr| -> Result<Interval, Error> {
            ev.enclose(e, DEPTH).map_err(|err| match err {
                exactnum::LevelError::Hard(e) | exactnum::LevelError::Unresolved(e) => e.into(),
            })
        };
        let centers = self
            .discs
            .iter()
            .map(|d| Ok((enc(&d.center.x)?, enc(&d.center.y)?)))
            .collect::<Result<Vec<_>, Error>>()?;
        let mut r_max = Rational::zero();
        for rc in &self.radii {
            let iv = enc(&rc.value)?;
            if iv.hi() > &r_max {
                r_max = iv.hi().clone();
            }
        }
        // squared-diameter upper bound
        let mut diam2 = Rational::zero();
        for (i, a) in centers.iter().enumerate() {
            for b in &centers[i + 1..] {
                let d2 = &(&b.0 - &a.0).square() + &(&b.1 - &a.1).square();
                if d2.hi() > &diam2 {
                    diam2 = d2.hi().clone();
                }
            }
        }
        let two = Rational::from_integer(2.into());
        let reach = sqrt_upper(&diam2) + &two * &r_max;
        let reach2 = &reach * &reach;
        let t1 = (enc(&self.lattice.t1.x)?, enc(&self.lattice.t1.y)?);
        let t2 = (enc(&self.lattice.t2.x)?, enc(&self.lattice.t2.y)?);
        let det = (&(&t1.0 * &t2.1) - &(&t1.1 * &t2.0)).abs();
        if !det.lo().is_positive() {
            return Err(Error::DegenerateLattice);
        }
        let len1 = sqrt_upper((&t1.0.square() + &t1.1.square()).hi());
        let len2 = sqrt_upper((&t2.0.square() + &t2.1.square()).hi());
        // |m| <= |v| |t2| / |det|, |n| <= |v| |t1| / |det|
        let bound = |len: &Rational| -> i64 {
            let b = (&reach * len / det.lo()).ceil();
            b.to_integer().to_i64().unwrap_or(i64::MAX / 4)
        };
        let (mb, nb) = (bound(&len2), bound(&len1));
        let mut out = Vec::new();
        for m in -mb..=mb {
            for n in -nb..=nb {
                let (mi, ni) = (Interval::from_int(m), Interval::from_int(n));
                let vx = &(&mi * &t1.0) + &(&ni * &t2.0);
                let vy = &(&mi * &t1.1) + &(&ni * &t2.1);
                let len2 = &vx.square() + &vy.square();
                if len2.lo() <= &reach2 {
                    out.push(Offset::new(m, n));
                }
            }
        }
        Ok(out)
    }

    /// Every pair `(a, b, o)` that needs checking, each unordered pair once.
    pub fn candidate_pairs(&self) -> Result<Vec<Contact>, Error> {
        let offsets = self.candidate_offsets()?;
        let mut out = Vec::new();
        for (i, a) in self.discs.iter().enumerate() {
            for b in &self.discs[i..] {
                for &o in &offsets {
                    if a.id == b.id && o <= Offset::ZERO {
                        continue;
                    }
                    out.push(Contact::new(a.id, b.id, o));
                }
            }
        }
        Ok(out)
    }

    /// Certifies that no two discs (translates included) overlap.
    pub fn check_no_overlap(&self, cfg: &CheckConfig) -> Result<OverlapReport, Error> {
        let declared: HashSet<Contact> = self.contacts.iter().map(Contact::canonical).collect();
        let mut report = OverlapReport::default();
        let mut ev = Evaluator::new(&self.bindings);
        for pair in self.candidate_pairs()? {
            report.checked_pairs += 1;
            let is_declared = declared.contains(&pair.canonical());
            if is_declared {
                let gap = ev.eval(&self.gap_expr(pair.a, pair.b, pair.offset)?, &cfg.tol, cfg.max_depth)?;
                if gap.interval.contains_zero() && gap.interval.width() <= cfg.tol {
                    report.contacts.push(PairResult::new(pair, gap.interval, "declared contact"));
                } else if gap.interval.contains_zero() {
                    report
                        .inconclusive
                        .push(PairResult::new(pair, gap.interval, "contact enclosure too wide"));
                } else {
                    report
                        .violations
                        .push(PairResult::new(pair, gap.interval, "declared contact is not tangent"));
                }
                continue;
            }
            let cert = ev.certify_sign(&self.gap_sign_expr(pair.a, pair.b, pair.offset)?, cfg.max_depth)?;
            match cert.sign {
                Some(Ordering::Greater) => {}
                Some(Ordering::Equal) => {
                    report
                        .detected_contacts
                        .push(PairResult::new(pair, cert.enclosure, "exact tangency"));
                }
                Some(Ordering::Less) => {
                    let gap = ev.eval(&self.gap_expr(pair.a, pair.b, pair.offset)?, &cfg.tol, cfg.max_depth)?;
                    report.violations.push(PairResult::new(pair, gap.interval, "overlap"));
                }
                None => {
                    let gap = ev.eval(&self.gap_expr(pair.a, pair.b, pair.offset)?, &cfg.tol, cfg.max_depth)?;
                    let result = PairResult::new(pair, gap.interval.clone(), "undeclared near-contact");
                    if gap.interval.width() <= cfg.tol {
                        report.detected_contacts.push(result.clone());
                    }
                    report.inconclusive.push(result);
                }
            }
        }
        Ok(report)
    }

    /// `pi * sum(r^2) / |det(t1, t2)|`.
    pub fn density_expr(&self) -> Result<Expr, Error> {
        Ok(Expr::pi() * self.disc_area_sum(|_| true)? / &self.cell_area)
    }

    /// Density contributed by the discs of one radius class.
    pub fn class_density_expr(&self, class: &str) -> Result<Expr, Error> {
        self.radius_class(class)?;
        Ok(Expr::pi() * self.disc_area_sum(|d| d.radius == class)? / &self.cell_area)
    }

    fn disc_area_sum(&self, keep: impl Fn(&Disc) -> bool) -> Result<Expr, Error> {
        let mut sum: Option<Expr> = None;
        for d in self.discs.iter().filter(|d| keep(d)) {
            let r2 = self.radius_class(&d.radius)?.value.square();
            sum = Some(match sum {
                None => r2,
                Some(s) => s + r2,
            });
        }
        Ok(sum.unwrap_or_else(|| Expr::int(0)))
    }

    pub fn density(&self, width: &Rational, max_depth: u32) -> Result<DensityReport, Error> {
        let mut ev = Evaluator::new(&self.bindings);
        let disc_area = Expr::pi() * self.disc_area_sum(|_| true)?;
        let density = ev.eval(&self.density_expr()?, width, max_depth)?;
        let disc_area = ev.eval(&disc_area, width, max_depth)?.interval;
        let cell_area = ev.eval(&self.cell_area, width, max_depth)?.interval;
        Ok(DensityReport {
            density: density.interval,
            disc_area,
            cell_area,
            depth: density.depth,
            converged: density.converged,
        })
    }

    /// Same packing with every length multiplied by `t > 0`.
    pub fn scaled(&self, t: &Rational) -> PeriodicPacking {
        let k = Expr::constant(t.clone());
        let s = |e: &Expr| &k * e;
        let sp = |p: &Point| p.map(s);
        PeriodicPacking {
            lattice: Lattice {
                t1: sp(&self.lattice.t1),
                t2: sp(&self.lattice.t2),
            },
            radii: self
                .radii
                .iter()
                .map(|r| RadiusClass {
                    name: r.name.clone(),
                    value: s(&r.value),
                })
                .collect(),
            discs: self
                .discs
                .iter()
                .map(|d| Disc {
                    id: d.id,
                    center: sp(&d.center),
                    radius: d.radius.clone(),
                })
                .collect(),
            bindings: self.bindings.clone(),
            contacts: self.contacts.clone(),
            cell_area: &k * &k * &self.cell_area,
        }
    }

    /// Same discs under the lattice basis `(t1 + t2, t2)`. Contact offsets are
    /// rewritten for the new basis.
    pub fn with_sheared_basis(&self) -> PeriodicPacking {
        let t1 = Point::new(
            &self.lattice.t1.x + &self.lattice.t2.x,
            &self.lattice.t1.y + &self.lattice.t2.y,
        );
        // m t1 + n t2 = m (t1 + t2) + (n - m) t2
        let contacts = self
            .contacts
            .iter()
            .map(|c| Contact::new(c.a, c.b, Offset::new(c.offset.m, c.offset.n - c.offset.m)))
            .collect();
        PeriodicPacking {
            lattice: Lattice {
                t1,
                t2: self.lattice.t2.clone(),
            },
            contacts,
            ..self.clone()
        }
    }
}

fn sqrt_upper(x: &Rational) -> Rational {
    Interval::point(x.clone())
        .sqrt(32)
        .map(|s| s.hi().clone())
        .unwrap_or_else(Rational::zero)
}

pub(crate) fn lattice_vector(lattice: &Lattice, o: Offset) -> Option<Point> {
    let term = |k: i64, e: &Expr| -> Option<Expr> {
        match k {
            0 => None,
            1 => Some(e.clone()),
            -1 => Some(-e),
            _ => Some(Expr::int(k) * e),
        }
    };
    let add = |a: Option<Expr>, b: Option<Expr>| match (a, b) {
        (Some(a), Some(b)) => Some(a + b),
        (a, b) => a.or(b),
    };
    let x = add(term(o.m, &lattice.t1.x), term(o.n, &lattice.t2.x));
    let y = add(term(o.m, &lattice.t1.y), term(o.n, &lattice.t2.y));
    if o.is_zero() {
        return None;
    }
    Some(Point::new(
        x.unwrap_or_else(|| Expr::int(0)),
        y.unwrap_or_else(|| Expr::int(0)),
    ))
}

pub(crate) fn translate(p: &Point, lattice: &Lattice, o: Offset) -> Point {
    match lattice_vector(lattice, o) {
        None => p.clone(),
        Some(v) => Point::new(&p.x + &v.x, &p.y + &v.y),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairResult {
    pub pair: Contact,
    pub gap: Interval,
    pub note: &'static str,
}

impl PairResult {
    fn new(pair: Contact, gap: Interval, note: &'static str) -> Self {
        PairResult { pair, gap, note }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct OverlapReport {
    pub checked_pairs: usize,
    /// Declared contacts confirmed tangent within tolerance.
    pub contacts: Vec<PairResult>,
    /// Tangencies found among undeclared pairs.
    pub detected_contacts: Vec<PairResult>,
    pub violations: Vec<PairResult>,
    pub inconclusive: Vec<PairResult>,
}

impl OverlapReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.inconclusive.is_empty()
    }

    pub fn status(&self) -> Status {
        if !self.violations.is_empty() {
            Status::Disproved
        } else if !self.inconclusive.is_empty() {
            Status::Inconclusive
        } else {
            Status::Proved
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DensityReport {
    pub density: Interval,
    pub disc_area: Interval,
    pub cell_area: Interval,
    pub depth: u32,
    /// Whether the density enclosure reached the requested width.
    pub converged: bool,
}
