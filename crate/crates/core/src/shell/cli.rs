//! Command-line entry points. Exit codes: 0 every claim proved, 1 some claim
//! disproved, 2 some claim inconclusive, 3 bad input.

use std::io::Write;
use std::path::Path;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Signed;

use super::render::{render_svg, RenderOptions};
use super::report::{Format, Outcome, Record, Report};
use super::scene::{parse_scene, Scene};
use crate::exactnum::{
    self, certify_compare, decimal_floor, isolate_roots, parse_rational, Direction, Evaluator,
    IntegerPolynomial, Interval, Rational, DEFAULT_MAX_DEPTH,
};
use crate::packing::{self, removal_margin, Margin, PeriodicPacking};
use crate::verifier::{
    self, check_compact, check_saturated, compare_densities, ContactGraph, Decision, Order,
};

const BUNDLED: [(&str, &str); 5] = [
    ("hexagonal", include_str!("../../scenes/hexagonal.scene")),
    ("square", include_str!("../../scenes/square.scene")),
    ("fig3", include_str!("../../scenes/fig3.scene")),
    ("case110", include_str!("../../scenes/case110.scene")),
    ("case110_polynomials", include_str!("../../scenes/case110_polynomials.scene")),
];

const DEFAULT_WIDTH: &str = "1e-12";
/// Width of the enclosures fed into the removal margin.
const MARGIN_WIDTH: &str = "1e-30";

#[derive(Parser, Debug)]
#[command(name = "packcert", version, about = "Certified checks on periodic disc packings")]
struct Cli {
    /// Tangency tolerance for contact detection (overrides the scene's)
    #[arg(long, global = true, value_parser = rational)]
    tol: Option<Rational>,
    /// Largest refinement depth, in bisections of every algebraic binding
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_DEPTH)]
    max_depth: u32,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Isolate and refine the real roots of an integer polynomial
    Isolate {
        /// Ascending coefficients, comma separated
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        lo: Rational,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        hi: Rational,
        #[arg(long, value_parser = rational, default_value = DEFAULT_WIDTH)]
        width: Rational,
    },
    /// Check overlap, compactness and saturation of a scene
    Verify {
        scene: String,
        #[arg(long, value_enum)]
        expect: Vec<Expect>,
        /// Probe radius for saturation (default: smallest radius in use)
        #[arg(long)]
        probe: Option<String>,
    },
    /// Enclose the density of a scene
    Density {
        scene: String,
        #[arg(long, value_parser = rational, default_value = DEFAULT_WIDTH)]
        width: Rational,
    },
    /// Certify a strict inequality
    Certify {
        scene: String,
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        bound: Bound,
    },
    /// Order two scenes by density
    Compare { first: String, second: String },
    /// Write an SVG drawing of a scene
    Render {
        scene: String,
        /// Rows x columns of lattice translates, e.g. 2x3
        #[arg(long, value_parser = tiles, default_value = "1x1")]
        tiles: (u32, u32),
        #[arg(long)]
        out: String,
        /// Draw the declared contacts
        #[arg(long)]
        contacts: bool,
    },
    /// Fraction of a radius class removable while the density stays above a floor
    Margin {
        scene: String,
        #[arg(long, value_parser = rational)]
        floor: Rational,
        #[arg(long)]
        class: String,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Target {
    /// A defined name or an expression over the scene's names
    #[arg(long)]
    expr: Option<String>,
    #[arg(long)]
    density: bool,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Bound {
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    above: Option<Rational>,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    below: Option<Rational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Expect {
    Compact,
    Noncompact,
    Saturated,
    Unsaturated,
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).ok_or_else(|| format!("not a rational number: '{s}'"))
}

fn tiles(s: &str) -> Result<(u32, u32), String> {
    let bad = || format!("expected ROWSxCOLS, got '{s}'");
    let (r, c) = s.split_once(['x', 'X']).ok_or_else(bad)?;
    Ok((r.parse().map_err(|_| bad())?, c.parse().map_err(|_| bad())?))
}

/// Decimal digits that resolve an enclosure of the given width.
fn digits_for(width: &Rational) -> usize {
    let mut d = 0;
    let mut w = width.clone();
    let ten = Rational::from_integer(10.into());
    while w < Rational::from_integer(1.into()) && d < 60 {
        w *= &ten;
        d += 1;
    }
    d + 2
}

fn show(iv: &Interval, digits: usize) -> String {
    iv.to_decimal_string(digits)
}

struct Input(String);

impl<E: std::fmt::Display> From<E> for Input {
    fn from(e: E) -> Self {
        Input(e.to_string())
    }
}

struct Ctx {
    tol: Option<Rational>,
    max_depth: u32,
}

impl Ctx {
    fn packing(&self, scene: &Scene) -> Result<PeriodicPacking, Input> {
        if !scene.has_geometry() {
            return Err(Input("scene has no lattice".into()));
        }
        Ok(scene.to_packing(self.max_depth)?)
    }

    fn config(&self, scene: &Scene) -> packing::CheckConfig {
        let mut cfg = scene.check_config(self.max_depth);
        if let Some(t) = &self.tol {
            cfg.tol = t.clone();
        }
        cfg
    }
}

/// Reads a scene file; `scenes/<name>.scene` and bare bundled names fall
/// back to the copies compiled into the binary.
pub fn load_scene(path: &str) -> Result<(String, Scene), String> {
    let p = Path::new(path);
    let stem = p
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or(path)
        .to_string();
    let text = match std::fs::read_to_string(p) {
        Ok(t) => t,
        Err(e) => BUNDLED
            .iter()
            .find(|(name, _)| *name == stem)
            .map(|(_, t)| t.to_string())
            .ok_or_else(|| format!("{path}: {e}"))?,
    };
    let scene = parse_scene(&text).map_err(|e| format!("{path}: {e}"))?;
    let name = scene.name.clone().unwrap_or(stem);
    Ok((name, scene))
}

/// Runs one invocation. `args[0]` is the program name.
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    3
                }
            };
        }
    };
    let ctx = Ctx {
        tol: cli.tol,
        max_depth: cli.max_depth,
    };
    match dispatch(&ctx, cli.command) {
        Ok(report) => {
            if let Err(e) = report.write(cli.format, out) {
                let _ = writeln!(err, "error: {e}");
                return 3;
            }
            report.exit_code()
        }
        Err(Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            3
        }
    }
}

fn dispatch(ctx: &Ctx, cmd: Command) -> Result<Report, Input> {
    let mut rep = Report::default();
    match cmd {
        Command::Isolate { poly, lo, hi, width } => {
            let p: IntegerPolynomial = poly.parse()?;
            if lo > hi {
                return Err(Input("empty bracket: lo > hi".into()));
            }
            if !width.is_positive() {
                return Err(Input("width must be positive".into()));
            }
            let roots = isolate_roots(&p, &Interval::new(lo.clone(), hi.clone()))?;
            let bracket = show(&Interval::new(lo, hi), 6);
            if roots.is_empty() {
                rep.push(Record::new("isolate", &bracket, Outcome::Disproved, "no root"));
            }
            let digits = digits_for(&width);
            for (i, a) in roots.iter().enumerate() {
                let r = a.refine(&width);
                rep.push(
                    Record::new("root", &format!("#{i}"), Outcome::Proved, show(r.interval(), digits))
                        .detail(format!("{} of {} in {bracket}", i + 1, roots.len())),
                );
            }
        }
        Command::Verify { scene, expect, probe } => {
            let (name, sc) = load_scene(&scene)?;
            verify(ctx, &mut rep, &name, &sc, &expect, probe.as_deref())?;
        }
        Command::Density { scene, width } => {
            let (name, sc) = load_scene(&scene)?;
            let p = ctx.packing(&sc)?;
            match p.density(&width, ctx.max_depth) {
                Ok(d) => {
                    let status = if d.converged { Outcome::Proved } else { Outcome::Inconclusive };
                    let mut r = Record::new("density", &name, status, show(&d.density, digits_for(&width)))
                        .depth(d.depth);
                    if !d.converged {
                        r = r.detail("requested width not reached");
                    }
                    rep.push(r);
                }
                Err(e) => {
                    let msg = e.to_string();
                    inconclusive_or_input(e)?;
                    rep.push(Record::new("density", &name, Outcome::Inconclusive, "").detail(msg));
                }
            }
        }
        Command::Certify { scene, target, bound } => {
            let (name, sc) = load_scene(&scene)?;
            let (label, e, bindings) = match target.expr {
                Some(text) => {
                    let e = match sc.named(&text) {
                        Some(e) => e,
                        None => sc.resolve(&sc.parse_expr(&text)?),
                    };
                    (text, e, sc.bindings.clone())
                }
                None => {
                    let p = ctx.packing(&sc)?;
                    ("density".to_string(), p.density_expr()?, p.bindings().clone())
                }
            };
            let (dir, x, rel) = match (bound.above, bound.below) {
                (Some(x), _) => (Direction::Above, x, ">"),
                (_, Some(x)) => (Direction::Below, x, "<"),
                _ => unreachable!("clap requires one bound"),
            };
            match certify_compare(&e, &x, dir, &bindings, ctx.max_depth) {
                Ok(v) => rep.push(
                    Record::new("certify", &name, v.status.into(), show(&v.enclosure, 15))
                        .depth(v.depth)
                        .detail(format!("{label} {rel} {}", show_rational(&x))),
                ),
                Err(e) => {
                    let msg = e.to_string();
                    inconclusive_or_input(e)?;
                    rep.push(
                        Record::new("certify", &name, Outcome::Inconclusive, "")
                            .detail(format!("{label} {rel} {}: {msg}", show_rational(&x))),
                    );
                }
            }
        }
        Command::Compare { first, second } => {
            let (n1, s1) = load_scene(&first)?;
            let (n2, s2) = load_scene(&second)?;
            let (p1, p2) = (ctx.packing(&s1)?, ctx.packing(&s2)?);
            let c = compare_densities(&p1, &p2, ctx.max_depth).map_err(verifier_input)?;
            let status = if c.order == Order::Inconclusive { Outcome::Inconclusive } else { Outcome::Proved };
            let subject = format!("{n1}:{n2}");
            let value = match c.order {
                Order::FirstDenser => format!("{n1} denser"),
                Order::SecondDenser => format!("{n2} denser"),
                Order::Inconclusive => "undecided".to_string(),
            };
            rep.push(
                Record::new("compare", &subject, status, value)
                    .depth(c.depth)
                    .detail(format!("{} vs {}", show(&c.first, 12), show(&c.second, 12))),
            );
        }
        Command::Render { scene, tiles, out, contacts } => {
            let (name, sc) = load_scene(&scene)?;
            let p = ctx.packing(&sc)?;
            let opts = RenderOptions {
                rows: tiles.0,
                cols: tiles.1,
                contacts,
                max_depth: ctx.max_depth,
            };
            let svg = render_svg(&p, &opts)?;
            std::fs::write(&out, &svg).map_err(|e| Input(format!("{out}: {e}")))?;
            let circles = svg.matches("<circle").count();
            rep.push(Record::new("render", &name, Outcome::Info, out).detail(format!("{circles} circles")));
        }
        Command::Margin { scene, floor, class } => {
            let (name, sc) = load_scene(&scene)?;
            let p = ctx.packing(&sc)?;
            let width = parse_rational(MARGIN_WIDTH).expect("constant");
            let mut ev = Evaluator::new(p.bindings());
            let high = ev.eval(&p.density_expr()?, &width, ctx.max_depth)?.interval;
            let contribution = ev.eval(&p.class_density_expr(&class)?, &width, ctx.max_depth)?.interval;
            let low = Interval::point(floor.clone());
            let subject = format!("{name}/{class}");
            let detail = format!("density {} over floor {}", show(&high, 12), show_rational(&floor));
            let r = match removal_margin(&high, &low, &contribution) {
                Ok(Margin::Positive(e)) => Record::new("margin", &subject, Outcome::Proved, show(&e, 12)),
                Ok(Margin::Inconclusive(e)) => Record::new("margin", &subject, Outcome::Inconclusive, show(&e, 12)),
                Ok(Margin::Zero) => Record::new("margin", &subject, Outcome::Disproved, "zero"),
                Err(packing::Error::NoMargin) => Record::new("margin", &subject, Outcome::Disproved, "no margin"),
                Err(e) => return Err(e.into()),
            };
            rep.push(r.detail(detail));
        }
    }
    Ok(rep)
}

fn verify(
    ctx: &Ctx,
    rep: &mut Report,
    name: &str,
    sc: &Scene,
    expect: &[Expect],
    probe: Option<&str>,
) -> Result<(), Input> {
    let p = ctx.packing(sc)?;
    let cfg = ctx.config(sc);
    let overlap = p.check_no_overlap(&cfg)?;
    let mut r = Record::new(
        "overlap",
        name,
        overlap.status().into(),
        format!(
            "{} pairs, {} contacts, {} detected",
            overlap.checked_pairs,
            overlap.contacts.len(),
            overlap.detected_contacts.len()
        ),
    );
    if let Some(v) = overlap.violations.first().or(overlap.inconclusive.first()) {
        r = r.detail(format!("{}: gap {}, {}", v.pair, show(&v.gap, 12), v.note));
    }
    rep.push(r);
    if !overlap.violations.is_empty() {
        return Ok(());
    }
    let claim = |want: Option<Decision>, d: Decision| match want {
        Some(w) => Outcome::expect(d, w),
        None => Outcome::Info,
    };
    let wanted = |yes: Expect, no: Expect| {
        if expect.contains(&yes) {
            Some(Decision::Yes)
        } else if expect.contains(&no) {
            Some(Decision::No)
        } else {
            None
        }
    };
    let g = match ContactGraph::from_report(&p, &overlap, cfg.max_depth) {
        Ok(g) => g,
        Err(e @ (verifier::Error::RotationAmbiguity(_) | verifier::Error::Euler { .. })) => {
            let status = claim(wanted(Expect::Compact, Expect::Noncompact), Decision::Inconclusive);
            rep.push(Record::new("compact", name, status, "inconclusive").detail(e.to_string()));
            return Ok(());
        }
        Err(e) => return Err(verifier_input(e)),
    };
    rep.push(
        Record::new(
            "graph",
            name,
            Outcome::Info,
            format!("V={} E={} F={}", g.vertices().len(), g.edges().len(), g.faces().len()),
        )
        .detail(format!("euler characteristic {}", g.euler_characteristic())),
    );
    let c = check_compact(&g);
    let mut r = Record::new(
        "compact",
        name,
        claim(wanted(Expect::Compact, Expect::Noncompact), c.compact),
        c.compact.to_string(),
    )
    .detail(format!("face sizes {:?}", c.face_sizes));
    if let Some(w) = &c.witness {
        let corners: Vec<String> = w.iter().map(ToString::to_string).collect();
        r = r.detail(format!("face sizes {:?}; witness face {}", c.face_sizes, corners.join(" ")));
    }
    rep.push(r);

    let probe_expr = match probe {
        Some(text) => match sc.named(text) {
            Some(e) => e,
            None => sc.resolve(&sc.parse_expr(text)?),
        },
        None => match p.smallest_radius_class() {
            Some(c) => c.value.clone(),
            None => return Ok(()),
        },
    };
    let s = check_saturated(&p, &g, &probe_expr, &cfg).map_err(verifier_input)?;
    let mut r = Record::new(
        "saturated",
        name,
        claim(wanted(Expect::Saturated, Expect::Unsaturated), s.saturated),
        s.saturated.to_string(),
    )
    .detail(format!("probe {}", probe.unwrap_or("smallest radius")));
    if let Some(w) = &s.witness {
        let corners: Vec<String> = w.hole.iter().map(ToString::to_string).collect();
        r = r.detail(format!("hole {} fits radius {}", corners.join(" "), show(&w.radius, 12)));
    } else if !s.inconclusive_faces.is_empty() {
        r = r.detail(format!("{} faces undecided", s.inconclusive_faces.len()));
    }
    rep.push(r);
    Ok(())
}

/// Short decimal label for a threshold.
fn show_rational(x: &Rational) -> String {
    let s = decimal_floor(x, 12);
    match s.split_once('.') {
        Some((int, frac)) if frac.trim_end_matches('0').is_empty() => int.to_string(),
        Some(_) => s.trim_end_matches('0').to_string(),
        None => s,
    }
}

/// Errors that only mean "not decided at this depth" become `Ok`; anything
/// else is bad input.
fn inconclusive_or_input<E>(e: E) -> Result<(), Input>
where
    E: Into<packing::Error> + std::fmt::Display,
{
    let msg = e.to_string();
    match e.into() {
        packing::Error::Kernel(
            exactnum::Error::IndeterminateRadicand | exactnum::Error::PossibleDivisionByZero,
        ) => Ok(()),
        _ => Err(Input(msg)),
    }
}

fn verifier_input(e: verifier::Error) -> Input {
    Input(e.to_string())
}
