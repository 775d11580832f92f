//! Deterministic SVG drawing of a periodic packing.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::exactnum::{eval, Expr, Rational};
use crate::packing::{self, Offset, PeriodicPacking};

/// Coordinates are enclosed to this width before being printed.
const PLOT_WIDTH: &str = "1e-6";
const MARGIN: f64 = 0.25;
const PALETTE: [&str; 6] = ["#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#b07aa1", "#edc948"];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RenderError {
    #[error("zero tiles requested")]
    ZeroTiles,
    #[error(transparent)]
    Packing(#[from] packing::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RenderOptions {
    pub rows: u32,
    pub cols: u32,
    pub contacts: bool,
    pub max_depth: u32,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            rows: 1,
            cols: 1,
            contacts: false,
            max_depth: 64,
        }
    }
}

/// One circle per disc and tile (tile `(i, j)` is the translate by
/// `j * t1 + i * t2`), one fill per radius class, the outline of the
/// fundamental cell, and optionally the contact segments.
pub fn render_svg(p: &PeriodicPacking, opts: &RenderOptions) -> Result<String, RenderError> {
    if opts.rows == 0 || opts.cols == 0 {
        return Err(RenderError::ZeroTiles);
    }
    let width: Rational = PLOT_WIDTH.parse::<f64>().ok().and_then(Rational::from_float).expect("width");
    let num = |e: &Expr| -> Result<f64, RenderError> {
        Ok(eval(e, p.bindings(), &width, opts.max_depth)
            .map_err(packing::Error::from)?
            .interval
            .midpoint_f64())
    };
    let fill: BTreeMap<&str, &str> = p
        .radii()
        .iter()
        .enumerate()
        .map(|(i, r)| (r.name.as_str(), PALETTE[i % PALETTE.len()]))
        .collect();
    let (t1, t2) = (&p.lattice().t1, &p.lattice().t2);
    let (t1x, t1y, t2x, t2y) = (num(&t1.x)?, num(&t1.y)?, num(&t2.x)?, num(&t2.y)?);
    let mut base = BTreeMap::new();
    for d in p.discs() {
        let c = &d.center;
        base.insert(d.id, (num(&c.x)?, num(&c.y)?, num(p.radius_of(d.id)?)?, d.radius.as_str()));
    }
    let shift = |o: Offset| (o.m as f64 * t1x + o.n as f64 * t2x, o.m as f64 * t1y + o.n as f64 * t2y);

    let mut circles = Vec::new();
    for i in 0..opts.rows as i64 {
        for j in 0..opts.cols as i64 {
            let (sx, sy) = shift(Offset::new(j, i));
            for (&id, &(x, y, r, class)) in &base {
                circles.push((id, x + sx, y + sy, r, class));
            }
        }
    }
    let mut segments = Vec::new();
    if opts.contacts {
        for i in 0..opts.rows as i64 {
            for j in 0..opts.cols as i64 {
                let tile = Offset::new(j, i);
                for c in p.contacts() {
                    let (ax, ay, _, _) = base[&c.a];
                    let (bx, by, _, _) = base[&c.b];
                    let (sa, sb) = (shift(tile), shift(tile + c.offset));
                    segments.push((ax + sa.0, ay + sa.1, bx + sb.0, by + sb.1));
                }
            }
        }
    }
    let cell = [(0.0, 0.0), (t1x, t1y), (t1x + t2x, t1y + t2y), (t2x, t2y)];

    let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for &(_, x, y, r, _) in &circles {
        x0 = x0.min(x - r);
        x1 = x1.max(x + r);
        y0 = y0.min(y - r);
        y1 = y1.max(y + r);
    }
    for &(x, y) in &cell {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    let (x0, y0, x1, y1) = (x0 - MARGIN, y0 - MARGIN, x1 + MARGIN, y1 + MARGIN);

    // y grows downwards in SVG
    let f = |v: f64| format!("{:.6}", if v == 0.0 { 0.0 } else { v });
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}">"#,
        f(x0),
        f(-y1),
        f(x1 - x0),
        f(y1 - y0)
    );
    let points: Vec<String> = cell.iter().map(|&(x, y)| format!("{},{}", f(x), f(-y))).collect();
    let _ = writeln!(
        out,
        r#"<polygon class="cell" points="{}" fill="none" stroke="black" stroke-width="0.02"/>"#,
        points.join(" ")
    );
    for (id, x, y, r, class) in circles {
        let _ = writeln!(
            out,
            r#"<circle data-disc="{id}" cx="{}" cy="{}" r="{}" fill="{}" stroke="black" stroke-width="0.01"/>"#,
            f(x),
            f(-y),
            f(r),
            fill[class]
        );
    }
    for (ax, ay, bx, by) in segments {
        let _ = writeln!(
            out,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="black" stroke-width="0.02"/>"#,
            f(ax),
            f(-ay),
            f(bx),
            f(-by)
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}
