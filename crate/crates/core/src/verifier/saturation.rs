//! Can another disc be inserted? Triangular holes are decided exactly from
//! the inner Soddy circle; other holes get a numeric estimate that is only
//! trusted once the placement is certified.

use std::cmp::Ordering;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use super::graph::{ContactGraph, Corner};
use super::{Decision, Error};
use crate::exactnum::{Evaluator, Expr, Interval, Rational};
use crate::packing::{
    descartes_inner_expr, CheckConfig, Disc, PeriodicPacking, Point, RadiusClass,
};

/// Grid on which a numerically found probe center is placed.
const PROBE_GRID_BITS: u32 = 40;
/// Relative shrink applied to a numeric hole radius before trusting it.
const SAFETY_MARGIN: f64 = 1e-6;
const PROBE_ID: u32 = u32::MAX;
const PROBE_CLASS: &str = "__probe";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HoleWitness {
    pub hole: Vec<Corner>,
    /// Enclosure of the radius that fits (inner circle of a triangle, or the
    /// certified probe radius of a larger hole).
    pub radius: Interval,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SaturationVerdict {
    pub saturated: Decision,
    pub witness: Option<HoleWitness>,
    /// Non-triangular (or unresolvable) holes that were not decided.
    pub inconclusive_faces: Vec<Vec<Corner>>,
}

/// Checks whether a disc of radius `probe` fits into some hole of the
/// contact graph's embedding.
pub fn check_saturated(
    p: &PeriodicPacking,
    g: &ContactGraph,
    probe: &Expr,
    cfg: &CheckConfig,
) -> Result<SaturationVerdict, Error> {
    let mut ev = Evaluator::new(p.bindings());
    let mut inconclusive = Vec::new();
    // holes with the same radius triple share the verdict
    let mut memo: HashMap<Vec<String>, (Option<Ordering>, Interval)> = HashMap::new();
    for face in g.faces() {
        let corners = g.corners(face);
        if corners.len() == 3 {
            let mut key: Vec<String> = corners
                .iter()
                .map(|c| p.disc(c.disc).map(|d| d.radius.clone()))
                .collect::<Result<_, _>>()?;
            key.sort();
            let (sign, inner) = match memo.get(&key) {
                Some(hit) => hit.clone(),
                None => {
                    let r = |i: usize| p.radius_of(corners[i].disc).cloned();
                    let inner = descartes_inner_expr(&r(0)?, &r(1)?, &r(2)?);
                    let cert = ev.certify_sign(&(&inner - probe), cfg.max_depth)?;
                    let enclosure = ev.eval(&inner, &cfg.tol, cfg.max_depth)?.interval;
                    memo.insert(key, (cert.sign, enclosure.clone()));
                    (cert.sign, enclosure)
                }
            };
            match sign {
                Some(Ordering::Greater) | Some(Ordering::Equal) => {
                    return Ok(SaturationVerdict {
                        saturated: Decision::No,
                        witness: Some(HoleWitness {
                            hole: corners,
                            radius: inner,
                        }),
                        inconclusive_faces: vec![],
                    })
                }
                Some(Ordering::Less) => {}
                None => inconclusive.push(corners),
            }
        } else {
            match probe_large_hole(p, &corners, probe, cfg)? {
                Some(w) => {
                    return Ok(SaturationVerdict {
                        saturated: Decision::No,
                        witness: Some(w),
                        inconclusive_faces: vec![],
                    })
                }
                None => inconclusive.push(corners),
            }
        }
    }
    let saturated = if inconclusive.is_empty() && g.uncertain_pairs().is_empty() {
        Decision::Yes
    } else {
        Decision::Inconclusive
    };
    Ok(SaturationVerdict {
        saturated,
        witness: None,
        inconclusive_faces: inconclusive,
    })
}

/// Largest circle found among the Apollonius circles of boundary triples,
/// then a certified placement of the probe at its (rounded) center.
fn probe_large_hole(
    p: &PeriodicPacking,
    corners: &[Corner],
    probe: &Expr,
    cfg: &CheckConfig,
) -> Result<Option<HoleWitness>, Error> {
    let b = p.bindings();
    let circles: Vec<(f64, f64, f64)> = corners
        .iter()
        .map(|c| {
            let pt = p.center(c.disc, c.offset)?;
            Ok((pt.x.eval_f64(b), pt.y.eval_f64(b), p.radius_of(c.disc)?.eval_f64(b)))
        })
        .collect::<Result<_, Error>>()?;
    let Some((cx, cy, radius)) = largest_empty_circle(&circles) else {
        return Ok(None);
    };
    if radius * (1.0 - SAFETY_MARGIN) < probe.eval_f64(b) {
        return Ok(None);
    }
    let center = Point::new(
        Expr::constant(to_grid(cx)),
        Expr::constant(to_grid(cy)),
    );
    let mut parts = p.to_parts();
    parts.radii.push(RadiusClass {
        name: PROBE_CLASS.into(),
        value: probe.clone(),
    });
    parts.discs.push(Disc {
        id: PROBE_ID,
        center,
        radius: PROBE_CLASS.into(),
    });
    let with_probe = PeriodicPacking::new(parts, cfg.max_depth)?;
    let mut ev = Evaluator::new(with_probe.bindings());
    for pair in with_probe.candidate_pairs()? {
        if pair.a != PROBE_ID && pair.b != PROBE_ID {
            continue;
        }
        let e = with_probe.gap_sign_expr(pair.a, pair.b, pair.offset)?;
        if ev.certify_sign(&e, cfg.max_depth)?.sign != Some(Ordering::Greater) {
            return Ok(None);
        }
    }
    let radius = ev.eval(probe, &cfg.tol, cfg.max_depth)?.interval;
    Ok(Some(HoleWitness {
        hole: corners.to_vec(),
        radius,
    }))
}

fn to_grid(x: f64) -> Rational {
    let scale = (1u64 << PROBE_GRID_BITS) as f64;
    let n = (x * scale).round().to_i64().unwrap_or(0);
    Rational::new(BigInt::from(n), BigInt::one() << PROBE_GRID_BITS as usize)
}

/// Among circles externally tangent to three of the given discs, the largest
/// whose center lies inside the polygon of disc centers and which overlaps
/// none of the discs.
pub(crate) fn largest_empty_circle(discs: &[(f64, f64, f64)]) -> Option<(f64, f64, f64)> {
    let n = discs.len();
    let mut best: Option<(f64, f64, f64)> = None;
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for (x, y, r) in apollonius(discs[i], discs[j], discs[k]) {
                    let inside = point_in_polygon(x, y, discs);
                    let clear = discs
                        .iter()
                        .all(|&(dx, dy, dr)| (x - dx).hypot(y - dy) >= r + dr - 1e-9);
                    if inside && clear && best.is_none_or(|b| r > b.2) {
                        best = Some((x, y, r));
                    }
                }
            }
        }
    }
    best
}

/// Circles of positive radius externally tangent to three discs.
pub(crate) fn apollonius(
    (x1, y1, r1): (f64, f64, f64),
    (x2, y2, r2): (f64, f64, f64),
    (x3, y3, r3): (f64, f64, f64),
) -> Vec<(f64, f64, f64)> {
    // subtracting the first tangency equation from the others leaves
    // a_i x + b_i y = c_i + d_i R
    let c = |x: f64, y: f64, r: f64| x * x + y * y - r * r;
    let (a1, b1, c1, d1) = (2.0 * (x2 - x1), 2.0 * (y2 - y1), c(x2, y2, r2) - c(x1, y1, r1), -2.0 * (r2 - r1));
    let (a2, b2, c2, d2) = (2.0 * (x3 - x1), 2.0 * (y3 - y1), c(x3, y3, r3) - c(x1, y1, r1), -2.0 * (r3 - r1));
    let det = a1 * b2 - a2 * b1;
    if det.abs() < 1e-12 {
        return vec![];
    }
    // x = px + qx R, y = py + qy R
    let px = (c1 * b2 - c2 * b1) / det;
    let qx = (d1 * b2 - d2 * b1) / det;
    let py = (a1 * c2 - a2 * c1) / det;
    let qy = (a1 * d2 - a2 * d1) / det;
    // (x - x1)^2 + (y - y1)^2 = (R + r1)^2
    let (ux, uy) = (px - x1, py - y1);
    let qa = qx * qx + qy * qy - 1.0;
    let qb = 2.0 * (ux * qx + uy * qy - r1);
    let qc = ux * ux + uy * uy - r1 * r1;
    let mut roots = Vec::new();
    if qa.abs() < 1e-14 {
        if qb.abs() > 1e-14 {
            roots.push(-qc / qb);
        }
    } else {
        let disc = qb * qb - 4.0 * qa * qc;
        if disc >= 0.0 {
            let s = disc.sqrt();
            roots.push((-qb + s) / (2.0 * qa));
            roots.push((-qb - s) / (2.0 * qa));
        }
    }
    roots
        .into_iter()
        .filter(|&r| r > 0.0 && r.is_finite())
        .map(|r| (px + qx * r, py + qy * r, r))
        .collect()
}

fn point_in_polygon(x: f64, y: f64, poly: &[(f64, f64, f64)]) -> bool {
    let mut inside = false;
    let n = poly.len();
    for i in 0..n {
        let (xi, yi, _) = poly[i];
        let (xj, yj, _) = poly[(i + n - 1) % n];
        if (yi > y) != (yj > y) && x < (xj - xi) * (y - yi) / (yj - yi) + xi {
            inside = !inside;
        }
    }
    inside
}
