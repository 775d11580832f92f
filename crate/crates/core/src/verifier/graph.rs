//! Contact graph on the torus: darts with lattice offsets, a rotation system
//! from certified angle comparisons, and face tracing.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::f64::consts::{PI, TAU};
use std::fmt;

use serde::Serialize;

use super::{Decision, Error};
use crate::exactnum::Evaluator;
use crate::packing::{CheckConfig, Contact, DiscId, Offset, OverlapReport, PeriodicPacking};

/// Turns this close to a half turn are certified through the dot product.
const HALF_TURN_SLACK: f64 = 1e-6;

/// Directed half of a contact: from disc `from` to the translate of `to` by
/// `offset`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Dart {
    pub from: DiscId,
    pub to: DiscId,
    pub offset: Offset,
}

/// A face of the torus embedding, as a closed walk of darts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub darts: Vec<usize>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct ContactGraph {
    vertices: Vec<DiscId>,
    edges: Vec<Contact>,
    /// Dart `2i` runs along edge `i`, dart `2i + 1` against it.
    darts: Vec<Dart>,
    /// Darts leaving each vertex, counterclockwise from the positive x axis.
    rotation: BTreeMap<DiscId, Vec<usize>>,
    faces: Vec<Face>,
    /// Pairs whose tangency could be neither confirmed nor excluded.
    uncertain: Vec<Contact>,
}

/// Position of a face corner in the plane: a disc and the translate it sits
/// in, relative to the face's first corner.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Corner {
    pub disc: DiscId,
    pub offset: Offset,
}

impl fmt::Display for Corner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.offset.is_zero() {
            write!(f, "{}", self.disc)
        } else {
            write!(f, "{}{}", self.disc, self.offset)
        }
    }
}

impl ContactGraph {
    /// Builds the graph from the declared contacts plus every undeclared pair
    /// whose gap encloses 0 within `cfg.tol`.
    pub fn build(p: &PeriodicPacking, cfg: &CheckConfig) -> Result<ContactGraph, Error> {
        Self::from_report(p, &p.check_no_overlap(cfg)?, cfg.max_depth)
    }

    /// Same as [`ContactGraph::build`] with the overlap scan already done.
    pub fn from_report(
        p: &PeriodicPacking,
        report: &OverlapReport,
        max_depth: u32,
    ) -> Result<ContactGraph, Error> {
        if let Some(v) = report.violations.first() {
            return Err(Error::Overlap(v.pair));
        }
        let mut edge_set = BTreeSet::new();
        let mut edges = Vec::new();
        for c in p
            .contacts()
            .iter()
            .chain(report.detected_contacts.iter().map(|r| &r.pair))
        {
            if edge_set.insert(c.canonical()) {
                edges.push(*c);
            }
        }
        let uncertain = report
            .inconclusive
            .iter()
            .map(|r| r.pair)
            .filter(|c| !edge_set.contains(&c.canonical()))
            .collect();
        let mut darts = Vec::with_capacity(2 * edges.len());
        for e in &edges {
            darts.push(Dart {
                from: e.a,
                to: e.b,
                offset: e.offset,
            });
            darts.push(Dart {
                from: e.b,
                to: e.a,
                offset: -e.offset,
            });
        }
        let vertices: Vec<DiscId> = p.discs().iter().map(|d| d.id).collect();
        let rotation = rotation_system(p, &vertices, &darts, max_depth)?;
        let faces = trace_faces(&darts, &rotation);
        let g = ContactGraph {
            vertices,
            edges,
            darts,
            rotation,
            faces,
            uncertain,
        };
        let chi = g.euler_characteristic();
        if chi != 0 {
            return Err(Error::Euler {
                v: g.vertices.len(),
                e: g.edges.len(),
                f: g.faces.len(),
            });
        }
        Ok(g)
    }

    pub fn vertices(&self) -> &[DiscId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Contact] {
        &self.edges
    }

    pub fn darts(&self) -> &[Dart] {
        &self.darts
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn uncertain_pairs(&self) -> &[Contact] {
        &self.uncertain
    }

    pub fn degree(&self, v: DiscId) -> usize {
        self.rotation.get(&v).map_or(0, Vec::len)
    }

    /// Darts leaving `v` in counterclockwise order.
    pub fn rotation(&self, v: DiscId) -> &[usize] {
        self.rotation.get(&v).map_or(&[], Vec::as_slice)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64 + self.faces.len() as i64
    }

    /// Corners of a face, unrolled into the plane from its first dart.
    pub fn corners(&self, face: &Face) -> Vec<Corner> {
        let mut at = Offset::ZERO;
        let mut out = Vec::with_capacity(face.len());
        for &d in &face.darts {
            let dart = self.darts[d];
            out.push(Corner {
                disc: dart.from,
                offset: at,
            });
            at = at + dart.offset;
        }
        out
    }
}

fn rotation_system(
    p: &PeriodicPacking,
    vertices: &[DiscId],
    darts: &[Dart],
    max_depth: u32,
) -> Result<BTreeMap<DiscId, Vec<usize>>, Error> {
    let mut dirs = Vec::with_capacity(darts.len());
    let mut angles = Vec::with_capacity(darts.len());
    for d in darts {
        let a = p.center(d.from, Offset::ZERO)?;
        let b = p.center(d.to, d.offset)?;
        let (x, y) = (&b.x - &a.x, &b.y - &a.y);
        angles.push(y.eval_f64(p.bindings()).atan2(x.eval_f64(p.bindings())).rem_euclid(TAU));
        dirs.push((x, y));
    }
    let angle = |i: usize| angles[i];
    let mut ev = Evaluator::new(p.bindings());
    let mut rotation = BTreeMap::new();
    for &v in vertices {
        let mut out: Vec<usize> = (0..darts.len()).filter(|&i| darts[i].from == v).collect();
        out.sort_by(|&i, &j| angle(i).total_cmp(&angle(j)));
        // The float order is a proposal whose turns add up to one full
        // revolution. Each turn between neighbours is then certified to lie
        // on the proposed side of a half turn, which pins the cyclic order
        // without ever deciding a sign that may be exactly zero.
        if out.len() > 2 {
            for k in 0..out.len() {
                let (i, j) = (out[k], out[(k + 1) % out.len()]);
                let step = (angle(j) - angle(i)).rem_euclid(TAU);
                let (x1, y1) = &dirs[i];
                let (x2, y2) = &dirs[j];
                let ok = if (step - PI).abs() < HALF_TURN_SLACK {
                    let dot = ev.certify_sign(&(x1 * x2 + y1 * y2), max_depth)?.sign;
                    dot == Some(Ordering::Less)
                } else {
                    let want = if step < PI { Ordering::Greater } else { Ordering::Less };
                    ev.certify_sign(&(x1 * y2 - y1 * x2), max_depth)?.sign == Some(want)
                };
                if !ok {
                    return Err(Error::RotationAmbiguity(v));
                }
            }
        }
        rotation.insert(v, out);
    }
    Ok(rotation)
}

/// Arrive along a dart, leave along the next dart clockwise at the head.
fn trace_faces(darts: &[Dart], rotation: &BTreeMap<DiscId, Vec<usize>>) -> Vec<Face> {
    let mut pos = vec![0usize; darts.len()];
    for list in rotation.values() {
        for (k, &d) in list.iter().enumerate() {
            pos[d] = k;
        }
    }
    let next = |d: usize| -> usize {
        let back = d ^ 1;
        let list = &rotation[&darts[back].from];
        list[(pos[back] + list.len() - 1) % list.len()]
    };
    let mut used = vec![false; darts.len()];
    let mut faces = Vec::new();
    for start in 0..darts.len() {
        if used[start] {
            continue;
        }
        let mut walk = Vec::new();
        let mut d = start;
        while !used[d] {
            used[d] = true;
            walk.push(d);
            d = next(d);
        }
        faces.push(Face { darts: walk });
    }
    faces
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompactnessVerdict {
    pub compact: Decision,
    /// A face that is not a triangle, present iff `compact` is `No`.
    pub witness: Option<Vec<Corner>>,
    pub face_sizes: Vec<usize>,
}

/// Compact means every face of the torus embedding is a triangle. A
/// non-triangular face next to an unresolved near-contact is inconclusive,
/// since the missing edge could split it.
pub fn check_compact(g: &ContactGraph) -> CompactnessVerdict {
    let mut face_sizes: Vec<usize> = g.faces.iter().map(Face::len).collect();
    face_sizes.sort_unstable();
    let bad = g.faces.iter().find(|f| f.len() != 3);
    match bad {
        None => CompactnessVerdict {
            compact: Decision::Yes,
            witness: None,
            face_sizes,
        },
        Some(_) if !g.uncertain.is_empty() => CompactnessVerdict {
            compact: Decision::Inconclusive,
            witness: None,
            face_sizes,
        },
        Some(f) => CompactnessVerdict {
            compact: Decision::No,
            witness: Some(g.corners(f)),
            face_sizes,
        },
    }
}
