//! Certified predicates on periodic packings: contact graph, compactness,
//! saturation and density ordering.

mod graph;
mod saturation;

pub use graph::{check_compact, CompactnessVerdict, ContactGraph, Corner, Dart, Face};
pub use saturation::{check_saturated, HoleWitness, SaturationVerdict};

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::exactnum::{self, depth_schedule, Evaluator, Interval, LevelError};
use crate::packing::{self, Contact, DiscId, PeriodicPacking};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Packing(#[from] packing::Error),
    #[error("rotation ambiguity at vertex {0}")]
    RotationAmbiguity(DiscId),
    #[error("euler relation fails: V - E + F = {v} - {e} + {f} != 0")]
    Euler { v: usize, e: usize, f: usize },
    #[error("overlap between discs {}", .0)]
    Overlap(Contact),
}

impl From<exactnum::Error> for Error {
    fn from(e: exactnum::Error) -> Self {
        Error::Packing(e.into())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Decision {
    Yes,
    No,
    Inconclusive,
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Decision::Yes => "yes",
            Decision::No => "no",
            Decision::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Order {
    FirstDenser,
    SecondDenser,
    Inconclusive,
}

impl Order {
    pub fn swapped(self) -> Order {
        match self {
            Order::FirstDenser => Order::SecondDenser,
            Order::SecondDenser => Order::FirstDenser,
            Order::Inconclusive => Order::Inconclusive,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Order::FirstDenser => "first denser",
            Order::SecondDenser => "second denser",
            Order::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DensityComparison {
    pub order: Order,
    pub first: Interval,
    pub second: Interval,
    pub depth: u32,
}

/// Refines both densities level by level until their enclosures separate.
/// Both sides run the same schedule, so swapping the arguments swaps the
/// verdict exactly.
pub fn compare_densities(
    p1: &PeriodicPacking,
    p2: &PeriodicPacking,
    max_depth: u32,
) -> Result<DensityComparison, Error> {
    let d1 = p1.density_expr()?;
    let d2 = p2.density_expr()?;
    let mut ev1 = Evaluator::new(p1.bindings());
    let mut ev2 = Evaluator::new(p2.bindings());
    let schedule = depth_schedule(max_depth);
    let last = *schedule.last().expect("nonempty schedule");
    for depth in schedule {
        let level = |ev: &mut Evaluator, e| match ev.enclose(e, depth) {
            Ok(iv) => Ok(Some(iv)),
            Err(LevelError::Hard(err)) => Err(err),
            Err(LevelError::Unresolved(err)) if depth == last => Err(err),
            Err(LevelError::Unresolved(_)) => Ok(None),
        };
        let (Some(a), Some(b)) = (level(&mut ev1, &d1)?, level(&mut ev2, &d2)?) else {
            continue;
        };
        let order = if a.hi() < b.lo() {
            Order::SecondDenser
        } else if b.hi() < a.lo() {
            Order::FirstDenser
        } else {
            Order::Inconclusive
        };
        if order != Order::Inconclusive || depth == last {
            return Ok(DensityComparison {
                order,
                first: a,
                second: b,
                depth,
            });
        }
    }
    unreachable!("schedule always ends at max_depth")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{parse_rational, Expr};
    use crate::packing::fixtures::{hexagonal, square};
    use crate::packing::CheckConfig;

    fn q(s: &str) -> Expr {
        Expr::constant(parse_rational(s).unwrap())
    }

    #[test]
    fn hexagonal_graph_is_compact() {
        let p = hexagonal();
        let g = ContactGraph::build(&p, &CheckConfig::default()).unwrap();
        assert_eq!(g.degree(0), 6);
        assert_eq!((g.vertices().len(), g.edges().len(), g.faces().len()), (1, 3, 2));
        let v = check_compact(&g);
        assert_eq!(v.compact, Decision::Yes);
        assert!(v.witness.is_none());
    }

    #[test]
    fn square_graph_has_a_four_face() {
        let g = ContactGraph::build(&square(Expr::int(1), 2), &CheckConfig::default()).unwrap();
        assert_eq!(g.degree(0), 4);
        let v = check_compact(&g);
        assert_eq!(v.compact, Decision::No);
        assert_eq!(v.witness.unwrap().len(), 4);
    }

    #[test]
    fn faces_use_each_dart_once() {
        for p in [hexagonal(), square(Expr::int(1), 2), hexagonal().with_sheared_basis()] {
            let g = ContactGraph::build(&p, &CheckConfig::default()).unwrap();
            let total: usize = g.faces().iter().map(Face::len).sum();
            assert_eq!(total, 2 * g.edges().len());
            let mut seen: Vec<usize> = g.faces().iter().flat_map(|f| f.darts.clone()).collect();
            seen.sort_unstable();
            assert_eq!(seen, (0..g.darts().len()).collect::<Vec<_>>());
        }
    }

    #[test]
    fn compactness_survives_basis_change() {
        let g = ContactGraph::build(&hexagonal().with_sheared_basis(), &CheckConfig::default()).unwrap();
        assert_eq!(check_compact(&g).compact, Decision::Yes);
    }

    #[test]
    fn hexagonal_saturation_flips_between_probes() {
        let p = hexagonal();
        let cfg = CheckConfig::default();
        let g = ContactGraph::build(&p, &cfg).unwrap();
        let v = check_saturated(&p, &g, &q("0.15"), &cfg).unwrap();
        assert_eq!(v.saturated, Decision::No);
        let w = v.witness.unwrap();
        assert!(w.radius.lo() > &parse_rational("0.1547").unwrap());
        assert_eq!(check_saturated(&p, &g, &q("0.16"), &cfg).unwrap().saturated, Decision::Yes);
        assert_eq!(check_saturated(&p, &g, &Expr::int(1), &cfg).unwrap().saturated, Decision::Yes);
    }

    #[test]
    fn square_hole_takes_a_certified_probe() {
        let p = square(Expr::int(1), 2);
        let cfg = CheckConfig::default();
        let g = ContactGraph::build(&p, &cfg).unwrap();
        // the hole fits sqrt(2) - 1 = 0.41421...
        let v = check_saturated(&p, &g, &q("0.41"), &cfg).unwrap();
        assert_eq!(v.saturated, Decision::No);
        let v = check_saturated(&p, &g, &q("0.42"), &cfg).unwrap();
        assert_eq!(v.saturated, Decision::Inconclusive);
        assert_eq!(v.inconclusive_faces.len(), 1);
    }

    #[test]
    fn compare_square_and_hexagonal() {
        let (s, h) = (square(Expr::int(1), 2), hexagonal());
        let c = compare_densities(&s, &h, 256).unwrap();
        assert_eq!(c.order, Order::SecondDenser);
        assert_eq!(compare_densities(&h, &s, 256).unwrap().order, c.order.swapped());
        assert_eq!(compare_densities(&h, &h, 64).unwrap().order, Order::Inconclusive);
    }

    #[test]
    fn overlapping_packing_has_no_graph() {
        let p = square(q("1.1"), 2);
        assert!(matches!(
            ContactGraph::build(&p, &CheckConfig::default()),
            Err(Error::Overlap(_))
        ));
    }
}
