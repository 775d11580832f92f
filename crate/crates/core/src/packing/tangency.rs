//! Placing a disc by its tangency to two already placed discs.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::{translate, Contact, Disc, DiscId, Error, Offset, PackingParts, PeriodicPacking, Point};
use crate::exactnum::{Evaluator, Expr};

/// Which of the two intersection points to keep: the one with the larger
/// `x` (Right) or `y` (Upper), or the smaller one (Left, Lower).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
    Upper,
    Lower,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
            Side::Upper => "upper",
            Side::Lower => "lower",
        })
    }
}

impl FromStr for Side {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            "upper" => Ok(Side::Upper),
            "lower" => Ok(Side::Lower),
            other => Err(format!("unknown side '{other}'")),
        }
    }
}

/// A disc whose center is fixed by tangency to two anchors. Each anchor is
/// a placed disc, possibly translated by a lattice offset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveRule {
    pub id: DiscId,
    pub radius: String,
    pub anchors: [(DiscId, Offset); 2],
    pub side: Side,
}

/// Solves each rule in order (later rules may anchor on earlier ones), adds
/// the solved discs and their two anchor contacts, and validates the result.
///
/// Centers are closed-form expressions: with `d = B - A`,
/// `t = (R1^2 - R2^2 + |d|^2) / (2 |d|^2)` and `h = sqrt(R1^2/|d|^2 - t^2)`,
/// the candidates are `A + t d ± h (-d.y, d.x)`.
pub fn complete_tangencies(
    mut parts: PackingParts,
    rules: &[SolveRule],
    max_depth: u32,
) -> Result<PeriodicPacking, Error> {
    let lattice = parts.lattice.clone().ok_or(Error::DegenerateLattice)?;
    for rule in rules {
        let radius_of = |parts: &PackingParts, name: &str| -> Result<Expr, Error> {
            parts
                .radii
                .iter()
                .find(|r| r.name == name)
                .map(|r| r.value.clone())
                .ok_or_else(|| Error::UnknownRadius(name.to_string()))
        };
        let anchor = |parts: &PackingParts, (id, o): (DiscId, Offset)| -> Result<(Point, Expr), Error> {
            let d = parts
                .discs
                .iter()
                .find(|d| d.id == id)
                .ok_or(Error::UnknownDisc(id))?;
            Ok((translate(&d.center, &lattice, o), radius_of(parts, &d.radius)?))
        };
        if parts.discs.iter().any(|d| d.id == rule.id) {
            return Err(Error::DuplicateDisc(rule.id));
        }
        let r = radius_of(&parts, &rule.radius)?;
        let (a, ra) = anchor(&parts, rule.anchors[0])?;
        let (b, rb) = anchor(&parts, rule.anchors[1])?;
        let r1 = &ra + &r;
        let r2 = &rb + &r;
        let dx = &b.x - &a.x;
        let dy = &b.y - &a.y;
        let d2 = dx.square() + dy.square();
        let t = (r1.square() - r2.square() + &d2) / (Expr::int(2) * &d2);
        let disc = r1.square() / &d2 - t.square();

        let mut ev = Evaluator::new(&parts.bindings);
        match ev.certify_sign(&disc, max_depth) {
            Ok(c) => match c.sign {
                Some(Ordering::Less) => return Err(Error::InconsistentTangency(rule.id)),
                Some(_) => {}
                None => return Err(Error::IndeterminateTangency(rule.id)),
            },
            // coincident anchors make |d|^2 zero
            Err(crate::exactnum::Error::DivisionByZero) => {
                return Err(Error::InconsistentTangency(rule.id))
            }
            Err(e) => return Err(e.into()),
        }
        // the + candidate exceeds the - one by 2h(-dy, dx)
        let axis = match rule.side {
            Side::Upper | Side::Lower => dx.clone(),
            Side::Left | Side::Right => -&dy,
        };
        let plus_larger = match ev.certify_sign(&axis, max_depth)?.sign {
            Some(Ordering::Greater) => true,
            Some(Ordering::Less) => false,
            _ => return Err(Error::AmbiguousSide(rule.id)),
        };
        let want_larger = matches!(rule.side, Side::Upper | Side::Right);
        let h = disc.sqrt();
        let hx = -(&h * &dy);
        let hy = &h * &dx;
        let (hx, hy) = if plus_larger == want_larger {
            (hx, hy)
        } else {
            (-hx, -hy)
        };
        let center = Point::new(&a.x + &t * &dx + hx, &a.y + &t * &dy + hy);
        parts.discs.push(Disc {
            id: rule.id,
            center,
            radius: rule.radius.clone(),
        });
        for (id, o) in rule.anchors {
            parts.contacts.push(Contact::new(rule.id, id, o));
        }
    }
    PeriodicPacking::new(parts, max_depth)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{parse_rational, Bindings, Rational};
    use crate::packing::{Lattice, RadiusClass};

    fn q(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    fn parts(x1: i64, x2: i64) -> PackingParts {
        PackingParts {
            lattice: Some(Lattice {
                t1: Point::new(Expr::int(50), Expr::int(0)),
                t2: Point::new(Expr::int(0), Expr::int(50)),
            }),
            radii: vec![RadiusClass {
                name: "R".into(),
                value: Expr::int(1),
            }],
            discs: vec![
                Disc {
                    id: 0,
                    center: Point::new(Expr::int(x1), Expr::int(0)),
                    radius: "R".into(),
                },
                Disc {
                    id: 1,
                    center: Point::new(Expr::int(x2), Expr::int(0)),
                    radius: "R".into(),
                },
            ],
            bindings: Bindings::new(),
            contacts: vec![],
        }
    }

    fn rule(side: Side) -> SolveRule {
        SolveRule {
            id: 2,
            radius: "R".into(),
            anchors: [(0, Offset::ZERO), (1, Offset::ZERO)],
            side,
        }
    }

    #[test]
    fn upper_disc_on_two_unit_discs() {
        let p = complete_tangencies(parts(-1, 1), &[rule(Side::Upper)], 256).unwrap();
        let c = &p.disc(2).unwrap().center;
        let w = q("1e-30");
        let b = p.bindings().clone();
        let x = crate::exactnum::eval(&c.x, &b, &w, 256).unwrap().interval;
        let y = crate::exactnum::eval(&c.y, &b, &w, 256).unwrap().interval;
        assert!(x.contains(&q("0")));
        // sqrt 3 = 1.7320508075688772935274463...
        assert!(y.is_subset_of(&crate::exactnum::Interval::new(
            q("1.73205080756887729352"),
            q("1.73205080756887729353")
        )));
        for a in [0, 1] {
            let g = p.gap(2, a, Offset::ZERO, &q("1e-10"), 256).unwrap();
            assert!(g.contains_zero() && g.width() <= q("1e-10"));
        }
        assert_eq!(p.contacts().len(), 2);
    }

    #[test]
    fn lower_is_mirror() {
        let p = complete_tangencies(parts(-1, 1), &[rule(Side::Lower)], 256).unwrap();
        let y = p.disc(2).unwrap().center.y.eval_f64(p.bindings());
        assert!((y + 3f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn far_anchors_are_inconsistent() {
        let err = complete_tangencies(parts(0, 10), &[rule(Side::Upper)], 256).unwrap_err();
        assert_eq!(err, Error::InconsistentTangency(2));
    }

    #[test]
    fn horizontal_axis_has_no_left_right() {
        let err = complete_tangencies(parts(-1, 1), &[rule(Side::Left)], 256).unwrap_err();
        assert_eq!(err, Error::AmbiguousSide(2));
    }

    #[test]
    fn side_round_trips() {
        for s in [Side::Left, Side::Right, Side::Upper, Side::Lower] {
            assert_eq!(s.to_string().parse::<Side>().unwrap(), s);
        }
    }
}
