//! Property suites shared by the acceptance run and the property tests. Each
//! returns a one-line summary or the first counterexample.

#![allow(dead_code)]

use std::collections::BTreeMap;

use packcert::exactnum::{
    eval, isolate_roots, AlgebraicNumber, Bindings, Expr, IntegerPolynomial, Interval, Rational,
};
use packcert::packing::{
    descartes_inner, CheckConfig, Contact, Disc, Lattice, Offset, PackingParts, PeriodicPacking,
    Point, RadiusClass,
};
use packcert::shell::{load_scene, parse_scene};
use packcert::verifier::{compare_densities, ContactGraph};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub const SEED: u64 = 0x5eed_cafe;

pub const EXPRESSIONS: usize = 1000;
pub const POLYNOMIALS: usize = 200;
pub const MAX_DEGREE: usize = 6;
pub const SCENES: usize = 50;
pub const TRIPLES: usize = 100;
pub const COMPARISONS: usize = 50;

/// Enclosure width requested in the soundness and invariance suites.
pub const WIDTH: &str = "1e-20";
/// Enough depth for values up to about 2^100 at width 1e-20.
pub const SOUNDNESS_DEPTH: u32 = 256;
/// Relative slack for the f64 Descartes oracle.
pub const F64_REL_TOL: f64 = 1e-12;
/// Depth cap for the random comparisons.
pub const COMPARE_DEPTH: u32 = 96;

pub fn q(s: &str) -> Rational {
    packcert::exactnum::parse_rational(s).unwrap()
}

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn small_rational(rng: &mut StdRng) -> Rational {
    r(rng.gen_range(-40..=40), rng.gen_range(1..=12))
}

fn random_tree(rng: &mut StdRng, depth: u32, vars: &[&str]) -> Expr {
    if depth == 0 || rng.gen_bool(0.25) {
        return if rng.gen_bool(0.5) {
            Expr::var(vars[rng.gen_range(0..vars.len())])
        } else {
            Expr::constant(small_rational(rng))
        };
    }
    let a = random_tree(rng, depth - 1, vars);
    let b = random_tree(rng, depth - 1, vars);
    match rng.gen_range(0..5) {
        0 => a + b,
        1 => a - b,
        2 => a * b,
        3 => a / b,
        _ => -a,
    }
}

/// Random sqrt-free trees over rational bindings: the certified enclosure
/// must hold the exact rational value and meet the requested width.
pub fn interval_soundness() -> Result<String, String> {
    let mut rng = StdRng::seed_from_u64(SEED);
    let vars = ["x", "y", "z"];
    let width = q(WIDTH);
    let mut skipped = 0;
    for case in 0..EXPRESSIONS {
        let values: BTreeMap<String, Rational> =
            vars.iter().map(|v| (v.to_string(), small_rational(&mut rng))).collect();
        let bindings: Bindings = values
            .iter()
            .map(|(k, v)| (k.clone(), AlgebraicNumber::rational(k.clone(), v.clone())))
            .collect();
        let e = random_tree(&mut rng, 5, &vars);
        let exact = e.eval_rational(&values);
        let got = eval(&e, &bindings, &width, SOUNDNESS_DEPTH);
        match (exact, got) {
            (Some(x), Ok(ev)) => {
                if !ev.interval.contains(&x) {
                    return Err(format!("case {case}: {e} = {x} not in {}", ev.interval));
                }
                if !ev.converged || ev.interval.width() > width {
                    return Err(format!("case {case}: {e} enclosed only to {}", ev.interval));
                }
            }
            // a zero denominator must be reported, not enclosed
            (None, Err(_)) => skipped += 1,
            (None, Ok(ev)) => return Err(format!("case {case}: division by zero enclosed as {}", ev.interval)),
            (Some(x), Err(err)) => return Err(format!("case {case}: {x} failed: {err}")),
        }
    }
    Ok(format!("{EXPRESSIONS} trees, {skipped} with a zero denominator"))
}

/// Polynomials built from known rational roots on a grid of spacing 1/8
/// (some repeated) times quadratics with no real root. The isolator must
/// find each distinct root exactly once; a sign scan on the offset half-grid
/// must see one change per root of odd multiplicity.
pub fn isolation_vs_grid_scan() -> Result<String, String> {
    let mut rng = StdRng::seed_from_u64(SEED ^ 1);
    let bracket = Interval::new(r(-5, 1), r(5, 1));
    let mut total_roots = 0;
    for case in 0..POLYNOMIALS {
        let mut coeffs = vec![num_bigint::BigInt::from(1)];
        // root -> multiplicity
        let mut roots: BTreeMap<Rational, usize> = BTreeMap::new();
        let mut degree = 0;
        let target = rng.gen_range(1..=MAX_DEGREE);
        while degree < target {
            let fits_quadratic = degree + 2 <= target;
            if fits_quadratic && rng.gen_bool(0.2) {
                // x^2 + b x + c with b^2 < 4c
                let b: i64 = rng.gen_range(-3..=3);
                let c: i64 = b * b / 4 + rng.gen_range(1..=5);
                coeffs = mul(&coeffs, &[c, b, 1]);
                degree += 2;
                continue;
            }
            let num: i64 = rng.gen_range(-32..=32);
            let root = r(num, 8);
            let mult = if fits_quadratic && rng.gen_bool(0.2) { 2 } else { 1 };
            for _ in 0..mult {
                coeffs = mul(&coeffs, &[-num, 8]);
            }
            degree += mult;
            *roots.entry(root).or_default() += mult;
        }
        let p = IntegerPolynomial::new(coeffs).map_err(|e| e.to_string())?;
        let found = isolate_roots(&p, &bracket).map_err(|e| format!("case {case}: {e}"))?;
        if found.len() != roots.len() {
            return Err(format!("case {case}: [{p}] has {} roots, isolated {}", roots.len(), found.len()));
        }
        for x in roots.keys() {
            let hits = found.iter().filter(|a| a.interval().contains(x)).count();
            if hits != 1 {
                return Err(format!("case {case}: root {x} of [{p}] in {hits} intervals"));
            }
        }
        // scan: grid points (k + 1/2) / 16 never hit a root, and consecutive
        // roots are at least 1/8 apart
        let mut changes = 0;
        let mut prev = None;
        for k in -81..81 {
            let x = r(2 * k + 1, 32);
            let s = p.sign_at(&x);
            if prev.is_some_and(|p| p != s) {
                changes += 1;
            }
            prev = Some(s);
        }
        let odd = roots.values().filter(|&&m| m % 2 == 1).count();
        if changes != odd {
            return Err(format!("case {case}: [{p}] scan saw {changes} sign changes, expected {odd}"));
        }
        total_roots += roots.len();
    }
    Ok(format!("{POLYNOMIALS} polynomials, {total_roots} roots"))
}

fn mul(a: &[num_bigint::BigInt], b: &[i64]) -> Vec<num_bigint::BigInt> {
    let mut out = vec![num_bigint::BigInt::from(0); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Random lattice with one to three discs. Radii mix rationals, a square
/// root and an algebraic binding; no overlap check is involved.
pub fn random_packing(rng: &mut StdRng) -> PeriodicPacking {
    let (a, b, c, d) = loop {
        let v: [i64; 4] = [rng.gen_range(1..=9), rng.gen_range(-4..=4), rng.gen_range(-4..=4), rng.gen_range(1..=9)];
        if v[0] * v[3] - v[1] * v[2] != 0 {
            break (v[0], v[1], v[2], v[3]);
        }
    };
    let lattice = Lattice {
        t1: Point::new(Expr::int(a), Expr::int(b)),
        t2: Point::new(Expr::int(c), Expr::int(d)),
    };
    let root = IntegerPolynomial::from_i64s(&[-2, 0, 3]).unwrap();
    let root = isolate_roots(&root, &Interval::new(r(0, 1), r(1, 1))).unwrap().remove(0).with_name("t");
    let radii = vec![
        RadiusClass { name: "a".into(), value: Expr::ratio(rng.gen_range(1..=5), 10) },
        RadiusClass { name: "b".into(), value: Expr::int(2).sqrt() / Expr::int(rng.gen_range(5..=9)) },
        RadiusClass { name: "c".into(), value: Expr::var("t") / Expr::int(3) },
    ];
    let names = ["a", "b", "c"];
    let discs = (0..rng.gen_range(1..=3))
        .map(|id| Disc {
            id,
            center: Point::new(Expr::ratio(rng.gen_range(0..=8), 4), Expr::ratio(rng.gen_range(0..=8), 4)),
            radius: names[rng.gen_range(0..3)].into(),
        })
        .collect();
    PeriodicPacking::new(
        PackingParts {
            lattice: Some(lattice),
            radii,
            discs,
            bindings: Bindings::from([("t".to_string(), root)]),
            contacts: Vec::new(),
        },
        256,
    )
    .unwrap()
}

/// Density must not move under scaling or a change of lattice basis.
pub fn density_invariance() -> Result<String, String> {
    let mut rng = StdRng::seed_from_u64(SEED ^ 2);
    let width = q(WIDTH);
    for case in 0..SCENES {
        let p = random_packing(&mut rng);
        let t = r(rng.gen_range(1..=30), rng.gen_range(1..=7));
        let base = p.density(&width, 256).map_err(|e| e.to_string())?.density;
        for (label, other) in [("scaled", p.scaled(&t)), ("sheared", p.with_sheared_basis())] {
            let d = other.density(&width, 256).map_err(|e| e.to_string())?.density;
            if !d.intersects(&base) {
                return Err(format!("case {case} {label}: {d} vs {base}"));
            }
        }
    }
    Ok(format!("{SCENES} packings, scaled and sheared"))
}

/// `(k1 + k2 + k3 + k4)^2 = 2 (k1^2 + k2^2 + k3^2 + k4^2)` for the inner
/// circle, plus agreement with the f64 closed form.
pub fn descartes_identity() -> Result<String, String> {
    let mut rng = StdRng::seed_from_u64(SEED ^ 3);
    let width = q("1e-30");
    let tol = q("1e-20");
    for case in 0..TRIPLES {
        let rs: Vec<Rational> = (0..3).map(|_| r(rng.gen_range(1..=1000), rng.gen_range(10..=100))).collect();
        let ivs: Vec<Interval> = rs.iter().cloned().map(Interval::point).collect();
        let r4 = descartes_inner(&ivs[0], &ivs[1], &ivs[2], &width).map_err(|e| e.to_string())?;
        let one = Interval::from_int(1);
        let k: Vec<Interval> = ivs
            .iter()
            .chain(std::iter::once(&r4))
            .map(|x| one.checked_div(x).unwrap())
            .collect();
        let sum = &(&(&k[0] + &k[1]) + &k[2]) + &k[3];
        let squares = &(&(&k[0].square() + &k[1].square()) + &k[2].square()) + &k[3].square();
        let residual = &sum.square() - &(&Interval::from_int(2) * &squares);
        let scale = &squares + &one;
        let bound = residual.abs().checked_div(&scale).unwrap();
        if !residual.contains_zero() || bound.hi() > &tol {
            return Err(format!("case {case}: radii {rs:?}, residual {residual}"));
        }
        let kf: Vec<f64> = ivs.iter().map(|x| 1.0 / x.midpoint_f64()).collect();
        let k4 = kf[0] + kf[1] + kf[2] + 2.0 * (kf[0] * kf[1] + kf[1] * kf[2] + kf[2] * kf[0]).sqrt();
        let oracle = 1.0 / k4;
        if (r4.midpoint_f64() - oracle).abs() > F64_REL_TOL * oracle {
            return Err(format!("case {case}: {} vs f64 {oracle}", r4.midpoint_f64()));
        }
    }
    Ok(format!("{TRIPLES} triples"))
}

/// Swapping the arguments swaps the verdict.
pub fn compare_antisymmetry() -> Result<String, String> {
    let mut rng = StdRng::seed_from_u64(SEED ^ 4);
    let mut decided = 0;
    for case in 0..COMPARISONS {
        let a = random_packing(&mut rng);
        let b = if rng.gen_bool(0.2) { a.with_sheared_basis() } else { random_packing(&mut rng) };
        let ab = compare_densities(&a, &b, COMPARE_DEPTH).map_err(|e| e.to_string())?;
        let ba = compare_densities(&b, &a, COMPARE_DEPTH).map_err(|e| e.to_string())?;
        if ab.order.swapped() != ba.order {
            return Err(format!("case {case}: {:?} then {:?}", ab.order, ba.order));
        }
        if ab.order != packcert::verifier::Order::Inconclusive {
            decided += 1;
        }
    }
    Ok(format!("{COMPARISONS} pairs, {decided} decided"))
}

fn square_packing(radius: Rational) -> PeriodicPacking {
    let side = &radius * r(2, 1);
    let text = format!(
        "radius one rational {radius}\nlattice {side} 0 ; 0 {side}\ndisc 0 0 0 one\ncontact 0 0 1 0\ncontact 0 0 0 1\n"
    );
    parse_scene(&text).unwrap().to_packing(256).unwrap()
}

/// Every dart lies on exactly one traced face, and `V - E + F = 0`.
pub fn face_conservation() -> Result<String, String> {
    let mut rng = StdRng::seed_from_u64(SEED ^ 5);
    let mut packings = Vec::new();
    for name in ["hexagonal", "square", "fig3", "case110"] {
        let (_, sc) = load_scene(&format!("scenes/{name}.scene"))?;
        let p = sc.to_packing(256).map_err(|e| e.to_string())?;
        packings.push((name.to_string(), p));
    }
    for k in 0..6 {
        let t = r(rng.gen_range(1..=20), rng.gen_range(1..=9));
        let (name, base) = packings[k % packings.len()].clone();
        let mut p = base.scaled(&t);
        for _ in 0..rng.gen_range(1..=2) {
            p = p.with_sheared_basis();
        }
        packings.push((format!("{name} x{t} sheared"), p));
        packings.push((format!("square {t}"), square_packing(t)));
    }
    let mut faces = 0;
    for (name, p) in &packings {
        let g = ContactGraph::build(p, &CheckConfig::default()).map_err(|e| format!("{name}: {e}"))?;
        let mut seen: Vec<usize> = g.faces().iter().flat_map(|f| f.darts.iter().copied()).collect();
        seen.sort_unstable();
        if seen != (0..g.darts().len()).collect::<Vec<_>>() || g.darts().len() != 2 * g.edges().len() {
            return Err(format!("{name}: darts not covered exactly once"));
        }
        if g.euler_characteristic() != 0 {
            return Err(format!("{name}: euler characteristic {}", g.euler_characteristic()));
        }
        faces += g.faces().len();
    }
    Ok(format!("{} graphs, {faces} faces", packings.len()))
}

pub fn contact(a: u32, b: u32, m: i64, n: i64) -> Contact {
    Contact::new(a, b, Offset::new(m, n))
}
