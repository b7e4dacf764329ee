//! Shared helpers for the integration suites: fixture loading, a catalogue
//! of small finite Möbius groups, random instance builders and independent
//! oracles.
#![allow(dead_code)]

pub mod suites;

use std::path::PathBuf;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::test_runner::{Config, RngSeed};
use serde_json::Value;
use tvlct::cli::schema;
use tvlct::curvepair::{BoundaryCoeff, MarkedCurvePair};
use tvlct::exact::{int, quadratic_roots, rat, IntMatrix, ProjPoint, Rational};
use tvlct::group::{closure, MoebiusElement, MoebiusGroup, DEFAULT_GROUP_CAP};
use tvlct::tvariety::CxOneVariety;

/// Proptest settings shared by the property suites: fixed seed, no
/// persistence files.
pub fn config(cases: u32) -> Config {
    Config { cases, rng_seed: RngSeed::Fixed(0x7e57_5eed), failure_persistence: None, ..Config::default() }
}

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

pub fn fixture_json(name: &str) -> Value {
    let text = std::fs::read_to_string(fixture_path(name)).expect("fixture exists");
    serde_json::from_str(&text).expect("fixture is JSON")
}

pub fn variety(name: &str) -> CxOneVariety {
    schema::parse_variety(&fixture_json(name)).expect("fixture parses")
}

pub fn m(x: [[i64; 2]; 2]) -> MoebiusElement {
    MoebiusElement::from_i64(x).expect("nonsingular")
}

/// Generators of small finite subgroups of PGL(2, Q), all of order <= 6.
pub fn small_groups() -> Vec<(&'static str, Vec<MoebiusElement>)> {
    vec![
        ("trivial", vec![]),
        ("x -> -x", vec![m([[-1, 0], [0, 1]])]),
        ("x -> 1/x", vec![m([[0, 1], [1, 0]])]),
        ("x -> 1/(1-x)", vec![m([[0, 1], [-1, 1]])]),
        ("order 4 rotation", vec![m([[1, 1], [-1, 1]])]),
        ("order 6 rotation", vec![m([[1, 1], [-1, 2]])]),
        ("Klein four", vec![m([[-1, 0], [0, 1]]), m([[0, 1], [1, 0]])]),
        ("S3", vec![m([[0, 1], [-1, 1]]), m([[0, 1], [1, 0]])]),
    ]
}

pub fn group(gens: &[MoebiusElement]) -> MoebiusGroup {
    if gens.is_empty() {
        MoebiusGroup::trivial()
    } else {
        closure(gens, DEFAULT_GROUP_CAP).expect("finite")
    }
}

/// Small rational points used to seed marked orbits.
pub fn candidate_points() -> Vec<ProjPoint> {
    let mut v: Vec<ProjPoint> = [0, 1, -1, 2, -2, 3].iter().map(|&t| ProjPoint::rational(int(t))).collect();
    v.push(ProjPoint::infinity());
    v.push(ProjPoint::rational(rat(1, 2)));
    v
}

/// An invariant pair built from whole orbits of the chosen seed points,
/// keeping at most `max_points` marked points. Coefficients are `k/4`.
pub fn invariant_pair(g: &MoebiusGroup, seeds: &[usize], quarters: &[i64], max_points: usize) -> MarkedCurvePair {
    let pts = candidate_points();
    let mut marked: Vec<(ProjPoint, BoundaryCoeff)> = vec![];
    for (k, &s) in seeds.iter().enumerate() {
        let p = &pts[s % pts.len()];
        if marked.iter().any(|(q, _)| q == p) {
            continue;
        }
        let orbit = naive_orbit(g, p);
        if marked.len() + orbit.len() > max_points {
            continue;
        }
        let c = BoundaryCoeff::Finite(rat(quarters[k % quarters.len()], 4));
        marked.extend(orbit.into_iter().map(|q| (q, c.clone())));
    }
    MarkedCurvePair::new(marked).expect("distinct rational points")
}

/// Orbit by applying every element, without the library's orbit code.
pub fn naive_orbit(g: &MoebiusGroup, p: &ProjPoint) -> Vec<ProjPoint> {
    let mut out: Vec<ProjPoint> = vec![];
    for h in g.elements() {
        let q = h.apply(p);
        if !out.contains(&q) {
            out.push(q);
        }
    }
    out
}

/// Fixed points of a non-identity `[[a, b], [c, d]]` from `c t^2 + (d - a) t - b = 0`.
fn naive_fixed_points(h: &MoebiusElement) -> Vec<ProjPoint> {
    let x = h.matrix();
    let (a, b, c, d) = (&x[0][0], &x[0][1], &x[1][0], &x[1][1]);
    let mut out: Vec<ProjPoint> =
        quadratic_roots(c, &(d - a), &(-b)).unwrap_or_default().into_iter().map(ProjPoint::affine).collect();
    if c.is_zero() {
        out.push(ProjPoint::infinity());
    }
    out
}

/// Threshold by direct concentration: every invariant effective divisor of
/// degree `2 - deg B` is a nonnegative combination of orbit sums, so the
/// worst case puts all mass on one orbit. Candidate orbits are those of the
/// marked points, of every fixed point of every element, and of one point
/// with trivial stabilizer. `None` stands for an unbounded threshold.
pub fn oracle_lct(pair: &MarkedCurvePair, g: &MoebiusGroup) -> Option<Rational> {
    let coeff = |p: &ProjPoint| -> Rational {
        pair.marked()
            .iter()
            .find(|(q, _)| q == p)
            .map(|(_, c)| c.finite().cloned().expect("finite"))
            .unwrap_or_else(Rational::zero)
    };
    let degree: Rational = pair.marked().iter().map(|(_, c)| c.finite().cloned().expect("finite")).sum();
    let room = int(2) - degree;
    if !room.is_positive() {
        return None;
    }
    let mut candidates: Vec<ProjPoint> = pair.points().cloned().collect();
    for h in g.elements().iter().filter(|h| !h.is_identity()) {
        candidates.extend(naive_fixed_points(h));
    }
    // a point whose stabilizer is trivial and that carries no boundary
    let mut t = 5i64;
    loop {
        let p = ProjPoint::rational(rat(t, 7));
        if naive_orbit(g, &p).len() == g.order() && pair.points().all(|q| *q != p) {
            candidates.push(p);
            break;
        }
        t += 1;
    }
    candidates
        .iter()
        .map(|p| Rational::from_integer(naive_orbit(g, p).len().into()) * (Rational::one() - coeff(p)) / &room)
        .min()
}

/// Independent check of a Stiemke certificate against raw integer weight columns.
pub fn check_positive(columns: &[Vec<i64>], lambda: &[Rational]) -> bool {
    if lambda.len() != columns.len() || lambda.iter().any(|l| !l.is_positive()) {
        return false;
    }
    let d = columns.first().map_or(0, |c| c.len());
    (0..d).all(|r| {
        columns.iter().zip(lambda).map(|(c, l)| Rational::from_integer(c[r].into()) * l).sum::<Rational>().is_zero()
    })
}

pub fn check_destabilizer(columns: &[Vec<i64>], v: &[BigInt]) -> bool {
    let pair = |c: &Vec<i64>| -> BigInt { c.iter().zip(v).map(|(x, y)| BigInt::from(*x) * y).sum() };
    columns.iter().all(|c| !pair(c).is_negative()) && columns.iter().any(|c| pair(c).is_positive())
}

pub fn weight_matrix(columns: &[Vec<i64>], d: usize) -> IntMatrix {
    let cols: Vec<Vec<BigInt>> = columns.iter().map(|c| c.iter().map(|&x| BigInt::from(x)).collect()).collect();
    IntMatrix::from_columns(&cols, d).expect("columns of length d")
}
