//! Log pairs `(P^1, B)` and their equivariant global log canonical thresholds.
//!
//! On a curve a pair is log canonical iff every coefficient is at most 1, and
//! among invariant effective divisors of a given degree the largest
//! coefficient at a point `P` comes from spreading all the mass evenly over
//! the orbit of `P`. The supremum over divisors therefore reduces to a
//! minimum over orbit classes: the orbits meeting the boundary, the
//! exceptional orbits of the group, and one generic free orbit.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{format_rational, Field, ProjPoint, Rational};
use crate::group::{exceptional_orbits, generic_point, orbit_of, MoebiusElement, MoebiusGroup, Orbit};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BoundaryCoeff {
    Finite(Rational),
    NegInfinity,
}

impl BoundaryCoeff {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            BoundaryCoeff::Finite(r) => Some(r),
            BoundaryCoeff::NegInfinity => None,
        }
    }

    pub fn zero() -> Self {
        BoundaryCoeff::Finite(Rational::zero())
    }
}

impl fmt::Display for BoundaryCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundaryCoeff::Finite(r) => write!(f, "{}", format_rational(r)),
            BoundaryCoeff::NegInfinity => write!(f, "-inf"),
        }
    }
}

/// The projective line with finitely many marked points and boundary coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MarkedCurvePair {
    marked: Vec<(ProjPoint, BoundaryCoeff)>,
}

impl MarkedCurvePair {
    pub fn new(marked: Vec<(ProjPoint, BoundaryCoeff)>) -> Result<Self> {
        let mut field = Field::Rational;
        for (i, (p, _)) in marked.iter().enumerate() {
            field = field.join(p.field())?;
            if marked[..i].iter().any(|(q, _)| q == p) {
                return Err(Error::Input(format!("point {p} is marked twice")));
            }
        }
        Ok(MarkedCurvePair { marked })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn marked(&self) -> &[(ProjPoint, BoundaryCoeff)] {
        &self.marked
    }

    pub fn points(&self) -> impl Iterator<Item = &ProjPoint> {
        self.marked.iter().map(|(p, _)| p)
    }

    /// Coefficient at `p`; unmarked points carry 0.
    pub fn coefficient_at(&self, p: &ProjPoint) -> BoundaryCoeff {
        self.marked.iter().find(|(q, _)| q == p).map_or_else(BoundaryCoeff::zero, |(_, c)| c.clone())
    }

    /// Image of the pair under `h`.
    pub fn transform(&self, h: &MoebiusElement) -> MarkedCurvePair {
        MarkedCurvePair { marked: self.marked.iter().map(|(p, c)| (h.apply(p), c.clone())).collect() }
    }

    fn check_invariant(&self, group: &MoebiusGroup) -> Result<()> {
        for (p, c) in &self.marked {
            for g in group.elements() {
                let q = g.apply(p);
                let image = self.coefficient_at(&q);
                if image != *c {
                    return Err(Error::NotInvariant(format!(
                        "{g} maps {p} (coefficient {c}) to {q} (coefficient {image})"
                    )));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for MarkedCurvePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.marked.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self.marked.iter().map(|(p, c)| format!("{c}*{p}")).collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// Sum of the finite coefficients, with the presence of `-inf` entries reported separately.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteDegree {
    pub degree: Rational,
    pub has_neg_infinity: bool,
}

pub fn finite_degree(pair: &MarkedCurvePair) -> FiniteDegree {
    FiniteDegree {
        degree: pair.marked.iter().filter_map(|(_, c)| c.finite()).sum(),
        has_neg_infinity: pair.marked.iter().any(|(_, c)| *c == BoundaryCoeff::NegInfinity),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrbitClassKind {
    /// orbit of a marked point
    Marked,
    /// orbit with nontrivial stabilizer, disjoint from the marked points
    Exceptional,
    /// a free orbit away from everything else
    Generic,
}

impl fmt::Display for OrbitClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrbitClassKind::Marked => "marked",
            OrbitClassKind::Exceptional => "exceptional",
            OrbitClassKind::Generic => "generic",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrbitClass {
    pub kind: OrbitClassKind,
    pub orbit: Orbit,
    pub coefficient: BoundaryCoeff,
}

impl OrbitClass {
    /// The coefficient as a lower bound for an effective divisor: `-inf`
    /// and negative values are replaced by 0.
    pub fn effective_floor(&self) -> Rational {
        match &self.coefficient {
            BoundaryCoeff::Finite(b) if b.is_positive() => b.clone(),
            _ => Rational::zero(),
        }
    }

    /// `|O| (1 - b_O) / (2 - deg B)`: the largest `lambda` keeping
    /// `B + lambda D` log canonical when `D` sits evenly on this orbit.
    pub fn lct_minimand(&self, degree: &Rational) -> Option<Rational> {
        let b = self.coefficient.finite()?;
        let room = Rational::from_integer(2.into()) - degree;
        if !room.is_positive() {
            return None;
        }
        Some(Rational::from_integer(self.orbit.len().into()) * (Rational::one() - b) / room)
    }
}

impl fmt::Display for OrbitClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} orbit {} with coefficient {}", self.kind, self.orbit, self.coefficient)
    }
}

/// Marked orbits (in order of first marked point), then exceptional orbits
/// disjoint from the marked set, then one generic orbit.
pub fn orbit_classes(pair: &MarkedCurvePair, group: &MoebiusGroup) -> Result<Vec<OrbitClass>> {
    pair.check_invariant(group)?;
    let mut classes: Vec<OrbitClass> = Vec::new();
    for (p, c) in &pair.marked {
        if classes.iter().any(|k| k.orbit.contains(p)) {
            continue;
        }
        classes.push(OrbitClass { kind: OrbitClassKind::Marked, orbit: orbit_of(group, p), coefficient: c.clone() });
    }
    let exceptional = exceptional_orbits(group);
    for o in &exceptional {
        if pair.points().any(|p| o.contains(p)) {
            continue;
        }
        classes.push(OrbitClass {
            kind: OrbitClassKind::Exceptional,
            orbit: o.clone(),
            coefficient: BoundaryCoeff::zero(),
        });
    }
    let mut avoid: Vec<ProjPoint> = pair.points().cloned().collect();
    avoid.extend(exceptional.iter().flat_map(|o| o.points.iter().cloned()));
    classes.push(OrbitClass {
        kind: OrbitClassKind::Generic,
        orbit: orbit_of(group, &generic_point(group, &avoid)),
        coefficient: BoundaryCoeff::zero(),
    });
    Ok(classes)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LctValue {
    Finite(Rational),
    /// no invariant divisor constrains the threshold (`deg B >= 2`)
    Infinite,
}

impl LctValue {
    pub fn at_least(&self, x: &Rational) -> bool {
        match self {
            LctValue::Finite(v) => v >= x,
            LctValue::Infinite => true,
        }
    }

    pub fn greater_than(&self, x: &Rational) -> bool {
        match self {
            LctValue::Finite(v) => v > x,
            LctValue::Infinite => true,
        }
    }

    /// `min(1, self)`
    pub fn capped_at_one(&self) -> Rational {
        match self {
            LctValue::Finite(v) if *v < Rational::one() => v.clone(),
            _ => Rational::one(),
        }
    }
}

impl fmt::Display for LctValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LctValue::Finite(v) => write!(f, "{}", format_rational(v)),
            LctValue::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LctResult {
    pub value: LctValue,
    /// every orbit class attaining the minimum, in class order
    pub minimizers: Vec<OrbitClass>,
    pub degree: Rational,
}

impl LctResult {
    pub fn witness(&self) -> Option<&OrbitClass> {
        self.minimizers.first()
    }
}

/// Equivariant global log canonical threshold of `(P^1, B)`.
pub fn lct_g(pair: &MarkedCurvePair, group: &MoebiusGroup) -> Result<LctResult> {
    for (p, c) in &pair.marked {
        match c {
            BoundaryCoeff::Finite(b) if !b.is_negative() && *b <= Rational::one() => {}
            _ => return Err(Error::CoefficientOutOfRange(format!("coefficient {c} at {p} must lie in [0, 1]"))),
        }
    }
    let classes = orbit_classes(pair, group)?;
    let degree = finite_degree(pair).degree;
    if degree >= Rational::from_integer(2.into()) {
        return Ok(LctResult { value: LctValue::Infinite, minimizers: vec![], degree });
    }
    let values: Vec<Rational> =
        classes.iter().map(|c| c.lct_minimand(&degree).expect("finite coefficient, degree < 2")).collect();
    let min = values.iter().min().expect("the generic class is always present").clone();
    let minimizers = classes.into_iter().zip(&values).filter(|(_, v)| **v == min).map(|(c, _)| c).collect();
    Ok(LctResult { value: LctValue::Finite(min), minimizers, degree })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValuableVerdict {
    pub valuable: bool,
    /// true when no invariant `D ~ -K` with `D >= B` exists at all
    pub vacuous: bool,
    /// sum of the nonnegative finite coefficients
    pub sigma: Rational,
    /// first orbit class where an invariant `D >= B` exceeds coefficient 1,
    /// with that maximal coefficient
    pub violation: Option<(OrbitClass, Rational)>,
}

impl OrbitClass {
    /// Largest coefficient an invariant effective `D ~ -K`, `D >= B`, can have here.
    pub fn max_concentration(&self, sigma: &Rational) -> Rational {
        let spare = Rational::from_integer(2.into()) - sigma;
        self.effective_floor() + spare / Rational::from_integer(self.orbit.len().into())
    }
}

/// Whether every invariant `D ~ -K_{P^1}` with `D >= B` gives a log canonical pair.
pub fn is_valuable(pair: &MarkedCurvePair, group: &MoebiusGroup) -> Result<ValuableVerdict> {
    for (p, c) in &pair.marked {
        if let BoundaryCoeff::Finite(b) = c {
            if *b > Rational::one() {
                return Err(Error::CoefficientOutOfRange(format!("coefficient {c} at {p} exceeds 1")));
            }
        }
    }
    let classes = orbit_classes(pair, group)?;
    let sigma: Rational = pair.marked.iter().filter_map(|(_, c)| c.finite()).filter(|b| b.is_positive()).sum();
    if sigma > Rational::from_integer(2.into()) {
        return Ok(ValuableVerdict { valuable: true, vacuous: true, sigma, violation: None });
    }
    let violation = classes.into_iter().find_map(|c| {
        let top = c.max_concentration(&sigma);
        (top > Rational::one()).then_some((c, top))
    });
    Ok(ValuableVerdict { valuable: violation.is_none(), vacuous: false, sigma, violation })
}
