use std::collections::{HashSet, VecDeque};
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{format_rational, int, quadratic_roots, ProjPoint, Rational};

pub const DEFAULT_GROUP_CAP: usize = 1000;

/// A projective transformation `(x : y) -> (a x + b y : c x + d y)` with
/// rational entries, stored with its first nonzero entry scaled to 1 so that
/// proportional matrices compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MoebiusElement {
    m: [[Rational; 2]; 2],
}

impl MoebiusElement {
    pub fn new(m: [[Rational; 2]; 2]) -> Result<Self> {
        let det = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0];
        if det.is_zero() {
            return Err(Error::Input("Möbius matrix is singular".into()));
        }
        let lead = m.iter().flatten().find(|x| !x.is_zero()).cloned().expect("nonzero");
        let m = m.map(|row| row.map(|x| x / &lead));
        Ok(MoebiusElement { m })
    }

    pub fn from_i64(m: [[i64; 2]; 2]) -> Result<Self> {
        Self::new(m.map(|r| r.map(int)))
    }

    pub fn identity() -> Self {
        Self::from_i64([[1, 0], [0, 1]]).expect("invertible")
    }

    pub fn matrix(&self) -> &[[Rational; 2]; 2] {
        &self.m
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &MoebiusElement) -> MoebiusElement {
        let (a, b) = (&self.m, &other.m);
        let e = |i: usize, j: usize| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j];
        Self::new([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]).expect("product of invertibles")
    }

    pub fn inverse(&self) -> MoebiusElement {
        let m = &self.m;
        Self::new([[m[1][1].clone(), -&m[0][1]], [-&m[1][0], m[0][0].clone()]])
            .expect("adjugate of an invertible matrix")
    }

    pub fn apply(&self, p: &ProjPoint) -> ProjPoint {
        p.transform(&self.m).expect("invertible matrices map points to points")
    }

    /// Projective order, or `None` if it exceeds `cap`.
    pub fn order(&self, cap: usize) -> Option<usize> {
        let mut power = self.clone();
        for k in 1..=cap {
            if power.is_identity() {
                return Some(k);
            }
            power = power.compose(self);
        }
        None
    }

    /// Conjugate `h ∘ self ∘ h^-1`.
    pub fn conjugate_by(&self, h: &MoebiusElement) -> MoebiusElement {
        h.compose(self).compose(&h.inverse())
    }
}

impl fmt::Display for MoebiusElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = |i: usize, j: usize| format_rational(&self.m[i][j]);
        write!(f, "[[{}, {}], [{}, {}]]", e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }
}

/// A finite group of Möbius transformations, stored as its full element list
/// (identity first, then breadth-first in the generators).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoebiusGroup {
    elements: Vec<MoebiusElement>,
    generators: Vec<MoebiusElement>,
}

impl MoebiusGroup {
    pub fn trivial() -> Self {
        MoebiusGroup { elements: vec![MoebiusElement::identity()], generators: vec![] }
    }

    pub fn elements(&self) -> &[MoebiusElement] {
        &self.elements
    }

    pub fn generators(&self) -> &[MoebiusElement] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: &MoebiusElement) -> bool {
        self.elements.contains(g)
    }

    pub fn non_identity(&self) -> impl Iterator<Item = &MoebiusElement> {
        self.elements.iter().filter(|g| !g.is_identity())
    }

    /// `h G h^-1`.
    pub fn conjugate_by(&self, h: &MoebiusElement) -> MoebiusGroup {
        MoebiusGroup {
            elements: self.elements.iter().map(|g| g.conjugate_by(h)).collect(),
            generators: self.generators.iter().map(|g| g.conjugate_by(h)).collect(),
        }
    }
}

/// Breadth-first closure of the generators under composition.
pub fn closure(generators: &[MoebiusElement], cap: usize) -> Result<MoebiusGroup> {
    let id = MoebiusElement::identity();
    let mut seen: HashSet<MoebiusElement> = HashSet::from([id.clone()]);
    let mut elements = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = g.compose(&x);
            if seen.insert(y.clone()) {
                if elements.len() == cap {
                    return Err(Error::NotFiniteWithinCap(cap));
                }
                elements.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    // a finite monoid of invertibles is a group, so inverses are already present
    Ok(MoebiusGroup { elements, generators: generators.to_vec() })
}

/// Isomorphism type of a finite subgroup of PGL(2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupKind {
    Trivial,
    Cyclic(usize),
    Dihedral(usize),
    Tetrahedral,
    Octahedral,
    Icosahedral,
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::Trivial => write!(f, "trivial"),
            GroupKind::Cyclic(n) => write!(f, "cyclic({n})"),
            GroupKind::Dihedral(n) => write!(f, "dihedral({n})"),
            GroupKind::Tetrahedral => write!(f, "tetrahedral"),
            GroupKind::Octahedral => write!(f, "octahedral"),
            GroupKind::Icosahedral => write!(f, "icosahedral"),
        }
    }
}

pub fn classify(group: &MoebiusGroup) -> GroupKind {
    let n = group.order();
    if n == 1 {
        return GroupKind::Trivial;
    }
    let max_order =
        group.elements.iter().map(|g| g.order(n).expect("element order divides the group order")).max().unwrap_or(1);
    match (n, max_order) {
        (n, m) if m == n => GroupKind::Cyclic(n),
        (12, 3) => GroupKind::Tetrahedral,
        (24, 4) => GroupKind::Octahedral,
        (60, 5) => GroupKind::Icosahedral,
        (n, _) => GroupKind::Dihedral(n / 2),
    }
}

/// A finite subgroup of PGL(2) fixes a point of the line iff it is cyclic.
pub fn has_global_fixed_point(group: &MoebiusGroup) -> bool {
    matches!(classify(group), GroupKind::Trivial | GroupKind::Cyclic(_))
}

/// A point fixed by every element, when one exists.
pub fn common_fixed_point(group: &MoebiusGroup) -> Option<ProjPoint> {
    match classify(group) {
        GroupKind::Trivial => Some(ProjPoint::rational(Rational::zero())),
        GroupKind::Cyclic(n) => {
            let gen = group.elements.iter().find(|g| g.order(n) == Some(n))?;
            fixed_points(gen).ok()?.into_iter().next()
        }
        _ => None,
    }
}

/// Eigen-directions of the matrix: one point for a parabolic element, two otherwise.
pub fn fixed_points(g: &MoebiusElement) -> Result<Vec<ProjPoint>> {
    if g.is_identity() {
        return Err(Error::IdentityElement);
    }
    let [[a, b], [c, d]] = g.matrix();
    // (t : 1) fixed iff c t^2 + (d - a) t - b = 0; (1 : 0) fixed iff c = 0
    let mut points = Vec::new();
    if c.is_zero() {
        points.push(ProjPoint::infinity());
    }
    match quadratic_roots(c, &(d - a), &-b) {
        Ok(roots) => {
            for r in roots {
                let p = ProjPoint::affine(r);
                if !points.contains(&p) {
                    points.push(p);
                }
            }
        }
        Err(Error::NoRoot) => {}
        Err(e) => return Err(e),
    }
    debug_assert!(points.iter().all(|p| g.apply(p) == *p));
    debug_assert!(!points.is_empty() && points.len() <= 2);
    Ok(points)
}
