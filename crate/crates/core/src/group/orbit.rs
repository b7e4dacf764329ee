use std::collections::BTreeSet;
use std::fmt;

use super::{fixed_points, MoebiusGroup};
use crate::exact::{int, rat, ProjPoint};

/// A group orbit on the line; points sorted, `points.len() * stabilizer_order = |G|`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Orbit {
    pub points: Vec<ProjPoint>,
    pub stabilizer_order: usize,
}

impl Orbit {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        self.points.binary_search(p).is_ok()
    }
}

impl fmt::Display for Orbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pts: Vec<String> = self.points.iter().map(|p| p.to_string()).collect();
        write!(f, "{{{}}} (stabilizer {})", pts.join(", "), self.stabilizer_order)
    }
}

/// The orbit of `p`. The group is rational, so the orbit stays in the field of `p`.
pub fn orbit_of(group: &MoebiusGroup, p: &ProjPoint) -> Orbit {
    let points: BTreeSet<ProjPoint> = group.elements().iter().map(|g| g.apply(p)).collect();
    let points: Vec<ProjPoint> = points.into_iter().collect();
    Orbit { stabilizer_order: group.order() / points.len(), points }
}

/// All orbits with nontrivial stabilizer, sorted by their first point.
///
/// Different orbits may live over different quadratic extensions; each orbit
/// lives over a single one.
pub fn exceptional_orbits(group: &MoebiusGroup) -> Vec<Orbit> {
    let mut orbits: Vec<Orbit> = Vec::new();
    for g in group.non_identity() {
        for p in fixed_points(g).expect("non-identity element") {
            if !orbits.iter().any(|o| o.contains(&p)) {
                orbits.push(orbit_of(group, &p));
            }
        }
    }
    orbits.sort();
    orbits
}

/// A rational point with trivial stabilizer that avoids `avoid`; its orbit
/// represents the generic orbit class.
pub fn generic_point(group: &MoebiusGroup, avoid: &[ProjPoint]) -> ProjPoint {
    // finitely many points are excluded, so the sequence 2, 3, 1/2, 4, 1/3, ... hits one
    (2i64..)
        .flat_map(|k| [int(k), rat(1, k), int(-k)])
        .map(ProjPoint::rational)
        .find(|p| !avoid.contains(p) && group.non_identity().all(|g| g.apply(p) != *p))
        .expect("infinitely many candidates")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{closure, MoebiusElement};

    fn inversion() -> MoebiusGroup {
        closure(&[MoebiusElement::from_i64([[0, 1], [1, 0]]).unwrap()], 10).unwrap()
    }

    fn s3() -> MoebiusGroup {
        let gens = [
            MoebiusElement::from_i64([[0, 1], [1, 0]]).unwrap(),
            MoebiusElement::from_i64([[-1, -1], [0, 1]]).unwrap(),
            MoebiusElement::from_i64([[1, 0], [-1, -1]]).unwrap(),
        ];
        closure(&gens, 100).unwrap()
    }

    #[test]
    fn orbits_under_inversion() {
        let g = inversion();
        let o = orbit_of(&g, &ProjPoint::rational(int(2)));
        assert_eq!(o.points, vec![ProjPoint::rational(rat(1, 2)), ProjPoint::rational(int(2))]);
        assert_eq!(o.stabilizer_order, 1);
        let o = orbit_of(&g, &ProjPoint::rational(int(1)));
        assert_eq!(o.points, vec![ProjPoint::rational(int(1))]);
        assert_eq!(o.stabilizer_order, 2);
        let triv = orbit_of(&MoebiusGroup::trivial(), &ProjPoint::infinity());
        assert_eq!(triv.points, vec![ProjPoint::infinity()]);
        assert_eq!(triv.stabilizer_order, 1);
    }

    #[test]
    fn exceptional_orbits_of_inversion() {
        let orbits = exceptional_orbits(&inversion());
        assert_eq!(orbits.len(), 2);
        assert!(orbits.iter().all(|o| o.len() == 1 && o.stabilizer_order == 2));
        assert!(exceptional_orbits(&MoebiusGroup::trivial()).is_empty());
    }

    #[test]
    fn exceptional_orbits_of_s3() {
        let orbits = exceptional_orbits(&s3());
        let mut shapes: Vec<(usize, usize)> = orbits.iter().map(|o| (o.len(), o.stabilizer_order)).collect();
        shapes.sort();
        // {0, -1, inf} (stabilizer 2), {(1:1), (-2:1), (-1/2:1)} (stabilizer 2),
        // and the primitive cube-root pair (stabilizer 3)
        assert_eq!(shapes, vec![(2, 3), (3, 2), (3, 2)]);
        let triple = orbits.iter().find(|o| o.contains(&ProjPoint::rational(int(0)))).unwrap();
        assert!(triple.contains(&ProjPoint::rational(int(-1))));
        assert!(triple.contains(&ProjPoint::infinity()));
    }

    #[test]
    fn burnside_count() {
        let g = s3();
        let lhs: usize = exceptional_orbits(&g).iter().map(|o| o.len() * (o.stabilizer_order - 1)).sum();
        let rhs: usize = g.non_identity().map(|h| fixed_points(h).unwrap().len()).sum();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn generic_points_have_full_orbits() {
        let g = s3();
        let p = generic_point(&g, &[]);
        assert_eq!(orbit_of(&g, &p).len(), 6);
    }
}
