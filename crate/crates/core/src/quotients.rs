//! Polystability for diagonal torus actions, with certificates, and the
//! Chow quotient fan of a toric variety under a lattice projection.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{dot, smith_normal_form, solve_positive_combination, IntMatrix, Rational, StiemkeAlternative};
use crate::polyhedral::{common_refinement, image_cone, Fan};

/// Largest coordinate count accepted by [`polystable_locus`].
pub const MAX_LOCUS_COORDINATES: usize = 20;

/// Weights of a diagonal action of a rank-`d` torus on `n` coordinates;
/// column `i` is the weight of coordinate `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightMatrix {
    weights: IntMatrix,
    labels: Vec<String>,
}

impl WeightMatrix {
    pub fn new(weights: IntMatrix, labels: Vec<String>) -> Result<Self> {
        if labels.len() != weights.cols() {
            return Err(Error::Input(format!("{} labels for {} weight columns", labels.len(), weights.cols())));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::Input(format!("duplicate label {l:?}")));
            }
        }
        Ok(WeightMatrix { weights, labels })
    }

    /// Labels default to `x0, x1, ...`.
    pub fn unlabelled(weights: IntMatrix) -> Self {
        let labels = (0..weights.cols()).map(|i| format!("x{i}")).collect();
        WeightMatrix { weights, labels }
    }

    pub fn torus_rank(&self) -> usize {
        self.weights.rows()
    }

    pub fn coordinates(&self) -> usize {
        self.weights.cols()
    }

    pub fn weights(&self) -> &IntMatrix {
        &self.weights
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn weight(&self, i: usize) -> Vec<BigInt> {
        self.weights.column(i)
    }

    /// Support indices for the given labels, sorted.
    pub fn support(&self, labels: &[&str]) -> Result<Vec<usize>> {
        let mut s = labels
            .iter()
            .map(|l| {
                self.labels.iter().position(|x| x == l).ok_or_else(|| Error::Input(format!("unknown coordinate {l:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        s.sort_unstable();
        s.dedup();
        Ok(s)
    }

    pub fn support_labels(&self, s: &[usize]) -> Vec<String> {
        s.iter().map(|&i| self.labels[i].clone()).collect()
    }

    /// Change of torus basis `U W`.
    pub fn transform(&self, u: &IntMatrix) -> WeightMatrix {
        WeightMatrix { weights: u.mul(&self.weights), labels: self.labels.clone() }
    }

    fn check_support(&self, s: &[usize]) -> Result<()> {
        match s.iter().find(|&&i| i >= self.coordinates()) {
            Some(i) => Err(Error::Input(format!("coordinate index {i} out of range"))),
            None => Ok(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StabilityCert {
    /// `sum lambda_i w_i = 0` over the support, every `lambda_i > 0`
    PositiveCombination(Vec<(usize, Rational)>),
    /// a one-parameter subgroup `v` with `<w_i, v> >= 0` on the support and
    /// `> 0` somewhere, so the limit at `t -> 0` leaves the orbit
    Destabilizer(Vec<BigInt>),
}

impl fmt::Display for StabilityCert {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StabilityCert::PositiveCombination(l) => {
                let parts: Vec<String> =
                    l.iter().map(|(i, x)| format!("{}*w{i}", crate::exact::format_rational(x))).collect();
                if parts.is_empty() {
                    write!(f, "empty combination")
                } else {
                    write!(f, "{} = 0", parts.join(" + "))
                }
            }
            StabilityCert::Destabilizer(v) => {
                let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                write!(f, "destabilizing 1-PS ({})", parts.join(","))
            }
        }
    }
}

/// Whether the orbit of a point with support `s` is closed, with a
/// certificate either way. The empty support (the origin) is polystable.
pub fn is_polystable(w: &WeightMatrix, s: &[usize]) -> Result<(bool, StabilityCert)> {
    w.check_support(s)?;
    if s.is_empty() {
        return Ok((true, StabilityCert::PositiveCombination(vec![])));
    }
    let cols: Vec<Vec<BigInt>> = s.iter().map(|&i| w.weight(i)).collect();
    let sub = IntMatrix::from_columns(&cols, w.torus_rank())?;
    Ok(match solve_positive_combination(&sub) {
        StiemkeAlternative::Positive(l) => {
            (true, StabilityCert::PositiveCombination(s.iter().copied().zip(l).collect()))
        }
        StiemkeAlternative::Certificate(v) => (false, StabilityCert::Destabilizer(v)),
    })
}

/// Re-checks a certificate against the weights, independently of how it was found.
pub fn verify_certificate(w: &WeightMatrix, s: &[usize], polystable: bool, cert: &StabilityCert) -> bool {
    match (polystable, cert) {
        (true, StabilityCert::PositiveCombination(l)) => {
            let mut idx: Vec<usize> = l.iter().map(|(i, _)| *i).collect();
            idx.sort_unstable();
            if idx != s {
                return false;
            }
            if l.iter().any(|(_, x)| !x.is_positive()) {
                return false;
            }
            (0..w.torus_rank()).all(|r| {
                l.iter()
                    .map(|(i, x)| Rational::from_integer(w.weights()[(r, *i)].clone()) * x)
                    .sum::<Rational>()
                    .is_zero()
            })
        }
        (false, StabilityCert::Destabilizer(v)) => {
            if v.len() != w.torus_rank() {
                return false;
            }
            let pairings: Vec<BigInt> = s.iter().map(|&i| dot(&w.weight(i), v)).collect();
            pairings.iter().all(|p| !p.is_negative()) && pairings.iter().any(|p| p.is_positive())
        }
        _ => false,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LimitSupport {
    Support(Vec<usize>),
    Diverges,
}

/// Support of `lim_{t -> 0} t^v . x` for a point `x` with support `s`.
pub fn limit_support(w: &WeightMatrix, s: &[usize], v: &[BigInt]) -> Result<LimitSupport> {
    w.check_support(s)?;
    if v.len() != w.torus_rank() {
        return Err(Error::Input(format!("1-PS has {} entries, torus rank is {}", v.len(), w.torus_rank())));
    }
    let mut out = vec![];
    for &i in s {
        let e = dot(&w.weight(i), v);
        if e.is_negative() {
            return Ok(LimitSupport::Diverges);
        }
        if e.is_zero() {
            out.push(i);
        }
    }
    Ok(LimitSupport::Support(out))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocusEntry {
    pub support: Vec<usize>,
    pub polystable: bool,
    pub cert: StabilityCert,
}

/// Verdicts for all `2^n` supports, in lexicographic order of index lists.
pub fn polystable_locus(w: &WeightMatrix) -> Result<Vec<LocusEntry>> {
    let n = w.coordinates();
    if n > MAX_LOCUS_COORDINATES {
        return Err(Error::TooManyCoordinates(n, MAX_LOCUS_COORDINATES));
    }
    let mut supports: Vec<Vec<usize>> =
        (0u32..1 << n).map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect()).collect();
    supports.sort();
    supports
        .into_iter()
        .map(|s| {
            let (polystable, cert) = is_polystable(w, &s)?;
            Ok(LocusEntry { support: s, polystable, cert })
        })
        .collect()
}

/// A support on which a stated description of the locus and the computed
/// verdict disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocusMismatch {
    pub support: Vec<usize>,
    pub claimed: bool,
    pub computed: bool,
}

/// Compares the computed locus with a claim "some clause is entirely
/// nonzero" (a disjunction of monomials). The origin is left out.
pub fn compare_with_claim(locus: &[LocusEntry], clauses: &[Vec<usize>]) -> Vec<LocusMismatch> {
    locus
        .iter()
        .filter(|e| !e.support.is_empty())
        .filter_map(|e| {
            let claimed = clauses.iter().any(|c| c.iter().all(|i| e.support.contains(i)));
            (claimed != e.polystable).then(|| LocusMismatch {
                support: e.support.clone(),
                claimed,
                computed: e.polystable,
            })
        })
        .collect()
}

/// The coarsest common refinement of the images `P(sigma)` of the maximal
/// cones of `sigma`, for `P` surjective onto the target lattice.
pub fn chow_quotient_fan(sigma: &Fan, p: &IntMatrix, cap: usize) -> Result<Fan> {
    if p.cols() != sigma.rank() {
        return Err(Error::Input(format!("projection has {} columns, fan rank is {}", p.cols(), sigma.rank())));
    }
    let snf = smith_normal_form(p);
    if snf.rank() != p.rows() || snf.invariant_factors().iter().any(|f| !f.abs().is_one()) {
        return Err(Error::NotSurjective);
    }
    let images = sigma.maximal_cones().iter().map(|c| image_cone(c, p)).collect::<Result<Vec<_>>>()?;
    common_refinement(&images, cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyhedral::{Cone, DEFAULT_PATTERN_CAP};

    fn hyp12() -> WeightMatrix {
        WeightMatrix::new(
            IntMatrix::from_i64(&[&[-2, 1, 1], &[1, -2, 1]]),
            vec!["alpha".into(), "beta".into(), "gamma".into()],
        )
        .unwrap()
    }

    fn blowup() -> WeightMatrix {
        WeightMatrix::new(
            IntMatrix::from_i64(&[&[-1, 1, -1, 1], &[1, -1, -1, 1]]),
            vec!["alpha".into(), "beta".into(), "gamma".into(), "delta".into()],
        )
        .unwrap()
    }

    fn bi(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn first_family_examples() {
        let w = hyp12();
        let (ok, cert) = is_polystable(&w, &[0, 1, 2]).unwrap();
        assert!(ok && verify_certificate(&w, &[0, 1, 2], ok, &cert));
        let (ok, cert) = is_polystable(&w, &[0, 1]).unwrap();
        assert!(!ok);
        assert_eq!(cert, StabilityCert::Destabilizer(bi(&[-1, -1])));
        assert!(is_polystable(&w, &[]).unwrap().0);
        let locus: Vec<Vec<usize>> =
            polystable_locus(&w).unwrap().into_iter().filter(|e| e.polystable).map(|e| e.support).collect();
        assert_eq!(locus, vec![vec![], vec![0, 1, 2]]);
    }

    #[test]
    fn limits() {
        let w = blowup();
        assert_eq!(limit_support(&w, &[0, 1, 2], &bi(&[-1, -1])).unwrap(), LimitSupport::Support(vec![0, 1]));
        assert_eq!(limit_support(&w, &[0, 2], &bi(&[0, 0])).unwrap(), LimitSupport::Support(vec![0, 2]));
        assert_eq!(limit_support(&w, &[2], &bi(&[1, 1])).unwrap(), LimitSupport::Diverges);
    }

    #[test]
    fn second_family_and_claim() {
        let w = blowup();
        let locus = polystable_locus(&w).unwrap();
        assert_eq!(locus.len(), 16);
        let stable: Vec<Vec<usize>> = locus.iter().filter(|e| e.polystable).map(|e| e.support.clone()).collect();
        assert_eq!(stable, vec![vec![], vec![0, 1], vec![0, 1, 2, 3], vec![2, 3]]);
        let mismatches = compare_with_claim(&locus, &[vec![0, 1], vec![2, 3]]);
        let sup: Vec<Vec<usize>> = mismatches.iter().map(|m| m.support.clone()).collect();
        assert_eq!(sup, vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]);
        assert!(mismatches.iter().all(|m| m.claimed && !m.computed));
    }

    #[test]
    fn single_coordinate() {
        let w = WeightMatrix::unlabelled(IntMatrix::from_i64(&[&[3]]));
        let stable: Vec<_> = polystable_locus(&w).unwrap().into_iter().filter(|e| e.polystable).collect();
        assert_eq!(stable.len(), 1);
        assert!(stable[0].support.is_empty());
    }

    #[test]
    fn too_many_coordinates() {
        let w = WeightMatrix::unlabelled(IntMatrix::zeros(1, 21));
        assert_eq!(polystable_locus(&w), Err(Error::TooManyCoordinates(21, 20)));
    }

    fn p2() -> Fan {
        let rays = [bi(&[1, 0]), bi(&[0, 1]), bi(&[-1, -1])];
        let cones =
            (0..3).map(|i| Cone::from_generators(2, &[rays[i].clone(), rays[(i + 1) % 3].clone()]).unwrap()).collect();
        Fan::new(2, cones).unwrap()
    }

    fn p1() -> Fan {
        Fan::new(
            1,
            vec![Cone::from_generators(1, &[bi(&[1])]).unwrap(), Cone::from_generators(1, &[bi(&[-1])]).unwrap()],
        )
        .unwrap()
    }

    #[test]
    fn chow_quotients() {
        let f = chow_quotient_fan(&p2(), &IntMatrix::from_i64(&[&[1, -1]]), DEFAULT_PATTERN_CAP).unwrap();
        assert_eq!(f, p1());
        assert_eq!(f.cones().len(), 3);
        assert_eq!(chow_quotient_fan(&p2(), &IntMatrix::identity(2), DEFAULT_PATTERN_CAP).unwrap(), p2());

        let quadrants = [[1, 1], [-1, 1], [-1, -1], [1, -1]]
            .iter()
            .map(|[a, b]| Cone::from_generators(2, &[bi(&[*a, 0]), bi(&[0, *b])]).unwrap())
            .collect();
        let p1xp1 = Fan::new(2, quadrants).unwrap();
        assert_eq!(chow_quotient_fan(&p1xp1, &IntMatrix::from_i64(&[&[1, 1]]), DEFAULT_PATTERN_CAP).unwrap(), p1());
    }

    #[test]
    fn projection_must_be_surjective() {
        let r = chow_quotient_fan(&p2(), &IntMatrix::from_i64(&[&[2, 0]]), DEFAULT_PATTERN_CAP);
        assert_eq!(r, Err(Error::NotSurjective));
    }
}
