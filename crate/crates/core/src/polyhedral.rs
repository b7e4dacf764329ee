//! Exact rational polyhedral cones (possibly with lineality), their duals,
//! intersections and linear images, and coarsest common refinements of
//! families of cones.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{dot, integer_kernel, primitive, IntMatrix, LinearProgram, LpOutcome, Rational};

/// Default bound on the number of sign patterns visited by [`common_refinement`].
pub const DEFAULT_PATTERN_CAP: usize = 1 << 16;

fn matrix(rows: &[Vec<BigInt>], n: usize) -> IntMatrix {
    IntMatrix::from_rows(rows.to_vec(), n).expect("rows of equal length")
}

fn rank_of(rows: &[Vec<BigInt>], n: usize) -> usize {
    if rows.is_empty() || n == 0 {
        return 0;
    }
    matrix(rows, n).rank()
}

fn kernel(rows: &[Vec<BigInt>], n: usize) -> Vec<Vec<BigInt>> {
    if rows.is_empty() {
        return IntMatrix::identity(n).to_rows();
    }
    integer_kernel(&matrix(rows, n))
}

fn neg(v: &[BigInt]) -> Vec<BigInt> {
    v.iter().map(|x| -x).collect()
}

/// A polyhedral cone `{x : <a, x> >= 0 for a in ineqs, <e, x> = 0 for e in eqs}`
/// stored with its lineality space and the extreme rays of its pointed part.
///
/// Lineality is kept as a Hermite-reduced lattice basis and rays are
/// primitive, orthogonal to the lineality space and sorted, so two cones are
/// equal as point sets exactly when they compare equal.
#[derive(Debug, Clone)]
pub struct Cone {
    n: usize,
    lineality: Vec<Vec<BigInt>>,
    rays: Vec<Vec<BigInt>>,
    ineqs: Vec<Vec<BigInt>>,
    eqs: Vec<Vec<BigInt>>,
}

impl PartialEq for Cone {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.lineality == other.lineality && self.rays == other.rays
    }
}

impl Eq for Cone {}

impl Ord for Cone {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, self.dim(), &self.lineality, &self.rays).cmp(&(other.n, other.dim(), &other.lineality, &other.rays))
    }
}

impl PartialOrd for Cone {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Cone {
    /// The cone cut out by `<a, x> >= 0` for each `a` in `ineqs` and
    /// `<e, x> = 0` for each `e` in `eqs`.
    pub fn from_halfspaces(n: usize, ineqs: Vec<Vec<BigInt>>, eqs: Vec<Vec<BigInt>>) -> Result<Cone> {
        if let Some(bad) = ineqs.iter().chain(&eqs).find(|v| v.len() != n) {
            return Err(Error::Input(format!("normal of length {} in ambient rank {n}", bad.len())));
        }
        let ineqs: Vec<Vec<BigInt>> = ineqs.into_iter().filter(|a| a.iter().any(|x| !x.is_zero())).collect();
        let eqs: Vec<Vec<BigInt>> = eqs.into_iter().filter(|a| a.iter().any(|x| !x.is_zero())).collect();
        let all: Vec<Vec<BigInt>> = ineqs.iter().chain(&eqs).cloned().collect();
        let lineality = kernel(&all, n);

        // rays live in the orthogonal complement of the lineality space
        let base: Vec<Vec<BigInt>> = eqs.iter().chain(&lineality).cloned().collect();
        let base_rank = rank_of(&base, n);
        let pointed_dim = n - base_rank;
        let mut rays = BTreeSet::new();
        if pointed_dim >= 1 {
            let mut chosen = base.clone();
            extreme_rays(&ineqs, 0, pointed_dim - 1, base_rank, &mut chosen, n, &mut rays);
        }
        Ok(Cone { n, lineality, rays: rays.into_iter().collect(), ineqs, eqs })
    }

    /// The cone generated by `gens` (zero vectors allowed).
    pub fn from_generators(n: usize, gens: &[Vec<BigInt>]) -> Result<Cone> {
        let dual = Cone::from_halfspaces(n, gens.to_vec(), vec![])?;
        Cone::from_halfspaces(n, dual.rays.clone(), dual.lineality.clone())
    }

    pub fn zero(n: usize) -> Cone {
        Cone::from_halfspaces(n, vec![], IntMatrix::identity(n).to_rows()).expect("identity rows")
    }

    pub fn full(n: usize) -> Cone {
        Cone::from_halfspaces(n, vec![], vec![]).expect("no constraints")
    }

    pub fn ambient_rank(&self) -> usize {
        self.n
    }

    pub fn lineality(&self) -> &[Vec<BigInt>] {
        &self.lineality
    }

    pub fn rays(&self) -> &[Vec<BigInt>] {
        &self.rays
    }

    /// A generating set: the rays plus both signs of each lineality vector.
    pub fn generators(&self) -> Vec<Vec<BigInt>> {
        let mut g = self.rays.clone();
        for l in &self.lineality {
            g.push(l.clone());
            g.push(neg(l));
        }
        g
    }

    /// An inequality description `(ineqs, eqs)`.
    pub fn halfspaces(&self) -> (&[Vec<BigInt>], &[Vec<BigInt>]) {
        (&self.ineqs, &self.eqs)
    }

    pub fn dim(&self) -> usize {
        let rows: Vec<Vec<BigInt>> = self.rays.iter().chain(&self.lineality).cloned().collect();
        rank_of(&rows, self.n)
    }

    pub fn is_zero(&self) -> bool {
        self.rays.is_empty() && self.lineality.is_empty()
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        let val = |a: &Vec<BigInt>| -> Rational {
            a.iter().zip(x).map(|(ai, xi)| Rational::from_integer(ai.clone()) * xi).sum()
        };
        self.ineqs.iter().all(|a| !val(a).is_negative()) && self.eqs.iter().all(|e| val(e).is_zero())
    }

    pub fn contains_integer(&self, x: &[BigInt]) -> bool {
        self.ineqs.iter().all(|a| !dot(a, x).is_negative()) && self.eqs.iter().all(|e| dot(e, x).is_zero())
    }

    pub fn contains_cone(&self, other: &Cone) -> bool {
        other.generators().iter().all(|g| self.contains_integer(g))
    }

    /// All faces, including the cone itself and its lineality space.
    pub fn faces(&self) -> BTreeSet<Cone> {
        let mut out = BTreeSet::new();
        self.collect_faces(&mut out);
        out
    }

    fn collect_faces(&self, out: &mut BTreeSet<Cone>) {
        if !out.insert(self.clone()) {
            return;
        }
        for h in &self.ineqs {
            let mut eqs = self.eqs.clone();
            eqs.push(h.clone());
            let f = Cone::from_halfspaces(self.n, self.ineqs.clone(), eqs).expect("same rank");
            if f != *self {
                f.collect_faces(out);
            }
        }
    }

    pub fn is_face_of(&self, other: &Cone) -> bool {
        other.contains_cone(self) && other.faces().contains(self)
    }
}

/// Depth-first choice of `need` further inequalities, each raising the rank
/// of `chosen`; every choice reaching rank `n - 1` pins down a candidate ray.
fn extreme_rays(
    ineqs: &[Vec<BigInt>],
    start: usize,
    need: usize,
    rank: usize,
    chosen: &mut Vec<Vec<BigInt>>,
    n: usize,
    out: &mut BTreeSet<Vec<BigInt>>,
) {
    if need == 0 {
        let k = kernel(chosen, n);
        if k.len() != 1 {
            return;
        }
        let v = primitive(&k[0]);
        let signs: Vec<BigInt> = ineqs.iter().map(|a| dot(a, &v)).collect();
        if signs.iter().all(|s| !s.is_negative()) {
            out.insert(v);
        } else if signs.iter().all(|s| !s.is_positive()) {
            out.insert(neg(&v));
        }
        return;
    }
    for i in start..ineqs.len() {
        chosen.push(ineqs[i].clone());
        if rank_of(chosen, n) == rank + 1 {
            extreme_rays(ineqs, i + 1, need - 1, rank + 1, chosen, n, out);
        }
        chosen.pop();
    }
}

impl fmt::Display for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: &Vec<BigInt>| format!("({})", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","));
        let mut parts: Vec<String> = self.rays.iter().map(show).collect();
        parts.extend(self.lineality.iter().map(|l| format!("±{}", show(l))));
        if parts.is_empty() {
            write!(f, "cone{{0}}")
        } else {
            write!(f, "cone<{}>", parts.join(", "))
        }
    }
}

/// `{v : <v, g> >= 0 for every g in C}`.
pub fn dual_cone(c: &Cone) -> Cone {
    Cone::from_halfspaces(c.n, c.rays.clone(), c.lineality.clone()).expect("same rank")
}

pub fn intersect(a: &Cone, b: &Cone) -> Result<Cone> {
    if a.n != b.n {
        return Err(Error::Input(format!("ambient ranks {} and {} differ", a.n, b.n)));
    }
    let ineqs = a.ineqs.iter().chain(&b.ineqs).cloned().collect();
    let eqs = a.eqs.iter().chain(&b.eqs).cloned().collect();
    Cone::from_halfspaces(a.n, ineqs, eqs)
}

/// The cone generated by `P g` over the generators `g` of `C`.
pub fn image_cone(c: &Cone, p: &IntMatrix) -> Result<Cone> {
    if p.cols() != c.n {
        return Err(Error::Input(format!("a {}x{} matrix cannot act on rank {}", p.rows(), p.cols(), c.n)));
    }
    let gens: Vec<Vec<BigInt>> = c.generators().iter().map(|g| p.mul_vec(g)).collect();
    Cone::from_generators(p.rows(), &gens)
}

/// A set of cones closed under taking faces, any two meeting in a common face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fan {
    rank: usize,
    cones: Vec<Cone>,
}

impl Fan {
    /// Closes `cones` under faces and checks the intersection property.
    pub fn new(rank: usize, cones: Vec<Cone>) -> Result<Fan> {
        let mut all = BTreeSet::new();
        for c in &cones {
            if c.n != rank {
                return Err(Error::Input(format!("cone {c} is not in rank {rank}")));
            }
            all.extend(c.faces());
        }
        let cones: Vec<Cone> = all.into_iter().collect();
        let fan = Fan { rank, cones };
        fan.check_intersections()?;
        Ok(fan)
    }

    fn check_intersections(&self) -> Result<()> {
        let max = self.maximal_cones();
        for (i, a) in max.iter().enumerate() {
            for b in &max[i + 1..] {
                let c = intersect(a, b)?;
                if !c.is_face_of(a) || !c.is_face_of(b) {
                    return Err(Error::Input(format!("{a} and {b} do not meet in a common face")));
                }
            }
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// All cones, sorted by dimension and then lexicographically.
    pub fn cones(&self) -> &[Cone] {
        &self.cones
    }

    pub fn maximal_cones(&self) -> Vec<Cone> {
        self.cones.iter().filter(|c| !self.cones.iter().any(|d| d != *c && d.contains_cone(c))).cloned().collect()
    }

    pub fn support_contains(&self, x: &[Rational]) -> bool {
        self.cones.iter().any(|c| c.contains(x))
    }
}

impl fmt::Display for Fan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "fan in rank {} with {} cones", self.rank, self.cones.len())?;
        for c in &self.cones {
            writeln!(f, "  dim {}: {c}", c.dim())?;
        }
        Ok(())
    }
}

/// Sign of a point against one hyperplane of the arrangement; `None` once
/// the hyperplane has been merged away.
type Sign = Option<i8>;

#[derive(Debug, Clone)]
struct Cell {
    signs: Vec<Sign>,
    members: BTreeSet<usize>,
    dim: usize,
}

/// The coarsest fan refining `cones` on the union of their supports.
///
/// The arrangement of all facet hyperplanes is enumerated face by face,
/// each relatively open face is labelled by the inputs containing it, and
/// two cells with equal labels are merged across a wall carrying the same
/// label whenever the result is still a fan.
pub fn common_refinement(cones: &[Cone], cap: usize) -> Result<Fan> {
    let Some(first) = cones.first() else {
        return Err(Error::Input("no cones to refine".into()));
    };
    let n = first.n;
    if let Some(c) = cones.iter().find(|c| c.n != n) {
        return Err(Error::Input(format!("cone {c} is not in rank {n}")));
    }

    // coordinates on the span U of all inputs: x = B y
    let gens: Vec<Vec<BigInt>> = cones.iter().flat_map(|c| c.generators()).collect();
    let perp = kernel(&gens, n);
    let basis = kernel(&perp, n);
    let k = basis.len();
    if k == 0 {
        return Fan::new(n, vec![Cone::zero(n)]);
    }
    let b = IntMatrix::from_columns(&basis, n)?;
    let bt = b.transpose();

    // distinct hyperplanes of U, as normals in y-coordinates
    let mut hyperplanes = BTreeSet::new();
    for c in cones {
        for h in c.ineqs.iter().chain(&c.eqs) {
            let hy = primitive(&bt.mul_vec(h));
            if let Some(lead) = hy.iter().find(|x| !x.is_zero()) {
                hyperplanes.insert(if lead.is_negative() { neg(&hy) } else { hy });
            }
        }
    }
    let hyperplanes: Vec<Vec<BigInt>> = hyperplanes.into_iter().collect();

    let mut search = PatternSearch { hyperplanes: &hyperplanes, k, visited: 0, cap, faces: vec![] };
    search.descend(&mut vec![])?;

    let to_cone = |signs: &[Sign]| -> Result<Cone> {
        let mut ineqs = vec![];
        let mut eqs = vec![];
        for (s, h) in signs.iter().zip(&hyperplanes) {
            match s {
                Some(1) => ineqs.push(h.clone()),
                Some(-1) => ineqs.push(neg(h)),
                Some(_) => eqs.push(h.clone()),
                None => {}
            }
        }
        image_cone(&Cone::from_halfspaces(k, ineqs, eqs)?, &b)
    };

    let mut cells = Vec::new();
    for (signs, y) in search.faces {
        let x: Vec<Rational> =
            (0..n).map(|i| (0..k).map(|j| Rational::from_integer(b[(i, j)].clone()) * &y[j]).sum()).collect();
        let members: BTreeSet<usize> = (0..cones.len()).filter(|&i| cones[i].contains(&x)).collect();
        if !members.is_empty() {
            let signs: Vec<Sign> = signs.into_iter().map(Some).collect();
            let dim = to_cone(&signs)?.dim();
            cells.push(Cell { signs, members, dim });
        }
    }

    let as_fan = |cells: &[Cell]| -> Result<Option<Fan>> {
        let cs = cells.iter().map(|c| to_cone(&c.signs)).collect::<Result<Vec<_>>>()?;
        // every face of a cell must itself be a cell
        Ok(Fan::new(n, cs).ok().filter(|f| f.cones.len() == cells.len()))
    };

    for d in 1..=k {
        'again: loop {
            for i in 0..cells.len() {
                for j in i + 1..cells.len() {
                    let (a, c) = (&cells[i], &cells[j]);
                    if a.dim != d || c.dim != d || a.members != c.members {
                        continue;
                    }
                    let Some(pos) = single_flip(&a.signs, &c.signs) else { continue };
                    let mut wall = a.signs.clone();
                    wall[pos] = Some(0);
                    let Some(w) = cells.iter().position(|x| x.signs == wall) else { continue };
                    if cells[w].members != a.members {
                        continue;
                    }
                    let mut merged = a.signs.clone();
                    merged[pos] = None;
                    let mut trial: Vec<Cell> = cells
                        .iter()
                        .enumerate()
                        .filter(|(t, _)| ![i, j, w].contains(t))
                        .map(|(_, c)| c.clone())
                        .collect();
                    trial.push(Cell { signs: merged, members: a.members.clone(), dim: d });
                    if as_fan(&trial)?.is_some() {
                        cells = trial;
                        continue 'again;
                    }
                }
            }
            break;
        }
    }

    as_fan(&cells)?.ok_or_else(|| Error::Input("refinement cells do not form a fan".into()))
}

/// Position of the only coordinate where `a` is `+1` and `b` is `-1` (or
/// the reverse), provided they agree everywhere else.
fn single_flip(a: &[Sign], b: &[Sign]) -> Option<usize> {
    let mut pos = None;
    for (i, (x, y)) in a.iter().zip(b).enumerate() {
        match (x, y) {
            _ if x == y => {}
            (Some(p), Some(q)) if *p != 0 && *q != 0 && pos.is_none() => pos = Some(i),
            _ => return None,
        }
    }
    pos
}

struct PatternSearch<'a> {
    hyperplanes: &'a [Vec<BigInt>],
    k: usize,
    visited: usize,
    cap: usize,
    /// sign vectors of nonempty relatively open faces, with a point in each
    faces: Vec<(Vec<i8>, Vec<Rational>)>,
}

impl PatternSearch<'_> {
    fn descend(&mut self, signs: &mut Vec<i8>) -> Result<()> {
        self.visited += 1;
        if self.visited > self.cap {
            return Err(Error::CapExceeded(self.cap));
        }
        let Some(y) = relative_interior_point(&self.hyperplanes[..signs.len()], signs, self.k) else {
            return Ok(());
        };
        if signs.len() == self.hyperplanes.len() {
            self.faces.push((signs.clone(), y));
            return Ok(());
        }
        for s in [1, 0, -1] {
            signs.push(s);
            self.descend(signs)?;
            signs.pop();
        }
        Ok(())
    }
}

/// A point `y` with `s_j <h_j, y> >= 1` for `s_j != 0` and `<h_j, y> = 0`
/// otherwise, if the relatively open face is nonempty.
fn relative_interior_point(hs: &[Vec<BigInt>], signs: &[i8], k: usize) -> Option<Vec<Rational>> {
    if hs.is_empty() {
        return Some(vec![Rational::zero(); k]);
    }
    let m = hs.len();
    // variables: y+ (k), y- (k), slack (m)
    let mut a = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    for (j, (h, &s)) in hs.iter().zip(signs).enumerate() {
        let sign = Rational::from_integer(if s == 0 { 1 } else { s }.into());
        let mut row = Vec::with_capacity(2 * k + m);
        row.extend(h.iter().map(|x| Rational::from_integer(x.clone()) * &sign));
        row.extend(h.iter().map(|x| -Rational::from_integer(x.clone()) * &sign));
        row.extend((0..m).map(|i| if i == j && s != 0 { -Rational::one() } else { Rational::zero() }));
        a.push(row);
        rhs.push(if s == 0 { Rational::zero() } else { Rational::one() });
    }
    let lp = LinearProgram { a, b: rhs, c: vec![Rational::zero(); 2 * k + m] };
    match lp.solve() {
        LpOutcome::Optimal { x, .. } => Some((0..k).map(|i| &x[i] - &x[k + i]).collect()),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use proptest::prelude::*;

    fn v(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn cone(n: usize, gens: &[&[i64]]) -> Cone {
        Cone::from_generators(n, &gens.iter().map(|g| v(g)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn duals() {
        let q1 = cone(2, &[&[1, 0], &[0, 1]]);
        assert_eq!(dual_cone(&q1), q1);
        assert_eq!(dual_cone(&Cone::full(2)), Cone::zero(2));
        let c = cone(2, &[&[1, 0], &[1, 2]]);
        assert_eq!(dual_cone(&c), cone(2, &[&[0, 1], &[2, -1]]));
        assert_eq!(dual_cone(&dual_cone(&c)), c);
    }

    #[test]
    fn intersections() {
        let q1 = cone(2, &[&[1, 0], &[0, 1]]);
        let q2 = cone(2, &[&[-1, 0], &[0, 1]]);
        assert_eq!(intersect(&q1, &q1).unwrap(), q1);
        assert_eq!(intersect(&q1, &q2).unwrap(), cone(2, &[&[0, 1]]));
        assert_eq!(intersect(&q1, &Cone::zero(2)).unwrap(), Cone::zero(2));
    }

    #[test]
    fn images() {
        let p = IntMatrix::from_i64(&[&[1, -1]]);
        assert_eq!(image_cone(&cone(2, &[&[1, 0], &[0, 1]]), &p).unwrap(), Cone::full(1));
        assert_eq!(image_cone(&cone(2, &[&[1, 0], &[-1, -1]]), &p).unwrap(), cone(1, &[&[1]]));
        let c = cone(2, &[&[1, 0], &[1, 2]]);
        assert_eq!(image_cone(&c, &IntMatrix::identity(2)).unwrap(), c);
    }

    #[test]
    fn lineality_is_tracked() {
        let half = cone(2, &[&[1, 0], &[-1, 0], &[0, 1]]);
        assert_eq!(half.lineality().len(), 1);
        assert_eq!(half.rays(), &[v(&[0, 1])]);
        assert_eq!(half.dim(), 2);
        // faces of a halfplane: itself and its boundary line
        assert_eq!(half.faces().len(), 2);
    }

    #[test]
    fn refinement_of_a_ray() {
        let f = common_refinement(&[cone(1, &[&[1]])], DEFAULT_PATTERN_CAP).unwrap();
        assert_eq!(f.cones(), &[Cone::zero(1), cone(1, &[&[1]])]);
    }

    #[test]
    fn refinement_gives_projective_line() {
        let input = [Cone::full(1), cone(1, &[&[1]]), cone(1, &[&[-1]])];
        let f = common_refinement(&input, DEFAULT_PATTERN_CAP).unwrap();
        assert_eq!(f.cones(), &[Cone::zero(1), cone(1, &[&[-1]]), cone(1, &[&[1]])]);
    }

    #[test]
    fn refinement_of_two_halfplanes() {
        let x = Cone::from_halfspaces(2, vec![v(&[1, 0])], vec![]).unwrap();
        let y = Cone::from_halfspaces(2, vec![v(&[0, 1])], vec![]).unwrap();
        let f = common_refinement(&[x, y], DEFAULT_PATTERN_CAP).unwrap();
        let max = f.maximal_cones();
        assert_eq!(max.len(), 3);
        for q in [cone(2, &[&[1, 0], &[0, 1]]), cone(2, &[&[1, 0], &[0, -1]]), cone(2, &[&[-1, 0], &[0, 1]])] {
            assert!(max.contains(&q), "missing {q}");
        }
        // 3 quadrants, 4 rays, origin
        assert_eq!(f.cones().len(), 8);
    }

    #[test]
    fn refinement_merges_unneeded_cuts() {
        // the diagonal cuts the third quadrant, which no other input meets
        let c0 = cone(2, &[&[1, 0], &[1, 1]]);
        let c1 = cone(2, &[&[1, 1], &[0, 1]]);
        let q3 = cone(2, &[&[-1, 0], &[0, -1]]);
        let f = common_refinement(&[c0.clone(), c1.clone(), q3.clone()], DEFAULT_PATTERN_CAP).unwrap();
        assert_eq!(f.maximal_cones(), vec![q3, c1, c0]);
    }

    #[test]
    fn refinement_keeps_walls_that_would_break_the_fan() {
        // merging the lower half would meet the first quadrant in a non-face
        let upper = Cone::from_halfspaces(2, vec![v(&[0, 1])], vec![]).unwrap();
        let q1 = cone(2, &[&[1, 0], &[0, 1]]);
        let lower = Cone::from_halfspaces(2, vec![v(&[0, -1])], vec![]).unwrap();
        let f = common_refinement(&[upper, q1, lower], DEFAULT_PATTERN_CAP).unwrap();
        assert_eq!(f.maximal_cones().len(), 4);
    }

    #[test]
    fn refinement_keeps_lower_dimensional_inputs() {
        let f = common_refinement(&[cone(2, &[&[1, 0], &[0, 1]]), cone(2, &[&[-1, 1]])], DEFAULT_PATTERN_CAP).unwrap();
        assert!(f.cones().contains(&cone(2, &[&[-1, 1]])));
    }

    #[test]
    fn pattern_cap() {
        let cs: Vec<Cone> = (1..=6).map(|k| Cone::from_halfspaces(2, vec![v(&[k, 1 - k])], vec![]).unwrap()).collect();
        assert_eq!(common_refinement(&cs, 4), Err(Error::CapExceeded(4)));
    }

    fn small_vec(n: usize) -> impl Strategy<Value = Vec<i64>> {
        proptest::collection::vec(-3i64..=3, n)
    }

    proptest! {
        #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

        #[test]
        fn double_dual(gens in proptest::collection::vec(small_vec(3), 1..5)) {
            let g: Vec<Vec<BigInt>> = gens.iter().map(|x| v(x)).collect();
            let c = Cone::from_generators(3, &g).unwrap();
            prop_assert_eq!(dual_cone(&dual_cone(&c)), c.clone());
            for x in &g {
                prop_assert!(c.contains_integer(x));
            }
        }

        #[test]
        fn image_contains_images(gens in proptest::collection::vec(small_vec(3), 1..4), p in small_vec(6)) {
            let g: Vec<Vec<BigInt>> = gens.iter().map(|x| v(x)).collect();
            let c = Cone::from_generators(3, &g).unwrap();
            let m = IntMatrix::from_i64(&[&p[..3], &p[3..]]);
            let img = image_cone(&c, &m).unwrap();
            for x in &g {
                prop_assert!(img.contains_integer(&m.mul_vec(x)));
            }
        }

        #[test]
        fn refinement_covers_and_refines(
            gens in proptest::collection::vec(proptest::collection::vec(small_vec(2), 1..3), 1..4),
            probe in proptest::collection::vec(small_vec(2), 8),
        ) {
            let cones: Vec<Cone> = gens
                .iter()
                .map(|gs| Cone::from_generators(2, &gs.iter().map(|x| v(x)).collect::<Vec<_>>()).unwrap())
                .collect();
            let fan = common_refinement(&cones, DEFAULT_PATTERN_CAP).unwrap();
            for p in probe {
                let x: Vec<Rational> = p.iter().map(|&t| int(t)).collect();
                let in_union = cones.iter().any(|c| c.contains(&x));
                prop_assert_eq!(fan.support_contains(&x), in_union, "{:?}", p);
            }
            for cell in fan.maximal_cones() {
                // an interior point of the cell decides membership for the whole cell
                let mut mid = vec![BigInt::zero(); 2];
                for g in cell.generators() {
                    mid = mid.iter().zip(&g).map(|(a, b)| a + b).collect();
                }
                for c in &cones {
                    if c.contains_integer(&mid) && cell.dim() == 2 {
                        prop_assert!(c.contains_cone(&cell), "{} meets {} without lying inside", cell, c);
                    }
                }
            }
        }
    }
}
