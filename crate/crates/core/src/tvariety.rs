//! Combinatorial model of a complexity-one T-variety over `P^1`: vertical
//! divisors with their stabilizer orders, horizontal divisors, and the
//! symmetry data. From it we get the quotient boundary, the pullback and
//! canonical-divisor formulas, the global log canonical threshold and the
//! Kähler–Einstein verdict.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::curvepair::{finite_degree, lct_g, BoundaryCoeff, LctResult, LctValue, MarkedCurvePair};
use crate::error::{Error, Result};
use crate::exact::{format_rational, ProjPoint, Rational};
use crate::group::{closure, has_global_fixed_point, is_symmetric, LatticeAutGroup, MoebiusElement, MoebiusGroup};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerticalDivisor {
    pub name: String,
    pub base: ProjPoint,
    /// order of the generic stabilizer
    pub order: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HorizontalDivisor {
    pub name: String,
}

/// The fibers we know something about. A fiber with an empty divisor list
/// has no vertical divisor at all (multiplicity 0); every point not listed
/// carries a single vertical divisor of order 1.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FiberBook {
    fibers: Vec<(ProjPoint, Vec<VerticalDivisor>)>,
}

impl FiberBook {
    pub fn new(fibers: Vec<(ProjPoint, Vec<VerticalDivisor>)>) -> Result<Self> {
        for (i, (p, divs)) in fibers.iter().enumerate() {
            if fibers[..i].iter().any(|(q, _)| q == p) {
                return Err(Error::Input(format!("fiber over {p} is listed twice")));
            }
            for d in divs {
                if d.order == 0 {
                    return Err(Error::Input(format!("divisor {}: order must be >= 1", d.name)));
                }
                if d.base != *p {
                    return Err(Error::Input(format!("divisor {} does not lie over {p}", d.name)));
                }
            }
        }
        Ok(FiberBook { fibers })
    }

    pub fn fibers(&self) -> &[(ProjPoint, Vec<VerticalDivisor>)] {
        &self.fibers
    }

    pub fn get(&self, p: &ProjPoint) -> Option<&[VerticalDivisor]> {
        self.fibers.iter().find(|(q, _)| q == p).map(|(_, d)| d.as_slice())
    }

    pub fn marked_points(&self) -> impl Iterator<Item = &ProjPoint> {
        self.fibers.iter().map(|(p, _)| p)
    }

    pub fn divisors(&self) -> impl Iterator<Item = &VerticalDivisor> {
        self.fibers.iter().flat_map(|(_, d)| d)
    }
}

/// How the symmetry group acts on the quotient line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuotientAction {
    /// Möbius generators, paired index-wise with the lattice generators.
    Moebius(Vec<MoebiusElement>),
    /// Only the induced permutations of the listed fibers are known, plus
    /// whether the group acting on the line is cyclic.
    Declared { permutations: Vec<Vec<usize>>, cyclic: bool },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CxOneVariety {
    pub name: String,
    dim: usize,
    fibers: FiberBook,
    horizontals: Vec<HorizontalDivisor>,
    lattice: LatticeAutGroup,
    action: QuotientAction,
    declared_fano: bool,
    declared_log_terminal: bool,
}

/// Plain construction data for [`CxOneVariety::new`].
#[derive(Debug, Clone)]
pub struct VarietyData {
    pub name: String,
    pub dim: usize,
    pub fibers: FiberBook,
    pub horizontals: Vec<HorizontalDivisor>,
    pub lattice: LatticeAutGroup,
    pub action: QuotientAction,
    pub fano: bool,
    pub log_terminal: bool,
}

impl CxOneVariety {
    pub fn new(data: VarietyData) -> Result<Self> {
        if data.dim < 2 {
            return Err(Error::Input(format!("dimension {} < 2", data.dim)));
        }
        if data.lattice.rank() != data.dim - 1 {
            return Err(Error::Input(format!(
                "lattice rank {} does not match the torus rank {}",
                data.lattice.rank(),
                data.dim - 1
            )));
        }
        let mut names = HashSet::new();
        let all_names = data.fibers.divisors().map(|d| &d.name).chain(data.horizontals.iter().map(|h| &h.name));
        for n in all_names {
            if !names.insert(n.clone()) {
                return Err(Error::Input(format!("duplicate divisor name {n:?}")));
            }
        }
        let v = CxOneVariety {
            name: data.name,
            dim: data.dim,
            fibers: data.fibers,
            horizontals: data.horizontals,
            lattice: data.lattice,
            action: data.action,
            declared_fano: data.fano,
            declared_log_terminal: data.log_terminal,
        };
        v.check_action()?;
        Ok(v)
    }

    fn check_action(&self) -> Result<()> {
        let marked: Vec<&ProjPoint> = self.fibers.marked_points().collect();
        match &self.action {
            QuotientAction::Moebius(gens) => {
                if gens.len() != self.lattice.generators().len() {
                    return Err(Error::Input(format!(
                        "{} Möbius generators for {} lattice generators",
                        gens.len(),
                        self.lattice.generators().len()
                    )));
                }
                for g in gens {
                    for p in &marked {
                        let q = g.apply(p);
                        let (m, n) = (multiplicity(self, p), multiplicity(self, &q));
                        if m != n {
                            return Err(Error::Input(format!(
                                "{g} maps the fiber over {p} (multiplicity {m}) to {q} (multiplicity {n})"
                            )));
                        }
                    }
                }
            }
            QuotientAction::Declared { permutations, .. } => {
                for (k, perm) in permutations.iter().enumerate() {
                    let mut sorted = perm.clone();
                    sorted.sort_unstable();
                    if sorted != (0..marked.len()).collect::<Vec<_>>() {
                        return Err(Error::Input(format!(
                            "permutation {k} is not a permutation of the {} listed fibers",
                            marked.len()
                        )));
                    }
                    for (i, &j) in perm.iter().enumerate() {
                        if multiplicity(self, marked[i]) != multiplicity(self, marked[j]) {
                            return Err(Error::Input(format!(
                                "permutation {k} maps the fiber over {} to {} of different multiplicity",
                                marked[i], marked[j]
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn fibers(&self) -> &FiberBook {
        &self.fibers
    }

    pub fn horizontals(&self) -> &[HorizontalDivisor] {
        &self.horizontals
    }

    pub fn lattice(&self) -> &LatticeAutGroup {
        &self.lattice
    }

    pub fn action(&self) -> &QuotientAction {
        &self.action
    }

    pub fn is_fano(&self) -> bool {
        self.declared_fano
    }

    pub fn is_log_terminal(&self) -> bool {
        self.declared_log_terminal
    }

    pub fn is_symmetric(&self) -> bool {
        is_symmetric(&self.lattice)
    }

    /// The finite Möbius group on the quotient line, when it is given explicitly.
    pub fn moebius_group(&self, cap: usize) -> Result<Option<MoebiusGroup>> {
        match &self.action {
            QuotientAction::Moebius(gens) => closure(gens, cap).map(Some),
            QuotientAction::Declared { .. } => Ok(None),
        }
    }

    /// Orbits of the listed fibers, as index sets.
    fn marked_orbits(&self, cap: usize) -> Result<Vec<Vec<usize>>> {
        let marked: Vec<&ProjPoint> = self.fibers.marked_points().collect();
        let perms: Vec<Vec<usize>> = match &self.action {
            QuotientAction::Declared { permutations, .. } => permutations.clone(),
            QuotientAction::Moebius(gens) => gens
                .iter()
                .map(|g| {
                    marked
                        .iter()
                        .map(|p| {
                            let q = g.apply(p);
                            marked.iter().position(|r| **r == q)
                        })
                        .collect::<Option<Vec<usize>>>()
                })
                .collect::<Option<Vec<_>>>()
                .unwrap_or_default(),
        };
        let group = permutation_closure(&perms, marked.len(), cap)?;
        let mut seen = BTreeSet::new();
        let mut orbits = Vec::new();
        for i in 0..marked.len() {
            if seen.contains(&i) {
                continue;
            }
            let orbit: BTreeSet<usize> = group.iter().map(|g| g[i]).collect();
            seen.extend(orbit.iter().copied());
            orbits.push(orbit.into_iter().collect());
        }
        Ok(orbits)
    }

    /// Whether some group element maps fiber `a` to fiber `b`.
    fn some_element_maps(&self, a: &ProjPoint, b: &ProjPoint, cap: usize) -> Result<bool> {
        match &self.action {
            QuotientAction::Moebius(_) => {
                let g = self.moebius_group(cap)?.expect("explicit action");
                Ok(g.elements().iter().any(|h| h.apply(a) == *b))
            }
            QuotientAction::Declared { .. } => {
                let marked: Vec<&ProjPoint> = self.fibers.marked_points().collect();
                let i = marked.iter().position(|p| *p == a);
                let j = marked.iter().position(|p| *p == b);
                let (Some(i), Some(j)) = (i, j) else { return Ok(false) };
                Ok(self.marked_orbits(cap)?.iter().any(|o| o.contains(&i) && o.contains(&j)))
            }
        }
    }
}

fn permutation_closure(gens: &[Vec<usize>], n: usize, cap: usize) -> Result<Vec<Vec<usize>>> {
    let id: Vec<usize> = (0..n).collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::from([id.clone()]);
    let mut out = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y: Vec<usize> = x.iter().map(|&i| g[i]).collect();
            if seen.insert(y.clone()) {
                if out.len() == cap {
                    return Err(Error::NotFiniteWithinCap(cap));
                }
                out.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(out)
}

/// Largest stabilizer order over the fiber at `p`: 1 off the listed fibers,
/// 0 for a listed fiber without vertical divisors.
pub fn multiplicity(v: &CxOneVariety, p: &ProjPoint) -> u64 {
    match v.fibers.get(p) {
        Some(divs) => divs.iter().map(|d| d.order).max().unwrap_or(0),
        None => 1,
    }
}

/// Listed points whose fiber has multiplicity > 1.
pub fn non_reduced_fibers(v: &CxOneVariety) -> Vec<ProjPoint> {
    v.fibers.marked_points().filter(|p| multiplicity(v, p) > 1).cloned().collect()
}

/// `B = sum (m_P - 1)/m_P * P`, with `-inf` over fibers without vertical
/// divisors. Points of multiplicity 1 are omitted.
pub fn boundary(v: &CxOneVariety) -> MarkedCurvePair {
    let marked = v
        .fibers
        .marked_points()
        .filter_map(|p| match multiplicity(v, p) {
            0 => Some((p.clone(), BoundaryCoeff::NegInfinity)),
            1 => None,
            m => Some((p.clone(), BoundaryCoeff::Finite(Rational::new((m - 1).into(), m.into())))),
        })
        .collect();
    MarkedCurvePair::new(marked).expect("fiber points are distinct and rational-compatible")
}

/// A rational combination of points of the quotient line.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DivisorOnY {
    terms: BTreeMap<ProjPoint, Rational>,
}

impl DivisorOnY {
    pub fn new(terms: impl IntoIterator<Item = (ProjPoint, Rational)>) -> Self {
        let mut d = DivisorOnY::default();
        for (p, c) in terms {
            d.add_term(p, c);
        }
        d
    }

    pub fn add_term(&mut self, p: ProjPoint, c: Rational) {
        let e = self.terms.entry(p.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&p);
        }
    }

    pub fn degree(&self) -> Rational {
        self.terms.values().sum()
    }

    pub fn coefficient(&self, p: &ProjPoint) -> Rational {
        self.terms.get(p).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ProjPoint, &Rational)> {
        self.terms.iter()
    }

    pub fn neg(&self) -> DivisorOnY {
        DivisorOnY { terms: self.terms.iter().map(|(p, c)| (p.clone(), -c)).collect() }
    }

    /// `self >= B` pointwise; `-inf` imposes nothing, unmarked points need `>= 0`.
    pub fn dominates(&self, b: &MarkedCurvePair) -> bool {
        let at_marked = b.marked().iter().all(|(p, c)| match c {
            BoundaryCoeff::NegInfinity => true,
            BoundaryCoeff::Finite(x) => self.coefficient(p) >= *x,
        });
        let elsewhere = self.terms.iter().filter(|(p, _)| !b.points().any(|q| q == *p)).all(|(_, c)| !c.is_negative());
        at_marked && elsewhere
    }
}

/// A torus-invariant rational divisor on `X`: named prime divisors plus
/// multiples of generic fibers over unlisted points.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DivisorOnX {
    pub named: BTreeMap<String, Rational>,
    pub generic_fibers: BTreeMap<ProjPoint, Rational>,
}

impl DivisorOnX {
    pub fn zero() -> Self {
        Self::default()
    }

    fn add_named(&mut self, name: &str, c: Rational) {
        let e = self.named.entry(name.to_string()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.named.remove(name);
        }
    }

    fn add_fiber(&mut self, p: &ProjPoint, c: Rational) {
        let e = self.generic_fibers.entry(p.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.generic_fibers.remove(p);
        }
    }

    pub fn add(&self, other: &DivisorOnX) -> DivisorOnX {
        let mut out = self.clone();
        for (n, c) in &other.named {
            out.add_named(n, c.clone());
        }
        for (p, c) in &other.generic_fibers {
            out.add_fiber(p, c.clone());
        }
        out
    }

    pub fn coefficient(&self, name: &str) -> Rational {
        self.named.get(name).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.named.is_empty() && self.generic_fibers.is_empty()
    }
}

impl fmt::Display for DivisorOnY {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self.terms.iter().map(|(p, c)| format!("{}*{p}", format_rational(c))).collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl fmt::Display for DivisorOnX {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<String> = self.named.iter().map(|(n, c)| format!("{}*[{n}]", format_rational(c))).collect();
        terms.extend(self.generic_fibers.iter().map(|(p, c)| format!("{}*[fiber over {p}]", format_rational(c))));
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

pub fn is_effective(d: &DivisorOnX) -> bool {
    d.named.values().chain(d.generic_fibers.values()).all(|c| !c.is_negative())
}

/// `pi^*(c Z) = c * sum_{D over Z} mu(D) D`.
pub fn pullback(v: &CxOneVariety, z: &ProjPoint, c: &Rational) -> DivisorOnX {
    let mut out = DivisorOnX::zero();
    if c.is_zero() {
        return out;
    }
    match v.fibers.get(z) {
        Some(divs) => {
            for d in divs {
                out.add_named(&d.name, c * Rational::from_integer(d.order.into()));
            }
        }
        None => out.add_fiber(z, c.clone()),
    }
    out
}

fn pullback_divisor(v: &CxOneVariety, d: &DivisorOnY) -> DivisorOnX {
    d.terms().map(|(p, c)| pullback(v, p, c)).fold(DivisorOnX::zero(), |acc, x| acc.add(&x))
}

/// `sum_H sign * H + sum_D sign * (mu(D) - 1) D`
fn correction(v: &CxOneVariety, horizontal_sign: i64, vertical_sign: i64) -> DivisorOnX {
    let mut out = DivisorOnX::zero();
    for h in &v.horizontals {
        out.add_named(&h.name, Rational::from_integer(horizontal_sign.into()));
    }
    for d in v.fibers.divisors() {
        let k = Rational::from_integer(((d.order as i64 - 1) * vertical_sign).into());
        out.add_named(&d.name, k);
    }
    out
}

fn check_degree(d: &DivisorOnY, expected: i64) -> Result<()> {
    let deg = d.degree();
    if deg != Rational::from_integer(expected.into()) {
        return Err(Error::Degree { expected: expected.to_string(), found: format_rational(&deg) });
    }
    Ok(())
}

/// `pi^*K_Y - sum_H H + sum_D (mu(D) - 1) D` for a canonical divisor `K_Y` of degree -2.
pub fn canonical_divisor(v: &CxOneVariety, k_y: &DivisorOnY) -> Result<DivisorOnX> {
    check_degree(k_y, -2)?;
    Ok(pullback_divisor(v, k_y).add(&correction(v, -1, 1)))
}

/// `pi^*Q_Y + sum_H H + sum_D (1 - mu(D)) D` for an invariant `Q_Y` of degree 2.
/// It is effective exactly when `Q_Y >= B`.
pub fn anticanonical_lift(v: &CxOneVariety, q_y: &DivisorOnY, cap: usize) -> Result<DivisorOnX> {
    check_degree(q_y, 2)?;
    check_divisor_invariant(v, q_y, cap)?;
    Ok(pullback_divisor(v, q_y).add(&correction(v, 1, -1)))
}

fn check_divisor_invariant(v: &CxOneVariety, d: &DivisorOnY, cap: usize) -> Result<()> {
    match v.moebius_group(cap)? {
        Some(g) => {
            for (p, c) in d.terms() {
                for h in g.generators() {
                    let q = h.apply(p);
                    if d.coefficient(&q) != *c {
                        return Err(Error::NotInvariant(format!(
                            "{h} maps {p} (coefficient {}) to {q} (coefficient {})",
                            format_rational(c),
                            format_rational(&d.coefficient(&q))
                        )));
                    }
                }
            }
        }
        None => {
            // only the permutation of listed fibers is known
            let marked: Vec<&ProjPoint> = v.fibers.marked_points().collect();
            for orbit in v.marked_orbits(cap)? {
                let c0 = d.coefficient(marked[orbit[0]]);
                if orbit.iter().any(|&i| d.coefficient(marked[i]) != c0) {
                    return Err(Error::NotInvariant(format!(
                        "coefficients differ along the orbit of {}",
                        marked[orbit[0]]
                    )));
                }
            }
        }
    }
    Ok(())
}

/// The global log canonical threshold of `X`, with how it was obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Glct {
    /// `min(1, lct_G(P^1, B))`, or a lower bound for it
    pub value: Rational,
    /// the threshold of the quotient pair (explicit action only)
    pub quotient: Option<LctResult>,
    /// true when only a lower bound could be computed (declared action)
    pub lower_bound: bool,
}

fn check_preconditions(v: &CxOneVariety) -> Result<()> {
    if !v.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if !v.declared_fano {
        return Err(Error::NotFano);
    }
    if !v.declared_log_terminal {
        return Err(Error::NotLogTerminal);
    }
    Ok(())
}

/// `lct_G(X) = min(1, lct_G(P^1, B))` for a symmetric log terminal Fano variety.
pub fn glct(v: &CxOneVariety, cap: usize) -> Result<Glct> {
    check_preconditions(v)?;
    let b = boundary(v);
    let fd = finite_degree(&b);
    if fd.has_neg_infinity {
        return Err(Error::MorphismHypothesisViolated);
    }
    match &v.action {
        QuotientAction::Moebius(_) => {
            let g = v.moebius_group(cap)?.expect("explicit action");
            let r = lct_g(&b, &g)?;
            Ok(Glct { value: r.value.capped_at_one(), quotient: Some(r), lower_bound: false })
        }
        QuotientAction::Declared { cyclic, .. } => {
            let two = Rational::from_integer(2.into());
            if fd.degree >= two {
                return Ok(Glct { value: Rational::one(), quotient: None, lower_bound: false });
            }
            let room = &two - &fd.degree;
            let marked: Vec<&ProjPoint> = v.fibers.marked_points().collect();
            // unlisted orbits have at least 2 points unless the group is cyclic
            let smallest_free = if *cyclic { 1 } else { 2 };
            let mut best = Rational::from_integer(smallest_free.into()) / &room;
            for orbit in v.marked_orbits(cap)? {
                let c = b.coefficient_at(marked[orbit[0]]);
                let c = c.finite().cloned().unwrap_or_else(Rational::zero);
                let val = Rational::from_integer(orbit.len().into()) * (Rational::one() - c) / &room;
                best = best.min(val);
            }
            Ok(Glct { value: best.min(Rational::one()), quotient: None, lower_bound: true })
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Route {
    /// at least three non-reduced fibers
    ThreeNonReducedFibers,
    /// exactly two non-reduced fibers, exchanged by the group
    SwappedNonReducedPair,
    /// the group acts on the quotient line without a fixed point
    FixedPointFreeAction,
    /// `lct_G(X) > dim / (dim + 1)` (Tian's criterion)
    TianThreshold,
}

impl Route {
    pub fn slug(&self) -> &'static str {
        match self {
            Route::ThreeNonReducedFibers => "three-non-reduced-fibers",
            Route::SwappedNonReducedPair => "swapped-non-reduced-pair",
            Route::FixedPointFreeAction => "fixed-point-free-action",
            Route::TianThreshold => "tian-threshold",
        }
    }

    pub fn from_slug(s: &str) -> Option<Route> {
        [Route::ThreeNonReducedFibers, Route::SwappedNonReducedPair, Route::FixedPointFreeAction, Route::TianThreshold]
            .into_iter()
            .find(|r| r.slug() == s)
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.slug())
    }
}

/// Outcome of the Kähler–Einstein test. `certified == false` only means
/// the sufficient criteria did not apply.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KeVerdict {
    pub certified: bool,
    pub route: Option<Route>,
    pub details: String,
    pub non_reduced: Vec<ProjPoint>,
    pub glct: Option<Glct>,
    pub threshold: Rational,
}

pub fn ke_verdict(v: &CxOneVariety, cap: usize) -> Result<KeVerdict> {
    check_preconditions(v)?;
    let nr = non_reduced_fibers(v);
    let threshold = Rational::new(v.dim.into(), (v.dim + 1).into());
    let glct_result = glct(v, cap);
    let glct = match &glct_result {
        Ok(g) => Some(g.clone()),
        Err(Error::MorphismHypothesisViolated) => None,
        Err(e) => return Err(e.clone()),
    };
    let verdict = |route: Option<Route>, details: String| KeVerdict {
        certified: route.is_some(),
        route,
        details,
        non_reduced: nr.clone(),
        glct: glct.clone(),
        threshold: threshold.clone(),
    };

    if nr.len() >= 3 {
        return Ok(verdict(Some(Route::ThreeNonReducedFibers), format!("{} non-reduced fibers", nr.len())));
    }
    if nr.len() == 2 && v.some_element_maps(&nr[0], &nr[1], cap)? {
        return Ok(verdict(
            Some(Route::SwappedNonReducedPair),
            format!("the non-reduced fibers over {} and {} are exchanged", nr[0], nr[1]),
        ));
    }
    let fixed_point_free = match &v.action {
        QuotientAction::Moebius(_) => !has_global_fixed_point(&v.moebius_group(cap)?.expect("explicit action")),
        QuotientAction::Declared { cyclic, .. } => !cyclic,
    };
    if fixed_point_free {
        return Ok(verdict(
            Some(Route::FixedPointFreeAction),
            "the group acts on the quotient line without a fixed point".into(),
        ));
    }
    let g = glct_result?;
    let bound = if g.lower_bound { "lower bound " } else { "" };
    if g.value > threshold {
        Ok(verdict(
            Some(Route::TianThreshold),
            format!("glct {bound}{} > {}", format_rational(&g.value), format_rational(&threshold)),
        ))
    } else {
        Ok(verdict(
            None,
            format!(
                "{} non-reduced fiber(s), the group fixes a point of the quotient line, and glct {bound}{} <= {}",
                nr.len(),
                format_rational(&g.value),
                format_rational(&threshold)
            ),
        ))
    }
}

impl Glct {
    pub fn quotient_value(&self) -> Option<&LctValue> {
        self.quotient.as_ref().map(|q| &q.value)
    }
}
