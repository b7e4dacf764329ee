//! Randomised suites shared by the `properties` and `acceptance` targets.
//! Each runs `cases` inputs under the fixed seed of [`config`].

use super::*;
use num_bigint::BigInt;
use num_traits::{One, Signed};
use proptest::prelude::*;
use proptest::test_runner::{TestError, TestRunner};
use tvlct::curvepair::{lct_g, LctValue};
use tvlct::exact::{smith_normal_form, solve_positive_combination, IntMatrix, ProjPoint, Rational, StiemkeAlternative};
use tvlct::group::{LatticeAutGroup, MoebiusGroup, DEFAULT_GROUP_CAP};
use tvlct::polyhedral::Cone;
use tvlct::quotients::{is_polystable, limit_support, LimitSupport, StabilityCert, WeightMatrix};
use tvlct::tvariety::{
    anticanonical_lift, boundary, glct, is_effective, ke_verdict, non_reduced_fibers, CxOneVariety, DivisorOnY,
    FiberBook, QuotientAction, Route, VarietyData, VerticalDivisor,
};

pub type Outcome = Result<(), TestError<String>>;

fn render<T: std::fmt::Debug>(r: Result<(), TestError<T>>) -> Outcome {
    r.map_err(|e| match e {
        TestError::Abort(why) => TestError::Abort(why),
        TestError::Fail(why, input) => TestError::Fail(why, format!("{input:?}")),
    })
}

fn matrix(rows: usize, cols: usize, entries: &[i64]) -> IntMatrix {
    let data = (0..rows).map(|i| (0..cols).map(|j| BigInt::from(entries[i * cols + j])).collect()).collect();
    IntMatrix::from_rows(data, cols).unwrap()
}

/// A dimension-2 variety whose fibers are whole orbits of the group, with
/// multiplicity constant along each orbit.
pub fn random_variety(group_idx: usize, seeds: &[(usize, u64, bool)]) -> (CxOneVariety, MoebiusGroup) {
    let mut groups = small_groups();
    let (_, gens) = groups.swap_remove(group_idx % groups.len());
    let g = group(&gens);
    let pts = candidate_points();
    let mut fibers: Vec<(ProjPoint, Vec<VerticalDivisor>)> = vec![];
    for (k, &(s, order, with_reduced)) in seeds.iter().enumerate() {
        let p = &pts[s % pts.len()];
        if fibers.iter().any(|(q, _)| q == p) {
            continue;
        }
        for (j, q) in naive_orbit(&g, p).into_iter().enumerate() {
            let mut divs = vec![VerticalDivisor { name: format!("d{k}_{j}"), base: q.clone(), order }];
            if with_reduced {
                divs.push(VerticalDivisor { name: format!("r{k}_{j}"), base: q.clone(), order: 1 });
            }
            fibers.push((q, divs));
        }
    }
    let moebius = if gens.is_empty() { vec![m([[1, 0], [0, 1]])] } else { gens.clone() };
    let lattice = vec![IntMatrix::from_i64(&[&[-1]]); moebius.len()];
    let v = CxOneVariety::new(VarietyData {
        name: "random".into(),
        dim: 2,
        fibers: FiberBook::new(fibers).unwrap(),
        horizontals: vec![],
        lattice: LatticeAutGroup::new(1, lattice).unwrap(),
        action: QuotientAction::Moebius(moebius),
        fano: true,
        log_terminal: true,
    })
    .unwrap();
    (v, g)
}

/// An invariant divisor of degree 2: orbit sums with coefficients `k/4`,
/// the last orbit absorbing whatever degree is left.
pub fn invariant_degree_two(g: &MoebiusGroup, orbits: &[(usize, i64)], last: usize) -> DivisorOnY {
    let pts = candidate_points();
    let mut q = DivisorOnY::default();
    for &(s, c) in orbits {
        for p in naive_orbit(g, &pts[s % pts.len()]) {
            q.add_term(p, rat(c, 4));
        }
    }
    let last_orbit = naive_orbit(g, &pts[last % pts.len()]);
    let rest = (Rational::from_integer(2.into()) - q.degree()) / Rational::from_integer(last_orbit.len().into());
    for p in last_orbit {
        q.add_term(p, rest.clone());
    }
    q
}

fn seeds() -> impl Strategy<Value = Vec<(usize, u64, bool)>> {
    prop::collection::vec((0usize..8, 1u64..=3, any::<bool>()), 0..3)
}

fn columns(d: usize, cols: &[Vec<i64>]) -> Vec<Vec<i64>> {
    cols.iter().map(|c| c[..d].to_vec()).collect()
}

/// `U A V = D` with `U`, `V` unimodular and each invariant factor dividing the next.
pub fn smith_identity(cases: u32) -> Outcome {
    let strategy = (1usize..=4, 1usize..=4, prop::collection::vec(-9i64..=9, 16));
    render(TestRunner::new(config(cases)).run(&strategy, |(rows, cols, entries)| {
        let a = matrix(rows, cols, &entries);
        let s = smith_normal_form(&a);
        prop_assert_eq!(s.u.mul(&a).mul(&s.v), s.d.clone());
        prop_assert!(s.u.is_unimodular() && s.v.is_unimodular());
        let f = s.invariant_factors();
        for w in f.windows(2) {
            prop_assert!((&w[1] % &w[0]) == BigInt::from(0));
        }
        Ok(())
    }))
}

/// The lift of an invariant `Q_Y` of degree 2 is effective exactly when `Q_Y >= B`.
pub fn effectivity_iff_dominates_boundary(cases: u32) -> Outcome {
    let strategy = (0usize..8, seeds(), prop::collection::vec((0usize..8, -4i64..=8), 0..4), 0usize..8);
    render(TestRunner::new(config(cases)).run(&strategy, |(group_idx, seeds, orbits, last)| {
        let (v, g) = random_variety(group_idx, &seeds);
        let q = invariant_degree_two(&g, &orbits, last);
        let lift = anticanonical_lift(&v, &q, DEFAULT_GROUP_CAP).unwrap();
        prop_assert_eq!(is_effective(&lift), q.dominates(&boundary(&v)), "Q_Y = {:?}", q);
        Ok(())
    }))
}

/// The orbit-class formula against the concentration oracle, at most 4
/// marked points and groups of order at most 6.
pub fn lct_matches_concentration_oracle(cases: u32) -> Outcome {
    let strategy = (0usize..8, prop::collection::vec(0usize..8, 0..4), prop::collection::vec(0i64..=4, 4));
    render(TestRunner::new(config(cases)).run(&strategy, |(group_idx, seeds, quarters)| {
        let (_, gens) = small_groups().swap_remove(group_idx);
        let g = group(&gens);
        prop_assert!(g.order() <= 6);
        let pair = invariant_pair(&g, &seeds, &quarters, 4);
        prop_assert!(pair.marked().len() <= 4);
        let lct = lct_g(&pair, &g).unwrap();
        match oracle_lct(&pair, &g) {
            Some(x) => prop_assert_eq!(lct.value, LctValue::Finite(x), "{}", pair),
            None => prop_assert_eq!(lct.value, LctValue::Infinite),
        }
        Ok(())
    }))
}

/// Moving the pair and conjugating the group by the same `h` keeps the threshold.
pub fn lct_invariant_under_conjugation(cases: u32) -> Outcome {
    let strategy = (
        0usize..8,
        prop::collection::vec(0usize..8, 0..4),
        prop::collection::vec(0i64..=4, 4),
        prop::array::uniform4(-3i64..=3),
    );
    render(TestRunner::new(config(cases)).run(&strategy, |(group_idx, seeds, quarters, h)| {
        prop_assume!(h[0] * h[3] != h[1] * h[2]);
        let h = m([[h[0], h[1]], [h[2], h[3]]]);
        let (_, gens) = small_groups().swap_remove(group_idx);
        let g = group(&gens);
        let pair = invariant_pair(&g, &seeds, &quarters, 4);
        let before = lct_g(&pair, &g).unwrap().value;
        let after = lct_g(&pair.transform(&h), &g.conjugate_by(&h)).unwrap().value;
        prop_assert_eq!(before, after);
        Ok(())
    }))
}

/// Both sides of the alternative, re-checked on the raw integer columns.
pub fn stiemke_certificates_are_sound(cases: u32) -> Outcome {
    let strategy = (1usize..=3, prop::collection::vec(prop::collection::vec(-3i64..=3, 3), 1..=6));
    render(TestRunner::new(config(cases)).run(&strategy, |(d, cols)| {
        let cols = columns(d, &cols);
        match solve_positive_combination(&weight_matrix(&cols, d)) {
            StiemkeAlternative::Positive(l) => prop_assert!(check_positive(&cols, &l)),
            StiemkeAlternative::Certificate(v) => prop_assert!(check_destabilizer(&cols, &v)),
        }
        Ok(())
    }))
}

/// Hilbert–Mumford by exhaustion: the only 1-PS worth testing are the
/// generators of the dual cone of the active weights.
pub fn polystability_matches_dual_cone_oracle(cases: u32) -> Outcome {
    let strategy = (1usize..=2, prop::collection::vec(prop::collection::vec(-3i64..=3, 2), 6), 0u32..64);
    render(TestRunner::new(config(cases)).run(&strategy, |(d, cols, mask)| {
        let cols = columns(d, &cols);
        let w = WeightMatrix::unlabelled(weight_matrix(&cols, d));
        let s: Vec<usize> = (0..6).filter(|i| mask >> i & 1 == 1).collect();
        let sub: Vec<Vec<i64>> = s.iter().map(|&i| cols[i].clone()).collect();
        let (ok, cert) = is_polystable(&w, &s).unwrap();
        let active: Vec<Vec<BigInt>> = s.iter().map(|&i| w.weight(i)).collect();
        let dual = Cone::from_halfspaces(d, active, vec![]).unwrap();
        let destabilized = dual.generators().iter().any(|v| check_destabilizer(&sub, v));
        prop_assert_eq!(ok, !destabilized);
        match cert {
            StabilityCert::PositiveCombination(l) => {
                let lambda: Vec<Rational> = l.into_iter().map(|(_, x)| x).collect();
                prop_assert!(s.is_empty() || check_positive(&sub, &lambda));
            }
            StabilityCert::Destabilizer(v) => {
                prop_assert!(check_destabilizer(&sub, &v));
                match limit_support(&w, &s, &v).unwrap() {
                    LimitSupport::Support(t) => prop_assert!(t.len() < s.len()),
                    LimitSupport::Diverges => prop_assert!(false, "destabilizer limit diverges"),
                }
            }
        }
        Ok(())
    }))
}

/// Replacing `W` by `U W` for unimodular `U` keeps every verdict.
pub fn polystability_invariant_under_change_of_basis(cases: u32) -> Outcome {
    let strategy = (
        prop::collection::vec(prop::collection::vec(-3i64..=3, 2), 1..=5),
        prop::collection::vec((0usize..2, -2i64..=2), 0..4),
    );
    render(TestRunner::new(config(cases)).run(&strategy, |(cols, ops)| {
        let w = WeightMatrix::unlabelled(weight_matrix(&cols, 2));
        let mut u = IntMatrix::identity(2);
        for (row, k) in ops {
            let mut e = IntMatrix::identity(2);
            e[(row, 1 - row)] = BigInt::from(k);
            u = e.mul(&u);
        }
        let s: Vec<usize> = (0..cols.len()).collect();
        prop_assert_eq!(is_polystable(&w, &s).unwrap().0, is_polystable(&w.transform(&u), &s).unwrap().0);
        Ok(())
    }))
}

/// Limits only lose coordinates, and the trivial 1-PS changes nothing.
pub fn limit_support_shrinks(cases: u32) -> Outcome {
    let strategy =
        (prop::collection::vec(prop::collection::vec(-3i64..=3, 2), 1..=5), prop::collection::vec(-2i64..=2, 2));
    render(TestRunner::new(config(cases)).run(&strategy, |(cols, v)| {
        let w = WeightMatrix::unlabelled(weight_matrix(&cols, 2));
        let s: Vec<usize> = (0..cols.len()).collect();
        let v: Vec<BigInt> = v.into_iter().map(BigInt::from).collect();
        if let LimitSupport::Support(t) = limit_support(&w, &s, &v).unwrap() {
            prop_assert!(t.iter().all(|i| s.contains(i)));
        }
        let zero = [BigInt::from(0), BigInt::from(0)];
        prop_assert_eq!(limit_support(&w, &s, &zero).unwrap(), LimitSupport::Support(s));
        Ok(())
    }))
}

pub fn non_reduced_fibers_are_the_positive_boundary(cases: u32) -> Outcome {
    let strategy = (0usize..8, seeds());
    render(TestRunner::new(config(cases)).run(&strategy, |(group_idx, seeds)| {
        let (v, _) = random_variety(group_idx, &seeds);
        let mut nr = non_reduced_fibers(&v);
        let mut support: Vec<ProjPoint> = boundary(&v)
            .marked()
            .iter()
            .filter(|(_, c)| c.finite().is_some_and(|x| x.is_positive()))
            .map(|(p, _)| p.clone())
            .collect();
        nr.sort();
        support.sort();
        prop_assert_eq!(nr, support);
        Ok(())
    }))
}

/// The three combinatorial routes certify only where glct is already 1.
pub fn combinatorial_routes_imply_glct_one(cases: u32) -> Outcome {
    let strategy = (0usize..8, seeds());
    render(TestRunner::new(config(cases)).run(&strategy, |(group_idx, seeds)| {
        let (v, _) = random_variety(group_idx, &seeds);
        let ke = ke_verdict(&v, DEFAULT_GROUP_CAP).unwrap();
        let g = glct(&v, DEFAULT_GROUP_CAP).unwrap();
        if let Some(route) = ke.route {
            if route != Route::TianThreshold {
                prop_assert!(g.value.is_one(), "route {} but glct {}", route, g.value);
            }
        }
        Ok(())
    }))
}
