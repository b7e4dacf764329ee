use tvlct::exact::{int, IntMatrix, ProjPoint};
use tvlct::group::{LatticeAutGroup, MoebiusElement};
use tvlct::tvariety::{CxOneVariety, FiberBook, QuotientAction, VarietyData, VerticalDivisor};

/// The quadric threefold with its 2-torus action: two reduced divisors over
/// 0 and over inf, one of order 2 over -1.
pub fn quadric() -> CxOneVariety {
    let d = |name: &str, p: &ProjPoint, order| VerticalDivisor { name: name.into(), base: p.clone(), order };
    let (zero, inf, minus_one) =
        (ProjPoint::affine(int(0).into()), ProjPoint::infinity(), ProjPoint::affine(int(-1).into()));
    let fibers = vec![
        (zero.clone(), vec![d("u1", &zero, 1), d("v1", &zero, 1)]),
        (inf.clone(), vec![d("u2", &inf, 1), d("v2", &inf, 1)]),
        (minus_one.clone(), vec![d("u0", &minus_one, 2)]),
    ];
    CxOneVariety::new(VarietyData {
        name: "quadric threefold".into(),
        dim: 3,
        fibers: FiberBook::new(fibers).unwrap(),
        horizontals: vec![],
        lattice: LatticeAutGroup::new(2, vec![IntMatrix::from_i64(&[&[-1, 0], &[0, -1]])]).unwrap(),
        action: QuotientAction::Moebius(vec![MoebiusElement::identity()]),
        fano: true,
        log_terminal: true,
    })
    .unwrap()
}
