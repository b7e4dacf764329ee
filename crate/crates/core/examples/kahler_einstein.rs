//! A symmetric complexity-one threefold built in code: boundary on the
//! quotient line, glct and the Kähler–Einstein verdict with its route.

use tvlct::exact::{int, IntMatrix, ProjPoint};
use tvlct::group::{LatticeAutGroup, MoebiusElement, DEFAULT_GROUP_CAP};
use tvlct::tvariety::{
    boundary, glct, ke_verdict, non_reduced_fibers, CxOneVariety, FiberBook, QuotientAction, VarietyData,
    VerticalDivisor,
};

fn main() {
    // over 0, inf and -1: a reduced divisor and one of order 2
    let points = [ProjPoint::affine(int(0).into()), ProjPoint::infinity(), ProjPoint::affine(int(-1).into())];
    let fibers = points
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let d = |name: &str, order| VerticalDivisor { name: format!("{name}{i}"), base: p.clone(), order };
            (p.clone(), vec![d("u", 1), d("v", 2)])
        })
        .collect();
    let v = CxOneVariety::new(VarietyData {
        name: "bidegree (1,2) divisor".into(),
        dim: 3,
        fibers: FiberBook::new(fibers).unwrap(),
        horizontals: vec![],
        lattice: LatticeAutGroup::new(
            2,
            vec![IntMatrix::from_i64(&[&[0, -1], &[1, -1]]), IntMatrix::from_i64(&[&[0, 1], &[1, 0]])],
        )
        .unwrap(),
        action: QuotientAction::Moebius(vec![
            MoebiusElement::from_i64([[1, 1], [-1, 0]]).unwrap(),
            MoebiusElement::from_i64([[0, 1], [1, 0]]).unwrap(),
        ]),
        fano: true,
        log_terminal: true,
    })
    .unwrap();

    println!("{}", v.name);
    println!("  symmetric: {}", v.is_symmetric());
    println!("  boundary: {}", boundary(&v));
    println!("  non-reduced fibers: {}", non_reduced_fibers(&v).len());
    println!("  glct: {}", glct(&v, DEFAULT_GROUP_CAP).unwrap().value);
    let ke = ke_verdict(&v, DEFAULT_GROUP_CAP).unwrap();
    match ke.route {
        Some(route) if ke.certified => println!("  Kähler–Einstein: certified via {route}"),
        _ => println!("  Kähler–Einstein: inconclusive ({})", ke.details),
    }
}
