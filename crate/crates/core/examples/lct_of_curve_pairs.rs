//! Equivariant log canonical thresholds of pairs (P^1, B), and the
//! valuable criterion.

use tvlct::curvepair::{is_valuable, lct_g, BoundaryCoeff, MarkedCurvePair};
use tvlct::exact::{int, rat, ProjPoint};
use tvlct::group::{closure, MoebiusElement, MoebiusGroup, DEFAULT_GROUP_CAP};

fn main() {
    let half = BoundaryCoeff::Finite(rat(1, 2));
    let b = MarkedCurvePair::new(vec![(ProjPoint::affine(int(0).into()), half.clone()), (ProjPoint::infinity(), half)])
        .unwrap();
    let swap = closure(&[MoebiusElement::from_i64([[0, 1], [1, 0]]).unwrap()], DEFAULT_GROUP_CAP).unwrap();

    for (name, g) in [("trivial", MoebiusGroup::trivial()), ("<1/x>", swap)] {
        let lct = lct_g(&b, &g).unwrap();
        println!("B = {b}, G = {name}: lct = {}", lct.value);
        for c in &lct.minimizers {
            println!("    attained on {c}");
        }
        let v = is_valuable(&b, &g).unwrap();
        println!("    valuable: {}", v.valuable);
    }
}
