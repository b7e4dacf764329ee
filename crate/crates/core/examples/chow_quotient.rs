//! Chow quotient of a toric variety by a subtorus: the coarsest common
//! refinement of the projected cones.

use num_bigint::BigInt;
use tvlct::exact::IntMatrix;
use tvlct::polyhedral::{Cone, Fan, DEFAULT_PATTERN_CAP};
use tvlct::quotients::chow_quotient_fan;

fn cone(gens: &[[i64; 2]]) -> Cone {
    let gens: Vec<Vec<BigInt>> = gens.iter().map(|g| g.iter().map(|&x| BigInt::from(x)).collect()).collect();
    Cone::from_generators(2, &gens).unwrap()
}

fn main() {
    let p2 = Fan::new(2, vec![cone(&[[1, 0], [0, 1]]), cone(&[[0, 1], [-1, -1]]), cone(&[[-1, -1], [1, 0]])]).unwrap();
    let hirzebruch = Fan::new(
        2,
        vec![cone(&[[1, 0], [0, 1]]), cone(&[[0, 1], [-1, 2]]), cone(&[[-1, 2], [0, -1]]), cone(&[[0, -1], [1, 0]])],
    )
    .unwrap();
    for (name, fan, p) in [("P2", p2, [[1, -1]]), ("F2", hirzebruch, [[0, 1]])] {
        let p = IntMatrix::from_i64(&[&p[0]]);
        let q = chow_quotient_fan(&fan, &p, DEFAULT_PATTERN_CAP).unwrap();
        println!("{name} under the projection {p}: {q}");
    }
}
