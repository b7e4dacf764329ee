//! Pulling divisors back from the quotient line: canonical divisor, the
//! lift of an invariant Q_Y, and when that lift is effective.

use tvlct::exact::{int, rat, ProjPoint};
use tvlct::group::DEFAULT_GROUP_CAP;
use tvlct::tvariety::{anticanonical_lift, boundary, canonical_divisor, is_effective, DivisorOnY};

#[path = "support/quadric.rs"]
mod quadric;

fn main() {
    let v = quadric::quadric();
    let (zero, inf, minus_one) =
        (ProjPoint::affine(int(0).into()), ProjPoint::infinity(), ProjPoint::affine(int(-1).into()));
    println!("B = {}", boundary(&v));

    let k_y = DivisorOnY::new([(zero.clone(), int(-1)), (inf.clone(), int(-1))]);
    println!("K_X = {}", canonical_divisor(&v, &k_y).unwrap());

    for q in [
        DivisorOnY::new([(zero.clone(), int(1)), (inf.clone(), int(1))]),
        DivisorOnY::new([(zero, int(1)), (minus_one.clone(), rat(1, 2)), (inf, rat(1, 2))]),
        DivisorOnY::new([(minus_one, rat(1, 4)), (ProjPoint::affine(int(1).into()), rat(7, 4))]),
    ] {
        let lift = anticanonical_lift(&v, &q, DEFAULT_GROUP_CAP).unwrap();
        println!("Q_Y = {q}");
        println!("    lift {lift}");
        println!("    effective: {}, Q_Y >= B: {}", is_effective(&lift), q.dominates(&boundary(&v)));
    }
}
