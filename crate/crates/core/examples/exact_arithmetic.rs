//! Integer normal forms and points of P^1 over quadratic fields.

use tvlct::exact::{hermite_normal_form, int, quadratic_roots, smith_normal_form, IntMatrix, ProjPoint};

fn main() {
    let a = IntMatrix::from_i64(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
    let s = smith_normal_form(&a);
    println!("A =\n{a}");
    println!("invariant factors: {:?}", s.invariant_factors().iter().map(|x| x.to_string()).collect::<Vec<_>>());
    assert_eq!(s.u.mul(&a).mul(&s.v), s.d);
    println!("HNF =\n{}", hermite_normal_form(&a));

    // fixed points of x -> 1/(1 - x): t^2 - t + 1 = 0, roots in Q(sqrt(-3))
    for r in quadratic_roots(&int(1), &int(-1), &int(1)).unwrap() {
        println!("root {r}  ->  point {}", ProjPoint::affine(r.clone()));
    }
}
