//! Finite groups of Möbius transformations: closure, type, exceptional orbits.

use tvlct::group::{classify, closure, exceptional_orbits, MoebiusElement, DEFAULT_GROUP_CAP};

fn main() {
    let groups = [
        ("x -> -x", vec![[[-1, 0], [0, 1]]]),
        ("x -> 1/(1-x)", vec![[[0, 1], [-1, 1]]]),
        ("x -> -x, x -> 1/x", vec![[[-1, 0], [0, 1]], [[0, 1], [1, 0]]]),
        ("S3 permuting 0, 1, inf", vec![[[0, 1], [-1, 1]], [[0, 1], [1, 0]]]),
    ];
    for (name, gens) in groups {
        let gens: Vec<MoebiusElement> = gens.into_iter().map(|m| MoebiusElement::from_i64(m).unwrap()).collect();
        let g = closure(&gens, DEFAULT_GROUP_CAP).unwrap();
        println!("<{name}>: order {}, {}", g.order(), classify(&g));
        for o in exceptional_orbits(&g) {
            println!("    exceptional orbit {o}");
        }
    }
}
