//! Symmetry of a torus action: a finite group acting on the character
//! lattice fixes only 0.

use tvlct::exact::IntMatrix;
use tvlct::group::{fixed_sublattice, is_symmetric, LatticeAutGroup};

fn main() {
    let rotation = IntMatrix::from_i64(&[&[0, -1], &[1, -1]]);
    let reflection = IntMatrix::from_i64(&[&[0, 1], &[1, 0]]);
    for (name, gens) in [("S3", vec![rotation, reflection.clone()]), ("reflection", vec![reflection])] {
        let g = LatticeAutGroup::new(2, gens).unwrap();
        let fixed: Vec<String> = fixed_sublattice(&g).iter().map(|v| format!("{v:?}")).collect();
        println!("{name}: symmetric {}, fixed sublattice basis [{}]", is_symmetric(&g), fixed.join(", "));
    }
}
