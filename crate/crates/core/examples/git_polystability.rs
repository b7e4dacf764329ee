//! Polystable loci of torus representations, with certificates, and a
//! comparison against a stated locus.

use tvlct::exact::IntMatrix;
use tvlct::quotients::{compare_with_claim, polystable_locus, WeightMatrix};

fn main() {
    let labels = ["alpha", "beta", "gamma", "delta"].map(String::from).to_vec();
    let w = WeightMatrix::new(IntMatrix::from_i64(&[&[-1, 1, -1, 1], &[1, -1, -1, 1]]), labels).unwrap();
    let locus = polystable_locus(&w).unwrap();
    for e in &locus {
        println!("{:<26} {:<5} {}", format!("{:?}", w.support_labels(&e.support)), e.polystable, e.cert);
    }

    // "alpha*beta != 0 or gamma*delta != 0"
    let claim = vec![w.support(&["alpha", "beta"]).unwrap(), w.support(&["gamma", "delta"]).unwrap()];
    for m in compare_with_claim(&locus, &claim) {
        println!("stated {} but computed {} on {:?}", m.claimed, m.computed, w.support_labels(&m.support));
    }
}
