//! Randomised suites with a fixed seed: matrix normal forms, the
//! effectivity criterion for anticanonical lifts, thresholds against an
//! independent concentration oracle, conjugation invariance, polystability
//! certificates and the Kähler–Einstein routes.

mod common;

use common::suites;

const CASES: u32 = 256;

macro_rules! suite {
    ($($name:ident),* $(,)?) => {
        $(
            #[test]
            fn $name() {
                if let Err(e) = suites::$name(CASES) {
                    panic!("{e}");
                }
            }
        )*
    };
}

suite!(
    smith_identity,
    effectivity_iff_dominates_boundary,
    lct_matches_concentration_oracle,
    lct_invariant_under_conjugation,
    stiemke_certificates_are_sound,
    polystability_matches_dual_cone_oracle,
    polystability_invariant_under_change_of_basis,
    limit_support_shrinks,
    non_reduced_fibers_are_the_positive_boundary,
    combinatorial_routes_imply_glct_one,
);
