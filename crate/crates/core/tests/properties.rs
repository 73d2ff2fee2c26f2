mod common;

use common::props;

macro_rules! property {
    ($name:ident) => {
        #[test]
        fn $name() {
            if let Err(e) = props::$name() {
                panic!("{e}");
            }
        }
    };
}

property!(reduction_is_ring_hom);
property!(discriminant_detects_squares);
property!(roots_mod_p_match_brute_force);
property!(triangular_charpoly_and_det);
property!(dimension_formula);
property!(hecke_operators_commute);
property!(newform_multiplicativity);
property!(kohnen_plus_space);
property!(jacobi_elliptic_product_is_bilinear);
property!(maass_check_symmetry);
property!(reduction_invariants);
property!(spinor_linear_coefficient);
property!(bernoulli_matches_oracle);
property!(bernoulli_mod_p_matches_rational);
property!(bernoulli_parity);
property!(remove_euler_composes);
property!(symbol_sign_dimensions);
property!(symbol_hecke_star);
property!(l_alg_basis_invariance);
property!(trivial_twist_is_untwisted);
property!(trace_check_matches_modpow);
property!(records_round_trip);
