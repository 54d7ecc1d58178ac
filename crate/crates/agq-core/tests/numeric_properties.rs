use agq_core::apcomplex::{ApComplex, ApReal};
use agq_core::characters::{chi_12, chi_20, offset};
use agq_core::lvalues::{mellin_asymptotic_check, Terms};
use agq_core::rational::frac;
use agq_core::unity::*;
use agq_core::PeriodicCharacter;
use proptest::prelude::*;

fn mellin_residual(chi: &PeriodicCharacter, t_den: i64) -> ApReal {
    mellin_asymptotic_check(chi, &frac(1, t_den), Terms::Optimal, 256).unwrap().residual
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn kashaev_matches_multisum(n in 1usize..=60) {
        let x = eval_x_unity(2, 0, n, 256).unwrap();
        let k = kashaev_double_sum(n, 256).unwrap();
        prop_assert!(x.sub(&k).abs().div(&k.abs()) < ApReal::pow2(-128, 256));
    }

    #[test]
    fn omega_conjugate_product(n in 1usize..=50) {
        prop_assert!(verify_omega_identities(n, 256).unwrap().passed());
    }

    #[test]
    fn theta_shift_by_one(m in 1usize..=4, a_seed in 0usize..4, re in -8i64..8, im in 4i64..16) {
        let a = a_seed % m;
        let bits = 160;
        let tau = ApComplex::new(ApReal::from_rational(&frac(re, 8), bits), ApReal::from_rational(&frac(im, 8), bits));
        let next = tau.add(&ApComplex::one(bits));
        let ratio = theta_phi(m, a, &next, bits).unwrap().div(&theta_phi(m, a, &tau, bits).unwrap());
        let c = offset(m, a);
        let phase = cis_pi(&frac(c * c, 4 * (2 * m as i64 + 1)), bits);
        prop_assert!(ratio.sub(&phase).max_abs() < ApReal::pow2(-120, bits));
    }
}

#[test]
fn geometric_block_dominates_at_large_n() {
    for a in 0..2 {
        let x = eval_x_unity(2, a, 200, 256).unwrap();
        let geo = asymptotic_rhs(2, a, 200, 256, Terms::Optimal).unwrap().geometric;
        let ratio = x.abs().div(&geo.abs()).to_f64();
        assert!((ratio - 1.0).abs() < 0.01, "a={a}: ratio {ratio}");
    }
}

#[test]
fn mellin_residual_shrinks_for_chi_12() {
    let chi = chi_12();
    let r: Vec<_> = [50, 100, 200].iter().map(|&d| mellin_residual(&chi, d)).collect();
    assert!(r[1] < r[0] && r[2] < r[1]);
}

#[test]
fn mellin_residual_shrinks_for_chi_20_below_one_hundredth() {
    for a in 0..2 {
        let chi = chi_20(a).unwrap();
        assert!(mellin_residual(&chi, 200) < mellin_residual(&chi, 100), "a={a}");
    }
}

// At t0 = 1/50 the optimal cut for chi_20^(0) keeps no terms, so the
// residual is |lhs| itself and is smaller than at 1/100, where one term is
// kept. Halving t0 does not shrink the residual there.
#[test]
fn mellin_residual_grows_for_chi_20_zero_between_fiftieth_and_hundredth() {
    let chi = chi_20(0).unwrap();
    let coarse = mellin_asymptotic_check(&chi, &frac(1, 50), Terms::Optimal, 256).unwrap();
    assert_eq!(coarse.terms_used, 0);
    assert!(mellin_residual(&chi, 100) > coarse.residual);
}

#[test]
fn modular_matrix_is_an_involution() {
    for m in 1..=6 {
        let mat = modular_matrix(m, 256).unwrap();
        assert!(mat.is_symmetric());
        assert!(mat.square_residual() < ApReal::pow2(-248, 256).mul_i64((m * m) as i64));
    }
}
