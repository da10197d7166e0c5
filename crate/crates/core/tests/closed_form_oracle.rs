use std::f64::consts::PI;

use approx::assert_abs_diff_eq;
use meyer::closed_form::{phi, psi, psi1, psi2, psi_jk, singular_points};
use meyer::oracle::{phi_oracle, psi_oracle, QuadratureConfig};
use proptest::prelude::*;

fn cfg() -> QuadratureConfig {
    QuadratureConfig::with_tolerance(1e-11).unwrap()
}

#[test]
fn phi_at_one_matches_quadrature() {
    let expected = (3f64.sqrt() / 2.0 - 2.0 / 3.0) / (PI - 16.0 * PI / 9.0);
    assert_abs_diff_eq!(phi(1.0), expected, epsilon = 1e-14);
    assert_abs_diff_eq!(phi(1.0), -0.0816, epsilon = 1e-4);
    assert_abs_diff_eq!(phi(1.0), phi_oracle(1.0, &cfg()).unwrap(), epsilon = 1e-10);
}

#[test]
fn psi_at_small_integers_matches_quadrature() {
    for t in [0.0, 1.0, 2.0] {
        assert_abs_diff_eq!(psi(t), psi_oracle(t, &cfg()).unwrap(), epsilon = 1e-8);
    }
}

#[test]
fn every_singular_point_matches_quadrature() {
    let table = singular_points();
    for (&t, &limit) in table.phi_singularities.iter().zip(&table.phi_limits) {
        assert_abs_diff_eq!(phi(t), limit, epsilon = 0.0);
        assert_abs_diff_eq!(limit, phi_oracle(t, &cfg()).unwrap(), epsilon = 1e-10);
    }
    for &t in table
        .psi1_singularities
        .iter()
        .chain(&table.psi2_singularities)
    {
        assert_abs_diff_eq!(psi(t), psi_oracle(t, &cfg()).unwrap(), epsilon = 1e-10);
    }
}

#[test]
fn wavelet_is_sum_of_its_two_bands() {
    for t in [-3.3, -0.25, 0.125, 0.5, 0.875, 1.25, 4.0] {
        assert_abs_diff_eq!(psi(t), psi1(t) + psi2(t), epsilon = 1e-15);
    }
}

#[test]
fn dilated_translates_keep_unit_norm() {
    let dt = 1.0 / 512.0;
    for (j, k) in [(1, 0), (-1, 2), (2, -3)] {
        let energy: f64 = (0..(160.0 / dt) as usize)
            .map(|i| psi_jk(j, k, -80.0 + i as f64 * dt).powi(2))
            .sum::<f64>()
            * dt;
        assert_abs_diff_eq!(energy, 1.0, epsilon = 1e-4);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn phi_agrees_with_quadrature(t in -20.0f64..20.0) {
        let oracle = phi_oracle(t, &cfg()).unwrap();
        prop_assert!((phi(t) - oracle).abs() < 1e-9, "t={t}: {} vs {oracle}", phi(t));
    }

    #[test]
    fn psi_agrees_with_quadrature(t in -20.0f64..20.0) {
        let oracle = psi_oracle(t, &cfg()).unwrap();
        prop_assert!((psi(t) - oracle).abs() < 1e-9, "t={t}: {} vs {oracle}", psi(t));
    }

    #[test]
    fn near_singular_points_agree_with_quadrature(idx in 0usize..9, h in -1e-3f64..1e-3) {
        let t = singular_points().all_points()[idx] + h;
        prop_assert!((phi(t) - phi_oracle(t, &cfg()).unwrap()).abs() < 1e-9);
        prop_assert!((psi(t) - psi_oracle(t, &cfg()).unwrap()).abs() < 1e-9);
    }
}
