use std::f64::consts::PI;

use approx::assert_abs_diff_eq;
use cho::density::{entropy_closed, quark_distribution, reduced_closed, x_ln_x, ReducedDensityKernel};
use cho::kinematics::{
    boost, from_light_cone, rapidity_from_beta, squeeze_light_cone, to_light_cone, two_body_join, two_body_split,
};
use cho::numerics::{chi, chi_table, hermite, second_derivative, FiniteDifferenceScheme};
use cho::oscillator::{psi_boosted, psi_cartesian, psi_rest};
use cho::squeezed::{expansion, schmidt_probabilities, squeezed_vacuum};
use cho::wigner::{phase_space_radius, wigner_closed};
use cho::{CartesianState, OscillatorState, PhaseSpacePoint, Rapidity, SpaceTimePoint, Velocity};
use proptest::prelude::*;

fn rap(eta: f64) -> Rapidity {
    Rapidity::new(eta).unwrap()
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

proptest! {
    #[test]
    fn chi_matches_normalised_hermite(n in 0usize..=20, x in -4.0f64..4.0) {
        let direct = hermite(n, x) * (-0.5 * x * x).exp() / (PI.sqrt() * 2f64.powi(n as i32) * factorial(n)).sqrt();
        let scale = chi_table(20, x).iter().fold(0.0f64, |m, v| m.max(v.abs()));
        prop_assert!((chi(n, x) - direct).abs() <= 1e-12 * scale.max(1e-300));
    }

    #[test]
    fn chi_table_is_chi(k in 0usize..60, x in -8.0f64..8.0) {
        prop_assert_eq!(chi_table(60, x)[k], chi(k, x));
    }

    #[test]
    fn chi_parity(n in 0usize..40, x in -6.0f64..6.0) {
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        prop_assert_eq!(chi(n, -x), sign * chi(n, x));
    }

    #[test]
    fn chi_solves_oscillator_equation(n in 0usize..=10, x in -4.0f64..4.0) {
        let scheme = FiniteDifferenceScheme::new(1e-3, 4).unwrap();
        let lhs = -second_derivative(|y| chi(n, y), x, &scheme) + x * x * chi(n, x);
        prop_assert!((lhs - (2 * n + 1) as f64 * chi(n, x)).abs() < 1e-7);
    }

    #[test]
    fn boost_group_law(z in -3.0f64..3.0, t in -3.0f64..3.0, a in -5.0f64..5.0, b in -5.0f64..5.0) {
        let p = SpaceTimePoint::new(z, t);
        let lhs = boost(boost(p, rap(a)), rap(b));
        let rhs = boost(p, rap(a + b));
        let scale = (a.abs() + b.abs()).exp() * z.abs().max(t.abs());
        prop_assert!((lhs.z - rhs.z).abs() <= 1e-13 * scale);
        prop_assert!((lhs.t - rhs.t).abs() <= 1e-13 * scale);
    }

    #[test]
    fn boost_preserves_interval(z in -3.0f64..3.0, t in -3.0f64..3.0, a in -5.0f64..5.0) {
        let p = SpaceTimePoint::new(z, t);
        let q = boost(p, rap(a));
        let scale = (2.0 * a.abs()).exp() * (z * z + t * t);
        prop_assert!((q.interval() - p.interval()).abs() <= 1e-13 * scale);
    }

    #[test]
    fn inverse_boost_undoes_boost(z in -3.0f64..3.0, t in -3.0f64..3.0, a in -5.0f64..5.0) {
        let p = SpaceTimePoint::new(z, t);
        let q = boost(boost(p, rap(a)), -rap(a));
        let scale = (2.0 * a.abs()).exp() * z.abs().max(t.abs());
        prop_assert!((q.z - z).abs() <= 1e-13 * scale && (q.t - t).abs() <= 1e-13 * scale);
    }

    #[test]
    fn light_cone_squeeze_is_boost(z in -3.0f64..3.0, t in -3.0f64..3.0, a in -5.0f64..5.0) {
        let p = SpaceTimePoint::new(z, t);
        let lc = to_light_cone(p);
        let sq = squeeze_light_cone(lc, rap(a));
        let via = from_light_cone(sq);
        let direct = boost(p, rap(a));
        let scale = a.abs().exp() * z.abs().max(t.abs());
        prop_assert!((via.z - direct.z).abs() <= 1e-13 * scale && (via.t - direct.t).abs() <= 1e-13 * scale);
        prop_assert!((sq.u * sq.v - lc.u * lc.v).abs() <= 1e-13 * (lc.u * lc.v).abs() + 1e-300);
    }

    #[test]
    fn velocity_round_trip(beta in -0.999f64..0.999) {
        let r = rapidity_from_beta(Velocity::new(beta).unwrap());
        prop_assert!((r.beta() - beta).abs() < 1e-15);
        prop_assert!((r.tanh() - beta).abs() < 1e-15);
    }

    #[test]
    fn two_body_round_trip(za in -5.0f64..5.0, ta in -5.0f64..5.0, zb in -5.0f64..5.0, tb in -5.0f64..5.0) {
        let (a, b) = (SpaceTimePoint::new(za, ta), SpaceTimePoint::new(zb, tb));
        let (a2, b2) = two_body_join(two_body_split(a, b));
        for (u, v) in [(a.z, a2.z), (a.t, a2.t), (b.z, b2.z), (b.t, b2.t)] {
            prop_assert!((u - v).abs() < 1e-14);
        }
    }

    #[test]
    fn boosted_state_is_rest_state_at_inverse_point(n in 0usize..8, a in -2.5f64..2.5, z in -3.0f64..3.0, t in -3.0f64..3.0) {
        let back = boost(SpaceTimePoint::new(z, t), -rap(a));
        let s = OscillatorState::new(n, rap(a));
        prop_assert!((psi_boosted(&s, z, t) - psi_rest(n, back.z, back.t)).abs() < 1e-13);
    }

    #[test]
    fn cartesian_state_separates(a in 0usize..4, b in 0usize..4, n in 0usize..4,
                                 x in -3.0f64..3.0, y in -3.0f64..3.0, z in -3.0f64..3.0, t in -3.0f64..3.0) {
        let c = CartesianState::new(a, b, n);
        let product = chi(a, x) * chi(b, y) * chi(n, z) * chi(0, t);
        prop_assert!((psi_cartesian(&c, x, y, z, t) - product).abs() < 1e-15);
        prop_assert_eq!(c.lambda(), a + b + n);
    }

    #[test]
    fn squeezed_vacuum_symmetries(a in 0.0f64..3.0, x1 in -4.0f64..4.0, x2 in -4.0f64..4.0) {
        prop_assert!((squeezed_vacuum(rap(a), x1, x2) - squeezed_vacuum(rap(a), x2, x1)).abs() < 1e-15);
        prop_assert!((squeezed_vacuum(rap(-a), x1, x2) - squeezed_vacuum(rap(a), x1, -x2)).abs() < 1e-15);
        prop_assert!((squeezed_vacuum(rap(a), -x1, -x2) - squeezed_vacuum(rap(a), x1, x2)).abs() < 1e-15);
    }

    #[test]
    fn schmidt_coefficients_are_geometric(a in 0.05f64..3.0, k in 0usize..50) {
        let e = expansion(rap(a), 60);
        let c = e.coeffs();
        prop_assert!((c[k + 1] / c[k] - a.tanh()).abs() < 1e-13);
        prop_assert!((e.retained_weight() + e.tail_bound() - 1.0).abs() < 1e-13);
    }

    #[test]
    fn schmidt_probabilities_normalised(a in 0.05f64..2.0) {
        let p = schmidt_probabilities(rap(a), 2000);
        let total: f64 = p.iter().sum();
        prop_assert!((total - 1.0).abs() < 1e-10);
        prop_assert!(p.windows(2).all(|w| w[1] <= w[0]));
    }

    #[test]
    fn reduced_kernel_is_symmetric_and_positive_on_diagonal(a in 0.0f64..3.0, z in -5.0f64..5.0, zp in -5.0f64..5.0) {
        let k = ReducedDensityKernel::new(rap(a));
        prop_assert_eq!(reduced_closed(&k, z, zp), reduced_closed(&k, zp, z));
        prop_assert!(quark_distribution(&k, z) > 0.0);
        // Cauchy-Schwarz for a positive kernel
        let bound = (quark_distribution(&k, z) * quark_distribution(&k, zp)).sqrt();
        prop_assert!(reduced_closed(&k, z, zp) <= bound * (1.0 + 1e-14));
    }

    #[test]
    fn wigner_positive_and_bounded(a in 0.0f64..4.0, z in -6.0f64..6.0, p in -6.0f64..6.0) {
        let w = wigner_closed(rap(a), PhaseSpacePoint::new(z, p));
        prop_assert!(w >= 0.0);
        prop_assert!(w <= 1.0 / rap(a).cosh_2eta() + 1e-16);
        // rotational symmetry in phase space
        let rot = wigner_closed(rap(a), PhaseSpacePoint::new(p, -z));
        prop_assert!((w - rot).abs() <= 1e-15);
    }

    #[test]
    fn wigner_at_radius_is_one_over_e(a in 0.0f64..5.0, angle in 0.0f64..6.3) {
        let r = phase_space_radius(rap(a));
        let w = wigner_closed(rap(a), PhaseSpacePoint::new(r * angle.cos(), r * angle.sin()));
        prop_assert!((w * rap(a).cosh_2eta() - (-1.0f64).exp()).abs() < 1e-14);
    }
}

#[test]
fn chi_orthonormal_up_to_thirty() {
    let rule = cho::numerics::gauss_quadrature(80).unwrap();
    for m in 0..=30 {
        for n in 0..=m {
            let v = cho::numerics::integrate_1d(|x| chi(m, x) * chi(n, x), &rule).unwrap();
            assert_abs_diff_eq!(v, if m == n { 1.0 } else { 0.0 }, epsilon = 1e-12);
        }
    }
}

#[test]
fn entropy_strictly_increasing() {
    let values: Vec<f64> = (0..=50).map(|i| entropy_closed(rap(0.1 * i as f64))).collect();
    assert_eq!(values[0], 0.0);
    assert!(values.windows(2).all(|w| w[1] > w[0]));
}

#[test]
fn entropy_even_in_rapidity() {
    for i in 1..30 {
        let a = 0.1 * i as f64;
        assert_eq!(entropy_closed(rap(a)), entropy_closed(rap(-a)));
    }
}

#[test]
fn purity_closed_decreasing() {
    let values: Vec<f64> = (0..=50).map(|i| 1.0 / rap(0.1 * i as f64).cosh_2eta()).collect();
    assert_eq!(values[0], 1.0);
    assert!(values.windows(2).all(|w| w[1] < w[0]));
}

#[test]
fn entropy_large_rapidity_is_linear() {
    // S -> 2 eta + 1 - 2 ln 2 for large eta
    let a = 12.0;
    assert_abs_diff_eq!(entropy_closed(rap(a)), 2.0 * a + 1.0 - 2.0 * 2f64.ln(), epsilon = 1e-8);
}

#[test]
fn x_ln_x_limits() {
    assert_eq!(x_ln_x(0.0), 0.0);
    assert_eq!(x_ln_x(1.0), 0.0);
    assert_abs_diff_eq!(x_ln_x(0.5), 0.5 * 0.5f64.ln(), epsilon = 1e-16);
}
