use fw_core::engine::Model;
use fw_core::resummation::{
    anomalous_x_template, expand_closed_form_x, gamma_series_suite, RationalSeries,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

const N: usize = 8;

fn r(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Series with unit constant term.
fn arb_unit_series() -> impl Strategy<Value = RationalSeries> {
    prop::collection::vec((-9i64..=9, 1i64..=8), N).prop_map(|cs| {
        let mut coeffs = vec![r(1, 1)];
        coeffs.extend(cs.into_iter().map(|(n, d)| r(n, d)));
        RationalSeries::new(coeffs, N)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sqrt_squares_back(s in arb_unit_series()) {
        let t = s.sqrt().unwrap();
        prop_assert_eq!(t.mul(&t), s);
    }

    #[test]
    fn reciprocal_inverts(s in arb_unit_series()) {
        prop_assert_eq!(s.mul(&s.reciprocal().unwrap()), RationalSeries::one(N));
    }

    #[test]
    fn products_commute(a in arb_unit_series(), b in arb_unit_series()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }
}

#[test]
fn gamma_over_one_plus_gamma_either_side() {
    let g = gamma_series_suite(N);
    let inv = g.inv_one_plus_gamma.clone();
    assert_eq!(g.gamma.mul(&inv), inv.mul(&g.gamma));
    // gamma/(1+gamma) = 1 - 1/(1+gamma)
    assert_eq!(g.gamma.mul(&inv), RationalSeries::one(N).sub(&inv));
}

#[test]
fn spin_orbit_weight_is_one_over_gamma_one_plus_gamma() {
    let g = gamma_series_suite(N);
    assert_eq!(g.spin_orbit, g.inv_gamma.sub(&g.inv_one_plus_gamma));
    assert_eq!(g.spin_orbit, g.inv_gamma.mul(&g.inv_one_plus_gamma));
    assert_eq!(g.inv_gamma_one_plus_gamma_sq, g.spin_orbit.mul(&g.spin_orbit));
}

#[test]
fn boost_reproduces_gamma() {
    // beta^2 = xi^2 / gamma^2 = x/(1+x), and gamma = (1 - beta^2)^(-1/2)
    let g = gamma_series_suite(N);
    let x = RationalSeries::variable(N);
    let beta2 = x.mul(&RationalSeries::one(N).add(&x).reciprocal().unwrap());
    let outer = RationalSeries::binomial(&r(-1, 2), N);
    let gamma = outer.compose(&beta2.scale(&r(-1, 1))).unwrap();
    assert_eq!(gamma, g.gamma);
}

#[test]
fn gamma_coefficients() {
    let g = gamma_series_suite(N);
    let want = [(1, 1), (1, 2), (-1, 8), (1, 16), (-5, 128), (7, 256), (-21, 1024), (33, 2048), (-429, 32768)];
    for (k, (n, d)) in want.iter().enumerate() {
        assert_eq!(g.gamma.coeff(k), r(*n, *d), "x^{k}");
    }
    assert_eq!(g.inv_gamma.coeff(7), r(-429, 2048));
}

#[test]
fn anomalous_template_vanishes_at_g_two() {
    let x = anomalous_x_template(13).instantiate(Model::DiracPauli, 13);
    assert!(x.map(|e| e.kappa_part(0)).is_zero());
    let dirac = expand_closed_form_x(13, Model::Dirac).unwrap();
    let pauli = expand_closed_form_x(13, Model::DiracPauli).unwrap();
    assert_eq!(pauli.x.kappa_part(0).entries, dirac.x.entries);
}
