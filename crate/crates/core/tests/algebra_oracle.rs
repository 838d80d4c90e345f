mod common;

use common::oracle::{expand, Comp};
use common::{arb_expr, arb_field_free};
use fw_core::algebra::ops::{mono, pi2, sb, se, sp};
use fw_core::algebra::{Coefficient, Mode, OperatorExpr, Symbols, Tail};
use fw_core::algebra::tail::HOMOGENEOUS_TAILS;
use proptest::prelude::*;

#[test]
fn every_tail_pair_matches_component_algebra() {
    for a in HOMOGENEOUS_TAILS {
        for b in HOMOGENEOUS_TAILS {
            for p2 in 0..=2 {
                let x = OperatorExpr::term(Mode::Homogeneous, 1, 1, 0, a);
                let y = OperatorExpr::term(Mode::Homogeneous, 1, 1, p2, b);
                let engine = expand(&x.mul(&y).unwrap());
                let brute = expand(&x).mul(&expand(&y));
                assert_eq!(engine, brute, "{:?} * pi^{} {:?}", a, 2 * p2, b);
            }
        }
    }
}

#[test]
fn sigma_pi_times_sigma_e() {
    let got = sp().mul(&se()).unwrap();
    let want = &OperatorExpr::term(Mode::Homogeneous, 1, 1, 0, Tail::EDotPi)
        + &mono(Coefficient::new(-1, 1).times_i(), 0, Tail::SigmaExPi);
    assert_eq!(got, want);
}

#[test]
fn sigma_pi_absorbs_e_dot_pi_sigma_pi() {
    let x = OperatorExpr::term(Mode::Homogeneous, 1, 1, 1, Tail::EDotPiSigmaPi);
    assert_eq!(sp().mul(&x).unwrap(), OperatorExpr::term(Mode::Homogeneous, 1, 1, 2, Tail::EDotPi));
}

#[test]
fn sigma_pi_squared() {
    let beta = Coefficient::new(-1, 1).with(Symbols::beta());
    assert_eq!(sp().mul(&sp()).unwrap(), &pi2(1) + &sb().scale(&beta));
}

#[test]
fn sigma_pi_does_not_commute_with_pi_squared() {
    let c = sp().commutator(&pi2(2)).unwrap();
    let want = mono(Coefficient::new(-4, 1).times_i().with(Symbols::beta()), 1, Tail::SigmaBxPi);
    assert_eq!(c, want);
    assert_eq!(expand(&c), expand(&sp()).mul(&expand(&pi2(2))).add(&expand(&pi2(2)).mul(&expand(&sp())).scale(&fw_core::algebra::scalar(-1, 1), Symbols::NONE)));
}

#[test]
fn field_tails_commute_with_pi_squared() {
    for t in HOMOGENEOUS_TAILS.iter().filter(|t| t.field_degree() == 1) {
        let x = OperatorExpr::term(Mode::Homogeneous, 1, 1, 0, *t);
        for k in 0..4 {
            assert_eq!(x.mul(&pi2(k)).unwrap(), pi2(k).mul(&x).unwrap());
        }
    }
}

fn assert_comp_eq(a: &Comp, b: &Comp) -> Result<(), TestCaseError> {
    prop_assert_eq!(a, b);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn product_agrees_with_component_algebra(a in arb_expr(), b in arb_expr()) {
        let engine = expand(&a.mul(&b).unwrap());
        assert_comp_eq(&engine, &expand(&a).mul(&expand(&b)))?;
    }

    #[test]
    fn adjoint_agrees_with_component_algebra(a in arb_expr()) {
        assert_comp_eq(&expand(&a.adjoint()), &expand(&a).adjoint())?;
    }

    #[test]
    fn commutator_with_v_agrees_with_component_algebra(a in arb_field_free()) {
        assert_comp_eq(&expand(&a.commute_with_v().unwrap()), &expand(&a).commute_with_v())?;
    }
}
