use fw_core::algebra::ops::{pi2, sb, sp};
use fw_core::algebra::Mode;
use fw_core::engine::{assemble_hamiltonian, ModelSpec};
use fw_core::numeric::{
    convergence_check, convergence_sample, eval_expr, free_particle_check, homomorphism_defect, norm, FieldLayout,
    Mat2, NumericSample, SampleGenerator,
};
use nalgebra::Complex;

fn close(a: &Mat2, b: &Mat2, tol: f64) -> bool {
    norm(&(a - b)) <= tol * (1.0 + norm(b))
}

#[test]
fn pi_squared_is_scalar() {
    let s = NumericSample::natural([0.3, -0.2, 0.5], [0.0; 3], [0.0; 3]);
    let want = Mat2::identity() * Complex::from(0.09 + 0.04 + 0.25);
    assert!(close(&eval_expr(&pi2(1), &s).unwrap(), &want, 1e-15));
}

#[test]
fn sigma_pi_along_z_is_diagonal() {
    let s = NumericSample::natural([0.0, 0.0, 0.7], [0.0; 3], [0.0; 3]);
    let want = Mat2::new(Complex::from(0.7), Complex::from(0.0), Complex::from(0.0), Complex::from(-0.7));
    assert!(close(&eval_expr(&sp(), &s).unwrap(), &want, 1e-15));
}

#[test]
fn sigma_pi_squared() {
    let sq = sp().mul(&sp()).unwrap();
    let s = NumericSample { q: 0.7, hbar: 1.3, c: 2.0, ..NumericSample::natural([0.3, -0.2, 0.5], [0.0; 3], [0.1, 0.4, -0.6]) };
    // pi^2 - (q hbar/c) s.B, by hand
    let want = eval_expr(&pi2(1), &s).unwrap() - eval_expr(&sb(), &s).unwrap() * Complex::from(0.7 * 1.3 / 2.0);
    assert!(close(&eval_expr(&sq, &s).unwrap(), &want, 1e-14));
    let s0 = NumericSample { b: [0.0; 3], ..s };
    let m = eval_expr(&sp(), &s0).unwrap();
    assert!(close(&eval_expr(&sq, &s0).unwrap(), &(m * m), 1e-14));
}

#[test]
fn sums_evaluate_to_sums() {
    let mut g = SampleGenerator::new(3);
    let a = &sp() + &pi2(2);
    let b = sb().scale(&fw_core::algebra::Coefficient::new(3, 7));
    for _ in 0..20 {
        let s = g.sample();
        let lhs = eval_expr(&(&a + &b), &s).unwrap();
        let rhs = eval_expr(&a, &s).unwrap() + eval_expr(&b, &s).unwrap();
        assert!(close(&lhs, &rhs, 1e-13));
    }
    assert_eq!(a.mode(), Mode::Homogeneous);
}

#[test]
fn products_are_homomorphic_without_cross_terms() {
    assert!(homomorphism_defect(11, 300).unwrap() < 1e-13);
}

#[test]
fn particle_at_rest() {
    assert!(free_particle_check([0.0; 3], 1.0, 1.0).max() < 1e-15);
    assert!(free_particle_check([0.0; 3], 3.5, 137.0).max() < 1e-15);
}

#[test]
fn free_particle_up_to_mc() {
    let mut g = SampleGenerator::new(5);
    for _ in 0..200 {
        let s = g.sample();
        assert!(free_particle_check(s.pi, s.m, s.c).max() < 1e-12);
    }
}

#[test]
fn lowest_order_converges_quadratically() {
    let h = assemble_hamiltonian(&ModelSpec::dirac(0)).unwrap();
    let mut g = SampleGenerator::new(42);
    let s = convergence_sample(&mut g, 0.1, FieldLayout::Zeeman, 2.0);
    let r = convergence_check(&h.h, 0, &s, &[1.0, 0.5, 0.25]).unwrap();
    for slope in &r.slopes {
        assert!((slope - 2.0).abs() < 0.2, "{:?}", r.slopes);
    }
}

#[test]
fn order_twelve_converges() {
    let h = assemble_hamiltonian(&ModelSpec::dirac(12)).unwrap();
    let mut g = SampleGenerator::new(42);
    let s = convergence_sample(&mut g, 0.5, FieldLayout::Zeeman, 2.0);
    let r = convergence_check(&h.h, 12, &s, &[1.0, 0.5, 0.25]).unwrap();
    assert!((r.slopes.last().unwrap() - 14.0).abs() < 0.5, "{:?}", r.slopes);
}

/// `sqrt(1 + x2) - sum_{k <= n} binom(1/2, k) x2^k`
fn taylor_remainder(x2: f64, n: usize) -> f64 {
    let mut c = 1.0;
    let mut sum = 0.0;
    for k in 0..=n {
        sum += c * x2.powi(k as i32);
        c *= (0.5 - k as f64) / (k as f64 + 1.0);
    }
    (1.0 + x2).sqrt() - sum
}

#[test]
fn field_free_error_is_the_taylor_remainder() {
    for l in [0usize, 2, 4, 8] {
        let h = assemble_hamiltonian(&ModelSpec::dirac(l)).unwrap();
        let s = NumericSample { v: 0.25, ..NumericSample::natural([0.12, -0.3, 0.2], [0.0; 3], [0.0; 3]) };
        let r = convergence_check(&h.h, l, &s, &[1.0, 0.5]).unwrap();
        for (lambda, delta) in r.scales.iter().zip(&r.deltas) {
            let x2 = s.xi_norm().powi(2) * lambda * lambda;
            // orbital terms up to pi^(L+2) are present; the Frobenius norm of a scalar is sqrt(2) |.|
            let want = taylor_remainder(x2, l / 2 + 1).abs() * 2f64.sqrt();
            assert!((delta - want).abs() <= 1e-9 * want + 1e-15, "L = {l}: {delta} vs {want}");
            // alternating series: the remainder is bounded by the next term
            let next = taylor_remainder(x2, l / 2 + 1) - taylor_remainder(x2, l / 2 + 2);
            assert!(want / 2f64.sqrt() <= next.abs() * (1.0 + 1e-9));
        }
    }
}
