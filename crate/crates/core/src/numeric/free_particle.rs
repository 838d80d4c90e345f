use nalgebra::{Matrix4, Vector3};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::eval::{sigma_dot, Mat2};

pub type Mat4 = Matrix4<Complex64>;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FreeParticleResidual {
    /// `|U U^dagger - 1|`
    pub unitarity: f64,
    /// `|U H_D U^dagger - diag(E_p, E_p, -E_p, -E_p)|`
    pub block_diagonal: f64,
    /// `|2 m c^2 X - c s.p + X c s.p X|` for `X = c s.p/(m c^2 + E_p)`
    pub generating_equation: f64,
}

impl FreeParticleResidual {
    pub fn max(&self) -> f64 {
        self.unitarity.max(self.block_diagonal).max(self.generating_equation)
    }
}

fn blocks(a: &Mat2, b: &Mat2, c: &Mat2, d: &Mat2) -> Mat4 {
    let mut m = Mat4::zeros();
    m.fixed_view_mut::<2, 2>(0, 0).copy_from(a);
    m.fixed_view_mut::<2, 2>(0, 2).copy_from(b);
    m.fixed_view_mut::<2, 2>(2, 0).copy_from(c);
    m.fixed_view_mut::<2, 2>(2, 2).copy_from(d);
    m
}

fn norm4(m: &Mat4) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

fn norm2(m: &Mat2) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Free Dirac Hamiltonian `beta m c^2 + c alpha.p`.
pub fn dirac_hamiltonian(p: &Vector3<f64>, m: f64, c: f64) -> Mat4 {
    let one = Mat2::identity();
    let mc2 = Complex64::from(m * c * c);
    let cs = sigma_dot(p) * Complex64::from(c);
    blocks(&(one * mc2), &cs, &cs, &(-one * mc2))
}

/// Exact free-particle FW unitary.
pub fn free_unitary(p: &Vector3<f64>, m: f64, c: f64) -> Mat4 {
    let mc2 = m * c * c;
    let ep = (mc2 * mc2 + p.norm_squared() * c * c).sqrt();
    let n = Complex64::from(1.0 / (2.0 * ep * (ep + mc2)).sqrt());
    let diag = Mat2::identity() * Complex64::from(ep + mc2);
    let cs = sigma_dot(p) * Complex64::from(c);
    blocks(&diag, &cs, &(-cs), &diag) * n
}

pub fn free_particle_check(p: [f64; 3], m: f64, c: f64) -> FreeParticleResidual {
    let p = Vector3::from(p);
    let mc2 = m * c * c;
    let ep = (mc2 * mc2 + p.norm_squared() * c * c).sqrt();
    let u = free_unitary(&p, m, c);
    let ud = u.adjoint();
    let h = dirac_hamiltonian(&p, m, c);
    let mut want = Mat4::zeros();
    for k in 0..4 {
        want[(k, k)] = Complex64::from(if k < 2 { ep } else { -ep });
    }
    let csp = sigma_dot(&p) * Complex64::from(c);
    let x = csp * Complex64::from(1.0 / (mc2 + ep));
    let eq = x * Complex64::from(2.0 * mc2) - csp + x * csp * x;
    FreeParticleResidual {
        unitarity: norm4(&(u * ud - Mat4::identity())),
        block_diagonal: norm4(&(u * h * ud - want)) / ep,
        generating_equation: norm2(&eq) / mc2,
    }
}
