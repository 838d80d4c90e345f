use nalgebra::Vector3;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::eval::{eval_series, norm, sigma_dot, Mat2};
use super::{NumericError, NumericSample};
use crate::engine::SeriesByOrder;

/// `V + m c^2 (gamma - 1) - (kappa + 1/gamma) mu.B + (g/2 - gamma/(1+gamma)) mu.(beta x E)
///  + kappa (gamma/(1+gamma)) (mu.beta)(B.beta)` at the sample, with `mu = (q hbar/2mc) sigma`.
pub fn classical_hamiltonian(s: &NumericSample) -> Mat2 {
    let xi = s.pi_vec() / (s.m * s.c);
    let x2 = xi.norm_squared();
    let gamma = (1.0 + x2).sqrt();
    let beta: Vector3<f64> = xi / gamma;
    let kappa = s.kappa();
    let mu = s.q * s.hbar / (2.0 * s.m * s.c);
    let (e, b) = (s.e_vec(), s.b_vec());
    let mc2 = s.m * s.c * s.c;
    let scalar = s.v + mc2 * x2 / (1.0 + gamma);
    let mut h = Mat2::identity() * Complex64::from(scalar);
    h -= sigma_dot(&b) * Complex64::from(mu * (kappa + 1.0 / gamma));
    h += sigma_dot(&beta.cross(&e)) * Complex64::from(mu * (kappa + 1.0 / (1.0 + gamma)));
    h += sigma_dot(&beta) * Complex64::from(mu * kappa * gamma / (1.0 + gamma) * b.dot(&beta));
    h
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceResult {
    pub max_order: usize,
    pub scales: Vec<f64>,
    /// `Delta` at each scale.
    pub deltas: Vec<f64>,
    /// Observed order between consecutive scales.
    pub slopes: Vec<f64>,
}

/// Measures how fast the truncated Hamiltonian approaches the classical one
/// as `xi -> lambda xi` shrinks through `scales` (largest first).
pub fn convergence_check(
    h: &SeriesByOrder,
    max_order: usize,
    s: &NumericSample,
    scales: &[f64],
) -> Result<ConvergenceResult, NumericError> {
    let mut deltas = Vec::with_capacity(scales.len());
    for &lambda in scales {
        let t = s.scaled(lambda);
        deltas.push(norm(&(eval_series(h, max_order, &t)? - classical_hamiltonian(&t))));
    }
    let mut slopes = Vec::new();
    for i in 1..scales.len() {
        if !(deltas[i] < deltas[i - 1]) {
            return Err(NumericError::NonMonotone { scale: scales[i], previous: deltas[i - 1], current: deltas[i] });
        }
        slopes.push((deltas[i - 1] / deltas[i]).ln() / (scales[i - 1] / scales[i]).ln());
    }
    Ok(ConvergenceResult { max_order, scales: scales.to_vec(), deltas, slopes })
}
