//! Floating-point cross-checks of the exact results.

mod convergence;
mod eval;
mod free_particle;
mod homomorphism;
mod sample;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use convergence::{classical_hamiltonian, convergence_check, ConvergenceResult};
pub use eval::{eval_expr, eval_series, norm, pauli, sigma_dot, Mat2};
pub use free_particle::{dirac_hamiltonian, free_particle_check, free_unitary, FreeParticleResidual, Mat4};
pub use homomorphism::{homomorphism_defect, ExprGenerator, ELECTRIC, FIELD_FREE, MAGNETIC};
pub use sample::{NumericSample, SampleGenerator};

use crate::algebra::AlgebraError;
use crate::engine::{assemble_hamiltonian, EngineError, ModelSpec};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum NumericError {
    #[error("inhomogeneous expressions have no numeric evaluation")]
    Inhomogeneous,
    #[error("Delta did not decrease at scale {scale}: {previous:e} -> {current:e}")]
    NonMonotone { scale: f64, previous: f64, current: f64 },
    #[error("product remainder contains terms without q hbar/c")]
    UntrackedRemainder,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Engine(#[from] EngineError),
}

/// Free-particle residual tolerance.
pub const FREE_PARTICLE_TOL: f64 = 1e-12;
/// Homomorphism and hermiticity tolerance.
pub const EXACTNESS_TOL: f64 = 1e-13;
/// Allowed deviation of an observed slope from its expected value.
pub const SLOPE_TOL: f64 = 0.5;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResidualStats {
    pub free_particle_max: f64,
    pub free_particle_mean: f64,
    pub homomorphism_max: f64,
    pub hermiticity_max: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SlopeRecord {
    pub label: String,
    pub max_order: usize,
    pub xi: f64,
    pub expected: f64,
    pub slopes: Vec<f64>,
    pub deltas: Vec<f64>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NumericReport {
    pub seed: u64,
    pub samples: usize,
    pub residual_stats: ResidualStats,
    pub slopes: Vec<SlopeRecord>,
}

impl NumericReport {
    pub fn passed(&self) -> bool {
        let r = &self.residual_stats;
        r.free_particle_max < FREE_PARTICLE_TOL
            && r.homomorphism_max < EXACTNESS_TOL
            && r.hermiticity_max < EXACTNESS_TOL
            && self.slopes.iter().all(|s| s.passed)
    }
}

/// Which piece of the error a convergence sample isolates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldLayout {
    /// `E` parallel to `pi` and a large `B` perpendicular to it: the spin-orbit
    /// term vanishes identically and the Zeeman remainder `xi^(L+2)` leads.
    Zeeman,
    /// `E` and `B` in generic directions: the spin-orbit remainder
    /// `xi^(L+1)` leads.
    Generic,
}

/// Convergence sample at `|xi| = xi` in natural units.
pub fn convergence_sample(gen: &mut SampleGenerator, xi: f64, layout: FieldLayout, g: f64) -> NumericSample {
    let u = nalgebra::Vector3::from(gen.unit_vector());
    let pi = u * xi;
    let (e, b) = match layout {
        FieldLayout::Zeeman => {
            let w = nalgebra::Vector3::from(gen.unit_vector());
            let perp = (w - u * u.dot(&w)).normalize();
            (u * 0.3, perp * 20.0)
        }
        FieldLayout::Generic => {
            let e = nalgebra::Vector3::from(gen.unit_vector()) * 20.0;
            let b = nalgebra::Vector3::from(gen.unit_vector()) * 20.0;
            (e, b)
        }
    };
    NumericSample { g, v: 0.25, ..NumericSample::natural(pi.into(), e.into(), b.into()) }
}

/// Free-particle, homomorphism, hermiticity and convergence suites from one
/// seed.
pub fn run_numeric_suite(seed: u64, samples: usize) -> Result<NumericReport, NumericError> {
    let mut gen = SampleGenerator::new(seed);
    let mut fp_max = 0.0f64;
    let mut fp_sum = 0.0;
    for _ in 0..samples {
        let s = gen.sample();
        let r = free_particle_check(s.pi, s.m, s.c).max();
        fp_max = fp_max.max(r);
        fp_sum += r;
    }
    let homomorphism_max = homomorphism_defect(seed, samples.min(400))?;

    let dirac = assemble_hamiltonian(&ModelSpec::dirac(12))?;
    let pauli = assemble_hamiltonian(&ModelSpec::dirac_pauli(12))?;
    let mut hermiticity_max = 0.0f64;
    for _ in 0..16 {
        let s = gen.sample();
        for h in [&dirac.h, &pauli.h] {
            for e in h.entries.values() {
                let m = eval_expr(e, &s)?;
                hermiticity_max = hermiticity_max.max(norm(&(m - m.adjoint())) / (1.0 + norm(&m)));
            }
        }
    }

    let mut slopes = Vec::new();
    let mut record = |label: &str, l: usize, xi: f64, expected: f64, layout: FieldLayout, g: f64, h: &crate::engine::SeriesByOrder| -> Result<(), NumericError> {
        let s = convergence_sample(&mut gen, xi, layout, g);
        let r = convergence_check(h, l, &s, &[1.0, 0.5, 0.25])?;
        let passed = r.slopes.iter().all(|x| (x - expected).abs() <= SLOPE_TOL);
        slopes.push(SlopeRecord { label: label.to_string(), max_order: l, xi, expected, slopes: r.slopes, deltas: r.deltas, passed });
        Ok(())
    };
    for l in [0usize, 2, 6, 12] {
        record("dirac, E parallel to pi", l, 0.5, (l + 2) as f64, FieldLayout::Zeeman, 2.0, &dirac.h)?;
    }
    for l in [2usize, 6] {
        record("dirac, generic fields", l, 0.5, (l + 1) as f64, FieldLayout::Generic, 2.0, &dirac.h)?;
    }
    for l in [2usize, 6, 12] {
        record("dirac-pauli, E parallel to pi", l, 0.5, (l + 2) as f64, FieldLayout::Zeeman, 2.4, &pauli.h)?;
    }
    Ok(NumericReport {
        seed,
        samples,
        residual_stats: ResidualStats {
            free_particle_max: fp_max,
            free_particle_mean: if samples == 0 { 0.0 } else { fp_sum / samples as f64 },
            homomorphism_max,
            hermiticity_max,
        },
        slopes,
    })
}
