use nalgebra::Vector3;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// A numeric assignment of every symbol of the algebra.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct NumericSample {
    pub pi: [f64; 3],
    pub e: [f64; 3],
    pub b: [f64; 3],
    pub m: f64,
    pub c: f64,
    pub hbar: f64,
    pub q: f64,
    pub g: f64,
    /// Value of the potential energy `V`, treated as a constant.
    pub v: f64,
}

impl NumericSample {
    /// `m = c = hbar = q = 1`, `g = 2`, `V = 0`.
    pub fn natural(pi: [f64; 3], e: [f64; 3], b: [f64; 3]) -> Self {
        NumericSample { pi, e, b, m: 1.0, c: 1.0, hbar: 1.0, q: 1.0, g: 2.0, v: 0.0 }
    }

    pub fn kappa(&self) -> f64 {
        self.g / 2.0 - 1.0
    }

    pub fn pi_vec(&self) -> Vector3<f64> {
        Vector3::from(self.pi)
    }

    pub fn e_vec(&self) -> Vector3<f64> {
        Vector3::from(self.e)
    }

    pub fn b_vec(&self) -> Vector3<f64> {
        Vector3::from(self.b)
    }

    /// `|xi| = |pi|/(m c)`
    pub fn xi_norm(&self) -> f64 {
        self.pi_vec().norm() / (self.m * self.c)
    }

    /// The same sample with `pi -> lambda pi`.
    pub fn scaled(&self, lambda: f64) -> Self {
        NumericSample { pi: (self.pi_vec() * lambda).into(), ..*self }
    }
}

/// Seeded generator of samples.
pub struct SampleGenerator {
    rng: ChaCha8Rng,
}

impl SampleGenerator {
    pub fn new(seed: u64) -> Self {
        SampleGenerator { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// Uniform in the ball of radius `r`.
    pub fn vector_in_ball(&mut self, r: f64) -> [f64; 3] {
        loop {
            let v = Vector3::new(self.rng.gen_range(-1.0..1.0), self.rng.gen_range(-1.0..1.0), self.rng.gen_range(-1.0..1.0));
            if v.norm_squared() <= 1.0 {
                return (v * r).into();
            }
        }
    }

    pub fn unit_vector(&mut self) -> [f64; 3] {
        loop {
            let v = Vector3::from(self.vector_in_ball(1.0));
            let n = v.norm();
            if n > 1e-3 {
                return (v / n).into();
            }
        }
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.gen_range(lo..hi)
    }

    /// Random constants of order one, with `|pi| <= m c` and weak fields.
    pub fn sample(&mut self) -> NumericSample {
        let m = self.uniform(0.5, 2.0);
        let c = self.uniform(0.5, 2.0);
        NumericSample {
            pi: self.vector_in_ball(m * c),
            e: self.vector_in_ball(0.1),
            b: self.vector_in_ball(0.1),
            m,
            c,
            hbar: self.uniform(0.5, 2.0),
            q: if self.rng.gen_bool(0.5) { 1.0 } else { -1.0 } * self.uniform(0.5, 2.0),
            g: self.uniform(1.5, 2.5),
            v: self.uniform(-0.1, 0.1),
        }
    }
}
