use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::eval::{eval_expr, norm};
use super::{NumericError, NumericSample, SampleGenerator};
use crate::algebra::{Coefficient, Mode, OperatorExpr, Symbols, Tail};

/// Random canonical expressions over a chosen set of tails.
pub struct ExprGenerator {
    rng: ChaCha8Rng,
}

impl ExprGenerator {
    pub fn new(seed: u64) -> Self {
        ExprGenerator { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn expr(&mut self, tails: &[Tail], max_terms: usize, max_p2: u32) -> OperatorExpr {
        let mut e = OperatorExpr::zero(Mode::Homogeneous);
        let n = self.rng.gen_range(1..=max_terms);
        for _ in 0..n {
            let t = *tails.choose(&mut self.rng).expect("nonempty tails");
            let num = self.rng.gen_range(-9i64..=9);
            let den = self.rng.gen_range(1i64..=8);
            let mut c = Coefficient::new(num, den).with(Symbols::inv_m(self.rng.gen_range(0..3)));
            if self.rng.gen_bool(0.5) {
                c = c.times_i();
            }
            e = &e + &OperatorExpr::monomial(Mode::Homogeneous, c, self.rng.gen_range(0..=max_p2), t);
        }
        e
    }
}

pub const FIELD_FREE: [Tail; 2] = [Tail::Unit, Tail::SigmaPi];
pub const ELECTRIC: [Tail; 4] = [Tail::EDotPi, Tail::SigmaE, Tail::SigmaExPi, Tail::EDotPiSigmaPi];
pub const MAGNETIC: [Tail; 4] = [Tail::BDotPi, Tail::SigmaB, Tail::SigmaBxPi, Tail::BDotPiSigmaPi];

fn relative(a: &OperatorExpr, b: &OperatorExpr, lhs: &OperatorExpr, rhs_extra: Option<&OperatorExpr>, s: &NumericSample) -> Result<f64, NumericError> {
    let (ea, eb) = (eval_expr(a, s)?, eval_expr(b, s)?);
    let mut want = ea * eb;
    if let Some(r) = rhs_extra {
        want += eval_expr(r, s)?;
    }
    Ok(norm(&(eval_expr(lhs, s)? - want)) / (1.0 + norm(&ea) * norm(&eb)))
}

/// Largest relative defect of `eval(a b) = eval(a) eval(b)` over `n` random
/// pairs.
///
/// With `B = 0` one factor is field free and the other may carry `E`; no
/// commutator term and no dropped product can contribute. With `E = 0` both
/// factors are field free and the `q hbar/c` magnetic terms produced by
/// `[pi_i, pi_j]` are the tracked remainder.
pub fn homomorphism_defect(seed: u64, n: usize) -> Result<f64, NumericError> {
    let mut gen = ExprGenerator::new(seed);
    let mut samples = SampleGenerator::new(seed ^ 0x9e37_79b9);
    let mut worst = 0.0f64;
    let mixed: Vec<Tail> = FIELD_FREE.iter().chain(ELECTRIC.iter()).copied().collect();
    for k in 0..n {
        let mut s = samples.sample();
        let e_only = k % 2 == 0;
        if e_only {
            s.b = [0.0; 3];
            let (a, b) = if k % 4 == 0 {
                (gen.expr(&FIELD_FREE, 3, 3), gen.expr(&mixed, 3, 3))
            } else {
                (gen.expr(&mixed, 3, 3), gen.expr(&FIELD_FREE, 3, 3))
            };
            let ab = a.mul(&b)?;
            worst = worst.max(relative(&a, &b, &ab, None, &s)?);
            let sum = &a + &b;
            let d = norm(&(eval_expr(&sum, &s)? - eval_expr(&a, &s)? - eval_expr(&b, &s)?));
            worst = worst.max(d / (1.0 + norm(&eval_expr(&a, &s)?) + norm(&eval_expr(&b, &s)?)));
        } else {
            s.e = [0.0; 3];
            let a = gen.expr(&FIELD_FREE, 3, 3);
            let b = gen.expr(&FIELD_FREE, 3, 3);
            let ab = a.mul(&b)?;
            let remainder = ab.field_linear_part();
            if remainder.terms().any(|(k, _)| k.sym.q < 1 || k.sym.hbar < 1 || k.sym.inv_c < 1) {
                return Err(NumericError::UntrackedRemainder);
            }
            worst = worst.max(relative(&a, &b, &ab, Some(&remainder), &s)?);
        }
    }
    Ok(worst)
}
