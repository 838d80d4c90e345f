use nalgebra::{Matrix2, Vector3};
use num_complex::Complex64;
use num_traits::ToPrimitive;

use super::{NumericError, NumericSample};
use crate::algebra::{Mode, OperatorExpr, Symbols, Tail};
use crate::engine::SeriesByOrder;

pub type Mat2 = Matrix2<Complex64>;

/// `(sigma_x, sigma_y, sigma_z)`
pub fn pauli() -> [Mat2; 3] {
    let o = Complex64::new(0.0, 0.0);
    let l = Complex64::new(1.0, 0.0);
    let i = Complex64::new(0.0, 1.0);
    [Matrix2::new(o, l, l, o), Matrix2::new(o, -i, i, o), Matrix2::new(l, o, o, -l)]
}

/// `sigma . v`
pub fn sigma_dot(v: &Vector3<f64>) -> Mat2 {
    let s = pauli();
    s[0] * Complex64::from(v.x) + s[1] * Complex64::from(v.y) + s[2] * Complex64::from(v.z)
}

fn identity() -> Mat2 {
    Mat2::identity()
}

pub fn symbols_value(sym: &Symbols, s: &NumericSample) -> f64 {
    s.hbar.powi(sym.hbar) * s.q.powi(sym.q) * s.m.powi(-sym.inv_m) * s.c.powi(-sym.inv_c) * s.kappa().powi(sym.kappa)
}

pub fn tail_matrix(t: Tail, s: &NumericSample) -> Result<Mat2, NumericError> {
    let (p, e, b) = (s.pi_vec(), s.e_vec(), s.b_vec());
    let scalar = |x: f64| identity() * Complex64::from(x);
    Ok(match t {
        Tail::Unit => identity(),
        Tail::EDotPi => scalar(e.dot(&p)),
        Tail::BDotPi => scalar(b.dot(&p)),
        Tail::DivE => return Err(NumericError::Inhomogeneous),
        Tail::SigmaPi => sigma_dot(&p),
        Tail::SigmaE => sigma_dot(&e),
        Tail::SigmaB => sigma_dot(&b),
        Tail::SigmaExPi => sigma_dot(&e.cross(&p)),
        Tail::SigmaBxPi => sigma_dot(&b.cross(&p)),
        Tail::EDotPiSigmaPi => sigma_dot(&p) * Complex64::from(e.dot(&p)),
        Tail::BDotPiSigmaPi => sigma_dot(&p) * Complex64::from(b.dot(&p)),
        Tail::Potential => scalar(s.v),
    })
}

/// Evaluates an expression with the components of `pi` treated as commuting
/// numbers.
pub fn eval_expr(a: &OperatorExpr, s: &NumericSample) -> Result<Mat2, NumericError> {
    if a.mode() == Mode::Inhomogeneous {
        return Err(NumericError::Inhomogeneous);
    }
    let p2 = s.pi_vec().norm_squared();
    let mut out = Mat2::zeros();
    for (key, v) in a.terms() {
        let c = Complex64::new(v.re.to_f64().unwrap_or(f64::NAN), v.im.to_f64().unwrap_or(f64::NAN))
            * symbols_value(&key.sym, s)
            * p2.powi(key.monomial.p2 as i32);
        out += tail_matrix(key.monomial.tail, s)? * c;
    }
    Ok(out)
}

/// `sum_{l <= max_order} c^-l entry_l`
pub fn eval_series(h: &SeriesByOrder, max_order: usize, s: &NumericSample) -> Result<Mat2, NumericError> {
    let mut out = Mat2::zeros();
    for (k, e) in h.entries.range(..=max_order) {
        out += eval_expr(e, s)? * Complex64::from(s.c.powi(-(*k as i32)));
    }
    Ok(out)
}

/// Frobenius norm.
pub fn norm(m: &Mat2) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}
