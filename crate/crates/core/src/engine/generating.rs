use serde::{Deserialize, Serialize};

use super::{inhomogeneous, mu2, EngineError, ModelSpec, SeriesByOrder};
use crate::algebra::ops::{sb, se, sp};
use crate::algebra::{Coefficient, Mode, OperatorExpr};

/// Whether `[V, X]` is kept (`General`) or dropped (`Constant`, no electric field).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PotentialKind {
    General,
    Constant,
}

/// Right-hand side of `2m X_l = ...` using only orders below `l`.
fn rhs(spec: &ModelSpec, x: &SeriesByOrder, xs: &[OperatorExpr], l: usize, potential: PotentialKind) -> Result<OperatorExpr, EngineError> {
    let mut out = OperatorExpr::zero(Mode::Homogeneous);
    if l == 1 {
        out = &out + &sp();
    }
    // - sum_{k1 + k2 = l - 1} X_k1 (s.pi) X_k2
    for k1 in 1..l.saturating_sub(1) {
        let k2 = l - 1 - k1;
        if k2 == 0 || xs[k1].is_zero() {
            continue;
        }
        let xk2 = x.get(k2);
        if xk2.is_zero() {
            continue;
        }
        out = &out - &xs[k1].mul(&xk2)?;
    }
    if potential == PotentialKind::General && l >= 3 {
        out = &out + &x.get(l - 2).commute_with_v()?;
    }
    if spec.anomalous() && l >= 3 {
        let imu = mu2().times_i();
        if l == 3 {
            out = &out - &se().scale(&imu);
        }
        // - i mu'' sum_{k1 + k2 = l - 3} X_k1 (s.E) X_k2
        for k1 in 1..l.saturating_sub(3) {
            let k2 = l - 3 - k1;
            if k2 == 0 {
                continue;
            }
            let t = x.get(k1).mul(&se())?.mul(&x.get(k2))?;
            out = &out - &t.scale(&imu);
        }
        // + mu'' {X_{l-3}, s.B}
        let xl = x.get(l - 3);
        if !xl.is_zero() {
            let anti = &xl.mul(&sb())? + &sb().mul(&xl)?;
            out = &out + &anti.scale(&mu2());
        }
    }
    Ok(out)
}

fn times_sp(x: &SeriesByOrder, upto: usize) -> Result<Vec<OperatorExpr>, EngineError> {
    (0..=upto).map(|k| Ok(x.get(k).mul(&sp())?)).collect()
}

/// Solves for X order by order, through `max_order + 1`.
pub fn solve_generating_operator(spec: &ModelSpec) -> Result<SeriesByOrder, EngineError> {
    spec.validate()?;
    if spec.mode == Mode::Inhomogeneous {
        return Ok(inhomogeneous::inhomogeneous_low_order(spec)?.x);
    }
    let top = spec.max_order + 1;
    let mut x = SeriesByOrder::new(spec.model, top);
    let mut xs = vec![OperatorExpr::zero(Mode::Homogeneous); top + 1];
    let half_over_m = Coefficient::new(1, 2).inv_m(1);
    for l in 1..=top {
        let r = rhs(spec, &x, &xs, l, PotentialKind::General)?;
        let xl = r.scale(&half_over_m);
        xs[l] = xl.mul(&sp())?;
        x.set(l, xl);
    }
    Ok(x)
}

/// Per-order residuals `2m X_l - rhs_l` of a supplied X series.
pub fn residuals(spec: &ModelSpec, x: &SeriesByOrder, potential: PotentialKind) -> Result<SeriesByOrder, EngineError> {
    let mut out = SeriesByOrder::new(spec.model, x.max_order);
    let xs = times_sp(x, x.max_order)?;
    let two_m = Coefficient::new(2, 1).inv_m(-1);
    for l in 1..=x.max_order {
        let r = &x.get(l).scale(&two_m) - &rhs(spec, x, &xs, l, potential)?;
        out.set(l, r);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConsistencyReport {
    pub passed: bool,
    pub orders_checked: usize,
    pub first_failing_order: Option<usize>,
    /// Rendered residual terms at the first failing order.
    pub offending_terms: Vec<String>,
    pub error: Option<String>,
}

/// Substitutes X back into its defining equation order by order.
pub fn verify_self_consistency(spec: &ModelSpec, x: &SeriesByOrder, potential: PotentialKind) -> ConsistencyReport {
    match residuals(spec, x, potential) {
        Ok(r) => {
            let first = r.entries.iter().next();
            ConsistencyReport {
                passed: first.is_none(),
                orders_checked: x.max_order,
                first_failing_order: first.map(|(k, _)| *k),
                offending_terms: first
                    .map(|(_, e)| e.terms().map(|(k, v)| {
                        OperatorExpr::from_single(e.mode(), k, v).to_text()
                    }).collect())
                    .unwrap_or_default(),
                error: None,
            }
        }
        Err(e) => ConsistencyReport {
            passed: false,
            orders_checked: 0,
            first_failing_order: None,
            offending_terms: Vec::new(),
            error: Some(e.to_string()),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Tail;

    #[test]
    fn first_orders() {
        let x = solve_generating_operator(&ModelSpec::dirac(2)).unwrap();
        let x1 = OperatorExpr::monomial(Mode::Homogeneous, Coefficient::new(1, 2).inv_m(1), 0, Tail::SigmaPi);
        assert_eq!(x.get(1), x1);
        assert!(x.get(2).is_zero());
        assert!(verify_self_consistency(&ModelSpec::dirac(2), &x, PotentialKind::General).passed);
    }

    #[test]
    fn corrupted_series_reports_first_failing_order() {
        let spec = ModelSpec::dirac(6);
        let mut x = solve_generating_operator(&spec).unwrap();
        let bad = &x.get(5) + &OperatorExpr::term(Mode::Homogeneous, 1, 7, 2, Tail::SigmaPi);
        x.set(5, bad);
        let rep = verify_self_consistency(&spec, &x, PotentialKind::General);
        assert!(!rep.passed);
        assert_eq!(rep.first_failing_order, Some(5));
        assert!(!rep.offending_terms.is_empty());
    }
}
