//! Second-order diagonalization with position-dependent static fields.
//!
//! Products are formed as exact words and only reduced to the canonical
//! basis at the end, so no ordering assumption is made until then.

use super::{ConsistencyReport, EngineError, ModelSpec, PipelineResult, SeriesByOrder};
use crate::algebra::{Coefficient, Letter, WordExpr};

fn half(w: &WordExpr) -> WordExpr {
    w.scale(&Coefficient::new(1, 2))
}

fn split(w: &WordExpr) -> (WordExpr, WordExpr) {
    let adj = w.adjoint();
    (half(&w.add(&adj)), half(&w.sub(&adj)))
}

fn reduce_all(words: &[(usize, &WordExpr)], spec: &ModelSpec) -> Result<SeriesByOrder, EngineError> {
    let mut out = SeriesByOrder::new(spec.model, spec.max_order + 1);
    for (k, w) in words {
        out.set(*k, w.reduce()?);
    }
    Ok(out)
}

/// Runs the pipeline through order 2 without assuming constant fields.
pub fn inhomogeneous_low_order(spec: &ModelSpec) -> Result<PipelineResult, EngineError> {
    if spec.max_order > 2 {
        return Err(EngineError::InhomogeneousOrder(spec.max_order));
    }
    if spec.anomalous() {
        return Err(EngineError::Algebra(crate::algebra::AlgebraError::UnsupportedInhomogeneous(
            "anomalous moment".into(),
        )));
    }
    let s = WordExpr::letter(Letter::SigmaPi);
    let v = WordExpr::letter(Letter::Potential);
    let over_2m = Coefficient::new(1, 2).inv_m(1);

    let x1 = s.scale(&over_2m);
    let x3 = x1.mul(&s).mul(&x1).scale(&Coefficient::new(-1, 1)).add(&x1.commute_with_v()).scale(&over_2m);
    let a0 = v.add(&s.mul(&x1));
    let a2 = s.mul(&x3);
    let (a0h, a0n) = split(&a0);
    let (a2h, a2n) = split(&a2);
    let y2 = x1.adjoint().mul(&x1);
    let g2 = y2.clone();
    let s0 = WordExpr::zero();
    let s2 = half(&g2.commutator(&a0n));
    let h0 = a0h.add(&s0);
    let h2 = a2h.add(&s2);

    // the defining equation, re-checked on words
    let two_m = Coefficient::new(2, 1).inv_m(-1);
    let r1 = x1.scale(&two_m).sub(&s);
    let r3 = x3.scale(&two_m).sub(&x1.mul(&s).mul(&x1).scale(&Coefficient::new(-1, 1)).add(&x1.commute_with_v()));
    let failing = [(1usize, &r1), (3, &r3)].into_iter().find(|(_, r)| !r.is_zero());
    let residuals = ConsistencyReport {
        passed: failing.is_none(),
        orders_checked: 3,
        first_failing_order: failing.map(|(k, _)| k),
        offending_terms: failing.map(|(_, r)| vec![r.to_string()]).unwrap_or_default(),
        error: None,
    };

    let top = spec.max_order;
    let keep = |pairs: Vec<(usize, &'static str, WordExpr)>| -> Vec<(usize, WordExpr)> {
        pairs.into_iter().filter(|(k, _, _)| *k <= top).map(|(k, _, w)| (k, w)).collect()
    };
    let to_series = |v: Vec<(usize, WordExpr)>| -> Result<SeriesByOrder, EngineError> {
        let refs: Vec<(usize, &WordExpr)> = v.iter().map(|(k, w)| (*k, w)).collect();
        let mut out = reduce_all(&refs, spec)?;
        out.max_order = top;
        Ok(out)
    };
    let mut x = reduce_all(&[(1, &x1), (3, &x3)].into_iter().filter(|(k, _)| *k <= top + 1).collect::<Vec<_>>(), spec)?;
    x.max_order = top + 1;
    Ok(PipelineResult {
        spec: *spec,
        x,
        a: to_series(keep(vec![(0, "A", a0), (2, "A", a2)]))?,
        a_h: to_series(keep(vec![(0, "A^H", a0h), (2, "A^H", a2h)]))?,
        a_n: to_series(keep(vec![(0, "A^N", a0n), (2, "A^N", a2n)]))?,
        y: to_series(keep(vec![(2, "y", y2)]))?,
        g: to_series(keep(vec![(2, "G", g2)]))?,
        s: to_series(keep(vec![(0, "S", s0), (2, "S", s2)]))?,
        h: to_series(keep(vec![(0, "H", h0), (2, "H", h2)]))?,
        residuals,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Mode, Symbols, Tail};

    #[test]
    fn darwin_and_spin_orbit() {
        let r = inhomogeneous_low_order(&ModelSpec::inhomogeneous(2)).unwrap();
        let h2 = r.h.get(2);
        assert_eq!(h2.mode(), Mode::Inhomogeneous);
        let darwin = h2.coefficient_of(0, Tail::DivE, Symbols::new(2, 1, 2, 0, 0));
        assert_eq!(darwin, crate::algebra::scalar(-1, 8));
        let so = h2.coefficient_of(0, Tail::SigmaExPi, Symbols::new(1, 1, 2, 0, 0));
        assert_eq!(so, crate::algebra::scalar(-1, 4));
    }

    #[test]
    fn rejects_higher_orders() {
        assert!(inhomogeneous_low_order(&ModelSpec::inhomogeneous(4)).is_err());
    }
}
