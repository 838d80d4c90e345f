use serde::{Deserialize, Serialize};

use super::{
    energy_operator, exponent_operator, inhomogeneous, solve_generating_operator, split_series, string_series,
    verify_self_consistency, y_series, ConsistencyReport, EngineError, Model, ModelSpec, PotentialKind, SeriesByOrder,
};
use crate::algebra::{check_dimension, DimensionVector, Mode, OperatorExpr, Tail};

/// Every series produced by one run of the pipeline.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipelineResult {
    pub spec: ModelSpec,
    pub x: SeriesByOrder,
    pub a: SeriesByOrder,
    pub a_h: SeriesByOrder,
    pub a_n: SeriesByOrder,
    pub y: SeriesByOrder,
    pub g: SeriesByOrder,
    pub s: SeriesByOrder,
    /// `c^l H^(l)`; the rest energy `m c^2` is implicit.
    pub h: SeriesByOrder,
    pub residuals: ConsistencyReport,
}

/// Runs the full pipeline for `spec`.
pub fn assemble_hamiltonian(spec: &ModelSpec) -> Result<PipelineResult, EngineError> {
    spec.validate()?;
    if spec.mode == Mode::Inhomogeneous {
        return inhomogeneous::inhomogeneous_low_order(spec);
    }
    let l = spec.max_order;
    let x = solve_generating_operator(spec)?;
    let a = energy_operator(&x, spec)?;
    let (a_h, a_n) = split_series(&a);
    let y = y_series(&x, l)?;
    let g = exponent_operator(&x, l)?;
    let s = string_series(&g, &a_h, &a_n, l)?;
    let mut h = SeriesByOrder::new(spec.model, l);
    for k in 0..=l {
        h.set(k, &a_h.get(k) + &s.get(k));
    }
    let residuals = verify_self_consistency(spec, &x, PotentialKind::General);
    Ok(PipelineResult { spec: *spec, x, a, a_h, a_n, y, g, s, h, residuals })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub details: Vec<String>,
}

impl CheckOutcome {
    pub fn from_failures(name: &str, failures: Vec<String>) -> Self {
        CheckOutcome { name: name.to_string(), passed: failures.is_empty(), details: failures }
    }
}

/// Checks `H^dagger = H` and `S^dagger = S` at every order, along with the
/// split identities `A^H + A^N = A`, `(A^H)^dagger = A^H`, `(A^N)^dagger = -A^N`
/// and `H = A^H + S`.
pub fn hermiticity_check(r: &PipelineResult) -> CheckOutcome {
    let mut failures = Vec::new();
    for k in 0..=r.spec.max_order {
        let h = r.h.get(k);
        if h.adjoint() != h {
            failures.push(format!("H at order {} is not hermitian", k));
        }
        let s = r.s.get(k);
        if s.adjoint() != s {
            failures.push(format!("S at order {} is not hermitian", k));
        }
        let (a, ah, an) = (r.a.get(k), r.a_h.get(k), r.a_n.get(k));
        if sum(&ah, &an) != a.with_mode(ah.mode()) && !(a.is_zero() && sum(&ah, &an).is_zero()) {
            failures.push(format!("A^H + A^N differs from A at order {}", k));
        }
        if ah.adjoint() != ah {
            failures.push(format!("A^H at order {} is not hermitian", k));
        }
        if an.adjoint() != -&an {
            failures.push(format!("A^N at order {} is not anti-hermitian", k));
        }
        if h != sum(&ah, &s) && !(h.is_zero() && sum(&ah, &s).is_zero()) {
            failures.push(format!("H differs from A^H + S at order {}", k));
        }
    }
    CheckOutcome::from_failures("hermiticity", failures)
}

/// Sum that tolerates the homogeneous zero returned for absent orders.
fn sum(a: &OperatorExpr, b: &OperatorExpr) -> OperatorExpr {
    match (a.is_zero(), b.is_zero()) {
        (true, _) => b.clone(),
        (_, true) => a.clone(),
        _ => a + b,
    }
}

/// Tails that are odd under parity (`pi -> -pi`, `E -> -E`, `B -> B`, `s -> s`).
pub fn parity_odd(t: Tail) -> bool {
    matches!(t, Tail::SigmaPi | Tail::BDotPi | Tail::SigmaE | Tail::SigmaBxPi | Tail::EDotPiSigmaPi)
}

fn check_tails(name: &str, s: &SeriesByOrder, odd: bool, failures: &mut Vec<String>) {
    for (k, e) in &s.entries {
        for (key, _) in e.terms() {
            let t = key.monomial.tail;
            if parity_odd(t) != odd {
                failures.push(format!("{} at order {} contains {:?}", name, k, t));
            }
            if key.sym.kappa < 0 || key.sym.kappa > 1 {
                failures.push(format!("{} at order {} is not affine in kappa", name, k));
            }
            if key.sym.kappa == 1 && t.field_degree() == 0 {
                failures.push(format!("{} at order {} has a field-free kappa term", name, k));
            }
        }
    }
}

fn check_order_parity(name: &str, s: &SeriesByOrder, odd: bool, failures: &mut Vec<String>) {
    for k in s.entries.keys() {
        if (k % 2 == 1) != odd {
            failures.push(format!("{} has an entry at order {}", name, k));
        }
    }
}

/// Parity, order-parity and kappa-affinity structure of every series.
pub fn structural_check(r: &PipelineResult) -> CheckOutcome {
    let mut failures = Vec::new();
    check_tails("X", &r.x, true, &mut failures);
    for (name, s) in [("A^H", &r.a_h), ("A^N", &r.a_n), ("y", &r.y), ("G", &r.g), ("S", &r.s), ("H", &r.h)] {
        check_tails(name, s, false, &mut failures);
    }
    if r.spec.model == Model::Dirac {
        check_order_parity("X", &r.x, true, &mut failures);
        for (name, s) in [("A", &r.a), ("y", &r.y), ("G", &r.g), ("S", &r.s), ("H", &r.h)] {
            check_order_parity(name, s, false, &mut failures);
        }
    }
    for (k, e) in &r.h.entries {
        for (key, _) in e.terms() {
            if !matches!(
                key.monomial.tail,
                Tail::Unit | Tail::Potential | Tail::SigmaB | Tail::SigmaExPi | Tail::BDotPiSigmaPi | Tail::DivE
            ) {
                failures.push(format!("H at order {} contains {:?}", k, key.monomial.tail));
            }
        }
    }
    CheckOutcome::from_failures("structure", failures)
}

fn check_series_dimension(name: &str, s: &SeriesByOrder, base: DimensionVector, failures: &mut Vec<String>) {
    for (k, e) in &s.entries {
        let want = base.plus(DimensionVector::velocity().times(*k as i32));
        if let Err(m) = check_dimension(e, want) {
            failures.push(format!("{} at order {}: {}", name, k, m));
        }
    }
}

/// Every entry at order `l` must carry the base dimension times `c^l`.
pub fn dimension_check(r: &PipelineResult) -> CheckOutcome {
    let mut failures = Vec::new();
    let e = DimensionVector::energy();
    let one = DimensionVector::dimensionless();
    check_series_dimension("X", &r.x, one, &mut failures);
    check_series_dimension("y", &r.y, one, &mut failures);
    check_series_dimension("G", &r.g, one, &mut failures);
    for (name, s) in [("A", &r.a), ("A^H", &r.a_h), ("A^N", &r.a_n), ("S", &r.s), ("H", &r.h)] {
        check_series_dimension(name, s, e, &mut failures);
    }
    CheckOutcome::from_failures("dimensions", failures)
}
