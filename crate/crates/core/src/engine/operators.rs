use num_bigint::BigInt;
use num_rational::BigRational;

use super::{mu2, EngineError, ModelSpec, SeriesByOrder};
use crate::algebra::ops::{sb, se, sp, v};
use crate::algebra::{Mode, OperatorExpr};

/// Energy operator `A_l = (s.pi) X_{l+1}` plus `V` at order 0 and the
/// anomalous `V_B`, `i V_E X` pieces.
pub fn energy_operator(x: &SeriesByOrder, spec: &ModelSpec) -> Result<SeriesByOrder, EngineError> {
    if x.max_order < spec.max_order + 1 {
        return Err(EngineError::MissingOrder(spec.max_order + 1));
    }
    let mut a = SeriesByOrder::new(spec.model, spec.max_order);
    for l in 0..=spec.max_order {
        let mut e = sp().mul(&x.get(l + 1))?;
        if l == 0 {
            e = &e + &v();
        }
        if spec.anomalous() {
            if l == 1 {
                e = &e - &sb().scale(&mu2());
            }
            if l >= 2 {
                e = &e + &se().mul(&x.get(l - 1))?.scale(&mu2().times_i());
            }
        }
        a.set(l, e);
    }
    Ok(a)
}

/// Hermitian and anti-hermitian parts of every entry.
pub fn split_series(a: &SeriesByOrder) -> (SeriesByOrder, SeriesByOrder) {
    let mut h = SeriesByOrder::new(a.model, a.max_order);
    let mut n = SeriesByOrder::new(a.model, a.max_order);
    for (k, e) in &a.entries {
        let (eh, en) = e.hermitian_split();
        h.set(*k, eh);
        n.set(*k, en);
    }
    (h, n)
}

/// `y_l = sum_{k1 + k2 = l} X_k1^dagger X_k2`.
pub fn y_series(x: &SeriesByOrder, max_order: usize) -> Result<SeriesByOrder, EngineError> {
    let adj: Vec<OperatorExpr> = (0..=max_order).map(|k| x.get(k).adjoint()).collect();
    let mut y = SeriesByOrder::new(x.model, max_order);
    for l in 2..=max_order {
        let mut e = OperatorExpr::zero(Mode::Homogeneous);
        for k1 in 1..l {
            let (a, b) = (&adj[k1], x.get(l - k1));
            if a.is_zero() || b.is_zero() {
                continue;
            }
            e = &e + &a.mul(&b)?;
        }
        y.set(l, e);
    }
    Ok(y)
}

fn series_product(a: &SeriesByOrder, b: &SeriesByOrder, max_order: usize) -> Result<SeriesByOrder, EngineError> {
    let mut out = SeriesByOrder::new(a.model, max_order);
    for (ka, ea) in &a.entries {
        for (kb, eb) in b.entries.range(..=max_order.saturating_sub(*ka)) {
            out.add_to(ka + kb, &ea.mul(eb)?);
        }
    }
    Ok(out)
}

/// `G = ln(1 + y) = sum_n (-1)^(n+1) y^n / n`, truncated at `max_order`.
pub fn exponent_operator(x: &SeriesByOrder, max_order: usize) -> Result<SeriesByOrder, EngineError> {
    let y = y_series(x, max_order)?;
    let mut g = SeriesByOrder::new(x.model, max_order);
    let mut power = y.clone();
    // y starts at order 2, so y^n starts at order 2n
    for n in 1..=max_order / 2 {
        let c = BigRational::new(BigInt::from(if n % 2 == 1 { 1 } else { -1 }), BigInt::from(n));
        for (k, e) in &power.entries {
            g.add_to(*k, &e.scale_rational(&c));
        }
        power = series_product(&power, &y, max_order)?;
    }
    Ok(g)
}

/// One more nesting level: `sum_j [G_j, C_{l-j}]` for every order.
fn nest(g: &SeriesByOrder, c: &SeriesByOrder, max_order: usize) -> Result<SeriesByOrder, EngineError> {
    let mut out = SeriesByOrder::new(c.model, max_order);
    for (kg, eg) in &g.entries {
        for (kc, ec) in c.entries.range(..=max_order.saturating_sub(*kg)) {
            out.add_to(kg + kc, &eg.commutator(ec)?);
        }
    }
    Ok(out)
}

/// String operator for every order through `max_order`.
///
/// Odd nests act on the anti-hermitian part and even nests on the hermitian
/// part, with weights `1/(n! 2^n)`. Every G entry is of order 2 or higher, so
/// a nest of depth `n` first contributes at order `2n` and the depth never
/// needs to exceed `max_order / 2`.
pub fn string_series(
    g: &SeriesByOrder,
    a_h: &SeriesByOrder,
    a_n: &SeriesByOrder,
    max_order: usize,
) -> Result<SeriesByOrder, EngineError> {
    debug_assert!(g.entries.keys().all(|k| *k >= 2));
    let mut s = SeriesByOrder::new(a_h.model, max_order);
    let mut odd = a_n.truncated(max_order);
    let mut even = a_h.truncated(max_order);
    let mut weight = BigRational::from_integer(BigInt::from(1));
    for depth in 1..=max_order / 2 {
        weight /= BigRational::from_integer(BigInt::from(2 * depth));
        odd = nest(g, &odd, max_order)?;
        even = nest(g, &even, max_order)?;
        let chain = if depth % 2 == 1 { &odd } else { &even };
        for (k, e) in &chain.entries {
            s.add_to(*k, &e.scale_rational(&weight));
        }
    }
    Ok(s)
}

/// String operator at a single order.
pub fn string_operator(
    g: &SeriesByOrder,
    a_h: &SeriesByOrder,
    a_n: &SeriesByOrder,
    order: usize,
) -> Result<OperatorExpr, EngineError> {
    Ok(string_series(g, a_h, a_n, order)?.get(order))
}
