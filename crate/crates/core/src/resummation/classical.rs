use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::series::{gamma_series_suite, RationalSeries};
use crate::algebra::{scalar, Coefficient, Mode, OperatorExpr, Symbols, Tail};
use crate::engine::{ModelSpec, SeriesByOrder};

fn mono(c: Coefficient, p2: u32, tail: Tail) -> OperatorExpr {
    OperatorExpr::monomial(Mode::Homogeneous, c, p2, tail)
}

/// `r q hbar / (2 m^inv_m)`
fn q_hbar_half(r: BigRational, inv_m: i32) -> Coefficient {
    Coefficient::from_rational(r / BigRational::from_integer(2.into())).q(1).hbar(1).inv_m(inv_m)
}

/// Expands
/// `V + m c^2 (gamma - 1) - (kappa + 1/gamma) mu.B + (g/2 - gamma/(1+gamma)) mu.(beta x E)
///  + kappa (gamma/(1+gamma)) (mu.beta)(B.beta)`
/// with `beta = xi/gamma` through 1/c order `order`. Dirac models drop the
/// `kappa` terms.
pub fn classical_hamiltonian_series(order: usize, spec: &ModelSpec) -> SeriesByOrder {
    let anomalous = spec.anomalous();
    let g = gamma_series_suite(order / 2 + 2);
    let mut out = SeriesByOrder::new(spec.model, order);
    let mut put = |ord: usize, e: OperatorExpr| {
        if ord <= order {
            out.add_to(ord, &e);
        }
    };
    put(0, mono(Coefficient::one(), 0, Tail::Potential));
    for k in 0..=(order / 2 + 1) {
        let p2 = k as u32;
        let m = 2 * k as i32;
        if k >= 1 {
            put(2 * k - 2, mono(Coefficient::from_rational(g.gamma.coeff(k)).inv_m(m - 1), p2, Tail::Unit));
        }
        // mu.B = (q hbar/2mc) s.B; the extra 1/c is explicit for g = 2
        let h = g.inv_gamma.coeff(k);
        put(2 * k, mono(q_hbar_half(-h, m + 1).inv_c(1), p2, Tail::SigmaB));
        let s = g.spin_orbit.coeff(k);
        put(2 * k + 2, mono(q_hbar_half(-s.clone(), m + 2), p2, Tail::SigmaExPi));
        if anomalous {
            let kap = |c: BigRational, shift: i32| q_hbar_half(c, m + shift).kappa(1);
            if k == 0 {
                put(1, mono(kap(-BigRational::one(), 1), 0, Tail::SigmaB));
            }
            put(2 * k + 2, mono(kap(-g.inv_gamma.coeff(k), 2), p2, Tail::SigmaExPi));
            put(2 * k + 3, mono(kap(s, 3), p2, Tail::BDotPiSigmaPi));
        }
    }
    out
}

/// Per-structure coefficient series read off a Hamiltonian, in `x = xi^2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Aggregates {
    /// `H_orbital / (m c^2)`, including the rest energy at `x^0`
    pub orbital: RationalSeries,
    /// Zeeman weight in units of `-mu.B`
    pub zeeman: RationalSeries,
    /// Spin-orbit weight in units of `-mu.(E x xi)`
    pub spin_orbit: RationalSeries,
}

/// Reads the orbital, Zeeman and spin-orbit series of a `g = 2` Hamiltonian
/// (or the `kappa^0` part of a Dirac-Pauli one) up to `x^terms`.
pub fn aggregate_series(h: &SeriesByOrder, terms: usize) -> Aggregates {
    let minus_two = BigRational::from_integer((-2).into());
    let read = |ord: usize, p2: u32, tail: Tail, sym: Symbols| -> BigRational {
        h.get(ord).real_coefficient(p2, tail, sym).unwrap_or_else(BigRational::zero)
    };
    let mut orbital = vec![BigRational::one()];
    let mut zeeman = Vec::new();
    let mut spin_orbit = Vec::new();
    for k in 0..=terms {
        let m = 2 * k as i32;
        if k >= 1 {
            orbital.push(read(2 * k - 2, k as u32, Tail::Unit, Symbols::inv_m(m - 1)));
        }
        let zs = Symbols::new(1, 1, m + 1, 1, 0);
        zeeman.push(read(2 * k, k as u32, Tail::SigmaB, zs) * &minus_two);
        let ss = Symbols::new(1, 1, m + 2, 0, 0);
        spin_orbit.push(read(2 * k + 2, k as u32, Tail::SigmaExPi, ss) * &minus_two);
    }
    Aggregates {
        orbital: RationalSeries::new(orbital, terms),
        zeeman: RationalSeries::new(zeeman, terms),
        spin_orbit: RationalSeries::new(spin_orbit, terms),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDiff {
    pub term: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderDiff {
    pub order: usize,
    pub terms: Vec<TermDiff>,
}

/// Orders at which two series differ, with the differing monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesDiff {
    pub orders: Vec<OrderDiff>,
}

impl SeriesDiff {
    pub fn is_empty(&self) -> bool {
        self.orders.is_empty()
    }

    pub fn to_text(&self) -> String {
        if self.is_empty() {
            return "no differences\n".to_string();
        }
        let mut s = String::new();
        for o in &self.orders {
            let _ = writeln!(s, "order {}:", o.order);
            for t in &o.terms {
                let _ = writeln!(s, "  {}: lhs {} | rhs {}", t.term, t.lhs, t.rhs);
            }
        }
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }
}

fn render_value(e: &OperatorExpr, key: &crate::algebra::TermKey) -> String {
    let v = e.terms().find(|(k, _)| *k == key).map(|(_, v)| v.clone());
    match v {
        Some(v) => OperatorExpr::from_single(e.mode(), key, &v).to_text(),
        None => "0".to_string(),
    }
}

/// Exact per-order difference `lhs - rhs`.
pub fn match_series(lhs: &SeriesByOrder, rhs: &SeriesByOrder) -> SeriesDiff {
    let orders: BTreeSet<usize> = lhs.entries.keys().chain(rhs.entries.keys()).copied().collect();
    let mut out = SeriesDiff::default();
    for k in orders {
        let (a, b) = (lhs.get(k), rhs.get(k));
        let b = if a.mode() == b.mode() { b } else { b.with_mode(a.mode()) };
        let d = &a - &b;
        if d.is_zero() {
            continue;
        }
        let terms = d
            .terms()
            .map(|(key, _)| TermDiff {
                term: OperatorExpr::from_single(d.mode(), key, &scalar(1, 1)).to_text(),
                lhs: render_value(&a, key),
                rhs: render_value(&b, key),
            })
            .collect();
        out.orders.push(OrderDiff { order: k, terms });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::assemble_hamiltonian;

    #[test]
    fn dirac_matches_classical() {
        let spec = ModelSpec::dirac(12);
        let r = assemble_hamiltonian(&spec).unwrap();
        let d = match_series(&r.h, &classical_hamiltonian_series(12, &spec));
        assert!(d.is_empty(), "{}", d.to_text());
    }

    #[test]
    fn dirac_pauli_matches_classical() {
        let spec = ModelSpec::dirac_pauli(12);
        let r = assemble_hamiltonian(&spec).unwrap();
        let d = match_series(&r.h, &classical_hamiltonian_series(12, &spec));
        assert!(d.is_empty(), "{}", d.to_text());
    }

    #[test]
    fn self_match_is_empty() {
        let c = classical_hamiltonian_series(6, &ModelSpec::dirac_pauli(6));
        assert!(match_series(&c, &c).is_empty());
    }
}
