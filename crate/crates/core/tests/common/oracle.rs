//! Brute-force component algebra: operators are expanded into Pauli matrices,
//! explicit field components and normal-ordered strings of `pi_x, pi_y, pi_z`.
//! Commutation is done one adjacent swap at a time.

use std::collections::BTreeMap;

use fw_core::algebra::{scalar, Mode, OperatorExpr, Scalar, Symbols, Tail};
use num_traits::Zero;

/// Field factor: (0 = E, 1 = B, axis).
pub type Field = Option<(u8, u8)>;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Basis {
    pub pauli: u8,
    pub field: Field,
    pub pis: Vec<u8>,
    pub sym: Symbols,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Comp {
    pub terms: BTreeMap<Basis, Scalar>,
}

fn i_unit() -> Scalar {
    Scalar::new(num_traits::zero(), num_traits::one())
}

fn levi(i: u8, j: u8, k: u8) -> i64 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1,
        _ => 0,
    }
}

/// sigma_a sigma_b for a, b in 0..4 (0 is the identity).
fn pauli_mul(a: u8, b: u8) -> (Scalar, u8) {
    if a == 0 {
        return (scalar(1, 1), b);
    }
    if b == 0 {
        return (scalar(1, 1), a);
    }
    if a == b {
        return (scalar(1, 1), 0);
    }
    let c = 6 - a - b;
    let e = levi(a - 1, b - 1, c - 1);
    (i_unit() * scalar(e, 1), c)
}

/// Normal orders a pi string, returning (factor, extra B axis, sorted string).
/// Commutator branches are dropped once a field is already present.
fn normal_order(pis: Vec<u8>, has_field: bool) -> Vec<(Scalar, Option<u8>, Vec<u8>)> {
    let pos = (0..pis.len().saturating_sub(1)).find(|&k| pis[k] > pis[k + 1]);
    let Some(k) = pos else {
        return vec![(scalar(1, 1), None, pis)];
    };
    let mut out = Vec::new();
    let mut swapped = pis.clone();
    swapped.swap(k, k + 1);
    out.extend(normal_order(swapped, has_field));
    if !has_field {
        // pi_j pi_i = pi_i pi_j + i beta eps_{j i l} B_l
        let (j, i) = (pis[k], pis[k + 1]);
        let l = 3 - i - j;
        let e = levi(j, i, l);
        let mut rest = pis[..k].to_vec();
        rest.extend_from_slice(&pis[k + 2..]);
        for (f, extra, s) in normal_order(rest, true) {
            assert!(extra.is_none());
            out.push((f * i_unit() * scalar(e, 1), Some(l), s));
        }
    }
    out
}

impl Comp {
    pub fn zero() -> Self {
        Comp::default()
    }

    fn add_basis(&mut self, b: Basis, v: Scalar) {
        if v.is_zero() {
            return;
        }
        let e = self.terms.entry(b.clone()).or_insert_with(Scalar::zero);
        *e = &*e + v;
        if e.is_zero() {
            self.terms.remove(&b);
        }
    }

    fn single(pauli: u8, field: Field, pis: Vec<u8>) -> Self {
        let mut c = Comp::zero();
        c.add_basis(Basis { pauli, field, pis, sym: Symbols::NONE }, scalar(1, 1));
        c
    }

    pub fn one() -> Self {
        Self::single(0, None, vec![])
    }

    pub fn sigma(i: u8) -> Self {
        Self::single(i + 1, None, vec![])
    }

    pub fn pi(i: u8) -> Self {
        Self::single(0, None, vec![i])
    }

    pub fn e(i: u8) -> Self {
        Self::single(0, Some((0, i)), vec![])
    }

    pub fn b(i: u8) -> Self {
        Self::single(0, Some((1, i)), vec![])
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (b, v) in &o.terms {
            out.add_basis(b.clone(), v.clone());
        }
        out
    }

    pub fn scale(&self, s: &Scalar, sym: Symbols) -> Self {
        let mut out = Comp::zero();
        for (b, v) in &self.terms {
            let mut nb = b.clone();
            nb.sym = nb.sym.combine(sym);
            out.add_basis(nb, v * s);
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Comp::zero();
        for (a, va) in &self.terms {
            for (b, vb) in &o.terms {
                if a.field.is_some() && b.field.is_some() {
                    continue;
                }
                let field = a.field.or(b.field);
                let (pf, pauli) = pauli_mul(a.pauli, b.pauli);
                let mut pis = a.pis.clone();
                pis.extend_from_slice(&b.pis);
                let base = va * vb * pf;
                let sym = a.sym.combine(b.sym);
                for (f, extra, s) in normal_order(pis, field.is_some()) {
                    let (field, sym) = match extra {
                        Some(l) => (Some((1, l)), sym.combine(Symbols::beta())),
                        None => (field, sym),
                    };
                    out.add_basis(Basis { pauli, field, pis: s, sym }, &base * f);
                }
            }
        }
        out
    }

    pub fn adjoint(&self) -> Self {
        let mut out = Comp::zero();
        for (b, v) in &self.terms {
            let rev: Vec<u8> = b.pis.iter().rev().copied().collect();
            for (f, extra, s) in normal_order(rev, b.field.is_some()) {
                let (field, sym) = match extra {
                    Some(l) => (Some((1, l)), b.sym.combine(Symbols::beta())),
                    None => (b.field, b.sym),
                };
                out.add_basis(Basis { pauli: b.pauli, field, pis: s, sym }, v.conj() * f);
            }
        }
        out
    }

    /// `[V, self]` with `[V, pi_j] = -i q hbar E_j`.
    pub fn commute_with_v(&self) -> Self {
        let mut out = Comp::zero();
        for (b, v) in &self.terms {
            if b.field.is_some() {
                continue;
            }
            for k in 0..b.pis.len() {
                let mut rest = b.pis.clone();
                let axis = rest.remove(k);
                out.add_basis(
                    Basis { pauli: b.pauli, field: Some((0, axis)), pis: rest, sym: b.sym.combine(Symbols::q_hbar()) },
                    v * i_unit() * scalar(-1, 1),
                );
            }
        }
        out
    }
}

fn sum3(f: impl Fn(u8) -> Comp) -> Comp {
    (0..3).fold(Comp::zero(), |acc, i| acc.add(&f(i)))
}

fn cross(a: impl Fn(u8) -> Comp, b: impl Fn(u8) -> Comp) -> Comp {
    // sigma . (a x b)
    let mut out = Comp::zero();
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                let e = levi(i, j, k);
                if e != 0 {
                    let t = Comp::sigma(i).mul(&a(j)).mul(&b(k));
                    out = out.add(&t.scale(&scalar(e, 1), Symbols::NONE));
                }
            }
        }
    }
    out
}

pub fn tail(t: Tail) -> Comp {
    let sp = || sum3(|i| Comp::sigma(i).mul(&Comp::pi(i)));
    match t {
        Tail::Unit => Comp::one(),
        Tail::EDotPi => sum3(|i| Comp::e(i).mul(&Comp::pi(i))),
        Tail::BDotPi => sum3(|i| Comp::b(i).mul(&Comp::pi(i))),
        Tail::SigmaPi => sp(),
        Tail::SigmaE => sum3(|i| Comp::sigma(i).mul(&Comp::e(i))),
        Tail::SigmaB => sum3(|i| Comp::sigma(i).mul(&Comp::b(i))),
        Tail::SigmaExPi => cross(Comp::e, Comp::pi),
        Tail::SigmaBxPi => cross(Comp::b, Comp::pi),
        Tail::EDotPiSigmaPi => tail(Tail::EDotPi).mul(&sp()),
        Tail::BDotPiSigmaPi => tail(Tail::BDotPi).mul(&sp()),
        Tail::DivE | Tail::Potential => panic!("no component form for {:?}", t),
    }
}

pub fn pi2() -> Comp {
    sum3(|i| Comp::pi(i).mul(&Comp::pi(i)))
}

pub fn expand(e: &OperatorExpr) -> Comp {
    assert_eq!(e.mode(), Mode::Homogeneous);
    let mut out = Comp::zero();
    for (k, v) in e.terms() {
        let mut m = Comp::one();
        for _ in 0..k.monomial.p2 {
            m = m.mul(&pi2());
        }
        m = m.mul(&tail(k.monomial.tail));
        out = out.add(&m.scale(v, k.sym));
    }
    out
}
