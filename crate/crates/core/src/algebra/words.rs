//! Raw operator words and the position-dependent-field dialect.
//!
//! A word is an ordered product of letters. Products of words are exact
//! concatenations, so the word algebra needs no commutation rules; those only
//! enter when a word is reduced to the canonical basis.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::coefficient::{scalar, times_i_power, Coefficient, Scalar, Symbols};
use super::error::AlgebraError;
use super::expr::{Mode, Monomial, OperatorExpr};
use super::tail::Tail;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Letter {
    SigmaPi,
    SigmaE,
    SigmaB,
    PiSquared,
    EDotPi,
    PiDotE,
    BDotPi,
    DivE,
    Potential,
}

impl Letter {
    pub fn field_degree(self) -> u32 {
        match self {
            Letter::SigmaPi | Letter::PiSquared => 0,
            _ => 1,
        }
    }

    fn adjoint(self) -> Letter {
        match self {
            Letter::EDotPi => Letter::PiDotE,
            Letter::PiDotE => Letter::EDotPi,
            other => other,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Letter::SigmaPi => "(s.pi)",
            Letter::SigmaE => "(s.E)",
            Letter::SigmaB => "(s.B)",
            Letter::PiSquared => "pi^2",
            Letter::EDotPi => "(E.pi)",
            Letter::PiDotE => "(pi.E)",
            Letter::BDotPi => "(B.pi)",
            Letter::DivE => "(div E)",
            Letter::Potential => "V",
        }
    }
}

pub type Word = Vec<Letter>;

pub fn word_to_string(w: &[Letter]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter().map(|l| l.symbol()).collect::<Vec<_>>().join(" ")
}

/// Reduces a list of raw products to canonical form.
///
/// In homogeneous mode `pi.E` and `E.pi` coincide and `div E` is rejected.
/// In the inhomogeneous dialect only the word shapes that occur through
/// second order are supported.
pub fn normalize(terms: &[(Coefficient, Word)], mode: Mode) -> Result<OperatorExpr, AlgebraError> {
    match mode {
        Mode::Homogeneous => {
            let mut out = OperatorExpr::zero(mode);
            for (c, w) in terms {
                let mut e = OperatorExpr::monomial(mode, c.clone(), 0, Tail::Unit);
                for l in w {
                    e = e.mul(&homogeneous_letter(*l)?)?;
                }
                out = &out + &e;
            }
            Ok(out)
        }
        Mode::Inhomogeneous => {
            let mut w = WordExpr::zero();
            for (c, word) in terms {
                w.add_word(word.clone(), c.sym, c.to_scalar());
            }
            w.reduce()
        }
    }
}

fn homogeneous_letter(l: Letter) -> Result<OperatorExpr, AlgebraError> {
    let m = Mode::Homogeneous;
    let t = match l {
        Letter::SigmaPi => Tail::SigmaPi,
        Letter::SigmaE => Tail::SigmaE,
        Letter::SigmaB => Tail::SigmaB,
        Letter::PiSquared => return Ok(OperatorExpr::term(m, 1, 1, 1, Tail::Unit)),
        Letter::EDotPi | Letter::PiDotE => Tail::EDotPi,
        Letter::BDotPi => Tail::BDotPi,
        Letter::DivE => return Err(AlgebraError::InhomogeneousGenerator("div E".into())),
        Letter::Potential => Tail::Potential,
    };
    Ok(OperatorExpr::term(m, 1, 1, 0, t))
}

/// Linear combination of words, truncated at first order in the fields.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct WordExpr {
    terms: BTreeMap<(Word, Symbols), Scalar>,
}

impl WordExpr {
    pub fn zero() -> Self {
        WordExpr { terms: BTreeMap::new() }
    }

    pub fn word(c: Coefficient, w: Word) -> Self {
        let mut out = Self::zero();
        out.add_word(w, c.sym, c.to_scalar());
        out
    }

    pub fn letter(l: Letter) -> Self {
        Self::word(Coefficient::one(), vec![l])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Symbols), &Scalar)> {
        self.terms.iter()
    }

    pub fn add_word(&mut self, w: Word, sym: Symbols, v: Scalar) {
        if v.is_zero() || w.iter().map(|l| l.field_degree()).sum::<u32>() >= 2 {
            return;
        }
        let key = (w, sym);
        let e = self.terms.entry(key.clone()).or_insert_with(Scalar::zero);
        *e = &*e + v;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((w, s), v) in &other.terms {
            out.add_word(w.clone(), *s, v.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&Coefficient::new(-1, 1)))
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        let s = c.to_scalar();
        let mut out = Self::zero();
        for ((w, sym), v) in &self.terms {
            out.add_word(w.clone(), sym.combine(c.sym), v * &s);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for ((wa, sa), va) in &self.terms {
            for ((wb, sb), vb) in &other.terms {
                let mut w = wa.clone();
                w.extend_from_slice(wb);
                out.add_word(w, sa.combine(*sb), va * vb);
            }
        }
        out
    }

    pub fn adjoint(&self) -> Self {
        let mut out = Self::zero();
        for ((w, s), v) in &self.terms {
            let rev = w.iter().rev().map(|l| l.adjoint()).collect();
            out.add_word(rev, *s, v.conj());
        }
        out
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// `[V, self]` through the derivation rule, with `[V, pi_j] = -i q hbar E_j`.
    pub fn commute_with_v(&self) -> Self {
        let mut out = Self::zero();
        let minus_i = times_i_power(&scalar(-1, 1), 1);
        for ((w, s), v) in &self.terms {
            if w.iter().any(|l| l.field_degree() > 0) {
                continue;
            }
            let sym = s.combine(Symbols::q_hbar());
            for (pos, l) in w.iter().enumerate() {
                let replacements: &[Letter] = match l {
                    Letter::SigmaPi => &[Letter::SigmaE],
                    Letter::PiSquared => &[Letter::EDotPi, Letter::PiDotE],
                    _ => &[],
                };
                for r in replacements {
                    let mut nw = w.clone();
                    nw[pos] = *r;
                    out.add_word(nw, sym, v * &minus_i);
                }
            }
        }
        out
    }

    /// Converts to the canonical inhomogeneous basis.
    ///
    /// Assumes static, source-free fields: `curl E = 0`, `curl B = 0`,
    /// `div B = 0`.
    pub fn reduce(&self) -> Result<OperatorExpr, AlgebraError> {
        let mut out = OperatorExpr::zero(Mode::Inhomogeneous);
        for ((w, s), v) in &self.terms {
            for (f, sym, p2, tail) in reduce_word(w)? {
                out.add_term(Monomial::new(p2, tail), s.combine(sym), v * f);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for WordExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((w, s), v)| format!("({}) {:?} {}", v, s, word_to_string(w)))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

type Reduced = Vec<(Scalar, Symbols, u32, Tail)>;

fn reduce_word(w: &[Letter]) -> Result<Reduced, AlgebraError> {
    use Letter::*;
    let one = || scalar(1, 1);
    let beta = Symbols::beta();
    let hbar = Symbols::new(1, 0, 0, 0, 0);
    let none = Symbols::NONE;
    let unsupported = || AlgebraError::UnsupportedInhomogeneous(word_to_string(w));

    if w.iter().all(|l| *l == PiSquared) {
        return Ok(vec![(one(), none, w.len() as u32, Tail::Unit)]);
    }
    if w.iter().all(|l| *l == SigmaPi) {
        return match w.len() {
            1 => Ok(vec![(one(), none, 0, Tail::SigmaPi)]),
            2 => Ok(vec![(one(), none, 1, Tail::Unit), (scalar(-1, 1), beta, 0, Tail::SigmaB)]),
            3 => Ok(vec![(one(), none, 1, Tail::SigmaPi), (scalar(-1, 1), beta, 0, Tail::BDotPi)]),
            4 => Ok(vec![(one(), none, 2, Tail::Unit), (scalar(-2, 1), beta, 1, Tail::SigmaB)]),
            _ => Err(unsupported()),
        };
    }
    let i = |n: i64| times_i_power(&scalar(n, 1), 1);
    match w {
        [SigmaE] => Ok(vec![(one(), none, 0, Tail::SigmaE)]),
        [SigmaB] => Ok(vec![(one(), none, 0, Tail::SigmaB)]),
        [EDotPi] => Ok(vec![(one(), none, 0, Tail::EDotPi)]),
        [PiDotE] => Ok(vec![(one(), none, 0, Tail::EDotPi), (i(-1), hbar, 0, Tail::DivE)]),
        [BDotPi] => Ok(vec![(one(), none, 0, Tail::BDotPi)]),
        [DivE] => Ok(vec![(one(), none, 0, Tail::DivE)]),
        [Potential] => Ok(vec![(one(), none, 0, Tail::Potential)]),
        [SigmaPi, SigmaE] => Ok(vec![
            (one(), none, 0, Tail::EDotPi),
            (i(-1), hbar, 0, Tail::DivE),
            (i(-1), none, 0, Tail::SigmaExPi),
        ]),
        [SigmaE, SigmaPi] => Ok(vec![(one(), none, 0, Tail::EDotPi), (i(1), none, 0, Tail::SigmaExPi)]),
        [SigmaPi, SigmaB] => Ok(vec![(one(), none, 0, Tail::BDotPi), (i(-1), none, 0, Tail::SigmaBxPi)]),
        [SigmaB, SigmaPi] => Ok(vec![(one(), none, 0, Tail::BDotPi), (i(1), none, 0, Tail::SigmaBxPi)]),
        _ => Err(unsupported()),
    }
}

/// Rewrites an inhomogeneous-dialect expression in the constant-field basis:
/// gradients vanish and symmetrized products are re-ordered with `pi^2` on
/// the left.
pub fn collapse_to_homogeneous(expr: &OperatorExpr) -> OperatorExpr {
    if expr.mode() == Mode::Homogeneous {
        return expr.clone();
    }
    let mut out = OperatorExpr::zero(Mode::Homogeneous);
    for (k, v) in expr.terms() {
        let Monomial { tail, p2 } = k.monomial;
        match tail {
            Tail::DivE => {}
            Tail::SigmaPi if p2 > 0 => {
                // {pi^(2n), s.pi}/2 = pi^(2n) s.pi - i n (q hbar/c) pi^(2n-2) s.(B x pi)
                out.add_term(k.monomial, k.sym, v.clone());
                let c = times_i_power(&scalar(-(p2 as i64), 1), 1) * v;
                out.add_term(Monomial::new(p2 - 1, Tail::SigmaBxPi), k.sym.combine(Symbols::beta()), c);
            }
            _ => out.add_term(k.monomial, k.sym, v.clone()),
        }
    }
    out
}
