use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::coefficient::{scalar, scalar_from_rational, times_i_power, Coefficient, Scalar, Symbols};
use super::error::AlgebraError;
use super::product::{tail_product, tail_times_pi2, Factor};
use super::tail::Tail;

/// Whether the fields are constant (the canonical basis is then exact up to
/// quadratic field terms) or position dependent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Homogeneous,
    Inhomogeneous,
}

/// `pi^(2 p2)` followed by a tail.
///
/// In the inhomogeneous dialect a monomial with `p2 > 0` stands for the
/// symmetrized product `{pi^(2 p2), tail} / 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Monomial {
    pub tail: Tail,
    pub p2: u32,
}

impl Monomial {
    pub fn new(p2: u32, tail: Tail) -> Self {
        Monomial { tail, p2 }
    }

    pub fn field_degree(&self) -> u32 {
        self.tail.field_degree()
    }

    pub fn pi_count(&self) -> u32 {
        2 * self.p2 + self.tail.pi_count()
    }
}

/// Term key; terms with equal monomials but different symbol content are
/// kept apart.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TermKey {
    pub monomial: Monomial,
    pub sym: Symbols,
}

/// A finite sum of canonical monomials with exact coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorExpr {
    mode: Mode,
    terms: BTreeMap<TermKey, Scalar>,
}

fn factor_scalar(f: &Factor) -> (Scalar, Symbols) {
    (times_i_power(&scalar(f.num, f.den), f.i_power), Symbols::beta().scaled(f.beta))
}

impl OperatorExpr {
    pub fn zero(mode: Mode) -> Self {
        OperatorExpr { mode, terms: BTreeMap::new() }
    }

    pub fn one(mode: Mode) -> Self {
        Self::monomial(mode, Coefficient::one(), 0, Tail::Unit)
    }

    pub fn monomial(mode: Mode, coefficient: Coefficient, p2: u32, tail: Tail) -> Self {
        let mut out = Self::zero(mode);
        out.add_term(Monomial::new(p2, tail), coefficient.sym, coefficient.to_scalar());
        out
    }

    /// `coefficient * pi^(2 p2) * tail` with a plain rational coefficient.
    pub fn term(mode: Mode, num: i64, den: i64, p2: u32, tail: Tail) -> Self {
        Self::monomial(mode, Coefficient::new(num, den), p2, tail)
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TermKey, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient_of(&self, p2: u32, tail: Tail, sym: Symbols) -> Scalar {
        self.terms
            .get(&TermKey { monomial: Monomial::new(p2, tail), sym })
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, monomial: Monomial, sym: Symbols, value: Scalar) {
        if value.is_zero() {
            return;
        }
        let key = TermKey { monomial, sym };
        let entry = self.terms.entry(key).or_insert_with(Scalar::zero);
        *entry = &*entry + value;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Expression holding a single stored term.
    pub fn from_single(mode: Mode, key: &TermKey, value: &Scalar) -> Self {
        let mut out = Self::zero(mode);
        out.add_term(key.monomial, key.sym, value.clone());
        out
    }

    pub fn with_mode(&self, mode: Mode) -> Self {
        OperatorExpr { mode, terms: self.terms.clone() }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        if self.mode != other.mode {
            return Err(AlgebraError::ModeMismatch);
        }
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.monomial, k.sym, v.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.checked_add(&other.neg_ref())
    }

    fn neg_ref(&self) -> Self {
        OperatorExpr {
            mode: self.mode,
            terms: self.terms.iter().map(|(k, v)| (*k, -v.clone())).collect(),
        }
    }

    /// Multiplies every term by an exact prefactor.
    pub fn scale(&self, c: &Coefficient) -> Self {
        self.scale_scalar(&c.to_scalar(), c.sym)
    }

    pub fn scale_scalar(&self, s: &Scalar, sym: Symbols) -> Self {
        if s.is_zero() {
            return Self::zero(self.mode);
        }
        OperatorExpr {
            mode: self.mode,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (TermKey { monomial: k.monomial, sym: k.sym.combine(sym) }, v * s))
                .collect(),
        }
    }

    /// Keeps only terms satisfying `keep`.
    pub fn filter(&self, keep: impl Fn(&TermKey) -> bool) -> Self {
        OperatorExpr {
            mode: self.mode,
            terms: self.terms.iter().filter(|(k, _)| keep(k)).map(|(k, v)| (*k, v.clone())).collect(),
        }
    }

    pub fn field_free_part(&self) -> Self {
        self.filter(|k| k.monomial.field_degree() == 0)
    }

    pub fn field_linear_part(&self) -> Self {
        self.filter(|k| k.monomial.field_degree() == 1)
    }

    /// Terms carrying exactly `power` factors of `kappa`.
    pub fn kappa_part(&self, power: i32) -> Self {
        self.filter(|k| k.sym.kappa == power)
    }

    pub fn without_potential(&self) -> Self {
        self.filter(|k| k.monomial.tail != Tail::Potential)
    }

    /// Coefficients of `V` in this expression, keyed by symbol content.
    pub fn potential_coefficients(&self) -> Vec<(Symbols, Scalar)> {
        self.terms
            .iter()
            .filter(|(k, _)| k.monomial.tail == Tail::Potential)
            .map(|(k, v)| (k.sym, v.clone()))
            .collect()
    }

    /// Pure scalar coefficients (`pi^0 * UNIT`) keyed by symbol content, if
    /// this expression is a multiple of the identity.
    fn as_scalar_multiple(&self) -> Option<Vec<(Symbols, Scalar)>> {
        if self
            .terms
            .keys()
            .all(|k| k.monomial == Monomial::new(0, Tail::Unit))
        {
            Some(self.terms.iter().map(|(k, v)| (k.sym, v.clone())).collect())
        } else {
            None
        }
    }

    /// Ordered product.
    ///
    /// Never fails in homogeneous mode unless a `V` term meets a non-scalar
    /// field-free term. In the inhomogeneous dialect only multiplication by
    /// pure scalars is supported here; general products go through the word
    /// algebra.
    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        if self.mode != other.mode {
            return Err(AlgebraError::ModeMismatch);
        }
        if self.mode == Mode::Inhomogeneous {
            if let Some(s) = self.as_scalar_multiple() {
                return Ok(scale_by_sum(other, &s));
            }
            if let Some(s) = other.as_scalar_multiple() {
                return Ok(scale_by_sum(self, &s));
            }
            return Err(AlgebraError::UnsupportedInhomogeneous(
                "operator products are formed in the word algebra".into(),
            ));
        }
        let mut out = Self::zero(self.mode);
        for (ka, va) in &self.terms {
            for (kb, vb) in &other.terms {
                let v = va * vb;
                let sym = ka.sym.combine(kb.sym);
                mul_monomials(ka.monomial, kb.monomial, &mut |f, p2, tail| {
                    let (fs, fsym) = factor_scalar(&f);
                    out.add_term(Monomial::new(p2, tail), sym.combine(fsym), &v * fs);
                })?;
            }
        }
        Ok(out)
    }

    /// Hermitian adjoint, re-canonicalized.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zero(self.mode);
        for (k, v) in &self.terms {
            let v = v.conj();
            let Monomial { tail, p2 } = k.monomial;
            match self.mode {
                Mode::Homogeneous => {
                    if tail == Tail::Potential {
                        out.add_term(k.monomial, k.sym, v);
                        continue;
                    }
                    for (f, n, t) in tail_times_pi2(tail, p2) {
                        let (fs, fsym) = factor_scalar(&f);
                        out.add_term(Monomial::new(n, t), k.sym.combine(fsym), &v * fs);
                    }
                }
                Mode::Inhomogeneous => {
                    out.add_term(k.monomial, k.sym, v.clone());
                    if tail == Tail::EDotPi {
                        // (E.pi)^dagger = pi.E = E.pi - i hbar div E
                        let s = times_i_power(&v, 3);
                        out.add_term(
                            Monomial::new(p2, Tail::DivE),
                            k.sym.combine(Symbols::new(1, 0, 0, 0, 0)),
                            s,
                        );
                    }
                }
            }
        }
        out
    }

    /// Returns `((A + A^dagger)/2, (A - A^dagger)/2)`.
    pub fn hermitian_split(&self) -> (Self, Self) {
        let adj = self.adjoint();
        let half = scalar(1, 2);
        let h = (self + &adj).scale_scalar(&half, Symbols::NONE);
        let n = (self - &adj).scale_scalar(&half, Symbols::NONE);
        (h, n)
    }

    /// `[V, self]` for constant `E = -grad(phi)`, using `[V, pi_j] = -i q hbar E_j`.
    pub fn commute_with_v(&self) -> Result<Self, AlgebraError> {
        if self.mode == Mode::Inhomogeneous {
            return Err(AlgebraError::UnsupportedInhomogeneous(
                "commutators with V are formed in the word algebra".into(),
            ));
        }
        let mut out = Self::zero(self.mode);
        let qh = Symbols::q_hbar();
        for (k, v) in &self.terms {
            let Monomial { tail, p2 } = k.monomial;
            if tail.field_degree() > 0 {
                continue;
            }
            let sym = k.sym.combine(qh);
            if p2 > 0 {
                // [V, pi^(2n)] = -2 i n q hbar pi^(2n-2) (E.pi)
                let c = times_i_power(&scalar(-2 * p2 as i64, 1), 1) * v;
                let t = if tail == Tail::SigmaPi { Tail::EDotPiSigmaPi } else { Tail::EDotPi };
                out.add_term(Monomial::new(p2 - 1, t), sym, c);
            }
            if tail == Tail::SigmaPi {
                out.add_term(Monomial::new(p2, Tail::SigmaE), sym, times_i_power(v, 3));
            }
        }
        Ok(out)
    }

    /// `[self, other]`, with any `V` terms handled through `commute_with_v`.
    pub fn commutator(&self, other: &Self) -> Result<Self, AlgebraError> {
        let a = self.without_potential();
        let b = other.without_potential();
        let mut out = a.mul(&b)?.checked_sub(&b.mul(&a)?)?;
        let va = self.potential_coefficients();
        let vb = other.potential_coefficients();
        if !va.is_empty() {
            let vb_comm = b.commute_with_v()?;
            out = out.checked_add(&scale_by_sum(&vb_comm, &va))?;
        }
        if !vb.is_empty() {
            let va_comm = a.commute_with_v()?;
            out = out.checked_sub(&scale_by_sum(&va_comm, &vb))?;
        }
        Ok(out)
    }

    /// Largest field degree present.
    pub fn max_field_degree(&self) -> u32 {
        self.terms.keys().map(|k| k.monomial.field_degree()).max().unwrap_or(0)
    }

    /// Real rational coefficient of a term, if it is real.
    pub fn real_coefficient(&self, p2: u32, tail: Tail, sym: Symbols) -> Option<num_rational::BigRational> {
        let v = self.coefficient_of(p2, tail, sym);
        if v.im.is_zero() {
            Some(v.re)
        } else {
            None
        }
    }

    /// `self^n` for `n >= 0`.
    pub fn pow(&self, n: u32) -> Result<Self, AlgebraError> {
        let mut out = Self::one(self.mode);
        for _ in 0..n {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// Scales by a rational number.
    pub fn scale_rational(&self, r: &num_rational::BigRational) -> Self {
        self.scale_scalar(&scalar_from_rational(r.clone()), Symbols::NONE)
    }
}

fn scale_by_sum(expr: &OperatorExpr, parts: &[(Symbols, Scalar)]) -> OperatorExpr {
    let mut out = OperatorExpr::zero(expr.mode);
    for (sym, s) in parts {
        out = &out + &expr.scale_scalar(s, *sym);
    }
    out
}

/// Product of two monomials, emitting canonical pieces.
fn mul_monomials(
    a: Monomial,
    b: Monomial,
    emit: &mut impl FnMut(Factor, u32, Tail),
) -> Result<(), AlgebraError> {
    if a.field_degree() + b.field_degree() >= 2 {
        return Ok(());
    }
    if a.tail == Tail::DivE || b.tail == Tail::DivE {
        return Err(AlgebraError::InhomogeneousGenerator("div E".into()));
    }
    let unit = Monomial::new(0, Tail::Unit);
    if a.tail == Tail::Potential || b.tail == Tail::Potential {
        let other = if a.tail == Tail::Potential { b } else { a };
        if other == unit {
            emit(Factor { num: 1, den: 1, i_power: 0, beta: 0 }, 0, Tail::Potential);
            return Ok(());
        }
        return Err(AlgebraError::PotentialProduct);
    }
    for (f1, n1, t1) in tail_times_pi2(a.tail, b.p2) {
        for (f2, n2, t2) in tail_product(t1, b.tail) {
            let f = Factor {
                num: f1.num * f2.num,
                den: f1.den * f2.den,
                i_power: (f1.i_power + f2.i_power) % 4,
                beta: f1.beta + f2.beta,
            };
            emit(f, a.p2 + n1 + n2, t2);
        }
    }
    Ok(())
}

impl Add for &OperatorExpr {
    type Output = OperatorExpr;
    /// Panics if the modes differ; use `checked_add` to get an error instead.
    fn add(self, rhs: &OperatorExpr) -> OperatorExpr {
        self.checked_add(rhs).expect("adding expressions of different modes")
    }
}

impl Sub for &OperatorExpr {
    type Output = OperatorExpr;
    fn sub(self, rhs: &OperatorExpr) -> OperatorExpr {
        self.checked_sub(rhs).expect("subtracting expressions of different modes")
    }
}

impl Neg for &OperatorExpr {
    type Output = OperatorExpr;
    fn neg(self) -> OperatorExpr {
        self.neg_ref()
    }
}

impl std::iter::Sum for OperatorExpr {
    /// Sums homogeneous expressions; an empty sum is the homogeneous zero.
    fn sum<I: Iterator<Item = OperatorExpr>>(iter: I) -> OperatorExpr {
        let mut acc: Option<OperatorExpr> = None;
        for e in iter {
            acc = Some(match acc {
                None => e,
                Some(a) => &a + &e,
            });
        }
        acc.unwrap_or_else(|| OperatorExpr::zero(Mode::Homogeneous))
    }
}
