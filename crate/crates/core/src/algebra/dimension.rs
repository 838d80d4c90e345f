use std::fmt;

use num_rational::Rational32;
use serde::{Deserialize, Serialize};

use super::expr::{OperatorExpr, TermKey};
use super::tail::Tail;

/// Exponents of mass, length and time.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionVector {
    pub mass: Rational32,
    pub length: Rational32,
    pub time: Rational32,
}

impl DimensionVector {
    pub fn new(mass: i32, length: i32, time: i32) -> Self {
        DimensionVector {
            mass: Rational32::from_integer(mass),
            length: Rational32::from_integer(length),
            time: Rational32::from_integer(time),
        }
    }

    pub fn dimensionless() -> Self {
        Self::new(0, 0, 0)
    }

    pub fn energy() -> Self {
        Self::new(1, 2, -2)
    }

    pub fn velocity() -> Self {
        Self::new(0, 1, -1)
    }

    pub fn momentum() -> Self {
        Self::new(1, 1, -1)
    }

    /// `q E` and `q B` are both forces in Gaussian units.
    pub fn force() -> Self {
        Self::new(1, 1, -2)
    }

    pub fn hbar() -> Self {
        Self::new(1, 2, -1)
    }

    pub fn plus(self, o: Self) -> Self {
        DimensionVector { mass: self.mass + o.mass, length: self.length + o.length, time: self.time + o.time }
    }

    pub fn times(self, k: i32) -> Self {
        let k = Rational32::from_integer(k);
        DimensionVector { mass: self.mass * k, length: self.length * k, time: self.time * k }
    }
}

impl fmt::Display for DimensionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M^{} L^{} T^{}", self.mass, self.length, self.time)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionMismatch {
    pub term: TermKey,
    pub found: Option<DimensionVector>,
    pub expected: DimensionVector,
}

impl fmt::Display for DimensionMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.found {
            Some(d) => write!(
                f,
                "term {:?} pi^{} {:?} has dimension {} instead of {}",
                self.term.sym,
                2 * self.term.monomial.p2,
                self.term.monomial.tail,
                d,
                self.expected
            ),
            None => write!(
                f,
                "term {:?} pi^{} {:?} carries a charge not attached to a field",
                self.term.sym,
                2 * self.term.monomial.p2,
                self.term.monomial.tail
            ),
        }
    }
}

/// Dimension of a single term, or `None` if its charge exponent does not
/// match its field content.
pub fn term_dimension(key: &TermKey) -> Option<DimensionVector> {
    let s = key.sym;
    let tail = key.monomial.tail;
    let fields = match tail {
        Tail::Potential | Tail::Unit | Tail::SigmaPi => 0,
        _ => 1,
    };
    if s.q != fields {
        return None;
    }
    let mut d = DimensionVector::hbar()
        .times(s.hbar)
        .plus(DimensionVector::new(-1, 0, 0).times(s.inv_m))
        .plus(DimensionVector::velocity().times(-s.inv_c))
        .plus(DimensionVector::momentum().times(key.monomial.pi_count() as i32));
    d = match tail {
        Tail::Potential => d.plus(DimensionVector::energy()),
        Tail::DivE => d.plus(DimensionVector::new(1, 0, -2)),
        t if t.field_degree() == 1 => d.plus(DimensionVector::force()),
        _ => d,
    };
    Some(d)
}

/// Checks that every term has the expected dimension.
pub fn check_dimension(expr: &OperatorExpr, expected: DimensionVector) -> Result<(), DimensionMismatch> {
    for (k, _) in expr.terms() {
        let found = term_dimension(k);
        if found != Some(expected) {
            return Err(DimensionMismatch { term: *k, found, expected });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::coefficient::Coefficient;
    use crate::algebra::expr::Mode;

    #[test]
    fn zeeman_term_is_an_energy() {
        // -(q hbar / 2 m c) s.B
        let e = OperatorExpr::monomial(
            Mode::Homogeneous,
            Coefficient::new(-1, 2).q(1).hbar(1).inv_m(1).inv_c(1),
            0,
            Tail::SigmaB,
        );
        assert!(check_dimension(&e, DimensionVector::energy()).is_ok());
    }

    #[test]
    fn kinetic_term_is_an_energy() {
        let e = OperatorExpr::monomial(Mode::Homogeneous, Coefficient::new(1, 2).inv_m(1), 1, Tail::Unit);
        assert!(check_dimension(&e, DimensionVector::energy()).is_ok());
    }

    #[test]
    fn missing_mass_is_caught() {
        let e = OperatorExpr::monomial(Mode::Homogeneous, Coefficient::new(1, 2), 1, Tail::Unit);
        let err = check_dimension(&e, DimensionVector::energy()).unwrap_err();
        assert_eq!(err.found, Some(DimensionVector::new(2, 2, -2)));
    }

    #[test]
    fn stray_charge_is_caught() {
        let e = OperatorExpr::monomial(Mode::Homogeneous, Coefficient::new(1, 2).q(1).inv_m(1), 1, Tail::Unit);
        assert_eq!(check_dimension(&e, DimensionVector::energy()).unwrap_err().found, None);
    }
}
