//! Multiplication tables for canonical monomials with constant fields.
//!
//! Every entry is exact up to terms quadratic in the fields.

use super::tail::Tail;

/// A table factor `num/den * i^i_power * (q hbar / c)^beta`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Factor {
    pub num: i64,
    pub den: i64,
    pub i_power: u8,
    pub beta: i32,
}

impl Factor {
    const fn real(num: i64) -> Self {
        Factor { num, den: 1, i_power: 0, beta: 0 }
    }

    const fn imag(num: i64) -> Self {
        Factor { num, den: 1, i_power: 1, beta: 0 }
    }

    const fn beta(num: i64) -> Self {
        Factor { num, den: 1, i_power: 0, beta: 1 }
    }
}

/// One piece of a product: `factor * pi^(2 p2) * tail`.
pub(crate) type Piece = (Factor, u32, Tail);

/// Product of two bare tails, with any generated `pi^2` on the left.
///
/// Neither tail may be `DivE` or `Potential`; the caller handles those.
pub(crate) fn tail_product(a: Tail, b: Tail) -> Vec<Piece> {
    use Tail::*;
    if a == Unit {
        return vec![(Factor::real(1), 0, b)];
    }
    if b == Unit {
        return vec![(Factor::real(1), 0, a)];
    }
    if a.field_degree() + b.field_degree() >= 2 {
        return Vec::new();
    }
    let one = Factor::real(1);
    let i = Factor::imag(1);
    let mi = Factor::imag(-1);
    match (a, b) {
        (SigmaPi, SigmaPi) => vec![(one, 1, Unit), (Factor::beta(-1), 0, SigmaB)],
        (SigmaPi, EDotPi) => vec![(one, 0, EDotPiSigmaPi)],
        (SigmaPi, BDotPi) => vec![(one, 0, BDotPiSigmaPi)],
        (SigmaPi, SigmaE) => vec![(one, 0, EDotPi), (mi, 0, SigmaExPi)],
        (SigmaPi, SigmaB) => vec![(one, 0, BDotPi), (mi, 0, SigmaBxPi)],
        (SigmaPi, SigmaExPi) => vec![(i, 1, SigmaE), (mi, 0, EDotPiSigmaPi)],
        (SigmaPi, SigmaBxPi) => vec![(i, 1, SigmaB), (mi, 0, BDotPiSigmaPi)],
        (SigmaPi, EDotPiSigmaPi) => vec![(one, 1, EDotPi)],
        (SigmaPi, BDotPiSigmaPi) => vec![(one, 1, BDotPi)],
        (EDotPi, SigmaPi) => vec![(one, 0, EDotPiSigmaPi)],
        (BDotPi, SigmaPi) => vec![(one, 0, BDotPiSigmaPi)],
        (SigmaE, SigmaPi) => vec![(one, 0, EDotPi), (i, 0, SigmaExPi)],
        (SigmaB, SigmaPi) => vec![(one, 0, BDotPi), (i, 0, SigmaBxPi)],
        (SigmaExPi, SigmaPi) => vec![(i, 0, EDotPiSigmaPi), (mi, 1, SigmaE)],
        (SigmaBxPi, SigmaPi) => vec![(i, 0, BDotPiSigmaPi), (mi, 1, SigmaB)],
        (EDotPiSigmaPi, SigmaPi) => vec![(one, 1, EDotPi)],
        (BDotPiSigmaPi, SigmaPi) => vec![(one, 1, BDotPi)],
        _ => unreachable!("tail product {:?} * {:?} outside the canonical set", a, b),
    }
}

/// Moves `pi^(2n)` from the right of `tail` to its left.
///
/// Only `sigma.pi` fails to commute with `pi^2`:
/// `(s.pi) pi^(2n) = pi^(2n) (s.pi) - 2 i n (q hbar/c) pi^(2n-2) s.(B x pi)`.
pub(crate) fn tail_times_pi2(tail: Tail, n: u32) -> Vec<Piece> {
    if tail == Tail::SigmaPi && n > 0 {
        vec![
            (Factor::real(1), n, Tail::SigmaPi),
            (Factor { num: -2 * n as i64, den: 1, i_power: 1, beta: 1 }, n - 1, Tail::SigmaBxPi),
        ]
    } else {
        vec![(Factor::real(1), n, tail)]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::tail::HOMOGENEOUS_TAILS;

    #[test]
    fn unit_is_identity() {
        for t in HOMOGENEOUS_TAILS {
            assert_eq!(tail_product(Tail::Unit, t), vec![(Factor::real(1), 0, t)]);
            assert_eq!(tail_product(t, Tail::Unit), vec![(Factor::real(1), 0, t)]);
        }
    }

    #[test]
    fn table_is_closed_and_truncated() {
        for a in HOMOGENEOUS_TAILS {
            for b in HOMOGENEOUS_TAILS {
                let pieces = tail_product(a, b);
                for (_, _, t) in &pieces {
                    assert!(HOMOGENEOUS_TAILS.contains(t));
                    assert!(t.field_degree() <= 1);
                }
                if a.field_degree() + b.field_degree() >= 2 {
                    assert!(pieces.is_empty());
                }
            }
        }
    }

    #[test]
    fn pi_count_is_conserved() {
        for a in HOMOGENEOUS_TAILS {
            for b in HOMOGENEOUS_TAILS {
                for (f, p2, t) in tail_product(a, b) {
                    // every beta trades two pi factors for one B field
                    let produced = 2 * p2 + t.pi_count() + 2 * f.beta as u32;
                    assert_eq!(produced, a.pi_count() + b.pi_count(), "{:?}*{:?}", a, b);
                }
            }
        }
    }
}
