#![allow(dead_code)]

pub mod oracle;

use fw_core::algebra::{Coefficient, Mode, OperatorExpr, Symbols, Tail};
use fw_core::algebra::tail::HOMOGENEOUS_TAILS;
use proptest::prelude::*;

pub fn arb_symbols() -> impl Strategy<Value = Symbols> {
    (0..2i32, 0..2i32, 0..3i32, 0..2i32, 0..2i32).prop_map(|(h, q, m, c, k)| Symbols::new(h, q, m, c, k))
}

pub fn arb_term() -> impl Strategy<Value = OperatorExpr> {
    (
        -6i64..=6,
        1i64..=4,
        any::<bool>(),
        0u32..=2,
        prop::sample::select(HOMOGENEOUS_TAILS.to_vec()),
        arb_symbols(),
    )
        .prop_map(|(n, d, imag, p2, tail, sym): (i64, i64, bool, u32, Tail, Symbols)| {
            let mut c = Coefficient::new(n, d).with(sym);
            if imag {
                c = c.times_i();
            }
            OperatorExpr::monomial(Mode::Homogeneous, c, p2, tail)
        })
}

pub fn arb_expr() -> impl Strategy<Value = OperatorExpr> {
    prop::collection::vec(arb_term(), 1..=3).prop_map(|ts| ts.into_iter().sum())
}

/// Expressions without field terms, so that commutators with V stay exact.
pub fn arb_field_free() -> impl Strategy<Value = OperatorExpr> {
    arb_expr().prop_map(|e| e.field_free_part())
}
