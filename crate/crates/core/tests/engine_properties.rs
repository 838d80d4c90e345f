use fw_core::algebra::{collapse_to_homogeneous, Mode, Tail};
use fw_core::engine::{
    assemble_hamiltonian, dimension_check, parity_odd, residuals, structural_check, solve_generating_operator,
    verify_self_consistency, GTreatment, ModelSpec, PotentialKind,
};

#[test]
fn dirac_parity_structure() {
    let r = assemble_hamiltonian(&ModelSpec::dirac(12)).unwrap();
    for k in r.x.entries.keys() {
        assert!(k % 2 == 1, "X has an even entry at order {k}");
    }
    for s in [&r.a, &r.y, &r.g, &r.s, &r.h] {
        for k in s.entries.keys() {
            assert!(k % 2 == 0, "odd entry at order {k}");
        }
    }
    assert!(structural_check(&r).passed);
}

#[test]
fn table_shapes() {
    let r = assemble_hamiltonian(&ModelSpec::dirac(12)).unwrap();
    for (k, e) in &r.x.entries {
        if *k >= 3 {
            for (t, _) in e.field_linear_part().without_potential().terms() {
                let tail = t.monomial.tail;
                assert!(matches!(tail, Tail::SigmaE | Tail::EDotPiSigmaPi | Tail::SigmaBxPi | Tail::BDotPiSigmaPi | Tail::SigmaB | Tail::BDotPi) , "X_{k}: {tail:?}");
                assert!(!tail.contains_b() || t.sym.inv_c == 1, "X_{k}: magnetic term without 1/c");
            }
        }
        // the electric tails of odd X entries are odd under parity
        for (t, _) in e.terms() {
            assert!(parity_odd(t.monomial.tail) || t.monomial.tail.contains_b(), "X_{k}");
        }
    }
    for (k, e) in &r.a_h.entries {
        for (t, _) in e.without_potential().terms() {
            let tail = t.monomial.tail;
            assert!(matches!(tail, Tail::Unit | Tail::SigmaExPi | Tail::SigmaB | Tail::EDotPi), "A^H_{k}: {tail:?}");
        }
    }
    for (k, e) in &r.g.entries {
        for (t, _) in e.terms() {
            let tail = t.monomial.tail;
            assert!(matches!(tail, Tail::Unit | Tail::SigmaExPi | Tail::SigmaB), "G_{k}: {tail:?}");
        }
    }
}

#[test]
fn dirac_pauli_is_affine_in_kappa() {
    let d = assemble_hamiltonian(&ModelSpec::dirac(12)).unwrap();
    let p = assemble_hamiltonian(&ModelSpec::dirac_pauli(12)).unwrap();
    for (a, b) in [(&d.x, &p.x), (&d.a, &p.a), (&d.g, &p.g), (&d.h, &p.h)] {
        for e in b.entries.values() {
            assert!(e.terms().all(|(t, _)| t.sym.kappa <= 1));
        }
        assert_eq!(b.kappa_part(0).entries, a.entries);
    }
    let two = assemble_hamiltonian(&ModelSpec { g: GTreatment::Two, ..ModelSpec::dirac_pauli(12) }).unwrap();
    assert_eq!(two.h.entries, d.h.entries);
    assert_eq!(two.x.entries, d.x.entries);
}

#[test]
fn outputs_are_dimensionally_homogeneous() {
    for spec in [ModelSpec::dirac(12), ModelSpec::dirac_pauli(12), ModelSpec::inhomogeneous(2)] {
        let r = assemble_hamiltonian(&spec).unwrap();
        let c = dimension_check(&r);
        assert!(c.passed, "{:?}", c.details);
    }
}

#[test]
fn recursion_solves_its_own_equation_to_order_13() {
    let spec = ModelSpec::dirac(12);
    let x = solve_generating_operator(&spec).unwrap();
    assert!(x.max_order >= 13);
    assert!(residuals(&spec, &x, PotentialKind::General).unwrap().is_zero());
    assert!(verify_self_consistency(&spec, &x, PotentialKind::General).passed);
}

#[test]
fn dropping_a_half_is_caught() {
    let spec = ModelSpec::dirac(6);
    let mut x = solve_generating_operator(&spec).unwrap();
    let x3 = x.get(3);
    x.set(3, &x3 + &x3.field_linear_part());
    let rep = verify_self_consistency(&spec, &x, PotentialKind::General);
    assert!(!rep.passed);
    assert_eq!(rep.first_failing_order, Some(3));
    assert!(!rep.offending_terms.is_empty());
}

#[test]
fn inhomogeneous_collapses_to_homogeneous() {
    let i = assemble_hamiltonian(&ModelSpec::inhomogeneous(2)).unwrap();
    let h = assemble_hamiltonian(&ModelSpec::dirac(2)).unwrap();
    for k in [0, 2] {
        let collapsed = collapse_to_homogeneous(&i.h.get(k));
        assert_eq!(collapsed.mode(), Mode::Homogeneous);
        assert_eq!(collapsed, h.h.get(k), "order {k}");
    }
}

#[test]
fn invalid_specs_are_rejected() {
    assert!(assemble_hamiltonian(&ModelSpec::dirac(3)).is_err());
    assert!(assemble_hamiltonian(&ModelSpec::dirac(16)).is_err());
    assert!(assemble_hamiltonian(&ModelSpec::inhomogeneous(4)).is_err());
    assert!(assemble_hamiltonian(&ModelSpec { g: GTreatment::Symbolic, ..ModelSpec::dirac(2) }).is_err());
}
