//! The published coefficient tables, transcribed term by term.

use super::{Fixture, FixtureTable, Part, SeriesFixture, SeriesKind, SeriesTarget};
use crate::algebra::{Coefficient, Mode, OperatorExpr, Symbols, Tail};
use crate::engine::Model;
use crate::resummation::RationalSeries;

const H: Mode = Mode::Homogeneous;

fn c(num: i64, den: i64) -> Coefficient {
    Coefficient::new(num, den)
}

fn mono(k: Coefficient, p2: u32, tail: Tail) -> OperatorExpr {
    OperatorExpr::monomial(H, k, p2, tail)
}

/// `i q hbar / m^k`
fn iqh(num: i64, den: i64, inv_m: i32) -> Coefficient {
    c(num, den).times_i().q(1).hbar(1).inv_m(inv_m)
}

fn qh(num: i64, den: i64, inv_m: i32) -> Coefficient {
    c(num, den).q(1).hbar(1).inv_m(inv_m)
}

/// `mu'' / m^k = kappa q hbar / (2 m^(k+1))`
fn mu2(num: i64, den: i64, inv_m: i32) -> Coefficient {
    c(num, 2 * den).kappa(1).q(1).hbar(1).inv_m(inv_m + 1)
}

/// `T = (s.pi)^2 / 2m`
fn t_pow(k: u32) -> OperatorExpr {
    let t = mono(c(1, 1), 0, Tail::SigmaPi).pow(2).expect("homogeneous").scale(&c(1, 2).inv_m(1));
    t.pow(k).expect("homogeneous")
}

fn t_term(num: i64, den: i64, k: u32, inv_m: i32, times_sp: bool) -> OperatorExpr {
    let mut e = t_pow(k).scale(&c(num, den).inv_m(inv_m));
    if times_sp {
        e = e.mul(&mono(c(1, 1), 0, Tail::SigmaPi)).expect("homogeneous");
    }
    e
}

fn sum(terms: Vec<OperatorExpr>) -> OperatorExpr {
    terms.iter().fold(OperatorExpr::zero(H), |a, b| &a + b)
}

fn fx(order: usize, expected: OperatorExpr) -> Fixture {
    Fixture { order, expected, expected_mismatch: false, misprinted_terms: 0, note: None }
}

/// A suspected misprint; exactly `terms` monomials are expected to differ.
fn typo(order: usize, expected: OperatorExpr, terms: usize, note: &str) -> Fixture {
    Fixture { order, expected, expected_mismatch: true, misprinted_terms: terms, note: Some(note.to_string()) }
}

fn table(id: &str, title: &str, model: Model, series: SeriesKind, part: Part, entries: Vec<Fixture>) -> FixtureTable {
    FixtureTable {
        id: id.to_string(),
        title: title.to_string(),
        provenance: format!("published table: {title}"),
        model,
        mode: H,
        series,
        part,
        entries,
    }
}

fn dirac_x() -> FixtureTable {
    // (order, T coefficient, T power, m power, s.E coefficient, E.pi s.pi coefficient)
    let rows: [(usize, (i64, i64), u32, i32, (i64, i64), (i64, i64)); 6] = [
        (3, (-1, 4), 1, 2, (-1, 4), (0, 1)),
        (5, (1, 4), 2, 3, (3, 16), (1, 8)),
        (7, (-5, 16), 3, 4, (-5, 32), (-3, 16)),
        (9, (7, 16), 4, 5, (35, 256), (29, 128)),
        (11, (-21, 32), 5, 6, (-63, 1024), (-65, 256)),
        (13, (33, 32), 6, 7, (231, 2048), (281, 1024)),
    ];
    let mut entries = vec![fx(1, mono(c(1, 2).inv_m(1), 0, Tail::SigmaPi))];
    for (order, t, k, m, se, ep) in rows {
        let n = (order as u32 - 3) / 2;
        let mut terms = vec![t_term(t.0, t.1, k, m, true), mono(iqh(se.0, se.1, 2 * n as i32 + 2), n, Tail::SigmaE)];
        if ep.0 != 0 {
            terms.push(mono(iqh(ep.0, ep.1, 2 * n as i32 + 2), n - 1, Tail::EDotPiSigmaPi));
        }
        entries.push(if order == 11 {
            typo(order, sum(terms), 1, "s.E coefficient printed as -63/1024; the recursion, the closed form and the anomalous table give -63/512")
        } else {
            fx(order, sum(terms))
        });
    }
    table("dirac.x", "Dirac generating operator", Model::Dirac, SeriesKind::X, Part::Full, entries)
}

fn dirac_a_h() -> FixtureTable {
    let rows: [(usize, (i64, i64), u32, i32, (i64, i64)); 6] = [
        (2, (-1, 2), 2, 1, (-1, 4)),
        (4, (1, 2), 3, 2, (3, 16)),
        (6, (-5, 8), 4, 3, (-5, 32)),
        (8, (7, 8), 5, 4, (35, 256)),
        (10, (-21, 16), 6, 5, (-63, 512)),
        (12, (33, 16), 7, 6, (231, 2048)),
    ];
    let mut entries = vec![fx(0, &t_pow(1) + &mono(c(1, 1), 0, Tail::Potential))];
    for (order, t, k, m, so) in rows {
        let n = (order as u32 - 2) / 2;
        entries.push(fx(order, &t_term(t.0, t.1, k, m, false) + &mono(qh(so.0, so.1, order as i32), n, Tail::SigmaExPi)));
    }
    table("dirac.a_h", "hermitian part of the Dirac energy operator", Model::Dirac, SeriesKind::AH, Part::Full, entries)
}

fn dirac_a_n() -> FixtureTable {
    let rows = [(2, (-1, 4)), (4, (5, 16)), (6, (-11, 32)), (8, (93, 256)), (10, (-193, 512)), (12, (793, 2048))];
    let mut entries = vec![fx(0, OperatorExpr::zero(H))];
    for (order, (a, b)) in rows {
        let n = (order as u32 - 2) / 2;
        entries.push(fx(order, mono(iqh(a, b, order as i32), n, Tail::EDotPi)));
    }
    table("dirac.a_n", "anti-hermitian part of the Dirac energy operator", Model::Dirac, SeriesKind::AN, Part::Full, entries)
}

fn dirac_g() -> FixtureTable {
    let rows: [(usize, (i64, i64), u32, (i64, i64)); 5] = [
        (4, (-5, 8), 2, (-1, 4)),
        (6, (11, 12), 3, (5, 16)),
        (8, (-93, 64), 4, (-11, 32)),
        (10, (193, 80), 5, (93, 256)),
        (12, (-793, 192), 6, (-193, 512)),
    ];
    let mut entries = vec![fx(2, t_term(1, 2, 1, 1, false))];
    for (order, t, k, so) in rows {
        let n = (order as u32 - 4) / 2;
        entries.push(fx(
            order,
            &t_term(t.0, t.1, k, k as i32, false) + &mono(qh(so.0, so.1, order as i32 - 1), n, Tail::SigmaExPi),
        ));
    }
    table("dirac.g", "Dirac exponent operator", Model::Dirac, SeriesKind::G, Part::Full, entries)
}

fn anomalous_x() -> FixtureTable {
    let mut entries = vec![fx(1, OperatorExpr::zero(H)), fx(2, OperatorExpr::zero(H))];
    // odd orders: i mu'' s.E and i mu'' (s.pi)(E.pi); even orders: mu'' B.pi
    let odd = [(3, (-1, 2), (0, 1)), (5, (3, 8), (-1, 4)), (7, (-5, 16), (1, 4)), (9, (35, 128), (-15, 64)), (11, (-63, 256), (7, 32)), (13, (231, 1024), (-105, 512))];
    let even = [(4, (1, 2)), (6, (-3, 8)), (8, (5, 16)), (10, (-35, 128)), (12, (63, 256))];
    for (order, se, ep) in odd {
        let n = (order as u32 - 3) / 2;
        let m = order as i32 - 2;
        let mut e = mono(mu2(se.0, se.1, m).times_i(), n, Tail::SigmaE);
        if ep.0 != 0 {
            e = &e + &mono(mu2(ep.0, ep.1, m).times_i(), n - 1, Tail::EDotPiSigmaPi);
        }
        entries.push(fx(order, e));
    }
    for (order, b) in even {
        let n = (order as u32 - 4) / 2;
        entries.push(fx(order, mono(mu2(b.0, b.1, order as i32 - 2), n, Tail::BDotPi)));
    }
    entries.sort_by_key(|f| f.order);
    table("dirac_pauli.x_prime", "anomalous generating operator", Model::DiracPauli, SeriesKind::X, Part::Anomalous, entries)
}

fn anomalous_a_h() -> FixtureTable {
    let mut entries = vec![fx(0, OperatorExpr::zero(H)), fx(1, mono(mu2(-1, 1, 0), 0, Tail::SigmaB))];
    let so = [(2, (-1, 1)), (4, (1, 1)), (6, (-3, 8)), (8, (5, 16)), (10, (-35, 128)), (12, (63, 256))];
    let bb = [(3, (1, 2)), (5, (-3, 8)), (7, (5, 16)), (9, (-35, 128)), (11, (63, 256))];
    for (order, (a, b)) in so {
        let n = (order as u32 - 2) / 2;
        let e = mono(mu2(a, b, order as i32 - 1), n, Tail::SigmaExPi);
        if order == 4 {
            entries.push(typo(order, e, 1, "the recursion and the 1/gamma pattern of the neighbouring orders give 1/2 in place of the printed 1"));
        } else {
            entries.push(fx(order, e));
        }
    }
    for (order, (a, b)) in bb {
        let n = (order as u32 - 3) / 2;
        entries.push(fx(order, mono(mu2(a, b, order as i32 - 1), n, Tail::BDotPiSigmaPi)));
    }
    entries.sort_by_key(|f| f.order);
    table(
        "dirac_pauli.a_h_prime",
        "hermitian part of the anomalous energy operator",
        Model::DiracPauli,
        SeriesKind::AH,
        Part::Anomalous,
        entries,
    )
}

fn anomalous_a_n() -> FixtureTable {
    let entries = (0..=12).map(|k| fx(k, OperatorExpr::zero(H))).collect();
    table(
        "dirac_pauli.a_n_prime",
        "anti-hermitian part of the anomalous energy operator",
        Model::DiracPauli,
        SeriesKind::AN,
        Part::Anomalous,
        entries,
    )
}

fn anomalous_g() -> FixtureTable {
    let mut entries: Vec<Fixture> = (1..=3).map(|k| fx(k, OperatorExpr::zero(H))).collect();
    let so = [(4, (-1, 2)), (6, (5, 8)), (8, (-11, 16)), (10, (93, 128))];
    let bb = [(5, (1, 2)), (7, (-5, 8)), (9, (11, 16)), (11, (-93, 128))];
    for (order, (a, b)) in so {
        entries.push(fx(order, mono(mu2(a, b, order as i32 - 2), (order as u32 - 4) / 2, Tail::SigmaExPi)));
    }
    for (order, (a, b)) in bb {
        entries.push(fx(order, mono(mu2(a, b, order as i32 - 2), (order as u32 - 5) / 2, Tail::BDotPiSigmaPi)));
    }
    entries.push(typo(
        12,
        mono(c(-193, 256).hbar(1).inv_m(10), 4, Tail::SigmaExPi),
        2,
        "printed with hbar where mu'' belongs; the engine gives -193/256 mu''/m^10",
    ));
    entries.sort_by_key(|f| f.order);
    table("dirac_pauli.g_prime", "anomalous exponent operator", Model::DiracPauli, SeriesKind::G, Part::Anomalous, entries)
}

/// `m c^2 xi^(2k)`
fn orbital(num: i64, den: i64, k: u32) -> OperatorExpr {
    mono(c(num, den).inv_m(2 * k as i32 - 1), k, Tail::Unit)
}

/// `xi^(2j) mu.B`
fn zeeman(num: i64, den: i64, j: u32) -> OperatorExpr {
    mono(qh(num, 2 * den, 2 * j as i32 + 1).inv_c(1), j, Tail::SigmaB)
}

/// `xi^(2j) mu.(E x xi)`
fn spin_orbit(num: i64, den: i64, j: u32) -> OperatorExpr {
    mono(qh(num, 2 * den, 2 * j as i32 + 2), j, Tail::SigmaExPi)
}

fn dirac_h() -> FixtureTable {
    let mut entries = vec![fx(0, sum(vec![mono(c(1, 1), 0, Tail::Potential), orbital(1, 2, 1), zeeman(-1, 1, 0)]))];
    // (order, orbital, orbital power, zeeman, zeeman power, spin-orbit, spin-orbit power), as printed
    let rows: [(usize, (i64, i64), u32, (i64, i64), u32, (i64, i64), u32); 6] = [
        (2, (-1, 8), 2, (1, 2), 1, (-1, 2), 0),
        (4, (1, 16), 3, (-3, 8), 3, (3, 8), 2),
        (6, (-5, 128), 4, (5, 16), 2, (-5, 16), 2),
        (8, (7, 256), 5, (-35, 128), 4, (35, 128), 3),
        (10, (-21, 1024), 6, (63, 256), 5, (-63, 256), 4),
        (12, (33, 2048), 7, (231, 1024), 6, (-231, 1024), 5),
    ];
    for (order, o, ok, z, zj, s, sj) in rows {
        let e = sum(vec![orbital(o.0, o.1, ok), zeeman(z.0, z.1, zj), spin_orbit(s.0, s.1, sj)]);
        let note = match order {
            4 => Some((4, "printed xi^6 mu.B and xi^4 mu.(E x xi); the aggregate series need xi^4 and xi^2")),
            6 => Some((2, "printed xi^4 mu.B; the aggregate series need xi^6")),
            12 => Some((2, "both spin terms printed with the opposite sign to the aggregate series")),
            _ => None,
        };
        entries.push(match note {
            Some((k, n)) => typo(order, e, k, n),
            None => fx(order, e),
        });
    }
    table("dirac.h", "FW transformed Dirac Hamiltonian, order by order", Model::Dirac, SeriesKind::H, Part::Full, entries)
}

/// `kappa xi^(2j) mu.(E x xi)`
fn k_spin_orbit(num: i64, den: i64, j: u32) -> OperatorExpr {
    mono(qh(num, 2 * den, 2 * j as i32 + 2).kappa(1), j, Tail::SigmaExPi)
}

/// `kappa xi^(2j) (mu.xi)(B.xi)`
fn k_mu_xi_b_xi(num: i64, den: i64, j: u32) -> OperatorExpr {
    mono(qh(num, 2 * den, 2 * j as i32 + 3).kappa(1), j, Tail::BDotPiSigmaPi)
}

fn anomalous_h() -> FixtureTable {
    let mut entries = vec![fx(0, OperatorExpr::zero(H)), fx(1, mono(qh(-1, 2, 1).kappa(1), 0, Tail::SigmaB))];
    let so = [(2, (-1, 1)), (4, (1, 1)), (6, (-3, 8)), (8, (5, 16)), (10, (-35, 128)), (12, (63, 256))];
    let bb = [(3, (1, 2)), (5, (-3, 8)), (7, (5, 16)), (9, (-35, 128)), (11, (63, 256))];
    for (order, (a, b)) in so {
        let e = k_spin_orbit(a, b, (order as u32 - 2) / 2);
        entries.push(if order == 4 {
            typo(order, e, 1, "same slip as the order-4 anomalous energy operator: 1/2 in place of the printed 1")
        } else {
            fx(order, e)
        });
    }
    for (order, (a, b)) in bb {
        entries.push(fx(order, k_mu_xi_b_xi(a, b, (order as u32 - 3) / 2)));
    }
    entries.sort_by_key(|f| f.order);
    table("dirac_pauli.h_prime", "anomalous FW transformed Hamiltonian", Model::DiracPauli, SeriesKind::H, Part::Anomalous, entries)
}

fn low_order_inhomogeneous() -> FixtureTable {
    let i = Mode::Inhomogeneous;
    let m = |k: Coefficient, p2: u32, tail: Tail| OperatorExpr::monomial(i, k, p2, tail);
    let h0 = [m(c(1, 1), 0, Tail::Potential), m(c(1, 2).inv_m(1), 1, Tail::Unit), m(qh(-1, 2, 1).inv_c(1), 0, Tail::SigmaB)];
    let h2 = [
        m(c(-1, 8).inv_m(3), 2, Tail::Unit),
        // (q hbar/8 m^3 c^3) [pi^2 s.B + s.B pi^2] is twice the symmetrized monomial
        m(qh(1, 4, 3).inv_c(1), 1, Tail::SigmaB),
        m(c(-1, 8).with(Symbols::new(2, 1, 2, 0, 0)), 0, Tail::DivE),
        m(qh(-1, 4, 2), 0, Tail::SigmaExPi),
    ];
    let fold = |ts: &[OperatorExpr]| ts.iter().fold(OperatorExpr::zero(i), |a, b| &a + b);
    FixtureTable {
        id: "dirac.h_inhomogeneous".to_string(),
        title: "FW transformed Dirac Hamiltonian in static inhomogeneous fields up to (pi/mc)^4".to_string(),
        provenance: "published formula: FW transformed Dirac Hamiltonian in static inhomogeneous fields up to (pi/mc)^4"
            .to_string(),
        model: Model::Dirac,
        mode: i,
        series: SeriesKind::H,
        part: Part::Full,
        entries: vec![fx(0, fold(&h0)), fx(2, fold(&h2))],
    }
}

pub(super) fn embedded_tables() -> Vec<FixtureTable> {
    vec![
        dirac_x(),
        dirac_a_h(),
        dirac_a_n(),
        dirac_g(),
        dirac_h(),
        anomalous_x(),
        anomalous_a_h(),
        anomalous_a_n(),
        anomalous_g(),
        anomalous_h(),
        low_order_inhomogeneous(),
    ]
}

fn series(id: &str, what: &str, target: SeriesTarget, pairs: &[(i64, i64)]) -> SeriesFixture {
    SeriesFixture {
        id: id.to_string(),
        provenance: format!("published series: {what}"),
        target,
        coefficients: RationalSeries::from_ints(pairs),
    }
}

pub(super) fn embedded_series() -> Vec<SeriesFixture> {
    let sqrt = [(1, 1), (1, 2), (-1, 8), (1, 16), (-5, 128), (7, 256), (-21, 1024), (33, 2048), (-429, 32768)];
    let inv = [(1, 1), (-1, 2), (3, 8), (-5, 16), (35, 128), (-63, 256), (231, 1024), (-429, 2048)];
    let so = [(1, 2), (-3, 8), (5, 16), (-35, 128), (63, 256), (-231, 1024), (429, 2048)];
    vec![
        series("gamma", "expansion of (1+xi^2)^(1/2)", SeriesTarget::Gamma, &sqrt),
        series("inv_gamma", "expansion of (1+xi^2)^(-1/2)", SeriesTarget::InvGamma, &inv),
        series("spin_orbit_weight", "expansion of 1/gamma - 1/(1+gamma)", SeriesTarget::SpinOrbitWeight, &so),
        series("orbital_aggregate", "orbital Hamiltonian through xi^14", SeriesTarget::OrbitalAggregate, &sqrt[..8]),
        series("zeeman_aggregate", "Zeeman Hamiltonian through xi^12", SeriesTarget::ZeemanAggregate, &inv[..7]),
        series("spin_orbit_aggregate", "spin-orbit Hamiltonian through xi^10", SeriesTarget::SpinOrbitAggregate, &so[..6]),
    ]
}
