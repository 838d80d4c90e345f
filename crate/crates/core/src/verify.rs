//! Verification suites over one set of pipeline runs.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::tail::HOMOGENEOUS_TAILS;
use crate::algebra::{Mode, OperatorExpr, Symbols, Tail};
use crate::engine::{
    assemble_hamiltonian, dimension_check, hermiticity_check, residuals, structural_check, CheckOutcome, EngineError,
    GTreatment, Model, ModelSpec, PipelineResult, PotentialKind, SeriesByOrder,
};
use crate::fixtures::{compare_table, EntryVerdict, FixtureSet, SeriesTarget, Verdict};
use crate::numeric::{run_numeric_suite, ExprGenerator, NumericReport};
use crate::resummation::{
    aggregate_series, classical_hamiltonian_series, expand_closed_form_x, expand_closed_form_xprime, free_particle_x,
    gamma_series_suite, magnetic_x, match_series, RationalSeries,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Tables,
    StringVanish,
    Hermiticity,
    ClosedForm,
    ClassicalMatch,
    Numeric,
    SelfConsistency,
    Properties,
    Dimensions,
}

pub const ALL_SUITES: [Suite; 9] = [
    Suite::Tables,
    Suite::StringVanish,
    Suite::Hermiticity,
    Suite::ClosedForm,
    Suite::ClassicalMatch,
    Suite::Numeric,
    Suite::SelfConsistency,
    Suite::Properties,
    Suite::Dimensions,
];

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Tables => "tables",
            Suite::StringVanish => "string-vanish",
            Suite::Hermiticity => "hermiticity",
            Suite::ClosedForm => "closed-form",
            Suite::ClassicalMatch => "classical-match",
            Suite::Numeric => "numeric",
            Suite::SelfConsistency => "self-consistency",
            Suite::Properties => "properties",
            Suite::Dimensions => "dimensions",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        ALL_SUITES.iter().copied().find(|x| x.name() == s).ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub passed: bool,
    pub checks: Vec<CheckOutcome>,
    /// Per-entry table verdicts (tables suite only).
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub entries: Vec<EntryVerdict>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub numeric: Option<NumericReport>,
}

impl SuiteReport {
    fn new(suite: Suite, checks: Vec<CheckOutcome>) -> Self {
        let passed = checks.iter().all(|c| c.passed);
        SuiteReport { suite, passed, checks, entries: Vec::new(), numeric: None }
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("[{}] {}\n", if self.passed { "PASS" } else { "FAIL" }, self.suite);
        for c in &self.checks {
            s.push_str(&format!("  {} {}\n", if c.passed { "ok  " } else { "FAIL" }, c.name));
            for d in &c.details {
                s.push_str(&format!("       {d}\n"));
            }
        }
        s
    }
}

/// Highest Hamiltonian order the published tables cover.
pub const TABLE_ORDER: usize = 12;

/// The pipeline runs the suites share.
pub struct Pipelines {
    pub dirac: PipelineResult,
    pub dirac_pauli: PipelineResult,
    pub inhomogeneous: PipelineResult,
}

impl Pipelines {
    pub fn compute() -> Result<Self, EngineError> {
        Ok(Pipelines {
            dirac: assemble_hamiltonian(&ModelSpec::dirac(TABLE_ORDER))?,
            dirac_pauli: assemble_hamiltonian(&ModelSpec::dirac_pauli(TABLE_ORDER))?,
            inhomogeneous: assemble_hamiltonian(&ModelSpec::inhomogeneous(2))?,
        })
    }

    fn for_table(&self, model: Model, mode: Mode) -> &PipelineResult {
        match (model, mode) {
            (_, Mode::Inhomogeneous) => &self.inhomogeneous,
            (Model::Dirac, _) => &self.dirac,
            (Model::DiracPauli, _) => &self.dirac_pauli,
        }
    }
}

fn check(name: &str, failures: Vec<String>) -> CheckOutcome {
    CheckOutcome::from_failures(name, failures)
}

fn series_failures(name: &str, got: &RationalSeries, want: &RationalSeries) -> Vec<String> {
    let n = got.truncation_order().min(want.truncation_order());
    if got.truncation_order() < want.truncation_order() {
        return vec![format!("{name}: only {} coefficients computed", got.truncation_order() + 1)];
    }
    (0..=n)
        .filter(|k| got.coeff(*k) != want.coeff(*k))
        .map(|k| format!("{name}: x^{k} coefficient {} differs from {}", got.coeff(k), want.coeff(k)))
        .collect()
}

pub fn tables_suite(p: &Pipelines, fixtures: &FixtureSet) -> SuiteReport {
    let mut checks = Vec::new();
    let mut entries = Vec::new();
    for t in &fixtures.tables {
        let verdicts = compare_table(t, p.for_table(t.model, t.mode));
        let mut failures = Vec::new();
        for v in &verdicts {
            match v.verdict {
                Verdict::Match => {}
                Verdict::ExpectedMismatch => {}
                Verdict::Mismatch => {
                    failures.push(format!("{}: mismatch", v.provenance));
                    for d in &v.diff {
                        failures.push(format!("  {}: engine {} | published {}", d.term, d.lhs, d.rhs));
                    }
                }
                Verdict::UnexpectedMatch => failures.push(format!("{}: marked as a misprint but matches", v.provenance)),
            }
        }
        let mut c = check(&t.id, failures);
        for v in verdicts.iter().filter(|v| v.verdict == Verdict::ExpectedMismatch) {
            c.details.push(format!(
                "expected mismatch at order {} ({})",
                v.order,
                v.note.clone().unwrap_or_default()
            ));
            for d in &v.diff {
                c.details.push(format!("  {}: engine {} | published {}", d.term, d.lhs, d.rhs));
            }
        }
        checks.push(c);
        entries.extend(verdicts);
    }
    let gamma = gamma_series_suite(8);
    let agg = aggregate_series(&p.dirac.h, 7);
    for s in &fixtures.series {
        let got = match s.target {
            SeriesTarget::Gamma => gamma.gamma.clone(),
            SeriesTarget::InvGamma => gamma.inv_gamma.clone(),
            SeriesTarget::SpinOrbitWeight => gamma.spin_orbit.clone(),
            SeriesTarget::OrbitalAggregate => agg.orbital.clone(),
            SeriesTarget::ZeemanAggregate => agg.zeeman.clone(),
            SeriesTarget::SpinOrbitAggregate => agg.spin_orbit.clone(),
        };
        checks.push(check(&s.id, series_failures(&s.id, &got, &s.coefficients)));
    }
    let mut r = SuiteReport::new(Suite::Tables, checks);
    r.entries = entries;
    r
}

pub fn string_vanish_suite(p: &Pipelines) -> SuiteReport {
    let f = |r: &PipelineResult| -> Vec<String> {
        r.s.entries.iter().map(|(k, e)| format!("S at order {k} has {} terms", e.len())).collect()
    };
    SuiteReport::new(
        Suite::StringVanish,
        vec![check("dirac string operator", f(&p.dirac)), check("dirac-pauli string operator", f(&p.dirac_pauli))],
    )
}

pub fn hermiticity_suite(p: &Pipelines) -> SuiteReport {
    let mut checks = Vec::new();
    for (name, r) in [("dirac", &p.dirac), ("dirac-pauli", &p.dirac_pauli), ("inhomogeneous", &p.inhomogeneous)] {
        let mut c = hermiticity_check(r);
        c.name = format!("{name} hermiticity");
        checks.push(c);
    }
    SuiteReport::new(Suite::Hermiticity, checks)
}

fn diff_failures(a: &SeriesByOrder, b: &SeriesByOrder) -> Vec<String> {
    let d = match_series(a, b);
    if d.is_empty() {
        Vec::new()
    } else {
        d.to_text().lines().map(str::to_string).collect()
    }
}

pub fn closed_form_suite(p: &Pipelines) -> Result<SuiteReport, EngineError> {
    let order = TABLE_ORDER + 1;
    let mut checks = Vec::new();
    for (name, model, r) in [("dirac", Model::Dirac, &p.dirac), ("dirac-pauli", Model::DiracPauli, &p.dirac_pauli)] {
        let e = expand_closed_form_x(order, model)?;
        let mut c = check(&format!("{name} closed form through order {order}"), diff_failures(&e.x, &r.x.truncated(order)));
        c.details.push(format!("third term reading: {}", e.reading.describe()));
        checks.push(c);
    }
    checks.push(check(
        "anomalous closed form equals the kappa part of the recursion",
        diff_failures(&expand_closed_form_xprime(order), &p.dirac_pauli.x.kappa_part(1).truncated(order)),
    ));
    checks.push(check(
        "field-free closed form is c s.p/(m c^2 + E_p)",
        diff_failures(&p.dirac.x.map(|e| e.field_free_part()), &free_particle_x(order)),
    ));
    let mx = magnetic_x(order);
    let spec = ModelSpec::dirac(TABLE_ORDER);
    let res = residuals(&spec, &mx, PotentialKind::Constant)?;
    checks.push(check(
        "magnetic closed form solves the generating equation for constant V",
        res.entries.keys().map(|k| format!("nonzero residual at order {k}")).collect(),
    ));
    Ok(SuiteReport::new(Suite::ClosedForm, checks))
}

/// Order-14 orbital and Zeeman coefficients from a fresh run.
pub fn extrapolation_check() -> Result<CheckOutcome, EngineError> {
    let r = assemble_hamiltonian(&ModelSpec::dirac(14))?;
    let agg = aggregate_series(&r.h, 7);
    let g = gamma_series_suite(8);
    let mut f = Vec::new();
    if agg.orbital.truncation_order() < 7 {
        f.push("orbital series too short".into());
    }
    let orbital = r.h.get(14).real_coefficient(8, Tail::Unit, Symbols::inv_m(15)).unwrap_or_else(Zero::zero);
    if orbital != g.gamma.coeff(8) {
        f.push(format!("order-14 orbital coefficient {orbital}, want {}", g.gamma.coeff(8)));
    }
    if agg.zeeman.coeff(7) != g.inv_gamma.coeff(7) {
        f.push(format!("order-14 Zeeman coefficient {}, want {}", agg.zeeman.coeff(7), g.inv_gamma.coeff(7)));
    }
    let mut c = check("order-14 extrapolation", f);
    c.details.push(format!("orbital {} and Zeeman {}", orbital, agg.zeeman.coeff(7)));
    Ok(c)
}

pub fn classical_match_suite(p: &Pipelines) -> Result<SuiteReport, EngineError> {
    let mut checks = Vec::new();
    for (name, r) in [("dirac", &p.dirac), ("dirac-pauli", &p.dirac_pauli)] {
        let c = classical_hamiltonian_series(TABLE_ORDER, &r.spec);
        checks.push(check(&format!("{name} H against the classical Hamiltonian"), diff_failures(&r.h, &c)));
    }
    let agg = aggregate_series(&p.dirac.h, 6);
    let g = gamma_series_suite(7);
    let mut f = series_failures("orbital", &agg.orbital, &g.gamma.truncate(6));
    f.extend(series_failures("zeeman", &agg.zeeman, &g.inv_gamma.truncate(6)));
    f.extend(series_failures("spin-orbit", &agg.spin_orbit.truncate(5), &g.spin_orbit.truncate(5)));
    checks.push(check("aggregates equal the gamma series", f));
    checks.push(extrapolation_check()?);
    Ok(SuiteReport::new(Suite::ClassicalMatch, checks))
}

pub fn self_consistency_suite(p: &Pipelines) -> Result<SuiteReport, EngineError> {
    let mut checks = Vec::new();
    for (name, r) in [("dirac", &p.dirac), ("dirac-pauli", &p.dirac_pauli), ("inhomogeneous", &p.inhomogeneous)] {
        let rep = &r.residuals;
        let mut f = Vec::new();
        if !rep.passed {
            f.push(format!("residual at order {:?}: {:?} {:?}", rep.first_failing_order, rep.offending_terms, rep.error));
        }
        checks.push(check(&format!("{name} generating operator residuals"), f));
    }
    // A deliberately perturbed X must be caught at the perturbed order.
    let spec = p.dirac.spec;
    let mut bad = p.dirac.x.clone();
    bad.add_to(5, &OperatorExpr::term(Mode::Homogeneous, 1, 1000, 2, Tail::SigmaE));
    let rep = crate::engine::verify_self_consistency(&spec, &bad, PotentialKind::General);
    let caught = !rep.passed && rep.first_failing_order == Some(5);
    checks.push(check(
        "perturbed generating operator is rejected",
        if caught { Vec::new() } else { vec![format!("perturbation not detected: {rep:?}")] },
    ));
    Ok(SuiteReport::new(Suite::SelfConsistency, checks))
}

pub fn dimensions_suite(p: &Pipelines) -> SuiteReport {
    let mut checks = Vec::new();
    for (name, r) in [("dirac", &p.dirac), ("dirac-pauli", &p.dirac_pauli), ("inhomogeneous", &p.inhomogeneous)] {
        let mut c = dimension_check(r);
        c.name = format!("{name} dimensions");
        checks.push(c);
        let mut c = structural_check(r);
        c.name = format!("{name} structure");
        checks.push(c);
    }
    SuiteReport::new(Suite::Dimensions, checks)
}

/// Counts of randomized algebra checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PropertyBudget {
    pub triples: usize,
}

impl Default for PropertyBudget {
    fn default() -> Self {
        // three expressions per triple, so well past 10^4 expressions
        PropertyBudget { triples: 4000 }
    }
}

/// Associativity, adjoint antihomomorphism, the derivation rule of `[V, .]`,
/// distributivity and field-degree truncation over random canonical
/// expressions.
pub fn properties_suite(seed: u64, budget: PropertyBudget) -> Result<SuiteReport, EngineError> {
    let mut gen = ExprGenerator::new(seed);
    let (mut assoc, mut adj, mut deriv, mut dist, mut trunc) = (Vec::new(), Vec::new(), Vec::new(), Vec::new(), Vec::new());
    let mut count = 0usize;
    let note = |v: &mut Vec<String>, k: usize, a: &OperatorExpr, b: &OperatorExpr, c: &OperatorExpr| {
        if v.len() < 5 {
            v.push(format!("case {k}: a = {a}, b = {b}, c = {c}"));
        }
    };
    for k in 0..budget.triples {
        let a = gen.expr(&HOMOGENEOUS_TAILS, 3, 2);
        let b = gen.expr(&HOMOGENEOUS_TAILS, 3, 2);
        let c = gen.expr(&HOMOGENEOUS_TAILS, 3, 2);
        count += 3;
        let ab = a.mul(&b)?;
        let bc = b.mul(&c)?;
        if ab.mul(&c)? != a.mul(&bc)? {
            note(&mut assoc, k, &a, &b, &c);
        }
        if ab.adjoint() != b.adjoint().mul(&a.adjoint())? {
            note(&mut adj, k, &a, &b, &c);
        }
        let lhs = ab.commute_with_v()?;
        let rhs = &a.commute_with_v()?.mul(&b)? + &a.mul(&b.commute_with_v()?)?;
        if lhs != rhs {
            note(&mut deriv, k, &a, &b, &c);
        }
        if a.mul(&(&b + &c))? != &ab + &a.mul(&c)? {
            note(&mut dist, k, &a, &b, &c);
        }
        if ab.max_field_degree() > 1 || ab.terms().any(|(_, v)| v.re.is_zero() && v.im.is_zero()) {
            note(&mut trunc, k, &a, &b, &c);
        }
    }
    let mut checks = vec![
        check("associativity", assoc),
        check("adjoint reverses products", adj),
        check("[V, ab] = [V, a] b + a [V, b]", deriv),
        check("distributivity", dist),
        check("products stay linear in the fields", trunc),
    ];
    checks[0].details.push(format!("{count} random expressions"));
    checks.push(kappa_zero_check()?);
    Ok(SuiteReport::new(Suite::Properties, checks))
}

/// The Dirac-Pauli pipeline at `g = 2` must reproduce the Dirac one exactly.
pub fn kappa_zero_check() -> Result<CheckOutcome, EngineError> {
    let d = assemble_hamiltonian(&ModelSpec::dirac(TABLE_ORDER))?;
    let spec = ModelSpec { g: GTreatment::Two, ..ModelSpec::dirac_pauli(TABLE_ORDER) };
    let p = assemble_hamiltonian(&spec)?;
    let mut f = Vec::new();
    for (name, a, b) in [("X", &d.x, &p.x), ("A", &d.a, &p.a), ("G", &d.g, &p.g), ("S", &d.s, &p.s), ("H", &d.h, &p.h)] {
        if a.entries != b.entries {
            f.push(format!("{name} differs"));
        }
    }
    Ok(check("dirac-pauli with g = 2 equals dirac", f))
}

pub fn numeric_suite(seed: u64, samples: usize) -> SuiteReport {
    match run_numeric_suite(seed, samples) {
        Ok(n) => {
            let r = &n.residual_stats;
            let mut checks = vec![
                check(
                    "free-particle residuals",
                    if r.free_particle_max < crate::numeric::FREE_PARTICLE_TOL {
                        Vec::new()
                    } else {
                        vec![format!("max residual {:e}", r.free_particle_max)]
                    },
                ),
                check(
                    "evaluation homomorphism",
                    if r.homomorphism_max < crate::numeric::EXACTNESS_TOL {
                        Vec::new()
                    } else {
                        vec![format!("max defect {:e}", r.homomorphism_max)]
                    },
                ),
                check(
                    "hermitian entries evaluate to hermitian matrices",
                    if r.hermiticity_max < crate::numeric::EXACTNESS_TOL {
                        Vec::new()
                    } else {
                        vec![format!("max defect {:e}", r.hermiticity_max)]
                    },
                ),
            ];
            checks[0].details.push(format!("{} samples, max {:e}", n.samples, r.free_particle_max));
            for s in &n.slopes {
                let mut c = check(
                    &format!("convergence, {}, L = {}", s.label, s.max_order),
                    if s.passed { Vec::new() } else { vec![format!("slopes {:?}, expected {}", s.slopes, s.expected)] },
                );
                c.details.push(format!("slopes {:.3?} (expected {})", s.slopes, s.expected));
                checks.push(c);
            }
            let mut rep = SuiteReport::new(Suite::Numeric, checks);
            rep.numeric = Some(n);
            rep
        }
        Err(e) => SuiteReport::new(Suite::Numeric, vec![check("numeric suite", vec![e.to_string()])]),
    }
}

/// Number of free-particle samples in the numeric suite.
pub const NUMERIC_SAMPLES: usize = 1000;

pub fn run_suite(suite: Suite, p: &Pipelines, fixtures: &FixtureSet, seed: u64) -> Result<SuiteReport, EngineError> {
    Ok(match suite {
        Suite::Tables => tables_suite(p, fixtures),
        Suite::StringVanish => string_vanish_suite(p),
        Suite::Hermiticity => hermiticity_suite(p),
        Suite::ClosedForm => closed_form_suite(p)?,
        Suite::ClassicalMatch => classical_match_suite(p)?,
        Suite::Numeric => numeric_suite(seed, NUMERIC_SAMPLES),
        Suite::SelfConsistency => self_consistency_suite(p)?,
        Suite::Properties => properties_suite(seed, PropertyBudget::default())?,
        Suite::Dimensions => dimensions_suite(p),
    })
}
