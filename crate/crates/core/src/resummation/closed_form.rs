use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::series::{gamma_series_suite, GammaSeries, RationalSeries};
use crate::algebra::{Coefficient, Mode, OperatorExpr, Tail};
use crate::engine::{solve_generating_operator, EngineError, Model, ModelSpec, SeriesByOrder};

/// What `x` in a template series stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesArgument {
    /// `xi^2 = pi^2/(m c)^2`
    XiSquared,
    /// `(s.xi)^2`, which carries the magnetic term of `(s.pi)^2`
    SigmaXiSquared,
}

/// One `f(x) * operator` piece of a closed form.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TemplateTerm {
    pub label: String,
    pub series: RationalSeries,
    pub argument: SeriesArgument,
    /// Operator multiplying `f`, with the powers of c stripped.
    pub operator: OperatorExpr,
    /// Power of 1/c carried by `operator`.
    pub base_order: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClosedFormTemplate {
    pub terms: Vec<TemplateTerm>,
}

impl ClosedFormTemplate {
    /// Expands every term through `max_order`; the `x^k` coefficient of a
    /// term lands at `base_order + 2k`.
    pub fn instantiate(&self, model: Model, max_order: usize) -> SeriesByOrder {
        let mut out = SeriesByOrder::new(model, max_order);
        for t in &self.terms {
            let mut order = t.base_order;
            let mut k = 0;
            while order <= max_order && k <= t.series.truncation_order() {
                let c = t.series.coeff(k);
                if !c.is_zero() {
                    let arg = argument_power(t.argument, k as u32);
                    let piece = arg.mul(&t.operator).expect("homogeneous product").scale_rational(&c);
                    out.add_to(order, &piece);
                }
                order += 2;
                k += 1;
            }
        }
        out
    }

    /// Keeps only the field-free and magnetic parts.
    pub fn without_electric(&self) -> Self {
        ClosedFormTemplate {
            terms: self
                .terms
                .iter()
                .filter(|t| !t.operator.terms().any(|(k, _)| k.monomial.tail.contains_e()))
                .cloned()
                .collect(),
        }
    }
}

/// `x^k` as an operator, with the `1/c^(2k)` left to the order index.
fn argument_power(arg: SeriesArgument, k: u32) -> OperatorExpr {
    let h = Mode::Homogeneous;
    match arg {
        SeriesArgument::XiSquared => OperatorExpr::monomial(h, Coefficient::one().inv_m(2 * k as i32), k, Tail::Unit),
        SeriesArgument::SigmaXiSquared => {
            let s2 = OperatorExpr::monomial(h, Coefficient::one().inv_m(1), 0, Tail::SigmaPi).pow(2).expect("homogeneous");
            s2.pow(k).expect("homogeneous")
        }
    }
}

/// Readings of the third term of the closed-form Dirac generating operator.
/// The printed form leaves the parenthesization of the square and the
/// `i/(m c^2)` prefactor implicit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ThirdTermReading {
    /// `(1/(gamma (1 + gamma)))^2 (+i/mc^2) (mu.xi)(E.xi)`
    SquaredProductPlusI,
    /// `(1/(gamma (1 + gamma)))^2 (-i/mc^2) (mu.xi)(E.xi)`
    SquaredProductMinusI,
    /// `(1/gamma)(1/(1 + gamma))^2 (+i/mc^2) (mu.xi)(E.xi)`
    SquaredSecondPlusI,
    /// `(1/gamma)(1/(1 + gamma))^2 (-i/mc^2) (mu.xi)(E.xi)`
    SquaredSecondMinusI,
}

pub const THIRD_TERM_READINGS: [ThirdTermReading; 4] = [
    ThirdTermReading::SquaredProductPlusI,
    ThirdTermReading::SquaredProductMinusI,
    ThirdTermReading::SquaredSecondPlusI,
    ThirdTermReading::SquaredSecondMinusI,
];

impl ThirdTermReading {
    pub fn describe(self) -> &'static str {
        match self {
            ThirdTermReading::SquaredProductPlusI => "(1/(gamma(1+gamma)))^2 with prefactor +i/(m c^2)",
            ThirdTermReading::SquaredProductMinusI => "(1/(gamma(1+gamma)))^2 with prefactor -i/(m c^2)",
            ThirdTermReading::SquaredSecondPlusI => "(1/gamma)(1/(1+gamma))^2 with prefactor +i/(m c^2)",
            ThirdTermReading::SquaredSecondMinusI => "(1/gamma)(1/(1+gamma))^2 with prefactor -i/(m c^2)",
        }
    }
}

fn q_hbar_over_2(inv_m: i32) -> Coefficient {
    Coefficient::new(1, 2).q(1).hbar(1).inv_m(inv_m)
}

fn op(c: Coefficient, tail: Tail) -> OperatorExpr {
    OperatorExpr::monomial(Mode::Homogeneous, c, 0, tail)
}

/// Template for the weak-field Dirac generating operator.
pub fn dirac_x_template(order: usize, reading: ThirdTermReading) -> ClosedFormTemplate {
    let g = gamma_series_suite(order / 2 + 1);
    let (series, plus) = match reading {
        ThirdTermReading::SquaredProductPlusI => (g.inv_gamma_one_plus_gamma_sq.clone(), true),
        ThirdTermReading::SquaredProductMinusI => (g.inv_gamma_one_plus_gamma_sq.clone(), false),
        ThirdTermReading::SquaredSecondPlusI => (g.inv_gamma_inv_one_plus_gamma_sq.clone(), true),
        ThirdTermReading::SquaredSecondMinusI => (g.inv_gamma_inv_one_plus_gamma_sq.clone(), false),
    };
    let third = if plus { q_hbar_over_2(4).times_i() } else { q_hbar_over_2(4).times_i().times_i().times_i() };
    ClosedFormTemplate {
        terms: vec![
            TemplateTerm {
                label: "1/(1+sqrt(1+(s.xi)^2)) s.xi".into(),
                series: g.inv_one_plus_gamma.clone(),
                argument: SeriesArgument::SigmaXiSquared,
                operator: op(Coefficient::one().inv_m(1), Tail::SigmaPi),
                base_order: 1,
            },
            TemplateTerm {
                label: "(1/gamma - 1/(1+gamma)) (-i/mc^2) mu.E".into(),
                series: g.spin_orbit.clone(),
                argument: SeriesArgument::XiSquared,
                operator: op(q_hbar_over_2(2).times_i().times_i().times_i(), Tail::SigmaE),
                base_order: 3,
            },
            TemplateTerm {
                label: format!("third term, {}", reading.describe()),
                series,
                argument: SeriesArgument::XiSquared,
                operator: op(third, Tail::EDotPiSigmaPi),
                base_order: 5,
            },
        ],
    }
}

/// Template for the anomalous part `X'` of the Dirac-Pauli generating operator.
pub fn anomalous_x_template(order: usize) -> ClosedFormTemplate {
    let g: GammaSeries = gamma_series_suite(order / 2 + 1);
    let minus_i = |c: Coefficient| c.times_i().times_i().times_i();
    ClosedFormTemplate {
        terms: vec![
            TemplateTerm {
                label: "(1/gamma - 1/(1+gamma)) kappa (-i/mc^2) mu.E".into(),
                series: g.spin_orbit.clone(),
                argument: SeriesArgument::XiSquared,
                operator: op(minus_i(q_hbar_over_2(2).kappa(1)), Tail::SigmaE),
                base_order: 3,
            },
            TemplateTerm {
                label: "(1/gamma - 1/(1+gamma)) kappa (q hbar/2m^2c^3) B.xi".into(),
                series: g.spin_orbit.clone(),
                argument: SeriesArgument::XiSquared,
                operator: op(q_hbar_over_2(3).kappa(1), Tail::BDotPi),
                base_order: 4,
            },
            TemplateTerm {
                label: "(1/gamma)(1/(1+gamma))^2 kappa (-i/mc^2) (mu.xi)(E.xi)".into(),
                series: g.inv_gamma_inv_one_plus_gamma_sq.clone(),
                argument: SeriesArgument::XiSquared,
                operator: op(minus_i(q_hbar_over_2(4).kappa(1)), Tail::EDotPiSigmaPi),
                base_order: 5,
            },
        ],
    }
}

/// Closed-form generating operator together with the reading used for its
/// third term.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClosedFormExpansion {
    pub x: SeriesByOrder,
    pub reading: ThirdTermReading,
    /// Whether the chosen reading reproduces the recursion at every order.
    pub matches_recursion: bool,
    /// How many orders each reading got wrong, in `THIRD_TERM_READINGS` order.
    pub mismatched_orders: Vec<(ThirdTermReading, usize)>,
}

fn recursion_x(order: usize, model: Model) -> Result<SeriesByOrder, EngineError> {
    // X is solved one order past the (even) Hamiltonian order.
    let max_order = order / 2 * 2;
    let mut spec = if model == Model::Dirac { ModelSpec::dirac(max_order) } else { ModelSpec::dirac_pauli(max_order) };
    spec.order_limit = spec.order_limit.max(max_order + 1);
    Ok(solve_generating_operator(&spec)?.truncated(order))
}

fn count_mismatches(a: &SeriesByOrder, b: &SeriesByOrder, order: usize) -> usize {
    (0..=order).filter(|k| a.get(*k) != b.get(*k)).count()
}

/// Expands the closed-form generating operator through `order`, picking the
/// third-term reading that agrees with the recursion. For Dirac-Pauli the
/// anomalous template is added.
pub fn expand_closed_form_x(order: usize, model: Model) -> Result<ClosedFormExpansion, EngineError> {
    let oracle = recursion_x(order, model)?;
    let anomalous = if model == Model::DiracPauli {
        Some(anomalous_x_template(order).instantiate(model, order))
    } else {
        None
    };
    let mut best: Option<(ThirdTermReading, SeriesByOrder, usize)> = None;
    let mut tally = Vec::new();
    for reading in THIRD_TERM_READINGS {
        let mut x = dirac_x_template(order, reading).instantiate(model, order);
        if let Some(a) = &anomalous {
            for k in 0..=order {
                x.add_to(k, &a.get(k));
            }
        }
        let bad = count_mismatches(&x, &oracle, order);
        tally.push((reading, bad));
        if best.as_ref().map_or(true, |b| bad < b.2) {
            best = Some((reading, x, bad));
        }
    }
    let (reading, x, bad) = best.expect("at least one reading");
    Ok(ClosedFormExpansion { x, reading, matches_recursion: bad == 0, mismatched_orders: tally })
}

/// The anomalous template alone.
pub fn expand_closed_form_xprime(order: usize) -> SeriesByOrder {
    anomalous_x_template(order).instantiate(Model::DiracPauli, order)
}

/// Free-particle specialization, the series of `c s.p/(m c^2 + E_p)`.
pub fn free_particle_x(order: usize) -> SeriesByOrder {
    let g = gamma_series_suite(order / 2 + 1);
    let mut out = SeriesByOrder::new(Model::Dirac, order);
    let mut ord = 1;
    let mut k = 0u32;
    while ord <= order {
        let c: BigRational = g.inv_one_plus_gamma.coeff(k as usize);
        out.set(ord, OperatorExpr::monomial(Mode::Homogeneous, Coefficient::from_rational(c).inv_m(2 * k as i32 + 1), k, Tail::SigmaPi));
        ord += 2;
        k += 1;
    }
    out
}

/// The closed form with the electric field switched off, which reduces to
/// `1/(1 + sqrt(1 + (s.xi)^2)) s.xi`.
pub fn magnetic_x(order: usize) -> SeriesByOrder {
    dirac_x_template(order, ThirdTermReading::SquaredProductPlusI).without_electric().instantiate(Model::Dirac, order)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dirac_closed_form_matches_recursion() {
        let e = expand_closed_form_x(13, Model::Dirac).unwrap();
        assert!(e.matches_recursion, "{:?}", e.mismatched_orders);
        assert_eq!(e.reading, ThirdTermReading::SquaredProductPlusI);
    }

    #[test]
    fn anomalous_closed_form_matches_recursion() {
        let e = expand_closed_form_x(13, Model::DiracPauli).unwrap();
        assert!(e.matches_recursion, "{:?}", e.mismatched_orders);
    }

    #[test]
    fn free_particle_is_field_free_part() {
        let e = expand_closed_form_x(13, Model::Dirac).unwrap();
        assert_eq!(e.x.map(|x| x.field_free_part()), free_particle_x(13));
    }
}
