//! Exact power-series resummations in `xi^2` and the closed forms built on them.

mod classical;
mod closed_form;
mod series;

pub use classical::{aggregate_series, classical_hamiltonian_series, match_series, Aggregates, OrderDiff, SeriesDiff, TermDiff};
pub use closed_form::{
    anomalous_x_template, dirac_x_template, expand_closed_form_x, expand_closed_form_xprime, free_particle_x, magnetic_x,
    ClosedFormExpansion, ClosedFormTemplate, SeriesArgument, TemplateTerm, ThirdTermReading, THIRD_TERM_READINGS,
};
pub use series::{gamma_series_suite, GammaSeries, RationalSeries, SeriesError};
