//! Versioned JSON documents: pipeline runs, exported series and full
//! derivation reports.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::Mode;
use crate::engine::{
    dimension_check, hermiticity_check, structural_check, CheckOutcome, ConsistencyReport, EngineError, GTreatment,
    Model, ModelSpec, PipelineResult, SeriesByOrder,
};
use crate::fixtures::{EntryVerdict, FixtureSet};
use crate::numeric::NumericReport;
use crate::resummation::{aggregate_series, Aggregates, RationalSeries};
use crate::verify::{run_suite, Pipelines, Suite, SuiteReport, ALL_SUITES};

pub const DOCUMENT_VERSION: u32 = 1;
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipelineSeries {
    #[serde(rename = "X")]
    pub x: SeriesByOrder,
    #[serde(rename = "A_H")]
    pub a_h: SeriesByOrder,
    #[serde(rename = "A_N")]
    pub a_n: SeriesByOrder,
    #[serde(rename = "G")]
    pub g: SeriesByOrder,
    #[serde(rename = "S")]
    pub s: SeriesByOrder,
    #[serde(rename = "H")]
    pub h: SeriesByOrder,
}

/// One pipeline run as a JSON document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipelineDocument {
    pub version: u32,
    pub model: Model,
    pub mode: Mode,
    pub g_mode: GTreatment,
    pub max_order: usize,
    pub series: PipelineSeries,
    pub residuals: ConsistencyReport,
    pub checks: Vec<CheckOutcome>,
}

impl PipelineDocument {
    pub fn from_result(r: &PipelineResult) -> Self {
        PipelineDocument {
            version: DOCUMENT_VERSION,
            model: r.spec.model,
            mode: r.spec.mode,
            g_mode: r.spec.g,
            max_order: r.spec.max_order,
            series: PipelineSeries {
                x: r.x.clone(),
                a_h: r.a_h.clone(),
                a_n: r.a_n.clone(),
                g: r.g.clone(),
                s: r.s.clone(),
                h: r.h.clone(),
            },
            residuals: r.residuals.clone(),
            checks: vec![hermiticity_check(r), structural_check(r), dimension_check(r)],
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

/// The Hamiltonian series with its orbital, Zeeman and spin-orbit aggregates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesDocument {
    pub version: u32,
    pub model: Model,
    pub g_mode: GTreatment,
    pub max_order: usize,
    #[serde(rename = "H")]
    pub h: SeriesByOrder,
    pub orbital: RationalSeries,
    pub zeeman: RationalSeries,
    pub spin_orbit: RationalSeries,
}

impl SeriesDocument {
    pub fn from_result(r: &PipelineResult) -> Self {
        let n = r.spec.max_order / 2;
        let h = if r.spec.anomalous() { r.h.kappa_part(0) } else { r.h.clone() };
        // the orbital term x^k sits at order 2k - 2, one step ahead of the spin terms
        let Aggregates { orbital, zeeman, spin_orbit } = aggregate_series(&h, n + 1);
        SeriesDocument {
            version: DOCUMENT_VERSION,
            model: r.spec.model,
            g_mode: r.spec.g,
            max_order: r.spec.max_order,
            h: r.h.clone(),
            orbital,
            zeeman: zeeman.truncate(n),
            spin_orbit: spin_orbit.truncate(n.saturating_sub(1)),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RenderedOrder {
    pub order: usize,
    pub text: String,
    pub latex: String,
}

/// Renders every nonzero entry of a series.
pub fn render_series(s: &SeriesByOrder) -> Vec<RenderedOrder> {
    s.entries
        .iter()
        .map(|(k, e)| RenderedOrder { order: *k, text: e.to_text(), latex: e.to_physical_latex() })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteSummary {
    pub suite: Suite,
    pub passed: bool,
    pub checks: Vec<CheckOutcome>,
}

/// A full derivation together with every verification suite. Determined by
/// the `ModelSpec`, the seed and the engine version.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DerivationReport {
    pub version: u32,
    pub engine_version: String,
    pub spec: ModelSpec,
    pub seed: u64,
    /// Rendered operators by series name.
    pub operators: BTreeMap<String, Vec<RenderedOrder>>,
    pub residuals: ConsistencyReport,
    pub tables: Vec<EntryVerdict>,
    pub suites: Vec<SuiteSummary>,
    pub numeric: Option<NumericReport>,
    pub passed: bool,
}

impl DerivationReport {
    pub fn build(spec: &ModelSpec, seed: u64, fixtures: &FixtureSet) -> Result<Self, EngineError> {
        let run = crate::engine::assemble_hamiltonian(spec)?;
        let pipelines = Pipelines::compute()?;
        let mut operators = BTreeMap::new();
        operators.insert("X".to_string(), render_series(&run.x));
        operators.insert("A_H".to_string(), render_series(&run.a_h));
        operators.insert("A_N".to_string(), render_series(&run.a_n));
        operators.insert("G".to_string(), render_series(&run.g));
        operators.insert("S".to_string(), render_series(&run.s));
        operators.insert("H".to_string(), render_series(&run.h));
        let mut tables = Vec::new();
        let mut suites = Vec::new();
        let mut numeric = None;
        for s in ALL_SUITES {
            let SuiteReport { suite, passed, checks, entries, numeric: n } = run_suite(s, &pipelines, fixtures, seed)?;
            tables.extend(entries);
            if n.is_some() {
                numeric = n;
            }
            suites.push(SuiteSummary { suite, passed, checks });
        }
        let passed = run.residuals.passed && suites.iter().all(|s| s.passed);
        Ok(DerivationReport {
            version: DOCUMENT_VERSION,
            engine_version: ENGINE_VERSION.to_string(),
            spec: *spec,
            seed,
            operators,
            residuals: run.residuals,
            tables,
            suites,
            numeric,
            passed,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }
}



#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::assemble_hamiltonian;

    #[test]
    fn pipeline_document_round_trips() {
        let r = assemble_hamiltonian(&ModelSpec::dirac_pauli(6)).unwrap();
        let doc = PipelineDocument::from_result(&r);
        let back = PipelineDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.series.h, r.h);
    }

    #[test]
    fn series_document_round_trips() {
        let r = assemble_hamiltonian(&ModelSpec::dirac(14)).unwrap();
        let doc = SeriesDocument::from_result(&r);
        assert_eq!(doc.orbital.truncation_order(), 8);
        assert_eq!(doc.zeeman.truncation_order(), 7);
        assert_eq!(SeriesDocument::from_json(&doc.to_json()).unwrap(), doc);
    }
}
