//! Published coefficient tables as comparable fixtures.
//!
//! Entries that disagree with the engine because of a suspected misprint are
//! kept verbatim with `expected_mismatch` set, so a comparison still surfaces
//! the discrepancy without failing.

mod tables;

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::algebra::{Mode, OperatorExpr};
use crate::engine::{Model, PipelineResult, SeriesByOrder};
use crate::resummation::{match_series, RationalSeries, TermDiff};

/// Environment variable naming a directory with a `fixtures.json` that
/// replaces the embedded tables.
pub const FIXTURE_DIR_ENV: &str = "FW_FIXTURE_DIR";
pub const FIXTURE_FILE: &str = "fixtures.json";
pub const FIXTURE_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesKind {
    X,
    AH,
    AN,
    G,
    S,
    H,
}

/// Which part of a pipeline series a table describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Part {
    Full,
    /// The `kappa^0` terms.
    KappaFree,
    /// The `kappa^1` terms.
    Anomalous,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Fixture {
    pub order: usize,
    pub expected: OperatorExpr,
    pub expected_mismatch: bool,
    /// Number of monomials a suspected misprint is expected to get wrong.
    pub misprinted_terms: usize,
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FixtureTable {
    pub id: String,
    pub title: String,
    pub provenance: String,
    pub model: Model,
    pub mode: Mode,
    pub series: SeriesKind,
    pub part: Part,
    pub entries: Vec<Fixture>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesTarget {
    Gamma,
    InvGamma,
    SpinOrbitWeight,
    OrbitalAggregate,
    ZeemanAggregate,
    SpinOrbitAggregate,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeriesFixture {
    pub id: String,
    pub provenance: String,
    pub target: SeriesTarget,
    pub coefficients: RationalSeries,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FixtureSet {
    pub version: u32,
    pub tables: Vec<FixtureTable>,
    pub series: Vec<SeriesFixture>,
}

#[derive(Debug, thiserror::Error)]
pub enum FixtureError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("malformed fixture file {path}: {source}")]
    Parse { path: String, source: serde_json::Error },
}

impl FixtureSet {
    pub fn embedded() -> Self {
        FixtureSet { version: FIXTURE_VERSION, tables: tables::embedded_tables(), series: tables::embedded_series() }
    }

    /// The embedded set, or the one in `$FW_FIXTURE_DIR/fixtures.json` when
    /// that variable is set.
    pub fn load() -> Result<Self, FixtureError> {
        match std::env::var_os(FIXTURE_DIR_ENV) {
            Some(dir) => Self::from_file(&Path::new(&dir).join(FIXTURE_FILE)),
            None => Ok(Self::embedded()),
        }
    }

    pub fn from_file(path: &Path) -> Result<Self, FixtureError> {
        let p = path.display().to_string();
        let text = std::fs::read_to_string(path).map_err(|source| FixtureError::Io { path: p.clone(), source })?;
        serde_json::from_str(&text).map_err(|source| FixtureError::Parse { path: p, source })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }

    pub fn table(&self, id: &str) -> Option<&FixtureTable> {
        self.tables.iter().find(|t| t.id == id)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Match,
    Mismatch,
    /// Disagrees, as recorded for a suspected misprint.
    ExpectedMismatch,
    /// Marked as a misprint but agrees with the engine.
    UnexpectedMatch,
}

impl Verdict {
    pub fn ok(self) -> bool {
        matches!(self, Verdict::Match | Verdict::ExpectedMismatch)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryVerdict {
    pub table: String,
    pub order: usize,
    pub provenance: String,
    pub verdict: Verdict,
    pub note: Option<String>,
    /// Engine value minus published value.
    pub diff: Vec<TermDiff>,
}

/// Pipeline series that a table describes.
pub fn select_series(result: &PipelineResult, kind: SeriesKind, part: Part) -> SeriesByOrder {
    let s = match kind {
        SeriesKind::X => &result.x,
        SeriesKind::AH => &result.a_h,
        SeriesKind::AN => &result.a_n,
        SeriesKind::G => &result.g,
        SeriesKind::S => &result.s,
        SeriesKind::H => &result.h,
    };
    match part {
        Part::Full => s.clone(),
        Part::KappaFree => s.kappa_part(0),
        Part::Anomalous => s.kappa_part(1),
    }
}

/// Compares every entry of `table` with the matching pipeline series.
pub fn compare_table(table: &FixtureTable, result: &PipelineResult) -> Vec<EntryVerdict> {
    let computed = select_series(result, table.series, table.part);
    table
        .entries
        .iter()
        .map(|f| {
            let mut lhs = SeriesByOrder::new(table.model, f.order);
            lhs.set(f.order, computed.get(f.order).with_mode(table.mode));
            let mut rhs = SeriesByOrder::new(table.model, f.order);
            rhs.set(f.order, f.expected.clone());
            let d = match_series(&lhs, &rhs);
            let diff: Vec<TermDiff> = d.orders.into_iter().flat_map(|o| o.terms).collect();
            let verdict = match (diff.is_empty(), f.expected_mismatch) {
                (true, false) => Verdict::Match,
                (false, false) => Verdict::Mismatch,
                (false, true) if diff.len() == f.misprinted_terms => Verdict::ExpectedMismatch,
                (false, true) => Verdict::Mismatch,
                (true, true) => Verdict::UnexpectedMatch,
            };
            EntryVerdict {
                table: table.id.clone(),
                order: f.order,
                provenance: format!("{}, order {}", table.provenance, f.order),
                verdict,
                note: f.note.clone(),
                diff,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let set = FixtureSet::embedded();
        let back: FixtureSet = serde_json::from_str(&set.to_json()).unwrap();
        assert_eq!(back, set);
    }

    #[test]
    fn provenance_is_descriptive() {
        for t in FixtureSet::embedded().tables {
            assert!(t.provenance.starts_with("published"), "{}", t.provenance);
        }
    }
}
