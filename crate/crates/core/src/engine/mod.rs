//! Order-by-order block diagonalization in powers of 1/c.

mod generating;
mod hamiltonian;
mod inhomogeneous;
mod operators;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraError, Coefficient, Mode, OperatorExpr};

pub use generating::{residuals, solve_generating_operator, verify_self_consistency, ConsistencyReport, PotentialKind};
pub use hamiltonian::{
    assemble_hamiltonian, dimension_check, hermiticity_check, parity_odd, structural_check, CheckOutcome, PipelineResult,
};
pub use inhomogeneous::inhomogeneous_low_order;
pub use operators::{energy_operator, exponent_operator, split_series, string_operator, string_series, y_series};

/// Highest order of X the engine will solve for by default.
pub const DEFAULT_ORDER_LIMIT: usize = 15;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Model {
    Dirac,
    DiracPauli,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GTreatment {
    /// `g = 2`, so `kappa = 0`.
    Two,
    /// `kappa = g/2 - 1` kept as a symbol.
    Symbolic,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("order {0} must be even")]
    OddOrder(usize),
    #[error("order {requested} exceeds the limit {limit}")]
    OrderLimit { requested: usize, limit: usize },
    #[error("the inhomogeneous-field dialect only supports orders up to 2, got {0}")]
    InhomogeneousOrder(usize),
    #[error("a symbolic g needs the Dirac-Pauli model")]
    SymbolicGWithDirac,
    #[error("order {0} of the generating operator is missing")]
    MissingOrder(usize),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelSpec {
    pub model: Model,
    pub g: GTreatment,
    pub mode: Mode,
    /// Highest order of the Hamiltonian.
    pub max_order: usize,
    /// Highest order of X the solver may reach.
    pub order_limit: usize,
}

impl ModelSpec {
    pub fn dirac(max_order: usize) -> Self {
        ModelSpec {
            model: Model::Dirac,
            g: GTreatment::Two,
            mode: Mode::Homogeneous,
            max_order,
            order_limit: DEFAULT_ORDER_LIMIT,
        }
    }

    pub fn dirac_pauli(max_order: usize) -> Self {
        ModelSpec { model: Model::DiracPauli, g: GTreatment::Symbolic, ..Self::dirac(max_order) }
    }

    pub fn inhomogeneous(max_order: usize) -> Self {
        ModelSpec { mode: Mode::Inhomogeneous, ..Self::dirac(max_order) }
    }

    /// True when the anomalous-moment interactions are present.
    pub fn anomalous(&self) -> bool {
        self.model == Model::DiracPauli && self.g == GTreatment::Symbolic
    }

    pub fn validate(&self) -> Result<(), EngineError> {
        if self.model == Model::Dirac && self.g == GTreatment::Symbolic {
            return Err(EngineError::SymbolicGWithDirac);
        }
        if self.max_order % 2 == 1 {
            return Err(EngineError::OddOrder(self.max_order));
        }
        if self.mode == Mode::Inhomogeneous && self.max_order > 2 {
            return Err(EngineError::InhomogeneousOrder(self.max_order));
        }
        if self.max_order + 1 > self.order_limit {
            return Err(EngineError::OrderLimit { requested: self.max_order + 1, limit: self.order_limit });
        }
        Ok(())
    }
}

/// `mu'' = kappa q hbar / 2m`, the anomalous moment with the 1/c folded into
/// the order index.
pub fn mu2() -> Coefficient {
    Coefficient::new(1, 2).kappa(1).q(1).hbar(1).inv_m(1)
}

/// Operators indexed by their power of 1/c.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesByOrder {
    pub model: Model,
    pub max_order: usize,
    pub entries: BTreeMap<usize, OperatorExpr>,
}

impl SeriesByOrder {
    pub fn new(model: Model, max_order: usize) -> Self {
        SeriesByOrder { model, max_order, entries: BTreeMap::new() }
    }

    /// Entry at `order`, or the homogeneous zero when absent.
    pub fn get(&self, order: usize) -> OperatorExpr {
        self.entries.get(&order).cloned().unwrap_or_else(|| OperatorExpr::zero(Mode::Homogeneous))
    }

    pub fn entry(&self, order: usize) -> Option<&OperatorExpr> {
        self.entries.get(&order)
    }

    /// Stores an entry; empty expressions are not stored.
    pub fn set(&mut self, order: usize, e: OperatorExpr) {
        if e.is_zero() {
            self.entries.remove(&order);
        } else {
            self.entries.insert(order, e);
        }
    }

    pub fn add_to(&mut self, order: usize, e: &OperatorExpr) {
        let cur = self.get(order);
        let sum = if cur.mode() == e.mode() { &cur + e } else { e.clone() };
        self.set(order, sum);
    }

    pub fn map(&self, f: impl Fn(&OperatorExpr) -> OperatorExpr) -> Self {
        let mut out = SeriesByOrder::new(self.model, self.max_order);
        for (k, v) in &self.entries {
            out.set(*k, f(v));
        }
        out
    }

    /// Terms carrying `kappa^power`.
    pub fn kappa_part(&self, power: i32) -> Self {
        self.map(|e| e.kappa_part(power))
    }

    pub fn truncated(&self, max_order: usize) -> Self {
        let mut out = SeriesByOrder::new(self.model, max_order);
        for (k, v) in self.entries.range(..=max_order) {
            out.set(*k, v.clone());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }
}
