use serde::{Deserialize, Serialize};

/// The closed set of non-scalar factors that may follow a power of `pi^2`.
///
/// The declaration order is the canonical ordering of tails.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Tail {
    #[serde(rename = "UNIT")]
    Unit,
    #[serde(rename = "EP")]
    EDotPi,
    #[serde(rename = "BP")]
    BDotPi,
    #[serde(rename = "DIVE")]
    DivE,
    #[serde(rename = "SP")]
    SigmaPi,
    #[serde(rename = "SE")]
    SigmaE,
    #[serde(rename = "SB")]
    SigmaB,
    #[serde(rename = "SEXP")]
    SigmaExPi,
    #[serde(rename = "SBXP")]
    SigmaBxPi,
    #[serde(rename = "EP_SP")]
    EDotPiSigmaPi,
    #[serde(rename = "BP_SP")]
    BDotPiSigmaPi,
    /// The electrostatic potential energy `V = q phi`, kept symbolic.
    #[serde(rename = "V")]
    Potential,
}

pub const ALL_TAILS: [Tail; 12] = [
    Tail::Unit,
    Tail::EDotPi,
    Tail::BDotPi,
    Tail::DivE,
    Tail::SigmaPi,
    Tail::SigmaE,
    Tail::SigmaB,
    Tail::SigmaExPi,
    Tail::SigmaBxPi,
    Tail::EDotPiSigmaPi,
    Tail::BDotPiSigmaPi,
    Tail::Potential,
];

/// Tails that appear in homogeneous-field expressions built from products.
pub const HOMOGENEOUS_TAILS: [Tail; 10] = [
    Tail::Unit,
    Tail::EDotPi,
    Tail::BDotPi,
    Tail::SigmaPi,
    Tail::SigmaE,
    Tail::SigmaB,
    Tail::SigmaExPi,
    Tail::SigmaBxPi,
    Tail::EDotPiSigmaPi,
    Tail::BDotPiSigmaPi,
];

impl Tail {
    /// Number of field factors (`E`, `B` or `V`) contained in the tail.
    pub fn field_degree(self) -> u32 {
        match self {
            Tail::Unit | Tail::SigmaPi => 0,
            _ => 1,
        }
    }

    /// Number of `pi` factors contained in the tail.
    pub fn pi_count(self) -> u32 {
        match self {
            Tail::Unit | Tail::DivE | Tail::SigmaE | Tail::SigmaB | Tail::Potential => 0,
            Tail::EDotPi | Tail::BDotPi | Tail::SigmaPi | Tail::SigmaExPi | Tail::SigmaBxPi => 1,
            Tail::EDotPiSigmaPi | Tail::BDotPiSigmaPi => 2,
        }
    }

    pub fn contains_b(self) -> bool {
        matches!(
            self,
            Tail::BDotPi | Tail::SigmaB | Tail::SigmaBxPi | Tail::BDotPiSigmaPi
        )
    }

    pub fn contains_e(self) -> bool {
        matches!(
            self,
            Tail::EDotPi | Tail::DivE | Tail::SigmaE | Tail::SigmaExPi | Tail::EDotPiSigmaPi
        )
    }

    /// Short identifier used in JSON and fixture files.
    pub fn code(self) -> &'static str {
        match self {
            Tail::Unit => "UNIT",
            Tail::EDotPi => "EP",
            Tail::BDotPi => "BP",
            Tail::DivE => "DIVE",
            Tail::SigmaPi => "SP",
            Tail::SigmaE => "SE",
            Tail::SigmaB => "SB",
            Tail::SigmaExPi => "SEXP",
            Tail::SigmaBxPi => "SBXP",
            Tail::EDotPiSigmaPi => "EP_SP",
            Tail::BDotPiSigmaPi => "BP_SP",
            Tail::Potential => "V",
        }
    }

    pub fn from_code(code: &str) -> Option<Tail> {
        ALL_TAILS.iter().copied().find(|t| t.code() == code)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn codes_round_trip() {
        for t in ALL_TAILS {
            assert_eq!(Tail::from_code(t.code()), Some(t));
        }
    }

    #[test]
    fn ordering_follows_declaration() {
        let mut sorted = ALL_TAILS;
        sorted.sort();
        assert_eq!(sorted, ALL_TAILS);
    }
}
