use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::coefficient::{Coefficient, Symbols};
use super::expr::{Mode, Monomial, OperatorExpr};
use super::tail::Tail;

/// One serialized term; integers are decimal strings so that large
/// numerators survive a round trip.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub tail: Tail,
    pub p2_power: u32,
    pub num: String,
    pub den: String,
    pub i_power: u8,
    pub sym: Symbols,
}

#[derive(Serialize, Deserialize)]
struct ExprJson {
    mode: Mode,
    terms: Vec<TermJson>,
}

impl OperatorExpr {
    pub fn to_term_json(&self) -> Vec<TermJson> {
        let mut out = Vec::new();
        for (k, v) in self.terms() {
            for c in Coefficient::from_scalar(v, k.sym) {
                out.push(TermJson {
                    tail: k.monomial.tail,
                    p2_power: k.monomial.p2,
                    num: c.rational.numer().to_string(),
                    den: c.rational.denom().to_string(),
                    i_power: c.i_power,
                    sym: k.sym,
                });
            }
        }
        out
    }

    pub fn from_term_json(mode: Mode, terms: &[TermJson]) -> Result<Self, String> {
        let mut out = OperatorExpr::zero(mode);
        for t in terms {
            let num = BigInt::from_str(&t.num).map_err(|e| format!("bad numerator {}: {}", t.num, e))?;
            let den = BigInt::from_str(&t.den).map_err(|e| format!("bad denominator {}: {}", t.den, e))?;
            if den.is_zero() {
                return Err("zero denominator".into());
            }
            let c = Coefficient { rational: BigRational::new(num, den), i_power: t.i_power % 4, sym: t.sym };
            out.add_term(Monomial::new(t.p2_power, t.tail), t.sym, c.to_scalar());
        }
        Ok(out)
    }
}

impl Serialize for OperatorExpr {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ExprJson { mode: self.mode(), terms: self.to_term_json() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for OperatorExpr {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = ExprJson::deserialize(d)?;
        OperatorExpr::from_term_json(raw.mode, &raw.terms).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips_complex_coefficients() {
        let a = OperatorExpr::monomial(Mode::Homogeneous, Coefficient::new(3, 7).q(1).hbar(1), 2, Tail::SigmaExPi);
        let b = OperatorExpr::monomial(Mode::Homogeneous, Coefficient::new(-5, 2).times_i().q(1).hbar(1), 2, Tail::SigmaExPi);
        let e = &a + &b;
        let json = serde_json::to_string(&e).unwrap();
        assert!(json.contains("\"i_power\":1"));
        let back: OperatorExpr = serde_json::from_str(&json).unwrap();
        assert_eq!(back, e);
    }

    #[test]
    fn rejects_zero_denominator() {
        let json = r#"{"mode":"homogeneous","terms":[{"tail":"UNIT","p2_power":0,"num":"1","den":"0","i_power":0,
            "sym":{"hbar":0,"q":0,"inv_m":0,"inv_c":0,"kappa":0}}]}"#;
        assert!(serde_json::from_str::<OperatorExpr>(json).is_err());
    }
}
