use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("composition needs an inner series without constant term")]
    InnerConstant,
    #[error("reciprocal of a series with zero constant term")]
    ZeroConstant,
    #[error("square root needs a constant term that is the square of a positive rational")]
    NotASquare,
}

/// Truncated power series with exact rational coefficients; coefficients
/// run from `x^0` through `x^truncation_order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSeries {
    coeffs: Vec<BigRational>,
}

fn r(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl RationalSeries {
    pub fn new(mut coeffs: Vec<BigRational>, truncation_order: usize) -> Self {
        coeffs.resize(truncation_order + 1, BigRational::zero());
        RationalSeries { coeffs }
    }

    pub fn from_ints(pairs: &[(i64, i64)]) -> Self {
        let c: Vec<BigRational> = pairs.iter().map(|(n, d)| r(*n, *d)).collect();
        let n = c.len().saturating_sub(1);
        Self::new(c, n)
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn constant(c: BigRational, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(BigRational::one(), order)
    }

    /// The series `x`.
    pub fn variable(order: usize) -> Self {
        Self::new(vec![BigRational::zero(), BigRational::one()], order)
    }

    pub fn truncation_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs.iter().take(order + 1).cloned().collect(), order)
    }

    fn common(&self, o: &Self) -> usize {
        self.truncation_order().min(o.truncation_order())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.common(o);
        Self::new((0..=n).map(|k| self.coeff(k) + o.coeff(k)).collect(), n)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.common(o);
        Self::new((0..=n).map(|k| self.coeff(k) - o.coeff(k)).collect(), n)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect(), self.truncation_order())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.common(o);
        let mut out = vec![BigRational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().take(n + 1 - i) {
                out[i + j] += a * b;
            }
        }
        Self::new(out, n)
    }

    pub fn reciprocal(&self) -> Result<Self, SeriesError> {
        let a0 = self.coeff(0);
        if a0.is_zero() {
            return Err(SeriesError::ZeroConstant);
        }
        let n = self.truncation_order();
        let mut b = vec![BigRational::zero(); n + 1];
        b[0] = a0.recip();
        for k in 1..=n {
            let mut s = BigRational::zero();
            for j in 1..=k {
                s += self.coeff(j) * &b[k - j];
            }
            b[k] = -s / &a0;
        }
        Ok(Self::new(b, n))
    }

    pub fn sqrt(&self) -> Result<Self, SeriesError> {
        let b0 = rational_sqrt(&self.coeff(0)).ok_or(SeriesError::NotASquare)?;
        let n = self.truncation_order();
        let mut b = vec![BigRational::zero(); n + 1];
        b[0] = b0.clone();
        let two_b0 = &b0 * r(2, 1);
        for k in 1..=n {
            let mut s = self.coeff(k);
            for j in 1..k {
                s -= &b[j] * &b[k - j];
            }
            b[k] = s / &two_b0;
        }
        Ok(Self::new(b, n))
    }

    /// `self(inner(x))`; `inner` must have no constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        if !inner.coeff(0).is_zero() {
            return Err(SeriesError::InnerConstant);
        }
        let n = self.common(inner);
        let mut out = Self::zero(n);
        let mut power = Self::one(n);
        for k in 0..=n {
            out = out.add(&power.scale(&self.coeff(k)));
            power = power.mul(inner);
        }
        Ok(out)
    }

    /// `(1 + x)^alpha` by the binomial series.
    pub fn binomial(alpha: &BigRational, order: usize) -> Self {
        let mut c = vec![BigRational::one()];
        for k in 1..=order {
            let prev = c[k - 1].clone();
            c.push(prev * (alpha - BigRational::from_integer(BigInt::from(k as i64 - 1))) / BigRational::from_integer(BigInt::from(k as i64)));
        }
        Self::new(c, order)
    }
}

fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if !q.is_positive() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

#[derive(Serialize, Deserialize)]
struct CoeffJson {
    num: String,
    den: String,
}

impl Serialize for RationalSeries {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<CoeffJson> =
            self.coeffs.iter().map(|c| CoeffJson { num: c.numer().to_string(), den: c.denom().to_string() }).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalSeries {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<CoeffJson>::deserialize(d)?;
        if v.is_empty() {
            return Err(serde::de::Error::custom("empty series"));
        }
        let mut c = Vec::new();
        for e in v {
            let n: BigInt = e.num.parse().map_err(serde::de::Error::custom)?;
            let dd: BigInt = e.den.parse().map_err(serde::de::Error::custom)?;
            if dd.is_zero() {
                return Err(serde::de::Error::custom("zero denominator"));
            }
            c.push(BigRational::new(n, dd));
        }
        let n = c.len() - 1;
        Ok(RationalSeries::new(c, n))
    }
}

/// The named series behind the Lorentz-factor resummations, in `x = xi^2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaSeries {
    /// `gamma = (1 + x)^(1/2)`
    pub gamma: RationalSeries,
    /// `1/gamma = (1 + x)^(-1/2)`
    pub inv_gamma: RationalSeries,
    /// `1/(1 + gamma)`
    pub inv_one_plus_gamma: RationalSeries,
    /// `1/gamma - 1/(1 + gamma)`, the spin-orbit weight
    pub spin_orbit: RationalSeries,
    /// `(1/gamma) (1/(1 + gamma))^2`
    pub inv_gamma_inv_one_plus_gamma_sq: RationalSeries,
    /// `(1/(gamma (1 + gamma)))^2`
    pub inv_gamma_one_plus_gamma_sq: RationalSeries,
}

pub fn gamma_series_suite(order: usize) -> GammaSeries {
    let one_plus_x = RationalSeries::one(order).add(&RationalSeries::variable(order));
    let gamma = one_plus_x.sqrt().expect("constant term is 1");
    let inv_gamma = gamma.reciprocal().expect("constant term is 1");
    let inv_one_plus_gamma = RationalSeries::one(order).add(&gamma).reciprocal().expect("constant term is 2");
    let spin_orbit = inv_gamma.sub(&inv_one_plus_gamma);
    let a = inv_gamma.mul(&inv_one_plus_gamma).mul(&inv_one_plus_gamma);
    let b = inv_gamma.mul(&inv_one_plus_gamma);
    GammaSeries {
        gamma,
        inv_gamma,
        inv_one_plus_gamma,
        spin_orbit,
        inv_gamma_inv_one_plus_gamma_sq: a,
        inv_gamma_one_plus_gamma_sq: b.mul(&b),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_root_of_one_plus_x() {
        let g = gamma_series_suite(8);
        let want = RationalSeries::from_ints(&[
            (1, 1),
            (1, 2),
            (-1, 8),
            (1, 16),
            (-5, 128),
            (7, 256),
            (-21, 1024),
            (33, 2048),
            (-429, 32768),
        ]);
        assert_eq!(g.gamma, want);
    }

    #[test]
    fn binomial_matches_sqrt() {
        let g = gamma_series_suite(10);
        assert_eq!(RationalSeries::binomial(&r(1, 2), 10), g.gamma);
        assert_eq!(RationalSeries::binomial(&r(-1, 2), 10), g.inv_gamma);
    }

    #[test]
    fn compose_rejects_constant_inner() {
        let s = RationalSeries::one(3);
        assert_eq!(s.compose(&s), Err(SeriesError::InnerConstant));
    }

    #[test]
    fn irrational_root_rejected() {
        assert_eq!(RationalSeries::constant(r(2, 1), 3).sqrt(), Err(SeriesError::NotASquare));
    }

    #[test]
    fn json_round_trip() {
        let g = gamma_series_suite(5).spin_orbit;
        let s = serde_json::to_string(&g).unwrap();
        assert!(s.starts_with("[{\"num\":\"1\",\"den\":\"2\"}"));
        assert_eq!(serde_json::from_str::<RationalSeries>(&s).unwrap(), g);
    }
}
