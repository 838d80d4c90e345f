use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

/// Exact complex-rational value stored against each term.
pub type Scalar = Complex<BigRational>;

pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn scalar(num: i64, den: i64) -> Scalar {
    Complex::new(rational(num, den), BigRational::zero())
}

pub fn scalar_i(num: i64, den: i64) -> Scalar {
    Complex::new(BigRational::zero(), rational(num, den))
}

pub fn scalar_from_rational(r: BigRational) -> Scalar {
    Complex::new(r, BigRational::zero())
}

/// Multiplies by `i^power`.
pub fn times_i_power(s: &Scalar, power: u8) -> Scalar {
    match power % 4 {
        0 => s.clone(),
        1 => Complex::new(-s.im.clone(), s.re.clone()),
        2 => Complex::new(-s.re.clone(), -s.im.clone()),
        _ => Complex::new(s.im.clone(), -s.re.clone()),
    }
}

/// Integer exponents of the physical symbols carried by a term.
///
/// `inv_m` and `inv_c` count powers of `1/m` and `1/c`; `kappa` is `g/2 - 1`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Symbols {
    pub hbar: i32,
    pub q: i32,
    pub inv_m: i32,
    pub inv_c: i32,
    pub kappa: i32,
}

impl Symbols {
    pub const NONE: Symbols = Symbols { hbar: 0, q: 0, inv_m: 0, inv_c: 0, kappa: 0 };

    pub fn new(hbar: i32, q: i32, inv_m: i32, inv_c: i32, kappa: i32) -> Self {
        Symbols { hbar, q, inv_m, inv_c, kappa }
    }

    /// `q hbar`, the prefactor of every commutator with the potential.
    pub fn q_hbar() -> Self {
        Symbols::new(1, 1, 0, 0, 0)
    }

    /// `q hbar / c`, the prefactor produced by `[pi_i, pi_j]`.
    pub fn beta() -> Self {
        Symbols::new(1, 1, 0, 1, 0)
    }

    pub fn inv_m(k: i32) -> Self {
        Symbols::new(0, 0, k, 0, 0)
    }

    pub fn combine(self, other: Symbols) -> Symbols {
        Symbols {
            hbar: self.hbar + other.hbar,
            q: self.q + other.q,
            inv_m: self.inv_m + other.inv_m,
            inv_c: self.inv_c + other.inv_c,
            kappa: self.kappa + other.kappa,
        }
    }

    pub fn scaled(self, k: i32) -> Symbols {
        Symbols {
            hbar: self.hbar * k,
            q: self.q * k,
            inv_m: self.inv_m * k,
            inv_c: self.inv_c * k,
            kappa: self.kappa * k,
        }
    }

    pub fn is_none(&self) -> bool {
        *self == Symbols::NONE
    }
}

/// A single exact prefactor: `rational * i^i_power * symbols`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coefficient {
    pub rational: BigRational,
    pub i_power: u8,
    pub sym: Symbols,
}

impl Coefficient {
    pub fn new(num: i64, den: i64) -> Self {
        Coefficient { rational: rational(num, den), i_power: 0, sym: Symbols::NONE }
    }

    pub fn from_rational(rational: BigRational) -> Self {
        Coefficient { rational, i_power: 0, sym: Symbols::NONE }
    }

    pub fn one() -> Self {
        Coefficient::new(1, 1)
    }

    pub fn times_i(mut self) -> Self {
        self.i_power = (self.i_power + 1) % 4;
        self
    }

    pub fn with(mut self, sym: Symbols) -> Self {
        self.sym = self.sym.combine(sym);
        self
    }

    pub fn hbar(self, k: i32) -> Self {
        self.with(Symbols::new(k, 0, 0, 0, 0))
    }

    pub fn q(self, k: i32) -> Self {
        self.with(Symbols::new(0, k, 0, 0, 0))
    }

    pub fn inv_m(self, k: i32) -> Self {
        self.with(Symbols::new(0, 0, k, 0, 0))
    }

    pub fn inv_c(self, k: i32) -> Self {
        self.with(Symbols::new(0, 0, 0, k, 0))
    }

    pub fn kappa(self, k: i32) -> Self {
        self.with(Symbols::new(0, 0, 0, 0, k))
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero()
    }

    pub fn to_scalar(&self) -> Scalar {
        times_i_power(&scalar_from_rational(self.rational.clone()), self.i_power)
    }

    /// Splits a stored scalar into at most two single-phase coefficients
    /// (real part with `i^0`, imaginary part with `i^1`).
    pub fn from_scalar(value: &Scalar, sym: Symbols) -> Vec<Coefficient> {
        let mut out = Vec::new();
        if !value.re.is_zero() {
            out.push(Coefficient { rational: value.re.clone(), i_power: 0, sym });
        }
        if !value.im.is_zero() {
            out.push(Coefficient { rational: value.im.clone(), i_power: 1, sym });
        }
        out
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let phase = match self.i_power % 4 {
            0 => "",
            1 => "i ",
            2 => "-",
            _ => "-i ",
        };
        write!(f, "{}{}", phase, self.rational)?;
        if !self.sym.is_none() {
            write!(f, " {:?}", self.sym)?;
        }
        Ok(())
    }
}
