use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Truncated power series `c₀ + c₁h + … + c_dim h^dim` with exact coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HSeries {
    coeffs: Vec<Rational>,
}

impl HSeries {
    /// Coefficients beyond `dim` are dropped, missing ones are zero.
    pub fn new(dim: usize, coeffs: impl IntoIterator<Item = Rational>) -> Self {
        let mut c: Vec<Rational> = coeffs.into_iter().take(dim + 1).collect();
        c.resize(dim + 1, Rational::zero());
        HSeries { coeffs: c }
    }

    pub fn from_ints(dim: usize, coeffs: &[i64]) -> Self {
        Self::new(
            dim,
            coeffs.iter().map(|&c| Rational::from_integer(c.into())),
        )
    }

    pub fn zero(dim: usize) -> Self {
        Self::new(dim, [])
    }

    pub fn one(dim: usize) -> Self {
        Self::constant(dim, Rational::one())
    }

    pub fn constant(dim: usize, c: Rational) -> Self {
        Self::new(dim, [c])
    }

    /// `c·h^k`.
    pub fn monomial(dim: usize, k: usize, c: Rational) -> Self {
        let mut s = Self::zero(dim);
        if k <= dim {
            s.coeffs[k] = c;
        }
        s
    }

    /// `e^{t h} = Σ t^k h^k / k!`.
    pub fn exp(t: &Rational, dim: usize) -> Self {
        let mut c = Vec::with_capacity(dim + 1);
        let mut term = Rational::one();
        for k in 0..=dim {
            if k > 0 {
                term = term * t / Rational::from_integer(k.into());
            }
            c.push(term.clone());
        }
        HSeries { coeffs: c }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `h^k`, zero past the truncation.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.dim() == o.dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(self.dim(), o.dim()))
        }
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(HSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&o.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self> {
        self.try_add(&-o)
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let n = self.dim();
        let mut c = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().take(n + 1 - i).enumerate() {
                c[i + j] += a * b;
            }
        }
        Ok(HSeries { coeffs: c })
    }

    pub fn scale(&self, r: &Rational) -> Self {
        HSeries {
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn inv(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let inv0 = Rational::one() / a0;
        let n = self.dim();
        let mut b: Vec<Rational> = Vec::with_capacity(n + 1);
        b.push(inv0.clone());
        for k in 1..=n {
            let mut s = Rational::zero();
            for i in 1..=k {
                s += &self.coeffs[i] * &b[k - i];
            }
            b.push(-(s * &inv0));
        }
        Ok(HSeries { coeffs: b })
    }

    /// Integer power; negative exponents go through `inv`.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one(self.dim());
        for _ in 0..e.unsigned_abs() {
            acc = acc.try_mul(&base)?;
        }
        Ok(acc)
    }

    /// Coefficient of `h^k` multiplied by `(−1)^k`.
    pub fn dual(&self) -> Self {
        HSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// Same series re-truncated (or zero-padded) at `dim`.
    pub fn truncate(&self, dim: usize) -> Self {
        Self::new(dim, self.coeffs.iter().cloned())
    }

    /// Pretty form in the variable `var`, e.g. `8 - 12h + 12h^2 - 9h^3`.
    pub fn display_in(&self, var: &str) -> String {
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if k == 0 || !mag.is_one() {
                let m = mag.to_string();
                if k > 0 && !mag.is_integer() {
                    out.push_str(&format!("({m})"));
                } else {
                    out.push_str(&m);
                }
            }
            out.push_str(&mono);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for HSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("h"))
    }
}

impl Neg for &HSeries {
    type Output = HSeries;
    fn neg(self) -> HSeries {
        HSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for HSeries {
    type Output = HSeries;
    fn neg(self) -> HSeries {
        -&self
    }
}

macro_rules! checked_op {
    ($tr:ident, $m:ident, $f:ident) => {
        impl $tr<&HSeries> for &HSeries {
            type Output = HSeries;
            /// Panics on a truncation mismatch; use the `try_` form to get an error.
            fn $m(self, o: &HSeries) -> HSeries {
                self.$f(o).expect("series truncation mismatch")
            }
        }
        impl $tr<HSeries> for HSeries {
            type Output = HSeries;
            fn $m(self, o: HSeries) -> HSeries {
                (&self).$f(&o).expect("series truncation mismatch")
            }
        }
    };
}

checked_op!(Add, add, try_add);
checked_op!(Sub, sub, try_sub);
checked_op!(Mul, mul, try_mul);

/// Truncated product; errors on a truncation mismatch.
pub fn hs_mul(a: &HSeries, b: &HSeries) -> Result<HSeries> {
    a.try_mul(b)
}
