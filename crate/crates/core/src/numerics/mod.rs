//! Exact arithmetic substrate: rationals, single-radicand quadratic surds,
//! truncated power series in the hyperplane class, and exact plane angles.

mod angle;
mod linalg;
mod quad;
mod series;

pub use angle::{angle_cmp, Angle, Phase};
pub use linalg::{det, solve_exact, Mat2};
pub use quad::QuadExt;
pub use series::{hs_mul, HSeries};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

/// Arbitrary-precision reduced fraction.
pub type Rational = num_rational::BigRational;

/// `n/d` as a reduced rational. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p"`, `"p/q"` or a finite decimal such as `"-1.25"`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        return Some(Rational::new(p, q));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.chars().all(|c| c.is_ascii_digit()) {
            return None;
        }
        let neg = whole.starts_with('-');
        let digits = format!("{}{}", whole.trim_start_matches(['-', '+']), frac);
        let n: BigInt = digits.parse().ok()?;
        let den = num_traits::pow(BigInt::from(10), frac.len());
        let r = Rational::new(n, den);
        return Some(if neg { -r } else { r });
    }
    s.parse::<BigInt>().ok().map(Rational::from_integer)
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Returns the value as `i64` when it is an integer that fits.
pub fn as_i64(r: &Rational) -> Option<i64> {
    if r.is_integer() {
        r.numer().to_i64()
    } else {
        None
    }
}

/// Exact `floor` of a rational.
pub fn floor_int(r: &Rational) -> BigInt {
    r.floor().to_integer()
}

pub(crate) fn sign_of(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_decimals() {
        assert_eq!(parse_rational("-5/4"), Some(rat(-5, 4)));
        assert_eq!(parse_rational("-1.25"), Some(rat(-5, 4)));
        assert_eq!(parse_rational("0.0625"), Some(rat(1, 16)));
        assert_eq!(parse_rational("7"), Some(int(7)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }

    #[test]
    fn rationals_are_reduced() {
        let r = rat(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
    }
}
