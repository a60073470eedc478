use std::cmp::Ordering;
use std::fmt;
use std::ops::Neg;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{sign_of, Rational};
use crate::error::{Error, Result};

/// `a + b·√d` with `d` a square-free integer. Rational values carry `d = 1, b = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadExt {
    a: Rational,
    b: Rational,
    d: BigInt,
}

/// Splits a positive integer as `s²·f` with `f` square-free.
fn square_free_part(n: &BigInt) -> (BigInt, BigInt) {
    let mut s = BigInt::one();
    let mut f = BigInt::one();
    let mut rest = n.clone();
    let mut p = BigInt::from(2);
    while &p * &p <= rest {
        let mut e = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        if e > 0 {
            s *= num_traits::pow(p.clone(), (e / 2) as usize);
            if e % 2 == 1 {
                f *= &p;
            }
        }
        p += if p == BigInt::from(2) { 1 } else { 2 };
    }
    f *= rest;
    (s, f)
}

impl QuadExt {
    pub fn rational(a: Rational) -> Self {
        QuadExt {
            a,
            b: Rational::zero(),
            d: BigInt::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::rational(Rational::from_integer(n.into()))
    }

    /// `a + b·√d` for any rational `d ≥ 0`, normalized to a square-free radicand.
    pub fn new(a: Rational, b: Rational, d: Rational) -> Result<Self> {
        if d.is_negative() {
            return Err(Error::NegativeRadicand(d));
        }
        if b.is_zero() || d.is_zero() {
            return Ok(Self::rational(a));
        }
        // √(p/q) = √(p·q)/q
        let pq = d.numer() * d.denom();
        let (s, f) = square_free_part(&pq);
        let coeff = b * Rational::new(s, d.denom().clone());
        if f.is_one() {
            Ok(Self::rational(a + coeff))
        } else {
            Ok(QuadExt { a, b: coeff, d: f })
        }
    }

    /// `√r` for `r ≥ 0`.
    pub fn sqrt(r: &Rational) -> Result<Self> {
        Self::new(Rational::zero(), Rational::one(), r.clone())
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }
    pub fn b(&self) -> &Rational {
        &self.b
    }
    pub fn radicand(&self) -> &BigInt {
        &self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.a)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn common_radicand(&self, other: &Self) -> Result<BigInt> {
        match (self.is_rational(), other.is_rational()) {
            (true, _) => Ok(other.d.clone()),
            (_, true) => Ok(self.d.clone()),
            _ if self.d == other.d => Ok(self.d.clone()),
            _ => Err(Error::IncompatibleRadicands(
                self.d.clone(),
                other.d.clone(),
            )),
        }
    }

    fn build(a: Rational, b: Rational, d: BigInt) -> Self {
        if b.is_zero() {
            Self::rational(a)
        } else {
            QuadExt { a, b, d }
        }
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        let d = self.common_radicand(o)?;
        Ok(Self::build(&self.a + &o.a, &self.b + &o.b, d))
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self> {
        self.try_add(&-o)
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        let d = self.common_radicand(o)?;
        let dq = Rational::from_integer(d.clone());
        let a = &self.a * &o.a + &self.b * &o.b * dq;
        let b = &self.a * &o.b + &self.b * &o.a;
        Ok(Self::build(a, b, d))
    }

    pub fn try_div(&self, o: &Self) -> Result<Self> {
        self.try_mul(&o.recip()?)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::build(&self.a * r, &self.b * r, self.d.clone())
    }

    pub fn add_rational(&self, r: &Rational) -> Self {
        Self::build(&self.a + r, self.b.clone(), self.d.clone())
    }

    /// Conjugate `a − b√d`.
    pub fn conj(&self) -> Self {
        Self::build(self.a.clone(), -&self.b, self.d.clone())
    }

    /// Field norm `a² − b²d`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * Rational::from_integer(self.d.clone())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        Ok(self.conj().scale(&(Rational::one() / n)))
    }

    /// Exact sign in {−1, 0, 1}.
    pub fn signum(&self) -> i32 {
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return if sa == 0 { sb } else { sa };
        }
        let a2 = &self.a * &self.a;
        let b2d = &self.b * &self.b * Rational::from_integer(self.d.clone());
        match a2.cmp(&b2d) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    /// Exact comparison with no radicand restriction.
    pub fn cmp_exact(&self, o: &Self) -> Ordering {
        if let Ok(diff) = self.try_sub(o) {
            return diff.signum().cmp(&0);
        }
        // p + (b1√d1 − b2√d2) with distinct square-free d1, d2
        let p = &self.a - &o.a;
        let s_sign = sign_surd_difference(&self.b, &self.d, &o.b, &o.d);
        let p_sign = sign_of(&p);
        let sign = if p_sign == 0 {
            s_sign
        } else if s_sign == 0 || s_sign == p_sign {
            p_sign
        } else {
            // compare p² with s² = b1²d1 + b2²d2 − 2·b1·b2·√(d1·d2)
            let d1 = Rational::from_integer(self.d.clone());
            let d2 = Rational::from_integer(o.d.clone());
            let a = &p * &p - &self.b * &self.b * d1 - &o.b * &o.b * d2;
            let b = Rational::from_integer(2.into()) * &self.b * &o.b;
            let d = Rational::from_integer(&self.d * &o.d);
            let diff = QuadExt::new(a, b, d).expect("positive radicand");
            match diff.signum() {
                1 => p_sign,
                -1 => s_sign,
                _ => 0,
            }
        };
        sign.cmp(&0)
    }

    /// Exact floor.
    pub fn floor(&self) -> BigInt {
        if self.is_rational() {
            return self.a.floor().to_integer();
        }
        let guess = self.to_f64().floor();
        let mut n = if guess.is_finite() && guess.abs() < 1e18 {
            BigInt::from(guess as i64)
        } else {
            (&self.a + &self.b * Rational::from_integer(self.d.sqrt()))
                .floor()
                .to_integer()
        };
        loop {
            let nq = QuadExt::rational(Rational::from_integer(n.clone()));
            if self.cmp_exact(&nq) == Ordering::Less {
                n -= 1;
                continue;
            }
            let n1 = QuadExt::rational(Rational::from_integer(&n + 1));
            if self.cmp_exact(&n1) != Ordering::Less {
                n += 1;
                continue;
            }
            return n;
        }
    }

    pub fn to_f64(&self) -> f64 {
        let d = self.d.to_f64().unwrap_or(f64::NAN);
        super::to_f64(&self.a) + super::to_f64(&self.b) * d.sqrt()
    }
}

fn sign_surd_difference(b1: &Rational, d1: &BigInt, b2: &Rational, d2: &BigInt) -> i32 {
    // sign(b1√d1 − b2√d2)
    let s1 = sign_of(b1);
    let s2 = sign_of(b2);
    if s1 != s2 {
        return (s1 - s2).signum();
    }
    if s1 == 0 {
        return 0;
    }
    let sq1 = b1 * b1 * Rational::from_integer(d1.clone());
    let sq2 = b2 * b2 * Rational::from_integer(d2.clone());
    let c = match sq1.cmp(&sq2) {
        Ordering::Greater => 1,
        Ordering::Less => -1,
        Ordering::Equal => 0,
    };
    c * s1
}

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt::build(-&self.a, -&self.b, self.d.clone())
    }
}

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        -&self
    }
}

impl PartialOrd for QuadExt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadExt {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_exact(other)
    }
}

impl From<Rational> for QuadExt {
    fn from(r: Rational) -> Self {
        QuadExt::rational(r)
    }
}

impl From<&Rational> for QuadExt {
    fn from(r: &Rational) -> Self {
        QuadExt::rational(r.clone())
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.a);
        }
        let surd = if self.b.abs().is_one() {
            format!("sqrt({})", self.d)
        } else {
            format!("{}*sqrt({})", self.b.abs(), self.d)
        };
        let neg = self.b.is_negative();
        if self.a.is_zero() {
            write!(f, "{}{}", if neg { "-" } else { "" }, surd)
        } else {
            write!(f, "{}{}{}", self.a, if neg { "-" } else { "+" }, surd)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{int, rat};

    fn q(a: Rational, b: Rational, d: i64) -> QuadExt {
        QuadExt::new(a, b, int(d)).unwrap()
    }

    #[test]
    fn perfect_squares_collapse() {
        let x = q(int(1), int(3), 4);
        assert!(x.is_rational());
        assert_eq!(x, QuadExt::from_int(7));
        let y = QuadExt::sqrt(&rat(9, 256)).unwrap();
        assert_eq!(y, QuadExt::rational(rat(3, 16)));
    }

    #[test]
    fn radicand_is_square_free() {
        let x = QuadExt::sqrt(&int(12)).unwrap();
        assert_eq!(x.radicand(), &BigInt::from(3));
        assert_eq!(x.b(), &int(2));
        let y = QuadExt::sqrt(&rat(1, 3)).unwrap();
        assert_eq!(y.radicand(), &BigInt::from(3));
        assert_eq!(y.b(), &rat(1, 3));
    }

    #[test]
    fn incompatible_sums_are_rejected() {
        let s2 = QuadExt::sqrt(&int(2)).unwrap();
        let s3 = QuadExt::sqrt(&int(3)).unwrap();
        assert!(matches!(
            s2.try_add(&s3),
            Err(Error::IncompatibleRadicands(_, _))
        ));
        assert!(s2.try_add(&QuadExt::from_int(1)).is_ok());
    }

    #[test]
    fn signs_and_mixed_comparisons() {
        // 1 − √2 < 0, 3 − 2√2 > 0
        assert_eq!(q(int(1), int(-1), 2).signum(), -1);
        assert_eq!(q(int(3), int(-2), 2).signum(), 1);
        let s2 = QuadExt::sqrt(&int(2)).unwrap();
        let s3 = QuadExt::sqrt(&int(3)).unwrap();
        assert!(s2 < s3);
        // √2 + √3 ≈ 3.146 > π-ish rational 22/7 ≈ 3.1428
        let lhs = s2.clone();
        let rhs = q(rat(22, 7), int(-1), 3);
        assert_eq!(lhs.cmp(&rhs), Ordering::Greater);
        // 1 + √2 vs 2·√(3/2) = √6: 2.414 < 2.449
        assert!(q(int(1), int(1), 2) < q(int(0), int(1), 6));
    }

    #[test]
    fn reciprocal_and_floor() {
        let x = q(int(1), int(1), 2);
        let inv = x.recip().unwrap();
        assert_eq!(inv, q(int(-1), int(1), 2));
        assert_eq!(x.try_mul(&inv).unwrap(), QuadExt::from_int(1));
        assert_eq!(x.floor(), BigInt::from(2));
        assert_eq!((-x).floor(), BigInt::from(-3));
        assert_eq!(q(int(0), int(1), 10_001).floor(), BigInt::from(100));
    }

    #[test]
    fn display() {
        assert_eq!(
            q(rat(9, 16), rat(-3, 16), 2).to_string(),
            "9/16-3/16*sqrt(2)"
        );
        assert_eq!(QuadExt::sqrt(&int(3)).unwrap().to_string(), "sqrt(3)");
        assert_eq!(QuadExt::from_int(-2).to_string(), "-2");
    }
}
