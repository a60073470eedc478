//! Chern characters, Todd classes and Riemann–Roch pairings on projective
//! spaces and cubic hypersurfaces, plus line-bundle cohomology on P^m.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numerics::{int, rat, HSeries, Rational};

/// Ambient variety; the Chow ring is generated by the hyperplane class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variety {
    /// P^m, with `∫ h^m = 1`.
    Projective(usize),
    /// Cubic hypersurface of dimension n, with `∫ H^n = 3`.
    Cubic(usize),
}

/// The cubic fivefold.
pub const Y5: Variety = Variety::Cubic(5);
pub const P3: Variety = Variety::Projective(3);
pub const P2: Variety = Variety::Projective(2);

impl Variety {
    pub fn dim(&self) -> usize {
        match *self {
            Variety::Projective(m) | Variety::Cubic(m) => m,
        }
    }

    pub fn degree(&self) -> i64 {
        match self {
            Variety::Projective(_) => 1,
            Variety::Cubic(_) => 3,
        }
    }

    /// Name of the hyperplane class when printing.
    pub fn var(&self) -> &'static str {
        match self {
            Variety::Projective(_) => "h",
            Variety::Cubic(_) => "H",
        }
    }

    /// Degree of the top-dimensional part.
    pub fn integrate(&self, s: &HSeries) -> Result<Rational> {
        if s.dim() != self.dim() {
            return Err(Error::DimensionMismatch(s.dim(), self.dim()));
        }
        Ok(s.coeff(self.dim()) * int(self.degree()))
    }
}

impl fmt::Display for Variety {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variety::Projective(m) => write!(f, "P{m}"),
            Variety::Cubic(n) => write!(f, "Y{n}"),
        }
    }
}

/// Numerical Chern character on a variety.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChernVector {
    variety: Variety,
    series: HSeries,
}

impl ChernVector {
    pub fn new(variety: Variety, series: HSeries) -> Result<Self> {
        if series.dim() != variety.dim() {
            return Err(Error::DimensionMismatch(series.dim(), variety.dim()));
        }
        Ok(ChernVector { variety, series })
    }

    pub fn from_coeffs(variety: Variety, coeffs: impl IntoIterator<Item = Rational>) -> Self {
        ChernVector {
            variety,
            series: HSeries::new(variety.dim(), coeffs),
        }
    }

    pub fn zero(variety: Variety) -> Self {
        ChernVector {
            variety,
            series: HSeries::zero(variety.dim()),
        }
    }

    pub fn variety(&self) -> Variety {
        self.variety
    }

    pub fn series(&self) -> &HSeries {
        &self.series
    }

    /// `ch_k`.
    pub fn ch(&self, k: usize) -> Rational {
        self.series.coeff(k)
    }

    pub fn is_zero(&self) -> bool {
        self.series.is_zero()
    }

    fn same(&self, o: &Self) -> Result<()> {
        if self.variety == o.variety {
            Ok(())
        } else {
            Err(Error::VarietyMismatch(
                self.variety.to_string(),
                o.variety.to_string(),
            ))
        }
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        self.same(o)?;
        Ok(ChernVector {
            variety: self.variety,
            series: self.series.try_add(&o.series)?,
        })
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self> {
        self.same(o)?;
        Ok(ChernVector {
            variety: self.variety,
            series: self.series.try_sub(&o.series)?,
        })
    }

    /// Product with another series of the same truncation.
    pub fn times(&self, s: &HSeries) -> Result<Self> {
        Ok(ChernVector {
            variety: self.variety,
            series: self.series.try_mul(s)?,
        })
    }

    pub fn scale(&self, r: &Rational) -> Self {
        ChernVector {
            variety: self.variety,
            series: self.series.scale(r),
        }
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&int(n))
    }

    pub fn neg(&self) -> Self {
        self.scale_int(-1)
    }

    /// Twist by `O(k)`.
    pub fn twist(&self, k: i64) -> Self {
        let e = HSeries::exp(&int(k), self.variety.dim());
        ChernVector {
            variety: self.variety,
            series: &self.series * &e,
        }
    }
}

impl fmt::Display for ChernVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.series.display_in(self.variety.var()))
    }
}

/// `ch(O(k)) = e^{kh}`.
pub fn ch_line(k: i64, x: Variety) -> ChernVector {
    ChernVector {
        variety: x,
        series: HSeries::exp(&int(k), x.dim()),
    }
}

/// Character of `⊕ O(k)^{mult}`.
pub fn ch_split(parts: &[(i64, i64)], x: Variety) -> ChernVector {
    parts.iter().fold(ChernVector::zero(x), |acc, &(k, mult)| {
        acc.try_add(&ch_line(k, x).scale_int(mult))
            .expect("same variety")
    })
}

/// Line-bundle splitting `(k, multiplicity)` of the Clifford sheaf `C_j`.
pub fn clifford_splitting(j: i64) -> Vec<(i64, i64)> {
    let l = j.div_euclid(2);
    if j.rem_euclid(2) == 0 {
        vec![(l, 1), (l - 1, 3), (l - 2, 3), (l - 3, 1)]
    } else {
        vec![(l, 3), (l - 1, 2), (l - 2, 3)]
    }
}

/// `ch(C_j)` on P^m.
pub fn ch_clifford(j: i64, m: usize) -> ChernVector {
    ch_split(&clifford_splitting(j), Variety::Projective(m))
}

/// `(1 − e^{−c x})/(c x)` as a series.
fn one_minus_exp_over(c: i64, dim: usize) -> HSeries {
    let mut coeffs = Vec::with_capacity(dim + 1);
    let mut fact = BigInt::one();
    let mut pow = BigInt::one();
    for k in 0..=dim {
        fact *= BigInt::from(k as i64 + 1);
        coeffs.push(Rational::new(pow.clone(), fact.clone()));
        pow *= BigInt::from(-c);
    }
    HSeries::new(dim, coeffs)
}

/// Todd class of `x`.
pub fn todd(x: Variety) -> ChernVector {
    let n = x.dim();
    let g = one_minus_exp_over(1, n);
    let series = match x {
        Variety::Projective(m) => g.pow(-(m as i64 + 1)),
        Variety::Cubic(m) => g
            .pow(-(m as i64 + 2))
            .map(|t| &t * &one_minus_exp_over(3, n)),
    }
    .expect("constant term 1");
    ChernVector { variety: x, series }
}

/// `ch∨`: degree-k part times `(−1)^k`.
pub fn mukai_dual(v: &ChernVector) -> ChernVector {
    ChernVector {
        variety: v.variety,
        series: v.series.dual(),
    }
}

/// `χ(E, F) = ∫ ch(E)∨ · ch(F) · td`.
pub fn euler_pairing(e: &ChernVector, f: &ChernVector) -> Result<Rational> {
    e.same(f)?;
    let s = mukai_dual(e)
        .series
        .try_mul(&f.series)?
        .try_mul(&todd(e.variety).series)?;
    e.variety.integrate(&s)
}

/// Euler pairing of genuine classes; a fractional value is an error.
pub fn euler_pairing_int(e: &ChernVector, f: &ChernVector) -> Result<i64> {
    let chi = euler_pairing(e, f)?;
    crate::numerics::as_i64(&chi).ok_or(Error::NonIntegral(chi))
}

/// `χ(C_i, C_j)` over `C₀` on P^m, i.e. `χ(P^m, C_{j−i})`.
pub fn euler_pairing_c0(i: i64, j: i64, m: usize) -> Rational {
    let x = Variety::Projective(m);
    euler_pairing(&ch_line(0, x), &ch_clifford(j - i, m)).expect("same variety")
}

fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 || n < k {
        return BigInt::zero();
    }
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

/// `(h⁰, …, h^m)` of `⊕ O(k)` on P^m.
pub fn coh_split(ks: &[i64], m: usize) -> Vec<BigInt> {
    let m_i = m as i64;
    let mut h = vec![BigInt::zero(); m + 1];
    for &k in ks {
        if k >= 0 {
            h[0] += binom(k + m_i, m_i);
        } else if k < -m_i {
            h[m] += binom(-k - 1, m_i);
        }
    }
    h
}

/// `ch(F_Π) = κ₁` on the cubic fivefold.
pub fn ch_kappa1() -> ChernVector {
    ChernVector::from_coeffs(
        Y5,
        [
            int(3),
            int(-1),
            rat(-1, 2),
            rat(1, 6),
            rat(1, 8),
            rat(-13, 360),
        ],
    )
}

/// `ch(P_Π) = κ₂` on the cubic fivefold.
pub fn ch_kappa2() -> ChernVector {
    ChernVector::from_coeffs(
        Y5,
        [
            int(0),
            int(1),
            rat(-1, 2),
            rat(-1, 6),
            rat(1, 8),
            rat(13, 360),
        ],
    )
}

/// `ch(O_H) = 1 − e^{−H}`.
pub fn ch_hyperplane_in_y() -> ChernVector {
    ch_line(0, Y5)
        .try_sub(&ch_line(-1, Y5))
        .expect("same variety")
}

/// `ch(j_*O_Π) = ch(O_H) − ch(P_Π)`.
pub fn ch_plane_in_y() -> ChernVector {
    ch_hyperplane_in_y()
        .try_sub(&ch_kappa2())
        .expect("same variety")
}

/// `ch(I_Π) = 1 − ch(O_Π)`.
pub fn ch_plane_ideal() -> ChernVector {
    ch_line(0, Y5)
        .try_sub(&ch_plane_in_y())
        .expect("same variety")
}

/// The integral basis `O_Y, O_H, O_{H²}, O_Π, O_L, O_P` as Chern vectors.
pub fn y_basis() -> [(&'static str, ChernVector); 6] {
    let oh = ch_hyperplane_in_y();
    let oh2 = oh.times(oh.series()).expect("same truncation");
    let line =
        ChernVector::from_coeffs(Y5, [int(0), int(0), int(0), int(0), rat(1, 3), rat(-1, 3)]);
    let point = ChernVector::from_coeffs(Y5, [int(0), int(0), int(0), int(0), int(0), rat(1, 3)]);
    [
        ("O_Y", ch_line(0, Y5)),
        ("O_H", oh),
        ("O_H2", oh2),
        ("O_Pi", ch_plane_in_y()),
        ("O_L", line),
        ("O_P", point),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cv(x: Variety, c: &[Rational]) -> ChernVector {
        ChernVector::from_coeffs(x, c.iter().cloned())
    }

    #[test]
    fn line_characters() {
        assert_eq!(ch_line(0, P3), cv(P3, &[int(1)]));
        assert_eq!(
            ch_line(-1, P3),
            cv(P3, &[int(1), int(-1), rat(1, 2), rat(-1, 6)])
        );
        assert_eq!(
            ch_line(1, Y5),
            cv(
                Y5,
                &[
                    int(1),
                    int(1),
                    rat(1, 2),
                    rat(1, 6),
                    rat(1, 24),
                    rat(1, 120)
                ]
            )
        );
    }

    #[test]
    fn clifford_characters() {
        assert_eq!(
            ch_clifford(0, 3),
            cv(P3, &[int(8), int(-12), int(12), int(-9)])
        );
        assert_eq!(
            ch_clifford(1, 3),
            cv(P3, &[int(8), int(-8), int(7), rat(-13, 3)])
        );
        let cm1 = ch_clifford(-1, 3);
        assert_eq!(
            (cm1.ch(0), cm1.ch(1), cm1.ch(2)),
            (int(8), int(-16), int(19))
        );
        let c3 = ch_clifford(3, 3);
        assert_eq!((c3.ch(0), c3.ch(1), c3.ch(2)), (int(8), int(0), int(3)));
        // C₁ · e^h expanded from O(1)³ ⊕ O² ⊕ O(−1)³
        assert_eq!(
            ch_clifford(1, 3).twist(1),
            ch_split(&[(1, 3), (0, 2), (-1, 3)], P3)
        );
    }

    #[test]
    fn todd_classes() {
        assert_eq!(todd(P3), cv(P3, &[int(1), int(2), rat(11, 6), int(1)]));
        assert_eq!(
            todd(Variety::Projective(1)),
            cv(Variety::Projective(1), &[int(1), int(1)])
        );
        assert_eq!(
            todd(Y5),
            cv(
                Y5,
                &[
                    int(1),
                    int(2),
                    rat(25, 12),
                    rat(3, 2),
                    rat(73, 90),
                    rat(1, 3)
                ]
            )
        );
        assert_eq!(
            euler_pairing(&ch_line(0, P3), &ch_line(0, P3)).unwrap(),
            int(1)
        );
    }

    #[test]
    fn dual_is_involution() {
        let v = ch_clifford(0, 3);
        assert_eq!(mukai_dual(&v), cv(P3, &[int(8), int(12), int(12), int(9)]));
        assert_eq!(mukai_dual(&mukai_dual(&v)), v);
    }

    #[test]
    fn kappa_pairings() {
        let (k1, k2) = (ch_kappa1(), ch_kappa2());
        assert_eq!(euler_pairing(&k1, &k1).unwrap(), int(-1));
        assert_eq!(euler_pairing(&k2, &k2).unwrap(), int(-1));
        assert_eq!(euler_pairing(&k1, &k2).unwrap(), int(-1));
        assert_eq!(euler_pairing(&k2, &k1).unwrap(), int(0));
    }

    #[test]
    fn h0_of_hyperplane_bundle_matches_koszul() {
        let koszul = |k: i64| {
            euler_pairing(
                &ch_line(0, Variety::Projective(6)),
                &ch_line(k, Variety::Projective(6)),
            )
            .unwrap()
        };
        let expected = koszul(1) - koszul(-2);
        assert_eq!(expected, int(7));
        assert_eq!(
            euler_pairing(&ch_line(0, Y5), &ch_line(1, Y5)).unwrap(),
            expected
        );
    }

    #[test]
    fn clifford_pairings() {
        assert_eq!(euler_pairing_c0(0, 1, 3), int(3));
        assert_eq!(euler_pairing_c0(2, -1, 3), int(-3));
        assert_eq!(euler_pairing_c0(0, 2, 2), int(6));
    }

    #[test]
    fn line_bundle_cohomology() {
        let v = |xs: &[i64]| xs.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(coh_split(&[0, -1, -1, -1], 3), v(&[1, 0, 0, 0]));
        assert_eq!(coh_split(&[-4], 3), v(&[0, 0, 0, 1]));
        assert_eq!(coh_split(&[-1, -2, -3], 3), v(&[0, 0, 0, 0]));
        assert_eq!(coh_split(&[2, -6], 2), v(&[6, 0, 10]));
    }

    #[test]
    fn cohomology_oracle_agrees_with_riemann_roch() {
        for m in 1..=4usize {
            for k in -8..=8 {
                let h = coh_split(&[k], m);
                let alt: BigInt = h
                    .iter()
                    .enumerate()
                    .map(|(i, x)| if i % 2 == 0 { x.clone() } else { -x })
                    .sum();
                let x = Variety::Projective(m);
                assert_eq!(
                    Rational::from_integer(alt),
                    euler_pairing(&ch_line(0, x), &ch_line(k, x)).unwrap()
                );
            }
        }
    }

    #[test]
    fn plane_in_cubic() {
        let p = ch_plane_in_y();
        assert_eq!(
            p,
            cv(
                Y5,
                &[int(0), int(0), int(0), rat(1, 3), rat(-1, 6), rat(-1, 36)]
            )
        );
        let o = ch_line(0, Y5);
        assert_eq!(euler_pairing_int(&o, &p).unwrap(), 1);
        // Ext•(O_Π, O_Y) is three-dimensional in degree 3
        assert_eq!(euler_pairing_int(&p, &o).unwrap(), -3);
        // χ(O_Π(k)) = (k+1)(k+2)/2
        for k in -3..=3i64 {
            assert_eq!(
                euler_pairing(&o, &p.twist(k)).unwrap(),
                rat((k + 1) * (k + 2), 2)
            );
        }
    }

    #[test]
    fn y_basis_is_unimodular() {
        let b = y_basis();
        let gram: Vec<Vec<Rational>> = b
            .iter()
            .map(|(_, e)| {
                b.iter()
                    .map(|(_, f)| euler_pairing(e, f).unwrap())
                    .collect()
            })
            .collect();
        let d = crate::numerics::det(&gram);
        assert!(d == int(1) || d == int(-1), "det {d}");
        for row in &gram {
            assert!(row.iter().all(|x| x.is_integer()));
        }
    }

    #[test]
    fn variety_mismatch() {
        assert!(matches!(
            euler_pairing(&ch_line(0, P3), &ch_line(0, Y5)),
            Err(Error::VarietyMismatch(_, _))
        ));
    }
}
