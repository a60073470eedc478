//! Tilt-stability layer on (P³, C₀): slopes, twisted and modified characters,
//! the discriminant, both tilt charges, the `(ξ, η)` chart, exact phases,
//! region V and the phase bounds along lines through the parabola `η = ξ²/2`.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::chow::{ChernVector, Variety, P3};
use crate::error::{Error, Result};
use crate::numerics::{int, rat, Angle, HSeries, Phase, QuadExt, Rational};

/// Parameter `σ_{α,β}` carried through `α²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TiltParam {
    pub alpha_sq: Rational,
    pub beta: Rational,
}

impl TiltParam {
    pub fn new(alpha_sq: Rational, beta: Rational) -> Result<Self> {
        if !alpha_sq.is_positive() {
            return Err(Error::InvalidParameter(format!(
                "alpha^2 = {alpha_sq} must be positive"
            )));
        }
        Ok(TiltParam { alpha_sq, beta })
    }
}

/// Point of the `(ξ, η)` plane.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct XiEta {
    pub xi: Rational,
    pub eta: Rational,
}

impl XiEta {
    pub fn new(xi: Rational, eta: Rational) -> Self {
        XiEta { xi, eta }
    }

    /// Strictly above the parabola `Γ: η = ξ²/2`.
    pub fn above_gamma(&self) -> bool {
        self.eta > &self.xi * &self.xi / int(2)
    }

    fn checked(&self) -> Result<()> {
        if self.above_gamma() {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!(
                "({}, {}) is not above the parabola",
                self.xi, self.eta
            )))
        }
    }
}

impl fmt::Display for XiEta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.xi, self.eta)
    }
}

/// Slope value with `+∞` for vanishing denominators.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Slope {
    Finite(Rational),
    PlusInfinity,
}

impl Slope {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Slope::Finite(r) => Some(r),
            Slope::PlusInfinity => None,
        }
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slope::Finite(r) => write!(f, "{r}"),
            Slope::PlusInfinity => write!(f, "+inf"),
        }
    }
}

fn nonzero_low(v: &ChernVector) -> Result<()> {
    if (0..3).all(|k| v.ch(k).is_zero()) {
        Err(Error::InvalidParameter("zero character".into()))
    } else {
        Ok(())
    }
}

/// `μ_h = ch₁/ch₀` on `P^m`.
pub fn mu_slope(v: &ChernVector, m: usize) -> Result<Slope> {
    if v.variety() != Variety::Projective(m) {
        return Err(Error::VarietyMismatch(
            v.variety().to_string(),
            Variety::Projective(m).to_string(),
        ));
    }
    if v.ch(0).is_zero() && v.ch(1).is_zero() {
        return Err(Error::InvalidParameter("zero character".into()));
    }
    if v.ch(0).is_zero() {
        return Ok(Slope::PlusInfinity);
    }
    Ok(Slope::Finite(v.ch(1) / v.ch(0)))
}

/// `ch^β = e^{−βh}·ch`.
pub fn ch_beta(v: &ChernVector, beta: &Rational) -> ChernVector {
    let dim = v.series().dim();
    v.times(&HSeries::exp(&-beta, dim))
        .expect("matching dimension")
}

/// `ch_{C₀} = ch·(1 − 3/8 h²)`.
pub fn ch_mod(v: &ChernVector) -> ChernVector {
    let dim = v.series().dim();
    let corr = HSeries::one(dim)
        .try_sub(&HSeries::monomial(dim, 2, rat(3, 8)))
        .expect("matching dimension");
    v.times(&corr).expect("matching dimension")
}

/// `(ch₀, ch₁, ch₂)` of the modified character twisted by `β`.
pub fn tilt_triple(v: &ChernVector, beta: &Rational) -> [Rational; 3] {
    let w = ch_mod(&ch_beta(v, beta));
    [w.ch(0), w.ch(1), w.ch(2)]
}

/// The reference twist `β = −5/4` of the `(ξ, η)` chart.
pub fn beta0() -> Rational {
    rat(-5, 4)
}

/// P³ character whose modified `(−5/4)`-twisted triple is `(c₀, c₁, c₂)` and `ch₃ = 0`.
pub fn from_tilt_triple(c: &[Rational; 3]) -> ChernVector {
    let w = ChernVector::from_coeffs(P3, [c[0].clone(), c[1].clone(), c[2].clone(), int(0)]);
    let unmod = HSeries::one(3)
        .try_add(&HSeries::monomial(3, 2, rat(3, 8)))
        .expect("dim 3");
    let v = w.times(&unmod).expect("dim 3");
    let v = ch_beta(&v, &-beta0());
    ChernVector::from_coeffs(P3, [v.ch(0), v.ch(1), v.ch(2), int(0)])
}

/// `Δ = c₁² − 2c₀c₂` of a triple.
pub fn discriminant(t: &[Rational; 3]) -> Rational {
    &t[1] * &t[1] - int(2) * &t[0] * &t[2]
}

/// `Δ_{C₀} = ch₁² − 2ch₀ch₂ + ¾ch₀²`.
pub fn delta_c0(v: &ChernVector) -> Rational {
    let m = ch_mod(v);
    discriminant(&[m.ch(0), m.ch(1), m.ch(2)])
}

/// Unmodified `ch₁² − 2ch₀ch₂`.
pub fn delta_plain(v: &ChernVector) -> Rational {
    discriminant(&[v.ch(0), v.ch(1), v.ch(2)])
}

/// `Z_{α,β} = −(ch₂^β − ½α²ch₀^β) + i·ch₁^β` on modified characters.
pub fn z_tilt(v: &ChernVector, p: &TiltParam) -> (Rational, Rational) {
    let [c0, c1, c2] = tilt_triple(v, &p.beta);
    (-(c2 - &p.alpha_sq * c0 / int(2)), c1)
}

/// `ν_{α,β} = −Re Z / Im Z`.
pub fn nu(v: &ChernVector, p: &TiltParam) -> Result<Slope> {
    nonzero_low(v)?;
    let (re, im) = z_tilt(v, p);
    Ok(if im.is_zero() {
        Slope::PlusInfinity
    } else {
        Slope::Finite(-re / im)
    })
}

/// Closed form of `ν_{α,β}(C_j)`.
pub fn nu_clifford(j: i64, p: &TiltParam) -> Slope {
    let t = int(2) * &p.beta - int(j) + int(3);
    let den = int(4 * j) - int(8) * &p.beta - int(12);
    if den.is_zero() {
        Slope::PlusInfinity
    } else {
        Slope::Finite((&t * &t - int(4) * &p.alpha_sq) / den)
    }
}

/// Second tilt `Z⁰ = −i·Z_{α,β}`.
pub fn z0(v: &ChernVector, p: &TiltParam) -> (Rational, Rational) {
    let (re, im) = z_tilt(v, p);
    (im, -re)
}

/// Predicate `Z_{α,β}(v) ∈ H ∪ R_{≤0}`.
pub fn in_tilt_heart_numeric(v: &ChernVector, p: &TiltParam) -> bool {
    let (re, im) = z_tilt(v, p);
    im.is_positive() || (im.is_zero() && !re.is_positive())
}

/// `ξ = β + 5/4`, `η = ½(α² + ξ²)`.
pub fn to_xieta(p: &TiltParam) -> XiEta {
    let xi = &p.beta - beta0();
    let eta = (&p.alpha_sq + &xi * &xi) / int(2);
    XiEta { xi, eta }
}

pub fn from_xieta(q: &XiEta) -> Result<TiltParam> {
    q.checked()?;
    TiltParam::new(int(2) * &q.eta - &q.xi * &q.xi, &q.xi + beta0())
}

/// Image of a character in the `(ξ, η)` plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VPoint {
    Finite {
        xi: Rational,
        eta: Rational,
    },
    /// Rank-0 class: direction `ch₂/ch₁`, `None` when vertical.
    Infinite {
        slope: Option<Rational>,
    },
}

pub fn v_point(v: &ChernVector) -> Result<VPoint> {
    nonzero_low(v)?;
    let [c0, c1, c2] = tilt_triple(v, &beta0());
    if c0.is_zero() {
        let slope = if c1.is_zero() { None } else { Some(c2 / c1) };
        return Ok(VPoint::Infinite { slope });
    }
    Ok(VPoint::Finite {
        xi: &c1 / &c0,
        eta: c2 / c0,
    })
}

/// `ν̃_{ξ,η} = (ch₂ − η ch₀)/(ch₁ − ξ ch₀)` at `β = −5/4`.
pub fn nu_tilde(q: &XiEta, v: &ChernVector) -> Result<Slope> {
    nonzero_low(v)?;
    let (dx, dy) = direction(q, v);
    Ok(if dx.is_zero() {
        Slope::PlusInfinity
    } else {
        Slope::Finite(dy / dx)
    })
}

fn direction(q: &XiEta, v: &ChernVector) -> (Rational, Rational) {
    let [c0, c1, c2] = tilt_triple(v, &beta0());
    (c1 - &q.xi * &c0, c2 - &q.eta * &c0)
}

/// Ray from `P` towards `v(E)`, counted counterclockwise from the downward ray.
pub fn phase_angle(p: &XiEta, v: &ChernVector) -> Result<Angle> {
    p.checked()?;
    nonzero_low(v)?;
    let (dx, dy) = direction(p, v);
    Angle::from_rational(dx, dy)
        .map_err(|_| Error::PhaseUndefined(format!("v(E) coincides with {p}")))
}

/// Phase in `(0, 2)` of `E` for `σ̃_P`; undefined when `Z̃` is a positive real.
pub fn heart_phase(p: &XiEta, v: &ChernVector) -> Result<Phase> {
    let a = phase_angle(p, v)?;
    if a.is_zero_angle() {
        return Err(Error::PhaseUndefined(
            "charge is a positive real number".into(),
        ));
    }
    Ok(Phase::from_angle(&a))
}

/// Exact point of the plane, coordinates in one quadratic field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurdPoint {
    pub xi: QuadExt,
    pub eta: QuadExt,
}

impl fmt::Display for SurdPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.xi, self.eta)
    }
}

/// Intersections `(E₁, E₂)` of the line through `P` and `v(E)` with `Γ`,
/// `ξ(E₁) ≥ ξ(E₂)`; a vertical line meets `Γ` once and returns that point twice.
pub fn gamma_intersect(p: &XiEta, v: &ChernVector) -> Result<(SurdPoint, SurdPoint)> {
    p.checked()?;
    nonzero_low(v)?;
    let (dx, dy) = direction(p, v);
    if dx.is_zero() {
        if dy.is_zero() {
            return Err(Error::PhaseUndefined(format!("v(E) coincides with {p}")));
        }
        let pt = SurdPoint {
            xi: p.xi.clone().into(),
            eta: (&p.xi * &p.xi / int(2)).into(),
        };
        return Ok((pt.clone(), pt));
    }
    let m = dy / dx;
    gamma_line_points(&m, p)
}

/// `Γ ∩ {η − η_P = m(ξ − ξ_P)}`: `ξ = m ± √(m² − 2mξ_P + 2η_P)`.
pub fn gamma_line_points(m: &Rational, p: &XiEta) -> Result<(SurdPoint, SurdPoint)> {
    let disc = m * m - int(2) * m * &p.xi + int(2) * &p.eta;
    let root = QuadExt::sqrt(&disc)?;
    let mq = QuadExt::rational(m.clone());
    let on_gamma = |xi: QuadExt| -> Result<SurdPoint> {
        let eta = xi.try_mul(&xi)?.scale(&rat(1, 2));
        Ok(SurdPoint { xi, eta })
    };
    Ok((on_gamma(mq.try_add(&root)?)?, on_gamma(mq.try_sub(&root)?)?))
}

/// `φ_Q` of a point seen from `Q`, normalized to `(−1, 1]`.
pub fn point_phase(q: &XiEta, e: &SurdPoint) -> Result<Phase> {
    let a = Angle::new(e.xi.add_rational(&-&q.xi), e.eta.add_rational(&-&q.eta))?;
    Ok(Phase::from_angle_signed(&a))
}

/// Closed phase interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhaseInterval {
    pub lo: Phase,
    pub hi: Phase,
}

impl PhaseInterval {
    pub fn shift(&self, k: i64) -> Self {
        PhaseInterval {
            lo: self.lo.add_int(k),
            hi: self.hi.add_int(k),
        }
    }

    /// `(a, b) ⊃ [lo, hi]`.
    pub fn inside_open(&self, a: &Phase, b: &Phase) -> bool {
        *a < self.lo && self.hi < *b
    }
}

impl fmt::Display for PhaseInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Where the `σ̃_P`-stable object sits relative to `Coh^P`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Placement {
    Heart,
    ShiftedHeart,
}

/// Admissible `σ̃_Q` phases of HN factors of a `σ̃_P`-stable object of class `v`.
pub fn lz19_bounds(
    p: &XiEta,
    q: &XiEta,
    v: &ChernVector,
    placement: Placement,
) -> Result<PhaseInterval> {
    q.checked()?;
    let (e1, e2) = gamma_intersect(p, v)?;
    let base = PhaseInterval {
        lo: point_phase(q, &e1)?,
        hi: point_phase(q, &e2)?.add_int(1),
    };
    if base.hi < base.lo {
        return Err(Error::Internal(format!("empty phase interval {base}")));
    }
    Ok(match placement {
        Placement::Heart => base,
        Placement::ShiftedHeart => base.shift(-1),
    })
}

/// `ch(E ⊗ C₁) = e^{h/2}·ch(E)`.
pub fn tensor_c1_ch(v: &ChernVector) -> ChernVector {
    ch_beta(v, &rat(-1, 2))
}

/// Region V: `−3/2 < β < −1`, `0 < α² < min(β + 3/2, −1 − β)²`.
pub fn in_region_v(p: &TiltParam) -> bool {
    if !(p.beta > rat(-3, 2) && p.beta < int(-1)) {
        return false;
    }
    let a = &p.beta + rat(3, 2);
    let b = -&p.beta - Rational::one();
    let m = if a < b { a } else { b };
    p.alpha_sq.is_positive() && p.alpha_sq < &m * &m
}

/// `v(E)` on the ray `ℓ₀ = {ξ ≤ −1/4, η = 1/32}`.
pub fn on_ell0(v: &ChernVector) -> bool {
    match v_point(v) {
        Ok(VPoint::Finite { xi, eta }) => eta == rat(1, 32) && xi <= rat(-1, 4),
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chow::ch_clifford;
    use crate::knum::kappa_bar;

    fn c(j: i64) -> ChernVector {
        ch_clifford(j, 3)
    }

    fn tp(a: Rational, b: Rational) -> TiltParam {
        TiltParam::new(a, b).unwrap()
    }

    fn torsion() -> ChernVector {
        from_tilt_triple(&[int(0), int(4), int(0)])
    }

    #[test]
    fn slopes() {
        for j in -1..=2 {
            assert_eq!(mu_slope(&c(j), 3).unwrap(), Slope::Finite(rat(j - 3, 2)));
        }
        assert_eq!(mu_slope(&torsion(), 3).unwrap(), Slope::PlusInfinity);
        assert_eq!(
            mu_slope(&c(0).try_add(&c(1)).unwrap(), 3).unwrap(),
            Slope::Finite(rat(-5, 4))
        );
    }

    #[test]
    fn twisted_and_modified() {
        assert_eq!(tilt_triple(&c(1), &rat(-5, 4)), [int(8), int(2), rat(1, 4)]);
        assert_eq!(ch_beta(&c(2), &int(0)), c(2));
        assert_eq!(ch_mod(&c(0)).ch(2), int(9));
        assert_eq!(ch_mod(&c(1)).ch(2), int(4));
        let one = ChernVector::from_coeffs(P3, [int(1), int(0), int(0), int(0)]);
        assert_eq!(
            ch_mod(&one),
            ChernVector::from_coeffs(P3, [int(1), int(0), rat(-3, 8), int(0)])
        );
        assert_eq!(tilt_triple(&torsion(), &beta0()), [int(0), int(4), int(0)]);
        assert_eq!(
            tilt_triple(&kappa_bar(2).ch().neg(), &beta0()),
            [int(0), int(4), int(0)]
        );
    }

    #[test]
    fn discriminants() {
        for k in -10..=10 {
            assert!(delta_c0(&c(k)).is_zero());
        }
        assert_eq!(delta_plain(&c(0)), int(-48));
        assert_eq!(delta_plain(&c(1)), int(-48));
        assert!(discriminant(&[int(8), int(2), rat(1, 4)]).is_zero());
    }

    #[test]
    fn charges() {
        let p = tp(rat(1, 64), rat(-5, 4));
        assert_eq!(z_tilt(&c(1), &p), (rat(-3, 16), int(2)));
        assert_eq!(z_tilt(&c(0), &p), (rat(-3, 16), int(-2)));
        assert_eq!(z_tilt(&torsion(), &p), (int(0), int(4)));
        assert_eq!(
            nu(&torsion(), &tp(rat(1, 7), rat(-5, 4))).unwrap(),
            Slope::Finite(int(0))
        );
    }

    #[test]
    fn second_tilt_basis() {
        let (a, b) = (rat(1, 50), rat(-6, 5));
        let p = tp(a.clone(), b.clone());
        let z1 = z0(&kappa_bar(1).ch(), &p);
        let z2 = z0(&kappa_bar(2).ch(), &p);
        let four = int(4);
        assert_eq!(
            z1,
            (
                int(8) * &b + int(8),
                &four * &a - &four * &b * &b - int(8) * &b - int(2)
            )
        );
        assert_eq!(z2, (int(-4), &four * &b + int(5)));
        let det = &z1.0 * &z2.1 - &z1.1 * &z2.0;
        let shifted = &b + rat(5, 4);
        assert_eq!(det, int(16) * &a + int(16) * &shifted * &shifted + int(7));
    }

    #[test]
    fn chart() {
        let q = to_xieta(&tp(rat(1, 16), rat(-5, 4)));
        assert_eq!(q, XiEta::new(int(0), rat(1, 32)));
        assert_eq!(from_xieta(&q).unwrap(), tp(rat(1, 16), rat(-5, 4)));
        assert!(from_xieta(&XiEta::new(int(1), rat(1, 2))).is_err());
        assert_eq!(to_xieta(&tp(rat(3, 7), rat(-5, 4))).xi, int(0));
    }

    #[test]
    fn points() {
        assert_eq!(
            v_point(&c(0)).unwrap(),
            VPoint::Finite {
                xi: rat(-1, 4),
                eta: rat(1, 32)
            }
        );
        assert_eq!(
            v_point(&c(1)).unwrap(),
            VPoint::Finite {
                xi: rat(1, 4),
                eta: rat(1, 32)
            }
        );
        assert_eq!(
            v_point(&torsion()).unwrap(),
            VPoint::Infinite {
                slope: Some(int(0))
            }
        );
        assert!(v_point(&ChernVector::zero(P3)).is_err());
    }

    #[test]
    fn phases() {
        let eps = rat(1, 1000);
        let p = XiEta::new(int(0), rat(1, 32) - &eps);
        let ph = Phase::from_angle(&phase_angle(&p, &c(1)).unwrap());
        assert!(ph > Phase::half_integer(1) && ph < Phase::integer(1));
        let below = from_tilt_triple(&[int(1), int(0), int(-1)]);
        assert!(phase_angle(&XiEta::new(int(0), int(1)), &below)
            .unwrap()
            .is_zero_angle());
        assert!(heart_phase(&XiEta::new(int(0), int(1)), &below).is_err());
        let on_p = from_tilt_triple(&[int(2), int(0), int(2)]);
        assert!(phase_angle(&XiEta::new(int(0), int(1)), &on_p).is_err());
    }

    #[test]
    fn region_v() {
        assert!(in_region_v(&tp(rat(1, 100), rat(-5, 4))));
        assert!(!in_region_v(&tp(rat(1, 16), rat(-5, 4))));
        assert!(!in_region_v(&tp(rat(1, 100), int(-1))));
    }

    #[test]
    fn ell0() {
        assert!(on_ell0(&c(0)));
        assert!(!on_ell0(&c(1)));
        assert!(!on_ell0(&torsion()));
    }

    #[test]
    fn tensor_c1() {
        assert_eq!(tensor_c1_ch(&c(0)), c(1));
        let (VPoint::Finite { xi, eta }, VPoint::Finite { xi: x2, eta: e2 }) = (
            v_point(&c(-1)).unwrap(),
            v_point(&tensor_c1_ch(&c(-1))).unwrap(),
        ) else {
            panic!("finite points expected");
        };
        assert_eq!(x2, &xi + rat(1, 2));
        assert_eq!(e2, &eta + &xi / int(2) + rat(1, 8));
    }

    #[test]
    fn gamma_points_lie_on_parabola() {
        let p = XiEta::new(rat(1, 2), rat(1, 64) + rat(1, 8));
        let (e1, e2) = gamma_intersect(&p, &c(1)).unwrap();
        for e in [&e1, &e2] {
            assert_eq!(e.xi.try_mul(&e.xi).unwrap().scale(&rat(1, 2)), e.eta);
        }
        assert!(e1.xi >= e2.xi);
        let vert = gamma_intersect(
            &XiEta::new(int(0), int(1)),
            &from_tilt_triple(&[int(1), int(0), int(3)]),
        )
        .unwrap();
        assert_eq!(
            vert.0,
            SurdPoint {
                xi: QuadExt::from_int(0),
                eta: QuadExt::from_int(0)
            }
        );
    }

    #[test]
    fn nu_tilde_shifts_by_xi() {
        let p = tp(int(1), rat(-3, 4));
        let q = to_xieta(&p);
        assert_eq!(nu(&c(1), &p).unwrap(), Slope::Finite(rat(15, 8)));
        assert_eq!(nu_tilde(&q, &c(1)).unwrap(), Slope::Finite(rat(19, 8)));
    }

    #[test]
    fn clifford_tilt_closed_form() {
        for j in -3..=4 {
            for (a, b) in [
                (rat(1, 100), rat(-5, 4)),
                (rat(1, 3), rat(-11, 10)),
                (int(2), rat(1, 7)),
            ] {
                let p = tp(a, b);
                assert_eq!(nu(&c(j), &p).unwrap(), nu_clifford(j, &p));
            }
        }
    }

    #[test]
    fn b_case_bounds() {
        let eta_q = rat(1, 64);
        let q = XiEta::new(int(0), eta_q.clone());
        let p = XiEta::new(rat(1, 2), &eta_q + rat(1, 8));
        let nu0 = nu_tilde(&q, &c(1)).unwrap().finite().unwrap().clone();
        assert_eq!(nu0, rat(1, 16));
        let b1 = tensor_c1_ch(&c(1));
        assert_eq!(nu_tilde(&p, &b1).unwrap(), Slope::Finite(&nu0 + rat(1, 2)));
        let (e1, e2) = gamma_intersect(&p, &b1).unwrap();
        let root = QuadExt::sqrt(&(&nu0 * &nu0 + int(2) * &eta_q)).unwrap();
        let centre = QuadExt::rational(&nu0 + rat(1, 2));
        assert_eq!(e1.xi, centre.try_add(&root).unwrap());
        assert_eq!(e2.xi, centre.try_sub(&root).unwrap());
        let iv = lz19_bounds(&p, &q, &b1, Placement::Heart).unwrap();
        assert!(iv.inside_open(&Phase::half_integer(1), &Phase::integer(2)));
        let sh = lz19_bounds(&p, &q, &b1, Placement::ShiftedHeart).unwrap();
        assert_eq!(sh.shift(1), iv);
    }

    #[test]
    fn a_case_bounds() {
        let eta_q = rat(1, 64);
        let q = XiEta::new(int(0), eta_q.clone());
        let p = XiEta::new(rat(1, 2), &eta_q + rat(1, 8));
        let nu0 = rat(-1, 4);
        let a1 = from_tilt_triple(&[int(0), int(4), int(1)]);
        assert_eq!(nu_tilde(&p, &a1).unwrap(), Slope::Finite(&nu0 + rat(1, 2)));
        let (_, e2) = gamma_intersect(&p, &a1).unwrap();
        let root = QuadExt::sqrt(&(&nu0 * &nu0 + int(2) * &eta_q)).unwrap();
        let eta2 = QuadExt::rational(&nu0 + rat(1, 2))
            .try_mul(&QuadExt::rational(nu0.clone()).try_sub(&root).unwrap())
            .unwrap()
            .add_rational(&(&eta_q + rat(1, 8)));
        assert_eq!(e2.eta, eta2);
        let iv = lz19_bounds(&p, &q, &a1, Placement::Heart).unwrap().shift(1);
        assert!(iv.inside_open(&Phase::integer(1), &Phase::half_integer(5)));
    }
}
