//! Universal-cover `GL₂⁺` action on central charges, Serre-invariance
//! matrices, the hexagonal normalization, the Gepner rotation identity and
//! phase bookkeeping for the Serre functor.

use std::fmt;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::knum::{mat_apply, serre_ku_y, KClassKu, KuBasis, M_C0};
use crate::numerics::{int, rat, Angle, Mat2, Phase, QuadExt, Rational};
use crate::tilt::{beta0, TiltParam};

/// Central charge on `{κ̄₁, κ̄₂}`: column `j` is `(Re Z, Im Z)` of the `j`-th basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChargeMatrix(pub Mat2);

impl ChargeMatrix {
    pub fn new(m: Mat2) -> Result<Self> {
        if m.det()?.is_zero() {
            return Err(Error::InvalidParameter("degenerate central charge".into()));
        }
        Ok(ChargeMatrix(m))
    }

    pub fn matrix(&self) -> &Mat2 {
        &self.0
    }

    /// `Z(a·κ̄₁ + b·κ̄₂)`.
    pub fn apply(&self, v: &KClassKu) -> Result<(QuadExt, QuadExt)> {
        self.0.apply_ints(v.a, v.b)
    }

    pub fn angle_of(&self, v: &KClassKu) -> Result<Angle> {
        let (re, im) = self.apply(v)?;
        Angle::from_complex(&re, &im)
    }
}

impl fmt::Display for ChargeMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn int_mat(m: &[[i64; 2]; 2]) -> Mat2 {
    Mat2::from_ints(m[0][0], m[0][1], m[1][0], m[1][1])
}

/// `Z⁰_{α,β}` with columns `(8β+8, 4α²−4β²−8β−2)` and `(−4, 4β+5)`.
pub fn charge_matrix(p: &TiltParam) -> Result<ChargeMatrix> {
    let (a, b) = (&p.alpha_sq, &p.beta);
    let m = Mat2::from_rationals(
        int(8) * b + int(8),
        int(-4),
        int(4) * a - int(4) * b * b - int(8) * b - int(2),
        int(4) * b + int(5),
    );
    let det = m.det()?;
    let shifted = b - beta0();
    let closed = int(16) * a + int(16) * &shifted * &shifted + int(7);
    if det != QuadExt::rational(closed) || det.signum() <= 0 {
        return Err(Error::Internal(format!(
            "charge determinant {det} disagrees with the closed form"
        )));
    }
    ChargeMatrix::new(m)
}

/// `M = Z·O_*·Z⁻¹`, the unique matrix with `M⁻¹∘Z = Z∘O_*⁻¹`.
pub fn serre_inv_matrix(p: &TiltParam) -> Result<Mat2> {
    let z = charge_matrix(p)?;
    let m = z.0.mul(&int_mat(&M_C0))?.mul(&z.0.inv()?)?;
    if m.det()?.signum() <= 0 {
        return Err(Error::Internal(
            "Serre-invariance matrix is not orientation preserving".into(),
        ));
    }
    Ok(m)
}

/// `trace² < 4·det`.
pub fn has_complex_eigenvalues(m: &Mat2) -> Result<bool> {
    let t = m.trace()?;
    let lhs = t.try_mul(&t)?;
    let rhs = m.det()?.scale(&int(4));
    Ok(lhs.cmp_exact(&rhs).is_lt())
}

/// Element `(M, g)` of the universal cover of `GL₂⁺(R)`, with `g(0) ∈ (branch − 1, branch + 1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GLTilde {
    pub m: Mat2,
    pub branch: i64,
}

impl GLTilde {
    pub fn new(m: Mat2, branch: i64) -> Result<Self> {
        if m.det()?.signum() <= 0 {
            return Err(Error::InvalidParameter(format!(
                "det {} must be positive",
                m.det()?
            )));
        }
        Ok(GLTilde { m, branch })
    }

    pub fn identity() -> Self {
        GLTilde {
            m: Mat2::identity(),
            branch: 0,
        }
    }

    fn image_angle(&self, a: &Angle) -> Result<Angle> {
        let (re, im) = a.to_complex();
        let (x, y) = self.m.apply(&(re, im))?;
        Angle::from_complex(&x, &y)
    }

    pub fn g0(&self) -> Result<Phase> {
        let a = self.image_angle(&Phase::integer(0).ray())?;
        let mut p = Phase::lift_at_least(&a, &Phase::integer(self.branch - 1));
        if p == Phase::integer(self.branch - 1) {
            p = p.add_int(2);
        }
        Ok(p)
    }

    /// `g(φ)`, with `g(n + θ/π) = g(θ/π) + n` and `g([0, 1)) = [g(0), g(0) + 1)`.
    pub fn eval(&self, phi: &Phase) -> Result<Phase> {
        let n = phi.whole();
        let frac = phi.add_int(-n);
        let g0 = self.g0()?;
        let a = self.image_angle(&frac.ray())?;
        Ok(Phase::lift_at_least(&a, &g0).add_int(n))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GLTilde) -> Result<GLTilde> {
        let m = self.m.mul(&other.m)?;
        let g0 = self.eval(&other.eval(&Phase::integer(0))?)?;
        GLTilde::new(m, g0.ceil())
    }

    pub fn inverse(&self) -> Result<GLTilde> {
        let mi = self.m.inv()?;
        let a = {
            let (x, y) = mi.apply_ints(1, 0)?;
            Angle::from_complex(&x, &y)?
        };
        let psi0 = Phase::from_angle(&a);
        let shift = self.eval(&psi0)?.whole();
        GLTilde::new(mi, psi0.add_int(-shift).ceil())
    }
}

/// `σ·g̃`: the charge becomes `M⁻¹·Z`.
pub fn gl_act(gt: &GLTilde, zm: &ChargeMatrix) -> Result<ChargeMatrix> {
    ChargeMatrix::new(gt.m.inv()?.mul(&zm.0)?)
}

pub fn sqrt3() -> QuadExt {
    QuadExt::sqrt(&int(3)).expect("3 is positive")
}

/// `diag(4, (16α² + 7)/(2√3))` on the line `β = −5/4`, branch 0.
pub fn hex_normalizer(p: &TiltParam) -> Result<GLTilde> {
    if p.beta != beta0() {
        return Err(Error::InvalidParameter(format!(
            "beta = {} but the normalizer needs -5/4",
            p.beta
        )));
    }
    let d = sqrt3().scale(&((int(16) * &p.alpha_sq + int(7)) / int(6)));
    GLTilde::new(
        Mat2::new(
            QuadExt::from_int(4),
            QuadExt::from_int(0),
            QuadExt::from_int(0),
            d,
        ),
        0,
    )
}

/// `Z''` at `(α², −5/4)`.
pub fn hex_charge(p: &TiltParam) -> Result<ChargeMatrix> {
    gl_act(&hex_normalizer(p)?, &charge_matrix(p)?)
}

/// Rotation by `kπ/3` over `Q(√3)`.
pub fn rotation_pi_3(k: i64) -> Mat2 {
    let (c, s) = match k.rem_euclid(6) {
        0 => (QuadExt::from_int(1), QuadExt::from_int(0)),
        1 => (QuadExt::rational(rat(1, 2)), sqrt3().scale(&rat(1, 2))),
        2 => (QuadExt::rational(rat(-1, 2)), sqrt3().scale(&rat(1, 2))),
        3 => (QuadExt::from_int(-1), QuadExt::from_int(0)),
        4 => (QuadExt::rational(rat(-1, 2)), sqrt3().scale(&rat(-1, 2))),
        _ => (QuadExt::rational(rat(1, 2)), sqrt3().scale(&rat(-1, 2))),
    };
    Mat2::new(c.clone(), -&s, s, c)
}

/// `Z∘S_* = R(π/3)∘Z` exactly.
pub fn gepner_rotation_check(zm: &ChargeMatrix) -> bool {
    let lhs = zm.0.mul(&int_mat(&M_C0));
    let rhs = rotation_pi_3(1).mul(&zm.0);
    matches!((lhs, rhs), (Ok(l), Ok(r)) if l == r)
}

/// Phase change of the Serre functor read off a charge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhaseJump {
    /// Jump modulo 2.
    pub fractional: Rational,
    pub branch_k: i64,
    /// `fractional + 2k`.
    pub jump: Rational,
}

/// Serre phase jump at `v`, with `k` fixed by three equal jumps adding up to the shift 7.
pub fn phase_jump(zm: &ChargeMatrix, v: &KClassKu) -> Result<PhaseJump> {
    if v.is_zero() {
        return Err(Error::InvalidParameter("zero class has no phase".into()));
    }
    let v = KClassKu {
        basis: KuBasis::KappaBar,
        ..*v
    };
    let sv = mat_apply(&M_C0, &v);
    let target = zm.angle_of(&sv)?;
    let (re, im) = zm.apply(&v)?;
    let mut j_found = None;
    for j in 0..6 {
        let (x, y) = rotation_pi_3(j).apply(&(re.clone(), im.clone()))?;
        if Angle::from_complex(&x, &y)? == target {
            j_found = Some(j);
            break;
        }
    }
    let j = j_found
        .ok_or_else(|| Error::PhaseUndefined("Serre jump is not a multiple of pi/3".into()))?;
    let fractional = rat(j, 3);
    let twice_k = (int(7) - int(3) * &fractional) / int(3);
    if !twice_k.is_integer() || !(&twice_k / int(2)).is_integer() {
        return Err(Error::Internal(format!(
            "jump {fractional} is incompatible with the shift 7"
        )));
    }
    let k = (&twice_k / int(2))
        .to_integer()
        .try_into()
        .map_err(|_| Error::Internal("k overflow".into()))?;
    Ok(PhaseJump {
        jump: &fractional + int(2 * k),
        fractional,
        branch_k: k,
    })
}

/// `k(v) + k(Sv) + k(S²v)`.
pub fn k_sum(zm: &ChargeMatrix, v: &KClassKu) -> Result<i64> {
    let mut s = 0;
    let mut cur = *v;
    for _ in 0..3 {
        s += phase_jump(zm, &cur)?.branch_k;
        cur = serre_ku_y(&cur);
    }
    Ok(s)
}

/// Shear sending the hexagonal lattice `Z·(−1) + Z·e^{2πi/3}` onto `Z ⊕ Zi`.
pub fn square_shear() -> GLTilde {
    let m = Mat2::new(
        QuadExt::from_int(1),
        QuadExt::rational(rat(-1, 2)),
        QuadExt::from_int(0),
        sqrt3().scale(&rat(1, 2)),
    );
    GLTilde::new(m, 0).expect("positive determinant")
}

/// Largest extra phase a `π/3` gap can gain under `gt⁻¹`: 1/2 when
/// `N⁻ᵀN⁻¹R(π/3)` has a positive semidefinite symmetric part.
pub fn sheared_gap(gt: &GLTilde) -> Result<Rational> {
    let ni = gt.m.inv()?;
    let s = ni.transpose().mul(&ni)?.mul(&rotation_pi_3(1))?;
    let sym_off = s.m[0][1].try_add(&s.m[1][0])?.scale(&rat(1, 2));
    let a = &s.m[0][0];
    let d = &s.m[1][1];
    let det = a.try_mul(d)?.try_sub(&sym_off.try_mul(&sym_off)?)?;
    if a.signum() < 0 || d.signum() < 0 || det.signum() < 0 {
        return Err(Error::Internal(
            "a pi/3 gap opens past a quarter turn".into(),
        ));
    }
    if det.is_zero() {
        Ok(rat(1, 2))
    } else {
        Err(Error::Internal(
            "gap stays below a quarter turn; no exact supremum".into(),
        ))
    }
}

/// `gl.dim` after the square shear: `2 + 1/3` becomes at most `2 + 1/2`.
pub fn sheared_gl_dim(gt: &GLTilde) -> Result<Rational> {
    Ok(int(2) + sheared_gap(gt)?)
}

/// Square lattice check: columns are integral Gaussian vectors spanning `Z ⊕ Zi`.
pub fn is_standard_square(zm: &ChargeMatrix) -> bool {
    let entries: Vec<Option<&Rational>> =
        zm.0.m.iter().flatten().map(QuadExt::as_rational).collect();
    if entries.iter().any(|e| e.is_none_or(|r| !r.is_integer())) {
        return false;
    }
    let det = zm.0.det().ok();
    matches!(det.as_ref().and_then(QuadExt::as_rational), Some(d) if d.abs() == int(1))
}
