use std::cmp::Ordering;
use std::fmt;

use super::{QuadExt, Rational};
use crate::error::{Error, Result};

/// Nonzero plane vector standing for its ray; ordered by the counterclockwise
/// angle from the downward ray `(0, −1)`, in `[0, 2π)`.
#[derive(Clone, Debug)]
pub struct Angle {
    x: QuadExt,
    y: QuadExt,
}

impl Angle {
    pub fn new(x: QuadExt, y: QuadExt) -> Result<Self> {
        if x.is_zero() && y.is_zero() {
            return Err(Error::ZeroVector);
        }
        // both coordinates must live in one quadratic field
        x.try_add(&y)?;
        Ok(Angle { x, y })
    }

    pub fn from_rational(x: Rational, y: Rational) -> Result<Self> {
        Self::new(x.into(), y.into())
    }

    /// Ray of the complex number `re + i·im`; the angle then equals `arg`.
    pub fn from_complex(re: &QuadExt, im: &QuadExt) -> Result<Self> {
        Self::new(im.clone(), -re)
    }

    /// The downward ray itself (angle 0).
    pub fn zero() -> Self {
        Angle {
            x: QuadExt::from_int(0),
            y: QuadExt::from_int(-1),
        }
    }

    pub fn x(&self) -> &QuadExt {
        &self.x
    }
    pub fn y(&self) -> &QuadExt {
        &self.y
    }

    /// Complex coordinates `(re, im)` of the ray direction.
    pub fn to_complex(&self) -> (QuadExt, QuadExt) {
        (-&self.y, self.x.clone())
    }

    /// 0: angle 0, 1: (0, π), 2: π, 3: (π, 2π).
    fn sector(&self) -> u8 {
        match self.x.signum() {
            1 => 1,
            -1 => 3,
            _ => {
                if self.y.signum() < 0 {
                    0
                } else {
                    2
                }
            }
        }
    }

    /// Opposite ray.
    pub fn opposite(&self) -> Self {
        Angle {
            x: -&self.x,
            y: -&self.y,
        }
    }

    pub fn is_zero_angle(&self) -> bool {
        self.sector() == 0
    }

    /// True when the angle lies in `[0, π)`.
    pub fn in_lower_half_turn(&self) -> bool {
        self.sector() <= 1
    }

    /// Float angle in radians, for reports and plots only.
    pub fn to_f64(&self) -> f64 {
        let t = self.x.to_f64().atan2(-self.y.to_f64());
        if t < 0.0 {
            t + std::f64::consts::TAU
        } else {
            t
        }
    }
}

/// Exact comparison of two rays by angle from the downward ray.
pub fn angle_cmp(u: &Angle, v: &Angle) -> Ordering {
    let (su, sv) = (u.sector(), v.sector());
    if su != sv {
        return su.cmp(&sv);
    }
    if su == 0 || su == 2 {
        return Ordering::Equal;
    }
    // in an open half plane the angle increases with y/x
    let ru = u.y.try_div(&u.x).expect("coordinates share a field");
    let rv = v.y.try_div(&v.x).expect("coordinates share a field");
    ru.cmp_exact(&rv)
}

impl PartialEq for Angle {
    fn eq(&self, o: &Self) -> bool {
        angle_cmp(self, o) == Ordering::Equal
    }
}
impl Eq for Angle {}
impl PartialOrd for Angle {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for Angle {
    fn cmp(&self, o: &Self) -> Ordering {
        angle_cmp(self, o)
    }
}

/// Real phase `whole + θ/π` with `θ ∈ [0, π)` kept as an exact ray.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Phase {
    whole: i64,
    frac: Angle,
}

impl Phase {
    /// Phase in `[0, 2)` of a ray.
    pub fn from_angle(a: &Angle) -> Self {
        if a.in_lower_half_turn() {
            Phase {
                whole: 0,
                frac: a.clone(),
            }
        } else {
            Phase {
                whole: 1,
                frac: a.opposite(),
            }
        }
    }

    /// Phase in `(−1, 1]` of a ray.
    pub fn from_angle_signed(a: &Angle) -> Self {
        let p = Self::from_angle(a);
        if p.whole == 1 && !p.frac.is_zero_angle() {
            p.add_int(-2)
        } else {
            p
        }
    }

    pub fn integer(k: i64) -> Self {
        Phase {
            whole: k,
            frac: Angle::zero(),
        }
    }

    /// The phase `k/2`.
    pub fn half_integer(k: i64) -> Self {
        let whole = k.div_euclid(2);
        if k.rem_euclid(2) == 0 {
            Phase::integer(whole)
        } else {
            let right = Angle {
                x: QuadExt::from_int(1),
                y: QuadExt::from_int(0),
            };
            Phase { whole, frac: right }
        }
    }

    pub fn add_int(&self, k: i64) -> Self {
        Phase {
            whole: self.whole + k,
            frac: self.frac.clone(),
        }
    }

    pub fn whole(&self) -> i64 {
        self.whole
    }

    /// The ray `e^{iπφ}` seen in the downward-ray convention.
    pub fn ray(&self) -> Angle {
        if self.whole.rem_euclid(2) == 0 {
            self.frac.clone()
        } else {
            self.frac.opposite()
        }
    }

    /// Least integer `≥` the phase.
    pub fn ceil(&self) -> i64 {
        if self.frac.is_zero_angle() {
            self.whole
        } else {
            self.whole + 1
        }
    }

    /// Smallest phase with ray `a` that is `≥ lower`.
    pub fn lift_at_least(a: &Angle, lower: &Phase) -> Self {
        let mut p = Self::from_angle(a);
        let shift = (lower.whole - p.whole).div_euclid(2) * 2;
        p = p.add_int(shift);
        while p < *lower {
            p = p.add_int(2);
        }
        while p.add_int(-2) >= *lower {
            p = p.add_int(-2);
        }
        p
    }

    pub fn to_f64(&self) -> f64 {
        self.whole as f64 + self.frac.to_f64() / std::f64::consts::PI
    }
}

impl PartialOrd for Phase {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for Phase {
    fn cmp(&self, o: &Self) -> Ordering {
        self.whole
            .cmp(&o.whole)
            .then_with(|| angle_cmp(&self.frac, &o.frac))
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.12}", self.to_f64())
    }
}
