//! Numerical Grothendieck lattices: Clifford basis on (P³, C₀), the rank-2
//! Kuznetsov lattices, K-level mutations, functor matrices, Serre orbits and
//! the Pick-decomposition induction.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use crate::chow::{
    ch_clifford, ch_kappa1, ch_kappa2, ch_line, euler_pairing, euler_pairing_c0, euler_pairing_int,
    ChernVector, Variety, P3, Y5,
};
use crate::error::{Error, Result};
use crate::numerics::{as_i64, int, solve_exact, Rational};
use num_integer::Integer;

/// Clifford indices of the basis `{[C₋₁], [C₀], [C₁], [C₂]}`.
pub const CLIFFORD_WINDOW: [i64; 4] = [-1, 0, 1, 2];

/// Class in `K_num(P³, C₀)` with coordinates `(c₋₁, c₀, c₁, c₂)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KClassC0 {
    pub coeffs: [i64; 4],
}

impl KClassC0 {
    pub const ZERO: KClassC0 = KClassC0 { coeffs: [0; 4] };

    pub fn new(coeffs: [i64; 4]) -> Self {
        KClassC0 { coeffs }
    }

    /// `[C_j]` for `j ∈ {−1, 0, 1, 2}`.
    pub fn basis(j: i64) -> Self {
        let mut c = [0; 4];
        c[(j + 1) as usize] = 1;
        KClassC0 { coeffs: c }
    }

    /// Chern character on P³.
    pub fn ch(&self) -> ChernVector {
        CLIFFORD_WINDOW
            .iter()
            .zip(self.coeffs)
            .fold(ChernVector::zero(P3), |acc, (&j, c)| {
                acc.try_add(&ch_clifford(j, 3).scale_int(c))
                    .expect("same variety")
            })
    }

    /// Coordinates of a P³ character, which must be an integral combination.
    pub fn from_ch(v: &ChernVector) -> Result<Self> {
        if v.variety() != P3 {
            return Err(Error::VarietyMismatch(
                v.variety().to_string(),
                P3.to_string(),
            ));
        }
        let basis: Vec<ChernVector> = CLIFFORD_WINDOW.iter().map(|&j| ch_clifford(j, 3)).collect();
        let a: Vec<Vec<Rational>> = (0..4)
            .map(|k| basis.iter().map(|b| b.ch(k)).collect())
            .collect();
        let rhs: Vec<Rational> = (0..4).map(|k| v.ch(k)).collect();
        let x = solve_exact(&a, &rhs)
            .ok_or_else(|| Error::Lattice(format!("{v} is not in the Clifford span")))?;
        let mut c = [0; 4];
        for (slot, r) in c.iter_mut().zip(&x) {
            *slot = as_i64(r)
                .ok_or_else(|| Error::Lattice(format!("{v} has non-integral coordinate {r}")))?;
        }
        Ok(KClassC0 { coeffs: c })
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut c = self.coeffs;
        for (x, y) in c.iter_mut().zip(o.coeffs) {
            *x += y;
        }
        KClassC0 { coeffs: c }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(-1))
    }

    pub fn scale(&self, n: i64) -> Self {
        KClassC0 {
            coeffs: self.coeffs.map(|c| c * n),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs == [0; 4]
    }
}

impl fmt::Display for KClassC0 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.coeffs;
        write!(f, "({a}, {b}, {c}, {d})")
    }
}

/// `[C_j]` for any `j`, solved against `ch₀..ch₃`.
pub fn clifford_class(j: i64) -> Result<KClassC0> {
    if CLIFFORD_WINDOW.contains(&j) {
        return Ok(KClassC0::basis(j));
    }
    static CACHE: OnceLock<Mutex<HashMap<i64, KClassC0>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().expect("cache lock").get(&j) {
        return Ok(*v);
    }
    let v = KClassC0::from_ch(&ch_clifford(j, 3))?;
    cache.lock().expect("cache lock").insert(j, v);
    Ok(v)
}

/// `χ(C_i, C_j)` on P³ for `i, j ∈ {−1..2}`, row-major.
pub fn gram_c0() -> [[i64; 4]; 4] {
    static GRAM: OnceLock<[[i64; 4]; 4]> = OnceLock::new();
    *GRAM.get_or_init(compute_gram_c0)
}

fn compute_gram_c0() -> [[i64; 4]; 4] {
    let mut g = [[0; 4]; 4];
    for (r, &i) in CLIFFORD_WINDOW.iter().enumerate() {
        for (c, &j) in CLIFFORD_WINDOW.iter().enumerate() {
            g[r][c] = as_i64(&euler_pairing_c0(i, j, 3)).expect("integral pairing");
        }
    }
    g
}

/// Euler form of `K_num(P³, C₀)`.
pub fn euler_c0(u: &KClassC0, w: &KClassC0) -> i64 {
    let g = gram_c0();
    let mut s = 0;
    for r in 0..4 {
        for c in 0..4 {
            s += u.coeffs[r] * g[r][c] * w.coeffs[c];
        }
    }
    s
}

/// `− ⊗_{C₀} C_k`: sends `[C_j]` to `[C_{j+k}]`; twisting by `O(k)` is `k ↦ 2k`.
pub fn twist_c0(v: &KClassC0, k: i64) -> Result<KClassC0> {
    let mut acc = KClassC0::ZERO;
    for (&j, c) in CLIFFORD_WINDOW.iter().zip(v.coeffs) {
        if c != 0 {
            acc = acc.add(&clifford_class(j + k)?.scale(c));
        }
    }
    Ok(acc)
}

/// K-level Serre functor `(− ⊗ C₋₂)[3]`.
pub fn serre_db_c0(v: &KClassC0) -> Result<KClassC0> {
    Ok(twist_c0(v, -2)?.scale(-1))
}

/// Which side of the equivalence a rank-2 class lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum KuBasis {
    /// `{κ₁, κ₂}` on the cubic fivefold.
    Kappa,
    /// `{κ̄₁, κ̄₂}` on (P³, C₀).
    KappaBar,
}

impl KuBasis {
    pub fn name(&self) -> &'static str {
        match self {
            KuBasis::Kappa => "kappa",
            KuBasis::KappaBar => "kappabar",
        }
    }
}

/// Class `a·κ₁ + b·κ₂` (or `a·κ̄₁ + b·κ̄₂`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KClassKu {
    pub basis: KuBasis,
    pub a: i64,
    pub b: i64,
}

impl KClassKu {
    pub fn kappa(a: i64, b: i64) -> Self {
        KClassKu {
            basis: KuBasis::Kappa,
            a,
            b,
        }
    }

    pub fn kappa_bar(a: i64, b: i64) -> Self {
        KClassKu {
            basis: KuBasis::KappaBar,
            a,
            b,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn add(&self, o: &Self) -> Self {
        KClassKu {
            basis: self.basis,
            a: self.a + o.a,
            b: self.b + o.b,
        }
    }

    pub fn neg(&self) -> Self {
        KClassKu {
            basis: self.basis,
            a: -self.a,
            b: -self.b,
        }
    }

    fn with(&self, a: i64, b: i64) -> Self {
        KClassKu {
            basis: self.basis,
            a,
            b,
        }
    }

    /// Image in `K_num(P³, C₀)`; only for the `κ̄` basis.
    pub fn to_c0(&self) -> Result<KClassC0> {
        match self.basis {
            KuBasis::KappaBar => Ok(kappa_bar(1).scale(self.a).add(&kappa_bar(2).scale(self.b))),
            KuBasis::Kappa => Err(Error::InvalidParameter(
                "kappa classes live on the cubic fivefold".into(),
            )),
        }
    }

    /// Chern character on the ambient variety of its basis.
    pub fn ch(&self) -> ChernVector {
        match self.basis {
            KuBasis::Kappa => ch_kappa1()
                .scale_int(self.a)
                .try_add(&ch_kappa2().scale_int(self.b))
                .expect("same variety"),
            KuBasis::KappaBar => self.to_c0().expect("kappabar").ch(),
        }
    }
}

impl fmt::Display for KClassKu {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

/// `κ̄₁ = [C₀] − 3[C₁] + [C₂]`, `κ̄₂ = −[C₋₁] + 4[C₀] − 4[C₁] + [C₂]`.
pub fn kappa_bar(i: u8) -> KClassC0 {
    match i {
        1 => KClassC0::new([0, 1, -3, 1]),
        2 => KClassC0::new([-1, 4, -4, 1]),
        _ => panic!("kappa_bar index must be 1 or 2"),
    }
}

/// Coordinates in `{κ̄₁, κ̄₂}` of a class right-orthogonal to `[C₁], [C₂]`.
pub fn ku_coords_c0(v: &KClassC0) -> Result<KClassKu> {
    for j in [1, 2] {
        let chi = euler_c0(&KClassC0::basis(j), v);
        if chi != 0 {
            return Err(Error::NotInKu(format!("chi(C{j}, {v}) = {chi}")));
        }
    }
    let (k1, k2) = (kappa_bar(1), kappa_bar(2));
    let a: Vec<Vec<Rational>> = (0..4)
        .map(|r| vec![int(k1.coeffs[r]), int(k2.coeffs[r])])
        .collect();
    let rhs: Vec<Rational> = v.coeffs.iter().map(|&c| int(c)).collect();
    let x = solve_exact(&a, &rhs).ok_or_else(|| Error::NotInKu(v.to_string()))?;
    match (as_i64(&x[0]), as_i64(&x[1])) {
        (Some(a), Some(b)) => Ok(KClassKu::kappa_bar(a, b)),
        _ => Err(Error::NotInKu(format!(
            "{v} has fractional kappabar coordinates"
        ))),
    }
}

/// Exceptional object remembered by its character.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExceptionalRecord {
    pub label: String,
    pub ch: ChernVector,
}

impl ExceptionalRecord {
    /// Checks `χ(E, E) = 1`.
    pub fn new(label: impl Into<String>, ch: ChernVector) -> Result<Self> {
        let label = label.into();
        let chi = euler_pairing(&ch, &ch)?;
        if chi != int(1) {
            return Err(Error::Lattice(format!(
                "{label} has chi(E,E) = {chi}, not exceptional"
            )));
        }
        Ok(ExceptionalRecord { label, ch })
    }

    /// `O(k)` on `x`.
    pub fn line(k: i64, x: Variety) -> Self {
        let label = if k == 0 {
            "O".to_string()
        } else {
            format!("O({k})")
        };
        ExceptionalRecord::new(label, ch_line(k, x)).expect("line bundles are exceptional")
    }
}

/// `[L_E F] = [F] − χ(E, F)·[E]`.
pub fn mutate_left_k(e: &ExceptionalRecord, f: &ChernVector) -> Result<ChernVector> {
    let chi = euler_pairing_int(&e.ch, f)?;
    f.try_sub(&e.ch.scale_int(chi))
}

/// `[R_E F] = [F] − χ(F, E)·[E]`.
pub fn mutate_right_k(e: &ExceptionalRecord, f: &ChernVector) -> Result<ChernVector> {
    let chi = euler_pairing_int(f, &e.ch)?;
    f.try_sub(&e.ch.scale_int(chi))
}

/// `[L_E F]` in `K_num(P³, C₀)` for an exceptional Clifford class `e`.
pub fn mutate_left_c0(e: &KClassC0, f: &KClassC0) -> KClassC0 {
    f.sub(&e.scale(euler_c0(e, f)))
}

/// `[R_E F]` in `K_num(P³, C₀)`.
pub fn mutate_right_c0(e: &KClassC0, f: &KClassC0) -> KClassC0 {
    f.sub(&e.scale(euler_c0(f, e)))
}

/// `pr = R_{O(−1)} ∘ R_{O(−2)} ∘ L_O ∘ L_{O(1)}` at K-level, in `{κ₁, κ₂}`.
pub fn project_ku_y(f: &ChernVector) -> Result<KClassKu> {
    if f.variety() != Y5 {
        return Err(Error::VarietyMismatch(
            f.variety().to_string(),
            Y5.to_string(),
        ));
    }
    let mut v = mutate_left_k(&ExceptionalRecord::line(1, Y5), f)?;
    v = mutate_left_k(&ExceptionalRecord::line(0, Y5), &v)?;
    v = mutate_right_k(&ExceptionalRecord::line(-2, Y5), &v)?;
    v = mutate_right_k(&ExceptionalRecord::line(-1, Y5), &v)?;
    kappa_coords(&v)
}

/// Coordinates of a cubic-fivefold character in `{κ₁, κ₂}`.
pub fn kappa_coords(v: &ChernVector) -> Result<KClassKu> {
    let (k1, k2) = (ch_kappa1(), ch_kappa2());
    let a: Vec<Vec<Rational>> = (0..=5).map(|k| vec![k1.ch(k), k2.ch(k)]).collect();
    let rhs: Vec<Rational> = (0..=5).map(|k| v.ch(k)).collect();
    let x = solve_exact(&a, &rhs).ok_or_else(|| Error::NotInKu(v.to_string()))?;
    match (as_i64(&x[0]), as_i64(&x[1])) {
        (Some(a), Some(b)) => Ok(KClassKu::kappa(a, b)),
        _ => Err(Error::NotInKu(format!("{v} has fractional coordinates"))),
    }
}

/// Rotation functor `L_{C₁} ∘ (− ⊗ C₁)` on the `κ̄` span.
pub fn rotation_ku_c0(v: &KClassC0) -> Result<KClassC0> {
    ku_coords_c0(v)?;
    Ok(mutate_left_c0(&KClassC0::basis(1), &twist_c0(v, 1)?))
}

/// 2×2 integer matrix acting on column coordinates `(a, b)`.
pub type IntMat2 = [[i64; 2]; 2];

/// Serre functor of `Ku(Y)`: `κ₁ ↦ κ₂`, `κ₂ ↦ κ₂ − κ₁`.
pub const M_S: IntMat2 = [[0, -1], [1, 1]];
/// Rotation functor of `Ku(Y)`: `κ₁ ↦ κ₂ − κ₁`, `κ₂ ↦ −κ₁`.
pub const M_O: IntMat2 = [[-1, -1], [1, 0]];

/// Serre and rotation functors of `Ku(P³, C₀)` as tabulated on `{κ̄₁, κ̄₂}`.
pub const M_C0: IntMat2 = M_S;

pub fn mat_apply(m: &IntMat2, v: &KClassKu) -> KClassKu {
    v.with(m[0][0] * v.a + m[0][1] * v.b, m[1][0] * v.a + m[1][1] * v.b)
}

pub fn mat_mul(x: &IntMat2, y: &IntMat2) -> IntMat2 {
    let mut r = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            r[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
        }
    }
    r
}

pub fn mat_pow(m: &IntMat2, e: u32) -> IntMat2 {
    (0..e).fold([[1, 0], [0, 1]], |acc, _| mat_mul(&acc, m))
}

pub fn serre_ku_y(v: &KClassKu) -> KClassKu {
    mat_apply(&M_S, v)
}

pub fn rotation_ku_y(v: &KClassKu) -> KClassKu {
    mat_apply(&M_O, v)
}

/// Euler form `((−1, −1), (0, −1))` of both rank-2 lattices.
pub fn euler_ku(u: &KClassKu, w: &KClassKu) -> i64 {
    -u.a * w.a - u.a * w.b - u.b * w.b
}

/// `−χ(v, v) = a² + ab + b²`.
pub fn norm_form(v: &KClassKu) -> i64 {
    v.a * v.a + v.a * v.b + v.b * v.b
}

/// Orbit under the group generated by `M_S`, in iteration order.
pub fn serre_orbit(v: &KClassKu) -> Result<Vec<KClassKu>> {
    if v.is_zero() {
        return Err(Error::InvalidParameter("zero class has no orbit".into()));
    }
    let mut orbit = vec![*v];
    let mut cur = serre_ku_y(v);
    for _ in 0..12 {
        if cur == *v {
            return Ok(orbit);
        }
        orbit.push(cur);
        cur = serre_ku_y(&cur);
    }
    Err(Error::Internal("Serre orbit exceeded 12 iterations".into()))
}

/// Euclidean `a² + b²`.
pub fn euclid_sq(v: &KClassKu) -> i64 {
    v.a * v.a + v.b * v.b
}

/// `v ∧ w = a_v b_w − b_v a_w`.
pub fn wedge(v: &KClassKu, w: &KClassKu) -> i64 {
    v.a * w.b - v.b * w.a
}

/// The unique `(v₋, v₊)` with `v = v₋ + v₊`, both strictly shorter, `v₋ ∧ v₊ = 1`.
pub fn pick_decompose(v: &KClassKu) -> Result<(KClassKu, KClassKu)> {
    let g = v.a.gcd(&v.b);
    if g != 1 {
        return Err(Error::NotPrimitive(g));
    }
    let n = euclid_sq(v);
    if n < 2 {
        return Err(Error::InvalidParameter(format!("{v} is a unit vector")));
    }
    let r = (n as f64).sqrt().ceil() as i64;
    let mut found = Vec::new();
    for c in -r..=r {
        for d in -r..=r {
            let minus = v.with(c, d);
            let plus = v.with(v.a - c, v.b - d);
            if euclid_sq(&minus) < n && euclid_sq(&plus) < n && wedge(&minus, &plus) == 1 {
                found.push((minus, plus));
            }
        }
    }
    let [(minus, plus)] = found[..] else {
        return Err(Error::Internal(format!(
            "{} Pick pairs for {v}",
            found.len()
        )));
    };
    let dotp = minus.a * plus.a + minus.b * plus.b;
    if wedge(&minus, &plus) != 1 || dotp < 0 {
        return Err(Error::Internal(format!(
            "Pick pair for {v} fails the angle check"
        )));
    }
    Ok((minus, plus))
}

/// The two Serre orbits reached by the induction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseOrbit {
    /// Norm 1: the orbit of `κ₂`.
    Kappa2,
    /// Norm 3: the orbit of `κ₁ + κ₂`.
    Kappa1PlusKappa2,
}

impl BaseOrbit {
    pub fn tag(&self) -> &'static str {
        match self {
            BaseOrbit::Kappa2 => "kappa2-orbit",
            BaseOrbit::Kappa1PlusKappa2 => "kappa1+kappa2-orbit",
        }
    }

    pub fn classify(v: &KClassKu) -> Option<Self> {
        match norm_form(v) {
            1 => Some(BaseOrbit::Kappa2),
            3 => Some(BaseOrbit::Kappa1PlusKappa2),
            _ => None,
        }
    }

    pub fn representative(&self, basis: KuBasis) -> KClassKu {
        match self {
            BaseOrbit::Kappa2 => KClassKu { basis, a: 0, b: 1 },
            BaseOrbit::Kappa1PlusKappa2 => KClassKu { basis, a: 1, b: 1 },
        }
    }
}

/// Binary tree of Pick decompositions down to the base orbits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PickTree {
    Leaf {
        v: KClassKu,
        orbit: BaseOrbit,
    },
    Node {
        v: KClassKu,
        chi_plus_minus: i64,
        minus: Box<PickTree>,
        plus: Box<PickTree>,
    },
}

impl PickTree {
    pub fn root(&self) -> KClassKu {
        match self {
            PickTree::Leaf { v, .. } | PickTree::Node { v, .. } => *v,
        }
    }

    pub fn leaves(&self) -> Vec<(KClassKu, BaseOrbit)> {
        match self {
            PickTree::Leaf { v, orbit } => vec![(*v, *orbit)],
            PickTree::Node { minus, plus, .. } => {
                let mut l = minus.leaves();
                l.extend(plus.leaves());
                l
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            PickTree::Leaf { .. } => 0,
            PickTree::Node { minus, plus, .. } => 1 + minus.depth().max(plus.depth()),
        }
    }
}

/// Recursive Pick decomposition; every internal node has `χ(v₊, v₋) < 0`.
pub fn nonempty_tree(v: &KClassKu) -> Result<PickTree> {
    if v.is_zero() {
        return Err(Error::InvalidParameter("zero class".into()));
    }
    let g = v.a.gcd(&v.b);
    if g != 1 {
        return Err(Error::NotPrimitive(g));
    }
    if let Some(orbit) = BaseOrbit::classify(v) {
        return Ok(PickTree::Leaf { v: *v, orbit });
    }
    let (minus, plus) = pick_decompose(v)?;
    let chi = euler_ku(&plus, &minus);
    if chi >= 0 {
        return Err(Error::Internal(format!("chi(v+, v-) = {chi} >= 0 at {v}")));
    }
    Ok(PickTree::Node {
        v: *v,
        chi_plus_minus: chi,
        minus: Box::new(nonempty_tree(&minus)?),
        plus: Box::new(nonempty_tree(&plus)?),
    })
}
