//! Numerical walls for tilt stability: bounded brute-force destabilizer
//! search over the Clifford lattice, supporting lines in the `(ξ, η)` plane
//! and window scans with chamber adjacency.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::chow::{ch_clifford, ChernVector, P3};
use crate::error::{Error, Result};
use crate::knum::{KClassC0, CLIFFORD_WINDOW};
use crate::numerics::{int, QuadExt, Rational};
use crate::tilt::{beta0, discriminant, gamma_line_points, tilt_triple, SurdPoint, XiEta};

type Triple = [Rational; 3];

fn triple_of(coeffs: &[i64; 4], basis: &[Triple; 4]) -> Triple {
    let mut t = [int(0), int(0), int(0)];
    for (c, b) in coeffs.iter().zip(basis) {
        if *c != 0 {
            let c = int(*c);
            for k in 0..3 {
                t[k] += &c * &b[k];
            }
        }
    }
    t
}

fn basis_triples(beta: &Rational) -> [Triple; 4] {
    CLIFFORD_WINDOW.map(|j| tilt_triple(&ch_clifford(j, 3), beta))
}

fn sub3(a: &Triple, b: &Triple) -> Triple {
    [&a[0] - &b[0], &a[1] - &b[1], &a[2] - &b[2]]
}

/// Inequalities evaluated for a candidate, with their slack.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstraintsReport {
    pub delta_sub: Rational,
    pub delta_quot: Rational,
    pub im_sub: Rational,
    pub im_target: Rational,
}

impl ConstraintsReport {
    /// Names of the inequalities that hold with equality.
    pub fn active(&self) -> Vec<&'static str> {
        let mut a = Vec::new();
        if self.delta_sub.is_zero() {
            a.push("delta_sub");
        }
        if self.delta_quot.is_zero() {
            a.push("delta_quot");
        }
        a
    }
}

/// A sub/quotient split of the target class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DestabCandidate {
    pub sub: KClassC0,
    pub quotient: KClassC0,
    pub constraints_report: ConstraintsReport,
}

/// Thread pool honouring `STABKIT_THREADS`, or the global pool.
fn run_pooled<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    let threads = std::env::var("STABKIT_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok());
    match threads.and_then(|n| rayon::ThreadPoolBuilder::new().num_threads(n).build().ok()) {
        Some(pool) => pool.install(f),
        None => f(),
    }
}

/// All `w = Σ cᵢ[Cᵢ]` with `|cᵢ| ≤ bound`, partitioned by `c₋₁`, in canonical order.
fn enumerate<T: Send>(bound: i64, visit: impl Fn([i64; 4]) -> Option<T> + Sync) -> Vec<T> {
    let parts: Vec<Vec<T>> = run_pooled(|| {
        (-bound..=bound)
            .into_par_iter()
            .map(|a| {
                let mut out = Vec::new();
                for b in -bound..=bound {
                    for c in -bound..=bound {
                        for d in -bound..=bound {
                            if let Some(x) = visit([a, b, c, d]) {
                                out.push(x);
                            }
                        }
                    }
                }
                out
            })
            .collect()
    });
    parts.into_iter().flatten().collect()
}

fn check_p3(v: &ChernVector) -> Result<()> {
    if v.variety() != P3 {
        return Err(Error::VarietyMismatch(
            v.variety().to_string(),
            P3.to_string(),
        ));
    }
    Ok(())
}

/// Sub-characters of `target` with equal tilt at some `α² > 0` on the vertical line `β`.
pub fn destabilizer_search(
    target: &ChernVector,
    beta: &Rational,
    bound: i64,
) -> Result<Vec<(Rational, DestabCandidate)>> {
    check_p3(target)?;
    if bound < 1 {
        return Ok(Vec::new());
    }
    let target_class = KClassC0::from_ch(target)?;
    let basis = basis_triples(beta);
    let t = tilt_triple(target, beta);
    let found = enumerate(bound, |coeffs| {
        let w = triple_of(&coeffs, &basis);
        if !(w[1].is_positive() && w[1] < t[1]) {
            return None;
        }
        // α²·½(T₀w₁ − w₀T₁) = T₂w₁ − w₂T₁
        let lhs = (&t[0] * &w[1] - &w[0] * &t[1]) / int(2);
        if lhs.is_zero() {
            return None;
        }
        let alpha_sq = (&t[2] * &w[1] - &w[2] * &t[1]) / &lhs;
        if !alpha_sq.is_positive() {
            return None;
        }
        let q = sub3(&t, &w);
        let (dw, dq) = (discriminant(&w), discriminant(&q));
        if dw.is_negative() || dq.is_negative() {
            return None;
        }
        // the sub is the factor whose tilt exceeds the target's just below the wall
        if lhs.is_positive() {
            return None;
        }
        let sub = KClassC0::new(coeffs);
        let candidate = DestabCandidate {
            sub,
            quotient: target_class.sub(&sub),
            constraints_report: ConstraintsReport {
                delta_sub: dw,
                delta_quot: dq,
                im_sub: w[1].clone(),
                im_target: t[1].clone(),
            },
        };
        Some((alpha_sq, candidate))
    });
    let mut found = found;
    found.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.sub.cmp(&b.1.sub)));
    Ok(found)
}

/// Line `aξ + bη + c = 0`, normalized so the first nonzero of `(b, a)` is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WallLine {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl WallLine {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Result<Self> {
        let lead = if !b.is_zero() {
            b.clone()
        } else if !a.is_zero() {
            a.clone()
        } else {
            return Err(Error::NoWall("proportional characters".into()));
        };
        Ok(WallLine {
            a: a / &lead,
            b: b / &lead,
            c: c / &lead,
        })
    }

    pub fn is_vertical(&self) -> bool {
        self.b.is_zero()
    }

    /// `dη/dξ`, `None` when vertical.
    pub fn slope(&self) -> Option<Rational> {
        (!self.is_vertical()).then(|| -&self.a / &self.b)
    }

    /// `η` at `ξ = 0`, or the constant `ξ` of a vertical line.
    pub fn intercept(&self) -> Rational {
        if self.is_vertical() {
            -&self.c / &self.a
        } else {
            -&self.c / &self.b
        }
    }

    pub fn eta_at(&self, xi: &Rational) -> Option<Rational> {
        self.slope().map(|m| m * xi + self.intercept())
    }

    pub fn contains(&self, p: &XiEta) -> bool {
        (&self.a * &p.xi + &self.b * &p.eta + &self.c).is_zero()
    }
}

impl fmt::Display for WallLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.slope() {
            Some(m) => write!(f, "eta = {m}*xi + {}", self.intercept()),
            None => write!(f, "xi = {}", self.intercept()),
        }
    }
}

/// Numerical wall with its realizing splits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wall {
    pub line: WallLine,
    pub endpoints: (SurdPoint, SurdPoint),
    pub realizers: Vec<DestabCandidate>,
}

impl Wall {
    /// `α²` where the wall meets the vertical line `β`, if above `Γ`.
    pub fn alpha_sq_at(&self, beta: &Rational) -> Option<Rational> {
        let xi = beta - beta0();
        let eta = self.line.eta_at(&xi)?;
        let a = int(2) * eta - &xi * &xi;
        a.is_positive().then_some(a)
    }
}

/// Line of equal `ν̃` for the triples `t`, `w` at `β = −5/4`.
fn line_of(t: &Triple, w: &Triple) -> Result<WallLine> {
    WallLine::new(
        &t[2] * &w[0] - &w[2] * &t[0],
        &t[0] * &w[1] - &w[0] * &t[1],
        &w[2] * &t[1] - &t[2] * &w[1],
    )
}

fn endpoints_of(line: &WallLine) -> Result<(SurdPoint, SurdPoint)> {
    match line.slope() {
        Some(m) => {
            let k = line.intercept();
            if (&m * &m + int(2) * &k).is_positive() {
                gamma_line_points(&m, &XiEta::new(int(0), k))
            } else {
                Err(Error::NoWall(format!("{line} stays below the parabola")))
            }
        }
        None => {
            let xi = line.intercept();
            let p = SurdPoint {
                eta: (&xi * &xi / int(2)).into(),
                xi: xi.into(),
            };
            Ok((p.clone(), p))
        }
    }
}

/// Supporting line of the numerical wall of `w` for `target`, with its `Γ` endpoints.
pub fn numerical_wall_line(target: &ChernVector, w: &ChernVector) -> Result<Wall> {
    check_p3(target)?;
    check_p3(w)?;
    let line = line_of(&tilt_triple(target, &beta0()), &tilt_triple(w, &beta0()))?;
    let endpoints = endpoints_of(&line)?;
    Ok(Wall {
        line,
        endpoints,
        realizers: Vec::new(),
    })
}

/// Closed rectangle in the `(ξ, η)` plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Window {
    pub xi_lo: Rational,
    pub xi_hi: Rational,
    pub eta_lo: Rational,
    pub eta_hi: Rational,
}

impl Window {
    pub fn is_empty(&self) -> bool {
        self.xi_lo > self.xi_hi || self.eta_lo > self.eta_hi
    }
}

#[derive(Clone, Debug)]
struct Bound {
    v: QuadExt,
    strict: bool,
}

impl Bound {
    fn closed(r: Rational) -> Self {
        Bound {
            v: r.into(),
            strict: false,
        }
    }
    fn open(v: QuadExt) -> Self {
        Bound { v, strict: true }
    }
}

/// Interval with optional ends, intersected constraint by constraint.
#[derive(Clone, Debug, Default)]
struct Interval {
    lo: Option<Bound>,
    hi: Option<Bound>,
    empty: bool,
}

impl Interval {
    fn raise(&mut self, b: Bound) {
        let replace = match &self.lo {
            None => true,
            Some(cur) => match b.v.cmp_exact(&cur.v) {
                Ordering::Greater => true,
                Ordering::Equal => b.strict && !cur.strict,
                Ordering::Less => false,
            },
        };
        if replace {
            self.lo = Some(b);
        }
    }

    fn lower(&mut self, b: Bound) {
        let replace = match &self.hi {
            None => true,
            Some(cur) => match b.v.cmp_exact(&cur.v) {
                Ordering::Less => true,
                Ordering::Equal => b.strict && !cur.strict,
                Ordering::Greater => false,
            },
        };
        if replace {
            self.hi = Some(b);
        }
    }

    /// `p·x + q > 0` (or `≥ 0` when `closed`).
    fn linear(&mut self, p: &Rational, q: &Rational, closed: bool) {
        if p.is_zero() {
            if q.is_negative() || (q.is_zero() && !closed) {
                self.empty = true;
            }
            return;
        }
        let x = QuadExt::rational(-q / p);
        let b = Bound {
            v: x,
            strict: !closed,
        };
        if p.is_positive() {
            self.raise(b)
        } else {
            self.lower(b)
        }
    }

    fn nonempty(&self) -> bool {
        if self.empty {
            return false;
        }
        match (&self.lo, &self.hi) {
            (Some(l), Some(h)) => match l.v.cmp_exact(&h.v) {
                Ordering::Less => true,
                Ordering::Equal => !l.strict && !h.strict,
                Ordering::Greater => false,
            },
            _ => true,
        }
    }
}

fn ge(x: &QuadExt, b: &Bound) -> bool {
    match x.cmp_exact(&b.v) {
        Ordering::Greater => true,
        Ordering::Equal => !b.strict,
        Ordering::Less => false,
    }
}

fn le(x: &QuadExt, b: &Bound) -> bool {
    match x.cmp_exact(&b.v) {
        Ordering::Less => true,
        Ordering::Equal => !b.strict,
        Ordering::Greater => false,
    }
}

/// Rational with the smallest denominator, then the smallest `|numerator|`,
/// in a nonempty bounded interval.
fn simplest_rational(lo: &Bound, hi: &Bound, depth: u32) -> Option<Rational> {
    if depth > 256 {
        return None;
    }
    if lo.v.cmp_exact(&hi.v) == Ordering::Equal {
        return lo.v.as_rational().cloned();
    }
    let zero = QuadExt::from_int(0);
    if ge(&zero, lo) && le(&zero, hi) {
        return Some(int(0));
    }
    if zero.cmp_exact(&hi.v) != Ordering::Less {
        let nlo = Bound {
            v: -&hi.v,
            strict: hi.strict,
        };
        let nhi = Bound {
            v: -&lo.v,
            strict: lo.strict,
        };
        return simplest_rational(&nlo, &nhi, depth).map(|r| -r);
    }
    // 0 < lo < hi
    let n = lo.v.floor();
    let first = first_int_at_least(lo);
    if le(&QuadExt::rational(first.clone()), hi) {
        return Some(first);
    }
    let nr = Rational::from_integer(n);
    let a = lo.v.add_rational(&-&nr);
    let b = hi.v.add_rational(&-&nr);
    let rlo = Bound {
        v: b.recip().ok()?,
        strict: hi.strict,
    };
    let r = if a.is_zero() {
        first_int_at_least(&rlo)
    } else {
        let rhi = Bound {
            v: a.recip().ok()?,
            strict: lo.strict,
        };
        simplest_rational(&rlo, &rhi, depth + 1)?
    };
    Some(nr + r.recip())
}

/// Least integer inside `[b, ∞)` (or `(b, ∞)` when strict).
fn first_int_at_least(b: &Bound) -> Rational {
    let mut n = QuadExt::rational(Rational::from_integer(b.v.floor()));
    if !ge(&n, b) {
        n = n.add_rational(&Rational::one());
    }
    n.as_rational().cloned().expect("integer")
}

/// One wall hit inside a scan window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WallHit {
    pub beta: Rational,
    pub alpha_sq: Rational,
    pub candidate: DestabCandidate,
}

/// Walls met in a window, sorted, with the chambers between consecutive walls.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WallReport {
    pub bound: i64,
    pub walls: Vec<Wall>,
    pub hits: Vec<Vec<WallHit>>,
    pub chambers: Vec<Chamber>,
}

/// Chamber `i` lies between walls `i − 1` and `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chamber {
    pub index: usize,
    pub lower_wall: Option<usize>,
    pub upper_wall: Option<usize>,
}

impl WallReport {
    /// CSV with columns `beta,alpha_sq,sub_coeffs,quot_coeffs,delta_sub,delta_quot`.
    pub fn to_csv_rows(&self) -> Vec<[String; 6]> {
        let coeffs = |k: &KClassC0| {
            k.coeffs
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(";")
        };
        self.hits
            .iter()
            .flatten()
            .map(|h| {
                let c = &h.candidate;
                [
                    h.beta.to_string(),
                    h.alpha_sq.to_string(),
                    coeffs(&c.sub),
                    coeffs(&c.quotient),
                    c.constraints_report.delta_sub.to_string(),
                    c.constraints_report.delta_quot.to_string(),
                ]
            })
            .collect()
    }
}

fn scan_candidate(
    coeffs: [i64; 4],
    t: &Triple,
    basis: &[Triple; 4],
    win: &Window,
    target: &KClassC0,
) -> Option<(WallLine, WallHit)> {
    let w = triple_of(&coeffs, basis);
    let q = sub3(t, &w);
    if w.iter().all(Zero::is_zero) || q.iter().all(Zero::is_zero) {
        return None;
    }
    let (dw, dq) = (discriminant(&w), discriminant(&q));
    if dw.is_negative() || dq.is_negative() {
        return None;
    }
    let line = line_of(t, &w).ok()?;
    let mut iv = Interval::default();
    iv.raise(Bound::closed(win.xi_lo.clone()));
    iv.lower(Bound::closed(win.xi_hi.clone()));
    // 0 < w₁ − ξw₀ and 0 < q₁ − ξq₀
    iv.linear(&-&w[0], &w[1], false);
    iv.linear(&-&q[0], &q[1], false);
    let (xi, eta) = match line.slope() {
        Some(m) => {
            let k = line.intercept();
            iv.linear(&m, &(&k - &win.eta_lo), true);
            iv.linear(&-&m, &(&win.eta_hi - &k), true);
            let disc = &m * &m + int(2) * &k;
            if !disc.is_positive() {
                return None;
            }
            let root = QuadExt::sqrt(&disc).ok()?;
            let mq = QuadExt::rational(m.clone());
            iv.raise(Bound::open(mq.try_sub(&root).ok()?));
            iv.lower(Bound::open(mq.try_add(&root).ok()?));
            if !iv.nonempty() {
                return None;
            }
            let xi = simplest_rational(iv.lo.as_ref()?, iv.hi.as_ref()?, 0)?;
            let eta = m * &xi + k;
            (xi, eta)
        }
        None => {
            let xi = line.intercept();
            let x = QuadExt::rational(xi.clone());
            if !(iv.nonempty() && ge(&x, iv.lo.as_ref()?) && le(&x, iv.hi.as_ref()?)) {
                return None;
            }
            let mut ie = Interval::default();
            ie.raise(Bound::closed(win.eta_lo.clone()));
            ie.lower(Bound::closed(win.eta_hi.clone()));
            ie.raise(Bound::open(QuadExt::rational(&xi * &xi / int(2))));
            if !ie.nonempty() {
                return None;
            }
            let eta = simplest_rational(ie.lo.as_ref()?, ie.hi.as_ref()?, 0)?;
            (xi, eta)
        }
    };
    let beta = &xi + beta0();
    let alpha_sq = int(2) * &eta - &xi * &xi;
    let wc = KClassC0::new(coeffs);
    let qc = target.sub(&wc);
    // B = T₀w₁ − w₀T₁ < 0 singles out the sub; vertical walls keep the smaller class
    let b = &t[0] * &w[1] - &w[0] * &t[1];
    let keep = match b.cmp(&int(0)) {
        Ordering::Less => true,
        Ordering::Greater => false,
        Ordering::Equal => wc < qc,
    };
    if !keep {
        return None;
    }
    let tb = xi.clone();
    let report = ConstraintsReport {
        delta_sub: dw,
        delta_quot: dq,
        im_sub: &w[1] - &tb * &w[0],
        im_target: &t[1] - &tb * &t[0],
    };
    Some((
        line,
        WallHit {
            beta,
            alpha_sq,
            candidate: DestabCandidate {
                sub: wc,
                quotient: qc,
                constraints_report: report,
            },
        },
    ))
}

/// All walls of `target` meeting `window`, from splits with `|cᵢ| ≤ bound`.
pub fn wall_scan(target: &ChernVector, window: &Window, bound: i64) -> Result<WallReport> {
    check_p3(target)?;
    let empty = WallReport {
        bound,
        walls: Vec::new(),
        hits: Vec::new(),
        chambers: Vec::new(),
    };
    if window.is_empty() || bound < 1 {
        return Ok(empty);
    }
    let target_class = KClassC0::from_ch(target)?;
    let basis = basis_triples(&beta0());
    let t = tilt_triple(target, &beta0());
    let found = enumerate(bound, |c| {
        scan_candidate(c, &t, &basis, window, &target_class)
    });
    let mut grouped: BTreeMap<WallLine, Vec<WallHit>> = BTreeMap::new();
    for (line, hit) in found {
        grouped.entry(line).or_default().push(hit);
    }
    let mut entries: Vec<(WallLine, Vec<WallHit>)> = grouped.into_iter().collect();
    for (_, hits) in entries.iter_mut() {
        hits.sort_by_key(|h| h.candidate.sub);
    }
    entries.sort_by(|a, b| {
        let (ha, hb) = (&a.1[0], &b.1[0]);
        ha.alpha_sq
            .cmp(&hb.alpha_sq)
            .then_with(|| ha.beta.cmp(&hb.beta))
            .then_with(|| a.0.cmp(&b.0))
    });
    let mut walls = Vec::new();
    let mut hits = Vec::new();
    for (line, h) in entries {
        let endpoints = endpoints_of(&line)?;
        let realizers = h.iter().map(|x| x.candidate.clone()).collect();
        walls.push(Wall {
            line,
            endpoints,
            realizers,
        });
        hits.push(h);
    }
    let n = walls.len();
    let chambers = (0..=n)
        .map(|i| Chamber {
            index: i,
            lower_wall: i.checked_sub(1),
            upper_wall: (i < n).then_some(i),
        })
        .collect();
    Ok(WallReport {
        bound,
        walls,
        hits,
        chambers,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knum::kappa_bar;
    use crate::numerics::rat;
    use crate::tilt::{nu, TiltParam};

    fn torsion() -> ChernVector {
        kappa_bar(2).ch().neg()
    }

    #[test]
    fn torsion_wall_at_bound_five() {
        let r = destabilizer_search(&torsion(), &rat(-5, 4), 5).unwrap();
        assert!(!r.is_empty());
        assert!(r.iter().all(|(a, _)| *a == rat(1, 16)));
        for (a, c) in &r {
            let sub = tilt_triple(&c.sub.ch(), &beta0());
            let quot = tilt_triple(&c.quotient.ch(), &beta0());
            assert_eq!(sub, [int(8), int(2), rat(1, 4)]);
            assert_eq!(quot, [int(-8), int(2), rat(-1, 4)]);
            let p = TiltParam::new(a.clone(), beta0()).unwrap();
            let target_nu = nu(&torsion(), &p).unwrap();
            assert_eq!(nu(&c.sub.ch(), &p).unwrap(), target_nu);
            assert_eq!(nu(&c.quotient.ch(), &p).unwrap(), target_nu);
            assert_eq!(
                c.sub.add(&c.quotient),
                KClassC0::from_ch(&torsion()).unwrap()
            );
        }
        assert!(r.iter().any(|(_, c)| c.sub == KClassC0::basis(1)));
    }

    #[test]
    fn clifford_sheaf_has_no_wall() {
        assert!(destabilizer_search(&ch_clifford(1, 3), &rat(-5, 4), 3)
            .unwrap()
            .is_empty());
        assert!(destabilizer_search(&torsion(), &rat(-5, 4), 0)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn torsion_wall_line_is_horizontal() {
        let w = numerical_wall_line(&torsion(), &ch_clifford(1, 3)).unwrap();
        assert_eq!(w.line.slope(), Some(int(0)));
        assert_eq!(w.line.intercept(), rat(1, 32));
        assert_eq!(w.alpha_sq_at(&rat(-5, 4)), Some(rat(1, 16)));
        for e in [&w.endpoints.0, &w.endpoints.1] {
            assert_eq!(e.xi.try_mul(&e.xi).unwrap().scale(&rat(1, 2)), e.eta);
        }
        assert!(numerical_wall_line(&torsion(), &torsion().scale_int(2)).is_err());
    }

    #[test]
    fn scan_window() {
        let win = Window {
            xi_lo: rat(-1, 2),
            xi_hi: rat(1, 2),
            eta_lo: int(0),
            eta_hi: rat(1, 32),
        };
        let r = wall_scan(&torsion(), &win, 5).unwrap();
        assert_eq!(r.walls.len(), 1);
        assert_eq!(r.walls[0].line.intercept(), rat(1, 32));
        assert_eq!(r.hits[0][0].beta, rat(-5, 4));
        assert_eq!(r.hits[0][0].alpha_sq, rat(1, 16));
        assert_eq!(r.chambers.len(), 2);
        let again = wall_scan(&torsion(), &win, 5).unwrap();
        assert_eq!(r, again);
        let empty = Window {
            xi_lo: int(1),
            xi_hi: int(0),
            eta_lo: int(0),
            eta_hi: int(1),
        };
        assert!(wall_scan(&torsion(), &empty, 5).unwrap().walls.is_empty());
    }

    #[test]
    fn simplest_rationals() {
        let b = |n: i64, d: i64, s: bool| Bound {
            v: QuadExt::rational(rat(n, d)),
            strict: s,
        };
        assert_eq!(
            simplest_rational(&b(1, 3, true), &b(1, 2, true), 0),
            Some(rat(2, 5))
        );
        assert_eq!(
            simplest_rational(&b(-1, 4, true), &b(1, 4, true), 0),
            Some(int(0))
        );
        assert_eq!(
            simplest_rational(&b(-7, 3, false), &b(-2, 1, true), 0),
            Some(rat(-7, 3))
        );
        let r2 = Bound {
            v: QuadExt::sqrt(&int(2)).unwrap(),
            strict: true,
        };
        assert_eq!(simplest_rational(&r2, &b(3, 2, true), 0), Some(rat(10, 7)));
    }
}
