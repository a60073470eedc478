//! The full verification suite with stable check ids.

use std::collections::BTreeSet;
use std::fmt::Display;

use num_integer::Integer;
use serde::Serialize;
use stabkit::chow::{
    ch_clifford, ch_kappa1, ch_kappa2, ch_line, ch_plane_ideal, coh_split, euler_pairing_c0,
    mukai_dual, todd, ChernVector, Y5,
};
use stabkit::knum::{
    euclid_sq, euler_c0, euler_ku, kappa_bar, kappa_coords, mat_pow, mutate_right_k, nonempty_tree,
    pick_decompose, project_ku_y, rotation_ku_c0, serre_db_c0, serre_orbit, wedge, BaseOrbit,
    ExceptionalRecord, KClassC0, KClassKu, KuBasis, CLIFFORD_WINDOW, M_O, M_S,
};
use stabkit::numerics::{det, int, rat, HSeries, Phase, QuadExt, Rational};
use stabkit::serre::{charge_matrix, gepner_rotation_check, hex_charge, k_sum, phase_jump, sqrt3};
use stabkit::tilt::{
    beta0, delta_c0, delta_plain, from_tilt_triple, gamma_intersect, in_region_v, lz19_bounds, nu,
    nu_clifford, nu_tilde, tensor_c1_ch, tilt_triple, v_point, Placement, Slope, TiltParam, VPoint,
    XiEta,
};
use stabkit::walls::destabilizer_search;

/// One named comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    pub desc: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
    pub failures: usize,
}

impl VerifyReport {
    pub fn text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = if c.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("{tag} {:<26} {}\n", c.id, c.desc));
            if !c.pass {
                out.push_str(&format!(
                    "     expected {}\n     computed {}\n",
                    c.expected, c.computed
                ));
            }
        }
        out.push_str(&format!(
            "{} checks, {} failures\n",
            self.checks.len(),
            self.failures
        ));
        out
    }
}

/// Inputs the suite can be run against; the default is the true data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub td_y: ChernVector,
}

impl Default for Fixture {
    fn default() -> Self {
        Fixture { td_y: todd(Y5) }
    }
}

struct Suite {
    checks: Vec<Check>,
}

impl Suite {
    fn eq(&mut self, id: &str, desc: &str, expected: impl Display, computed: impl Display) {
        let (e, c) = (expected.to_string(), computed.to_string());
        let pass = e == c;
        self.checks.push(Check {
            id: id.into(),
            desc: desc.into(),
            expected: e,
            computed: c,
            pass,
        });
    }

    fn holds(&mut self, id: &str, desc: &str, computed: bool) {
        self.eq(id, desc, true, computed);
    }
}

fn matrix<T: Display>(rows: &[Vec<T>]) -> String {
    let r: Vec<String> = rows
        .iter()
        .map(|r| {
            format!(
                "[{}]",
                r.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            )
        })
        .collect();
    format!("[{}]", r.join(", "))
}

fn series(v: &ChernVector, n: usize) -> String {
    let c: Vec<String> = (0..n).map(|k| v.ch(k).to_string()).collect();
    format!("({})", c.join(", "))
}

/// HRR on the cubic fivefold with the fixture's Todd class.
fn hrr(td: &ChernVector, e: &ChernVector, f: &ChernVector) -> Option<Rational> {
    let prod = mukai_dual(e)
        .times(f.series())
        .ok()?
        .times(td.series())
        .ok()?;
    Y5.integrate(prod.series()).ok()
}

fn opt<T: Display>(x: Option<T>) -> String {
    x.map_or_else(|| "error".into(), |v| v.to_string())
}

/// 25 parameter points spread over a rational grid.
fn sample_params() -> Vec<TiltParam> {
    (0..25i64)
        .map(|i| TiltParam::new(rat(3 * i + 1, 11), rat(7 * i - 80, 16)).expect("positive alpha^2"))
        .collect()
}

/// 25 points of region V.
fn sample_v() -> Vec<TiltParam> {
    (0..25i64)
        .map(|i| {
            let beta = rat(-3, 2) + rat(2 * i + 1, 100);
            let m = (&beta + rat(3, 2)).min(-&beta - int(1));
            TiltParam::new(&m * &m * rat(i + 1, 27), beta).expect("positive alpha^2")
        })
        .collect()
}

fn gram_c0_window(m: usize, range: std::ops::RangeInclusive<i64>) -> Vec<Vec<Rational>> {
    range
        .clone()
        .map(|i| range.clone().map(|j| euler_pairing_c0(i, j, m)).collect())
        .collect()
}

fn clifford_checks(s: &mut Suite) {
    let g3 = gram_c0_window(3, -1..=2);
    s.eq(
        "c01.gram-p3",
        "Gram matrix of C-1..C2 on P3",
        "[[1, 3, 7, 14], [0, 1, 3, 7], [-1, 0, 1, 3], [-3, -1, 0, 1]]",
        matrix(&g3),
    );
    s.eq(
        "c01.det-p3",
        "determinant of the P3 Gram matrix",
        1,
        det(&g3),
    );
    let g2 = gram_c0_window(2, 0..=2);
    s.eq(
        "c02.gram-p2",
        "Gram matrix of C0..C2 on P2",
        "[[2, 3, 6], [3, 2, 3], [6, 3, 2]]",
        matrix(&g2),
    );
    s.eq(
        "c02.det-p2",
        "determinant of the P2 Gram matrix by cofactor expansion",
        2 * (4 - 9) - 3 * (6 - 18) + 6 * (9 - 12),
        det(&g2),
    );
}

fn hrr_checks(s: &mut Suite, fx: &Fixture) {
    let td = ChernVector::from_coeffs(
        Y5,
        [
            int(1),
            int(2),
            rat(25, 12),
            rat(3, 2),
            rat(73, 90),
            rat(1, 3),
        ],
    );
    s.eq(
        "c03.todd-y",
        "Todd class of the cubic fivefold",
        series(&td, 6),
        series(&fx.td_y, 6),
    );
    let k = [ch_kappa1(), ch_kappa2()];
    let rows: Vec<Vec<String>> = k
        .iter()
        .map(|u| k.iter().map(|w| opt(hrr(&fx.td_y, u, w))).collect())
        .collect();
    s.eq(
        "c04.kappa-pairing",
        "HRR Euler form on kappa1, kappa2",
        "[[-1, -1], [0, -1]]",
        matrix(&rows),
    );
}

fn kappa_bar_checks(s: &mut Suite) {
    let orth: Vec<i64> = [1, 2]
        .iter()
        .flat_map(|&j| [1u8, 2].map(|i| euler_c0(&KClassC0::basis(j), &kappa_bar(i))))
        .collect();
    s.eq(
        "c05.kappabar-orth",
        "chi(C1, kb_i), chi(C2, kb_i)",
        "[0, 0, 0, 0]",
        format!("{orth:?}"),
    );
    s.eq(
        "c05.kappabar1-ch",
        "ch0..ch2 of kappabar1",
        "(-8, 8, -5)",
        series(&kappa_bar(1).ch(), 3),
    );
    s.eq(
        "c05.kappabar2-ch",
        "ch0..ch2 of kappabar2",
        "(0, -4, 5)",
        series(&kappa_bar(2).ch(), 3),
    );
}

fn discriminant_checks(s: &mut Suite) {
    let nonzero: Vec<i64> = (-10..=10)
        .filter(|&k| !delta_c0(&ch_clifford(k, 3)).eq(&int(0)))
        .collect();
    s.eq(
        "c06.delta-clifford",
        "k in [-10, 10] with Delta_C0(C_k) != 0",
        "[]",
        format!("{nonzero:?}"),
    );
    s.eq(
        "c06.delta-plain",
        "unmodified Delta(C0), Delta(C1)",
        "(-48, -48)",
        format!(
            "({}, {})",
            delta_plain(&ch_clifford(0, 3)),
            delta_plain(&ch_clifford(1, 3))
        ),
    );
}

fn tilt_checks(s: &mut Suite) {
    let mut bad = 0;
    for p in sample_params() {
        for j in -3..=4 {
            if nu(&ch_clifford(j, 3), &p).ok() != Some(nu_clifford(j, &p)) {
                bad += 1;
            }
        }
    }
    s.eq(
        "c07.nu-closed-form",
        "closed-form nu(C_j) mismatches over 25 points, j in [-3, 4]",
        0,
        bad,
    );
    let chain = sample_v().iter().all(|p| {
        let n = |j: i64| nu(&ch_clifford(j, 3), p).expect("nonzero class");
        let zero = Slope::Finite(int(0));
        in_region_v(p) && n(-1) < n(0) && n(0) < zero && zero < n(1) && n(1) < n(2)
    });
    s.holds(
        "c07.stability-chain",
        "nu(C-1[1]) < nu(C0[1]) < 0 < nu(C1) < nu(C2) at 25 points of V",
        chain,
    );
    let e = HSeries::exp(&rat(1, 2), 3);
    let c1 = ch_clifford(1, 3);
    let ok = ch_clifford(0, 3).series().inv().is_ok_and(|c0_inv| {
        CLIFFORD_WINDOW.iter().all(|&j| {
            let v = ch_clifford(j, 3);
            v.times(c1.series()).and_then(|x| x.times(&c0_inv)).ok() == v.times(&e).ok()
        })
    });
    s.holds(
        "c08.tensor-c1",
        "ch(v) ch(C1) ch(C0)^-1 = e^(h/2) ch(v) on the Clifford basis",
        ok,
    );
}

fn projection_checks(s: &mut Suite) {
    let ip = ch_plane_ideal();
    s.eq(
        "c09.proj-ip",
        "projection of I_Pi",
        "(0, 1)",
        opt(project_ku_y(&ip).ok()),
    );
    s.eq(
        "c09.proj-ip1",
        "projection of I_Pi(1)",
        "(-1, 0)",
        opt(project_ku_y(&ip.twist(1)).ok()),
    );
    let chain = mutate_right_k(&ExceptionalRecord::line(-2, Y5), &ip.twist(-1))
        .and_then(|v| mutate_right_k(&ExceptionalRecord::line(-1, Y5), &v))
        .and_then(|v| kappa_coords(&v));
    s.eq(
        "c09.k-pi",
        "R_O(-1) R_O(-2) of I_Pi(-1), the class of K_Pi",
        "(1, -1)",
        opt(chain.ok()),
    );
}

fn functor_checks(s: &mut Suite) {
    s.eq(
        "c10.ms6",
        "M_S^6",
        "[[1, 0], [0, 1]]",
        format!("{:?}", mat_pow(&M_S, 6)),
    );
    s.eq(
        "c10.ms3",
        "M_S^3",
        "[[-1, 0], [0, -1]]",
        format!("{:?}", mat_pow(&M_S, 3)),
    );
    s.eq(
        "c10.mo3",
        "M_O^3",
        "[[1, 0], [0, 1]]",
        format!("{:?}", mat_pow(&M_O, 3)),
    );
    let r1 = rotation_ku_c0(&kappa_bar(1)).ok();
    let r2 = rotation_ku_c0(&kappa_bar(2)).ok();
    s.eq(
        "c10.rotation-kb1",
        "tensor-then-mutate image of kappabar1",
        kappa_bar(2),
        opt(r1),
    );
    s.eq(
        "c10.rotation-kb2",
        "tensor-then-mutate image of kappabar2",
        kappa_bar(2).sub(&kappa_bar(1)),
        opt(r2),
    );
    let mut bad = 0;
    for i in CLIFFORD_WINDOW {
        for j in CLIFFORD_WINDOW {
            let (u, w) = (KClassC0::basis(i), KClassC0::basis(j));
            if serre_db_c0(&u).map(|su| euler_c0(&w, &su)).ok() != Some(euler_c0(&u, &w)) {
                bad += 1;
            }
        }
    }
    s.eq(
        "c10.serre-duality",
        "pairs with chi(u, w) != chi(w, S u) among 16",
        0,
        bad,
    );
}

fn wall_checks(s: &mut Suite) {
    let target = kappa_bar(2).ch().neg();
    match destabilizer_search(&target, &beta0(), 5) {
        Ok(hits) => {
            let alphas: BTreeSet<String> = hits.iter().map(|(a, _)| a.to_string()).collect();
            let factors: BTreeSet<String> = hits
                .iter()
                .map(|(_, c)| {
                    let f = |k: &KClassC0| {
                        let t = tilt_triple(&k.ch(), &beta0());
                        format!("({}, {}, {})", t[0], t[1], t[2])
                    };
                    format!("{} + {}", f(&c.sub), f(&c.quotient))
                })
                .collect();
            s.eq(
                "c11.torsion-alpha",
                "distinct alpha^2 of walls for (0,4,0) at bound 5",
                "{\"1/16\"}",
                format!("{alphas:?}"),
            );
            s.eq(
                "c11.torsion-factors",
                "tilt triples of the destabilizing factors",
                "{\"(8, 2, 1/4) + (-8, 2, -1/4)\"}",
                format!("{factors:?}"),
            );
        }
        Err(e) => s.eq("c11.torsion-alpha", "wall search for (0,4,0)", "walls", e),
    }
}

fn pick_checks(s: &mut Suite) {
    let mut bad = Vec::new();
    let mut count = 0;
    for a in -40i64..=40 {
        for b in -40i64..=40 {
            let v = KClassKu::kappa(a, b);
            if euclid_sq(&v) > 1600 || a.gcd(&b) != 1 {
                continue;
            }
            count += 1;
            let ok = match (euclid_sq(&v) >= 2).then(|| pick_decompose(&v)) {
                None => true,
                Some(Ok((m, p))) => {
                    euclid_sq(&m) < euclid_sq(&v)
                        && euclid_sq(&p) < euclid_sq(&v)
                        && wedge(&m, &p) == 1
                        && (euler_ku(&v, &v) >= -3 || euler_ku(&p, &m) < 0)
                }
                Some(Err(_)) => false,
            };
            let leaves_ok = nonempty_tree(&v).map(|t| {
                t.leaves().iter().all(|(l, o)| {
                    serre_orbit(&o.representative(KuBasis::Kappa))
                        .map(|orb| orb.contains(l))
                        .unwrap_or(false)
                })
            });
            if !ok || leaves_ok != Ok(true) {
                bad.push(v);
            }
        }
    }
    s.eq(
        "c12.pick",
        &format!("primitive classes with |v| <= 40 failing the Pick properties (of {count})"),
        "[]",
        format!("{bad:?}"),
    );
    let sizes: Vec<usize> = [BaseOrbit::Kappa2, BaseOrbit::Kappa1PlusKappa2]
        .iter()
        .map(|o| serre_orbit(&o.representative(KuBasis::Kappa)).map_or(0, |v| v.len()))
        .collect();
    s.eq(
        "c12.orbits",
        "sizes of the two base Serre orbits",
        "[6, 6]",
        format!("{sizes:?}"),
    );
}

fn serre_checks(s: &mut Suite) {
    let alphas = [rat(1, 100), rat(1, 20), rat(3, 64), rat(1, 17)];
    let gepner = alphas.iter().all(|a| {
        TiltParam::new(a.clone(), beta0())
            .and_then(|p| hex_charge(&p))
            .map(|z| gepner_rotation_check(&z))
            .unwrap_or(false)
    });
    s.holds(
        "c13.gepner",
        "Z'' S = R(pi/3) Z'' in Q(sqrt 3) at four alpha^2",
        gepner,
    );
    let p = TiltParam::new(rat(1, 100), beta0()).expect("valid");
    match hex_charge(&p) {
        Ok(z) => {
            let kb1 = KClassKu::kappa_bar(1, 0);
            let j =
                phase_jump(&z, &kb1).map(|j| format!("{} {} {}", j.fractional, j.branch_k, j.jump));
            s.eq(
                "c13.phase-jump",
                "fractional jump, branch k, total jump",
                "1/3 1 7/3",
                opt(j.ok()),
            );
            s.eq(
                "c13.k-sum",
                "k + k + k over the S-triple",
                3,
                opt(k_sum(&z, &kb1).ok()),
            );
            let v1 = z.apply(&kb1).map(|(x, y)| format!("({x}, {y})"));
            let v2 = z
                .apply(&KClassKu::kappa_bar(0, 1))
                .map(|(x, y)| format!("({x}, {y})"));
            let half = QuadExt::rational(rat(-1, 2));
            s.eq(
                "c13.hex-kb1",
                "Z''(kappabar1), with the kappabar labels exchanged",
                format!("({half}, {})", sqrt3().scale(&rat(1, 2))),
                opt(v1.ok()),
            );
            s.eq(
                "c13.hex-kb2",
                "Z''(kappabar2), with the kappabar labels exchanged",
                "(-1, 0)",
                opt(v2.ok()),
            );
        }
        Err(e) => s.eq("c13.phase-jump", "hexagonal normalization", "ok", e),
    }
    let mut bad = 0;
    for i in 0..10i64 {
        let p = TiltParam::new(rat(i + 1, 97), rat(-130 + 3 * i, 100)).expect("valid");
        let shifted = &p.beta - beta0();
        let want =
            QuadExt::rational(int(16) * &p.alpha_sq + int(16) * &shifted * &shifted + int(7));
        if charge_matrix(&p).and_then(|z| z.0.det()).ok() != Some(want) {
            bad += 1;
        }
    }
    s.eq(
        "c13.z0-det",
        "Z0 determinant mismatches over 10 points",
        0,
        bad,
    );
}

fn geometry_checks(s: &mut Suite) {
    let vp = |j: i64| match v_point(&ch_clifford(j, 3)) {
        Ok(VPoint::Finite { xi, eta }) => format!("({xi}, {eta})"),
        other => format!("{other:?}"),
    };
    s.eq("c14.v-c0", "v(C0)", "(-1/4, 1/32)", vp(0));
    s.eq("c14.v-c1", "v(C1)", "(1/4, 1/32)", vp(1));
    let eta_q = rat(1, 64);
    let q = XiEta::new(int(0), eta_q.clone());
    let p = XiEta::new(rat(1, 2), &eta_q + rat(1, 8));
    let b1 = tensor_c1_ch(&ch_clifford(1, 3));
    let nu0 = rat(1, 16);
    let root = QuadExt::sqrt(&(&nu0 * &nu0 + int(2) * &eta_q)).expect("positive");
    let xi_b1 = QuadExt::rational(&nu0 + rat(1, 2))
        .try_add(&root)
        .expect("same field");
    let got = gamma_intersect(&p, &b1).map(|(e1, _)| e1.xi);
    s.eq(
        "c14.xi-b1",
        "xi(B1) = nu0 + 1/2 + sqrt(nu0^2 + 2 eta0)",
        xi_b1,
        opt(got.ok()),
    );
    let nu_q = match nu_tilde(&q, &ch_clifford(1, 3)) {
        Ok(Slope::Finite(x)) => x.to_string(),
        other => format!("{other:?}"),
    };
    s.eq("c14.nu0-b", "nu0 for the B configuration", &nu0, nu_q);
    let iv = lz19_bounds(&p, &q, &b1, Placement::Heart);
    s.holds(
        "c14.b-bounds",
        "B tensor C1 phases inside (1/2, 2)",
        iv.map(|i| i.inside_open(&Phase::half_integer(1), &Phase::integer(2)))
            .unwrap_or(false),
    );
    let a1 = from_tilt_triple(&[int(0), int(4), int(1)]);
    let nu0 = rat(-1, 4);
    let root = QuadExt::sqrt(&(&nu0 * &nu0 + int(2) * &eta_q)).expect("positive");
    let xi_a2 = QuadExt::rational(&nu0 + rat(1, 2))
        .try_sub(&root)
        .expect("same field");
    let eta_a2 = QuadExt::rational(&nu0 + rat(1, 2))
        .try_mul(
            &QuadExt::rational(nu0.clone())
                .try_sub(&root)
                .expect("same field"),
        )
        .expect("same field")
        .add_rational(&(&eta_q + rat(1, 8)));
    let got = gamma_intersect(&p, &a1).map(|(_, e2)| format!("({}, {})", e2.xi, e2.eta));
    s.eq(
        "c14.a2",
        "coordinates of A2",
        format!("({xi_a2}, {eta_a2})"),
        opt(got.ok()),
    );
    let iv = lz19_bounds(&p, &q, &a1, Placement::Heart).map(|i| i.shift(1));
    s.holds(
        "c14.a-bounds",
        "A[1] tensor C1 phases inside (1, 5/2)",
        iv.map(|i| i.inside_open(&Phase::integer(1), &Phase::half_integer(5)))
            .unwrap_or(false),
    );
}

fn cohomology_checks(s: &mut Suite, fx: &Fixture) {
    s.eq(
        "c15.coh-p3",
        "h of O + O(-1)^3 on P3",
        "[1, 0, 0, 0]",
        format!("{:?}", coh_split(&[0, -1, -1, -1], 3)),
    );
    let chi_p6 = |k: i64| -> i64 {
        coh_split(&[k], 6)
            .iter()
            .enumerate()
            .map(|(i, h)| if i % 2 == 0 { h.clone() } else { -h.clone() })
            .sum::<num_bigint::BigInt>()
            .try_into()
            .unwrap_or(i64::MIN)
    };
    s.eq(
        "c15.koszul",
        "chi(O_Y(1)) from the Koszul resolution on P6",
        7,
        chi_p6(1) - chi_p6(-2),
    );
    s.eq(
        "c15.chi-oy-oy1",
        "chi(O_Y, O_Y(1)) by HRR",
        7,
        opt(hrr(&fx.td_y, &ch_line(0, Y5), &ch_line(1, Y5))),
    );
}

type Group = fn(&mut Suite, &Fixture);

const GROUPS: [(&[u8], Group); 12] = [
    (&[1, 2], |s, _| clifford_checks(s)),
    (&[3, 4], hrr_checks),
    (&[5], |s, _| kappa_bar_checks(s)),
    (&[6], |s, _| discriminant_checks(s)),
    (&[7, 8], |s, _| tilt_checks(s)),
    (&[9], |s, _| projection_checks(s)),
    (&[10], |s, _| functor_checks(s)),
    (&[11], |s, _| wall_checks(s)),
    (&[12], |s, _| pick_checks(s)),
    (&[13], |s, _| serre_checks(s)),
    (&[14], |s, _| geometry_checks(s)),
    (&[15], cohomology_checks),
];

fn report(checks: Vec<Check>) -> VerifyReport {
    let failures = checks.iter().filter(|c| !c.pass).count();
    VerifyReport { checks, failures }
}

pub fn run_with(fx: &Fixture) -> VerifyReport {
    let mut s = Suite { checks: Vec::new() };
    for (_, g) in GROUPS {
        g(&mut s, fx);
    }
    report(s.checks)
}

/// Only the checks whose id starts with `cNN.`, running just the groups that produce them.
pub fn run_criterion(n: u8, fx: &Fixture) -> VerifyReport {
    let prefix = format!("c{n:02}.");
    let mut out = Vec::new();
    for (_, g) in GROUPS.iter().filter(|(ns, _)| ns.contains(&n)) {
        let mut s = Suite { checks: Vec::new() };
        g(&mut s, fx);
        out.extend(s.checks.into_iter().filter(|c| c.id.starts_with(&prefix)));
    }
    report(out)
}

pub fn run() -> VerifyReport {
    run_with(&Fixture::default())
}
