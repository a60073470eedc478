use num_integer::Integer;
use proptest::prelude::*;
use stabkit::chow::{ch_line, euler_pairing_int, ChernVector, P3};
use stabkit::knum::{
    euclid_sq, euler_c0, euler_ku, mat_apply, mat_mul, mat_pow, mutate_left_k, mutate_right_k,
    nonempty_tree, norm_form, pick_decompose, rotation_ku_c0, serre_db_c0, serre_ku_y, serre_orbit,
    wedge, BaseOrbit, ExceptionalRecord, KClassC0, KClassKu, M_O, M_S,
};

fn line_combo() -> impl Strategy<Value = ChernVector> {
    prop::collection::vec(-5i64..=5, 4).prop_map(|c| {
        c.iter()
            .enumerate()
            .fold(ChernVector::zero(P3), |acc, (k, &n)| {
                acc.try_add(&ch_line(k as i64 - 2, P3).scale_int(n))
                    .unwrap()
            })
    })
}

fn ku() -> impl Strategy<Value = KClassKu> {
    (-50i64..=50, -50i64..=50).prop_map(|(a, b)| KClassKu::kappa(a, b))
}

/// Pick pair computed from a Bezout solution `c·b − d·a = 1` shifted along `v`.
fn bezout_pick(v: &KClassKu) -> Vec<(KClassKu, KClassKu)> {
    let e = v.a.extended_gcd(&v.b);
    let (c0, d0) = (e.y * e.gcd, -e.x * e.gcd);
    let n = euclid_sq(v);
    (-60..=60)
        .map(|t| KClassKu::kappa(c0 + t * v.a, d0 + t * v.b))
        .map(|m| (m, KClassKu::kappa(v.a - m.a, v.b - m.b)))
        .filter(|(m, p)| euclid_sq(m) < n && euclid_sq(p) < n)
        .collect()
}

#[test]
fn functor_matrix_relations() {
    assert_eq!(mat_pow(&M_S, 6), [[1, 0], [0, 1]]);
    assert_eq!(mat_pow(&M_S, 3), [[-1, 0], [0, -1]]);
    assert_eq!(mat_pow(&M_O, 3), [[1, 0], [0, 1]]);
    assert_eq!(mat_mul(&M_O, &M_S), [[-1, 0], [0, -1]]);
}

#[test]
fn pick_matches_bezout_oracle() {
    for a in -15i64..=15 {
        for b in -15i64..=15 {
            let v = KClassKu::kappa(a, b);
            if a.gcd(&b) != 1 || euclid_sq(&v) < 2 {
                continue;
            }
            let oracle = bezout_pick(&v);
            assert_eq!(oracle.len(), 1, "{v}");
            assert_eq!(pick_decompose(&v).unwrap(), oracle[0], "{v}");
        }
    }
}

#[test]
fn pick_trees_end_in_two_orbits() {
    let orbit_of = |v: KClassKu| serre_orbit(&v).unwrap();
    assert_eq!(orbit_of(KClassKu::kappa(0, 1)).len(), 6);
    assert_eq!(orbit_of(KClassKu::kappa(1, 1)).len(), 6);
    for a in -40i64..=40 {
        for b in -40i64..=40 {
            let v = KClassKu::kappa(a, b);
            if a * a + b * b > 1600 || a.gcd(&b) != 1 {
                continue;
            }
            let tree = nonempty_tree(&v).unwrap();
            for (leaf, orbit) in tree.leaves() {
                assert!(orbit_of(orbit.representative(leaf.basis)).contains(&leaf));
            }
            if euclid_sq(&v) >= 2 {
                let (m, p) = pick_decompose(&v).unwrap();
                assert_eq!(wedge(&m, &p), 1);
                if euler_ku(&v, &v) < -3 {
                    assert!(euler_ku(&p, &m) < 0, "{v}");
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn serre_is_an_isometry(v in ku(), w in ku()) {
        prop_assert_eq!(euler_ku(&serre_ku_y(&v), &serre_ku_y(&w)), euler_ku(&v, &w));
        prop_assert_eq!(euler_ku(&v, &w), euler_ku(&w, &serre_ku_y(&v)));
    }

    #[test]
    fn orbits_preserve_norm(v in ku()) {
        prop_assume!(!v.is_zero());
        let orbit = serre_orbit(&v).unwrap();
        prop_assert_eq!(orbit.len(), 6);
        prop_assert!(orbit.iter().all(|w| norm_form(w) == norm_form(&v)));
    }

    #[test]
    fn norm_form_skips_two(a in -1000i64..=1000, b in -1000i64..=1000) {
        prop_assert_ne!(norm_form(&KClassKu::kappa(a, b)), 2);
    }

    #[test]
    fn mutations_invert_on_orthogonal(f in line_combo(), k in -3i64..=3) {
        let e = ExceptionalRecord::line(k, P3);
        let chi = euler_pairing_int(&f, &e.ch).unwrap();
        let g = f.try_sub(&e.ch.scale_int(chi)).unwrap();
        prop_assert_eq!(euler_pairing_int(&g, &e.ch).unwrap(), 0);
        let back = mutate_right_k(&e, &mutate_left_k(&e, &g).unwrap()).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn rotation_pipeline_matches_matrix(a in -20i64..=20, b in -20i64..=20) {
        let v = KClassKu::kappa_bar(a, b);
        let rotated = rotation_ku_c0(&v.to_c0().unwrap()).unwrap();
        prop_assert_eq!(rotated, mat_apply(&M_S, &v).to_c0().unwrap());
    }

    #[test]
    fn serre_duality_on_c0(u in prop::array::uniform4(-6i64..=6), w in prop::array::uniform4(-6i64..=6)) {
        let (u, w) = (KClassC0::new(u), KClassC0::new(w));
        prop_assert_eq!(euler_c0(&u, &w), euler_c0(&w, &serre_db_c0(&u).unwrap()));
    }

    #[test]
    fn leaves_are_classified(a in -60i64..=60, b in -60i64..=60) {
        prop_assume!(a.gcd(&b) == 1);
        let tree = nonempty_tree(&KClassKu::kappa(a, b)).unwrap();
        prop_assert!(tree.leaves().iter().all(|(v, o)| BaseOrbit::classify(v) == Some(*o)));
    }
}
