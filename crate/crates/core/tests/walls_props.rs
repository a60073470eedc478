use std::collections::BTreeSet;

use proptest::prelude::*;
use stabkit::knum::{kappa_bar, KClassC0};
use stabkit::numerics::rat;
use stabkit::tilt::{delta_c0, nu, TiltParam};
use stabkit::walls::{destabilizer_search, numerical_wall_line, wall_scan, Window};

fn target() -> impl Strategy<Value = KClassC0> {
    prop::array::uniform4(-3i64..=3)
        .prop_map(KClassC0::new)
        .prop_filter("nonzero", |v| !v.is_zero())
}

fn beta() -> impl Strategy<Value = stabkit::numerics::Rational> {
    (-12i64..=-4).prop_map(|n| rat(n, 8))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn walls_conserve_and_balance(t in target(), b in beta()) {
        let ch = t.ch();
        for (alpha_sq, c) in destabilizer_search(&ch, &b, 3).unwrap() {
            prop_assert_eq!(c.sub.add(&c.quotient), t);
            let p = TiltParam::new(alpha_sq, b.clone()).unwrap();
            let target_nu = nu(&ch, &p).unwrap();
            prop_assert_eq!(nu(&c.sub.ch(), &p).unwrap(), target_nu.clone());
            prop_assert_eq!(nu(&c.quotient.ch(), &p).unwrap(), target_nu);
            prop_assert!(delta_c0(&c.sub.ch()) >= rat(0, 1));
            prop_assert!(delta_c0(&c.quotient.ch()) >= rat(0, 1));
        }
    }

    #[test]
    fn larger_bound_keeps_walls(t in target(), b in beta()) {
        let ch = t.ch();
        let key = |bound| -> BTreeSet<_> {
            destabilizer_search(&ch, &b, bound).unwrap().into_iter().map(|(a, c)| (a, c.sub)).collect()
        };
        let (small, large) = (key(2), key(3));
        prop_assert!(small.is_subset(&large));
    }
}

#[test]
fn torsion_wall_is_unique_and_horizontal() {
    let t = kappa_bar(2).ch().neg();
    let r = destabilizer_search(&t, &rat(-5, 4), 5).unwrap();
    let alphas: BTreeSet<_> = r.iter().map(|(a, _)| a.clone()).collect();
    assert_eq!(alphas.into_iter().collect::<Vec<_>>(), vec![rat(1, 16)]);
    for (_, c) in &r {
        let w = numerical_wall_line(&t, &c.sub.ch()).unwrap();
        assert_eq!(w.line.slope(), Some(rat(0, 1)));
        assert_eq!(w.line.intercept(), rat(1, 32));
    }
}

#[test]
fn scan_is_monotone_in_bound() {
    let t = kappa_bar(2).ch().neg();
    let win = Window {
        xi_lo: rat(-1, 2),
        xi_hi: rat(1, 2),
        eta_lo: rat(0, 1),
        eta_hi: rat(1, 16),
    };
    let mut prev = 0;
    for bound in 0..=4 {
        let n = wall_scan(&t, &win, bound).unwrap().walls.len();
        assert!(n >= prev);
        prev = n;
    }
    assert_eq!(prev, 1);
}
