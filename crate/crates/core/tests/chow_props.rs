use proptest::prelude::*;
use stabkit::chow::{
    ch_clifford, euler_pairing, euler_pairing_c0, ChernVector, Variety, P2, P3, Y5,
};
use stabkit::numerics::{det, int, rat, Rational};

fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

fn chern(x: Variety) -> impl Strategy<Value = ChernVector> {
    prop::collection::vec(rational(), x.dim() + 1).prop_map(move |c| ChernVector::from_coeffs(x, c))
}

#[test]
fn plane_gram_matrix() {
    let g: Vec<Vec<Rational>> = (0..3)
        .map(|i| (0..3).map(|j| euler_pairing_c0(i, j, 2)).collect())
        .collect();
    let expect = [[2, 3, 6], [3, 2, 3], [6, 3, 2]];
    for i in 0..3 {
        for j in 0..3 {
            assert_eq!(g[i][j], int(expect[i][j]));
        }
    }
    let cofactor = 2 * (2 * 2 - 3 * 3) - 3 * (3 * 2 - 3 * 6) + 6 * (3 * 3 - 2 * 6);
    assert_eq!(det(&g), int(cofactor));
    assert_eq!(det(&g), int(8));
}

#[test]
fn space_gram_is_translation_invariant() {
    for i in -6..=6 {
        for j in -6..=6 {
            assert_eq!(
                euler_pairing_c0(i, j, 3),
                euler_pairing_c0(0, j - i, 3),
                "({i}, {j})"
            );
        }
    }
}

proptest! {
    #[test]
    fn plane_riemann_roch_closed_form(a in -20i64..=20, b in -20i64..=20, c in -20i64..=20) {
        let coeffs = [a, b, c];
        let mut gram = int(0);
        for i in 0..3 {
            for j in 0..3 {
                gram += int(coeffs[i] * coeffs[j]) * euler_pairing_c0(i as i64, j as i64, 2);
            }
        }
        let ch = (0..3).fold(ChernVector::zero(P2), |acc, i| {
            acc.try_add(&ch_clifford(i as i64, 2).scale_int(coeffs[i])).unwrap()
        });
        let (c0, c1, c2) = (ch.ch(0), ch.ch(1), ch.ch(2));
        let closed = -(&c1 * &c1 - int(2) * &c0 * &c2 + &c0 * &c0 / int(2)) / int(8);
        prop_assert_eq!(gram, closed);
    }

    #[test]
    fn euler_pairing_is_twist_invariant_on_p3(v in chern(P3), w in chern(P3), k in -4i64..=4) {
        prop_assert_eq!(euler_pairing(&v.twist(k), &w.twist(k)).unwrap(), euler_pairing(&v, &w).unwrap());
    }

    #[test]
    fn euler_pairing_is_twist_invariant_on_y(v in chern(Y5), w in chern(Y5), k in -3i64..=3) {
        prop_assert_eq!(euler_pairing(&v.twist(k), &w.twist(k)).unwrap(), euler_pairing(&v, &w).unwrap());
    }

    #[test]
    fn euler_pairing_is_bilinear(u in chern(P3), v in chern(P3), w in chern(P3)) {
        let lhs = euler_pairing(&u, &v.try_add(&w).unwrap()).unwrap();
        prop_assert_eq!(lhs, euler_pairing(&u, &v).unwrap() + euler_pairing(&u, &w).unwrap());
    }
}
