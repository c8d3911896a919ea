//! Randomized algebraic invariants driven by proptest.

use carlitz_core::basealg::{parse_a_poly, parse_ratfun, Field, Ring};
use carlitz_core::carlitz::carlitz_phi;
use carlitz_core::lfun::{power_sum, zeta_neg};
use carlitz_core::{APoly, FqElem, GaloisField, Poly, RatFun, Render, TruncSeries, Var};
use proptest::prelude::*;

fn field(q: u64) -> &'static GaloisField {
    GaloisField::get(q).expect("prime power")
}

fn apoly(f: &'static GaloisField, c: &[u32]) -> APoly {
    Poly::new(f, Var::T, c.iter().map(|&v| f.elem(v % f.q())).collect())
}

fn q_and_polys(n: usize, maxlen: usize) -> impl Strategy<Value = (u64, Vec<Vec<u32>>)> {
    prop::sample::select(vec![2u64, 3, 4, 5, 9])
        .prop_flat_map(move |q| (Just(q), prop::collection::vec(prop::collection::vec(0..q as u32, 0..maxlen), n)))
}

fn monic(f: &'static GaloisField, c: &[u32]) -> APoly {
    let mut v: Vec<FqElem> = c.iter().map(|&x| f.elem(x % f.q())).collect();
    v.push(f.one());
    Poly::new(f, Var::T, v)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn division_with_remainder((q, ps) in q_and_polys(2, 7)) {
        let f = field(q);
        let a = apoly(f, &ps[0]);
        let d = monic(f, &ps[1]);
        let (quo, rem) = a.div_rem_monic(&d).unwrap();
        prop_assert_eq!(quo.mul(&d).add(&rem), a);
        prop_assert!(rem.degree().is_none_or(|r| Some(r) < d.degree()));
    }

    #[test]
    fn bezout_identity((q, ps) in q_and_polys(2, 6)) {
        let f = field(q);
        let a = apoly(f, &ps[0]);
        let b = apoly(f, &ps[1]);
        let (g, s, t) = a.ext_gcd(&b);
        prop_assert_eq!(s.mul(&a).add(&t.mul(&b)), g.clone());
        if !g.is_zero() {
            prop_assert!(a.rem(&g).unwrap().is_zero());
            prop_assert!(b.rem(&g).unwrap().is_zero());
        }
    }

    #[test]
    fn polynomial_text_round_trips((q, ps) in q_and_polys(1, 8)) {
        let f = field(q);
        let a = apoly(f, &ps[0]);
        prop_assert_eq!(parse_a_poly(&a.render(), f).unwrap(), a);
    }

    #[test]
    fn rational_functions_form_a_field((q, ps) in q_and_polys(4, 4)) {
        let f = field(q);
        let r = RatFun::new(apoly(f, &ps[0]), monic(f, &ps[1])).unwrap();
        let s = RatFun::new(apoly(f, &ps[2]), monic(f, &ps[3])).unwrap();
        prop_assert_eq!(parse_ratfun(&r.render(), f).unwrap(), r.clone());
        prop_assert_eq!(r.add(&s).mul(&s), r.mul(&s).add(&s.mul(&s)));
        prop_assert_eq!(r.add(&s).sub(&s), r.clone());
        if !r.is_zero() {
            prop_assert!(r.mul(&r.inv().unwrap()).is_one());
            prop_assert!(r.den().is_monic());
            prop_assert!(r.num().gcd(r.den()).is_one_poly());
        }
    }

    #[test]
    fn series_inverse((q, ps) in q_and_polys(1, 10), lead in 1u32..5) {
        let f = field(q);
        let mut c: Vec<FqElem> = vec![f.elem(1 + (lead - 1) % (f.q() - 1))];
        c.extend(ps[0].iter().map(|&v| f.elem(v)));
        let s = TruncSeries::new(f, Var::X, 0, c, 12);
        let prod = s.mul(&s.inv().unwrap());
        prop_assert!(prod.agrees_with(&TruncSeries::constant(f.one(), Var::X, 12)));
    }

    #[test]
    fn carlitz_action_is_a_ring_map((q, ps) in q_and_polys(2, 3)) {
        let f = field(q);
        let a = apoly(f, &ps[0]);
        let b = apoly(f, &ps[1]);
        prop_assert_eq!(carlitz_phi(&a.mul(&b)), carlitz_phi(&a).compose(&carlitz_phi(&b)));
        prop_assert_eq!(carlitz_phi(&a.add(&b)), carlitz_phi(&a).add(&carlitz_phi(&b)));
    }

    #[test]
    fn zeta_vanishes_on_multiples_of_q_minus_one(q in prop::sample::select(vec![2u64, 3, 4, 5]), m in 1u64..4) {
        let f = field(q);
        prop_assert!(zeta_neg(f, m * (q - 1)).unwrap().is_zero());
    }

    #[test]
    fn power_sums_vanish_above_the_stratum(q in prop::sample::select(vec![2u64, 3, 4]), k in 1u64..10) {
        let f = field(q);
        let d = (k / (q - 1)) as usize + 1;
        prop_assert!(power_sum(f, d, k).is_zero());
    }
}
