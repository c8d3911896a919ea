//! Carlitz cyclotomic fields: Galois action, norms, cyclotomic units.

use std::collections::BTreeMap;

use super::*;
use crate::cyclotomic::{field_norm, galois_act, omega, upsilon, valuation_at_p, CycloElem, CycloField};

pub(super) fn checks() -> Vec<Check> {
    let c = |name, run| Check { suite: "cyclotomic", name, run };
    vec![
        c("galois_group_action", galois_group_action),
        c("norm_transitivity", norm_transitivity),
        c("tower_norm_compatible", tower_norm_compatible),
        c("unit_criterion", unit_criterion),
    ]
}

fn rand_elem(field: &std::sync::Arc<CycloField>, rng: &mut ChaCha8Rng, cdeg: usize) -> CycloElem {
    let f = field.pi().field();
    let deg = field.degree().saturating_sub(1);
    let c = (0..=deg).map(|_| rand_ratfun(f, rng, cdeg)).collect();
    CycloElem::new(field, Poly::new(f, Var::X, c))
}

fn galois_group_action(scale: Scale) -> Result<(), String> {
    let mut rng = rng_for("galois_group_action");
    let pi = lift(crate::basealg::parse_a_poly("T^2+T+1", gf(2)), "parse")?;
    let k = lift(CycloField::new(&pi, 1), "field")?;
    let g = k.galois_group();
    for _ in 0..scale.pick(2, 5) {
        let e = rand_elem(&k, &mut rng, 2);
        for s in &g {
            for t in &g {
                let lhs = lift(galois_act(&k.residues().mul(s, t), &e), "act")?;
                let rhs = lift(galois_act(s, &lift(galois_act(t, &e), "act")?), "act")?;
                ensure(lhs == rhs, || format!("(st)e != s(te) for s={s}, t={t}"))?;
            }
        }
    }
    Ok(())
}

fn norm_transitivity(scale: Scale) -> Result<(), String> {
    let mut rng = rng_for("norm_transitivity");
    let cases: &[(&str, usize)] = &[("T", scale.pick(5, 20)), ("T^2+T+1", scale.pick(1, 2))];
    for &(p, count) in cases {
        let pi = lift(crate::basealg::parse_a_poly(p, gf(2)), "parse")?;
        let k0 = lift(CycloField::new(&pi, 0), "field")?;
        let k1 = lift(CycloField::new(&pi, 1), "field")?;
        let k2 = lift(CycloField::new(&pi, 2), "field")?;
        for _ in 0..count {
            let e = rand_elem(&k2, &mut rng, 1);
            let direct = lift(field_norm(&e, &k0), "norm")?;
            let staged = lift(field_norm(&lift(field_norm(&e, &k1), "norm")?, &k0), "norm")?;
            ensure(direct == staged, || format!("pi={p}: N_(2/0) != N_(1/0) N_(2/1)"))?;
        }
    }
    Ok(())
}

fn tower_norm_compatible(_: Scale) -> Result<(), String> {
    for q in [2u64, 3] {
        for pi in super::carlitz::primes_up_to(q, 2) {
            let k1 = lift(CycloField::new(&pi, 1), "field")?;
            let k2 = lift(CycloField::new(&pi, 2), "field")?;
            let n = lift(field_norm(&omega(&k2), &k1), "norm")?;
            ensure(n == omega(&k1), || format!("q={q} pi={pi}: N(omega_2) != omega_1"))?;
            let k0 = lift(CycloField::new(&pi, 0), "field")?;
            let n0 = lift(field_norm(&omega(&k1), &k0), "norm")?;
            ensure(n0.as_scalar() == Some(RatFun::from_poly(pi.clone())), || format!("q={q}: N(omega_1) != pi"))?;
        }
    }
    Ok(())
}

/// `v_p(prod (sigma omega)^(c_sigma)) = sum c_sigma` for every `|c| <= 2`
/// over the order-3 group of `pi = T^2 + T + 1`, `q = 2`.
pub(crate) fn unit_criterion(_: Scale) -> Result<(), String> {
    let pi = lift(crate::basealg::parse_a_poly("T^2+T+1", gf(2)), "parse")?;
    let k = lift(CycloField::new(&pi, 1), "field")?;
    let g = k.galois_group();
    let range = -2i64..=2;
    for a in range.clone() {
        for b in range.clone() {
            for c in range.clone() {
                let cs = [a, b, c];
                let map: BTreeMap<APoly, i64> = g.iter().cloned().zip(cs).collect();
                let u = lift(upsilon(&map, &k), "upsilon")?;
                let v = lift(valuation_at_p(&u), "valuation")?;
                let sum: i64 = cs.iter().sum();
                ensure(v == Some(sum), || format!("c={cs:?}: valuation {v:?} != {sum}"))?;
            }
        }
    }
    Ok(())
}
