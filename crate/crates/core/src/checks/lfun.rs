//! Zeta values and Stickelberger elements.

use super::*;
use crate::basealg::{Render, ResidueRing};
use crate::lfun::{
    character_product, power_sum, stickelberger_project, stickelberger_series, theta_at_one, theta_eval_char, zeta_neg,
    zeta_v_adic_neg, CharSpec, GroupRingElem, Place, ThetaPoly,
};

pub(super) fn checks() -> Vec<Check> {
    let c = |name, run| Check { suite: "lfun", name, run };
    vec![
        c("stratum_vanishing", stratum_vanishing),
        c("trivial_zeros", trivial_zeros),
        c("euler_factor_identity", euler_factor_identity),
        c("theta_worked_example", theta_worked_example),
        c("theta_tail_vanishing", theta_tail_vanishing),
        c("character_factorization", character_factorization),
        c("projection_compatible", projection_compatible),
    ]
}

fn stratum_vanishing(scale: Scale) -> Result<(), String> {
    for q in [2u64, 3] {
        let f = gf(q);
        for k in 1..=scale.pick(8, 12) {
            for d in 0..=k as usize + 2 {
                if (q - 1) * d as u64 > k {
                    let s = power_sum(f, d, k);
                    ensure(s.is_zero(), || format!("q={q}: S_{d}({k}) = {s}"))?;
                }
            }
        }
    }
    Ok(())
}

pub(crate) fn trivial_zeros(_: Scale) -> Result<(), String> {
    for q in [2u64, 3, 4] {
        for k in (1..=12).filter(|k| k % (q - 1) == 0) {
            let z = lift(zeta_neg(gf(q), k), "zeta")?;
            ensure(z.is_zero(), || format!("q={q}: zeta(-{k}) = {z}"))?;
        }
    }
    ensure(lift(zeta_neg(gf(3), 1), "zeta")?.is_one_poly(), || "zeta(-1) != 1 at q = 3".into())
}

pub(crate) fn euler_factor_identity(scale: Scale) -> Result<(), String> {
    let mut rng = rng_for("euler_factor_identity");
    let mut done = 0;
    while done < scale.pick(8, 20) {
        let q = [2u64, 3][rng.gen_range(0..2)];
        let d = rng.gen_range(1..=2);
        let pi = rand_monic(gf(q), &mut rng, d);
        if !pi.is_irreducible().unwrap_or(false) {
            continue;
        }
        let k = rng.gen_range(1..=8);
        // zeta_v_adic_neg fails internally when its two computations differ
        lift(zeta_v_adic_neg(&pi, k), &format!("q={q} pi={pi} k={k}"))?;
        done += 1;
    }
    Ok(())
}

pub(crate) fn worked_theta(level: u32) -> Result<ThetaPoly, String> {
    let f = gf(2);
    let pi = lift(crate::basealg::parse_a_poly("T^2+T+1", f), "parse")?;
    lift(stickelberger_series(&pi, level, &[Place::Infinity], &[APoly::t(f)], 12), "theta")
}

/// `Theta = 1 + (g^2 - g) u + (-1 + g - g^2) u^2`, with its trivial and
/// cubic character values and `Theta(1) = 0`.
pub(crate) fn theta_worked_example(_: Scale) -> Result<(), String> {
    let th = worked_theta(1)?;
    let r = lift(th.ring(), "ring")?;
    let t = APoly::t(gf(2));
    let g = GroupRingElem::basis(&r, &t);
    let g2 = lift(g.mul(&g), "mul")?;
    let one = GroupRingElem::one(&r);
    let c1 = lift(g2.sub(&g), "sub")?;
    let c2 = lift(lift(one.neg().add(&g), "add")?.sub(&g2), "sub")?;
    ensure(th.coeffs == vec![one, c1, c2], || format!("Theta = {th}"))?;
    let triv = CharSpec { order: 1, generators: vec![t.clone()], exponents: vec![0] };
    let v = lift(theta_eval_char(&th, &triv), "chi")?;
    ensure(v.render() == "-u^2+1", || format!("trivial character gives {}", v.render()))?;
    let cubic = CharSpec { order: 3, generators: vec![t], exponents: vec![1] };
    let v = lift(theta_eval_char(&th, &cubic), "chi")?;
    let want = ["1", "-2*x-1", "2*x"];
    let got: Vec<String> = v.coeffs().iter().map(|c| c.render()).collect();
    ensure(got == want, || format!("cubic character gives {got:?}"))?;
    ensure(lift(theta_at_one(&th), "theta(1)")?.is_zero(), || "Theta(1) != 0".into())
}

/// Recomputes `c'_n` without truncation to the polynomial and checks
/// `c'_n = 0` for `3 <= n <= 12`.
pub(crate) fn theta_tail_vanishing(_: Scale) -> Result<(), String> {
    let f = gf(2);
    let pi = lift(crate::basealg::parse_a_poly("T^2+T+1", f), "parse")?;
    let ring = lift(ResidueRing::new(&pi, 1), "ring")?;
    let mut c = lift(crate::lfun::partial_zeta_coeffs(&ring, std::slice::from_ref(&pi), 12), "partial zeta")?;
    let fr = GroupRingElem::scaled_basis(&ring, &APoly::t(f), 2);
    for n in (1..=12).rev() {
        c[n] = lift(c[n].sub(&lift(fr.mul(&c[n - 1]), "mul")?), "sub")?;
    }
    for (n, cn) in c.iter().enumerate().skip(3) {
        ensure(cn.is_zero(), || format!("c'_{n} = {cn}"))?;
    }
    Ok(())
}

pub(crate) fn character_factorization(_: Scale) -> Result<(), String> {
    let th = worked_theta(1)?;
    let p = lift(character_product(&th), "character product")?;
    // (1 - u^2) (1 + u^2 - 6u^3 + 4u^4), the second factor being the norm
    // of 1 - (1 + 2w)u + 2wu^2 from Z[w] to Z
    ensure(p.render() == "-4*u^6+6*u^5+3*u^4-6*u^3+1", || format!("product {}", p.render()))
}

pub(crate) fn projection_compatible(_: Scale) -> Result<(), String> {
    let th2 = worked_theta(2)?;
    let th1 = worked_theta(1)?;
    let th0 = worked_theta(0)?;
    ensure(lift(stickelberger_project(&th2, 1), "project")? == th1, || "level 2 -> 1 differs from native".into())?;
    ensure(lift(stickelberger_project(&th1, 0), "project")? == th0, || "level 1 -> 0 differs from native".into())?;
    ensure(lift(stickelberger_project(&th2, 0), "project")? == th0, || "level 2 -> 0 differs from native".into())?;
    let lhs = lift(theta_at_one(&lift(stickelberger_project(&th2, 1), "project")?), "theta(1)")?;
    let rhs = lift(lift(theta_at_one(&th2), "theta(1)")?.project(&lift(th1.ring(), "ring")?), "project")?;
    ensure(lhs == rhs, || "projection does not commute with Theta(1)".into())
}
