//! The Carlitz module, its exponential, and Bernoulli-Carlitz numbers.

use super::*;
use crate::basealg::Field;
use crate::carlitz::{
    bernoulli_carlitz_table, carlitz_exp, carlitz_factorial, carlitz_phi, is_eisenstein, omega_minpoly, torsion_poly,
};

pub(super) fn checks() -> Vec<Check> {
    let c = |name, run| Check { suite: "carlitz", name, run };
    vec![
        c("phi_ring_homomorphism", phi_ring_homomorphism),
        c("phi_fq_linear", phi_fq_linear),
        c("exp_functional_equation", exp_functional_equation),
        c("inverse_exp_coefficients", inverse_exp_coefficients),
        c("torsion_separable", torsion_separable),
        c("omega_eisenstein", omega_eisenstein),
    ]
}

fn phi_ring_homomorphism(_: Scale) -> Result<(), String> {
    for q in [2, 3] {
        let f = gf(q);
        let polys: Vec<APoly> = APoly::below_degree(f, 3).collect();
        for a in &polys {
            for b in &polys {
                let prod = carlitz_phi(&a.mul(b));
                ensure(prod == carlitz_phi(a).compose(&carlitz_phi(b)), || format!("Phi_({a})({b}) != Phi_a o Phi_b"))?;
                let sum = carlitz_phi(&a.add(b));
                ensure(sum == carlitz_phi(a).add(&carlitz_phi(b)), || format!("Phi_({a}+{b}) != Phi_a + Phi_b"))?;
            }
        }
    }
    Ok(())
}

fn is_q_power(mut j: usize, q: usize) -> bool {
    if j == 0 {
        return false;
    }
    while j.is_multiple_of(q) {
        j /= q;
    }
    j == 1
}

fn phi_fq_linear(_: Scale) -> Result<(), String> {
    for q in [2, 3, 4] {
        let f = gf(q);
        for a in APoly::below_degree(f, 3) {
            let p = carlitz_phi(&a).to_x_poly();
            for (j, c) in p.coeffs().iter().enumerate() {
                ensure(c.is_zero() || is_q_power(j, q as usize), || format!("Phi_({a}) has x^{j}"))?;
            }
        }
    }
    Ok(())
}

fn exp_functional_equation(_: Scale) -> Result<(), String> {
    for q in [2u64, 3] {
        let f = gf(q);
        let n = q.pow(2) as i64 + 1;
        let e = lift(carlitz_exp(f, n), "exp")?;
        for s in ["T", "T+1", "T^2"] {
            let a = lift(crate::basealg::parse_a_poly(s, f), "parse")?;
            let lhs = carlitz_phi(&a).apply(&e, |c| TruncSeries::constant(RatFun::from_poly(c.clone()), Var::X, n));
            let az = TruncSeries::monomial(RatFun::from_poly(a.clone()), 1, Var::X, n);
            let rhs = lift(e.compose(&az), "compose")?;
            ensure(lhs.agrees_with(&rhs) && lhs.prec() >= n, || format!("q={q}: Phi_{s}(e_C(z)) != e_C({s} z)"))?;
        }
    }
    Ok(())
}

/// `1 / e_C` by the triangular recursion `e * g = 1`, independent of the
/// series inverse.
fn inverse_by_recursion(field: &'static GaloisField, n: usize) -> Result<Vec<RatFun>, String> {
    // z / e_C(z) = sum g_k z^k, e_C(z) / z = sum e_(k+1) z^k
    let e = lift(carlitz_exp(field, n as i64 + 2), "exp")?;
    let ec: Vec<RatFun> =
        (0..=n).map(|k| e.coeff(k as i64 + 1)).collect::<crate::Result<_>>().map_err(|e| e.to_string())?;
    let mut g = vec![RatFun::one(&field)];
    for k in 1..=n {
        let mut acc = RatFun::zero(&field);
        for i in 1..=k {
            acc = acc.add(&ec[i].mul(&g[k - i]));
        }
        g.push(acc.neg());
    }
    Ok(g)
}

fn inverse_exp_coefficients(scale: Scale) -> Result<(), String> {
    for q in [2u64, 3] {
        let f = gf(q);
        let top = scale.pick(4, 6) * (q - 1);
        let g = inverse_by_recursion(f, top as usize)?;
        let bc = lift(bernoulli_carlitz_table(f, top), "BC table")?;
        for n in 1..=top / (q - 1) {
            let k = n * (q - 1);
            let pi_k = RatFun::from_poly(carlitz_factorial(f, k));
            let ratio = bc[k as usize].value.div(&pi_k).ok_or("Pi(k) = 0")?;
            ensure(g[k as usize] == ratio, || format!("q={q} k={k}: [z^(k-1)] 1/e_C != BC_k/Pi(k)"))?;
        }
        // the vanishing half: k not divisible by q - 1
        for k in (1..=top).filter(|k| k % (q - 1) != 0) {
            ensure(bc[k as usize].value.is_zero(), || format!("q={q}: BC_{k} != 0"))?;
        }
    }
    Ok(())
}

fn torsion_separable(_: Scale) -> Result<(), String> {
    for (q, pis) in [(2u64, &["T", "T+1", "T^2+T+1"][..]), (3, &["T", "T^2+1"][..])] {
        let f = gf(q);
        for s in pis {
            let pi = lift(crate::basealg::parse_a_poly(s, f), "parse")?;
            for n in 1..=2 {
                let t = lift(torsion_poly(&pi, n), "torsion")?;
                let d = t.derivative();
                let want = Poly::constant(RatFun::from_poly(pi.pow(n as u64)), Var::X);
                ensure(d == want, || format!("Phi_({s})^{n}' = {d}"))?;
            }
        }
    }
    Ok(())
}

pub(super) fn primes_up_to(q: u64, d: usize) -> Vec<APoly> {
    let f = gf(q);
    (1..=d).flat_map(|k| APoly::monic_enumerate(f, k)).filter(|p| p.is_irreducible().unwrap_or(false)).collect()
}

fn omega_eisenstein(_: Scale) -> Result<(), String> {
    for q in [2u64, 3] {
        for pi in primes_up_to(q, 2) {
            for n in 1..=2 {
                let m = lift(omega_minpoly(&pi, n), "minpoly")?;
                ensure(is_eisenstein(&m, &pi), || format!("q={q}: minpoly of omega_{n} for {pi} not Eisenstein"))?;
                let t = lift(torsion_poly(&pi, n), "torsion")?;
                ensure(lift(t.rem_monic(&m), "rem")?.is_zero(), || format!("minpoly does not divide Phi_({pi}^{n})"))?;
            }
        }
    }
    Ok(())
}
