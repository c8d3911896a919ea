//! Coleman norm operator: fixed points, multiplicativity, compatibility with
//! evaluation at torsion points.

use super::*;
use crate::carlitz::{carlitz_phi, torsion_poly};
use crate::coleman::{coleman_norm, decompose_poly, eval_at_omega, norm_poly, torsion_product, ColemanSeries, XRat};
use crate::cyclotomic::{field_norm, CycloField};

pub(super) fn checks() -> Vec<Check> {
    let c = |name, run| Check { suite: "coleman", name, run };
    vec![
        c("coleman_fixed_points", coleman_fixed_points),
        c("coleman_ratio_invariance", coleman_ratio_invariance),
        c("coleman_multiplicative", coleman_multiplicative),
        c("decompose_round_trip", decompose_round_trip),
        c("defining_identity", defining_identity),
        c("ev_norm_compatible", ev_norm_compatible),
    ]
}

fn parse(s: &str, q: u64) -> Result<APoly, String> {
    lift(crate::basealg::parse_a_poly(s, gf(q)), "parse")
}

/// `a` ranging over `T, T + 1, T^2` and polynomials of degree `<= 2`
/// coprime to `pi`.
fn fixed_point_inputs(pi: &APoly) -> Vec<APoly> {
    let f = pi.field();
    let mut v: Vec<APoly> =
        ["T", "T+1", "T^2"].iter().map(|s| crate::basealg::parse_a_poly(s, f).expect("literal")).collect();
    v.extend(APoly::below_degree(f, 3).filter(|a| a.degree() == Some(2)));
    v.sort();
    v.dedup();
    v.retain(|a| !a.rem_monic(pi).expect("monic").is_zero());
    v
}

pub(crate) fn coleman_fixed_points(_: Scale) -> Result<(), String> {
    for p in ["T", "T^2+T+1"] {
        let pi = parse(p, 2)?;
        for a in fixed_point_inputs(&pi) {
            let phi = carlitz_phi(&a).to_x_poly();
            let f = ColemanSeries::Exact(XRat::from_poly(phi));
            let n = lift(coleman_norm(&f, &pi), "norm")?;
            ensure(n == f, || format!("pi={p}: N(Phi_({a})) != Phi_({a})"))?;
        }
    }
    Ok(())
}

fn coleman_ratio_invariance(_: Scale) -> Result<(), String> {
    for (q, p) in [(2, "T"), (2, "T^2+T+1"), (3, "T")] {
        let pi = parse(p, q)?;
        let inputs = fixed_point_inputs(&pi);
        for a in &inputs {
            for b in inputs.iter().take(3) {
                let f = ColemanSeries::Exact(lift(XRat::phi_ratio(a, b), "ratio")?);
                ensure(lift(coleman_norm(&f, &pi), "norm")? == f, || format!("pi={p}: N(Phi_{a}/Phi_{b}) moved"))?;
            }
        }
    }
    Ok(())
}

fn rand_xrat(field: &'static GaloisField, rng: &mut ChaCha8Rng) -> Result<XRat, String> {
    let num = rand_x_unit(field, rng, 2, 1);
    let den = rand_x_unit(field, rng, 2, 1);
    lift(XRat::new(num, den), "xrat")
}

pub(crate) fn coleman_multiplicative(scale: Scale) -> Result<(), String> {
    let mut rng = rng_for("coleman_multiplicative");
    let f = gf(2);
    for p in ["T", "T^2+T+1"] {
        let pi = parse(p, 2)?;
        for _ in 0..scale.pick(4, 10) {
            let a = rand_xrat(f, &mut rng)?;
            let b = rand_xrat(f, &mut rng)?;
            let na = lift(coleman_norm(&ColemanSeries::Exact(a.clone()), &pi), "norm")?;
            let nb = lift(coleman_norm(&ColemanSeries::Exact(b.clone()), &pi), "norm")?;
            let nab = lift(coleman_norm(&ColemanSeries::Exact(a.mul(&b)), &pi), "norm")?;
            ensure(nab == na.mul(&nb), || format!("pi={p}: N(fg) != N(f)N(g) for f={a}, g={b}"))?;
        }
    }
    Ok(())
}

fn decompose_round_trip(scale: Scale) -> Result<(), String> {
    let mut rng = rng_for("decompose_round_trip");
    for (q, p) in [(2, "T"), (2, "T^2+T+1"), (3, "T")] {
        let pi = parse(p, q)?;
        let phi = lift(torsion_poly(&pi, 1), "torsion")?;
        for _ in 0..scale.pick(5, 20) {
            let deg = rng.gen_range(0..=5);
            let h = rand_x_poly(gf(q), &mut rng, deg, 2);
            let back = lift(decompose_poly(&h.compose(&phi), &pi), "decompose")?;
            ensure(back == h, || format!("pi={p}: decompose(h o Phi_pi) != h"))?;
        }
    }
    Ok(())
}

fn defining_identity(scale: Scale) -> Result<(), String> {
    let mut rng = rng_for("defining_identity");
    let prec = 12;
    for (q, p) in [(2, "T"), (2, "T+1"), (3, "T")] {
        let pi = parse(p, q)?;
        let phi = lift(torsion_poly(&pi, 1), "torsion")?;
        let phi_s = TruncSeries::from_poly(&phi, prec);
        for _ in 0..scale.pick(3, 10) {
            let f = rand_x_unit(gf(q), &mut rng, prec as usize - 1, 1);
            let s = ColemanSeries::Truncated(TruncSeries::from_poly(&f, prec));
            let n = lift(lift(coleman_norm(&s, &pi), "norm")?.to_series(prec), "series")?;
            let lhs = lift(n.compose(&phi_s), "compose")?;
            let rhs = TruncSeries::from_poly(&lift(torsion_product(&f, &pi), "product")?, prec);
            ensure(lhs.agrees_with(&rhs) && lhs.prec() >= prec, || format!("pi={p}: (N f)(Phi_pi) != prod f(x+u)"))?;
            let exact = lift(norm_poly(&f, &pi), "norm")?;
            ensure(n.agrees_with(&TruncSeries::from_poly(&exact, prec)), || "truncated and exact norms differ".into())?;
        }
    }
    Ok(())
}

pub(crate) fn ev_norm_compatible(scale: Scale) -> Result<(), String> {
    let mut rng = rng_for("ev_norm_compatible");
    let pi = parse("T", 2)?;
    let k1 = lift(CycloField::new(&pi, 1), "field")?;
    let k2 = lift(CycloField::new(&pi, 2), "field")?;
    for _ in 0..scale.pick(5, 10) {
        let deg = rng.gen_range(0..=4);
        let f = ColemanSeries::Exact(XRat::from_poly(rand_x_poly(gf(2), &mut rng, deg, 2)));
        let lhs = lift(field_norm(&lift(eval_at_omega(&f, &k2), "ev")?, &k1), "norm")?;
        let rhs = lift(eval_at_omega(&lift(coleman_norm(&f, &pi), "coleman")?, &k1), "ev")?;
        ensure(lhs == rhs, || format!("N_(2/1)(f(omega_2)) != (N f)(omega_1) for f={f:?}"))?;
    }
    Ok(())
}
