//! Base arithmetic: finite fields, rational functions, series, norms.

use super::*;
use crate::basealg::{quotient_norm, Field};

pub(super) fn checks() -> Vec<Check> {
    let c = |name, run| Check { suite: "basealg", name, run };
    vec![
        c("field_axioms", field_axioms),
        c("ratfun_canonical", ratfun_canonical),
        c("series_inverse", series_inverse),
        c("series_compose_assoc", series_compose_assoc),
        c("quotient_norm_multiplicative", quotient_norm_multiplicative),
        c("monic_enumerate_counts", monic_enumerate_counts),
    ]
}

fn field_axioms(scale: Scale) -> Result<(), String> {
    let sizes: &[u64] = scale.pick(&[2, 3, 4, 5], &[2, 3, 4, 5, 7, 8, 9]);
    for &q in sizes {
        let f = gf(q);
        let els: Vec<FqElem> = f.elements().collect();
        for a in &els {
            if !a.is_zero() {
                let i = a.inv().ok_or_else(|| format!("q={q}: {a} has no inverse"))?;
                ensure(a.mul(&i).is_one(), || format!("q={q}: {a} * {a}^-1 != 1"))?;
            }
            for b in &els {
                ensure(a.add(b) == b.add(a) && a.mul(b) == b.mul(a), || format!("q={q}: not commutative"))?;
                for c in &els {
                    ensure(a.add(b).add(c) == a.add(&b.add(c)), || format!("q={q}: + not associative"))?;
                    ensure(a.mul(b).mul(c) == a.mul(&b.mul(c)), || format!("q={q}: * not associative"))?;
                    ensure(a.mul(&b.add(c)) == a.mul(b).add(&a.mul(c)), || format!("q={q}: not distributive"))?;
                }
            }
        }
    }
    Ok(())
}

fn ratfun_canonical(scale: Scale) -> Result<(), String> {
    let mut rng = rng_for("ratfun_canonical");
    for q in [2, 3, 5] {
        let f = gf(q);
        for _ in 0..scale.pick(20, 100) {
            let a = rand_ratfun(f, &mut rng, 4);
            let b = rand_nonzero_ratfun(f, &mut rng, 4);
            let back = a.mul(&b).div(&b).ok_or("division by nonzero failed")?;
            ensure(back == a, || format!("({a})*({b})/({b}) = {back}"))?;
        }
    }
    Ok(())
}

fn series_inverse(scale: Scale) -> Result<(), String> {
    let mut rng = rng_for("series_inverse");
    for q in [2, 3] {
        let f = gf(q);
        for _ in 0..scale.pick(20, 100) {
            let mut s = rand_series(f, &mut rng, 0, 10, 2);
            if s.coeff(0).map(|c| c.is_zero()).unwrap_or(true) {
                s = s.add_const(&RatFun::one(&f));
            }
            let i = lift(s.inv(), "inverse")?;
            let one = TruncSeries::constant(RatFun::one(&f), Var::X, 10);
            ensure(s.mul(&i).agrees_with(&one), || format!("f * f^-1 != 1 for {s}"))?;
        }
    }
    Ok(())
}

fn series_compose_assoc(scale: Scale) -> Result<(), String> {
    let mut rng = rng_for("series_compose_assoc");
    let f = gf(2);
    for _ in 0..scale.pick(5, 20) {
        let a = rand_series(f, &mut rng, 0, 6, 1);
        let b = rand_series(f, &mut rng, 1, 6, 1);
        let c = rand_series(f, &mut rng, 1, 6, 1);
        if b.is_zero() || c.is_zero() || b.valuation() != Some(1) || c.valuation() != Some(1) {
            continue;
        }
        let lhs = lift(lift(a.compose(&b), "compose")?.compose(&c), "compose")?;
        let rhs = lift(a.compose(&lift(b.compose(&c), "compose")?), "compose")?;
        ensure(lhs.agrees_with(&rhs), || format!("composition not associative on {a}, {b}, {c}"))?;
    }
    Ok(())
}

fn quotient_norm_multiplicative(scale: Scale) -> Result<(), String> {
    let mut rng = rng_for("quotient_norm_multiplicative");
    for q in [2, 3] {
        let f = gf(q);
        let mut done = 0;
        while done < scale.pick(10, 30) {
            let d = rng.gen_range(1..=9);
            let m = rand_monic(f, &mut rng, d);
            if !m.gcd(&m.derivative()).is_one_poly() {
                continue;
            }
            let a = rand_apoly(f, &mut rng, d + 2);
            let b = rand_apoly(f, &mut rng, d + 2);
            let nab = lift(quotient_norm(&m, &a.mul(&b)), "norm")?;
            let na = lift(quotient_norm(&m, &a), "norm")?;
            let nb = lift(quotient_norm(&m, &b), "norm")?;
            ensure(nab == na.mul(&nb), || format!("norm mod {m} not multiplicative on {a}, {b}"))?;
            done += 1;
        }
    }
    Ok(())
}

fn monic_enumerate_counts(scale: Scale) -> Result<(), String> {
    for q in [2u64, 3, 4] {
        for d in 0..=scale.pick(3, 5) {
            let v = APoly::monic_enumerate(gf(q), d);
            ensure(v.len() as u64 == q.pow(d as u32), || format!("q={q} d={d}: {} entries", v.len()))?;
            ensure(v.iter().all(|a| a.is_monic() && a.degree() == Some(d)), || "entry not monic".into())?;
            let mut sorted = v.clone();
            sorted.sort();
            sorted.dedup();
            ensure(sorted.len() == v.len(), || format!("q={q} d={d}: repeated entries"))?;
        }
    }
    Ok(())
}
