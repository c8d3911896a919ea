//! Hasse-Teichmuller derivatives and Coates-Wiles homomorphisms.

use super::*;
use crate::basealg::binomial_mod_p;
use crate::coateswiles::{cw_series, cw_verify, dlog, ht_derivative};
use crate::coleman::{star_action, ColemanSeries, XRat};

pub(super) fn checks() -> Vec<Check> {
    let c = |name, run| Check { suite: "coateswiles", name, run };
    vec![
        c("hasse_composition", hasse_composition),
        c("hasse_reconstruction", hasse_reconstruction),
        c("dlog_additive", dlog_additive),
        c("cw_series_shape", cw_series_shape),
        c("cw_theorem", cw_theorem),
        c("cw_equivariance", cw_equivariance),
    ]
}

fn hasse_composition(_: Scale) -> Result<(), String> {
    for q in [2u64, 3] {
        let f = gf(q);
        let p = f.p() as u64;
        let one = RatFun::one(&f);
        for n in 0..=12 {
            let xn = TruncSeries::monomial(one.clone(), n, Var::X, 20);
            for i in 0..=n as u32 {
                for j in 0..=(n as u32 - i) {
                    let lhs = ht_derivative(i, &ht_derivative(j, &xn));
                    let c = binomial_mod_p((i + j) as i64, i as i64, p);
                    let rhs = ht_derivative(i + j, &xn).scale(&RatFun::from_fq(f.from_int(c as i64)));
                    ensure(lhs.agrees_with(&rhs), || format!("q={q}: D_{i} D_{j} x^{n} != C(i+j,i) D_(i+j) x^{n}"))?;
                }
            }
        }
    }
    Ok(())
}

/// `f(x) = sum_j (Delta_j f)(0) x^j` on random series.
pub(crate) fn hasse_reconstruction(scale: Scale) -> Result<(), String> {
    let mut rng = rng_for("hasse_reconstruction");
    for q in [2, 3] {
        let f = gf(q);
        for _ in 0..scale.pick(20, 50) {
            let s = rand_series(f, &mut rng, 0, 10, 2);
            let coeffs: Vec<RatFun> =
                (0..10).map(|j| lift(ht_derivative(j as u32, &s).coeff(0), "coefficient")).collect::<Result<_, _>>()?;
            let rebuilt = TruncSeries::new(f, Var::X, 0, coeffs, 10);
            ensure(rebuilt.agrees_with(&s), || format!("q={q}: Hasse expansion does not rebuild {s}"))?;
        }
    }
    Ok(())
}

fn dlog_additive(scale: Scale) -> Result<(), String> {
    let mut rng = rng_for("dlog_additive");
    for q in [2, 3] {
        let f = gf(q);
        for _ in 0..scale.pick(10, 20) {
            let a = TruncSeries::from_poly(&rand_x_unit(f, &mut rng, 6, 2), 8);
            let b = TruncSeries::from_poly(&rand_x_unit(f, &mut rng, 6, 2), 8);
            let lhs = lift(dlog(&a.mul(&b)), "dlog")?;
            let rhs = lift(dlog(&a), "dlog")?.add(&lift(dlog(&b), "dlog")?);
            ensure(lhs.agrees_with(&rhs), || format!("q={q}: dlog(fg) != dlog f + dlog g"))?;
        }
    }
    Ok(())
}

fn cw_series_shape(_: Scale) -> Result<(), String> {
    let f = gf(3);
    let polys: Vec<APoly> = APoly::below_degree(f, 2).filter(|a| !a.is_zero()).collect();
    for a in &polys {
        for b in polys.iter().filter(|b| *b != a) {
            let c = ColemanSeries::Exact(lift(XRat::phi_ratio(a, b), "ratio")?);
            let s = lift(cw_series(&c, 10), "cw series")?;
            for (e, _) in s.terms() {
                ensure(e.rem_euclid(2) == 1, || format!("({a},{b}): nonzero coefficient at x^{e}"))?;
            }
        }
    }
    Ok(())
}

/// Pairs `(a, b)`, `a != b`, of nonzero polynomials with `deg <= d`.
pub(crate) fn cw_pairs(q: u64, d: usize) -> Vec<(APoly, APoly)> {
    let polys: Vec<APoly> = APoly::below_degree(gf(q), d + 1).filter(|a| !a.is_zero()).collect();
    let mut v = Vec::new();
    for a in &polys {
        for b in &polys {
            if a != b {
                v.push((a.clone(), b.clone()));
            }
        }
    }
    v
}

fn cw_theorem(scale: Scale) -> Result<(), String> {
    let cases: &[(u64, usize, u32)] = scale.pick(&[(2, 1, 6), (3, 1, 6)], &[(2, 2, 8), (3, 1, 12)]);
    for &(q, d, kmax) in cases {
        for (a, b) in cw_pairs(q, d) {
            let r = lift(cw_verify(&a, &b, kmax), "cw_verify")?;
            if let Some(row) = r.rows.iter().find(|r| !r.equal) {
                return Err(format!("q={q} a={a} b={b}: {row}"));
            }
        }
    }
    Ok(())
}

/// `delta_k(a * f) = a^k delta_k(f)` for `a` in `{T, T + 1}`, `k <= 6`.
pub(crate) fn cw_equivariance(scale: Scale) -> Result<(), String> {
    let mut rng = rng_for("cw_equivariance");
    let f = gf(2);
    let acts: Vec<APoly> = ["T", "T+1"].iter().map(|s| crate::basealg::parse_a_poly(s, f).expect("literal")).collect();
    for _ in 0..scale.pick(20, 100) {
        let deg = rng.gen_range(1..=4);
        let g = ColemanSeries::Exact(XRat::from_poly(rand_x_unit(f, &mut rng, deg, 2)));
        let base = lift(cw_series(&g, 6), "cw series")?;
        for a in &acts {
            let moved = lift(cw_series(&lift(star_action(a, &g), "star")?, 6), "cw series")?;
            for k in 1..=6i64 {
                let lhs = lift(moved.coeff(k - 1), "coefficient")?;
                let rhs = RatFun::from_poly(a.pow(k as u64)).mul(&lift(base.coeff(k - 1), "coefficient")?);
                ensure(lhs == rhs, || format!("a={a} k={k}: delta_k(a*f) != a^k delta_k(f)"))?;
            }
        }
    }
    Ok(())
}
