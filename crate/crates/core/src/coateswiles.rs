//! Hasse-Teichmuller derivatives, logarithmic derivatives and the
//! Coates-Wiles homomorphisms `delta_k`, read as coefficients of
//! `(dlog f)(e_C(x)) = sum_k delta_k x^(k-1)`.

use rayon::prelude::*;

use crate::basealg::{APoly, Field, GaloisField, RatFun, Render, Ring, TruncSeries};
use crate::carlitz::{carlitz_exp, inverse_exp};
use crate::coleman::{ColemanSeries, XRat};
use crate::{Error, Result};

/// `Delta_j(sum c_n x^n) = sum C(n + j, j) c_(n+j) x^n`.
pub fn ht_derivative(j: u32, f: &TruncSeries<RatFun>) -> TruncSeries<RatFun> {
    f.hasse_derivative(j)
}

/// `f' / f` for a truncated series.
pub fn dlog(f: &TruncSeries<RatFun>) -> Result<TruncSeries<RatFun>> {
    if f.is_zero() {
        return Err(Error::DivisionByZero);
    }
    f.derivative().div(f)
}

/// `f' / f` for an exact rational function of `x`.
pub fn dlog_exact(f: &XRat) -> Result<XRat> {
    if f.num().is_zero() {
        return Err(Error::DivisionByZero);
    }
    let (n, d) = (f.num(), f.den());
    let top = n.derivative().mul(d).sub(&n.mul(&d.derivative()));
    XRat::new(top, n.mul(d))
}

/// `(dlog f)(e_C(x))` certified mod `x^prec`.
pub fn cw_series(f: &ColemanSeries, prec: i64) -> Result<TruncSeries<RatFun>> {
    let (field, dl) = match f {
        ColemanSeries::Exact(r) => {
            let field = *r.den().base();
            // dlog has at most a simple pole, so prec + 1 terms suffice
            (field, dlog_exact(r)?.to_series(prec)?)
        }
        ColemanSeries::Truncated(s) => (*s.base(), dlog(s)?),
    };
    // the powers e_C^(-1) lose two places of precision
    let e = carlitz_exp(field, prec.max(0) + 3)?;
    dl.compose(&e)
}

/// `delta_k(f) = [x^(k-1)] (dlog f)(e_C(x))`.
pub fn coates_wiles(k: u32, f: &ColemanSeries) -> Result<RatFun> {
    if k == 0 {
        return Err(Error::InvalidArgument("Coates-Wiles index must be positive".into()));
    }
    let s = cw_series(f, k as i64)?;
    s.coeff(k as i64 - 1)
}

#[derive(Clone, Debug, PartialEq)]
pub struct CWRow {
    pub k: u32,
    pub lhs: RatFun,
    pub rhs: RatFun,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CWReport {
    pub q: u32,
    pub a: APoly,
    pub b: APoly,
    pub rows: Vec<CWRow>,
}

impl CWReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.equal)
    }
}

/// Checks `delta_k(Phi_a / Phi_b) = (a^k - b^k) BC_k / Pi(k)` for
/// `1 <= k <= kmax`.  The left side comes from `dlog` and composition with
/// `e_C`, the right side from the Bernoulli-Carlitz table; rows are
/// evaluated in parallel on the current rayon pool.
pub fn cw_verify(a: &APoly, b: &APoly, kmax: u32) -> Result<CWReport> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::InvalidArgument("a and b must be nonzero".into()));
    }
    let field: &'static GaloisField = a.field();
    let f = ColemanSeries::Exact(XRat::phi_ratio(a, b)?);
    let series = cw_series(&f, kmax as i64)?;
    let bc = crate::carlitz::bernoulli_carlitz_table(field, kmax as u64)?;
    let ar = RatFun::from_poly(a.clone());
    let br = RatFun::from_poly(b.clone());
    let rows = (1..=kmax)
        .into_par_iter()
        .map(|k| {
            let lhs = series.coeff(k as i64 - 1)?;
            let entry = &bc[k as usize];
            let ratio = entry.value.div(&RatFun::from_poly(entry.factorial.clone())).expect("Pi(k) nonzero");
            let rhs = ar.pow(k as u64).sub(&br.pow(k as u64)).mul(&ratio);
            let equal = lhs == rhs;
            Ok(CWRow { k, lhs, rhs, equal })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CWReport { q: field.q(), a: a.clone(), b: b.clone(), rows })
}

/// `[x^(k-1)] (1 / e_C(x)) = BC_k / Pi(k)`, read directly.
pub fn inverse_exp_coefficient(field: &'static GaloisField, k: u64) -> Result<RatFun> {
    inverse_exp(field, k)?.coeff(k as i64 - 1)
}

impl std::fmt::Display for CWRow {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "k={} lhs={} rhs={} equal={}", self.k, self.lhs.render(), self.rhs.render(), self.equal)
    }
}

/// The additive polynomial `Phi_a(x)` as an exact Coleman series.
pub fn phi_series(a: &APoly) -> ColemanSeries {
    ColemanSeries::Exact(XRat::from_poly(crate::carlitz::carlitz_phi(a).to_x_poly()))
}
