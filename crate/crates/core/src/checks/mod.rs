//! Property suites over every module, shared by the `selftest` and
//! `colemancheck` commands and by the acceptance tests.
//!
//! Each check draws its random inputs from a ChaCha stream seeded by the
//! check's name, so a run is reproducible.  [`Scale::Quick`] keeps every
//! suite to a few seconds; [`Scale::Full`] uses the sizes the acceptance
//! suite asks for.

mod arith;
mod carlitz;
mod coateswiles;
mod coleman;
mod cyclotomic;
mod lfun;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::basealg::{APoly, FqElem, GaloisField, Poly, RatFun, Ring, TruncSeries, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scale {
    Quick,
    Full,
}

impl Scale {
    /// `quick` or `full` depending on the scale.
    pub fn pick<T>(self, quick: T, full: T) -> T {
        match self {
            Scale::Quick => quick,
            Scale::Full => full,
        }
    }
}

pub type CheckFn = fn(Scale) -> Result<(), String>;

#[derive(Clone, Copy)]
pub struct Check {
    pub suite: &'static str,
    pub name: &'static str,
    pub run: CheckFn,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub suite: &'static str,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

pub fn all_checks() -> Vec<Check> {
    let mut v = Vec::new();
    v.extend(arith::checks());
    v.extend(carlitz::checks());
    v.extend(cyclotomic::checks());
    v.extend(coleman::checks());
    v.extend(coateswiles::checks());
    v.extend(lfun::checks());
    v
}

pub fn find(name: &str) -> Option<Check> {
    all_checks().into_iter().find(|c| c.name == name)
}

/// Runs the checks in parallel; outcomes keep the input order.
pub fn run_checks(checks: &[Check], scale: Scale) -> Vec<Outcome> {
    checks
        .par_iter()
        .map(|c| {
            let r = std::panic::catch_unwind(|| (c.run)(scale)).unwrap_or_else(|_| Err("check panicked".to_string()));
            Outcome { suite: c.suite, name: c.name, passed: r.is_ok(), detail: r.err().unwrap_or_default() }
        })
        .collect()
}

/// Every suite.
pub fn selftest(scale: Scale) -> Vec<Outcome> {
    run_checks(&all_checks(), scale)
}

/// Coleman fixed points, multiplicativity and norm compatibility of `ev`.
pub fn colemancheck(scale: Scale) -> Vec<Outcome> {
    let checks: Vec<Check> = all_checks().into_iter().filter(|c| c.suite == "coleman").collect();
    run_checks(&checks, scale)
}

// --- shared helpers -----------------------------------------------------------

pub(crate) fn rng_for(name: &str) -> ChaCha8Rng {
    let seed = name.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3));
    ChaCha8Rng::seed_from_u64(seed)
}

pub(crate) fn gf(q: u64) -> &'static GaloisField {
    GaloisField::get(q).expect("valid field size")
}

pub(crate) fn rand_fq(field: &'static GaloisField, rng: &mut ChaCha8Rng) -> FqElem {
    field.elem(rng.gen_range(0..field.q()))
}

/// Uniform polynomial of degree at most `d`.
pub(crate) fn rand_apoly(field: &'static GaloisField, rng: &mut ChaCha8Rng, d: usize) -> APoly {
    Poly::new(field, Var::T, (0..=d).map(|_| rand_fq(field, rng)).collect())
}

pub(crate) fn rand_monic(field: &'static GaloisField, rng: &mut ChaCha8Rng, d: usize) -> APoly {
    let mut c: Vec<FqElem> = (0..d).map(|_| rand_fq(field, rng)).collect();
    c.push(field.one());
    Poly::new(field, Var::T, c)
}

/// A rational function with numerator degree `<= d` and monic denominator
/// of degree `<= d`.
pub(crate) fn rand_ratfun(field: &'static GaloisField, rng: &mut ChaCha8Rng, d: usize) -> RatFun {
    let den_deg = rng.gen_range(0..=d);
    RatFun::new(rand_apoly(field, rng, d), rand_monic(field, rng, den_deg)).expect("monic denominator")
}

pub(crate) fn rand_nonzero_ratfun(field: &'static GaloisField, rng: &mut ChaCha8Rng, d: usize) -> RatFun {
    loop {
        let r = rand_ratfun(field, rng, d);
        if !r.is_zero() {
            return r;
        }
    }
}

/// A polynomial in `x` of degree at most `deg` with polynomial coefficients.
pub(crate) fn rand_x_poly(field: &'static GaloisField, rng: &mut ChaCha8Rng, deg: usize, cdeg: usize) -> Poly<RatFun> {
    let c = (0..=deg).map(|_| RatFun::from_poly(rand_apoly(field, rng, cdeg))).collect();
    Poly::new(field, Var::X, c)
}

/// A polynomial in `x` with nonzero constant term.
pub(crate) fn rand_x_unit(field: &'static GaloisField, rng: &mut ChaCha8Rng, deg: usize, cdeg: usize) -> Poly<RatFun> {
    loop {
        let p = rand_x_poly(field, rng, deg, cdeg);
        if !p.coeff(0).is_zero() {
            return p;
        }
    }
}

/// A series `c_0 + c_1 x + ... + O(x^prec)` with random rational coefficients.
pub(crate) fn rand_series(
    field: &'static GaloisField,
    rng: &mut ChaCha8Rng,
    order: i64,
    prec: i64,
    cdeg: usize,
) -> TruncSeries<RatFun> {
    let c = (order..prec).map(|_| rand_ratfun(field, rng, cdeg)).collect();
    TruncSeries::new(field, Var::X, order, c, prec)
}

pub(crate) fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

pub(crate) fn lift<T>(r: crate::Result<T>, what: &str) -> Result<T, String> {
    r.map_err(|e| format!("{what}: {e}"))
}
