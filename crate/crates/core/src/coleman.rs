//! The Coleman norm operator `N`, characterized by
//! `prod_(u in Phi[pi]) f(x + u) = (N f)(Phi_pi(x))`, together with the
//! `*`-action `f -> f o Phi_a` and evaluation at torsion points.

use std::fmt;
use std::sync::Arc;

use crate::basealg::{quotient_norm, APoly, Field, Poly, RatFun, Render, Ring, TruncSeries, Var};
use crate::carlitz::{carlitz_phi, torsion_poly};
use crate::cyclotomic::{omega, CycloElem, CycloField};
use crate::{Error, Result};

/// A rational function of `x` over `F`, reduced, with monic denominator.
#[derive(Clone, Debug, PartialEq)]
pub struct XRat {
    num: Poly<RatFun>,
    den: Poly<RatFun>,
}

impl XRat {
    pub fn new(num: Poly<RatFun>, den: Poly<RatFun>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (num, den) = (num.with_var(Var::X), den.with_var(Var::X));
        if num.is_zero() {
            let one = Poly::one_in(*den.base(), Var::X);
            return Ok(XRat { num, den: one });
        }
        let g = num.gcd(&den);
        let n = num.div_exact_by(&g).expect("gcd divides");
        let d = den.div_exact_by(&g).expect("gcd divides");
        let l = d.leading().expect("nonzero").inv().expect("nonzero");
        Ok(XRat { num: n.scale(&l), den: d.scale(&l) })
    }

    pub fn from_poly(p: Poly<RatFun>) -> Self {
        let one = Poly::one_in(*p.base(), Var::X);
        XRat { num: p.with_var(Var::X), den: one }
    }

    /// `Phi_a(x) / Phi_b(x)`.
    pub fn phi_ratio(a: &APoly, b: &APoly) -> Result<Self> {
        XRat::new(carlitz_phi(a).to_x_poly(), carlitz_phi(b).to_x_poly())
    }

    pub fn num(&self) -> &Poly<RatFun> {
        &self.num
    }
    pub fn den(&self) -> &Poly<RatFun> {
        &self.den
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        XRat::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den)).expect("nonzero denominators")
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        XRat::new(self.num.mul(&rhs.den), self.den.mul(&rhs.num))
    }

    /// Order of vanishing at `x = 0`; `None` for zero.
    pub fn order(&self) -> Option<i64> {
        let n = self.num.low_degree()? as i64;
        Some(n - self.den.low_degree().expect("nonzero") as i64)
    }

    /// Laurent expansion at `x = 0`, certified mod `x^prec`.
    pub fn to_series(&self, prec: i64) -> Result<TruncSeries<RatFun>> {
        let v = self.den.low_degree().expect("nonzero") as i64;
        // the inverse of the denominator loses its valuation in precision
        let n = TruncSeries::from_poly(&self.num, prec + v);
        let d = TruncSeries::from_poly(&self.den, prec + 2 * v);
        Ok(n.mul(&d.inv()?).truncate(prec))
    }
}

impl fmt::Display for XRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.num.render();
        if self.den.is_one_poly() {
            return f.write_str(&n);
        }
        write!(f, "({n})/({})", self.den.render())
    }
}

/// A Coleman-side series: an exact rational function of `x`, or a
/// truncated Laurent series.
#[derive(Clone, Debug, PartialEq)]
pub enum ColemanSeries {
    Exact(XRat),
    Truncated(TruncSeries<RatFun>),
}

impl ColemanSeries {
    pub fn to_series(&self, prec: i64) -> Result<TruncSeries<RatFun>> {
        match self {
            ColemanSeries::Exact(r) => r.to_series(prec),
            ColemanSeries::Truncated(s) => Ok(s.truncate(prec)),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        match (self, rhs) {
            (ColemanSeries::Exact(a), ColemanSeries::Exact(b)) => ColemanSeries::Exact(a.mul(b)),
            (ColemanSeries::Truncated(a), ColemanSeries::Truncated(b)) => ColemanSeries::Truncated(a.mul(b)),
            (ColemanSeries::Exact(e), ColemanSeries::Truncated(s))
            | (ColemanSeries::Truncated(s), ColemanSeries::Exact(e)) => {
                let eo = e.order().unwrap_or(0);
                let need = s.prec() + eo - s.order();
                let es = e.to_series(need.max(eo + 1)).expect("nonzero denominator");
                ColemanSeries::Truncated(s.mul(&es))
            }
        }
    }
}

/// `f(x + y) mod Phi_pi(y)`, then its norm to `F[x]`.
fn translate_norm(f: &Poly<RatFun>, phi: &Poly<RatFun>) -> Result<Poly<RatFun>> {
    let field = *f.base();
    let xring = Poly::<RatFun>::zero_in(field, Var::X).ctx();
    let lift = |c: &RatFun| Poly::constant(Poly::constant(c.clone(), Var::X), Var::Y);
    let x_plus_y = Poly::new(xring.clone(), Var::Y, vec![Poly::var_in(field, Var::X), Poly::one_in(field, Var::X)]);
    let g = f.eval_in(&x_plus_y, lift);
    let phi_y = Poly::new(xring, Var::Y, phi.coeffs().iter().map(|c| Poly::constant(c.clone(), Var::X)).collect());
    quotient_norm(&phi_y, &g)
}

/// `prod_(u in Phi[pi]) f(x + u)` for a polynomial `f`.
pub fn torsion_product(f: &Poly<RatFun>, pi: &APoly) -> Result<Poly<RatFun>> {
    translate_norm(&f.clone().with_var(Var::X), &torsion_poly(pi, 1)?)
}

/// The unique polynomial `h` with `h(Phi_pi(x)) = g(x)`, read off the
/// `Phi_pi`-adic expansion of `g`; every digit must be a constant.
pub fn decompose_poly(g: &Poly<RatFun>, pi: &APoly) -> Result<Poly<RatFun>> {
    let phi = torsion_poly(pi, 1)?;
    let mut digits = Vec::new();
    let mut rest = g.clone().with_var(Var::X);
    while !rest.is_zero() {
        let (q, r) = rest.div_rem_monic(&phi)?;
        if r.degree().is_some_and(|d| d > 0) {
            return Err(Error::NotInImage(format!("digit {} of the expansion is {}", digits.len(), r.render())));
        }
        digits.push(r.coeff(0));
        rest = q;
    }
    Ok(Poly::new(*g.base(), Var::X, digits))
}

/// Solves `h(Phi_pi(x)) = g(x) mod x^prec` term by term: the lowest term
/// of `Phi_pi(x)^k` is `pi^k x^k`.
pub fn decompose_series(g: &TruncSeries<RatFun>, pi: &APoly) -> Result<TruncSeries<RatFun>> {
    let phi = torsion_poly(pi, 1)?;
    let field = pi.field();
    let prec = g.prec();
    let big = i64::MAX / 4;
    let phi_s = TruncSeries::from_poly(&phi, big);
    let pi_f = RatFun::from_poly(pi.clone());
    let lo = g.order().min(prec);
    let mut rest = g.clone();
    let mut h = Vec::new();
    // Phi_pi^lo, carried with enough relative precision for the whole range
    let mut pw = if lo >= 0 {
        phi_s.pow(lo as u64)
    } else {
        TruncSeries::from_poly(&phi, prec - 2 * lo + 1).inv()?.pow(lo.unsigned_abs())
    };
    for k in lo..prec {
        let c = rest.coeff(k)?;
        let hk = c.div(&pi_f.powi(k).expect("pi nonzero")).expect("pi nonzero");
        if !hk.is_zero() {
            rest = rest.sub(&pw.scale(&hk));
        }
        h.push(hk);
        pw = pw.mul(&phi_s);
    }
    if !rest.is_zero() && rest.order() < prec {
        return Err(Error::Internal("series decomposition left a residual".into()));
    }
    Ok(TruncSeries::new(field, Var::X, lo, h, prec))
}

/// `N f` for a polynomial `f`.
pub fn norm_poly(f: &Poly<RatFun>, pi: &APoly) -> Result<Poly<RatFun>> {
    decompose_poly(&torsion_product(f, pi)?, pi)
}

/// The Coleman norm.  Exact inputs give exact outputs; a truncated series
/// is normed through its polynomial representative (the known part), and
/// the result carries the input's precision.
pub fn coleman_norm(f: &ColemanSeries, pi: &APoly) -> Result<ColemanSeries> {
    match f {
        ColemanSeries::Exact(r) => {
            let n = norm_poly(&r.num, pi)?;
            let d = norm_poly(&r.den, pi)?;
            Ok(ColemanSeries::Exact(XRat::new(n, d)?))
        }
        ColemanSeries::Truncated(s) => {
            let o = s.valuation().ok_or(Error::NonInvertibleLeading)?;
            let unit = s.shift(-o).to_poly()?;
            let n = norm_poly(&unit, pi)?;
            // N(x) = x, so the monomial part passes through
            Ok(ColemanSeries::Truncated(TruncSeries::from_poly(&n, s.prec() - o).shift(o)))
        }
    }
}

/// `a * f = f o Phi_a`.
pub fn star_action(a: &APoly, f: &ColemanSeries) -> Result<ColemanSeries> {
    if a.is_zero() {
        return Err(Error::InvalidArgument("star action by zero".into()));
    }
    let phi = carlitz_phi(a).to_x_poly();
    match f {
        ColemanSeries::Exact(r) => Ok(ColemanSeries::Exact(XRat::new(r.num.compose(&phi), r.den.compose(&phi))?)),
        ColemanSeries::Truncated(s) => {
            let g = TruncSeries::from_poly(&phi, i64::MAX / 4);
            Ok(ColemanSeries::Truncated(s.compose(&g)?))
        }
    }
}

/// `f(omega_n)`.  A truncated series is evaluated through its known part.
pub fn eval_at_omega(f: &ColemanSeries, field: &Arc<CycloField>) -> Result<CycloElem> {
    let w = omega(field);
    let lift = |c: &RatFun| CycloElem::scalar(field, c.clone());
    match f {
        ColemanSeries::Exact(r) => {
            let d = r.den.eval_in(&w, lift);
            if d.is_zero() {
                return Err(Error::NotInvertible);
            }
            r.num.eval_in(&w, lift).div(&d)
        }
        ColemanSeries::Truncated(s) => {
            let Some(o) = s.valuation() else {
                return Ok(CycloElem::zero(field));
            };
            let unit = s.shift(-o).to_poly()?;
            Ok(unit.eval_in(&w, lift).mul(&w.powi(o)?))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basealg::{parse_a_poly, parse_x_poly, GaloisField};
    use crate::cyclotomic::{cyclotomic_unit, field_norm};

    fn gf(q: u64) -> &'static GaloisField {
        GaloisField::get(q).unwrap()
    }
    fn a(text: &str, q: u64) -> APoly {
        parse_a_poly(text, gf(q)).unwrap()
    }
    fn xp(text: &str, q: u64) -> Poly<RatFun> {
        parse_x_poly(text, gf(q)).unwrap()
    }

    #[test]
    fn norm_of_x_is_x() {
        let pi = a("T^2+T+1", 2);
        // the torsion product of x is Phi_pi itself
        assert_eq!(torsion_product(&xp("x", 2), &pi).unwrap(), torsion_poly(&pi, 1).unwrap());
        assert_eq!(norm_poly(&xp("x", 2), &pi).unwrap(), xp("x", 2));
    }

    #[test]
    fn norm_of_constant() {
        let pi = a("T^2+T+1", 2);
        let c = xp("T+1", 2);
        assert_eq!(norm_poly(&c, &pi).unwrap(), c.pow(4));
        let pi3 = a("T", 3);
        assert_eq!(norm_poly(&xp("T", 3), &pi3).unwrap(), xp("T^3", 3));
    }

    #[test]
    fn phi_a_is_fixed() {
        for (pi, q) in [("T", 2), ("T^2+T+1", 2), ("T", 3), ("T^2+1", 3)] {
            let pi = a(pi, q);
            for s in ["T+1", "T^2+T+1", "T^2"] {
                let av = a(s, q);
                if !crate::basealg::ResidueRing::new(&pi, 1).unwrap().is_unit(&av) {
                    continue;
                }
                let phi = carlitz_phi(&av).to_x_poly();
                assert_eq!(norm_poly(&phi, &pi).unwrap(), phi, "a={s} pi={pi}");
            }
        }
    }

    #[test]
    fn decompose_round_trip() {
        let pi = a("T^2+T+1", 2);
        let phi = torsion_poly(&pi, 1).unwrap();
        let h = xp("x^5 + T*x^3 + x/(T+1) + 1", 2);
        assert_eq!(decompose_poly(&h.compose(&phi), &pi).unwrap(), h);
        assert_eq!(decompose_poly(&phi, &pi).unwrap(), xp("x", 2));
        assert_eq!(decompose_poly(&phi.mul(&phi), &pi).unwrap(), xp("x^2", 2));
        assert!(matches!(decompose_poly(&xp("x", 2), &pi), Err(Error::NotInImage(_))));
        let gs = TruncSeries::from_poly(&h.compose(&phi), 9);
        let hs = decompose_series(&gs, &pi).unwrap();
        assert!(hs.agrees_with(&TruncSeries::from_poly(&h, 9)));
        assert_eq!(hs.prec(), 9);
    }

    #[test]
    fn decompose_laurent_series() {
        let pi = a("T", 3);
        let phi = torsion_poly(&pi, 1).unwrap();
        let h = XRat::new(xp("x+1", 3), xp("x^2", 3)).unwrap();
        let g = XRat::new(h.num.compose(&phi), h.den.compose(&phi)).unwrap();
        let hs = decompose_series(&g.to_series(8).unwrap(), &pi).unwrap();
        assert!(hs.agrees_with(&h.to_series(8).unwrap()));
    }

    #[test]
    fn star_action_basics() {
        let f = ColemanSeries::Exact(XRat::from_poly(xp("x", 2)));
        let s = star_action(&a("T", 2), &f).unwrap();
        assert_eq!(s, ColemanSeries::Exact(XRat::from_poly(xp("x^2+T*x", 2))));
        assert_eq!(star_action(&a("1", 2), &f).unwrap(), f);
    }

    #[test]
    fn eval_gives_cyclotomic_unit() {
        let pi = a("T^2+T+1", 2);
        let k = CycloField::new(&pi, 1).unwrap();
        let f = ColemanSeries::Exact(XRat::phi_ratio(&a("T", 2), &a("1", 2)).unwrap());
        let u = eval_at_omega(&f, &k).unwrap();
        assert_eq!(u, cyclotomic_unit(&a("T", 2), &a("1", 2), &k).unwrap());
        let t = ColemanSeries::Truncated(f.to_series(5).unwrap());
        assert_eq!(eval_at_omega(&t, &k).unwrap(), u);
    }

    #[test]
    fn ev_is_norm_compatible() {
        let pi = a("T", 2);
        let k1 = CycloField::new(&pi, 1).unwrap();
        let k2 = CycloField::new(&pi, 2).unwrap();
        let f = ColemanSeries::Exact(XRat::from_poly(xp("x^3 + T*x + 1", 2)));
        let lhs = field_norm(&eval_at_omega(&f, &k2).unwrap(), &k1).unwrap();
        let rhs = eval_at_omega(&coleman_norm(&f, &pi).unwrap(), &k1).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn truncated_norm_semantics() {
        let pi = a("T", 2);
        let s = TruncSeries::from_poly(&xp("x^2 + T*x^3", 2), 6);
        let n = coleman_norm(&ColemanSeries::Truncated(s), &pi).unwrap();
        let ColemanSeries::Truncated(n) = n else { panic!("truncated input gives truncated output") };
        assert_eq!(n.valuation(), Some(2));
        assert_eq!(n.prec(), 6);
        let exact = norm_poly(&xp("1 + T*x", 2), &pi).unwrap().shift(2);
        assert!(n.agrees_with(&TruncSeries::from_poly(&exact, 6)));
    }
}
