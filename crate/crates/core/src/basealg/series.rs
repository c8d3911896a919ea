//! Truncated Laurent series with explicit absolute precision.
//!
//! A `TruncSeries` stands for `sum_{order <= e < prec} c_e x^e + O(x^prec)`.
//! Every operation derives the precision of its result from that of its
//! operands, so a coefficient is only ever reported when it is certified.

use std::fmt;

use super::parse::Render;
use super::poly::{Poly, Var};
use super::ring::{binomial_mod_p, Field, Ring};
use crate::{Error, Result};

#[derive(Clone, PartialEq)]
pub struct TruncSeries<C: Ring> {
    base: C::Ctx,
    var: Var,
    /// Valuation when `coeffs` is nonempty, otherwise equal to `prec`.
    order: i64,
    /// Coefficients of `x^order, x^(order+1), ...` below `prec`; the
    /// first and last are nonzero, missing entries are zero.
    coeffs: Vec<C>,
    prec: i64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SeriesRing<K> {
    pub base: K,
    pub var: Var,
    pub prec: i64,
}

impl<C: Ring> TruncSeries<C> {
    /// Builds `sum c_i x^(order+i) + O(x^prec)`; entries at or past `prec`
    /// are dropped.
    pub fn new(base: C::Ctx, var: Var, order: i64, mut coeffs: Vec<C>, prec: i64) -> Self {
        let keep = (prec - order).max(0) as usize;
        coeffs.truncate(keep);
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let mut s = TruncSeries { base, var, order, coeffs, prec };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        let lead = self.coeffs.iter().position(|c| !c.is_zero());
        match lead {
            None => {
                self.coeffs.clear();
                self.order = self.prec;
            }
            Some(0) => {}
            Some(k) => {
                self.coeffs.drain(..k);
                self.order += k as i64;
            }
        }
    }

    /// `O(x^prec)`.
    pub fn zero(base: C::Ctx, var: Var, prec: i64) -> Self {
        TruncSeries { base, var, order: prec, coeffs: Vec::new(), prec }
    }

    pub fn constant(c: C, var: Var, prec: i64) -> Self {
        Self::new(c.ctx(), var, 0, vec![c], prec)
    }

    /// `c x^k + O(x^prec)`.
    pub fn monomial(c: C, k: i64, var: Var, prec: i64) -> Self {
        Self::new(c.ctx(), var, k, vec![c], prec)
    }

    pub fn from_poly(p: &Poly<C>, prec: i64) -> Self {
        Self::new(p.base().clone(), p.var(), 0, p.coeffs().to_vec(), prec)
    }

    pub fn base(&self) -> &C::Ctx {
        &self.base
    }
    pub fn var(&self) -> Var {
        self.var
    }
    pub fn prec(&self) -> i64 {
        self.prec
    }
    /// Lowest exponent with a known nonzero coefficient.
    pub fn valuation(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.order)
    }
    /// Lower bound on the valuation: `order` when known, otherwise `prec`.
    pub fn order(&self) -> i64 {
        self.order
    }
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `x^e`, an error when `e` is past the certified range.
    pub fn coeff(&self, e: i64) -> Result<C> {
        if e >= self.prec {
            return Err(Error::PrecisionExhausted { needed: e + 1, available: self.prec });
        }
        Ok(self.coeff_unchecked(e))
    }

    fn coeff_unchecked(&self, e: i64) -> C {
        if e < self.order || e >= self.prec {
            return C::zero(&self.base);
        }
        self.coeffs.get((e - self.order) as usize).cloned().unwrap_or_else(|| C::zero(&self.base))
    }

    /// Nonzero terms `(exponent, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, c)| (self.order + i as i64, c))
    }

    pub fn truncate(&self, prec: i64) -> Self {
        let p = prec.min(self.prec);
        Self::new(self.base.clone(), self.var, self.order, self.coeffs.clone(), p)
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: i64) -> Self {
        TruncSeries {
            base: self.base.clone(),
            var: self.var,
            order: self.order + k,
            coeffs: self.coeffs.clone(),
            prec: self.prec + k,
        }
    }

    /// One past the highest stored exponent.
    fn extent(&self) -> i64 {
        self.order + self.coeffs.len() as i64
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let prec = self.prec.min(rhs.prec);
        let ext = |s: &Self| if s.coeffs.is_empty() { i64::MIN } else { s.extent() };
        let lo = self.order.min(rhs.order).min(prec);
        let hi = ext(self).max(ext(rhs)).min(prec).max(lo);
        let v = (lo..hi).map(|e| self.coeff_unchecked(e).add(&rhs.coeff_unchecked(e))).collect();
        Self::new(self.base.clone(), self.var, lo, v, prec)
    }

    pub fn neg(&self) -> Self {
        TruncSeries {
            base: self.base.clone(),
            var: self.var,
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
            prec: self.prec,
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order + rhs.order;
        let prec = (self.order + rhs.prec).min(rhs.order + self.prec);
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Self::zero(self.base.clone(), self.var, prec);
        }
        let n = ((prec - order).max(0) as usize).min(self.coeffs.len() + rhs.coeffs.len() - 1);
        let mut v = vec![C::zero(&self.base); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i >= n || a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n - i) {
                if !b.is_zero() {
                    v[i + j] = v[i + j].add(&a.mul(b));
                }
            }
        }
        Self::new(self.base.clone(), self.var, order, v, prec)
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::new(self.base.clone(), self.var, self.order, self.coeffs.iter().map(|a| a.mul(c)).collect(), self.prec)
    }

    /// Adds a constant; a no-op on the certified part when `prec <= 0`.
    pub fn add_const(&self, c: &C) -> Self {
        if self.prec <= 0 {
            return self.clone();
        }
        self.add(&Self::constant(c.clone(), self.var, self.prec))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self::constant(C::one(&self.base), self.var, i64::MAX / 4);
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(&b);
            }
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c.mul(&C::from_int(&self.base, self.order + i as i64)))
            .collect();
        Self::new(self.base.clone(), self.var, self.order - 1, v, self.prec - 1)
    }

    /// The `j`-th Hasse-Teichmuller derivative
    /// `sum_n C(n + j, j) c_(n+j) x^n`, binomials reduced mod `p`.
    pub fn hasse_derivative(&self, j: u32) -> Self {
        let p = C::characteristic(&self.base);
        let j = j as i64;
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let m = self.order + i as i64;
                let b = binomial_mod_p(m, j, p);
                c.mul(&C::from_int(&self.base, b as i64))
            })
            .collect();
        Self::new(self.base.clone(), self.var, self.order - j, v, self.prec - j)
    }

    /// The known part as a polynomial; requires nonnegative order.
    pub fn to_poly(&self) -> Result<Poly<C>> {
        if self.coeffs.is_empty() {
            return Ok(Poly::zero_in(self.base.clone(), self.var));
        }
        if self.order < 0 {
            return Err(Error::InvalidArgument("series has negative powers".into()));
        }
        let mut v = vec![C::zero(&self.base); self.order as usize];
        v.extend(self.coeffs.iter().cloned());
        Ok(Poly::new(self.base.clone(), self.var, v))
    }

    /// `(order, coefficients from order upward)`; entries past the slice and
    /// below `prec` are zero.
    pub fn dense(&self) -> (i64, &[C]) {
        (self.order, &self.coeffs)
    }

    /// Termwise equality on the common certified range.
    pub fn agrees_with(&self, rhs: &Self) -> bool {
        let p = self.prec.min(rhs.prec).min(self.extent().max(rhs.extent()));
        let lo = self.order.min(rhs.order);
        (lo..p).all(|e| self.coeff_unchecked(e) == rhs.coeff_unchecked(e))
    }
}

impl<C: Field> TruncSeries<C> {
    /// Multiplicative inverse; the lowest coefficient must be invertible.
    /// The relative precision is preserved: `order(g) = -order(f)`.
    pub fn inv(&self) -> Result<Self> {
        let lead = self.coeffs.first().ok_or(Error::NonInvertibleLeading)?;
        let li = lead.inv().ok_or(Error::NonInvertibleLeading)?;
        let n = (self.prec - self.order) as usize;
        let mut g: Vec<C> = Vec::with_capacity(n);
        g.push(li.clone());
        for k in 1..n {
            let mut s = C::zero(&self.base);
            for i in 1..=k.min(self.coeffs.len() - 1) {
                if !self.coeffs[i].is_zero() {
                    s = s.add(&self.coeffs[i].mul(&g[k - i]));
                }
            }
            g.push(s.neg().mul(&li));
        }
        let order = -self.order;
        Ok(Self::new(self.base.clone(), self.var, order, g, order + n as i64))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.inv()?))
    }

    /// `self(g)`; `g` must have order at least one, and when `self` carries
    /// negative powers the lowest coefficient of `g` must be invertible.
    ///
    /// With `self` known mod `x^M`, `g` of valuation `v`, the result is
    /// certified mod `x^(v M)` intersected with the precision that the powers
    /// of `g` carry.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        let v = g.order;
        if v < 1 {
            return Err(Error::InnerOrder(v));
        }
        let tail = v.saturating_mul(self.prec);
        let big = i64::MAX / 4;
        let mut acc = Self::zero(self.base.clone(), g.var, big);
        if self.coeffs.is_empty() {
            return Ok(Self::zero(self.base.clone(), g.var, tail));
        }
        let lo = self.order;
        let hi = self.prec;
        // positive powers g^1, g^2, ... up to the last stored term
        let mut pw = Self::constant(C::one(&self.base), g.var, big);
        for e in 1..self.extent().min(hi) {
            pw = pw.mul(g);
            if pw.order >= tail {
                break;
            }
            if e >= lo {
                let c = self.coeff_unchecked(e);
                if !c.is_zero() {
                    acc = acc.add(&pw.scale(&c));
                }
            }
        }
        if lo <= 0 && hi > 0 {
            acc = acc.add_const(&self.coeff_unchecked(0));
        }
        if lo < 0 {
            let gi = g.inv()?;
            let mut pw = Self::constant(C::one(&self.base), g.var, big);
            for e in (lo..0).rev() {
                pw = pw.mul(&gi);
                let c = self.coeff_unchecked(e);
                if !c.is_zero() {
                    acc = acc.add(&pw.scale(&c));
                }
            }
        }
        Ok(acc.truncate(tail))
    }

    /// Compositional inverse of a series `x + ...` of valuation one, by
    /// solving `self(r(x)) = x` one degree at a time.
    pub fn reversion(&self) -> Result<Self> {
        if self.order != 1 {
            return Err(Error::InnerOrder(self.order));
        }
        let lead = self.coeffs[0].clone();
        let li = lead.inv().ok_or(Error::NonInvertibleLeading)?;
        let n = self.prec;
        let mut r = Self::monomial(li.clone(), 1, self.var, n);
        for e in 2..n {
            let comp = self.compose(&r)?;
            let c = comp.coeff(e)?;
            if !c.is_zero() {
                let fix = Self::monomial(c.mul(&li).neg(), e, self.var, n);
                r = r.add(&fix);
            }
        }
        Ok(r)
    }
}

impl<C: Field> Ring for TruncSeries<C> {
    type Ctx = SeriesRing<C::Ctx>;

    fn ctx(&self) -> Self::Ctx {
        SeriesRing { base: self.base.clone(), var: self.var, prec: self.prec }
    }
    fn zero(ctx: &Self::Ctx) -> Self {
        Self::zero(ctx.base.clone(), ctx.var, ctx.prec)
    }
    fn one(ctx: &Self::Ctx) -> Self {
        Self::constant(C::one(&ctx.base), ctx.var, ctx.prec)
    }
    fn from_int(ctx: &Self::Ctx, n: i64) -> Self {
        Self::constant(C::from_int(&ctx.base, n), ctx.var, ctx.prec)
    }
    fn characteristic(ctx: &Self::Ctx) -> u64 {
        C::characteristic(&ctx.base)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        TruncSeries::add(self, rhs)
    }
    fn neg(&self) -> Self {
        TruncSeries::neg(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        TruncSeries::mul(self, rhs)
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        self.div(rhs).ok()
    }
}

impl<C: Ring> fmt::Debug for TruncSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TruncSeries")
            .field("var", &self.var)
            .field("order", &self.order)
            .field("coeffs", &self.coeffs)
            .field("prec", &self.prec)
            .finish()
    }
}

impl<C: Ring + Render> fmt::Display for TruncSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let x = self.var.symbol();
        let mut parts = Vec::new();
        for (e, c) in self.terms() {
            let mono = match e {
                0 => String::new(),
                1 => x.to_string(),
                _ => format!("{x}^{e}"),
            };
            parts.push(match (e, c.is_one()) {
                (0, _) => c.render(),
                (_, true) => mono,
                _ => c.render_times(&mono),
            });
        }
        parts.push(match self.prec {
            0 => "O(1)".to_string(),
            1 => format!("O({x})"),
            p => format!("O({x}^{p})"),
        });
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basealg::{APoly, GaloisField, RatFun};

    fn f2() -> &'static GaloisField {
        GaloisField::get(2).unwrap()
    }

    fn rf_ints(c: &[i64]) -> RatFun {
        RatFun::from_poly(APoly::from_ints(f2(), c))
    }

    #[test]
    fn geometric_inverse_char_2() {
        let f = f2();
        let s = TruncSeries::new(f, Var::X, 0, vec![f.one(), f.one()], 4);
        let g = s.inv().unwrap();
        assert_eq!(g.prec(), 4);
        for e in 0..4 {
            assert!(g.coeff(e).unwrap().is_one());
        }
        assert!(s.mul(&g).agrees_with(&TruncSeries::constant(f.one(), Var::X, 4)));
    }

    #[test]
    fn monomial_inverse() {
        let f = f2();
        let x = TruncSeries::monomial(f.one(), 1, Var::X, 5);
        let xi = x.inv().unwrap();
        assert_eq!(xi.valuation(), Some(-1));
        assert_eq!(xi.prec(), 3);
        assert!(xi.coeff(-1).unwrap().is_one());
        assert!(xi.coeff(0).unwrap().is_zero());
    }

    #[test]
    fn inverse_over_rational_functions() {
        // (T + x)^-1 = T^-1 + T^-2 x + T^-3 x^2 + O(x^3) in characteristic 2
        let f = f2();
        let t = RatFun::t(f);
        let s = TruncSeries::new(f, Var::X, 0, vec![t.clone(), RatFun::one(&f)], 3);
        let g = s.inv().unwrap();
        for e in 0..3 {
            assert_eq!(g.coeff(e).unwrap(), t.powi(-(e + 1)).unwrap());
        }
        assert!(s.mul(&g).agrees_with(&TruncSeries::constant(RatFun::one(&f), Var::X, 3)));
    }

    #[test]
    fn non_invertible_leading() {
        let f = f2();
        let z = TruncSeries::<RatFun>::zero(f, Var::X, 4);
        assert_eq!(z.inv().unwrap_err(), Error::NonInvertibleLeading);
    }

    #[test]
    fn compose_square_char_2() {
        let f = f2();
        let one = RatFun::one(&f);
        let g = TruncSeries::new(f, Var::X, 1, vec![one.clone(), one.clone()], 4);
        let sq4 = TruncSeries::monomial(one.clone(), 2, Var::X, 4).compose(&g).unwrap();
        assert_eq!(sq4.prec(), 4);
        assert_eq!(sq4.terms().count(), 1);
        let sq6 = TruncSeries::monomial(one.clone(), 2, Var::X, 6).compose(&g).unwrap();
        // (x + x^2 + O(x^4))^2 = x^2 + x^4 + O(x^5)
        assert_eq!(sq6.prec(), 5);
        assert!(sq6.coeff(4).unwrap().is_one());
        assert!(sq6.coeff(3).unwrap().is_zero());
    }

    #[test]
    fn compose_identity() {
        let f = f2();
        let one = RatFun::one(&f);
        let t = RatFun::t(f);
        let g = TruncSeries::new(f, Var::X, 1, vec![t.clone(), one.clone(), t.clone()], 6);
        let id = TruncSeries::monomial(one, 1, Var::X, 10);
        assert_eq!(id.compose(&g).unwrap(), g);
    }

    #[test]
    fn compose_laurent_outer() {
        // 1/x composed with T x + x^2 is 1/(T x + x^2)
        let f = f2();
        let t = RatFun::t(f);
        let one = RatFun::one(&f);
        let g = TruncSeries::new(f, Var::X, 1, vec![t.clone(), one.clone()], 8);
        let outer = TruncSeries::monomial(one.clone(), -1, Var::X, 8);
        let h = outer.compose(&g).unwrap();
        assert_eq!(h.valuation(), Some(-1));
        let direct = g.inv().unwrap();
        assert!(h.agrees_with(&direct));
        assert_eq!(h.coeff(-1).unwrap(), t.inv().unwrap());
        assert_eq!(h.coeff(0).unwrap(), t.powi(-2).unwrap());
        assert_eq!(h.coeff(1).unwrap(), t.powi(-3).unwrap());
    }

    #[test]
    fn compose_rejects_order_zero_inner() {
        let f = f2();
        let g = TruncSeries::constant(RatFun::one(&f), Var::X, 4);
        let h = TruncSeries::monomial(RatFun::one(&f), 1, Var::X, 4);
        assert_eq!(h.compose(&g).unwrap_err(), Error::InnerOrder(0));
    }

    #[test]
    fn hasse_derivative_basics() {
        let f = f2();
        let x2 = TruncSeries::monomial(RatFun::one(&f), 2, Var::X, 8);
        assert!(x2.hasse_derivative(1).terms().next().is_none());
        let one = x2.hasse_derivative(2);
        assert!(one.coeff(0).unwrap().is_one());
        assert_eq!(one.prec(), 6);
        let _ = rf_ints(&[1]);
    }
}
