//! The rational function field `F = F_q(T)` in canonical form.

use std::fmt;

use super::fq::{FqElem, GaloisField};
use super::poly::{APoly, Poly, Var};
use super::ring::{Field, Ring};
use crate::{Error, Result};

/// `num / den` with `den` monic and `gcd(num, den) = 1`; zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: APoly,
    den: APoly,
}

impl RatFun {
    pub fn new(num: APoly, den: APoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let field = den.field();
        if num.is_zero() {
            return Ok(RatFun { num, den: Poly::one_in(field, Var::T) });
        }
        let g = num.gcd(&den);
        let mut n = num.div_exact_by(&g).expect("gcd divides");
        let mut d = den.div_exact_by(&g).expect("gcd divides");
        let l = d.leading().expect("nonzero").inv().expect("nonzero");
        if !l.is_one() {
            n = n.scale(&l);
            d = d.scale(&l);
        }
        Ok(RatFun { num: n, den: d })
    }

    pub fn from_poly(p: APoly) -> Self {
        let field = p.field();
        RatFun { num: p, den: Poly::one_in(field, Var::T) }
    }

    pub fn from_fq(c: FqElem) -> Self {
        Self::from_poly(Poly::constant(c, Var::T))
    }

    pub fn t(field: &'static GaloisField) -> Self {
        Self::from_poly(APoly::t(field))
    }

    pub fn num(&self) -> &APoly {
        &self.num
    }
    pub fn den(&self) -> &APoly {
        &self.den
    }
    pub fn field(&self) -> &'static GaloisField {
        self.den.field()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one_poly()
    }

    /// The polynomial value, if this element lies in `A`.
    pub fn as_poly(&self) -> Option<&APoly> {
        self.is_poly().then_some(&self.num)
    }

    /// `pi`-adic valuation: `v(num) - v(den)`; `None` for zero.
    pub fn valuation(&self, pi: &APoly) -> Option<i64> {
        let vn = self.num.valuation(pi)? as i64;
        Some(vn - self.den.valuation(pi).expect("den nonzero") as i64)
    }

    /// `self^(q^i)`.
    pub fn frobenius(&self, i: u32) -> Self {
        RatFun { num: self.num.frobenius(i), den: self.den.frobenius(i) }
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::parse::Render::render(self))
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::parse::Render::render(self))
    }
}

impl Ring for RatFun {
    type Ctx = &'static GaloisField;

    fn ctx(&self) -> Self::Ctx {
        self.field()
    }
    fn zero(ctx: &Self::Ctx) -> Self {
        Self::from_poly(Poly::zero_in(*ctx, Var::T))
    }
    fn one(ctx: &Self::Ctx) -> Self {
        Self::from_poly(Poly::one_in(*ctx, Var::T))
    }
    fn from_int(ctx: &Self::Ctx, n: i64) -> Self {
        Self::from_fq(ctx.from_int(n))
    }
    fn characteristic(ctx: &Self::Ctx) -> u64 {
        ctx.p() as u64
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn is_one(&self) -> bool {
        self.num.is_one_poly() && self.den.is_one_poly()
    }
    fn add(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFun::new(self.num.add(&rhs.num), self.den.clone()).expect("nonzero den");
        }
        let g = self.den.gcd(&rhs.den);
        let a = rhs.den.div_exact_by(&g).expect("gcd divides");
        let b = self.den.div_exact_by(&g).expect("gcd divides");
        let num = self.num.mul(&a).add(&rhs.num.mul(&b));
        RatFun::new(num, self.den.mul(&a)).expect("nonzero den")
    }
    fn neg(&self) -> Self {
        RatFun { num: self.num.neg(), den: self.den.clone() }
    }
    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(&self.field());
        }
        if self.is_poly() && rhs.is_poly() {
            return Self::from_poly(self.num.mul(&rhs.num));
        }
        // cross-cancel before multiplying
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let n1 = self.num.div_exact_by(&g1).expect("divides");
        let d2 = rhs.den.div_exact_by(&g1).expect("divides");
        let n2 = rhs.num.div_exact_by(&g2).expect("divides");
        let d1 = self.den.div_exact_by(&g2).expect("divides");
        let mut num = n1.mul(&n2);
        let mut den = d1.mul(&d2);
        let l = den.leading().expect("nonzero").inv().expect("nonzero");
        if !l.is_one() {
            num = num.scale(&l);
            den = den.scale(&l);
        }
        RatFun { num, den }
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        self.div(rhs)
    }
}

impl Field for RatFun {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(RatFun::new(self.den.clone(), self.num.clone()).expect("nonzero"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_poly(rng: &mut ChaCha8Rng, f: &'static GaloisField, deg: usize) -> APoly {
        let v = (0..=deg).map(|_| f.elem(rng.gen_range(0..f.q()))).collect();
        Poly::new(f, Var::T, v)
    }

    #[test]
    fn canonical_form_is_unique() {
        let f = GaloisField::get(3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let a = random_poly(&mut rng, f, 4);
            let b = random_poly(&mut rng, f, 3);
            let c = random_poly(&mut rng, f, 3);
            if b.is_zero() || c.is_zero() {
                continue;
            }
            let x = RatFun::new(a.clone(), b.clone()).unwrap();
            let g = RatFun::new(c.clone(), b.clone()).unwrap();
            // (x * g) / g == x
            assert_eq!(x.mul(&g).div(&g).unwrap(), x);
            assert!(x.den().is_monic());
            assert!(x.num().gcd(x.den()).is_one_poly());
            // scaling numerator and denominator by the same factor is invisible
            let y = RatFun::new(a.mul(&c), b.mul(&c)).unwrap();
            assert_eq!(x, y);
        }
    }

    #[test]
    fn field_inverse_and_zero() {
        let f = GaloisField::get(2).unwrap();
        let t = RatFun::t(f);
        let u = t.add(&RatFun::one(&f));
        let s = t.inv().unwrap().add(&u.inv().unwrap());
        // 1/T + 1/(T+1) = 1/(T^2+T) in characteristic 2
        assert_eq!(s, RatFun::new(Poly::one_in(f, Var::T), APoly::from_ints(f, &[0, 1, 1])).unwrap());
        assert!(RatFun::zero(&f).inv().is_none());
        assert_eq!(RatFun::new(APoly::t(f), Poly::zero_in(f, Var::T)), Err(Error::DivisionByZero));
    }
}
