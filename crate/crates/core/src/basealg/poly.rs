//! Dense univariate polynomials over any [`Ring`].

use std::cmp::Ordering;
use std::fmt;

use super::fq::{FqElem, GaloisField};
use super::ring::{Field, Ring};
use crate::{Error, Result};

/// Variable tag carried by polynomials and series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    T,
    X,
    Y,
    U,
    /// `t = 1/T`, the uniformizer at infinity.
    InvT,
}

impl Var {
    pub fn symbol(self) -> char {
        match self {
            Var::T => 'T',
            Var::X => 'x',
            Var::Y => 'y',
            Var::U => 'u',
            Var::InvT => 't',
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PolyRing<K> {
    pub base: K,
    pub var: Var,
}

/// Coefficients lowest degree first, never with trailing zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<C: Ring> {
    ring: PolyRing<C::Ctx>,
    coeffs: Vec<C>,
}

/// `A = F_q[T]`.
pub type APoly = Poly<FqElem>;

impl<C: Ring> Poly<C> {
    pub fn new(base: C::Ctx, var: Var, coeffs: Vec<C>) -> Self {
        let mut p = Poly { ring: PolyRing { base, var }, coeffs };
        p.trim();
        p
    }

    pub fn from_ring(ring: PolyRing<C::Ctx>, coeffs: Vec<C>) -> Self {
        let mut p = Poly { ring, coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn zero_in(base: C::Ctx, var: Var) -> Self {
        Poly { ring: PolyRing { base, var }, coeffs: Vec::new() }
    }

    pub fn one_in(base: C::Ctx, var: Var) -> Self {
        let one = C::one(&base);
        Poly::new(base, var, vec![one])
    }

    /// The variable itself.
    pub fn var_in(base: C::Ctx, var: Var) -> Self {
        let (z, o) = (C::zero(&base), C::one(&base));
        Poly::new(base, var, vec![z, o])
    }

    pub fn constant(c: C, var: Var) -> Self {
        Poly::new(c.ctx(), var, vec![c])
    }

    pub fn monomial(c: C, k: usize, var: Var) -> Self {
        let base = c.ctx();
        let mut v = vec![C::zero(&base); k];
        v.push(c);
        Poly::new(base, var, v)
    }

    pub fn ring(&self) -> &PolyRing<C::Ctx> {
        &self.ring
    }
    pub fn base(&self) -> &C::Ctx {
        &self.ring.base
    }
    pub fn var(&self) -> Var {
        self.ring.var
    }
    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }
    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    /// `None` is the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(|| C::zero(&self.ring.base))
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn with_var(mut self, var: Var) -> Self {
        self.ring.var = var;
        self
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let v = (0..n).map(|i| self.coeff(i).add(&rhs.coeff(i))).collect();
        Poly::from_ring(self.ring.clone(), v)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let v = (0..n).map(|i| self.coeff(i).sub(&rhs.coeff(i))).collect();
        Poly::from_ring(self.ring.clone(), v)
    }

    pub fn neg(&self) -> Self {
        Poly::from_ring(self.ring.clone(), self.coeffs.iter().map(|c| c.neg()).collect())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero_in(self.ring.base.clone(), self.ring.var);
        }
        let mut v = vec![C::zero(&self.ring.base); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] = v[i + j].add(&a.mul(b));
                }
            }
        }
        Poly::from_ring(self.ring.clone(), v)
    }

    pub fn scale(&self, c: &C) -> Self {
        Poly::from_ring(self.ring.clone(), self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// Multiplication by `var^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![C::zero(&self.ring.base); k];
        v.extend(self.coeffs.iter().cloned());
        Poly::from_ring(self.ring.clone(), v)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Poly::one_in(self.ring.base.clone(), self.ring.var);
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

    /// Horner evaluation at a coefficient-ring element.
    pub fn eval(&self, x: &C) -> C {
        self.coeffs.iter().rev().fold(C::zero(&self.ring.base), |acc, c| acc.mul(x).add(c))
    }

    /// Horner evaluation in an algebra `R` through the structure map `embed`.
    pub fn eval_in<R: Ring>(&self, x: &R, embed: impl Fn(&C) -> R) -> R {
        let ctx = x.ctx();
        self.coeffs.iter().rev().fold(R::zero(&ctx), |acc, c| acc.mul(x).add(&embed(c)))
    }

    /// `self(g)`.
    pub fn compose(&self, g: &Self) -> Self {
        let zero = Poly::zero_in(g.ring.base.clone(), g.ring.var);
        self.coeffs.iter().rev().fold(zero, |acc, c| acc.mul(g).add(&Poly::constant(c.clone(), g.ring.var)))
    }

    pub fn derivative(&self) -> Self {
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.mul(&C::from_int(&self.ring.base, i as i64)))
            .collect();
        Poly::from_ring(self.ring.clone(), v)
    }

    pub fn map_coeffs<D: Ring>(&self, base: D::Ctx, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly::new(base, self.ring.var, self.coeffs.iter().map(f).collect())
    }

    /// Division with remainder by a monic divisor; valid over any ring.
    pub fn div_rem_monic(&self, d: &Self) -> Result<(Self, Self)> {
        if !d.is_monic() {
            return Err(Error::NotMonic(format!("{:?}", d.coeffs.len())));
        }
        let dd = d.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Ok((Poly::zero_in(self.ring.base.clone(), self.ring.var), self.clone()));
        }
        let mut r = self.coeffs.clone();
        let mut quo = vec![C::zero(&self.ring.base); r.len() - dd];
        for k in (dd..r.len()).rev() {
            let c = r[k].clone();
            if c.is_zero() {
                continue;
            }
            quo[k - dd] = c.clone();
            for (i, di) in d.coeffs.iter().enumerate() {
                if !di.is_zero() {
                    r[k - dd + i] = r[k - dd + i].sub(&c.mul(di));
                }
            }
        }
        r.truncate(dd);
        Ok((Poly::from_ring(self.ring.clone(), quo), Poly::from_ring(self.ring.clone(), r)))
    }

    pub fn rem_monic(&self, d: &Self) -> Result<Self> {
        Ok(self.div_rem_monic(d)?.1)
    }

    /// `self * rhs mod modulus` for monic `modulus`.
    pub fn mul_mod_monic(&self, rhs: &Self, modulus: &Self) -> Result<Self> {
        self.mul(rhs).rem_monic(modulus)
    }

    pub fn pow_mod_monic(&self, mut e: u64, modulus: &Self) -> Result<Self> {
        let mut acc = Poly::one_in(self.ring.base.clone(), self.ring.var).rem_monic(modulus)?;
        let mut b = self.rem_monic(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod_monic(&b, modulus)?;
            }
            e >>= 1;
            if e > 0 {
                b = b.mul_mod_monic(&b, modulus)?;
            }
        }
        Ok(acc)
    }

    /// Exact division, `None` when `d` does not divide `self`.
    pub fn div_exact_by(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(self.clone());
        }
        let dd = d.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return None;
        }
        let lead = d.coeffs[dd].clone();
        let mut r = self.coeffs.clone();
        let mut quo = vec![C::zero(&self.ring.base); r.len() - dd];
        for k in (dd..r.len()).rev() {
            if r[k].is_zero() {
                continue;
            }
            let c = r[k].div_exact(&lead)?;
            for (i, di) in d.coeffs.iter().enumerate() {
                r[k - dd + i] = r[k - dd + i].sub(&c.mul(di));
            }
            quo[k - dd] = c;
        }
        r[..dd].iter().all(|c| c.is_zero()).then(|| Poly::from_ring(self.ring.clone(), quo))
    }
}

impl<C: Field> Poly<C> {
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let lead = d.leading().ok_or(Error::DivisionByZero)?;
        let li = lead.inv().ok_or(Error::DivisionByZero)?;
        let dm = d.scale(&li);
        let (q, r) = self.div_rem_monic(&dm)?;
        Ok((q.scale(&li), r))
    }

    pub fn rem(&self, d: &Self) -> Result<Self> {
        Ok(self.div_rem(d)?.1)
    }

    /// Scaled to leading coefficient one; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.scale(&l.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Monic gcd.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s*self + t*rhs = g`, `g` monic.
    pub fn ext_gcd(&self, rhs: &Self) -> (Self, Self, Self) {
        let zero = Poly::zero_in(self.ring.base.clone(), self.ring.var);
        let one = Poly::one_in(self.ring.base.clone(), self.ring.var);
        let (mut r0, mut r1) = (self.clone(), rhs.clone());
        let (mut s0, mut s1) = (one.clone(), zero.clone());
        let (mut t0, mut t1) = (zero, one);
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.leading().cloned() {
            None => (r0, s0, t0),
            Some(l) => {
                let li = l.inv().expect("nonzero");
                (r0.scale(&li), s0.scale(&li), t0.scale(&li))
            }
        }
    }

    /// Inverse modulo `m`.
    pub fn inv_mod(&self, m: &Self) -> Result<Self> {
        let (g, s, _) = self.rem(m)?.ext_gcd(m);
        if !g.is_one_poly() {
            return Err(Error::NotInvertible);
        }
        s.rem(m)
    }

    pub fn is_one_poly(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }
}

impl<C: Ring> Ring for Poly<C> {
    type Ctx = PolyRing<C::Ctx>;

    fn ctx(&self) -> Self::Ctx {
        self.ring.clone()
    }
    fn zero(ctx: &Self::Ctx) -> Self {
        Poly::zero_in(ctx.base.clone(), ctx.var)
    }
    fn one(ctx: &Self::Ctx) -> Self {
        Poly::one_in(ctx.base.clone(), ctx.var)
    }
    fn from_int(ctx: &Self::Ctx, n: i64) -> Self {
        Poly::new(ctx.base.clone(), ctx.var, vec![C::from_int(&ctx.base, n)])
    }
    fn characteristic(ctx: &Self::Ctx) -> u64 {
        C::characteristic(&ctx.base)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }
    fn add(&self, rhs: &Self) -> Self {
        Poly::add(self, rhs)
    }
    fn neg(&self) -> Self {
        Poly::neg(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Poly::mul(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Poly::sub(self, rhs)
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        self.div_exact_by(rhs)
    }
}

// --- specifics of A = F_q[T] -------------------------------------------------

impl APoly {
    pub fn field(&self) -> &'static GaloisField {
        self.ring.base
    }

    /// Builds a polynomial in `T` from prime-field integer coefficients.
    pub fn from_ints(field: &'static GaloisField, c: &[i64]) -> Self {
        Poly::new(field, Var::T, c.iter().map(|&n| field.from_int(n)).collect())
    }

    pub fn t(field: &'static GaloisField) -> Self {
        Poly::var_in(field, Var::T)
    }

    /// Largest `v` with `pi^v | self`; `None` for zero.
    pub fn valuation(&self, pi: &APoly) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        let mut v = 0;
        let mut a = self.clone();
        loop {
            let (q, r) = a.div_rem(pi).expect("pi is nonzero");
            if !r.is_zero() {
                return Some(v);
            }
            a = q;
            v += 1;
        }
    }

    /// `self^(q^i)`: on `A` the `q`-power map substitutes `T -> T^(q^i)`.
    pub fn frobenius(&self, i: u32) -> Self {
        let step = (self.field().q() as usize).pow(i);
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![self.field().zero(); (self.coeffs.len() - 1) * step + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            v[k * step] = *c;
        }
        Poly::new(self.field(), self.var(), v)
    }

    /// Irreducibility over `F_q` by distinct-degree testing:
    /// `f` of degree `n` is irreducible iff `T^(q^n) = T mod f` and
    /// `gcd(T^(q^(n/r)) - T, f) = 1` for every prime `r | n`.
    pub fn is_irreducible(&self) -> Result<bool> {
        let n = self.degree().ok_or(Error::ZeroPolynomial)?;
        if n == 0 {
            return Ok(false);
        }
        if n == 1 {
            return Ok(true);
        }
        let f = self.monic();
        let q = f.field().q() as u64;
        let t = Poly::var_in(f.field(), f.var());
        let frob_pow = |k: usize| -> Result<APoly> {
            let mut x = t.clone();
            for _ in 0..k {
                x = x.pow_mod_monic(q, &f)?;
            }
            Ok(x)
        };
        if frob_pow(n)?.sub(&t).rem(&f)? != Poly::zero_in(f.field(), f.var()) {
            return Ok(false);
        }
        for r in prime_factors(n) {
            let g = frob_pow(n / r)?.sub(&t).gcd(&f);
            if !g.is_one_poly() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All monic polynomials of degree exactly `d`, constant coefficient
    /// varying fastest.
    pub fn monic_enumerate(field: &'static GaloisField, d: usize) -> Vec<APoly> {
        Self::monic_iter(field, d).collect()
    }

    pub fn monic_iter(field: &'static GaloisField, d: usize) -> impl Iterator<Item = APoly> {
        let q = field.q() as u64;
        let count = q.pow(d as u32);
        (0..count).map(move |idx| Self::monic_from_index(field, d, idx))
    }

    /// The `idx`-th monic polynomial of degree `d` in enumeration order.
    pub fn monic_from_index(field: &'static GaloisField, d: usize, mut idx: u64) -> APoly {
        let q = field.q() as u64;
        let mut v = Vec::with_capacity(d + 1);
        for _ in 0..d {
            v.push(field.elem((idx % q) as u32));
            idx /= q;
        }
        v.push(field.one());
        Poly::new(field, Var::T, v)
    }

    /// All polynomials of degree `< d` (including zero), in the same order.
    pub fn below_degree(field: &'static GaloisField, d: usize) -> impl Iterator<Item = APoly> {
        let q = field.q() as u64;
        (0..q.pow(d as u32)).map(move |mut idx| {
            let mut v = Vec::with_capacity(d);
            for _ in 0..d {
                v.push(field.elem((idx % q) as u32));
                idx /= q;
            }
            Poly::new(field, Var::T, v)
        })
    }
}

fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl Eq for APoly {}

impl PartialOrd for APoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Degree first, then coefficients from the top degree down; the order
/// produced by [`APoly::monic_enumerate`] within one degree.
impl Ord for APoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs.len().cmp(&other.coeffs.len()).then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl std::hash::Hash for APoly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        for c in &self.coeffs {
            c.value().hash(state);
        }
    }
}

impl<C: Ring + super::parse::Render> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::parse::Render::render(self))
    }
}
