//! The residue rings `A / pi^n`.

use super::fq::GaloisField;
use super::poly::{APoly, Poly};
use super::ring::Ring;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct ResidueRing {
    pi: APoly,
    n: u32,
    modulus: APoly,
}

impl ResidueRing {
    /// `pi` must be monic irreducible and `n >= 0`; level 0 is the zero ring
    /// whose unit group is trivial.
    pub fn new(pi: &APoly, n: u32) -> Result<Self> {
        if !pi.is_monic() {
            return Err(Error::NotMonic(pi.to_string()));
        }
        if !pi.is_irreducible()? {
            return Err(Error::Reducible(pi.to_string()));
        }
        Ok(ResidueRing { pi: pi.clone(), n, modulus: pi.pow(n as u64) })
    }

    pub fn pi(&self) -> &APoly {
        &self.pi
    }
    pub fn level(&self) -> u32 {
        self.n
    }
    pub fn modulus(&self) -> &APoly {
        &self.modulus
    }
    pub fn field(&self) -> &'static GaloisField {
        self.pi.field()
    }

    /// Canonical representative, of degree below `n deg pi`.
    pub fn reduce(&self, a: &APoly) -> APoly {
        a.rem_monic(&self.modulus).expect("modulus is monic")
    }

    pub fn mul(&self, a: &APoly, b: &APoly) -> APoly {
        self.reduce(&a.mul(b))
    }

    pub fn is_unit(&self, a: &APoly) -> bool {
        !a.rem_monic(&self.pi).expect("monic").is_zero()
    }

    pub fn inv(&self, a: &APoly) -> Result<APoly> {
        if self.n == 0 {
            return Ok(Poly::zero_in(self.field(), a.var()));
        }
        a.inv_mod(&self.modulus)
    }

    /// `|(A / pi^n)^*| = q^((n-1) d) (q^d - 1)`.
    pub fn unit_count(&self) -> u64 {
        if self.n == 0 {
            return 1;
        }
        let q = self.field().q() as u64;
        let d = self.pi.degree().expect("nonzero") as u32;
        q.pow((self.n - 1) * d) * (q.pow(d) - 1)
    }

    /// The canonical unit representatives in increasing order.
    pub fn units(&self) -> Vec<APoly> {
        if self.n == 0 {
            return vec![Poly::zero_in(self.field(), self.pi.var())];
        }
        let d = self.pi.degree().expect("nonzero") * self.n as usize;
        APoly::below_degree(self.field(), d).filter(|a| self.is_unit(a)).collect()
    }

    /// `pi`-adic reduction map to a lower level.
    pub fn project(&self, a: &APoly, m: u32) -> Result<APoly> {
        if m > self.n {
            return Err(Error::Incompatible(format!("cannot project level {} to level {m}", self.n)));
        }
        Ok(a.rem_monic(&self.pi.pow(m as u64)).expect("monic"))
    }
}

/// An element of `A / pi^n` carrying its ring.
#[derive(Clone, Debug, PartialEq)]
pub struct ResidueElem {
    ring: ResidueRing,
    rep: APoly,
}

impl ResidueElem {
    pub fn new(ring: &ResidueRing, a: &APoly) -> Self {
        ResidueElem { ring: ring.clone(), rep: ring.reduce(a) }
    }
    pub fn rep(&self) -> &APoly {
        &self.rep
    }
}

impl Ring for ResidueElem {
    type Ctx = ResidueRing;

    fn ctx(&self) -> Self::Ctx {
        self.ring.clone()
    }
    fn zero(ctx: &Self::Ctx) -> Self {
        ResidueElem::new(ctx, &Poly::zero_in(ctx.field(), ctx.pi.var()))
    }
    fn one(ctx: &Self::Ctx) -> Self {
        ResidueElem::new(ctx, &Poly::one_in(ctx.field(), ctx.pi.var()))
    }
    fn from_int(ctx: &Self::Ctx, n: i64) -> Self {
        ResidueElem::new(ctx, &Poly::constant(ctx.field().from_int(n), ctx.pi.var()))
    }
    fn characteristic(ctx: &Self::Ctx) -> u64 {
        ctx.field().p() as u64
    }
    fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        ResidueElem { ring: self.ring.clone(), rep: self.rep.add(&rhs.rep) }
    }
    fn neg(&self) -> Self {
        ResidueElem { ring: self.ring.clone(), rep: self.rep.neg() }
    }
    fn mul(&self, rhs: &Self) -> Self {
        ResidueElem { ring: self.ring.clone(), rep: self.ring.mul(&self.rep, &rhs.rep) }
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        let i = self.ring.inv(&rhs.rep).ok()?;
        Some(ResidueElem { ring: self.ring.clone(), rep: self.ring.mul(&self.rep, &i) })
    }
}
