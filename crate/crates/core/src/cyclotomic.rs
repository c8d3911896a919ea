//! Finite levels `F_n = F(Phi[pi^n])` of the Carlitz cyclotomic tower,
//! realized as `F[x] / (m_n)` with `x` the class of a primitive torsion
//! point `omega_n`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::basealg::{quotient_norm, solve_columns, APoly, Poly, QuotientRing, RatFun, Render, ResidueRing, Ring, Var};
use crate::carlitz::{carlitz_phi, omega_minpoly};
use crate::{Error, Result};

#[derive(Debug, PartialEq)]
pub struct CycloField {
    pi: APoly,
    level: u32,
    quotient: QuotientRing<RatFun>,
    residues: ResidueRing,
}

impl CycloField {
    /// Level `n` over `pi`; level 0 is `F` itself, with minimal polynomial
    /// `x` (the zero torsion point).
    pub fn new(pi: &APoly, n: u32) -> Result<Arc<Self>> {
        let residues = ResidueRing::new(pi, n)?;
        let f = pi.field();
        let m = if n == 0 { Poly::var_in(f, Var::X) } else { omega_minpoly(pi, n)? };
        Ok(Arc::new(CycloField { pi: pi.clone(), level: n, quotient: QuotientRing::new(m)?, residues }))
    }

    pub fn pi(&self) -> &APoly {
        &self.pi
    }
    pub fn level(&self) -> u32 {
        self.level
    }
    pub fn minpoly(&self) -> &Poly<RatFun> {
        self.quotient.modulus()
    }
    /// `[F_n : F]`.
    pub fn degree(&self) -> usize {
        self.quotient.degree()
    }
    pub fn residues(&self) -> &ResidueRing {
        &self.residues
    }
    pub fn quotient(&self) -> &QuotientRing<RatFun> {
        &self.quotient
    }

    /// Canonical residue of `a` in `(A/pi^n)^*`, rejecting multiples of `pi`.
    pub fn galois_elem(&self, a: &APoly) -> Result<APoly> {
        if !self.residues.is_unit(a) {
            return Err(Error::NotCoprime(a.to_string()));
        }
        Ok(self.residues.reduce(a))
    }

    /// The Galois group `(A/pi^n)^*` as its canonical residues.
    pub fn galois_group(&self) -> Vec<APoly> {
        self.residues.units()
    }
}

pub fn omega(field: &Arc<CycloField>) -> CycloElem {
    CycloElem::new(field, Poly::var_in(field.pi.field(), Var::X))
}

/// An element of `F_n`, reduced mod `m_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct CycloElem {
    field: Arc<CycloField>,
    rep: Poly<RatFun>,
}

impl CycloElem {
    pub fn new(field: &Arc<CycloField>, rep: Poly<RatFun>) -> Self {
        let rep = field.quotient.reduce(&rep.with_var(Var::X));
        CycloElem { field: field.clone(), rep }
    }

    pub fn scalar(field: &Arc<CycloField>, c: RatFun) -> Self {
        Self::new(field, Poly::constant(c, Var::X))
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }
    pub fn rep(&self) -> &Poly<RatFun> {
        &self.rep
    }

    /// The value in `F` when the representative is constant.
    pub fn as_scalar(&self) -> Option<RatFun> {
        match self.rep.degree() {
            None => Some(RatFun::zero(&self.field.pi.field())),
            Some(0) => Some(self.rep.coeff(0)),
            _ => None,
        }
    }

    pub fn inv(&self) -> Result<Self> {
        Ok(CycloElem { field: self.field.clone(), rep: self.field.quotient.inv(&self.rep)? })
    }

    pub fn powi(&self, e: i64) -> Result<Self> {
        Ok(CycloElem { field: self.field.clone(), rep: self.field.quotient.pow(&self.rep, e)? })
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.inv()?))
    }
}

impl Ring for CycloElem {
    type Ctx = Arc<CycloField>;

    fn ctx(&self) -> Self::Ctx {
        self.field.clone()
    }
    fn zero(ctx: &Self::Ctx) -> Self {
        CycloElem { field: ctx.clone(), rep: Poly::zero_in(ctx.pi.field(), Var::X) }
    }
    fn one(ctx: &Self::Ctx) -> Self {
        CycloElem::new(ctx, Poly::one_in(ctx.pi.field(), Var::X))
    }
    fn from_int(ctx: &Self::Ctx, n: i64) -> Self {
        CycloElem::scalar(ctx, RatFun::from_int(&ctx.pi.field(), n))
    }
    fn characteristic(ctx: &Self::Ctx) -> u64 {
        ctx.pi.field().p() as u64
    }
    fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        CycloElem { field: self.field.clone(), rep: self.rep.add(&rhs.rep) }
    }
    fn neg(&self) -> Self {
        CycloElem { field: self.field.clone(), rep: self.rep.neg() }
    }
    fn mul(&self, rhs: &Self) -> Self {
        CycloElem { field: self.field.clone(), rep: self.field.quotient.mul(&self.rep, &rhs.rep) }
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        self.div(rhs).ok()
    }
}

impl fmt::Display for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.rep.render())
    }
}

fn same_tower(a: &CycloField, b: &CycloField) -> Result<()> {
    if a.pi != b.pi {
        return Err(Error::Incompatible(format!("towers over {} and {}", a.pi, b.pi)));
    }
    Ok(())
}

/// `Phi_a(omega_n)`.
pub fn phi_at_omega(a: &APoly, field: &Arc<CycloField>) -> CycloElem {
    carlitz_phi(a).apply(&omega(field), |c| CycloElem::scalar(field, RatFun::from_poly(c.clone())))
}

/// `sigma_a(e)`: substitutes `x -> Phi_a(x) mod m_n`.
pub fn galois_act(a: &APoly, e: &CycloElem) -> Result<CycloElem> {
    let field = e.field();
    let a = field.galois_elem(a)?;
    if field.level == 0 {
        return Ok(e.clone());
    }
    let image = phi_at_omega(&a, field);
    Ok(e.rep.eval_in(&image, |c| CycloElem::scalar(field, c.clone())))
}

/// `N_(F_n/F)(e)`, as the determinant of multiplication by `e`.
pub fn norm_to_base(e: &CycloElem) -> Result<RatFun> {
    quotient_norm(e.field.minpoly(), &e.rep)
}

/// The image of `e` in `F_n` under `F_m -> F_n`, `omega_m -> Phi_(pi^(n-m))(omega_n)`.
pub fn embed(e: &CycloElem, target: &Arc<CycloField>) -> Result<CycloElem> {
    same_tower(e.field(), target)?;
    let (m, n) = (e.field.level, target.level);
    if m > n {
        return Err(Error::Incompatible(format!("cannot embed level {m} into level {n}")));
    }
    if m == 0 {
        return Ok(CycloElem::scalar(target, e.as_scalar().expect("level 0 is scalar")));
    }
    let w = phi_at_omega(&target.pi.pow((n - m) as u64), target);
    Ok(e.rep.eval_in(&w, |c| CycloElem::scalar(target, c.clone())))
}

/// `N_(F_n/F_m)(e)`: the product of `sigma_a(e)` over the transversal
/// `a = 1 mod pi^m` of `Gal(F_n/F_m)`, rewritten in the basis of `F_m`.
pub fn field_norm(e: &CycloElem, target: &Arc<CycloField>) -> Result<CycloElem> {
    same_tower(e.field(), target)?;
    let (n, m) = (e.field.level, target.level);
    if m > n {
        return Err(Error::Incompatible(format!("cannot take a norm from level {n} to level {m}")));
    }
    if m == n {
        return Ok(CycloElem::new(target, e.rep.clone()));
    }
    if m == 0 {
        return Ok(CycloElem::scalar(target, norm_to_base(e)?));
    }
    let src = e.field();
    let lower = target.residues.modulus().clone();
    let mut prod = CycloElem::one(src);
    for a in src.galois_group() {
        if a.rem_monic(&lower)?.is_one_poly() {
            prod = prod.mul(&galois_act(&a, e)?);
        }
    }
    descend(&prod, target)
}

/// Writes an element of `F_n` that lies in `F_m` in the basis of `F_m`.
fn descend(e: &CycloElem, target: &Arc<CycloField>) -> Result<CycloElem> {
    let src = e.field();
    let f = src.pi.field();
    let w = phi_at_omega(&src.pi.pow((src.level - target.level) as u64), src);
    let big = src.degree();
    let coords = |p: &Poly<RatFun>| (0..big).map(|i| p.coeff(i)).collect::<Vec<_>>();
    let mut cols = Vec::new();
    let mut pw = CycloElem::one(src);
    for _ in 0..target.degree() {
        cols.push(coords(&pw.rep));
        pw = pw.mul(&w);
    }
    let sol = solve_columns(&cols, &coords(&e.rep))
        .ok_or_else(|| Error::Internal("norm does not lie in the lower level".into()))?;
    Ok(CycloElem::new(target, Poly::new(f, Var::X, sol)))
}

/// `val_P(e) = val_pi(N_(F_n/F)(e))`, the prime `P` above `pi` being totally
/// ramified; `None` for zero.
pub fn valuation_at_p(e: &CycloElem) -> Result<Option<i64>> {
    if e.is_zero() {
        return Ok(None);
    }
    let n = if e.field.level == 0 { e.as_scalar().expect("scalar") } else { norm_to_base(e)? };
    Ok(n.valuation(&e.field.pi))
}

/// `prod_sigma sigma(omega_n)^(c_sigma)`.
pub fn upsilon(c: &BTreeMap<APoly, i64>, field: &Arc<CycloField>) -> Result<CycloElem> {
    let w = omega(field);
    let mut acc = CycloElem::one(field);
    for (a, &k) in c {
        if k != 0 {
            acc = acc.mul(&galois_act(a, &w)?.powi(k)?);
        }
    }
    Ok(acc)
}

/// `c(a, b) = Phi_a(omega_n) / Phi_b(omega_n)`.
pub fn cyclotomic_unit(a: &APoly, b: &APoly, field: &Arc<CycloField>) -> Result<CycloElem> {
    field.galois_elem(a)?;
    field.galois_elem(b)?;
    phi_at_omega(a, field).div(&phi_at_omega(b, field))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basealg::{parse_a_poly, GaloisField};

    fn a(text: &str, q: u64) -> APoly {
        parse_a_poly(text, GaloisField::get(q).unwrap()).unwrap()
    }

    fn tower(pi: &str, q: u64, n: u32) -> Arc<CycloField> {
        CycloField::new(&a(pi, q), n).unwrap()
    }

    #[test]
    fn galois_action_examples() {
        let k = tower("T^2+T+1", 2, 1);
        let w = omega(&k);
        assert_eq!(galois_act(&a("1", 2), &w).unwrap(), w);
        let direct = CycloElem::new(&k, crate::basealg::parse_x_poly("T*x+x^2", k.pi().field()).unwrap());
        assert_eq!(galois_act(&a("T", 2), &w).unwrap(), direct);
        let composed = galois_act(&a("T", 2), &galois_act(&a("T+1", 2), &w).unwrap()).unwrap();
        assert_eq!(composed, galois_act(&a("T^2+T", 2), &w).unwrap());
        assert!(matches!(galois_act(&a("T^2+T+1", 2), &w), Err(Error::NotCoprime(_))));
    }

    #[test]
    fn galois_action_is_group_action() {
        let k = tower("T^2+T+1", 2, 1);
        let e = CycloElem::new(&k, crate::basealg::parse_x_poly("x^2 + T*x + 1/(T+1)", k.pi().field()).unwrap());
        let g = k.galois_group();
        assert_eq!(g.len(), 3);
        for s in &g {
            for t in &g {
                let st = k.residues().mul(s, t);
                let lhs = galois_act(&st, &e).unwrap();
                let rhs = galois_act(s, &galois_act(t, &e).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn norms() {
        let k0 = tower("T^2+T+1", 2, 0);
        let k1 = tower("T^2+T+1", 2, 1);
        let k2 = tower("T^2+T+1", 2, 2);
        assert_eq!(field_norm(&omega(&k1), &k0).unwrap().as_scalar().unwrap().to_string(), "T^2+T+1");
        assert_eq!(field_norm(&omega(&k2), &k1).unwrap(), omega(&k1));
        let c = CycloElem::scalar(&k2, RatFun::t(k2.pi().field()));
        let n = field_norm(&c, &k1).unwrap();
        assert_eq!(n.as_scalar().unwrap(), RatFun::t(k2.pi().field()).pow(4));
    }

    #[test]
    fn odd_characteristic_norm_sign() {
        // m_1 = x^2 + T for q = 3, pi = T: N(omega_1) = T
        let k1 = tower("T", 3, 1);
        assert_eq!(k1.minpoly().to_string(), "x^2+T");
        assert_eq!(norm_to_base(&omega(&k1)).unwrap().to_string(), "T");
        let k2 = tower("T", 3, 2);
        assert_eq!(field_norm(&omega(&k2), &k1).unwrap(), omega(&k1));
    }

    #[test]
    fn valuations_and_units() {
        let k = tower("T^2+T+1", 2, 1);
        let w = omega(&k);
        assert_eq!(valuation_at_p(&w).unwrap(), Some(1));
        let pi = CycloElem::scalar(&k, RatFun::from_poly(k.pi().clone()));
        assert_eq!(valuation_at_p(&pi).unwrap(), Some(3));
        let u = cyclotomic_unit(&a("T", 2), &a("1", 2), &k).unwrap();
        assert_eq!(u.to_string(), "x+T");
        assert_eq!(valuation_at_p(&u).unwrap(), Some(0));
        assert!(cyclotomic_unit(&a("T", 2), &a("T", 2), &k).unwrap().is_one());
        let mut c = BTreeMap::new();
        c.insert(a("T", 2), 1);
        c.insert(a("T+1", 2), -1);
        assert_eq!(valuation_at_p(&upsilon(&c, &k).unwrap()).unwrap(), Some(0));
        let mut c = BTreeMap::new();
        c.insert(a("T", 2), 2);
        assert_eq!(valuation_at_p(&upsilon(&c, &k).unwrap()).unwrap(), Some(2));
        assert_eq!(valuation_at_p(&CycloElem::zero(&k)).unwrap(), None);
    }

    #[test]
    fn minpoly_divides_torsion_poly() {
        let pi = a("T^2+1", 3);
        let t = crate::carlitz::torsion_poly(&pi, 1).unwrap();
        let k = CycloField::new(&pi, 1).unwrap();
        assert!(t.rem_monic(k.minpoly()).unwrap().is_zero());
        assert_eq!(k.degree(), 8);
    }
}
