//! Characters of `(A / pi^n)^*` with values in the integral cyclotomic
//! rings `Z[x] / (Phi_m(x))`, and their evaluation on Stickelberger
//! elements.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use super::group_ring::GroupRingElem;
use super::stickelberger::ThetaPoly;
use crate::basealg::{determinant, APoly, Poly, Render, ResidueRing, Ring, Var};
use crate::{Error, Result};

fn ck(v: Option<i128>) -> i128 {
    v.expect("integer overflow in character arithmetic")
}

/// A rational integer as a [`Ring`] element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ZInt(pub i128);

impl Ring for ZInt {
    type Ctx = ();

    fn ctx(&self) {}
    fn zero(_: &()) -> Self {
        ZInt(0)
    }
    fn one(_: &()) -> Self {
        ZInt(1)
    }
    fn from_int(_: &(), n: i64) -> Self {
        ZInt(n as i128)
    }
    fn characteristic(_: &()) -> u64 {
        0
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, rhs: &Self) -> Self {
        ZInt(ck(self.0.checked_add(rhs.0)))
    }
    fn neg(&self) -> Self {
        ZInt(ck(self.0.checked_neg()))
    }
    fn mul(&self, rhs: &Self) -> Self {
        ZInt(ck(self.0.checked_mul(rhs.0)))
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        (rhs.0 != 0 && self.0 % rhs.0 == 0).then(|| ZInt(self.0 / rhs.0))
    }
}

/// Signed rendering of an integer polynomial, lowest coefficient first.
fn render_int_poly(c: &[i128], x: char) -> String {
    let mut out = String::new();
    for (i, &v) in c.iter().enumerate().rev() {
        if v == 0 {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => x.to_string(),
            _ => format!("{x}^{i}"),
        };
        let mag = v.unsigned_abs();
        let body = match (i, mag) {
            (0, _) => mag.to_string(),
            (_, 1) => mono,
            _ => format!("{mag}*{mono}"),
        };
        if out.is_empty() {
            if v < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if v < 0 { "-" } else { "+" });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

impl Render for Poly<ZInt> {
    fn render(&self) -> String {
        let c: Vec<i128> = self.coeffs().iter().map(|z| z.0).collect();
        render_int_poly(&c, self.var().symbol())
    }
}

fn trim(mut v: Vec<i128>) -> Vec<i128> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Exact quotient of integer polynomials by a monic divisor.
fn div_monic(num: &[i128], den: &[i128]) -> Vec<i128> {
    let dd = den.len() - 1;
    let mut r = num.to_vec();
    let mut quo = vec![0; r.len().saturating_sub(dd)];
    for k in (dd..r.len()).rev() {
        let c = r[k];
        if c == 0 {
            continue;
        }
        for (i, &di) in den.iter().enumerate() {
            r[k - dd + i] = ck(r[k - dd + i].checked_sub(ck(c.checked_mul(di))));
        }
        quo[k - dd] = c;
    }
    debug_assert!(r.iter().all(|&v| v == 0), "inexact cyclotomic division");
    quo
}

/// The classical cyclotomic polynomial `Phi_m` over `Z`, lowest first.
pub fn cyclotomic_polynomial(m: u64) -> Vec<i128> {
    assert!(m >= 1);
    let mut num = vec![0i128; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
        num = div_monic(&num, &cyclotomic_polynomial(d));
    }
    num
}

/// The ring `Z[x] / (Phi_m(x))`.
#[derive(Clone, Debug, PartialEq)]
pub struct CycloCtx {
    m: u64,
    phi: Arc<Vec<i128>>,
}

impl CycloCtx {
    pub fn new(m: u64) -> Self {
        CycloCtx { m, phi: Arc::new(cyclotomic_polynomial(m)) }
    }
    pub fn order(&self) -> u64 {
        self.m
    }
    pub fn modulus(&self) -> &[i128] {
        &self.phi
    }
    pub fn modulus_text(&self) -> String {
        render_int_poly(&self.phi, 'x')
    }
}

/// An element of `Z[x] / (Phi_m(x))`, reduced below `deg Phi_m`.
#[derive(Clone, Debug, PartialEq)]
pub struct CycloInt {
    ctx: CycloCtx,
    c: Vec<i128>,
}

impl CycloInt {
    fn reduced(ctx: &CycloCtx, mut v: Vec<i128>) -> Self {
        let phi = &ctx.phi;
        let dd = phi.len() - 1;
        for k in (dd..v.len()).rev() {
            let c = v[k];
            if c == 0 {
                continue;
            }
            for (i, &di) in phi.iter().enumerate() {
                v[k - dd + i] = ck(v[k - dd + i].checked_sub(ck(c.checked_mul(di))));
            }
        }
        v.truncate(dd);
        CycloInt { ctx: ctx.clone(), c: trim(v) }
    }

    /// `zeta_m^e` with `zeta_m` the class of `x`.
    pub fn root_power(ctx: &CycloCtx, e: u64) -> Self {
        let mut v = vec![0; (e % ctx.m) as usize + 1];
        v[(e % ctx.m) as usize] = 1;
        Self::reduced(ctx, v)
    }

    pub fn integer(ctx: &CycloCtx, n: i128) -> Self {
        Self::reduced(ctx, vec![n])
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.c
    }

    /// The value as a rational integer, when it is one.
    pub fn as_integer(&self) -> Option<i128> {
        match self.c.len() {
            0 => Some(0),
            1 => Some(self.c[0]),
            _ => None,
        }
    }

    /// Image under `Z[zeta_m] -> Z[zeta_N]`, `zeta_m -> zeta_N^(N/m)`.
    pub fn embed(&self, target: &CycloCtx) -> Result<Self> {
        if !target.m.is_multiple_of(self.ctx.m) {
            return Err(Error::Incompatible(format!("Z[zeta_{}] does not embed in Z[zeta_{}]", self.ctx.m, target.m)));
        }
        let step = (target.m / self.ctx.m) as usize;
        let mut v = vec![0; self.c.len().saturating_sub(1) * step + 1];
        for (i, &c) in self.c.iter().enumerate() {
            v[i * step] = c;
        }
        Ok(Self::reduced(target, v))
    }
}

impl Ring for CycloInt {
    type Ctx = CycloCtx;

    fn ctx(&self) -> CycloCtx {
        self.ctx.clone()
    }
    fn zero(ctx: &CycloCtx) -> Self {
        CycloInt { ctx: ctx.clone(), c: Vec::new() }
    }
    fn one(ctx: &CycloCtx) -> Self {
        Self::integer(ctx, 1)
    }
    fn from_int(ctx: &CycloCtx, n: i64) -> Self {
        Self::integer(ctx, n as i128)
    }
    fn characteristic(_: &CycloCtx) -> u64 {
        0
    }
    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        let n = self.c.len().max(rhs.c.len());
        let v = (0..n)
            .map(|i| {
                let a = self.c.get(i).copied().unwrap_or(0);
                let b = rhs.c.get(i).copied().unwrap_or(0);
                ck(a.checked_add(b))
            })
            .collect();
        CycloInt { ctx: self.ctx.clone(), c: trim(v) }
    }
    fn neg(&self) -> Self {
        CycloInt { ctx: self.ctx.clone(), c: self.c.iter().map(|&a| ck(a.checked_neg())).collect() }
    }
    fn mul(&self, rhs: &Self) -> Self {
        if self.c.is_empty() || rhs.c.is_empty() {
            return Self::zero(&self.ctx);
        }
        let mut v = vec![0i128; self.c.len() + rhs.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            for (j, &b) in rhs.c.iter().enumerate() {
                v[i + j] = ck(v[i + j].checked_add(ck(a.checked_mul(b))));
            }
        }
        Self::reduced(&self.ctx, v)
    }
    /// Only division by rational integers is supported.
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        let d = rhs.as_integer()?;
        if d == 0 || self.c.iter().any(|a| a % d != 0) {
            return None;
        }
        Some(CycloInt { ctx: self.ctx.clone(), c: self.c.iter().map(|a| a / d).collect() })
    }
}

impl CycloInt {
    pub fn render(&self) -> String {
        render_int_poly(&self.c, 'x')
    }
}

impl Render for Poly<CycloInt> {
    fn render(&self) -> String {
        let u = self.var().symbol();
        let mut out = String::new();
        for (i, c) in self.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => u.to_string(),
                _ => format!("{u}^{i}"),
            };
            let (neg, body) = match c.as_integer() {
                Some(n) if i == 0 => (n < 0, n.unsigned_abs().to_string()),
                Some(n) if n.unsigned_abs() == 1 => (n < 0, mono),
                Some(n) => (n < 0, format!("{}*{mono}", n.unsigned_abs())),
                None if i == 0 => (false, format!("({})", c.render())),
                None => (false, format!("({})*{mono}", c.render())),
            };
            if neg {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            out.push_str(&body);
        }
        if out.is_empty() {
            "0".into()
        } else {
            out
        }
    }
}

impl fmt::Display for CycloInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// A character `chi` of `(A / pi^n)^*` of order dividing `order`, given by
/// `chi(generators[i]) = zeta_order^exponents[i]`.
#[derive(Clone, Debug, PartialEq)]
pub struct CharSpec {
    pub order: u64,
    pub generators: Vec<APoly>,
    pub exponents: Vec<u64>,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl CharSpec {
    /// The same character with `order` equal to the exact order of its image.
    pub fn primitive(&self) -> Self {
        let g = self.exponents.iter().fold(self.order, |acc, &e| gcd(acc, e % self.order));
        CharSpec {
            order: self.order / g,
            generators: self.generators.clone(),
            exponents: self.exponents.iter().map(|e| (e % self.order) / g).collect(),
        }
    }
}

/// `chi` on every element of the group, as exponents of `zeta_order`.
///
/// Walks the Cayley graph from the identity; a generator image that is not
/// compatible with the group law, or a generating set that misses part of
/// the group, is an [`Error::InconsistentCharacter`].
pub fn character_table(ring: &ResidueRing, chi: &CharSpec) -> Result<BTreeMap<APoly, u64>> {
    let size = ring.unit_count();
    if chi.order == 0 || !size.is_multiple_of(chi.order) {
        return Err(Error::InvalidArgument(format!("character order {} does not divide |G| = {size}", chi.order)));
    }
    if chi.generators.len() != chi.exponents.len() {
        return Err(Error::InvalidArgument("one exponent per generator is required".into()));
    }
    let gens: Vec<APoly> = chi.generators.iter().map(|g| ring.reduce(g)).collect();
    if ring.level() > 0 && gens.iter().any(|g| !ring.is_unit(g)) {
        return Err(Error::InvalidArgument("generators must be units".into()));
    }
    let one = ring.reduce(&Poly::one_in(ring.field(), Var::T));
    let mut table = BTreeMap::from([(one.clone(), 0u64)]);
    let mut queue = VecDeque::from([one]);
    while let Some(h) = queue.pop_front() {
        let eh = table[&h];
        for (g, &e) in gens.iter().zip(&chi.exponents) {
            let hg = ring.mul(&h, g);
            let val = (eh + e) % chi.order;
            match table.get(&hg) {
                Some(&old) if old != val => {
                    return Err(Error::InconsistentCharacter(format!("{} receives two values", hg.render())));
                }
                Some(_) => {}
                None => {
                    table.insert(hg.clone(), val);
                    queue.push_back(hg);
                }
            }
        }
    }
    if table.len() as u64 != size {
        return Err(Error::InconsistentCharacter(format!("generators reach {} of {size} group elements", table.len())));
    }
    Ok(table)
}

/// `chi` extended linearly to the group ring.
pub fn eval_group_ring(elem: &GroupRingElem, table: &BTreeMap<APoly, u64>, ctx: &CycloCtx) -> Result<CycloInt> {
    let mut acc = CycloInt::zero(ctx);
    for (g, &c) in elem.terms() {
        let e = *table
            .get(g)
            .ok_or_else(|| Error::Incompatible(format!("{} is not in the character's group", g.render())))?;
        acc = acc.add(&CycloInt::root_power(ctx, e).mul(&CycloInt::integer(ctx, c)));
    }
    Ok(acc)
}

/// `chi(Theta(u))`, a polynomial in `u` over `Z[x] / (Phi_m)`.
pub fn theta_eval_char(theta: &ThetaPoly, chi: &CharSpec) -> Result<Poly<CycloInt>> {
    let ring = theta.ring()?;
    let table = character_table(&ring, chi)?;
    let ctx = CycloCtx::new(chi.order);
    let coeffs = theta.coeffs.iter().map(|c| eval_group_ring(c, &table, &ctx)).collect::<Result<Vec<_>>>()?;
    Ok(Poly::new(ctx, Var::U, coeffs))
}

/// A generating set of the unit group, chosen greedily in representative order.
pub fn group_generators(ring: &ResidueRing) -> Vec<APoly> {
    let units = ring.units();
    let one = ring.reduce(&Poly::one_in(ring.field(), Var::T));
    let mut span = vec![one];
    let mut gens = Vec::new();
    for g in units {
        if span.contains(&g) {
            continue;
        }
        gens.push(g.clone());
        let mut next = span.clone();
        let mut frontier = span.clone();
        while !frontier.is_empty() {
            let mut fresh = Vec::new();
            for h in &frontier {
                for s in &gens {
                    let hs = ring.mul(h, s);
                    if !next.contains(&hs) {
                        next.push(hs.clone());
                        fresh.push(hs);
                    }
                }
            }
            frontier = fresh;
        }
        span = next;
    }
    gens
}

/// Every character of `(A / pi^n)^*`, each in primitive form, ordered by
/// generator exponents.
pub fn all_characters(ring: &ResidueRing) -> Result<Vec<CharSpec>> {
    let n = ring.unit_count();
    let gens = group_generators(ring);
    let r = gens.len();
    let mut out = Vec::new();
    let mut exps = vec![0u64; r];
    loop {
        let chi = CharSpec { order: n, generators: gens.clone(), exponents: exps.clone() };
        if character_table(ring, &chi).is_ok() {
            out.push(chi.primitive());
        }
        let mut i = 0;
        while i < r {
            exps[i] += 1;
            if exps[i] < n {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
        if i == r {
            break;
        }
    }
    if out.len() as u64 != n {
        return Err(Error::Internal(format!("found {} characters of a group of order {n}", out.len())));
    }
    Ok(out)
}

/// `det` of multiplication by `Theta(u)` on the regular representation,
/// computed over `Z[u]`.
pub fn regular_determinant(theta: &ThetaPoly) -> Result<Poly<ZInt>> {
    let ring = theta.ring()?;
    let units = ring.units();
    let index: BTreeMap<&APoly, usize> = units.iter().enumerate().map(|(i, g)| (g, i)).collect();
    let zero = Poly::zero_in((), Var::U);
    let mut m = vec![vec![zero.clone(); units.len()]; units.len()];
    for (i, coeff) in theta.coeffs.iter().enumerate() {
        for (h, &c) in coeff.terms() {
            for (col, g) in units.iter().enumerate() {
                let row = index[&ring.mul(h, g)];
                let add = Poly::monomial(ZInt(c), i, Var::U);
                m[row][col] = m[row][col].add(&add);
            }
        }
    }
    determinant(m, &zero.ctx())
}

/// `prod_chi chi(Theta(u))` in `Z[zeta_N][u]`, `N = |G|`, checked to have
/// integer coefficients and to equal [`regular_determinant`].
pub fn character_product(theta: &ThetaPoly) -> Result<Poly<ZInt>> {
    let ring = theta.ring()?;
    let big = CycloCtx::new(ring.unit_count());
    let mut acc = Poly::one_in(big.clone(), Var::U);
    for chi in all_characters(&ring)? {
        let v = theta_eval_char(theta, &chi)?;
        let lifted = v.coeffs().iter().map(|c| c.embed(&big)).collect::<Result<Vec<_>>>()?;
        acc = acc.mul(&Poly::new(big.clone(), Var::U, lifted));
    }
    let ints = acc
        .coeffs()
        .iter()
        .map(|c| c.as_integer().map(ZInt))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::Internal("character product has non-integer coefficients".into()))?;
    let prod = Poly::new((), Var::U, ints);
    let det = regular_determinant(theta)?;
    if prod != det {
        return Err(Error::Internal(format!(
            "character product {} differs from regular determinant {}",
            prod.render(),
            det.render()
        )));
    }
    Ok(prod)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basealg::{parse_a_poly, GaloisField};
    use crate::lfun::stickelberger::{stickelberger_series, Place};

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        let c3 = CycloCtx::new(3);
        let w = CycloInt::root_power(&c3, 1);
        assert_eq!(w.mul(&w).render(), "-x-1");
        assert!(w.pow(3).is_one());
        assert_eq!(CycloInt::root_power(&CycloCtx::new(1), 0).as_integer(), Some(1));
    }

    fn worked() -> ThetaPoly {
        let f = GaloisField::get(2).unwrap();
        let pi = parse_a_poly("T^2+T+1", f).unwrap();
        stickelberger_series(&pi, 1, &[Place::Infinity], &[APoly::t(f)], 12).unwrap()
    }

    #[test]
    fn worked_characters() {
        let th = worked();
        let t = APoly::t(GaloisField::get(2).unwrap());
        let triv = CharSpec { order: 1, generators: vec![t.clone()], exponents: vec![0] };
        assert_eq!(theta_eval_char(&th, &triv).unwrap().render(), "-u^2+1");
        let cubic = CharSpec { order: 3, generators: vec![t.clone()], exponents: vec![1] };
        let v = theta_eval_char(&th, &cubic).unwrap();
        assert_eq!(v.coeffs()[0].render(), "1");
        assert_eq!(v.coeffs()[1].render(), "-2*x-1");
        assert_eq!(v.coeffs()[2].render(), "2*x");
        let bad = CharSpec { order: 3, generators: vec![t.clone(), t], exponents: vec![1, 2] };
        assert!(matches!(theta_eval_char(&th, &bad), Err(Error::InconsistentCharacter(_))));
    }

    #[test]
    fn product_over_characters() {
        let th = worked();
        let ring = th.ring().unwrap();
        assert_eq!(all_characters(&ring).unwrap().len(), 3);
        let p = character_product(&th).unwrap();
        // (1 - u^2)(1 - u + 4u^2 ... ) evaluated through the determinant
        assert_eq!(p, regular_determinant(&th).unwrap());
        assert_eq!(p.coeffs()[0], ZInt(1));
    }

    #[test]
    fn norm_element_under_trivial_character() {
        let f = GaloisField::get(2).unwrap();
        let pi = parse_a_poly("T^2+T+1", f).unwrap();
        let ring = ResidueRing::new(&pi, 1).unwrap();
        let n = GroupRingElem::norm_element(&ring);
        let th = ThetaPoly {
            q: 2,
            pi: pi.clone(),
            level: 1,
            s: vec![Place::Finite(pi), Place::Infinity],
            t: vec![],
            coeffs: vec![GroupRingElem::zero(&ring), n],
        };
        let triv = CharSpec { order: 1, generators: vec![APoly::t(f)], exponents: vec![0] };
        assert_eq!(theta_eval_char(&th, &triv).unwrap().render(), "3*u");
    }

    #[test]
    fn noncyclic_group() {
        // (A / T^3)^* over F_2 has order 4 and no element of order 4 beyond the cyclic part
        let f = GaloisField::get(2).unwrap();
        let ring = ResidueRing::new(&APoly::t(f), 3).unwrap();
        let chars = all_characters(&ring).unwrap();
        assert_eq!(chars.len(), 4);
    }
}
