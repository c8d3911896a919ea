//! Finite fields `F_q`, `q = p^m <= 2^16`.
//!
//! An element is stored as the integer `sum c_i p^i` of its coordinates in
//! the basis `1, z, ..., z^(m-1)`, where `z` is a root of the canonical
//! modulus: the lexicographically smallest monic irreducible of degree `m`
//! over `F_p`, coefficients compared from the top degree down. Fields are
//! built once per `q` and live for the rest of the process.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Mutex, OnceLock};

use super::ring::{Field, Ring};
use crate::{Error, Result};

pub struct GaloisField {
    p: u32,
    m: u32,
    q: u32,
    /// Canonical modulus, low degree first, monic, length m + 1.
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl PartialEq for GaloisField {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q
    }
}

impl fmt::Debug for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q)
    }
}

fn registry() -> &'static Mutex<HashMap<u32, &'static GaloisField>> {
    static FIELDS: OnceLock<Mutex<HashMap<u32, &'static GaloisField>>> = OnceLock::new();
    FIELDS.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Splits `q` as `p^m`, or `None` if `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let (mut r, mut m) = (q, 0);
    while r % p == 0 {
        r /= p;
        m += 1;
    }
    (r == 1).then_some((p, m))
}

impl GaloisField {
    /// The canonical field with `q` elements.
    pub fn get(q: u64) -> Result<&'static GaloisField> {
        if q > 1 << 16 {
            return Err(Error::FieldTooLarge(q));
        }
        let (p, m) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        let mut reg = registry().lock().expect("field registry poisoned");
        if let Some(f) = reg.get(&(q as u32)) {
            return Ok(f);
        }
        let field: &'static GaloisField = Box::leak(Box::new(Self::build(p as u32, m)));
        reg.insert(q as u32, field);
        Ok(field)
    }

    fn build(p: u32, m: u32) -> Self {
        let q = p.pow(m);
        let modulus = canonical_modulus(p, m);
        let mut f = GaloisField { p, m, q, modulus, exp: Vec::new(), log: Vec::new() };
        if q == 2 {
            f.exp = vec![1, 1];
            f.log = vec![0, 0];
            return f;
        }
        for g in 2..q.max(3) {
            let mut exp = Vec::with_capacity(2 * (q as usize - 1));
            let mut x = 1u32;
            loop {
                exp.push(x);
                x = f.slow_mul(x, g);
                if x == 1 {
                    break;
                }
            }
            if exp.len() == q as usize - 1 {
                let mut log = vec![0u32; q as usize];
                for (i, &e) in exp.iter().enumerate() {
                    log[e as usize] = i as u32;
                }
                let n = exp.len();
                exp.extend_from_within(..n);
                f.exp = exp;
                f.log = log;
                return f;
            }
        }
        // q = 3: the generator 2 is found above; every other q has one too.
        unreachable!("finite field without a primitive element")
    }

    fn digits(&self, mut v: u32) -> Vec<u32> {
        (0..self.m)
            .map(|_| {
                let d = v % self.p;
                v /= self.p;
                d
            })
            .collect()
    }

    fn undigits(&self, d: &[u32]) -> u32 {
        d.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    fn slow_mul(&self, a: u32, b: u32) -> u32 {
        let (p, m) = (self.p as u64, self.m as usize);
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u64; 2 * m];
        for i in 0..m {
            for j in 0..m {
                prod[i + j] = (prod[i + j] + da[i] as u64 * db[j] as u64) % p;
            }
        }
        for k in (m..2 * m).rev() {
            let c = prod[k];
            if c != 0 {
                for i in 0..m {
                    let t = c * self.modulus[i] as u64 % p;
                    prod[k - m + i] = (prod[k - m + i] + p - t) % p;
                }
                prod[k] = 0;
            }
        }
        let d: Vec<u32> = prod[..m].iter().map(|&c| c as u32).collect();
        self.undigits(&d)
    }

    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn m(&self) -> u32 {
        self.m
    }
    pub fn q(&self) -> u32 {
        self.q
    }
    /// Coefficients of the defining polynomial of `F_q / F_p`, low degree first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn elem(&'static self, v: u32) -> FqElem {
        assert!(v < self.q, "coordinate value out of range");
        FqElem { field: self, v }
    }
    pub fn zero(&'static self) -> FqElem {
        FqElem { field: self, v: 0 }
    }
    pub fn one(&'static self) -> FqElem {
        FqElem { field: self, v: 1 }
    }
    /// The residue of an integer in the prime field.
    pub fn from_int(&'static self, n: i64) -> FqElem {
        FqElem { field: self, v: n.rem_euclid(self.p as i64) as u32 }
    }
    /// Root of the canonical modulus (`z`); equals 0 in a prime field.
    pub fn generator(&'static self) -> FqElem {
        if self.m == 1 {
            self.zero()
        } else {
            self.elem(self.p)
        }
    }
    /// All elements in coordinate order.
    pub fn elements(&'static self) -> impl Iterator<Item = FqElem> {
        (0..self.q).map(move |v| FqElem { field: self, v })
    }

    fn add_raw(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        if self.m == 1 {
            return (a + b) % self.p;
        }
        let (mut a, mut b, mut r, mut w) = (a, b, 0, 1);
        while a > 0 || b > 0 {
            r += ((a % self.p + b % self.p) % self.p) * w;
            a /= self.p;
            b /= self.p;
            w *= self.p;
        }
        r
    }

    fn neg_raw(&self, a: u32) -> u32 {
        if self.p == 2 {
            return a;
        }
        let (mut a, mut r, mut w) = (a, 0, 1);
        while a > 0 {
            r += ((self.p - a % self.p) % self.p) * w;
            a /= self.p;
            w *= self.p;
        }
        r
    }

    fn mul_raw(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
    }

    fn inv_raw(&self, a: u32) -> u32 {
        let n = self.q - 1;
        self.exp[((n - self.log[a as usize]) % n) as usize]
    }
}

fn canonical_modulus(p: u32, m: u32) -> Vec<u32> {
    if m == 1 {
        return vec![0, 1];
    }
    // Candidates enumerated with the degree m-1 coefficient most significant,
    // which is the lexicographic order read from the top degree.
    for n in 0..p.pow(m) {
        let mut c: Vec<u32> = (0..m).map(|i| n / p.pow(i) % p).collect();
        c.push(1);
        if c[0] != 0 && fp_irreducible(&c, p) {
            return c;
        }
    }
    unreachable!("no irreducible polynomial of degree {m} over F_{p}")
}

/// Trial division by every monic polynomial of degree <= deg/2.
fn fp_irreducible(f: &[u32], p: u32) -> bool {
    let n = f.len() - 1;
    for d in 1..=n / 2 {
        for t in 0..p.pow(d as u32) {
            let mut g: Vec<u32> = (0..d).map(|i| t / p.pow(i as u32) % p).collect();
            g.push(1);
            if fp_rem(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn fp_rem(f: &[u32], g: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u64> = f.iter().map(|&c| c as u64).collect();
    let dg = g.len() - 1;
    let p = p as u64;
    for k in (dg..r.len()).rev() {
        let c = r[k] % p;
        if c != 0 {
            for i in 0..=dg {
                r[k - dg + i] = (r[k - dg + i] + p * p - c * g[i] as u64) % p;
            }
        }
    }
    r.truncate(dg);
    r.into_iter().map(|c| c as u32).collect()
}

/// An element of `F_q`; cheap to copy.
#[derive(Clone, Copy)]
pub struct FqElem {
    field: &'static GaloisField,
    v: u32,
}

impl FqElem {
    pub fn field(&self) -> &'static GaloisField {
        self.field
    }
    /// Integer encoding of the coordinate vector.
    pub fn value(&self) -> u32 {
        self.v
    }
    pub fn coordinates(&self) -> Vec<u32> {
        self.field.digits(self.v)
    }
    pub fn in_prime_field(&self) -> bool {
        self.v < self.field.p
    }
}

impl PartialEq for FqElem {
    fn eq(&self, other: &Self) -> bool {
        self.v == other.v && std::ptr::eq(self.field, other.field)
    }
}
impl Eq for FqElem {}

impl Hash for FqElem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.v.hash(state)
    }
}

impl PartialOrd for FqElem {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for FqElem {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.v.cmp(&other.v)
    }
}

impl fmt::Debug for FqElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for FqElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.in_prime_field() {
            return write!(f, "{}", self.v);
        }
        let d = self.coordinates();
        let mut parts = Vec::new();
        for (i, &c) in d.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{i}"),
            };
            parts.push(match (c, i) {
                (_, 0) => c.to_string(),
                (1, _) => mono,
                _ => format!("{c}*{mono}"),
            });
        }
        write!(f, "{}", parts.join("+"))
    }
}

impl Ring for FqElem {
    type Ctx = &'static GaloisField;

    fn ctx(&self) -> Self::Ctx {
        self.field
    }
    fn zero(ctx: &Self::Ctx) -> Self {
        ctx.zero()
    }
    fn one(ctx: &Self::Ctx) -> Self {
        ctx.one()
    }
    fn from_int(ctx: &Self::Ctx, n: i64) -> Self {
        ctx.from_int(n)
    }
    fn characteristic(ctx: &Self::Ctx) -> u64 {
        ctx.p as u64
    }
    fn is_zero(&self) -> bool {
        self.v == 0
    }
    fn is_one(&self) -> bool {
        self.v == 1
    }
    fn add(&self, rhs: &Self) -> Self {
        FqElem { field: self.field, v: self.field.add_raw(self.v, rhs.v) }
    }
    fn neg(&self) -> Self {
        FqElem { field: self.field, v: self.field.neg_raw(self.v) }
    }
    fn mul(&self, rhs: &Self) -> Self {
        FqElem { field: self.field, v: self.field.mul_raw(self.v, rhs.v) }
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        self.div(rhs)
    }
}

impl Field for FqElem {
    fn inv(&self) -> Option<Self> {
        (self.v != 0).then(|| FqElem { field: self.field, v: self.field.inv_raw(self.v) })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_moduli() {
        assert_eq!(GaloisField::get(4).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(GaloisField::get(8).unwrap().modulus(), &[1, 1, 0, 1]);
        // over F_3 the smallest degree-2 irreducible read from the top is x^2 + 1
        assert_eq!(GaloisField::get(9).unwrap().modulus(), &[1, 0, 1]);
    }

    #[test]
    fn rejects_non_prime_powers() {
        assert_eq!(GaloisField::get(6).unwrap_err(), Error::NotPrimePower(6));
        assert_eq!(GaloisField::get(1).unwrap_err(), Error::NotPrimePower(1));
        assert_eq!(GaloisField::get(1 << 17).unwrap_err(), Error::FieldTooLarge(1 << 17));
    }

    #[test]
    fn field_axioms_exhaustive_small_q() {
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            let f = GaloisField::get(q).unwrap();
            let els: Vec<_> = f.elements().collect();
            for a in &els {
                if !a.is_zero() {
                    assert!(a.mul(&a.inv().unwrap()).is_one());
                }
                assert!(a.add(&a.neg()).is_zero());
                for b in &els {
                    assert_eq!(a.add(b), b.add(a));
                    assert_eq!(a.mul(b), b.mul(a));
                    for c in &els {
                        assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)), "q={q}");
                        assert_eq!(a.add(b).add(c), a.add(&b.add(c)));
                        assert_eq!(a.mul(&b.add(c)), a.mul(b).add(&a.mul(c)));
                    }
                }
            }
            // Frobenius fixes exactly nothing beyond F_p when m > 1
            let p = f.p() as u64;
            let fixed = els.iter().filter(|a| a.pow(p) == **a).count();
            assert_eq!(fixed as u32, f.p());
        }
    }

    #[test]
    fn large_field_builds() {
        let f = GaloisField::get(1 << 16).unwrap();
        let z = f.generator();
        assert!(z.pow(65535).is_one());
        assert!(z.mul(&z.inv().unwrap()).is_one());
    }
}
