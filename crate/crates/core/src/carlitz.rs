//! The Carlitz module `Phi: A -> A{tau}`, its torsion polynomials, the
//! Carlitz exponential and logarithm, Carlitz factorials and
//! Bernoulli-Carlitz numbers.

use crate::basealg::{APoly, Field, GaloisField, Poly, RatFun, Ring, TruncSeries, Var};
use crate::{Error, Result};

/// The additive polynomial `sum c_i tau^i`, i.e. `sum c_i x^(q^i)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SkewPoly {
    field: &'static GaloisField,
    coeffs: Vec<APoly>,
}

impl SkewPoly {
    pub fn new(field: &'static GaloisField, mut coeffs: Vec<APoly>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        SkewPoly { field, coeffs }
    }

    pub fn zero(field: &'static GaloisField) -> Self {
        SkewPoly { field, coeffs: Vec::new() }
    }

    pub fn field(&self) -> &'static GaloisField {
        self.field
    }

    /// Coefficients of `tau^0, tau^1, ...`.
    pub fn coeffs(&self) -> &[APoly] {
        &self.coeffs
    }

    pub fn tau_degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let z = Poly::zero_in(self.field, Var::T);
        let v = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).unwrap_or(&z);
                let b = rhs.coeffs.get(i).unwrap_or(&z);
                a.add(b)
            })
            .collect();
        Self::new(self.field, v)
    }

    /// `self o rhs`: `c tau^i o d tau^j = c d^(q^i) tau^(i+j)`.
    pub fn compose(&self, rhs: &Self) -> Self {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Self::zero(self.field);
        }
        let z = Poly::zero_in(self.field, Var::T);
        let mut v = vec![z; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, d) in rhs.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    v[i + j] = v[i + j].add(&c.mul(&d.frobenius(i as u32)));
                }
            }
        }
        Self::new(self.field, v)
    }

    /// `sum c_i x^(q^i)` evaluated in an `A`-algebra through `embed`; the
    /// `q`-power map is computed by repeated exponentiation.
    pub fn apply<R: Ring>(&self, x: &R, embed: impl Fn(&APoly) -> R) -> R {
        let q = self.field.q() as u64;
        let mut acc = R::zero(&x.ctx());
        let mut xp = x.clone();
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                xp = xp.pow(q);
            }
            if !c.is_zero() {
                acc = acc.add(&embed(c).mul(&xp));
            }
        }
        acc
    }

    /// The additive polynomial in `x` over `F`.
    pub fn to_x_poly(&self) -> Poly<RatFun> {
        let q = self.field.q() as usize;
        let zero = RatFun::zero(&self.field);
        let Some(top) = self.tau_degree() else {
            return Poly::zero_in(self.field, Var::X);
        };
        let mut v = vec![zero; q.pow(top as u32) + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[q.pow(i as u32)] = RatFun::from_poly(c.clone());
        }
        Poly::new(self.field, Var::X, v)
    }
}

/// `Phi_a`, with `Phi_T = T + tau`, built by Horner's rule in `Phi_T`.
pub fn carlitz_phi(a: &APoly) -> SkewPoly {
    let f = a.field();
    let phi_t = SkewPoly::new(f, vec![APoly::t(f), Poly::one_in(f, Var::T)]);
    let mut acc = SkewPoly::zero(f);
    for c in a.coeffs().iter().rev() {
        acc = phi_t.compose(&acc);
        if !c.is_zero() {
            acc = acc.add(&SkewPoly::new(f, vec![Poly::constant(*c, Var::T)]));
        }
    }
    acc
}

fn check_prime(pi: &APoly) -> Result<()> {
    if !pi.is_monic() {
        return Err(Error::NotMonic(pi.to_string()));
    }
    if !pi.is_irreducible()? {
        return Err(Error::Reducible(pi.to_string()));
    }
    Ok(())
}

/// `Phi_(pi^n)(x)`; its roots are the `pi^n`-torsion points.
pub fn torsion_poly(pi: &APoly, n: u32) -> Result<Poly<RatFun>> {
    check_prime(pi)?;
    if n == 0 {
        return Err(Error::InvalidArgument("torsion level must be positive".into()));
    }
    Ok(carlitz_phi(&pi.pow(n as u64)).to_x_poly())
}

/// Minimal polynomial of a primitive `pi^n`-torsion point:
/// `Phi_(pi^n)(x) / Phi_(pi^(n-1))(x)`, with `Phi_1(x) = x`.
pub fn omega_minpoly(pi: &APoly, n: u32) -> Result<Poly<RatFun>> {
    let top = torsion_poly(pi, n)?;
    let bottom = carlitz_phi(&pi.pow(n as u64 - 1)).to_x_poly();
    let m = top.div_exact_by(&bottom).ok_or_else(|| Error::Internal("torsion polynomials do not divide".into()))?;
    if !is_eisenstein(&m, pi) {
        return Err(Error::Internal(format!("minimal polynomial at level {n} is not Eisenstein")));
    }
    Ok(m)
}

/// Monic with integral coefficients, every lower coefficient divisible by
/// `pi` and the constant term exactly once.
pub fn is_eisenstein(f: &Poly<RatFun>, pi: &APoly) -> bool {
    let Some(n) = f.degree() else { return false };
    if n == 0 || !f.is_monic() {
        return false;
    }
    for (i, c) in f.coeffs()[..n].iter().enumerate() {
        let Some(a) = c.as_poly() else { return false };
        match a.valuation(pi) {
            None => {
                if i == 0 {
                    return false;
                }
            }
            Some(0) => return false,
            Some(v) if i == 0 && v != 1 => return false,
            Some(_) => {}
        }
    }
    true
}

/// `[i] = T^(q^i) - T`, `D_i = [i] D_(i-1)^q` and `L_i = [i] L_(i-1)` for
/// `i = 0..=n`.
#[derive(Clone, Debug, PartialEq)]
pub struct CarlitzBasis {
    pub bracket: Vec<APoly>,
    pub d: Vec<APoly>,
    pub l: Vec<APoly>,
}

impl CarlitzBasis {
    pub fn new(field: &'static GaloisField, n: usize) -> Self {
        let t = APoly::t(field);
        let one = Poly::one_in(field, Var::T);
        let mut bracket = vec![Poly::zero_in(field, Var::T)];
        let mut d = vec![one.clone()];
        let mut l = vec![one];
        for i in 1..=n {
            let b = t.frobenius(i as u32).sub(&t);
            d.push(b.mul(&d[i - 1].frobenius(1)));
            l.push(b.mul(&l[i - 1]));
            bracket.push(b);
        }
        CarlitzBasis { bracket, d, l }
    }
}

/// Largest `i` with `q^i < n`, i.e. the number of `q`-power exponents below `n` minus one.
fn q_powers_below(q: u64, n: i64) -> usize {
    let mut i = 0;
    let mut p = 1i64;
    while p.saturating_mul(q as i64) < n {
        p *= q as i64;
        i += 1;
    }
    i
}

/// `e_C(z) mod z^n`, solved from `Phi_T(e_C(z)) = e_C(T z)`:
/// `e_j (T^j - T) = [z^j] e_C(z)^q`.  The coefficients are checked against
/// `1 / D_i` at `z^(q^i)`.
pub fn carlitz_exp(field: &'static GaloisField, n: i64) -> Result<TruncSeries<RatFun>> {
    if n < 2 {
        return Err(Error::InvalidArgument("exponential precision must be at least 2".into()));
    }
    let q = field.q() as i64;
    let t = RatFun::t(field);
    let zero = RatFun::zero(&field);
    let mut e = vec![zero.clone(); n as usize];
    e[1] = RatFun::one(&field);
    for j in 2..n {
        // [z^j] e^q: the q-th power acts coefficientwise on exponents j / q
        let rhs = if j % q == 0 { e[(j / q) as usize].frobenius(1) } else { zero.clone() };
        if rhs.is_zero() {
            continue;
        }
        let denom = t.pow(j as u64).sub(&t);
        e[j as usize] = rhs.div(&denom).ok_or(Error::DivisionByZero)?;
    }
    let basis = CarlitzBasis::new(field, q_powers_below(q as u64, n));
    for (i, di) in basis.d.iter().enumerate() {
        let j = q.pow(i as u32) as usize;
        let expected = RatFun::from_poly(di.clone()).inv().expect("D_i is nonzero");
        if e[j] != expected {
            return Err(Error::Internal(format!("exponential coefficient at z^{j} differs from 1/D_{i}")));
        }
    }
    if e.iter().enumerate().any(|(j, c)| !c.is_zero() && !is_q_power(j as i64, q)) {
        return Err(Error::Internal("exponential has a coefficient off the q-power exponents".into()));
    }
    Ok(TruncSeries::new(field, Var::X, 0, e, n))
}

fn is_q_power(mut j: i64, q: i64) -> bool {
    if j < 1 {
        return false;
    }
    while j % q == 0 {
        j /= q;
    }
    j == 1
}

/// The Carlitz logarithm mod `z^n`, by reversion of `e_C`; checked to be
/// `sum (-1)^i z^(q^i) / L_i`.
pub fn carlitz_log(field: &'static GaloisField, n: i64) -> Result<TruncSeries<RatFun>> {
    let e = carlitz_exp(field, n)?;
    let lam = e.reversion()?;
    let q = field.q() as i64;
    let basis = CarlitzBasis::new(field, q_powers_below(q as u64, n));
    for (j, _) in lam.terms() {
        if !is_q_power(j, q) {
            return Err(Error::Internal(format!("logarithm has a coefficient at z^{j}")));
        }
    }
    for (i, li) in basis.l.iter().enumerate() {
        let j = q.pow(i as u32);
        let mut expected = RatFun::from_poly(li.clone()).inv().expect("L_i is nonzero");
        if i % 2 == 1 {
            expected = expected.neg();
        }
        if lam.coeff(j)? != expected {
            return Err(Error::Internal(format!("logarithm coefficient at z^{j} differs from (-1)^{i}/L_{i}")));
        }
    }
    Ok(lam)
}

/// `Pi(n) = prod D_i^(n_i)` over the base-`q` digits of `n`.
pub fn carlitz_factorial(field: &'static GaloisField, n: u64) -> APoly {
    let q = field.q() as u64;
    let mut digits = Vec::new();
    let mut m = n;
    while m > 0 {
        digits.push(m % q);
        m /= q;
    }
    let basis = CarlitzBasis::new(field, digits.len().saturating_sub(1));
    digits.iter().zip(&basis.d).fold(Poly::one_in(field, Var::T), |acc, (&k, d)| acc.mul(&d.pow(k)))
}

#[derive(Clone, Debug, PartialEq)]
pub struct BCValue {
    pub n: u64,
    pub value: RatFun,
    pub factorial: APoly,
}

/// `1 / e_C(z)` with enough precision to read `[z^(n-1)]`.
pub fn inverse_exp(field: &'static GaloisField, nmax: u64) -> Result<TruncSeries<RatFun>> {
    carlitz_exp(field, nmax as i64 + 2)?.inv()
}

/// `BC_n = Pi(n) [z^(n-1)] (1 / e_C(z))`.
pub fn bernoulli_carlitz(field: &'static GaloisField, n: u64) -> Result<BCValue> {
    Ok(bernoulli_carlitz_table(field, n)?.pop().expect("nonempty table"))
}

/// `BC_0, ..., BC_nmax` from a single inversion.
pub fn bernoulli_carlitz_table(field: &'static GaloisField, nmax: u64) -> Result<Vec<BCValue>> {
    let inv = inverse_exp(field, nmax)?;
    (0..=nmax)
        .map(|n| {
            let factorial = carlitz_factorial(field, n);
            let c = inv.coeff(n as i64 - 1)?;
            let value = c.mul(&RatFun::from_poly(factorial.clone()));
            Ok(BCValue { n, value, factorial })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basealg::parse_a_poly;

    fn gf(q: u64) -> &'static GaloisField {
        GaloisField::get(q).unwrap()
    }

    fn a(text: &str, q: u64) -> APoly {
        parse_a_poly(text, gf(q)).unwrap()
    }

    #[test]
    fn phi_small_cases() {
        assert_eq!(carlitz_phi(&a("T", 2)).to_x_poly().to_string(), "x^2+T*x");
        assert_eq!(carlitz_phi(&a("1", 2)).to_x_poly().to_string(), "x");
        assert_eq!(carlitz_phi(&a("0", 2)), SkewPoly::zero(gf(2)));
        assert_eq!(carlitz_phi(&a("T^2+T+1", 2)).to_x_poly().to_string(), "x^4+(T^2+T+1)*x^2+(T^2+T+1)*x");
    }

    #[test]
    fn phi_matches_composition_oracle() {
        // Phi_(T^2+T+1) = Phi_T o Phi_T + Phi_T + Phi_1 computed on x-polynomials
        let f = gf(2);
        let pt = carlitz_phi(&APoly::t(f)).to_x_poly();
        let id = Poly::var_in(f, Var::X);
        let direct = pt.compose(&pt).add(&pt).add(&id);
        assert_eq!(carlitz_phi(&a("T^2+T+1", 2)).to_x_poly(), direct);
    }

    #[test]
    fn torsion_and_minpoly() {
        let pi = a("T^2+T+1", 2);
        let t1 = torsion_poly(&pi, 1).unwrap();
        assert!(t1.coeff(0).is_zero());
        let m1 = omega_minpoly(&pi, 1).unwrap();
        assert_eq!(m1.to_string(), "x^3+(T^2+T+1)*x+T^2+T+1");
        assert!(is_eisenstein(&m1, &pi));
        assert_eq!(omega_minpoly(&pi, 2).unwrap().degree(), Some(12));
        let t2 = torsion_poly(&pi, 2).unwrap();
        assert_eq!(t2, t1.compose(&t1));
        assert!(matches!(torsion_poly(&a("T^2+1", 2), 1), Err(Error::Reducible(_))));
        assert!(matches!(torsion_poly(&a("2*T", 3), 1), Err(Error::NotMonic(_))));
    }

    #[test]
    fn eisenstein_detection() {
        let f = gf(3);
        let pi = a("T", 3);
        let x =
            |c: &[&str]| Poly::new(f, Var::X, c.iter().map(|s| crate::basealg::parse_ratfun(s, f).unwrap()).collect());
        assert!(is_eisenstein(&x(&["T", "0", "1"]), &pi));
        assert!(!is_eisenstein(&x(&["T^2", "T", "1"]), &pi));
        assert!(!is_eisenstein(&x(&["T", "1", "1"]), &pi));
        assert!(!is_eisenstein(&x(&["T", "1/T", "1"]), &pi));
    }

    #[test]
    fn exponential_examples() {
        let e = carlitz_exp(gf(2), 4).unwrap();
        assert_eq!(e.to_string(), "x + x^2/(T^2+T) + O(x^4)");
        let e3 = carlitz_exp(gf(3), 9).unwrap();
        assert_eq!(e3.to_string(), "x + x^3/(T^3+2*T) + O(x^9)");
        assert!(carlitz_exp(gf(2), 1).is_err());
    }

    #[test]
    fn logarithm_examples() {
        let l = carlitz_log(gf(2), 4).unwrap();
        assert_eq!(l.to_string(), "x + x^2/(T^2+T) + O(x^4)");
        let f = gf(3);
        let e = carlitz_exp(f, 9).unwrap();
        let l = carlitz_log(f, 9).unwrap();
        let id = TruncSeries::monomial(RatFun::one(&f), 1, Var::X, 9);
        assert!(l.compose(&e).unwrap().agrees_with(&id));
        assert!(e.compose(&l).unwrap().agrees_with(&id));
        assert!(l.coeff(1).unwrap().is_one());
    }

    #[test]
    fn factorial_digits() {
        let f = gf(2);
        assert!(carlitz_factorial(f, 0).is_one_poly());
        assert_eq!(carlitz_factorial(f, 2).to_string(), "T^2+T");
        assert_eq!(carlitz_factorial(f, 3).to_string(), "T^2+T");
        let b = CarlitzBasis::new(gf(3), 3);
        for i in 0..=3 {
            assert_eq!(b.d[i].degree(), Some(i * 3usize.pow(i as u32)));
            assert_eq!(b.l[i].degree(), Some((0..=i).map(|j| 3usize.pow(j as u32)).sum::<usize>() - 1));
        }
    }

    #[test]
    fn bernoulli_carlitz_examples() {
        for q in [2, 3, 4] {
            assert!(bernoulli_carlitz(gf(q), 0).unwrap().value.is_one());
        }
        assert!(bernoulli_carlitz(gf(3), 1).unwrap().value.is_zero());
        assert_eq!(bernoulli_carlitz(gf(2), 1).unwrap().value.to_string(), "1/(T^2+T)");
        let table = bernoulli_carlitz_table(gf(3), 12).unwrap();
        for bc in &table {
            if bc.n % 2 == 1 {
                assert!(bc.value.is_zero(), "BC_{} should vanish", bc.n);
            }
        }
    }
}
