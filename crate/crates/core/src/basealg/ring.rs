//! Minimal commutative-ring interface shared by every coefficient domain.
//!
//! Elements carry their own context (the field, the polynomial ring, the
//! series precision) so that zero and one can be built without a global.

use std::fmt::Debug;

pub trait Ring: Clone + PartialEq + Debug + Send + Sync + 'static {
    type Ctx: Clone + PartialEq + Debug + Send + Sync + 'static;

    fn ctx(&self) -> Self::Ctx;
    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    /// Image of an integer under the structure map Z -> R.
    fn from_int(ctx: &Self::Ctx, n: i64) -> Self;
    fn characteristic(ctx: &Self::Ctx) -> u64;

    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool {
        *self == Self::one(&self.ctx())
    }

    fn add(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    /// The quotient `self / rhs` when it exists in the ring.
    fn div_exact(&self, rhs: &Self) -> Option<Self>;

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ctx());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    fn square(&self) -> Self {
        self.mul(self)
    }
}

pub trait Field: Ring {
    fn inv(&self) -> Option<Self>;

    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.mul(&r))
    }

    /// Integer powers, negative exponents through the inverse.
    fn powi(&self, e: i64) -> Option<Self> {
        if e >= 0 {
            Some(self.pow(e as u64))
        } else {
            self.inv().map(|i| i.pow(e.unsigned_abs()))
        }
    }
}

/// Binomial coefficient `C(n, k)` reduced mod the prime `p` (Lucas).
///
/// Negative upper arguments use `C(n, k) = (-1)^k C(k - n - 1, k)`.
pub fn binomial_mod_p(n: i64, k: i64, p: u64) -> u64 {
    if k < 0 {
        return 0;
    }
    if n < 0 {
        let b = binomial_mod_p(k - n - 1, k, p);
        return if k % 2 == 0 || b == 0 { b } else { p - b };
    }
    let (mut n, mut k) = (n as u64, k as u64);
    let mut acc = 1u64;
    while k > 0 || n > 0 {
        let (ni, ki) = (n % p, k % p);
        if ki > ni {
            return 0;
        }
        acc = acc * small_binomial(ni, ki, p) % p;
        n /= p;
        k /= p;
    }
    acc
}

fn small_binomial(n: u64, k: u64, p: u64) -> u64 {
    let (mut num, mut den) = (1u64, 1u64);
    for i in 0..k {
        num = num * ((n - i) % p) % p;
        den = den * ((i + 1) % p) % p;
    }
    num * mod_pow(den, p - 2, p) % p
}

pub(crate) fn mod_pow(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

/// Dense determinant by fraction-free (Bareiss) elimination.
///
/// Every division is exact in an integral domain; a failed exact division
/// is reported as an internal error.
pub fn determinant<R: Ring>(mut m: Vec<Vec<R>>, ctx: &R::Ctx) -> crate::Result<R> {
    let n = m.len();
    if n == 0 {
        return Ok(R::one(ctx));
    }
    let mut negate = false;
    let mut prev = R::one(ctx);
    for k in 0..n {
        let Some(piv) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return Ok(R::zero(ctx));
        };
        if piv != k {
            m.swap(piv, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] =
                    t.div_exact(&prev).ok_or_else(|| crate::Error::Internal("inexact Bareiss division".into()))?;
            }
            m[i][k] = R::zero(ctx);
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    Ok(if negate { d.neg() } else { d })
}

/// Solves `sum_j x_j cols[j] = rhs` over a field by Gauss-Jordan
/// elimination; `None` when the system is inconsistent or the columns are
/// dependent.
pub fn solve_columns<K: Field>(cols: &[Vec<K>], rhs: &[K]) -> Option<Vec<K>> {
    let rows = rhs.len();
    let n = cols.len();
    let mut m: Vec<Vec<K>> = (0..rows)
        .map(|i| {
            let mut r: Vec<K> = cols.iter().map(|c| c[i].clone()).collect();
            r.push(rhs[i].clone());
            r
        })
        .collect();
    let mut r = 0;
    for c in 0..n {
        let piv = (r..rows).find(|&i| !m[i][c].is_zero())?;
        m.swap(r, piv);
        let inv = m[r][c].inv()?;
        for j in c..=n {
            m[r][j] = m[r][j].mul(&inv);
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..=n {
                    let t = m[i][j].sub(&f.mul(&m[r][j]));
                    m[i][j] = t;
                }
            }
        }
        r += 1;
    }
    if m[r..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }
    Some((0..n).map(|i| m[i][n].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_binom(n: u64, k: u64) -> u128 {
        let mut r = 1u128;
        for i in 0..k as u128 {
            r = r * (n as u128 - i) / (i + 1);
        }
        r
    }

    #[test]
    fn lucas_matches_direct_binomials() {
        for &p in &[2u64, 3, 5, 7] {
            for n in 0..40u64 {
                for k in 0..=n {
                    assert_eq!(
                        binomial_mod_p(n as i64, k as i64, p) as u128,
                        naive_binom(n, k) % p as u128,
                        "C({n},{k}) mod {p}"
                    );
                }
            }
        }
    }

    #[test]
    fn negative_upper_binomial() {
        // C(-1, k) = (-1)^k
        assert_eq!(binomial_mod_p(-1, 3, 5), 4);
        assert_eq!(binomial_mod_p(-1, 2, 5), 1);
        // C(-2, 2) = 3
        assert_eq!(binomial_mod_p(-2, 2, 7), 3);
    }
}
