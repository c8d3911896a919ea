//! Quotient rings `D[y] / (m(y))` for monic `m` and the norm down to `D`.

use super::poly::Poly;
use super::ring::{determinant, Field, Ring};
use crate::{Error, Result};

fn check_modulus<C: Ring>(modulus: &Poly<C>) -> Result<usize> {
    match modulus.degree() {
        Some(d) if d >= 1 && modulus.is_monic() => Ok(d),
        Some(d) if d >= 1 => Err(Error::NotMonic("quotient modulus".into())),
        _ => Err(Error::InvalidArgument("quotient modulus must have degree >= 1".into())),
    }
}

/// Matrix of multiplication by `elem` on the basis `1, y, ..., y^(N-1)`;
/// column `j` holds the coordinates of `elem * y^j`.
pub fn multiplication_matrix<C: Ring>(modulus: &Poly<C>, elem: &Poly<C>) -> Result<Vec<Vec<C>>> {
    let n = check_modulus(modulus)?;
    let base = modulus.base().clone();
    let mut m = vec![vec![C::zero(&base); n]; n];
    let mut col = elem.rem_monic(modulus)?;
    for j in 0..n {
        for (i, row) in m.iter_mut().enumerate() {
            row[j] = col.coeff(i);
        }
        if j + 1 < n {
            col = col.shift(1).rem_monic(modulus)?;
        }
    }
    Ok(m)
}

/// `N(elem)` from `D[y]/(modulus)` to `D`: the determinant of
/// multiplication by `elem`.
pub fn quotient_norm<C: Ring>(modulus: &Poly<C>, elem: &Poly<C>) -> Result<C> {
    let m = multiplication_matrix(modulus, elem)?;
    determinant(m, modulus.base())
}

/// `K[x]/(m)` over a field `K`, the carrier of the cyclotomic fields.
#[derive(Clone, Debug, PartialEq)]
pub struct QuotientRing<C: Field> {
    modulus: Poly<C>,
}

impl<C: Field> QuotientRing<C> {
    pub fn new(modulus: Poly<C>) -> Result<Self> {
        check_modulus(&modulus)?;
        Ok(QuotientRing { modulus })
    }

    pub fn modulus(&self) -> &Poly<C> {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().expect("nonzero")
    }

    pub fn reduce(&self, a: &Poly<C>) -> Poly<C> {
        a.rem_monic(&self.modulus).expect("monic modulus")
    }

    pub fn mul(&self, a: &Poly<C>, b: &Poly<C>) -> Poly<C> {
        self.reduce(&a.mul(b))
    }

    pub fn inv(&self, a: &Poly<C>) -> Result<Poly<C>> {
        a.inv_mod(&self.modulus)
    }

    pub fn pow(&self, a: &Poly<C>, e: i64) -> Result<Poly<C>> {
        let b = if e < 0 { self.inv(a)? } else { self.reduce(a) };
        b.pow_mod_monic(e.unsigned_abs(), &self.modulus)
    }

    pub fn norm(&self, a: &Poly<C>) -> Result<C> {
        quotient_norm(&self.modulus, a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basealg::{APoly, GaloisField, RatFun, Var};

    fn ypoly(c: Vec<RatFun>) -> Poly<RatFun> {
        let f = c[0].field();
        Poly::new(f, Var::Y, c)
    }

    #[test]
    fn norm_of_y_mod_y2_minus_t() {
        let f = GaloisField::get(3).unwrap();
        let t = RatFun::t(f);
        let (zero, one) = (RatFun::zero(&f), RatFun::one(&f));
        let m = ypoly(vec![t.neg(), zero.clone(), one.clone()]);
        let y = ypoly(vec![zero, one]);
        assert_eq!(quotient_norm(&m, &y).unwrap(), t.neg());
        assert_eq!(quotient_norm(&m, &y.mul(&y)).unwrap(), t.mul(&t));
        let c = ypoly(vec![RatFun::from_poly(APoly::from_ints(f, &[1, 1]))]);
        assert_eq!(quotient_norm(&m, &c).unwrap(), c.coeff(0).pow(2));
    }

    #[test]
    fn rejects_non_monic() {
        let f = GaloisField::get(3).unwrap();
        let two = RatFun::from_int(&f, 2);
        let m = ypoly(vec![RatFun::one(&f), two]);
        assert!(matches!(quotient_norm(&m, &m), Err(Error::NotMonic(_))));
    }
}
