//! Divisibility of the "even" Bernoulli-Carlitz numbers by a prime `pi`.

use crate::basealg::{APoly, RatFun};
use crate::carlitz::bernoulli_carlitz_table;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct OkadaRow {
    pub k: u64,
    pub bc: RatFun,
    /// `v_pi` of the numerator in lowest terms; `None` when `BC_k = 0`.
    pub num_val: Option<u32>,
    pub den_val: u32,
}

#[derive(Clone, Debug, PartialEq)]
pub struct OkadaReport {
    pub q: u32,
    pub pi: APoly,
    pub rows: Vec<OkadaRow>,
    /// `k` with `pi | numerator(BC_k)`.
    pub divisible: Vec<u64>,
    /// `k` with `pi | denominator(BC_k)`.
    pub den_flagged: Vec<u64>,
}

/// Scans `1 <= k <= q^deg(pi) - 2` with `(q - 1) | k`.
pub fn okada_report(pi: &APoly) -> Result<OkadaReport> {
    if !pi.is_monic() {
        return Err(Error::NotMonic(pi.to_string()));
    }
    if !pi.is_irreducible()? {
        return Err(Error::Reducible(pi.to_string()));
    }
    let field = pi.field();
    let q = field.q() as u64;
    let d = pi.degree().expect("nonzero") as u32;
    let kmax = q.checked_pow(d).and_then(|v| v.checked_sub(2)).ok_or(Error::Overflow("q^deg pi"))?;
    let table = if kmax >= 1 { bernoulli_carlitz_table(field, kmax)? } else { Vec::new() };
    let mut rows = Vec::new();
    for k in (1..=kmax).filter(|k| k % (q - 1) == 0) {
        let bc = table[k as usize].value.clone();
        let num_val = bc.num().valuation(pi);
        let den_val = bc.den().valuation(pi).expect("nonzero denominator");
        rows.push(OkadaRow { k, bc, num_val, den_val });
    }
    let divisible = rows.iter().filter(|r| r.num_val.is_some_and(|v| v > 0)).map(|r| r.k).collect();
    let den_flagged = rows.iter().filter(|r| r.den_val > 0).map(|r| r.k).collect();
    Ok(OkadaReport { q: field.q(), pi: pi.clone(), rows, divisible, den_flagged })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basealg::{parse_a_poly, GaloisField};

    #[test]
    fn examples() {
        let f2 = GaloisField::get(2).unwrap();
        let r = okada_report(&parse_a_poly("T^2+T+1", f2).unwrap()).unwrap();
        assert_eq!(r.rows.len(), 2);
        assert!(r.divisible.is_empty());
        assert_eq!(r.rows[0].bc.to_string(), "1/(T^2+T)");
        assert!(okada_report(&APoly::t(f2)).unwrap().rows.is_empty());
        let f3 = GaloisField::get(3).unwrap();
        let pi = parse_a_poly("T^2+1", f3).unwrap();
        let a = okada_report(&pi).unwrap();
        assert_eq!(a, okada_report(&pi).unwrap());
        assert_eq!(a.rows.iter().map(|r| r.k).collect::<Vec<_>>(), vec![2, 4, 6]);
        for row in &a.rows {
            // the valuation agrees with repeated division by pi
            let mut n = row.bc.num().clone();
            let mut v = 0;
            while !n.is_zero() && n.rem_monic(&pi).unwrap().is_zero() {
                n = n.div_exact_by(&pi).unwrap();
                v += 1;
            }
            assert_eq!(row.num_val.unwrap_or(0), v);
        }
    }
}
