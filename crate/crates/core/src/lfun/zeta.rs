//! Power sums over monic polynomials and the zeta values of `A = F_q[T]`
//! built from them.

use rayon::prelude::*;

use crate::basealg::{binomial_mod_p, APoly, FqElem, GaloisField, Poly, Ring, TruncSeries, Var};
use crate::{Error, Result};

/// `sum_{c in F_q} c^m`: `-1` when `m > 0` and `(q - 1) | m`, else `0`.
fn fq_power_sum(field: &'static GaloisField, m: u64) -> FqElem {
    let q1 = field.q() as u64 - 1;
    if m > 0 && m.is_multiple_of(q1) {
        field.from_int(-1)
    } else {
        field.zero()
    }
}

/// `P_d(i) = sum_{deg b < d} b^i` for `0 <= i <= k`, all `d <= dmax`.
///
/// Splitting `b = c T^(d-1) + b'` gives
/// `P_d(i) = sum_j C(i, j) P_(d-1)(j) s(i - j) T^((d-1)(i-j))`.
fn lower_power_sums(field: &'static GaloisField, k: u64, dmax: usize) -> Vec<Vec<APoly>> {
    let p = field.p() as u64;
    let zero = Poly::zero_in(field, Var::T);
    let mut first = vec![zero.clone(); k as usize + 1];
    first[0] = Poly::one_in(field, Var::T);
    let mut table = vec![first];
    for d in 1..=dmax {
        let prev = &table[d - 1];
        let row: Vec<APoly> = (0..=k)
            .map(|i| {
                let mut acc = zero.clone();
                for j in 0..=i {
                    let b = binomial_mod_p(i as i64, j as i64, p);
                    if b == 0 || prev[j as usize].is_zero() {
                        continue;
                    }
                    let s = fq_power_sum(field, i - j);
                    if s.is_zero() {
                        continue;
                    }
                    let c = s.mul(&field.from_int(b as i64));
                    let shift = (d - 1) * (i - j) as usize;
                    acc = acc.add(&prev[j as usize].scale(&c).shift(shift));
                }
                acc
            })
            .collect();
        table.push(row);
    }
    table
}

/// `S_d(k) = sum_{a monic, deg a = d} a^k`, from
/// `S_d(k) = sum_i C(k, i) T^(d(k-i)) P_d(i)`.
fn stratum_from_lower(field: &'static GaloisField, d: usize, k: u64, lower: &[APoly]) -> APoly {
    let p = field.p() as u64;
    let mut acc = Poly::zero_in(field, Var::T);
    for i in 0..=k {
        let b = binomial_mod_p(k as i64, i as i64, p);
        if b == 0 || lower[i as usize].is_zero() {
            continue;
        }
        let c = field.from_int(b as i64);
        acc = acc.add(&lower[i as usize].scale(&c).shift(d * (k - i) as usize));
    }
    acc
}

/// `S_d(k) = sum_{a monic, deg a = d} a^k`, exact in `A`.
pub fn power_sum(field: &'static GaloisField, d: usize, k: u64) -> APoly {
    let lower = lower_power_sums(field, k, d);
    stratum_from_lower(field, d, k, &lower[d])
}

/// All strata `S_0(k), ..., S_dmax(k)`.
pub fn power_sums(field: &'static GaloisField, k: u64, dmax: usize) -> Vec<APoly> {
    let lower = lower_power_sums(field, k, dmax);
    (0..=dmax).into_par_iter().map(|d| stratum_from_lower(field, d, k, &lower[d])).collect()
}

/// `zeta_A(-k) = sum_d S_d(k)`.
///
/// Strata are summed up to `d > k/(q-1) + 1` followed by `q - 1`
/// consecutive zero strata; every stratum up to `d = k + 2` is then checked
/// to vanish.
pub fn zeta_neg(field: &'static GaloisField, k: u64) -> Result<APoly> {
    if k == 0 {
        return Err(Error::InvalidArgument("zeta_neg needs k >= 1".into()));
    }
    let q1 = field.q() as u64 - 1;
    let dmax = k as usize + 2;
    let strata = power_sums(field, k, dmax);
    let floor = (k / q1 + 1) as usize;
    let mut zeros = 0;
    let mut stop = dmax;
    for (d, s) in strata.iter().enumerate() {
        if s.is_zero() {
            zeros += 1;
        } else {
            zeros = 0;
        }
        if d > floor && zeros >= q1 as usize {
            stop = d;
            break;
        }
    }
    if let Some(d) = (stop..=dmax).find(|&d| !strata[d].is_zero()) {
        return Err(Error::Internal(format!("power sum S_{d}({k}) does not vanish")));
    }
    Ok(strata[..stop].iter().fold(Poly::zero_in(field, Var::T), |acc, s| acc.add(s)))
}

/// The value at `s = -k` of `zeta_A` with the Euler factor at `pi` removed,
/// `(1 - pi^k) zeta_A(-k)`, checked against direct enumeration of the monic
/// polynomials prime to `pi`.
pub fn zeta_v_adic_neg(pi: &APoly, k: u64) -> Result<APoly> {
    if !pi.is_monic() {
        return Err(Error::NotMonic(pi.to_string()));
    }
    if !pi.is_irreducible()? {
        return Err(Error::Reducible(pi.to_string()));
    }
    let field = pi.field();
    let factor = Poly::one_in(field, Var::T).sub(&pi.pow(k));
    let via_euler = factor.mul(&zeta_neg(field, k)?);
    let direct = coprime_power_total(pi, k);
    if via_euler != direct {
        return Err(Error::Internal(format!("Euler factor identity fails at k={k}: {via_euler} vs {direct}")));
    }
    Ok(via_euler)
}

/// `sum_d sum_{a monic deg d, pi does not divide a} a^k` by enumeration.
///
/// The degree-`d` part equals `S_d(k) - pi^k S_(d - deg pi)(k)`, which
/// vanishes once `d > k/(q-1) + deg pi`, so the sweep stops two past that.
fn coprime_power_total(pi: &APoly, k: u64) -> APoly {
    let field = pi.field();
    let q1 = field.q() as u64 - 1;
    let dmax = (k / q1) as usize + pi.degree().expect("nonzero") + 2;
    (0..=dmax)
        .into_par_iter()
        .map(|d| {
            APoly::monic_iter(field, d)
                .filter(|a| !a.rem_monic(pi).expect("monic").is_zero())
                .fold(Poly::zero_in(field, Var::T), |acc, a| acc.add(&a.pow(k)))
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(Poly::zero_in(field, Var::T), |acc, s| acc.add(&s))
}

/// `sum_{deg a <= D} a^(-k)` over monic `a`, as a series in `t = 1/T`.
///
/// A degree-`d` term has `t`-valuation `d k`, so the partial sum agrees
/// with `zeta_A(k)` modulo `t^((D+1) k)`.  With `tail = None` the result is
/// returned to exactly that precision; a larger requested `tail` is an
/// error rather than a silent truncation.
pub fn zeta_pos_trunc(
    field: &'static GaloisField,
    k: u64,
    cutoff: usize,
    tail: Option<i64>,
) -> Result<TruncSeries<FqElem>> {
    if k == 0 {
        return Err(Error::InvalidArgument("zeta_pos_trunc needs k >= 1".into()));
    }
    let certified = (cutoff as i64 + 1) * k as i64;
    let prec = match tail {
        Some(p) if p > certified => {
            return Err(Error::PrecisionExhausted { needed: p, available: certified });
        }
        Some(p) => p,
        None => certified,
    };
    let zero = TruncSeries::zero(field, Var::InvT, prec);
    let strata: Vec<TruncSeries<FqElem>> = (0..=cutoff)
        .into_par_iter()
        .map(|d| -> Result<TruncSeries<FqElem>> {
            let shift = d as i64 * k as i64;
            let mut acc = TruncSeries::zero(field, Var::InvT, prec);
            if shift >= prec {
                return Ok(acc);
            }
            // a = T^d (1 + a_(d-1) t + ... + a_0 t^d)
            for a in APoly::monic_iter(field, d) {
                let rev: Vec<FqElem> = a.coeffs().iter().rev().copied().collect();
                let s = TruncSeries::new(field, Var::InvT, 0, rev, prec - shift);
                let term = s.inv()?.pow(k).shift(shift);
                acc = acc.add(&term);
            }
            Ok(acc)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(strata.iter().fold(zero, |acc, s| acc.add(s)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basealg::parse_a_poly;

    fn gf(q: u64) -> &'static GaloisField {
        GaloisField::get(q).unwrap()
    }

    fn naive(field: &'static GaloisField, d: usize, k: u64) -> APoly {
        APoly::monic_iter(field, d).fold(Poly::zero_in(field, Var::T), |acc, a| acc.add(&a.pow(k)))
    }

    #[test]
    fn power_sum_examples() {
        let f3 = gf(3);
        for k in 0..6 {
            assert!(power_sum(f3, 0, k).is_one_poly());
        }
        assert!(power_sum(f3, 1, 1).is_zero());
        assert_eq!(power_sum(f3, 1, 2).to_string(), "2");
    }

    #[test]
    fn fast_sums_match_enumeration() {
        for q in [2, 3, 4, 5] {
            let f = gf(q);
            for k in 0..10 {
                for d in 0..4 {
                    if (q as usize).pow(d as u32) > 200 {
                        continue;
                    }
                    assert_eq!(power_sum(f, d, k), naive(f, d, k), "q={q} d={d} k={k}");
                }
            }
        }
    }

    #[test]
    fn zeta_neg_examples() {
        assert!(zeta_neg(gf(3), 1).unwrap().is_one_poly());
        assert!(zeta_neg(gf(3), 2).unwrap().is_zero());
        assert!(zeta_neg(gf(2), 1).unwrap().is_zero());
    }

    #[test]
    fn v_adic_examples() {
        let f = gf(3);
        let t = parse_a_poly("T", f).unwrap();
        assert_eq!(zeta_v_adic_neg(&t, 1).unwrap().to_string(), "2*T+1");
        let p = parse_a_poly("T^2+1", f).unwrap();
        assert_eq!(zeta_v_adic_neg(&p, 1).unwrap().to_string(), "2*T^2");
        assert!(zeta_v_adic_neg(&p, 4).unwrap().is_zero());
    }

    #[test]
    fn positive_values() {
        let f = gf(2);
        let z = zeta_pos_trunc(f, 1, 1, None).unwrap();
        assert_eq!(z.prec(), 2);
        assert_eq!(z.to_string(), "1 + O(t^2)");
        assert!(zeta_pos_trunc(f, 1, 1, Some(3)).is_err());
        let z0 = zeta_pos_trunc(gf(3), 2, 0, None).unwrap();
        assert_eq!(z0.to_string(), "1 + O(t^2)");
        // exact oracle: 1 + 1/T + 1/(T+1) expanded in t
        let wide = zeta_pos_trunc(f, 1, 3, Some(2)).unwrap();
        assert!(wide.agrees_with(&z));
    }
}
