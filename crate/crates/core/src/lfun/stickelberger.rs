//! Stickelberger elements `Theta_{S,T}(u)` of the Carlitz cyclotomic
//! extensions `F_n / F`, with coefficients in `Z[(A / pi^n)^*]`.

use std::fmt;

use rayon::prelude::*;

use super::group_ring::GroupRingElem;
use crate::basealg::{APoly, Render, ResidueRing};
use crate::{Error, Result};

/// A place of `F = F_q(T)`: a monic irreducible, or the place at infinity.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Place {
    Finite(APoly),
    Infinity,
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(p) => write!(f, "{}", p.render()),
            Place::Infinity => write!(f, "inf"),
        }
    }
}

/// `Theta(u) = sum_i coeffs[i] u^i`, trailing zero coefficients removed.
#[derive(Clone, Debug, PartialEq)]
pub struct ThetaPoly {
    pub q: u32,
    pub pi: APoly,
    pub level: u32,
    /// `pi` first, then the other finite places in order, then `inf`.
    pub s: Vec<Place>,
    pub t: Vec<APoly>,
    pub coeffs: Vec<GroupRingElem>,
}

impl ThetaPoly {
    pub fn ring(&self) -> Result<ResidueRing> {
        ResidueRing::new(&self.pi, self.level)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }
}

impl fmt::Display for ThetaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| format!("({c})*u^{i}")).collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

fn check_place(p: &APoly, field: &'static crate::GaloisField) -> Result<()> {
    if p.field() != field {
        return Err(Error::Incompatible("places over different fields".into()));
    }
    if !p.is_monic() {
        return Err(Error::NotMonic(p.to_string()));
    }
    if !p.is_irreducible()? {
        return Err(Error::Reducible(p.to_string()));
    }
    Ok(())
}

/// Normalizes `S`: `pi` is inserted if absent, entries must be distinct
/// places, and `inf` must be present.
fn normalize_s(pi: &APoly, s: &[Place]) -> Result<Vec<Place>> {
    let field = pi.field();
    if !s.contains(&Place::Infinity) {
        return Err(Error::InvalidArgument("S must contain the place at infinity".into()));
    }
    let mut finite = Vec::new();
    for p in s {
        if let Place::Finite(a) = p {
            check_place(a, field)?;
            if a != pi {
                finite.push(a.clone());
            }
        }
    }
    finite.sort();
    let n = finite.len();
    finite.dedup();
    if finite.len() != n || s.iter().filter(|p| **p == Place::Infinity).count() > 1 {
        return Err(Error::InvalidArgument("S has repeated places".into()));
    }
    let mut out = vec![Place::Finite(pi.clone())];
    out.extend(finite.into_iter().map(Place::Finite));
    out.push(Place::Infinity);
    Ok(out)
}

/// Length of the trailing window of `Theta` coefficients that must vanish.
pub fn stabilization_window(pi: &APoly, level: u32, t_aux: &[APoly]) -> usize {
    let d = pi.degree().expect("nonzero");
    level as usize * d + t_aux.iter().map(|v| v.degree().expect("nonzero")).sum::<usize>() + 2
}

/// Partial zeta coefficients
/// `c_n = sum_{a monic, deg a = n, a prime to S} [a mod pi^level]`.
pub fn partial_zeta_coeffs(ring: &ResidueRing, s_finite: &[APoly], udeg: usize) -> Result<Vec<GroupRingElem>> {
    let field = ring.field();
    (0..=udeg)
        .into_par_iter()
        .map(|n| {
            let mut c = GroupRingElem::zero(ring);
            for a in APoly::monic_iter(field, n) {
                if s_finite.iter().any(|p| a.rem_monic(p).expect("monic").is_zero()) {
                    continue;
                }
                c.add_term(ring.reduce(&a), 1)?;
            }
            Ok(c)
        })
        .collect()
}

/// `Theta_{S,T}(u) = prod_{v in T}(1 - [v] q^deg v u^deg v)
/// prod_{v not in S}(1 - [v] u^deg v)^(-1)`, with `Fr_v` the class of the
/// monic generator of `v`.
///
/// The Euler product is expanded to `u^udeg`; the last
/// [`stabilization_window`] coefficients must vanish, otherwise
/// [`Error::TailNotVanishing`] is returned.
pub fn stickelberger_series(pi: &APoly, level: u32, s: &[Place], t_aux: &[APoly], udeg: usize) -> Result<ThetaPoly> {
    let field = pi.field();
    check_place(pi, field)?;
    let s = normalize_s(pi, s)?;
    let s_finite: Vec<APoly> = s
        .iter()
        .filter_map(|p| match p {
            Place::Finite(a) => Some(a.clone()),
            Place::Infinity => None,
        })
        .collect();
    let mut t_sorted = Vec::new();
    for v in t_aux {
        check_place(v, field)?;
        if s_finite.contains(v) {
            return Err(Error::InvalidArgument(format!("{} lies in both S and T", v.render())));
        }
        if t_sorted.contains(v) {
            return Err(Error::InvalidArgument(format!("{} repeated in T", v.render())));
        }
        t_sorted.push(v.clone());
    }
    t_sorted.sort();
    let window = stabilization_window(pi, level, &t_sorted);
    if udeg + 1 < window {
        return Err(Error::InvalidArgument(format!(
            "u-degree bound {udeg} is below the stabilization window {window}"
        )));
    }
    let ring = ResidueRing::new(pi, level)?;
    let mut coeffs = partial_zeta_coeffs(&ring, &s_finite, udeg)?;
    let q = field.q() as i128;
    for v in &t_sorted {
        let dv = v.degree().expect("nonzero");
        let fr = GroupRingElem::scaled_basis(&ring, v, q.checked_pow(dv as u32).ok_or(Error::Overflow("q^deg v"))?);
        // multiply by (1 - fr u^dv), top index first so lower entries are unchanged
        for n in (dv..=udeg).rev() {
            let shifted = fr.mul(&coeffs[n - dv])?;
            coeffs[n] = coeffs[n].sub(&shifted)?;
        }
    }
    for index in udeg + 1 - window..=udeg {
        if !coeffs[index].is_zero() {
            return Err(Error::TailNotVanishing { udeg, index });
        }
    }
    while coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
    Ok(ThetaPoly { q: field.q(), pi: pi.clone(), level, s, t: t_sorted, coeffs })
}

/// `theta = Theta(1)`.
pub fn theta_at_one(theta: &ThetaPoly) -> Result<GroupRingElem> {
    let ring = theta.ring()?;
    theta.coeffs.iter().try_fold(GroupRingElem::zero(&ring), |acc, c| acc.add(c))
}

/// Reduces every coefficient along `(A / pi^n)^* -> (A / pi^m)^*`.
pub fn stickelberger_project(theta: &ThetaPoly, target_level: u32) -> Result<ThetaPoly> {
    if target_level > theta.level {
        return Err(Error::Incompatible(format!("cannot project level {} to level {target_level}", theta.level)));
    }
    let target = ResidueRing::new(&theta.pi, target_level)?;
    let mut coeffs = theta.coeffs.iter().map(|c| c.project(&target)).collect::<Result<Vec<_>>>()?;
    while coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
    Ok(ThetaPoly { level: target_level, coeffs, ..theta.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basealg::{parse_a_poly, GaloisField};

    fn setup() -> (APoly, APoly, ResidueRing) {
        let f = GaloisField::get(2).unwrap();
        let pi = parse_a_poly("T^2+T+1", f).unwrap();
        let t = APoly::t(f);
        let r = ResidueRing::new(&pi, 1).unwrap();
        (pi, t, r)
    }

    #[test]
    fn worked_theta() {
        let (pi, t, r) = setup();
        let th = stickelberger_series(&pi, 1, &[Place::Infinity], std::slice::from_ref(&t), 12).unwrap();
        let one = GroupRingElem::one(&r);
        let g = GroupRingElem::basis(&r, &t);
        let g2 = g.mul(&g).unwrap();
        assert_eq!(th.coeffs.len(), 3);
        assert_eq!(th.coeffs[0], one);
        assert_eq!(th.coeffs[1], g2.sub(&g).unwrap());
        assert_eq!(th.coeffs[2], one.neg().add(&g).unwrap().sub(&g2).unwrap());
        assert!(theta_at_one(&th).unwrap().is_zero());
        assert_eq!(th.s, vec![Place::Finite(pi.clone()), Place::Infinity]);
    }

    #[test]
    fn partial_zeta_examples() {
        let (pi, t, r) = setup();
        let c = partial_zeta_coeffs(&r, std::slice::from_ref(&pi), 4).unwrap();
        let g = GroupRingElem::basis(&r, &t);
        assert_eq!(c[1], g.add(&g.mul(&g).unwrap()).unwrap());
        let n = GroupRingElem::norm_element(&r);
        assert_eq!(c[2], n);
        assert_eq!(c[4], n.scale(4).unwrap());
    }

    #[test]
    fn projection_matches_native() {
        let (pi, t, _) = setup();
        let s = [Place::Infinity];
        let th2 = stickelberger_series(&pi, 2, &s, std::slice::from_ref(&t), 12).unwrap();
        let th1 = stickelberger_series(&pi, 1, &s, std::slice::from_ref(&t), 12).unwrap();
        assert_eq!(stickelberger_project(&th2, 1).unwrap(), th1);
        let th0 = stickelberger_project(&th1, 0).unwrap();
        assert_eq!(th0, stickelberger_series(&pi, 0, &s, std::slice::from_ref(&t), 12).unwrap());
        assert_eq!(
            theta_at_one(&th0).unwrap(),
            theta_at_one(&th1).unwrap().project(&ResidueRing::new(&pi, 0).unwrap()).unwrap()
        );
    }

    #[test]
    fn rejects_bad_places() {
        let (pi, t, _) = setup();
        assert!(stickelberger_series(&pi, 1, &[Place::Finite(pi.clone())], std::slice::from_ref(&t), 12).is_err());
        assert!(stickelberger_series(&pi, 1, &[Place::Infinity], std::slice::from_ref(&pi), 12).is_err());
        assert!(stickelberger_series(&pi, 1, &[Place::Infinity], &[t.clone(), t.clone()], 12).is_err());
        assert!(matches!(stickelberger_series(&pi, 1, &[Place::Infinity], &[t], 3), Err(Error::InvalidArgument(_))));
        // without T the Euler product is not a polynomial
        assert!(matches!(
            stickelberger_series(&pi, 1, &[Place::Infinity], &[], 12),
            Err(Error::TailNotVanishing { udeg: 12, .. })
        ));
        let unit = ThetaPoly {
            q: 2,
            pi: pi.clone(),
            level: 1,
            s: vec![Place::Finite(pi.clone()), Place::Infinity],
            t: vec![],
            coeffs: vec![GroupRingElem::one(&ResidueRing::new(&pi, 1).unwrap())],
        };
        assert!(theta_at_one(&unit).unwrap() == unit.coeffs[0]);
    }
}
