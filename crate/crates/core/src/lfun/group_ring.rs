//! Integral group rings `Z[(A / pi^n)^*]`.

use std::collections::BTreeMap;
use std::fmt;

use crate::basealg::{APoly, Render, ResidueRing};
use crate::{Error, Result};

/// A finite integer combination of classes in `(A / pi^n)^*`, keyed by
/// canonical representative.  Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupRingElem {
    ring: ResidueRing,
    terms: BTreeMap<APoly, i128>,
}

impl GroupRingElem {
    pub fn zero(ring: &ResidueRing) -> Self {
        GroupRingElem { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ring: &ResidueRing) -> Self {
        Self::basis(ring, &APoly::one_in(ring.field(), ring.pi().var()))
    }

    /// The group element `[a]`; `a` must be prime to `pi` unless the level is 0.
    pub fn basis(ring: &ResidueRing, a: &APoly) -> Self {
        Self::scaled_basis(ring, a, 1)
    }

    pub fn scaled_basis(ring: &ResidueRing, a: &APoly, c: i128) -> Self {
        let mut e = Self::zero(ring);
        e.add_term(ring.reduce(a), c).expect("single term");
        e
    }

    /// The norm element `sum_g [g]`.
    pub fn norm_element(ring: &ResidueRing) -> Self {
        let terms = ring.units().into_iter().map(|g| (g, 1)).collect();
        GroupRingElem { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &ResidueRing {
        &self.ring
    }

    pub fn terms(&self) -> &BTreeMap<APoly, i128> {
        &self.terms
    }

    pub fn coeff(&self, g: &APoly) -> i128 {
        self.terms.get(g).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient sum.
    pub fn augmentation(&self) -> Result<i128> {
        self.terms
            .values()
            .try_fold(0i128, |acc, &c| acc.checked_add(c))
            .ok_or(Error::Overflow("group ring augmentation"))
    }

    /// Adds `c [g]` for a canonical representative `g`.
    pub(crate) fn add_term(&mut self, g: APoly, c: i128) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        let cur = self.terms.get(&g).copied().unwrap_or(0);
        let v = cur.checked_add(c).ok_or(Error::Overflow("group ring coefficient"))?;
        if v == 0 {
            self.terms.remove(&g);
        } else {
            self.terms.insert(g, v);
        }
        Ok(())
    }

    fn check(&self, rhs: &Self) -> Result<()> {
        if self.ring != rhs.ring {
            return Err(Error::Incompatible("group rings differ".into()));
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check(rhs)?;
        let mut out = self.clone();
        for (g, &c) in &rhs.terms {
            out.add_term(g.clone(), c)?;
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        GroupRingElem { ring: self.ring.clone(), terms: self.terms.iter().map(|(g, c)| (g.clone(), -c)).collect() }
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, c: i128) -> Result<Self> {
        if c == 0 {
            return Ok(Self::zero(&self.ring));
        }
        let terms = self
            .terms
            .iter()
            .map(|(g, v)| v.checked_mul(c).map(|x| (g.clone(), x)))
            .collect::<Option<_>>()
            .ok_or(Error::Overflow("group ring coefficient"))?;
        Ok(GroupRingElem { ring: self.ring.clone(), terms })
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.check(rhs)?;
        let mut out = Self::zero(&self.ring);
        for (g, &a) in &self.terms {
            for (h, &b) in &rhs.terms {
                let c = a.checked_mul(b).ok_or(Error::Overflow("group ring coefficient"))?;
                out.add_term(self.ring.mul(g, h), c)?;
            }
        }
        Ok(out)
    }

    /// Image under `(A / pi^n)^* -> (A / pi^m)^*`.
    pub fn project(&self, target: &ResidueRing) -> Result<Self> {
        if target.pi() != self.ring.pi() || target.level() > self.ring.level() {
            return Err(Error::Incompatible(format!(
                "cannot project level {} to level {}",
                self.ring.level(),
                target.level()
            )));
        }
        let mut out = Self::zero(target);
        for (g, &c) in &self.terms {
            out.add_term(target.reduce(g), c)?;
        }
        Ok(out)
    }
}

impl fmt::Display for GroupRingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(g, c)| format!("{c}*[{}]", g.render())).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basealg::{parse_a_poly, GaloisField};

    #[test]
    fn arithmetic_mod_pi() {
        let f = GaloisField::get(2).unwrap();
        let pi = parse_a_poly("T^2+T+1", f).unwrap();
        let r = ResidueRing::new(&pi, 1).unwrap();
        let g = GroupRingElem::basis(&r, &APoly::t(f));
        let g2 = g.mul(&g).unwrap();
        assert_eq!(g2, GroupRingElem::basis(&r, &parse_a_poly("T+1", f).unwrap()));
        assert!(g2.mul(&g).unwrap() == GroupRingElem::one(&r));
        let n = GroupRingElem::norm_element(&r);
        assert_eq!(n.mul(&g).unwrap(), n);
        assert_eq!(n.augmentation().unwrap(), 3);
        assert!(g.sub(&g).unwrap().is_zero());
        let trivial = ResidueRing::new(&pi, 0).unwrap();
        assert_eq!(n.project(&trivial).unwrap().augmentation().unwrap(), 3);
        assert_eq!(n.project(&trivial).unwrap().terms().len(), 1);
    }
}
