//! Ideals of `R = F_p[s, ε]/(ε²)`.
//!
//! As an `F_p[s]`-module `R` is free on `1, ε`, so an ideal is a submodule of
//! `F_p[s]^2` stable under multiplication by `ε`, i.e. under `(a, b) ↦ (0, a)`.
//! Ideals are stored by the Hermite normal form of such a submodule, which
//! makes equality a comparison of canonical data.

use std::fmt;

use super::field;
use super::hnf::{hermite_normal_form, pivot_column};
use super::poly::Poly;
use crate::error::{Error, Result};

/// `one + eps · ε`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EpsPoly {
    pub one: Poly,
    pub eps: Poly,
}

impl EpsPoly {
    pub fn new(one: Poly, eps: Poly) -> Self {
        assert_eq!(one.prime(), eps.prime(), "mixed characteristics");
        Self { one, eps }
    }

    pub fn from_poly(one: Poly) -> Self {
        let p = one.prime();
        Self::new(one, Poly::zero(p))
    }

    pub fn epsilon(p: u64) -> Self {
        Self::new(Poly::zero(p), Poly::one(p))
    }

    pub fn prime(&self) -> u64 {
        self.one.prime()
    }

    pub fn is_zero(&self) -> bool {
        self.one.is_zero() && self.eps.is_zero()
    }

    pub fn times_epsilon(&self) -> Self {
        Self::new(Poly::zero(self.prime()), self.one.clone())
    }

    pub fn mul(&self, other: &EpsPoly) -> Self {
        let one = &self.one * &other.one;
        let eps = &(&self.one * &other.eps) + &(&self.eps * &other.one);
        Self::new(one, eps)
    }

    pub fn add(&self, other: &EpsPoly) -> Self {
        Self::new(&self.one + &other.one, &self.eps + &other.eps)
    }

    pub fn sub(&self, other: &EpsPoly) -> Self {
        Self::new(&self.one - &other.one, &self.eps - &other.eps)
    }

    fn row(&self) -> Vec<Poly> {
        vec![self.one.clone(), self.eps.clone()]
    }
}

impl fmt::Display for EpsPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.one.is_zero(), self.eps.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.one),
            (true, false) => write!(f, "({})ε", self.eps),
            (false, false) => write!(f, "{} + ({})ε", self.one, self.eps),
        }
    }
}

impl fmt::Debug for EpsPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EpsPoly[F_{}]({self})", self.prime())
    }
}

/// A nonzero ideal of `R`, in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EpsIdeal {
    p: u64,
    basis: Vec<Vec<Poly>>,
}

impl EpsIdeal {
    /// The ideal generated over `R` by `gens`.
    pub fn from_generators(p: u64, gens: &[EpsPoly]) -> Result<Self> {
        field::check_prime(p)?;
        if let Some(bad) = gens.iter().find(|g| g.prime() != p) {
            return Err(Error::PrimeMismatch(p, bad.prime()));
        }
        let rows: Vec<Vec<Poly>> = gens
            .iter()
            .flat_map(|g| [g.row(), g.times_epsilon().row()])
            .collect();
        let basis = hermite_normal_form(rows, 2);
        if basis.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        Ok(Self { p, basis })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    /// Hermite basis as elements of `R`.
    pub fn basis(&self) -> Vec<EpsPoly> {
        self.basis
            .iter()
            .map(|r| EpsPoly::new(r[0].clone(), r[1].clone()))
            .collect()
    }

    /// Rank as an `F_p[s]`-module; finite colength needs rank 2.
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Monic generator of the image of the ideal in `R/(ε) = F_p[s]`.
    pub fn one_part(&self) -> Poly {
        self.basis
            .iter()
            .find(|r| pivot_column(r) == Some(0))
            .map(|r| r[0].clone())
            .unwrap_or_else(|| Poly::zero(self.p))
    }

    /// Monic `h` with `ideal ∩ εF_p[s] = h·ε`.
    pub fn eps_part(&self) -> Poly {
        self.basis
            .iter()
            .find(|r| pivot_column(r) == Some(1))
            .map(|r| r[1].clone())
            .unwrap_or_else(|| Poly::zero(self.p))
    }

    fn check_finite(&self) -> Result<(Poly, Poly)> {
        if self.rank() < 2 {
            return Err(Error::RankDeficient);
        }
        Ok((self.one_part(), self.eps_part()))
    }

    /// `dim_{F_p} R / I`.
    pub fn colength(&self) -> Result<usize> {
        let (h11, h22) = self.check_finite()?;
        Ok(h11.degree().unwrap_or(0) + h22.degree().unwrap_or(0))
    }

    /// Colength of the localization at `s = c`.
    pub fn local_colength_at(&self, c: i64) -> Result<usize> {
        let (h11, h22) = self.check_finite()?;
        Ok(h11.order_at(c).unwrap_or(0) + h22.order_at(c).unwrap_or(0))
    }

    /// Local index at `s = c`, `ord(h11) - ord(h22)`. Since `ε·I ⊆ I`, `h22`
    /// divides `h11`, so the value is nonnegative; it vanishes exactly where
    /// the ideal is locally principal.
    pub fn local_index_at(&self, c: i64) -> Result<usize> {
        let (h11, h22) = self.check_finite()?;
        let a = h11.order_at(c).unwrap_or(0);
        let b = h22.order_at(c).unwrap_or(0);
        Ok(a - b)
    }

    pub fn contains(&self, f: &EpsPoly) -> bool {
        if f.prime() != self.p {
            return false;
        }
        let mut v = f.row();
        for r in &self.basis {
            let col = pivot_column(r).expect("basis rows are nonzero");
            let (q, _) = v[col].div_rem(&r[col]);
            for (x, y) in v.iter_mut().zip(r) {
                *x = &*x - &(&q * y);
            }
        }
        v.iter().all(Poly::is_zero)
    }

    pub fn intersect(&self, other: &EpsIdeal) -> Result<EpsIdeal> {
        if self.p != other.p {
            return Err(Error::PrimeMismatch(self.p, other.p));
        }
        // Kernel trick: rows [a | a] for a in A and [b | 0] for b in B; the
        // rows whose left half vanishes carry A ∩ B in their right half.
        let zero = Poly::zero(self.p);
        let mut rows = Vec::new();
        for a in &self.basis {
            rows.push(vec![a[0].clone(), a[1].clone(), a[0].clone(), a[1].clone()]);
        }
        for b in &other.basis {
            rows.push(vec![b[0].clone(), b[1].clone(), zero.clone(), zero.clone()]);
        }
        let meet: Vec<EpsPoly> = hermite_normal_form(rows, 4)
            .into_iter()
            .filter(|r| r[0].is_zero() && r[1].is_zero())
            .map(|r| EpsPoly::new(r[2].clone(), r[3].clone()))
            .collect();
        EpsIdeal::from_generators(self.p, &meet)
    }

    /// The ideal `f · I`.
    pub fn mul_element(&self, f: &EpsPoly) -> Result<EpsIdeal> {
        if f.prime() != self.p {
            return Err(Error::PrimeMismatch(self.p, f.prime()));
        }
        let gens: Vec<EpsPoly> = self.basis().iter().map(|g| g.mul(f)).collect();
        EpsIdeal::from_generators(self.p, &gens)
    }

    /// The product ideal `I · J`.
    pub fn product(&self, other: &EpsIdeal) -> Result<EpsIdeal> {
        if self.p != other.p {
            return Err(Error::PrimeMismatch(self.p, other.p));
        }
        let gens: Vec<EpsPoly> = self
            .basis()
            .iter()
            .flat_map(|a| other.basis().into_iter().map(move |b| a.mul(&b)))
            .collect();
        EpsIdeal::from_generators(self.p, &gens)
    }
}

impl fmt::Display for EpsIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.basis().iter().map(|g| g.to_string()).collect();
        write!(f, "({})", gens.join(", "))
    }
}

impl fmt::Debug for EpsIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EpsIdeal[F_{}]{self}", self.p)
    }
}

/// `(ε, s^k)`.
pub fn standard_ideal(p: u64, k: usize) -> Result<EpsIdeal> {
    EpsIdeal::from_generators(
        p,
        &[
            EpsPoly::epsilon(p),
            EpsPoly::from_poly(Poly::monomial(p, 1, k)),
        ],
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u64 = 101;

    fn s_pow(k: usize) -> EpsPoly {
        EpsPoly::from_poly(Poly::monomial(P, 1, k))
    }

    #[test]
    fn epsilon_squares_to_zero() {
        let e = EpsPoly::epsilon(P);
        assert!(e.mul(&e).is_zero());
    }

    #[test]
    fn standard_ideals() {
        for k in 0..6 {
            let i = standard_ideal(P, k).unwrap();
            assert_eq!(i.colength().unwrap(), k);
            assert_eq!(i.local_index_at(0).unwrap(), k);
            assert!(i.contains(&EpsPoly::epsilon(P)));
            assert!(i.contains(&s_pow(k)));
        }
        assert!(!standard_ideal(P, 3).unwrap().contains(&s_pow(2)));
    }

    #[test]
    fn principal_ideals_have_index_zero() {
        // (ε - s) is principal of colength 2: R/(ε - s) = F_p[s]/(s^2).
        let f = EpsPoly::epsilon(P).sub(&s_pow(1));
        let i = EpsIdeal::from_generators(P, &[f]).unwrap();
        assert_eq!(i.colength().unwrap(), 2);
        assert_eq!(i.local_index_at(0).unwrap(), 0);
        assert_eq!(i.local_colength_at(0).unwrap(), 2);
    }

    #[test]
    fn rank_deficiency_and_errors() {
        let e = EpsIdeal::from_generators(P, &[EpsPoly::epsilon(P)]).unwrap();
        assert_eq!(e.rank(), 1);
        assert_eq!(e.colength(), Err(Error::RankDeficient));
        assert_eq!(
            EpsIdeal::from_generators(P, &[EpsPoly::from_poly(Poly::zero(P))]),
            Err(Error::ZeroIdeal)
        );
        assert_eq!(
            EpsIdeal::from_generators(4, &[]),
            Err(Error::InvalidPrime(4))
        );
        let other = standard_ideal(103, 1).unwrap();
        assert_eq!(e.intersect(&other), Err(Error::PrimeMismatch(P, 103)));
    }

    #[test]
    fn intersection_of_coprime_supports() {
        let a = standard_ideal(P, 2).unwrap();
        let shifted = EpsIdeal::from_generators(
            P,
            &[
                EpsPoly::epsilon(P),
                EpsPoly::from_poly(Poly::linear(P, 5).pow(3)),
            ],
        )
        .unwrap();
        let meet = a.intersect(&shifted).unwrap();
        assert_eq!(meet.colength().unwrap(), 5);
        assert_eq!(meet.local_index_at(0).unwrap(), 2);
        assert_eq!(meet.local_index_at(5).unwrap(), 3);
        assert_eq!(meet.local_index_at(7).unwrap(), 0);
    }

    #[test]
    fn multiplication_by_s() {
        let a = standard_ideal(P, 2).unwrap();
        let sa = a.mul_element(&s_pow(1)).unwrap();
        assert_eq!(sa.colength().unwrap(), a.colength().unwrap() + 2);
        assert_eq!(
            sa,
            a.product(
                &standard_ideal(P, 0)
                    .unwrap()
                    .mul_element(&s_pow(1))
                    .unwrap()
            )
            .unwrap()
        );
    }
}
