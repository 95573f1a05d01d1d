//! Dense univariate polynomials in `s` over `F_p`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field;

/// Coefficients are stored lowest degree first, with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    p: u64,
    coeffs: Vec<u64>,
}

impl Poly {
    fn normalized(p: u64, mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { p, coeffs }
    }

    pub fn zero(p: u64) -> Self {
        Self {
            p,
            coeffs: Vec::new(),
        }
    }

    pub fn one(p: u64) -> Self {
        Self::constant(p, 1)
    }

    pub fn constant(p: u64, c: i64) -> Self {
        Self::normalized(p, vec![field::reduce(c, p)])
    }

    /// `c · s^k`.
    pub fn monomial(p: u64, c: i64, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = field::reduce(c, p);
        Self::normalized(p, coeffs)
    }

    /// `s - c`.
    pub fn linear(p: u64, c: i64) -> Self {
        Self::from_coeffs(p, &[-c, 1])
    }

    /// Signed coefficients, constant term first.
    pub fn from_coeffs(p: u64, coeffs: &[i64]) -> Self {
        Self::normalized(p, coeffs.iter().map(|&c| field::reduce(c, p)).collect())
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    pub fn scale(&self, c: u64) -> Self {
        let p = self.p;
        Self::normalized(
            p,
            self.coeffs
                .iter()
                .map(|&a| field::mul(a, c % p, p))
                .collect(),
        )
    }

    /// Multiplies by `s^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        Self { p: self.p, coeffs }
    }

    /// Drops every term of degree `>= k`.
    pub fn truncate(&self, k: usize) -> Self {
        Self::normalized(self.p, self.coeffs.iter().take(k).copied().collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(field::inv(self.leading(), self.p))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.p);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, x: i64) -> u64 {
        let p = self.p;
        let x = field::reduce(x, p);
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| field::add(field::mul(acc, x, p), c, p))
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert_eq!(self.p, divisor.p, "mixed characteristics");
        let p = self.p;
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = field::inv(divisor.leading(), p);
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(p), self.clone());
        }
        let mut quot = vec![0; rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = field::mul(rem[k], lead_inv, p);
            if c == 0 {
                continue;
            }
            quot[k - dd] = c;
            for (j, &dc) in divisor.coeffs.iter().enumerate() {
                let idx = k - dd + j;
                rem[idx] = field::sub(rem[idx], field::mul(c, dc, p), p);
            }
        }
        (Poly::normalized(p, quot), Poly::normalized(p, rem))
    }

    /// Multiplicity of `c` as a root; `None` for the zero polynomial.
    pub fn order_at(&self, c: i64) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        let lin = Poly::linear(self.p, c);
        let mut f = self.clone();
        let mut k = 0;
        loop {
            let (q, r) = f.div_rem(&lin);
            if !r.is_zero() {
                return Some(k);
            }
            f = q;
            k += 1;
        }
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        assert_eq!(self.p, rhs.p, "mixed characteristics");
        let p = self.p;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::normalized(
            p,
            (0..n)
                .map(|i| field::add(self.coeff(i), rhs.coeff(i), p))
                .collect(),
        )
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        assert_eq!(self.p, rhs.p, "mixed characteristics");
        let p = self.p;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::normalized(
            p,
            (0..n)
                .map(|i| field::sub(self.coeff(i), rhs.coeff(i), p))
                .collect(),
        )
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.p, rhs.p, "mixed characteristics");
        let p = self.p;
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(p);
        }
        let mut out = vec![0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = field::add(out[i + j], field::mul(a, b, p), p);
            }
        }
        Poly::normalized(p, out)
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        let p = self.p;
        Poly::normalized(p, self.coeffs.iter().map(|&a| field::neg(a, p)).collect())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms = Vec::new();
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let coeff = if c == 1 && k > 0 {
                String::new()
            } else {
                c.to_string()
            };
            terms.push(match k {
                0 => coeff,
                1 => format!("{coeff}s"),
                _ => format!("{coeff}s^{k}"),
            });
        }
        write!(f, "{}", terms.join(" + "))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[F_{}]({self})", self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u64 = 101;

    #[test]
    fn arithmetic() {
        let a = Poly::from_coeffs(P, &[1, 2, 1]);
        let b = Poly::linear(P, -1);
        assert_eq!(&b * &b, a);
        assert_eq!(&(&a - &a), &Poly::zero(P));
        assert_eq!((-&b).coeffs(), &[100, 100]);
        assert_eq!(a.degree(), Some(2));
        assert_eq!(Poly::zero(P).degree(), None);
        assert_eq!(a.to_string(), "s^2 + 2s + 1");
    }

    #[test]
    fn division() {
        let a = Poly::from_coeffs(P, &[5, 0, 3, 7]);
        let b = Poly::from_coeffs(P, &[1, 4]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree().unwrap_or(0) < 1);
    }

    #[test]
    fn root_orders() {
        let f = &Poly::linear(P, 3).pow(4) * &Poly::monomial(P, 1, 2);
        assert_eq!(f.order_at(3), Some(4));
        assert_eq!(f.order_at(0), Some(2));
        assert_eq!(f.order_at(5), Some(0));
        assert_eq!(Poly::zero(P).order_at(0), None);
        assert_eq!(f.eval(3), 0);
    }

    #[test]
    fn shift_and_truncate() {
        let f = Poly::from_coeffs(P, &[1, 1]);
        assert_eq!(f.shift(2), Poly::from_coeffs(P, &[0, 0, 1, 1]));
        assert_eq!(f.shift(2).truncate(3), Poly::monomial(P, 1, 2));
        assert_eq!(f.monic(), f);
        assert!(Poly::constant(P, 7).monic().is_monic());
    }
}
