//! Finite-dimensional model of the periodic resolution of the local model
//! module `I_n = ⟨e, f : εf = 0, s^n f = εe⟩ ≅ (s^n, ε)`.
//!
//! `I_n` is identified with `O_n = k[s]·1 ⊕ k[s]·ε̃`, on which `s` acts
//! diagonally and `ε` acts by `a + bε̃ ↦ s^n a ε̃`. Everything is truncated
//! modulo `s^T`, which is a submodule, so each copy of `O_n` becomes a
//! `2T`-dimensional `F_p`-space.
//!
//! Applying `Hom(-, I_n)` to the resolution gives the periodic complex
//! `I_n² → I_n² → I_n²`, each map being multiplication by
//! `M = [[ε, s^n], [0, -ε]]`.

use super::field::{self, FpMatrix};
use super::ideal::EpsPoly;
use super::poly::Poly;
use crate::error::{Error, Result};

/// An element `a + bε̃` of the truncated module.
type Elem = (Poly, Poly);

#[derive(Debug, Clone)]
pub struct TruncatedComplex {
    p: u64,
    n: usize,
    trunc: usize,
    matrix: [[EpsPoly; 2]; 2],
}

impl TruncatedComplex {
    pub fn new(n: usize, p: u64, trunc: usize) -> Result<Self> {
        field::check_prime(p)?;
        if trunc <= n {
            return Err(Error::TruncationTooSmall {
                trunc,
                required: n + 1,
            });
        }
        let eps = EpsPoly::epsilon(p);
        let neg_eps = EpsPoly::new(Poly::zero(p), Poly::constant(p, -1));
        let s_n = EpsPoly::from_poly(Poly::monomial(p, 1, n));
        let zero = EpsPoly::from_poly(Poly::zero(p));
        Ok(Self {
            p,
            n,
            trunc,
            matrix: [[eps, s_n], [zero, neg_eps]],
        })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    /// Dimension of one copy of `I_n²`.
    pub fn space_dim(&self) -> usize {
        4 * self.trunc
    }

    fn act(&self, r: &EpsPoly, (a, b): &Elem) -> Elem {
        let t = self.trunc;
        let one = (&r.one * a).truncate(t);
        let eps = (&(&r.one * b) + &(&r.eps * &a.shift(self.n))).truncate(t);
        (one, eps)
    }

    fn add(x: &Elem, y: &Elem) -> Elem {
        (&x.0 + &y.0, &x.1 + &y.1)
    }

    fn unpack(&self, v: &[u64]) -> [Elem; 2] {
        let t = self.trunc;
        let poly = |k: usize| {
            Poly::from_coeffs(
                self.p,
                &v[k * t..(k + 1) * t]
                    .iter()
                    .map(|&c| c as i64)
                    .collect::<Vec<_>>(),
            )
        };
        [(poly(0), poly(1)), (poly(2), poly(3))]
    }

    fn pack(&self, m: &[Elem; 2]) -> Vec<u64> {
        let t = self.trunc;
        let mut v = Vec::with_capacity(4 * t);
        for (a, b) in m {
            v.extend((0..t).map(|i| a.coeff(i)));
            v.extend((0..t).map(|i| b.coeff(i)));
        }
        v
    }

    fn apply_m(&self, m: &[Elem; 2]) -> [Elem; 2] {
        let row = |i: usize| {
            Self::add(
                &self.act(&self.matrix[i][0], &m[0]),
                &self.act(&self.matrix[i][1], &m[1]),
            )
        };
        [row(0), row(1)]
    }

    /// The differential `m ↦ M·m` as a `4T × 4T` matrix.
    pub fn differential(&self) -> FpMatrix {
        let dim = self.space_dim();
        let columns: Vec<Vec<u64>> = (0..dim)
            .map(|j| {
                let mut e = vec![0; dim];
                e[j] = 1;
                self.pack(&self.apply_m(&self.unpack(&e)))
            })
            .collect();
        FpMatrix::from_columns(self.p, dim, &columns)
    }

    /// Coordinates of s-degree below `k` (and the complement).
    fn degree_window(&self, k: usize) -> (Vec<usize>, Vec<usize>) {
        (0..self.space_dim()).partition(|&j| j % self.trunc < k)
    }

    /// True when `d∘d` vanishes on every vector of s-degree below `k`.
    pub fn square_vanishes_below(&self, k: usize) -> bool {
        let d = self.differential();
        let (inside, _) = self.degree_window(k);
        d.mul(&d).select_columns(&inside).is_zero()
    }

    /// `dim (ker d ∩ W) - dim (im d ∩ W)` for `W` the vectors of s-degree
    /// below `k`.
    fn homology_in_window(&self, d: &FpMatrix, image: &FpMatrix, k: usize) -> usize {
        let (inside, outside) = self.degree_window(k);
        let ker_w = inside.len() - d.select_columns(&inside).rank();
        let im_w = image.rank() - image.select_rows(&outside).rank();
        ker_w - im_w
    }

    /// `Ext¹(I_n, I_n)` read off below s-degree `T - 2n`.
    pub fn ext1_window(&self) -> usize {
        let d = self.differential();
        let k = self.trunc.saturating_sub(2 * self.n);
        self.homology_in_window(&d, &d, k)
    }

    /// Images in `Hom(F_0, I_n)` of the `O_0`-multiples of the identity:
    /// the identity corresponds to `(e, f) ↦ (-1, ε̃)`.
    pub fn scalar_endomorphisms(&self) -> FpMatrix {
        let p = self.p;
        let id: [Elem; 2] = [
            (Poly::constant(p, -1), Poly::zero(p)),
            (Poly::zero(p), Poly::one(p)),
        ];
        let columns: Vec<Vec<u64>> = (0..self.trunc)
            .flat_map(|i| {
                [
                    EpsPoly::from_poly(Poly::monomial(p, 1, i)),
                    EpsPoly::new(Poly::zero(p), Poly::monomial(p, 1, i)),
                ]
            })
            .map(|r| self.pack(&[self.act(&r, &id[0]), self.act(&r, &id[1])]))
            .collect();
        FpMatrix::from_columns(p, self.space_dim(), &columns)
    }

    /// Length of `End(I_n)/O_0` read off below s-degree `T - n`.
    pub fn endo_window(&self) -> usize {
        let d = self.differential();
        let k = self.trunc.saturating_sub(self.n);
        self.homology_in_window(&d, &self.scalar_endomorphisms(), k)
    }
}

fn stabilized(
    n: usize,
    p: u64,
    trunc: usize,
    required: usize,
    window: impl Fn(&TruncatedComplex) -> usize,
) -> Result<usize> {
    field::check_prime(p)?;
    if trunc < required {
        return Err(Error::TruncationTooSmall { trunc, required });
    }
    let low = window(&TruncatedComplex::new(n, p, trunc)?);
    let high = window(&TruncatedComplex::new(n, p, trunc + 2)?);
    if low != high {
        return Err(Error::NotStabilized {
            low: trunc,
            high: trunc + 2,
            dim_low: low,
            dim_high: high,
        });
    }
    Ok(low)
}

/// `dim Ext¹(I_n, I_n)`, confirmed at truncations `T` and `T + 2`.
pub fn ext1_dim(n: usize, p: u64, trunc: usize) -> Result<usize> {
    stabilized(n, p, trunc, 4 * n + 4, TruncatedComplex::ext1_window)
}

/// Length of `End(I_n)/O_0`, confirmed at truncations `T` and `T + 2`.
pub fn endo_quotient_dim(n: usize, p: u64, trunc: usize) -> Result<usize> {
    stabilized(n, p, trunc, 2 * n + 2, TruncatedComplex::endo_window)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ext_matches_twice_the_index() {
        assert_eq!(ext1_dim(1, 101, 8), Ok(2));
        assert_eq!(ext1_dim(0, 5, 4), Ok(0));
        assert_eq!(ext1_dim(3, 5, 16), Ok(6));
    }

    #[test]
    fn endomorphisms_match_the_index() {
        assert_eq!(endo_quotient_dim(2, 101, 6), Ok(2));
        assert_eq!(endo_quotient_dim(0, 5, 2), Ok(0));
        assert_eq!(endo_quotient_dim(4, 7, 10), Ok(4));
    }

    #[test]
    fn identity_is_a_cocycle() {
        let c = TruncatedComplex::new(3, 5, 12).unwrap();
        assert!(c.differential().mul(&c.scalar_endomorphisms()).is_zero());
    }

    #[test]
    fn complex_squares_to_zero() {
        for n in 0..4 {
            let c = TruncatedComplex::new(n, 5, 4 * n + 4).unwrap();
            assert!(c.square_vanishes_below(c.trunc() - 2 * n));
        }
    }

    #[test]
    fn truncation_guard() {
        assert_eq!(
            ext1_dim(3, 101, 4),
            Err(Error::TruncationTooSmall {
                trunc: 4,
                required: 16
            })
        );
        assert_eq!(ext1_dim(1, 4, 8), Err(Error::InvalidPrime(4)));
    }
}
