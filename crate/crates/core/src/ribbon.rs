//! Numerical invariants of a ribbon and of the discrete data describing
//! length-2 pure sheaves on it.
//!
//! A ribbon `X` is recorded only through its arithmetic genus `g` (with
//! `g = 1 - χ(O_X)`) and the genus `gbar` of `X_red`. The conormal line bundle
//! `N` then has degree `2·gbar - 1 - g`. Sheaves are recorded by their discrete
//! invariants: a generalized line bundle by its degree and local index
//! sequence, a pushed-forward rank-2 bundle by its degree on `X_red`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::stability::StabilityVerdict;

/// Genus data of a ribbon. The conormal degree is always recomputed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct RibbonInvariants {
    g: i64,
    gbar: i64,
}

impl RibbonInvariants {
    pub fn new(g: i64, gbar: i64) -> Result<Self> {
        if gbar < 0 {
            return Err(Error::NegativeReducedGenus(gbar));
        }
        Ok(Self { g, gbar })
    }

    pub fn g(&self) -> i64 {
        self.g
    }

    pub fn gbar(&self) -> i64 {
        self.gbar
    }

    /// Degree of the conormal bundle `N` on `X_red`.
    pub fn deg_n(&self) -> i64 {
        2 * self.gbar - 1 - self.g
    }

    /// Index at which generalized line bundles become strictly semistable.
    pub fn semistable_index(&self) -> i64 {
        1 + self.g - 2 * self.gbar
    }

    /// Largest index of a stable generalized line bundle.
    pub fn max_stable_index(&self) -> i64 {
        self.g - 2 * self.gbar
    }

    /// Degree on `X_red` of a rank-2 bundle whose direct image has the
    /// Hilbert polynomial of a degree-`d` line bundle.
    pub fn vb_degree(&self, d: i64) -> i64 {
        d + 2 * self.gbar - self.g - 1
    }

    /// `P_d(t) = deg(L)·t + d + 1 - g`.
    pub fn hilbert_poly(&self, deg_l: i64, d: i64) -> Result<HilbertPolynomial> {
        if deg_l < 1 {
            return Err(Error::InvalidPolarization(deg_l));
        }
        Ok(HilbertPolynomial {
            leading: deg_l,
            constant: d + 1 - self.g,
        })
    }

    /// Dimension of the generalized Jacobian, `h^1(O_X) = g + h^0(X_red, N)`.
    ///
    /// `h^0(N)` is determined by Riemann-Roch unless `0 <= deg N <= 2·gbar - 2`,
    /// in which case only Clifford bounds are returned.
    pub fn jacobian_dim(&self) -> DimBound {
        h0_line_bundle(self.gbar, self.deg_n()).shift(self.g)
    }
}

impl fmt::Display for RibbonInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ribbon(g={}, gbar={})", self.g, self.gbar)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HilbertPolynomial {
    pub leading: i64,
    pub constant: i64,
}

impl fmt::Display for HilbertPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lead = if self.leading == 1 {
            "t".to_string()
        } else {
            format!("{}t", self.leading)
        };
        match self.constant {
            0 => write!(f, "{lead}"),
            c if c > 0 => write!(f, "{lead} + {c}"),
            c => write!(f, "{lead} - {}", -c),
        }
    }
}

/// A dimension that is either pinned down by the numerical data or only
/// bounded by it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DimBound {
    Exact(i64),
    Unknown { lo: i64, hi: i64 },
}

impl DimBound {
    fn between(lo: i64, hi: i64) -> Self {
        if lo == hi {
            DimBound::Exact(lo)
        } else {
            DimBound::Unknown { lo, hi }
        }
    }

    pub fn exact(&self) -> Option<i64> {
        match *self {
            DimBound::Exact(v) => Some(v),
            DimBound::Unknown { .. } => None,
        }
    }

    pub fn lo(&self) -> i64 {
        match *self {
            DimBound::Exact(v) => v,
            DimBound::Unknown { lo, .. } => lo,
        }
    }

    pub fn hi(&self) -> i64 {
        match *self {
            DimBound::Exact(v) => v,
            DimBound::Unknown { hi, .. } => hi,
        }
    }

    pub fn shift(self, by: i64) -> Self {
        match self {
            DimBound::Exact(v) => DimBound::Exact(v + by),
            DimBound::Unknown { lo, hi } => DimBound::Unknown {
                lo: lo + by,
                hi: hi + by,
            },
        }
    }
}

impl fmt::Display for DimBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DimBound::Exact(v) => write!(f, "{v}"),
            DimBound::Unknown { lo, hi } => write!(f, "unknown in [{lo}, {hi}]"),
        }
    }
}

/// Range of `h^0` of a line bundle of degree `deg` on a smooth curve of
/// genus `gbar`, as far as Riemann-Roch and Clifford's theorem pin it down.
pub fn h0_line_bundle(gbar: i64, deg: i64) -> DimBound {
    if deg < 0 {
        DimBound::Exact(0)
    } else if gbar == 0 {
        DimBound::Exact(deg + 1)
    } else if deg > 2 * gbar - 2 {
        DimBound::Exact(deg + 1 - gbar)
    } else {
        DimBound::between((deg + 1 - gbar).max(0), deg / 2 + 1)
    }
}

/// Discrete invariant of a generalized line bundle: degree plus the multiset
/// of nonzero local indices, stored weakly decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GlbDescriptor {
    d: i64,
    indices: Vec<i64>,
}

impl GlbDescriptor {
    pub fn new(d: i64, indices: impl IntoIterator<Item = i64>) -> Result<Self> {
        let mut indices: Vec<i64> = indices.into_iter().collect();
        if let Some(&bad) = indices.iter().find(|&&b| b < 1) {
            return Err(Error::NonPositiveIndex(bad));
        }
        indices.sort_unstable_by(|a, b| b.cmp(a));
        let b: i64 = indices.iter().sum();
        if (d - b).rem_euclid(2) != 0 {
            return Err(Error::ParityViolation { d, b });
        }
        Ok(Self { d, indices })
    }

    /// A line bundle of degree `d`.
    pub fn line_bundle(d: i64) -> Result<Self> {
        Self::new(d, [])
    }

    pub fn degree(&self) -> i64 {
        self.d
    }

    pub fn indices(&self) -> &[i64] {
        &self.indices
    }

    /// Total index `b = Σ b_p`.
    pub fn index(&self) -> i64 {
        self.indices.iter().sum()
    }

    pub fn is_line_bundle(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn invariants(&self, ribbon: &RibbonInvariants) -> GlbInvariants {
        let b = self.index();
        let deg_ibar = (self.d - b) / 2;
        let deg_f1 = (self.d + b) / 2 + 2 * ribbon.gbar() - 1 - ribbon.g();
        GlbInvariants {
            b,
            blowup_genus: ribbon.g() - b,
            deg_ibar,
            deg_f1,
            e: ribbon.vb_degree(self.d),
        }
    }
}

impl fmt::Display for GlbDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "glb(d={}, [{}])",
            self.d,
            format_partition(&self.indices)
        )
    }
}

/// Derived numbers of a generalized line bundle `I`: the genus of its
/// blow-up, and the degrees of `Ī` (maximal torsion-free quotient of
/// `I|X_red`) and of the kernel `F_1(I)`, both line bundles on `X_red`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GlbInvariants {
    pub b: i64,
    pub blowup_genus: i64,
    pub deg_ibar: i64,
    pub deg_f1: i64,
    /// Degree of the rank-2 bundles sharing the Hilbert polynomial.
    pub e: i64,
}

/// A rank-2 vector bundle on `X_red`, pushed forward to the ribbon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VbDescriptor {
    degree: i64,
    split: Option<(i64, i64)>,
    status: Option<StabilityVerdict>,
}

impl VbDescriptor {
    /// `O(a) ⊕ O(b)` on `P^1`; stability follows from the splitting.
    pub fn split(a: i64, b: i64) -> Self {
        let (a, b) = if a >= b { (a, b) } else { (b, a) };
        let status = if a == b {
            StabilityVerdict::StrictlySemistable
        } else {
            StabilityVerdict::Unstable
        };
        Self {
            degree: a + b,
            split: Some((a, b)),
            status: Some(status),
        }
    }

    /// A bundle on a curve of positive genus with externally known stability.
    pub fn with_status(degree: i64, status: Option<StabilityVerdict>) -> Self {
        Self {
            degree,
            split: None,
            status,
        }
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn split_type(&self) -> Option<(i64, i64)> {
        self.split
    }

    pub fn status(&self) -> Option<StabilityVerdict> {
        self.status
    }
}

impl fmt::Display for VbDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.split {
            Some((a, b)) => write!(f, "vb(O({a}) + O({b}))"),
            None => write!(f, "vb(e={})", self.degree),
        }
    }
}

/// Comma-joined, weakly decreasing.
pub fn format_partition(parts: &[i64]) -> String {
    parts
        .iter()
        .map(|b| b.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ribbon(g: i64, gbar: i64) -> RibbonInvariants {
        RibbonInvariants::new(g, gbar).unwrap()
    }

    #[test]
    fn conormal_degree() {
        assert_eq!(ribbon(3, 0).deg_n(), -4);
        assert_eq!(ribbon(1, 1).deg_n(), 0);
        assert_eq!(ribbon(7, 2).deg_n(), -4);
        assert_eq!(
            RibbonInvariants::new(3, -1),
            Err(Error::NegativeReducedGenus(-1))
        );
    }

    #[test]
    fn glb_parity_and_positivity() {
        let two = GlbDescriptor::new(0, [1, 1]).unwrap();
        assert_eq!(two.index(), 2);
        assert_eq!(
            GlbDescriptor::new(0, [1]),
            Err(Error::ParityViolation { d: 0, b: 1 })
        );
        let five = GlbDescriptor::new(5, [2, 3]).unwrap();
        assert_eq!(five.index(), 5);
        assert_eq!(five.indices(), &[3, 2]);
        assert_eq!(
            GlbDescriptor::new(0, [2, 0]),
            Err(Error::NonPositiveIndex(0))
        );
        assert_eq!(
            GlbDescriptor::new(-3, [1, 1, 1]).unwrap().indices(),
            &[1, 1, 1]
        );
    }

    #[test]
    fn glb_invariants_examples() {
        let inv = GlbDescriptor::new(0, [4])
            .unwrap()
            .invariants(&ribbon(3, 0));
        assert_eq!(
            (inv.b, inv.blowup_genus, inv.deg_ibar, inv.deg_f1),
            (4, -1, -2, -2)
        );

        let inv = GlbDescriptor::line_bundle(6)
            .unwrap()
            .invariants(&ribbon(4, 1));
        assert_eq!((inv.b, inv.deg_ibar), (0, 3));

        let inv = GlbDescriptor::new(1, [1, 2])
            .unwrap()
            .invariants(&ribbon(5, 1));
        assert_eq!((inv.b, inv.deg_ibar, inv.deg_f1), (3, -1, -2));
        // e = d + 2·gbar - g - 1 computed by hand: 1 + 2 - 5 - 1.
        assert_eq!(inv.deg_ibar + inv.deg_f1, -3);
        assert_eq!(inv.e, -3);
    }

    #[test]
    fn hilbert_polynomials() {
        assert_eq!(
            ribbon(3, 0).hilbert_poly(1, 0).unwrap().to_string(),
            "t - 2"
        );
        assert_eq!(
            ribbon(0, 0).hilbert_poly(2, 0).unwrap().to_string(),
            "2t + 1"
        );
        assert_eq!(
            ribbon(4, 0).hilbert_poly(3, 2).unwrap().to_string(),
            "3t - 1"
        );
        assert_eq!(
            ribbon(4, 0).hilbert_poly(0, 2),
            Err(Error::InvalidPolarization(0))
        );
    }

    #[test]
    fn jacobian_dimensions() {
        assert_eq!(ribbon(3, 0).jacobian_dim(), DimBound::Exact(3));
        assert_eq!(ribbon(5, 2).jacobian_dim(), DimBound::Exact(5));
        // P^1 with deg N = 2: h^1(N) = 0.
        assert_eq!(ribbon(-3, 0).jacobian_dim(), DimBound::Exact(0));
        // Elliptic X_red, deg N = 1: non-special, h0 = 1.
        assert_eq!(ribbon(0, 1).jacobian_dim(), DimBound::Exact(1));
        // Elliptic X_red, deg N = 0: h0 is 0 or 1 depending on N.
        assert_eq!(
            ribbon(1, 1).jacobian_dim(),
            DimBound::Unknown { lo: 1, hi: 2 }
        );
    }

    #[test]
    fn h0_bounds_follow_clifford() {
        assert_eq!(h0_line_bundle(3, 4), DimBound::Unknown { lo: 2, hi: 3 });
        assert_eq!(h0_line_bundle(3, 5), DimBound::Exact(3));
        assert_eq!(h0_line_bundle(2, 2), DimBound::Unknown { lo: 1, hi: 2 });
        assert_eq!(h0_line_bundle(0, -1), DimBound::Exact(0));
    }

    #[test]
    fn split_bundles_classify_themselves() {
        let vb = VbDescriptor::split(-2, -2);
        assert_eq!(vb.status(), Some(StabilityVerdict::StrictlySemistable));
        let vb = VbDescriptor::split(-2, 0);
        assert_eq!(vb.split_type(), Some((0, -2)));
        assert_eq!(vb.status(), Some(StabilityVerdict::Unstable));
    }
}
