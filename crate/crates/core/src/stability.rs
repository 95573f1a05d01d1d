//! Slope stability of length-2 pure sheaves on a ribbon.
//!
//! A generalized line bundle `I` of index `b` is tested against its quotient
//! `Ī`; the verdict reduces to comparing `b` with `1 + g - 2·gbar` and does not
//! depend on the polarization. Direct images of rank-2 bundles inherit the
//! stability of the bundle on `X_red`.

use std::cmp::Ordering;
use std::fmt;

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ribbon::{GlbDescriptor, RibbonInvariants, VbDescriptor};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StabilityVerdict {
    Stable,
    StrictlySemistable,
    Unstable,
}

impl StabilityVerdict {
    pub fn is_semistable(self) -> bool {
        !matches!(self, StabilityVerdict::Unstable)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            StabilityVerdict::Stable => "stable",
            StabilityVerdict::StrictlySemistable => "strictly-semistable",
            StabilityVerdict::Unstable => "unstable",
        }
    }
}

impl fmt::Display for StabilityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for StabilityVerdict {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "stable" => Ok(StabilityVerdict::Stable),
            "strictly-semistable" | "semistable" => Ok(StabilityVerdict::StrictlySemistable),
            "unstable" => Ok(StabilityVerdict::Unstable),
            other => Err(Error::InvalidArgument(format!(
                "unknown stability '{other}'"
            ))),
        }
    }
}

/// A point of the moduli problem: one of the two sheaf types of rank 2.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SheafPoint {
    Glb(GlbDescriptor),
    Vb(VbDescriptor),
}

impl fmt::Display for SheafPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SheafPoint::Glb(glb) => glb.fmt(f),
            SheafPoint::Vb(vb) => vb.fmt(f),
        }
    }
}

/// Gr-equivalence class of a semistable sheaf.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GrClass {
    /// A stable sheaf is its own class.
    SelfClass,
    /// `i_*(F ⊕ G)` with `deg F = deg_f1`, `deg G = deg_ibar`.
    SplitClass { deg_f1: i64, deg_ibar: i64 },
}

impl fmt::Display for GrClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GrClass::SelfClass => f.write_str("self"),
            GrClass::SplitClass { deg_f1, deg_ibar } => write!(f, "({deg_f1},{deg_ibar})"),
        }
    }
}

pub fn classify_glb(ribbon: &RibbonInvariants, glb: &GlbDescriptor) -> StabilityVerdict {
    match glb.index().cmp(&ribbon.semistable_index()) {
        Ordering::Less => StabilityVerdict::Stable,
        Ordering::Equal => StabilityVerdict::StrictlySemistable,
        Ordering::Greater => StabilityVerdict::Unstable,
    }
}

/// `None` when the bundle lives on a curve of positive genus and its
/// stability was not supplied.
pub fn classify_vb(
    ribbon: &RibbonInvariants,
    vb: &VbDescriptor,
) -> Result<Option<StabilityVerdict>> {
    if ribbon.gbar() == 0 {
        let (a, b) = vb.split_type().ok_or(Error::MissingSplitType)?;
        if a + b != vb.degree() {
            return Err(Error::SplitDegreeMismatch {
                e: vb.degree(),
                a,
                b,
            });
        }
        return Ok(Some(if a == b {
            StabilityVerdict::StrictlySemistable
        } else {
            StabilityVerdict::Unstable
        }));
    }
    Ok(vb.status())
}

pub fn classify_point(
    ribbon: &RibbonInvariants,
    point: &SheafPoint,
) -> Result<Option<StabilityVerdict>> {
    match point {
        SheafPoint::Glb(glb) => Ok(Some(classify_glb(ribbon, glb))),
        SheafPoint::Vb(vb) => classify_vb(ribbon, vb),
    }
}

/// Slopes `a_1/a_0` of `I`, of its quotient `Ī` and of the kernel `F_1(I)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Slopes {
    pub mu_i: Ratio<i64>,
    pub mu_ibar: Ratio<i64>,
    pub mu_f1: Ratio<i64>,
}

impl Slopes {
    /// Verdict read off from the test quotient `Ī`.
    pub fn verdict(&self) -> StabilityVerdict {
        match self.mu_ibar.cmp(&self.mu_f1) {
            Ordering::Greater => StabilityVerdict::Stable,
            Ordering::Equal => StabilityVerdict::StrictlySemistable,
            Ordering::Less => StabilityVerdict::Unstable,
        }
    }
}

pub fn slopes(ribbon: &RibbonInvariants, deg_l: i64, glb: &GlbDescriptor) -> Result<Slopes> {
    if deg_l < 1 {
        return Err(Error::InvalidPolarization(deg_l));
    }
    let (g, gbar) = (ribbon.g(), ribbon.gbar());
    let (d, b) = (glb.degree(), glb.index());
    Ok(Slopes {
        mu_i: Ratio::new(d + 1 - g, deg_l),
        mu_ibar: Ratio::new(d - b + 2 - 2 * gbar, deg_l),
        mu_f1: Ratio::new(d + b + 2 * gbar - 2 * g, deg_l),
    })
}

/// Renders `p/q` in lowest terms, always with an explicit denominator.
pub fn format_ratio(r: &Ratio<i64>) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn gr_class(ribbon: &RibbonInvariants, point: &SheafPoint) -> Result<GrClass> {
    match point {
        SheafPoint::Glb(glb) => match classify_glb(ribbon, glb) {
            StabilityVerdict::Stable => Ok(GrClass::SelfClass),
            StabilityVerdict::StrictlySemistable => {
                let inv = glb.invariants(ribbon);
                Ok(GrClass::SplitClass {
                    deg_f1: inv.deg_f1,
                    deg_ibar: inv.deg_ibar,
                })
            }
            StabilityVerdict::Unstable => Err(Error::Unstable),
        },
        SheafPoint::Vb(vb) => match classify_vb(ribbon, vb)? {
            Some(StabilityVerdict::Stable) => Ok(GrClass::SelfClass),
            Some(StabilityVerdict::StrictlySemistable) => {
                // A destabilizing-slope sub line bundle has degree e/2.
                if vb.degree().rem_euclid(2) != 0 {
                    return Err(Error::InvalidArgument(format!(
                        "odd degree {} admits no strictly semistable rank-2 bundle",
                        vb.degree()
                    )));
                }
                let half = vb.degree() / 2;
                Ok(GrClass::SplitClass {
                    deg_f1: half,
                    deg_ibar: half,
                })
            }
            Some(StabilityVerdict::Unstable) => Err(Error::Unstable),
            None => Err(Error::UnspecifiedStability),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ribbon(g: i64, gbar: i64) -> RibbonInvariants {
        RibbonInvariants::new(g, gbar).unwrap()
    }

    fn glb(d: i64, idx: &[i64]) -> GlbDescriptor {
        GlbDescriptor::new(d, idx.iter().copied()).unwrap()
    }

    #[test]
    fn glb_verdicts() {
        assert_eq!(
            classify_glb(&ribbon(3, 0), &glb(0, &[4])),
            StabilityVerdict::StrictlySemistable
        );
        assert_eq!(
            classify_glb(&ribbon(3, 0), &glb(0, &[])),
            StabilityVerdict::Stable
        );
        assert_eq!(
            classify_glb(&ribbon(5, 2), &glb(0, &[2])),
            StabilityVerdict::StrictlySemistable
        );
        assert_eq!(
            classify_glb(&ribbon(5, 2), &glb(0, &[4])),
            StabilityVerdict::Unstable
        );
    }

    #[test]
    fn vb_verdicts() {
        let r = ribbon(3, 0);
        assert_eq!(
            classify_vb(&r, &VbDescriptor::split(-2, -2)).unwrap(),
            Some(StabilityVerdict::StrictlySemistable)
        );
        assert_eq!(
            classify_vb(&r, &VbDescriptor::split(0, -2)).unwrap(),
            Some(StabilityVerdict::Unstable)
        );
        assert_eq!(
            classify_vb(&r, &VbDescriptor::with_status(-4, None)),
            Err(Error::MissingSplitType)
        );
        let r = ribbon(5, 2);
        assert_eq!(
            classify_vb(
                &r,
                &VbDescriptor::with_status(-2, Some(StabilityVerdict::Stable))
            )
            .unwrap(),
            Some(StabilityVerdict::Stable)
        );
        assert_eq!(
            classify_vb(&r, &VbDescriptor::with_status(-2, None)).unwrap(),
            None
        );
    }

    #[test]
    fn slope_values() {
        let s = slopes(&ribbon(3, 0), 1, &glb(0, &[4])).unwrap();
        assert_eq!(s.mu_ibar, Ratio::from_integer(-2));
        assert_eq!(s.mu_f1, Ratio::from_integer(-2));
        assert_eq!(s.mu_i, Ratio::from_integer(-2));
        assert_eq!(s.verdict(), StabilityVerdict::StrictlySemistable);

        let s = slopes(&ribbon(3, 0), 2, &glb(0, &[])).unwrap();
        assert!(s.mu_ibar > s.mu_f1);
        assert_eq!(format_ratio(&s.mu_ibar), "1/1");
        assert_eq!(format_ratio(&s.mu_f1), "-3/1");

        // mu(I) is the mean of the two graded pieces.
        let s = slopes(&ribbon(7, 1), 7, &glb(1, &[2, 1])).unwrap();
        assert_eq!((s.mu_ibar + s.mu_f1) / 2, s.mu_i);
        assert_eq!(
            slopes(&ribbon(7, 1), 0, &glb(0, &[])),
            Err(Error::InvalidPolarization(0))
        );
    }

    #[test]
    fn slope_scaling() {
        let r = ribbon(6, 1);
        let g = glb(1, &[3]);
        let s1 = slopes(&r, 1, &g).unwrap();
        let s5 = slopes(&r, 5, &g).unwrap();
        assert_eq!(s1.mu_ibar / 5, s5.mu_ibar);
        assert_eq!(s1.mu_f1 / 5, s5.mu_f1);
        assert_eq!(s1.verdict(), s5.verdict());
    }

    #[test]
    fn gr_classes() {
        let r = ribbon(3, 0);
        assert_eq!(
            gr_class(&r, &SheafPoint::Glb(glb(0, &[4]))).unwrap(),
            GrClass::SplitClass {
                deg_f1: -2,
                deg_ibar: -2
            }
        );
        assert_eq!(
            gr_class(&r, &SheafPoint::Glb(glb(0, &[]))).unwrap(),
            GrClass::SelfClass
        );
        assert_eq!(
            gr_class(&r, &SheafPoint::Vb(VbDescriptor::split(-2, -2))).unwrap(),
            GrClass::SplitClass {
                deg_f1: -2,
                deg_ibar: -2
            }
        );
        assert_eq!(
            gr_class(&r, &SheafPoint::Glb(glb(0, &[4, 2]))),
            Err(Error::Unstable)
        );

        // g=5, gbar=1: threshold 4, e = -4, both summands of degree -2.
        let r = ribbon(5, 1);
        assert_eq!(
            gr_class(&r, &SheafPoint::Glb(glb(0, &[4]))).unwrap(),
            GrClass::SplitClass {
                deg_f1: -2,
                deg_ibar: -2
            }
        );
        assert_eq!(
            gr_class(&r, &SheafPoint::Vb(VbDescriptor::with_status(-3, None))),
            Err(Error::UnspecifiedStability)
        );
    }
}
