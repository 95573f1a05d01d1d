use serde::Serialize;

use crate::error::{Error, Result};
use crate::ribbon::{h0_line_bundle, DimBound, GlbDescriptor, RibbonInvariants};
use crate::stability::{classify_point, SheafPoint, StabilityVerdict};

/// `dim Ext^1(I, I) = g + b + h^0(X', O_X') - 1` where the correction is
/// `h^0(X_red, N')` for the conormal bundle `N'` of the blow-up, of degree
/// `deg N + b`.
pub fn tangent_dim_glb(ribbon: &RibbonInvariants, glb: &GlbDescriptor) -> DimBound {
    let b = glb.index();
    h0_line_bundle(ribbon.gbar(), ribbon.deg_n() + b).shift(ribbon.g() + b)
}

/// `dim Ext^1(i_*E, i_*E) = 4·gbar - 3 + h^0(End(E) ⊗ N^{-1})` for a stable
/// rank-2 bundle `E`. For `g >= 4·gbar - 2` the correction is forced by
/// Riemann-Roch; otherwise it must be supplied as `h_end`.
pub fn tangent_dim_vb(ribbon: &RibbonInvariants, h_end: Option<i64>) -> Result<Option<i64>> {
    let (g, gbar) = (ribbon.g(), ribbon.gbar());
    if gbar == 0 {
        return Err(Error::NoStableBundles { gbar });
    }
    if let Some(h) = h_end {
        if h < 0 {
            return Err(Error::NegativeHEnd(h));
        }
    }
    if g >= 4 * gbar - 2 {
        let forced = 8 + 4 * g - 12 * gbar;
        if let Some(h) = h_end.filter(|&h| h != forced) {
            return Err(Error::InvalidArgument(format!(
                "h_end = {h} contradicts Riemann-Roch value {forced}"
            )));
        }
        return Ok(Some(4 * g + 5 - 8 * gbar));
    }
    Ok(h_end.map(|h| 4 * gbar - 3 + h))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Smoothness {
    Smooth,
    Singular,
    Unknown,
}

/// Smoothness of the moduli space at a stable point of degree `d`.
pub fn smoothness_verdict(
    ribbon: &RibbonInvariants,
    d: i64,
    point: &SheafPoint,
) -> Result<Smoothness> {
    let expected = match point {
        SheafPoint::Glb(_) => d,
        SheafPoint::Vb(_) => ribbon.vb_degree(d),
    };
    let got = match point {
        SheafPoint::Glb(glb) => glb.degree(),
        SheafPoint::Vb(vb) => vb.degree(),
    };
    if expected != got {
        return Err(Error::DegreeMismatch { expected, got });
    }
    match classify_point(ribbon, point)? {
        Some(StabilityVerdict::Stable) => {}
        Some(other) => return Err(Error::NotStable(other.to_string())),
        None => return Err(Error::UnspecifiedStability),
    }

    let (g, gbar) = (ribbon.g(), ribbon.gbar());
    if gbar >= 2 && g >= 4 * gbar - 2 {
        let line_bundle = matches!(point, SheafPoint::Glb(glb) if glb.is_line_bundle());
        return Ok(if line_bundle {
            Smoothness::Smooth
        } else {
            Smoothness::Singular
        });
    }

    match point {
        // A stable generalized line bundle only meets components of dimension g.
        SheafPoint::Glb(glb) => {
            let tangent = tangent_dim_glb(ribbon, glb);
            Ok(if tangent == DimBound::Exact(g) {
                Smoothness::Smooth
            } else if tangent.lo() > g {
                Smoothness::Singular
            } else {
                Smoothness::Unknown
            })
        }
        SheafPoint::Vb(_) => Ok(match tangent_dim_vb(ribbon, None)? {
            Some(t) if t > g.max(4 * gbar - 3) => Smoothness::Singular,
            _ => Smoothness::Unknown,
        }),
    }
}
