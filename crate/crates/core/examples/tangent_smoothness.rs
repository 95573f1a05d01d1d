//! Tangent dimensions and smoothness at stable points.

use ribbon_moduli::moduli::{
    enumerate_strata, smoothness_verdict, tangent_dim_glb, tangent_dim_vb,
};
use ribbon_moduli::{GlbDescriptor, RibbonInvariants, SheafPoint, StabilityVerdict, VbDescriptor};

fn main() -> ribbon_moduli::Result<()> {
    for (g, gbar) in [(4, 0), (5, 1), (6, 2), (8, 2)] {
        let ribbon = RibbonInvariants::new(g, gbar)?;
        println!("g = {g}, gbar = {gbar}");
        for s in enumerate_strata(&ribbon, 0, false) {
            let glb = GlbDescriptor::new(0, s.indices.clone())?;
            let tangent = tangent_dim_glb(&ribbon, &glb);
            let smooth = smoothness_verdict(&ribbon, 0, &SheafPoint::Glb(glb))?;
            println!(
                "  {:<12} dim {:>2}  tangent {:<16} {smooth:?}",
                s.label(),
                s.dim,
                tangent.to_string()
            );
        }
        if gbar >= 1 {
            let e = ribbon.vb_degree(0);
            let vb = VbDescriptor::with_status(e, Some(StabilityVerdict::Stable));
            let tangent = tangent_dim_vb(&ribbon, None)?
                .map_or("needs h0(End E ⊗ N^-1)".to_string(), |t| t.to_string());
            let smooth = smoothness_verdict(&ribbon, 0, &SheafPoint::Vb(vb))?;
            println!(
                "  {:<12} tangent {tangent}  {smooth:?}",
                format!("vb e={e}")
            );
        }
    }
    Ok(())
}
