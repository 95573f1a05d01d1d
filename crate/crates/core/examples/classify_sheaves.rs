//! Stability of generalized line bundles across the index range, with exact
//! slopes and Gr-classes.
//!
//! Run with `cargo run --example classify_sheaves -- 5 1 0`.

use ribbon_moduli::stability::{format_ratio, gr_class, slopes};
use ribbon_moduli::{classify_glb, GlbDescriptor, RibbonInvariants, SheafPoint};

fn main() -> ribbon_moduli::Result<()> {
    let args: Vec<i64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer argument"))
        .collect();
    let (g, gbar, d) = match args.as_slice() {
        [g, gbar, d] => (*g, *gbar, *d),
        _ => (5, 1, 0),
    };
    let ribbon = RibbonInvariants::new(g, gbar)?;
    println!(
        "g = {g}, gbar = {gbar}, d = {d}, deg N = {}",
        ribbon.deg_n()
    );
    println!("strictly semistable at b = {}", ribbon.semistable_index());
    println!();
    println!(
        "{:>3}  {:<20} {:>8} {:>8}  gr",
        "b", "verdict", "mu(Ī)", "mu(F1)"
    );

    for b in (0..=ribbon.semistable_index() + 2).filter(|b| (d - b).rem_euclid(2) == 0) {
        // A single point of index b is enough: the verdict only sees the sum.
        let indices = if b == 0 { vec![] } else { vec![b] };
        let glb = GlbDescriptor::new(d, indices)?;
        let verdict = classify_glb(&ribbon, &glb);
        let s = slopes(&ribbon, 1, &glb)?;
        let gr = gr_class(&ribbon, &SheafPoint::Glb(glb))
            .map(|c| c.to_string())
            .unwrap_or_else(|_| "-".into());
        println!(
            "{b:>3}  {:<20} {:>8} {:>8}  {gr}",
            verdict.as_str(),
            format_ratio(&s.mu_ibar),
            format_ratio(&s.mu_f1)
        );
    }
    Ok(())
}
