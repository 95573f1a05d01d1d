//! The two specialization families, checked at a handful of parameters.

use ribbon_moduli::local::{verify_deformation_i, verify_deformation_ii, DeformationReport};

fn show(r: &DeformationReport) {
    let status = if r.passed() { "ok" } else { "FAILED" };
    println!(
        "family {:<2} b={} p={:<3} t={:<3} {status}",
        r.family, r.b, r.p, r.t
    );
    println!("    generic {}", r.generic_fiber);
    println!("    special {}", r.special_fiber);
    for c in r.failures() {
        println!("    {}: {}", c.name, c.detail);
    }
}

fn main() -> ribbon_moduli::Result<()> {
    for b0 in 0..=3 {
        show(&verify_deformation_i(b0, 101, 7)?);
    }
    for b1 in 1..=3 {
        show(&verify_deformation_ii(b1, 5, 2)?);
    }
    Ok(())
}
