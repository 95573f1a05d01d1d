//! Ideals of F_p[s, ε]/(ε²): canonical forms, intersections, local indices.

use ribbon_moduli::local::{standard_ideal, EpsIdeal, EpsPoly, Poly};

fn main() -> ribbon_moduli::Result<()> {
    let p = 101;
    let s = |k| EpsPoly::from_poly(Poly::monomial(p, 1, k));
    let eps = EpsPoly::epsilon(p);

    let model = standard_ideal(p, 2)?;
    println!(
        "(ε, s^2)           = {model}, colength {}",
        model.colength()?
    );

    let principal = EpsIdeal::from_generators(p, &[s(1).add(&eps)])?;
    println!(
        "(s + ε)            = {principal}, colength {}, index at 0: {}",
        principal.colength()?,
        principal.local_index_at(0)?
    );

    let twisted = EpsIdeal::from_generators(p, &[s(2), s(1).mul(&eps)])?;
    println!(
        "(s^2, sε)          = {twisted}, index at 0: {}",
        twisted.local_index_at(0)?
    );

    let at_three = EpsIdeal::from_generators(
        p,
        &[eps.clone(), EpsPoly::from_poly(Poly::linear(p, 3).pow(3))],
    )?;
    let meet = model.intersect(&at_three)?;
    println!("(ε, s^2) ∩ (ε, (s-3)^3) = {meet}");
    println!(
        "  colength {}, local indices {} at 0 and {} at 3",
        meet.colength()?,
        meet.local_index_at(0)?,
        meet.local_index_at(3)?
    );
    Ok(())
}
