//! Irreducible components of the moduli space over a grid of genera.

use ribbon_moduli::moduli::{component_table, SpecialCase, VbComponent};
use ribbon_moduli::ribbon::format_partition;
use ribbon_moduli::RibbonInvariants;

fn main() -> ribbon_moduli::Result<()> {
    for gbar in 0..=3 {
        for g in 0..=10 {
            for d in 0..=1 {
                let ribbon = RibbonInvariants::new(g, gbar)?;
                let table = component_table(&ribbon, d);
                let line = match table.special_case {
                    Some(SpecialCase::Empty) => "empty".to_string(),
                    Some(SpecialCase::Irreducible { dim }) => {
                        format!("irreducible, bundles only, dim {dim}")
                    }
                    None => {
                        let glb: Vec<String> = table
                            .glb_components
                            .iter()
                            .map(|c| format!("({})", format_partition(&c.indices)))
                            .collect();
                        let vb = match table.vb_component {
                            VbComponent::Exists { dim } => format!(" + vb[{dim}]"),
                            VbComponent::NotExists => String::new(),
                            VbComponent::Unknown => " + vb?".to_string(),
                        };
                        format!("{} of dim {g}{vb}", glb.join(" "))
                    }
                };
                println!("gbar={gbar} g={g:>2} d={d}: {line}");
            }
        }
    }
    Ok(())
}
