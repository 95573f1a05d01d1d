//! Over a rational ribbon, the strictly semistable locus of degree 0 is one
//! Gr-class when g is odd and empty when g is even.

use ribbon_moduli::moduli::{stratification_graph, NodeKind};
use ribbon_moduli::RibbonInvariants;

fn main() -> ribbon_moduli::Result<()> {
    for g in 0..=12 {
        let ribbon = RibbonInvariants::new(g, 0)?;
        let graph = stratification_graph(&ribbon, 0);
        let boundary: Vec<String> = graph
            .nodes
            .iter()
            .filter_map(|n| match &n.kind {
                NodeKind::Boundary { gr } => Some(gr.to_string()),
                _ => None,
            })
            .collect();
        let stable = graph.strata().count();
        match boundary.as_slice() {
            [] => println!("g = {g:>2}: {stable:>3} stable strata, no boundary"),
            [gr] => println!("g = {g:>2}: {stable:>3} stable strata, boundary point Gr = {gr}"),
            many => println!("g = {g:>2}: unexpected boundary {many:?}"),
        }
    }
    Ok(())
}
