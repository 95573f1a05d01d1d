//! Prints the stratification graph in DOT format.
//!
//! `cargo run --example stratification_dot -- 6 1 1 | dot -Tsvg > strata.svg`

use ribbon_moduli::moduli::stratification_graph;
use ribbon_moduli::RibbonInvariants;

fn main() -> ribbon_moduli::Result<()> {
    let args: Vec<i64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer argument"))
        .collect();
    let (g, gbar, d) = match args.as_slice() {
        [g, gbar, d] => (*g, *gbar, *d),
        _ => (5, 0, 0),
    };
    let graph = stratification_graph(&RibbonInvariants::new(g, gbar)?, d);
    print!("{}", graph.to_dot());
    eprintln!(
        "{} nodes, {} edges, connected: {}",
        graph.nodes.len(),
        graph.edges.len(),
        graph.is_connected()
    );
    Ok(())
}
