//! Global and local geometry of the moduli space of semistable sheaves with
//! the Hilbert polynomial of a degree-`d` line bundle.

mod components;
mod graph;
mod strata;
mod tangent;

pub use components::{
    component_table, glb_component_count, ComponentTable, GlbComponent, SpecialCase, VbComponent,
};
pub use graph::{stratification_graph, EdgeKind, GraphEdge, Node, NodeKind, StratGraph};
pub use strata::{
    enumerate_strata, partitions_of, specialization_edges, specializations_of, stratum_dim, Move,
    SpecializationEdge, Stratum,
};
pub use tangent::{smoothness_verdict, tangent_dim_glb, tangent_dim_vb, Smoothness};
