//! Exact computations for moduli of semistable sheaves on ribbons.
//!
//! The crate is organized bottom-up:
//!
//! * [`ribbon`]: numerical invariants of a ribbon and of sheaf descriptors.
//! * [`stability`]: slope stability of generalized line bundles and of
//!   pushed-forward rank-2 bundles, with Gr-classes on the boundary.
//! * [`moduli`]: strata, irreducible components, the stratification graph,
//!   and tangent-space dimensions.
//! * [`local`]: ideals of `F_p[s, ε]/(ε²)`, local indices, a truncated model
//!   of the periodic resolution for `Ext¹`, and flatness checks for the
//!   specialization families.
//! * [`cli`]: the command surface behind the `ribbon-moduli` binary.

pub mod cli;
pub mod error;
pub mod local;
pub mod moduli;
pub mod report;
pub mod ribbon;
pub mod stability;
pub mod sweep;

pub use error::{Error, Result};
pub use report::{Check, Report};
pub use ribbon::{DimBound, GlbDescriptor, RibbonInvariants, VbDescriptor};
pub use stability::{classify_glb, classify_point, classify_vb, SheafPoint, StabilityVerdict};
