//! Exact commutative algebra over `R = F_p[s, ε]/(ε²)`.

pub mod deform;
pub mod ext;
pub mod field;
pub mod hnf;
pub mod ideal;
pub mod poly;

pub use deform::{verify_deformation_i, verify_deformation_ii, DeformationReport};
pub use ext::{endo_quotient_dim, ext1_dim, TruncatedComplex};
pub use field::FpMatrix;
pub use ideal::{standard_ideal, EpsIdeal, EpsPoly};
pub use poly::Poly;
