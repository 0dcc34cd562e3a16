//! Clifford algebras over diagonal metrics, Clifford-matrix Möbius maps in
//! elliptic, parabolic and hyperbolic plane geometries, and generators for
//! the orbit, transverse and vector-field data of the SL(2,R) subgroups.

pub mod algebra;
pub mod moebius;
pub mod scalar;

pub use algebra::{AlgebraError, Metric, Multivector};
pub use moebius::{
    cayley_matrices, moebius_family, moebius_map, subgroup_exp, vector_field, CliffordMatrix2,
    MetricKind, MoebiusError, MoebiusVariant, PlanePoint, Subgroup,
};
pub use scalar::{Dual, Scalar};
pub mod emit;
pub mod scenarios;
