//! Cracovian (column-by-column) table algebra, and the quasigroups that
//! arise from finite groups equipped with an involution.
//!
//! The crate is organised bottom-up:
//!
//! * [`cracovian`] holds the [`Cracovian`] table type with the column-by-column
//!   product, the transposing cracovian, inverses and the bridge to the
//!   ordinary row-by-column matrix product.
//! * [`group`] holds finite groups given by Cayley tables and involutions on them.
//! * [`quasigroup`] builds the right-unital quasigroup of a group with involution
//!   and checks its laws.
//! * [`clifford`] generates Clifford groups over signed generator bitmasks.
//! * [`representation`] builds cracovian representations of Clifford quasigroups
//!   and checks the homomorphism property.

pub mod clifford;
pub mod cracovian;
pub mod group;
pub mod quasigroup;
pub mod representation;
mod sweep;
mod tolerance;

pub use clifford::{CliffordElement, CliffordError, CliffordQuasigroup};
pub use cracovian::{
    apply_linear_mapping, chain_product, change_basis, similarity_transform, transposing_cracovian, Cracovian,
    CracovianError, Scalar, Shape,
};
pub use group::{
    automorphism_group_check, involution_automorphism, verify_group, verify_involution, CayleyTable, FiniteGroup,
    GroupError, Involution, InvolutionError, InvolutiveGroup,
};
pub use quasigroup::{
    build_quasigroup, verify_quasigroup_laws, Law, LawOptions, LawReport, Quasigroup, QuasigroupError, Verdict,
};
pub use representation::{
    build_gamma_matrices, commutant_dimension, extend_to_representation, verify_crac_homomorphism, GammaSet,
    Representation, RepresentationError,
};
pub use tolerance::Tolerance;
