//! Exact integer matrix and lattice algebra.

pub mod arith;
mod group;
mod lattice;
mod mat;
mod normal_form;

pub use group::FinAbGroup;
pub use lattice::{
    kernel_lattice, lattice_meet_join, preimage, preimage_mod, quotient_invariants, relative_basis, Index,
    Sublattice,
};
pub use mat::Mat;
pub use normal_form::{
    column_hermite, hnf_snf, inverse_unimodular, smith, solve, solve_matrix, ColumnEchelon, Smith,
};
