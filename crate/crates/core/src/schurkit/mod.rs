//! Symmetric group idempotents and Schur functors on super vector spaces.
//!
//! `S_n` acts on `V^{⊗n}` by permuting factors with the Koszul sign. The
//! central idempotent `c_λ` cuts out the `V_λ`-isotypic part, of dimension
//! `f^λ · dim S_λ(V)`; a space is Schur-finite when some `c_λ` kills it.

mod action;
mod characters;
mod group_algebra;
mod partition;

pub use action::{
    element_action, is_schur_finite, rectangle_criterion, schur_dimension, schur_dimension_graded, schur_dimension_young,
    tensor_power_action, MAX_TENSOR_DIM,
};
pub use characters::{character_table_row, character_value, MAX_SYMMETRIC_DEGREE};
pub use group_algebra::{central_idempotent, sign_of, young_symmetrizer, GroupAlgebraElement};
pub use partition::{
    adjacent_transposition, compose, cycle_type, inverse, is_permutation, partitions, permutations, Partition, Permutation,
};

#[cfg(test)]
mod tests;
