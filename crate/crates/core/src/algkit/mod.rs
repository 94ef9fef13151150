//! Finite-dimensional algebras, quiver presentations, bimodules, projective
//! resolutions and derived tensor products.

mod algebra;
mod bimodule;
mod construct;
pub mod derived;
pub mod quiver;
pub mod resolution;
pub mod zoo;

pub use algebra::Algebra;
pub use bimodule::{check_hom, Bimodule};
pub use construct::{direct_product, matrix_algebra, opposite, split_semisimple, tensor_algebra, truncated_polynomial};
pub use derived::{derived_tensor, is_right_projective};
pub use quiver::{path_algebra, Arrow, Path, QuiverPresentation, Relation};
pub use resolution::{global_dimension, GlobalDimension, ProjResolution};
