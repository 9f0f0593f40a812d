//! Exact sparse linear algebra on tensor-power bases.

mod map;
mod pipeline;
mod subspace;
mod vector;

pub use map::{compose, flip, kron, LinearMap};
pub use pipeline::{
    apply_tensor, collect_columns, id, perm, swap, CachedPipeline, Factor, Pipeline,
};
pub use subspace::{
    inverse, kernel_basis, rank, rref, solve, subspace_contains, subspace_equal, SubspaceBasis,
};
pub use vector::Vector;

pub(crate) use subspace::Echelon;
pub(crate) use vector::Accumulator;
