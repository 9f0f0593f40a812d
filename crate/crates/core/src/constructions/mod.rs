//! Builders for the concrete algebras and crossed modules of the gallery.

mod crossed;
mod graded;
mod group;
mod sweedler;

pub use crossed::{
    adjoint_crossed_module, adjoint_data, check_action_symmetry, quantum_double_crossed_module,
    smash_preconditions, smash_product, smash_product_unchecked, trivial_crossed_module,
    AdjointCrossedModule, CrossedModuleData, QuantumDouble, TransportedForm,
};
pub use graded::{
    graded_function_crossed_module, GradedClosedForms, GradedCrossedModule,
    GradedCrossedModuleInput,
};
pub use group::{
    characters, coadjoint_action, function_algebra, group_algebra, CayleyTable, CharacterGroup,
};
pub use sweedler::{sweedler_algebra, sweedler_r_matrix, z2_triangular_r_matrix};
