//! Braided Hopf algebras in the Yetter-Drinfeld category, quasitriangular
//! structures, transmutation, braided crossed modules and biproducts.

mod biproduct;
mod crossed;
mod hopf;
mod quasitriangular;

pub use biproduct::{
    biproduct, biproduct_projections, biproduct_projections_unchecked, check_biproduct_projections,
    check_twisted_tensor_negative, twisted_tensor_coproduct, Biproduct, BiproductProjections,
};
pub use crossed::{
    boundary_invariants, check_braided_crossed_module, induced_coaction, BraidedCrossedModuleData,
};
pub use hopf::{check_braided_hopf, solve_antipode, transmutation, BraidedHopfData};
pub use quasitriangular::{
    check_quasitriangular, quasitriangular_coaction, tensor_power_product, yd_from_quasitriangular,
    QuasitriangularStructure,
};

#[cfg(test)]
mod tests;
