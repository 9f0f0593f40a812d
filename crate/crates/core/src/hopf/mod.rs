//! Hopf algebras, (co)modules and Yetter-Drinfeld modules.

mod algebra;
mod module;

pub use algebra::{
    algebra_generators, check_algebra, check_coalgebra, check_hopf, check_hopf_in, check_hopf_map,
    dual_hopf, tensor_product, HopfAlgebraData, HopfStructure,
};
pub(crate) use algebra::{expect_field, expect_shape};
pub use module::{
    braiding, braiding_pipeline, check_braid_relation, check_comodule, check_hexagon, check_module,
    check_module_algebra, check_module_coalgebra, check_naturality, check_yd_morphism,
    check_yetter_drinfeld, yd_compatibility, yd_tensor, Coaction, ModuleAction,
    YetterDrinfeldModule,
};
