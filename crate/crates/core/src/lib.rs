//! Exact-arithmetic construction and verification of Hopf crossed modules,
//! strict quantum 2-groups and braided crossed modules.
//!
//! Every structure is held as structure constants over an exact field (the
//! rationals or a prime field) and every axiom is checked as an exact identity
//! of linear maps. Failing checks carry a witness: the first failing basis
//! input together with both evaluated sides.
//!
//! Layout:
//!
//! * [`linalg`]: sparse exact matrices, tensor pipelines, canonical subspaces.
//! * [`hopf`]: Hopf algebras, modules, comodules, Yetter-Drinfeld modules, braidings.
//! * [`constructions`]: group algebras, duals, smash products, biproducts and
//!   the crossed modules of the worked examples.
//! * [`two_group`]: crossed-module verification and the strict quantum 2-group.
//! * [`braided`]: quasitriangular structures, transmutation, braided crossed modules.
//! * [`io`]: file formats, gallery, suites and certificates.

pub mod braided;
pub mod constructions;
pub mod error;
pub mod hopf;
pub mod io;
pub mod linalg;
pub mod report;
pub mod scalar;
pub mod two_group;

pub use error::{Error, Result};
pub use hopf::{Coaction, HopfAlgebraData, ModuleAction, YetterDrinfeldModule};
pub use linalg::{LinearMap, SubspaceBasis, Vector};
pub use report::{CheckEntry, CheckReport, Witness};
pub use scalar::{Field, Scalar};

/// Engine version recorded in certificates.
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");
