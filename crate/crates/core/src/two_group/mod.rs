//! Strict quantum 2-groups from crossed modules: the crossed-module
//! checker, the construction, cotensor products and every axiom check.

mod conditions;
mod groupoid;
mod strict;

pub use conditions::{
    boundary_equivariance, braided_adjoint, braided_commutative, check_crossed_module,
    pushout_coaction,
};
pub use groupoid::{
    check_embedded_quantum_groupoid, check_interchange, check_same_map, check_structure_maps,
    transport, QuantumGroupoidData,
};
pub use strict::{
    build_strict_2group, closed_form_2group, coinvariant_subspace, diagonal_cotensor_span,
    reverse_diagnostics, reverse_order, strict_2group_unchecked, transported_2group,
};

use crate::report::{CheckReport, Scope};

/// Structure maps, groupoid axioms and the interchange law in one report.
pub fn check_strict_2group(qg: &QuantumGroupoidData) -> CheckReport {
    let mut r = CheckReport::new();
    r.absorb("hopf", crate::hopf::check_hopf(&qg.total));
    r.absorb("maps", check_structure_maps(qg, &Scope::Full));
    r.absorb("groupoid", check_embedded_quantum_groupoid(qg));
    r.push(check_interchange(qg));
    r
}

/// The cotensor product `M □ M` of a quantum groupoid.
pub fn cotensor(qg: &QuantumGroupoidData) -> &crate::linalg::SubspaceBasis {
    qg.cotensor()
}

#[cfg(test)]
mod tests;
