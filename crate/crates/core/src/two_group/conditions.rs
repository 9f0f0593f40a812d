//! Crossed-module conditions, checked both directly and through the
//! Yetter-Drinfeld reformulation, with the two verdicts compared.

use crate::constructions::{smash_preconditions, CrossedModuleData};
use crate::hopf::{
    check_comodule, check_hopf, check_hopf_map, yd_compatibility, Coaction, ModuleAction,
};
use crate::linalg::{id, perm, Factor, LinearMap, Pipeline};
use crate::report::{check_maps, CheckEntry, CheckReport, Scope};

/// `d(h▷a) = h₁ d(a) S h₂` as maps `H ⊗ A → H`.
pub fn boundary_equivariance(cm: &CrossedModuleData) -> CheckEntry {
    let (a, h) = (&cm.source, &cm.target);
    let f = h.field;
    let (na, nh) = (a.dim, h.dim);
    let lhs = Pipeline::on(f, &[nh, na])
        .then(vec![cm.action.factor()])
        .map(&cm.boundary);
    let rhs = Pipeline::on(f, &[nh, na])
        .then(vec![(&h.comul).into(), id(na)])
        .then(vec![perm(f, &[nh, nh, na], &[0, 2, 1])])
        .then(vec![id(nh), (&cm.boundary).into(), (&h.antipode).into()])
        .then(vec![(&h.mul).into(), id(nh)])
        .map(&h.mul);
    check_maps("equivariance", &lhs, &rhs)
}

/// `d(a)▷b = a₁ b S a₂` as maps `A ⊗ A → A`.
pub fn braided_adjoint(cm: &CrossedModuleData) -> CheckEntry {
    let a = &cm.source;
    let f = a.field;
    let na = a.dim;
    let lhs = Pipeline::on(f, &[na, na])
        .then(vec![(&cm.boundary).into(), id(na)])
        .then(vec![cm.action.factor()]);
    let rhs = Pipeline::on(f, &[na, na])
        .then(vec![(&a.comul).into(), id(na)])
        .then(vec![perm(f, &[na, na, na], &[0, 2, 1])])
        .then(vec![id(na), id(na), (&a.antipode).into()])
        .then(vec![(&a.mul).into(), id(na)])
        .map(&a.mul);
    check_maps("braided_adjoint", &lhs, &rhs)
}

/// The pushout coaction `(d ⊗ id)Δ` on `A`.
pub fn pushout_coaction(cm: &CrossedModuleData) -> Coaction {
    let a = &cm.source;
    let map = Pipeline::new(a.field)
        .map(&a.comul)
        .then(vec![(&cm.boundary).into(), id(a.dim)])
        .materialize();
    Coaction {
        coacting_dim: cm.target.dim,
        carrier_dim: a.dim,
        map,
    }
}

/// `m ∘ Ψ = m` on `A ⊗ A` for the braiding `Ψ(a⊗b) = a⁽¹⁾▷b ⊗ a⁽²⁾` of a
/// coaction, i.e. braided commutativity.
pub fn braided_commutative(
    name: &str,
    mul: &LinearMap,
    act: &ModuleAction,
    co: &Coaction,
) -> CheckEntry {
    let f = mul.field();
    let (n, v) = (co.coacting_dim, co.carrier_dim);
    let lhs = Pipeline::on(f, &[v, v])
        .then(vec![co.factor(), id(v)])
        .then(vec![perm(f, &[n, v, v], &[0, 2, 1])])
        .then(vec![act.factor(), id(v)])
        .map(mul);
    let rhs = Pipeline::on(f, &[v, v]).map(mul);
    check_maps(name, &lhs, &rhs)
}

/// All crossed-module conditions, the reformulation as a commutative algebra
/// in the Yetter-Drinfeld category with the pushout coaction, and one
/// `agreement.*` entry per condition asserting that both formulations give
/// the same verdict.
pub fn check_crossed_module(cm: &CrossedModuleData) -> CheckReport {
    let (a, h) = (&cm.source, &cm.target);
    let mut r = CheckReport::new();
    r.absorb("source", check_hopf(a));
    r.absorb("target", check_hopf(h));

    let pre = smash_preconditions(a, h, &cm.action);
    let symmetric = pre.holds("action_symmetry");
    r.absorb("action", pre);
    let hopf_map = check_hopf_map(Factor::Map(&cm.boundary), a, h, &Scope::Full);
    let is_hopf_map = hopf_map.passed();
    r.absorb("boundary.hopf_map", hopf_map);
    let equiv = boundary_equivariance(cm);
    let equivariant = equiv.passed;
    r.push(equiv.renamed("boundary.equivariance"));
    let adj = braided_adjoint(cm);
    let adjoint = adj.passed;
    r.push(adj.renamed("adjoint.braided_adjoint"));

    let trivial = Coaction::trivial(h, a.dim);
    let yd1 = yd_compatibility(h, &cm.action, &trivial);
    let yd1_holds = yd1.passed;
    r.push(yd1.renamed("reformulation.trivial_coaction_yd"));
    let push = pushout_coaction(cm);
    r.absorb("reformulation.pushout_comodule", check_comodule(h, &push));
    let yd2 = yd_compatibility(h, &cm.action, &push);
    let yd2_holds = yd2.passed;
    r.push(yd2.renamed("reformulation.pushout_yd"));
    let f = a.field;
    let lhs = Pipeline::on(f, &[a.dim])
        .map(&push.map)
        .then(vec![id(h.dim), (&cm.boundary).into()]);
    let rhs = Pipeline::on(f, &[a.dim]).map(&cm.boundary).map(&h.comul);
    r.push(check_maps(
        "reformulation.boundary_comodule_map",
        &lhs,
        &rhs,
    ));
    let comm = braided_commutative(
        "reformulation.braided_commutative",
        &a.mul,
        &cm.action,
        &push,
    );
    let commutative = comm.passed;
    r.push(comm);

    r.push(CheckEntry::fact("agreement.action", symmetric == yd1_holds));
    r.push(CheckEntry::fact(
        "agreement.boundary",
        (is_hopf_map && equivariant) == (is_hopf_map && yd2_holds),
    ));
    r.push(CheckEntry::fact(
        "agreement.adjoint",
        adjoint == commutative,
    ));
    r
}
