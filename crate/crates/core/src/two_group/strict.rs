//! The strict 2-group of a crossed module and its diagnostics.

use crate::constructions::{smash_product_unchecked, AdjointCrossedModule, CrossedModuleData};
use crate::error::{Error, Result};
use crate::linalg::{id, kernel_basis, swap, LinearMap, Pipeline, SubspaceBasis, Vector};
use crate::report::{check_maps, check_on_vectors, CheckEntry, CheckReport};

use super::conditions::check_crossed_module;
use super::groupoid::{flipped_pair, QuantumGroupoidData};

/// `H₁ = A ⋊ H` over `H₀ = H` with `s(a⊗h) = ε(a)h`, `t(a⊗h) = d(a)h`,
/// `i(h) = 1⊗h`, `(a⊗h)∘(b⊗g) = ε(h)ab⊗g`, `𝒮(a⊗h) = Sa₁ ⊗ d(a₂)h`.
///
/// Fails with a precondition error if the crossed-module check fails.
pub fn build_strict_2group(cm: &CrossedModuleData) -> Result<QuantumGroupoidData> {
    let report = check_crossed_module(cm);
    if let Some(first) = report.first_failure() {
        return Err(Error::Precondition {
            check: first.name.clone(),
            report: Box::new(report),
        });
    }
    Ok(strict_2group_unchecked(cm))
}

/// [`build_strict_2group`] without the crossed-module precondition.
pub fn strict_2group_unchecked(cm: &CrossedModuleData) -> QuantumGroupoidData {
    let (a, h) = (&cm.source, &cm.target);
    let f = a.field;
    let (na, nh) = (a.dim, h.dim);
    let total = smash_product_unchecked(a, h, &cm.action);
    let ident_h = LinearMap::identity(f, nh);
    let source = a.counit.kron(&ident_h).expect("same field");
    let inclusion = a.unit.kron(&ident_h).expect("same field");
    let target = Pipeline::new(f)
        .then(vec![(&cm.boundary).into(), id(nh)])
        .map(&h.mul)
        .materialize();
    let compose = Pipeline::new(f)
        .then(vec![id(na), (&h.counit).into(), id(na), id(nh)])
        .then(vec![(&a.mul).into(), id(nh)])
        .materialize();
    let reverse = Pipeline::new(f)
        .then(vec![(&a.comul).into(), id(nh)])
        .then(vec![(&a.antipode).into(), (&cm.boundary).into(), id(nh)])
        .then(vec![id(na), (&h.mul).into()])
        .materialize();
    QuantumGroupoidData::new(
        format!("2group-{}", cm.name),
        total,
        h.clone(),
        source,
        target,
        inclusion,
        compose,
        reverse,
    )
    .expect("shapes follow from the crossed module")
}

/// `{a | d(a₁) ⊗ a₂ = 1 ⊗ a}`.
pub fn coinvariant_subspace(cm: &CrossedModuleData) -> SubspaceBasis {
    let (a, h) = (&cm.source, &cm.target);
    let f = a.field;
    let push = Pipeline::new(f)
        .map(&a.comul)
        .then(vec![(&cm.boundary).into(), id(a.dim)])
        .materialize();
    let triv = h
        .unit
        .kron(&LinearMap::identity(f, a.dim))
        .expect("same field");
    kernel_basis(&push.sub(&triv).expect("same shape"))
}

/// Smallest `k ≤ limit` with `𝒮ᵏ = id`.
pub fn reverse_order(qg: &QuantumGroupoidData, limit: usize) -> Option<usize> {
    let mut power = qg.reverse.clone();
    for k in 1..=limit {
        if power.is_identity() {
            return Some(k);
        }
        power = power.compose(&qg.reverse).expect("square");
    }
    None
}

/// Evaluates each ingredient of the 𝒮-diagnostics as an informational
/// fact, then asserts the implications and biconditionals relating them.
pub fn reverse_diagnostics(qg: &QuantumGroupoidData, cm: &CrossedModuleData) -> CheckReport {
    let (a, h) = (&cm.source, &cm.target);
    let f = a.field;
    let na = a.dim;
    let m = qg.total.dim;
    let mut r = CheckReport::new();

    let lhs = Pipeline::on(f, &[na])
        .map(&a.comul)
        .then(vec![id(na), (&cm.boundary).into()]);
    let rhs = Pipeline::on(f, &[na])
        .map(&a.comul)
        .then(vec![swap(f, na, na)])
        .then(vec![id(na), (&cm.boundary).into()]);
    let cond = check_maps("boundary_symmetry", &lhs, &rhs).informational();
    let cond_holds = cond.passed;
    r.push(cond);

    let involutive = a
        .antipode
        .compose(&a.antipode)
        .expect("square")
        .is_identity();
    r.push(CheckEntry::fact("source_involutive", involutive).informational());
    let cocommutative = h.is_cocommutative();
    r.push(CheckEntry::fact("target_cocommutative", cocommutative).informational());
    let square = qg
        .reverse
        .compose(&qg.reverse)
        .expect("square")
        .is_identity();
    r.push(CheckEntry::fact("reverse_squared_identity", square).informational());
    let order = reverse_order(qg, 24);
    r.push(
        CheckEntry::fact("reverse_finite_order", order.is_some())
            .informational()
            .with_note(match order {
                Some(k) => format!("order {k}"),
                None => "order exceeds 24".to_string(),
            }),
    );

    let cot = qg.cotensor().vectors().to_vec();
    let lhs = Pipeline::on(f, &[m, m]).map(&qg.compose).map(&qg.reverse);
    let rhs = flipped_pair(f, m, &qg.reverse).map(&qg.compose);
    let anti = check_on_vectors("reverse_antimultiplicative", &cot, &lhs, &rhs).informational();
    let anti_holds = anti.passed;
    r.push(anti);

    let lhs = Pipeline::on(f, &[m])
        .map(&qg.total.comul)
        .then(vec![(&qg.reverse).into(), (&qg.reverse).into()])
        .then(vec![swap(f, m, m)]);
    let rhs = Pipeline::on(f, &[m]).map(&qg.reverse).map(&qg.total.comul);
    let anti_co = check_maps("reverse_anticomultiplicative", &lhs, &rhs).informational();
    let anti_co_holds = anti_co.passed;
    r.push(anti_co);

    r.push(CheckEntry::fact(
        "symmetry_implies_antimultiplicative",
        !cond_holds || anti_holds,
    ));
    r.push(CheckEntry::fact(
        "involutive_iff",
        square == (cond_holds && involutive),
    ));
    r.push(CheckEntry::fact(
        "anticomultiplicative_iff",
        anti_co_holds == (cond_holds && cocommutative),
    ));

    let one_a = a.one();
    let one_h = h.one();
    let cotensor = qg.cotensor();
    let left_ok = (0..na).all(|i| {
        let v = a.basis(i).tensor(&one_h).tensor(&one_a).tensor(&one_h);
        cotensor.contains(&v).unwrap_or(false)
    });
    r.push(CheckEntry::fact("cotensor.source_tensor_one", left_ok));
    let coinv = coinvariant_subspace(cm);
    let right_ok = coinv.vectors().iter().all(|x| {
        let v = one_a.tensor(&one_h).tensor(x).tensor(&one_h);
        cotensor.contains(&v).unwrap_or(false)
    });
    r.push(
        CheckEntry::fact("cotensor.one_tensor_coinvariants", right_ok).with_note(format!(
            "coinvariants {{a | d(a₁)⊗a₂ = 1⊗a}} of dim {}",
            coinv.dim()
        )),
    );
    r
}

/// The transported 2-group on `H ⊗ H` for a cocommutative `H`, obtained by
/// conjugating the smash-product 2-group along `h⊗g ↦ hg₁⊗g₂`.
pub fn transported_2group(adj: &AdjointCrossedModule) -> Result<QuantumGroupoidData> {
    let qg = strict_2group_unchecked(&adj.crossed);
    let t = &adj.transported;
    super::groupoid::transport(
        &qg,
        &t.to_tensor,
        &t.from_tensor,
        t.total.clone(),
        format!("transported-{}", adj.crossed.name),
    )
}

/// The closed-form 2-group on `H ⊗ H` with `s(h⊗g) = ε(h)g`, `t(h⊗g) = hε(g)`,
/// `i = Δ`, `(h⊗g)∘(h'⊗g') = h(Sg)h'⊗g'`, `𝒮(h⊗g) = g⊗h`.
pub fn closed_form_2group(adj: &AdjointCrossedModule) -> Result<QuantumGroupoidData> {
    let t = &adj.transported;
    QuantumGroupoidData::new(
        format!("closed-{}", adj.crossed.name),
        t.total.clone(),
        adj.crossed.target.clone(),
        t.source.clone(),
        t.target.clone(),
        t.inclusion.clone(),
        t.compose.clone(),
        t.reverse.clone(),
    )
}

/// Span of `e_i ⊗ Δ(e_j) ⊗ e_k` inside `(H⊗H) ⊗ (H⊗H)`.
pub fn diagonal_cotensor_span(h: &crate::hopf::HopfAlgebraData) -> Result<SubspaceBasis> {
    let n = h.dim;
    let mut gens: Vec<Vector> = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            let dj = h.comul.column(j);
            for k in 0..n {
                gens.push(h.basis(i).tensor(dj).tensor(&h.basis(k)));
            }
        }
    }
    SubspaceBasis::span(n * n * n * n, gens)
}
