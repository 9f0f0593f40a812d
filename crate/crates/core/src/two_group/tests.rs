use super::*;
use crate::constructions::group_algebra;
use crate::constructions::{
    adjoint_crossed_module, adjoint_data, graded_function_crossed_module,
    quantum_double_crossed_module, trivial_crossed_module, CayleyTable, GradedCrossedModuleInput,
};
use crate::scalar::Field;

fn q() -> Field {
    Field::Rational
}

fn assert_passes(r: &CheckReport) {
    assert!(r.passed(), "{}", r.to_text());
}

#[test]
fn double_of_z3_is_a_strict_2group() {
    let d = quantum_double_crossed_module(q(), &CayleyTable::cyclic(3), "Z3").unwrap();
    assert_passes(&check_crossed_module(&d.crossed));
    let qg = build_strict_2group(&d.crossed).unwrap();
    let r = check_strict_2group(&qg);
    assert_passes(&r);
    assert!(r.holds("groupoid.left_unit"));
    assert!(!r.holds("groupoid.right_unit_exists"));
    assert_eq!(qg.total.mul, d.double.mul);
}

#[test]
fn double_composition_and_reverse_closed_forms() {
    let g = CayleyTable::symmetric(3);
    let d = quantum_double_crossed_module(q(), &g, "S3").unwrap();
    let qg = strict_2group_unchecked(&d.crossed);
    let n = 6;
    // (δ_a⊗h)∘(δ_b⊗g) = δ_aδ_b⊗g, 𝒮(δ_a⊗h) = δ_{a⁻¹}⊗h
    for a in 0..n {
        for h in 0..n {
            for b in 0..n {
                for k in 0..n {
                    let col = qg.compose.column((a * n + h) * n * n + b * n + k);
                    let expected = if a == b {
                        vec![(a * n + k, q().one())]
                    } else {
                        vec![]
                    };
                    assert_eq!(col.entries(), expected.as_slice());
                }
            }
            let col = qg.reverse.column(a * n + h);
            assert_eq!(col.entries(), &[(g.inv(a) * n + h, q().one())]);
        }
    }
    assert_eq!(qg.source, qg.target);
}

#[test]
fn trivial_crossed_module_collapses() {
    let h = group_algebra(q(), &CayleyTable::cyclic(3), "Z3");
    let cm = trivial_crossed_module(&h).unwrap();
    let qg = build_strict_2group(&cm).unwrap();
    assert!(qg.source.is_identity() && qg.target.is_identity() && qg.reverse.is_identity());
    // composable pairs are g ⊗ g
    assert_eq!(qg.cotensor().dim(), 3);
    assert_passes(&check_strict_2group(&qg));
}

#[test]
fn adjoint_of_z2_matches_closed_forms() {
    let h = group_algebra(q(), &CayleyTable::cyclic(2), "Z2");
    let adj = adjoint_crossed_module(&h).unwrap();
    assert_passes(&check_crossed_module(&adj.crossed));
    let moved = transported_2group(&adj).unwrap();
    let closed = closed_form_2group(&adj).unwrap();
    for (name, l, r) in [
        ("s", &moved.source, &closed.source),
        ("t", &moved.target, &closed.target),
        ("i", &moved.inclusion, &closed.inclusion),
        ("∘", &moved.compose, &closed.compose),
        ("𝒮", &moved.reverse, &closed.reverse),
    ] {
        assert!(check_same_map(name, l, r).passed, "{name}");
    }
    let span = diagonal_cotensor_span(&h).unwrap();
    assert_eq!(closed.cotensor().dim(), 8);
    assert!(closed.cotensor().equals(&span).unwrap());
    assert_passes(&check_strict_2group(&closed));
}

#[test]
fn non_cocommutative_adjoint_data_fails() {
    let d = quantum_double_crossed_module(q(), &CayleyTable::symmetric(3), "S3").unwrap();
    let cm = adjoint_data(&d.double, "adjoint-D(S3)").unwrap();
    let r = check_crossed_module(&cm);
    assert!(!r.passed());
    let fail = r.first_failure().unwrap();
    assert!(fail.witness.is_some(), "{}", r.to_text());
    assert!(r.all_hold("agreement"), "{}", r.to_text());
}

#[test]
fn corrupted_composition_breaks_interchange() {
    let d = quantum_double_crossed_module(q(), &CayleyTable::cyclic(2), "Z2").unwrap();
    let qg = build_strict_2group(&d.crossed).unwrap();
    let mut dense = qg.compose.to_dense();
    dense[0][0] = q().from_i64(2);
    let broken = crate::linalg::LinearMap::from_dense(q(), &dense).unwrap();
    let bad = qg.with_compose(broken).unwrap();
    let e = check_interchange(&bad);
    assert!(!e.passed && e.witness.is_some());
}

#[test]
fn graded_example_has_order_four_reverse() {
    let inp = GradedCrossedModuleInput {
        name: "S3-Z2".into(),
        field: q(),
        group: CayleyTable::symmetric(3),
        grading_group: CayleyTable::cyclic(2),
        action: vec![(0..6).collect(), (0..6).collect()],
        boundary: vec![0, 2],
    };
    let g = graded_function_crossed_module(&inp).unwrap();
    assert_passes(&check_crossed_module(&g.crossed));
    let qg = build_strict_2group(&g.crossed).unwrap();
    assert_passes(&check_strict_2group(&qg));
    let closed = g.closed_forms();
    assert!(check_same_map("s", &qg.source, &closed.source).passed);
    assert!(check_same_map("t", &qg.target, &closed.target).passed);
    assert!(check_same_map("𝒮", &qg.reverse, &closed.reverse).passed);
    assert_eq!(reverse_order(&qg, 12), Some(4));
    let diag = reverse_diagnostics(&qg, &g.crossed);
    assert_passes(&diag);
    assert!(!diag.holds("reverse_squared_identity"));
    assert_eq!(qg.right_unit().unwrap(), None);
}

#[test]
fn double_diagnostics_give_involutive_reverse() {
    let d = quantum_double_crossed_module(q(), &CayleyTable::symmetric(3), "S3").unwrap();
    let qg = build_strict_2group(&d.crossed).unwrap();
    let diag = reverse_diagnostics(&qg, &d.crossed);
    assert_passes(&diag);
    assert!(diag.holds("reverse_squared_identity"));
}
