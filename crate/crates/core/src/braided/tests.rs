use super::*;
use crate::constructions::{
    group_algebra, quantum_double_crossed_module, smash_product, sweedler_algebra,
    sweedler_r_matrix, z2_triangular_r_matrix, CayleyTable,
};
use crate::hopf::{check_hopf, Coaction, HopfAlgebraData, YetterDrinfeldModule};
use crate::scalar::Field;

fn kz2_triangular() -> QuasitriangularStructure {
    let q = Field::Rational;
    let h = group_algebra(q, &CayleyTable::cyclic(2), "Z2");
    QuasitriangularStructure::new(h, z2_triangular_r_matrix(q).unwrap()).unwrap()
}

fn double(field: Field, g: &CayleyTable, name: &str) -> QuasitriangularStructure {
    let d = quantum_double_crossed_module(field, g, name).unwrap();
    QuasitriangularStructure::new(d.double, d.r_matrix).unwrap()
}

fn sweedler(alpha: i64) -> QuasitriangularStructure {
    let q = Field::Rational;
    let h = sweedler_algebra(q).unwrap();
    QuasitriangularStructure::new(h, sweedler_r_matrix(q, &q.from_i64(alpha)).unwrap()).unwrap()
}

#[test]
fn standard_r_matrices_are_quasitriangular() {
    let z2 = kz2_triangular();
    let r = check_quasitriangular(&z2);
    assert!(r.passed(), "{}", r.to_text());
    assert!(r.holds("triangular"));
    for q in [
        double(Field::Rational, &CayleyTable::cyclic(3), "Z3"),
        sweedler(0),
        sweedler(3),
    ] {
        let r = check_quasitriangular(&q);
        assert!(r.passed(), "{}: {}", q.hopf.name, r.to_text());
        assert!(r.holds("antipode.inverse") && r.holds("antipode.both"));
    }
    let s3 = group_algebra(Field::Rational, &CayleyTable::symmetric(3), "S3");
    assert!(check_quasitriangular(&QuasitriangularStructure::trivial(s3)).passed());
}

#[test]
fn double_r_matrix_is_not_triangular() {
    let q = double(Field::Rational, &CayleyTable::symmetric(3), "S3");
    let r = check_quasitriangular(&q);
    assert!(r.passed(), "{}", r.to_text());
    assert!(!r.holds("triangular"));
}

#[test]
fn wrong_r_matrix_fails_with_witness() {
    let q = Field::Rational;
    let h = sweedler_algebra(q).unwrap();
    // 1 ⊗ g
    let bad = crate::linalg::Vector::unit(q, 16, 1);
    let s = QuasitriangularStructure::new(h, bad).unwrap();
    let r = check_quasitriangular(&s);
    let first = r.first_failure().expect("1⊗g is not quasitriangular on H4");
    assert!(first.witness.is_some() || first.name == "invertible");
}

#[test]
fn triangular_z2_gives_trivial_coaction_and_unchanged_coproduct() {
    let q = kz2_triangular();
    let b = transmutation(&q).unwrap();
    assert_eq!(b.yd.coaction, Coaction::trivial(&q.hopf, 2));
    assert_eq!(b.comul, q.hopf.comul);
    assert_eq!(b.antipode, q.hopf.antipode);
    let r = check_braided_hopf(&b, &q.hopf);
    assert!(r.passed(), "{}", r.to_text());
}

#[test]
fn trivial_r_transmutation_is_identity_on_structure_constants() {
    let h = group_algebra(Field::Rational, &CayleyTable::symmetric(3), "S3");
    let b = transmutation(&QuasitriangularStructure::trivial(h.clone())).unwrap();
    assert_eq!(
        (&b.mul, &b.unit, &b.comul, &b.counit, &b.antipode),
        (&h.mul, &h.unit, &h.comul, &h.counit, &h.antipode)
    );
    assert_eq!(b.yd.coaction, Coaction::trivial(&h, h.dim));
}

#[test]
fn ordinary_hopf_with_trivial_coaction_is_braided_hopf() {
    let h = group_algebra(Field::Rational, &CayleyTable::symmetric(3), "S3");
    let yd = YetterDrinfeldModule::new(
        crate::hopf::ModuleAction::trivial(&h, h.dim),
        Coaction::trivial(&h, h.dim),
    )
    .unwrap();
    let b = BraidedHopfData::from_hopf(&h, yd).unwrap();
    assert!(check_braided_hopf(&b, &h).passed());
}

#[test]
fn sweedler_transmutation_changes_coproduct() {
    let q = sweedler(1);
    let b = transmutation(&q).unwrap();
    assert_ne!(b.comul, q.hopf.comul);
    let r = check_braided_hopf(&b, &q.hopf);
    assert!(r.passed(), "{}", r.to_text());
}

#[test]
fn transmuted_identity_is_braided_crossed_module() {
    for q in [
        kz2_triangular(),
        double(Field::Rational, &CayleyTable::cyclic(3), "Z3"),
        sweedler(2),
    ] {
        let b = transmutation(&q).unwrap();
        let bcm = BraidedCrossedModuleData::transmuted(b, q.hopf.clone()).unwrap();
        let r = check_braided_crossed_module(&bcm);
        assert!(r.passed(), "{}: {}", q.hopf.name, r.to_text());
        assert_eq!(induced_coaction(&bcm).map, q.hopf.comul);
        assert!(r.holds("induced.yd") && r.holds("induced.braided_commutative"));
    }
}

#[test]
fn trivial_boundary_induces_given_coaction() {
    let q = sweedler(1);
    let b = transmutation(&q).unwrap();
    let h = q.hopf.clone();
    let d = h.unit.compose(&b.counit).unwrap();
    let given = b.yd.coaction.clone();
    let bcm = BraidedCrossedModuleData::new("trivial", b, h, d).unwrap();
    assert_eq!(induced_coaction(&bcm), given);
}

#[test]
fn corrupted_boundary_fails_with_agreeing_verdicts() {
    let q = sweedler(1);
    let b = transmutation(&q).unwrap();
    let h = q.hopf.clone();
    // d = S is an anti-homomorphism, not a homomorphism
    let bcm = BraidedCrossedModuleData::new("bad", b, h.clone(), h.antipode.clone()).unwrap();
    let r = check_braided_crossed_module(&bcm);
    let first = r.first_failure().expect("antipode is not a valid boundary");
    assert!(first.witness.is_some());
    assert!(r.all_hold("agreement"));
}

#[test]
fn biproduct_with_trivial_coaction_is_smash_product() {
    let q = Field::Rational;
    let d = quantum_double_crossed_module(q, &CayleyTable::cyclic(2), "Z2").unwrap();
    let cm = &d.crossed;
    let yd = YetterDrinfeldModule::new(
        cm.action.clone(),
        Coaction::trivial(&cm.target, cm.source.dim),
    )
    .unwrap();
    let b = BraidedHopfData::from_hopf(&cm.source, yd).unwrap();
    let bip = biproduct(&b, &cm.target).unwrap();
    let smash = smash_product(&cm.source, &cm.target, &cm.action).unwrap();
    assert_eq!(
        (&bip.mul, &bip.unit, &bip.comul, &bip.counit, &bip.antipode),
        (
            &smash.mul,
            &smash.unit,
            &smash.comul,
            &smash.counit,
            &smash.antipode
        )
    );
}

#[test]
fn biproduct_projections_are_hopf_sections() {
    for q in [
        kz2_triangular(),
        double(Field::Rational, &CayleyTable::cyclic(3), "Z3"),
        sweedler(1),
    ] {
        let b = transmutation(&q).unwrap();
        let bcm = BraidedCrossedModuleData::transmuted(b, q.hopf.clone()).unwrap();
        let p = biproduct_projections(&bcm).unwrap();
        let r = check_biproduct_projections(&p, &crate::report::Scope::Full);
        assert!(r.passed(), "{}: {}", q.hopf.name, r.to_text());
        let materialized = p.total.materialize().unwrap();
        assert!(check_hopf(&materialized).passed());
    }
}

#[test]
fn twisted_tensor_form_of_z2_has_no_witness() {
    let r = check_twisted_tensor_negative(&kz2_triangular()).unwrap();
    assert!(
        r.all_hold("isomorphism") && r.all_hold("same"),
        "{}",
        r.to_text()
    );
    let e = r.get("comul_not_compose_hom").unwrap();
    assert!(!e.passed && e.witness.is_none());
}

#[test]
fn twisted_tensor_form_of_sweedler_has_witness() {
    let r = check_twisted_tensor_negative(&sweedler(1)).unwrap();
    assert!(
        r.all_hold("isomorphism") && r.all_hold("same"),
        "{}",
        r.to_text()
    );
    let e = r.get("comul_not_compose_hom").unwrap();
    assert!(e.passed && e.witness.is_some());
}

#[test]
fn untwisted_tensor_form_satisfies_hom_law() {
    let h: HopfAlgebraData = group_algebra(Field::Rational, &CayleyTable::symmetric(3), "S3");
    let r = check_twisted_tensor_negative(&QuasitriangularStructure::trivial(h)).unwrap();
    assert!(
        r.all_hold("isomorphism") && r.all_hold("same"),
        "{}",
        r.to_text()
    );
    assert!(!r.holds("comul_not_compose_hom"));
}

#[test]
fn boundary_invariants_of_identity_are_scalars() {
    let q = kz2_triangular();
    let b = transmutation(&q).unwrap();
    let bcm = BraidedCrossedModuleData::transmuted(b, q.hopf.clone()).unwrap();
    assert_eq!(boundary_invariants(&bcm).dim(), 1);
}

#[test]
fn double_s3_transmutation_over_f101() {
    let f = Field::prime(101).unwrap();
    let q = double(f, &CayleyTable::symmetric(3), "S3");
    let b = transmutation(&q).unwrap();
    assert_ne!(b.comul, q.hopf.comul);
    let bcm = BraidedCrossedModuleData::transmuted(b, q.hopf.clone()).unwrap();
    let r = check_braided_crossed_module(&bcm);
    assert!(r.passed(), "{}", r.to_text());
    let p = biproduct_projections(&bcm).unwrap();
    let scope = p.total.generator_scope();
    let r = check_biproduct_projections(&p, &scope);
    assert!(r.passed(), "{}", r.to_text());
}
